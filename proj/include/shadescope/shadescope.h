// Copyright 2026 The shadescope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHADESCOPE_SHADESCOPE_H
#define SHADESCOPE_SHADESCOPE_H

/*
 * C interface to the shadescope library: router visibility classification,
 * DHT routing-key math, b32 derivation, NetDB record loading, LeaseSet
 * gateway association and the simulated probe experiments.
 *
 * Conventions
 *   - Every fallible call returns ss_status; on failure ss_last_error()
 *     describes the problem (thread-local, valid until the next call on
 *     the same thread).
 *   - Objects are opaque handles created by *_load / *_generate / ss_lookup
 *     and released with the matching *_free. Passing NULL to *_free is a
 *     no-op.
 *   - Strings returned through `char** out` are heap allocated and must be
 *     released with ss_string_free.
 *   - Hashes are 32 raw bytes; dates are UTC "yyyyMMdd" (NULL = today).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SHADESCOPE_BUILDING)
#    define SS_API __declspec(dllexport)
#  else
#    define SS_API __declspec(dllimport)
#  endif
#else
#  define SS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ss_status {
  SS_OK = 0,
  SS_ERR_INVALID_ARGUMENT = 1,
  SS_ERR_PARSE = 2,
  SS_ERR_IO = 3,
  SS_ERR_INFEASIBLE = 4,
  SS_ERR_NOT_FOUND = 5,
  SS_ERR_CONTRACT = 6,
  SS_ERR_INTERNAL = 99
} ss_status;

SS_API const char* ss_version(void);
SS_API const char* ss_status_name(ss_status status);
SS_API const char* ss_last_error(void);
SS_API void ss_string_free(char* s);

/* ---- hashes and encodings ------------------------------------------- */

/* Accepts overlay base64 (43/44 chars), hex (64 chars) or a b32 address. */
SS_API ss_status ss_hash_parse(const char* text, uint8_t out[32]);
SS_API ss_status ss_hash_to_base64(const uint8_t hash[32], char** out);

/* b32 address of a destination (raw identity bytes, trailing bytes beyond
 * the identity allowed). `out_identity_len` receives d_s; may be NULL. */
SS_API ss_status ss_destination_b32(const uint8_t* bytes, size_t len, char** out_address, size_t* out_identity_len);
SS_API ss_status ss_b32_decode(const char* address, uint8_t out[32]);

SS_API ss_status ss_daily_mod_key(const char* date, uint8_t out[32]);
SS_API ss_status ss_routing_key(const uint8_t hash[32], const char* date, uint8_t out[32]);
/* `floodfills` is `count` consecutive 32-byte hashes. */
SS_API ss_status ss_responsible_floodfill(const uint8_t dest[32], const char* date, const uint8_t* floodfills,
                                          size_t count, uint8_t out[32]);

/* ---- classifier ------------------------------------------------------ */

typedef struct ss_profile {
  int delta; /* record present in the queried view */
  int kappa_f;
  int kappa_H;
  int kappa_U;
  char bandwidth_class; /* 'K'..'X', or 0 when absent */
  int alpha;            /* direct transport address */
  int iota;             /* introducers */
} ss_profile;

/* Fills the caps-derived fields; delta = 1, alpha = iota = 0. */
SS_API ss_status ss_parse_caps(const char* caps, ss_profile* out);
SS_API ss_status ss_classify(const ss_profile* profile, int* out_level);
/* NULL outside 1..8. */
SS_API const char* ss_shade_name(int level);
SS_API int ss_shade_layer(int level);

/* ---- NetDB snapshots ------------------------------------------------- */

typedef struct ss_snapshot ss_snapshot;

typedef struct ss_snapshot_stats {
  size_t total;
  size_t records;
  size_t floodfill_count;
  size_t parse_failures;
  size_t lenient_recovered;
  size_t shade_histogram[8]; /* index 0 = shade 1; shade 8 is always 0 */
} ss_snapshot_stats;

SS_API ss_status ss_snapshot_load(const char* dir, ss_snapshot** out);
SS_API void ss_snapshot_free(ss_snapshot* snapshot);
SS_API ss_status ss_snapshot_get_stats(const ss_snapshot* snapshot, ss_snapshot_stats* out);
/* Per-record JSON {hash, caps, alpha, iota, version, knownRouters,
 * knownLeaseSets, addresses:[{style,host,port}], shade} plus stats. */
SS_API ss_status ss_snapshot_to_json(const ss_snapshot* snapshot, char** out);
SS_API int ss_snapshot_contains(const ss_snapshot* snapshot, const uint8_t hash[32]);
SS_API int ss_snapshot_is_floodfill(const ss_snapshot* snapshot, const uint8_t hash[32]);

/* ---- LeaseSets ------------------------------------------------------- */

typedef struct ss_leasesets ss_leasesets;

SS_API ss_status ss_leasesets_load(const char* path, ss_leasesets** out);
SS_API void ss_leasesets_free(ss_leasesets* leasesets);
SS_API size_t ss_leasesets_count(const ss_leasesets* leasesets);
SS_API ss_status ss_leasesets_warnings_json(const ss_leasesets* leasesets, char** out);

/* Target is a full hash or a base64 prefix of at least 32 bits. */
SS_API ss_status ss_gateway_scan(const ss_leasesets* leasesets, const char* target, char** out_json);

/* Eepsites whose routing key has `target` as XOR-nearest floodfill among
 * the snapshot's floodfills. JSON: {target, date, target_is_floodfill,
 * floodfill_count, candidates, associated:[b32], warnings:[...], table?}. */
SS_API ss_status ss_xor_association(const ss_snapshot* netdb, const ss_leasesets* leasesets,
                                    const uint8_t target[32], const char* date, int include_table, char** out_json);

/* ---- simulated networks ---------------------------------------------- */

typedef struct ss_network ss_network;

typedef struct ss_metrics {
  size_t total;
  size_t published;
  size_t exclusive;
  size_t floodfills;
  double rho;
  double xi;
} ss_metrics;

SS_API ss_status ss_network_generate(const char* spec_json, ss_network** out);
SS_API ss_status ss_network_load(const char* spec_path, ss_network** out);
SS_API void ss_network_free(ss_network* network);
SS_API ss_status ss_network_get_metrics(const ss_network* network, ss_metrics* out);
/* The `ordinal`-th router of the given shade, in model order. */
SS_API ss_status ss_network_pick(const ss_network* network, int shade_level, size_t ordinal, uint8_t out[32]);
SS_API ss_status ss_network_write_netdb(const ss_network* network, const char* dir);

/* ---- probing ---------------------------------------------------------- */

typedef struct ss_probe_options {
  size_t batch_size;       /* default 5 */
  int64_t max_probes;      /* < 0: every floodfill (default) */
  int shuffle;             /* shuffle the floodfill order with shuffle_seed */
  uint64_t shuffle_seed;
  double failure_rate;     /* simulated transport failure probability */
  uint64_t failure_seed;
  int local_has_published; /* simulated local NetDB holds all published records */
} ss_probe_options;

SS_API void ss_probe_options_init(ss_probe_options* options);

typedef struct ss_report ss_report;

typedef enum ss_outcome { SS_OUTCOME_CLASSIFIED = 0, SS_OUTCOME_INCONCLUSIVE = 1 } ss_outcome;

/* Runs the multi-source classification. `local` supplies the local NetDB
 * view; `remote` supplies the console and floodfill probes. Floodfills are
 * taken from `remote` when given, else from `local`. Either may be NULL. */
SS_API ss_status ss_lookup(const ss_snapshot* local, const ss_network* remote, const uint8_t target[32],
                           const ss_probe_options* options, ss_report** out);
SS_API void ss_report_free(ss_report* report);
SS_API ss_outcome ss_report_outcome(const ss_report* report);
SS_API int ss_report_shade_level(const ss_report* report); /* 0 when inconclusive */
SS_API size_t ss_report_probes_used(const ss_report* report);
SS_API int ss_report_shade8_certificate(const ss_report* report);
SS_API ss_status ss_report_to_json(const ss_report* report, char** out);
SS_API ss_status ss_report_to_text(const ss_report* report, char** out);
SS_API ss_status ss_report_probe_log_csv(const ss_report* report, char** out);

typedef struct ss_curves ss_curves;

/* One hit curve per target (`targets` is n consecutive 32-byte hashes). */
SS_API ss_status ss_simulate(const ss_network* network, const uint8_t* targets, size_t n_targets,
                             const ss_probe_options* options, ss_curves** out);
SS_API void ss_curves_free(ss_curves* curves);
SS_API size_t ss_curves_count(const ss_curves* curves);
SS_API ss_status ss_curves_to_csv(const ss_curves* curves, char** out);
SS_API ss_status ss_curves_to_json(const ss_curves* curves, char** out);
SS_API ss_status ss_curves_export(const ss_curves* curves, const char* path);

/* ---- configuration ---------------------------------------------------- */

/* profile: "exclusive" or "ghost". */
SS_API ss_status ss_genconfig(const char* profile, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SHADESCOPE_SHADESCOPE_H */
