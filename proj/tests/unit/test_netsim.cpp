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

#include <algorithm>
#include <set>

#include "doctest.h"

#include "classify/shade_classifier.hpp"
#include "dht/keys.hpp"
#include "model/errors.hpp"
#include "netsim/experiment.hpp"
#include "netsim/network.hpp"
#include "support/specs.hpp"
#include "support/tempdir.hpp"

using namespace shadescope;
using namespace shadescope::netsim;

namespace {

std::size_t independent_published_count(const NetworkModel& m) {
  std::size_t n = 0;
  for (const auto& r : m.routers) n += r.record.has_value() ? 1 : 0;
  return n;
}

}  // namespace

TEST_SUITE("network spec") {
  TEST_CASE("JSON parsing and validation") {
    const auto j = nlohmann::json::parse(R"({"n_routers": 10, "floodfill_fraction": 0.3,
        "shade_distribution": {"1": 0.3, "2": 0.5, "8": 0.2}, "k": 2, "seed": 5, "date": "20250615"})");
    const auto spec = parse_network_spec(j);
    CHECK(spec.n_routers == 10);
    CHECK(spec.k == 2);
    CHECK(spec.seed == 5);
    CHECK(spec.date.to_string() == "20250615");
    CHECK(spec.shade_distribution[3] == 0.0);
    CHECK(shade_counts(spec) == std::array<std::size_t, 8>{3, 5, 0, 0, 0, 0, 0, 2});
    const auto back = parse_network_spec(network_spec_to_json(spec));
    CHECK(back.n_routers == spec.n_routers);
    CHECK(back.shade_distribution == spec.shade_distribution);
  }

  TEST_CASE("infeasible specs") {
    auto bad = [](const char* text) { return parse_network_spec(nlohmann::json::parse(text)); };
    CHECK_THROWS_AS(bad(R"({"n_routers": 0, "shade_distribution": {"1": 1}})"), InfeasibleSpec);
    CHECK_THROWS_AS(bad(R"({"n_routers": 10, "floodfill_fraction": 0.1, "shade_distribution": {"2": 1}})"),
                    InfeasibleSpec);
    CHECK_THROWS_AS(bad(R"({"n_routers": 10, "floodfill_fraction": 0.1, "shade_distribution": {"1": 0.5, "2": 0.4}})"),
                    InfeasibleSpec);
    CHECK_THROWS_AS(bad(R"({"n_routers": 10, "floodfill_fraction": 0.5, "shade_distribution": {"1": 0.1, "2": 0.9}})"),
                    InfeasibleSpec);
    CHECK_THROWS_AS(bad(R"({"n_routers": 10, "floodfill_fraction": 1.5, "shade_distribution": {"1": 1}})"),
                    InfeasibleSpec);
    CHECK_THROWS_AS(bad(R"({"n_routers": 10, "shade_distribution": {"9": 1}})"), InfeasibleSpec);
    CHECK_THROWS_AS(bad(R"({"n_routers": 10, "floodfill_fraction": 1, "shade_distribution": {"1": 1}, "k": 0})"),
                    InfeasibleSpec);
    CHECK_THROWS_AS(bad(R"({"n_routers": 10, "shade_distribution": {"2": 1}})"), InfeasibleSpec);
    CHECK_THROWS_AS(bad(R"([1, 2])"), InfeasibleSpec);
    CHECK_THROWS_AS(bad(R"({"n_routers": 10, "floodfill_fraction": 1, "shade_distribution": {"1": 1},
                            "date": "2025-01-01"})"),
                    InfeasibleSpec);
    // All-exclusive networks need no floodfills.
    CHECK_NOTHROW(bad(R"({"n_routers": 3, "shade_distribution": {"8": 1}})"));
  }

  TEST_CASE("largest remainder keeps the total exact") {
    NetworkSpec spec;
    spec.n_routers = 7;
    spec.shade_distribution = {1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0, 0, 0, 0};
    const auto c = shade_counts(spec);
    CHECK(c[0] + c[1] + c[2] == 7);
    for (int i = 0; i < 3; ++i) CHECK((c[i] == 2 || c[i] == 3));
  }
}

TEST_SUITE("network generation") {
  TEST_CASE("single beacon stores itself") {
    const auto m = generate_network(testsupport::spec_from_counts({1, 0, 0, 0, 0, 0, 0, 0}, 1));
    CHECK(m.routers.size() == 1);
    CHECK(m.published.size() == 1);
    CHECK(m.floodfills.size() == 1);
    REQUIRE(m.knowledge.size() == 1);
    CHECK(m.knowledge[0] == std::vector<std::size_t>{0});
  }

  TEST_CASE("structural invariants") {
    const auto spec = testsupport::spec_from_counts({60, 40, 30, 20, 15, 10, 5, 20}, 77, 4);
    const auto m = generate_network(spec);
    CHECK(m.routers.size() == 200);
    CHECK(m.published.size() + m.exclusive.size() == m.routers.size());
    std::set<std::size_t> pub(m.published.begin(), m.published.end());
    for (auto e : m.exclusive) CHECK(pub.count(e) == 0);
    CHECK(m.floodfills.size() == 60);

    std::set<RouterHash> known;
    for (std::size_t i = 0; i < m.routers.size(); ++i) {
      const auto& r = m.routers[i];
      if (r.shade.level() == 8) {
        CHECK_FALSE(r.record.has_value());
        CHECK_FALSE(r.profile.delta());
        CHECK(m.stored_on[i].empty());
      } else {
        REQUIRE(r.record.has_value());
        CHECK(r.record->hash == r.hash);
        CHECK(hash_identity(r.record->identity) == r.hash);
        CHECK(classify::classify(CapabilityProfile::from_record(*r.record)) == r.shade);
        CHECK(m.stored_on[i].size() == 4);
        // stored on the four XOR-nearest floodfills
        const auto key = dht::routing_key(r.hash, spec.date).key;
        const auto nearest = dht::nearest_floodfills(key, m.floodfill_hashes(), 4);
        std::set<RouterHash> expected(nearest.begin(), nearest.end());
        std::set<RouterHash> actual;
        for (auto pos : m.stored_on[i]) actual.insert(m.routers[m.floodfills[pos]].hash);
        CHECK(actual == expected);
      }
    }
    for (std::size_t pos = 0; pos < m.knowledge.size(); ++pos) {
      for (auto r : m.knowledge[pos]) known.insert(m.routers[r].hash);
    }
    // Union of floodfill knowledge is exactly the published set, a proper subset of V1.
    CHECK(known.size() == m.published.size());
    CHECK(known.size() < m.routers.size());
    for (auto e : m.exclusive) CHECK(known.count(m.routers[e].hash) == 0);
  }

  TEST_CASE("k larger than the floodfill set") {
    const auto m = generate_network(testsupport::spec_from_counts({3, 5, 0, 0, 0, 0, 0, 0}, 2, 10));
    for (auto r : m.published) CHECK(m.stored_on[r].size() == 3);
  }

  TEST_CASE("determinism") {
    const auto spec = testsupport::spec_from_counts({20, 10, 10, 5, 5, 5, 5, 10}, 123);
    const auto a = generate_network(spec);
    const auto b = generate_network(spec);
    REQUIRE(a.routers.size() == b.routers.size());
    for (std::size_t i = 0; i < a.routers.size(); ++i) {
      CHECK(a.routers[i].hash == b.routers[i].hash);
      CHECK(a.routers[i].record == b.routers[i].record);
    }
    CHECK(a.knowledge == b.knowledge);
    auto other = spec;
    other.seed = 124;
    CHECK(generate_network(other).routers[0].hash != a.routers[0].hash);
  }
}

TEST_SUITE("metrics") {
  TEST_CASE("all published") {
    const auto m = generate_network(testsupport::spec_from_counts({5, 5, 0, 0, 0, 0, 0, 0}, 1));
    const auto v = completeness_metrics(m);
    CHECK(v.rho == 1.0);
    CHECK(v.xi == 0.0);
  }

  TEST_CASE("1000 routers with 100 exclusive") {
    const auto m = generate_network(testsupport::spec_from_counts({300, 300, 200, 50, 25, 15, 10, 100}, 9));
    const auto v = completeness_metrics(m);
    CHECK(v.total == 1000);
    CHECK(v.exclusive == 100);
    CHECK(v.rho == 0.9);
    CHECK(v.xi == 0.1);
  }

  TEST_CASE("independent recount on random specs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      std::mt19937_64 rng(seed);
      std::array<std::size_t, 8> counts{};
      counts[0] = 1 + rng() % 30;
      for (std::size_t i = 1; i < 8; ++i) counts[i] = rng() % 30;
      const auto m = generate_network(testsupport::spec_from_counts(counts, seed));
      const auto v = completeness_metrics(m);
      const auto pub = independent_published_count(m);
      CHECK(v.published == pub);
      CHECK(v.rho == static_cast<double>(pub) / static_cast<double>(m.routers.size()));
      CHECK(v.xi == static_cast<double>(m.routers.size() - pub) / static_cast<double>(m.routers.size()));
      CHECK(v.rho + v.xi == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
}

TEST_SUITE("experiments") {
  TEST_CASE("shade-8 target gives a flat zero curve") {
    const auto m = generate_network(testsupport::spec_from_counts({200, 100, 50, 20, 10, 10, 9, 1}, 5));
    const auto target = m.routers[m.exclusive.at(0)].hash;
    const auto plan = make_probe_plan(m, 5, 150);
    const auto result = run_probe_experiment(m, std::vector<RouterHash>{target}, plan);
    REQUIRE(result.curves.size() == 1);
    const auto& c = result.curves[0];
    CHECK(c.points.size() == 30);
    CHECK(c.points.back().cumulative_probes == 150);
    for (const auto& p : c.points) CHECK(p.hits == 0);
    CHECK(result.reports[0].shade->level() == 8);
    CHECK(attribution::shade8_certificate(result.reports[0]));
  }

  TEST_CASE("record on every floodfill is found in the first batch") {
    const auto m = generate_network(testsupport::spec_from_counts({4, 6, 0, 0, 0, 0, 0, 0}, 3, 4));
    std::vector<RouterHash> targets;
    for (auto r : m.published) targets.push_back(m.routers[r].hash);
    const auto result = run_probe_experiment(m, targets, make_probe_plan(m, 5, std::nullopt));
    for (const auto& c : result.curves) {
      CHECK(c.first_hit_probes() == 4u);
      CHECK(c.monotone());
    }
  }

  TEST_CASE("local knowledge short-circuits") {
    const auto m = generate_network(testsupport::spec_from_counts({10, 10, 0, 0, 0, 0, 0, 0}, 3));
    SimulatedSourceOptions opts;
    opts.local_has_published = true;
    const std::vector<RouterHash> targets = {m.routers[m.published[0]].hash};
    const auto result = run_probe_experiment(m, targets, make_probe_plan(m, 5, std::nullopt), opts);
    CHECK(result.reports[0].probes_used() == 0);
    for (const auto& p : result.curves[0].points) CHECK(p.hits == 1);
  }

  TEST_CASE("failure injection drives the inconclusive path") {
    const auto m = generate_network(testsupport::spec_from_counts({50, 10, 0, 0, 0, 0, 0, 5}, 8));
    SimulatedSourceOptions opts;
    opts.failure_rate = 0.2;
    opts.failure_seed = 4;
    const std::vector<RouterHash> targets = {m.routers[m.exclusive[0]].hash};
    const auto result = run_probe_experiment(m, targets, make_probe_plan(m, 5, std::nullopt), opts);
    CHECK(result.reports[0].outcome == classify::Outcome::Inconclusive);
    CHECK_FALSE(attribution::shade8_certificate(result.reports[0]));
    opts.failure_rate = 2.0;
    CHECK_THROWS_AS(SimulatedSource(m, opts), std::invalid_argument);
  }

  TEST_CASE("input validation") {
    const auto m = generate_network(testsupport::spec_from_counts({5, 5, 0, 0, 0, 0, 0, 0}, 1));
    const std::vector<RouterHash> stranger = {sha256("stranger")};
    CHECK_THROWS_AS(run_probe_experiment(m, stranger, make_probe_plan(m, 5, std::nullopt)), std::invalid_argument);
    auto plan = make_probe_plan(m, 5, std::nullopt);
    plan.floodfills.push_back(sha256("not a floodfill"));
    const std::vector<RouterHash> t = {m.routers[0].hash};
    CHECK_THROWS_AS(run_probe_experiment(m, t, plan), std::invalid_argument);
  }

  TEST_CASE("shuffled plans are permutations and reproducible") {
    const auto m = generate_network(testsupport::spec_from_counts({30, 5, 0, 0, 0, 0, 0, 0}, 1));
    const auto a = make_probe_plan(m, 5, std::nullopt, 42);
    const auto b = make_probe_plan(m, 5, std::nullopt, 42);
    CHECK(a.floodfills == b.floodfills);
    auto sorted_a = a.floodfills;
    auto all = m.floodfill_hashes();
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(all.begin(), all.end());
    CHECK(sorted_a == all);
    CHECK(a.floodfills != m.floodfill_hashes());
  }

  TEST_CASE("curve CSV export and re-import") {
    const auto m = generate_network(testsupport::spec_from_counts({100, 50, 0, 0, 0, 0, 0, 2}, 11));
    std::vector<RouterHash> targets = {m.routers[m.exclusive[0]].hash, m.routers[m.published[3]].hash};
    const auto result = run_probe_experiment(m, targets, make_probe_plan(m, 5, 500));
    const auto csv = curves_to_csv(result.curves);
    CHECK(csv.starts_with("target,cumulative_probes,hits\n"));
    // budget capped at the 100 floodfills: 20 checkpoints per target
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 20);

    testsupport::TempDir dir;
    export_curves(result.curves, dir / "curves.csv");
    auto back = import_curves(dir / "curves.csv");
    auto expected = result.curves;
    std::sort(expected.begin(), expected.end(),
              [](const HitCurve& a, const HitCurve& b) { return a.target.to_base64() < b.target.to_base64(); });
    CHECK(back == expected);
    CHECK_THROWS_AS(export_curves({}, dir / "empty.csv"), std::invalid_argument);
    CHECK_THROWS_AS(export_curves(result.curves, dir / "missing" / "x.csv"), IoError);
    CHECK_THROWS_AS(import_curves(dir / "nope.csv"), IoError);
    CHECK_THROWS_AS(curves_from_csv("target,cumulative_probes,hits\nabc,1\n"), std::invalid_argument);
  }

  TEST_CASE("flat zero curve of 500 probes has 100 rows") {
    const auto m = generate_network(testsupport::spec_from_counts({600, 50, 0, 0, 0, 0, 0, 1}, 12));
    const std::vector<RouterHash> t = {m.routers[m.exclusive[0]].hash};
    const auto result = run_probe_experiment(m, t, make_probe_plan(m, 5, 500));
    const auto csv = curves_to_csv(result.curves);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 101);
    CHECK(csv.find(",1\n") == std::string::npos);
  }
}
