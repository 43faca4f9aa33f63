// Copyright 2026 The AMR Narratives Authors.
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

#include "narrative/corpus_stats.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "narrative/errors.h"
#include "narrative/miner.h"
#include "narrative/penman.h"
#include "testing/fixtures.h"
#include "testing/zscore_oracle.h"

namespace narrative {
namespace {

using testing::OracleZDouble;

struct Tuple {
  std::int64_t f_i, n_i, f_j, n_j;
};

std::vector<Tuple> RandomTuples(std::uint32_t seed, int count,
                                std::int64_t max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Tuple> out;
  for (int k = 0; k < count; ++k) {
    // Log-uniform totals so small and large corpora are both covered.
    std::uniform_real_distribution<double> log_n(0.0, std::log10(max_n));
    const auto n_i = static_cast<std::int64_t>(std::pow(10.0, log_n(rng)));
    const auto n_j = static_cast<std::int64_t>(std::pow(10.0, log_n(rng)));
    std::uniform_int_distribution<std::int64_t> fi(0, n_i), fj(0, n_j);
    out.push_back({fi(rng), n_i, fj(rng), n_j});
  }
  return out;
}

NarrativeElement Plot(std::string label) {
  return {ElementKind::kPlot, std::move(label), std::nullopt};
}

TEST_CASE("z-score reference values") {
  CHECK(ZScore(5, 100, 5, 100) == 0.0);
  CHECK(ZScore(10, 100, 2, 100) == doctest::Approx(2.1242).epsilon(1e-4));
  CHECK(std::abs(ZScore(10, 100, 2, 100) - OracleZDouble(10, 100, 2, 100)) <
        1e-12);
  // Numerator and denominator separately.
  CHECK(std::log(11.0 / 91.0) - std::log(3.0 / 99.0) ==
        doctest::Approx(1.38355).epsilon(1e-5));
  CHECK(std::sqrt(1.0 / 11 + 1.0 / 3) == doctest::Approx(0.65134).epsilon(1e-5));
}

TEST_CASE("z-score agrees with the high-precision oracle") {
  for (const Tuple &t : RandomTuples(11, 1000, 10'000'000)) {
    CAPTURE(t.f_i);
    CAPTURE(t.n_i);
    CAPTURE(t.f_j);
    CAPTURE(t.n_j);
    CHECK(std::abs(ZScore(t.f_i, t.n_i, t.f_j, t.n_j) -
                   OracleZDouble(t.f_i, t.n_i, t.f_j, t.n_j)) <= 1e-9);
  }
  // Edges of the domain.
  for (const Tuple &t : {Tuple{0, 0, 0, 0}, Tuple{0, 10'000'000, 0, 1},
                         Tuple{10'000'000, 10'000'000, 0, 10'000'000},
                         Tuple{1, 1, 0, 1}}) {
    CHECK(std::abs(ZScore(t.f_i, t.n_i, t.f_j, t.n_j) -
                   OracleZDouble(t.f_i, t.n_i, t.f_j, t.n_j)) <= 1e-9);
  }
}

TEST_CASE("z-score is antisymmetric") {
  for (const Tuple &t : RandomTuples(12, 1000, 10'000'000)) {
    const double a = ZScore(t.f_i, t.n_i, t.f_j, t.n_j);
    const double b = ZScore(t.f_j, t.n_j, t.f_i, t.n_i);
    CHECK(std::abs(a + b) <= 1e-12);
  }
}

TEST_CASE("z-score is zero when the smoothed odds coincide") {
  // (f+1)/(n-f+1) equal on both sides with different totals.
  CHECK(ZScore(1, 2, 3, 6) == 0.0);  // 2/2 vs 4/4
  CHECK(ZScore(0, 1, 2, 7) == 0.0);  // 1/2 vs 3/6
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> small(0, 3000);
  for (int k = 0; k < 1000; ++k) {
    // Scale the smoothed odds a/b by m: f_j+1 = m*a, n_j-f_j+1 = m*b.
    const std::int64_t a = small(rng) + 1, b = small(rng) + 1;
    const std::int64_t m = small(rng) % 50 + 1;
    const std::int64_t f_i = a - 1, n_i = a + b - 2;
    const std::int64_t f_j = m * a - 1, n_j = m * a + m * b - 2;
    CHECK(std::abs(ZScore(f_i, n_i, f_j, n_j)) <= 1e-12);
  }
}

TEST_CASE("log-odds difference rises with f_i; z rises with f_i where z >= 0") {
  std::mt19937_64 rng(14);
  for (const Tuple &t : RandomTuples(15, 300, 100'000)) {
    auto log_odds = [&](std::int64_t f) {
      return testing::OracleZ(f, t.n_i, t.f_j, t.n_j) *
             sqrt(testing::BigFloat(1) / (f + 1) +
                  testing::BigFloat(1) / (t.f_j + 1));
    };
    std::uniform_int_distribution<std::int64_t> start(0, t.n_i);
    std::int64_t f = start(rng);
    for (int step = 0; step < 20 && f < t.n_i; ++step, ++f) {
      CHECK(log_odds(f + 1) > log_odds(f));
      const double z0 = ZScore(f, t.n_i, t.f_j, t.n_j);
      const double z1 = ZScore(f + 1, t.n_i, t.f_j, t.n_j);
      if (z0 >= 0) CHECK(z1 > z0);
    }
  }
}

TEST_CASE("z-score preconditions") {
  CHECK_THROWS_AS(ZScore(-1, 10, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(ZScore(11, 10, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(ZScore(0, 10, 0, -1), std::invalid_argument);
}

TEST_CASE("aggregation") {
  const SubcorpusPair pair;
  SUBCASE("empty stream") {
    CHECK_THROWS_AS(Aggregator(pair).Finish(), EmptyCorpus);
  }
  SUBCASE("one-sided stream") {
    Aggregator agg(pair);
    for (const auto &e : MineAll(ParsePenman(testing::kDoctorGraph))) {
      agg.Add("conspiracy", e);
    }
    const FrequencyTable &plot = agg.counts().at(ElementKind::kPlot).table;
    CHECK(plot.n_i() == 3);
    CHECK(plot.n_j() == 0);
    for (const char *label : {"prevent-01", "spread-03", "vaccinate-01"}) {
      CHECK(plot.labels().at(label) == LabelCounts{1, 0});
    }
    CHECK_THROWS_AS(agg.Finish(), EmptyCorpus);
    agg.Add("mainstream", Plot("say-01"));
    CHECK(agg.Finish().size() == 5);
  }
  SUBCASE("third label") {
    Aggregator agg(pair);
    CHECK_THROWS_AS(agg.Add("satire", Plot("say-01")), UnknownLabel);
  }
  SUBCASE("custom pair") {
    Aggregator agg(SubcorpusPair{"a", "b"});
    agg.Add("a", Plot("x-01"));
    CHECK_THROWS_AS(agg.Add("conspiracy", Plot("x-01")), UnknownLabel);
  }
}

TEST_CASE("aggregation is additive, associative and commutative") {
  std::mt19937 rng(16);
  const std::vector<std::string> labels = {"a-01", "b-01", "c-01", "d"};
  auto random_aggregate = [&]() {
    Aggregator agg;
    std::uniform_int_distribution<int> len(0, 30), pick(0, 3), side(0, 1),
        kind(0, 4);
    const int count = len(rng);
    for (int k = 0; k < count; ++k) {
      agg.Add(side(rng) ? "conspiracy" : "mainstream",
              {kAllElementKinds[kind(rng)], labels[pick(rng)], std::nullopt});
    }
    return agg;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Aggregator a = random_aggregate(), b = random_aggregate(),
                     c = random_aggregate();
    Aggregator ab_c = a;
    ab_c.Merge(b);
    ab_c.Merge(c);
    Aggregator bc = b;
    bc.Merge(c);
    Aggregator a_bc = a;
    a_bc.Merge(bc);
    CHECK(ab_c == a_bc);

    Aggregator ab = a, ba = b;
    ab.Merge(b);
    ba.Merge(a);
    CHECK(ab == ba);

    Aggregator doubled = a;
    doubled.Merge(a);
    for (const auto &[kind, counts] : a.counts()) {
      const FrequencyTable &d = doubled.counts().at(kind).table;
      CHECK(d.n_i() == 2 * counts.table.n_i());
      CHECK(d.n_j() == 2 * counts.table.n_j());
      for (const auto &[label, lc] : counts.table.labels()) {
        CHECK(d.labels().at(label) == LabelCounts{2 * lc.f_i, 2 * lc.f_j});
      }
    }
  }
}

TEST_CASE("rank matches a naive sort oracle") {
  // Two documents: one per subcorpus, hand-built plot streams.
  FrequencyTable table;
  for (const char *l : {"say-01", "say-01", "say-01", "kill-01", "hide-01",
                        "hide-01", "vaccinate-01"}) {
    table.Add("conspiracy", l);
  }
  for (const char *l : {"say-01", "vaccinate-01", "vaccinate-01",
                        "vaccinate-01", "report-01", "report-01"}) {
    table.Add("mainstream", l);
  }
  const auto ranked = Rank(table);
  REQUIRE(ranked.size() == 5);

  // Oracle: z from the 50-digit formula, selection sort on (z desc, label).
  std::vector<std::pair<testing::BigFloat, std::string>> oracle;
  for (const auto &[label, c] : table.labels()) {
    oracle.emplace_back(
        testing::OracleZ(c.f_i, table.n_i(), c.f_j, table.n_j()), label);
  }
  for (std::size_t a = 0; a < oracle.size(); ++a) {
    for (std::size_t b = a + 1; b < oracle.size(); ++b) {
      const bool swap =
          oracle[b].first > oracle[a].first ||
          (oracle[b].first == oracle[a].first && oracle[b].second < oracle[a].second);
      if (swap) std::swap(oracle[a], oracle[b]);
    }
  }
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    CHECK(ranked[k].label == oracle[k].second);
    CHECK(ranked[k].z == doctest::Approx(oracle[k].first.convert_to<double>()));
    CHECK(ranked[k].f_i == table.labels().at(ranked[k].label).f_i);
  }
  CHECK(ranked.front().z > 0);
  CHECK(ranked.back().z < 0);
}

TEST_CASE("rank ties and single labels") {
  FrequencyTable one;
  one.Add("conspiracy", "say-01", 4);
  one.Add("mainstream", "say-01", 4);
  const auto single = Rank(one);
  REQUIRE(single.size() == 1);
  CHECK(single[0].z == 0.0);

  FrequencyTable tied;
  for (const char *l : {"b", "a", "c"}) {
    tied.Add("conspiracy", l, 2);
    tied.Add("mainstream", l, 2);
  }
  const auto ranked = Rank(tied);
  CHECK(ranked[0].label == "a");
  CHECK(ranked[1].label == "b");
  CHECK(ranked[2].label == "c");
}

TEST_CASE("top and bottom selection") {
  std::vector<ZScoredElement> ranked;
  for (int k = 0; k < 40; ++k) {
    ranked.push_back({"w" + std::to_string(100 + k), 20.0 - k, 0, 0});
  }
  const TopBottom tb = SelectTopBottom(ranked, 15);
  REQUIRE(tb.top.size() == 15);
  REQUIRE(tb.bottom.size() == 15);
  CHECK(tb.top.front().label == "w100");
  CHECK(tb.bottom.front().label == "w139");
  CHECK(tb.bottom.back().label == "w125");

  const std::vector<ZScoredElement> three(ranked.begin(), ranked.begin() + 3);
  const TopBottom small = SelectTopBottom(three, 15);
  CHECK(small.top.size() == 3);
  CHECK(small.bottom.size() == 3);
  CHECK(small.bottom.front().label == "w102");

  CHECK_THROWS_AS(SelectTopBottom(ranked, 0), std::invalid_argument);
  CHECK(SelectTopBottom({}, 5).top.empty());
}

TEST_CASE("bottom list is the top list of the swapped comparison") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> count(0, 6), label(0, 24);
  for (int trial = 0; trial < 50; ++trial) {
    FrequencyTable forward(SubcorpusPair{"conspiracy", "mainstream"});
    FrequencyTable swapped(SubcorpusPair{"mainstream", "conspiracy"});
    for (int k = 0; k < 60; ++k) {
      const std::string l = "x" + std::to_string(label(rng));
      const char *side = k % 2 ? "conspiracy" : "mainstream";
      const int c = count(rng);
      forward.Add(side, l, c);
      swapped.Add(side, l, c);
    }
    const auto fwd = SelectTopBottom(Rank(forward), 10);
    const auto rev = SelectTopBottom(Rank(swapped), 10);
    REQUIRE(fwd.bottom.size() == rev.top.size());
    for (std::size_t k = 0; k < fwd.bottom.size(); ++k) {
      CHECK(fwd.bottom[k].label == rev.top[k].label);
      CHECK(fwd.bottom[k].z == -rev.top[k].z);
    }
  }
}

TEST_CASE("attribution follows the sign") {
  const SubcorpusPair pair;
  CHECK(Attribution(2.5, pair) == "conspiracy");
  CHECK(Attribution(-0.1, pair) == "mainstream");
  CHECK(Attribution(0.0, pair).empty());
}

TEST_CASE("counts documents round-trip through JSON") {
  ElementCounts counts{ElementKind::kCharacter, FrequencyTable()};
  counts.table.Add("conspiracy", "doctor", 3);
  counts.table.Add("mainstream", "doctor", 1);
  counts.table.Add("mainstream", "nurse", 2);
  const auto json = counts.ToJson();
  CHECK(json.dump() ==
        R"({"kind":"Character","labels":[{"label":"doctor","f_i":3,"f_j":1},)"
        R"({"label":"nurse","f_i":0,"f_j":2}],"n_i":3,"n_j":3,)"
        R"("subcorpus_i":"conspiracy","subcorpus_j":"mainstream"})");
  CHECK(ElementCounts::FromJson(nlohmann::json::parse(json.dump())) == counts);
}

TEST_CASE("malformed counts documents are data errors") {
  const char *bad[] = {
      R"({})",
      R"({"kind":"Villain","labels":[],"n_i":0,"n_j":0,"subcorpus_i":"a","subcorpus_j":"b"})",
      R"({"kind":"Plot","labels":[{"label":"x","f_i":1,"f_j":0}],"n_i":2,"n_j":0,"subcorpus_i":"a","subcorpus_j":"b"})",
      R"({"kind":"Plot","labels":[{"label":"x","f_i":-1,"f_j":0}],"n_i":-1,"n_j":0,"subcorpus_i":"a","subcorpus_j":"b"})",
      R"({"kind":"Plot","labels":[{"label":"x","f_i":1,"f_j":0},{"label":"x","f_i":1,"f_j":0}],"n_i":2,"n_j":0,"subcorpus_i":"a","subcorpus_j":"b"})",
      R"({"kind":"Plot","labels":[{"label":7,"f_i":1,"f_j":0}],"n_i":1,"n_j":0,"subcorpus_i":"a","subcorpus_j":"b"})",
  };
  for (const char *doc : bad) {
    CAPTURE(doc);
    CHECK_THROWS_AS(ElementCounts::FromJson(nlohmann::json::parse(doc)),
                    DataError);
  }
}

}  // namespace
}  // namespace narrative
