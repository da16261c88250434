#include <gtest/gtest.h>

#include <algorithm>
#include <iostream>
#include <map>
#include <set>

#include "stable_core/errors.hpp"
#include "stable_core/io.hpp"
#include "stable_core/reduction.hpp"
#include "stable_core/stability.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace sc = stable_core;
using fixtures::cell;

namespace {

std::set<oracle::Cell> cells(const sc::MatchingDigraph& d) {
  std::set<oracle::Cell> out;
  for (const auto v : d.alive_vertices()) out.insert({v.worker.index, v.firm.index});
  return out;
}

std::set<oracle::Cell> cells(const std::vector<sc::Vertex>& vs) {
  std::set<oracle::Cell> out;
  for (const auto v : vs) out.insert({v.worker.index, v.firm.index});
  return out;
}

oracle::Grid grid_of(const sc::MatchingDigraph& d) {
  oracle::Grid g(static_cast<std::size_t>(d.size()), std::vector<bool>(static_cast<std::size_t>(d.size())));
  for (const auto v : d.alive_vertices()) {
    g[static_cast<std::size_t>(v.worker.index)][static_cast<std::size_t>(v.firm.index)] = true;
  }
  return g;
}

// Every participant's favourite ranks them last.
sc::Instance favourites_rank_last() {
  return sc::parse_instance(
      "3\n"
      "w1: f1 f2 f3\nw2: f2 f3 f1\nw3: f3 f1 f2\n"
      "f1: w2 w3 w1\nf2: w3 w1 w2\nf3: w1 w2 w3\n");
}

std::set<std::vector<int>> stable_set(const sc::Instance& inst) {
  std::set<std::vector<int>> out;
  for (const auto& mu : sc::enumerate_stable_matchings(inst)) out.insert(mu.worker_to_firm());
  return out;
}

}  // namespace

TEST(UnattractivePairs, FirstExample) {
  const auto d = sc::build_digraph(fixtures::p1());
  const auto u = sc::unattractive_pairs(d);
  EXPECT_EQ(cells(u), cells(std::vector<sc::Vertex>{cell(1, 1), cell(1, 3), cell(2, 2), cell(3, 2)}));
}

TEST(UnattractivePairs, FavouritesRankingLastLeavesNothing) {
  const auto inst = favourites_rank_last();
  EXPECT_TRUE(sc::unattractive_pairs(sc::build_digraph(inst)).empty());
  EXPECT_EQ(sc::normal_form(inst).digraph.alive_count(), 9u);
  EXPECT_EQ(sc::normal_form(inst).rounds, 0);
}

TEST(UnattractivePairs, SecondExampleContainsThirdWorkerAtFirstFirm) {
  const auto p2 = fixtures::p2();
  const auto u = sc::unattractive_pairs(sc::build_digraph(p2));
  EXPECT_TRUE(cells(u).contains({2, 0}));
  EXPECT_EQ(cells(u), oracle::unattractive(p2, oracle::full_grid(3)));
}

TEST(UnattractivePairs, MatchesDefinitionScanOnPartialDigraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = sc::random_instance(5, seed);
    auto d = sc::build_digraph(inst);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 6; ++k) d.kill({sc::WorkerId(int(rng() % 5)), sc::FirmId(int(rng() % 5))});
    ASSERT_EQ(cells(sc::unattractive_pairs(d)), oracle::unattractive(inst, grid_of(d)));
  }
}

TEST(IduaRound, FirstExampleOneRound) {
  const auto next = sc::idua_round(sc::build_digraph(fixtures::p1()));
  EXPECT_EQ(cells(next), cells(fixtures::p1_survivors()));
}

TEST(IduaRound, FixpointUnchanged) {
  const auto nf = sc::normal_form(fixtures::p1());
  EXPECT_EQ(sc::idua_round(nf.digraph), nf.digraph);
  EXPECT_TRUE(sc::is_fixpoint(nf.digraph));
}

TEST(IduaRound, SecondExampleIteratesToDiagonal) {
  auto d = sc::build_digraph(fixtures::p2());
  for (int i = 0; i < 9; ++i) d = sc::idua_round(d);
  EXPECT_EQ(cells(d), cells(std::vector<sc::Vertex>{cell(1, 1), cell(2, 2), cell(3, 3)}));
}

TEST(ReduceOnce, FirstPanelsOfSecondExample) {
  const auto full = sc::build_digraph(fixtures::p2());
  // (2,1) tops its row, not its column: the column below it goes.
  const auto after1 = sc::reduce_once_R(full, cell(2, 1));
  EXPECT_EQ(after1.alive_count(), 8u);
  EXPECT_FALSE(after1.alive(cell(3, 1)));

  const auto after2 = sc::reduce_once_R(after1, sc::Pivot{cell(3, 3), sc::PivotAxis::Row});
  EXPECT_EQ(after2.alive_count(), 6u);
  EXPECT_FALSE(after2.alive(cell(1, 3)));
  EXPECT_FALSE(after2.alive(cell(2, 3)));
}

TEST(ReduceOnce, VertexOverloadPrefersRowDeletionWhenColumnTop) {
  auto d = sc::build_digraph(fixtures::p2());
  d.kill(cell(3, 1));
  // (3,3) now tops both its row and its column; the vertex overload removes
  // the row cell below it.
  const auto next = sc::reduce_once_R(d, cell(3, 3));
  EXPECT_FALSE(next.alive(cell(3, 2)));
  EXPECT_TRUE(next.alive(cell(1, 3)));
  EXPECT_TRUE(next.alive(cell(2, 3)));
}

TEST(ReduceOnce, NothingToDelete) {
  const auto nf = sc::normal_form(fixtures::p2());
  EXPECT_EQ(sc::reduce_once_R(nf.digraph, cell(1, 1)), nf.digraph);
  EXPECT_TRUE(sc::reduction_targets(nf.digraph, {cell(2, 2), sc::PivotAxis::Column}).empty());
}

TEST(ReduceOnce, InvalidPivots) {
  auto d = sc::build_digraph(fixtures::p2());
  // (1,2): w1 ranks f2 last and f2 ranks w1 second.
  EXPECT_THROW(sc::reduce_once_R(d, cell(1, 2)), sc::InvalidPivot);
  EXPECT_THROW(sc::reduce_once_R(d, sc::Pivot{cell(1, 1), sc::PivotAxis::Row}), sc::InvalidPivot);
  d.kill(cell(2, 1));
  EXPECT_THROW(sc::reduce_once_R(d, cell(2, 1)), sc::InvalidPivot);
}

TEST(IduaR, DefaultStrategyTraceOfSecondExample) {
  const auto nf = sc::idua_R(fixtures::p2());
  using A = sc::PivotAxis;
  const std::vector<sc::TraceRecord> expected{
      {1, {cell(2, 1), A::Row}, {cell(3, 1)}},
      {2, {cell(3, 3), A::Row}, {cell(1, 3), cell(2, 3)}},
      {3, {cell(1, 1), A::Row}, {cell(2, 1)}},
      {4, {cell(1, 1), A::Column}, {cell(1, 2)}},
      {5, {cell(3, 3), A::Column}, {cell(3, 2)}},
  };
  EXPECT_EQ(nf.trace, expected);
  EXPECT_EQ(nf.rounds, 5);
  EXPECT_EQ(cells(nf.digraph), cells(std::vector<sc::Vertex>{cell(1, 1), cell(2, 2), cell(3, 3)}));
}

TEST(IduaR, FirstExampleSurvivors) {
  EXPECT_EQ(cells(sc::idua_R(fixtures::p1()).digraph), cells(fixtures::p1_survivors()));
}

TEST(IduaR, RejectsUnproductiveStrategy) {
  const sc::PivotStrategy stuck = [](const sc::MatchingDigraph&) -> std::optional<sc::Pivot> {
    return sc::Pivot{cell(3, 1), sc::PivotAxis::Row};  // f1 ranks w3 last: nothing below
  };
  EXPECT_THROW(sc::idua_R(fixtures::p1(), stuck), sc::InvalidPivot);
}

TEST(IduaR, OrderIndependence) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = sc::random_instance(5, seed);
    const auto reference = sc::normal_form(inst).digraph;
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto nf = sc::idua_R(inst, sc::random_strategy(seed * 100 + s));
      ASSERT_EQ(nf.digraph, reference);
      ASSERT_EQ(static_cast<std::size_t>(nf.rounds), nf.trace.size());
    }
  }
}

TEST(IduaR, TraceReplaysToFixpoint) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = sc::random_instance(6, seed);
    const auto nf = sc::idua_R(inst, sc::random_strategy(seed));
    auto d = sc::build_digraph(inst);
    for (const auto& rec : nf.trace) ASSERT_EQ(sc::reduce_in_place(d, rec.pivot), rec.deleted);
    ASSERT_EQ(d, nf.digraph);
  }
}

TEST(NormalForm, Examples) {
  const auto nf1 = sc::normal_form(fixtures::p1());
  EXPECT_EQ(cells(nf1.digraph), cells(fixtures::p1_survivors()));
  EXPECT_EQ(nf1.rounds, 1);

  const auto nf2 = sc::normal_form(fixtures::p2());
  EXPECT_EQ(nf2.digraph.alive_count(), 3u);
  EXPECT_EQ(nf2.digraph.arc_count(), 0u);

  for (int n = 1; n <= 6; ++n) {
    const auto nf = sc::normal_form(fixtures::mutual_favourites(n));
    EXPECT_EQ(cells(nf.digraph), cells(sc::matching_cells(sc::Matching::identity(n))));
    EXPECT_EQ(nf.rounds, n == 1 ? 0 : 1);
  }
}

TEST(NormalForm, TraceRecordsShareRounds) {
  const auto nf = sc::normal_form(fixtures::p1());
  ASSERT_FALSE(nf.trace.empty());
  std::set<sc::Vertex> deleted;
  for (const auto& rec : nf.trace) {
    EXPECT_EQ(rec.round, 1);
    for (const auto v : rec.deleted) EXPECT_TRUE(deleted.insert(v).second);
  }
  EXPECT_EQ(deleted.size(), 4u);
}

TEST(NormalForm, InvariantsExhaustively) {
  for (int n = 1; n <= 3; ++n) {
    sc::for_each_instance(n, [&](const sc::Instance& inst) {
      const auto nf = sc::normal_form(inst);
      ASSERT_EQ(cells(nf.digraph), oracle::cells_of(oracle::normal_form(inst)));
      ASSERT_TRUE(sc::is_fixpoint(nf.digraph));
      ASSERT_GE(nf.digraph.alive_count(), static_cast<std::size_t>(n));
      ASSERT_LE(nf.rounds, n * n);
      ASSERT_EQ(nf.digraph, sc::idua_R(inst).digraph);

      // Rounds only ever shrink the alive set.
      auto d = sc::build_digraph(inst);
      for (int r = 0; r < nf.rounds; ++r) {
        const auto next = sc::idua_round(d);
        const auto before = cells(d), after = cells(next);
        ASSERT_LT(after.size(), before.size());
        ASSERT_TRUE(std::includes(before.begin(), before.end(), after.begin(), after.end()));
        d = next;
      }
      ASSERT_EQ(d, nf.digraph);

      // Stable pairs survive, and the stable set is unchanged.
      for (const auto& mu : sc::enumerate_stable_matchings(inst)) {
        for (const auto v : sc::matching_cells(mu)) ASSERT_TRUE(nf.digraph.alive(v));
      }
      ASSERT_EQ(oracle::stable_matchings(inst, grid_of(nf.digraph)), oracle::stable_matchings(inst));
    });
  }
}

TEST(NormalForm, PreservesStableSetOnRandomInstances) {
  for (int n = 4; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto inst = sc::random_instance(n, seed);
      const auto nf = sc::normal_form(inst);
      ASSERT_EQ(oracle::stable_matchings(inst, grid_of(nf.digraph)), oracle::stable_matchings(inst));
    }
  }
}

TEST(ExtremalMatchings, Examples) {
  const auto e1 = sc::extremal_matchings(sc::normal_form(fixtures::p1()));
  EXPECT_EQ(e1.worker_optimal, fixtures::mu1());
  EXPECT_EQ(e1.firm_optimal, fixtures::mu2());
  const auto e2 = sc::extremal_matchings(sc::normal_form(fixtures::p2()));
  EXPECT_EQ(e2.worker_optimal, sc::Matching::identity(3));
  EXPECT_EQ(e2.firm_optimal, sc::Matching::identity(3));
}

TEST(ExtremalMatchings, NotAFixpoint) {
  sc::NormalForm fake{sc::build_digraph(fixtures::p1()), 0, {}};
  EXPECT_THROW(sc::extremal_matchings(fake), sc::LemmaViolation);
}

TEST(ExtremalMatchings, EqualDeferredAcceptanceAndAbsorb) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = sc::random_instance(6, seed);
    const auto nf = sc::normal_form(inst);
    const auto e = sc::extremal_matchings(nf);
    ASSERT_EQ(e.worker_optimal, sc::deferred_acceptance(inst, sc::Side::Worker));
    ASSERT_EQ(e.firm_optimal, sc::deferred_acceptance(inst, sc::Side::Firm));
    ASSERT_TRUE(sc::is_stable(inst, e.worker_optimal));
    if (!sc::has_directed_cycle(nf.digraph)) ASSERT_EQ(e.worker_optimal, e.firm_optimal);
    // Every survivor is in M_W or points into it.
    ASSERT_TRUE(sc::is_kernel(nf.digraph, sc::matching_cells(e.worker_optimal)));
  }
}

TEST(ClassifyVertices, Examples) {
  const auto p1 = fixtures::p1();
  for (const auto& c : sc::classify_vertices(sc::normal_form(p1), p1)) {
    EXPECT_EQ(c.tag, sc::VertexClass::InSomeStable);
  }
  const auto p2 = fixtures::p2();
  const auto tags = sc::classify_vertices(sc::normal_form(p2), p2);
  EXPECT_EQ(tags.size(), 3u);
  for (const auto& c : tags) EXPECT_EQ(c.tag, sc::VertexClass::InSomeStable);
}

TEST(ClassifyVertices, FullDigraphViolates) {
  const auto p1 = fixtures::p1();
  sc::NormalForm fake{sc::build_digraph(p1), 0, {}};
  EXPECT_THROW(sc::classify_vertices(fake, p1), sc::LemmaViolation);
}

TEST(ClassifyVertices, PropertySHoldsOnRandomInstances) {
  std::size_t property_s = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = sc::random_instance(6, seed);
    const auto tags = sc::classify_vertices(sc::normal_form(inst), inst);
    for (const auto& c : tags) property_s += c.tag == sc::VertexClass::PropertyS ? 1 : 0;
  }
  RecordProperty("property_s_vertices", static_cast<int>(property_s));
}

TEST(UniquenessReport, Examples) {
  const auto r1 = sc::uniqueness_report(fixtures::p1());
  EXPECT_TRUE(r1.consistent);
  EXPECT_FALSE(r1.unique_by_da || r1.acyclic_normal_form || r1.singleton_normal_form);
  ASSERT_TRUE(r1.cycle && r1.distinct_stable);
  EXPECT_EQ(r1.distinct_stable->first, fixtures::mu1());
  EXPECT_EQ(r1.distinct_stable->second, fixtures::mu2());
  EXPECT_FALSE(r1.unique_matching);

  const auto r2 = sc::uniqueness_report(fixtures::p2());
  EXPECT_TRUE(r2.unique());
  EXPECT_TRUE(r2.unique_by_da && r2.acyclic_normal_form && r2.singleton_normal_form);
  EXPECT_EQ(r2.unique_matching, sc::Matching::identity(3));
  EXPECT_FALSE(r2.cycle);

  const auto r0 = sc::uniqueness_report(sc::random_instance(1, 0));
  EXPECT_TRUE(r0.unique());
  EXPECT_EQ(r0.rounds, 0);
}

TEST(UniquenessReport, SizeTwoCensus) {
  int all_true = 0, all_false = 0;
  for (const auto& inst : sc::all_instances(2)) {
    const auto r = sc::uniqueness_report(inst);
    ASSERT_TRUE(r.consistent);
    all_true += r.unique() ? 1 : 0;
    all_false += !r.unique_by_da && !r.acyclic_normal_form && !r.singleton_normal_form ? 1 : 0;
  }
  EXPECT_EQ(all_true, 14);
  EXPECT_EQ(all_false, 2);
}

TEST(UniquenessReport, CycleMeansSeveralStableMatchings) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = sc::random_instance(5, seed);
    const auto r = sc::uniqueness_report(inst);
    ASSERT_TRUE(r.consistent);
    if (r.normal_form_arcs > 0) ASSERT_GE(sc::enumerate_stable_matchings(inst).size(), 2u);
    ASSERT_EQ(r.unique(), sc::enumerate_stable_matchings(inst).size() == 1);
  }
}

// Markets with the same stable matchings need not share a normal form. The
// search below records how often that happens at small sizes.
TEST(NormalFormSearch, SameStableSetDifferentNormalForms) {
  for (int n = 2; n <= 3; ++n) {
    std::map<std::set<std::vector<int>>, std::set<std::string>> by_stable_set;
    std::map<std::set<std::vector<int>>, std::set<std::set<oracle::Cell>>> cells_by_stable_set;
    sc::for_each_instance(n, [&](const sc::Instance& inst) {
      const auto nf = sc::normal_form(inst);
      const auto key = stable_set(inst);
      by_stable_set[key].insert(sc::format_survivor_lists(nf.digraph));
      cells_by_stable_set[key].insert(cells(nf.digraph));
    });
    std::size_t differing = 0, differing_cells = 0;
    for (const auto& [key, forms] : by_stable_set) differing += forms.size() > 1 ? 1 : 0;
    for (const auto& [key, sets] : cells_by_stable_set) differing_cells += sets.size() > 1 ? 1 : 0;
    std::cout << "n=" << n << ": " << by_stable_set.size() << " stable sets, " << differing
              << " with several normal forms, " << differing_cells
              << " with several surviving cell sets\n";
    if (n == 2) {
      // The two cyclic markets share both matchings but circulate in opposite directions.
      EXPECT_EQ(differing, 1u);
      EXPECT_EQ(differing_cells, 0u);
    }
  }
}
