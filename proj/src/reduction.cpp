#include "stable_core/reduction.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>

#include "stable_core/errors.hpp"
#include "stable_core/stability.hpp"

namespace stable_core {

std::vector<Vertex> reduction_targets(const MatchingDigraph& d, Pivot p) {
  const Vertex v = p.vertex;
  if (!d.alive(v)) throw InvalidPivot("pivot " + vertex_name(v) + " is deleted");
  const auto& inst = d.instance();
  std::vector<Vertex> out;
  if (p.axis == PivotAxis::Row) {
    if (d.row_top(v.worker) != v) {
      throw InvalidPivot("pivot " + vertex_name(v) + " has a better cell in its row");
    }
    for (const Vertex u : d.column(v.firm)) {
      if (inst.rank(v.firm, u.worker) > inst.rank(v.firm, v.worker)) out.push_back(u);
    }
  } else {
    if (d.column_top(v.firm) != v) {
      throw InvalidPivot("pivot " + vertex_name(v) + " has a better cell in its column");
    }
    for (const Vertex u : d.row(v.worker)) {
      if (inst.rank(v.worker, u.firm) > inst.rank(v.worker, v.firm)) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> reduce_in_place(MatchingDigraph& d, Pivot p) {
  auto deleted = reduction_targets(d, p);
  for (const Vertex u : deleted) d.kill(u);
  return deleted;
}

MatchingDigraph reduce_once_R(const MatchingDigraph& d, Pivot pivot) {
  MatchingDigraph next = d;
  reduce_in_place(next, pivot);
  return next;
}

MatchingDigraph reduce_once_R(const MatchingDigraph& d, Vertex pivot) {
  if (!d.alive(pivot)) throw InvalidPivot("pivot " + vertex_name(pivot) + " is deleted");
  const auto split = out_degree_split(d, pivot);
  if (split.column == 0) return reduce_once_R(d, Pivot{pivot, PivotAxis::Column});
  if (split.row == 0) return reduce_once_R(d, Pivot{pivot, PivotAxis::Row});
  throw InvalidPivot("pivot " + vertex_name(pivot) + " has non-zero out-degree on both axes");
}

std::vector<Pivot> productive_pivots(const MatchingDigraph& d) {
  std::vector<Pivot> out;
  for (int w = 0; w < d.size(); ++w) {
    if (auto top = d.row_top(WorkerId(w))) {
      const Pivot p{*top, PivotAxis::Row};
      if (!reduction_targets(d, p).empty()) out.push_back(p);
    }
  }
  for (int f = 0; f < d.size(); ++f) {
    if (auto top = d.column_top(FirmId(f))) {
      const Pivot p{*top, PivotAxis::Column};
      if (!reduction_targets(d, p).empty()) out.push_back(p);
    }
  }
  return out;
}

bool is_fixpoint(const MatchingDigraph& d) { return productive_pivots(d).empty(); }

std::vector<Vertex> unattractive_pairs(const MatchingDigraph& d) {
  std::set<Vertex> all;
  for (const Pivot& p : productive_pivots(d)) {
    for (const Vertex v : reduction_targets(d, p)) all.insert(v);
  }
  return {all.begin(), all.end()};
}

MatchingDigraph idua_round(const MatchingDigraph& d) {
  MatchingDigraph next = d;
  for (const Vertex v : unattractive_pairs(d)) next.kill(v);
  return next;
}

PivotStrategy row_major_strategy() {
  return [](const MatchingDigraph& d) -> std::optional<Pivot> {
    for (int w = 0; w < d.size(); ++w) {
      if (auto top = d.row_top(WorkerId(w))) {
        const Pivot p{*top, PivotAxis::Row};
        if (!reduction_targets(d, p).empty()) return p;
      }
    }
    for (int f = 0; f < d.size(); ++f) {
      if (auto top = d.column_top(FirmId(f))) {
        const Pivot p{*top, PivotAxis::Column};
        if (!reduction_targets(d, p).empty()) return p;
      }
    }
    return std::nullopt;
  };
}

PivotStrategy random_strategy(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const MatchingDigraph& d) -> std::optional<Pivot> {
    const auto pivots = productive_pivots(d);
    if (pivots.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, pivots.size() - 1);
    return pivots[pick(*rng)];
  };
}

NormalForm idua_R(const MatchingDigraph& d, const PivotStrategy& strategy) {
  NormalForm nf{d, 0, {}};
  while (auto pivot = strategy(nf.digraph)) {
    auto deleted = reduce_in_place(nf.digraph, *pivot);
    if (deleted.empty()) {
      throw InvalidPivot("strategy chose " + vertex_name(pivot->vertex) +
                         ", which deletes nothing");
    }
    ++nf.rounds;
    nf.trace.push_back({nf.rounds, *pivot, std::move(deleted)});
  }
  return nf;
}

NormalForm idua_R(const Instance& inst, const PivotStrategy& strategy) {
  return idua_R(build_digraph(inst), strategy);
}

NormalForm normal_form(const Instance& inst) {
  NormalForm nf{build_digraph(inst), 0, {}};
  while (true) {
    std::set<Vertex> claimed;
    std::vector<TraceRecord> round;
    for (const Pivot& p : productive_pivots(nf.digraph)) {
      TraceRecord rec{nf.rounds + 1, p, {}};
      for (const Vertex v : reduction_targets(nf.digraph, p)) {
        if (claimed.insert(v).second) rec.deleted.push_back(v);
      }
      if (!rec.deleted.empty()) round.push_back(std::move(rec));
    }
    if (round.empty()) break;
    ++nf.rounds;
    for (const Vertex v : claimed) nf.digraph.kill(v);
    for (auto& rec : round) nf.trace.push_back(std::move(rec));
  }
  return nf;
}

namespace {

std::optional<Matching> tops_as_matching(const MatchingDigraph& d, bool rows) {
  const int n = d.size();
  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const auto top = rows ? d.row_top(WorkerId(i)) : d.column_top(FirmId(i));
    if (!top) return std::nullopt;
    const int w = top->worker.index;
    const int f = top->firm.index;
    const int partner = rows ? f : w;
    if (used[static_cast<std::size_t>(partner)]) return std::nullopt;
    used[static_cast<std::size_t>(partner)] = true;
    assignment[static_cast<std::size_t>(w)] = f;
  }
  return Matching(std::move(assignment));
}

}  // namespace

ExtremalMatchings extremal_matchings(const NormalForm& nf) {
  auto by_rows = tops_as_matching(nf.digraph, true);
  auto by_cols = tops_as_matching(nf.digraph, false);
  if (!by_rows) throw LemmaViolation("row tops of the normal form are not a matching");
  if (!by_cols) throw LemmaViolation("column tops of the normal form are not a matching");
  return {std::move(*by_rows), std::move(*by_cols)};
}

std::vector<ClassifiedVertex> classify_vertices(const NormalForm& nf, const Instance& inst) {
  const auto stable = enumerate_stable_matchings(inst);
  std::set<Vertex> in_stable;
  for (const auto& mu : stable) {
    for (const Vertex v : matching_cells(mu)) in_stable.insert(v);
  }
  const auto& d = nf.digraph;
  for (const Vertex v : in_stable) {
    if (!d.alive(v)) {
      throw LemmaViolation("stable pair " + vertex_name(v) + " was deleted");
    }
  }

  std::vector<ClassifiedVertex> out;
  for (const Vertex v : d.alive_vertices()) {
    if (in_stable.contains(v)) {
      out.push_back({v, VertexClass::InSomeStable});
      continue;
    }
    const int n = inst.size();
    bool row_better = false, row_worse = false, col_better = false, col_worse = false;
    for (int i = 0; i < n; ++i) {
      const Vertex r{v.worker, FirmId(i)};
      if (i != v.firm.index && in_stable.contains(r)) {
        (inst.rank(v.worker, r.firm) < inst.rank(v.worker, v.firm) ? row_better : row_worse) = true;
      }
      const Vertex c{WorkerId(i), v.firm};
      if (i != v.worker.index && in_stable.contains(c)) {
        (inst.rank(v.firm, c.worker) < inst.rank(v.firm, v.worker) ? col_better : col_worse) = true;
      }
    }
    if (!(row_better && row_worse && col_better && col_worse)) {
      throw LemmaViolation("survivor " + vertex_name(v) +
                           " is in no stable matching and is not flanked by stable pairs");
    }
    out.push_back({v, VertexClass::PropertyS});
  }
  return out;
}

UniquenessReport uniqueness_report(const Instance& inst) {
  UniquenessReport r;
  Matching by_workers = deferred_acceptance(inst, Side::Worker);
  Matching by_firms = deferred_acceptance(inst, Side::Firm);
  r.unique_by_da = by_workers == by_firms;

  const NormalForm nf = normal_form(inst);
  r.rounds = nf.rounds;
  r.normal_form_vertices = nf.digraph.alive_count();
  r.normal_form_arcs = nf.digraph.arc_count();
  r.cycle = has_directed_cycle(nf.digraph);
  r.acyclic_normal_form = !r.cycle.has_value();
  r.singleton_normal_form = r.normal_form_vertices == static_cast<std::size_t>(inst.size()) &&
                            r.normal_form_arcs == 0;
  r.consistent = r.unique_by_da == r.acyclic_normal_form &&
                 r.acyclic_normal_form == r.singleton_normal_form;

  if (r.cycle) r.preference_cycle = to_preference_cycle(nf.digraph, *r.cycle);
  if (r.unique_by_da) {
    r.unique_matching = std::move(by_workers);
  } else {
    r.distinct_stable.emplace(std::move(by_workers), std::move(by_firms));
  }
  return r;
}

}  // namespace stable_core
