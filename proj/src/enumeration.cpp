#include "stable_core/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "stable_core/errors.hpp"
#include "stable_core/reduction.hpp"

namespace stable_core {

bool ReverseState::alive(WorkerId w, FirmId f) const {
  const auto& row = rows.at(static_cast<std::size_t>(w.index));
  return std::find(row.begin(), row.end(), f.index) != row.end();
}

std::size_t ReverseState::alive_count() const {
  std::size_t total = 0;
  for (const auto& r : rows) total += r.size();
  return total;
}

bool ReverseState::complete() const {
  return alive_count() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
}

Instance ReverseState::to_instance() const {
  if (!complete()) throw SizeMismatch("reverse state still has deleted cells");
  return Instance(rows, columns);
}

ReverseState singleton_state(const Matching& mu) {
  ReverseState s;
  s.n = mu.size();
  s.rows.resize(static_cast<std::size_t>(s.n));
  s.columns.resize(static_cast<std::size_t>(s.n));
  for (int w = 0; w < s.n; ++w) {
    const int f = mu.partner(WorkerId(w)).index;
    s.rows[static_cast<std::size_t>(w)] = {f};
    s.columns[static_cast<std::size_t>(f)] = {w};
  }
  return s;
}

ReverseState state_of(const MatchingDigraph& d) {
  ReverseState s;
  s.n = d.size();
  s.rows.resize(static_cast<std::size_t>(s.n));
  s.columns.resize(static_cast<std::size_t>(s.n));
  for (int i = 0; i < s.n; ++i) {
    for (const Vertex v : d.row(WorkerId(i))) s.rows[static_cast<std::size_t>(i)].push_back(v.firm.index);
    for (const Vertex v : d.column(FirmId(i))) s.columns[static_cast<std::size_t>(i)].push_back(v.worker.index);
  }
  return s;
}

namespace {

// Same state with the roles of workers and firms exchanged.
ReverseState transpose(const ReverseState& s) { return {s.n, s.columns, s.rows}; }

// Inserts the re-added column cells into their rows at every position.
void place_in_rows(const ReverseState& base, int firm, const std::vector<int>& added,
                   std::size_t next, std::set<ReverseState>& out) {
  if (next == added.size()) {
    out.insert(base);
    return;
  }
  const auto w = static_cast<std::size_t>(added[next]);
  for (std::size_t pos = 0; pos <= base.rows[w].size(); ++pos) {
    ReverseState s = base;
    s.rows[w].insert(s.rows[w].begin() + static_cast<std::ptrdiff_t>(pos), firm);
    place_in_rows(s, firm, added, next + 1, out);
  }
}

// Expansions whose forward reduction pivots on a row top (w, f) and deletes
// cells of column f.
void expand_row_pivots(const ReverseState& s, std::set<ReverseState>& out) {
  for (int w = 0; w < s.n; ++w) {
    const auto& row = s.rows[static_cast<std::size_t>(w)];
    if (row.empty()) continue;
    const int f = row.front();
    const auto& col = s.columns[static_cast<std::size_t>(f)];
    // Anything alive below w in column f would have been deleted as well.
    if (col.back() != w) continue;

    std::vector<int> candidates;
    for (int x = 0; x < s.n; ++x) {
      if (x != w && !s.alive(WorkerId(x), FirmId(f))) candidates.push_back(x);
    }
    const auto c = candidates.size();
    for (unsigned mask = 1; mask < (1u << c); ++mask) {
      std::vector<int> added;
      for (std::size_t i = 0; i < c; ++i) {
        if (mask & (1u << i)) added.push_back(candidates[i]);
      }
      // `added` starts sorted, so this walks every order of the new cells
      // at the bottom of the column.
      do {
        ReverseState base = s;
        auto& column = base.columns[static_cast<std::size_t>(f)];
        column.insert(column.end(), added.begin(), added.end());
        place_in_rows(base, f, added, 0, out);
      } while (std::next_permutation(added.begin(), added.end()));
    }
  }
}

}  // namespace

std::vector<ReverseState> expand_R_inverse(const ReverseState& s) {
  std::set<ReverseState> out;
  expand_row_pivots(s, out);

  std::set<ReverseState> transposed;
  expand_row_pivots(transpose(s), transposed);
  for (const auto& t : transposed) out.insert(transpose(t));

  return {out.begin(), out.end()};
}

std::vector<Instance> equivalent_instances_bruteforce(const Matching& mu) {
  std::vector<Instance> out;
  for_each_instance(mu.size(), [&](const Instance& inst) {
    const auto report = uniqueness_report(inst);
    if (report.unique() && report.unique_matching == mu) out.push_back(inst);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Instance> generate_equivalent_instances(const Matching& mu) {
  std::set<ReverseState> seen;
  std::deque<ReverseState> frontier;
  std::vector<Instance> out;

  const ReverseState start = singleton_state(mu);
  seen.insert(start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    const ReverseState s = std::move(frontier.front());
    frontier.pop_front();
    if (s.complete()) {
      out.push_back(s.to_instance());
      continue;
    }
    for (auto& next : expand_R_inverse(s)) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stable_core
