#pragma once

#include <compare>
#include <vector>

#include "stable_core/digraph.hpp"
#include "stable_core/instance.hpp"

namespace stable_core {

/// Intermediate state of the reverse deletion procedure: the alive cells of
/// the grid together with every participant's order over its alive cells.
/// Orders over dead cells are still undecided. A state whose lists all have
/// length n is a complete instance.
struct ReverseState {
  int n = 0;
  /// rows[w]: alive firms of worker w, best first.
  std::vector<std::vector<int>> rows;
  /// columns[f]: alive workers of firm f, best first.
  std::vector<std::vector<int>> columns;

  bool alive(WorkerId w, FirmId f) const;
  std::size_t alive_count() const;
  bool complete() const;
  /// Requires complete().
  Instance to_instance() const;

  auto operator<=>(const ReverseState&) const = default;
};

/// The state whose only alive cells are the pairs of mu.
ReverseState singleton_state(const Matching& mu);

/// The alive cells and induced orders of a digraph.
ReverseState state_of(const MatchingDigraph& d);

/// Every state from which one reduction deletes a non-empty set of cells and
/// lands exactly on `s`. Each such expansion re-inserts cells on one side of a
/// pivot that tops its row (or column) and is last in its column (or row),
/// placing them below the pivot on that axis and anywhere in their own
/// lists. Sorted and duplicate-free; empty for a complete state.
std::vector<ReverseState> expand_R_inverse(const ReverseState& s);

/// All complete instances of size mu.size() whose unique stable matching is
/// mu, by filtering the exhaustive enumeration. Sorted. n <= 3.
std::vector<Instance> equivalent_instances_bruteforce(const Matching& mu);

/// The same set built up from mu by breadth-first closure of
/// expand_R_inverse, keeping complete states. Sorted. Exhaustiveness has been
/// checked against the brute-force filter for n <= 3 only.
std::vector<Instance> generate_equivalent_instances(const Matching& mu);

}  // namespace stable_core
