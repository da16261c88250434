#pragma once

#include <cstddef>
#include <vector>

#include "stable_core/digraph.hpp"
#include "stable_core/instance.hpp"

namespace stable_core {

/// Pairs (w, f) where w prefers f to mu(w) and f prefers w to mu(f), in
/// row-major order.
std::vector<Vertex> blocking_pairs(const Instance& inst, const Matching& mu);

bool is_stable(const Instance& inst, const Matching& mu);

/// Which free proposer moves next. The outcome does not depend on it.
enum class ProposalOrder { LowestIdFirst, HighestIdFirst };

/// Gale-Shapley deferred acceptance; the result is optimal for the
/// proposing side among all stable matchings.
Matching deferred_acceptance(const Instance& inst, Side proposing,
                             ProposalOrder order = ProposalOrder::LowestIdFirst,
                             std::size_t* proposals = nullptr);

inline constexpr int kMaxStableEnumerationSize = 8;

/// Every stable matching, found by scanning all n! assignments in
/// lexicographic order. Returned sorted. Throws SizeTooLarge for n > 8.
std::vector<Matching> enumerate_stable_matchings(const Instance& inst);

/// Worker-proposing and firm-proposing deferred acceptance agree.
bool is_unique_via_da(const Instance& inst);

/// True iff `cells` holds exactly one alive vertex per row and per column and
/// every other alive vertex has an out-neighbour in `cells`.
bool is_kernel(const MatchingDigraph& d, const std::vector<Vertex>& cells);

std::vector<Vertex> matching_cells(const Matching& mu);

}  // namespace stable_core
