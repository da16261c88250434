#pragma once

#include <cstddef>
#include <set>
#include <vector>

namespace stable_core::detail {

struct ProposalOutcome {
  std::vector<int> proposer_match;  // responder per proposer, -1 if none
  std::size_t proposals = 0;
};

/// Deferred acceptance over index ranges. `list_of(p)` yields p's responders
/// best first (any sized range of int); `rank(r, p)` is r's rank of p, lower
/// is better. The lowest-id free proposer moves next, or the highest when
/// `lowest_first` is false. Works for unequal side sizes: a proposer whose
/// list runs out stays unmatched.
template <class ListFn, class RankFn>
ProposalOutcome run_proposals(int proposers, int responders, ListFn&& list_of,
                              RankFn&& rank, bool lowest_first = true) {
  ProposalOutcome out;
  out.proposer_match.assign(static_cast<std::size_t>(proposers), -1);
  std::vector<int> held(static_cast<std::size_t>(responders), -1);
  std::vector<std::size_t> next(static_cast<std::size_t>(proposers), 0);
  std::set<int> free;
  for (int p = 0; p < proposers; ++p) free.insert(p);

  while (!free.empty()) {
    const int p = lowest_first ? *free.begin() : *free.rbegin();
    const auto& list = list_of(p);
    auto& cursor = next[static_cast<std::size_t>(p)];
    if (cursor == std::size(list)) {
      free.erase(p);
      continue;
    }
    const int r = list[cursor++];
    ++out.proposals;
    int& current = held[static_cast<std::size_t>(r)];
    if (current == -1) {
      current = p;
      free.erase(p);
    } else if (rank(r, p) < rank(r, current)) {
      free.insert(current);
      current = p;
      free.erase(p);
    }
  }
  for (int r = 0; r < responders; ++r) {
    const int p = held[static_cast<std::size_t>(r)];
    if (p != -1) out.proposer_match[static_cast<std::size_t>(p)] = r;
  }
  return out;
}

}  // namespace stable_core::detail
