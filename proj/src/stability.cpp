#include "stable_core/stability.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stable_core/detail/proposal.hpp"
#include "stable_core/errors.hpp"

namespace stable_core {

std::vector<Vertex> blocking_pairs(const Instance& inst, const Matching& mu) {
  const int n = inst.size();
  if (mu.size() != n) throw SizeMismatch("matching size differs from instance size");
  std::vector<Vertex> out;
  for (int w = 0; w < n; ++w) {
    const WorkerId worker(w);
    const FirmId current = mu.partner(worker);
    for (int f : inst.worker_list(worker)) {
      const FirmId firm(f);
      if (firm == current) break;  // remaining firms are worse for w
      if (inst.rank(firm, worker) < inst.rank(firm, mu.partner(firm))) {
        out.push_back({worker, firm});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_stable(const Instance& inst, const Matching& mu) {
  return blocking_pairs(inst, mu).empty();
}

Matching deferred_acceptance(const Instance& inst, Side proposing, ProposalOrder order,
                             std::size_t* proposals) {
  const int n = inst.size();
  const bool lowest = order == ProposalOrder::LowestIdFirst;
  detail::ProposalOutcome outcome;
  if (proposing == Side::Worker) {
    outcome = detail::run_proposals(
        n, n, [&](int w) { return inst.worker_list(WorkerId(w)); },
        [&](int f, int w) { return inst.rank(FirmId(f), WorkerId(w)); }, lowest);
  } else {
    outcome = detail::run_proposals(
        n, n, [&](int f) { return inst.firm_list(FirmId(f)); },
        [&](int w, int f) { return inst.rank(WorkerId(w), FirmId(f)); }, lowest);
  }
  if (proposals) *proposals = outcome.proposals;
  if (proposing == Side::Worker) return Matching(std::move(outcome.proposer_match));
  // Proposers are firms: invert to a worker -> firm assignment.
  std::vector<int> worker_to_firm(static_cast<std::size_t>(n), -1);
  for (int f = 0; f < n; ++f) {
    worker_to_firm[static_cast<std::size_t>(outcome.proposer_match[static_cast<std::size_t>(f)])] = f;
  }
  return Matching(std::move(worker_to_firm));
}

std::vector<Matching> enumerate_stable_matchings(const Instance& inst) {
  const int n = inst.size();
  if (n > kMaxStableEnumerationSize) {
    throw SizeTooLarge("stable matching enumeration is limited to n <= " +
                       std::to_string(kMaxStableEnumerationSize));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Matching> out;
  do {
    Matching mu(perm);
    if (is_stable(inst, mu)) out.push_back(std::move(mu));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool is_unique_via_da(const Instance& inst) {
  return deferred_acceptance(inst, Side::Worker) == deferred_acceptance(inst, Side::Firm);
}

bool is_kernel(const MatchingDigraph& d, const std::vector<Vertex>& cells) {
  const int n = d.size();
  std::vector<int> per_row(static_cast<std::size_t>(n), 0);
  std::vector<int> per_col(static_cast<std::size_t>(n), 0);
  std::vector<unsigned char> in_set(static_cast<std::size_t>(n * n), 0);
  for (const Vertex v : cells) {
    if (!d.alive(v)) return false;
    auto& mark = in_set[static_cast<std::size_t>(v.worker.index * n + v.firm.index)];
    if (mark) return false;
    mark = 1;
    ++per_row[static_cast<std::size_t>(v.worker.index)];
    ++per_col[static_cast<std::size_t>(v.firm.index)];
  }
  // One cell per row and column among the rows and columns that still have
  // alive cells.
  for (int i = 0; i < n; ++i) {
    const bool row_alive = d.row_top(WorkerId(i)).has_value();
    const bool col_alive = d.column_top(FirmId(i)).has_value();
    if (per_row[static_cast<std::size_t>(i)] != (row_alive ? 1 : 0)) return false;
    if (per_col[static_cast<std::size_t>(i)] != (col_alive ? 1 : 0)) return false;
  }
  for (const Vertex v : d.alive_vertices()) {
    if (in_set[static_cast<std::size_t>(v.worker.index * n + v.firm.index)]) continue;
    const auto next = d.out_neighbours(v);
    const bool absorbed = std::any_of(next.begin(), next.end(), [&](Vertex u) {
      return in_set[static_cast<std::size_t>(u.worker.index * n + u.firm.index)] != 0;
    });
    if (!absorbed) return false;
  }
  return true;
}

std::vector<Vertex> matching_cells(const Matching& mu) {
  std::vector<Vertex> out;
  for (int w = 0; w < mu.size(); ++w) out.push_back({WorkerId(w), mu.partner(WorkerId(w))});
  return out;
}

}  // namespace stable_core
