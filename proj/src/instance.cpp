#include "stable_core/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stable_core/errors.hpp"

namespace stable_core {
namespace {

// Copies `lists` into a flat row-major table, checking shape and that every
// row is a permutation of 0..n-1. Fills the inverse-permutation table.
void flatten_lists(const std::vector<std::vector<int>>& lists, int n,
                   const char* owner, char prefix, const char* member,
                   std::vector<int>& flat, std::vector<int>& rank) {
  if (static_cast<int>(lists.size()) != n) {
    throw SizeMismatch(std::string("expected ") + std::to_string(n) + " " +
                       owner + " lists, got " + std::to_string(lists.size()));
  }
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  flat.assign(nn, -1);
  rank.assign(nn, -1);
  for (int i = 0; i < n; ++i) {
    const auto& row = lists[static_cast<std::size_t>(i)];
    const std::string who = prefix + std::to_string(i + 1);
    if (static_cast<int>(row.size()) != n) {
      throw SizeMismatch(who + ": list has " + std::to_string(row.size()) +
                         " entries, expected " + std::to_string(n));
    }
    for (int pos = 0; pos < n; ++pos) {
      const int id = row[static_cast<std::size_t>(pos)];
      if (id < 0 || id >= n) {
        throw NotAPermutation(who + ": " + member + " id " + std::to_string(id + 1) +
                              " out of range");
      }
      auto& slot = rank[static_cast<std::size_t>(i * n + id)];
      if (slot != -1) {
        throw NotAPermutation(who + ": duplicate " + member + " " +
                              std::to_string(id + 1));
      }
      slot = pos;
      flat[static_cast<std::size_t>(i * n + pos)] = id;
    }
  }
}

void check_id(int index, int n, const char* what) {
  if (index < 0 || index >= n) {
    throw IdOutOfRange(std::string(what) + " index " + std::to_string(index) +
                       " outside [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Instance::Instance(std::vector<std::vector<int>> worker_prefs,
                   std::vector<std::vector<int>> firm_prefs)
    : n_(static_cast<int>(worker_prefs.size())) {
  if (n_ < 1) throw SizeMismatch("an instance needs at least one worker");
  flatten_lists(worker_prefs, n_, "worker", 'w', "firm", worker_prefs_, worker_rank_);
  flatten_lists(firm_prefs, n_, "firm", 'f', "worker", firm_prefs_, firm_rank_);
}

std::span<const int> Instance::worker_list(WorkerId w) const {
  check_id(w.index, n_, "worker");
  return {worker_prefs_.data() + w.index * n_, static_cast<std::size_t>(n_)};
}

std::span<const int> Instance::firm_list(FirmId f) const {
  check_id(f.index, n_, "firm");
  return {firm_prefs_.data() + f.index * n_, static_cast<std::size_t>(n_)};
}

bool Instance::prefers(WorkerId w, FirmId a, FirmId b) const {
  check_id(w.index, n_, "worker");
  check_id(a.index, n_, "firm");
  check_id(b.index, n_, "firm");
  return rank(w, a) < rank(w, b);
}

bool Instance::prefers(FirmId f, WorkerId a, WorkerId b) const {
  check_id(f.index, n_, "firm");
  check_id(a.index, n_, "worker");
  check_id(b.index, n_, "worker");
  return rank(f, a) < rank(f, b);
}

Matching::Matching(std::vector<int> worker_to_firm)
    : worker_to_firm_(std::move(worker_to_firm)),
      firm_to_worker_(worker_to_firm_.size(), -1) {
  const int n = size();
  if (n < 1) throw SizeMismatch("a matching needs at least one pair");
  for (int w = 0; w < n; ++w) {
    const int f = worker_to_firm_[static_cast<std::size_t>(w)];
    if (f < 0 || f >= n) {
      throw NotAPermutation("w" + std::to_string(w + 1) + " matched to firm id " +
                            std::to_string(f + 1) + " out of range");
    }
    auto& back = firm_to_worker_[static_cast<std::size_t>(f)];
    if (back != -1) {
      throw NotAPermutation("f" + std::to_string(f + 1) + " matched twice");
    }
    back = w;
  }
}

Matching Matching::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return Matching(std::move(id));
}

Instance random_instance(int n, std::mt19937_64& rng) {
  if (n < 1) throw SizeMismatch("random_instance needs n >= 1");
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  auto draw = [&] {
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n), base);
    for (auto& l : lists) std::shuffle(l.begin(), l.end(), rng);
    return lists;
  };
  auto workers = draw();
  auto firms = draw();
  return Instance(std::move(workers), std::move(firms));
}

Instance random_instance(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_instance(n, rng);
}

void for_each_instance(int n, const std::function<void(const Instance&)>& visit) {
  if (n < 1) throw SizeMismatch("for_each_instance needs n >= 1");
  if (n > kMaxEnumerableSize) {
    throw SizeTooLarge("exhaustive enumeration is limited to n <= " +
                       std::to_string(kMaxEnumerableSize));
  }
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  const auto lists = static_cast<std::size_t>(2 * n);
  std::vector<std::size_t> digit(lists, 0);
  std::vector<std::vector<int>> workers(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> firms(static_cast<std::size_t>(n));
  while (true) {
    for (std::size_t i = 0; i < lists; ++i) {
      auto& target = i < workers.size() ? workers[i] : firms[i - workers.size()];
      target = perms[digit[i]];
    }
    visit(Instance(workers, firms));

    std::size_t pos = lists;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < perms.size()) break;
      digit[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::vector<Instance> all_instances(int n) {
  std::vector<Instance> out;
  for_each_instance(n, [&](const Instance& inst) { out.push_back(inst); });
  return out;
}

}  // namespace stable_core
