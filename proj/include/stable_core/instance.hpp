#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "stable_core/ids.hpp"

namespace stable_core {

/// A balanced one-to-one market: n workers and n firms, each with a strict
/// and complete preference list over the other side.
///
/// Lists are stored most-preferred first. Rank tables (the inverse
/// permutations) are precomputed so `prefers` is a pair of lookups.
/// Instances are immutable once constructed.
class Instance {
 public:
  /// Builds an instance from 0-based lists. Throws SizeMismatch when the
  /// number or length of lists is not n, NotAPermutation when a list repeats
  /// or omits an id.
  Instance(std::vector<std::vector<int>> worker_prefs,
           std::vector<std::vector<int>> firm_prefs);

  int size() const noexcept { return n_; }

  /// Worker w's firms, most preferred first.
  std::span<const int> worker_list(WorkerId w) const;
  /// Firm f's workers, most preferred first.
  std::span<const int> firm_list(FirmId f) const;

  /// Position of f in w's list; 0 is the favourite.
  int rank(WorkerId w, FirmId f) const noexcept {
    return worker_rank_[static_cast<std::size_t>(w.index * n_ + f.index)];
  }
  int rank(FirmId f, WorkerId w) const noexcept {
    return firm_rank_[static_cast<std::size_t>(f.index * n_ + w.index)];
  }

  /// True iff w strictly prefers a to b. Throws IdOutOfRange.
  bool prefers(WorkerId w, FirmId a, FirmId b) const;
  /// True iff f strictly prefers a to b. Throws IdOutOfRange.
  bool prefers(FirmId f, WorkerId a, WorkerId b) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.worker_prefs_ == b.worker_prefs_ &&
           a.firm_prefs_ == b.firm_prefs_;
  }
  /// Lexicographic over (n, worker lists, firm lists); gives a canonical order.
  friend std::strong_ordering operator<=>(const Instance& a, const Instance& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.worker_prefs_ <=> b.worker_prefs_; c != 0) return c;
    return a.firm_prefs_ <=> b.firm_prefs_;
  }

 private:
  int n_;
  // Row-major n*n tables.
  std::vector<int> worker_prefs_;
  std::vector<int> firm_prefs_;
  std::vector<int> worker_rank_;
  std::vector<int> firm_rank_;
};

/// A perfect matching between workers and firms of the same size.
class Matching {
 public:
  /// `worker_to_firm[w]` is the 0-based firm matched to w. Throws
  /// NotAPermutation unless the vector is a permutation of 0..n-1.
  explicit Matching(std::vector<int> worker_to_firm);

  static Matching identity(int n);

  int size() const noexcept { return static_cast<int>(worker_to_firm_.size()); }
  FirmId partner(WorkerId w) const {
    return FirmId(worker_to_firm_.at(static_cast<std::size_t>(w.index)));
  }
  WorkerId partner(FirmId f) const {
    return WorkerId(firm_to_worker_.at(static_cast<std::size_t>(f.index)));
  }
  bool contains(WorkerId w, FirmId f) const { return partner(w) == f; }

  const std::vector<int>& worker_to_firm() const noexcept { return worker_to_firm_; }
  const std::vector<int>& firm_to_worker() const noexcept { return firm_to_worker_; }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.worker_to_firm_ == b.worker_to_firm_;
  }
  friend std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
    return a.worker_to_firm_ <=> b.worker_to_firm_;
  }

 private:
  std::vector<int> worker_to_firm_;
  std::vector<int> firm_to_worker_;
};

/// Draws every one of the 2n lists independently and uniformly among the n!
/// permutations. Deterministic for a given seed.
Instance random_instance(int n, std::uint64_t seed);
Instance random_instance(int n, std::mt19937_64& rng);

/// Largest n accepted by the exhaustive instance enumeration.
inline constexpr int kMaxEnumerableSize = 3;

/// Visits all (n!)^(2n) instances of size n. The order is an odometer over
/// the 2n lists (w1..wn then f1..fn), each list stepping through its
/// permutations in lexicographic order, with the last firm's list varying
/// fastest. Throws SizeTooLarge for n > 3.
void for_each_instance(int n, const std::function<void(const Instance&)>& visit);
std::vector<Instance> all_instances(int n);

}  // namespace stable_core
