#pragma once

#include <string>
#include <vector>

#include "stable_core/digraph.hpp"
#include "stable_core/instance.hpp"
#include "stable_core/io.hpp"

namespace fixtures {

namespace sc = stable_core;

inline const std::string kP1Text =
    "3\n"
    "w1: f2 f1 f3\n"
    "w2: f2 f3 f1\n"
    "w3: f1 f2 f3\n"
    "f1: w1 w2 w3\n"
    "f2: w1 w2 w3\n"
    "f3: w1 w3 w2\n";

inline const std::string kP2Text =
    "3\n"
    "w1: f3 f1 f2\n"
    "w2: f1 f2 f3\n"
    "w3: f1 f3 f2\n"
    "f1: w1 w2 w3\n"
    "f2: w3 w1 w2\n"
    "f3: w3 w2 w1\n";

inline sc::Instance p1() { return sc::parse_instance(kP1Text); }
inline sc::Instance p2() { return sc::parse_instance(kP2Text); }

/// 1-based cell, as the pictures label them.
inline sc::Vertex cell(int w, int f) { return {sc::WorkerId(w - 1), sc::FirmId(f - 1)}; }

/// 1-based matching: firms[i] is the firm of worker i + 1.
inline sc::Matching matching(std::vector<int> firms) {
  for (int& f : firms) --f;
  return sc::Matching(std::move(firms));
}

// Worker-optimal and firm-optimal stable matchings of P1.
inline sc::Matching mu1() { return matching({2, 3, 1}); }
inline sc::Matching mu2() { return matching({2, 1, 3}); }

inline std::vector<sc::Vertex> p1_survivors() {
  return {cell(1, 2), cell(2, 1), cell(2, 3), cell(3, 1), cell(3, 3)};
}

/// 2x2 instance from 1-based lists (w1, w2, f1, f2).
inline sc::Instance two_by_two(std::vector<int> w1, std::vector<int> w2, std::vector<int> f1,
                               std::vector<int> f2) {
  std::vector<std::vector<int>> workers{std::move(w1), std::move(w2)};
  std::vector<std::vector<int>> firms{std::move(f1), std::move(f2)};
  for (auto* side : {&workers, &firms}) {
    for (auto& list : *side) {
      for (int& x : list) --x;
    }
  }
  return sc::Instance(std::move(workers), std::move(firms));
}

/// The seven 2x2 profiles whose only stable matching pairs w1-f1 and w2-f2.
inline std::vector<sc::Instance> identity_profiles_n2() {
  return {
      two_by_two({1, 2}, {1, 2}, {1, 2}, {1, 2}),
      two_by_two({1, 2}, {2, 1}, {1, 2}, {1, 2}),
      two_by_two({1, 2}, {1, 2}, {1, 2}, {2, 1}),
      two_by_two({1, 2}, {2, 1}, {1, 2}, {2, 1}),
      two_by_two({1, 2}, {2, 1}, {2, 1}, {2, 1}),
      two_by_two({2, 1}, {2, 1}, {2, 1}, {2, 1}),
      two_by_two({2, 1}, {2, 1}, {1, 2}, {2, 1}),
  };
}

/// w_i and f_i rank each other first.
inline sc::Instance mutual_favourites(int n) {
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& l = lists[static_cast<std::size_t>(i)];
    l.push_back(i);
    for (int j = 0; j < n; ++j) {
      if (j != i) l.push_back(j);
    }
  }
  return sc::Instance(lists, lists);
}

}  // namespace fixtures
