#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stable_core/ids.hpp"
#include "stable_core/instance.hpp"

namespace stable_core {

/// Cell (worker, firm) of the n x n grid.
struct Vertex {
  WorkerId worker;
  FirmId firm;

  constexpr auto operator<=>(const Vertex&) const = default;
};

/// `w<i>_f<j>`, 1-based.
std::string vertex_name(Vertex v);

/// Horizontal (A_W) and vertical (A_F) out-degree of a vertex.
struct DegreeSplit {
  int row = 0;     // alive firms the worker strictly prefers to v's firm
  int column = 0;  // alive workers the firm strictly prefers to v's worker

  constexpr bool operator==(const DegreeSplit&) const = default;
};

/// The matching digraph of an instance restricted to a set of surviving
/// cells.
///
/// Arcs are implicit. For alive u = (w, f) and v = (w, g) there is an arc
/// u -> v iff w prefers g to f (row arc); for alive u = (w, f) and
/// v = (x, f) there is an arc u -> v iff f prefers x to w (column arc).
/// Killing a vertex therefore removes all of its arcs.
///
/// Copies share the instance and duplicate only the n*n mask.
class MatchingDigraph {
 public:
  explicit MatchingDigraph(const Instance& inst);
  explicit MatchingDigraph(std::shared_ptr<const Instance> inst);

  const Instance& instance() const noexcept { return *instance_; }
  int size() const noexcept { return n_; }

  bool alive(Vertex v) const noexcept { return alive_[index(v)] != 0; }
  void kill(Vertex v) noexcept;
  std::size_t alive_count() const noexcept { return alive_count_; }
  /// Alive vertices in row-major order.
  std::vector<Vertex> alive_vertices() const;

  /// Arc predicate; false whenever either endpoint is dead.
  bool has_arc(Vertex from, Vertex to) const noexcept;
  bool is_row_arc(Vertex from, Vertex to) const noexcept;
  bool is_column_arc(Vertex from, Vertex to) const noexcept;
  std::size_t arc_count() const noexcept;

  /// Out-neighbours of an alive vertex in row-major order.
  std::vector<Vertex> out_neighbours(Vertex v) const;

  /// Alive cells of row w ordered by w's preference, best first.
  std::vector<Vertex> row(WorkerId w) const;
  /// Alive cells of column f ordered by f's preference, best first.
  std::vector<Vertex> column(FirmId f) const;

  /// The unique alive vertex of the row with zero row out-degree.
  std::optional<Vertex> row_top(WorkerId w) const;
  /// The unique alive vertex of the column with zero column out-degree.
  std::optional<Vertex> column_top(FirmId f) const;

  friend bool operator==(const MatchingDigraph& a, const MatchingDigraph& b) {
    return *a.instance_ == *b.instance_ && a.alive_ == b.alive_;
  }

 private:
  std::size_t index(Vertex v) const noexcept {
    return static_cast<std::size_t>(v.worker.index * n_ + v.firm.index);
  }

  std::shared_ptr<const Instance> instance_;
  int n_;
  std::vector<unsigned char> alive_;
  std::size_t alive_count_;
};

/// All n^2 vertices alive.
MatchingDigraph build_digraph(const Instance& inst);

/// Throws VertexDeleted if v is not alive.
DegreeSplit out_degree_split(const MatchingDigraph& d, Vertex v);

/// A directed cycle; the arc from the last vertex back to the first closes it.
struct DirectedCycle {
  std::vector<Vertex> vertices;
  bool operator==(const DirectedCycle&) const = default;
};

/// Alternating form of a preference cycle over k distinct workers and k
/// distinct firms: for every j (indices mod k)
///
///     workers[j] prefers firms[j+1] to firms[j]
///     firms[j]   prefers workers[j] to workers[j-1]
struct PreferenceCycle {
  std::vector<FirmId> firms;
  std::vector<WorkerId> workers;

  int k() const noexcept { return static_cast<int>(workers.size()); }
  bool operator==(const PreferenceCycle&) const = default;
};

/// Depth-first search over alive vertices, roots and neighbours in row-major
/// order. Returns the first cycle closed by a back arc.
std::optional<DirectedCycle> has_directed_cycle(const MatchingDigraph& d);

/// Turns a directed cycle into the alternating worker/firm form. Runs of
/// consecutive row (or column) arcs are merged using transitivity of the
/// individual orders, and a cycle that revisits a row or column is cut at the
/// revisit until every participant appears once.
PreferenceCycle to_preference_cycle(const MatchingDigraph& d, const DirectedCycle& cycle);

std::optional<PreferenceCycle> find_preference_cycle(const MatchingDigraph& d);

/// Checks the alternating conditions against the preferences restricted to
/// the alive cells of d.
bool is_preference_cycle(const MatchingDigraph& d, const PreferenceCycle& c);

struct DotOptions {
  /// Keep only arcs between consecutive cells of a row or column.
  bool suppress_transitive = false;
  std::string graph_name = "matching_digraph";
};

/// Graphviz text: one node `w<i>_f<j>` per alive vertex placed on the grid,
/// solid edges for row arcs and dashed edges for column arcs.
std::string export_dot(const MatchingDigraph& d, const DotOptions& options = {});

}  // namespace stable_core
