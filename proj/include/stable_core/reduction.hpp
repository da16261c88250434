#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "stable_core/digraph.hpp"
#include "stable_core/instance.hpp"

namespace stable_core {

/// How a single reduction pivots.
///
/// Row: the pivot is the best alive cell of its row (zero row out-degree),
/// so its firm never accepts anyone it ranks below the pivot's worker; the
/// pivot's column in-neighbours are deleted.
///
/// Column: the pivot is the best alive cell of its column (zero column
/// out-degree); its row in-neighbours are deleted.
enum class PivotAxis { Row, Column };

struct Pivot {
  Vertex vertex;
  PivotAxis axis;
  bool operator==(const Pivot&) const = default;
};

/// One deletion event. `round` is the reduction step for single-pivot
/// reduction and the simultaneous round for the round-based procedure, where
/// several records share a round.
struct TraceRecord {
  int round = 0;
  Pivot pivot;
  std::vector<Vertex> deleted;
  bool operator==(const TraceRecord&) const = default;
};

/// Fixpoint of the deletion procedure.
struct NormalForm {
  MatchingDigraph digraph;
  /// Productive rounds (round-based procedure) or productive reduction steps
  /// (single-pivot procedure) needed to reach the fixpoint.
  int rounds = 0;
  std::vector<TraceRecord> trace;
};

/// Alive cells whose partner is beaten, for the worker or for the firm, by a
/// reciprocally top-ranked alternative still on the list. Row-major order.
std::vector<Vertex> unattractive_pairs(const MatchingDigraph& d);

/// Deletes unattractive_pairs(d) simultaneously.
MatchingDigraph idua_round(const MatchingDigraph& d);

/// Cells that pivoting on `p` would delete. Throws InvalidPivot if the pivot
/// is dead or its out-degree on the axis is not zero.
std::vector<Vertex> reduction_targets(const MatchingDigraph& d, Pivot p);

/// Applies one reduction in place and returns the deleted cells.
std::vector<Vertex> reduce_in_place(MatchingDigraph& d, Pivot p);

/// One reduction with the axis chosen the classic way: delete the row
/// in-neighbours when the pivot tops its column, else the column
/// in-neighbours when it tops its row. Throws InvalidPivot otherwise.
MatchingDigraph reduce_once_R(const MatchingDigraph& d, Vertex pivot);
MatchingDigraph reduce_once_R(const MatchingDigraph& d, Pivot pivot);

/// Picks the next productive pivot, or nullopt at the fixpoint.
using PivotStrategy = std::function<std::optional<Pivot>(const MatchingDigraph&)>;

/// Every pivot that would delete at least one cell: row tops first (rows in
/// index order), then column tops.
std::vector<Pivot> productive_pivots(const MatchingDigraph& d);

/// Scans rows top to bottom, then columns left to right, and takes the first
/// productive pivot.
PivotStrategy row_major_strategy();

/// Uniform choice among productive pivots, driven by its own seeded engine.
PivotStrategy random_strategy(std::uint64_t seed);

/// Repeats single-pivot reduction until no pivot is productive.
NormalForm idua_R(const MatchingDigraph& d, const PivotStrategy& strategy = row_major_strategy());
NormalForm idua_R(const Instance& inst, const PivotStrategy& strategy = row_major_strategy());

/// Round-based reduction to the fixpoint. Each round's deletions are
/// attributed to the first pivot in row_major order that claims them.
NormalForm normal_form(const Instance& inst);

/// True iff no reduction is productive.
bool is_fixpoint(const MatchingDigraph& d);

struct ExtremalMatchings {
  Matching worker_optimal;  // row tops of the normal form
  Matching firm_optimal;    // column tops of the normal form
};

/// Throws LemmaViolation if either set of tops fails to be a matching.
ExtremalMatchings extremal_matchings(const NormalForm& nf);

enum class VertexClass { InSomeStable, PropertyS };

struct ClassifiedVertex {
  Vertex vertex;
  VertexClass tag;
};

/// Tags every survivor of the normal form: in some stable matching, or
/// flanked in both its row and its column by stable-matching cells (one
/// better and one worse on each axis). A survivor that is neither raises
/// LemmaViolation. Needs n <= 8 for the enumeration.
std::vector<ClassifiedVertex> classify_vertices(const NormalForm& nf, const Instance& inst);

/// The three uniqueness criteria, computed independently, with witnesses.
struct UniquenessReport {
  bool unique_by_da = false;
  bool acyclic_normal_form = false;
  bool singleton_normal_form = false;
  bool consistent = false;

  std::size_t normal_form_vertices = 0;
  std::size_t normal_form_arcs = 0;
  int rounds = 0;

  /// Set when the market has one stable matching.
  std::optional<Matching> unique_matching;
  /// Set when the normal form has a cycle.
  std::optional<DirectedCycle> cycle;
  std::optional<PreferenceCycle> preference_cycle;
  /// Worker- and firm-optimal stable matchings when they differ.
  std::optional<std::pair<Matching, Matching>> distinct_stable;

  bool unique() const noexcept { return consistent && unique_by_da; }
};

UniquenessReport uniqueness_report(const Instance& inst);

}  // namespace stable_core
