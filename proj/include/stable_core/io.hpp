#pragma once

#include <string>
#include <string_view>

#include "stable_core/digraph.hpp"
#include "stable_core/instance.hpp"

namespace stable_core {

/// Parses the text instance format:
///
///     3
///     w1: f2 f1 f3
///     ...
///     f3: w1 w3 w2
///
/// The first meaningful line is n, followed by one `w<i>:` line per worker
/// and one `f<j>:` line per firm (most preferred first, 1-based ids). Blank
/// lines and lines starting with `#` are skipped.
///
/// Throws SyntaxError, NotAPermutation or SizeMismatch.
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance: n on the first line, then workers, then firms,
/// each line LF-terminated.
std::string serialize_instance(const Instance& inst);

/// One `w<i> f<j>` line per worker, sorted by worker id.
std::string format_matching(const Matching& m);

/// Reads the format written by format_matching. Lines may appear in any
/// order; the matching size is the number of pairs.
Matching parse_matching(std::string_view text);

/// The alive cells of d in the instance format: n, then each worker's
/// surviving firms and each firm's surviving workers, best first. Lists may
/// be shorter than n, so the text is not a parseable instance in general.
std::string format_survivor_lists(const MatchingDigraph& d);

std::string worker_label(WorkerId w);
std::string firm_label(FirmId f);

}  // namespace stable_core
