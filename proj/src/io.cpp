#include "stable_core/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "stable_core/errors.hpp"

namespace stable_core {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Line {
  int number;
  std::string_view text;
};

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// Parses "<prefix><k>" and returns k (1-based, unchecked against n).
int parse_label(std::string_view token, char prefix, int line) {
  if (token.size() < 2 || token.front() != prefix) {
    throw SyntaxError(line, "expected " + std::string(1, prefix) + "<id>, got '" +
                                std::string(token) + "'");
  }
  auto id = parse_int(token.substr(1));
  if (!id) {
    throw SyntaxError(line, "bad id in '" + std::string(token) + "'");
  }
  return *id;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

std::string worker_label(WorkerId w) { return "w" + std::to_string(w.index + 1); }
std::string firm_label(FirmId f) { return "f" + std::to_string(f.index + 1); }

Instance parse_instance(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw SyntaxError(1, "empty instance file");

  const auto n_opt = parse_int(lines.front().text);
  if (!n_opt || *n_opt < 1) {
    throw SyntaxError(lines.front().number, "first line must be a positive integer n");
  }
  const int n = *n_opt;
  if (static_cast<long long>(lines.size()) != 2LL * n + 1) {
    throw SizeMismatch("expected " + std::to_string(2 * n) + " preference lines for n=" +
                       std::to_string(n) + ", found " + std::to_string(lines.size() - 1));
  }

  std::vector<std::vector<int>> workers(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> firms(static_cast<std::size_t>(n));
  std::vector<bool> seen_w(static_cast<std::size_t>(n)), seen_f(static_cast<std::size_t>(n));

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [number, line] = lines[i];
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw SyntaxError(number, "missing ':' after participant label");
    }
    const auto head = trim(line.substr(0, colon));
    if (head.empty() || (head.front() != 'w' && head.front() != 'f')) {
      throw SyntaxError(number, "label must be w<i> or f<j>");
    }
    const bool is_worker = head.front() == 'w';
    const int owner = parse_label(head, head.front(), number);
    if (owner < 1 || owner > n) {
      throw SyntaxError(number, "participant " + std::string(head) + " outside 1.." +
                                    std::to_string(n));
    }
    auto& seen = is_worker ? seen_w : seen_f;
    if (seen[static_cast<std::size_t>(owner - 1)]) {
      throw SyntaxError(number, "second list for " + std::string(head));
    }
    seen[static_cast<std::size_t>(owner - 1)] = true;

    const char other = is_worker ? 'f' : 'w';
    auto& list = (is_worker ? workers : firms)[static_cast<std::size_t>(owner - 1)];
    for (auto token : split_ws(line.substr(colon + 1))) {
      list.push_back(parse_label(token, other, number) - 1);
    }
    if (static_cast<int>(list.size()) != n) {
      throw SizeMismatch("line " + std::to_string(number) + ": " + std::string(head) +
                         " lists " + std::to_string(list.size()) + " entries, expected " +
                         std::to_string(n));
    }
  }
  // Counts matched and labels are unique, so every participant has a line.
  for (int i = 0; i < n; ++i) {
    if (!seen_w[static_cast<std::size_t>(i)] || !seen_f[static_cast<std::size_t>(i)]) {
      throw SizeMismatch("missing preference list for participant " + std::to_string(i + 1));
    }
  }
  return Instance(std::move(workers), std::move(firms));
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  const int n = inst.size();
  out << n << '\n';
  for (int w = 0; w < n; ++w) {
    out << 'w' << w + 1 << ':';
    for (int f : inst.worker_list(WorkerId(w))) out << " f" << f + 1;
    out << '\n';
  }
  for (int f = 0; f < n; ++f) {
    out << 'f' << f + 1 << ':';
    for (int w : inst.firm_list(FirmId(f))) out << " w" << w + 1;
    out << '\n';
  }
  return out.str();
}

std::string format_matching(const Matching& m) {
  std::string out;
  for (int w = 0; w < m.size(); ++w) {
    out += worker_label(WorkerId(w)) + ' ' + firm_label(m.partner(WorkerId(w))) + '\n';
  }
  return out;
}

Matching parse_matching(std::string_view text) {
  const auto lines = meaningful_lines(text);
  const int n = static_cast<int>(lines.size());
  if (n == 0) throw SyntaxError(1, "empty matching file");
  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  for (const auto& [number, line] : lines) {
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) throw SyntaxError(number, "expected 'w<i> f<j>'");
    const int w = parse_label(tokens[0], 'w', number);
    const int f = parse_label(tokens[1], 'f', number);
    if (w < 1 || w > n || f < 1 || f > n) {
      throw NotAPermutation("line " + std::to_string(number) + ": id outside 1.." +
                            std::to_string(n));
    }
    auto& slot = assignment[static_cast<std::size_t>(w - 1)];
    if (slot != -1) throw NotAPermutation("worker w" + std::to_string(w) + " listed twice");
    slot = f - 1;
  }
  return Matching(std::move(assignment));
}

std::string format_survivor_lists(const MatchingDigraph& d) {
  std::ostringstream os;
  os << d.size() << '\n';
  for (int w = 0; w < d.size(); ++w) {
    os << worker_label(WorkerId(w)) << ':';
    for (const Vertex v : d.row(WorkerId(w))) os << ' ' << firm_label(v.firm);
    os << '\n';
  }
  for (int f = 0; f < d.size(); ++f) {
    os << firm_label(FirmId(f)) << ':';
    for (const Vertex v : d.column(FirmId(f))) os << ' ' << worker_label(v.worker);
    os << '\n';
  }
  return os.str();
}

}  // namespace stable_core
