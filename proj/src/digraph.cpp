#include "stable_core/digraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stable_core/errors.hpp"

namespace stable_core {

std::string vertex_name(Vertex v) {
  return "w" + std::to_string(v.worker.index + 1) + "_f" + std::to_string(v.firm.index + 1);
}

MatchingDigraph::MatchingDigraph(const Instance& inst)
    : MatchingDigraph(std::make_shared<const Instance>(inst)) {}

MatchingDigraph::MatchingDigraph(std::shared_ptr<const Instance> inst)
    : instance_(std::move(inst)),
      n_(instance_->size()),
      alive_(static_cast<std::size_t>(n_ * n_), 1),
      alive_count_(alive_.size()) {}

void MatchingDigraph::kill(Vertex v) noexcept {
  auto& cell = alive_[index(v)];
  if (cell) {
    cell = 0;
    --alive_count_;
  }
}

std::vector<Vertex> MatchingDigraph::alive_vertices() const {
  std::vector<Vertex> out;
  out.reserve(alive_count_);
  for (int w = 0; w < n_; ++w) {
    for (int f = 0; f < n_; ++f) {
      const Vertex v{WorkerId(w), FirmId(f)};
      if (alive(v)) out.push_back(v);
    }
  }
  return out;
}

bool MatchingDigraph::is_row_arc(Vertex from, Vertex to) const noexcept {
  return from.worker == to.worker && from.firm != to.firm && alive(from) && alive(to) &&
         instance_->rank(from.worker, to.firm) < instance_->rank(from.worker, from.firm);
}

bool MatchingDigraph::is_column_arc(Vertex from, Vertex to) const noexcept {
  return from.firm == to.firm && from.worker != to.worker && alive(from) && alive(to) &&
         instance_->rank(from.firm, to.worker) < instance_->rank(from.firm, from.worker);
}

bool MatchingDigraph::has_arc(Vertex from, Vertex to) const noexcept {
  return is_row_arc(from, to) || is_column_arc(from, to);
}

std::size_t MatchingDigraph::arc_count() const noexcept {
  // Every unordered pair of alive cells sharing a row or column carries
  // exactly one arc.
  std::size_t arcs = 0;
  for (int i = 0; i < n_; ++i) {
    std::size_t in_row = 0;
    std::size_t in_col = 0;
    for (int j = 0; j < n_; ++j) {
      in_row += alive({WorkerId(i), FirmId(j)});
      in_col += alive({WorkerId(j), FirmId(i)});
    }
    arcs += in_row * (in_row - 1) / 2 + in_col * (in_col - 1) / 2;
  }
  return arcs;
}

std::vector<Vertex> MatchingDigraph::out_neighbours(Vertex v) const {
  std::vector<Vertex> out;
  if (!alive(v)) return out;
  const auto& inst = *instance_;
  // Column arcs from rows above v, then v's own row, then rows below:
  // this is row-major order.
  for (int w = 0; w < n_; ++w) {
    if (w == v.worker.index) {
      for (int f = 0; f < n_; ++f) {
        const Vertex u{v.worker, FirmId(f)};
        if (f != v.firm.index && alive(u) &&
            inst.rank(v.worker, u.firm) < inst.rank(v.worker, v.firm)) {
          out.push_back(u);
        }
      }
      continue;
    }
    const Vertex u{WorkerId(w), v.firm};
    if (alive(u) && inst.rank(v.firm, u.worker) < inst.rank(v.firm, v.worker)) {
      out.push_back(u);
    }
  }
  return out;
}

std::vector<Vertex> MatchingDigraph::row(WorkerId w) const {
  std::vector<Vertex> out;
  for (int f : instance_->worker_list(w)) {
    const Vertex v{w, FirmId(f)};
    if (alive(v)) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> MatchingDigraph::column(FirmId f) const {
  std::vector<Vertex> out;
  for (int w : instance_->firm_list(f)) {
    const Vertex v{WorkerId(w), f};
    if (alive(v)) out.push_back(v);
  }
  return out;
}

std::optional<Vertex> MatchingDigraph::row_top(WorkerId w) const {
  for (int f : instance_->worker_list(w)) {
    const Vertex v{w, FirmId(f)};
    if (alive(v)) return v;
  }
  return std::nullopt;
}

std::optional<Vertex> MatchingDigraph::column_top(FirmId f) const {
  for (int w : instance_->firm_list(f)) {
    const Vertex v{WorkerId(w), f};
    if (alive(v)) return v;
  }
  return std::nullopt;
}

MatchingDigraph build_digraph(const Instance& inst) { return MatchingDigraph(inst); }

DegreeSplit out_degree_split(const MatchingDigraph& d, Vertex v) {
  const int n = d.size();
  if (v.worker.index < 0 || v.worker.index >= n || v.firm.index < 0 || v.firm.index >= n) {
    throw IdOutOfRange("vertex " + vertex_name(v) + " outside the grid");
  }
  if (!d.alive(v)) throw VertexDeleted("vertex " + vertex_name(v) + " is deleted");
  const auto& inst = d.instance();
  DegreeSplit split;
  for (int i = 0; i < n; ++i) {
    const Vertex r{v.worker, FirmId(i)};
    if (d.alive(r) && inst.rank(v.worker, r.firm) < inst.rank(v.worker, v.firm)) ++split.row;
    const Vertex c{WorkerId(i), v.firm};
    if (d.alive(c) && inst.rank(v.firm, c.worker) < inst.rank(v.firm, v.worker)) ++split.column;
  }
  return split;
}

std::optional<DirectedCycle> has_directed_cycle(const MatchingDigraph& d) {
  enum : unsigned char { kWhite, kGrey, kBlack };
  const int n = d.size();
  const auto idx = [n](Vertex v) {
    return static_cast<std::size_t>(v.worker.index * n + v.firm.index);
  };
  std::vector<unsigned char> colour(static_cast<std::size_t>(n * n), kWhite);

  struct Frame {
    Vertex v;
    std::vector<Vertex> next;
    std::size_t cursor = 0;
  };

  for (const Vertex root : d.alive_vertices()) {
    if (colour[idx(root)] != kWhite) continue;
    std::vector<Frame> stack;
    stack.push_back({root, d.out_neighbours(root)});
    colour[idx(root)] = kGrey;
    while (!stack.empty()) {
      auto& top = stack.back();
      if (top.cursor == top.next.size()) {
        colour[idx(top.v)] = kBlack;
        stack.pop_back();
        continue;
      }
      const Vertex u = top.next[top.cursor++];
      if (colour[idx(u)] == kGrey) {
        auto start = std::find_if(stack.begin(), stack.end(),
                                  [&](const Frame& f) { return f.v == u; });
        DirectedCycle cycle;
        for (; start != stack.end(); ++start) cycle.vertices.push_back(start->v);
        return cycle;
      }
      if (colour[idx(u)] == kWhite) {
        colour[idx(u)] = kGrey;
        stack.push_back({u, d.out_neighbours(u)});
      }
    }
  }
  return std::nullopt;
}

namespace {

bool same_row(Vertex a, Vertex b) { return a.worker == b.worker; }

// Drops every vertex whose incoming and outgoing arcs lie on the same axis.
// Transitivity of the individual orders guarantees the shortcut arcs exist.
std::vector<Vertex> merge_runs(const std::vector<Vertex>& c) {
  const std::size_t m = c.size();
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex prev = c[(i + m - 1) % m];
    const Vertex next = c[(i + 1) % m];
    if (same_row(prev, c[i]) != same_row(c[i], next)) out.push_back(c[i]);
  }
  // Start on a row arc so even positions open row runs.
  if (!out.empty() && !same_row(out[0], out[1 % out.size()])) {
    std::rotate(out.begin(), out.begin() + 1, out.end());
  }
  return out;
}

}  // namespace

PreferenceCycle to_preference_cycle(const MatchingDigraph& d, const DirectedCycle& cycle) {
  const auto& in = cycle.vertices;
  if (in.size() < 4) throw std::invalid_argument("a matching digraph cycle has >= 4 vertices");
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!d.has_arc(in[i], in[(i + 1) % in.size()])) {
      throw std::invalid_argument("not a directed cycle of the digraph");
    }
  }

  std::vector<Vertex> c = in;
  while (true) {
    c = merge_runs(c);
    const std::size_t m = c.size();
    const std::size_t k = m / 2;
    bool cut = false;

    // Row runs are c[2j] -> c[2j+1]; a worker seen twice closes a shorter cycle.
    for (std::size_t j1 = 0; j1 < k && !cut; ++j1) {
      for (std::size_t j2 = j1 + 1; j2 < k && !cut; ++j2) {
        if (c[2 * j1].worker != c[2 * j2].worker) continue;
        const std::size_t x = 2 * j1 + 1;
        const std::size_t y = 2 * j2;
        std::vector<Vertex> shorter;
        if (d.has_arc(c[x], c[y])) {
          shorter.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(x) + 1);
          shorter.insert(shorter.end(), c.begin() + static_cast<std::ptrdiff_t>(y), c.end());
        } else {
          shorter.assign(c.begin() + static_cast<std::ptrdiff_t>(x),
                         c.begin() + static_cast<std::ptrdiff_t>(y) + 1);
        }
        c = std::move(shorter);
        cut = true;
      }
    }
    // Column runs are c[2j+1] -> c[2j+2].
    for (std::size_t j1 = 0; j1 < k && !cut; ++j1) {
      for (std::size_t j2 = j1 + 1; j2 < k && !cut; ++j2) {
        if (c[2 * j1 + 1].firm != c[2 * j2 + 1].firm) continue;
        const std::size_t x = 2 * j1 + 2;
        const std::size_t y = 2 * j2 + 1;
        std::vector<Vertex> shorter;
        if (d.has_arc(c[x], c[y])) {
          shorter.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(x) + 1);
          shorter.insert(shorter.end(), c.begin() + static_cast<std::ptrdiff_t>(y), c.end());
        } else {
          shorter.assign(c.begin() + static_cast<std::ptrdiff_t>(x),
                         c.begin() + static_cast<std::ptrdiff_t>(y) + 1);
        }
        c = std::move(shorter);
        cut = true;
      }
    }
    if (!cut) break;
  }

  PreferenceCycle out;
  for (std::size_t j = 0; j < c.size() / 2; ++j) {
    out.firms.push_back(c[2 * j].firm);
    out.workers.push_back(c[2 * j].worker);
  }
  return out;
}

std::optional<PreferenceCycle> find_preference_cycle(const MatchingDigraph& d) {
  auto cycle = has_directed_cycle(d);
  if (!cycle) return std::nullopt;
  return to_preference_cycle(d, *cycle);
}

bool is_preference_cycle(const MatchingDigraph& d, const PreferenceCycle& c) {
  const int k = c.k();
  if (k < 2 || static_cast<int>(c.firms.size()) != k) return false;
  if (std::set<WorkerId>(c.workers.begin(), c.workers.end()).size() != c.workers.size() ||
      std::set<FirmId>(c.firms.begin(), c.firms.end()).size() != c.firms.size()) {
    return false;
  }
  for (int j = 0; j < k; ++j) {
    const auto w = c.workers[static_cast<std::size_t>(j)];
    const auto prev_w = c.workers[static_cast<std::size_t>((j + k - 1) % k)];
    const auto f = c.firms[static_cast<std::size_t>(j)];
    const auto next_f = c.firms[static_cast<std::size_t>((j + 1) % k)];
    // w_j prefers f_{j+1} to f_j, both still on w_j's list.
    if (!d.is_row_arc({w, f}, {w, next_f})) return false;
    // f_j prefers w_j to w_{j-1}, both still on f_j's list.
    if (!d.is_column_arc({prev_w, f}, {w, f})) return false;
  }
  return true;
}

std::string export_dot(const MatchingDigraph& d, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph " << options.graph_name << " {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (const Vertex v : d.alive_vertices()) {
    out << "  " << vertex_name(v) << " [label=\"(" << v.worker.index + 1 << ","
        << v.firm.index + 1 << ")\", pos=\"" << v.firm.index * 2 << ","
        << -v.worker.index * 2 << "!\"];\n";
  }

  auto emit = [&](Vertex from, Vertex to, bool column) {
    out << "  " << vertex_name(from) << " -> " << vertex_name(to);
    if (column) out << " [style=dashed]";
    out << ";\n";
  };

  if (options.suppress_transitive) {
    // Covering arcs only: each cell points to the next better cell.
    for (int w = 0; w < d.size(); ++w) {
      const auto cells = d.row(WorkerId(w));
      for (std::size_t i = 1; i < cells.size(); ++i) emit(cells[i], cells[i - 1], false);
    }
    for (int f = 0; f < d.size(); ++f) {
      const auto cells = d.column(FirmId(f));
      for (std::size_t i = 1; i < cells.size(); ++i) emit(cells[i], cells[i - 1], true);
    }
  } else {
    for (const Vertex v : d.alive_vertices()) {
      for (const Vertex u : d.out_neighbours(v)) emit(v, u, d.is_column_arc(v, u));
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace stable_core
