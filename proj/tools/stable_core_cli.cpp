// Command-line front end: uniqueness checks, normal forms, enumeration of
// equivalent instances and Monte Carlo runs.
//
// Exit codes: 0 unique (or success), 1 several stable matchings, 2 any error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "stable_core/enumeration.hpp"
#include "stable_core/errors.hpp"
#include "stable_core/experiments.hpp"
#include "stable_core/io.hpp"
#include "stable_core/reduction.hpp"

namespace sc = stable_core;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUnique = 0;
constexpr int kExitMultiple = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

sc::Instance load_instance(const std::string& path) { return sc::parse_instance(read_file(path)); }

json matching_json(const sc::Matching& mu) {
  json out = json::object();
  for (int w = 0; w < mu.size(); ++w) {
    out[sc::worker_label(sc::WorkerId(w))] = sc::firm_label(mu.partner(sc::WorkerId(w)));
  }
  return out;
}

json report_json(const sc::UniquenessReport& r, int n) {
  json j;
  j["n"] = n;
  j["unique"] = r.unique();
  j["consistent"] = r.consistent;
  j["criteria"] = {{"unique_by_da", r.unique_by_da},
                   {"acyclic_normal_form", r.acyclic_normal_form},
                   {"singleton_normal_form", r.singleton_normal_form}};
  j["normal_form"] = {{"vertices", r.normal_form_vertices},
                      {"arcs", r.normal_form_arcs},
                      {"rounds", r.rounds}};
  j["unique_matching"] = r.unique_matching ? matching_json(*r.unique_matching) : json(nullptr);
  if (r.cycle) {
    json cycle = json::array();
    for (const auto v : r.cycle->vertices) cycle.push_back(sc::vertex_name(v));
    j["cycle"] = cycle;
  } else {
    j["cycle"] = nullptr;
  }
  if (r.preference_cycle) {
    json firms = json::array(), workers = json::array();
    for (const auto f : r.preference_cycle->firms) firms.push_back(sc::firm_label(f));
    for (const auto w : r.preference_cycle->workers) workers.push_back(sc::worker_label(w));
    j["preference_cycle"] = {{"firms", firms}, {"workers", workers}};
  } else {
    j["preference_cycle"] = nullptr;
  }
  if (r.distinct_stable) {
    j["stable_matchings"] = {{"worker_optimal", matching_json(r.distinct_stable->first)},
                             {"firm_optimal", matching_json(r.distinct_stable->second)}};
  } else {
    j["stable_matchings"] = nullptr;
  }
  return j;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(const sc::UniquenessReport& r, std::ostream& out) {
  out << "unique: " << yes_no(r.unique()) << '\n';
  out << "deferred acceptance agrees: " << yes_no(r.unique_by_da) << '\n';
  out << "normal form acyclic: " << yes_no(r.acyclic_normal_form) << '\n';
  out << "normal form singleton lists: " << yes_no(r.singleton_normal_form) << '\n';
  out << "normal form: " << r.normal_form_vertices << " vertices, " << r.normal_form_arcs
      << " arcs, " << r.rounds << " rounds\n";
  if (r.unique_matching) out << "stable matching:\n" << sc::format_matching(*r.unique_matching);
  if (r.cycle) {
    out << "cycle:";
    for (const auto v : r.cycle->vertices) out << ' ' << sc::vertex_name(v);
    out << '\n';
  }
  if (r.preference_cycle) {
    out << "preference cycle:";
    for (int j = 0; j < r.preference_cycle->k(); ++j) {
      out << ' ' << sc::firm_label(r.preference_cycle->firms[static_cast<std::size_t>(j)]) << ' '
          << sc::worker_label(r.preference_cycle->workers[static_cast<std::size_t>(j)]);
    }
    out << '\n';
  }
  if (r.distinct_stable) {
    out << "worker-optimal matching:\n" << sc::format_matching(r.distinct_stable->first);
    out << "firm-optimal matching:\n" << sc::format_matching(r.distinct_stable->second);
  }
}

int cmd_check(const std::string& path, bool as_json) {
  const auto inst = load_instance(path);
  const auto report = sc::uniqueness_report(inst);
  if (as_json) {
    std::cout << report_json(report, inst.size()).dump(2) << '\n';
  } else {
    print_report(report, std::cout);
  }
  if (!report.consistent) {
    std::cerr << "error: uniqueness criteria disagree\n";
    return kExitError;
  }
  return report.unique() ? kExitUnique : kExitMultiple;
}

int cmd_normal_form(const std::string& path, bool trace, bool dot, bool condensed) {
  const auto inst = load_instance(path);
  if (trace) {
    // Single-pivot reduction gives one record per step.
    const auto nf = sc::idua_R(inst);
    for (const auto& rec : nf.trace) {
      json deleted = json::array();
      for (const auto v : rec.deleted) deleted.push_back(sc::vertex_name(v));
      json line = {{"round", rec.round},
                   {"pivot", sc::vertex_name(rec.pivot.vertex)},
                   {"axis", rec.pivot.axis == sc::PivotAxis::Row ? "row" : "column"},
                   {"deleted", deleted}};
      std::cout << line.dump() << '\n';
    }
    return kExitUnique;
  }
  const auto nf = sc::normal_form(inst);
  if (dot) {
    sc::DotOptions options;
    options.suppress_transitive = condensed;
    options.graph_name = "normal_form";
    std::cout << sc::export_dot(nf.digraph, options);
  } else {
    std::cout << sc::format_survivor_lists(nf.digraph);
  }
  return kExitUnique;
}

int cmd_enumerate(int n, const std::string& matching_path, const std::string& method) {
  const sc::Matching mu =
      matching_path.empty() ? sc::Matching::identity(n) : sc::parse_matching(read_file(matching_path));
  if (mu.size() != n) {
    throw sc::SizeMismatch("matching has " + std::to_string(mu.size()) + " pairs, expected " +
                           std::to_string(n));
  }
  const auto instances = method == "bruteforce" ? sc::equivalent_instances_bruteforce(mu)
                                                : sc::generate_equivalent_instances(mu);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (i) std::cout << "---\n";
    std::cout << sc::serialize_instance(instances[i]);
  }
  return kExitUnique;
}

int cmd_sample(int n, std::size_t trials, std::uint64_t seed, bool summary) {
  const auto samples = sc::sample_normal_forms(n, trials, seed);
  if (summary) {
    std::cout << sc::stats_csv_header() << '\n';
    if (!samples.empty()) std::cout << sc::to_csv_row(sc::summarize(n, seed, samples));
    return kExitUnique;
  }
  std::cout << sc::sample_csv_header() << '\n';
  for (const auto& s : samples) std::cout << sc::to_csv_row(s);
  return kExitUnique;
}

int cmd_experiment(int n, int extra_firms, std::size_t trials, std::uint64_t seed, bool census,
                   bool header) {
  if (census && extra_firms != 0) {
    throw std::invalid_argument("--census only covers balanced markets");
  }
  const auto estimate =
      census ? sc::uniqueness_census(n) : sc::uniqueness_fraction(n, extra_firms, trials, seed);
  if (header) std::cout << sc::uniqueness_csv_header() << '\n';
  std::cout << sc::to_csv_row(estimate);
  return kExitUnique;
}

int cmd_export_dot(const std::string& path, bool condensed, bool reduced) {
  const auto inst = load_instance(path);
  sc::DotOptions options;
  options.suppress_transitive = condensed;
  if (reduced) {
    options.graph_name = "normal_form";
    std::cout << sc::export_dot(sc::normal_form(inst).digraph, options);
  } else {
    std::cout << sc::export_dot(sc::build_digraph(inst), options);
  }
  return kExitUnique;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide uniqueness of stable matchings via normal forms"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string path;
  bool as_json = false;
  auto* check = app.add_subcommand("check", "Report whether the instance has a unique stable matching");
  check->add_option("file", path, "Instance file")->required();
  check->add_flag("--json", as_json, "Emit the report as JSON");
  check->callback([&] { action = [&] { return cmd_check(path, as_json); }; });

  bool trace = false, dot = false, condensed = false;
  auto* nf = app.add_subcommand("normal-form", "Print the surviving preference lists");
  nf->add_option("file", path, "Instance file")->required();
  auto* trace_flag = nf->add_flag("--trace", trace, "Print the single-pivot deletion trace as JSON lines");
  auto* dot_flag = nf->add_flag("--dot", dot, "Print the normal form as Graphviz DOT");
  trace_flag->excludes(dot_flag);
  nf->add_flag("--condensed", condensed, "With --dot, drop arcs implied by transitivity");
  nf->callback([&] { action = [&] { return cmd_normal_form(path, trace, dot, condensed); }; });

  int n = 0;
  std::string matching_path, method = "closure";
  auto* en = app.add_subcommand("enumerate", "List every instance whose unique stable matching is given");
  en->add_option("--n", n, "Market size")->required()->check(CLI::PositiveNumber);
  en->add_option("--matching", matching_path, "Matching file (default: w<i> f<i>)");
  en->add_option("--method", method, "closure or bruteforce")
      ->check(CLI::IsMember({"closure", "bruteforce"}));
  en->callback([&] { action = [&] { return cmd_enumerate(n, matching_path, method); }; });

  std::size_t trials = 0;
  std::uint64_t seed = 1;
  bool summary = false;
  auto* sa = app.add_subcommand("sample", "Normal-form sizes of random instances as CSV");
  sa->add_option("--n", n, "Market size")->required()->check(CLI::PositiveNumber);
  sa->add_option("--trials", trials, "Number of instances")->required();
  sa->add_option("--seed", seed, "Random seed");
  sa->add_flag("--summary", summary, "Print one summary row instead of one row per instance");
  sa->callback([&] { action = [&] { return cmd_sample(n, trials, seed, summary); }; });

  int extra_firms = 0;
  bool census = false, no_header = false;
  auto* ex = app.add_subcommand("experiment", "Estimate the share of markets with a unique stable matching");
  ex->add_option("--n", n, "Number of workers")->required()->check(CLI::PositiveNumber);
  ex->add_option("--extra-firms", extra_firms, "Firms beyond n (0 or 1)")->check(CLI::Range(0, 1));
  ex->add_option("--trials", trials, "Number of sampled markets");
  ex->add_option("--seed", seed, "Random seed");
  ex->add_flag("--census", census, "Count every balanced instance exactly (n <= 3)");
  ex->add_flag("--no-header", no_header, "Omit the CSV header");
  ex->callback([&] {
    action = [&] { return cmd_experiment(n, extra_firms, trials, seed, census, !no_header); };
  });

  bool reduced = false;
  auto* ed = app.add_subcommand("export-dot", "Print the matching digraph as Graphviz DOT");
  ed->add_option("file", path, "Instance file")->required();
  ed->add_flag("--condensed", condensed, "Drop arcs implied by transitivity");
  ed->add_flag("--normal-form", reduced, "Export the normal form instead of the full digraph");
  ed->callback([&] { action = [&] { return cmd_export_dot(path, condensed, reduced); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
