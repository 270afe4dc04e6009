#include <array>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xxz/analysis.hpp"
#include "xxz/errors.hpp"
#include "xxz/metric.hpp"
#include "xxz/oracle.hpp"
#include "xxz/spec_io.hpp"

namespace {

using nlohmann::ordered_json;

// Rows print as TSV (header + tab-separated values) or a JSON array of
// objects. Output is byte-identical across runs for identical inputs.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(const std::string& format) const {
    if (format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json obj = ordered_json::object();
        for (size_t i = 0; i < header.size() && i < row.size(); ++i)
          obj[header[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      std::cout << arr.dump(2) << "\n";
      return;
    }
    for (size_t i = 0; i < header.size(); ++i)
      std::cout << (i ? "\t" : "") << header[i];
    std::cout << "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i)
        std::cout << (i ? "\t" : "") << row[i];
      std::cout << "\n";
    }
  }
};

struct SpecArgs {
  std::string source;
  int size = 2;
  bool size_given = false;
  int n = 6, a = 2, b = 4;
};

void add_spec_options(CLI::App* cmd, SpecArgs& args) {
  cmd->add_option("spec", args.source,
                  "preset name (haah-a, haah-b, lr-gcd, trivial) or spec file path")
      ->required();
  cmd->add_option("--size", args.size, "lattice size L for haah-a/haah-b/trivial")
      ->each([&](const std::string&) { args.size_given = true; });
  cmd->add_option("--n", args.n, "lr-gcd: cyclic group order");
  cmd->add_option("--a", args.a, "lr-gcd: first offset");
  cmd->add_option("--b", args.b, "lr-gcd: second offset");
}

xxz::AnySpec load(const SpecArgs& args) {
  xxz::PresetParams p;
  p.size = args.size;
  p.n = args.n;
  p.a = args.a;
  p.b = args.b;
  std::optional<int> binding;
  if (args.size_given) binding = args.size;
  return xxz::load_spec(args.source, p, binding);
}

const xxz::Group& group_of(const xxz::AnySpec& spec) {
  if (const auto* s = std::get_if<xxz::CodeSpec>(&spec)) return s->group();
  return std::get<xxz::QuditCodeSpec>(spec).group();
}

int run_verify(const xxz::AnySpec& spec, const std::string& format) {
  xxz::CommutationReport rep;
  size_t n_gens = 0;
  if (const auto* s = std::get_if<xxz::CodeSpec>(&spec)) {
    auto set = xxz::build_all_stabilizers(*s);
    n_gens = set.gens.size();
    rep = xxz::verify_commutation(set);
  } else {
    auto set = xxz::build_qudit_stabilizers(std::get<xxz::QuditCodeSpec>(spec));
    n_gens = set.gens.size();
    rep = xxz::verify_commutation(set);
  }
  Table t;
  t.header = {"generators", "pairs_checked", "cross_pairs", "violations"};
  t.rows.push_back({std::to_string(n_gens), std::to_string(rep.total_pairs),
                    std::to_string(rep.cross_pairs_checked),
                    std::to_string(rep.violations.size())});
  t.print(format);
  if (!rep.ok()) {
    Table v;
    v.header = {"violation_i", "violation_j", "symplectic_value"};
    for (const auto& viol : rep.violations)
      v.rows.push_back({std::to_string(viol.gen_i), std::to_string(viol.gen_j),
                        std::to_string(viol.value)});
    v.print(format);
    return 1;
  }
  return 0;
}

std::vector<std::string> degeneracy_row(const xxz::DegeneracyResult& r) {
  return {std::to_string(r.n_qubits), std::to_string(r.n_generators),
          std::to_string(r.rank), std::to_string(r.logical_count),
          std::to_string(r.d)};
}

int run_degeneracy(const xxz::AnySpec& spec, const std::string& format) {
  const auto r =
      std::visit([](const auto& s) { return xxz::logical_qubit_count(s); }, spec);
  Table t;
  t.header = {"n_qubits", "generators", "rank", "k", "d"};
  t.rows.push_back(degeneracy_row(r));
  t.print(format);
  return 0;
}

int run_sweep(const SpecArgs& args, const std::string& sizes_csv,
              const std::string& tuples_csv, const std::string& format) {
  std::vector<std::pair<std::string, xxz::AnySpec>> entries;
  if (!tuples_csv.empty()) {
    std::vector<std::array<int, 3>> tuples;
    std::istringstream ss(tuples_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::array<int, 3> t{};
      if (sscanf(item.c_str(), "%d:%d:%d", &t[0], &t[1], &t[2]) != 3)
        throw xxz::parse_error("bad tuple \"" + item + "\" (expected n:a:b)");
      tuples.push_back(t);
    }
    entries = xxz::expand_sweep_tuples(tuples);
  } else if (!sizes_csv.empty()) {
    std::vector<int> sizes;
    std::istringstream ss(sizes_csv);
    std::string item;
    while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
    entries = xxz::expand_sweep_sizes(args.source, sizes);
  } else {
    throw xxz::parse_error("sweep needs --sizes or --tuples");
  }

  const auto rows = xxz::degeneracy_sweep(entries);
  Table t;
  t.header = {"label", "n_qubits", "generators", "rank", "k", "d", "status"};
  bool any_error = false;
  for (const auto& row : rows) {
    if (row.result) {
      auto cells = degeneracy_row(*row.result);
      cells.insert(cells.begin(), row.label);
      cells.push_back("ok");
      t.rows.push_back(std::move(cells));
    } else {
      any_error = true;
      t.rows.push_back({row.label, "-", "-", "-", "-", "-", "error: " + row.error});
    }
  }
  t.print(format);
  return any_error ? 1 : 0;
}

int run_locality(const xxz::AnySpec& spec, const std::string& format) {
  const auto r =
      std::visit([](const auto& s) { return xxz::locality_check(s); }, spec);
  Table t;
  t.header = {"radius"};
  t.rows.push_back({r.finite ? std::to_string(r.radius) : std::string("inf")});
  t.print(format);
  return 0;
}

xxz::MetricSpec metric_of(const xxz::AnySpec& spec) {
  return std::visit([](const auto& s) { return xxz::metric_sets_from_spec(s); }, spec);
}

int run_metric(const xxz::AnySpec& spec, const std::string& from,
               const std::string& to, const std::string& format) {
  const auto ms = metric_of(spec);
  const auto& g = *group_of(spec);
  const int gi = xxz::resolve_element(g, from);
  const int hi = xxz::resolve_element(g, to);
  const int d = xxz::word_metric(ms, gi, hi);
  Table t;
  t.header = {"from", "to", "distance"};
  t.rows.push_back({g.name(gi), g.name(hi),
                    d == xxz::kInfiniteDistance ? std::string("inf") : std::to_string(d)});
  t.print(format);
  return 0;
}

int run_ball(const xxz::AnySpec& spec, const std::string& center, int radius,
             const std::string& format) {
  const auto ms = metric_of(spec);
  const auto& g = *group_of(spec);
  const int ci = xxz::resolve_element(g, center);
  const auto elements = xxz::ball(ms, ci, radius);
  std::string joined;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i) joined += ",";
    joined += g.name(elements[i]);
  }
  Table t;
  t.header = {"center", "radius", "size", "elements"};
  t.rows.push_back({g.name(ci), std::to_string(radius),
                    std::to_string(elements.size()), joined});
  t.print(format);
  return 0;
}

int run_oracle(const xxz::AnySpec& spec, const std::string& format) {
  uint64_t dense = 0;
  xxz::DegeneracyResult deg;
  if (const auto* s = std::get_if<xxz::CodeSpec>(&spec)) {
    const auto set = xxz::build_all_stabilizers(*s);
    dense = xxz::ground_space_dim_dense(set);
    deg = xxz::logical_qubit_count(set);
  } else {
    const auto set = xxz::build_qudit_stabilizers(std::get<xxz::QuditCodeSpec>(spec));
    dense = xxz::ground_space_dim_dense(set);
    deg = xxz::logical_qubit_count(set);
  }
  uint64_t fast = 1;
  for (int i = 0; i < deg.logical_count; ++i) fast *= deg.d;
  Table t;
  t.header = {"n_qubits", "dense_dim", "k", "d", "match"};
  t.rows.push_back({std::to_string(deg.n_qubits), std::to_string(dense),
                    std::to_string(deg.logical_count), std::to_string(deg.d),
                    dense == fast ? "yes" : "NO"});
  t.print(format);
  return dense == fast ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer codes on finite groups with 2q qubits per site"};
  app.require_subcommand(1);
  std::string format = "tsv";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  SpecArgs verify_args, deg_args, sweep_args, loc_args, metric_args, ball_args,
      oracle_args, show_args;

  auto* verify = app.add_subcommand("verify", "check all commutation relations");
  add_spec_options(verify, verify_args);

  auto* degeneracy =
      app.add_subcommand("degeneracy", "logical qubit count k = N - rank");
  add_spec_options(degeneracy, deg_args);

  auto* sweep = app.add_subcommand("sweep", "degeneracy across lattice sizes");
  add_spec_options(sweep, sweep_args);
  std::string sizes_csv, tuples_csv;
  sweep->add_option("--sizes", sizes_csv, "comma-separated sizes, e.g. 2,4,8");
  sweep->add_option("--tuples", tuples_csv, "lr-gcd tuples n:a:b, comma-separated");

  auto* locality =
      app.add_subcommand("locality", "max generator support radius under the word metric");
  add_spec_options(locality, loc_args);

  auto* metric = app.add_subcommand("metric", "word-metric distance between two sites");
  add_spec_options(metric, metric_args);
  std::string from, to;
  metric->add_option("--from", from, "source element")->required();
  metric->add_option("--to", to, "target element")->required();

  auto* ballcmd = app.add_subcommand("ball", "metric ball around a site");
  add_spec_options(ballcmd, ball_args);
  std::string center = "1";
  int radius = 1;
  ballcmd->add_option("--center", center, "center element");
  ballcmd->add_option("--radius", radius, "ball radius");

  auto* oracle = app.add_subcommand(
      "oracle", "dense ground-space dimension cross-check (small specs)");
  add_spec_options(oracle, oracle_args);

  auto* show = app.add_subcommand("show", "print the parsed spec as canonical JSON");
  add_spec_options(show, show_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return run_verify(load(verify_args), format);
    if (*degeneracy) return run_degeneracy(load(deg_args), format);
    if (*sweep) return run_sweep(sweep_args, sizes_csv, tuples_csv, format);
    if (*locality) return run_locality(load(loc_args), format);
    if (*metric) return run_metric(load(metric_args), from, to, format);
    if (*ballcmd) return run_ball(load(ball_args), center, radius, format);
    if (*oracle) return run_oracle(load(oracle_args), format);
    if (*show) {
      std::cout << xxz::serialize_spec(load(show_args));
      return 0;
    }
  } catch (const xxz::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const xxz::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const xxz::analysis_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
