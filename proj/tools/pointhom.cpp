#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pointhom/autgroup.hpp"
#include "pointhom/catalog.hpp"
#include "pointhom/errors.hpp"
#include "pointhom/homogeneity.hpp"
#include "pointhom/oracle.hpp"

using namespace pointhom;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTableFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitAmbiguous = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* termination_name(TerminationRule rule) {
  switch (rule) {
    case TerminationRule::failed_at_m: return "failed_at_m";
    case TerminationRule::reached_affine_rank: return "reached_affine_rank";
    case TerminationRule::reached_k: return "reached_k";
    case TerminationRule::distinct_distance_shortcut: return "distinct_distance_shortcut";
  }
  return "?";
}

struct SourceOptions {
  std::string catalog_spec;
  std::string points_file;
  std::string matrix_file;  // JSON with exact scalar entries
  std::string csv_file;     // floats
  double tol = 1e-9;
  bool float_mode = false;
  bool allow_expensive = false;
  int threads = 1;  // accepted for interface stability; execution is single-threaded
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("--catalog", src.catalog_spec, "catalog instance, e.g. cube(4) or dodecahedron");
  cmd->add_option("--points-file", src.points_file, "JSON point-set file");
  cmd->add_option("--matrix-file", src.matrix_file, "JSON squared-distance matrix file");
  cmd->add_option("--csv-file", src.csv_file, "CSV squared-distance matrix (float path)");
  cmd->add_option("--tol", src.tol, "relative clustering tolerance for float input");
  cmd->add_flag("--float", src.float_mode, "force the float clustering path for exact input");
  cmd->add_flag("--allow-expensive", src.allow_expensive, "permit 600cell / 120cell");
  cmd->add_option("--threads", src.threads, "worker threads (results identical for any N)")
      ->check(CLI::PositiveNumber);
}

struct Loaded {
  std::string name;
  LabeledDistanceMatrix ldm;
  std::optional<PointSet> points;
  ExpectedFacts expected;
};

std::vector<std::vector<double>> float_squared_distances(const PointSet& ps) {
  const auto exact = squared_distances(ps);
  std::vector<std::vector<double>> m(ps.count(), std::vector<double>(ps.count(), 0.0));
  for (int i = 0; i < ps.count(); ++i)
    for (int j = 0; j < ps.count(); ++j) m[i][j] = exact[i][j].to_double();
  return m;
}

Loaded load_source(const SourceOptions& src) {
  const int sources = !src.catalog_spec.empty() + !src.points_file.empty() +
                      !src.matrix_file.empty() + !src.csv_file.empty();
  if (sources != 1)
    throw ParamError("exactly one of --catalog / --points-file / --matrix-file / --csv-file");
  Loaded out;
  if (!src.catalog_spec.empty()) {
    auto inst = generate_spec(src.catalog_spec);
    if (inst.expensive && !src.allow_expensive)
      throw ParamError(inst.name + " is expensive; pass --allow-expensive");
    out.name = inst.name;
    out.expected = inst.expected;
    out.points = inst.points;
    out.ldm = inst.distance_matrix();
  } else if (!src.points_file.empty()) {
    out.points = pointset_from_json(read_file(src.points_file));
    out.name = out.points->name;
    out.ldm = label_exact(squared_distances(*out.points));
    out.ldm.name = out.name;
    if (out.points->declared_dimension) out.ldm.dimension_hint = out.points->declared_dimension;
  } else if (!src.matrix_file.empty()) {
    out.ldm = distance_matrix_from_json(read_file(src.matrix_file));
    out.name = out.ldm.name;
  } else {
    out.ldm = distance_matrix_from_csv(read_file(src.csv_file), src.tol);
    out.name = src.csv_file;
    out.ldm.name = out.name;
  }
  if (src.float_mode && out.points) {
    auto relabeled = label_float(float_squared_distances(*out.points), src.tol);
    relabeled.name = out.name;
    relabeled.dimension_hint = out.ldm.dimension_hint;
    out.ldm = std::move(relabeled);
  }
  return out;
}

struct Analysis {
  Loaded source;
  PermGroup group;
  DegreeReport degree;
  std::vector<int> shells;
  double group_seconds = 0.0;
  // set when --max-m cut the cap below the derived dimension: an all-pass
  // run then certifies only a lower bound, not the infinite degree
  bool truncated = false;
};

std::string degree_text(const Analysis& a) {
  if (!a.degree.infinite) return std::to_string(a.degree.degree);
  return a.truncated ? ">=" + std::to_string(a.degree.cap) : "inf";
}

Analysis analyze(const SourceOptions& src, std::optional<int> dimension,
                 std::optional<int> max_m) {
  Analysis a;
  a.source = load_source(src);
  const auto t0 = std::chrono::steady_clock::now();
  a.group = automorphism_group(a.source.ldm);
  a.group_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!dimension && a.source.points) dimension = affine_rank(*a.source.points);
  if (max_m && (!dimension || *max_m < *dimension)) {
    a.truncated = true;
    dimension = *max_m;
  }
  a.degree = homogeneity_degree(a.source.ldm, a.group, dimension);
  if (a.source.ldm.k > 0) a.shells = sphere_partition(a.source.ldm, 0).shell_sizes();
  return a;
}

json analysis_to_json(const Analysis& a) {
  json verdicts = json::array();
  for (const auto& v : a.degree.verdicts) {
    json jv{{"m", v.m}, {"holds", v.holds}};
    if (v.witness) jv["witness"] = json::array({v.witness->first, v.witness->second});
    verdicts.push_back(std::move(jv));
  }
  json shells = json::array();
  if (a.source.ldm.k > 0)
    for (const auto& [label, members] : sphere_partition(a.source.ldm, 0).shells)
      shells.push_back({{"label", label},
                        {"size", static_cast<int>(members.size())},
                        {"squared_value", a.source.ldm.has_exact_values()
                                              ? a.source.ldm.exact_values[label].str()
                                              : std::to_string(a.source.ldm.float_values[label])}});
  return json{{"instance", a.source.name},
              {"k", a.source.ldm.k},
              {"n", a.degree.dimension},
              {"group_order", a.group.order_string()},
              {"shells", shells},
              {"verdicts", verdicts},
              {"degree", a.degree.infinite ? json(degree_text(a)) : json(a.degree.degree)},
              {"termination", termination_name(a.degree.termination)},
              {"wall_times",
               {{"group", a.group_seconds}, {"degree", a.degree.wall_seconds}}}};
}

void print_analysis_text(const Analysis& a) {
  std::cout << "instance:    " << a.source.name << "\n";
  std::cout << "points:      " << a.source.ldm.k << "\n";
  std::cout << "dimension:   " << a.degree.dimension << "\n";
  std::cout << "group order: " << a.group.order_string() << "\n";
  std::cout << "classes:     " << a.source.ldm.num_labels() << "\n";
  std::cout << "shells:     ";
  for (int s : a.shells) std::cout << " " << s;
  std::cout << "\n";
  for (const auto& v : a.degree.verdicts) {
    std::cout << "m=" << v.m << ": " << (v.holds ? "holds" : "fails");
    if (v.witness) {
      std::cout << "  witness (";
      for (int x : v.witness->first) std::cout << " " << x;
      std::cout << " ) vs (";
      for (int x : v.witness->second) std::cout << " " << x;
      std::cout << " )";
    }
    std::cout << "\n";
  }
  std::cout << "degree:      " << degree_text(a) << "\n";
  std::cout << "termination: " << termination_name(a.degree.termination) << "\n";
}

/// Expected-vs-computed comparison used by `table`; returns human-readable
/// mismatches, empty when the row passes.
std::vector<std::string> check_expected(const ExpectedFacts& expected, const Analysis& a) {
  std::vector<std::string> bad;
  const auto& deg = a.degree;
  switch (expected.degree.kind) {
    case ExpectedDegree::none:
      break;
    case ExpectedDegree::finite:
      if (deg.infinite || deg.degree != expected.degree.value)
        bad.push_back("degree: expected " + std::to_string(expected.degree.value) + ", computed " +
                      (deg.infinite ? "inf" : std::to_string(deg.degree)));
      break;
    case ExpectedDegree::infinite:
      if (!deg.infinite)
        bad.push_back("degree: expected inf, computed " + std::to_string(deg.degree));
      break;
    case ExpectedDegree::at_least:
      if (!deg.infinite && deg.degree < expected.degree.value)
        bad.push_back("degree: expected >= " + std::to_string(expected.degree.value) +
                      ", computed " + std::to_string(deg.degree));
      break;
  }
  if (expected.group_order && a.group.order() != BigInt(*expected.group_order))
    bad.push_back("group order: expected " + std::to_string(*expected.group_order) +
                  ", computed " + a.group.order_string());
  if (expected.group_order_at_least && a.group.order() < BigInt(*expected.group_order_at_least))
    bad.push_back("group order: expected >= " + std::to_string(*expected.group_order_at_least) +
                  ", computed " + a.group.order_string());
  if (!expected.shell_sizes.empty() && a.shells != expected.shell_sizes)
    bad.push_back("shell sizes differ");
  if (expected.num_classes && a.source.ldm.num_labels() != *expected.num_classes)
    bad.push_back("class count: expected " + std::to_string(*expected.num_classes) +
                  ", computed " + std::to_string(a.source.ldm.num_labels()));
  if (expected.vertex_count && a.source.ldm.k != *expected.vertex_count)
    bad.push_back("vertex count differs");
  return bad;
}

std::string degree_string(const ExpectedDegree& d) {
  switch (d.kind) {
    case ExpectedDegree::finite: return std::to_string(d.value);
    case ExpectedDegree::infinite: return "inf";
    case ExpectedDegree::at_least: return ">=" + std::to_string(d.value);
    default: return "?";
  }
}

int run_table(bool emit_json) {
  bool all_pass = true;
  json rows = json::array();
  for (const std::string& spec : degree_table_instances()) {
    SourceOptions src;
    src.catalog_spec = spec;
    Analysis a = analyze(src, std::nullopt, std::nullopt);
    const auto bad = check_expected(a.source.expected, a);
    const bool pass = bad.empty();
    all_pass = all_pass && pass;
    if (emit_json) {
      rows.push_back({{"instance", a.source.name},
                      {"expected_degree", degree_string(a.source.expected.degree)},
                      {"computed_degree",
                       a.degree.infinite ? json("inf") : json(a.degree.degree)},
                      {"group_order", a.group.order_string()},
                      {"pass", pass},
                      {"mismatches", bad}});
    } else {
      std::cout << a.source.name << ": expected degree "
                << degree_string(a.source.expected.degree) << ", computed "
                << (a.degree.infinite ? "inf" : std::to_string(a.degree.degree)) << ", "
                << (pass ? "PASS" : "FAIL") << "\n";
      for (const auto& b : bad) std::cout << "    " << b << "\n";
    }
  }
  if (emit_json) std::cout << json{{"rows", rows}, {"all_pass", all_pass}}.dump(2) << "\n";
  return all_pass ? kExitOk : kExitTableFailure;
}

int run_oracle_check(const Analysis& a) {
  if (a.source.ldm.k > 12) {
    std::cerr << "oracle check skipped: k > 12\n";
    return kExitOk;
  }
  const auto auts = brute_automorphisms(a.source.ldm);
  if (BigInt(auts.size()) != a.group.order()) {
    std::cerr << "oracle mismatch: brute |Aut| = " << auts.size() << ", BSGS order = "
              << a.group.order_string() << "\n";
    return kExitTableFailure;
  }
  HomogeneityEngine engine(a.source.ldm, a.group);
  for (int m = 1; m <= 4; ++m) {
    if (engine.check(m).holds != brute_m_homog(a.source.ldm, m)) {
      std::cerr << "oracle mismatch at m = " << m << "\n";
      return kExitTableFailure;
    }
  }
  std::cout << "oracle check: ok (order and m <= 4 verdicts agree)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isometry groups and point homogeneity degrees of finite metric spaces"};
  app.require_subcommand(1);

  auto* cmd_catalog = app.add_subcommand("catalog", "list catalog families");

  SourceOptions src;
  std::optional<int> dimension;
  std::optional<int> max_m;
  bool emit_json = false;
  bool oracle_check = false;
  auto* cmd_analyze = app.add_subcommand("analyze", "full analysis of one instance");
  add_source_options(cmd_analyze, src);
  cmd_analyze->add_option("--dimension", dimension, "override the affine-rank degree cap");
  cmd_analyze->add_option("--max-m", max_m, "test homogeneity only up to this m");
  cmd_analyze->add_flag("--json", emit_json, "emit the JSON report");
  cmd_analyze->add_flag("--oracle-check", oracle_check,
                        "cross-check with the brute-force oracle (k <= 12)");

  bool table_json = false;
  auto* cmd_table = app.add_subcommand("table", "expected-vs-computed degree table");
  cmd_table->add_flag("--json", table_json, "emit the table as JSON");

  SourceOptions group_src;
  bool group_gens = false;
  auto* cmd_group = app.add_subcommand("group", "isometry group of one instance");
  add_source_options(cmd_group, group_src);
  cmd_group->add_flag("--generators", group_gens, "print the generators");

  SourceOptions wit_src;
  std::optional<int> wit_dimension;
  auto* cmd_witness = app.add_subcommand("witness", "first failing m and its witness tuples");
  add_source_options(cmd_witness, wit_src);
  cmd_witness->add_option("--dimension", wit_dimension, "override the affine-rank degree cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_catalog->parsed()) {
      for (const auto& fam : catalog_list()) {
        std::cout << fam.family;
        if (!fam.params.empty()) std::cout << "  [" << fam.params << "]";
        std::cout << "  vertices: " << fam.vertex_count << "\n    " << fam.notes << "\n";
      }
      return kExitOk;
    }
    if (cmd_analyze->parsed()) {
      Analysis a = analyze(src, dimension, max_m);
      if (emit_json)
        std::cout << analysis_to_json(a).dump(2) << "\n";
      else
        print_analysis_text(a);
      if (oracle_check) return run_oracle_check(a);
      return kExitOk;
    }
    if (cmd_table->parsed()) return run_table(table_json);
    if (cmd_group->parsed()) {
      Loaded loaded = load_source(group_src);
      PermGroup g = automorphism_group(loaded.ldm);
      std::cout << "instance:    " << loaded.name << "\n";
      std::cout << "group order: " << g.order_string() << "\n";
      std::cout << "generators:  " << g.generators().size() << "\n";
      std::cout << "transitive:  " << (g.is_transitive() ? "yes" : "no") << "\n";
      if (group_gens)
        for (const auto& p : g.generators()) {
          for (int i = 0; i < p.degree(); ++i) std::cout << (i ? " " : "") << p(i);
          std::cout << "\n";
        }
      return kExitOk;
    }
    if (cmd_witness->parsed()) {
      Analysis a = analyze(wit_src, wit_dimension, std::nullopt);
      if (a.degree.infinite) {
        std::cout << a.source.name << ": degree inf, no witness exists\n";
        return kExitOk;
      }
      const auto& v = a.degree.verdicts.back();
      std::cout << a.source.name << ": fails at m = " << v.m << "\n";
      if (v.witness) {
        auto show = [](const std::vector<int>& t) {
          std::string s = "(";
          for (std::size_t i = 0; i < t.size(); ++i)
            s += (i ? "," : "") + std::to_string(t[i]);
          return s + ")";
        };
        std::cout << "witness: " << show(v.witness->first) << " vs " << show(v.witness->second)
                  << "\n";
      } else {
        std::cout << "not transitive: no witness tuples\n";
      }
      return kExitOk;
    }
  } catch (const AmbiguousClustering& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAmbiguous;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
