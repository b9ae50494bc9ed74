// Batch command line front end. Exit codes: 0 ok, 1 parse/usage error,
// 2 invariant violation (with witness), 3 enumeration cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"

#include "boolrep/corpus.hpp"
#include "boolrep/io.hpp"

namespace {

using namespace boolrep;

struct Options {
  std::string fixture;
  std::string input_path;
  std::string json_path;
  bool oracle = false;
  std::uint64_t seed = 1;
  std::size_t cap = 0;  // 0 = per-operation defaults
  int j = -1;
};

std::size_t cap_or(const Options& o, std::size_t dflt) {
  return o.cap == 0 ? dflt : o.cap;
}

std::shared_ptr<const FiniteSemigroup> load_input(const Options& o, std::string& source) {
  if (!o.fixture.empty() && !o.input_path.empty()) {
    throw InvalidInputError("give either --fixture or an input path, not both");
  }
  if (!o.fixture.empty()) {
    source = "fixture:" + o.fixture;
    return std::make_shared<const FiniteSemigroup>(load_corpus(o.fixture));
  }
  if (o.input_path.empty()) {
    throw InvalidInputError("no input: give --fixture <name> or an input path");
  }
  source = "file:" + o.input_path;
  return std::make_shared<const FiniteSemigroup>(read_semigroup_file(o.input_path));
}

void write_json_file(const Options& o, const json& j) {
  if (o.json_path.empty()) {
    return;
  }
  std::ofstream out(o.json_path);
  if (!out) {
    throw InvalidInputError("cannot write to " + o.json_path);
  }
  out << j.dump(2) << "\n";
}

void print_partition(const FiniteSemigroup& s, const Partition& p) {
  auto classes = partition_classes(p);
  std::cout << n_classes(p) << " class" << (n_classes(p) == 1 ? "" : "es") << ":\n";
  for (const auto& c : classes) {
    std::cout << "  {";
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::cout << (i ? ", " : "") << s.label(c[i]);
    }
    std::cout << "}\n";
  }
}

int require_regular(const GreenStructure& g, int j) {
  if (j < 0 || j >= g.n_j) {
    throw InvalidInputError("no such J-class: " + std::to_string(j));
  }
  if (!g.regular[static_cast<std::size_t>(j)]) {
    throw NotRegularError("J-class " + std::to_string(j) + " is not regular");
  }
  return j;
}

int cmd_validate(const Options& o) {
  std::string source;
  auto s = load_input(o, source);
  std::cout << source << ": valid, order " << s->order() << "\n";
  write_json_file(o, semigroup_to_json(*s));
  return 0;
}

int cmd_green(const Options& o) {
  std::string source;
  auto s = load_input(o, source);
  GreenStructure g = green_structure(*s);
  std::cout << source << ": " << g.n_r << " R, " << g.n_l << " L, " << g.n_j
            << " J, " << g.n_h << " H classes\n\n";
  for (int j = 0; j < g.n_j; ++j) {
    std::cout << eggbox_diagram(*s, g, j) << "\n";
  }
  write_json_file(o, green_to_json(*s, g));
  return 0;
}

int cmd_irreducibles(const Options& o) {
  std::string source;
  auto s = load_input(o, source);
  ReportOptions ropt;
  ropt.decomp_cap = cap_or(o, 20);
  ropt.span_cap = cap_or(o, std::size_t{1} << 14);
  ropt.endo_cap = cap_or(o, std::size_t{1} << 20);
  json report = analysis_report(s, source, ropt);
  std::cout << render_report(report);
  write_json_file(o, {{"schema", report.at("schema")},
                      {"input", report.at("input")},
                      {"irreducibles", report.at("irreducibles")}});
  return 0;
}

int cmd_aggm(const Options& o) {
  std::string source;
  auto s = load_input(o, source);
  GreenStructure g = green_structure(*s);
  int j = require_regular(g, o.j);
  AggmResult a = aggm(s, g, j);
  GgmReport gr = ggm_report(a.image);
  std::cout << source << ", J" << j << ": image order " << a.image.order()
            << ", ggm " << (gr.is_ggm ? "yes" : "no") << ", aperiodic "
            << (gr.is_ggm && gr.aperiodic ? "yes" : "no") << "\n";
  std::cout << "quotient map:";
  for (std::size_t i = 0; i < s->order(); ++i) {
    std::cout << " " << a.quotient_map[i];
  }
  std::cout << "\n";
  write_json_file(o, {{"j_class", j},
                      {"image", semigroup_to_json(a.image)},
                      {"quotient_map", a.quotient_map},
                      {"is_ggm", gr.is_ggm},
                      {"aperiodic", gr.is_ggm && gr.aperiodic}});
  return 0;
}

int cmd_characters(const Options& o) {
  std::string source;
  auto s = load_input(o, source);
  GreenStructure g = green_structure(*s);
  int j = require_regular(g, o.j);
  IrreducibleModule im = irreducible_module(s, g, j);
  CharacterTable chi = min_character(im.module, cap_or(o, 20));
  SchutzCheck sc = schutz_theorem_check(s, g, j);
  std::cout << source << ", module of J" << j << " (size " << im.module.size()
            << "):\n";
  std::cout << "  element      min  psi  schutzenberger\n";
  for (std::size_t i = 0; i < s->order(); ++i) {
    std::cout << "  " << s->label(static_cast<int>(i)) << "\t" << chi.values[i]
              << "\t" << sc.psi.values[i] << "\t" << sc.lifted.values[i] << "\n";
  }
  std::cout << "  psi == lifted schutzenberger: " << (sc.match ? "yes" : "NO") << "\n";
  json out;
  out["j_class"] = j;
  out["min_character"] = character_to_json(*s, chi);
  out["psi_rows"] = character_to_json(*s, sc.psi);
  out["schutzenberger_lifted"] = character_to_json(*s, sc.lifted);
  out["characters_match"] = sc.match;
  MatrixRep rep = matrix_rep_of(im.module);
  if (rep.multiplicative) {
    out["chi_matrix"] = character_to_json(*s, chi_matrix(rep));
  }
  write_json_file(o, out);
  return sc.match ? 0 : 2;
}

int cmd_duality(const Options& o) {
  std::string source;
  auto s = load_input(o, source);
  GreenStructure g = green_structure(*s);
  json out = json::array();
  bool all_ok = true;
  for (int j = 0; j < g.n_j; ++j) {
    if (!g.regular[static_cast<std::size_t>(j)]) {
      continue;
    }
    IrreducibleModule im = irreducible_module(s, g, j);
    bool minimal = is_minimal(im.module);
    bool simple = is_simple(im.module);
    DualModule dual = dualize(im.module);
    bool dual_minimal = is_minimal(dual.module);
    bool dual_simple = is_simple(dual.module);
    DualModule dd = dualize(dual.module);
    bool involutive = module_isomorphic(dd.module, im.module);
    bool ok = (minimal == dual_simple) && (simple == dual_minimal) && involutive;
    all_ok = all_ok && ok;
    std::cout << "J" << j << ": minimal " << (minimal ? "yes" : "no") << ", simple "
              << (simple ? "yes" : "no") << "; dual minimal "
              << (dual_minimal ? "yes" : "no") << ", dual simple "
              << (dual_simple ? "yes" : "no") << "; double dual isomorphic "
              << (involutive ? "yes" : "no") << " -> "
              << (ok ? "ok" : "FAILED") << "\n";
    out.push_back({{"j_class", j},
                   {"minimal", minimal},
                   {"simple", simple},
                   {"dual_minimal", dual_minimal},
                   {"dual_simple", dual_simple},
                   {"double_dual_isomorphic", involutive},
                   {"ok", ok}});
  }
  write_json_file(o, out);
  if (!all_ok) {
    std::cerr << "duality check failed\n";
    return 2;
  }
  return 0;
}

int cmd_density(const Options& o) {
  std::string source;
  auto s = load_input(o, source);
  GreenStructure g = green_structure(*s);
  json out = json::array();
  for (int j = 0; j < g.n_j; ++j) {
    if (!g.regular[static_cast<std::size_t>(j)]) {
      continue;
    }
    IrreducibleModule im = irreducible_module(s, g, j);
    DensityReport d = density_report(im.module, true, cap_or(o, std::size_t{1} << 14),
                                     cap_or(o, std::size_t{1} << 20));
    std::cout << "J" << j << ": module size " << im.module.size() << ", span "
              << d.span_size << ", dense " << (d.dense ? "yes" : "no");
    if (d.full_end_known) {
      std::cout << ", |End| " << d.end_size << ", spans all of End "
                << (d.spans_full_end ? "yes" : "no");
    }
    std::cout << "\n";
    out.push_back({{"j_class", j},
                   {"module_size", im.module.size()},
                   {"span_size", d.span_size},
                   {"dense", d.dense},
                   {"full_end_known", d.full_end_known},
                   {"spans_full_end", d.spans_full_end},
                   {"end_size", d.end_size}});
  }
  write_json_file(o, out);
  return 0;
}

int cmd_jprime(const Options& o) {
  std::string source;
  auto s = load_input(o, source);
  GreenStructure g = green_structure(*s);
  Partition kernel = direct_sum_kernel(*s, g);
  std::cout << source << ": direct sum kernel has ";
  print_partition(*s, kernel);
  json out;
  out["direct_sum_kernel"] = partition_to_json(kernel);
  int rc = 0;
  if (o.oracle) {
    Partition best = largest_jprime_oracle(*s, g, cap_or(o, 7));
    bool agrees = best == kernel;
    std::cout << "largest J'-congruence (brute force) "
              << (agrees ? "equals" : "DIFFERS FROM") << " the kernel\n";
    out["oracle"] = {{"agrees", agrees}, {"largest_jprime", partition_to_json(best)}};
    if (!agrees) {
      std::cerr << "largest J'-congruence disagrees with the direct sum kernel\n";
      rc = 2;
    }
  }
  write_json_file(o, out);
  return rc;
}

int cmd_report(const Options& o) {
  std::string source;
  auto s = load_input(o, source);
  ReportOptions ropt;
  ropt.oracles = o.oracle;
  ropt.seed = o.seed;
  ropt.jprime_cap = cap_or(o, 7);
  ropt.module_cap = cap_or(o, 10);
  ropt.decomp_cap = cap_or(o, 20);
  ropt.span_cap = cap_or(o, std::size_t{1} << 14);
  ropt.endo_cap = cap_or(o, std::size_t{1} << 20);
  json report = analysis_report(s, source, ropt);
  std::cout << render_report(report);
  write_json_file(o, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"irreducible boolean representations of finite semigroups"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("BOOLREP_CAP")) {
    opt.cap = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
  }

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("input", opt.input_path, "input JSON file (schema A or B)");
    sub->add_option("--fixture", opt.fixture, "bundled fixture name");
    sub->add_option("--json", opt.json_path, "also write JSON output here");
    sub->add_option("--cap", opt.cap, "override enumeration size caps");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and validate the input");
  CLI::App* green = app.add_subcommand("green", "Green's relations and eggboxes");
  CLI::App* irr = app.add_subcommand("irreducibles", "one module per regular J-class");
  CLI::App* aggm_cmd = app.add_subcommand("aggm", "action image on one module");
  CLI::App* chars = app.add_subcommand("characters", "character tables of one module");
  CLI::App* dual = app.add_subcommand("duality-check", "minimal/simple duality verdicts");
  CLI::App* density = app.add_subcommand("density", "span of the image inside End");
  CLI::App* jprime = app.add_subcommand("jprime", "largest congruence separating regular J-classes");
  CLI::App* report = app.add_subcommand("report", "everything");

  for (CLI::App* sub : {validate, green, irr, aggm_cmd, chars, dual, density, jprime, report}) {
    add_common(sub);
  }
  aggm_cmd->add_option("--j", opt.j, "J-class id")->required();
  chars->add_option("--module", opt.j, "J-class id of the module")->required();
  jprime->add_flag("--oracle", opt.oracle, "cross-check against brute force");
  report->add_flag("--oracle", opt.oracle, "enable brute-force cross-checks");
  report->add_option("--seed", opt.seed, "seed for the relabeling oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (green->parsed()) return cmd_green(opt);
    if (irr->parsed()) return cmd_irreducibles(opt);
    if (aggm_cmd->parsed()) return cmd_aggm(opt);
    if (chars->parsed()) return cmd_characters(opt);
    if (dual->parsed()) return cmd_duality(opt);
    if (density->parsed()) return cmd_density(opt);
    if (jprime->parsed()) return cmd_jprime(opt);
    if (report->parsed()) return cmd_report(opt);
    std::cerr << "no command\n";
    return 1;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const NonAssociativeError& e) {
    std::cerr << "invalid semigroup: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInputError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  }
}
