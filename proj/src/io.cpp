#include "boolrep/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace boolrep {

FiniteSemigroup semigroup_from_json(const json& j) {
  if (!j.is_object()) {
    throw InvalidInputError("input is not a JSON object");
  }
  if (j.contains("table")) {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order")) {
      auto order = j.at("order").get<std::size_t>();
      if (order != table.size()) {
        throw InvalidInputError("declared order " + std::to_string(order) +
                                " does not match table size " +
                                std::to_string(table.size()));
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    }
    return FiniteSemigroup::from_table(std::move(table), std::move(labels));
  }
  if (j.contains("generators")) {
    auto degree = j.at("degree").get<std::size_t>();
    auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
    return FiniteSemigroup::from_transformations(degree, gens);
  }
  throw InvalidInputError("input object has neither \"table\" nor \"generators\"");
}

FiniteSemigroup read_semigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("cannot open input file: " + path);
  }
  json j = json::parse(in);
  return semigroup_from_json(j);
}

json semigroup_to_json(const FiniteSemigroup& s) {
  const int n = static_cast<int>(s.order());
  json table = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) {
      row.push_back(s.product(a, b));
    }
    table.push_back(std::move(row));
  }
  json out;
  out["order"] = s.order();
  out["table"] = std::move(table);
  if (!s.labels().empty()) {
    out["labels"] = s.labels();
  }
  return out;
}

json partition_to_json(const Partition& p) {
  json out;
  out["n_classes"] = n_classes(p);
  out["class_of"] = p;
  out["classes"] = partition_classes(p);
  return out;
}

json matrix_to_json(const BoolMatrix& m) {
  json out;
  out["shape"] = {m.n_rows(), m.n_cols()};
  out["rows"] = m.to_strings();
  return out;
}

json lattice_to_json(const SpanLattice& l) {
  json elems = json::array();
  for (const BoolVec& v : l.elements()) {
    elems.push_back(v.to_string());
  }
  json out;
  out["size"] = l.size();
  out["width"] = l.width();
  out["elements"] = std::move(elems);
  out["sji"] = l.sji();
  out["free"] = l.is_free();
  out["distributive"] = l.is_distributive();
  return out;
}

json module_to_json(const BModule& m) {
  json out;
  out["carrier"] = lattice_to_json(m.carrier);
  out["action"] = m.action;
  return out;
}

namespace {

json flags_to_json(const std::vector<char>& flags) {
  json out = json::array();
  for (char c : flags) {
    out.push_back(c != 0);
  }
  return out;
}

}  // namespace

json green_to_json(const FiniteSemigroup& s, const GreenStructure& g) {
  json out;
  out["order"] = g.order;
  out["n_r"] = g.n_r;
  out["n_l"] = g.n_l;
  out["n_j"] = g.n_j;
  out["n_h"] = g.n_h;
  out["r_class"] = g.r_class;
  out["l_class"] = g.l_class;
  out["j_class"] = g.j_class;
  out["h_class"] = g.h_class;
  out["j_members"] = g.j_members;
  out["regular"] = flags_to_json(g.regular);
  json order_rows = json::array();
  for (int a = 0; a < g.n_j; ++a) {
    std::string row(static_cast<std::size_t>(g.n_j), '0');
    for (int b = 0; b < g.n_j; ++b) {
      if (g.j_below(a, b)) {
        row[static_cast<std::size_t>(b)] = '1';
      }
    }
    order_rows.push_back(std::move(row));
  }
  out["j_order"] = std::move(order_rows);
  out["idempotents"] = g.idempotents;
  out["transversal"] = g.transversal;
  json groups = json::array();
  for (const MaximalSubgroup& h : g.subgroups) {
    groups.push_back({{"j_class", h.j_class},
                      {"idempotent", h.idempotent},
                      {"order", h.group.order()}});
  }
  out["subgroups"] = std::move(groups);
  json boxes = json::array();
  for (int j = 0; j < g.n_j; ++j) {
    boxes.push_back(eggbox_diagram(s, g, j));
  }
  out["eggbox"] = std::move(boxes);
  return out;
}

json character_to_json(const FiniteSemigroup& s, const CharacterTable& t) {
  json by_label = json::array();
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    by_label.push_back({{"element", s.label(static_cast<int>(i))},
                        {"value", t.values[i]}});
  }
  json out;
  out["values"] = t.values;
  out["by_element"] = std::move(by_label);
  return out;
}

std::string eggbox_diagram(const FiniteSemigroup& s, const GreenStructure& g, int j) {
  std::vector<int> rs, ls;
  for (int m : g.j_members[static_cast<std::size_t>(j)]) {
    rs.push_back(g.r_class[static_cast<std::size_t>(m)]);
    ls.push_back(g.l_class[static_cast<std::size_t>(m)]);
  }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());

  auto pos = [](const std::vector<int>& v, int x) {
    return static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };

  std::vector<std::vector<int>> count(rs.size(), std::vector<int>(ls.size(), 0));
  std::vector<std::vector<char>> star(rs.size(), std::vector<char>(ls.size(), 0));
  for (int m : g.j_members[static_cast<std::size_t>(j)]) {
    std::size_t r = pos(rs, g.r_class[static_cast<std::size_t>(m)]);
    std::size_t l = pos(ls, g.l_class[static_cast<std::size_t>(m)]);
    ++count[r][l];
    if (s.is_idempotent(m)) {
      star[r][l] = 1;
    }
  }

  std::size_t w = 1;
  std::vector<std::vector<std::string>> cell(rs.size(), std::vector<std::string>(ls.size()));
  for (std::size_t r = 0; r < rs.size(); ++r) {
    for (std::size_t l = 0; l < ls.size(); ++l) {
      cell[r][l] = std::to_string(count[r][l]) + (star[r][l] ? "*" : "");
      w = std::max(w, cell[r][l].size());
    }
  }

  std::ostringstream out;
  out << "J" << j << (g.regular[static_cast<std::size_t>(j)] ? " (regular)" : "")
      << ": " << g.j_members[static_cast<std::size_t>(j)].size() << " element"
      << (g.j_members[static_cast<std::size_t>(j)].size() == 1 ? "" : "s") << ", "
      << rs.size() << " x " << ls.size() << "\n";
  std::string rule = "+";
  for (std::size_t l = 0; l < ls.size(); ++l) {
    rule += std::string(w + 2, '-') + "+";
  }
  out << rule << "\n";
  for (std::size_t r = 0; r < rs.size(); ++r) {
    out << "|";
    for (std::size_t l = 0; l < ls.size(); ++l) {
      std::string c = cell[r][l];
      c += std::string(w - c.size(), ' ');
      out << " " << c << " |";
    }
    out << "\n" << rule << "\n";
  }
  return out.str();
}

namespace {

json density_to_json(const DensityReport& d) {
  return {{"span_size", d.span_size},
          {"dense", d.dense},
          {"full_end_known", d.full_end_known},
          {"spans_full_end", d.spans_full_end},
          {"end_size", d.end_size}};
}

// Invariants that must survive a relabeling of the elements.
json relabel_signature(const std::shared_ptr<const FiniteSemigroup>& s) {
  GreenStructure g = green_structure(*s);
  std::vector<std::size_t> j_sizes;
  for (const auto& members : g.j_members) {
    j_sizes.push_back(members.size());
  }
  std::sort(j_sizes.begin(), j_sizes.end());
  std::vector<std::size_t> module_sizes;
  for (int j = 0; j < g.n_j; ++j) {
    if (g.regular[static_cast<std::size_t>(j)]) {
      module_sizes.push_back(irreducible_module(s, g, j).module.size());
    }
  }
  std::sort(module_sizes.begin(), module_sizes.end());
  return {{"n_r", g.n_r},
          {"n_l", g.n_l},
          {"n_j", g.n_j},
          {"n_h", g.n_h},
          {"n_idempotents", g.idempotents.size()},
          {"j_sizes", j_sizes},
          {"module_sizes", module_sizes},
          {"kernel_classes", n_classes(direct_sum_kernel(*s, g))}};
}

}  // namespace

json analysis_report(const std::shared_ptr<const FiniteSemigroup>& s,
                     const std::string& source, const ReportOptions& opt) {
  const FiniteSemigroup& sg = *s;
  GreenStructure g = green_structure(sg);

  json out;
  out["schema"] = "boolrep-report-1";
  out["input"] = {{"source", source}, {"order", sg.order()}};
  out["green"] = green_to_json(sg, g);

  std::vector<IrreducibleModule> built;
  json irr = json::array();
  for (int j = 0; j < g.n_j; ++j) {
    if (!g.regular[static_cast<std::size_t>(j)]) {
      continue;
    }
    IrreducibleModule im = irreducible_module(s, g, j);
    json rec;
    rec["j_class"] = j;
    rec["members"] = g.j_members[static_cast<std::size_t>(j)];
    rec["sandwich"] = matrix_to_json(im.sandwich);
    rec["module_size"] = im.module.size();
    rec["free"] = im.module.carrier.is_free();
    rec["identity_submatrix"] = free_row_span_test(im.sandwich);
    rec["faithful"] = faithful_action(im.module);

    AggmResult a = aggm(s, g, j);
    GgmReport gr = ggm_report(a.image);
    rec["image_order"] = a.image.order();
    rec["image_is_ggm"] = gr.is_ggm;
    rec["image_aperiodic"] = gr.is_ggm && gr.aperiodic;

    rec["density"] =
        density_to_json(density_report(im.module, true, opt.span_cap, opt.endo_cap));

    MatrixRep rep = matrix_rep_of(im.module);
    rec["rep_multiplicative"] = rep.multiplicative;
    if (rep.multiplicative) {
      rec["chi_matrix"] = chi_matrix(rep).values;
    }
    if (rep.canonical_basis) {
      rec["unambiguous"] = is_unambiguous(rep);
    }
    rec["min_character"] = min_character(im.module, opt.decomp_cap).values;
    SchutzCheck sc = schutz_theorem_check(s, g, j);
    rec["psi_rows"] = sc.psi.values;
    rec["schutzenberger_lifted"] = sc.lifted.values;
    rec["characters_match"] = sc.match;

    irr.push_back(std::move(rec));
    built.push_back(std::move(im));
  }
  out["irreducibles"] = std::move(irr);

  Partition kernel = direct_sum_kernel(sg, g);
  out["direct_sum_kernel"] = partition_to_json(kernel);

  if (opt.oracles) {
    json oracles;
    oracles["seed"] = opt.seed;

    // Random relabeling must leave every structural invariant alone.
    const std::size_t n = sg.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(opt.seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> permuted(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        permuted[static_cast<std::size_t>(perm[a])][static_cast<std::size_t>(perm[b])] =
            perm[static_cast<std::size_t>(
                sg.product(static_cast<int>(a), static_cast<int>(b)))];
      }
    }
    auto relabeled = std::make_shared<const FiniteSemigroup>(
        FiniteSemigroup::from_table(std::move(permuted)));
    json sig_before = relabel_signature(s);
    json sig_after = relabel_signature(relabeled);
    oracles["relabel"] = {{"perm", perm},
                          {"signature", sig_before},
                          {"ok", sig_before == sig_after}};

    if (sg.order() <= opt.jprime_cap) {
      Partition best = largest_jprime_oracle(sg, g, opt.jprime_cap);
      oracles["jprime"] = {{"checked", true}, {"agrees", best == kernel}};
    } else {
      oracles["jprime"] = {{"checked", false}};
    }

    json mods = json::array();
    for (const IrreducibleModule& im : built) {
      if (im.module.size() <= opt.module_cap) {
        bool minimal_agrees =
            is_minimal(im.module) == is_minimal_enum(im.module, opt.module_cap);
        bool simple_agrees =
            is_simple(im.module) == is_simple_enum(im.module, opt.module_cap);
        mods.push_back({{"j_class", im.j_class},
                        {"checked", true},
                        {"minimal_agrees", minimal_agrees},
                        {"simple_agrees", simple_agrees},
                        {"readings_agree", minimality_readings_agree(im.module)}});
      } else {
        mods.push_back({{"j_class", im.j_class}, {"checked", false}});
      }
    }
    oracles["modules"] = std::move(mods);
    out["oracles"] = std::move(oracles);
  }

  return out;
}

namespace {

std::string yes_no(const json& v) { return v.get<bool>() ? "yes" : "no"; }

std::string int_list(const json& v) {
  std::string out = "[";
  bool first = true;
  for (const auto& x : v) {
    if (!first) {
      out += ", ";
    }
    first = false;
    out += x.dump();
  }
  return out + "]";
}

}  // namespace

std::string render_report(const json& report) {
  std::ostringstream out;
  const json& input = report.at("input");
  out << "input: " << input.at("source").get<std::string>() << " (order "
      << input.at("order").get<std::size_t>() << ")\n";

  const json& g = report.at("green");
  out << "green: " << g.at("n_r").get<int>() << " R, " << g.at("n_l").get<int>()
      << " L, " << g.at("n_j").get<int>() << " J, " << g.at("n_h").get<int>()
      << " H classes; idempotents " << int_list(g.at("idempotents")) << "\n\n";
  for (const auto& box : g.at("eggbox")) {
    out << box.get<std::string>() << "\n";
  }

  out << "irreducible modules (one per regular J-class):\n";
  for (const auto& rec : report.at("irreducibles")) {
    out << "  J" << rec.at("j_class").get<int>() << ": sandwich "
        << rec.at("sandwich").at("shape")[0].get<std::size_t>() << "x"
        << rec.at("sandwich").at("shape")[1].get<std::size_t>() << " "
        << int_list(rec.at("sandwich").at("rows")) << "\n";
    out << "     module size " << rec.at("module_size").get<std::size_t>()
        << ", free " << yes_no(rec.at("free")) << ", identity submatrix "
        << yes_no(rec.at("identity_submatrix")) << ", faithful "
        << yes_no(rec.at("faithful")) << "\n";
    out << "     image order " << rec.at("image_order").get<std::size_t>()
        << ", ggm " << yes_no(rec.at("image_is_ggm")) << ", aperiodic "
        << yes_no(rec.at("image_aperiodic")) << "\n";
    const json& d = rec.at("density");
    out << "     density: span " << d.at("span_size").get<std::size_t>()
        << ", dense " << yes_no(d.at("dense"));
    if (d.at("full_end_known").get<bool>()) {
      out << ", |End| " << d.at("end_size").get<std::size_t>()
          << ", spans all of End " << yes_no(d.at("spans_full_end"));
    } else {
      out << ", |End| not enumerated";
    }
    out << "\n";
    out << "     min character " << int_list(rec.at("min_character")) << "\n";
    out << "     schutzenberger character " << int_list(rec.at("schutzenberger_lifted"))
        << ", matches psi " << yes_no(rec.at("characters_match")) << "\n";
  }

  const json& k = report.at("direct_sum_kernel");
  int nk = k.at("n_classes").get<int>();
  out << "\ndirect sum kernel: " << nk << " class" << (nk == 1 ? " " : "es ")
      << int_list(k.at("classes")) << "\n";

  if (report.contains("oracles")) {
    const json& o = report.at("oracles");
    out << "\noracles (seed " << o.at("seed").get<std::uint64_t>() << "):\n";
    out << "  relabeling invariance: "
        << (o.at("relabel").at("ok").get<bool>() ? "ok" : "FAILED") << "\n";
    if (o.at("jprime").at("checked").get<bool>()) {
      out << "  largest J'-congruence == direct sum kernel: "
          << (o.at("jprime").at("agrees").get<bool>() ? "ok" : "FAILED") << "\n";
    } else {
      out << "  largest J'-congruence oracle: skipped (order above cap)\n";
    }
    for (const auto& m : o.at("modules")) {
      out << "  module J" << m.at("j_class").get<int>() << ": ";
      if (m.at("checked").get<bool>()) {
        bool ok = m.at("minimal_agrees").get<bool>() &&
                  m.at("simple_agrees").get<bool>() &&
                  m.at("readings_agree").get<bool>();
        out << (ok ? "enumeration cross-checks ok" : "cross-check FAILED") << "\n";
      } else {
        out << "skipped (size above cap)\n";
      }
    }
  }
  return out.str();
}

}  // namespace boolrep
