// Command-line front end. Nodes use Bourbaki numbering, 1-based.
//
// Exit codes: split-p2 and split-wedge return 0 for split, 1 for non-split
// and 2 for errors; table returns 1 when a row fails; everything else returns
// 0 on success and 2 on error.

#include "minusplit/bundle_io.hpp"
#include "minusplit/cech.hpp"
#include "minusplit/classification.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace minusplit;
using nlohmann::ordered_json;

namespace {

constexpr int kError = 2;

struct LieArgs {
  std::string type;
  int rank = 0;
  int node = 0;
};

void add_lie_args(CLI::App* cmd, LieArgs& a, bool with_node) {
  cmd->add_option("type", a.type, "Cartan type letter (A, B, C, D, E)")->required();
  cmd->add_option("rank", a.rank, "rank")->required();
  if (with_node) cmd->add_option("node", a.node, "parabolic node, Bourbaki numbering (1-based)")->required();
}

RootSystemPtr system_of(const LieArgs& a) { return build_root_system(a.type, a.rank); }

void check_node(const RootSystem& rs, int node, bool allow_nonminuscule) {
  if (node < 1 || node > rs.rank())
    throw std::invalid_argument("bad node " + std::to_string(node) + " for " + rs.label() + " (nodes are 1.." +
                                std::to_string(rs.rank()) + ")");
  if (!allow_nonminuscule && !is_minuscule(rs, node))
    throw std::invalid_argument("node " + std::to_string(node) + " of " + rs.label() +
                                " is not minuscule (use --allow-nonminuscule)");
}

std::string set_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

ordered_json int_matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

int cmd_roots(const LieArgs& a, bool json) {
  const RootSystemPtr rs = system_of(a);
  const auto nodes = minuscule_nodes(*rs);
  if (json) {
    ordered_json j;
    j["system"] = rs->label();
    j["positive_roots"] = rs->positive_roots().size();
    j["cartan_matrix"] = int_matrix_json(rs->cartan_matrix());
    j["minuscule_nodes"] = nodes;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << rs->label() << ": " << rs->positive_roots().size() << " positive roots\n";
  std::cout << "Cartan matrix (entry (i,j) = <alpha_i, alpha_j^vee>):\n" << rs->cartan_matrix() << "\n";
  std::cout << "minuscule nodes: " << set_string(nodes) << "\n";
  return 0;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

int cmd_hasse(const LieArgs& a, bool dot, bool allow, bool json) {
  const RootSystemPtr rs = system_of(a);
  check_node(*rs, a.node, allow);
  const CosetPoset p = coset_reps(rs, a.node);
  const int top = p.max_length();
  if (dot) {
    std::cout << "digraph \"" << rs->label() << "/P" << a.node << "\" {\n  node [shape=box];\n";
    for (Index i = 0; i < p.size(); ++i) {
      std::ostringstream label;
      label << p.rep(i).word_string() << "\\n(dim " << top - p.length(i) << ", codim " << p.length(i) << ")";
      std::cout << "  v" << i << " [label=\"" << dot_escape(label.str()) << "\"];\n";
    }
    for (const auto& c : p.covers()) {
      std::cout << "  v" << c.from << " -> v" << c.to;
      const Integer coeff = pieri_coefficient(p, c);
      if (coeff != 1) std::cout << " [label=\"" << coeff << "\"]";
      std::cout << ";\n";
    }
    std::cout << "}\n";
    return 0;
  }
  if (json) {
    ordered_json j;
    j["system"] = rs->label();
    j["node"] = a.node;
    j["dimension"] = top;
    ordered_json verts = ordered_json::array();
    for (Index i = 0; i < p.size(); ++i)
      verts.push_back({{"index", i}, {"word", p.rep(i).word_string()}, {"codim", p.length(i)}, {"dim", top - p.length(i)}});
    j["vertices"] = verts;
    ordered_json edges = ordered_json::array();
    for (const auto& c : p.covers()) edges.push_back({c.from, c.to});
    j["edges"] = edges;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << rs->label() << "/P" << a.node << ": " << p.size() << " Schubert cells, dimension " << top << "\n";
  for (Index i = 0; i < p.size(); ++i) {
    std::cout << "  [" << i << "] " << p.rep(i).word_string() << "  codim " << p.length(i) << " ->";
    for (Index s : p.successors(i)) std::cout << " " << s;
    std::cout << "\n";
  }
  return 0;
}

int cmd_pieri(const LieArgs& a, bool json) {
  const RootSystemPtr rs = system_of(a);
  check_node(*rs, a.node, true);
  const CosetPoset p = coset_reps(rs, a.node);
  Integer max_coeff = 0;
  ordered_json classes = ordered_json::array();
  std::ostringstream text;
  for (Index i = 0; i < p.size(); ++i) {
    const CycleClass prod = pieri_product(p, schubert_class(p, i));
    if (prod.max_coefficient() > max_coeff) max_coeff = prod.max_coefficient();
    ordered_json terms = ordered_json::array();
    text << "  D * X[" << p.rep(i).word_string() << "] =";
    bool first = true;
    for (const auto& [k, c] : prod.terms) {
      terms.push_back({{"word", p.rep(k).word_string()}, {"coefficient", c.str()}});
      text << (first ? " " : " + ") << (c == 1 ? "" : c.str() + " ") << "X[" << p.rep(k).word_string() << "]";
      first = false;
    }
    if (first) text << " 0";
    text << "\n";
    classes.push_back({{"word", p.rep(i).word_string()}, {"codim", p.length(i)}, {"product", terms}});
  }
  if (json) {
    ordered_json j;
    j["system"] = rs->label();
    j["node"] = a.node;
    j["minuscule"] = is_minuscule(*rs, a.node);
    j["max_coefficient"] = max_coeff.str();
    j["classes"] = classes;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << rs->label() << "/P" << a.node << (is_minuscule(*rs, a.node) ? " (minuscule)" : " (not minuscule)")
            << ", maximal Pieri coefficient " << max_coeff << "\n"
            << text.str();
  return 0;
}

ordered_json x2_json(const X2Report& r, const CosetPoset& p) {
  ordered_json j;
  j["system"] = r.system;
  j["node"] = r.node;
  j["dimension"] = r.variety_dim;
  ordered_json comps = ordered_json::array();
  for (std::size_t k = 0; k < r.components.size(); ++k)
    comps.push_back({{"word", p.rep(r.components[k].rep).word_string()}, {"degree", r.degrees[k].str()}});
  j["components"] = comps;
  ordered_json inter = ordered_json::array();
  for (const auto& x : r.intersections) {
    ordered_json cls = ordered_json::array();
    for (const auto& c : x.classes) cls.push_back({{"word", p.rep(c.rep).word_string()}, {"dim", c.dim}});
    inter.push_back({{"pair", {x.first, x.second}}, {"classes", cls}});
  }
  j["intersections"] = inter;
  j["connected"] = r.connected;
  j["verdict"] = r.verdict;
  return j;
}

int cmd_x2(const LieArgs& a, bool json) {
  const RootSystemPtr rs = system_of(a);
  check_node(*rs, a.node, false);
  const CosetPoset p = coset_reps(rs, a.node);
  const X2Report r = classify_x2(rs, a.node);
  if (json) {
    std::cout << x2_json(r, p).dump(2) << "\n";
    return 0;
  }
  std::cout << describe_variety(rs->type(), rs->rank(), a.node) << " = " << rs->label() << "/P" << a.node
            << ", dimension " << r.variety_dim << "\n";
  for (std::size_t k = 0; k < r.components.size(); ++k)
    std::cout << "  X(" << p.rep(r.components[k].rep).word_string() << "): degree " << r.degrees[k] << "\n";
  for (const auto& x : r.intersections) {
    std::cout << "  components " << x.first << " and " << x.second << " meet in";
    for (const auto& c : x.classes) std::cout << " X(" << p.rep(c.rep).word_string() << ") [dim " << c.dim << "]";
    std::cout << "\n";
  }
  std::cout << "X2 " << (r.connected ? "connected" : "disconnected") << ": " << r.verdict << "\n";
  return 0;
}

int cmd_table(const std::string& variety, bool json) {
  if (!variety.empty()) {
    const VarietyModel m = parse_variety(variety);
    const RootSystemPtr rs = build_root_system(m.type, m.rank);
    const TestPlan plan = reduction_table(rs, m.node);
    if (json) {
      ordered_json j;
      j["variety"] = plan.variety;
      j["model"] = rs->label() + "/P" + std::to_string(m.node);
      if (!plan.via.empty()) j["via"] = plan.via;
      j["x2"] = plan.x2;
      j["test"] = to_string(plan.test);
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    std::cout << plan.variety << " (" << rs->label() << "/P" << m.node << ")";
    if (!plan.via.empty()) std::cout << " via " << plan.via;
    std::cout << ": " << plan.x2 << ", " << to_string(plan.test) << "\n";
    return 0;
  }
  const auto rows = check_table();
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows)
      arr.push_back({{"variety", r.computed.variety},
                     {"group", r.computed.group},
                     {"x2", r.computed.x2},
                     {"criterion", r.computed.criterion},
                     {"expected_x2", r.expected.x2},
                     {"instances", r.instances},
                     {"pass", r.pass}});
    std::cout << ordered_json{{"rows", arr}, {"pass", all}}.dump(2) << "\n";
    return all ? 0 : 1;
  }
  for (const auto& r : rows) {
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.computed.variety << " | " << r.computed.group << " | "
              << r.computed.x2 << " | " << r.computed.criterion << "\n";
    for (const auto& inst : r.instances) std::cout << "        " << inst << "\n";
  }
  return all ? 0 : 1;
}

ordered_json verdict_json(const SplitVerdict& v) {
  ordered_json j;
  j["split"] = v.split;
  if (v.split) j["twists"] = v.twists;
  j["h1_end_minus1"] = v.h1_end;
  j["certificate"] = v.certificate;
  if (v.wedge) {
    const WedgeDetails& w = *v.wedge;
    j["left_line_type"] = w.left_line_type;
    j["right_line_type"] = w.right_line_type;
    j["left_h0_end"] = w.left_h0_end;
    j["right_h0_end"] = w.right_h0_end;
    j["matched_dimension"] = w.matched_dimension;
    j["trials"] = w.trials;
    j["seed"] = w.seed;
    j["failure_bound"] = w.failure_bound;
  }
  return j;
}

int report_verdict(const SplitVerdict& v, bool json) {
  if (json) std::cout << verdict_json(v).dump(2) << "\n";
  else std::cout << (v.split ? "split: " : "non-split: ") << v.certificate << "\n";
  return v.split ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert combinatorics of minuscule varieties and splitting tests for bundles on P2"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  LieArgs roots_args, hasse_args, pieri_args, x2_args;
  auto* roots = app.add_subcommand("roots", "positive roots, Cartan matrix and minuscule nodes");
  add_lie_args(roots, roots_args, false);

  bool dot = false, allow = false;
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of W^P (Bruhat order on Schubert classes)");
  add_lie_args(hasse, hasse_args, true);
  hasse->add_flag("--dot", dot, "emit Graphviz DOT");
  hasse->add_flag("--allow-nonminuscule", allow, "accept a non-minuscule node");

  auto* pieri = app.add_subcommand("pieri", "Pieri products D * X(w) for every class");
  add_lie_args(pieri, pieri_args, true);

  auto* x2 = app.add_subcommand("x2", "structure of the union of 2-dimensional Schubert varieties");
  add_lie_args(x2, x2_args, true);

  std::string variety;
  auto* table = app.add_subcommand("table", "recompute the classification table");
  table->add_option("--variety", variety, "single variety: P<m>, Gr(k,n), S<n>, Q<m>, OP2, FV, LG(n)");

  std::string file;
  std::uint64_t seed = 0;
  int max_cutoff = 64;
  int trials = 32;
  std::string engine = "graded";
  auto add_cohom_opts = [&](CLI::App* cmd) {
    cmd->add_option("--engine", engine, "cohomology engine: graded or cech")->check(CLI::IsMember({"graded", "cech"}));
    cmd->add_option("--max-cutoff", max_cutoff, "cap on the Cech truncation cutoff");
  };
  auto* split_p2 = app.add_subcommand("split-p2", "splitting test for a bundle on P2");
  split_p2->add_option("file", file, "bundle JSON file")->required();
  split_p2->add_option("--seed", seed, "random seed (unused by the P2 test)");
  add_cohom_opts(split_p2);

  auto* split_wedge = app.add_subcommand("split-wedge", "splitting test on two planes glued along a line");
  split_wedge->add_option("file", file, "wedge JSON file")->required();
  split_wedge->add_option("--seed", seed, "random seed for the matched-section search");
  split_wedge->add_option("--trials", trials, "number of random samples");
  add_cohom_opts(split_wedge);

  int degree = 0;
  auto* bott_cmd = app.add_subcommand("bott", "cohomology of O(d) on P2");
  bott_cmd->add_option("d", degree, "twist")->required()->allow_extra_args(false);

  int twist = 0;
  auto* cohom = app.add_subcommand("cohomology", "h^i of a presented bundle twisted by t");
  cohom->add_option("file", file, "bundle JSON file")->required();
  cohom->add_option("--twist", twist, "twist t");
  add_cohom_opts(cohom);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*roots) return cmd_roots(roots_args, json);
    if (*hasse) return cmd_hasse(hasse_args, dot, allow, json);
    if (*pieri) return cmd_pieri(pieri_args, json);
    if (*x2) return cmd_x2(x2_args, json);
    if (*table) return cmd_table(variety, json);

    SplitOptions opts;
    opts.seed = seed;
    opts.trials = trials;
    opts.cohomology.engine = parse_engine(engine);
    opts.cohomology.max_cutoff = max_cutoff;
    if (*split_p2) return report_verdict(is_split_p2(load_bundle(file), opts), json);
    if (*split_wedge) return report_verdict(is_split_wedge(load_wedge(file), opts), json);
    if (*bott_cmd) {
      const CohomologyDims h = bott(degree);
      if (json) std::cout << ordered_json{{"d", degree}, {"h0", h.h0}, {"h1", h.h1}, {"h2", h.h2}}.dump() << "\n";
      else std::cout << "h^i(O(" << degree << ")) = (" << h.h0 << ", " << h.h1 << ", " << h.h2 << ")\n";
      return 0;
    }
    if (*cohom) {
      const CohomologyResult r = complex_cohomology(load_bundle(file), twist, opts.cohomology);
      if (json) {
        ordered_json j{{"twist", twist}, {"h0", r.dims.h0}, {"h1", r.dims.h1}, {"h2", r.dims.h2},
                       {"engine", to_string(r.engine)}, {"euler_characteristic", r.euler_characteristic.str()}};
        if (r.cutoff) j["cutoff"] = {{"B", r.cutoff->cutoff}, {"stable_at", r.cutoff->cutoff + 1}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "h^i(V(" << twist << ")) = (" << r.dims.h0 << ", " << r.dims.h1 << ", " << r.dims.h2 << ")  ["
                  << to_string(r.engine);
        if (r.cutoff) std::cout << ", stable at cutoffs " << r.cutoff->cutoff << " and " << r.cutoff->cutoff + 1;
        std::cout << "]\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
