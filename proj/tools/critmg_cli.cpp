/*
  Command-line front end.

  Pipeline: block -> graph -> zbasis / bm -> verify. JSON is the single
  interchange format (canonical dump, byte-stable across runs); DOT output
  is for human inspection only.

  Exit codes: 0 all checks passed, 1 a verification failed, 2 input error.
*/

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "critmg/json_io.hpp"

using namespace critmg;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Weight parse_weight_arg(const std::string& arg, int rank) {
  Json j;
  try {
    j = Json::parse(arg);
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed weight JSON: ") + e.what());
  }
  Weight w;
  try {
    w = weight_from_json(j);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad weight: ") + e.what());
  }
  if (static_cast<int>(w.finite.size()) != rank)
    throw InputError("weight rank does not match the root system");
  return w;
}

SubsetFlags parse_subset_arg(const std::string& arg, const BlockWindow& w) {
  if (arg.rfind("interval:", 0) == 0) {
    const std::size_t c = arg.find(':', 9);
    if (c == std::string::npos) throw InputError("bad interval subset: " + arg);
    const int lo = std::stoi(arg.substr(9, c - 9));
    const int hi = std::stoi(arg.substr(c + 1));
    if (lo < 0 || lo >= w.size() || hi < 0 || hi >= w.size())
      throw InputError("interval endpoint out of range");
    SubsetFlags s;
    for (int i = 0; i < w.size(); ++i)
      if (w.less_eq(lo, i) && w.less_eq(i, hi)) s.push_back(i);
    return s;
  }
  SubsetFlags s;
  std::size_t pos = 0;
  while (pos < arg.size()) {
    std::size_t comma = arg.find(',', pos);
    const std::string tok =
        arg.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? arg.size() : comma + 1;
    if (!tok.empty()) s.push_back(std::stoi(tok));
  }
  return normalize_subset(s, w.size());
}

std::string hasse_dot(const BlockWindow& w) {
  // Covering relations only.
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < w.size(); ++i)
    os << "  v" << i << " [label=\"" << weight_label_string(w.weights[i]) << "\"];\n";
  for (int i = 0; i < w.size(); ++i)
    for (int j = 0; j < w.size(); ++j) {
      if (!w.less(i, j)) continue;
      bool covering = true;
      for (int k = 0; k < w.size(); ++k)
        if (w.less(i, k) && w.less(k, j)) covering = false;
      if (covering) os << "  v" << i << " -> v" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

int max_gen_degree(const SectionModule& m) {
  int d = 0;
  for (const auto& g : m.gens) d = std::max(d, g.degree);
  return d;
}

// Degreewise equality of the global sections of the edge sheaf with the
// local structure algebra, both as subspaces of the vertex-tuple ambient.
bool sections_equal_structure_algebra(const SectionModule& gamma, const MomentGraph& g,
                                      int dmax) {
  for (std::size_t s = 0; s < gamma.slots.size(); ++s)
    if (gamma.slots[s].vertex != static_cast<int>(s) || gamma.slots[s].shift != 0)
      return false;  // stalks are not one unshifted copy per vertex
  for (int d = 0; d <= dmax; ++d) {
    const GradedPiece p = graded_piece(gamma, d);
    const StructureBasis zb = structure_basis(g, d);
    if (!(p.space == Subspace::span(p.layout.dim, zb.coords))) return false;
  }
  return true;
}

struct VerifyResult {
  bool pass = false;
  Json report;
};

VerifyResult verify_gkm(const MomentGraph& g) {
  VerifyResult r;
  r.report["check"] = "gkm-condition";
  const auto v = gkm_check(g);
  r.pass = !v.has_value();
  r.report["pass"] = r.pass;
  if (v) {
    r.report["violation"]["vertex"] = v->vertex;
    r.report["violation"]["edge1"] = v->edge1;
    r.report["violation"]["edge2"] = v->edge2;
  }
  return r;
}

VerifyResult verify_soergel(const MomentGraph& g, int base, int degree) {
  VerifyResult r;
  r.report["check"] = "soergel-assumptions";
  const SoergelReport rep = check_soergel_assumptions(g, base, degree);
  r.pass = rep.pass;
  r.report["pass"] = rep.pass;
  r.report["multiplicity_free"] = rep.multiplicity_free;
  r.report["support_equals_k"] = rep.support_equals_k;
  r.report["delta_condition"] = rep.delta_condition;
  return r;
}

VerifyResult verify_endo(const MomentGraph& g, int base, int degree) {
  VerifyResult r;
  r.report["check"] = "endomorphism-ring-comparison";
  const BMSheaf b = bm_construct(g, base, degree);
  const SectionModule gamma = global_sections(b);
  const int dmax = degree - max_gen_degree(gamma);
  if (dmax < 0) throw InputError("max degree too small for the stalk generators");
  const EndomorphismImage endo = endomorphism_image(gamma, dmax);
  Json dims = Json::array(), zdims = Json::array();
  bool pass = true;
  for (int d = 0; d <= dmax; ++d) {
    const int zd = structure_basis(g, d).dim();
    dims.push_back(endo.dims[d]);
    zdims.push_back(zd);
    if (endo.dims[d] != zd) pass = false;
  }
  r.pass = pass;
  r.report["pass"] = pass;
  r.report["endomorphism_dims"] = dims;
  r.report["structure_algebra_dims"] = zdims;
  r.report["max_degree_checked"] = dmax;
  return r;
}

VerifyResult verify_projective(const MomentGraph& g, int base, int degree) {
  VerifyResult r;
  r.report["check"] = "projectivity-criteria";
  auto run = [&](int d) {
    const BMSheaf b = bm_construct(g, base, d);
    return check_projective(global_sections(b));
  };
  const ProjectiveReport rep = run(degree);
  const ProjectiveReport rep1 = run(degree + 1);
  r.pass = rep.pass && rep1.pass == rep.pass;
  r.report["pass"] = r.pass;
  r.report["z_stable"] = rep.z_stable;
  Json stalks = Json::array(), edges = Json::array();
  for (const auto& [v, ok] : rep.stalk_free) stalks.push_back(Json{{"vertex", v}, {"free", ok}});
  for (const auto& [e, ok] : rep.edge_condition)
    edges.push_back(Json{{"edge", e}, {"holds", ok}});
  r.report["stalks_free"] = stalks;
  r.report["edge_conditions"] = edges;
  r.report["stable_at_next_degree"] = rep1.pass == rep.pass;
  return r;
}

VerifyResult verify_subgeneric(const MomentGraph& g, int base, int degree) {
  VerifyResult r;
  r.report["check"] = "subgeneric-endomorphism-ring";
  if (g.size() != 2 || g.edges.size() != 1)
    throw InputError("subgeneric verification needs a single-edge graph");
  const BMSheaf b = bm_construct(g, base, degree);
  const SectionModule gamma = global_sections(b);
  const bool sections_match = sections_equal_structure_algebra(gamma, g, degree);
  const int dmax = degree - max_gen_degree(gamma);
  const EndomorphismImage endo = endomorphism_image(gamma, dmax);
  bool endo_match = true;
  for (int d = 0; d <= dmax; ++d)
    if (endo.dims[d] != edge_structure_basis(g.nvars, g.edges[0].label, d).dim())
      endo_match = false;
  r.pass = sections_match && endo_match;
  r.report["pass"] = r.pass;
  r.report["sections_equal_local_structure_algebra"] = sections_match;
  r.report["endomorphism_dims_match"] = endo_match;
  return r;
}

VerifyResult verify_struktursatz(const MomentGraph& g, int base, int degree) {
  VerifyResult r;
  r.report["check"] = "hom-dimension-reciprocity";
  const BMSheaf b = bm_construct(g, base, degree);
  const SectionModule gamma = global_sections(b);
  bool pass = true;
  Json table = Json::array();
  for (int v = 0; v < g.size(); ++v) {
    const SectionModule vmu = standard_module_V(g, v, 0, degree);
    const int hom = hom_dimension(gamma, vmu, 0);
    const int rank = static_cast<int>(b.stalks[v].gen_degrees.size());
    table.push_back(Json{{"vertex", v}, {"hom_dim", hom}, {"stalk_rank", rank}});
    if (hom != rank) pass = false;
  }
  r.pass = pass;
  r.report["pass"] = pass;
  r.report["table"] = table;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment-graph computations for critical-level blocks"};
  app.require_subcommand(1);

  std::string type = "A1", lambda_arg, subset_arg, graph_path, json_out, dot_out,
              sections_out;
  int delta_window = 1, height_window = 4, max_degree = 6, base = 0;

  auto add_window_opts = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "root system, e.g. A1, A2, B2, G2");
    cmd->add_option("--lambda", lambda_arg,
                    "base weight as JSON {\"finite\":[...],\"delta\":\"p/q\"}");
    cmd->add_option("--delta-window", delta_window, "max delta shift of the window");
    cmd->add_option("--height-window", height_window, "max finite height of the window");
  };

  CLI::App* cmd_block = app.add_subcommand("block", "enumerate a block window");
  add_window_opts(cmd_block);
  cmd_block->add_option("--json", json_out, "write the window JSON here");
  cmd_block->add_option("--dot", dot_out, "write the Hasse diagram DOT here");

  CLI::App* cmd_graph = app.add_subcommand("graph", "build a moment graph");
  add_window_opts(cmd_graph);
  cmd_graph->add_option("--subset", subset_arg,
                        "window subset: comma list of indices or interval:<lo>:<hi>");
  cmd_graph->add_option("--json", json_out, "write the graph JSON here");
  cmd_graph->add_option("--dot", dot_out, "write graph DOT here");

  CLI::App* cmd_zbasis = app.add_subcommand("zbasis", "structure algebra degree table");
  cmd_zbasis->add_option("--graph", graph_path, "graph JSON file")->required();
  cmd_zbasis->add_option("--max-degree", max_degree, "largest degree to compute");

  CLI::App* cmd_bm = app.add_subcommand("bm", "build the canonical sheaf");
  cmd_bm->add_option("--graph", graph_path, "graph JSON file")->required();
  cmd_bm->add_option("--base", base, "minimal vertex index");
  cmd_bm->add_option("--max-degree", max_degree, "degree bound");
  cmd_bm->add_option("--json", json_out, "write the sheaf JSON here");
  cmd_bm->add_option("--sections", sections_out, "write the global sections JSON here");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification");
  std::string which;
  cmd_verify
      ->add_option("which", which,
                   "gkm | soergel | endo | projective | subgeneric | struktursatz")
      ->required();
  cmd_verify->add_option("--graph", graph_path, "graph JSON file")->required();
  cmd_verify->add_option("--base", base, "minimal vertex index");
  cmd_verify->add_option("--max-degree", max_degree, "degree bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_block || *cmd_graph) {
      auto rs = build_root_system(type);
      Weight lambda;
      lambda.finite = QVec(rs->rank, Rational(0));
      lambda.delta = 0;
      if (!lambda_arg.empty()) lambda = parse_weight_arg(lambda_arg, rs->rank);
      const BlockWindow w = block_window(rs, lambda, delta_window, height_window);

      if (*cmd_block) {
        const std::string text = dump_canonical(window_to_json(w.weights));
        if (!json_out.empty())
          write_text(json_out, text);
        else
          std::cout << text;
        if (!dot_out.empty()) write_text(dot_out, hasse_dot(w));
        return 0;
      }

      SubsetFlags subset;
      if (subset_arg.empty())
        for (int i = 0; i < w.size(); ++i) subset.push_back(i);
      else
        subset = parse_subset_arg(subset_arg, w);
      const MomentGraph g = build_moment_graph(w, subset);
      const std::string text = dump_canonical(graph_to_json(g));
      if (!json_out.empty())
        write_text(json_out, text);
      else
        std::cout << text;
      if (!dot_out.empty()) write_text(dot_out, graph_to_dot(g));
      const auto viol = gkm_check(g);
      std::cerr << "gkm: " << (viol ? "violation at vertex " + std::to_string(viol->vertex)
                                    : std::string("ok"))
                << "\n";
      return 0;
    }

    if (*cmd_zbasis) {
      const MomentGraph g = graph_from_json(read_json_file(graph_path));
      std::cout << "degree  dim  basis\n";
      for (int d = 0; d <= max_degree; ++d) {
        const StructureBasis zb = structure_basis(g, d);
        std::cout << d << "  " << zb.dim() << "  ";
        for (const auto& t : zb.basis) {
          std::cout << "(";
          for (std::size_t v = 0; v < t.components.size(); ++v) {
            if (v) std::cout << ", ";
            std::cout << poly_to_string(t.components[v]);
          }
          std::cout << ") ";
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (*cmd_bm) {
      const MomentGraph g = graph_from_json(read_json_file(graph_path));
      const BMSheaf b = bm_construct(g, base, max_degree);
      const std::string text = dump_canonical(sheaf_to_json(b));
      if (!json_out.empty())
        write_text(json_out, text);
      else
        std::cout << text;
      if (!sections_out.empty())
        write_text(sections_out, dump_canonical(module_to_json(global_sections(b))));
      return 0;
    }

    if (*cmd_verify) {
      const MomentGraph g = graph_from_json(read_json_file(graph_path));
      VerifyResult r;
      if (which == "gkm")
        r = verify_gkm(g);
      else if (which == "soergel")
        r = verify_soergel(g, base, max_degree);
      else if (which == "endo")
        r = verify_endo(g, base, max_degree);
      else if (which == "projective")
        r = verify_projective(g, base, max_degree);
      else if (which == "subgeneric")
        r = verify_subgeneric(g, base, max_degree);
      else if (which == "struktursatz")
        r = verify_struktursatz(g, base, max_degree);
      else
        throw InputError("unknown verification: " + which);
      std::cout << dump_canonical(r.report);
      return r.pass ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
