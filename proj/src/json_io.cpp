#include "critmg/json_io.hpp"

namespace critmg {

Json weight_to_json(const Weight& w) {
  Json j;
  Json fin = Json::array();
  for (const Rational& c : w.finite) fin.push_back(rat_to_string(c));
  j["finite"] = fin;
  j["delta"] = rat_to_string(w.delta);
  return j;
}

Weight weight_from_json(const Json& j) {
  Weight w;
  for (const auto& c : j.at("finite")) w.finite.push_back(rat_from_string(c));
  w.delta = rat_from_string(j.at("delta"));
  return w;
}

Json window_to_json(const std::vector<Weight>& weights) {
  Json j = Json::array();
  for (const Weight& w : weights) j.push_back(weight_to_json(w));
  return j;
}

std::vector<Weight> window_from_json(const Json& j) {
  std::vector<Weight> out;
  for (const auto& w : j) out.push_back(weight_from_json(w));
  return out;
}

Json graph_to_json(const MomentGraph& g) {
  Json j;
  j["nvars"] = g.nvars;
  j["root_system"] = g.root_system;
  j["vertices"] = window_to_json(g.vertices);
  Json order = Json::array();
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (g.less(a, b)) order.push_back(Json::array({a, b}));
  j["order"] = order;
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json je;
    je["u"] = e.u;
    je["v"] = e.v;
    Json lab = Json::array();
    for (const Rational& c : e.label.coeffs) lab.push_back(rat_to_string(c));
    je["label"] = lab;
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j;
}

MomentGraph graph_from_json(const Json& j) {
  MomentGraph g;
  g.nvars = j.at("nvars");
  g.root_system = j.value("root_system", "");
  g.vertices = window_from_json(j.at("vertices"));
  const int n = g.size();
  g.strict_less.assign(n, std::vector<bool>(n, false));
  for (const auto& p : j.at("order")) {
    const int a = p.at(0), b = p.at(1);
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw std::invalid_argument("graph order pair out of range");
    g.strict_less[a][b] = true;
  }
  for (const auto& je : j.at("edges")) {
    MomentGraphEdge e;
    e.u = je.at("u");
    e.v = je.at("v");
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v)
      throw std::invalid_argument("graph edge endpoint out of range");
    for (const auto& c : je.at("label")) e.label.coeffs.push_back(rat_from_string(c));
    if (static_cast<int>(e.label.coeffs.size()) != g.nvars)
      throw std::invalid_argument("edge label has wrong dimension");
    if (e.label.is_zero()) throw std::invalid_argument("edge label is zero");
    g.edges.push_back(std::move(e));
  }
  return g;
}

Json module_to_json(const SectionModule& m) {
  for (std::size_t s = 0; s < m.slots.size(); ++s)
    if (m.slots[s].vertex != static_cast<int>(s) || m.slots[s].shift != 0)
      throw std::invalid_argument(
          "module_to_json: only one unshifted slot per vertex serializes");
  if (static_cast<int>(m.slots.size()) != m.graph.size())
    throw std::invalid_argument("module_to_json: slot/vertex mismatch");
  Json j;
  j["graph"] = graph_to_json(m.graph);
  Json gens = Json::array();
  for (const auto& g : m.gens) {
    Json tup = Json::array();
    for (const Polynomial& p : g.components) tup.push_back(poly_to_string(p));
    gens.push_back(tup);
  }
  j["generators"] = gens;
  j["degree_bound"] = m.degree_bound;
  return j;
}

SectionModule module_from_json(const Json& j) {
  SectionModule m;
  m.graph = graph_from_json(j.at("graph"));
  m.degree_bound = j.at("degree_bound");
  for (int v = 0; v < m.graph.size(); ++v) m.slots.push_back({v, 0});
  for (const auto& tup : j.at("generators")) {
    if (static_cast<int>(tup.size()) != m.graph.size())
      throw std::invalid_argument("generator has wrong component count");
    SectionModule::Generator gen;
    int degree = -1;
    for (const auto& ps : tup) {
      const Polynomial p = poly_from_string(m.graph.nvars, ps);
      if (!p.is_zero()) {
        if (degree < 0) degree = p.degree();
        if (!p.is_homogeneous(degree))
          throw std::invalid_argument("generator components are not equi-homogeneous");
      }
      gen.components.push_back(p);
    }
    if (degree < 0) throw std::invalid_argument("zero generator");
    gen.degree = degree;
    m.gens.push_back(std::move(gen));
  }
  m.validate();
  return m;
}

Json sheaf_to_json(const BMSheaf& b) {
  Json j;
  j["graph"] = graph_to_json(b.graph);
  j["base"] = b.base;
  j["degree_bound"] = b.degree_bound;
  Json stalks = Json::array();
  for (const auto& st : b.stalks) stalks.push_back(st.gen_degrees);
  j["stalks"] = stalks;
  Json maps = Json::array();
  for (const auto& em : b.edge_maps) {
    Json rows = Json::array();
    for (const auto& row : em) {
      Json r = Json::array();
      for (const Polynomial& p : row) r.push_back(poly_to_string(p));
      rows.push_back(r);
    }
    maps.push_back(rows);
  }
  j["edge_maps"] = maps;
  j["boundary_dims"] = b.boundary_dims;
  return j;
}

BMSheaf sheaf_from_json(const Json& j) {
  BMSheaf b;
  b.graph = graph_from_json(j.at("graph"));
  b.base = j.at("base");
  b.degree_bound = j.at("degree_bound");
  for (const auto& st : j.at("stalks")) {
    BMSheaf::Stalk s;
    for (const auto& d : st) s.gen_degrees.push_back(d);
    b.stalks.push_back(std::move(s));
  }
  for (const auto& em : j.at("edge_maps")) {
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& row : em) {
      std::vector<Polynomial> r;
      for (const auto& ps : row) r.push_back(poly_from_string(b.graph.nvars, ps));
      rows.push_back(std::move(r));
    }
    b.edge_maps.push_back(std::move(rows));
  }
  b.boundary_dims = j.at("boundary_dims").get<std::vector<std::vector<int>>>();
  return b;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace critmg
