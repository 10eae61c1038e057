#include "critmg/moment_graph.hpp"

#include <sstream>

namespace critmg {

std::vector<int> MomentGraph::edges_at(int vertex) const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (edges[e].u == vertex || edges[e].v == vertex) out.push_back(e);
  return out;
}

std::vector<int> MomentGraph::minimal_vertices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < size(); ++j)
      if (less(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

int MomentGraph::diameter() const {
  const int n = size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : edges) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  int diam = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i][j] < inf) diam = std::max(diam, d[i][j]);
  return diam;
}

bool MomentGraph::subset_open(const std::vector<int>& s) const {
  std::vector<bool> in(size(), false);
  for (int i : s) in[i] = true;
  for (int j : s)
    for (int i = 0; i < size(); ++i)
      if (less(i, j) && !in[i]) return false;
  return true;
}

bool MomentGraph::subset_closed(const std::vector<int>& s) const {
  std::vector<int> comp;
  std::vector<bool> in(size(), false);
  for (int i : s) in[i] = true;
  for (int i = 0; i < size(); ++i)
    if (!in[i]) comp.push_back(i);
  return subset_open(comp);
}

std::vector<std::vector<int>> MomentGraph::all_open_subsets() const {
  // Desk scale: enumerate all down-closed subsets directly.
  const int n = size();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (subset_open(s)) out.push_back(std::move(s));
  }
  return out;
}

namespace {

LinearForm normalized_label(const RootCoords& coroot) {
  LinearForm f;
  f.coeffs.assign(coroot.begin(), coroot.end());
  for (const Rational& c : f.coeffs) {
    if (c == 0) continue;
    if (c < 0)
      for (Rational& x : f.coeffs) x = -x;
    break;
  }
  return f;
}

}  // namespace

MomentGraph build_moment_graph(const BlockWindow& w, const SubsetFlags& subset) {
  const SubsetFlags k = normalize_subset(subset, w.size());
  MomentGraph g;
  g.nvars = w.rs->rank;
  g.root_system = w.rs->name;
  for (int i : k) g.vertices.push_back(w.weights[i]);
  const int n = g.size();
  g.strict_less.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) g.strict_less[a][b] = w.less(k[a], k[b]);

  // lambda -- s_{alpha+n*delta}.lambda: the finite parts differ by an
  // integer multiple of alpha and the delta shift pins n. One edge per
  // unordered pair per label.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Weight diff = weight_sub(g.vertices[b], g.vertices[a]);
      for (int idx : w.integral_positive) {
        const PositiveRoot& pr = w.rs->positive[idx];
        const Rational p = dot_pairing(*w.rs, g.vertices[a], pr.root);
        if (p == 0) continue;
        bool match = true;
        const QVec afw = w.rs->root_fw(pr.root);
        for (int i = 0; i < w.rs->rank && match; ++i)
          if (diff.finite[i] != -p * afw[i]) match = false;
        if (!match) continue;
        const Rational nr = diff.delta / (-p);
        if (!is_integer(nr)) continue;
        MomentGraphEdge e;
        const bool a_lower = g.less(a, b);
        e.u = a_lower ? a : b;
        e.v = a_lower ? b : a;
        e.label = normalized_label(pr.coroot);
        g.edges.push_back(std::move(e));
        break;  // the label is unique for the pair: roots are not proportional
      }
    }
  }
  return g;
}

std::optional<GKMViolation> gkm_check(const MomentGraph& g) {
  for (int v = 0; v < g.size(); ++v) {
    const std::vector<int> inc = g.edges_at(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (g.edges[inc[i]].label.proportional_to(g.edges[inc[j]].label))
          return GKMViolation{v, inc[i], inc[j]};
  }
  return std::nullopt;
}

bool delta_condition_check(const std::vector<Weight>& weights) {
  for (std::size_t a = 0; a < weights.size(); ++a)
    for (std::size_t b = a + 1; b < weights.size(); ++b)
      if (weights[a].finite == weights[b].finite && weights[a].delta != weights[b].delta)
        return false;
  return true;
}

std::string coroot_label_string(const LinearForm& label) {
  std::string out;
  for (int i = 0; i < label.nvars(); ++i) {
    const Rational& c = label.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c != 1) out += rat_to_string(c) + "*";
    out += "a" + std::to_string(i + 1) + "^";
  }
  return out.empty() ? "0" : out;
}

std::string weight_label_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.finite.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(w.finite[i]);
  }
  out += ")+" + rat_to_string(w.delta) + "d";
  return out;
}

std::string graph_to_dot(const MomentGraph& g) {
  // Vertices grouped into ranks by order depth.
  std::vector<int> depth(g.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < g.size(); ++i)
      for (int j = 0; j < g.size(); ++j)
        if (g.less(i, j) && depth[j] < depth[i] + 1) {
          depth[j] = depth[i] + 1;
          changed = true;
        }
  }
  int maxd = 0;
  for (int d : depth) maxd = std::max(maxd, d);

  std::ostringstream os;
  os << "digraph momentgraph {\n";
  os << "  rankdir=BT;\n";
  for (int i = 0; i < g.size(); ++i)
    os << "  v" << i << " [label=\"" << weight_label_string(g.vertices[i]) << "\"];\n";
  for (int d = 0; d <= maxd; ++d) {
    os << "  { rank=same;";
    for (int i = 0; i < g.size(); ++i)
      if (depth[i] == d) os << " v" << i << ";";
    os << " }\n";
  }
  for (const auto& e : g.edges)
    os << "  v" << e.u << " -> v" << e.v << " [dir=none, label=\""
       << coroot_label_string(e.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace critmg
