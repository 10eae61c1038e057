#include "critmg/structure_algebra.hpp"

namespace critmg {

bool is_section(const MomentGraph& g, const SectionTuple& t) {
  if (static_cast<int>(t.components.size()) != g.size())
    throw std::invalid_argument("is_section: component count mismatch");
  for (const auto& e : g.edges) {
    const Polynomial diff = t.components[e.u] - t.components[e.v];
    if (!reduce_mod_linear(diff, e.label).is_zero()) return false;
  }
  return true;
}

namespace {

StructureBasis basis_for(int nvars, int nvertices,
                         const std::vector<MomentGraphEdge>& edges, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  const std::vector<Exponents> monos = monomial_basis(degree, nvars);
  const std::size_t per_vertex = monos.size();
  const std::size_t dim = per_vertex * nvertices;

  // One block of equations per edge: the coefficients of
  // reduce_mod_linear(z_u - z_v, label) over the reduced monomials.
  std::vector<QVec> equations;
  for (const auto& e : edges) {
    // Row space indexed by monomials surviving the elimination.
    std::map<Exponents, std::size_t> reduced_index;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(per_vertex);
    for (std::size_t m = 0; m < per_vertex; ++m) {
      const Polynomial red = reduce_mod_linear(
          Polynomial::monomial(nvars, monos[m], Rational(1)), e.label);
      for (const auto& [exp, c] : red.terms()) {
        auto [it, fresh] = reduced_index.emplace(exp, reduced_index.size());
        cols[m].push_back({it->second, c});
      }
    }
    const std::size_t nred = reduced_index.size();
    std::vector<QVec> rows(nred, QVec(dim, Rational(0)));
    for (std::size_t m = 0; m < per_vertex; ++m) {
      for (const auto& [r, c] : cols[m]) {
        rows[r][e.u * per_vertex + m] += c;
        rows[r][e.v * per_vertex + m] -= c;
      }
    }
    for (auto& r : rows) equations.push_back(std::move(r));
  }

  GradedVectorSpaceBasis sol = solve_graded(dim, equations, degree);
  StructureBasis out;
  out.degree = degree;
  out.ambient_dim = dim;
  out.coords = sol.basis;
  for (const QVec& v : sol.basis) {
    SectionTuple t;
    for (int x = 0; x < nvertices; ++x) {
      QVec comp(v.begin() + x * per_vertex, v.begin() + (x + 1) * per_vertex);
      t.components.push_back(poly_from_coeffs(nvars, monos, comp));
    }
    out.basis.push_back(std::move(t));
  }
  return out;
}

}  // namespace

StructureBasis structure_basis(const MomentGraph& g, int degree) {
  return basis_for(g.nvars, g.size(), g.edges, degree);
}

StructureBasis edge_structure_basis(int nvars, const LinearForm& label, int degree) {
  MomentGraphEdge e;
  e.u = 0;
  e.v = 1;
  e.label = label;
  return basis_for(nvars, 2, {e}, degree);
}

}  // namespace critmg
