#include "critmg/section_module.hpp"

#include <random>

namespace critmg {

std::vector<int> SectionModule::slots_of_vertex(int v) const {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(slots.size()); ++s)
    if (slots[s].vertex == v) out.push_back(s);
  return out;
}

std::vector<int> SectionModule::slots_of_vertices(const std::vector<int>& vs) const {
  std::vector<bool> in(graph.size(), false);
  for (int v : vs) in[v] = true;
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(slots.size()); ++s)
    if (in[slots[s].vertex]) out.push_back(s);
  return out;
}

void SectionModule::validate() const {
  for (const auto& g : gens) {
    if (g.components.size() != slots.size())
      throw std::invalid_argument("generator component count mismatch");
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const Polynomial& p = g.components[s];
      if (p.is_zero()) continue;
      if (p.nvars() != graph.nvars)
        throw std::invalid_argument("generator component over a different ring");
      if (!p.is_homogeneous(g.degree - slots[s].shift))
        throw std::invalid_argument("generator component is not homogeneous");
    }
  }
}

SectionModule standard_module_V(const MomentGraph& g, int mu, int shift,
                                int degree_bound) {
  if (mu < 0 || mu >= g.size()) throw std::invalid_argument("invalid vertex");
  SectionModule m;
  m.graph = g;
  m.slots = {{mu, shift}};
  SectionModule::Generator gen;
  gen.degree = shift;
  gen.components = {Polynomial::constant(g.nvars, Rational(1))};
  m.gens.push_back(std::move(gen));
  m.degree_bound = degree_bound;
  return m;
}

// ---------------------------------------------------------------------------

AmbientLayout AmbientLayout::make(int nvars, const std::vector<Slot>& slots, int degree) {
  AmbientLayout l;
  l.nvars = nvars;
  l.degree = degree;
  l.slots = slots;
  std::size_t off = 0;
  for (const Slot& s : slots) {
    l.offset.push_back(off);
    if (degree - s.shift >= 0) {
      l.monos.push_back(monomial_basis(degree - s.shift, nvars));
      off += l.monos.back().size();
    } else {
      l.monos.push_back({});
    }
  }
  l.dim = off;
  return l;
}

QVec AmbientLayout::tuple_to_coords(const std::vector<Polynomial>& comps) const {
  QVec v(dim, Rational(0));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (comps[s].is_zero()) continue;
    if (monos[s].empty())
      throw std::invalid_argument("component in an empty graded slot");
    const QVec c = coeff_vector(comps[s], monos[s]);
    for (std::size_t i = 0; i < c.size(); ++i) v[offset[s] + i] = c[i];
  }
  return v;
}

std::vector<Polynomial> AmbientLayout::coords_to_tuple(const QVec& v) const {
  std::vector<Polynomial> out;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    QVec c(v.begin() + offset[s], v.begin() + offset[s] + monos[s].size());
    out.push_back(poly_from_coeffs(nvars, monos[s], c));
  }
  return out;
}

std::optional<QVec> GradedPiece::represent(const QVec& v) const {
  QMatrix at(span_vectors.size());
  for (std::size_t j = 0; j < layout.dim; ++j) {
    QVec row(span_vectors.size());
    for (std::size_t i = 0; i < span_vectors.size(); ++i) row[i] = span_vectors[i][j];
    at.add_row(std::move(row));
  }
  return solve_linear(std::move(at), v);
}

std::vector<QVec> GradedPiece::syzygies() const {
  QMatrix at(span_vectors.size());
  for (std::size_t j = 0; j < layout.dim; ++j) {
    QVec row(span_vectors.size());
    for (std::size_t i = 0; i < span_vectors.size(); ++i) row[i] = span_vectors[i][j];
    at.add_row(std::move(row));
  }
  return kernel_basis(std::move(at));
}

GradedPiece graded_piece(const SectionModule& m, int degree) {
  GradedPiece p;
  p.layout = AmbientLayout::make(m.nvars(), m.slots, degree);
  std::vector<QVec> vectors;
  for (int gi = 0; gi < static_cast<int>(m.gens.size()); ++gi) {
    const auto& g = m.gens[gi];
    const int mdeg = degree - g.degree;
    if (mdeg < 0) continue;
    for (const Exponents& e : monomial_basis(mdeg, m.nvars())) {
      const Polynomial mono = Polynomial::monomial(m.nvars(), e, Rational(1));
      std::vector<Polynomial> comps;
      comps.reserve(m.slots.size());
      for (const Polynomial& c : g.components) comps.push_back(c * mono);
      vectors.push_back(p.layout.tuple_to_coords(comps));
      p.span_tags.push_back({gi, e});
    }
  }
  p.span_vectors = vectors;
  p.space = Subspace::span(p.layout.dim, vectors);
  return p;
}

// ---------------------------------------------------------------------------
// Internal degreewise family machinery.

namespace {

// Images of a basis under multiplication by the degree-one variables,
// pushed from layout at degree d-1 into layout at degree d.
std::vector<QVec> s1_multiples(const AmbientLayout& from, const AmbientLayout& to,
                               const std::vector<QVec>& basis) {
  std::vector<QVec> out;
  for (const QVec& b : basis) {
    const std::vector<Polynomial> tup = from.coords_to_tuple(b);
    for (int i = 0; i < from.nvars; ++i) {
      const Polynomial xi = Polynomial::variable(from.nvars, i);
      std::vector<Polynomial> mult;
      mult.reserve(tup.size());
      for (const Polynomial& c : tup) mult.push_back(c * xi);
      out.push_back(to.tuple_to_coords(mult));
    }
  }
  return out;
}

struct Family {
  int nvars = 0;
  std::vector<Slot> slots;
  std::vector<AmbientLayout> layout;  // 0..D
  std::vector<Subspace> piece;        // 0..D
  int bound() const { return static_cast<int>(piece.size()) - 1; }
};

Family family_of_module(const SectionModule& m) {
  Family f;
  f.nvars = m.nvars();
  f.slots = m.slots;
  for (int d = 0; d <= m.degree_bound; ++d) {
    GradedPiece p = graded_piece(m, d);
    f.layout.push_back(p.layout);
    f.piece.push_back(p.space);
  }
  return f;
}

// Project a family onto a subset of its slots.
Family project_family(const Family& f, const std::vector<int>& slot_subset) {
  Family out;
  out.nvars = f.nvars;
  for (int s : slot_subset) out.slots.push_back(f.slots[s]);
  for (int d = 0; d <= f.bound(); ++d) {
    AmbientLayout l = AmbientLayout::make(f.nvars, out.slots, d);
    std::vector<QVec> vecs;
    for (const QVec& b : f.piece[d].basis()) {
      QVec v(l.dim, Rational(0));
      for (std::size_t si = 0; si < slot_subset.size(); ++si) {
        const int s = slot_subset[si];
        for (std::size_t i = 0; i < f.layout[d].monos[s].size(); ++i)
          v[l.offset[si] + i] = b[f.layout[d].offset[s] + i];
      }
      vecs.push_back(std::move(v));
    }
    out.layout.push_back(std::move(l));
    out.piece.push_back(Subspace::span(out.layout[d].dim, vecs));
  }
  return out;
}

// Elements with vanishing projection onto the given slots, i.e. the kernel
// of the slot projection inside each graded piece.
Family kernel_family(const Family& f, const std::vector<int>& kill_slots) {
  Family out;
  out.nvars = f.nvars;
  out.slots = f.slots;
  std::vector<bool> kill(f.slots.size(), false);
  for (int s : kill_slots) kill[s] = true;
  for (int d = 0; d <= f.bound(); ++d) {
    out.layout.push_back(f.layout[d]);
    const auto& basis = f.piece[d].basis();
    // Combos of basis rows whose killed coordinates vanish.
    std::vector<std::size_t> killed_cols;
    for (std::size_t s = 0; s < f.slots.size(); ++s)
      if (kill[s])
        for (std::size_t i = 0; i < f.layout[d].monos[s].size(); ++i)
          killed_cols.push_back(f.layout[d].offset[s] + i);
    QMatrix sys(basis.size());
    for (std::size_t col : killed_cols) {
      QVec row(basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i) row[i] = basis[i][col];
      sys.add_row(std::move(row));
    }
    std::vector<QVec> combos =
        basis.empty() ? std::vector<QVec>{} : kernel_basis(std::move(sys));
    std::vector<QVec> vecs;
    for (const QVec& c : combos) {
      QVec v(f.layout[d].dim, Rational(0));
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < f.layout[d].dim; ++j) v[j] += c[i] * basis[i][j];
      vecs.push_back(std::move(v));
    }
    out.piece.push_back(Subspace::span(f.layout[d].dim, vecs));
  }
  return out;
}

S1Map family_s1(const Family& f) {
  return [&f](int d, const std::vector<QVec>& below) {
    return s1_multiples(f.layout[d - 1], f.layout[d], below);
  };
}

std::vector<DegreeVec> minimal_generators(const Family& f) {
  return nakayama_generators(f.piece, family_s1(f));
}

GradedDescriptor describe(const Family& f, int nvars) {
  GradedDescriptor out;
  for (int d = 0; d <= f.bound(); ++d) out.dims.push_back(f.piece[d].dim());
  for (const auto& g : minimal_generators(f)) out.gen_degrees.push_back(g.degree);
  out.free_up_to_bound = true;
  for (int d = 0; d <= f.bound(); ++d) {
    std::size_t expect = 0;
    for (int e : out.gen_degrees)
      if (d - e >= 0) expect += monomial_basis(d - e, nvars).size();
    if (expect != static_cast<std::size_t>(out.dims[d])) out.free_up_to_bound = false;
  }
  return out;
}

SectionModule module_from_family(const MomentGraph& g, const Family& f, int bound) {
  SectionModule m;
  m.graph = g;
  m.slots = f.slots;
  m.degree_bound = bound;
  for (const auto& dv : minimal_generators(f)) {
    SectionModule::Generator gen;
    gen.degree = dv.degree;
    gen.components = f.layout[dv.degree].coords_to_tuple(dv.coords);
    m.gens.push_back(std::move(gen));
  }
  return m;
}

}  // namespace

std::vector<DegreeVec> nakayama_generators(const std::vector<Subspace>& pieces,
                                           const S1Map& s1) {
  std::vector<DegreeVec> out;
  for (int d = 0; d < static_cast<int>(pieces.size()); ++d) {
    const std::size_t dim = pieces[d].ambient_dim();
    Subspace covered(dim);
    if (d > 0) covered = Subspace::span(dim, s1(d, pieces[d - 1].basis()));
    for (const QVec& b : pieces[d].basis()) {
      QVec r = covered.reduce(b);
      if (std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; }))
        continue;
      out.push_back({d, b});
      covered = covered.sum(Subspace::span(dim, {b}));
    }
  }
  return out;
}

SectionModule module_from_pieces(const MomentGraph& g, const std::vector<Slot>& slots,
                                 const std::vector<Subspace>& pieces, int bound) {
  Family f;
  f.nvars = g.nvars;
  f.slots = slots;
  for (int d = 0; d <= bound; ++d) f.layout.push_back(AmbientLayout::make(g.nvars, slots, d));
  f.piece = pieces;
  return module_from_family(g, f, bound);
}

bool descriptor_free(const GradedDescriptor& d, int nvars) {
  (void)nvars;
  return d.free_up_to_bound;
}

// ---------------------------------------------------------------------------

int generic_rank(const SectionModule& m, int vertex) {
  const std::vector<int> vslots = m.slots_of_vertex(vertex);
  if (vslots.empty() || m.gens.empty()) return 0;

  // Deterministic pseudorandomness: the rank over the fraction field is the
  // maximum over evaluations, so three agreeing sample ranks certify with
  // overwhelming margin at these sizes; disagreement retries with a larger
  // coordinate box.
  std::mt19937_64 rng(0x5eed1234abcdULL);
  long box = 1000;
  for (int attempt = 0; attempt < 8; ++attempt, box *= 100) {
    std::vector<int> ranks;
    for (int trial = 0; trial < 3; ++trial) {
      QVec point(m.nvars());
      bool good = true;
      do {
        good = true;
        for (auto& c : point)
          c = Rational(static_cast<long>(rng() % (2 * box + 1)) - box);
        for (const auto& e : m.graph.edges)
          if (e.label.to_poly().eval(point) == 0) good = false;
      } while (!good);
      QMatrix mat(vslots.size());
      for (const auto& g : m.gens) {
        QVec row(vslots.size());
        for (std::size_t i = 0; i < vslots.size(); ++i)
          row[i] = g.components[vslots[i]].eval(point);
        mat.add_row(std::move(row));
      }
      ranks.push_back(static_cast<int>(rref(mat).size()));
    }
    if (ranks[0] == ranks[1] && ranks[1] == ranks[2]) return ranks[0];
  }
  throw std::runtime_error("generic_rank: persistent rank disagreement");
}

SectionModule restrict_closed(const SectionModule& m, const std::vector<int>& closed) {
  if (!m.graph.subset_closed(closed))
    throw std::invalid_argument("restrict_closed: subset is not closed");
  std::vector<bool> in(m.graph.size(), false);
  for (int v : closed) in[v] = true;
  std::vector<int> open_vs;
  for (int v = 0; v < m.graph.size(); ++v)
    if (!in[v]) open_vs.push_back(v);

  const Family f = family_of_module(m);
  const Family ker = kernel_family(f, m.slots_of_vertices(open_vs));
  // Components on the open slots vanish; drop them from the ambient.
  const Family small = project_family(ker, m.slots_of_vertices(closed));
  return module_from_family(m.graph, small, m.degree_bound);
}

SectionModule quotient_open(const SectionModule& m, const std::vector<int>& open) {
  if (!m.graph.subset_open(open))
    throw std::invalid_argument("quotient_open: subset is not open");
  const Family f = family_of_module(m);
  const Family img = project_family(f, m.slots_of_vertices(open));
  return module_from_family(m.graph, img, m.degree_bound);
}

GradedDescriptor stalk(const SectionModule& m, int vertex) {
  const Family f = family_of_module(m);
  return describe(project_family(f, m.slots_of_vertex(vertex)), m.nvars());
}

namespace {

// The degreewise pieces of M^E: the Z(E)-submodule generated by the image
// of M on the two endpoint slot groups. Z(E) = S(1,1) + S(0,label), so one
// closure step suffices:
//   (M^E)_d = image_d + (0, label * (upper part of image_{d-1})).
Family edge_family(const SectionModule& m, int edge) {
  const auto& e = m.graph.edges[edge];
  const std::vector<int> uslots = m.slots_of_vertex(e.u);
  const std::vector<int> vslots = m.slots_of_vertex(e.v);
  std::vector<int> both = uslots;
  both.insert(both.end(), vslots.begin(), vslots.end());

  const Family f = family_of_module(m);
  Family img = project_family(f, both);

  const Polynomial ell = e.label.to_poly();
  Family out;
  out.nvars = img.nvars;
  out.slots = img.slots;
  for (int d = 0; d <= img.bound(); ++d) {
    out.layout.push_back(img.layout[d]);
    std::vector<QVec> vecs = img.piece[d].basis();
    if (d > 0) {
      for (const QVec& b : img.piece[d - 1].basis()) {
        std::vector<Polynomial> tup = img.layout[d - 1].coords_to_tuple(b);
        std::vector<Polynomial> moved(tup.size(), Polynomial::zero(m.nvars()));
        // upper-vertex components sit after the uslots block
        for (std::size_t i = uslots.size(); i < tup.size(); ++i)
          moved[i] = tup[i] * ell;
        vecs.push_back(img.layout[d].tuple_to_coords(moved));
      }
    }
    out.piece.push_back(Subspace::span(out.layout[d].dim, vecs));
  }
  return out;
}

}  // namespace

GradedDescriptor edge_module(const SectionModule& m, int edge) {
  return describe(edge_family(m, edge), m.nvars());
}

GradedDescriptor edge_intersection(const SectionModule& m, int edge, int vertex) {
  const auto& e = m.graph.edges[edge];
  if (vertex != e.u && vertex != e.v)
    throw std::invalid_argument("vertex is not an endpoint of the edge");
  const int other = vertex == e.u ? e.v : e.u;
  Family fam = edge_family(m, edge);
  // Slots of `vertex` within the family ambient.
  std::vector<int> keep, kill;
  for (int s = 0; s < static_cast<int>(fam.slots.size()); ++s)
    (fam.slots[s].vertex == vertex ? keep : kill).push_back(s);
  (void)other;
  return describe(project_family(kernel_family(fam, kill), keep), m.nvars());
}

FlagReport verma_flag_report(const SectionModule& m) {
  FlagReport out;
  out.is_flag = true;
  const Family f = family_of_module(m);
  for (const auto& open : m.graph.all_open_subsets()) {
    const Family img = project_family(f, m.slots_of_vertices(open));
    const GradedDescriptor d = describe(img, m.nvars());
    out.open_freeness.push_back({open, d.free_up_to_bound});
    if (!d.free_up_to_bound) out.is_flag = false;
  }
  for (int v = 0; v < m.graph.size(); ++v) {
    out.multiplicities.push_back(generic_rank(m, v));
    out.generator_degrees.push_back(
        describe(project_family(f, m.slots_of_vertex(v)), m.nvars()).gen_degrees);
  }
  return out;
}

ProjectiveReport check_projective(const SectionModule& m) {
  ProjectiveReport out;
  if (gkm_check(m.graph).has_value())
    throw std::invalid_argument("check_projective: graph violates the GKM condition");

  // Prop 4.8 assumes M is a module over the structure algebra; verify the
  // generators stay in M under a degreewise basis of Z(K).
  out.z_stable = true;
  int maxgen = 0;
  for (const auto& g : m.gens) maxgen = std::max(maxgen, g.degree);
  std::vector<GradedPiece> pieces;
  for (int d = 0; d <= m.degree_bound; ++d) pieces.push_back(graded_piece(m, d));
  for (int zdeg = 1; zdeg <= m.degree_bound - maxgen && out.z_stable; ++zdeg) {
    const StructureBasis zb = structure_basis(m.graph, zdeg);
    for (const auto& z : zb.basis) {
      for (const auto& g : m.gens) {
        std::vector<Polynomial> img(m.slots.size(), Polynomial::zero(m.nvars()));
        for (std::size_t s = 0; s < m.slots.size(); ++s)
          img[s] = g.components[s] * z.components[m.slots[s].vertex];
        const int d = g.degree + zdeg;
        if (!pieces[d].space.contains(pieces[d].layout.tuple_to_coords(img))) {
          out.z_stable = false;
          break;
        }
      }
      if (!out.z_stable) break;
    }
  }

  const Family f = family_of_module(m);
  for (int v = 0; v < m.graph.size(); ++v) {
    const GradedDescriptor d = describe(project_family(f, m.slots_of_vertex(v)), m.nvars());
    out.stalk_free.push_back({v, d.free_up_to_bound});
  }

  // (M^E)_chi = label * M^chi for the lower endpoint chi of every edge.
  for (int ei = 0; ei < static_cast<int>(m.graph.edges.size()); ++ei) {
    const auto& e = m.graph.edges[ei];
    Family fam = edge_family(m, ei);
    std::vector<int> keep, kill;
    for (int s = 0; s < static_cast<int>(fam.slots.size()); ++s)
      (fam.slots[s].vertex == e.u ? keep : kill).push_back(s);
    const Family lower = project_family(kernel_family(fam, kill), keep);

    const Family stalk_u = project_family(f, m.slots_of_vertex(e.u));
    const Polynomial ell = e.label.to_poly();
    bool ok = true;
    for (int d = 0; d <= f.bound() && ok; ++d) {
      std::vector<QVec> scaled;
      if (d > 0) {
        for (const QVec& b : stalk_u.piece[d - 1].basis()) {
          std::vector<Polynomial> tup = stalk_u.layout[d - 1].coords_to_tuple(b);
          for (auto& c : tup) c = c * ell;
          scaled.push_back(stalk_u.layout[d].tuple_to_coords(tup));
        }
      }
      const Subspace lhs = lower.piece[d];
      const Subspace rhs = Subspace::span(stalk_u.layout[d].dim, scaled);
      if (!(lhs == rhs)) ok = false;
    }
    out.edge_condition.push_back({ei, ok});
  }

  out.pass = out.z_stable;
  for (const auto& [v, okv] : out.stalk_free) out.pass = out.pass && okv;
  for (const auto& [e, oke] : out.edge_condition) out.pass = out.pass && oke;
  return out;
}

// ---------------------------------------------------------------------------

bool is_exact(const SectionModule& m1, const SectionModule& m2, const SectionModule& m3,
              const ModuleMap& f1, const ModuleMap& f2, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (m1.graph.size() != m2.graph.size() || m2.graph.size() != m3.graph.size())
    return fail("graphs differ");
  if (f1.mat.size() != m2.gens.size() ||
      (!f1.mat.empty() && f1.mat[0].size() != m1.gens.size()))
    throw std::invalid_argument("is_exact: first map has wrong shape");
  if (f2.mat.size() != m3.gens.size() ||
      (!f2.mat.empty() && f2.mat[0].size() != m2.gens.size()))
    throw std::invalid_argument("is_exact: second map has wrong shape");

  const int D = std::min({m1.degree_bound, m2.degree_bound, m3.degree_bound});

  // Ambient images of the source generators.
  auto gen_images = [](const SectionModule& src, const SectionModule& dst,
                       const ModuleMap& f) {
    std::vector<std::pair<int, std::vector<Polynomial>>> out;  // (degree, tuple)
    for (std::size_t i = 0; i < src.gens.size(); ++i) {
      std::vector<Polynomial> img(dst.slots.size(), Polynomial::zero(dst.nvars()));
      for (std::size_t j = 0; j < dst.gens.size(); ++j) {
        const Polynomial& c = f.mat[j][i];
        if (c.is_zero()) continue;
        if (!c.is_homogeneous(src.gens[i].degree - dst.gens[j].degree))
          throw std::invalid_argument("is_exact: map entry of wrong degree");
        for (std::size_t s = 0; s < dst.slots.size(); ++s)
          img[s] = img[s] + c * dst.gens[j].components[s];
      }
      out.push_back({src.gens[i].degree, std::move(img)});
    }
    return out;
  };
  const auto img1 = gen_images(m1, m2, f1);
  const auto img2 = gen_images(m2, m3, f2);

  for (int d = 0; d <= D; ++d) {
    const GradedPiece p1 = graded_piece(m1, d);
    const GradedPiece p2 = graded_piece(m2, d);
    const GradedPiece p3 = graded_piece(m3, d);

    // Images of the spanning vectors under the maps.
    auto span_images = [&](const GradedPiece& src,
                           const auto& gimgs, const SectionModule& dst,
                           const AmbientLayout& dstlay) {
      std::vector<QVec> out;
      for (const auto& [gi, mono] : src.span_tags) {
        const Polynomial mp = Polynomial::monomial(dst.nvars(), mono, Rational(1));
        std::vector<Polynomial> tup;
        tup.reserve(dst.slots.size());
        for (const Polynomial& c : gimgs[gi].second) tup.push_back(c * mp);
        out.push_back(dstlay.tuple_to_coords(tup));
      }
      return out;
    };
    const std::vector<QVec> f1span = span_images(p1, img1, m2, p2.layout);
    const std::vector<QVec> f2span = span_images(p2, img2, m3, p3.layout);

    // Well-definedness: syzygies map to zero.
    auto check_syz = [&](const GradedPiece& src, const std::vector<QVec>& imgs,
                         std::size_t dstdim) {
      for (const QVec& c : src.syzygies()) {
        QVec v(dstdim, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i)
          for (std::size_t j = 0; j < dstdim; ++j) v[j] += c[i] * imgs[i][j];
        if (!std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
          return false;
      }
      return true;
    };
    if (!check_syz(p1, f1span, p2.layout.dim)) return fail("first map not well defined");
    if (!check_syz(p2, f2span, p3.layout.dim)) return fail("second map not well defined");

    // Composite vanishes (the full vertex set is itself open, so vanishing
    // in full coordinates covers every truncation).
    for (std::size_t i = 0; i < p1.span_vectors.size(); ++i) {
      const auto rep = p2.represent(f1span[i]);
      if (!rep) return fail("image of first map leaves the middle module");
      QVec v(p3.layout.dim, Rational(0));
      for (std::size_t k = 0; k < rep->size(); ++k)
        for (std::size_t j = 0; j < p3.layout.dim; ++j) v[j] += (*rep)[k] * f2span[k][j];
      if (!std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
        return fail("composite map is nonzero");
    }

    for (const auto& open : m2.graph.all_open_subsets()) {
      auto proj = [&](const SectionModule& mod, const AmbientLayout& lay,
                      const std::vector<QVec>& vecs) {
        const std::vector<int> keep = mod.slots_of_vertices(open);
        AmbientLayout sub = AmbientLayout::make(mod.nvars(),
                                                [&] {
                                                  std::vector<Slot> s;
                                                  for (int k : keep) s.push_back(mod.slots[k]);
                                                  return s;
                                                }(),
                                                d);
        std::vector<QVec> out;
        for (const QVec& v : vecs) {
          QVec w(sub.dim, Rational(0));
          for (std::size_t ki = 0; ki < keep.size(); ++ki)
            for (std::size_t i = 0; i < lay.monos[keep[ki]].size(); ++i)
              w[sub.offset[ki] + i] = v[lay.offset[keep[ki]] + i];
          out.push_back(std::move(w));
        }
        return std::make_pair(sub.dim, out);
      };

      const auto [dim1, s1] = proj(m1, p1.layout, p1.span_vectors);
      const auto [dim2, s2] = proj(m2, p2.layout, p2.span_vectors);
      const auto [dim3, s3] = proj(m3, p3.layout, p3.span_vectors);
      const auto [dim2i, f1s] = proj(m2, p2.layout, f1span);
      const auto [dim3i, f2s] = proj(m3, p3.layout, f2span);

      const Subspace A = Subspace::span(dim1, s1);
      const Subspace B = Subspace::span(dim2, s2);
      const Subspace C = Subspace::span(dim3, s3);
      const Subspace imF1 = Subspace::span(dim2i, f1s);
      const Subspace imF2 = Subspace::span(dim3i, f2s);

      // Truncated maps must be well defined: sections killed by the
      // projection must map into the kernel of the projection.
      auto trunc_ok = [&](const std::vector<QVec>& srcproj, const std::vector<QVec>& imgproj,
                          std::size_t dimi) {
        if (srcproj.empty()) return true;
        QMatrix sys(srcproj.size());
        for (std::size_t j = 0; j < srcproj[0].size(); ++j) {
          QVec row(srcproj.size());
          for (std::size_t i = 0; i < srcproj.size(); ++i) row[i] = srcproj[i][j];
          sys.add_row(std::move(row));
        }
        for (const QVec& c : kernel_basis(std::move(sys))) {
          QVec v(dimi, Rational(0));
          for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < dimi; ++j) v[j] += c[i] * imgproj[i][j];
          if (!std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
            return false;
        }
        return true;
      };
      if (!trunc_ok(s1, f1s, dim2i)) return fail("first map does not respect truncation");
      if (!trunc_ok(s2, f2s, dim3i)) return fail("second map does not respect truncation");

      if (imF1.dim() != A.dim()) return fail("first truncated map is not injective");
      if (!(imF2 == C)) return fail("second truncated map is not surjective");
      if (B.dim() != A.dim() + C.dim()) return fail("middle dimension mismatch");
      if (!B.contains(imF1)) return fail("image not contained in middle");
    }
  }
  return true;
}

}  // namespace critmg
