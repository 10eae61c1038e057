#include "critmg/bm_sheaf.hpp"

namespace critmg {

namespace {

// Coordinates of a sum of label-quotient copies: for each "qslot" (an
// already-built stalk generator seen through an edge quotient) the
// monomials of the right degree in the variables surviing the label's
// elimination variable.
struct QSlot {
  int edge = 0;     // edge index in the graph
  int gen = 0;      // generator index in the lower stalk
  int shift = 0;    // degree of that generator
  int elim = 0;     // eliminated variable of the label
};

struct QLayout {
  int nvars = 0;
  int degree = 0;
  std::vector<QSlot> slots;
  std::vector<std::size_t> offset;
  std::vector<std::vector<Exponents>> monos;
  std::size_t dim = 0;

  static QLayout make(int nvars, const std::vector<QSlot>& slots, int degree) {
    QLayout l;
    l.nvars = nvars;
    l.degree = degree;
    l.slots = slots;
    std::size_t off = 0;
    for (const QSlot& s : slots) {
      l.offset.push_back(off);
      std::vector<Exponents> ms;
      if (degree - s.shift >= 0)
        for (const Exponents& e : monomial_basis(degree - s.shift, nvars))
          if (e[s.elim] == 0) ms.push_back(e);
      off += ms.size();
      l.monos.push_back(std::move(ms));
    }
    l.dim = off;
    return l;
  }

  // Accumulate a reduced polynomial into the coordinates of one qslot.
  void add_poly(QVec& v, std::size_t slot, const Polynomial& reduced,
                const Rational& scale = Rational(1)) const {
    if (reduced.is_zero()) return;
    std::map<Exponents, std::size_t> pos;
    for (std::size_t i = 0; i < monos[slot].size(); ++i) pos[monos[slot][i]] = i;
    for (const auto& [e, c] : reduced.terms()) {
      auto it = pos.find(e);
      if (it == pos.end())
        throw std::logic_error("reduced polynomial leaves the quotient basis");
      v[offset[slot] + it->second] += c * scale;
    }
  }

  Polynomial slot_poly(const QVec& v, std::size_t slot) const {
    QVec c(v.begin() + offset[slot], v.begin() + offset[slot] + monos[slot].size());
    return poly_from_coeffs(nvars, monos[slot], c);
  }
};

// Multiplication by the degree-one variables inside the quotient ambient.
std::vector<QVec> qlayout_s1(const QLayout& from, const QLayout& to,
                             const std::vector<LinearForm>& labels,
                             const std::vector<QVec>& basis) {
  std::vector<QVec> out;
  for (const QVec& b : basis) {
    for (int var = 0; var < from.nvars; ++var) {
      const Polynomial xi = Polynomial::variable(from.nvars, var);
      QVec v(to.dim, Rational(0));
      for (std::size_t s = 0; s < from.slots.size(); ++s) {
        const Polynomial p = from.slot_poly(b, s);
        if (p.is_zero()) continue;
        to.add_poly(v, s, reduce_mod_linear(p * xi, labels[from.slots[s].edge]));
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

// Stalk-tuple ambient over a vertex subset: one Slot per (vertex, stalk
// generator), shifted by the generator degree.
std::vector<Slot> stalk_slots(const BMSheaf& b, const std::vector<int>& vertices) {
  std::vector<Slot> out;
  for (int v : vertices)
    for (int d : b.stalks[v].gen_degrees) out.push_back({v, d});
  return out;
}

// Sections of the sheaf over a vertex subset, degreewise: tuples in the
// stalk ambient whose edge restrictions agree across every internal edge.
Subspace sections_at(const BMSheaf& b, const std::vector<int>& vertices,
                     const AmbientLayout& lay, int degree) {
  std::vector<bool> in(b.graph.size(), false);
  for (int v : vertices) in[v] = true;

  // Unknown columns: (slot, monomial). Constraint rows per internal edge.
  std::vector<QVec> rows;
  for (int ei = 0; ei < static_cast<int>(b.graph.edges.size()); ++ei) {
    const auto& e = b.graph.edges[ei];
    if (!in[e.u] || !in[e.v]) continue;
    std::vector<QSlot> qslots;
    const int elim = elimination_variable(e.label);
    for (int i = 0; i < static_cast<int>(b.stalks[e.u].gen_degrees.size()); ++i)
      qslots.push_back({ei, i, b.stalks[e.u].gen_degrees[i], elim});
    const QLayout ql = QLayout::make(b.graph.nvars, qslots, degree);
    if (ql.dim == 0) continue;

    std::vector<QVec> cols(lay.dim, QVec(ql.dim, Rational(0)));
    for (std::size_t s = 0; s < lay.slots.size(); ++s) {
      const Slot& slot = lay.slots[s];
      if (slot.vertex != e.u && slot.vertex != e.v) continue;
      // Position of this stalk generator among the vertex's generators.
      int genpos = 0;
      for (std::size_t t = 0; t < s; ++t)
        if (lay.slots[t].vertex == slot.vertex) ++genpos;
      for (std::size_t mi = 0; mi < lay.monos[s].size(); ++mi) {
        const Polynomial mono =
            Polynomial::monomial(b.graph.nvars, lay.monos[s][mi], Rational(1));
        QVec& col = cols[lay.offset[s] + mi];
        if (slot.vertex == e.u) {
          ql.add_poly(col, genpos, reduce_mod_linear(mono, e.label));
        } else {
          const auto& rho = b.edge_maps[ei];  // rho[i][k]: lower i, upper k
          for (std::size_t i = 0; i < rho.size(); ++i) {
            if (rho[i][genpos].is_zero()) continue;
            ql.add_poly(col, i, reduce_mod_linear(mono * rho[i][genpos], e.label),
                        Rational(-1));
          }
        }
      }
    }
    for (std::size_t r = 0; r < ql.dim; ++r) {
      QVec row(lay.dim);
      for (std::size_t c = 0; c < lay.dim; ++c) row[c] = cols[c][r];
      rows.push_back(std::move(row));
    }
  }

  GradedVectorSpaceBasis sol = solve_graded(lay.dim, rows, degree);
  return Subspace::span(lay.dim, sol.basis);
}

}  // namespace

BMSheaf bm_construct(const MomentGraph& g, int base, int degree_bound) {
  if (gkm_check(g).has_value())
    throw std::invalid_argument("bm_construct: graph violates the GKM condition");
  const std::vector<int> mins = g.minimal_vertices();
  if (mins.size() != 1 || mins[0] != base)
    throw std::invalid_argument("bm_construct: base is not the unique minimal vertex");

  BMSheaf b;
  b.graph = g;
  b.base = base;
  b.degree_bound = degree_bound;
  b.stalks.resize(g.size());
  b.edge_maps.resize(g.edges.size());
  b.boundary_dims.assign(g.size(), std::vector<int>(degree_bound + 1, 0));

  // Linear extension of the order, starting at the base.
  std::vector<int> order;
  std::vector<bool> done(g.size(), false);
  while (static_cast<int>(order.size()) < g.size()) {
    int pick = -1;
    for (int v = 0; v < g.size() && pick < 0; ++v) {
      if (done[v]) continue;
      bool ready = true;
      for (int u = 0; u < g.size(); ++u)
        if (g.less(u, v) && !done[u]) ready = false;
      if (ready) pick = v;
    }
    if (pick < 0) throw std::logic_error("order is not acyclic");
    done[pick] = true;
    order.push_back(pick);
  }

  for (int step = 0; step < g.size(); ++step) {
    const int x = order[step];
    if (x == base) {
      b.stalks[x].gen_degrees = {0};
      for (int d = 0; d <= degree_bound; ++d) b.boundary_dims[x][d] = 0;
      continue;
    }
    std::vector<int> below;
    for (int y = 0; y < g.size(); ++y)
      if (g.less(y, x)) below.push_back(y);
    std::vector<int> down_edges;
    for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei)
      if (g.edges[ei].v == x) down_edges.push_back(ei);

    // Boundary ambient: quotients of the lower stalks across the incoming
    // edges.
    std::vector<QSlot> qslots;
    std::vector<LinearForm> labels(g.edges.size());
    for (int ei : down_edges) {
      const auto& e = g.edges[ei];
      labels[ei] = e.label;
      const int elim = elimination_variable(e.label);
      for (int i = 0; i < static_cast<int>(b.stalks[e.u].gen_degrees.size()); ++i)
        qslots.push_back({ei, i, b.stalks[e.u].gen_degrees[i], elim});
    }

    const std::vector<Slot> bslots = stalk_slots(b, below);
    std::vector<QLayout> qlay;
    std::vector<Subspace> boundary;
    for (int d = 0; d <= degree_bound; ++d) {
      qlay.push_back(QLayout::make(g.nvars, qslots, d));
      const AmbientLayout lay = AmbientLayout::make(g.nvars, bslots, d);
      const Subspace secs = sections_at(b, below, lay, d);

      std::vector<QVec> images;
      for (const QVec& sec : secs.basis()) {
        QVec img(qlay[d].dim, Rational(0));
        for (std::size_t qs = 0; qs < qslots.size(); ++qs) {
          const QSlot& q = qslots[qs];
          const int lower = g.edges[q.edge].u;
          // Locate the (lower, q.gen) slot in the section ambient.
          int genpos = -1, seen = 0;
          for (std::size_t s = 0; s < bslots.size(); ++s) {
            if (bslots[s].vertex != lower) continue;
            if (seen == q.gen) {
              genpos = static_cast<int>(s);
              break;
            }
            ++seen;
          }
          const Polynomial comp = [&] {
            QVec c(sec.begin() + lay.offset[genpos],
                   sec.begin() + lay.offset[genpos] + lay.monos[genpos].size());
            return poly_from_coeffs(g.nvars, lay.monos[genpos], c);
          }();
          if (!comp.is_zero())
            qlay[d].add_poly(img, qs, reduce_mod_linear(comp, g.edges[q.edge].label));
        }
        images.push_back(std::move(img));
      }
      boundary.push_back(Subspace::span(qlay[d].dim, images));
      b.boundary_dims[x][d] = static_cast<int>(boundary.back().dim());
    }

    const std::vector<DegreeVec> gens = nakayama_generators(
        boundary, [&](int d, const std::vector<QVec>& belowb) {
          return qlayout_s1(qlay[d - 1], qlay[d], labels, belowb);
        });

    for (int ei : down_edges)
      b.edge_maps[ei].assign(b.stalks[g.edges[ei].u].gen_degrees.size(), {});
    for (const auto& dv : gens) {
      b.stalks[x].gen_degrees.push_back(dv.degree);
      for (std::size_t qs = 0; qs < qslots.size(); ++qs) {
        const QSlot& q = qslots[qs];
        b.edge_maps[q.edge][q.gen].push_back(qlay[dv.degree].slot_poly(dv.coords, qs));
      }
    }
  }
  return b;
}

SectionModule global_sections(const BMSheaf& b) {
  std::vector<int> all(b.graph.size());
  for (int i = 0; i < b.graph.size(); ++i) all[i] = i;
  const std::vector<Slot> slots = stalk_slots(b, all);
  std::vector<Subspace> pieces;
  for (int d = 0; d <= b.degree_bound; ++d) {
    const AmbientLayout lay = AmbientLayout::make(b.graph.nvars, slots, d);
    pieces.push_back(sections_at(b, all, lay, d));
  }
  return module_from_pieces(b.graph, slots, pieces, b.degree_bound);
}

SoergelReport check_soergel_assumptions(const MomentGraph& g, int base, int degree_bound) {
  SoergelReport rep;
  const BMSheaf b = bm_construct(g, base, degree_bound);
  rep.multiplicity_free = true;
  for (const auto& st : b.stalks)
    if (st.gen_degrees.size() > 1) rep.multiplicity_free = false;
  const SectionModule gamma = global_sections(b);
  rep.support_equals_k = true;
  for (int v = 0; v < g.size(); ++v)
    if (generic_rank(gamma, v) == 0) rep.support_equals_k = false;
  rep.delta_condition = delta_condition_check(g.vertices);
  rep.pass = rep.multiplicity_free && rep.support_equals_k && rep.delta_condition;
  return rep;
}

EndomorphismImage endomorphism_image(const SectionModule& m, int dmax) {
  int maxgen = 0;
  for (const auto& g : m.gens) maxgen = std::max(maxgen, g.degree);
  if (dmax + maxgen > m.degree_bound)
    throw std::invalid_argument(
        "endomorphism_image: degree bound too small to certify the requested degrees");

  std::vector<GradedPiece> pieces;
  for (int d = 0; d <= m.degree_bound; ++d) pieces.push_back(graded_piece(m, d));

  EndomorphismImage out;
  const int nv = m.graph.size();
  for (int d = 0; d <= dmax; ++d) {
    const std::vector<Exponents> monos = monomial_basis(d, m.nvars());
    const std::size_t zdim = static_cast<std::size_t>(nv) * monos.size();

    // For each z-coordinate and each generator, the membership residue of
    // z*g in the module; the kernel of the assembled residue matrix is the
    // degree-d endomorphism image.
    std::vector<QVec> rows;
    for (const auto& g : m.gens) {
      const GradedPiece& target = pieces[d + g.degree];
      std::vector<QVec> residues(zdim);
      for (int v = 0; v < nv; ++v) {
        for (std::size_t mi = 0; mi < monos.size(); ++mi) {
          const Polynomial mono = Polynomial::monomial(m.nvars(), monos[mi], Rational(1));
          std::vector<Polynomial> img(m.slots.size(), Polynomial::zero(m.nvars()));
          for (std::size_t s = 0; s < m.slots.size(); ++s)
            if (m.slots[s].vertex == v) img[s] = g.components[s] * mono;
          residues[v * monos.size() + mi] =
              target.space.reduce(target.layout.tuple_to_coords(img));
        }
      }
      for (std::size_t j = 0; j < target.layout.dim; ++j) {
        QVec row(zdim);
        bool nonzero = false;
        for (std::size_t z = 0; z < zdim; ++z) {
          row[z] = residues[z][j];
          if (row[z] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }

    const GradedVectorSpaceBasis sol = solve_graded(zdim, rows, d);
    out.dims.push_back(static_cast<int>(sol.basis.size()));
    std::vector<SectionTuple> tuples;
    for (const QVec& v : sol.basis) {
      SectionTuple t;
      for (int vx = 0; vx < nv; ++vx) {
        QVec c(v.begin() + vx * monos.size(), v.begin() + (vx + 1) * monos.size());
        t.components.push_back(poly_from_coeffs(m.nvars(), monos, c));
      }
      tuples.push_back(std::move(t));
    }
    out.basis.push_back(std::move(tuples));
  }
  return out;
}

int hom_dimension(const SectionModule& m, const SectionModule& n, int degree) {
  if (m.graph.size() != n.graph.size())
    throw std::invalid_argument("hom_dimension: modules over different graphs");
  const int d = degree;

  std::vector<GradedPiece> mp, np;
  for (int t = 0; t <= m.degree_bound; ++t) mp.push_back(graded_piece(m, t));
  for (int t = 0; t <= n.degree_bound; ++t) np.push_back(graded_piece(n, t));

  // Unknowns: coefficients of f(g_i) over the basis of N_{e_i + d}.
  std::vector<std::size_t> block_offset;
  std::size_t unknowns = 0;
  for (const auto& g : m.gens) {
    if (g.degree + d > n.degree_bound)
      throw std::invalid_argument("hom_dimension: target bound too small");
    block_offset.push_back(unknowns);
    unknowns += np[g.degree + d].space.dim();
  }

  std::vector<QVec> rows;
  auto add_rows = [&](const std::vector<QVec>& cols, std::size_t target_dim) {
    for (std::size_t j = 0; j < target_dim; ++j) {
      QVec row(unknowns);
      bool nonzero = false;
      for (std::size_t u = 0; u < unknowns; ++u) {
        row[u] = cols[u][j];
        if (row[u] != 0) nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  };

  // Image in N-ambient coords at degree `target` of (unknown block i) when
  // f(g_i) is multiplied by `mult` (a polynomial of matching degree) and z
  // acts componentwise by vertex (z empty = no action).
  auto image_cols = [&](std::size_t unknowns_count, int i, const Polynomial& mult,
                        const std::vector<Polynomial>* z, int target) {
    std::vector<QVec> cols(unknowns_count, QVec(np[target].layout.dim, Rational(0)));
    const GradedPiece& src = np[m.gens[i].degree + d];
    for (std::size_t k = 0; k < src.space.dim(); ++k) {
      std::vector<Polynomial> tup = src.layout.coords_to_tuple(src.space.basis()[k]);
      for (std::size_t s = 0; s < n.slots.size(); ++s) {
        tup[s] = tup[s] * mult;
        if (z) tup[s] = tup[s] * (*z)[n.slots[s].vertex];
      }
      cols[block_offset[i] + k] = np[target].layout.tuple_to_coords(tup);
    }
    return cols;
  };

  // (a) Syzygy constraints: relations among the spanning vectors of M_t
  // must map to zero in N_{t+d}.
  for (int t = 0; t <= m.degree_bound && t + d <= n.degree_bound; ++t) {
    const GradedPiece& piece = mp[t];
    const std::vector<QVec> syz = piece.syzygies();
    if (syz.empty()) continue;
    // Columns for every spanning tag.
    std::vector<std::vector<QVec>> tag_cols;
    for (const auto& [gi, mono] : piece.span_tags)
      tag_cols.push_back(image_cols(unknowns, gi,
                                    Polynomial::monomial(m.nvars(), mono, Rational(1)),
                                    nullptr, t + d));
    for (const QVec& c : syz) {
      std::vector<QVec> cols(unknowns, QVec(np[t + d].layout.dim, Rational(0)));
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t u = 0; u < unknowns; ++u)
          for (std::size_t j = 0; j < np[t + d].layout.dim; ++j)
            cols[u][j] += c[i] * tag_cols[i][u][j];
      }
      add_rows(cols, np[t + d].layout.dim);
    }
  }

  // (b) Equivariance under the structure algebra: f(z*g_i) = z*f(g_i) for a
  // degreewise basis of Z in every certifiable degree.
  for (int zdeg = 1; zdeg <= m.degree_bound; ++zdeg) {
    const StructureBasis zb = structure_basis(m.graph, zdeg);
    if (zb.dim() == 0) continue;
    for (std::size_t i = 0; i < m.gens.size(); ++i) {
      const int ework = zdeg + m.gens[i].degree;
      if (ework > m.degree_bound || ework + d > n.degree_bound) continue;
      const GradedPiece& mid = mp[ework];
      for (const auto& z : zb.basis) {
        // z * g_i inside M, expressed over the spanning set.
        std::vector<Polynomial> img(m.slots.size(), Polynomial::zero(m.nvars()));
        for (std::size_t s = 0; s < m.slots.size(); ++s)
          img[s] = m.gens[i].components[s] * z.components[m.slots[s].vertex];
        const auto rep = mid.represent(mid.layout.tuple_to_coords(img));
        if (!rep)
          throw std::invalid_argument("hom_dimension: source is not Z-stable");

        // Right side: sum over spanning tags of rep * mono * f(g_j).
        std::vector<QVec> cols(unknowns, QVec(np[ework + d].layout.dim, Rational(0)));
        for (std::size_t ti = 0; ti < mid.span_tags.size(); ++ti) {
          if ((*rep)[ti] == 0) continue;
          const auto& [gj, mono] = mid.span_tags[ti];
          const std::vector<QVec> tc =
              image_cols(unknowns, gj, Polynomial::monomial(m.nvars(), mono, Rational(1)),
                         nullptr, ework + d);
          for (std::size_t u = 0; u < unknowns; ++u)
            for (std::size_t j = 0; j < np[ework + d].layout.dim; ++j)
              cols[u][j] += (*rep)[ti] * tc[u][j];
        }
        // Left side: z acting on f(g_i).
        const std::vector<QVec> lc =
            image_cols(unknowns, static_cast<int>(i),
                       Polynomial::constant(m.nvars(), Rational(1)), &z.components,
                       ework + d);
        for (std::size_t u = 0; u < unknowns; ++u)
          for (std::size_t j = 0; j < np[ework + d].layout.dim; ++j)
            cols[u][j] -= lc[u][j];
        add_rows(cols, np[ework + d].layout.dim);
      }
    }
  }

  const GradedVectorSpaceBasis sol = solve_graded(unknowns, rows, d);
  return static_cast<int>(sol.basis.size());
}

}  // namespace critmg
