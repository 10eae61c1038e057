/*
  The structure algebra Z(K) of a moment graph, degreewise.

  Z(K) is the algebra of tuples (z_mu), one polynomial per vertex, with
  z_mu == z_lambda mod the label across every edge. It is not finitely
  generated in general, so it is only ever materialized one graded piece
  at a time: structure_basis(G, d) returns a canonical basis of the
  degree-d slice, computed by expressing the edge congruence through
  reduce_mod_linear and solving the resulting rational linear system.
*/

#pragma once

#include "critmg/moment_graph.hpp"

namespace critmg {

struct SectionTuple {
  std::vector<Polynomial> components;  // one per vertex
};

// True iff reduce_mod_linear(t_u - t_v, label) vanishes for every edge.
bool is_section(const MomentGraph& g, const SectionTuple& t);

struct StructureBasis {
  int degree = 0;
  std::vector<SectionTuple> basis;   // canonical (RREF rows over coordinates)
  std::vector<QVec> coords;          // the same basis as coefficient vectors
  std::size_t ambient_dim = 0;

  int dim() const { return static_cast<int>(basis.size()); }
};

StructureBasis structure_basis(const MomentGraph& g, int degree);

// The two-vertex case Z(E) = {(z, z'): z == z' mod label}.
StructureBasis edge_structure_basis(int nvars, const LinearForm& label, int degree);

}  // namespace critmg
