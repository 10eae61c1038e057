/*
  Candidate projective objects on a moment graph.

  bm_construct runs the canonical sheaf construction upward along the order
  from the unique minimal vertex: the stalk there is one free generator in
  degree zero; at every later vertex the boundary sections (the image of the
  sections on the strictly-lower part in the sum of label-quotients of the
  lower stalks across incoming edges) are computed degreewise, and the new
  stalk is the graded free cover of their minimal generators. Global
  sections of the result are the candidate projective module; the
  verification suite checks the projectivity criteria, the subgeneric
  endomorphism ring, the endomorphism/structure-algebra comparison and the
  Hom-dimension/stalk-rank comparison on it.
*/

#pragma once

#include "critmg/section_module.hpp"

namespace critmg {

struct BMSheaf {
  MomentGraph graph;
  int base = 0;
  int degree_bound = 6;
  struct Stalk {
    std::vector<int> gen_degrees;
  };
  std::vector<Stalk> stalks;  // per vertex
  // Per edge (u,v): the restriction of the upper stalk to the quotient
  // B(E) = stalk(u)/(label): maps[i][k] is the (reduced) component at
  // lower generator i of the image of upper generator k.
  std::vector<std::vector<std::vector<Polynomial>>> edge_maps;
  std::vector<std::vector<int>> boundary_dims;  // per vertex: dims, 0..D
};

// Requires a GKM graph with a unique minimal vertex (= base).
BMSheaf bm_construct(const MomentGraph& g, int base, int degree_bound);

// All stalk tuples compatible across every edge map, degreewise up to the
// bound, re-presented by minimal generators.
SectionModule global_sections(const BMSheaf& b);

struct SoergelReport {
  bool multiplicity_free = false;
  bool support_equals_k = false;
  bool delta_condition = false;
  bool pass = false;
};

SoergelReport check_soergel_assumptions(const MomentGraph& g, int base, int degree_bound);

struct EndomorphismImage {
  std::vector<int> dims;                         // per degree 0..dmax
  std::vector<std::vector<SectionTuple>> basis;  // per degree: vertex tuples
};

// Degreewise image of the endomorphism ring inside sum_mu S: all vertex
// tuples acting componentwise that preserve the module.
EndomorphismImage endomorphism_image(const SectionModule& m, int dmax);

// Dimension of the space of degree-d maps M -> N commuting with the
// S-action and with the structure-algebra action, degreewise certified.
int hom_dimension(const SectionModule& m, const SectionModule& n, int degree);

}  // namespace critmg
