/*
  Modules over the structure algebra with a Verma flag, degreewise.

  A SectionModule is a graded S-submodule of an ambient sum of shifted
  polynomial-ring copies ("slots"), each slot attached to a vertex of a
  moment graph. Generators are tuples of homogeneous polynomials; the slot
  shift is the grading offset, so the component of a degree-g generator at
  a slot of shift s is homogeneous of polynomial degree g - s.

  All derived answers are computed degreewise up to the module's
  degree_bound D and are certified only up to that bound; the graded
  modules in question are infinite dimensional, but every structural
  statement verified by the acceptance suite is visible in low degree at
  desk scale. Freeness is tested by minimal generators (graded Nakayama)
  plus Hilbert-function equality against the free module on those
  generators; in one variable the test is exact.

  Generic (fraction-field) data is obtained by evaluating at random integer
  points avoiding the zeros of all edge labels, cross-checked across three
  points and retried with larger coordinates on disagreement.
*/

#pragma once

#include <functional>

#include "critmg/structure_algebra.hpp"

namespace critmg {

struct Slot {
  int vertex = 0;
  int shift = 0;
};

struct SectionModule {
  MomentGraph graph;
  std::vector<Slot> slots;
  struct Generator {
    int degree = 0;
    std::vector<Polynomial> components;  // one per slot
  };
  std::vector<Generator> gens;
  int degree_bound = 6;

  int nvars() const { return graph.nvars; }
  std::vector<int> slots_of_vertex(int v) const;
  std::vector<int> slots_of_vertices(const std::vector<int>& vs) const;
  void validate() const;
};

// The standard module V(mu): rank one, supported at a single vertex, with
// (z_nu) acting as multiplication by z_mu; grading shifted by `shift`.
SectionModule standard_module_V(const MomentGraph& g, int mu, int shift = 0,
                                int degree_bound = 6);

// ---------------------------------------------------------------------------
// Degreewise coordinates.

struct AmbientLayout {
  int nvars = 0;
  int degree = 0;
  std::vector<Slot> slots;
  std::vector<std::size_t> offset;            // per slot
  std::vector<std::vector<Exponents>> monos;  // per slot, may be empty
  std::size_t dim = 0;

  static AmbientLayout make(int nvars, const std::vector<Slot>& slots, int degree);
  QVec tuple_to_coords(const std::vector<Polynomial>& comps) const;
  std::vector<Polynomial> coords_to_tuple(const QVec& v) const;
};

// The degree-d piece of the S-span of the generators, plus the spanning
// set (monomial times generator) used to express membership.
struct GradedPiece {
  AmbientLayout layout;
  Subspace space;
  std::vector<std::pair<int, Exponents>> span_tags;  // (gen, monomial)
  std::vector<QVec> span_vectors;

  std::optional<QVec> represent(const QVec& v) const;  // coefficients over span
  std::vector<QVec> syzygies() const;                  // kernel of the span map
};

GradedPiece graded_piece(const SectionModule& m, int degree);

// ---------------------------------------------------------------------------
// Graded Nakayama over a degreewise family of subspaces: the minimal
// homogeneous generators in degree d form a complement of S_1 * piece[d-1]
// inside piece[d]. The caller supplies the multiplication map (full-ring or
// label-quotient coordinates).

struct DegreeVec {
  int degree = 0;
  QVec coords;
};

using S1Map = std::function<std::vector<QVec>(int /*target degree*/,
                                              const std::vector<QVec>& /*basis below*/)>;

std::vector<DegreeVec> nakayama_generators(const std::vector<Subspace>& pieces,
                                           const S1Map& s1);

// Re-present a degreewise family of subspaces (over the standard ambient of
// the given slots) by its minimal generators.
SectionModule module_from_pieces(const MomentGraph& g, const std::vector<Slot>& slots,
                                 const std::vector<Subspace>& pieces, int bound);

// ---------------------------------------------------------------------------
// Descriptors and reports.

struct GradedDescriptor {
  std::vector<int> dims;        // index = degree, 0..D
  std::vector<int> gen_degrees; // minimal generator degrees
  bool free_up_to_bound = false;
};

bool descriptor_free(const GradedDescriptor& d, int nvars);

struct FlagReport {
  bool is_flag = false;
  std::vector<int> multiplicities;                 // per vertex: (M : V(mu))
  std::vector<std::vector<int>> generator_degrees; // per vertex stalk degrees
  std::vector<std::pair<std::vector<int>, bool>> open_freeness;  // per open J
};

struct ProjectiveReport {
  bool pass = false;
  bool z_stable = true;
  std::vector<std::pair<int, bool>> stalk_free;      // vertex, verdict
  std::vector<std::pair<int, bool>> edge_condition;  // edge index, verdict
};

// ---------------------------------------------------------------------------
// Operations of the category C, all degreewise up to the module bound.

int generic_rank(const SectionModule& m, int vertex);

SectionModule restrict_closed(const SectionModule& m, const std::vector<int>& closed);
SectionModule quotient_open(const SectionModule& m, const std::vector<int>& open);

GradedDescriptor stalk(const SectionModule& m, int vertex);
GradedDescriptor edge_module(const SectionModule& m, int edge);
GradedDescriptor edge_intersection(const SectionModule& m, int edge, int vertex);

FlagReport verma_flag_report(const SectionModule& m);

ProjectiveReport check_projective(const SectionModule& m);

// A map between section modules, given on generators: the image of source
// generator i is sum_j mat[j][i] * (target generator j).
struct ModuleMap {
  std::vector<std::vector<Polynomial>> mat;
};

// Exactness of 0 -> M1 -> M2 -> M3 -> 0 in the nonstandard exact structure:
// every open truncation must be a short exact sequence of graded vector
// spaces, degreewise up to the common bound.
bool is_exact(const SectionModule& m1, const SectionModule& m2, const SectionModule& m3,
              const ModuleMap& f1, const ModuleMap& f2, std::string* why = nullptr);

}  // namespace critmg
