/*
  Moment graphs over the finite coweight lattice.

  Vertices are critical-level weights with a partial order; an edge joins
  lambda and s_{alpha+n*delta}.lambda and is labelled by the finite coroot
  alpha^vee taken modulo sign (stored with its first nonzero coordinate
  positive). Reflection-related pairs are always comparable, so every edge
  is stored as (lower, upper).

  The graph object is self-contained (it carries its own order table), so
  adversarial test graphs can be built by hand without a block window.
*/

#pragma once

#include <optional>

#include "critmg/blocks.hpp"

namespace critmg {

struct MomentGraphEdge {
  int u = 0;  // lower vertex
  int v = 0;  // upper vertex
  LinearForm label;
};

struct MomentGraph {
  int nvars = 0;  // rank of the finite root system (variables of S)
  std::string root_system;
  std::vector<Weight> vertices;
  std::vector<std::vector<bool>> strict_less;  // full strict order relation
  std::vector<MomentGraphEdge> edges;

  int size() const { return static_cast<int>(vertices.size()); }
  bool less(int i, int j) const { return strict_less[i][j]; }
  bool less_eq(int i, int j) const { return i == j || strict_less[i][j]; }

  std::vector<int> edges_at(int vertex) const;
  std::vector<int> minimal_vertices() const;
  // Max finite shortest-path distance between connected vertex pairs.
  int diameter() const;
  bool subset_open(const std::vector<int>& s) const;   // down-closed
  bool subset_closed(const std::vector<int>& s) const; // complement open
  std::vector<std::vector<int>> all_open_subsets() const;
};

// Full sub-moment-graph on a subset of a block window: one edge per
// reflection-related pair, labelled by the sign-normalized finite coroot.
MomentGraph build_moment_graph(const BlockWindow& w, const SubsetFlags& subset);

struct GKMViolation {
  int vertex = 0;
  int edge1 = 0;
  int edge2 = 0;
};

// ok (nullopt) iff labels of distinct edges at any common vertex are
// pairwise non-proportional over Q.
std::optional<GKMViolation> gkm_check(const MomentGraph& g);

// True iff no two weights differ by a nonzero multiple of delta.
bool delta_condition_check(const std::vector<Weight>& weights);

std::string coroot_label_string(const LinearForm& label);
std::string weight_label_string(const Weight& w);
std::string graph_to_dot(const MomentGraph& g);

}  // namespace critmg
