/*
  Critical-level block windows and the order topology.

  A block is the dot-orbit of the integral affine Weyl group through a base
  weight; it is infinite, so every computation here is relative to a finite
  window: the orbit elements whose delta-shift against the base lies in
  [0, delta_bound] and whose finite displacement has L1 height at most
  height_bound in the simple-root basis. All topology predicates (open =
  down-closed, closed, locally closed, locally bounded) are computed inside
  the window and documented as window-relative.
*/

#pragma once

#include "critmg/root_system.hpp"

namespace critmg {

// Indices into a BlockWindow's weight list; kept sorted and duplicate-free.
using SubsetFlags = std::vector<int>;

struct BlockWindow {
  RootSystemPtr rs;
  Weight base;
  std::vector<Weight> weights;        // canonically sorted, no duplicates
  int delta_bound = 0;
  int height_bound = 0;
  std::vector<int> integral_positive; // indices into rs->positive

  int size() const { return static_cast<int>(weights.size()); }
  int index_of(const Weight& w) const;
  bool less(int i, int j) const { return i != j && leq_[i][j]; }
  bool less_eq(int i, int j) const { return i == j || leq_[i][j]; }

  std::vector<std::vector<bool>> leq_;  // strict order table, filled on build
};

// Positive finite roots alpha with <lambda_bar + rho_bar, alpha^vee>
// integral; the full set of integral finite roots is this set and its
// negatives, and alpha + n*delta is integral exactly when alpha is.
std::vector<int> integral_finite_roots(const RootSystem& rs, const Weight& w);

// BFS closure of {base} under the reflections s_{alpha+n*delta} with alpha
// integral and |n| <= delta_bound, retaining weights inside the box.
BlockWindow block_window(RootSystemPtr rs, const Weight& base, int delta_bound,
                         int height_bound);

// The minimal element of { s_{alpha+n*delta}.lambda >= lambda }.
// Closed form: with p = <lambda_bar+rho_bar, alpha^vee> and alpha taken
// positive, p = 0 fixes lambda, p < 0 gives the plain reflection (n = 0),
// p > 0 gives the n = -1 reflection lambda - p(alpha - delta). The result
// is cross-checked against a scan over n in [-scan_bound, scan_bound].
Weight alpha_up(const RootSystem& rs, const RootCoords& alpha, const Weight& lambda,
                int scan_bound = 10);

SubsetFlags normalize_subset(SubsetFlags s, int window_size);
SubsetFlags subset_complement(const SubsetFlags& s, int window_size);

bool is_open(const SubsetFlags& s, const BlockWindow& w);
bool is_closed(const SubsetFlags& s, const BlockWindow& w);
// Locally closed = leq-convex inside the window (equivalently, the
// intersection of an open and a closed subset).
bool is_locally_closed(const SubsetFlags& s, const BlockWindow& w);
// For each lambda in S, the up-set of lambda within S is finite. Inside a
// finite window this never fails; retained for interface symmetry.
bool is_locally_bounded(const SubsetFlags& s, const BlockWindow& w);

// K+ = union of down-sets of elements of K; K- = union of down-sets of
// K+ \ K. Requires K locally closed; then K = K+ \ K-.
SubsetFlags k_plus(const SubsetFlags& k, const BlockWindow& w);
SubsetFlags k_minus(const SubsetFlags& k, const BlockWindow& w);

}  // namespace critmg
