/*
  Finite root-system data and critical-level affine weights.

  Conventions, fixed once for the whole project:

   - The Cartan matrix is C[i][j] = <alpha_i, alpha_j^vee>.
   - Finite weights are stored in the fundamental-weight basis with exact
     rational coordinates, so <lambda, alpha_i^vee> is just the i-th
     coordinate and simple reflections act by integer matrices.
   - The invariant form is normalized so the highest root gamma has
     (gamma,gamma) = 2; coroots of roots are then integer vectors in the
     simple-coroot basis.
   - An affine weight at the critical level is a finite part plus a
     delta-coefficient. The level itself never appears: at the critical
     level <lambda+rho, K> = 0, so the pairing of lambda+rho with the
     affine coroot (alpha+n*delta)^vee collapses to the finite pairing
     <lambda_bar + rho_bar, alpha^vee>. That identity gives the closed
     reflection formula

         s_{alpha+n*delta} . lambda
           = lambda - <lambda_bar + rho_bar, alpha^vee> (alpha + n*delta)

     and it is the only place K, D or tau would ever enter, so none of
     them is represented.
   - The order on affine weights: lambda <= mu iff mu - lambda is a
     nonnegative integer combination of the simple affine roots
     Pi-hat = Pi u {-gamma+delta}. The coefficient of -gamma+delta is
     forced to be the delta-coefficient c0 of the difference, so the test
     is: c0 a nonnegative integer and (finite part) + c0*gamma nonnegative
     integral in the simple-root basis.
*/

#pragma once

#include <memory>

#include "critmg/polynomial.hpp"

namespace critmg {

using RootCoords = std::vector<int>;  // coordinates in the simple-root basis

struct PositiveRoot {
  RootCoords root;     // in the simple-root basis
  RootCoords coroot;   // in the simple-coroot basis
  QVec fw;             // in the fundamental-weight basis
  int height = 0;
};

class RootSystem {
 public:
  std::string name;  // "A2", "B2", ...
  char family = 'A';
  int rank = 0;
  std::vector<QVec> cartan;       // C[i][j] = <alpha_i, alpha_j^vee>
  std::vector<Rational> symm;     // d_i = (alpha_i,alpha_i)/2, (gamma,gamma)=2
  std::vector<PositiveRoot> positive;
  int highest = -1;               // index of gamma in `positive`
  QVec rho;                       // rho_bar, all-ones in the fw basis
  std::vector<QVec> fw_to_root_mat;  // root coords = mat * fw coords

  int num_positive() const { return static_cast<int>(positive.size()); }

  Rational bilinear(const RootCoords& a, const RootCoords& b) const;

  // Fundamental-weight coordinates of a root given in simple-root coords.
  QVec root_fw(const RootCoords& r) const;

  // Coroot (simple-coroot coordinates) of an arbitrary root; the entries
  // are always integers under the (gamma,gamma)=2 normalization.
  RootCoords coroot_of(const RootCoords& r) const;

  Rational pair_fw_coroot(const QVec& fw, const RootCoords& coroot) const;

  // Exact simple-root coordinates of a finite weight.
  QVec root_coords_of_fw(const QVec& fw) const;

  int find_positive(const RootCoords& r) const;  // -1 if not a positive root
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Builds the root system of the given Cartan type, e.g. "A1", "B2", "G2".
// Supported families: A1..A8, B2..B8, C2..C8, D4..D8, F4, G2.
RootSystemPtr build_root_system(const std::string& type);

// ---------------------------------------------------------------------------

struct Weight {
  QVec finite;     // fundamental-weight coordinates of the finite part
  Rational delta;  // coefficient of delta

  bool operator==(const Weight& o) const {
    return finite == o.finite && delta == o.delta;
  }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  // Canonical enumeration order: by delta coefficient, then coordinates.
  bool operator<(const Weight& o) const {
    if (delta != o.delta) return delta < o.delta;
    return finite < o.finite;
  }
};

inline Weight weight_sub(const Weight& a, const Weight& b) {
  Weight d;
  d.delta = a.delta - b.delta;
  d.finite.resize(a.finite.size());
  for (std::size_t i = 0; i < a.finite.size(); ++i)
    d.finite[i] = a.finite[i] - b.finite[i];
  return d;
}

struct AffineRealRoot {
  RootCoords finite_root;  // element of R, simple-root coordinates
  int n = 0;               // the root is alpha + n*delta
};

// <lambda_bar + rho_bar, alpha^vee>, the integer driving every reflection.
Rational dot_pairing(const RootSystem& rs, const Weight& w, const RootCoords& alpha);

// s_{alpha+n*delta} . lambda at the critical level; an involution.
Weight dot_reflect(const RootSystem& rs, const Weight& w, const RootCoords& alpha, int n);

// lambda <= mu in the partial order generated by the positive affine roots.
bool leq(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// All real roots of R-hat-plus with delta coefficient at most bound_n:
// R+ itself, plus alpha + n*delta for every alpha in R and 1 <= n <= bound_n.
std::vector<AffineRealRoot> positive_affine_window(const RootSystem& rs, int bound_n);

}  // namespace critmg
