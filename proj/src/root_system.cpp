#include "critmg/root_system.hpp"

#include <numeric>

namespace critmg {

namespace {

std::vector<QVec> cartan_matrix(char family, int rank) {
  auto C = std::vector<QVec>(rank, QVec(rank, Rational(0)));
  for (int i = 0; i < rank; ++i) C[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      C[i][i + 1] = -1;
      C[i + 1][i] = -1;
    }
  };
  switch (family) {
    case 'A':
      chain(rank);
      break;
    case 'B':  // alpha_rank short: <alpha_{r-1}, alpha_r^vee> = -2
      chain(rank);
      C[rank - 2][rank - 1] = -2;
      break;
    case 'C':  // alpha_rank long
      chain(rank);
      C[rank - 1][rank - 2] = -2;
      break;
    case 'D':
      chain(rank - 1);
      C[rank - 3][rank - 1] = -1;
      C[rank - 1][rank - 3] = -1;
      break;
    case 'F':  // F4, alpha_1 alpha_2 long, alpha_3 alpha_4 short
      chain(rank);
      C[1][2] = -2;
      break;
    case 'G':  // G2, alpha_1 short
      C[0][1] = -1;
      C[1][0] = -3;
      break;
    default:
      throw std::invalid_argument("unsupported Cartan family");
  }
  return C;
}

// d_i with d_i C[i][j] = d_j C[j][i], propagated along the Dynkin diagram;
// normalized later against the highest root.
std::vector<Rational> symmetrizers(const std::vector<QVec>& C) {
  const int n = static_cast<int>(C.size());
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (d[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (d[j] != 0 || C[i][j] == 0) continue;
        // symmetry of the form: d_j C[i][j] = d_i C[j][i]
        d[j] = d[i] * C[j][i] / C[i][j];
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (d[i] == 0) throw std::invalid_argument("disconnected Cartan matrix");
  return d;
}

}  // namespace

Rational RootSystem::bilinear(const RootCoords& a, const RootCoords& b) const {
  Rational s(0);
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (b[j] == 0) continue;
      // (alpha_i, alpha_j) = d_j * C[i][j]
      s += Rational(a[i]) * Rational(b[j]) * symm[j] * cartan[i][j];
    }
  }
  return s;
}

QVec RootSystem::root_fw(const RootCoords& r) const {
  QVec fw(rank, Rational(0));
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) fw[j] += Rational(r[i]) * cartan[i][j];
  return fw;
}

RootCoords RootSystem::coroot_of(const RootCoords& r) const {
  const Rational len = bilinear(r, r);
  if (len == 0) throw std::invalid_argument("zero root");
  RootCoords cr(rank);
  for (int i = 0; i < rank; ++i) {
    const Rational c = Rational(r[i]) * symm[i] * 2 / len;
    if (!is_integer(c)) throw std::logic_error("non-integral coroot coordinate");
    cr[i] = static_cast<int>(to_long(c));
  }
  return cr;
}

Rational RootSystem::pair_fw_coroot(const QVec& fw, const RootCoords& coroot) const {
  Rational s(0);
  for (int i = 0; i < rank; ++i) s += fw[i] * coroot[i];
  return s;
}

QVec RootSystem::root_coords_of_fw(const QVec& fw) const {
  QVec r(rank, Rational(0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) r[i] += fw_to_root_mat[i][j] * fw[j];
  return r;
}

int RootSystem::find_positive(const RootCoords& r) const {
  for (int i = 0; i < num_positive(); ++i)
    if (positive[i].root == r) return i;
  return -1;
}

RootSystemPtr build_root_system(const std::string& type) {
  if (type.size() < 2) throw std::invalid_argument("bad Cartan type: " + type);
  const char family = type[0];
  const int rank = std::stoi(type.substr(1));
  const bool ok = (family == 'A' && rank >= 1 && rank <= 8) ||
                  (family == 'B' && rank >= 2 && rank <= 8) ||
                  (family == 'C' && rank >= 2 && rank <= 8) ||
                  (family == 'D' && rank >= 4 && rank <= 8) ||
                  (family == 'F' && rank == 4) || (family == 'G' && rank == 2);
  if (!ok) throw std::invalid_argument("unsupported Cartan type: " + type);

  auto rs = std::make_shared<RootSystem>();
  rs->name = type;
  rs->family = family;
  rs->rank = rank;
  rs->cartan = cartan_matrix(family, rank);
  rs->symm = symmetrizers(rs->cartan);
  rs->rho = QVec(rank, Rational(1));

  // Enumerate R+ by height with the root-string criterion: beta + alpha_i
  // is a root iff p - <beta, alpha_i^vee> > 0, where p is the number of
  // times alpha_i can be subtracted from beta while staying a root.
  std::vector<RootCoords> roots;
  std::map<RootCoords, bool> seen;
  for (int i = 0; i < rank; ++i) {
    RootCoords e(rank, 0);
    e[i] = 1;
    roots.push_back(e);
    seen[e] = true;
  }
  std::size_t frontier = 0;
  while (frontier < roots.size()) {
    const RootCoords beta = roots[frontier++];
    for (int i = 0; i < rank; ++i) {
      // <beta, alpha_i^vee> = sum_j beta_j C[j][i]
      Rational pairing(0);
      for (int j = 0; j < rank; ++j) pairing += Rational(beta[j]) * rs->cartan[j][i];
      int p = 0;
      RootCoords down = beta;
      while (true) {
        down[i] -= 1;
        bool all_zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
        if (all_zero || !seen.count(down)) break;
        ++p;
      }
      if (Rational(p) - pairing > 0) {
        RootCoords up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          roots.push_back(up);
          seen[up] = true;
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RootCoords& a, const RootCoords& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  // gamma is the unique root of maximal height; its coordinates dominate
  // every other positive root.
  const RootCoords& gamma = roots.back();
  for (const auto& r : roots)
    for (int i = 0; i < rank; ++i)
      if (r[i] > gamma[i]) throw std::logic_error("highest root is not dominant");

  // Normalize the form so (gamma,gamma) = 2.
  {
    Rational gg(0);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        gg += Rational(gamma[i]) * Rational(gamma[j]) * rs->symm[j] * rs->cartan[i][j];
    const Rational scale = Rational(2) / gg;
    for (auto& d : rs->symm) d *= scale;
  }

  for (const auto& r : roots) {
    PositiveRoot pr;
    pr.root = r;
    pr.coroot = rs->coroot_of(r);
    pr.fw = rs->root_fw(r);
    pr.height = std::accumulate(r.begin(), r.end(), 0);
    rs->positive.push_back(std::move(pr));
  }
  rs->highest = rs->num_positive() - 1;

  // fw -> root-basis change: fw coords of sum m_i alpha_i are (C^T m).
  std::vector<QVec> ct(rank, QVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) ct[i][j] = rs->cartan[j][i];
  rs->fw_to_root_mat = invert(ct);

  return rs;
}

Rational dot_pairing(const RootSystem& rs, const Weight& w, const RootCoords& alpha) {
  const RootCoords coroot = rs.coroot_of(alpha);
  Rational s(0);
  for (int i = 0; i < rs.rank; ++i) s += (w.finite[i] + rs.rho[i]) * coroot[i];
  return s;
}

Weight dot_reflect(const RootSystem& rs, const Weight& w, const RootCoords& alpha, int n) {
  const Rational p = dot_pairing(rs, w, alpha);
  Weight out = w;
  const QVec afw = rs.root_fw(alpha);
  for (int i = 0; i < rs.rank; ++i) out.finite[i] -= p * afw[i];
  out.delta -= p * n;
  return out;
}

bool leq(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const Weight diff = weight_sub(mu, lambda);
  const Rational& c0 = diff.delta;
  if (!is_integer(c0) || c0 < 0) return false;
  QVec r = rs.root_coords_of_fw(diff.finite);
  const RootCoords& gamma = rs.positive[rs.highest].root;
  for (int i = 0; i < rs.rank; ++i) {
    r[i] += c0 * gamma[i];
    if (!is_integer(r[i]) || r[i] < 0) return false;
  }
  return true;
}

std::vector<AffineRealRoot> positive_affine_window(const RootSystem& rs, int bound_n) {
  if (bound_n < 0) throw std::invalid_argument("negative window bound");
  std::vector<AffineRealRoot> out;
  for (const auto& pr : rs.positive) out.push_back({pr.root, 0});
  for (int n = 1; n <= bound_n; ++n) {
    for (const auto& pr : rs.positive) out.push_back({pr.root, n});
    for (const auto& pr : rs.positive) {
      RootCoords neg = pr.root;
      for (int& x : neg) x = -x;
      out.push_back({neg, n});
    }
  }
  return out;
}

}  // namespace critmg
