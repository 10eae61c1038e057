#include "critmg/blocks.hpp"

#include <set>

namespace critmg {

int BlockWindow::index_of(const Weight& w) const {
  for (int i = 0; i < size(); ++i)
    if (weights[i] == w) return i;
  return -1;
}

std::vector<int> integral_finite_roots(const RootSystem& rs, const Weight& w) {
  std::vector<int> out;
  for (int i = 0; i < rs.num_positive(); ++i) {
    Rational p(0);
    for (int j = 0; j < rs.rank; ++j)
      p += (w.finite[j] + rs.rho[j]) * rs.positive[i].coroot[j];
    if (is_integer(p)) out.push_back(i);
  }
  return out;
}

namespace {

// Box membership relative to the base: delta shift in [0, delta_bound],
// L1 height of the finite displacement at most height_bound.
bool in_box(const RootSystem& rs, const Weight& base, const Weight& w, int db, int hb) {
  const Weight diff = weight_sub(w, base);
  if (!is_integer(diff.delta) || diff.delta < 0 || diff.delta > db) return false;
  const QVec r = rs.root_coords_of_fw(diff.finite);
  Rational h(0);
  for (const Rational& c : r) {
    if (!is_integer(c)) return false;
    h += c < 0 ? -c : c;
  }
  return h <= hb;
}

}  // namespace

BlockWindow block_window(RootSystemPtr rs, const Weight& base, int delta_bound,
                         int height_bound) {
  if (delta_bound < 0 || height_bound < 0)
    throw std::invalid_argument("negative window bounds");
  BlockWindow w;
  w.rs = rs;
  w.base = base;
  w.delta_bound = delta_bound;
  w.height_bound = height_bound;
  w.integral_positive = integral_finite_roots(*rs, base);

  std::set<Weight> found;
  found.insert(base);
  std::vector<Weight> queue{base};
  while (!queue.empty()) {
    const Weight cur = queue.back();
    queue.pop_back();
    for (int idx : w.integral_positive) {
      const RootCoords& alpha = rs->positive[idx].root;
      for (int n = -delta_bound; n <= delta_bound; ++n) {
        const Weight img = dot_reflect(*rs, cur, alpha, n);
        if (img == cur) continue;
        if (!in_box(*rs, base, img, delta_bound, height_bound)) continue;
        if (found.insert(img).second) queue.push_back(img);
      }
    }
  }
  w.weights.assign(found.begin(), found.end());  // std::set gives the canonical order

  const int m = w.size();
  w.leq_.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) w.leq_[i][j] = leq(*rs, w.weights[i], w.weights[j]);
  return w;
}

Weight alpha_up(const RootSystem& rs, const RootCoords& alpha, const Weight& lambda,
                int scan_bound) {
  RootCoords pos = alpha;
  {
    // Normalize to the positive root of the reflection family.
    bool nonneg = true;
    for (int x : pos)
      if (x < 0) nonneg = false;
    if (!nonneg)
      for (int& x : pos) x = -x;
    if (rs.find_positive(pos) < 0) throw std::invalid_argument("not a root");
  }
  const Rational p = dot_pairing(rs, lambda, pos);
  if (!is_integer(p))
    throw std::invalid_argument("alpha_up: root is not integral for the weight");

  Weight closed;
  if (p == 0) {
    closed = lambda;
  } else if (p < 0) {
    closed = dot_reflect(rs, lambda, pos, 0);
  } else {
    closed = dot_reflect(rs, lambda, pos, -1);
  }

  // Minimality check over the scan window; mathematically the candidate set
  // is a delta-chain, so the minimum is unique.
  bool found = false;
  Weight best;
  for (int n = -scan_bound; n <= scan_bound; ++n) {
    const Weight img = dot_reflect(rs, lambda, pos, n);
    if (!leq(rs, lambda, img)) continue;
    if (!found || leq(rs, img, best)) {
      best = img;
      found = true;
    }
  }
  if (!found) throw std::logic_error("alpha_up: empty candidate set within scan bound");
  if (!(best == closed))
    throw std::logic_error("alpha_up: closed form disagrees with the scan");
  return closed;
}

SubsetFlags normalize_subset(SubsetFlags s, int window_size) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int i : s)
    if (i < 0 || i >= window_size)
      throw std::invalid_argument("subset index out of range");
  return s;
}

SubsetFlags subset_complement(const SubsetFlags& s, int window_size) {
  std::vector<bool> in(window_size, false);
  for (int i : s) in[i] = true;
  SubsetFlags out;
  for (int i = 0; i < window_size; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

bool is_open(const SubsetFlags& s, const BlockWindow& w) {
  std::vector<bool> in(w.size(), false);
  for (int i : s) in[i] = true;
  for (int j : s)
    for (int i = 0; i < w.size(); ++i)
      if (w.less(i, j) && !in[i]) return false;
  return true;
}

bool is_closed(const SubsetFlags& s, const BlockWindow& w) {
  return is_open(subset_complement(s, w.size()), w);
}

bool is_locally_closed(const SubsetFlags& s, const BlockWindow& w) {
  // Convex under leq within the window: no element of the complement lies
  // strictly between two members.
  std::vector<bool> in(w.size(), false);
  for (int i : s) in[i] = true;
  for (int a : s)
    for (int b : s)
      for (int m = 0; m < w.size(); ++m)
        if (!in[m] && w.less(a, m) && w.less(m, b)) return false;
  return true;
}

bool is_locally_bounded(const SubsetFlags& s, const BlockWindow& w) {
  for (int a : s) {
    int up = 0;
    for (int b : s)
      if (w.less_eq(a, b)) ++up;
    if (up > w.size()) return false;  // cannot happen in a finite window
  }
  return true;
}

SubsetFlags k_plus(const SubsetFlags& k, const BlockWindow& w) {
  if (!is_locally_closed(k, w))
    throw std::invalid_argument("k_plus: subset is not locally closed");
  std::vector<bool> in(w.size(), false);
  for (int a : k) {
    in[a] = true;
    for (int i = 0; i < w.size(); ++i)
      if (w.less(i, a)) in[i] = true;
  }
  SubsetFlags out;
  for (int i = 0; i < w.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

SubsetFlags k_minus(const SubsetFlags& k, const BlockWindow& w) {
  const SubsetFlags plus = k_plus(k, w);
  std::vector<bool> ink(w.size(), false);
  for (int a : k) ink[a] = true;
  std::vector<bool> in(w.size(), false);
  for (int a : plus) {
    if (ink[a]) continue;
    in[a] = true;
    for (int i = 0; i < w.size(); ++i)
      if (w.less(i, a)) in[i] = true;
  }
  SubsetFlags out;
  for (int i = 0; i < w.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

}  // namespace critmg
