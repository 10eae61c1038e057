#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace critmg;

namespace {

Weight zero_weight(int rank) {
  Weight w;
  w.finite = QVec(rank, Rational(0));
  w.delta = 0;
  return w;
}

}  // namespace

TEST_CASE("integral_finite_roots") {
  auto a1 = build_root_system("A1");
  CHECK(integral_finite_roots(*a1, zero_weight(1)) == std::vector<int>{0});

  Weight half;
  half.finite = {Rational(1, 2)};
  half.delta = 0;
  CHECK(integral_finite_roots(*a1, half).empty());

  auto a2 = build_root_system("A2");
  CHECK(integral_finite_roots(*a2, zero_weight(2)).size() == 3);

  // a weight integral for one root only
  Weight mixed;
  mixed.finite = {Rational(1, 2), Rational(0)};
  mixed.delta = 0;
  // pairings with alpha1, alpha2, alpha1+alpha2: 3/2, 1, 5/2
  CHECK(integral_finite_roots(*a2, mixed) == std::vector<int>{1});
}

TEST_CASE("block_window A1 box example") {
  auto rs = build_root_system("A1");
  const Weight l0 = zero_weight(1);
  const BlockWindow w = block_window(rs, l0, 1, 4);
  REQUIRE(w.size() == 4);

  // the four weights l0 + k delta, l0 - alpha + k delta, k in {0,1}
  std::set<std::pair<std::string, std::string>> got;
  for (const Weight& x : w.weights)
    got.insert({rat_to_string(x.finite[0]), rat_to_string(x.delta)});
  const std::set<std::pair<std::string, std::string>> expect = {
      {"0", "0"}, {"0", "1"}, {"-2", "0"}, {"-2", "1"}};
  CHECK(got == expect);

  // enumeration is sorted canonically and duplicate free
  for (int i = 0; i + 1 < w.size(); ++i) CHECK(w.weights[i] < w.weights[i + 1]);
}

TEST_CASE("block_window with no integral roots is a singleton") {
  auto rs = build_root_system("A1");
  Weight l0;
  l0.finite = {Rational(1, 2)};
  l0.delta = 0;
  const BlockWindow w = block_window(rs, l0, 2, 6);
  CHECK(w.size() == 1);
  CHECK(w.weights[0] == l0);
}

TEST_CASE("block_window A2 slice matches the brute-force orbit") {
  auto rs = build_root_system("A2");
  const Weight l0 = zero_weight(2);
  const BlockWindow w = block_window(rs, l0, 1, 4);

  // Oracle: close the orbit under all reflections with a generous n range
  // and no retention pruning, then clip to the box.
  std::set<Weight> orbit{l0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Weight> cur(orbit.begin(), orbit.end());
    for (const Weight& x : cur)
      for (const auto& pr : rs->positive)
        for (int n = -3; n <= 3; ++n) {
          const Weight img = dot_reflect(*rs, x, pr.root, n);
          const Weight diff = weight_sub(img, l0);
          if (!is_integer(diff.delta) || diff.delta < Rational(-2) || diff.delta > 3)
            continue;  // generous slab, wider than the box
          Rational h(0);
          for (const Rational& c : rs->root_coords_of_fw(diff.finite))
            h += c < 0 ? -c : c;
          if (h > 8) continue;
          if (orbit.insert(img).second) grew = true;
        }
  }
  std::set<Weight> clipped;
  for (const Weight& x : orbit) {
    const Weight diff = weight_sub(x, l0);
    if (diff.delta < 0 || diff.delta > 1) continue;
    Rational h(0);
    for (const Rational& c : rs->root_coords_of_fw(diff.finite)) h += c < 0 ? -c : c;
    if (h <= 4) clipped.insert(x);
  }
  CHECK(std::set<Weight>(w.weights.begin(), w.weights.end()) == clipped);
  // |W| = 6 finite chamber weights per delta slice, clipped by height:
  // w0 . 0 = -2 rho has height 4, so nothing is lost at height bound 4.
  CHECK(w.size() == 12);
}

TEST_CASE("alpha_up examples and scan agreement") {
  auto a1 = build_root_system("A1");
  const RootCoords alpha{1};

  // lambda = 0: result is lambda - alpha + delta
  const Weight l0 = zero_weight(1);
  const Weight up = alpha_up(*a1, alpha, l0);
  CHECK(up.finite == QVec{Rational(-2)});
  CHECK(up.delta == 1);

  // fixed point when the pairing vanishes
  Weight fix;
  fix.finite = {Rational(-1)};
  fix.delta = 0;
  CHECK(alpha_up(*a1, alpha, fix) == fix);

  // lambda_bar = -alpha: pairing -1, plain reflection
  Weight low;
  low.finite = {Rational(-2)};
  low.delta = 0;
  const Weight up2 = alpha_up(*a1, alpha, low);
  CHECK(up2.finite == QVec{Rational(0)});
  CHECK(up2.delta == 0);

  // non-integral root rejected
  Weight half;
  half.finite = {Rational(1, 2)};
  half.delta = 0;
  CHECK_THROWS_AS(alpha_up(*a1, alpha, half), std::invalid_argument);
}

TEST_CASE("alpha_up equals the scan oracle on random data") {
  std::mt19937_64 rng(37);
  for (const std::string& name : {"A1", "A2", "B2"}) {
    auto rs = build_root_system(name);
    for (int trial = 0; trial < 400; ++trial) {
      Weight w;
      for (int i = 0; i < rs->rank; ++i)
        w.finite.push_back(Rational(static_cast<long>(rng() % 9) - 4));
      w.delta = Rational(static_cast<long>(rng() % 5) - 2);
      RootCoords alpha = rs->positive[rng() % rs->num_positive()].root;
      if (rng() % 2)
        for (int& x : alpha) x = -x;
      CHECK(alpha_up(*rs, alpha, w) == oracles::alpha_up_scan(*rs, alpha, w));
    }
  }
}

TEST_CASE("alpha_up lands above lambda and is minimal") {
  std::mt19937_64 rng(41);
  auto rs = build_root_system("A2");
  for (int trial = 0; trial < 200; ++trial) {
    Weight w;
    for (int i = 0; i < rs->rank; ++i)
      w.finite.push_back(Rational(static_cast<long>(rng() % 7) - 3));
    w.delta = 0;
    const RootCoords alpha = rs->positive[rng() % rs->num_positive()].root;
    const Weight up = alpha_up(*rs, alpha, w);
    CHECK(leq(*rs, w, up));
    for (int n = -10; n <= 10; ++n) {
      const Weight img = dot_reflect(*rs, w, alpha, n);
      if (leq(*rs, w, img)) CHECK(leq(*rs, up, img));
    }
  }
}

TEST_CASE("topology predicates on the three-element A1 window") {
  auto rs = build_root_system("A1");
  const BlockWindow w = block_window(rs, zero_weight(1), 1, 4);
  // locate lambda0 - alpha, lambda0, lambda0 - alpha + delta
  Weight la, l0 = zero_weight(1), lad;
  la.finite = {Rational(-2)};
  la.delta = 0;
  lad.finite = {Rational(-2)};
  lad.delta = 1;
  const int i_la = w.index_of(la), i_l0 = w.index_of(l0), i_lad = w.index_of(lad);
  REQUIRE(i_la >= 0);
  REQUIRE(i_l0 >= 0);
  REQUIRE(i_lad >= 0);

  // order within the window: la < l0 < lad
  CHECK(w.less(i_la, i_l0));
  CHECK(w.less(i_l0, i_lad));

  CHECK(is_open({}, w));
  CHECK(is_closed({}, w));
  CHECK(is_open({i_la}, w));
  CHECK_FALSE(is_closed({i_la}, w));
  CHECK_FALSE(is_open({i_lad}, w));
  // {lad} is closed iff nothing above it lies in the window; the fourth
  // window weight l0 + delta is incomparable to lad, so this holds
  CHECK(is_closed({i_lad}, w));
  CHECK(is_locally_closed({i_l0}, w));
  CHECK_FALSE(is_open({i_l0}, w));
  CHECK(is_locally_bounded({i_la, i_l0, i_lad}, w));
}

TEST_CASE("k_plus and k_minus") {
  auto rs = build_root_system("A1");
  const BlockWindow w = block_window(rs, zero_weight(1), 1, 4);
  Weight la, l0 = zero_weight(1);
  la.finite = {Rational(-2)};
  la.delta = 0;
  const int i_la = w.index_of(la), i_l0 = w.index_of(l0);

  SubsetFlags all;
  for (int i = 0; i < w.size(); ++i) all.push_back(i);
  CHECK(k_plus(all, w) == all);
  CHECK(k_minus(all, w).empty());

  // K = {lambda0}: K+ = {lambda0 - alpha, lambda0}, K- = {lambda0 - alpha}
  CHECK(k_plus({i_l0}, w) == SubsetFlags{i_la, i_l0});
  CHECK(k_minus({i_l0}, w) == SubsetFlags{i_la});

  // minimal vertex alone
  CHECK(k_plus({i_la}, w) == SubsetFlags{i_la});
  CHECK(k_minus({i_la}, w).empty());

  CHECK_THROWS_AS(k_plus({i_la, w.index_of([&] {
                            Weight lad;
                            lad.finite = {Rational(-2)};
                            lad.delta = 1;
                            return lad;
                          }())},
                         w),
                  std::invalid_argument);
}

TEST_CASE("K = K+ minus K- for random locally closed subsets") {
  std::mt19937_64 rng(43);
  int tested = 0;
  for (const std::string& name : {"A1", "A2"}) {
    auto rs = build_root_system(name);
    const BlockWindow w = block_window(rs, zero_weight(rs->rank), 1, 4);
    while (tested < (name == "A1" ? 100 : 200)) {
      SubsetFlags s;
      for (int i = 0; i < w.size(); ++i)
        if (rng() % 2) s.push_back(i);
      if (!is_locally_closed(s, w)) continue;
      ++tested;
      const SubsetFlags plus = k_plus(s, w);
      const SubsetFlags minus = k_minus(s, w);
      CHECK(is_open(plus, w));
      CHECK(is_open(minus, w));
      SubsetFlags diff;
      std::set<int> m(minus.begin(), minus.end());
      for (int i : plus)
        if (!m.count(i)) diff.push_back(i);
      CHECK(diff == s);
    }
    tested = 0;
  }
}

TEST_CASE("locally closed equals open-cap-closed by brute force") {
  auto rs = build_root_system("A1");
  const BlockWindow w = block_window(rs, zero_weight(1), 1, 4);
  const int n = w.size();
  // all opens
  std::vector<SubsetFlags> opens, closeds;
  for (unsigned m = 0; m < (1u << n); ++m) {
    SubsetFlags s;
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) s.push_back(i);
    if (is_open(s, w)) opens.push_back(s);
    if (is_closed(s, w)) closeds.push_back(s);
  }
  for (unsigned m = 0; m < (1u << n); ++m) {
    SubsetFlags s;
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) s.push_back(i);
    bool expressible = false;
    for (const auto& o : opens)
      for (const auto& c : closeds) {
        std::set<int> oc(o.begin(), o.end());
        SubsetFlags inter;
        for (int i : c)
          if (oc.count(i)) inter.push_back(i);
        if (inter == s) expressible = true;
      }
    CHECK(is_locally_closed(s, w) == expressible);
  }
}

TEST_CASE("unions and intersections of open sets are open") {
  std::mt19937_64 rng(47);
  auto rs = build_root_system("A2");
  const BlockWindow w = block_window(rs, zero_weight(2), 1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    // random down-closures are open
    auto random_open = [&] {
      SubsetFlags s;
      for (int i = 0; i < w.size(); ++i)
        if (rng() % 3 == 0) s.push_back(i);
      return k_plus(is_locally_closed(s, w) ? s : SubsetFlags{}, w);
    };
    const SubsetFlags a = random_open(), b = random_open();
    std::set<int> bs(b.begin(), b.end());
    SubsetFlags uni = a, inter;
    for (int i : b)
      if (!std::count(a.begin(), a.end(), i)) uni.push_back(i);
    std::sort(uni.begin(), uni.end());
    for (int i : a)
      if (bs.count(i)) inter.push_back(i);
    CHECK(is_open(uni, w));
    CHECK(is_open(inter, w));
  }
}
