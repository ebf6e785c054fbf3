#include "doctest.h"

#include <set>
#include <vector>

#include "lm/charts.hpp"

using namespace lm;
using namespace lm::charts;

namespace {

Polynomial V(const RingPtr& r, const std::string& n) { return Polynomial::variable(r, n); }

// Substitution list sending u to itself and each matrix entry to the given
// diagonal value (off-diagonal entries to zero).
std::vector<Polynomial> diag_point(const RingPtr& ring, int n, const std::vector<Polynomial>& diag) {
  std::vector<Polynomial> vals(ring->arity(), Polynomial::zero(ring));
  vals[ring->var_index("u")] = V(ring, "u");
  for (int i = 1; i <= n; ++i)
    vals[ring->var_index("x" + std::to_string(i) + "_" + std::to_string(i))] = diag[i - 1];
  return vals;
}

bool all_vanish(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& vals) {
  for (const auto& g : gens)
    if (!g.substituted(g.ring(), vals).is_zero()) return false;
  return true;
}

std::vector<int> complement_sizes(int n, int s) {
  // number of admissible index sets S: subsets of {1..n} of size s avoiding
  // their own reflection
  int count = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != s) continue;
    bool ok = true;
    for (int a = 1; a <= n; ++a)
      if ((mask >> (a - 1)) & 1)
        if ((mask >> (n - a)) & 1) ok = false;
    if (ok) ++count;
  }
  return {count};
}

std::vector<std::vector<int>> valid_index_sets(int n, int s) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != s) continue;
    bool ok = true;
    std::vector<int> S;
    for (int a = 1; a <= n; ++a)
      if ((mask >> (a - 1)) & 1) {
        S.push_back(a);
        if ((mask >> (n - a)) & 1) ok = false;
      }
    if (ok) out.push_back(S);
  }
  return out;
}

}  // namespace

TEST_CASE("chart ring layout and generator counts") {
  ChartSpec a{Case::A, 3, 2, 1, Level::Naive};
  RingPtr r = chart_ring(a, Field::Q());
  CHECK(r->arity() == 10);
  CHECK(r->vars[0] == "u");
  CHECK(r->vars[1] == "x1_1");
  CHECK(r->vars[9] == "x3_3");
  Ideal I = chart_ideal(a);
  // 9 matrix-square entries, 6 nonzero persymmetry entries, 3 characteristic
  // coefficients
  CHECK(I.gens().size() == 18);

  ChartSpec b1{Case::B1, 4, 3, 1, Level::Naive};
  RingPtr rb = chart_ring(b1, Field::Q());
  CHECK(rb->arity() == 10);  // u, x, b1_1, b1_2, b2_1, b2_2, y1_1..y2_2
  CHECK(rb->var_index("b2_2") > 0);

  CHECK_THROWS_AS(chart_ideal({Case::A, 4, 2, 2, Level::Naive}), std::invalid_argument);
  CHECK_THROWS_AS(chart_ideal({Case::B, 3, 2, 1, Level::Naive}), std::invalid_argument);
  CHECK_THROWS_AS(chart_ideal({Case::B1, 4, 4, 0, Level::Naive}), std::invalid_argument);
  CHECK_THROWS_AS(chart_ideal({Case::B1, 4, 3, 1, Level::Spin}), std::invalid_argument);
}

TEST_CASE("signature (n, 0) wedge chart forces X = -u") {
  ChartSpec spec{Case::A, 3, 3, 0, Level::Wedge};
  Ideal I = chart_ideal(spec);
  RingPtr r = I.ring();
  Polynomial u = V(r, "u");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Polynomial e = V(r, "x" + std::to_string(i) + "_" + std::to_string(j));
      if (i == j) e = e + u;
      CHECK(I.contains(e));
    }
}

TEST_CASE("generic diagonal point satisfies the full spin chart (case A)") {
  ChartSpec spec{Case::A, 3, 2, 1, Level::Spin};
  Ideal I = chart_ideal(spec);
  CHECK(I.gens().size() > 18);  // the spin conditions are not vacuous
  RingPtr r = I.ring();
  Polynomial u = V(r, "u");
  CHECK(all_vanish(I.gens(), diag_point(r, 3, {-u, u, -u})));
  // A diagonal point with the wrong signature violates the chart.
  CHECK_FALSE(all_vanish(I.gens(), diag_point(r, 3, {u, u, -u})));
}

TEST_CASE("X = 0 satisfies the spin condition exactly when s is even (case B)") {
  std::vector<std::tuple<int, int, int, bool>> cases = {
      {2, 2, 0, true}, {2, 1, 1, false}, {4, 2, 2, true}, {4, 3, 1, false}};
  for (auto [n, r, s, expect] : cases) {
    ChartSpec spec{Case::B, n, r, s, Level::Spin};
    RingPtr ring = chart_ring(spec, Field::Q());
    auto cons = spin_constraints(spec, ring);
    std::vector<Polynomial> at_zero(ring->arity(), Polynomial::zero(ring));
    at_zero[ring->var_index("u")] = V(ring, "u");
    CHECK(all_vanish(cons, at_zero) == expect);
  }
}

TEST_CASE("orthogonal example fixtures") {
  Ideal naive1 = orthogonal_chart_ideal(OrthExample::Example1, Level::Naive);
  CHECK(naive1.gens().size() == 3);
  auto fl = is_flat_over_dvr(naive1, "u");
  CHECK_FALSE(fl.flat);
  REQUIRE(fl.witness.has_value());
  CHECK_FALSE(naive1.contains(*fl.witness));

  Ideal spin1 = orthogonal_chart_ideal(OrthExample::Example1, Level::Spin);
  CHECK(is_flat_over_dvr(spin1, "u").flat);

  Ideal spin2 = orthogonal_chart_ideal(OrthExample::Example2, Level::Spin);
  RingPtr r2 = spin2.ring();
  CHECK(spin2.contains(V(r2, "x2")));
  CHECK(spin2.contains(V(r2, "y3")));
  CHECK(radical_membership(V(r2, "y2") * V(r2, "x3"), spin2));
}

TEST_CASE("the s-odd reduction of the F_1 chart splits off a smaller chart") {
  SOddReduction red = chart_even_sodd_reduction(4, 3, 1);
  CHECK(red.free_vars == std::vector<std::string>{"x", "b2_1", "b2_2"});
  CHECK(red.matches_smaller_chart);
  // signature (2, 0) on the inner 2 x 2 block: Y = -u
  RingPtr r = red.reduced.ring();
  CHECK(red.reduced.contains(V(r, "y1_1") + V(r, "u")));
}

TEST_CASE("the Picard I = {1} chart is the full affine space over (u, x, y)") {
  PicardI1Report rep = picard_I1_chart();
  CHECK(rep.system.gens().size() == 18);
  CHECK(rep.lu_identity);
  CHECK(rep.x4_generic_identity);
  CHECK(rep.zero_after_elimination);
}

TEST_CASE("the closed section satisfies the Picard system identically") {
  for (Field f : {Field::Q(), Field::Fp(5)}) {
    RingPtr ring = chart_ring({Case::PicardI1, 3, 2, 1, Level::Naive}, f);
    Ideal I = chart_ideal({Case::PicardI1, 3, 2, 1, Level::Naive}, f);
    std::vector<Polynomial> sec = picard_I1_section(ring);
    CHECK(all_vanish(I.gens(), sec));
  }
}

TEST_CASE("the Picard system has Jacobian corank 2 along the section") {
  CHECK(picard_I1_jacobian_sample(5, 25, 20260824));
  CHECK(picard_I1_jacobian_sample(7, 25, 7));
}

TEST_CASE("lifted points are valid for every admissible index set") {
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; 2 * s <= n; ++s) {
      int r = n - s;
      auto sets = valid_index_sets(n, s);
      CHECK((int)sets.size() == complement_sizes(n, s)[0]);
      for (const auto& S : sets)
        for (int idx = 0; idx <= n; ++idx) {
          LiftedPoint p = lift_point(S, r, s, idx);
          CHECK(p.rank_n);
          CHECK(p.pi_stable);
          CHECK(p.isotropic);
          CHECK(p.charpoly_ok);
        }
    }
  // {1, 4} meets its own reflection when n = 4
  CHECK_THROWS_AS(lift_point({1, 4}, 2, 2, 0), std::invalid_argument);
}

TEST_CASE("relative position of a chain with itself is the identity") {
  for (int n = 3; n <= 4; ++n) {
    weyl::Group G(n);
    CHECK(relative_position(standard_chain(n), standard_chain(n)) == G.identity());
  }
}

TEST_CASE("lifted chains sit in the predicted translation position") {
  for (int n = 3; n <= 4; ++n)
    for (int s = 0; 2 * s <= n; ++s) {
      int r = n - s;
      for (const auto& S : valid_index_sets(n, s)) {
        weyl::Elem got = relative_position(standard_chain(n), lifted_chain(S, r, s));
        CHECK(got == predicted_position(n, S));
      }
    }
}

TEST_CASE("lifted chain positions exhaust the finite Weyl orbit of the coweight") {
  int n = 4, s = 2, r = 2;
  weyl::Group G(n);
  std::set<weyl::Elem> seen;
  for (const auto& S : valid_index_sets(n, s))
    seen.insert(relative_position(standard_chain(n), lifted_chain(S, r, s)));
  auto extreme = G.extreme_elements(r, s);
  std::set<weyl::Elem> expected(extreme.begin(), extreme.end());
  CHECK(seen == expected);
}

TEST_CASE("small spin charts are flat over the base") {
  GBOptions opt;
  Ideal I = chart_ideal({Case::B, 2, 1, 1, Level::Spin}, Field::Fp(5));
  CHECK(is_flat_over_dvr(I, "u", opt).flat);
}
