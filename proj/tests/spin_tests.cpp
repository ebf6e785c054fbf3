#include <random>
#include <vector>

#include "doctest.h"
#include "lm/spin.hpp"

using namespace lm::spin;

namespace {

std::vector<std::vector<Rat>> split_gram(int n) {
  int d = 2 * n;
  std::vector<std::vector<Rat>> g(d, std::vector<Rat>(d, 0));
  for (int i = 0; i < d; ++i) g[i][d - 1 - i] = 1;
  return g;
}

std::vector<Rat> unit(int d, int i) {
  std::vector<Rat> v(d, 0);
  v[i] = 1;
  return v;
}

bool is_eigen(const SpinSpace& sp, const Vec& v, int eps) {
  Vec av = sp.apply_ae(v);
  for (int i = 0; i < sp.dim(); ++i)
    if (!(av[i] == UPoly(eps) * v[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  UPoly a = UPoly::monomial(1, 2) + UPoly::monomial(Rat(3, 2), 0);  // u^2 + 3/2
  UPoly b = UPoly::monomial(1, 1);                                  // u
  CHECK((a * b).coeff(3) == 1);
  CHECK((a - a).is_zero());
  CHECK(a.min_exp() == 0);
  CHECK(a.max_exp() == 2);
  CHECK(UPoly::monomial(1, -2).shifted(2) == UPoly(1));
  UPoly q, r;
  UPoly::divmod(a, b, q, r);
  CHECK(q == UPoly::monomial(1, 1));
  CHECK(r == UPoly(Rat(3, 2)));
  CHECK_THROWS(UPoly::divmod(a, UPoly(), q, r));
}

TEST_CASE("sign of the reindexing permutation") {
  // n = 2: word for S = {1,2} is (4,3,1,2), five inversions
  CHECK(sigma_sign(2, {1, 2}) == -1);
  CHECK(sigma_sign(2, {1, 3}) == 1);
  CHECK(sigma_sign(2, {3, 4}) == -1);
  CHECK(sigma_sign(2, {1, 4}) == -1);
  CHECK(sigma_sign(2, {2, 3}) == -1);
  CHECK(sigma_sign(2, {2, 4}) == 1);
  CHECK(reflect_complement(2, {1, 2}) == std::vector<int>{1, 2});
  CHECK(reflect_complement(2, {1, 4}) == std::vector<int>{2, 3});
  for (int n = 1; n <= 4; ++n) {
    SpinSpace sp(n);
    for (auto& S : sp.subsets()) CHECK(reflect_complement(n, reflect_complement(n, S)) == S);
  }
}

TEST_CASE("a_e squares to the discriminant") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(ae_square_check(n, Rat(1)));
    CHECK_FALSE(ae_square_check(n, Rat(-1)));
  }
  // matrix form on the whole wedge space
  SpinSpace sp(2);
  for (int i = 0; i < sp.dim(); ++i) {
    Vec v(sp.dim());
    v[i] = UPoly(1);
    Vec avv = sp.apply_ae(sp.apply_ae(v));
    for (int k = 0; k < sp.dim(); ++k) CHECK(avv[k] == v[k]);
  }
}

TEST_CASE("discriminant") {
  for (int n = 1; n <= 3; ++n) CHECK(discriminant(split_gram(n)) == 1);
  CHECK(discriminant({{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}}) == 1);
  CHECK(discriminant({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == -1);
  CHECK_THROWS(discriminant({{Rat(1)}}));
}

TEST_CASE("eigencomponents of the wedge space") {
  // n = 1: the plus component is spanned by e_1, the minus by e_2
  {
    SpinSpace sp(1);
    CHECK(sp.plus_sign() == -1);
    auto plus = sp.eigen_basis(+1);
    auto minus = sp.eigen_basis(-1);
    REQUIRE(plus.size() == 1);
    REQUIRE(minus.size() == 1);
    CHECK(plus[0] == sp.wedge({1}));
    CHECK(minus[0] == sp.wedge({2}));
  }
  for (int n = 1; n <= 4; ++n) {
    SpinSpace sp(n);
    auto plus = sp.eigen_basis(+1);
    auto minus = sp.eigen_basis(-1);
    CHECK((int)(plus.size() + minus.size()) == sp.dim());
    for (auto& v : plus) CHECK(is_eigen(sp, v, sp.plus_sign()));
    for (auto& v : minus) CHECK(is_eigen(sp, v, -sp.plus_sign()));
    // e_1 ^ ... ^ e_n lies in the plus component
    std::vector<int> S0;
    for (int i = 1; i <= n; ++i) S0.push_back(i);
    CHECK(module_contains(plus, sp.wedge(S0)));
  }
  SpinSpace sp2(2);
  CHECK(sp2.eigen_basis(+1).size() == 3);
}

TEST_CASE("discriminant algebra classification") {
  auto d1 = discriminant_data(split_gram(2));
  CHECK(d1.D == 1);
  CHECK(d1.split);
  auto d2 = discriminant_data({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK(d2.D == -1);
  CHECK_FALSE(d2.split);
  auto d3 = discriminant_data({{Rat(1), Rat(0)}, {Rat(0), Rat(-4)}});
  CHECK(d3.D == 4);
  CHECK(d3.split);
  auto d5 = discriminant_data({{Rat(1), Rat(0)}, {Rat(0), Rat(-5)}});
  CHECK(d5.D == 5);
  CHECK_FALSE(d5.split);
}

TEST_CASE("a_e on diagonal forms squares to the discriminant") {
  using lm::Field;
  using lm::FieldElem;
  // fixed small case: n = 1, diag(h1, h2) -> D = -h1 h2
  {
    Field Q = Field::Q();
    std::vector<FieldElem> diag{FieldElem(Q, 2), FieldElem(Q, 3)};
    CHECK(ae_square_check(diag, 1) == FieldElem(Q, -6));
  }
  std::mt19937 rng(12345);
  for (Field f : {Field::Q(), Field::Fp(5), Field::Fp(7)}) {
    for (int n = 1; n <= 3; ++n) {
      int trials = (f == Field::Q()) ? 100 : 34;
      for (int t = 0; t < trials; ++t) {
        std::vector<FieldElem> diag;
        std::vector<std::vector<Rat>> gram(2 * n, std::vector<Rat>(2 * n, 0));
        for (int i = 0; i < 2 * n; ++i) {
          long long v = 0;
          while (v == 0 || (f.is_fp() && v % f.p == 0)) v = (long long)(rng() % 19) - 9;
          diag.push_back(FieldElem(f, v));
          gram[i][i] = v;
        }
        FieldElem D = ae_square_check(diag, n);
        FieldElem expect(f, 1);
        for (auto& d : diag) expect = expect * d;
        if (n % 2 == 1) expect = -expect;
        CHECK(D == expect);
        if (!f.is_fp()) CHECK(D == FieldElem(f, discriminant(gram)));
      }
    }
  }
  // a_{lambda e} = lambda a_e
  {
    Field F5 = Field::Fp(5);
    std::vector<FieldElem> diag{FieldElem(F5, 1), FieldElem(F5, 2), FieldElem(F5, 3),
                                FieldElem(F5, 4)};
    FieldElem lam(F5, 3);
    auto A1 = ae_matrix(diag, 2, FieldElem(F5, 1));
    auto Al = ae_matrix(diag, 2, lam);
    for (size_t i = 0; i < A1.size(); ++i)
      for (size_t j = 0; j < A1.size(); ++j) CHECK(Al[i][j] == lam * A1[i][j]);
  }
}

TEST_CASE("parity classification matches eigencomponent membership") {
  for (int n = 2; n <= 3; ++n) {
    SpinSpace sp(n);
    auto gram = split_gram(n);
    std::vector<std::vector<Rat>> ref;
    for (int i = 0; i < n; ++i) ref.push_back(unit(2 * n, i));
    auto plus = sp.eigen_basis(+1);
    int checked = 0;
    for (auto& S : sp.subsets()) {
      // coordinate subspace <e_i : i in S>; isotropic iff S avoids its
      // reflection i <-> 2n+1-i
      bool iso = true;
      for (int a : S)
        for (int b : S) iso = iso && (a + b != 2 * n + 1);
      if (!iso) continue;
      ++checked;
      std::vector<std::vector<Rat>> W;
      for (int i : S) W.push_back(unit(2 * n, i - 1));
      Parity p = isotropic_parity(gram, ref, W);
      bool in_plus = module_contains(plus, sp.wedge(S));
      CHECK(in_plus == (p == Parity::Same));
      CHECK(in_plus == (sigma_sign(n, S) == sp.plus_sign()));
    }
    CHECK(checked == (1 << n));  // one free choice per pair {i, 2n+1-i}
  }
  // e_1...e_{n-1} e_{n+1} lies on the opposite side of e_1...e_n
  {
    SpinSpace sp(3);
    auto gram = split_gram(3);
    std::vector<std::vector<Rat>> ref{unit(6, 0), unit(6, 1), unit(6, 2)};
    std::vector<std::vector<Rat>> other{unit(6, 0), unit(6, 1), unit(6, 3)};
    CHECK(isotropic_parity(gram, ref, other) == Parity::Opposite);
    CHECK_THROWS(isotropic_parity(gram, ref, {unit(6, 0), unit(6, 1), unit(6, 5)}));
  }
}

TEST_CASE("wedge vector JSON") {
  SpinSpace sp(2);
  Vec v = sp.wedge({1, 2});
  Vec w = sp.wedge({3, 4}, 1, 2);
  for (int i = 0; i < sp.dim(); ++i) v[i] = v[i] + w[i];
  CHECK(wedge_vector_json(2, v) ==
        "{\"n\":2,\"terms\":[[[1,2],\"1\"],[[3,4],\"1*u^2\"]]}");
}

TEST_CASE("isotropic subspaces and orbit parity") {
  auto g = split_gram(2);
  std::vector<std::vector<Rat>> W{unit(4, 0), unit(4, 1)};    // <e1, e2>
  std::vector<std::vector<Rat>> Wp{unit(4, 2), unit(4, 3)};   // <e3, e4>
  std::vector<std::vector<Rat>> Wpp{unit(4, 0), unit(4, 2)};  // <e1, e3>
  CHECK(is_isotropic(g, W));
  CHECK(is_isotropic(g, Wp));
  CHECK(is_isotropic(g, Wpp));
  CHECK_FALSE(is_isotropic(g, {unit(4, 0), unit(4, 3)}));
  CHECK(subspace_intersection_dim(W, Wp) == 0);
  CHECK(subspace_intersection_dim(W, Wpp) == 1);
  CHECK(same_so_orbit(2, 0));
  CHECK_FALSE(same_so_orbit(2, 1));
  CHECK(same_so_orbit(2, 2));
}

TEST_CASE("module membership over k[u]") {
  SpinSpace sp(2);
  Vec v = sp.wedge({1, 4});
  std::vector<Vec> gens{v};
  CHECK(module_contains(gens, v));
  Vec v2(sp.dim());
  for (int i = 0; i < sp.dim(); ++i) v2[i] = v[i].shifted(2);
  CHECK(module_contains(gens, v2));
  Vec vneg(sp.dim());
  for (int i = 0; i < sp.dim(); ++i) vneg[i] = v[i].shifted(-1);
  CHECK_FALSE(module_contains(gens, vneg));
  CHECK_FALSE(module_contains(gens, sp.wedge({2, 3})));
  // unit rescaling preserves the module
  Vec vh(sp.dim());
  for (int i = 0; i < sp.dim(); ++i) vh[i] = UPoly(Rat(1, 2)) * v[i];
  CHECK(same_module(gens, {vh}));
}

TEST_CASE("plus/minus lattice bases: standard lattice") {
  SpinSpace sp(2);
  std::vector<Vec> lattice;
  for (auto& S : sp.subsets()) lattice.push_back(sp.wedge(S));
  auto plus = sp.lattice_pm_basis(lattice, +1);
  auto minus = sp.lattice_pm_basis(lattice, -1);
  REQUIRE(plus.size() == 3);
  REQUIRE(minus.size() == 3);
  CHECK(same_module(plus, sp.eigen_basis(+1)));
  CHECK(same_module(minus, sp.eigen_basis(-1)));
}

TEST_CASE("plus/minus lattice bases: quadric lattices with uniformizer") {
  SpinSpace sp(2);
  // Lambda_{-1} = <e1, e2, e3, p e4> with p = u^2
  std::vector<Vec> lam_m1{
      sp.wedge({1, 2}),       sp.wedge({1, 3}),       sp.wedge({1, 4}, 1, 2),
      sp.wedge({2, 3}),       sp.wedge({2, 4}, 1, 2), sp.wedge({3, 4}, 1, 2),
  };
  auto plus = sp.lattice_pm_basis(lam_m1, +1);
  REQUIRE(plus.size() == 3);
  for (auto& v : plus) {
    CHECK(is_eigen(sp, v, sp.plus_sign()));
    CHECK(module_contains(lam_m1, v));
  }
  Vec mixed(sp.dim());
  {
    Vec a = sp.wedge({1, 4}, 1, 2), b = sp.wedge({2, 3}, 1, 2);
    for (int i = 0; i < sp.dim(); ++i) mixed[i] = a[i] + b[i];
  }
  std::vector<Vec> expected_plus{sp.wedge({1, 2}), sp.wedge({3, 4}, 1, 2), mixed};
  CHECK(same_module(plus, expected_plus));

  auto minus = sp.lattice_pm_basis(lam_m1, -1);
  Vec mixed_m(sp.dim());
  {
    Vec a = sp.wedge({1, 4}, 1, 2), b = sp.wedge({2, 3}, -1, 2);
    for (int i = 0; i < sp.dim(); ++i) mixed_m[i] = a[i] + b[i];
  }
  std::vector<Vec> expected_minus{sp.wedge({1, 3}), sp.wedge({2, 4}, 1, 2), mixed_m};
  CHECK(same_module(minus, expected_minus));

  // Lambda_1 = <e1/p, e2, e3, p e4>
  std::vector<Vec> lam_1{
      sp.wedge({1, 2}, 1, -2), sp.wedge({1, 3}, 1, -2), sp.wedge({1, 4}),
      sp.wedge({2, 3}),        sp.wedge({2, 4}, 1, 2),  sp.wedge({3, 4}, 1, 2),
  };
  auto plus1 = sp.lattice_pm_basis(lam_1, +1);
  REQUIRE(plus1.size() == 3);
  Vec mixed1(sp.dim());
  {
    Vec a = sp.wedge({1, 4}), b = sp.wedge({2, 3});
    for (int i = 0; i < sp.dim(); ++i) mixed1[i] = a[i] + b[i];
  }
  std::vector<Vec> expected_plus1{sp.wedge({1, 2}, 1, -2), sp.wedge({3, 4}, 1, 2), mixed1};
  CHECK(same_module(plus1, expected_plus1));
}
