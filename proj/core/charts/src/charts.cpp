#include "lm/charts.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "charts_internal.hpp"

namespace lm::charts {

using detail::PolyMat;
using detail::UMat;
using spin::Rat;
using spin::UPoly;

namespace detail {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> subsets_of(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

PolyMat submatrix(const PolyMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  PolyMat out(rows.size(), std::vector<Polynomial>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out[i][j] = m[rows[i]][cols[j]];
  return out;
}

UMat usubmatrix(const UMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  UMat out(rows.size(), std::vector<UPoly>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out[i][j] = m[rows[i]][cols[j]];
  return out;
}

Polynomial det_poly(const PolyMat& m) {
  size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  if (n == 1) return m[0][0];
  Polynomial acc = Polynomial::zero(m[0][0].ring(), m[0][0].order());
  std::vector<int> rest(n - 1);
  for (size_t j = 1; j < n; ++j) rest[j - 1] = static_cast<int>(j);
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<int> cols;
    for (size_t j = 0; j < n; ++j)
      if (j != c) cols.push_back(static_cast<int>(j));
    Polynomial cof = m[0][c] * det_poly(submatrix(m, rest, cols));
    acc = (c % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

UPoly det_upoly(const UMat& m) {
  size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  if (n == 1) return m[0][0];
  UPoly acc;
  std::vector<int> rest(n - 1);
  for (size_t j = 1; j < n; ++j) rest[j - 1] = static_cast<int>(j);
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<int> cols;
    for (size_t j = 0; j < n; ++j)
      if (j != c) cols.push_back(static_cast<int>(j));
    UPoly cof = m[0][c] * det_upoly(usubmatrix(m, rest, cols));
    acc = (c % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

Polynomial elementary_symmetric(const PolyMat& m, int k) {
  int n = static_cast<int>(m.size());
  Polynomial acc = Polynomial::zero(m[0][0].ring(), m[0][0].order());
  for (const auto& S : subsets_of(n, k)) acc = acc + det_poly(submatrix(m, S, S));
  return acc;
}

UPoly elementary_symmetric_u(const UMat& m, int k) {
  int n = static_cast<int>(m.size());
  UPoly acc;
  for (const auto& S : subsets_of(n, k)) acc = acc + det_upoly(usubmatrix(m, S, S));
  return acc;
}

long long char_target_coeff(int r, int s, int k) {
  long long c = 0;
  for (int i = 0; i <= k; ++i) {
    long long t = binom(s, i) * binom(r, k - i);
    c += (i % 2 == 0) ? t : -t;
  }
  return c;
}

Polynomial upoly_to_poly(const RingPtr& ring, const UPoly& p, MonomialOrder ord) {
  int uidx = ring->var_index("u");
  if (uidx < 0) throw std::logic_error("ring has no variable u");
  std::vector<Term> terms;
  for (const auto& [e, c] : p.coeffs()) {
    if (e < 0) throw std::logic_error("negative u-power in polynomial conversion");
    Monomial m;
    m.e.assign(ring->arity(), 0);
    m.e[uidx] = e;
    terms.push_back({m, FieldElem(ring->field, c)});
  }
  return Polynomial(ring, ord, std::move(terms));
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  if (a.is_zero()) std::swap(a, b);
  if (a.is_zero()) return UPoly();
  a = a.shifted(-a.min_exp());
  if (!b.is_zero()) b = b.shifted(-b.min_exp());
  while (!b.is_zero()) {
    UPoly q, r;
    UPoly::divmod(a, b, q, r);
    a = b;
    b = r.is_zero() ? r : r.shifted(-r.min_exp());
  }
  Rat lead = a.coeff(a.max_exp());
  return a * UPoly(Rat(1) / lead);
}

UPoly upoly_exact_div(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return a;
  int shift = a.min_exp() - b.min_exp();
  UPoly q, r;
  UPoly::divmod(a.shifted(-a.min_exp()), b.shifted(-b.min_exp()), q, r);
  if (!r.is_zero()) throw std::logic_error("inexact division of u-polynomials");
  return q.shifted(shift);
}

RF RF::zero() { return RF{UPoly(), UPoly(1)}; }

static RF rf_normalize(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::logic_error("zero denominator");
  if (num.is_zero()) return RF::zero();
  int nshift = num.min_exp(), dshift = den.min_exp();
  num = num.shifted(-nshift);
  den = den.shifted(-dshift);
  UPoly g = upoly_gcd(num, den);
  num = upoly_exact_div(num, g);
  den = upoly_exact_div(den, g);
  Rat c = den.coeff(0);
  num = num * UPoly(Rat(1) / c);
  den = den * UPoly(Rat(1) / c);
  return RF{num.shifted(nshift - dshift), den};
}

RF RF::of(const UPoly& p) { return RF{p, UPoly(1)}; }
RF RF::operator+(const RF& o) const { return rf_normalize(num * o.den + o.num * den, den * o.den); }
RF RF::operator-(const RF& o) const { return rf_normalize(num * o.den - o.num * den, den * o.den); }
RF RF::operator*(const RF& o) const { return rf_normalize(num * o.num, den * o.den); }
RF RF::operator/(const RF& o) const {
  if (o.num.is_zero()) throw std::logic_error("division by zero fraction");
  return rf_normalize(num * o.den, den * o.num);
}

}  // namespace detail

namespace {

std::string xvar(int i, int j) { return "x" + std::to_string(i) + "_" + std::to_string(j); }
std::string yvar(int i, int j) { return "y" + std::to_string(i) + "_" + std::to_string(j); }

PolyMat var_matrix(const RingPtr& ring, int n, const std::string& stem) {
  PolyMat X(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      X[i][j] = Polynomial::variable(ring, stem + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  return X;
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
  size_t n = a.size(), k = b.size(), m = b[0].size();
  PolyMat out(n, std::vector<Polynomial>(m, Polynomial::zero(a[0][0].ring(), a[0][0].order())));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] = out[i][j] + a[i][t] * b[t][j];
    }
  return out;
}

PolyMat transpose(const PolyMat& a) {
  PolyMat out(a[0].size(), std::vector<Polynomial>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

// Constant matrices as polynomial matrices.
PolyMat const_matrix(const RingPtr& ring, const std::vector<std::vector<long long>>& m) {
  PolyMat out(m.size(), std::vector<Polynomial>(m[0].size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j)
      out[i][j] = Polynomial::constant(ring, m[i][j]);
  return out;
}

std::vector<std::vector<long long>> antidiag(int n) {
  std::vector<std::vector<long long>> h(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) h[i][n - 1 - i] = 1;
  return h;
}

std::vector<std::vector<long long>> symplectic_J(int n) {
  int m = n / 2;
  std::vector<std::vector<long long>> j(n, std::vector<long long>(n, 0));
  for (int i = 0; i < m; ++i) {
    j[i][m + (m - 1 - i)] = -1;  // top-right block -H_m
    j[m + i][m - 1 - i] = 1;     // bottom-left block H_m
  }
  return j;
}

void push_gen(std::vector<Polynomial>& gens, const Polynomial& g) {
  if (g.is_zero()) return;
  for (const auto& h : gens)
    if (h == g) return;
  gens.push_back(g);
}

// Entries of X^2 - u^2 I, the symmetry condition, and the characteristic
// polynomial coefficients, for an n x n variable matrix with involution
// sym = X^t - E X E (E = H) or X^t + E X E (E = J).
void matrix_chart_gens(std::vector<Polynomial>& gens, const RingPtr& ring, const PolyMat& X,
                       int r, int s, bool orthogonal_sym) {
  int n = r + s;
  Polynomial u = Polynomial::variable(ring, "u");
  Polynomial u2 = u * u;
  PolyMat X2 = mat_mul(X, X);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      push_gen(gens, i == j ? X2[i][j] - u2 : X2[i][j]);
  PolyMat Xt = transpose(X);
  PolyMat E = orthogonal_sym ? const_matrix(ring, antidiag(n)) : const_matrix(ring, symplectic_J(n));
  PolyMat EXE = mat_mul(E, mat_mul(X, E));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      push_gen(gens, orthogonal_sym ? Xt[i][j] - EXE[i][j] : Xt[i][j] + EXE[i][j]);
  for (int k = 1; k <= n; ++k) {
    Polynomial ek = detail::elementary_symmetric(X, k);
    if (k % 2 == 1) ek = -ek;
    Polynomial target = Polynomial::constant(ring, detail::char_target_coeff(r, s, k));
    for (int t = 0; t < k; ++t) target = target * u;
    push_gen(gens, ek - target);
  }
}

// All minors of the given size, rows and columns in lexicographic order.
void minor_gens(std::vector<Polynomial>& gens, const PolyMat& M, int size) {
  int n = static_cast<int>(M.size());
  if (size > n) return;
  auto subs = detail::subsets_of(n, size);
  for (const auto& R : subs)
    for (const auto& C : subs) push_gen(gens, detail::det_poly(detail::submatrix(M, R, C)));
}

void wedge_gens(std::vector<Polynomial>& gens, const RingPtr& ring, const PolyMat& X, int r, int s) {
  if (r == s) return;
  int n = r + s;
  Polynomial u = Polynomial::variable(ring, "u");
  PolyMat XmU = X, XpU = X;
  for (int i = 0; i < n; ++i) {
    XmU[i][i] = X[i][i] - u;
    XpU[i][i] = X[i][i] + u;
  }
  minor_gens(gens, XmU, r + 1);
  minor_gens(gens, XpU, s + 1);
}

std::vector<Polynomial> picard_I1_gens(const RingPtr& ring) {
  auto V = [&](const char* n) { return Polynomial::variable(ring, n); };
  Polynomial u = V("u");
  PolyMat X = {{V("a"), V("b"), V("x2a")}, {V("c"), V("d"), V("x2b")}, {V("x"), V("y"), V("x4")}};
  PolyMat K = const_matrix(ring, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  PolyMat H = const_matrix(ring, {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  PolyMat Xt = transpose(X), Ht = transpose(H);
  // X^t K X + H^t X + X^t H - u^2 K = 0 (symmetric: 6 generators).
  PolyMat iso = mat_mul(Xt, mat_mul(K, X));
  PolyMat lin = mat_mul(Ht, X);
  PolyMat lin2 = mat_mul(Xt, H);
  Polynomial u2 = u * u;
  std::vector<Polynomial> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Polynomial g = iso[i][j] + lin[i][j] + lin2[i][j];
      if (i == 2 && j == 2) g = g - u2;
      push_gen(gens, g);
    }
  PolyMat X2 = mat_mul(X, X);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) push_gen(gens, i == j ? X2[i][j] - u2 : X2[i][j]);
  Polynomial e1 = detail::elementary_symmetric(X, 1);
  Polynomial e2 = detail::elementary_symmetric(X, 2);
  Polynomial e3 = detail::elementary_symmetric(X, 3);
  push_gen(gens, e1 + u);
  push_gen(gens, e2 + u2);
  push_gen(gens, e3 - u2 * u);
  return gens;
}

}  // namespace

RingPtr chart_ring(const ChartSpec& spec, Field f) {
  std::vector<std::string> vars;
  vars.push_back("u");
  int n = spec.n;
  switch (spec.kase) {
    case Case::A:
    case Case::B:
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) vars.push_back(xvar(i, j));
      break;
    case Case::B1: {
      int nn = n - 2;
      vars.push_back("x");
      for (int k = 1; k <= nn; ++k) vars.push_back("b1_" + std::to_string(k));
      for (int k = 1; k <= nn; ++k) vars.push_back("b2_" + std::to_string(k));
      for (int i = 1; i <= nn; ++i)
        for (int j = 1; j <= nn; ++j) vars.push_back(yvar(i, j));
      break;
    }
    case Case::PicardI1:
      vars = {"u", "a", "b", "c", "d", "x2a", "x2b", "x", "y", "x4"};
      break;
  }
  return make_ring(f, std::move(vars));
}

Ideal chart_ideal(const ChartSpec& spec, Field f) {
  int n = spec.n, r = spec.r, s = spec.s;
  if (r < 0 || s < 0 || r + s != n) throw std::invalid_argument("signature must satisfy r + s = n");
  RingPtr ring = chart_ring(spec, f);
  std::vector<Polynomial> gens;
  switch (spec.kase) {
    case Case::A: {
      if (n % 2 == 0) throw std::invalid_argument("case A requires odd n");
      PolyMat X = var_matrix(ring, n, "x");
      matrix_chart_gens(gens, ring, X, r, s, /*orthogonal_sym=*/true);
      if (spec.level != Level::Naive) wedge_gens(gens, ring, X, r, s);
      if (spec.level == Level::Spin)
        for (const auto& g : spin_constraints(spec, ring)) push_gen(gens, g);
      break;
    }
    case Case::B: {
      if (n % 2 != 0) throw std::invalid_argument("case B requires even n");
      PolyMat X = var_matrix(ring, n, "x");
      matrix_chart_gens(gens, ring, X, r, s, /*orthogonal_sym=*/false);
      if (spec.level != Level::Naive) wedge_gens(gens, ring, X, r, s);
      if (spec.level == Level::Spin)
        for (const auto& g : spin_constraints(spec, ring)) push_gen(gens, g);
      break;
    }
    case Case::B1: {
      if (n % 2 != 0) throw std::invalid_argument("the F_1 chart requires even n");
      if (s < 1) throw std::invalid_argument("the F_1 chart requires s >= 1");
      if (spec.level == Level::Spin)
        throw std::invalid_argument("spin level is not supported on the F_1 chart");
      int nn = n - 2;
      PolyMat Y = var_matrix(ring, nn, "y");
      matrix_chart_gens(gens, ring, Y, r - 1, s - 1, /*orthogonal_sym=*/false);
      // B_1 = B_2 Y (the first block row of B is determined by the second).
      for (int j = 0; j < nn; ++j) {
        Polynomial g = Polynomial::variable(ring, "b1_" + std::to_string(j + 1));
        for (int i = 0; i < nn; ++i)
          g = g - Polynomial::variable(ring, "b2_" + std::to_string(i + 1)) * Y[i][j];
        push_gen(gens, g);
      }
      if (spec.level != Level::Naive) wedge_gens(gens, ring, Y, r - 1, s - 1);
      break;
    }
    case Case::PicardI1: {
      if (n != 3 || r != 2 || s != 1)
        throw std::invalid_argument("the Picard I = {1} chart requires (n, r, s) = (3, 2, 1)");
      gens = picard_I1_gens(ring);
      break;
    }
  }
  return Ideal(std::move(gens));
}

SOddReduction chart_even_sodd_reduction(int n, int r, int s, Field f, const GBOptions& opt) {
  if (n % 2 != 0 || s % 2 != 1) throw std::invalid_argument("reduction requires even n and odd s");
  Ideal full = chart_ideal({Case::B1, n, r, s, Level::Wedge}, f);
  int nn = n - 2;
  std::vector<std::string> free_vars = {"x"};
  for (int k = 1; k <= nn; ++k) free_vars.push_back("b2_" + std::to_string(k));
  std::vector<std::string> elim = {"x"};
  for (int k = 1; k <= nn; ++k) elim.push_back("b1_" + std::to_string(k));
  for (int k = 1; k <= nn; ++k) elim.push_back("b2_" + std::to_string(k));
  Ideal reduced = eliminate(full, elim, opt);
  SOddReduction out{std::move(full), std::move(free_vars), std::move(reduced), false};
  Ideal small = chart_ideal({Case::B, nn, r - 1, s - 1, Level::Wedge}, f);
  const RingPtr& target = out.reduced.ring();
  std::vector<int> var_map(small.ring()->arity());
  for (int i = 0; i < small.ring()->arity(); ++i) {
    std::string name = small.ring()->vars[i];
    if (name != "u") name[0] = 'y';
    int idx = target->var_index(name);
    if (idx < 0) throw std::logic_error("variable mismatch in reduction comparison");
    var_map[i] = idx;
  }
  std::vector<Polynomial> mapped;
  for (const auto& g : small.gens()) mapped.push_back(g.mapped(target, var_map, small.order()));
  out.matches_smaller_chart = Ideal(std::move(mapped)).same_ideal(out.reduced, opt);
  return out;
}

PicardI1Report picard_I1_chart(Field f, const GBOptions& opt) {
  RingPtr ring = chart_ring({Case::PicardI1, 3, 2, 1, Level::Naive}, f);
  PicardI1Report rep{Ideal(picard_I1_gens(ring)), false, false, false};
  auto V = [&](const char* n) { return Polynomial::variable(ring, n); };
  Polynomial u = V("u"), x = V("x"), y = V("y");
  Polynomial two = Polynomial::constant(ring, 2);
  rep.lu_identity = rep.system.contains(x * x - two * V("c"), opt) &&
                    rep.system.contains(x * y + V("a") - V("d"), opt) &&
                    rep.system.contains(y * y + two * V("b"), opt);
  rep.x4_generic_identity = saturate(rep.system, u, opt).contains(V("x4") - u, opt);
  std::vector<Polynomial> with_x4 = rep.system.gens();
  with_x4.push_back(V("x4") - u);
  Ideal J(std::move(with_x4));
  Ideal E = eliminate(J, {"a", "b", "c", "d", "x2a", "x2b", "x4"}, opt);
  rep.zero_after_elimination = E.groebner(opt).empty();
  return rep;
}

std::vector<Polynomial> picard_I1_section(const RingPtr& ring) {
  auto V = [&](const char* n) { return Polynomial::variable(ring, n); };
  Polynomial u = V("u"), x = V("x"), y = V("y");
  FieldElem half(ring->field, Rational(1, 2));
  std::vector<Polynomial> vals(ring->arity());
  vals[ring->var_index("u")] = u;
  vals[ring->var_index("a")] = -u - (x * y).scaled(half);
  vals[ring->var_index("b")] = -(y * y).scaled(half);
  vals[ring->var_index("c")] = (x * x).scaled(half);
  vals[ring->var_index("d")] = -u + (x * y).scaled(half);
  vals[ring->var_index("x2a")] = -(u * y);
  vals[ring->var_index("x2b")] = u * x;
  vals[ring->var_index("x")] = x;
  vals[ring->var_index("y")] = y;
  vals[ring->var_index("x4")] = u;
  return vals;
}

bool picard_I1_jacobian_sample(long long p, int count, unsigned seed) {
  Field f = Field::Fp(p);
  RingPtr ring = chart_ring({Case::PicardI1, 3, 2, 1, Level::Naive}, f);
  std::vector<Polynomial> gens = picard_I1_gens(ring);
  int nv = ring->arity();
  int uidx = ring->var_index("u");
  std::vector<int> cols;  // the 9 non-u variables
  for (int i = 0; i < nv; ++i)
    if (i != uidx) cols.push_back(i);
  std::vector<std::vector<Polynomial>> jac(gens.size());
  for (size_t g = 0; g < gens.size(); ++g)
    for (int c : cols) jac[g].push_back(derivative(gens[g], c));
  std::vector<Polynomial> section = picard_I1_section(ring);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> any(0, p - 1), unit(1, p - 1);
  for (int trial = 0; trial < count; ++trial) {
    std::vector<FieldElem> pt(nv, FieldElem(f, 0));
    pt[uidx] = FieldElem(f, unit(rng));
    pt[ring->var_index("x")] = FieldElem(f, any(rng));
    pt[ring->var_index("y")] = FieldElem(f, any(rng));
    std::vector<FieldElem> full(nv, FieldElem(f, 0));
    for (int i = 0; i < nv; ++i) full[i] = eval(section[i], pt);
    for (const auto& g : gens)
      if (!eval(g, full).is_zero()) throw std::logic_error("section point fails to satisfy the system");
    // Row-reduce the evaluated Jacobian over F_p.
    std::vector<std::vector<FieldElem>> M;
    for (size_t g = 0; g < gens.size(); ++g) {
      std::vector<FieldElem> row;
      for (size_t c = 0; c < cols.size(); ++c) row.push_back(eval(jac[g][c], full));
      M.push_back(std::move(row));
    }
    int rank = 0;
    size_t ncols = cols.size();
    for (size_t c = 0; c < ncols && rank < (int)M.size(); ++c) {
      size_t piv = M.size();
      for (size_t i = rank; i < M.size(); ++i)
        if (!M[i][c].is_zero()) { piv = i; break; }
      if (piv == M.size()) continue;
      std::swap(M[rank], M[piv]);
      FieldElem inv = M[rank][c].inv();
      for (size_t j = c; j < ncols; ++j) M[rank][j] = M[rank][j] * inv;
      for (size_t i = 0; i < M.size(); ++i) {
        if (i == (size_t)rank || M[i][c].is_zero()) continue;
        FieldElem fkt = M[i][c];
        for (size_t j = c; j < ncols; ++j) M[i][j] = M[i][j] - fkt * M[rank][j];
      }
      ++rank;
    }
    if (rank != 7) return false;
  }
  return true;
}

Ideal orthogonal_chart_ideal(OrthExample which, Level level, Field f) {
  if (which == OrthExample::Example1) {
    RingPtr ring = make_ring(f, {"u", "a", "b", "c", "d"});
    auto V = [&](const char* n) { return Polynomial::variable(ring, n); };
    Polynomial u = V("u"), a = V("a"), b = V("b"), c = V("c"), d = V("d");
    std::vector<Polynomial> gens = {a * b, c * d, b * c - u * u * a * d};
    if (level == Level::Spin) {
      gens.push_back(a * d);
      gens.push_back(b * c);
    }
    return Ideal(std::move(gens));
  }
  RingPtr ring = make_ring(f, {"x2", "x3", "y2", "y3"});
  auto V = [&](const char* n) { return Polynomial::variable(ring, n); };
  Polynomial x2 = V("x2"), x3 = V("x3"), y2 = V("y2"), y3 = V("y3");
  std::vector<Polynomial> gens = {x2 * x3, y2 * y3, x2 * y3 + x3 * y2, x2 * y2, x3 * y3};
  if (level == Level::Spin) {
    gens.push_back(y3);
    gens.push_back(x2);
    gens.push_back(x2 * y3 - y2 * x3);
  }
  return Ideal(std::move(gens));
}

}  // namespace lm::charts
