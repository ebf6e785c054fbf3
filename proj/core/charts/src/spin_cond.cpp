#include <stdexcept>

#include "charts_internal.hpp"

namespace lm::charts {

using detail::PolyMat;
using detail::RF;
using detail::UMat;
using spin::Rat;
using spin::UPoly;
using spin::Vec;

namespace {

// Columns of the change of basis from the lattice basis b = {e_i, pi e_i} of
// Lambda_0 (case A, n = 2m + 1) to the split basis g; Tg[i][j] is the
// b_i-coordinate of g_j (0-based, Laurent in u).
UMat split_in_lattice(int n) {
  int m = (n - 1) / 2;
  UMat Tg(2 * n, std::vector<UPoly>(2 * n));
  Rat half(1, 2);
  for (int i = 0; i < m; ++i) Tg[n + i][i] = UPoly::monomial(-1, -2);        // g_i = -u^-2 b_{n+i}
  Tg[m][m] = UPoly(1);                                                       // g_{m+1} = b_{m+1} - u^-1 b_{n+m+1}
  Tg[n + m][m] = UPoly::monomial(-1, -1);
  for (int k = 0; k < m; ++k) Tg[m + 1 + k][m + 1 + k] = UPoly(1);           // g_{m+1+k} = b_{m+1+k}
  for (int i = 0; i < m; ++i) Tg[i][n + i] = UPoly(1);                       // g_{n+i} = b_i
  Tg[m][n + m] = UPoly(half);                                                // g_{n+m+1} = (b_{m+1} + u^-1 b_{n+m+1}) / 2
  Tg[n + m][n + m] = UPoly::monomial(half, -1);
  for (int k = 0; k < m; ++k) Tg[n + m + 1 + k][n + m + 1 + k] = UPoly(1);   // g_{n+m+1+k} = b_{n+m+1+k}
  return Tg;
}

// Inverse: Binv[i][j] is the g_i-coordinate of b_j (polynomial in u).
UMat lattice_in_split(int n) {
  int m = (n - 1) / 2;
  UMat B(2 * n, std::vector<UPoly>(2 * n));
  Rat half(1, 2);
  for (int i = 0; i < m; ++i) B[n + i][i] = UPoly(1);                        // b_i = g_{n+i}
  B[m][m] = UPoly(half);                                                     // b_{m+1} = g_{m+1}/2 + g_{n+m+1}
  B[n + m][m] = UPoly(1);
  for (int k = 0; k < m; ++k) B[m + 1 + k][m + 1 + k] = UPoly(1);            // b_{m+1+k} = g_{m+1+k}
  for (int i = 0; i < m; ++i) B[i][n + i] = UPoly::monomial(-1, 2);          // b_{n+i} = -u^2 g_i
  B[m][n + m] = UPoly::monomial(-half, 1);                                   // b_{n+m+1} = u g_{n+m+1} - (u/2) g_{m+1}
  B[n + m][n + m] = UPoly::monomial(1, 1);
  for (int k = 0; k < m; ++k) B[n + m + 1 + k][n + m + 1 + k] = UPoly(1);    // b_{n+m+1+k} = g_{n+m+1+k}
  return B;
}

// Apply the wedge power of a 2n x 2n coordinate change to a wedge vector:
// out_T = sum_U det(M[T, U]) v_U, with subsets indexed by the SpinSpace order.
Vec wedge_apply(const spin::SpinSpace& sp, const UMat& M, const Vec& v) {
  Vec out(sp.dim());
  for (int u = 0; u < sp.dim(); ++u) {
    if (v[u].is_zero()) continue;
    std::vector<int> cols;
    for (int a : sp.subsets()[u]) cols.push_back(a - 1);
    for (int t = 0; t < sp.dim(); ++t) {
      std::vector<int> rows;
      for (int a : sp.subsets()[t]) rows.push_back(a - 1);
      UPoly d = detail::det_upoly(detail::usubmatrix(M, rows, cols));
      if (!d.is_zero()) out[t] = out[t] + d * v[u];
    }
  }
  return out;
}

}  // namespace

std::vector<Polynomial> spin_constraints(const ChartSpec& spec, const RingPtr& ring) {
  if (spec.kase != Case::A && spec.kase != Case::B)
    throw std::invalid_argument("spin constraints are available for cases A and B only");
  int n = spec.n, r = spec.r, s = spec.s;
  if (r + s != n) throw std::invalid_argument("signature must satisfy r + s = n");
  int m = n / 2;
  MonomialOrder ord = MonomialOrder::grevlex();

  spin::SpinSpace sp(n);
  int dim = sp.dim();

  // Pluecker coordinates of the chart point: n x n minors of the graph matrix.
  PolyMat G(2 * n, std::vector<Polynomial>(n, Polynomial::zero(ring, ord)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      G[i][j] = Polynomial::variable(ring, "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1), ord);
  for (int j = 0; j < n; ++j) {
    long long bottom = 1;
    if (spec.kase == Case::B && j < m) bottom = -1;  // pi f_j = -b_{n+j} for j <= m
    G[n + j][j] = Polynomial::constant(ring, bottom, ord);
  }
  std::vector<int> allcols(n);
  for (int j = 0; j < n; ++j) allcols[j] = j;
  std::vector<Polynomial> P(dim, Polynomial::zero(ring, ord));
  for (int t = 0; t < dim; ++t) {
    std::vector<int> rows;
    for (int a : sp.subsets()[t]) rows.push_back(a - 1);
    P[t] = detail::det_poly(detail::submatrix(G, rows, allcols));
  }

  // The n-th wedge of the lattice, in split-basis wedge coordinates.
  std::vector<Vec> lattice;
  bool base_change = (spec.kase == Case::A);
  UMat Binv, Tg;
  if (base_change) {
    Binv = lattice_in_split(n);
    Tg = split_in_lattice(n);
  }
  for (int t = 0; t < dim; ++t) {
    if (!base_change) {
      lattice.push_back(sp.wedge(sp.subsets()[t]));
      continue;
    }
    Vec unit(dim);
    unit[t] = UPoly(1);
    lattice.push_back(wedge_apply(sp, Binv, unit));
  }

  int eps_label = (s % 2 == 0) ? 1 : -1;
  std::vector<Vec> Beps = sp.lattice_pm_basis(lattice, eps_label);
  std::vector<Vec> Bother = sp.lattice_pm_basis(lattice, -eps_label);
  if ((int)(Beps.size() + Bother.size()) != dim)
    throw std::logic_error("eigencomponent bases do not span the wedge space");

  // Express the allowed component back in lattice wedge coordinates; its
  // entries lie in k[u].
  std::vector<Vec> columns;
  for (const auto& v : Beps) columns.push_back(base_change ? wedge_apply(sp, Tg, v) : v);
  for (const auto& col : columns)
    for (const auto& e : col)
      if (!e.is_zero() && e.min_exp() < 0)
        throw std::logic_error("lattice eigenbasis has a non-integral coordinate");

  // The allowed eigencomponent is a saturated k[u]-submodule of the lattice
  // wedge, hence a direct summand with free quotient.  The closed condition
  // that the Pluecker vector lands in the component is the vanishing of all
  // k[u]-linear functionals that kill the component, i.e. of the left kernel
  // of the column matrix applied to P.  Compute the kernel by unimodular
  // column reduction of the transpose, tracking the transformation.
  int nc = (int)columns.size();
  std::vector<std::vector<UPoly>> M(nc, std::vector<UPoly>(dim));  // transpose
  for (int r = 0; r < nc; ++r)
    for (int j = 0; j < dim; ++j) M[r][j] = columns[r][j];
  std::vector<std::vector<UPoly>> V(dim, std::vector<UPoly>(dim));
  for (int j = 0; j < dim; ++j) V[j][j] = UPoly(1);
  auto sub_col = [&](int dst, int src, const UPoly& q) {
    for (int r = 0; r < nc; ++r)
      if (!M[r][src].is_zero()) M[r][dst] = M[r][dst] - q * M[r][src];
    for (int r = 0; r < dim; ++r)
      if (!V[r][src].is_zero()) V[r][dst] = V[r][dst] - q * V[r][src];
  };
  auto swap_col = [&](int a, int b) {
    if (a == b) return;
    for (int r = 0; r < nc; ++r) std::swap(M[r][a], M[r][b]);
    for (int r = 0; r < dim; ++r) std::swap(V[r][a], V[r][b]);
  };
  int cur = 0;
  for (int r = 0; r < nc && cur < dim; ++r) {
    for (;;) {
      int jstar = -1;
      for (int j = cur; j < dim; ++j)
        if (!M[r][j].is_zero() && (jstar < 0 || M[r][j].max_exp() < M[r][jstar].max_exp()))
          jstar = j;
      if (jstar < 0) break;
      bool lone = true;
      for (int j = cur; j < dim; ++j) {
        if (j == jstar || M[r][j].is_zero()) continue;
        lone = false;
        // Polynomial (non-Laurent) reduction by leading terms.
        while (!M[r][j].is_zero() && M[r][j].max_exp() >= M[r][jstar].max_exp()) {
          int shift = M[r][j].max_exp() - M[r][jstar].max_exp();
          Rat c = M[r][j].coeff(M[r][j].max_exp()) / M[r][jstar].coeff(M[r][jstar].max_exp());
          sub_col(j, jstar, UPoly::monomial(c, shift));
        }
      }
      if (lone) {
        swap_col(cur, jstar);
        ++cur;
        break;
      }
    }
  }
  std::vector<Polynomial> gens;
  auto emit = [&](const Polynomial& g) {
    if (g.is_zero()) return;
    Polynomial mg = g.monic();
    for (const auto& h : gens)
      if (h == mg) return;
    gens.push_back(mg);
  };
  for (int j = cur; j < dim; ++j) {
    for (int r = 0; r < nc; ++r)
      if (!M[r][j].is_zero()) throw std::logic_error("kernel column is not in the kernel");
    Polynomial g = Polynomial::zero(ring, ord);
    for (int t = 0; t < dim; ++t) {
      if (V[t][j].is_zero() || P[t].is_zero()) continue;
      g = g + detail::upoly_to_poly(ring, V[t][j], ord) * P[t];
    }
    emit(g);
  }
  if ((int)(dim - cur) != (int)Bother.size())
    throw std::logic_error("kernel rank does not match the complementary component");
  return gens;
}

}  // namespace lm::charts
