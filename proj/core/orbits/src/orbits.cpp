#include "lm/orbits.hpp"

#include <numeric>
#include <stdexcept>

namespace lm::orbits {

namespace {

using PolyMat = std::vector<std::vector<Polynomial>>;

std::vector<std::vector<int>> subsets_of(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Polynomial det_minor(const PolyMat& M, const std::vector<int>& rows, const std::vector<int>& cols) {
  int k = (int)rows.size();
  if (k == 0) return Polynomial::constant(M[0][0].ring(), 1, M[0][0].order());
  if (k == 1) return M[rows[0]][cols[0]];
  Polynomial d = Polynomial::zero(M[0][0].ring(), M[0][0].order());
  std::vector<int> subrows(rows.begin() + 1, rows.end());
  for (int j = 0; j < k; ++j) {
    std::vector<int> subcols;
    for (int t = 0; t < k; ++t)
      if (t != j) subcols.push_back(cols[t]);
    Polynomial cof = det_minor(M, subrows, subcols);
    if (cof.is_zero() || M[rows[0]][cols[j]].is_zero()) continue;
    Polynomial term = M[rows[0]][cols[j]] * cof;
    d = (j % 2 == 0) ? d + term : d - term;
  }
  return d;
}

RingPtr orbit_ring(int n, Field f) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      vars.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  return make_ring(f, std::move(vars));
}

PolyMat var_matrix(const RingPtr& ring, int n, MonomialOrder ord) {
  PolyMat X(n, std::vector<Polynomial>(n, Polynomial::zero(ring, ord)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      X[i][j] = Polynomial::variable(ring, "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1), ord);
  return X;
}

void push_unique(std::vector<Polynomial>& gens, const Polynomial& g) {
  if (g.is_zero()) return;
  Polynomial m = g.monic();
  for (const auto& h : gens)
    if (h == m) return;
  gens.push_back(m);
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int j = 1; parts_.size() > 0 && j <= parts_[0]; ++j) {
    int cnt = 0;
    for (int p : parts_)
      if (p >= j) ++cnt;
    t.push_back(cnt);
  }
  return Partition(std::move(t));
}

Partition double_partition(const Partition& lambda) {
  std::vector<int> d;
  for (int p : lambda.parts()) {
    d.push_back(p);
    d.push_back(p);
  }
  return Partition(std::move(d));
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.sum() != b.sum()) throw std::invalid_argument("dominance compares partitions of equal sum");
  int pa = 0, pb = 0;
  size_t len = std::max(a.parts().size(), b.parts().size());
  for (size_t i = 0; i < len; ++i) {
    pa += i < a.parts().size() ? a.parts()[i] : 0;
    pb += i < b.parts().size() ? b.parts()[i] : 0;
    if (pa > pb) return false;
  }
  return true;
}

int orbit_dim(int r, int s) { return r * s; }

Ideal orbit_closure_ideal(int n, int s, PairKind pair, Field f) {
  int r = n - s;
  if (s < 0 || r < s) throw std::invalid_argument("need 0 <= s <= r = n - s");
  if (pair == PairKind::Orthogonal && n % 2 == 0)
    throw std::invalid_argument("the orthogonal pair case requires odd n");
  if (pair == PairKind::Symplectic && (n % 2 != 0 || s % 2 != 0))
    throw std::invalid_argument("the symplectic pair case requires n and s even");

  MonomialOrder ord = MonomialOrder::grevlex();
  RingPtr ring = orbit_ring(n, f);
  PolyMat X = var_matrix(ring, n, ord);
  std::vector<Polynomial> gens;

  // X^2 = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial e = Polynomial::zero(ring, ord);
      for (int k = 0; k < n; ++k) e = e + X[i][k] * X[k][j];
      push_unique(gens, e);
    }

  // pair symmetry: X^t = H X H (orthogonal), X^t = -J X J (symplectic).
  // In entries: orthogonal X[j][i] = X[n-1-i][n-1-j]; symplectic with
  // J = [[0, -H_m], [H_m, 0]]: (J X J)[i][j] = eps_i eps_j X[n-1-i][n-1-j]
  // where eps_i = -1 for i < m and +1 otherwise.
  int m = n / 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial e = Polynomial::zero(ring, ord);
      if (pair == PairKind::Orthogonal) {
        e = X[j][i] - X[n - 1 - i][n - 1 - j];
      } else {
        int eps = ((i < m) != (j < m)) ? -1 : 1;
        Polynomial t = X[n - 1 - i][n - 1 - j];
        e = (eps > 0) ? X[j][i] - t : X[j][i] + t;
      }
      push_unique(gens, e);
    }

  // char_X(T) = T^n: all elementary symmetric functions of X vanish.
  for (int k = 1; k <= n; ++k) {
    Polynomial e = Polynomial::zero(ring, ord);
    for (const auto& S : subsets_of(n, k)) e = e + det_minor(X, S, S);
    push_unique(gens, e);
  }

  // Minor conditions; for the symplectic pair only when r != s.
  if (pair == PairKind::Orthogonal || r != s) {
    for (int k : {s + 1, r + 1}) {
      if (k > n) continue;
      for (const auto& R : subsets_of(n, k))
        for (const auto& C : subsets_of(n, k)) push_unique(gens, det_minor(X, R, C));
    }
  }
  return Ideal(std::move(gens), ord);
}

OrbitReport special_fiber_vs_orbit(int n, int r, int s, PairKind pair, Field f,
                                   const GBOptions& opt) {
  if (r + s != n) throw std::invalid_argument("signature must satisfy r + s = n");
  OrbitReport rep;
  rep.n = n;
  rep.r = r;
  rep.s = s;
  rep.pair = pair;
  rep.expected_dim = orbit_dim(r, s);

  Ideal orbit = orbit_closure_ideal(n, s, pair, f);
  RingPtr R0 = orbit.ring();
  MonomialOrder ord = orbit.order();

  charts::Case kase = (pair == PairKind::Orthogonal) ? charts::Case::A : charts::Case::B;
  Ideal chart = charts::chart_ideal({kase, n, r, s, charts::Level::Wedge}, f);
  const RingPtr& cring = chart.ring();

  // Special fiber: substitute u = 0 and transport into the u-free ring.
  std::vector<Polynomial> vals(cring->arity(), Polynomial::zero(R0, ord));
  for (int i = 0; i < cring->arity(); ++i) {
    const std::string& name = cring->vars[i];
    if (name == "u") continue;
    int idx = R0->var_index(name);
    if (idx < 0) throw std::logic_error("chart variable missing from the orbit ring: " + name);
    vals[i] = Polynomial::variable(R0, idx, ord);
  }
  std::vector<Polynomial> fiber_gens;
  for (const auto& g : chart.gens()) push_unique(fiber_gens, g.substituted(R0, vals));
  Ideal fiber(std::move(fiber_gens), ord);

  rep.chart_fiber_dim = krull_dim(fiber, opt);
  rep.orbit_ideal_dim = krull_dim(orbit, opt);
  rep.dims_match = rep.chart_fiber_dim == rep.expected_dim && rep.orbit_ideal_dim == rep.expected_dim;

  rep.orbit_gens_in_chart_radical = true;
  for (const auto& g : orbit.gens())
    if (!radical_membership(g, fiber, opt)) {
      rep.orbit_gens_in_chart_radical = false;
      break;
    }
  rep.chart_gens_in_orbit_radical = true;
  for (const auto& g : fiber.gens())
    if (!radical_membership(g, orbit, opt)) {
      rep.chart_gens_in_orbit_radical = false;
      break;
    }

  rep.label = "evidence at (n=" + std::to_string(n) +
              ", p=" + (f.is_fp() ? std::to_string(f.p) : std::string("0")) +
              ", budget=" + std::to_string(opt.max_pairs) + ")";
  return rep;
}

}  // namespace lm::orbits
