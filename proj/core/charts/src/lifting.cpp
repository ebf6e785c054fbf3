#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "charts_internal.hpp"

namespace lm::charts {

using spin::Rat;
using spin::UPoly;
using spin::Vec;

namespace {

std::vector<int> reflected_set(int n, const std::vector<int>& S) {
  std::vector<int> out;
  for (int a : S) out.push_back(n + 1 - a);
  std::sort(out.begin(), out.end());
  return out;
}

// pi in the coordinates (c, d) w.r.t. {f_j, pi f_j}: (c, d) -> (u^2 d, c).
Vec apply_pi(int n, const Vec& v) {
  Vec out(2 * n);
  for (int j = 0; j < n; ++j) {
    out[j] = v[n + j].shifted(2);
    out[n + j] = v[j];
  }
  return out;
}

// Coordinates w.r.t. {e_j, pi e_j} given the lattice index i of Lambda_i
// (f_j = -pi^{-1} e_j for j <= i, e_j for j > i).
Vec to_e_basis(int n, int i, const Vec& v) {
  Vec out(2 * n);
  for (int j = 0; j < n; ++j) {
    if (j < i) {
      out[j] = UPoly() - v[n + j];          // pi f_j = -e_j
      out[n + j] = (UPoly() - v[j]).shifted(-2);  // f_j = -u^{-2} pi e_j
    } else {
      out[j] = v[j];
      out[n + j] = v[n + j];
    }
  }
  return out;
}

// <v, w> for the alternating form with <pi e_i, e_j> = delta_{j, n+1-i},
// <e_i, pi e_j> = -delta_{i, n+1-j}, and zero on e-e and pi e-pi e pairs.
UPoly pairing(int n, const Vec& v, const Vec& w) {
  UPoly acc;
  for (int i = 0; i < n; ++i) {
    acc = acc + v[n + i] * w[n - 1 - i];
    acc = acc - v[i] * w[n + (n - 1 - i)];
  }
  return acc;
}

struct Window {
  int n, lo, hi;
  int index(int t, int coord) const { return (t - lo) * n + coord; }
};

using SparseVec = std::map<int, Rat>;

// Echelonized basis keyed by pivot (smallest nonzero index).
struct Echelon {
  std::map<int, SparseVec> rows;

  // Reduce v against the basis; if a nonzero remainder survives, insert it
  // and return true.
  bool insert(SparseVec v) {
    while (!v.empty()) {
      int p = v.begin()->first;
      auto it = rows.find(p);
      if (it == rows.end()) {
        Rat lead = v.begin()->second;
        for (auto& [k, c] : v) c /= lead;
        rows.emplace(p, std::move(v));
        return true;
      }
      Rat f = v.begin()->second;
      for (const auto& [k, c] : it->second) {
        auto [jt, fresh] = v.try_emplace(k, 0);
        jt->second -= f * c;
        if (jt->second == 0) v.erase(jt);
      }
    }
    return false;
  }
  int dim() const { return (int)rows.size(); }
};

// Image of the k[u]-lattice in u^{lo} M / u^{hi} M.
Echelon window_image(const std::vector<Vec>& gens, const Window& w) {
  Echelon ech;
  int v0 = 0;
  bool any = false;
  for (const auto& g : gens)
    for (const auto& c : g)
      if (!c.is_zero()) {
        v0 = any ? std::min(v0, c.min_exp()) : c.min_exp();
        any = true;
      }
  if (!any) return ech;
  if (v0 < w.lo) throw std::runtime_error("lattice below the precision window; increase precision");
  for (const auto& g : gens)
    for (int t = 0; t < w.hi - v0; ++t) {
      SparseVec v;
      for (int coord = 0; coord < w.n; ++coord)
        for (const auto& [e, c] : g[coord].coeffs())
          if (e + t < w.hi && e + t >= w.lo) v[w.index(e + t, coord)] = c;
      ech.insert(std::move(v));
    }
  return ech;
}

int union_rank(const Echelon& a, const Echelon& b) {
  Echelon u = a;
  for (const auto& [p, v] : b.rows) u.insert(v);
  return u.dim();
}

std::vector<Vec> scaled_lattice(const std::vector<Vec>& gens, int k) {
  std::vector<Vec> out;
  for (const auto& g : gens) {
    Vec v;
    for (const auto& c : g) v.push_back(c.shifted(k));
    out.push_back(std::move(v));
  }
  return out;
}

// Decreasing rescaled chain: c_0 = L_0, c_i = u L_{n-i} (1 <= i <= n),
// extended by c_{i+n} = u c_i.
std::vector<Vec> chain_member(const LatticeChain& ch, int i) {
  int n = ch.n;
  int i0 = ((i % n) + n) % n;
  int q = (i - i0) / n;
  if (i0 == 0) return scaled_lattice(ch.lattices[0], q);
  return scaled_lattice(ch.lattices[n - i0], q + 1);
}

void check_contains_uhi(const std::vector<Vec>& gens, int n, int hi) {
  for (int k = 0; k < n; ++k) {
    Vec v(n);
    v[k] = UPoly::monomial(1, hi);
    if (!spin::module_contains(gens, v))
      throw std::runtime_error("lattice does not contain u^N M; increase precision");
  }
}

}  // namespace

LiftedPoint lift_point(const std::vector<int>& S, int r, int s, int lattice_index) {
  int n = r + s;
  if (r < 0 || s < 0 || s > r) throw std::invalid_argument("signature requires 0 <= s <= r");
  if ((int)S.size() != s) throw std::invalid_argument("S must have s elements");
  if (lattice_index < 0 || lattice_index > n) throw std::invalid_argument("lattice index out of range");
  std::set<int> Sset(S.begin(), S.end());
  if ((int)Sset.size() != s) throw std::invalid_argument("S has repeated elements");
  for (int a : S)
    if (a < 1 || a > n) throw std::invalid_argument("S must be a subset of {1..n}");
  std::vector<int> Sstar = reflected_set(n, S);
  for (int a : Sstar)
    if (Sset.count(a)) throw std::invalid_argument("S must be disjoint from its reflection");

  LiftedPoint out;
  out.n = n;
  out.r = r;
  out.s = s;
  out.lattice_index = lattice_index;
  out.S = S;
  std::sort(out.S.begin(), out.S.end());

  std::set<int> SstarSet(Sstar.begin(), Sstar.end());
  std::vector<int> rest;  // R \ S, ascending
  for (int a = 1; a <= n; ++a)
    if (!SstarSet.count(a) && !Sset.count(a)) rest.push_back(a);

  // Generators: f_j (j in S*), pi f_j (j in S*), pitilde f_j (j in R \ S)
  // with pitilde v = pi(v) - u v.
  for (int j : Sstar) {
    Vec g(2 * n);
    g[j - 1] = UPoly(1);
    out.gens.push_back(std::move(g));
  }
  for (int j : Sstar) {
    Vec g(2 * n);
    g[n + j - 1] = UPoly(1);
    out.gens.push_back(std::move(g));
  }
  for (int j : rest) {
    Vec g(2 * n);
    g[n + j - 1] = UPoly(1);
    g[j - 1] = UPoly::monomial(-1, 1);
    out.gens.push_back(std::move(g));
  }

  out.rank_n = (int)spin::echelon_module(out.gens).size() == n;
  out.pi_stable = true;
  for (const auto& g : out.gens)
    if (!spin::module_contains(out.gens, apply_pi(n, g))) out.pi_stable = false;

  out.isotropic = true;
  std::vector<Vec> egens;
  for (const auto& g : out.gens) egens.push_back(to_e_basis(n, lattice_index, g));
  for (size_t i = 0; i < egens.size(); ++i)
    for (size_t j = i; j < egens.size(); ++j)
      if (!pairing(n, egens[i], egens[j]).is_zero()) out.isotropic = false;

  // pi acts on the generators by the block matrix C: f_j <-> pi f_j pairs
  // contribute companion blocks of T^2 - u^2; each pitilde f_j is scaled
  // by -u.  Verify char_C(T) = (T - u)^s (T + u)^r coefficientwise.
  detail::UMat C(n, std::vector<UPoly>(n));
  for (int k = 0; k < s; ++k) {
    C[s + k][k] = UPoly(1);
    C[k][s + k] = UPoly::monomial(1, 2);
  }
  for (int k = 2 * s; k < n; ++k) C[k][k] = UPoly::monomial(-1, 1);
  out.charpoly_ok = true;
  for (int k = 1; k <= n; ++k) {
    UPoly ek = detail::elementary_symmetric_u(C, k);
    if (k % 2 == 1) ek = UPoly() - ek;
    UPoly target = UPoly::monomial(detail::char_target_coeff(r, s, k), k);
    if (!(ek == target)) out.charpoly_ok = false;
  }
  return out;
}

LatticeChain standard_chain(int n) {
  LatticeChain ch;
  ch.n = n;
  for (int j = 0; j < n; ++j) {
    std::vector<Vec> gens;
    for (int a = 0; a < n; ++a) {
      Vec v(n);
      v[a] = a < j ? UPoly::monomial(1, -1) : UPoly(1);
      gens.push_back(std::move(v));
    }
    ch.lattices.push_back(std::move(gens));
  }
  return ch;
}

LatticeChain lifted_chain(const std::vector<int>& S, int r, int s) {
  int n = r + s;
  // Validate S through the lifting itself.
  lift_point(S, r, s, 0);
  std::set<int> Sset(S.begin(), S.end());
  std::set<int> SstarSet;
  for (int a : S) SstarSet.insert(n + 1 - a);
  LatticeChain ch;
  ch.n = n;
  for (int j = 0; j < n; ++j) {
    std::vector<Vec> gens;
    for (int a = 1; a <= n; ++a) {
      int k = SstarSet.count(a) ? 0 : (Sset.count(a) ? 2 : 1);
      Vec v(n);
      v[a - 1] = a <= j ? UPoly::monomial(-1, k - 1) : UPoly::monomial(1, k);
      gens.push_back(std::move(v));
    }
    ch.lattices.push_back(std::move(gens));
  }
  return ch;
}

weyl::Elem relative_position(const LatticeChain& a, const LatticeChain& b, int precision) {
  int n = a.n;
  if (n <= 0 || b.n != n || (int)a.lattices.size() != n || (int)b.lattices.size() != n)
    throw std::invalid_argument("chains must be complete and of equal rank");
  int N = precision > 0 ? precision : 2 * n + 2;
  Window w{n, -N, N};

  std::vector<Echelon> U;  // c_0 .. c_n
  for (int i = 0; i <= n; ++i) {
    auto gens = chain_member(a, i);
    check_contains_uhi(gens, n, w.hi);
    U.push_back(window_image(gens, w));
  }
  std::vector<Echelon> W;  // d_{-N} .. d_N
  for (int j = -N; j <= N; ++j) {
    auto gens = chain_member(b, j);
    check_contains_uhi(gens, n, w.hi);
    W.push_back(window_image(gens, w));
  }
  auto X = [&](int i, int j) {
    const Echelon& ui = U[i];
    const Echelon& wj = W[j + N];
    return ui.dim() + wj.dim() - union_rank(ui, wj);
  };

  std::vector<int> wtilde(n);
  for (int i = 0; i < n; ++i) {
    int found = 0, jfound = 0;
    for (int j = -N; j < N; ++j) {
      int m = X(i, j) - X(i + 1, j) - X(i, j + 1) + X(i + 1, j + 1);
      if (m == 0) continue;
      if (m != 1) throw std::runtime_error("invalid chain increments; increase precision");
      ++found;
      jfound = j;
    }
    if (found != 1) throw std::runtime_error("chain position not resolved; increase precision");
    wtilde[i] = jfound;
  }
  std::set<int> residues;
  for (int i = 0; i < n; ++i) residues.insert(((wtilde[i] % n) + n) % n);
  if ((int)residues.size() != n) throw std::runtime_error("relative position is not a permutation");

  // Slot i corresponds to the basis line n - i (i = 0 meaning line n);
  // extract the GL translation exponent and line permutation.
  std::vector<int> nu(n + 1, 0);       // 1-based line -> u-exponent
  std::vector<int> sigma(n + 1, 0);    // 1-based line permutation (dst -> src)
  for (int i = 0; i < n; ++i) {
    int j = wtilde[i];
    int j0 = ((j % n) + n) % n;
    int t = (j - j0) / n;
    int line_src = n - i;      // i = 0 -> line n
    int line_dst = n - j0;
    if (line_src == 0) line_src = n;
    if (line_dst == 0) line_dst = n;
    nu[line_dst] = -t;
    sigma[line_dst] = line_src;
  }
  for (int l = 1; l <= n; ++l)
    if (sigma[l] + sigma[n + 1 - l] != n + 1)
      throw std::runtime_error("relative position is not unitary-symmetric");

  int m = n / 2;
  weyl::Elem e;
  e.t.resize(m);
  e.w.perm.resize(m);
  e.w.signs.resize(m);
  for (int k = 1; k <= m; ++k) {
    int diff = nu[k] - nu[n + 1 - k];
    if (diff % 2 != 0) throw std::runtime_error("relative position has a non-integral translation part");
    e.t[k - 1] = diff / 2;
    int lp = sigma[k];
    if (lp <= m) {
      e.w.perm[k - 1] = lp - 1;
      e.w.signs[k - 1] = 1;
    } else if (lp >= n + 1 - m) {
      e.w.perm[k - 1] = n - lp;
      e.w.signs[k - 1] = -1;
    } else {
      throw std::runtime_error("relative position maps a coordinate line to the fixed line");
    }
  }
  return e;
}

weyl::Elem predicted_position(int n, const std::vector<int>& S) {
  int m = n / 2;
  std::set<int> Sset(S.begin(), S.end());
  std::vector<int> v(m, 0);
  for (int i = 1; i <= m; ++i) {
    if (Sset.count(i)) v[i - 1] = 1;
    else if (Sset.count(n + 1 - i)) v[i - 1] = -1;
  }
  return weyl::Group(n).translation(v);
}

}  // namespace lm::charts
