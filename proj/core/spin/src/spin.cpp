#include "lm/spin.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace lm::spin {

void UPoly::trim() {
  for (auto it = c_.begin(); it != c_.end();)
    it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

UPoly UPoly::monomial(const Rat& c, int k) {
  UPoly p;
  if (c != 0) p.c_[k] = c;
  return p;
}

int UPoly::min_exp() const {
  if (c_.empty()) throw std::logic_error("valuation of zero");
  return c_.begin()->first;
}

int UPoly::max_exp() const {
  if (c_.empty()) throw std::logic_error("degree of zero");
  return c_.rbegin()->first;
}

Rat UPoly::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Rat(0) : it->second;
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r = *this;
  for (auto& [k, c] : o.c_) r.c_[k] += c;
  r.trim();
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
  UPoly r = *this;
  for (auto& [k, c] : o.c_) r.c_[k] -= c;
  r.trim();
  return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
  UPoly r;
  for (auto& [k1, c1] : c_)
    for (auto& [k2, c2] : o.c_) r.c_[k1 + k2] += c1 * c2;
  r.trim();
  return r;
}

UPoly UPoly::shifted(int k) const {
  UPoly r;
  for (auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& d, UPoly& q, UPoly& r) {
  if (d.is_zero()) throw std::invalid_argument("division by zero");
  q = UPoly();
  r = a;
  int dd = d.max_exp();
  Rat dc = d.coeff(dd);
  while (!r.is_zero() && r.max_exp() >= dd) {
    int k = r.max_exp() - dd;
    Rat c = r.coeff(r.max_exp()) / dc;
    UPoly t = UPoly::monomial(c, k);
    q = q + t;
    r = r - t * d;
  }
}

std::string UPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += it->second.str();
    if (it->first != 0) s += "*u^" + std::to_string(it->first);
  }
  return s;
}

int sigma_sign(int n, const std::vector<int>& S) {
  if ((int)S.size() != n) throw std::invalid_argument("subset size must be n");
  std::vector<int> word;
  std::vector<int> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> reflected(2 * n + 1, false);
  for (int s : sorted) {
    if (s < 1 || s > 2 * n) throw std::invalid_argument("index out of range");
    word.push_back(2 * n + 1 - s);
    reflected[2 * n + 1 - s] = true;
  }
  for (int i = 1; i <= 2 * n; ++i)
    if (!reflected[i]) word.push_back(i);
  int inv = 0;
  for (size_t i = 0; i < word.size(); ++i)
    for (size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

std::vector<int> reflect_complement(int n, const std::vector<int>& S) {
  std::vector<bool> reflected(2 * n + 1, false);
  for (int s : S) reflected[2 * n + 1 - s] = true;
  std::vector<int> out;
  for (int i = 1; i <= 2 * n; ++i)
    if (!reflected[i]) out.push_back(i);
  return out;
}

namespace {

int rank_of(std::vector<std::vector<Rat>> M) {
  int rows = (int)M.size();
  if (rows == 0) return 0;
  int cols = (int)M[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (M[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[r], M[piv]);
    for (int i = r + 1; i < rows; ++i) {
      if (M[i][c] == 0) continue;
      Rat f = M[i][c] / M[r][c];
      for (int j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

Rat discriminant(const std::vector<std::vector<Rat>>& gram) {
  int d = (int)gram.size();
  if (d == 0 || d % 2 != 0) throw std::invalid_argument("even rank required");
  for (auto& row : gram)
    if ((int)row.size() != d) throw std::invalid_argument("square matrix required");
  int n = d / 2;
  std::vector<std::vector<Rat>> M = gram;
  Rat det = 1;
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int i = c; i < d; ++i)
      if (M[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      std::swap(M[c], M[piv]);
      det = -det;
    }
    det *= M[c][c];
    for (int i = c + 1; i < d; ++i) {
      if (M[i][c] == 0) continue;
      Rat f = M[i][c] / M[c][c];
      for (int j = c; j < d; ++j) M[i][j] -= f * M[c][j];
    }
  }
  return (n % 2 == 0) ? det : -det;
}

DiscriminantData discriminant_data(const std::vector<std::vector<Rat>>& gram) {
  Rat D = discriminant(gram);
  if (D == 0) throw std::invalid_argument("singular gram matrix");
  bool split = false;
  if (D > 0) {
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(D), den = denominator(D);
    cpp_int sn = sqrt(num), sd = sqrt(den);
    split = (sn * sn == num) && (sd * sd == den);
  }
  return {D, split};
}

namespace {

// eta_S: the sign with e_S ^ e_{S^c} = eta_S * e_1 ^ ... ^ e_{2n}, both
// factors in increasing order.
int eta_sign(int n, const std::vector<int>& S) {
  std::vector<int> word = S;
  std::vector<bool> in(2 * n + 1, false);
  for (int s : S) in[s] = true;
  for (int i = 1; i <= 2 * n; ++i)
    if (!in[i]) word.push_back(i);
  int inv = 0;
  for (size_t i = 0; i < word.size(); ++i)
    for (size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

std::vector<int> plain_complement(int n, const std::vector<int>& S) {
  std::vector<bool> in(2 * n + 1, false);
  for (int s : S) in[s] = true;
  std::vector<int> out;
  for (int i = 1; i <= 2 * n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

}  // namespace

std::vector<std::vector<FieldElem>> ae_matrix(const std::vector<FieldElem>& diag, int n,
                                              const FieldElem& lambda) {
  if ((int)diag.size() != 2 * n) throw std::invalid_argument("diagonal must have length 2n");
  for (auto& d : diag)
    if (d.is_zero()) throw std::invalid_argument("singular gram matrix");
  SpinSpace sp(n);
  Field f = diag[0].field();
  int N = sp.dim();
  std::vector<std::vector<FieldElem>> M(N, std::vector<FieldElem>(N, FieldElem(f, 0)));
  for (int j = 0; j < N; ++j) {
    const auto& S = sp.subsets()[j];
    FieldElem DS(f, 1);
    for (int s : S) DS = DS * diag[s - 1];
    int i = sp.index_of(plain_complement(n, S));
    M[i][j] = lambda * DS * FieldElem(f, eta_sign(n, S));
  }
  return M;
}

FieldElem ae_square_check(const std::vector<FieldElem>& diag, int n) {
  auto M = ae_matrix(diag, n, FieldElem(diag[0].field(), 1));
  int N = (int)M.size();
  Field f = diag[0].field();
  FieldElem scalar(f, 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      FieldElem s(f, 0);
      for (int k = 0; k < N; ++k) s = s + M[i][k] * M[k][j];
      if (i == j) {
        if (j == 0)
          scalar = s;
        else if (!(s == scalar))
          throw std::logic_error("a_e^2 is not scalar");
      } else if (!s.is_zero()) {
        throw std::logic_error("a_e^2 is not scalar");
      }
    }
  return scalar;
}

bool ae_square_check(int n, const Rat& D) {
  SpinSpace sp(n);
  for (auto& S : sp.subsets()) {
    auto Sp = reflect_complement(n, S);
    if (reflect_complement(n, Sp) != S) return false;
    if (Rat(sigma_sign(n, S) * sigma_sign(n, Sp)) != D) return false;
  }
  return true;
}

int subspace_intersection_dim(const std::vector<std::vector<Rat>>& W,
                              const std::vector<std::vector<Rat>>& Wp) {
  std::vector<std::vector<Rat>> both = W;
  both.insert(both.end(), Wp.begin(), Wp.end());
  return rank_of(W) + rank_of(Wp) - rank_of(both);
}

bool is_isotropic(const std::vector<std::vector<Rat>>& gram,
                  const std::vector<std::vector<Rat>>& W) {
  int d = (int)gram.size();
  for (auto& x : W)
    for (auto& y : W) {
      Rat s = 0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s += x[i] * gram[i][j] * y[j];
      if (s != 0) return false;
    }
  return true;
}

bool same_so_orbit(int n, int intersection_dim) {
  return (intersection_dim - n) % 2 == 0;
}

Parity isotropic_parity(const std::vector<std::vector<Rat>>& gram,
                        const std::vector<std::vector<Rat>>& W,
                        const std::vector<std::vector<Rat>>& Wp) {
  int n = (int)gram.size() / 2;
  if (rank_of(W) != n || rank_of(Wp) != n)
    throw std::invalid_argument("subspaces must have dimension n");
  if (!is_isotropic(gram, W) || !is_isotropic(gram, Wp))
    throw std::invalid_argument("subspaces must be totally isotropic");
  return same_so_orbit(n, subspace_intersection_dim(W, Wp)) ? Parity::Same : Parity::Opposite;
}

SpinSpace::SpinSpace(int n) : n_(n) {
  if (n < 1 || n > 6) throw std::invalid_argument("supported range 1 <= n <= 6");
  std::vector<int> sel(2 * n, 0);
  for (int i = 0; i < n; ++i) sel[i] = 1;
  std::sort(sel.begin(), sel.end());
  do {
    std::vector<int> S;
    for (int i = 0; i < 2 * n; ++i)
      if (sel[i]) S.push_back(i + 1);
    subsets_.push_back(S);
  } while (std::next_permutation(sel.begin(), sel.end()));
  std::sort(subsets_.begin(), subsets_.end());
  for (int i = 0; i < (int)subsets_.size(); ++i) index_[subsets_[i]] = i;
  std::vector<int> S0;
  for (int i = 1; i <= n; ++i) S0.push_back(i);
  plus_sign_ = sigma_sign(n, S0);
}

int SpinSpace::index_of(const std::vector<int>& S) const {
  std::vector<int> s = S;
  std::sort(s.begin(), s.end());
  auto it = index_.find(s);
  if (it == index_.end()) throw std::invalid_argument("not a wedge index");
  return it->second;
}

Vec SpinSpace::apply_ae(const Vec& x) const {
  if ((int)x.size() != dim()) throw std::invalid_argument("dimension mismatch");
  Vec out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    const auto& S = subsets_[i];
    int j = index_of(reflect_complement(n_, S));
    UPoly contrib = x[i] * UPoly(sigma_sign(n_, S));
    out[j] = out[j] + contrib;
  }
  return out;
}

Vec SpinSpace::wedge(const std::vector<int>& S, const Rat& c, int k) const {
  Vec v(dim());
  v[index_of(S)] = UPoly::monomial(c, k);
  return v;
}

std::vector<Vec> SpinSpace::eigen_basis(int label) const {
  int eps = (label > 0) ? plus_sign_ : -plus_sign_;
  std::vector<Vec> out;
  for (int i = 0; i < dim(); ++i) {
    const auto& S = subsets_[i];
    auto Sp = reflect_complement(n_, S);
    int g = sigma_sign(n_, S);
    if (Sp == S) {
      if (g == eps) out.push_back(wedge(S));
    } else if (S < Sp) {
      Vec v = wedge(S);
      Vec w = wedge(Sp, Rat(eps * g));
      for (int k = 0; k < dim(); ++k) v[k] = v[k] + w[k];
      out.push_back(v);
    }
  }
  return out;
}

namespace {

// Column echelon over k[u] with recorded unimodular transform.  Entries must
// be polynomials (nonnegative exponents).
void column_echelon(std::vector<Vec>& cols, std::vector<Vec>* U) {
  if (cols.empty()) return;
  int M = (int)cols[0].size();
  int N = (int)cols.size();
  int r = 0;
  for (int row = 0; row < M && r < N; ++row) {
    while (true) {
      std::vector<int> active;
      for (int j = r; j < N; ++j)
        if (!cols[j][row].is_zero()) active.push_back(j);
      if (active.empty()) break;
      int best = active[0];
      for (int j : active)
        if (cols[j][row].max_exp() < cols[best][row].max_exp()) best = j;
      std::swap(cols[best], cols[r]);
      if (U) std::swap((*U)[best], (*U)[r]);
      if (active.size() == 1) {
        ++r;
        break;
      }
      for (int j = r + 1; j < N; ++j) {
        if (cols[j][row].is_zero()) continue;
        UPoly q, rem;
        UPoly::divmod(cols[j][row], cols[r][row], q, rem);
        if (q.is_zero()) continue;
        for (int i = 0; i < M; ++i) cols[j][i] = cols[j][i] - q * cols[r][i];
        if (U)
          for (int i = 0; i < (int)(*U)[j].size(); ++i)
            (*U)[j][i] = (*U)[j][i] - q * (*U)[r][i];
      }
    }
  }
}

int clearing_shift(const std::vector<Vec>& vs) {
  int k = 0;
  for (auto& v : vs)
    for (auto& e : v)
      if (!e.is_zero()) k = std::min(k, e.min_exp());
  return -k;
}

std::vector<Vec> shifted_all(const std::vector<Vec>& vs, int k) {
  std::vector<Vec> out = vs;
  for (auto& v : out)
    for (auto& e : v) e = e.shifted(k);
  return out;
}

}  // namespace

std::vector<Vec> SpinSpace::lattice_pm_basis(const std::vector<Vec>& lattice, int label) const {
  int eps = (label > 0) ? plus_sign_ : -plus_sign_;
  int N = (int)lattice.size();
  // columns of (a_e - eps) applied to the lattice basis
  std::vector<Vec> cols;
  for (auto& L : lattice) {
    Vec c = apply_ae(L);
    for (int i = 0; i < dim(); ++i) c[i] = c[i] - UPoly(eps) * L[i];
    cols.push_back(std::move(c));
  }
  int K = clearing_shift(cols);
  cols = shifted_all(cols, K);
  std::vector<Vec> U(N, Vec(N));
  for (int j = 0; j < N; ++j) U[j][j] = UPoly(1);
  column_echelon(cols, &U);
  std::vector<Vec> out;
  for (int j = 0; j < N; ++j) {
    bool zero = true;
    for (auto& e : cols[j]) zero = zero && e.is_zero();
    if (!zero) continue;
    Vec v(dim());
    for (int t = 0; t < N; ++t)
      for (int i = 0; i < dim(); ++i) v[i] = v[i] + U[j][t] * lattice[t][i];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> echelon_module(std::vector<Vec> gens) {
  int K = clearing_shift(gens);
  gens = shifted_all(gens, K);
  column_echelon(gens, nullptr);
  std::vector<Vec> out;
  for (auto& g : gens) {
    bool zero = true;
    for (auto& e : g) zero = zero && e.is_zero();
    if (!zero) out.push_back(g);
  }
  return shifted_all(out, -K);
}

bool module_contains(const std::vector<Vec>& gens, const Vec& v) {
  std::vector<Vec> all = gens;
  all.push_back(v);
  int K = clearing_shift(all);
  std::vector<Vec> G = shifted_all(gens, K);
  column_echelon(G, nullptr);
  Vec x = shifted_all({v}, K)[0];
  int M = (int)x.size();
  for (int row = 0; row < M; ++row) {
    if (x[row].is_zero()) continue;
    const Vec* piv = nullptr;
    for (auto& g : G) {
      bool zero_above = true;
      for (int i = 0; i < row; ++i) zero_above = zero_above && g[i].is_zero();
      if (zero_above && !g[row].is_zero()) {
        piv = &g;
        break;
      }
    }
    if (!piv) return false;
    UPoly q, rem;
    UPoly::divmod(x[row], (*piv)[row], q, rem);
    if (!rem.is_zero()) return false;
    for (int i = 0; i < M; ++i) x[i] = x[i] - q * (*piv)[i];
  }
  for (auto& e : x)
    if (!e.is_zero()) return false;
  return true;
}

std::string wedge_vector_json(int n, const Vec& v) {
  SpinSpace sp(n);
  if ((int)v.size() != sp.dim()) throw std::invalid_argument("dimension mismatch");
  nlohmann::json terms = nlohmann::json::array();
  for (int i = 0; i < sp.dim(); ++i) {
    if (v[i].is_zero()) continue;
    terms.push_back({sp.subsets()[i], v[i].str()});
  }
  nlohmann::json out{{"n", n}, {"terms", terms}};
  return out.dump();
}

bool same_module(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  for (auto& v : a)
    if (!module_contains(b, v)) return false;
  for (auto& v : b)
    if (!module_contains(a, v)) return false;
  return true;
}

}  // namespace lm::spin
