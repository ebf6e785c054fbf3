#include "lm/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lm::weyl {

namespace {

long long floor_rat(const Rat& r) {
  Int num = numerator(r), den = denominator(r);  // den > 0
  Int q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return static_cast<long long>(q);
}

}  // namespace

AffineRootShifts affine_root_set(int l_beta, bool half_beta_is_root) {
  if (l_beta <= 0) throw std::invalid_argument("l must be positive");
  Rat period = Rat(1, l_beta);
  Rat shift = half_beta_is_root ? Rat(1, 2 * l_beta) : Rat(0);
  return {shift, period};
}

AffineData build_affine_data(int n) {
  if (n < 3) throw std::invalid_argument("n >= 3 required");
  AffineData d;
  d.m = n / 2;
  bool even = (n % 2 == 0);
  d.sigma_type = even ? 'B' : 'C';
  d.qvee_even_sum = even;
  d.omega_order = even ? 2 : 1;
  int m = d.m;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> a(m, 0), b(m, 0);
      a[i] = 1; a[j] = -1;
      b[i] = 1; b[j] = 1;
      d.pos_coroots.push_back(a);
      d.pos_coroots.push_back(b);
    }
  }
  for (int i = 0; i < m; ++i) {
    std::vector<int> c(m, 0);
    c[i] = even ? 2 : 1;  // B_m short root e_i has coroot 2e_i; C_m long root 2e_i has coroot e_i
    d.pos_coroots.push_back(c);
  }
  return d;
}

Coweight coweight_image(int n, int r, int s) {
  if (r + s != n || s < 0 || r < s) throw std::invalid_argument("need r + s = n, 0 <= s <= r");
  int m = n / 2;
  Coweight c;
  c.e.assign(m, 0);
  for (int i = 0; i < s; ++i) c.e[i] = 1;
  return c;
}

std::vector<int> parahoric_classify(int n, std::vector<int> raw) {
  if (raw.empty()) throw std::invalid_argument("empty index set");
  int m = n / 2;
  bool even = (n % 2 == 0);
  std::set<int> J(raw.begin(), raw.end());
  for (int j : J) {
    bool ok = even ? ((j >= 0 && j <= m - 2) || j == m || j == MPRIME)
                   : (j >= 0 && j <= m);
    if (!ok) throw std::invalid_argument("invalid node label");
  }
  if (even) {
    bool has_m = J.count(m), has_mp = J.count(MPRIME);
    if (has_m && has_mp) {
      J.erase(MPRIME);
      J.insert(m - 1);
    } else if (has_mp) {
      // conjugate by tau, which swaps m and m' and fixes the chain nodes
      J.erase(MPRIME);
      J.insert(m);
    }
  }
  return std::vector<int>(J.begin(), J.end());
}

std::pair<long long, int> kottwitz_even(long long val_c, const std::vector<long long>& val_a) {
  long long s = 0;
  for (long long v : val_a) s += v;
  return {val_c, static_cast<int>(((s % 2) + 2) % 2)};
}

long long coherence_rhs(int n, int s, int k) {
  if (s < 0 || s > n || k < 0) throw std::invalid_argument("bad coherence arguments");
  Int num = 1, den = 1;
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= n - s; ++j) {
      num *= 2 * k + i + j - 1;
      den *= i + j - 1;
    }
  Int q = num / den;
  if (q * den != num) throw std::logic_error("coherence product not integral");
  if (q > std::numeric_limits<long long>::max()) throw std::overflow_error("coherence value overflow");
  return static_cast<long long>(q);
}

Group::Group(int n) : n_(n), m_(n / 2), even_(n % 2 == 0) {
  if (n < 3) throw std::invalid_argument("n >= 3 required");
  int m = m_;
  // Hyperplane families in doubled apartment coordinates y = 2x.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> a(m, 0), b(m, 0);
      a[i] = 1; a[j] = -1;
      b[i] = 1; b[j] = 1;
      families_.push_back({a, 0});
      families_.push_back({b, 0});
    }
  for (int i = 0; i < m; ++i) {
    std::vector<int> c(m, 0);
    c[i] = 1;
    families_.push_back({c, even_ ? 0 : 2});
  }

  // Generic interior point of the fundamental alcove.
  for (int i = 0; i < m; ++i) p0_.push_back(Rat(m - i, 4 * (m + 1)));

  FiniteWeyl id;
  for (int i = 0; i < m; ++i) {
    id.perm.push_back(i);
    id.signs.push_back(1);
  }
  auto swap_adj = [&](int i) {  // swap coords i, i+1 (0-based)
    FiniteWeyl w = id;
    w.perm[i] = i + 1;
    w.perm[i + 1] = i;
    return w;
  };
  auto flip_last = [&]() {
    FiniteWeyl w = id;
    w.signs[m - 1] = -1;
    return w;
  };

  simples_.resize(m + 1);
  if (even_) {
    // walls: [a: y1+y2=1, b_1: y1=y2, ..., b_{m-1}: y_{m-1}=y_m, c: y_m=0]
    FiniteWeyl wa = id;
    wa.perm[0] = 1; wa.perm[1] = 0;
    wa.signs[0] = wa.signs[1] = -1;
    std::vector<int> ta(m, 0);
    ta[0] = ta[1] = 1;
    simples_[0] = Elem{ta, wa};
    for (int i = 1; i <= m - 1; ++i) simples_[i] = Elem{std::vector<int>(m, 0), swap_adj(i - 1)};
    simples_[m] = Elem{std::vector<int>(m, 0), flip_last()};
    FiniteWeyl ws = id;
    ws.signs[0] = -1;
    std::vector<int> ts(m, 0);
    ts[0] = 1;
    omega_gen_ = Elem{ts, ws};  // y -> (1 - y1, y2, ...), the order-2 rotation
  } else {
    // walls: [w_0: y1=1/2, w_1: y1=y2, ..., w_{m-1}: y_{m-1}=y_m, w_m: y_m=0]
    FiniteWeyl w0 = id;
    w0.signs[0] = -1;
    std::vector<int> t0(m, 0);
    t0[0] = 1;
    simples_[0] = Elem{t0, w0};
    for (int i = 1; i <= m - 1; ++i) simples_[i] = Elem{std::vector<int>(m, 0), swap_adj(i - 1)};
    simples_[m] = Elem{std::vector<int>(m, 0), flip_last()};
    omega_gen_ = identity();
  }
}

Elem Group::identity() const {
  FiniteWeyl id;
  for (int i = 0; i < m_; ++i) {
    id.perm.push_back(i);
    id.signs.push_back(1);
  }
  return Elem{std::vector<int>(m_, 0), id};
}

Elem Group::translation(const std::vector<int>& t) const {
  if ((int)t.size() != m_) throw std::invalid_argument("translation rank mismatch");
  Elem e = identity();
  e.t = t;
  return e;
}

Elem Group::omega_rep(int omega) const {
  if (omega == 0) return identity();
  if (even_ && omega == 1) return omega_gen_;
  throw std::invalid_argument("invalid Omega component");
}

Elem Group::mul(const Elem& a, const Elem& b) const {
  Elem r = identity();
  for (int i = 0; i < m_; ++i) {
    r.w.perm[i] = a.w.perm[b.w.perm[i]];
    r.w.signs[i] = b.w.signs[i] * a.w.signs[b.w.perm[i]];
  }
  // t = a.t + a.w(b.t)
  std::vector<int> wt(m_, 0);
  for (int i = 0; i < m_; ++i) wt[a.w.perm[i]] = a.w.signs[i] * b.t[i];
  for (int i = 0; i < m_; ++i) r.t[i] = a.t[i] + wt[i];
  return r;
}

Elem Group::inv(const Elem& a) const {
  Elem r = identity();
  for (int i = 0; i < m_; ++i) {
    r.w.perm[a.w.perm[i]] = i;
    r.w.signs[a.w.perm[i]] = a.w.signs[i];
  }
  for (int i = 0; i < m_; ++i) r.t[r.w.perm[i]] = -r.w.signs[i] * a.t[i];
  // r.t = -r.w(a.t)
  return r;
}

int Group::omega_of(const Elem& a) const {
  if (!even_) return 0;
  int s = 0;
  for (int v : a.t) s += v;
  return ((s % 2) + 2) % 2;
}

std::vector<Rat> Group::act(const Elem& a, const std::vector<Rat>& y) const {
  std::vector<Rat> r(m_);
  for (int i = 0; i < m_; ++i) r[a.w.perm[i]] = Rat(a.w.signs[i]) * y[i];
  for (int i = 0; i < m_; ++i) r[i] += a.t[i];
  return r;
}

int Group::length(const Elem& a) const {
  std::vector<Rat> q = act(a, p0_);
  long long total = 0;
  for (const auto& fam : families_) {
    Rat f0(0), f1(0);
    for (int i = 0; i < m_; ++i) {
      f0 += Rat(fam.beta[i]) * p0_[i];
      f1 += Rat(fam.beta[i]) * q[i];
    }
    // offsets are k/2 with k in Z (parity 2) or k even (parity 0) or k odd (parity 1)
    Rat lo2 = 2 * std::min(f0, f1), hi2 = 2 * std::max(f0, f1);
    long long a0 = floor_rat(lo2), b0 = floor_rat(hi2);  // k ranges over (a0, b0]
    if (fam.parity == 2) {
      total += b0 - a0;
    } else {
      long long lok = a0 + 1, hik = b0;
      if (lok <= hik) {
        long long cnt = (hik - lok) / 2 + 1;
        if (((lok % 2 + 2) % 2) != fam.parity) {
          lok += 1;
          cnt = (lok <= hik) ? (hik - lok) / 2 + 1 : 0;
        }
        total += cnt;
      }
    }
  }
  return static_cast<int>(total);
}

std::pair<std::vector<int>, int> Group::reduced_word(const Elem& a) const {
  std::vector<int> word;
  Elem w = a;
  int len = length(w);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i <= m_; ++i) {
      Elem sw = mul(simples_[i], w);
      int l2 = length(sw);
      if (l2 < len) {
        word.push_back(i);
        w = sw;
        len = l2;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no descent found for positive-length element");
  }
  int om = omega_of(w);
  if (!(w == omega_rep(om))) throw std::logic_error("length-zero part is not an Omega representative");
  return {word, om};
}

bool Group::bruhat_leq(const Elem& u, const Elem& w) const {
  int ou = omega_of(u), ow = omega_of(w);
  if (ou != ow) return false;
  Elem oinv = inv(omega_rep(ou));
  Elem ua = mul(u, oinv), wa = mul(w, oinv);
  auto [word, om] = reduced_word(wa);
  (void)om;
  // recursive lifting along the reduced word of w
  Elem cur = ua;
  int curlen = length(cur);
  size_t idx = 0;
  std::function<bool(Elem, int, size_t)> rec = [&](Elem x, int lx, size_t k) -> bool {
    if (lx == 0) return true;
    if (k == word.size()) return false;
    Elem sx = mul(simples_[word[k]], x);
    int lsx = length(sx);
    if (lsx < lx) return rec(sx, lsx, k + 1);
    return rec(x, lx, k + 1);
  };
  return rec(cur, curlen, idx);
}

std::vector<Elem> Group::extreme_elements(int r, int s) const {
  Coweight lam = coweight_image(n_, r, s);
  std::set<std::vector<int>> orbit;
  // W_0 is the full hyperoctahedral group in both types: all placements and signs
  std::vector<int> sel(m_, 0);
  for (int i = 0; i < s; ++i) sel[i] = 1;
  std::sort(sel.begin(), sel.end());
  do {
    std::vector<int> idxs;
    for (int i = 0; i < m_; ++i)
      if (sel[i]) idxs.push_back(i);
    for (int mask = 0; mask < (1 << s); ++mask) {
      std::vector<int> v(m_, 0);
      for (int k = 0; k < s; ++k) v[idxs[k]] = (mask >> k & 1) ? -1 : 1;
      orbit.insert(v);
    }
  } while (std::next_permutation(sel.begin(), sel.end()));
  std::vector<Elem> out;
  for (auto& v : orbit) out.push_back(translation(v));
  return out;
}

std::vector<Elem> Group::admissible_set(int r, int s) const {
  std::set<Elem> seen;
  std::deque<Elem> queue;
  for (auto& e : extreme_elements(r, s)) {
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    Elem w = queue.front();
    queue.pop_front();
    auto [word, om] = reduced_word(w);
    for (size_t drop = 0; drop < word.size(); ++drop) {
      Elem p = omega_rep(om);
      for (size_t k = word.size(); k-- > 0;) {
        if (k == drop) continue;
        p = mul(simples_[word[k]], p);
      }
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return std::vector<Elem>(seen.begin(), seen.end());
}

std::vector<Coweight> Group::adm0(int r, int s) const {
  coweight_image(n_, r, s);  // validate
  std::vector<Coweight> out;
  int step = even_ ? 2 : 1;
  for (int k = s; k >= 0; k -= step) {
    Coweight c;
    c.e.assign(m_, 0);
    for (int i = 0; i < k; ++i) c.e[i] = 1;
    out.push_back(c);
  }
  return out;
}

int Group::wall_of_node(int node) const {
  if (!even_) {
    if (node < 0 || node > m_) throw std::invalid_argument("invalid node");
    return node;
  }
  if (node == m_) return 0;       // wall y1 + y2 = 1
  if (node == MPRIME) return 1;   // wall y1 = y2
  if (node == 0) return m_;       // wall y_m = 0
  if (node >= 1 && node <= m_ - 2) return m_ - node;
  throw std::invalid_argument("invalid node");
}

std::vector<int> Group::parahoric_wall_complement(const std::vector<int>& I) const {
  if (I.empty()) throw std::invalid_argument("empty index set");
  std::set<int> nodes(I.begin(), I.end());
  if (even_ && nodes.count(m_ - 1)) {
    // normalized m-1 stands for the raw node m'
    if (!nodes.count(m_)) throw std::invalid_argument("index m-1 requires m (even case)");
    nodes.erase(m_ - 1);
    nodes.insert(MPRIME);
  }
  std::set<int> excluded;
  for (int nd : nodes) excluded.insert(wall_of_node(nd));
  std::vector<int> gens;
  for (int i = 0; i <= m_; ++i)
    if (!excluded.count(i)) gens.push_back(i);
  return gens;
}

Elem Group::project_double_coset(const Elem& w, const std::vector<int>& I) const {
  std::vector<int> gens = parahoric_wall_complement(I);
  Elem cur = w;
  int len = length(cur);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int g : gens) {
      Elem lw = mul(simples_[g], cur);
      if (length(lw) < len) {
        cur = lw;
        len = length(cur);
        changed = true;
      }
      Elem rw = mul(cur, simples_[g]);
      if (length(rw) < len) {
        cur = rw;
        len = length(cur);
        changed = true;
      }
    }
  }
  return cur;
}

std::vector<Elem> Group::parabolic_elements(const std::vector<int>& gens) const {
  std::set<Elem> seen{identity()};
  std::deque<Elem> queue{identity()};
  while (!queue.empty()) {
    Elem w = queue.front();
    queue.pop_front();
    for (int g : gens) {
      Elem nw = mul(w, simples_[g]);
      if (seen.insert(nw).second) queue.push_back(nw);
    }
  }
  return std::vector<Elem>(seen.begin(), seen.end());
}

Group::VertexwiseReport Group::vertexwise_check(int r, int s, const std::vector<int>& I) const {
  std::vector<Elem> adm = admissible_set(r, s);
  std::vector<Elem> ext = extreme_elements(r, s);
  int tau = omega_of(ext.front());
  int L = length(ext.front());

  // singleton vertex sets use raw node labels (normalized m-1 means m')
  auto raw_node = [&](int i) { return (even_ && i == m_ - 1) ? MPRIME : i; };

  std::set<Elem> DI;
  for (auto& w : adm) DI.insert(project_double_coset(w, I));
  std::map<int, std::set<Elem>> Di;
  int par_max = 0;
  for (int i : I) {
    std::set<Elem> di;
    for (auto& w : adm) di.insert(project_double_coset(w, {raw_node(i)}));
    Di[i] = std::move(di);
    int longest = 0;
    for (auto& p : parabolic_elements(parahoric_wall_complement({raw_node(i)})))
      longest = std::max(longest, length(p));
    par_max = std::max(par_max, longest);
  }
  int Lmax = L + 2 * par_max;

  // ball of the relevant Omega-coset, then one representative per W^I-coset
  std::set<Elem> ball{omega_rep(tau)};
  std::deque<Elem> queue{omega_rep(tau)};
  while (!queue.empty()) {
    Elem w = queue.front();
    queue.pop_front();
    for (int i = 0; i <= m_; ++i) {
      Elem nw = mul(w, simples_[i]);
      if (length(nw) <= Lmax && ball.insert(nw).second) queue.push_back(nw);
    }
  }
  std::set<Elem> reps;
  for (auto& w : ball) reps.insert(project_double_coset(w, I));
  for (auto& d : reps) {
    bool rhs = true;
    for (int i : I)
      if (!Di[i].count(project_double_coset(d, {raw_node(i)}))) {
        rhs = false;
        break;
      }
    bool lhs = DI.count(d) > 0;
    if (lhs && !rhs) throw std::logic_error("admissible coset failed its own vertex projections");
    if (rhs && !lhs) return {false, d};
  }
  return {true, std::nullopt};
}

std::vector<std::vector<int>> Group::all_parahoric_indices() const {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << (m_ + 1)); ++mask) {
    std::vector<int> I;
    for (int i = 0; i <= m_; ++i)
      if (mask >> i & 1) I.push_back(i);
    if (even_) {
      bool has_m1 = std::count(I.begin(), I.end(), m_ - 1);
      bool has_m = std::count(I.begin(), I.end(), m_);
      if (has_m1 && !has_m) continue;
    }
    out.push_back(I);
  }
  return out;
}

std::string Group::emit_alcove_svg(int r, int s, const std::vector<int>& I) const {
  if (m_ > 2) throw std::invalid_argument("alcove figures only for rank <= 2 (n <= 5)");
  (void)I;
  std::vector<Elem> adm = admissible_set(r, s);
  std::set<Elem> admset(adm.begin(), adm.end());
  std::vector<Elem> ext = extreme_elements(r, s);
  std::set<Elem> extset(ext.begin(), ext.end());
  int tau = omega_of(ext.front());
  int L = length(ext.front());

  // fundamental alcove vertices in doubled coordinates
  std::vector<std::vector<Rat>> base;
  if (m_ == 1) {
    base = {{Rat(0)}, {Rat(1, 2)}};
  } else if (even_) {
    base = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}};
  } else {
    base = {{Rat(0), Rat(0)}, {Rat(1, 2), Rat(0)}, {Rat(1, 2), Rat(1, 2)}};
  }

  // alcoves within a modest ball, for context
  std::set<Elem> ball{omega_rep(tau)};
  std::deque<Elem> queue{omega_rep(tau)};
  while (!queue.empty()) {
    Elem w = queue.front();
    queue.pop_front();
    for (int i = 0; i <= m_; ++i) {
      Elem nw = mul(w, simples_[i]);
      if (length(nw) <= L + 2 && ball.insert(nw).second) queue.push_back(nw);
    }
  }
  if (tau != 0) {
    // also show the identity component's base alcove
    ball.insert(identity());
  }

  const double S = 120.0;  // pixels per unit
  double minx = 1e9, maxx = -1e9, miny = 1e9, maxy = -1e9;
  auto to_xy = [&](const std::vector<Rat>& y) {
    double px = y[0].convert_to<double>();
    double py = (m_ == 2) ? y[1].convert_to<double>() : 0.0;
    return std::pair<double, double>(px, py);
  };
  struct Poly {
    std::vector<std::pair<double, double>> pts;
    std::string fill;
    std::string stroke;
    double sw;
  };
  std::vector<Poly> polys;
  for (auto& w : ball) {
    Poly p;
    for (auto& v : base) {
      auto q = act(w, v);
      auto [px, py] = to_xy(q);
      if (m_ == 1) {
        // draw intervals as thin rectangles
      }
      p.pts.push_back({px, py});
      minx = std::min(minx, px);
      maxx = std::max(maxx, px);
      miny = std::min(miny, py);
      maxy = std::max(maxy, py);
    }
    bool is_ext = extset.count(w), is_adm = admset.count(w), is_base = (w == identity());
    p.fill = is_ext ? "#1f6f43" : (is_adm ? "#8fd4ab" : "#f2f2f2");
    p.stroke = is_base ? "#000000" : "#888888";
    p.sw = is_base ? 3.0 : 1.0;
    polys.push_back(std::move(p));
  }
  // draw base alcove outline last
  std::stable_partition(polys.begin(), polys.end(), [](const Poly& p) { return p.sw < 2.0; });

  double H = (m_ == 1) ? 0.35 : 0.0;  // rectangle height for rank 1
  double pad = 0.3;
  double x0 = (minx - pad) * S, y0 = -(maxy + pad + H) * S;
  double wd = (maxx - minx + 2 * pad) * S, ht = (maxy - miny + 2 * pad + 2 * H) * S;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << " " << y0 << " " << wd
      << " " << ht << "\">\n";
  auto Y = [&](double py) { return -py * S; };  // flip vertical axis
  for (auto& p : polys) {
    svg << "  <polygon points=\"";
    if (m_ == 1) {
      double a = p.pts[0].first * S, b = p.pts[1].first * S;
      svg << a << "," << Y(-H) << " " << b << "," << Y(-H) << " " << b << "," << Y(H) << " " << a
          << "," << Y(H);
    } else {
      for (size_t k = 0; k < p.pts.size(); ++k) {
        if (k) svg << " ";
        svg << p.pts[k].first * S << "," << Y(p.pts[k].second);
      }
    }
    svg << "\" fill=\"" << p.fill << "\" stroke=\"" << p.stroke << "\" stroke-width=\"" << p.sw
        << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lm::weyl
