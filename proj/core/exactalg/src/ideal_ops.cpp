#include <algorithm>
#include <functional>

#include "lm/ideal.hpp"

namespace lm {

namespace {

// p must lie in the principal ideal (f); returns p/f.
Polynomial divide_exact(const Polynomial& p, const Polynomial& f) {
  MonomialOrder ord = MonomialOrder::grevlex();
  Polynomial rem = (p.order() == ord) ? p : p.resorted(ord);
  Polynomial fo = (f.order() == ord) ? f : f.resorted(ord);
  Polynomial q(p.ring(), ord);
  while (!rem.is_zero()) {
    if (!fo.lt().m.divides(rem.lt().m))
      throw std::logic_error("divide_exact: not divisible");
    Term t{rem.lt().m / fo.lt().m, rem.lt().c / fo.lt().c};
    q = q + Polynomial(p.ring(), ord, {t});
    rem = rem - fo.term_mul(t);
  }
  return q;
}

// Ring with one variable prepended/appended; returns the map old-index -> new-index.
struct RingExt {
  RingPtr ring;
  std::vector<int> var_map;
};

RingExt extend_ring(const RingPtr& R, const std::string& extra, bool prepend) {
  std::vector<std::string> vars;
  std::string name = extra;
  while (R->var_index(name) >= 0) name += "_";
  if (prepend) vars.push_back(name);
  for (auto& v : R->vars) vars.push_back(v);
  if (!prepend) vars.push_back(name);
  RingExt ext;
  ext.ring = make_ring(R->field, vars);
  ext.var_map.resize(R->arity());
  for (int i = 0; i < R->arity(); ++i) ext.var_map[i] = prepend ? i + 1 : i;
  return ext;
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Polynomial& f, const GBOptions& opt) {
  if (f.is_zero()) throw std::invalid_argument("quotient by zero polynomial");
  if (!(*f.ring() == *I.ring())) throw std::invalid_argument("ring mismatch");
  // (I : f) = (1/f) * (I ∩ (f)), intersection via the t-trick
  auto ext = extend_ring(I.ring(), "t@", /*prepend=*/true);
  MonomialOrder bord = MonomialOrder::block(1);
  Polynomial t = Polynomial::variable(ext.ring, 0, bord);
  Polynomial one = Polynomial::constant(ext.ring, 1, bord);
  std::vector<Polynomial> gens;
  for (auto& g : I.gens()) gens.push_back(t * g.mapped(ext.ring, ext.var_map, bord));
  gens.push_back((one - t) * f.mapped(ext.ring, ext.var_map, bord));
  Ideal J(gens, bord);
  std::vector<Polynomial> quot;
  std::vector<int> back(ext.ring->arity(), -1);
  for (int i = 0; i < I.ring()->arity(); ++i) back[ext.var_map[i]] = i;
  for (auto& b : J.groebner(opt)) {
    bool uses_t = false;
    for (auto& tm : b.terms())
      if (tm.m.e[0] > 0) { uses_t = true; break; }
    if (uses_t) continue;
    Polynomial h = b.mapped(I.ring(), back, I.order());
    quot.push_back(divide_exact(h, f).resorted(I.order()));
  }
  if (quot.empty()) throw std::logic_error("ideal_quotient: empty intersection");
  return Ideal(std::move(quot), I.order());
}

Ideal saturate(const Ideal& I, const Polynomial& f, const GBOptions& opt) {
  Ideal cur = I;
  for (int iter = 0; iter < 64; ++iter) {
    Ideal next = ideal_quotient(cur, f, opt);
    if (next.same_ideal(cur, opt)) return cur;
    cur = std::move(next);
  }
  throw BudgetExhausted("budget exhausted: saturation did not stabilize in 64 steps");
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& elim_vars, const GBOptions& opt) {
  const Ring& R = *I.ring();
  std::vector<bool> drop(R.arity(), false);
  for (auto& v : elim_vars) {
    int idx = R.var_index(v);
    if (idx < 0) throw std::invalid_argument("eliminate: unknown variable " + v);
    drop[idx] = true;
  }
  int ndrop = static_cast<int>(std::count(drop.begin(), drop.end(), true));
  if (ndrop == R.arity()) throw std::invalid_argument("eliminate: cannot drop all variables");
  // reorder: eliminated variables first
  std::vector<std::string> vars;
  std::vector<int> var_map(R.arity());
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < R.arity(); ++i)
      if (drop[i] == (pass == 0)) {
        var_map[i] = static_cast<int>(vars.size());
        vars.push_back(R.vars[i]);
      }
  RingPtr big = make_ring(R.field, vars);
  MonomialOrder bord = MonomialOrder::block(ndrop);
  std::vector<Polynomial> gens;
  for (auto& g : I.gens()) gens.push_back(g.mapped(big, var_map, bord));
  Ideal J(gens, bord);

  std::vector<std::string> small_vars(vars.begin() + ndrop, vars.end());
  RingPtr small = make_ring(R.field, small_vars);
  std::vector<int> back(big->arity(), -1);
  for (int i = ndrop; i < big->arity(); ++i) back[i] = i - ndrop;
  std::vector<Polynomial> kept;
  for (auto& b : J.groebner(opt)) {
    bool uses = false;
    for (auto& tm : b.terms())
      for (int i = 0; i < ndrop && !uses; ++i)
        if (tm.m.e[i] > 0) uses = true;
    if (!uses) kept.push_back(b.mapped(small, back, MonomialOrder::grevlex()));
  }
  if (kept.empty()) return Ideal::zero_ideal(small);
  return Ideal(std::move(kept), MonomialOrder::grevlex());
}

int krull_dim(const Ideal& I, const GBOptions& opt) {
  const auto& B = I.groebner(opt);
  int n = I.ring()->arity();
  if (I.is_unit_ideal(opt)) return -1;
  std::vector<uint64_t> supp;
  for (auto& b : B) {
    uint64_t m = 0;
    for (int i = 0; i < n; ++i)
      if (b.lt().m.e[i] > 0) m |= (1ull << i);
    supp.push_back(m);
  }
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  // largest set U of variables such that no leading-term support lies inside U
  int best = 0;
  std::function<void(int, uint64_t, int)> rec = [&](int idx, uint64_t mask, int count) {
    if (count + (n - idx) <= best) return;
    if (idx == n) {
      best = std::max(best, count);
      return;
    }
    uint64_t with = mask | (1ull << idx);
    bool ok = true;
    for (auto s : supp)
      if ((s & ~with) == 0) { ok = false; break; }
    if (ok) rec(idx + 1, with, count + 1);
    rec(idx + 1, mask, count);
  };
  rec(0, 0, 0);
  return best;
}

FlatnessReport is_flat_over_dvr(const Ideal& I, const std::string& u, const GBOptions& opt) {
  int ui = I.ring()->var_index(u);
  if (ui < 0) throw std::invalid_argument("unknown uniformizer variable " + u);
  Polynomial up = Polynomial::variable(I.ring(), ui, I.order());
  if (I.contains(up, opt)) {
    // The empty scheme is (vacuously) flat; otherwise the coordinate ring is
    // nonzero u-torsion, and 1 itself witnesses the failure.
    if (I.contains(Polynomial::constant(I.ring(), 1, I.order()), opt)) return {true, std::nullopt};
    return {false, Polynomial::constant(I.ring(), 1, I.order())};
  }
  Ideal Q = ideal_quotient(I, up, opt);
  for (auto& g : Q.groebner(opt))
    if (!I.contains(g, opt)) return {false, g};
  return {true, std::nullopt};
}

namespace {

bool one_in_ideal_with_inverse(const Ideal& I, const Polynomial& f, const GBOptions& opt) {
  auto ext = extend_ring(I.ring(), "w@", /*prepend=*/false);
  MonomialOrder ord = MonomialOrder::grevlex();
  Polynomial w = Polynomial::variable(ext.ring, ext.ring->arity() - 1, ord);
  Polynomial one = Polynomial::constant(ext.ring, 1, ord);
  std::vector<Polynomial> gens;
  for (auto& g : I.gens()) gens.push_back(g.mapped(ext.ring, ext.var_map, ord));
  gens.push_back(one - w * f.mapped(ext.ring, ext.var_map, ord));
  return Ideal(gens, ord).is_unit_ideal(opt);
}

}  // namespace

bool is_generically_empty(const Ideal& I, const std::string& u, const GBOptions& opt) {
  int ui = I.ring()->var_index(u);
  if (ui < 0) throw std::invalid_argument("unknown uniformizer variable " + u);
  return one_in_ideal_with_inverse(I, Polynomial::variable(I.ring(), ui, I.order()), opt);
}

bool radical_membership(const Polynomial& f, const Ideal& I, const GBOptions& opt) {
  if (f.is_zero()) throw std::invalid_argument("radical membership of zero polynomial");
  return one_in_ideal_with_inverse(I, f, opt);
}

long long hilbert_function(const Ideal& I, int d, bool homogenize, const GBOptions& opt) {
  const Ideal* work = &I;
  std::optional<Ideal> hom;
  if (!std::all_of(I.gens().begin(), I.gens().end(),
                   [](const Polynomial& g) { return g.is_homogeneous(); })) {
    if (!homogenize) throw std::invalid_argument("non-homogeneous ideal (pass homogenize=true)");
    auto ext = extend_ring(I.ring(), "h@", /*prepend=*/false);
    MonomialOrder ord = MonomialOrder::grevlex();
    int hidx = ext.ring->arity() - 1;
    std::vector<Polynomial> gens;
    for (auto& g : I.gens()) {
      int deg = g.total_deg();
      std::vector<Term> terms;
      for (auto& t : g.terms()) {
        Monomial m{std::vector<int>(ext.ring->arity(), 0)};
        for (size_t i = 0; i < t.m.e.size(); ++i) m.e[ext.var_map[i]] = t.m.e[i];
        m.e[hidx] = deg - t.m.deg();
        terms.push_back({m, t.c});
      }
      gens.emplace_back(ext.ring, ord, terms);
    }
    hom.emplace(std::move(gens), ord);
    work = &*hom;
  }
  const auto& B = work->groebner(opt);
  std::vector<Monomial> lms;
  for (auto& b : B) lms.push_back(b.lt().m);
  int n = work->ring()->arity();
  long long count = 0;
  Monomial m{std::vector<int>(n, 0)};
  std::function<void(int, int)> rec = [&](int idx, int rem) {
    if (idx == n - 1) {
      m.e[idx] = rem;
      bool divisible = std::any_of(lms.begin(), lms.end(),
                                   [&](const Monomial& l) { return l.divides(m); });
      if (!divisible) ++count;
      m.e[idx] = 0;
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      m.e[idx] = k;
      rec(idx + 1, rem - k);
    }
    m.e[idx] = 0;
  };
  if (n == 0) return d == 0 ? 1 : 0;
  rec(0, d);
  return count;
}

Ideal substituted_ideal(const Ideal& I, const std::string& var, const FieldElem& value) {
  int vi = I.ring()->var_index(var);
  if (vi < 0) throw std::invalid_argument("unknown variable " + var);
  std::vector<Polynomial> vals;
  for (int i = 0; i < I.ring()->arity(); ++i)
    vals.push_back(i == vi ? Polynomial::constant(I.ring(), value, I.order())
                           : Polynomial::variable(I.ring(), i, I.order()));
  std::vector<Polynomial> gens;
  for (auto& g : I.gens()) {
    Polynomial h = g.substituted(I.ring(), vals);
    if (!h.is_zero()) gens.push_back(h);
  }
  if (gens.empty()) return Ideal::zero_ideal(I.ring(), I.order());
  return Ideal(std::move(gens), I.order());
}

Ideal with_extra_vars(const Ideal& I, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = I.ring()->vars;
  for (auto& v : extra) vars.push_back(v);
  RingPtr R = make_ring(I.ring()->field, vars);
  std::vector<int> var_map(I.ring()->arity());
  for (int i = 0; i < I.ring()->arity(); ++i) var_map[i] = i;
  std::vector<Polynomial> gens;
  for (auto& g : I.gens()) gens.push_back(g.mapped(R, var_map, I.order()));
  return Ideal(std::move(gens), I.order());
}

}  // namespace lm
