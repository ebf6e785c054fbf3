#include "lm/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lm {

int Ring::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(Field f, std::vector<std::string> vars) {
  return std::make_shared<Ring>(Ring{f, std::move(vars)});
}

int Monomial::deg() const { return std::accumulate(e.begin(), e.end(), 0); }

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0 && o.e[i] > 0) return false;
  return true;
}

static bool grevlex_less(const int* a, const int* b, int n) {
  int da = 0, db = 0;
  for (int i = 0; i < n; ++i) { da += a[i]; db += b[i]; }
  if (da != db) return da < db;
  // smaller in the last differing exponent (reverse lex) means larger
  for (int i = n - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool MonomialOrder::less(const Monomial& ma, const Monomial& mb) const {
  const int* a = ma.e.data();
  const int* b = mb.e.data();
  int n = static_cast<int>(ma.e.size());
  switch (kind) {
    case LEX:
      for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    case BLOCK: {
      if (grevlex_less(a, b, elim)) return true;
      Monomial ta{std::vector<int>(ma.e.begin(), ma.e.begin() + elim)};
      Monomial tb{std::vector<int>(mb.e.begin(), mb.e.begin() + elim)};
      if (!(ta == tb) ) return false;
      return grevlex_less(a + elim, b + elim, n - elim);
    }
    case GREVLEX:
    default:
      return grevlex_less(a, b, n);
  }
}

Polynomial::Polynomial(RingPtr ring, MonomialOrder ord) : ring_(std::move(ring)), ord_(ord) {}

Polynomial::Polynomial(RingPtr ring, MonomialOrder ord, std::vector<Term> terms)
    : ring_(std::move(ring)), ord_(ord), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  for (auto& t : terms_)
    if (static_cast<int>(t.m.e.size()) != ring_->arity())
      throw std::invalid_argument("monomial arity mismatch");
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ord_.less(b.m, a.m); });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c = out.back().c + t.c;
    else
      out.push_back(t);
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

const Term& Polynomial::lt() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::total_deg() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, t.m.deg());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().m.deg();
  for (auto& t : terms_)
    if (t.m.deg() != d) return false;
  return true;
}

Polynomial Polynomial::resorted(MonomialOrder ord) const {
  return Polynomial(ring_, ord, terms_);
}

Polynomial Polynomial::mapped(RingPtr target, const std::vector<int>& var_map, MonomialOrder ord) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    Monomial m{std::vector<int>(target->arity(), 0)};
    for (size_t i = 0; i < t.m.e.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (var_map[i] < 0) throw std::invalid_argument("mapped: dropped variable occurs");
      m.e[var_map[i]] += t.m.e[i];
    }
    out.push_back({std::move(m), t.c});
  }
  return Polynomial(target, ord, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!(*ring_ == *o.ring_)) throw std::invalid_argument("ring mismatch");
  Polynomial rhs = (o.ord_ == ord_) ? o : o.resorted(ord_);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    const Term &a = terms_[i], &b = rhs.terms_[j];
    if (a.m == b.m) {
      FieldElem c = a.c + b.c;
      if (!c.is_zero()) out.push_back({a.m, c});
      ++i; ++j;
    } else if (ord_.less(b.m, a.m)) {
      out.push_back(a); ++i;
    } else {
      out.push_back(b); ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) out.push_back(rhs.terms_[j]);
  Polynomial r(ring_, ord_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::term_mul(const Term& t) const {
  if (t.c.is_zero()) return Polynomial(ring_, ord_);
  Polynomial r(ring_, ord_);
  r.terms_.reserve(terms_.size());
  for (auto& s : terms_) r.terms_.push_back({s.m * t.m, s.c * t.c});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!(*ring_ == *o.ring_)) throw std::invalid_argument("ring mismatch");
  Polynomial acc(ring_, ord_);
  for (auto& t : o.terms_) acc = acc + term_mul(t);
  return acc;
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
  if (c.is_zero()) return Polynomial(ring_, ord_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = t.c * c;
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(lt().c.inv());
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
  if (!(*ring_ == *o.ring_)) return false;
  Polynomial a = resorted(MonomialOrder::grevlex());
  Polynomial b = o.resorted(MonomialOrder::grevlex());
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    std::string c = t.c.str();
    if (!first) os << " + ";
    first = false;
    bool unit = (c == "1") && t.m.deg() > 0;
    if (!unit) os << c;
    bool any = false;
    for (size_t i = 0; i < t.m.e.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (any || !unit) os << "*";
      any = true;
      os << ring_->vars[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
    }
  }
  return os.str();
}

Polynomial Polynomial::zero(RingPtr ring, MonomialOrder ord) { return Polynomial(ring, ord); }

Polynomial Polynomial::constant(RingPtr ring, const FieldElem& c, MonomialOrder ord) {
  if (c.is_zero()) return zero(ring, ord);
  Monomial m{std::vector<int>(ring->arity(), 0)};
  return Polynomial(ring, ord, {{m, c}});
}

Polynomial Polynomial::constant(RingPtr ring, long long c, MonomialOrder ord) {
  return constant(ring, FieldElem(ring->field, c), ord);
}

Polynomial Polynomial::variable(RingPtr ring, int idx, MonomialOrder ord) {
  if (idx < 0 || idx >= ring->arity()) throw std::out_of_range("variable index");
  Monomial m{std::vector<int>(ring->arity(), 0)};
  m.e[idx] = 1;
  return Polynomial(ring, ord, {{m, FieldElem(ring->field, 1)}});
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name, MonomialOrder ord) {
  int idx = ring->var_index(name);
  if (idx < 0) throw std::invalid_argument("unknown variable " + name);
  return variable(ring, idx, ord);
}

Polynomial Polynomial::substituted(RingPtr target, const std::vector<Polynomial>& vals) const {
  if (static_cast<int>(vals.size()) != ring_->arity())
    throw std::invalid_argument("substitution arity mismatch");
  Polynomial acc = Polynomial::zero(target, ord_);
  for (auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.c, ord_);
    for (size_t i = 0; i < t.m.e.size(); ++i)
      for (int k = 0; k < t.m.e[i]; ++k) prod = prod * vals[i];
    acc = acc + prod;
  }
  return acc;
}

Polynomial derivative(const Polynomial& f, int var) {
  if (f.is_zero()) return f;
  const RingPtr& ring = f.ring();
  if (var < 0 || var >= ring->arity()) throw std::out_of_range("variable index");
  std::vector<Term> out;
  for (auto& t : f.terms()) {
    int e = t.m.e[var];
    if (e == 0) continue;
    Term d = t;
    d.m.e[var] = e - 1;
    d.c = t.c * FieldElem(ring->field, e);
    if (!d.c.is_zero()) out.push_back(std::move(d));
  }
  return Polynomial(ring, f.order(), std::move(out));
}

Polynomial derivative(const Polynomial& f, const std::string& var) {
  int idx = f.ring()->var_index(var);
  if (idx < 0) throw std::invalid_argument("unknown variable " + var);
  return derivative(f, idx);
}

Polynomial coeff_of_power(const Polynomial& f, int var, int k) {
  if (f.is_zero()) return f;
  const RingPtr& ring = f.ring();
  if (var < 0 || var >= ring->arity()) throw std::out_of_range("variable index");
  std::vector<Term> out;
  for (auto& t : f.terms()) {
    if (t.m.e[var] != k) continue;
    Term d = t;
    d.m.e[var] = 0;
    out.push_back(std::move(d));
  }
  return Polynomial(ring, f.order(), std::move(out));
}

Polynomial coeff_of_power(const Polynomial& f, const std::string& var, int k) {
  int idx = f.ring()->var_index(var);
  if (idx < 0) throw std::invalid_argument("unknown variable " + var);
  return coeff_of_power(f, idx, k);
}

int degree_in(const Polynomial& f, int var) {
  int d = -1;
  for (auto& t : f.terms()) d = std::max(d, t.m.e[var]);
  return d;
}

FieldElem eval(const Polynomial& f, const std::vector<FieldElem>& point) {
  const RingPtr& ring = f.ring();
  if (static_cast<int>(point.size()) != ring->arity())
    throw std::invalid_argument("evaluation arity mismatch");
  FieldElem acc(ring->field, 0);
  for (auto& t : f.terms()) {
    FieldElem prod = t.c;
    for (size_t i = 0; i < t.m.e.size(); ++i)
      for (int k = 0; k < t.m.e[i]; ++k) prod = prod * point[i];
    acc = acc + prod;
  }
  return acc;
}

}  // namespace lm
