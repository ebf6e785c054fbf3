#ifndef LM_POLY_HPP
#define LM_POLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lm/field.hpp"

namespace lm {

struct Ring {
  Field field;
  std::vector<std::string> vars;

  int arity() const { return static_cast<int>(vars.size()); }
  int var_index(const std::string& name) const;  // -1 if absent
  bool operator==(const Ring& o) const { return field == o.field && vars == o.vars; }
};
using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(Field f, std::vector<std::string> vars);

struct Monomial {
  std::vector<int> e;

  int deg() const;
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divisibility
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;
  bool operator==(const Monomial&) const = default;
};

// grevlex, lex, or a block order eliminating the first `elim` variables
// (grevlex on the block, grevlex on the rest).
struct MonomialOrder {
  enum Kind { GREVLEX, LEX, BLOCK };
  Kind kind = GREVLEX;
  int elim = 0;

  // true iff a < b
  bool less(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder&) const = default;

  static MonomialOrder grevlex() { return {GREVLEX, 0}; }
  static MonomialOrder lex() { return {LEX, 0}; }
  static MonomialOrder block(int elim) { return {BLOCK, elim}; }
};

struct Term {
  Monomial m;
  FieldElem c;
};

// Terms are kept sorted in strictly descending monomial order under `ord`,
// with no zero coefficients.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(RingPtr ring, MonomialOrder ord);
  Polynomial(RingPtr ring, MonomialOrder ord, std::vector<Term> terms);  // normalizes

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& lt() const;  // leading term
  int total_deg() const;
  bool is_homogeneous() const;

  Polynomial resorted(MonomialOrder ord) const;
  Polynomial mapped(RingPtr target, const std::vector<int>& var_map, MonomialOrder ord) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const FieldElem& c) const;
  Polynomial term_mul(const Term& t) const;
  Polynomial monic() const;
  bool operator==(const Polynomial& o) const;  // content equality, order-insensitive

  std::string str() const;

  // Convenience builders.
  static Polynomial zero(RingPtr ring, MonomialOrder ord = MonomialOrder::grevlex());
  static Polynomial constant(RingPtr ring, const FieldElem& c, MonomialOrder ord = MonomialOrder::grevlex());
  static Polynomial constant(RingPtr ring, long long c, MonomialOrder ord = MonomialOrder::grevlex());
  static Polynomial variable(RingPtr ring, int idx, MonomialOrder ord = MonomialOrder::grevlex());
  static Polynomial variable(RingPtr ring, const std::string& name, MonomialOrder ord = MonomialOrder::grevlex());

  // Substitute vals[i] for variable i (vals in the target ring).
  Polynomial substituted(RingPtr target, const std::vector<Polynomial>& vals) const;

private:
  RingPtr ring_;
  MonomialOrder ord_;
  std::vector<Term> terms_;
  void normalize();
};

// Formal partial derivative with respect to variable `var`.
Polynomial derivative(const Polynomial& f, int var);
Polynomial derivative(const Polynomial& f, const std::string& var);

// The terms of f whose exponent in `var` equals k, with that power removed
// (the coefficient of var^k, as an element of the same ring).
Polynomial coeff_of_power(const Polynomial& f, int var, int k);
Polynomial coeff_of_power(const Polynomial& f, const std::string& var, int k);
// Largest k with coeff_of_power nonzero; -1 for the zero polynomial.
int degree_in(const Polynomial& f, int var);

// Evaluation at a point with coordinates in the coefficient field.
FieldElem eval(const Polynomial& f, const std::vector<FieldElem>& point);

}  // namespace lm

#endif
