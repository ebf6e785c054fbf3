#ifndef LM_FIELD_HPP
#define LM_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lm {

using Rational = boost::multiprecision::cpp_rational;

// Coefficient field: the rationals (p == 0) or a prime field F_p.
// p = 2 is rejected throughout: the residue characteristic is odd in
// every situation we model.
struct Field {
  long long p = 0;

  bool is_fp() const { return p != 0; }
  bool operator==(const Field&) const = default;

  static Field Q() { return Field{0}; }
  static Field Fp(long long p);
};

// An element of Q or F_p.  Rationals are kept in lowest terms with a
// positive denominator (cpp_rational maintains this); residues in [0, p).
class FieldElem {
public:
  FieldElem() = default;
  FieldElem(Field f, long long v);
  FieldElem(Field f, const Rational& v);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  // Decimal string; rationals rendered "a/b" (or "a" when b = 1).
  std::string str() const;
  static FieldElem parse(Field f, const std::string& s);

  long long residue() const { return r_; }
  const Rational& rat() const { return q_; }

private:
  Field f_;
  long long r_ = 0;  // value when f_.is_fp()
  Rational q_;       // value when rational
  void check(const FieldElem& o) const;
};

}  // namespace lm

#endif
