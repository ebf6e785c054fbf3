#include "lm/field.hpp"

namespace lm {

static bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::Fp(long long p) {
  if (p == 2) throw std::invalid_argument("p = 2 is not supported (odd residue characteristic only)");
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime, got " + std::to_string(p));
  return Field{p};
}

static long long mod_reduce(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

FieldElem::FieldElem(Field f, long long v) : f_(f) {
  if (f_.is_fp())
    r_ = mod_reduce(v, f_.p);
  else
    q_ = v;
}

FieldElem::FieldElem(Field f, const Rational& v) : f_(f) {
  if (f_.is_fp()) {
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(v) % f_.p, den = denominator(v) % f_.p;
    FieldElem n(f, num.convert_to<long long>()), d(f, den.convert_to<long long>());
    r_ = (n / d).r_;
  } else {
    q_ = v;
  }
}

void FieldElem::check(const FieldElem& o) const {
  if (!(f_ == o.f_)) throw std::invalid_argument("field mismatch");
}

bool FieldElem::is_zero() const { return f_.is_fp() ? r_ == 0 : q_.is_zero(); }
bool FieldElem::is_one() const { return f_.is_fp() ? r_ == 1 : q_ == 1; }

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check(o);
  return f_.is_fp() ? FieldElem(f_, r_ + o.r_) : FieldElem(f_, q_ + o.q_);
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  check(o);
  return f_.is_fp() ? FieldElem(f_, r_ - o.r_) : FieldElem(f_, q_ - o.q_);
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  check(o);
  if (f_.is_fp()) {
    auto prod = static_cast<__int128>(r_) * o.r_;
    return FieldElem(f_, static_cast<long long>(prod % f_.p));
  }
  return FieldElem(f_, q_ * o.q_);
}
FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }
FieldElem FieldElem::operator-() const {
  return f_.is_fp() ? FieldElem(f_, -r_) : FieldElem(f_, Rational(-q_));
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (!f_.is_fp()) return FieldElem(f_, Rational(1) / q_);
  // extended Euclid
  long long a = r_, b = f_.p, x0 = 1, x1 = 0;
  while (b) {
    long long q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  return FieldElem(f_, x0);
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (!(f_ == o.f_)) return false;
  return f_.is_fp() ? r_ == o.r_ : q_ == o.q_;
}

std::string FieldElem::str() const {
  if (f_.is_fp()) return std::to_string(r_);
  std::string s = numerator(q_).str();
  if (denominator(q_) != 1) s += "/" + denominator(q_).str();
  return s;
}

FieldElem FieldElem::parse(Field f, const std::string& s) {
  auto slash = s.find('/');
  using boost::multiprecision::cpp_int;
  if (slash == std::string::npos) return FieldElem(f, Rational(cpp_int(s)));
  cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in coefficient " + s);
  return FieldElem(f, Rational(num, den));
}

}  // namespace lm
