#ifndef LM_CHARTS_INTERNAL_HPP
#define LM_CHARTS_INTERNAL_HPP

#include <string>
#include <vector>

#include "lm/charts.hpp"

namespace lm::charts::detail {

using PolyMat = std::vector<std::vector<Polynomial>>;
using UMat = std::vector<std::vector<spin::UPoly>>;

long long binom(int n, int k);

// All size-k subsets of {0..n-1}, ascending within each subset, in
// lexicographic order.
std::vector<std::vector<int>> subsets_of(int n, int k);

Polynomial det_poly(const PolyMat& m);
spin::UPoly det_upoly(const UMat& m);

// Submatrix rows/cols are 0-based index lists.
PolyMat submatrix(const PolyMat& m, const std::vector<int>& rows, const std::vector<int>& cols);
UMat usubmatrix(const UMat& m, const std::vector<int>& rows, const std::vector<int>& cols);

// Sum of the principal k x k minors of a square matrix.
Polynomial elementary_symmetric(const PolyMat& m, int k);
spin::UPoly elementary_symmetric_u(const UMat& m, int k);

// Coefficient of T^{n-k} in (T - u)^s (T + u)^r, divided by u^k.
long long char_target_coeff(int r, int s, int k);

// Laurent polynomial in u -> element of a ring containing the variable "u";
// requires nonnegative exponents.
Polynomial upoly_to_poly(const RingPtr& ring, const spin::UPoly& p, MonomialOrder ord);

// Reduced fractions of Laurent polynomials in u.
struct RF {
  spin::UPoly num;  // may be Laurent
  spin::UPoly den;  // polynomial with nonzero constant term, constant term 1

  static RF of(const spin::UPoly& p);
  static RF zero();
  bool is_zero() const { return num.is_zero(); }
  RF operator+(const RF& o) const;
  RF operator-(const RF& o) const;
  RF operator*(const RF& o) const;
  RF operator/(const RF& o) const;
};

spin::UPoly upoly_gcd(spin::UPoly a, spin::UPoly b);  // monic, of the u-shifted parts
spin::UPoly upoly_exact_div(const spin::UPoly& a, const spin::UPoly& b);

}  // namespace lm::charts::detail

#endif
