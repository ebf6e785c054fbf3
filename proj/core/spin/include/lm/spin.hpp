#ifndef LM_SPIN_HPP
#define LM_SPIN_HPP

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lm/field.hpp"

namespace lm::spin {

using Rat = boost::multiprecision::cpp_rational;

// Laurent polynomials in the uniformizer u, over Q.
class UPoly {
public:
  UPoly() = default;
  UPoly(long long c) { if (c) c_[0] = c; }
  UPoly(Rat c) { if (c != 0) c_[0] = std::move(c); }
  static UPoly monomial(const Rat& c, int k);

  bool is_zero() const { return c_.empty(); }
  int min_exp() const;  // u-adic valuation; requires nonzero
  int max_exp() const;
  const std::map<int, Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly shifted(int k) const;  // multiply by u^k
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  // Euclidean division by the leading (highest-degree) term of d.
  static void divmod(const UPoly& a, const UPoly& d, UPoly& q, UPoly& r);

  std::string str() const;

private:
  std::map<int, Rat> c_;  // exponent -> coefficient, no zero entries
  void trim();
};

using Vec = std::vector<UPoly>;

// The permutation sigma_S attached to a size-n subset S of {1..2n}: its
// one-line word lists 2n+1-s for s in S ascending, then the complement of the
// reflected set ascending.  a_e maps e_S to sign(sigma_S) e_{(2n+1-S)^c}.
int sigma_sign(int n, const std::vector<int>& S);
std::vector<int> reflect_complement(int n, const std::vector<int>& S);

// disc = (-1)^n det(gram) for a rank-2n symmetric bilinear form.
Rat discriminant(const std::vector<std::vector<Rat>>& gram);

// Discriminant together with the split / quadratic-field classification of
// the discriminant algebra (split iff D is a nonzero square).
struct DiscriminantData {
  Rat D;
  bool split;
};
DiscriminantData discriminant_data(const std::vector<std::vector<Rat>>& gram);

// Verifies a_e^2 = D * Id on the whole wedge space.
bool ae_square_check(int n, const Rat& D);

// a_{lambda e} on the wedge basis for a form that is DIAGONAL in the chosen
// basis (entries over Q or F_p); a(e_S) = lambda * D_S * eta_S * e_{S^c}.
std::vector<std::vector<FieldElem>> ae_matrix(const std::vector<FieldElem>& diag, int n,
                                              const FieldElem& lambda);

// Squares a_e for the diagonal form and returns the scalar by which a_e^2
// acts; throws if the square is not scalar or the form is singular.
FieldElem ae_square_check(const std::vector<FieldElem>& diag, int n);

// dim(W cap W') for two subspaces given by spanning vectors.
int subspace_intersection_dim(const std::vector<std::vector<Rat>>& W,
                              const std::vector<std::vector<Rat>>& Wp);
bool is_isotropic(const std::vector<std::vector<Rat>>& gram,
                  const std::vector<std::vector<Rat>>& W);
// Two maximal isotropic subspaces lie in the same SO-orbit iff
// dim(W cap W') = n mod 2.
bool same_so_orbit(int n, int intersection_dim);

// Validates that W, W' are totally isotropic of dimension n and classifies
// their relative parity.
enum class Parity { Same, Opposite };
Parity isotropic_parity(const std::vector<std::vector<Rat>>& gram,
                        const std::vector<std::vector<Rat>>& W,
                        const std::vector<std::vector<Rat>>& Wp);

class SpinSpace {
public:
  explicit SpinSpace(int n);

  int n() const { return n_; }
  int dim() const { return (int)subsets_.size(); }
  const std::vector<std::vector<int>>& subsets() const { return subsets_; }
  int index_of(const std::vector<int>& S) const;

  // eigenvalue of a_e on the component normalized to contain e_1 ^ ... ^ e_n
  int plus_sign() const { return plus_sign_; }

  Vec apply_ae(const Vec& x) const;

  // basis vector e_{i1} ^ ... ^ e_{in} scaled by c * u^k
  Vec wedge(const std::vector<int>& S, const Rat& c = 1, int k = 0) const;

  // Q-basis of the labelled eigencomponent (label +1 or -1).
  std::vector<Vec> eigen_basis(int label) const;

  // k[u]-basis of the labelled eigencomponent of the lattice spanned (over
  // k[u]) by the given vectors.
  std::vector<Vec> lattice_pm_basis(const std::vector<Vec>& lattice, int label) const;

private:
  int n_;
  int plus_sign_;
  std::vector<std::vector<int>> subsets_;
  std::map<std::vector<int>, int> index_;
};

// k[u]-module helpers (vectors allowed Laurent entries; the common u-power is
// cleared internally).
std::vector<Vec> echelon_module(std::vector<Vec> gens);
bool module_contains(const std::vector<Vec>& gens, const Vec& v);
bool same_module(const std::vector<Vec>& a, const std::vector<Vec>& b);

// {"n": n, "terms": [[[i1,...,in], "coeff"], ...]} with Laurent coefficient
// strings in u; terms in increasing wedge-index order.
std::string wedge_vector_json(int n, const Vec& v);

}  // namespace lm::spin

#endif
