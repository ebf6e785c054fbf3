#ifndef LM_WEYL_HPP
#define LM_WEYL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lm::weyl {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Coweight in Z^m (the X_*(T_ad)_Gamma = Z^m coordinates).
struct Coweight {
  std::vector<int> e;
  auto operator<=>(const Coweight&) const = default;
};

// Signed permutation in W_0 = S_m x {+-1}^m, acting by e_i -> signs[i] * e_{perm[i]}
// (perm is 0-based).
struct FiniteWeyl {
  std::vector<int> perm;
  std::vector<int> signs;
  auto operator<=>(const FiniteWeyl&) const = default;
};

// Element of the Iwahori-Weyl group in semidirect normal form: the affine
// action on the (doubled) apartment coordinates is y -> t + w(y).  The
// Omega-component is determined: trivial for n odd, sum(t) mod 2 for n even.
struct Elem {
  std::vector<int> t;
  FiniteWeyl w;
  auto operator<=>(const Elem&) const = default;
};

// One family of affine root hyperplanes: { y : beta(y) = c, c in offsets },
// offsets encoded as { k/2 : k in Z, k mod 2 == parity } (parity 2 = all k).
struct HyperplaneFamily {
  std::vector<int> beta;
  int parity;  // 0: offsets Z; 1: offsets 1/2 + Z; 2: offsets (1/2) Z
};

// Affine root shift set per the recipe: R_beta = (1/l) Z if beta/2 is not a
// relative root, else 1/(2l) + (1/l) Z.
struct AffineRootShifts {
  Rat shift;   // one representative offset
  Rat period;  // 1/l
};
AffineRootShifts affine_root_set(int l_beta, bool half_beta_is_root);

// Static root datum summary for the two ramified unitary families.
struct AffineData {
  char sigma_type;                           // 'B' (n even) or 'C' (n odd)
  int m;                                     // rank
  std::vector<std::vector<int>> pos_coroots; // positive coroots of Sigma
  bool qvee_even_sum;                        // Q-vee = even-sum sublattice?
  int omega_order;                           // |Omega|: 2 for n even, 1 for n odd
};
AffineData build_affine_data(int n);

Coweight coweight_image(int n, int r, int s);

// Normalized parahoric index set (subset of {0,...,m}); for n even the raw
// form may use m' (encoded below as the value MPRIME).
constexpr int MPRIME = -2;
std::vector<int> parahoric_classify(int n, std::vector<int> raw);

// Kottwitz invariant for the even case, from val(c) and the valuations
// val_F(a_i).
std::pair<long long, int> kottwitz_even(long long val_c, const std::vector<long long>& val_a);

long long coherence_rhs(int n, int s, int k);

class Group {
public:
  explicit Group(int n);

  int n() const { return n_; }
  int m() const { return m_; }
  bool even() const { return even_; }

  Elem identity() const;
  Elem translation(const std::vector<int>& t) const;
  const std::vector<Elem>& simples() const { return simples_; }
  Elem omega_rep(int omega) const;  // length-0 representative of the Omega class

  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  int omega_of(const Elem& a) const;

  int length(const Elem& a) const;
  // Reduced word for the W_a-part (indices into simples()), and the Omega part:
  // a = s_{word[0]} ... s_{word[k-1]} * omega_rep(omega).
  std::pair<std::vector<int>, int> reduced_word(const Elem& a) const;
  bool bruhat_leq(const Elem& u, const Elem& w) const;

  // mu-admissible machinery.
  std::vector<Elem> extreme_elements(int r, int s) const;  // W_0-orbit translations
  std::vector<Elem> admissible_set(int r, int s) const;
  std::vector<Coweight> adm0(int r, int s) const;

  // Parahoric subgroup W^Y for a normalized index set; Y is a set of node
  // labels in {0..m} (with the even-case m-1 standing for raw m').
  std::vector<int> parahoric_wall_complement(const std::vector<int>& I) const;
  Elem project_double_coset(const Elem& w, const std::vector<int>& I) const;

  struct VertexwiseReport {
    bool holds;
    std::optional<Elem> counterexample;
  };
  VertexwiseReport vertexwise_check(int r, int s, const std::vector<int>& I) const;

  // All normalized nonempty parahoric index sets for this n.
  std::vector<std::vector<int>> all_parahoric_indices() const;

  // Alcove figure (rank <= 2 only).
  std::string emit_alcove_svg(int r, int s, const std::vector<int>& I) const;

  // Generic base point of the fundamental alcove (doubled coordinates).
  const std::vector<Rat>& base_point() const { return p0_; }
  std::vector<Rat> act(const Elem& a, const std::vector<Rat>& y) const;

private:
  int n_, m_;
  bool even_;
  std::vector<HyperplaneFamily> families_;
  std::vector<Elem> simples_;
  std::vector<Rat> p0_;
  Elem omega_gen_;  // for n even

  // wall index (into simples_) opposite the alcove vertex of diagram node j;
  // node encoding: 0..m, plus MPRIME for the even-case raw m'.
  int wall_of_node(int node) const;
  std::vector<Elem> parabolic_elements(const std::vector<int>& gens) const;
};

}  // namespace lm::weyl

#endif
