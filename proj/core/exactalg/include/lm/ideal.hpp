#ifndef LM_IDEAL_HPP
#define LM_IDEAL_HPP

#include <optional>
#include <stdexcept>

#include "lm/poly.hpp"

namespace lm {

// Hard resource caps for Buchberger.  Exceeding either throws
// BudgetExhausted; results are never silently truncated.
struct GBOptions {
  size_t max_pairs = 2'000'000;  // S-pairs processed
  int max_degree = 120;          // total degree of any S-pair lcm
};

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Ideal {
public:
  Ideal(std::vector<Polynomial> gens, MonomialOrder ord = MonomialOrder::grevlex());

  // The zero ideal; only ever produced as an operation result (e.g. by
  // elimination), never accepted as textual input.
  static Ideal zero_ideal(RingPtr ring, MonomialOrder ord = MonomialOrder::grevlex());

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool has_basis() const { return basis_.has_value(); }
  const std::vector<Polynomial>& basis() const;  // requires computed basis

  // Computes and caches the unique reduced Groebner basis.
  const std::vector<Polynomial>& groebner(const GBOptions& opt = {}) const;

  bool contains(const Polynomial& f, const GBOptions& opt = {}) const;
  bool is_unit_ideal(const GBOptions& opt = {}) const;
  bool same_ideal(const Ideal& other, const GBOptions& opt = {}) const;

private:
  Ideal() = default;
  RingPtr ring_;
  MonomialOrder ord_;
  std::vector<Polynomial> gens_;
  mutable std::optional<std::vector<Polynomial>> basis_;
};

// Remainder of multivariate division of f by the (marked) basis of I.
Polynomial normal_form(const Polynomial& f, const Ideal& I, const GBOptions& opt = {});
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& basis, MonomialOrder ord);

// (I : f), (I : f^inf), elimination, and the DVR-flatness battery.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f, const GBOptions& opt = {});
Ideal saturate(const Ideal& I, const Polynomial& f, const GBOptions& opt = {});

// I ∩ k[vars \ elim_vars]; the result lives in the smaller ring.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& elim_vars, const GBOptions& opt = {});

// Dimension of Spec(R/I); -1 for the unit ideal.
int krull_dim(const Ideal& I, const GBOptions& opt = {});

struct FlatnessReport {
  bool flat;
  std::optional<Polynomial> witness;  // g with g*u in I, g not in I
};
FlatnessReport is_flat_over_dvr(const Ideal& I, const std::string& u, const GBOptions& opt = {});

bool is_generically_empty(const Ideal& I, const std::string& u, const GBOptions& opt = {});
bool radical_membership(const Polynomial& f, const Ideal& I, const GBOptions& opt = {});

// dim_k (R/I)_d for homogeneous I; with homogenize=true a non-homogeneous
// ideal is first homogenized with a fresh variable (degree filtration).
long long hilbert_function(const Ideal& I, int d, bool homogenize = false, const GBOptions& opt = {});

// Substitute u = 0 (or any variable = constant) across generators.
Ideal substituted_ideal(const Ideal& I, const std::string& var, const FieldElem& value);

// Extend the ring of I by extra variables (appended), keeping generators.
Ideal with_extra_vars(const Ideal& I, const std::vector<std::string>& extra);

}  // namespace lm

#endif
