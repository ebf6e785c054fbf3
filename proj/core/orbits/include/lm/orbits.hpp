#ifndef LM_ORBITS_HPP
#define LM_ORBITS_HPP

#include <string>
#include <vector>

#include "lm/charts.hpp"
#include "lm/ideal.hpp"

// Nilpotent orbits for the symmetric pairs (gl(n), o(n)) and (gl(n), sp(n)):
// partition bookkeeping, candidate orbit-closure ideals, the rs dimension
// formula, and the comparison of chart special fibers with orbit closures.
namespace lm::orbits {

// A partition: weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int sum() const;
  bool empty() const { return parts_.empty(); }
  Partition transpose() const;

  bool operator==(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

// Which classical symmetric pair the matrix conditions cut out:
// orthogonal means X^t = H X H (split form, H the unit antidiagonal),
// symplectic means X^t = -J X J (alternating form, requires even n).
enum class PairKind { Orthogonal, Symplectic };

// (a_1, ..., a_s) -> (a_1, a_1, ..., a_s, a_s).
Partition double_partition(const Partition& lambda);

// Dominance order via partial sums; requires equal sums.
bool dominance_leq(const Partition& a, const Partition& b);

// Dimension of the nilpotent orbit p_{(2^s, 1^r)} of the symmetric pair.
int orbit_dim(int r, int s);

// The candidate ideal for the closure of p_{(2^s, 1^r)}: X^2 = 0, the pair
// symmetry, char_X(T) = T^n, and the minor conditions wedge^{s+1} X = 0,
// wedge^{r+1} X = 0 (the minors are imposed only when r != s for the
// symplectic pair).  The orthogonal pair requires odd n; the symplectic pair
// requires n and s even.  Variables x1_1 .. xn_n.
Ideal orbit_closure_ideal(int n, int s, PairKind pair, Field f = Field::Q());

// Comparison of the special fiber of the wedge chart with the candidate
// orbit closure: dimensions on both sides against rs, and two-sided radical
// membership of generators.  Never a proof of reducedness; the label records
// the evidence grade.
struct OrbitReport {
  int n = 0, r = 0, s = 0;
  PairKind pair = PairKind::Orthogonal;
  int chart_fiber_dim = -1;   // krull dim of the chart special fiber
  int orbit_ideal_dim = -1;   // krull dim of the candidate orbit ideal
  int expected_dim = -1;      // rs
  bool dims_match = false;
  bool orbit_gens_in_chart_radical = false;
  bool chart_gens_in_orbit_radical = false;
  std::string label;  // "evidence at (n=.., p=.., budget=..)"

  bool pass() const {
    return dims_match && orbit_gens_in_chart_radical && chart_gens_in_orbit_radical;
  }
};

OrbitReport special_fiber_vs_orbit(int n, int r, int s, PairKind pair,
                                   Field f = Field::Q(), const GBOptions& opt = {});

}  // namespace lm::orbits

#endif
