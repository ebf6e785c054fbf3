#ifndef LM_CHARTS_HPP
#define LM_CHARTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lm/ideal.hpp"
#include "lm/spin.hpp"
#include "lm/weyl.hpp"

namespace lm::charts {

// Affine charts of the unitary local models over the DVR model k[u],
// pi_0 = u^2, sqrt(pi_0) = u.
//
//   A        n odd,  chart at F_0 = pi * Lambda_0   (X^t =  H X H)
//   B        n even, chart at F_0 = pi * Lambda_m   (X^t = -J X J)
//   B1       n even, chart at F_1 (block reduction; requires s >= 1)
//   PicardI1 n = 3, (r,s) = (2,1), the I = {1} chart
enum class Case { A, B, B1, PicardI1 };
enum class Level { Naive, Wedge, Spin };

struct ChartSpec {
  Case kase = Case::A;
  int n = 0, r = 0, s = 0;
  Level level = Level::Naive;
};

// Chart coordinate ring: variables u, then the matrix entries
// ("x1_1", ..., "xn_n"; for B1 the variables are x, b1_*, b2_*, y*_*).
RingPtr chart_ring(const ChartSpec& spec, Field f);

// Defining ideal of the chart at the requested level.  The generator list is
// deterministic: matrix-square entries, symmetry entries, characteristic
// polynomial coefficients, then minors (wedge) and Pluecker conditions (spin).
Ideal chart_ideal(const ChartSpec& spec, Field f = Field::Q());

// The linear conditions in the Pluecker coordinates of the chart expressing
// the spin condition with sign (-1)^s, with u-denominators cleared.  The ring
// must be chart_ring(spec, .).  Supported for cases A and B.
std::vector<Polynomial> spin_constraints(const ChartSpec& spec, const RingPtr& ring);

// Block-matrix reduction of the chart at F_1 for n even, s odd:
// after eliminating the dependent variables, the chart is the product of the
// (n-2)-variable case-B chart of signature (r-1, s-1) with affine (n-1)-space.
struct SOddReduction {
  Ideal full;                          // the B1 chart ideal (wedge level)
  std::vector<std::string> free_vars;  // x, b2_1, ..., b2_{n-2}
  Ideal reduced;                       // ideal in (u, y*_*) after elimination
  bool matches_smaller_chart;          // reduced == case-B chart of (n-2, r-1, s-1)
};
SOddReduction chart_even_sodd_reduction(int n, int r, int s, Field f = Field::Q(),
                                        const GBOptions& opt = {});

// The Picard I = {1} chart (n = 3, (r,s) = (2,1)): isotropy tA D A = 0,
// pi-stability X^2 = pi_0 I, and the characteristic polynomial
// (T + u)^2 (T - u).  Variables: u, a, b, c, d, x2a, x2b, x, y, x4.
struct PicardI1Report {
  Ideal system;                  // the full pre-elimination system
  bool lu_identity;              // x^2 - 2c, xy + a - d, y^2 + 2b lie in the ideal
  bool x4_generic_identity;      // x4 - u lies in (system : u^inf)
  bool zero_after_elimination;   // imposing x4 = u and eliminating leaves 0 in (u,x,y)
};
PicardI1Report picard_I1_chart(Field f = Field::Q(), const GBOptions& opt = {});

// Closed form of the section of the Picard chart over (u, x, y): substitutes
// a = -u - xy/2, d = -u + xy/2, c = x^2/2, b = -y^2/2, x2a = -u y, x2b = u x,
// x4 = u.
std::vector<Polynomial> picard_I1_section(const RingPtr& system_ring);

// Rank of the Jacobian of the pre-elimination system at `count` random
// F_p-points of the section with u != 0; returns true iff the corank (in the
// 9 non-u variables) is always 2.
bool picard_I1_jacobian_sample(long long p, int count, unsigned seed);

// Orthogonal split examples (section "The split case; examples"):
//   Example1: O_2, I = {0,1}; variables u, a, b, c, d
//   Example2: O_4, I = {1}, special-fiber chart; variables x2, x3, y2, y3
enum class OrthExample { Example1, Example2 };
Ideal orthogonal_chart_ideal(OrthExample which, Level level, Field f = Field::Q());

// ---- Lifting of mu-strata points and relative position ----

// F^Lambda_S = < f_{S*}, pi f_{S*}, pitilde f_{R\S} > inside
// Lambda_i (x) O_F, coordinates in the O_{F_0}-basis {f^Lambda_j, pi f^Lambda_j}
// (2n Laurent entries in u = 1 (x) sqrt(pi_0)).
struct LiftedPoint {
  int n = 0, r = 0, s = 0, lattice_index = 0;
  std::vector<int> S;
  std::vector<spin::Vec> gens;  // n generators, 2n coordinates each
  bool pi_stable = false;
  bool rank_n = false;
  bool isotropic = false;
  bool charpoly_ok = false;     // char of pi|F = (T + u)^r (T - u)^s
  bool valid() const { return pi_stable && rank_n && isotropic && charpoly_ok; }
};
LiftedPoint lift_point(const std::vector<int>& S, int r, int s, int lattice_index);

// A complete periodic lattice chain L_0 c L_1 c ... c L_{n-1} (c u^{-1} L_0)
// in k((u))^n; lattices[j] lists k[u]-module generators in the e-basis.
struct LatticeChain {
  int n = 0;
  std::vector<std::vector<spin::Vec>> lattices;
};

// The standard chain Lambda_j = <u^{-1}e_1..u^{-1}e_j, e_{j+1}..e_n>.
LatticeChain standard_chain(int n);

// The chain of reductions L_S of the lifted points F^{Lambda_j}_S.
LatticeChain lifted_chain(const std::vector<int>& S, int r, int s);

// Iwahori relative position inv(a, b) in the Iwahori-Weyl group of the
// ramified unitary group, via elementary divisors refined by the chain
// filtration.  Lattices are handled at u-adic precision N (default 2n + 2);
// insufficient precision is detected and throws.
weyl::Elem relative_position(const LatticeChain& a, const LatticeChain& b, int precision = 0);

// The translation element the lemma predicts for L_S: t_v with
// v_i = +1 if i in S, -1 if n+1-i in S (1 <= i <= m).
weyl::Elem predicted_position(int n, const std::vector<int>& S);

}  // namespace lm::charts

#endif
