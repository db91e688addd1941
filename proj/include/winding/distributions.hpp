#pragma once

// Winding-angle laws for unconstrained random walks: the G-series counting
// walks by the window of their final-segment winding angle, the discrete
// hyperbolic-secant laws at an independent geometric time, the exact
// geometric-mixing DP oracle, and the cn/dn characteristic-function
// identities.
//
// Angle conventions (quarter units, i.e. multiples of pi/4): the walk
// winding at time j+1/2 is evaluated at the midpoint of step j+1. For the
// square point (dual lattice center) the law has atoms on odd quarters, for
// the origin point on even quarters. The natural disjoint buckets are the
// width-pi/2 intervals centered at the atom grid; the width-pi windows of
// the secant laws are unions of two adjacent disjoint buckets and therefore
// overlap their neighbours.

#include <map>
#include <stdexcept>

#include "winding/oracle.hpp"
#include "winding/series.hpp"

namespace winding {

struct InvalidBucket : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bucket probabilities over the disjoint quarter-grid refinement, keyed by
// the bucket center in quarter units. infinity_mass carries the walks
// absorbed at the marked point (origin point only). The invariant
// buckets + infinity_mass + tail in [1 - tail_bound, 1 + tail_bound] holds
// with normalization_defect = buckets + infinity_mass + tail_bound - 1.
struct Distribution {
  std::map<long, double> buckets;
  double infinity_mass = 0;
  double tail_bound = 0;
  double normalization_defect = 0;
};

// Exact series (in s = sqrt(k), k = 4t) for the generating function of
// non-empty walks from (p, 0) with no intermediate visit to the origin
// whose final-segment winding angle lies in the open width-pi/2 window
// centered at alpha = alpha_quarter * pi/4 (alpha_quarter odd). Assembled
// from the eigenbasis coefficients <e_p, f_m>. Guards: 1 <= p <= 8,
// order <= 30.
Series g_alpha_series(int p, long alpha_quarter, int order);

// Closed-form probability that the winding angle at time zeta + 1/2 (zeta
// geometric with parameter k) lies in the open width-pi window centered at
// alpha = alpha_quarter * pi/4: alpha_quarter even for the square point
// (sech law with an atom correction at 0), odd for the origin point
// (sech product law).
double secant_law(PointKind point, double k, long alpha_quarter);

struct MixResult {
  double probability;
  double achieved_tail;
};

// The same width-pi window probability computed by exact DP mixed over the
// geometric time: sum_{j<=J} k^j (1-k) P_j with J chosen so k^(J+1) <= tail
// (capped by the exact-count budget of 62 steps; the cap is reported via
// achieved_tail).
MixResult geometric_mix_dp(PointKind point, double k, long alpha_quarter,
                           double tail);

// Full mixed law over the disjoint width-pi/2 buckets (plus the absorbed
// mass for the origin point).
Distribution geometric_mix_distribution(PointKind point, double k,
                                        double tail);

// Characteristic functions of the winding angle rounded to the closest
// lattice of angles: Dn rounds theta^square at time zeta - 1/2 to pi Z,
// Cn rounds theta^square at time zeta + 1/2 to pi Z + pi/2. The lattice sum
// is assembled from secant_law and returned alongside the matching Jacobi
// elliptic value dn(K b, k) resp. cn(K b, k).
enum class CharVariant { Cn, Dn };

struct CharfunResult {
  double lattice_sum;
  double jacobi;
};

CharfunResult charfun(CharVariant variant, double k, double b);

}  // namespace winding
