#pragma once

// Closed-form pipeline: exact series for the conformal coordinate v, the
// basis coefficients <e_l, f_m> and norms ||f_m||^2, the eigenvalue families
// of the winding-angle operators, and eigen-sum evaluation of every
// W-generating function. Independent of the binomial-series assembly in
// blocks.hpp except for the shared query reduction.

#include <stdexcept>
#include <vector>

#include "winding/blocks.hpp"
#include "winding/elliptic_series.hpp"
#include "winding/grid.hpp"
#include "winding/series.hpp"

namespace winding {

struct ModeBoundUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficients of the odd function v~ = 2 pi v_modulus(z) at z^1..z^degree
// (index = degree of z; even entries are zero). The 2 pi scaling absorbs the
// 1/(4K) prefactor of the elliptic integral into the rational series
// pi/(2K), keeping every coefficient a Laurent series over Q:
//   [z^(2j+1)] v~ = (pi/(2K)) / (2j+1) * [y^(2j)] (m-y^2)^(-1/2)(1-my^2)^(-1/2)
// for modulus m in {k, k1}. Coefficients for modulus k1 have negative
// s-valuation (k1 ~ k^2/4).
enum class VModulus { k, k1 };
std::vector<Series> v_series(VModulus modulus, int z_degree, long order);

// True iff composing the v~ series at modulus k1 with the series of psi_k
// reproduces the v~ series at modulus k through the tracked orders: the
// Landen conjugation identity v_{k1}(psi_k(x)) = v_k(x).
bool landen_conjugation_check(long order, int z_degree);

// Basis coefficient table for the orthogonal family
//   f_m = sin(m v~)            (m odd)
//   f_m = cos(m v~) - 1        (m even)
// where v~ = 2 pi v_{k1}. These differ from cos(2 pi m (v_{k1} + 1/4)) -
// cos(pi m/2) by the constant sign (-1)^ceil(m/2), chosen so that
// coeff[1][1] > 0; the sign cancels in every eigen-sum.
struct BasisCoeffTable {
  long order = 0;  // s-order of validity of the underlying elliptic pack
  int max_l = 0;
  int max_m = 0;
  // coeff[l][m] = <e_l, f_m> = l [z^l] f_m; 1-based, zero unless l == m (2).
  std::vector<std::vector<Series>> coeff;
  std::vector<Series> norm_sq;  // norm_sq[m] = m (q^-m - q^m)/4, 1-based

  const Series& at(int l, int m) const { return coeff[l][m]; }
};

BasisCoeffTable basis_table(int max_l, int max_m, long order);

// Eigenvalue of the operator family on the eigenvector f_m, as an exact
// Laurent series in s. Angles in quarter units; bm/bp may be infinite where
// the table states limits. All results have s-valuation >= 0.
//   Y(a):        (2K/pi) (1/m) q^(m a/4)                       a >= 0
//   A(a):        (pi/2K) m q4^(ma) / (1 - q4^(2ma))            a >= 2, I=(0,a)
//   J(a, bm):    q4^(ma) (1 - q4^(-2m bm)) / (1 - q4^(2m(a-bm)))
//   B(a,bm,bp):  (2K/pi)(1/m)(1 - q4^(-2m bm))(q4^(ma) - q4^(m(2bp-a)))
//                  / (1 - q4^(2m(bp-bm)))
// with the infinite-end limits obtained by dropping the vanished factors.
enum class EigenKind { Y, A, J, B };
Series eigenvalue(EigenKind kind, long a, long bm, long bp, int m,
                  const EllipticSeriesPack& pack);

// W^(alpha,(b-,b+))_{l,p} by eigen-sum over the f_m basis, using the same
// reduced normal form of the query as the combinatorial pipeline. The mode
// cutoff is chosen from the exact valuation bound val(term) >= 4m - 2(l+p),
// and the next two modes are verified to contribute nothing
// (ModeBoundUnstable otherwise). Result is asserted to be a series in k with
// s-valuation >= 0 and is truncated to t^order.
Series spectral_W(const WalkQuery& q);

// As above but reusing a prebuilt table and elliptic pack (table must cover
// the needed l range: max(l,p) generally, order + max(l,p) for the
// first-return construction when alpha = 0 lies on the interval boundary).
Series spectral_W(const WalkQuery& q, const BasisCoeffTable& table,
                  const EllipticSeriesPack& pack);

}  // namespace winding
