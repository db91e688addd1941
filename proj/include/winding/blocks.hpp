#pragma once

// Combinatorial pipeline: explicit binomial series for the elementary walk
// classes (quarter-turn climbs A, axis-to-axis bounces B, quadrant crossings
// J), axis-alternation counts, and assembly of all winding-angle generating
// functions by finite matrix algebra and reflection sums.

#include <vector>

#include "winding/grid.hpp"
#include "winding/series.hpp"

namespace winding {

// J_{l,p}(t) = sum_n (p/n) C(n,(n+l)/2) C(n,(n+p)/2) t^n: walks from (p,0)
// to (0,l) with intermediate winding angles in (-pi/2, pi/2). Zero when l+p
// is odd. Returned as a series in s (t^n at s^(2n)) valid through t^orderT.
Series j_series(int l, int p, int orderT);

// B_{l,p}(t) = B_{l-p} - B_{-l-p} with [t^(2n)] B_m = C(2n,n) C(2n,n+m/2):
// walks between points on the positive x-axis with intermediate winding in
// (-pi/2, pi/2). Constant term 1 iff l == p (empty walk).
Series b_series(int l, int p, int orderT);

// Number of N-step simple walks on (pi/2)Z from 0 to alpha (quarter units,
// even): C(N, (N - |alpha|/2)/2), or 0 when that is negative or half-odd.
Int axis_walk_count(long alpha_quarter, int N);

// [x^n] psi_k(x)^p = (k/4)^(n/2) (p/n) C(n,(n+p)/2) as a monomial in s.
Series psi_power_coeff(int n, int p);

// Matrix of inner products <e_l, Op e_p> for 1 <= l,p <= dim. The natural
// product carries weights 1/m over the intermediate index, matching the
// normalization <e_m, e_m> = m.
struct OpMatrix {
  int dim = 0;
  std::vector<Series> a;  // row-major, (l-1)*dim + (p-1)

  explicit OpMatrix(int d = 0) : dim(d), a(static_cast<size_t>(d) * d) {}
  Series& at(int l, int p) { return a[static_cast<size_t>(l - 1) * dim + (p - 1)]; }
  const Series& at(int l, int p) const {
    return a[static_cast<size_t>(l - 1) * dim + (p - 1)];
  }
};

// (M1 * M2)_{l,p} = sum_m M1_{l,m} (1/m) M2_{m,p}.
OpMatrix op_product(const OpMatrix& m1, const OpMatrix& m2);

// Shared state for assembling many queries at a fixed order and truncation
// dimension: the J, B and A = J B^{-1} matrices and the partial products
// P_N = B J^N for 0 <= N <= orderT. Immutable after construction.
struct BlockContext {
  int orderT;
  int dim;
  OpMatrix jmat;
  OpMatrix bmat;
  OpMatrix amat;
  std::vector<OpMatrix> bjn;  // bjn[N] = B J^N
};

// dim = orderT + max_lp: a walk of length n starting at distance <= max_lp
// never reaches an axis distance beyond n + max_lp.
BlockContext make_block_context(int orderT, int max_lp);

// <e_l, Y^(alpha) e_p> matrix: sum_N a_N^(alpha) B J^N (alpha_quarter even, >= 0).
OpMatrix y_matrix(const BlockContext& ctx, long alpha_quarter);

// Reflection operator B^(a, b-, b+) = sum_n (Y^|a+nd| - Y^|2b+ - a + nd|),
// d = 2(b+ - b-), with the stated two-term forms at infinite ends.
OpMatrix refl_b_matrix(const BlockContext& ctx, long a, long bm, long bp);

// First-return renewal at winding 0. Input: the matrix of <e_l, Y e_p> for
// walks confined to a symmetric interval (-b, b). Splitting each walk at its
// first intermediate return to winding 0 gives Y = empty + R . Y in the
// concatenation algebra; row-scaling by l turns concatenation into the
// weighted product, so the row-scaled first-return matrix Rh solves
// Rh = Vh - Rh * Vh with Vh = Yh - Id, a fixed point exact after ~orderT
// iterations. By the reflection symmetry theta -> -theta, half of Rh stays
// on the positive side: W^(0,(0,b))_{l,p} = delta_{l,p} + Rh_{l,p}/(2l).
OpMatrix first_return_matrix(const OpMatrix& yc, int orderT);

// W^(alpha)_{l,p}: generating function of walks with unrestricted
// intermediate winding and full winding angle alpha (quarter units, even).
Series assemble_W(const BlockContext& ctx, int l, int p, long alpha_quarter);

// W^(alpha, (b-, b+))_{l,p} via the reduced normal form of the query.
// Requires ctx.dim >= q.order + max(l, p) for exactness through t^q.order.
Series assemble_W_interval(const BlockContext& ctx, const WalkQuery& q);

// Convenience form: builds a context of dimension order + max(l,p), and
// repeats the computation at dimension + 2 as a truncation-stability check.
Series assemble_W_interval(const WalkQuery& q);

}  // namespace winding
