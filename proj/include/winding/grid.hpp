#pragma once

// Winding-angle grid bookkeeping. Angles live on the quarter-turn grid:
// an integer a stands for the angle a*pi/4. Walk endpoints (alpha) are
// restricted to even a (multiples of pi/2); interval ends may be any
// integer or +/- infinity (sentinel values below).

#include <limits>
#include <stdexcept>
#include <string>

namespace winding {

// Quarter-unit angle sentinels for unbounded interval ends.
inline constexpr long kAngleInf = std::numeric_limits<long>::max() / 2;
inline constexpr long kAngleMinusInf = -kAngleInf;

inline bool angle_finite(long a) { return a > kAngleMinusInf && a < kAngleInf; }

// A generating-function query: walks from (p,0) to an axis point at distance
// l with full winding angle alpha (quarter units, even) and intermediate
// winding angles confined to the open interval (beta_minus, beta_plus)*pi/4.
struct WalkQuery {
  int l = 1;
  int p = 1;
  long alpha = 0;
  long beta_minus = kAngleMinusInf;
  long beta_plus = kAngleInf;
  int order = 10;  // highest power of t requested
};

struct InvalidQuery : std::invalid_argument {
  explicit InvalidQuery(const std::string& what) : std::invalid_argument(what) {}
};

// Normal form of a query after applying the two parameter symmetries
// (mirror: (a,b-,b+) -> (-a,-b+,-b-); reversal: (a,b-,b+) -> (a,a-b+,a-b-),
// which also exchanges the two endpoints l,p). Every supported query lands
// in one of five shapes:
//   FullLine:   I = R                                 -> Y^(a)
//   Interior:   b- < 0, 0 <= a < b+                    -> reflected-B operator
//   JType:      b- < 0, a == b+ > 0                    -> (1/l) A * B^(a-2,b-,a)
//   AType:      I = (0,a), a == b+                     -> (1/(lp)) A B^(a-4,-2,a-2) A
//   ZeroAtZero: a == 0 == b-, b+ > 0                   -> (1/(lp)) A B^(0,-2,b+-2) A  (+ empty walk)
struct ReducedQuery {
  enum class Kind { FullLine, Interior, JType, AType, ZeroAtZero };
  Kind kind;
  int l;  // oriented endpoints: swapped relative to the input iff `swapped`
  int p;
  bool swapped;
  long a;
  long bm;
  long bp;
  bool add_empty;  // add the empty-walk contribution 1 (requires l == p)
};

// Validates and normalizes a query; throws InvalidQuery for inadmissible
// parity, alpha outside [beta-, beta+], intervals whose closure misses 0,
// and the few degenerate boundary shapes that have no operator form.
ReducedQuery reduce_query(const WalkQuery& q);

}  // namespace winding
