#include "winding/grid.hpp"

namespace winding {

namespace {

bool odd_end(long b) { return angle_finite(b) && (b % 2 != 0); }

// (a, b-, b+) -> (-a, -b+, -b-): reflect all angles in 0.
void mirror(long& a, long& bm, long& bp) {
  long nbm = angle_finite(bp) ? -bp : kAngleMinusInf;
  long nbp = angle_finite(bm) ? -bm : kAngleInf;
  a = -a;
  bm = nbm;
  bp = nbp;
}

// (a, b-, b+) -> (a, a-b+, a-b-): walk reversal; exchanges the endpoints.
void reverse_time(long a, long& bm, long& bp) {
  long nbm = angle_finite(bp) ? a - bp : kAngleMinusInf;
  long nbp = angle_finite(bm) ? a - bm : kAngleInf;
  bm = nbm;
  bp = nbp;
}

}  // namespace

ReducedQuery reduce_query(const WalkQuery& q) {
  if (q.l < 1 || q.p < 1) throw InvalidQuery("endpoint distances must be >= 1");
  if (q.order < 0) throw InvalidQuery("negative order");
  long a = q.alpha, bm = q.beta_minus, bp = q.beta_plus;
  if (!angle_finite(a) || a % 2 != 0)
    throw InvalidQuery("alpha must be a finite even quarter-grid angle");
  if (bm >= bp) throw InvalidQuery("empty winding interval");
  if ((odd_end(bm) || odd_end(bp)) && (q.l % 2 != 0 || q.p % 2 != 0))
    throw InvalidQuery("pi/4-grid interval ends require even endpoints l, p");
  if (a < bm || a > bp) throw InvalidQuery("alpha outside the closed interval");
  if (bm > 0 || bp < 0)
    throw InvalidQuery("interval closure must contain 0");

  ReducedQuery r;
  r.l = q.l;
  r.p = q.p;
  r.swapped = false;
  r.add_empty = false;

  if (a < 0 || (a == 0 && bp == 0)) mirror(a, bm, bp);
  // Now a >= 0, and a == 0 implies bp > 0.

  if (!angle_finite(bm) && !angle_finite(bp)) {
    r.kind = ReducedQuery::Kind::FullLine;
  } else if (bm < 0 && a < bp) {
    r.kind = ReducedQuery::Kind::Interior;
  } else if (bm < 0 && a == bp) {
    r.kind = ReducedQuery::Kind::JType;
  } else {
    // bm == 0 from here on.
    if (a == 0) {
      r.kind = ReducedQuery::Kind::ZeroAtZero;
      r.add_empty = (q.l == q.p);
    } else if (a == bp) {
      r.kind = ReducedQuery::Kind::AType;
    } else {
      // 0 < a < b+ with walks pinned above 0: reverse time to put alpha on
      // the upper interval end.
      reverse_time(a, bm, bp);
      std::swap(r.l, r.p);
      r.swapped = true;
      r.kind = ReducedQuery::Kind::JType;
    }
  }
  r.a = a;
  r.bm = bm;
  r.bp = bp;
  return r;
}

}  // namespace winding
