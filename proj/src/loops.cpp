#include "winding/loops.hpp"

#include <cmath>

#include "winding/elliptic_series.hpp"
#include "winding/rat.hpp"

namespace winding {

Series loop_gf(const LoopQuery& q) {
  if (q.n_index == 0) throw DomainError("loop_gf: index must be nonzero");
  if (q.order < 0 || q.order > 200)
    throw BudgetExceeded("loop_gf: need order <= 200");
  long n = std::labs(q.n_index);
  long S = 2L * q.order;
  EllipticSeriesPack pack = build_series_pack(S + 4);
  Series one = Series::constant(Rat(1), S);
  Series q2n = pack.q_of_k.truncated(S).pow(2 * n).truncated(S);
  Series q4n = (q2n * q2n).truncated(S);
  Series num, denom;
  switch (q.parity) {
    case LoopClass::Even:
      num = q4n;
      denom = one - q4n;
      break;
    case LoopClass::Odd:
      num = q2n;
      denom = one - q4n;
      break;
    default:
      num = q2n;
      denom = one - q2n;
      break;
  }
  return (num * denom.inverse() * Rat(1, n)).truncated(S);
}

Rat cluster_expectation(long n, int l, ClusterKind kind) {
  if (n == 0) throw DomainError("cluster_expectation: index must be nonzero");
  if (l < 1 || l > 400)
    throw BudgetExceeded("cluster_expectation: need 1 <= l <= 400");
  long m = std::labs(n);
  // q has u-valuation 1, so [u^l] vanishes outright when 2m > l.
  if (2 * m > l) return Rat(0);
  Series qu = nome_series_u(l + 1).truncated(l);
  Series q2m = qu.pow(2 * m).truncated(l);
  Series one = Series::constant(Rat(1), l);
  Series frac = kind == ClusterKind::Area
                    ? q2m * (one - (q2m * q2m).truncated(l)).inverse()
                    : q2m * (one + q2m).inverse();
  Rat coeff = frac.truncated(l).coeff(l);
  Rat c2l = Rat(binomial(2 * l, l) * binomial(2 * l, l));
  Rat steps = rat_pow(Rat(4), 2 * l) / c2l;
  long mult = kind == ClusterKind::Area ? 2 * l : 4 * l;
  return steps * Rat(mult, m) * coeff;
}

std::vector<ClusterAsympRow> cluster_asymptotics_diag(long n, ClusterKind kind,
                                                      int L) {
  if (L < 4 || L > 400)
    throw BudgetExceeded("cluster_asymptotics_diag: need 4 <= L <= 400");
  std::vector<ClusterAsympRow> rows;
  for (int l : {L / 2, L}) {
    double exact = to_double(cluster_expectation(n, l, kind));
    double pred;
    if (kind == ClusterKind::Area)
      pred = l / (2 * M_PI * static_cast<double>(n) * n);
    else
      pred = 2 * std::pow(M_PI, 3) * l / std::pow(std::log(l), 2);
    rows.push_back({l, exact / pred});
  }
  return rows;
}

}  // namespace winding
