#pragma once

// Double-precision elliptic evaluation: AGM for K/K'/E, q-series theta
// functions, Jacobi sn/cn/dn, Jacobi Zeta. Valid for 0 < k < 1 away from
// the q -> 1 degeneration (hard cutoff below).

namespace winding {

struct FloatEval {
  double k;
  double K;
  double K_prime;
  double E;
  double q;  // exp(-pi K'/K)
};

FloatEval agm_eval(double k);

double theta1(double z, double q);
double theta1_dz(double z, double q);
double theta4(double z, double q);
double theta4_dz(double z, double q);

// (sn, cn, dn)(u, k) by descending AGM.
struct SnCnDn {
  double sn, cn, dn;
};
SnCnDn jacobi_sn_cn_dn(double u, double k);

double jacobi_zeta(double u, double k);

double digamma(double x);

}  // namespace winding
