#include "ellrmt/charpoly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ellrmt::charpoly {

namespace {
constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;
}  // namespace

CharPoly::CharPoly(const ensembles::EigenangleSample& s)
    : angles(s.angles),
      forced_mult(s.forced_zero_mult),
      has_minus_one(s.has_minus_one),
      unitary(s.spec.kind == ensembles::Kind::Unitary) {
  if (unitary) {
    total_degree = static_cast<int>(angles.size());
  } else {
    total_degree = forced_mult + 2 * static_cast<int>(angles.size()) +
                   (has_minus_one ? 1 : 0);
  }
}

cplx eval(const CharPoly& cp, cplx z) {
  cplx prod{1.0, 0.0};
  if (cp.unitary) {
    for (double t : cp.angles) prod *= 1.0 - z * std::polar(1.0, -t);
    return prod;
  }
  for (double t : cp.angles) prod *= 1.0 - 2.0 * std::cos(t) * z + z * z;
  for (int i = 0; i < cp.forced_mult; ++i) prod *= 1.0 - z;
  if (cp.has_minus_one) prod *= 1.0 + z;
  return prod;
}

cplx functional_equation_sign(const CharPoly& cp) {
  // det(A) = product of eigenvalues; conjugate pairs contribute 1.
  cplx det{1.0, 0.0};
  if (cp.unitary) {
    double arg = 0.0;
    for (double t : cp.angles) arg += t;
    det = std::polar(1.0, arg);
  } else if (cp.has_minus_one) {
    det = -1.0;
  }
  double par = (cp.total_degree % 2 == 0) ? 1.0 : -1.0;
  return par * det;
}

double functional_equation_residual(const CharPoly& cp, cplx z) {
  if (z == cplx{0.0, 0.0})
    throw std::invalid_argument("functional_equation_residual: z must be nonzero");
  cplx eps = functional_equation_sign(cp);
  cplx lhs = eval(cp, z);
  cplx mirror = std::conj(eval(cp, 1.0 / std::conj(z)));
  cplx zn = std::pow(z, cp.total_degree);
  return std::abs(lhs - eps * zn * mirror);
}

int conductor(const CharPoly& cp) { return cp.total_degree; }

double critical_derivative(const CharPoly& cp, int k) {
  if (k < 0) throw std::invalid_argument("critical_derivative: k >= 0");
  if (cp.unitary)
    throw std::invalid_argument(
        "critical_derivative: defined for the real-coefficient kinds");
  // Taylor coefficients of Lambda(1+u) up to order k via truncated products.
  std::vector<double> acc(k + 1, 0.0);
  acc[0] = 1.0;
  auto mul = [&](const double* f, int deg) {
    std::vector<double> out(k + 1, 0.0);
    for (int i = 0; i <= k; ++i) {
      if (acc[i] == 0.0) continue;
      for (int j = 0; j <= deg && i + j <= k; ++j) out[i + j] += acc[i] * f[j];
    }
    acc.swap(out);
  };
  for (double t : cp.angles) {
    // 1 - 2 z cos t + z^2 at z = 1+u:  (2-2cos t) + (2-2cos t) u + u^2
    double a = 2.0 - 2.0 * std::cos(t);
    double f[3] = {a, a, 1.0};
    mul(f, 2);
  }
  for (int i = 0; i < cp.forced_mult; ++i) {
    double f[2] = {0.0, -1.0};  // (1-z) = -u
    mul(f, 1);
  }
  if (cp.has_minus_one) {
    double f[2] = {2.0, 1.0};  // (1+z) = 2 + u
    mul(f, 1);
  }
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  return acc[k] * fact;
}

int zero_count_argument_principle(const CharPoly& cp, double rho, int nodes) {
  if (rho <= 1.0) throw std::invalid_argument("argument principle: rho > 1");
  // winding number of Lambda on |z| = rho via unwrapped phase increments
  double total = 0.0;
  cplx prev = eval(cp, cplx{rho, 0.0});
  for (int i = 1; i <= nodes; ++i) {
    double phi = 2.0 * kPi * i / nodes;
    cplx cur = eval(cp, std::polar(rho, phi));
    double d = std::arg(cur / prev);
    total += d;
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

}  // namespace ellrmt::charpoly
