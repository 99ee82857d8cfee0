// charpoly.hpp — characteristic polynomials of sampled eigenangle
// configurations, kept in factored (angle) form throughout.
//
// Lambda(z) = prod over all eigenvalues (1 - z e^{-i theta}); for the
// non-unitary kinds the conjugate pair at angle t contributes the real
// quadratic 1 - 2 z cos t + z^2, the forced eigenvalues at angle 0 give
// (1 - z)^m, and a leftover eigenvalue at pi gives (1 + z).

#pragma once

#include <complex>
#include <vector>

#include "ellrmt/ensembles.hpp"

namespace ellrmt::charpoly {

struct CharPoly {
  std::vector<double> angles;    // free angles
  int forced_mult = 0;           // multiplicity of the eigenvalue at angle 0
  bool has_minus_one = false;    // eigenvalue at angle pi
  bool unitary = false;          // angles are the full spectrum, no pairing
  int total_degree = 0;

  explicit CharPoly(const ensembles::EigenangleSample& s);
};

std::complex<double> eval(const CharPoly& cp, std::complex<double> z);

// Sign eps = (-1)^N det(A) of Lambda(z) = eps z^N Lambda_{A*}(1/z).
std::complex<double> functional_equation_sign(const CharPoly& cp);

// |Lambda(z) - eps z^N conj(Lambda(1/conj(z)))|; z = 0 is an input error.
double functional_equation_residual(const CharPoly& cp, std::complex<double> z);

// N, the degree of z^N in the functional equation.
int conductor(const CharPoly& cp);

// k-th derivative of Lambda at z = 1 (signed), by exact product-rule
// accumulation of the Taylor coefficients of the factors at z = 1.
double critical_derivative(const CharPoly& cp, int k);

// Zeros of Lambda inside |z| < rho counted by the argument principle
// (trapezoid winding integral on the circle of radius rho > 1).
int zero_count_argument_principle(const CharPoly& cp, double rho = 2.0,
                                  int nodes = 4096);

}  // namespace ellrmt::charpoly
