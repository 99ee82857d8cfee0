// analytic.hpp — closed-form one-level-density predictions.
//
// Half-integer Bessel functions (trigonometric closed forms plus stable
// recurrences), the Bessel-kernel density of SO(M) conditioned on an r-fold
// eigenvalue at theta = 0, the SO(even)/SO(odd) limiting densities, and the
// sine-kernel pair correlation.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ellrmt::analytic {

// J_nu(x) for half-integer nu = n + 1/2 (n may be negative), x > 0.
// Closed forms for |nu| = 1/2, upward recurrence for negative orders
// (always stable), upward recurrence for positive orders when x >= n,
// and Miller's normalized downward recurrence otherwise.
// Relative error <= 1e-10 for x in [1e-3, 1e3], |nu| <= 21/2.
double bessel_half(int twice_nu, double x);

// One-level density of SO(M) restricted to an r-fold eigenvalue at 0:
//   (pi^2/2) theta ( J_{r-3/2}^2(pi theta) + J_{r-1/2}^2(pi theta)
//                    - (2r-1)/(pi theta) J_{r-1/2} J_{r-3/2} )
// Continuous limit 0 at theta = 0.  Requires r >= 1 for the public surface;
// interaction_density_any allows r = 0 (reduces to the SO(even) density) for
// cross-checks.
double interaction_density(int r, double theta);
double interaction_density_any(int r, double theta);

// Limiting densities 1 +- sin(2 pi theta)/(2 pi theta); values 2 and 0 at 0.
double so_even_density(double theta);
double so_odd_density(double theta);

// Sine-kernel pair correlation 1 - (sin pi x / pi x)^2, value 0 at x = 0.
double sine_kernel_pc(double x);

struct PredictionCurve {
  std::vector<double> grid;    // increasing
  std::vector<double> values;
  std::string label;           // model identifier, e.g. "interaction r=3"
};

// Tabulate one of the named densities on a uniform grid of [0, hi].
PredictionCurve tabulate_interaction(int r, double hi, int points);
PredictionCurve tabulate_so_even(double hi, int points);
PredictionCurve tabulate_so_odd(double hi, int points);
PredictionCurve tabulate_sine_kernel_pc(double hi, int points);

// CSV with the DensityTable schema (stderr column fixed at 0).
void write_csv(const PredictionCurve& curve, const std::string& path);

}  // namespace ellrmt::analytic
