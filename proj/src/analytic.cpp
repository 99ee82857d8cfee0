#include "ellrmt/analytic.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace ellrmt::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(x)/x with the removable singularity handled by series.
double sinc(double x) {
  if (std::fabs(x) < 1e-4) {
    double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

// Spherical Bessel j_n(x), n >= 0, via the route that is stable there.
double sph_j(int n, double x) {
  double j0 = sinc(x);
  if (n == 0) return j0;
  double j1 = (sinc(x) - std::cos(x)) / x;
  if (n == 1) return j1;
  if (static_cast<double>(n) <= x) {
    // upward recurrence, stable in the oscillatory regime
    double jm = j0, jc = j1;
    for (int k = 1; k < n; ++k) {
      double jn = (2.0 * k + 1.0) / x * jc - jm;
      jm = jc;
      jc = jn;
    }
    return jc;
  }
  // Miller's downward recurrence.  Normalize against j0 or j1, whichever is
  // larger (either can sit at a zero of sin/cos and ruin the ratio).
  int start = n + 16 + static_cast<int>(std::ceil(1.5 * x));
  double up = 0.0, uc = 1e-280, result = 0.0, u1 = 0.0;
  for (int k = start; k >= 0; --k) {
    double um = (2.0 * k + 3.0) / x * uc - up;
    up = uc;
    uc = um;
    if (k == n) result = uc;
    if (k == 1) u1 = uc;
    // rescale to avoid overflow
    if (std::fabs(uc) > 1e240) {
      uc *= 1e-240;
      up *= 1e-240;
      u1 *= 1e-240;
      result *= 1e-240;
    }
  }
  return (std::fabs(j0) >= std::fabs(j1)) ? result * (j0 / uc)
                                          : result * (j1 / u1);
}

// Spherical Neumann y_n(x), n >= 0; upward recurrence always stable.
double sph_y(int n, double x) {
  double y0 = -std::cos(x) / x;
  if (n == 0) return y0;
  double y1 = -std::cos(x) / (x * x) - std::sin(x) / x;
  if (n == 1) return y1;
  double ym = y0, yc = y1;
  for (int k = 1; k < n; ++k) {
    double yn = (2.0 * k + 1.0) / x * yc - ym;
    ym = yc;
    yc = yn;
  }
  return yc;
}

}  // namespace

double bessel_half(int twice_nu, double x) {
  if (x <= 0.0) throw std::invalid_argument("bessel_half: requires x > 0");
  if (twice_nu % 2 == 0)
    throw std::invalid_argument("bessel_half: order must be a half-integer");
  double scale = std::sqrt(2.0 * x / kPi);
  if (twice_nu >= 1) {
    int n = (twice_nu - 1) / 2;  // nu = n + 1/2
    return scale * sph_j(n, x);
  }
  // nu = -(n + 1/2):  J_{-(n+1/2)}(x) = (-1)^{n+1} sqrt(2x/pi) y_n(x)
  int n = (-twice_nu - 1) / 2;
  double sign = (n % 2 == 0) ? -1.0 : 1.0;
  return sign * scale * sph_y(n, x);
}

double interaction_density_any(int r, double theta) {
  if (theta < 0.0) throw std::invalid_argument("interaction_density: theta >= 0");
  if (theta == 0.0) return (r == 0) ? 2.0 : 0.0;
  double u = kPi * theta;
  double ja = bessel_half(2 * r - 3, u);  // J_{r-3/2}
  double jb = bessel_half(2 * r - 1, u);  // J_{r-1/2}
  return kPi * kPi / 2.0 * theta *
         (ja * ja + jb * jb - (2.0 * r - 1.0) / u * jb * ja);
}

double interaction_density(int r, double theta) {
  if (r < 1) throw std::invalid_argument("interaction_density: requires r >= 1");
  return interaction_density_any(r, theta);
}

double so_even_density(double theta) { return 1.0 + sinc(2.0 * kPi * theta); }
double so_odd_density(double theta) { return 1.0 - sinc(2.0 * kPi * theta); }

double sine_kernel_pc(double x) {
  if (x < 0.0) throw std::invalid_argument("sine_kernel_pc: x >= 0");
  double s = sinc(kPi * x);
  return 1.0 - s * s;
}

namespace {
PredictionCurve tabulate(double hi, int points, const std::string& label,
                         double (*f)(double)) {
  PredictionCurve c;
  c.label = label;
  c.grid.reserve(points);
  c.values.reserve(points);
  for (int i = 0; i < points; ++i) {
    double t = hi * i / (points - 1);
    c.grid.push_back(t);
    c.values.push_back(f(t));
  }
  return c;
}
}  // namespace

PredictionCurve tabulate_interaction(int r, double hi, int points) {
  PredictionCurve c;
  c.label = "interaction r=" + std::to_string(r);
  for (int i = 0; i < points; ++i) {
    double t = hi * i / (points - 1);
    c.grid.push_back(t);
    c.values.push_back(interaction_density(r, t));
  }
  return c;
}

PredictionCurve tabulate_so_even(double hi, int points) {
  return tabulate(hi, points, "so_even", &so_even_density);
}
PredictionCurve tabulate_so_odd(double hi, int points) {
  return tabulate(hi, points, "so_odd", &so_odd_density);
}
PredictionCurve tabulate_sine_kernel_pc(double hi, int points) {
  return tabulate(hi, points, "sine_kernel_pc", &sine_kernel_pc);
}

void write_csv(const PredictionCurve& curve, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  std::fprintf(f, "bin_left,bin_right,height,stderr\n");
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    std::fprintf(f, "%.17g,%.17g,%.17g,0\n", curve.grid[i], curve.grid[i],
                 curve.values[i]);
  }
  std::fclose(f);
}

}  // namespace ellrmt::analytic
