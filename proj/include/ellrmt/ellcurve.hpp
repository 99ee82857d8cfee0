// ellcurve.hpp — elliptic curve arithmetic for curves y^2 = x^3 + a x + b:
// discriminants, point counting, reduction types and conductors (Tate),
// root numbers for semistable curves, Dirichlet coefficients, gamma-factor
// data with the refined conductor, and family enumeration.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellrmt::ellcurve {

using i64 = std::int64_t;

struct Curve {
  i64 a = 0;
  i64 b = 0;
};

// -16 (4a^3 + 27b^2); throws on a singular pair.
i64 discriminant(const Curve& c);

enum class Reduction { Good, MultSplit, MultNonsplit, Additive };

// General integral Weierstrass model [a1,a2,a3,a4,a6].
struct Model {
  i64 a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  i64 b2() const;
  i64 b4() const;
  i64 b6() const;
  i64 b8() const;
  i64 c4() const;
  i64 c6() const;
  i64 disc() const;
};

// Globally minimal model via Laska-Kraus-Connell from (c4, c6).
Model minimal_model(const Curve& c);

struct LocalData {
  Reduction type = Reduction::Good;
  int f = 0;              // conductor exponent
  int kodaira_n = 0;      // n for I_n / I_n*, 0 otherwise
  std::string kodaira;    // "I0", "In", "II", ..., "In*", ..., "II*"
};

// Tate's algorithm at p on a p-minimal model (full flow for p in {2,3},
// (ord Delta, ord c4) shortcut for p >= 5).
LocalData tate_local(const Model& m, i64 p);

Reduction reduction_type(const Curve& c, i64 p);

// prod p^{f_p} over p | Delta_min.
i64 conductor(const Curve& c);

// a_p at a good prime: -sum_x legendre(x^3+ax+b, p) for p >= 5, direct
// affine point counts for p in {2,3} (on the minimal model).
int ap_good(const Curve& c, i64 p);

// Brute-force oracle: a_p by enumerating (x, y) pairs.  Test aid.
int ap_naive(const Curve& c, i64 p);

// Closed-form root number for semistable curves: w = -prod(-a_p) over the
// multiplicative primes.  Throws unsupported_reduction if additive primes
// are present.
struct unsupported_reduction : std::runtime_error {
  using std::runtime_error::runtime_error;
};
int root_number(const Curve& c);

std::vector<i64> dirichlet_coefficients(const Curve& c, i64 cutoff);

struct GammaFactor {
  double q = 0.0;                       // Q in the P(s) Q^s prod Gamma(s/2+mu) form
  std::vector<std::complex<double>> mu; // {1/4, 3/4} for elliptic curves
  int degree = 2;
  // P is identically 1 for elliptic curves
};

struct LData {
  Curve curve;
  i64 conductor = 0;
  int root_number = 0;           // 0 = undetermined (additive, no fallback yet)
  bool semistable = false;
  std::vector<i64> an;           // a_1..a_cutoff
  GammaFactor gamma;
  double refined_conductor = 0.0;  // c(L) = |X'(1/2)|
};

GammaFactor gamma_factor(i64 conductor);

// |X'(1/2)| by central differences with step refinement (relative error
// <= 1e-8); closed form exists and is cross-checked in tests.
double refined_conductor(i64 conductor);
double refined_conductor_of_q(double q_analytic);  // from Q = sqrt(N)/(2 pi)

// Assembles conductor, reduction data, root number (when semistable),
// coefficients, gamma data and c(L).
LData build_ldata(const Curve& c, i64 coefficient_cutoff);

// Families.  F1: |a| <= X^{1/3}, |b| <= X^{1/2}.  F2: E_{a,b^2} with
// b in [1, X^{1/4}] (b = 0 gives a torsion marked point and -b duplicates
// +b, so both are excluded).  F4: E_{a(t),b(t)} for t = 0,1,2,... within
// the F1 bounds.  Singular pairs are skipped.
std::vector<Curve> family_f1(double x);
std::vector<Curve> family_f2(double x);
std::vector<Curve> family_f4(const std::vector<i64>& a_poly,
                             const std::vector<i64>& b_poly, double x);

struct SignPartition {
  std::vector<Curve> plus;
  std::vector<Curve> minus;
  std::vector<Curve> undetermined;  // additive curves without a numeric sign
};
SignPartition partition_by_sign(const std::vector<Curve>& family);

void write_csv(const std::vector<LData>& rows, const std::string& path);

}  // namespace ellrmt::ellcurve
