// ensembles.hpp — eigenangle sampling for the classical compact groups and
// for the conditioned (Interaction) and block (Independent) models.
//
// The joint eigenangle density on the K free angles is
//     prod_{j<k} (cos t_j - cos t_k)^2  *  prod_j w(t_j),
// with single-angle weight w depending on the ensemble; the unitary group
// uses |e^{it_j} - e^{it_k}|^2 and no weight.  Sampling is component-wise
// Metropolis on the log density (only ratios are ever needed, so the
// normalization constant is never computed).

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ellrmt/rng.hpp"

namespace ellrmt::ensembles {

enum class Kind { Unitary, SOEven, SOOdd, Symplectic, Interaction, Independent };

const char* kind_name(Kind k);

struct EnsembleSpec {
  Kind kind = Kind::SOEven;
  int matrix_dim = 2;       // M: total eigenvalue count on the unit circle
  int forced_mult = 0;      // r: imposed/conditioned eigenvalues at angle 0
  int fe_sign = +1;         // Independent only: declared functional-equation sign
  int free_angles = 1;      // K: number of free angles in [0,pi] (or [0,2pi) unitary)
  bool has_minus_one = false;  // Interaction with M-r odd: leftover eigenvalue at pi

  static EnsembleSpec unitary(int m);
  static EnsembleSpec so_even(int m);      // m even
  static EnsembleSpec so_odd(int m);       // m odd
  static EnsembleSpec symplectic(int m);   // m even
  static EnsembleSpec interaction(int m, int r);
  // Total dimension m = r + base; base parity must match the declared sign:
  // the block determinant is +1, so sign = (-1)^m.
  static EnsembleSpec independent(int m, int r, int sign);

  // Matrix size matched to a family at discriminant scale X: round(log X),
  // adjusted by at most one to reach a dimension consistent with the kind.
  static int matrix_size_for_scale(double x);

  // Base ensemble an Independent spec delegates to.
  EnsembleSpec independent_base() const;
};

struct EigenangleSample {
  std::vector<double> angles;   // sorted ascending, free angles only
  int forced_zero_mult = 0;     // eigenvalues at angle 0 (excluded from angles)
  bool has_minus_one = false;   // deterministic eigenvalue at angle pi
  EnsembleSpec spec;
};

struct McmcParams {
  std::int64_t burn_in = 0;   // component updates before the first draw
  std::int64_t thinning = 1;  // component updates between draws
  double proposal_width = 0.5;
  std::uint64_t seed = 1;

  static McmcParams defaults_for(const EnsembleSpec& spec, std::uint64_t seed);
  void validate() const;
};

// Unnormalized log joint density of the free angles.  Coincident angles give
// -infinity (a valid value, not an error).
double weyl_log_density(const EnsembleSpec& spec, std::span<const double> angles);

// Stateful chain: one Metropolis chain positioned after burn-in; next()
// advances by the thinning stride and emits a draw.
class Chain {
 public:
  Chain(const EnsembleSpec& spec, const McmcParams& mcmc);
  EigenangleSample next();
  double acceptance_rate() const;

 private:
  void update_component(int i);
  double log_weight(double t) const;

  EnsembleSpec spec_;
  McmcParams mcmc_;
  Rng rng_;
  std::vector<double> state_;
  double domain_hi_;
  std::int64_t proposed_ = 0, accepted_ = 0;
};

// One draw after burn-in (convenience wrapper around Chain).
EigenangleSample sample_angles(const EnsembleSpec& spec, const McmcParams& mcmc);

// Independent Model: draw the SO(M-r) base and attach the r imposed zeros.
EigenangleSample sample_independent(const EnsembleSpec& spec, const McmcParams& mcmc);

// n draws split across n_chains deterministic substreams of master_seed;
// chains run in parallel over n_threads, output order fixed by chain index.
std::vector<EigenangleSample> sample_many(const EnsembleSpec& spec,
                                          std::int64_t n, int n_chains,
                                          std::uint64_t master_seed,
                                          int n_threads,
                                          const McmcParams* base = nullptr);

// Deterministic tensor-grid quadrature of E[observable] under the normalized
// Weyl density.  Exact-at-tolerance only for K <= 2; absolute error <= 1e-6.
double oracle_expectation(const EnsembleSpec& spec,
                          const std::function<double(std::span<const double>)>& obs);

}  // namespace ellrmt::ensembles
