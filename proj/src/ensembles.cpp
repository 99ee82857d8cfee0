#include "ellrmt/ensembles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace ellrmt::ensembles {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Unitary: return "unitary";
    case Kind::SOEven: return "so_even";
    case Kind::SOOdd: return "so_odd";
    case Kind::Symplectic: return "symplectic";
    case Kind::Interaction: return "interaction";
    case Kind::Independent: return "independent";
  }
  return "?";
}

EnsembleSpec EnsembleSpec::unitary(int m) {
  if (m < 1) throw std::invalid_argument("unitary: dimension must be positive");
  EnsembleSpec s;
  s.kind = Kind::Unitary;
  s.matrix_dim = m;
  s.free_angles = m;
  return s;
}

EnsembleSpec EnsembleSpec::so_even(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("so_even: dimension must be even and >= 2");
  EnsembleSpec s;
  s.kind = Kind::SOEven;
  s.matrix_dim = m;
  s.free_angles = m / 2;
  return s;
}

EnsembleSpec EnsembleSpec::so_odd(int m) {
  if (m < 3 || m % 2 != 1)
    throw std::invalid_argument("so_odd: dimension must be odd and >= 3");
  EnsembleSpec s;
  s.kind = Kind::SOOdd;
  s.matrix_dim = m;
  s.forced_mult = 1;  // SO(2N+1) always has eigenvalue +1
  s.free_angles = m / 2;
  return s;
}

EnsembleSpec EnsembleSpec::symplectic(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("symplectic: dimension must be even and >= 2");
  EnsembleSpec s;
  s.kind = Kind::Symplectic;
  s.matrix_dim = m;
  s.free_angles = m / 2;
  return s;
}

EnsembleSpec EnsembleSpec::interaction(int m, int r) {
  if (m < 2) throw std::invalid_argument("interaction: dimension too small");
  if (r < 0 || r > m - 2)
    throw std::invalid_argument("interaction: need 0 <= r <= M-2");
  EnsembleSpec s;
  s.kind = Kind::Interaction;
  s.matrix_dim = m;
  s.forced_mult = r;
  s.free_angles = (m - r) / 2;
  s.has_minus_one = ((m - r) % 2 != 0);
  if (s.free_angles < 1)
    throw std::invalid_argument("interaction: no free angles left");
  return s;
}

EnsembleSpec EnsembleSpec::independent(int m, int r, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("independent: sign must be +1 or -1");
  if (r < 0 || m - r < 2)
    throw std::invalid_argument("independent: need base dimension >= 2");
  int expected = (m % 2 == 0) ? +1 : -1;  // det of the block matrix is +1
  if (sign != expected)
    throw std::invalid_argument(
        "independent: declared sign inconsistent with the parities of r and M'");
  EnsembleSpec s;
  s.kind = Kind::Independent;
  s.matrix_dim = m;
  s.forced_mult = r;
  s.fe_sign = sign;
  s.free_angles = (m - r) / 2;
  return s;
}

int EnsembleSpec::matrix_size_for_scale(double x) {
  if (x < 3.0) throw std::invalid_argument("matrix_size_for_scale: X too small");
  return static_cast<int>(std::lround(std::log(x)));
}

EnsembleSpec EnsembleSpec::independent_base() const {
  if (kind != Kind::Independent)
    throw std::logic_error("independent_base: not an Independent spec");
  int base = matrix_dim - forced_mult;
  return (base % 2 == 0) ? so_even(base) : so_odd(base);
}

McmcParams McmcParams::defaults_for(const EnsembleSpec& spec, std::uint64_t seed) {
  McmcParams p;
  int k = spec.free_angles;
  p.burn_in = 1000LL * k;
  p.thinning = 10LL * k;
  // step comparable to the typical angle spacing keeps acceptance in 0.2-0.5
  double span = (spec.kind == Kind::Unitary) ? 2.0 * kPi : kPi;
  p.proposal_width = std::min(0.9 * kPi, span / (k + spec.forced_mult + 1));
  p.seed = seed;
  return p;
}

void McmcParams::validate() const {
  if (burn_in < 0) throw std::invalid_argument("mcmc: burn_in >= 0");
  if (thinning < 1) throw std::invalid_argument("mcmc: thinning >= 1");
  if (!(proposal_width > 0.0) || proposal_width >= kPi + 1e-12)
    throw std::invalid_argument("mcmc: proposal width in (0, pi)");
}

namespace {

// log single-angle weight for the non-unitary kinds
double log_weight_for(const EnsembleSpec& spec, double t) {
  switch (spec.kind) {
    case Kind::SOEven: return 0.0;
    case Kind::SOOdd: {
      double w = 1.0 - std::cos(t);
      return w > 0.0 ? std::log(w) : kNegInf;
    }
    case Kind::Symplectic: {
      double c = std::cos(t);
      double w = 1.0 - c * c;
      return w > 0.0 ? std::log(w) : kNegInf;
    }
    case Kind::Interaction: {
      if (spec.forced_mult == 0) return 0.0;
      double w = 1.0 - std::cos(t);
      return w > 0.0 ? spec.forced_mult * std::log(w) : kNegInf;
    }
    default:
      throw std::logic_error("log_weight_for: unsupported kind");
  }
}

void check_domain(const EnsembleSpec& spec, std::span<const double> angles) {
  if (static_cast<int>(angles.size()) != spec.free_angles)
    throw std::invalid_argument("weyl_log_density: angle count must equal K");
  // the unitary domain is periodic, so the closed endpoint is harmless
  double hi = (spec.kind == Kind::Unitary) ? 2.0 * kPi : kPi;
  for (double t : angles)
    if (!(t >= 0.0 && t <= hi))
      throw std::invalid_argument("weyl_log_density: angle out of domain");
}

}  // namespace

double weyl_log_density(const EnsembleSpec& spec, std::span<const double> angles) {
  check_domain(spec, angles);
  std::size_t k = angles.size();
  double logp = 0.0;
  if (spec.kind == Kind::Unitary) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        // |e^{ia} - e^{ib}|^2 = 2 - 2 cos(a-b)
        double d = 2.0 - 2.0 * std::cos(angles[i] - angles[j]);
        if (d <= 0.0) return kNegInf;
        logp += std::log(d);
      }
    return logp;
  }
  if (spec.kind == Kind::Independent)
    throw std::invalid_argument(
        "weyl_log_density: Independent delegates to its base ensemble");
  std::vector<double> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = std::cos(angles[i]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      double d = std::fabs(c[i] - c[j]);
      if (d == 0.0) return kNegInf;
      logp += 2.0 * std::log(d);
    }
  for (double t : angles) {
    double lw = log_weight_for(spec, t);
    if (lw == kNegInf) return kNegInf;
    logp += lw;
  }
  return logp;
}

Chain::Chain(const EnsembleSpec& spec, const McmcParams& mcmc)
    : spec_(spec), mcmc_(mcmc), rng_(mcmc.seed) {
  mcmc_.validate();
  if (spec_.kind == Kind::Independent)
    throw std::invalid_argument("Chain: use sample_independent for Independent");
  int k = spec_.free_angles;
  domain_hi_ = (spec_.kind == Kind::Unitary) ? 2.0 * kPi : kPi;
  // stratified start: distinct interior points, zero density is safe
  state_.resize(k);
  for (int i = 0; i < k; ++i)
    state_[i] = domain_hi_ * (i + 0.5 + 0.1 * rng_.uniform()) / (k + 1);
  for (std::int64_t s = 0; s < mcmc_.burn_in; ++s)
    update_component(static_cast<int>(s % k));
}

double Chain::log_weight(double t) const {
  if (spec_.kind == Kind::Unitary) return 0.0;
  return log_weight_for(spec_, t);
}

void Chain::update_component(int i) {
  ++proposed_;
  double cur = state_[i];
  double prop = cur + rng_.uniform_sym(mcmc_.proposal_width);
  if (spec_.kind == Kind::Unitary) {
    // wrap to [0, 2pi)
    prop = std::fmod(prop, 2.0 * kPi);
    if (prop < 0.0) prop += 2.0 * kPi;
  } else {
    // reflect at 0 and pi (symmetric proposal)
    if (prop < 0.0) prop = -prop;
    if (prop > kPi) prop = 2.0 * kPi - prop;
    if (prop < 0.0) prop = 0.0;  // width < pi keeps one reflection enough
  }
  // log density ratio: only terms involving component i change
  double delta = log_weight(prop) - log_weight(cur);
  if (spec_.kind == Kind::Unitary) {
    for (std::size_t j = 0; j < state_.size(); ++j) {
      if (static_cast<int>(j) == i) continue;
      double dn = 2.0 - 2.0 * std::cos(prop - state_[j]);
      double dd = 2.0 - 2.0 * std::cos(cur - state_[j]);
      if (dn <= 0.0) { delta = kNegInf; break; }
      delta += std::log(dn) - std::log(dd);
    }
  } else {
    double cp = std::cos(prop), cc = std::cos(cur);
    for (std::size_t j = 0; j < state_.size(); ++j) {
      if (static_cast<int>(j) == i) continue;
      double cj = std::cos(state_[j]);
      double dn = std::fabs(cp - cj), dd = std::fabs(cc - cj);
      if (dn == 0.0) { delta = kNegInf; break; }
      delta += 2.0 * (std::log(dn) - std::log(dd));
    }
  }
  if (delta >= 0.0 || rng_.uniform() < std::exp(delta)) {
    state_[i] = prop;
    ++accepted_;
  }
}

EigenangleSample Chain::next() {
  int k = spec_.free_angles;
  for (std::int64_t s = 0; s < mcmc_.thinning; ++s)
    update_component(static_cast<int>(s % k));
  EigenangleSample out;
  out.angles = state_;
  std::sort(out.angles.begin(), out.angles.end());
  out.forced_zero_mult = spec_.forced_mult;
  out.has_minus_one = spec_.has_minus_one;
  out.spec = spec_;
  return out;
}

double Chain::acceptance_rate() const {
  return proposed_ ? static_cast<double>(accepted_) / proposed_ : 0.0;
}

EigenangleSample sample_angles(const EnsembleSpec& spec, const McmcParams& mcmc) {
  if (spec.kind == Kind::Independent) return sample_independent(spec, mcmc);
  Chain chain(spec, mcmc);
  return chain.next();
}

EigenangleSample sample_independent(const EnsembleSpec& spec,
                                    const McmcParams& mcmc) {
  if (spec.kind != Kind::Independent)
    throw std::invalid_argument("sample_independent: spec must be Independent");
  EnsembleSpec base = spec.independent_base();
  Chain chain(base, mcmc);
  EigenangleSample s = chain.next();
  // the base's own central eigenvalue (odd base) stays counted as forced
  s.forced_zero_mult += spec.forced_mult;
  s.spec = spec;
  return s;
}

std::vector<EigenangleSample> sample_many(const EnsembleSpec& spec,
                                          std::int64_t n, int n_chains,
                                          std::uint64_t master_seed,
                                          int n_threads,
                                          const McmcParams* base) {
  if (n <= 0) throw std::invalid_argument("sample_many: n > 0");
  if (n_chains < 1) n_chains = 1;
  if (n_chains > n) n_chains = static_cast<int>(n);
  const EnsembleSpec run_spec =
      (spec.kind == Kind::Independent) ? spec.independent_base() : spec;
  McmcParams proto =
      base ? *base : McmcParams::defaults_for(run_spec, master_seed);

  std::vector<std::vector<EigenangleSample>> buckets(n_chains);
  auto run_chain = [&](int c) {
    std::int64_t quota = n / n_chains + (c < n % n_chains ? 1 : 0);
    McmcParams p = proto;
    p.seed = Rng::substream(master_seed, static_cast<std::uint64_t>(c)).next_u64();
    Chain chain(run_spec, p);
    buckets[c].reserve(quota);
    for (std::int64_t i = 0; i < quota; ++i) {
      EigenangleSample s = chain.next();
      if (spec.kind == Kind::Independent) {
        s.forced_zero_mult += spec.forced_mult;
        s.spec = spec;
      }
      buckets[c].push_back(std::move(s));
    }
  };

  if (n_threads <= 1 || n_chains == 1) {
    for (int c = 0; c < n_chains; ++c) run_chain(c);
  } else {
    std::vector<std::thread> pool;
    std::atomic_int next{0};
    int workers = std::min(n_threads, n_chains);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int c = next.fetch_add(1); c < n_chains; c = next.fetch_add(1))
          run_chain(c);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<EigenangleSample> out;
  out.reserve(n);
  for (auto& b : buckets)
    for (auto& s : b) out.push_back(std::move(s));
  return out;
}

double oracle_expectation(
    const EnsembleSpec& spec,
    const std::function<double(std::span<const double>)>& obs) {
  if (spec.kind == Kind::Independent)
    throw std::invalid_argument(
        "oracle_expectation: quadrature targets the base density; pass it directly");
  const EnsembleSpec& dens = spec;
  int k = dens.free_angles;
  if (k > 2) throw std::invalid_argument("oracle_expectation: only K <= 2");
  double hi = (dens.kind == Kind::Unitary) ? 2.0 * kPi : kPi;
  const int n = 2048;  // composite Simpson; integrand is smooth
  double h = hi / n;
  auto sw = [&](int i) {
    if (i == 0 || i == n) return 1.0;
    return (i % 2 == 1) ? 4.0 : 2.0;
  };
  double num = 0.0, den = 0.0;
  if (k == 1) {
    for (int i = 0; i <= n; ++i) {
      double t = i * h;
      double rho = std::exp(weyl_log_density(dens, std::span(&t, 1)));
      double w = sw(i) * rho;
      den += w;
      num += w * obs(std::span(&t, 1));
    }
  } else {
    for (int i = 0; i <= n; ++i) {
      double ti = i * h;
      double wi = sw(i);
      for (int j = 0; j <= n; ++j) {
        double pt[2] = {ti, j * h};
        double rho = std::exp(weyl_log_density(dens, std::span(pt, 2)));
        double w = wi * sw(j) * rho;
        den += w;
        num += w * obs(std::span(pt, 2));
      }
    }
  }
  if (den == 0.0) throw std::runtime_error("oracle_expectation: zero mass");
  return num / den;
}

}  // namespace ellrmt::ensembles
