#include "energy_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "numerics.hpp"
#include "special.hpp"

namespace polyqm::energy_poly {

namespace {

constexpr double kPi = std::numbers::pi;
using special::log_gamma;

bool is_real(Complex z) { return z.imag() == 0.0; }

double real_checked(Complex v, const char* what) {
  if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v)))
    throw std::runtime_error(std::string(what) +
                             ": imaginary residue exceeds tolerance");
  return v.real();
}

}  // namespace

void MeixnerPollaczekParams::validate() const {
  if (!(mu > 0.0))
    throw std::invalid_argument("MeixnerPollaczek: mu must be positive");
  if (!(theta > 1e-8 && theta < kPi - 1e-8))
    throw std::invalid_argument(
        "MeixnerPollaczek: theta must lie strictly inside (0, pi)");
}

ContinuousDualHahnParams::ContinuousDualHahnParams(double mu_, Complex a_,
                                                   Complex b_)
    : mu(mu_), a(a_), b(b_) {
  validate();
}

ContinuousDualHahnParams ContinuousDualHahnParams::canonicalize(Complex p1,
                                                                Complex p2,
                                                                Complex p3) {
  // The family is symmetric in its three parameters; put a conjugate pair
  // (if any) into the (a, b) slots so mu stays real.
  Complex ps[3] = {p1, p2, p3};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!is_real(ps[i]) && std::abs(ps[j] - std::conj(ps[i])) <
                                 1e-14 * (1.0 + std::abs(ps[i]))) {
        int k = 3 - i - j;
        return ContinuousDualHahnParams(ps[k].real(), ps[i], ps[j]);
      }
    }
  }
  return ContinuousDualHahnParams(p1.real(), p2, p3);
}

void ContinuousDualHahnParams::validate() const {
  bool pair = !is_real(a);
  if (pair) {
    if (std::abs(b - std::conj(a)) > 1e-12 * (1.0 + std::abs(a)))
      throw std::invalid_argument(
          "ContinuousDualHahn: complex parameters must form a conjugate pair");
    if (!(a.real() > 0.0))
      throw std::invalid_argument(
          "ContinuousDualHahn: conjugate pair needs positive real parts");
  }
  if (mu > 0.0) return;  // a or b may still be negative real (finite ladders)
  // mu < 0: mixed regime; mu+a and mu+b must be positive or a conjugate
  // pair with positive real parts.
  if (!((a + mu).real() > 0.0 && (b + mu).real() > 0.0))
    throw std::invalid_argument(
        "ContinuousDualHahn: mu < 0 requires Re(mu+a), Re(mu+b) > 0");
}

// ---------------------------------------------------------------------------
// Recursions

std::pair<double, double> recursion_coefficients(const PolyParams& params,
                                                 int n) {
  if (std::holds_alternative<MeixnerPollaczekParams>(params)) {
    const auto& p = std::get<MeixnerPollaczekParams>(params);
    double an = -(n + p.mu) * std::cos(p.theta);
    double bn = 0.5 * std::sqrt(double(n + 1) * (n + 2.0 * p.mu));
    return {an, bn};
  }
  const auto& p = std::get<ContinuousDualHahnParams>(params);
  Complex apb = p.a + p.b;
  Complex an = (double(n) + p.mu + p.a) * (double(n) + p.mu + p.b) +
               double(n) * (double(n) + apb - 1.0) - p.mu * p.mu;
  Complex bsq = double(n + 1) * (double(n) + apb) *
                (double(n) + p.mu + p.a) * (double(n) + p.mu + p.b);
  double bsqr = real_checked(bsq, "cdh recursion");
  if (!(bsqr > 0.0))
    throw std::invalid_argument(
        "ContinuousDualHahn: recursion coefficient degenerates for these "
        "parameters");
  return {real_checked(an, "cdh recursion"), -std::sqrt(bsqr)};
}

std::vector<double> eval_recursion(const PolyParams& params, double y,
                                   int n_max) {
  if (n_max < 0) throw std::invalid_argument("eval_recursion: n_max >= 0");
  std::visit([](const auto& p) { p.validate(); }, params);

  double w;  // recursion variable
  if (std::holds_alternative<MeixnerPollaczekParams>(params))
    w = y * std::sin(std::get<MeixnerPollaczekParams>(params).theta);
  else
    w = y * y;

  std::vector<double> P(n_max + 1);
  P[0] = 1.0;
  double prev = 0.0;
  for (int n = 0; n < n_max; ++n) {
    auto [an, bn] = recursion_coefficients(params, n);
    double bprev =
        (n == 0) ? 0.0 : recursion_coefficients(params, n - 1).second;
    double next = ((w - an) * P[n] - bprev * prev) / bn;
    prev = P[n];
    P[n + 1] = next;
  }
  return P;
}

std::vector<double> second_kind(const PolyParams& params, double y,
                                int n_max) {
  if (n_max < 0) throw std::invalid_argument("second_kind: n_max >= 0");
  std::visit([](const auto& p) { p.validate(); }, params);
  double w;
  if (std::holds_alternative<MeixnerPollaczekParams>(params))
    w = y * std::sin(std::get<MeixnerPollaczekParams>(params).theta);
  else
    w = y * y;

  // Associated polynomials: same recurrence, coefficient index n -> n+1.
  std::vector<double> Q(n_max + 1);
  Q[0] = 1.0;
  double prev = 0.0;
  for (int n = 0; n < n_max; ++n) {
    auto [an, bn] = recursion_coefficients(params, n + 1);
    double bprev = (n == 0) ? 0.0 : recursion_coefficients(params, n).second;
    double next = ((w - an) * Q[n] - bprev * prev) / bn;
    prev = Q[n];
    Q[n + 1] = next;
  }
  return Q;
}

// ---------------------------------------------------------------------------
// Hypergeometric oracles

double eval_hypergeometric(const PolyParams& params, double y, int n) {
  if (n < 0) throw std::invalid_argument("eval_hypergeometric: n >= 0");
  std::visit([](const auto& p) { p.validate(); }, params);

  if (std::holds_alternative<MeixnerPollaczekParams>(params)) {
    const auto& p = std::get<MeixnerPollaczekParams>(params);
    Complex iy(0.0, y);
    Complex pref = std::exp(0.5 * (log_gamma(Complex(n + 2.0 * p.mu)) -
                                   log_gamma(Complex(2.0 * p.mu)) -
                                   log_gamma(Complex(n + 1.0))));
    Complex phase = std::exp(Complex(0.0, n * p.theta));
    Complex arg = 1.0 - std::exp(Complex(0.0, -2.0 * p.theta));
    const Complex num[2] = {Complex(-n), Complex(p.mu) + iy};
    const Complex den[1] = {Complex(2.0 * p.mu)};
    Complex v = pref * phase * special::terminating_pfq(num, den, arg);
    return real_checked(v, "eval_hypergeometric(MP)");
  }

  const auto& p = std::get<ContinuousDualHahnParams>(params);
  Complex iy(0.0, y);
  Complex pref2 = special::pochhammer(p.mu + p.a, n) *
                  special::pochhammer(p.mu + p.b, n) /
                  (special::pochhammer(Complex(1.0), n) *
                   special::pochhammer(p.a + p.b, n));
  double prefr = real_checked(pref2, "eval_hypergeometric(CDH) prefactor");
  const Complex num[3] = {Complex(-n), p.mu + iy, p.mu - iy};
  const Complex den[2] = {p.mu + p.a, p.mu + p.b};
  Complex f = special::terminating_pfq(num, den, Complex(1.0));
  return std::sqrt(prefr) * real_checked(f, "eval_hypergeometric(CDH)");
}

double cdh_at_discrete_point(const ContinuousDualHahnParams& p, int n,
                             int m) {
  // iy -> -(m + mu): the numerator pair (mu+iy, mu-iy) becomes (-m, 2mu+m).
  Complex pref = special::pochhammer(p.mu + p.a, n) *
                 special::pochhammer(p.mu + p.b, n) /
                 (special::pochhammer(Complex(1.0), n) *
                  special::pochhammer(p.a + p.b, n));
  double prefr = real_checked(pref, "cdh_at_discrete_point prefactor");
  const Complex num[3] = {Complex(-n), Complex(-m), Complex(2.0 * p.mu + m)};
  const Complex den[2] = {p.mu + p.a, p.mu + p.b};
  Complex f = special::terminating_pfq(num, den, Complex(1.0));
  return std::sqrt(prefr) * real_checked(f, "cdh_at_discrete_point");
}

// ---------------------------------------------------------------------------
// Weights

double weight(const PolyParams& params, double y) {
  std::visit([](const auto& p) { p.validate(); }, params);
  if (std::holds_alternative<MeixnerPollaczekParams>(params)) {
    const auto& p = std::get<MeixnerPollaczekParams>(params);
    double lg_abs2 = 2.0 * log_gamma(Complex(p.mu, y)).real();
    return std::exp(2.0 * p.mu * std::log(2.0 * std::sin(p.theta)) +
                    (2.0 * p.theta - kPi) * y + lg_abs2 -
                    std::lgamma(2.0 * p.mu)) /
           (2.0 * kPi);
  }
  const auto& p = std::get<ContinuousDualHahnParams>(params);
  if (!(y > 0.0))
    throw std::domain_error("weight: dual Hahn support is y > 0");
  Complex iy(0.0, y);
  double num = 2.0 * (log_gamma(p.mu + iy).real() + log_gamma(p.a + iy).real() +
                      log_gamma(p.b + iy).real() - log_gamma(2.0 * iy).real());
  Complex den = log_gamma(p.mu + p.a) + log_gamma(p.mu + p.b) +
                log_gamma(p.a + p.b);
  return std::exp(num - real_checked(den, "weight(CDH)")) / (2.0 * kPi);
}

// ---------------------------------------------------------------------------
// Generating functions

GeneratingCheck generating_check(const PolyParams& params, double y, double t,
                                 int N) {
  if (std::abs(t) > 0.9)
    throw std::invalid_argument("generating_check: |t| <= 0.9 required");
  if (N < 0) throw std::invalid_argument("generating_check: N >= 0");
  std::vector<double> P = eval_recursion(params, y, N);
  Complex iy(0.0, y);

  if (std::holds_alternative<MeixnerPollaczekParams>(params)) {
    const auto& p = std::get<MeixnerPollaczekParams>(params);
    // tilde normalization: P~_n = sqrt(Gamma(n+2mu)/(Gamma(2mu) n!)) P_n
    double partial = 0.0, ratio = 1.0, tn = 1.0;
    for (int n = 0; n <= N; ++n) {
      partial += ratio * P[n] * tn;
      ratio *= std::sqrt((n + 2.0 * p.mu) / double(n + 1));
      tn *= t;
    }
    Complex eip = std::exp(Complex(0.0, p.theta));
    Complex closed = std::exp((-p.mu + iy) * std::log(1.0 - t * eip) +
                              (-p.mu - iy) * std::log(1.0 - t / eip));
    return {partial, real_checked(closed, "generating_check(MP)")};
  }

  const auto& p = std::get<ContinuousDualHahnParams>(params);
  double partial = 0.0, ratio = 1.0, tn = 1.0;
  for (int n = 0; n <= N; ++n) {
    partial += ratio * P[n] * tn;
    Complex step = (p.mu + p.a + double(n)) * (p.mu + p.b + double(n)) /
                   (double(n + 1) * (p.a + p.b + double(n)));
    ratio *= std::sqrt(real_checked(step, "generating_check(CDH) ratio"));
    tn *= t;
  }
  Complex closed = std::exp((-p.mu + iy) * std::log(Complex(1.0 - t))) *
                   special::hyp2f1_series(p.a + iy, p.b + iy, p.a + p.b, t);
  return {partial, real_checked(closed, "generating_check(CDH)")};
}

// ---------------------------------------------------------------------------
// Darboux asymptotics

double asymptotic_amplitude(const PolyParams& params, double y) {
  if (std::holds_alternative<MeixnerPollaczekParams>(params)) {
    const auto& p = std::get<MeixnerPollaczekParams>(params);
    double lga = log_gamma(Complex(p.mu, y)).real();
    return 2.0 * std::exp((kPi / 2.0 - p.theta) * y - lga -
                          p.mu * std::log(2.0 * std::sin(p.theta)));
  }
  const auto& p = std::get<ContinuousDualHahnParams>(params);
  Complex iy(0.0, y);
  Complex lgs = log_gamma(p.mu + p.a) + log_gamma(p.mu + p.b) +
                log_gamma(p.a + p.b);
  double half = 0.5 * real_checked(lgs, "asymptotic_amplitude(CDH)");
  return 2.0 * std::exp(half + log_gamma(2.0 * iy).real() -
                        log_gamma(p.a + iy).real() -
                        log_gamma(p.b + iy).real() -
                        log_gamma(p.mu + iy).real());
}

double asymptotic_phase(const PolyParams& params, double y, long n) {
  Complex iy(0.0, y);
  if (std::holds_alternative<MeixnerPollaczekParams>(params)) {
    const auto& p = std::get<MeixnerPollaczekParams>(params);
    double gamma_arg = log_gamma(Complex(p.mu, y)).imag();
    return n * p.theta + gamma_arg + p.mu * (p.theta - kPi / 2.0) -
           y * std::log(2.0 * n * std::sin(p.theta));
  }
  const auto& p = std::get<ContinuousDualHahnParams>(params);
  double gamma_arg = (log_gamma(p.mu + iy) + log_gamma(p.a + iy) +
                      log_gamma(p.b + iy) - log_gamma(2.0 * iy))
                         .imag();
  return y * std::log(double(n)) - gamma_arg;
}

double asymptotic_approximant(const PolyParams& params, double y, long n) {
  if (n < 16)
    throw std::invalid_argument("asymptotic_approximant: n >= 16 required");
  return asymptotic_amplitude(params, y) / std::sqrt(double(n)) *
         std::cos(asymptotic_phase(params, y, n));
}

double asymptotic_weighted(const PolyParams& params, double y, long n) {
  if (n < 16)
    throw std::invalid_argument("asymptotic_weighted: n >= 16 required");
  return std::sqrt(2.0 / (n * kPi)) * std::cos(asymptotic_phase(params, y, n));
}

// ---------------------------------------------------------------------------
// Discrete families

DiscreteValue discrete_meixner(const DiscreteMeixnerParams& p, int n, int m) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0 && p.beta < 1.0))
    throw std::invalid_argument("discrete_meixner: alpha > 0, beta in (0,1)");
  if (n < 0 || m < 0)
    throw std::invalid_argument("discrete_meixner: n, m >= 0");
  Complex v = discrete_meixner_value(Complex(p.alpha), p.beta, n, m);
  double w = std::exp(p.alpha * std::log1p(-p.beta) +
                      std::lgamma(p.alpha + m) - std::lgamma(p.alpha) -
                      std::lgamma(m + 1.0) + m * std::log(p.beta));
  return {real_checked(v, "discrete_meixner"), w};
}

Complex discrete_meixner_value(Complex alpha, double beta, int n, int m) {
  // sqrt((alpha)_n beta^n / n!) built factor by factor: each Re(alpha+k) > 0
  // for the parameter sets used here, so the principal square roots compose
  // coherently.
  Complex pref(1.0, 0.0);
  for (int k = 0; k < n; ++k)
    pref *= std::sqrt((alpha + double(k)) * beta / double(k + 1));
  const Complex num[2] = {Complex(-n), Complex(-m)};
  const Complex den[1] = {alpha};
  return pref *
         special::terminating_pfq(num, den, Complex(1.0 - 1.0 / beta));
}

namespace {

double dual_hahn_raw_weight(const DiscreteDualHahnParams& p, int m) {
  // N! (2m+alpha+beta+1) (alpha+1)_m (N-m+1)_m /
  //   ((m+alpha+beta+1)_{N+1} (beta+1)_m m!)
  auto poch = [](double z, int k) {
    double prod = 1.0;
    for (int i = 0; i < k; ++i) prod *= z + i;
    return prod;
  };
  double num = std::tgamma(p.N + 1.0) * (2.0 * m + p.alpha + p.beta + 1.0) *
               poch(p.alpha + 1.0, m) * poch(double(p.N - m + 1), m);
  double den = poch(m + p.alpha + p.beta + 1.0, p.N + 1) *
               poch(p.beta + 1.0, m) * std::tgamma(m + 1.0);
  return num / den;
}

}  // namespace

DiscreteValue discrete_dual_hahn(const DiscreteDualHahnParams& p, int n,
                                 int m) {
  if (p.N < 0) throw std::invalid_argument("discrete_dual_hahn: N >= 0");
  if (n < 0 || n > p.N || m < 0 || m > p.N)
    throw std::out_of_range("discrete_dual_hahn: indices must lie in [0, N]");
  bool branch_std = p.alpha > -1.0 && p.beta > -1.0;
  bool branch_neg = p.alpha < -double(p.N) && p.beta < -double(p.N);
  if (!branch_std && !branch_neg)
    throw std::invalid_argument(
        "discrete_dual_hahn: need alpha, beta > -1 or alpha, beta < -N");

  // In the alpha, beta < -N branch the textbook weight formula carries a
  // spurious constant (of either sign); normalizing by the weight-row sum
  // restores both orthogonality relations with positive weights.
  double raw_sum = 0.0;
  for (int j = 0; j <= p.N; ++j) raw_sum += dual_hahn_raw_weight(p, j);
  double w = dual_hahn_raw_weight(p, m) / raw_sum;

  auto poch = [](double z, int k) {
    double prod = 1.0;
    for (int i = 0; i < k; ++i) prod *= z + i;
    return prod;
  };
  double norm2 = poch(p.alpha + 1.0, n) * poch(p.beta + 1.0, p.N - n) /
                 (std::tgamma(n + 1.0) * std::tgamma(p.N - n + 1.0));
  norm2 = std::abs(norm2) * std::abs(raw_sum);
  const Complex num[3] = {Complex(-n), Complex(-m),
                          Complex(m + p.alpha + p.beta + 1.0)};
  const Complex den[2] = {Complex(p.alpha + 1.0), Complex(double(-p.N))};
  double f =
      special::terminating_pfq(num, den, Complex(1.0)).real();
  return {std::sqrt(norm2) * f, w};
}

double generalized_orthogonality(const ContinuousDualHahnParams& p, int n,
                                 int n_prime) {
  if (!(p.mu < 0.0))
    throw std::invalid_argument(
        "generalized_orthogonality: requires the mixed regime mu < 0");
  p.validate();
  PolyParams params = p;
  int lo = std::min(n, n_prime), hi = std::max(n, n_prime);
  auto integrand = [&](double y) {
    std::vector<double> S = eval_recursion(params, y, hi);
    return weight(params, y) * S[lo] * S[hi];
  };
  double cont = numerics::integrate(
      integrand, {0.0, std::numeric_limits<double>::infinity()}, 1e-9);

  int N = int(std::floor(-p.mu));
  Complex lg_factor = log_gamma(p.a - p.mu) + log_gamma(p.b - p.mu) -
                      log_gamma(p.a + p.b) - log_gamma(Complex(1.0 - 2.0 * p.mu));
  double factor = -2.0 * std::exp(real_checked(lg_factor,
                                               "generalized_orthogonality"));
  double corr = 0.0;
  for (int m = 0; m <= N; ++m) {
    Complex ratio = special::pochhammer(p.mu + p.a, m) *
                    special::pochhammer(p.mu + p.b, m) *
                    special::pochhammer(Complex(2.0 * p.mu), m) /
                    (special::pochhammer(p.mu - p.a + 1.0, m) *
                     special::pochhammer(p.mu - p.b + 1.0, m) *
                     special::pochhammer(Complex(1.0), m));
    double sign = (m % 2 == 0) ? 1.0 : -1.0;
    corr += sign * (m + p.mu) *
            real_checked(ratio, "generalized_orthogonality ratio") *
            cdh_at_discrete_point(p, n, m) *
            cdh_at_discrete_point(p, n_prime, m);
  }
  return cont + factor * corr;
}

// ---------------------------------------------------------------------------
// Jacobi-type recursions

JacobiABC jacobi_abc(double mu, double nu, int n) {
  if (!(mu > -1.0 && nu > -1.0))
    throw std::invalid_argument("jacobi_abc: mu, nu > -1 required");
  double s = mu + nu;
  double A;
  if (n == 0 && std::abs(s) < 1e-14) {
    A = (nu - mu) / (s + 2.0);  // limit of the generic expression at n = 0
  } else {
    A = (nu - mu) * (nu + mu) / ((2.0 * n + s) * (2.0 * n + s + 2.0));
  }
  double B = 2.0 * (n + mu + 1.0) * (n + nu + 1.0) /
             ((2.0 * n + s + 2.0) * (2.0 * n + s + 3.0));
  double C = 2.0 * (n + 1.0) * (n + s + 1.0) /
             ((2.0 * n + s + 1.0) * (2.0 * n + s + 2.0));
  return {A, B, C};
}

std::vector<double> extended_jacobi_q(const ExtendedJacobiParams& p, double y,
                                      int n_max) {
  if (n_max < 0) throw std::invalid_argument("extended_jacobi_q: n_max >= 0");
  std::vector<double> Q(n_max + 1);
  Q[0] = 1.0;
  if (n_max == 0) return Q;
  auto D = [&p](int n) { return n + (p.mu + p.nu + 1.0) / 2.0; };
  auto c0 = jacobi_abc(p.mu, p.nu, 0);
  Q[1] = (y - p.lambda * D(0) * D(0) - c0.A) / c0.C;
  for (int n = 1; n < n_max; ++n) {
    auto cn = jacobi_abc(p.mu, p.nu, n);
    auto cm = jacobi_abc(p.mu, p.nu, n - 1);
    Q[n + 1] =
        ((y - p.lambda * D(n) * D(n) - cn.A) * Q[n] - cm.B * Q[n - 1]) / cn.C;
  }
  return Q;
}

std::vector<double> extended_jacobi_h(const ExtendedJacobiParams& p, double y,
                                      int n_max) {
  if (n_max < 0) throw std::invalid_argument("extended_jacobi_h: n_max >= 0");
  std::vector<double> H(n_max + 1);
  H[0] = 1.0;
  auto D = [&p](int n) { return n + (p.mu + p.nu + 1.0) / 2.0; };
  auto G = [&](int n) {
    double d = D(n) + 0.5;
    return p.lambda + d * d;
  };
  auto F = [&p](int n) {
    if (n == 0) return 0.0;  // numerator carries the factor n
    return n * (n + p.mu) / (2.0 * n + p.mu + p.nu);
  };
  for (int n = 0; n < n_max; ++n) {
    auto cn = jacobi_abc(p.mu, p.nu, n);
    double prev_term = 0.0;
    if (n > 0) {
      auto cm = jacobi_abc(p.mu, p.nu, n - 1);
      prev_term = G(n - 1) * cm.B * H[n - 1];
    }
    H[n + 1] = ((y + F(n) - G(n) * cn.A) * H[n] - prev_term) / (G(n) * cn.C);
  }
  return H;
}

}  // namespace polyqm::energy_poly
