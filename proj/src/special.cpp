#include "special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyqm::special {

namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's 15-term Lanczos coefficients, g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

// log Gamma for Re z >= 1/2 via the Lanczos sum.
Complex log_gamma_right(Complex z) {
  Complex sum(kLanczosCoeff[0], 0.0);
  for (int k = 1; k < 15; ++k) sum += kLanczosCoeff[k] / (z - 1.0 + double(k));
  Complex base = z + (kLanczosG - 0.5);
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(base) - base +
         std::log(sum);
}

// log sin(pi z) without overflow for large |Im z|.
Complex log_sin_pi(Complex z) {
  const Complex ipi(0.0, kPi);
  const Complex log2i = std::log(Complex(0.0, 2.0));
  if (z.imag() > 0.0) {
    // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2i)
    return -ipi * z + std::log(1.0 - std::exp(2.0 * ipi * z)) - log2i +
           Complex(0.0, kPi);
  }
  return ipi * z + std::log(1.0 - std::exp(-2.0 * ipi * z)) - log2i;
}

}  // namespace

double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // r in [-1, 1], sin(pi x) = sin(pi r)
  return std::sin(kPi * r);
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
  return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

GammaPolar gamma_abs_arg(Complex z) {
  Complex lg = log_gamma(z);
  return GammaPolar{std::exp(lg.real()), lg.imag()};
}

Complex pochhammer(Complex z, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
  if (n == 0) return Complex(1.0, 0.0);
  bool near_pole = z.imag() == 0.0 && z.real() < 0.5 &&
                   std::abs(z.real() - std::round(z.real())) < 1e-9;
  if (n <= 64 || near_pole) {
    Complex prod(1.0, 0.0);
    for (int k = 0; k < n; ++k) prod *= z + double(k);
    return prod;
  }
  return std::exp(log_gamma(z + double(n)) - log_gamma(z));
}

Complex terminating_pfq(std::span<const Complex> numerator,
                        std::span<const Complex> denominator, Complex arg) {
  // Degree = smallest non-positive-integer numerator parameter.
  int n = -1;
  for (const Complex& a : numerator) {
    if (is_nonpositive_integer(a)) {
      int cand = int(-a.real());
      if (n < 0 || cand < n) n = cand;
    }
  }
  if (n < 0)
    throw std::invalid_argument("terminating_pfq: no terminating parameter");
  for (const Complex& b : denominator) {
    if (is_nonpositive_integer(b) && -b.real() < double(n))
      throw std::domain_error("terminating_pfq: denominator pole inside sum");
  }

  // Kahan-compensated left-to-right accumulation.
  Complex sum(0.0, 0.0), comp(0.0, 0.0);
  Complex term(1.0, 0.0);
  for (int k = 0;; ++k) {
    Complex y = term - comp;
    Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (k == n) break;
    Complex ratio(1.0, 0.0);
    for (const Complex& a : numerator) ratio *= a + double(k);
    for (const Complex& b : denominator) ratio /= b + double(k);
    term *= ratio * arg / double(k + 1);
  }
  return sum;
}

Complex gauss_2f1_unit(Complex a, Complex b, Complex c) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("gauss_2f1_unit: c is a non-positive integer");
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    const Complex num[2] = {a, b};
    const Complex den[1] = {c};
    return terminating_pfq(num, den, Complex(1.0, 0.0));
  }
  Complex s = c - a - b;
  if (s.real() <= 0.0)
    throw std::domain_error("gauss_2f1_unit: series diverges, Re(c-a-b) <= 0");
  // Zeros of 1/Gamma swallow the whole expression.
  if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b))
    return Complex(0.0, 0.0);
  return std::exp(log_gamma(c) + log_gamma(s) - log_gamma(c - a) -
                  log_gamma(c - b));
}

Complex hyp2f1_series(Complex a, Complex b, Complex c, double t) {
  if (std::abs(t) > 0.9)
    throw std::invalid_argument("hyp2f1_series: |t| must be <= 0.9");
  if (is_nonpositive_integer(c))
    throw std::domain_error("hyp2f1_series: c is a non-positive integer");
  Complex sum(1.0, 0.0);
  Complex term(1.0, 0.0);
  for (int k = 0; k < 4000; ++k) {
    term *= (a + double(k)) * (b + double(k)) /
            ((c + double(k)) * double(k + 1)) * t;
    sum += term;
    if (std::abs(term) <= 1e-17 * (1.0 + std::abs(sum))) return sum;
  }
  throw std::runtime_error("hyp2f1_series: no convergence in 4000 terms");
}

double bessel_j(int order, double x) {
  if (order < 0 || x < 0.0)
    throw std::invalid_argument("bessel_j: order >= 0 and x >= 0 required");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;

  if (x <= 12.0) {
    // Ascending series; alternating but safe in double up to x ~ 12.
    double half = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= order; ++k) term *= half / double(k);
    double sum = term;
    double m = -half * half;
    for (int k = 1; k < 200; ++k) {
      term *= m / (double(k) * double(k + order));
      sum += term;
      if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
  }

  // Miller's downward recurrence with J_0 + 2 sum J_{2k} = 1 normalization.
  int start = std::max(order, int(x)) + 26 + int(0.4 * std::sqrt(x) * 4.0);
  if (start % 2) ++start;
  double jp = 0.0, j = 1e-30, target = 0.0, norm = 0.0;
  for (int k = start; k > 0; --k) {
    double jm = (2.0 * k / x) * j - jp;
    jp = j;
    j = jm;
    if (k - 1 == order) target = j;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? j : 2.0 * j;
    // Rescale to avoid overflow of the unnormalized recurrence.
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp *= 1e-250;
      norm *= 1e-250;
      target *= 1e-250;
    }
  }
  return target / norm;
}

double recip_gamma(double x) {
  if (x >= 0.5) return std::exp(-std::lgamma(x));
  // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi, entire in x.
  return sin_pi(x) * std::exp(std::lgamma(1.0 - x)) / kPi;
}

}  // namespace polyqm::special
