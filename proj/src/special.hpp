#ifndef POLYQM_SPECIAL_HPP
#define POLYQM_SPECIAL_HPP

#include <complex>
#include <span>
#include <vector>

// Complex-argument special functions: log-gamma, rising factorials,
// terminating hypergeometric sums, the Gauss sum at unit argument and
// integer-order Bessel functions. Everything here is pure and reentrant.

namespace polyqm::special {

using Complex = std::complex<double>;

// Magnitude/argument decomposition of Gamma(z).  The argument is the
// imaginary part of the principal-branch log-gamma, so it stays continuous
// along vertical lines Re z = const > 0 (it is not wrapped into (-pi, pi]).
struct GammaPolar {
  double magnitude;
  double argument;
};

// Principal-branch log Gamma(z).  Lanczos rational approximation of fixed
// order for Re z >= 1/2, reflection formula otherwise.  Relative accuracy
// ~1e-14 away from the poles z = 0, -1, -2, ...
// Throws std::domain_error at the poles.
Complex log_gamma(Complex z);

GammaPolar gamma_abs_arg(Complex z);

// Rising factorial (z)_n.  Direct product for n <= 64, gamma ratio above.
Complex pochhammer(Complex z, int n);

// Terminating pFq at argument `arg`: one numerator parameter must be a
// non-positive integer -n; the sum has n+1 terms, accumulated left to right
// with compensated summation.  Throws std::domain_error if a denominator
// parameter kills a term inside the summation range, std::invalid_argument
// if no numerator parameter terminates the series.
Complex terminating_pfq(std::span<const Complex> numerator,
                        std::span<const Complex> denominator, Complex arg);

// Gauss sum 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)).
// Terminating series are summed directly; otherwise Re(c-a-b) > 0 is
// required (std::domain_error on divergence).
Complex gauss_2f1_unit(Complex a, Complex b, Complex c);

// Gauss series 2F1(a,b;c;t) for real |t| <= 0.9 (used by generating-function
// closed forms).  Plain power series; throws on non-convergence.
Complex hyp2f1_series(Complex a, Complex b, Complex c, double t);

// J_n(x) for integer n >= 0, x >= 0.  Ascending series for small x,
// Miller downward recurrence otherwise.  Absolute error <= 1e-10 for
// x <= 50, n <= 20.
double bessel_j(int order, double x);

// Entire reciprocal gamma 1/Gamma(x) on the real axis; changes sign through
// each pole of Gamma, which makes it a usable bracketing function for
// amplitude-zero searches.
double recip_gamma(double x);

// sin(pi*x) evaluated without catastrophic loss near integer x.
double sin_pi(double x);

}  // namespace polyqm::special

#endif
