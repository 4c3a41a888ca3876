#ifndef POLYQM_ENERGY_POLY_HPP
#define POLYQM_ENERGY_POLY_HPP

#include <complex>
#include <utility>
#include <variant>
#include <vector>

// Orthonormal polynomials in the energy variable: the Meixner-Pollaczek and
// continuous dual Hahn families, their weights, generating functions and
// large-n cosine asymptotics, the discrete families describing bound-state
// coefficients, and the extended Jacobi-type recursions.

namespace polyqm::energy_poly {

using Complex = std::complex<double>;

struct MeixnerPollaczekParams {
  double mu;     // > 0
  double theta;  // strictly inside (0, pi)
  void validate() const;
};

// Parameters are real and positive except that (a, b) may be a complex
// conjugate pair with positive real parts; construction rotates a conjugate
// pair into the (a, b) slots so that mu is always real and the recursion
// coefficients are real.  The mixed regime mu < 0 (finitely many bound
// states on top of the continuum) is accepted when mu+a and mu+b are
// positive or a conjugate pair with positive real parts.
struct ContinuousDualHahnParams {
  double mu;
  Complex a;
  Complex b;

  ContinuousDualHahnParams(double mu_, Complex a_, Complex b_);
  static ContinuousDualHahnParams canonicalize(Complex p1, Complex p2,
                                               Complex p3);
  bool mixed_regime() const { return mu < 0.0; }
  void validate() const;
};

using PolyParams = std::variant<MeixnerPollaczekParams,
                                ContinuousDualHahnParams>;

// Orthonormal values P_0..P_nmax at the point y (for the dual Hahn family
// the polynomial argument is y^2 internally) by the symmetric three-term
// recursion, P_0 = 1.
std::vector<double> eval_recursion(const PolyParams& params, double y,
                                   int n_max);

// Same values through the terminating hypergeometric representation; the
// brute-force oracle for the recursion path.
double eval_hypergeometric(const PolyParams& params, double y, int n);

// Normalized continuous weight at y (support: all of R for
// Meixner-Pollaczek, y > 0 for continuous dual Hahn).
double weight(const PolyParams& params, double y);

struct GeneratingCheck {
  double partial_sum;
  double closed_form;
};

// Partial sum of the generating series in the tilde normalization against
// its closed form, |t| <= 0.9.
GeneratingCheck generating_check(const PolyParams& params, double y, double t,
                                 int N);

// Leading Darboux approximant to P_n(y) (unweighted), n >= 16.
double asymptotic_approximant(const PolyParams& params, double y, long n);
// The weighted form sqrt(rho) * P_n ~ sqrt(2/(n pi)) cos(...).
double asymptotic_weighted(const PolyParams& params, double y, long n);
// The n-independent amplitude prefactor of the unweighted asymptotics; its
// zeros along the continued energy axis are the bound states.
double asymptotic_amplitude(const PolyParams& params, double y);
// Phase argument of the asymptotic cosine at index n.
double asymptotic_phase(const PolyParams& params, double y, long n);

struct DiscreteMeixnerParams {
  double alpha;  // > 0
  double beta;   // in (0, 1)
};

struct DiscreteValue {
  double value;
  double weight;
};

// Orthonormal discrete Meixner value M_n^alpha(m; beta) and the weight
// rho_m = (1-beta)^alpha (alpha)_m beta^m / m!.
DiscreteValue discrete_meixner(const DiscreteMeixnerParams& p, int n, int m);

// Complex-parameter variant used for resonance eigenstates.
Complex discrete_meixner_value(Complex alpha, double beta, int n, int m);

struct DiscreteDualHahnParams {
  int N;
  double alpha;
  double beta;  // alpha, beta > -1 or alpha, beta < -N
};

// R_n^N(m; alpha, beta) and its weight, normalized so that both the primal
// (sum over m) and dual (sum over n) orthogonality relations hold with
// positive weights in either parameter branch.
DiscreteValue discrete_dual_hahn(const DiscreteDualHahnParams& p, int n,
                                 int m);

// Continuous-minus-discrete orthogonality for the mixed regime mu < 0:
// integral over y > 0 minus the finite correction sum; equals
// delta_{n,n'} within quadrature accuracy.
double generalized_orthogonality(const ContinuousDualHahnParams& p, int n,
                                 int n_prime);

// Dual Hahn value at the m-th discrete point, S_n(-(m+mu)^2; a, b).
double cdh_at_discrete_point(const ContinuousDualHahnParams& p, int n, int m);

struct JacobiABC {
  double A;
  double B;
  double C;
};

// Coefficients of the monic-form Jacobi recurrence
// y P_n = A_n P_n + B_{n-1} P_{n-1} + C_n P_{n+1}.
JacobiABC jacobi_abc(double mu, double nu, int n);

struct ExtendedJacobiParams {
  double mu;      // > -1
  double nu;      // > -1
  double lambda;
};

// The two one-parameter extensions of the Jacobi recursion whose spectra
// are of the (n + a + c/(n + a))^2 type.
std::vector<double> extended_jacobi_q(const ExtendedJacobiParams& p, double y,
                                      int n_max);
std::vector<double> extended_jacobi_h(const ExtendedJacobiParams& p, double y,
                                      int n_max);

// Polynomials of the second kind: the same recurrence with coefficient
// index shifted by one, seeded Q_0 = 1.
std::vector<double> second_kind(const PolyParams& params, double y, int n_max);

// Symmetric recursion coefficients (diagonal a_n, off-diagonal b_n) of the
// family in its natural recursion variable.
std::pair<double, double> recursion_coefficients(const PolyParams& params,
                                                 int n);

}  // namespace polyqm::energy_poly

#endif
