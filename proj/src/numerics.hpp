#ifndef POLYQM_NUMERICS_HPP
#define POLYQM_NUMERICS_HPP

#include <functional>
#include <vector>

namespace polyqm::numerics {

// Half-open in the extended reals; lo/hi may be +-infinity.
struct Interval {
  double lo;
  double hi;
};

struct TridiagonalMatrix {
  std::vector<double> diag;     // N entries
  std::vector<double> offdiag;  // N-1 entries
};

struct Grid {
  std::vector<double> points;  // strictly increasing
};

// Adaptive Gauss-Kronrod (7,15) quadrature.  Infinite and semi-infinite
// domains are mapped onto finite ones (tan / log maps) before subdivision.
// The result satisfies |error| <= max(tol, tol*|result|) on the module's
// test corpus; throws std::runtime_error when the subdivision budget is
// exhausted without meeting the tolerance.
double integrate(const std::function<double(double)>& f, Interval domain,
                 double tol = 1e-10);

// All eigenvalues, ascending, by Sturm-sequence bisection.
std::vector<double> tridiagonal_eigenvalues(const TridiagonalMatrix& T);

// All eigenvalues of a dense symmetric matrix (row-major, n*n) by cyclic
// Jacobi rotations.  Throws std::invalid_argument if the asymmetry exceeds
// 1e-12 relative to the largest entry.
std::vector<double> dense_symmetric_eigenvalues(const std::vector<double>& M,
                                                int n);

// Safeguarded secant/bisection root finder.  Requires a sign change over the
// bracket (std::invalid_argument otherwise); returns a point within an
// interval of width <= tol containing the root.
double find_root(const std::function<double(double)>& f, Interval bracket,
                 double tol);

// Second derivative by the 8th-order 9-point central stencil.
double second_derivative(const std::function<double(double)>& f, double x,
                         double h);

}  // namespace polyqm::numerics

#endif
