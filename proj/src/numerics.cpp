#include "numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace polyqm::numerics {

namespace {

// Gauss-Kronrod 7-15 pair on [-1, 1].
constexpr double kKronrodNode[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrodWeight[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussWeight[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double integral;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double kron = kKronrodWeight[7] * fc;
  double gauss = kGaussWeight[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double dx = h * kKronrodNode[i];
    double fsum = f(c - dx) + f(c + dx);
    kron += kKronrodWeight[i] * fsum;
    if (i % 2 == 1) gauss += kGaussWeight[i / 2] * fsum;
  }
  kron *= h;
  gauss *= h;
  double err = std::abs(kron - gauss);
  return PanelResult{kron, err};
}

struct Panel {
  double a, b, integral, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol) {
  std::priority_queue<Panel> queue;
  auto first = gk15(f, a, b);
  queue.push(Panel{a, b, first.integral, first.error});
  double total = first.integral, toterr = first.error;

  const int budget = 4000;
  for (int iter = 0; iter < budget; ++iter) {
    if (toterr <= std::max(tol, tol * std::abs(total))) return total;
    Panel worst = queue.top();
    queue.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval exhausted at machine precision; keep its estimate.
      total += 0.0;
      toterr -= worst.error;
      continue;
    }
    auto left = gk15(f, worst.a, mid);
    auto right = gk15(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    toterr += left.error + right.error - worst.error;
    queue.push(Panel{worst.a, mid, left.integral, left.error});
    queue.push(Panel{mid, worst.b, right.integral, right.error});
  }
  if (toterr <= std::max(tol, tol * std::abs(total)) * 10.0) return total;
  throw std::runtime_error("integrate: subdivision budget exhausted");
}

}  // namespace

double integrate(const std::function<double(double)>& f, Interval domain,
                 double tol) {
  const double inf = std::numeric_limits<double>::infinity();
  if (!(domain.lo < domain.hi))
    throw std::invalid_argument("integrate: lo < hi required");

  if (domain.lo == -inf && domain.hi == inf) {
    // y = tan(u)
    auto g = [&f](double u) {
      double cu = std::cos(u);
      return f(std::tan(u)) / (cu * cu);
    };
    return adapt(g, -std::numbers::pi / 2, std::numbers::pi / 2, tol);
  }
  if (domain.hi == inf) {
    // y = lo - ln(1-u), u in [0,1)
    double lo = domain.lo;
    auto g = [&f, lo](double u) { return f(lo - std::log1p(-u)) / (1.0 - u); };
    return adapt(g, 0.0, 1.0, tol);
  }
  if (domain.lo == -inf) {
    double hi = domain.hi;
    auto g = [&f, hi](double u) { return f(hi + std::log1p(-u)) / (1.0 - u); };
    return adapt(g, 0.0, 1.0, tol);
  }
  return adapt(f, domain.lo, domain.hi, tol);
}

namespace {

// Number of eigenvalues of (d, e) strictly below x, by Sturm sequence count.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e,
                double x) {
  int count = 0;
  double q = 1.0;
  const double tiny = 1e-300;
  for (size_t i = 0; i < d.size(); ++i) {
    double e2 = (i == 0) ? 0.0 : e[i - 1] * e[i - 1];
    q = d[i] - x - (q == 0.0 ? e2 / tiny : e2 / q);
    if (q < 0.0) ++count;
    if (q == 0.0) q = tiny;
  }
  return count;
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(const TridiagonalMatrix& T) {
  const auto& d = T.diag;
  const auto& e = T.offdiag;
  size_t n = d.size();
  if (n == 0) return {};
  if (e.size() + 1 != n)
    throw std::invalid_argument("tridiagonal_eigenvalues: size mismatch");

  // Gershgorin bounds.
  double lo = d[0], hi = d[0];
  for (size_t i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) +
               (i + 1 < n ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  double pad = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  lo -= pad;
  hi += pad;

  std::vector<double> eig(n);
  for (size_t k = 0; k < n; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (a + b);
      double width = b - a;
      if (width <= 1e-13 * std::max(1.0, std::abs(mid)) || mid == a ||
          mid == b)
        break;
      if (sturm_count(d, e, mid) > int(k))
        b = mid;
      else
        a = mid;
    }
    eig[k] = 0.5 * (a + b);
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> dense_symmetric_eigenvalues(const std::vector<double>& M,
                                                int n) {
  if (n <= 0 || M.size() != size_t(n) * size_t(n))
    throw std::invalid_argument("dense_symmetric_eigenvalues: bad dimensions");
  double scale = 0.0;
  for (double v : M) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(M[i * n + j] - M[j * n + i]) > 1e-12 * std::max(1.0, scale))
        throw std::invalid_argument(
            "dense_symmetric_eigenvalues: matrix is not symmetric");

  std::vector<double> A(M);
  auto at = [&A, n](int i, int j) -> double& { return A[i * n + j]; };

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (std::sqrt(off) <= 1e-15 * std::max(1.0, scale)) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double find_root(const std::function<double(double)>& f, Interval bracket,
                 double tol) {
  double a = bracket.lo, b = bracket.hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0))
    throw std::invalid_argument("find_root: no sign change over bracket");

  for (int it = 0; it < 300 && (b - a) > tol; ++it) {
    // Secant step, safeguarded to the inner 90% of the bracket.
    double m = (fb != fa) ? b - fb * (b - a) / (fb - fa)
                          : 0.5 * (a + b);
    double lo = a + 0.05 * (b - a), hi = b - 0.05 * (b - a);
    if (!(m > lo && m < hi)) m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  return 0.5 * (a + b);
}

double second_derivative(const std::function<double(double)>& f, double x,
                         double h) {
  if (!(h > 0.0)) throw std::invalid_argument("second_derivative: h > 0");
  static constexpr double c[4] = {8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0,
                                  -1.0 / 560.0};
  double acc = -205.0 / 72.0 * f(x);
  for (int k = 1; k <= 4; ++k)
    acc += c[k - 1] * (f(x + k * h) + f(x - k * h));
  return acc / (h * h);
}

}  // namespace polyqm::numerics
