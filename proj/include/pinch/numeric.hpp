#pragma once

// Shared numerical kernels: finite-difference stencils, quadrature, RK4,
// bisection, and deterministic decimal formatting. Everything here is pure
// and allocation-light; the rest of the library builds on these primitives.

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace pinch::num {

inline constexpr double pi = 3.14159265358979323846264338327950288;

// ---------------------------------------------------------------------------
// Finite differences (4th-order central stencils).
//
// Default steps sit near the double-precision optimum for each stencil order:
// second differences need h >> eps^(1/2), third differences h ~ eps^(1/7).

// 5-point first derivative, error O(h^4).
template <class F>
double d1(F&& f, double x, double h) {
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) /
         (12.0 * h);
}

// 5-point second derivative, error O(h^4).
template <class F>
double d2(F&& f, double x, double h) {
  return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) -
          f(x + 2 * h)) /
         (12.0 * h * h);
}

// Complex-argument versions for holomorphic function handles; the stencil
// steps along the real direction, which is valid for analytic f.
template <class F>
std::complex<double> cd1(F&& f, std::complex<double> z, double h) {
  return (f(z - 2 * h) - 8.0 * f(z - h) + 8.0 * f(z + h) - f(z + 2 * h)) /
         (12.0 * h);
}

template <class F>
std::complex<double> cd2(F&& f, std::complex<double> z, double h) {
  return (-f(z - 2 * h) + 16.0 * f(z - h) - 30.0 * f(z) + 16.0 * f(z + h) -
          f(z + 2 * h)) /
         (12.0 * h * h);
}

// 7-point third derivative, error O(h^4).
template <class F>
std::complex<double> cd3(F&& f, std::complex<double> z, double h) {
  return (f(z - 3 * h) - 8.0 * f(z - 2 * h) + 13.0 * f(z - h) -
          13.0 * f(z + h) + 8.0 * f(z + 2 * h) - f(z + 3 * h)) /
         (8.0 * h * h * h);
}

// ---------------------------------------------------------------------------
// Quadrature.

// Composite Simpson with n panels (n rounded up to even).
template <class F>
double simpson(F&& f, double a, double b, std::size_t n) {
  if (n < 2) n = 2;
  if (n % 2 != 0) ++n;
  const double h = (b - a) / static_cast<double>(n);
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < n; i += 2) odd += f(a + h * static_cast<double>(i));
  for (std::size_t i = 2; i < n; i += 2) even += f(a + h * static_cast<double>(i));
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

namespace detail {
template <class F>
double adapt(F& f, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double h = b - a;
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

// Adaptive Simpson with Richardson acceptance test.
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-12,
                 int max_depth = 48) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adapt(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// ---------------------------------------------------------------------------
// Fixed-step classical RK4 along a prescribed grid.
//
// The grid is strictly increasing and ends at the anchor point; integration
// starts from y(grid.back()) and steps backwards, one RK4 step per grid
// interval, so refining the grid refines the integration. Returns y at every
// grid point (aligned with the grid).
template <class F>
std::vector<double> rk4_backward(F&& f, const std::vector<double>& grid,
                                 double y_end) {
  if (grid.size() < 2) throw std::invalid_argument("rk4_backward: grid needs >= 2 points");
  std::vector<double> y(grid.size());
  y.back() = y_end;
  for (std::size_t i = grid.size() - 1; i > 0; --i) {
    const double t = grid[i];
    const double h = grid[i - 1] - grid[i];  // negative: stepping backwards
    const double yi = y[i];
    const double k1 = f(t, yi);
    const double k2 = f(t + 0.5 * h, yi + 0.5 * h * k1);
    const double k3 = f(t + 0.5 * h, yi + 0.5 * h * k2);
    const double k4 = f(t + h, yi + h * k3);
    y[i - 1] = yi + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(y[i - 1]))
      throw std::domain_error("rk4_backward: step underflow/overflow");
  }
  return y;
}

// ---------------------------------------------------------------------------
// Bisection on a bracketing interval; f(lo) and f(hi) must differ in sign.
template <class F>
double bisect(F&& f, double lo, double hi, double tol = 1e-14,
              int max_iter = 200) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::invalid_argument("bisect: interval does not bracket a root");
  for (int i = 0; i < max_iter && (hi - lo) > tol * (1.0 + std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Deterministic decimal rendering: 17 significant digits, locale-independent.
inline std::string format17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                           std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

// FNV-1a over a byte string; used for determinism checks.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace pinch::num
