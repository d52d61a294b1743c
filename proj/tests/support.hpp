#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>

namespace support {

using Complex = std::complex<double>;

/// Seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  Complex upper(double x_max = 3.0, double y_min = 0.1, double y_max = 3.0) {
    return {uniform(-x_max, x_max), uniform(y_min, y_max)};
  }
  Complex disk(double r_max = 0.95) {
    return std::polar(r_max * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi));
  }

 private:
  std::mt19937_64 engine_;
};

/// Root of q in the closed upper half-plane, computed from the half-angle formula.
inline Complex upper_sqrt(Complex q) {
  const double r = std::abs(q);
  const double re = std::sqrt(std::max(0.0, 0.5 * (r + q.real())));
  const double im = std::sqrt(std::max(0.0, 0.5 * (r - q.real())));
  return {q.imag() < 0.0 ? -re : re, im};
}

/// Classic fixed-step RK4.
inline Complex rk4(const std::function<Complex(double, Complex)>& f, Complex w, double s, double t, int steps) {
  const double h = (t - s) / steps;
  for (int k = 0; k < steps; ++k) {
    const double tk = s + k * h;
    const Complex k1 = f(tk, w);
    const Complex k2 = f(tk + 0.5 * h, w + 0.5 * h * k1);
    const Complex k3 = f(tk + 0.5 * h, w + 0.5 * h * k2);
    const Complex k4 = f(tk + h, w + h * k3);
    w += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return w;
}

/// dw/dt = 1/(lambda(t) - w) by RK4.
inline Complex rk4_chordal(const std::function<double(double)>& lambda, Complex z, double s, double t, int steps) {
  return rk4([&](double u, Complex w) { return 1.0 / (lambda(u) - w); }, z, s, t, steps);
}

inline Complex central_difference(const std::function<Complex(Complex)>& f, Complex z, double h = 1e-6) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

inline Complex H(Complex z) { return Complex(0.0, 1.0) * (1.0 + z) / (1.0 - z); }
inline Complex Hinv(Complex w) { return (w - Complex(0.0, 1.0)) / (w + Complex(0.0, 1.0)); }

}  // namespace support
