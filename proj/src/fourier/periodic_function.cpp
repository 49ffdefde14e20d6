#include "mfa/fourier/periodic_function.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace mfa {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

double reduce(double t) { return t - kTwoPi * std::floor((t + kPi) / kTwoPi); }

struct LinearPieces {
  std::vector<double> knots;  // -pi, breaks..., pi
  std::vector<std::pair<double, double>> pieces;
  std::vector<double> jump_points;  // -pi and the breaks
  std::vector<double> jump_sizes;

  double piece(std::size_t j, double t) const { return pieces[j].first * t + pieces[j].second; }

  std::size_t index(double r) const {
    const auto it = std::upper_bound(knots.begin(), knots.end(), r);
    return std::min<std::size_t>(static_cast<std::size_t>(it - knots.begin()), pieces.size()) - 1;
  }

  double eval(double t) const {
    const double r = reduce(t);
    return piece(index(r), r);
  }

  double left(double t) const {
    const double r = reduce(t);
    const std::size_t j = index(r);
    if (r == knots[j]) return j == 0 ? piece(pieces.size() - 1, kPi) : piece(j - 1, r);
    return piece(j, r);
  }

  double jump(double t) const {
    const double r = reduce(t);
    for (std::size_t i = 0; i < jump_points.size(); ++i) {
      if (jump_points[i] == r) return jump_sizes[i];
    }
    return 0.0;
  }

  double open_variation(double u, double w) const {
    if (!(w > u)) return 0.0;
    double total = 0.0;
    const long k0 = static_cast<long>(std::floor((u + kPi) / kTwoPi)) - 1;
    const long k1 = static_cast<long>(std::floor((w + kPi) / kTwoPi)) + 1;
    for (long k = k0; k <= k1; ++k) {
      const double shift = kTwoPi * static_cast<double>(k);
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        const double lo = std::max(u, knots[j] + shift), hi = std::min(w, knots[j + 1] + shift);
        if (hi > lo) total += std::abs(pieces[j].first) * (hi - lo);
      }
      for (std::size_t i = 0; i < jump_points.size(); ++i) {
        const double z = jump_points[i] + shift;
        if (z > u && z < w) total += jump_sizes[i];
      }
    }
    return total;
  }
};

// Integrals of (c + s t) cos(kt) and (c + s t) sin(kt) over [u, w], k >= 1.
double cos_moment(double c, double s, int k, double u, double w) {
  auto prim = [&](double t) { return (c + s * t) * std::sin(k * t) / k + s * std::cos(k * t) / (double(k) * k); };
  return prim(w) - prim(u);
}

double sin_moment(double c, double s, int k, double u, double w) {
  auto prim = [&](double t) { return -(c + s * t) * std::cos(k * t) / k + s * std::sin(k * t) / (double(k) * k); };
  return prim(w) - prim(u);
}

double integrate(const std::function<double(double)>& g, double u, double w, double qtol) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(g, u, w, 15, qtol);
}

}  // namespace

PeriodicFunction smooth_periodic(std::string name, std::function<double(double)> f, double variation) {
  PeriodicFunction p;
  p.name = std::move(name);
  auto g = [f](double t) { return f(reduce(t)); };
  p.eval = g;
  p.left_limit = g;
  p.right_limit = g;
  p.variation = variation;
  return p;
}

PeriodicFunction piecewise_linear(std::string name, std::vector<double> breaks,
                                  std::vector<std::pair<double, double>> pieces) {
  if (pieces.size() != breaks.size() + 1) throw std::invalid_argument("need one piece more than breaks");
  auto data = std::make_shared<LinearPieces>();
  data->knots.push_back(-kPi);
  for (double t : breaks) {
    if (!(t > data->knots.back() && t < kPi)) throw std::invalid_argument("breaks must increase inside (-pi, pi)");
    data->knots.push_back(t);
  }
  data->knots.push_back(kPi);
  data->pieces = std::move(pieces);

  double variation = 0.0;
  for (std::size_t j = 0; j < data->pieces.size(); ++j) {
    variation += std::abs(data->pieces[j].first) * (data->knots[j + 1] - data->knots[j]);
  }
  const std::size_t m = data->pieces.size();
  data->jump_points.push_back(-kPi);
  data->jump_sizes.push_back(std::abs(data->piece(0, -kPi) - data->piece(m - 1, kPi)));
  for (std::size_t j = 1; j < m; ++j) {
    data->jump_points.push_back(data->knots[j]);
    data->jump_sizes.push_back(std::abs(data->piece(j, data->knots[j]) - data->piece(j - 1, data->knots[j])));
  }

  PeriodicFunction p;
  p.name = std::move(name);
  p.eval = [data](double t) { return data->eval(t); };
  p.right_limit = p.eval;
  p.left_limit = [data](double t) { return data->left(t); };
  for (std::size_t i = 0; i < data->jump_points.size(); ++i) {
    variation += data->jump_sizes[i];
    if (data->jump_sizes[i] > 0.0) p.jumps.push_back(data->jump_points[i]);
  }
  p.variation = variation;
  p.open_variation = [data](double u, double w) { return data->open_variation(u, w); };
  p.jump_at = [data](double t) { return data->jump(t); };
  p.closed_form = [data](int n) {
    FourierCoefficients c{std::vector<double>(n + 1, 0.0), std::vector<double>(n + 1, 0.0)};
    for (std::size_t j = 0; j < data->pieces.size(); ++j) {
      const auto [s, c0] = data->pieces[j];
      const double u = data->knots[j], w = data->knots[j + 1];
      c.a[0] += (c0 * (w - u) + 0.5 * s * (w * w - u * u)) / kPi;
      for (int k = 1; k <= n; ++k) {
        c.a[k] += cos_moment(c0, s, k, u, w) / kPi;
        c.b[k] += sin_moment(c0, s, k, u, w) / kPi;
      }
    }
    return c;
  };
  return p;
}

PeriodicFunction square_wave() { return piecewise_linear("square-wave", {0.0}, {{0.0, -1.0}, {0.0, 1.0}}); }

PeriodicFunction sawtooth(double j) {
  return piecewise_linear("sawtooth", {j}, {{1.0, kPi - j}, {1.0, -kPi - j}});
}

PeriodicFunction monotone_step() { return piecewise_linear("monotone-step", {0.5}, {{0.3, 0.0}, {0.3, 1.0}}); }

FourierCoefficients fourier_coefficients(const std::function<double(double)>& f, int n,
                                         const std::vector<double>& breaks, double qtol) {
  if (n < 0) throw std::invalid_argument("coefficient order must be nonnegative");
  std::vector<double> cuts{-kPi};
  for (double t : breaks) {
    if (t > -kPi && t < kPi) cuts.push_back(t);
  }
  cuts.push_back(kPi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  FourierCoefficients c{std::vector<double>(n + 1, 0.0), std::vector<double>(n + 1, 0.0)};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double u = cuts[i], w = cuts[i + 1];
    for (int k = 0; k <= n; ++k) {
      c.a[k] += integrate([&](double t) { return f(t) * std::cos(k * t); }, u, w, qtol) / kPi;
      if (k > 0) c.b[k] += integrate([&](double t) { return f(t) * std::sin(k * t); }, u, w, qtol) / kPi;
    }
  }
  return c;
}

FourierCoefficients fourier_coefficients(const PeriodicFunction& f, int n, double qtol) {
  if (f.closed_form) return f.closed_form(n);
  return fourier_coefficients(f.eval, n, f.jumps, qtol);
}

double classical_partial_sum(const FourierCoefficients& c, int n, double x) {
  if (n < 0 || n > c.order()) throw std::invalid_argument("partial sum order exceeds the coefficients");
  double s = 0.5 * c.a[0];
  for (int k = 1; k <= n; ++k) s += c.a[k] * std::cos(k * x) + c.b[k] * std::sin(k * x);
  return s;
}

double classical_partial_sum(const PeriodicFunction& f, int n, double x) {
  return classical_partial_sum(fourier_coefficients(f, n), n, x);
}

std::pair<double, double> periodic_quasi_moduli(const PeriodicFunction& f, double x, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("moduli need delta > 0");
  if (f.open_variation) {
    // [x - delta, x) adds nothing at its closed right-continuous end; (x, x + delta] adds the jump at x + delta.
    return {f.open_variation(x - delta, x), f.open_variation(x, x + delta) + f.jump_at(x + delta)};
  }
  const int cells = 1 << 14;
  const double e = std::ldexp(delta, -20);
  auto walk = [&](double u, double w) {
    double total = 0.0, prev = f(u);
    for (int i = 1; i <= cells; ++i) {
      const double cur = f(u + (w - u) * i / cells);
      total += std::abs(cur - prev);
      prev = cur;
    }
    return total;
  };
  return {walk(x - delta, x - e), walk(x + e, x + delta)};
}

}  // namespace mfa
