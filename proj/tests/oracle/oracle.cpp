#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace oracle {

namespace {

constexpr double kPi = std::numbers::pi;

void add_unique(Set& s, const Pt& p, double tol) {
  for (const Pt& q : s) {
    double m = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, std::abs(p[i] - q[i]));
    if (m <= tol) return;
  }
  s.push_back(p);
}

double kernel(int n, double u) {
  const double s = std::sin(0.5 * u);
  if (std::abs(s) > 1e-6) return std::sin((n + 0.5) * u) / (2.0 * s);
  double sum = 0.5;
  for (int k = 1; k <= n; ++k) sum += std::cos(k * u);
  return sum;
}

}  // namespace

double dist(const Pt& p, const Pt& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

double dist_to_set(const Pt& p, const Set& s) {
  double best = std::numeric_limits<double>::infinity();
  for (const Pt& q : s) best = std::min(best, dist(p, q));
  return best;
}

double hausdorff(const Set& a, const Set& b) {
  double h = 0.0;
  for (const Pt& p : a) h = std::max(h, dist_to_set(p, b));
  for (const Pt& q : b) h = std::max(h, dist_to_set(q, a));
  return h;
}

bool metric_pair(const Pt& p, const Pt& q, const Set& a, const Set& b, double tol) {
  const double d = dist(p, q);
  return d <= dist_to_set(p, b) + tol || d <= dist_to_set(q, a) + tol;
}

std::vector<std::vector<std::size_t>> chains(const std::vector<Set>& sets, double tol) {
  std::vector<std::vector<std::size_t>> out;
  if (sets.empty()) return out;
  std::vector<std::size_t> idx(sets.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < sets.size(); ++i) {
      ok = metric_pair(sets[i][idx[i]], sets[i + 1][idx[i + 1]], sets[i], sets[i + 1], tol);
    }
    if (ok) out.push_back(idx);
    std::size_t k = sets.size();
    while (k > 0) {
      --k;
      if (++idx[k] < sets[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

Set riemann_set(const std::vector<Set>& sets, const std::vector<double>& lambdas, double tol) {
  Set out;
  for (const auto& c : chains(sets, tol)) {
    Pt sum(sets[0][0].size(), 0.0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += lambdas[i] * sets[i][c[i]][j];
    }
    add_unique(out, sum, 1e-12);
  }
  return out;
}

double fourier(const std::function<double(double)>& f, int n, double x, std::vector<double> breaks, int nodes) {
  breaks.push_back(-kPi);
  breaks.push_back(kPi);
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double u = breaks[p], w = breaks[p + 1];
    if (w <= u) continue;
    int m = std::max(2, static_cast<int>(nodes * (w - u) / (2 * kPi)));
    if (m % 2) ++m;
    const double h = (w - u) / m;
    auto g = [&](int i) {
      const double t = i == m ? w - 1e-13 * (w - u) : u + i * h;
      return f(t) * kernel(n, x - t);
    };
    double s = g(0) + g(m);
    for (int i = 1; i < m; ++i) s += (i % 2 ? 4.0 : 2.0) * g(i);
    total += s * h / 3.0;
  }
  return total / kPi;
}

Set Branches::at(double t) const {
  Set out = base;
  for (Pt& p : out) {
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += velocity[i] * (t - anchor);
  }
  return out;
}

Set limit_set_AF(const Branches& left, const Set& centre, const Branches& right, double x, double h, double tol) {
  const Set lh = left.at(x - h), rh = right.at(x + h);
  const Set l0 = left.at(x), r0 = right.at(x);
  Set out;
  for (std::size_t i = 0; i < lh.size(); ++i) {
    for (std::size_t j = 0; j < rh.size(); ++j) {
      bool joined = metric_pair(lh[i], rh[j], lh, rh, tol);
      for (std::size_t c = 0; !joined && c < centre.size(); ++c) {
        joined = metric_pair(lh[i], centre[c], lh, centre, tol) && metric_pair(centre[c], rh[j], centre, rh, tol);
      }
      if (!joined) continue;
      Pt mid(l0[i].size());
      for (std::size_t k = 0; k < mid.size(); ++k) mid[k] = 0.5 * (l0[i][k] + r0[j][k]);
      add_unique(out, mid, 1e-12);
    }
  }
  return out;
}

}  // namespace oracle
