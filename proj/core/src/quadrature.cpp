#include "relosc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace relosc {
namespace {

struct Rule {
  std::vector<double> nodes, weights;
};

// Roots of P_n by Newton from the Chebyshev-like initial guess; symmetric
// pairs are filled from one half.  Deterministic: fixed iteration count
// criterion, no parallelism.
Rule compute_rule(int order) {
  Rule r;
  r.nodes.assign(static_cast<std::size_t>(order), 0.0);
  r.weights.assign(static_cast<std::size_t>(order), 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::fabs(dt) <= 1e-15 * std::max(1.0, std::fabs(t))) break;
    }
    {  // refresh the derivative at the converged root for the weight
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (t * p1 - p0) / (t * t - 1.0);
    }
    const double w = 2.0 / ((1.0 - t * t) * dp * dp);
    r.nodes[static_cast<std::size_t>(i)] = -t;
    r.nodes[static_cast<std::size_t>(order - 1 - i)] = t;
    r.weights[static_cast<std::size_t>(i)] = w;
    r.weights[static_cast<std::size_t>(order - 1 - i)] = w;
  }
  if (order % 2 == 1) r.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
  return r;
}

const Rule& cached_rule(int order) {
  if (order < 1) throw std::domain_error("Gauss-Legendre order must be >= 1");
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

}  // namespace

const std::vector<double>& gl_nodes(int order) { return cached_rule(order).nodes; }
const std::vector<double>& gl_weights(int order) { return cached_rule(order).weights; }

}  // namespace relosc
