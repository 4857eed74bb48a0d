#pragma once

#include <span>
#include <type_traits>
#include <vector>

namespace relosc {

// Gauss-Legendre nodes and weights on [-1, 1], computed once per order by
// Newton iteration on P_n (deterministic, accurate to ~1 ulp).
const std::vector<double>& gl_nodes(int order);
const std::vector<double>& gl_weights(int order);

enum class QuadratureScheme { Adaptive, FixedComposite };

// node_count is the total node budget across panels (>= 16).  rho_max <= 0
// requests an automatic cutoff (integrand tail below 1e-12 of its peak).
// Adaptive doubles the panel count until successive results agree to 1e-10;
// FixedComposite makes a single pass with the given budget.
struct QuadratureSpec {
  double rho_max = 0.0;
  int node_count = 512;
  QuadratureScheme scheme = QuadratureScheme::Adaptive;
};

// Deterministic pairwise reduction; the result does not depend on how a
// caller might shard the terms.
template <class T>
T pairwise_sum(std::vector<T> v) {
  if (v.empty()) return T{};
  std::size_t n = v.size();
  while (n > 1) {
    std::size_t m = n / 2;
    for (std::size_t i = 0; i < m; ++i) v[i] = v[2 * i] + v[2 * i + 1];
    if (n % 2) {
      v[m] = v[n - 1];
      ++m;
    }
    n = m;
  }
  return v[0];
}

// Composite Gauss-Legendre integral of f over [a, b]: `panels` equal panels
// of `order` nodes each, combined pairwise.
template <class F>
auto integrate_composite(F&& f, double a, double b, int panels, int order)
    -> std::invoke_result_t<F&, double> {
  using R = std::invoke_result_t<F&, double>;
  const auto& x = gl_nodes(order);
  const auto& w = gl_weights(order);
  const double h = (b - a) / panels;
  std::vector<R> partial(static_cast<std::size_t>(panels));
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    R s{};
    for (int i = 0; i < order; ++i) s += w[i] * f(mid + half * x[i]);
    partial[static_cast<std::size_t>(p)] = half * s;
  }
  return pairwise_sum(std::move(partial));
}

}  // namespace relosc
