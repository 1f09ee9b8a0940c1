#include "torus/nodal.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace torus::nodal {

namespace {

struct DisjointSet {
  std::vector<std::int32_t> parent;

  explicit DisjointSet(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::int32_t find(std::int32_t x) {
    std::int32_t root = x;
    while (parent[static_cast<std::size_t>(root)] != root)
      root = parent[static_cast<std::size_t>(root)];
    while (parent[static_cast<std::size_t>(x)] != root) {
      std::int32_t next = parent[static_cast<std::size_t>(x)];
      parent[static_cast<std::size_t>(x)] = root;
      x = next;
    }
    return root;
  }

  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller root wins so the final labeling is scan-order canonical
    // regardless of merge order.
    if (a < b) parent[static_cast<std::size_t>(b)] = a;
    else parent[static_cast<std::size_t>(a)] = b;
  }
};

}  // namespace

SignGrid sign_grid_from_values(const Eigen::MatrixXd& values, double tau) {
  if (values.rows() < 4 || values.cols() < 4)
    throw std::invalid_argument("grid resolution below 4");
  if (tau < 0.0) throw std::invalid_argument("tau must be non-negative");

  SignGrid g;
  g.n1 = static_cast<int>(values.rows());
  g.n2 = static_cast<int>(values.cols());
  g.tau = tau;
  g.signs.resize(g.n1, g.n2);
  bool any_nonboundary = false;
  for (int i = 0; i < g.n1; ++i) {
    for (int j = 0; j < g.n2; ++j) {
      double v = values(i, j);
      std::int8_t s = 0;
      if (v > tau) s = 1;
      else if (v < -tau) s = -1;
      else s = 0;
      if (s != 0) any_nonboundary = true;
      g.signs(i, j) = s;
    }
  }
  if (!any_nonboundary) throw std::invalid_argument("function vanishes on grid");
  return g;
}

SignGrid sign_grid(const spectra::Eigenfunction& u, int n1, int n2, double tau) {
  Eigen::MatrixXd values = spectra::evaluate_grid(u, n1, n2);
  if (tau < 0.0) tau = 1e-9 * values.cwiseAbs().maxCoeff();
  return sign_grid_from_values(values, tau);
}

NodalDecomposition label_components(const SignGrid& g) {
  const int n1 = g.n1;
  const int n2 = g.n2;
  auto index = [n2](int i, int j) { return static_cast<std::int32_t>(i * n2 + j); };

  DisjointSet dsu(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
  bool any = false;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      std::int8_t s = g.signs(i, j);
      if (s == 0) continue;
      any = true;
      int iw = (i + 1) % n1;  // wrap both directions
      int jw = (j + 1) % n2;
      if (g.signs(iw, j) == s) dsu.unite(index(i, j), index(iw, j));
      if (g.signs(i, jw) == s) dsu.unite(index(i, j), index(i, jw));
    }
  }
  if (!any) throw std::invalid_argument("sign grid has no non-boundary cell");

  NodalDecomposition d;
  d.n1 = n1;
  d.n2 = n2;
  d.labels.setConstant(n1, n2, -1);
  std::vector<std::int32_t> label_of_root(static_cast<std::size_t>(n1) * n2, -1);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      std::int8_t s = g.signs(i, j);
      if (s == 0) continue;
      std::int32_t root = dsu.find(index(i, j));
      std::int32_t& lbl = label_of_root[static_cast<std::size_t>(root)];
      if (lbl < 0) {
        lbl = d.domain_count++;
        d.domain_signs.push_back(static_cast<Sign>(s));
        d.domain_cells.push_back(0);
      }
      d.labels(i, j) = lbl;
      ++d.domain_cells[static_cast<std::size_t>(lbl)];
    }
  }
  return d;
}

CountResult count_nodal_domains(const spectra::Eigenfunction& u, const CountConfig& cfg) {
  if (cfg.base_resolution < 4 || cfg.max_resolution < cfg.base_resolution ||
      cfg.refinement_factor < 2 || cfg.tau_relative < 0.0)
    throw std::invalid_argument("invalid count configuration");

  int prev_count = -1;
  int r = cfg.base_resolution;
  while (r <= cfg.max_resolution) {
    Eigen::MatrixXd values = spectra::evaluate_grid(u, r, r);
    double tau = cfg.tau_relative * values.cwiseAbs().maxCoeff();
    NodalDecomposition d = label_components(sign_grid_from_values(values, tau));
    if (d.domain_count == prev_count) {
      return CountResult{d.domain_count, r, std::move(d)};
    }
    prev_count = d.domain_count;
    r *= cfg.refinement_factor;
  }
  throw UnstableCount("unstable count: no agreement up to resolution " +
                      std::to_string(cfg.max_resolution));
}

std::vector<double> domain_areas(const NodalDecomposition& d, const spectra::TorusShape& torus) {
  double cell = (torus.period1() / d.n1) * (torus.period2() / d.n2);
  std::vector<double> areas;
  areas.reserve(d.domain_cells.size());
  for (auto c : d.domain_cells) areas.push_back(static_cast<double>(c) * cell);
  return areas;
}

}  // namespace torus::nodal
