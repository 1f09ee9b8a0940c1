#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "torus/spectra.hpp"

namespace torus::nodal {

enum class Sign : std::int8_t { Negative = -1, Boundary = 0, Positive = 1 };

// Sampled sign field on the periodic lattice; |value| <= tau is Boundary.
struct SignGrid {
  int n1 = 0;
  int n2 = 0;
  double tau = 0.0;
  Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic> signs;

  Sign at(int i, int j) const { return static_cast<Sign>(signs(i, j)); }
};

struct NodalDecomposition {
  int n1 = 0;
  int n2 = 0;
  Eigen::MatrixXi labels;  // -1 on Boundary cells, else 0..count-1
  int domain_count = 0;
  std::vector<Sign> domain_signs;
  std::vector<std::int64_t> domain_cells;
};

struct CountConfig {
  int base_resolution = 256;
  int max_resolution = 4096;
  double tau_relative = 1e-9;  // tau = tau_relative * max |u| on the grid
  int refinement_factor = 2;
};

struct CountResult {
  int count = 0;
  int resolution = 0;
  NodalDecomposition decomposition;
};

// Thrown when counts keep changing up to max_resolution.
struct UnstableCount : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SignGrid sign_grid_from_values(const Eigen::MatrixXd& values, double tau);

// tau < 0 selects the relative default 1e-9 * max |u| on the grid.
SignGrid sign_grid(const spectra::Eigenfunction& u, int n1, int n2, double tau = -1.0);

// 4-connected labeling with wrap-around in both directions; labels are
// canonical (row-major first occurrence).
NodalDecomposition label_components(const SignGrid& g);

// Doubles the resolution until two successive counts agree.
CountResult count_nodal_domains(const spectra::Eigenfunction& u, const CountConfig& cfg = {});

std::vector<double> domain_areas(const NodalDecomposition& d, const spectra::TorusShape& torus);

}  // namespace torus::nodal
