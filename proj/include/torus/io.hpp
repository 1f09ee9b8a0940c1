#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "torus/antisym.hpp"
#include "torus/construct.hpp"
#include "torus/nodal.hpp"
#include "torus/spectra.hpp"

namespace torus::io {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const spectra::BasisFunction& bf);
json to_json(const spectra::Eigenspace& space);
json to_json(const antisym::TranslationVector& v);
json decomposition_summary(const nodal::NodalDecomposition& d, const spectra::TorusShape& torus);
json to_json(const construct::OddCountReport& r);

// Eigenfunction input format: {"lambda": "a/b", "coeffs": [{family, m, n, c}]}.
// Validates that every term lies in the lambda-eigenspace.
spectra::Eigenfunction eigenfunction_from_json(const spectra::TorusShape& torus, const json& j);

struct RenderSpec {
  int width = 512;
  int height = 512;
  bool per_domain = false;  // false: 3-color sign palette
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<unsigned char> rgb;  // 3 bytes per pixel, row-major from top
};

// Pixel (px, py) samples grid cell (i, j) with i ~ px (x1 axis) and
// j ~ height-1-py (x2 increases upward).
Image render_signs(const nodal::SignGrid& g, const RenderSpec& spec);
Image render_domains(const nodal::NodalDecomposition& d, const RenderSpec& spec);

void write_ppm(const std::string& path, const Image& img);
std::string ppm_bytes(const Image& img);

// Raw label matrix as binary PGM (P5); boundary cells are 0, domain k is k+1.
void write_pgm_labels(const std::string& path, const nodal::NodalDecomposition& d);

}  // namespace torus::io
