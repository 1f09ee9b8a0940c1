#include "torus/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace torus::io {

json to_json(const Rational& r) { return json{{"num", r.num}, {"den", r.den}}; }

json to_json(const spectra::BasisFunction& bf) {
  return json{{"family", spectra::family_name(bf.family)}, {"m", bf.m}, {"n", bf.n}};
}

json to_json(const spectra::Eigenspace& space) {
  json j;
  if (space.exact) j["lambda"] = to_json(space.lambda);
  j["lambda_value"] = space.lambda_value;
  j["multiplicity"] = space.multiplicity();
  json basis = json::array();
  for (const auto& bf : space.basis) basis.push_back(to_json(bf));
  j["basis"] = basis;
  return j;
}

json to_json(const antisym::TranslationVector& v) {
  return json{{"v1_over_pi", to_json(v.v1_over_pi)},
              {"v2_over_rho_pi", to_json(v.v2_over_rho_pi)}};
}

json decomposition_summary(const nodal::NodalDecomposition& d,
                           const spectra::TorusShape& torus) {
  json signs = json::array();
  for (auto s : d.domain_signs) signs.push_back(s == nodal::Sign::Positive ? 1 : -1);
  json areas = json::array();
  for (double a : nodal::domain_areas(d, torus)) areas.push_back(a);
  return json{{"count", d.domain_count},
              {"signs", signs},
              {"areas", areas},
              {"resolution", json::array({d.n1, d.n2})}};
}

json to_json(const construct::OddCountReport& r) {
  return json{{"params", {{"m", r.m}, {"n", r.n}, {"k", r.k}, {"epsilon", r.epsilon}}},
              {"expected_count", r.expected_count},
              {"actual_count", r.actual_count},
              {"resolution", r.resolution},
              {"positive_domains", r.positive_domains},
              {"negative_domains", r.negative_domains},
              {"pass", r.pass}};
}

spectra::Eigenfunction eigenfunction_from_json(const spectra::TorusShape& torus,
                                               const json& j) {
  Rational lambda = Rational::parse(j.at("lambda").get<std::string>());
  auto space = spectra::eigenspace_of(torus, lambda);
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(space.multiplicity());
  for (const auto& term : j.at("coeffs")) {
    spectra::BasisFunction bf;
    bf.family = spectra::family_from_name(term.at("family").get<std::string>());
    bf.m = term.at("m").get<std::int64_t>();
    bf.n = term.at("n").get<std::int64_t>();
    double c = term.at("c").get<double>();
    bool found = false;
    for (int i = 0; i < space.multiplicity(); ++i) {
      if (space.basis[static_cast<std::size_t>(i)] == bf) {
        coeffs[i] += c;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("term (" + term.at("family").get<std::string>() + "," +
                                  std::to_string(bf.m) + "," + std::to_string(bf.n) +
                                  ") is not in the eigenspace of lambda=" + lambda.str());
  }
  return spectra::make_eigenfunction(torus, space, std::move(coeffs));
}

namespace {

constexpr unsigned char kPositive[3] = {230, 80, 60};
constexpr unsigned char kNegative[3] = {60, 100, 220};
constexpr unsigned char kBoundary[3] = {0, 0, 0};

// Fixed palette cycled per label; distinct enough for small domain counts.
constexpr unsigned char kPalette[][3] = {
    {230, 80, 60},  {60, 100, 220}, {70, 180, 80},  {240, 200, 40}, {170, 80, 200},
    {70, 200, 200}, {240, 130, 30}, {140, 140, 140}, {120, 70, 30},  {250, 140, 190},
};
constexpr int kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

}  // namespace

Image render_signs(const nodal::SignGrid& g, const RenderSpec& spec) {
  if (spec.width < 64 || spec.height < 64)
    throw std::invalid_argument("render size below 64 pixels");
  Image img{spec.width, spec.height, {}};
  img.rgb.resize(static_cast<std::size_t>(spec.width) * spec.height * 3);
  for (int py = 0; py < spec.height; ++py) {
    int j = static_cast<int>(static_cast<std::int64_t>(spec.height - 1 - py) * g.n2 /
                             spec.height);
    for (int px = 0; px < spec.width; ++px) {
      int i = static_cast<int>(static_cast<std::int64_t>(px) * g.n1 / spec.width);
      const unsigned char* c = kBoundary;
      if (g.signs(i, j) > 0) c = kPositive;
      else if (g.signs(i, j) < 0) c = kNegative;
      std::size_t off = (static_cast<std::size_t>(py) * spec.width + px) * 3;
      img.rgb[off] = c[0];
      img.rgb[off + 1] = c[1];
      img.rgb[off + 2] = c[2];
    }
  }
  return img;
}

Image render_domains(const nodal::NodalDecomposition& d, const RenderSpec& spec) {
  if (spec.width < 64 || spec.height < 64)
    throw std::invalid_argument("render size below 64 pixels");
  Image img{spec.width, spec.height, {}};
  img.rgb.resize(static_cast<std::size_t>(spec.width) * spec.height * 3);
  for (int py = 0; py < spec.height; ++py) {
    int j = static_cast<int>(static_cast<std::int64_t>(spec.height - 1 - py) * d.n2 /
                             spec.height);
    for (int px = 0; px < spec.width; ++px) {
      int i = static_cast<int>(static_cast<std::int64_t>(px) * d.n1 / spec.width);
      int lbl = d.labels(i, j);
      const unsigned char* c = lbl < 0 ? kBoundary : kPalette[lbl % kPaletteSize];
      std::size_t off = (static_cast<std::size_t>(py) * spec.width + px) * 3;
      img.rgb[off] = c[0];
      img.rgb[off + 1] = c[1];
      img.rgb[off + 2] = c[2];
    }
  }
  return img;
}

std::string ppm_bytes(const Image& img) {
  std::ostringstream out;
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.rgb.data()),
            static_cast<std::streamsize>(img.rgb.size()));
  return out.str();
}

void write_ppm(const std::string& path, const Image& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  std::string bytes = ppm_bytes(img);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_pgm_labels(const std::string& path, const nodal::NodalDecomposition& d) {
  if (d.domain_count > 254) throw std::runtime_error("too many domains for 8-bit PGM");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "P5\n" << d.n1 << " " << d.n2 << "\n255\n";
  // Row-major in i; value 0 marks boundary.
  std::vector<unsigned char> row(static_cast<std::size_t>(d.n2));
  for (int i = 0; i < d.n1; ++i) {
    for (int j = 0; j < d.n2; ++j) {
      int lbl = d.labels(i, j);
      row[static_cast<std::size_t>(j)] = static_cast<unsigned char>(lbl < 0 ? 0 : lbl + 1);
    }
    out.write(reinterpret_cast<const char*>(row.data()), d.n2);
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace torus::io
