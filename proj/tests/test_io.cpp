#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "torus/io.hpp"

using namespace torus;
using namespace torus::spectra;
using namespace torus::io;

TEST_CASE("eigenspace json schema") {
  auto torus = TorusShape::from_rho_sq(Rational(1));
  auto space = eigenspace_of(torus, Rational(25));
  json j = to_json(space);
  CHECK(j["lambda"]["num"] == 25);
  CHECK(j["lambda"]["den"] == 1);
  CHECK(j["multiplicity"] == 12);
  CHECK(j["basis"].size() == 12);
  CHECK(j["basis"][0].contains("family"));
  CHECK(j["basis"][0].contains("m"));
  CHECK(j["basis"][0].contains("n"));
}

TEST_CASE("translation vector json") {
  antisym::TranslationVector v{Rational(1, 2), Rational(1, 2)};
  json j = to_json(v);
  CHECK(j["v1_over_pi"]["num"] == 1);
  CHECK(j["v1_over_pi"]["den"] == 2);
  CHECK(j["v2_over_rho_pi"]["den"] == 2);
}

TEST_CASE("eigenfunction input format") {
  auto torus = TorusShape::from_rho_sq(Rational(1, 3));
  json j = {{"lambda", "4/1"},
            {"coeffs", json::array({{{"family", "cc"}, {"m", 1}, {"n", 1}, {"c", 1.0}},
                                    {{"family", "cc"}, {"m", 2}, {"n", 0}, {"c", 0.1}}})}};
  auto u = eigenfunction_from_json(torus, j);
  CHECK(u(0.0, 0.0) == doctest::Approx(1.1));

  // Term outside the eigenspace is rejected.
  json bad = {{"lambda", "4/1"},
              {"coeffs", json::array({{{"family", "cc"}, {"m", 3}, {"n", 0}, {"c", 1.0}}})}};
  CHECK_THROWS_AS(eigenfunction_from_json(torus, bad), std::invalid_argument);
}

TEST_CASE("ppm determinism and header") {
  auto torus = TorusShape::from_rho_sq(Rational(1, 3));
  json j = {{"lambda", "4/1"},
            {"coeffs", json::array({{{"family", "cc"}, {"m", 1}, {"n", 1}, {"c", 1.0}}})}};
  auto u = eigenfunction_from_json(torus, j);
  auto g = nodal::sign_grid(u, 128, 128);

  auto img1 = render_signs(g, {128, 128, false});
  auto img2 = render_signs(g, {128, 128, false});
  CHECK(ppm_bytes(img1) == ppm_bytes(img2));
  CHECK(ppm_bytes(img1).substr(0, 3) == "P6\n");
  CHECK(img1.rgb.size() == 128u * 128u * 3u);

  SUBCASE("four-rectangle layout: quadrant centers alternate") {
    // cc_{1,1} is positive near the origin corner and negative across each
    // nodal line; sample one pixel deep inside each quadrant.
    auto at = [&](int px, int py) {
      std::size_t off = (static_cast<std::size_t>(py) * 128 + px) * 3;
      return std::array<unsigned char, 3>{img1.rgb[off], img1.rgb[off + 1],
                                          img1.rgb[off + 2]};
    };
    auto q00 = at(0, 127);   // x1 ~ 0, x2 ~ 0: cell centers of the 4 rectangles
    auto q10 = at(64, 127);  // x1 ~ pi
    auto q01 = at(0, 63);    // x2 ~ rho pi
    auto q11 = at(64, 63);
    CHECK(q00 != q10);
    CHECK(q00 != q01);
    CHECK(q00 == q11);
    CHECK(q10 == q01);
  }
}

TEST_CASE("pgm labels file") {
  auto torus = TorusShape::from_rho_sq(Rational(1));
  json j = {{"lambda", "2/1"},
            {"coeffs", json::array({{{"family", "ss"}, {"m", 1}, {"n", 1}, {"c", 1.0}}})}};
  auto u = eigenfunction_from_json(torus, j);
  auto d = nodal::label_components(nodal::sign_grid(u, 64, 64));

  std::string path = "test_labels_tmp.pgm";
  write_pgm_labels(path, d);
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "P5");
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("decomposition summary json") {
  auto torus = TorusShape::from_rho_sq(Rational(1));
  json j = {{"lambda", "2/1"},
            {"coeffs", json::array({{{"family", "ss"}, {"m", 1}, {"n", 1}, {"c", 1.0}}})}};
  auto u = eigenfunction_from_json(torus, j);
  auto d = nodal::label_components(nodal::sign_grid(u, 64, 64));
  json s = decomposition_summary(d, torus);
  CHECK(s["count"] == 4);
  CHECK(s["signs"].size() == 4);
  CHECK(s["areas"].size() == 4);
  double total = 0;
  for (auto& a : s["areas"]) total += a.get<double>();
  // At 64x64 the near-zero band along the nodal lines is excluded from all
  // domains, so the areas undershoot the full torus area by a few percent.
  CHECK(total == doctest::Approx(4 * kPi * kPi).epsilon(0.08));
}
