#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "concord/region.hpp"

using namespace concord;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

// Pulls the points attribute of the first <polygon> and parses the pairs.
std::vector<std::pair<double, double>> polygon_vertices(const std::string& svg) {
  const auto poly = svg.find("<polygon");
  REQUIRE(poly != std::string::npos);
  const auto start = svg.find("points=\"", poly) + 8;
  const auto end = svg.find('"', start);
  std::stringstream ss(svg.substr(start, end - start));
  std::vector<std::pair<double, double>> out;
  std::string pair;
  while (ss >> pair) {
    const auto comma = pair.find(',');
    out.emplace_back(std::strtod(pair.substr(0, comma).c_str(), nullptr),
                     std::strtod(pair.substr(comma + 1).c_str(), nullptr));
  }
  return out;
}

}  // namespace

TEST_CASE("sample_region reproduces the envelope values on coarse grids") {
  const RegionCurve rho = sample_region(MeasureKind::Rho, 3);
  REQUIRE(rho.resolution() == 3);
  CHECK(rho.points[0].t == -1.0);
  CHECK(rho.points[1].t == 0.0);
  CHECK(rho.points[2].t == 1.0);
  CHECK(rho.points[0].lower == -1.0);
  CHECK(rho.points[1].lower == -0.8125);
  CHECK(rho.points[2].lower == 0.5);
  CHECK(rho.points[0].upper == -0.5);
  CHECK(rho.points[1].upper == 0.8125);
  CHECK(rho.points[2].upper == 1.0);

  const RegionCurve tau = sample_region(MeasureKind::Tau, 3);
  CHECK(tau.points[0].lower == -1.0);
  CHECK(tau.points[1].lower == -0.75);
  CHECK(tau.points[2].lower == 0.0);
  CHECK(tau.points[0].upper == 0.0);
  CHECK(tau.points[1].upper == 0.75);
  CHECK(tau.points[2].upper == 1.0);

  const RegionCurve gamma = sample_region(MeasureKind::Gamma, 3);
  CHECK(gamma.points[0].lower == -1.0);
  CHECK(gamma.points[1].lower == -0.625);
  CHECK(gamma.points[2].lower == 0.5);
  CHECK(gamma.points[0].upper == -0.5);
  CHECK(gamma.points[1].upper == 0.625);
  CHECK(gamma.points[2].upper == 1.0);

  CHECK_THROWS_AS(sample_region(MeasureKind::Tau, 1), CopulaError);
  CHECK_THROWS_AS(sample_region(MeasureKind::Beta, 3), CopulaError);
}

TEST_CASE("region membership follows the beta intervals") {
  CHECK_FALSE(region_contains(MeasureKind::Tau, {0.0, 0.99}));  // needs beta >= 0.8
  CHECK(region_contains(MeasureKind::Tau, {0.8, 0.99}));
  CHECK(region_contains(MeasureKind::Rho, {0.0, -0.8125}));  // boundary point
  CHECK_FALSE(region_contains(MeasureKind::Footrule, {-1.0, 1.0}));  // phi=1 forces beta=1
  CHECK(region_contains(MeasureKind::Footrule, {1.0, 1.0}));
  CHECK_THROWS_AS(region_contains(MeasureKind::Tau, {0.0, 1.5}), CopulaError);

  // Boundary membership plus strict interior/exterior at each sample.
  for (MeasureKind kind :
       {MeasureKind::Rho, MeasureKind::Tau, MeasureKind::Footrule, MeasureKind::Gamma}) {
    const RegionCurve curve = sample_region(kind, 41);
    for (const auto& s : curve.points) {
      CHECK(region_contains(kind, {s.t, s.lower}));
      CHECK(region_contains(kind, {s.t, s.upper}));
      if (s.upper - s.lower > 2e-6) {
        CHECK(region_contains(kind, {s.t, 0.5 * (s.lower + s.upper)}));
        if (s.upper + 1e-6 <= 1.0)
          CHECK_FALSE(region_contains(kind, {s.t, s.upper + 1e-6}));
        if (s.lower - 1e-6 >= measure_floor(kind))
          CHECK_FALSE(region_contains(kind, {s.t, s.lower - 1e-6}));
      }
    }
  }
}

TEST_CASE("csv export: exact header, row literals, and line counts") {
  const std::string tau_csv = region_csv(sample_region(MeasureKind::Tau, 3));
  const auto tau_lines = split_lines(tau_csv);
  REQUIRE(tau_lines.size() == 4);
  CHECK(tau_lines[0] == "t,lower,upper");
  CHECK(tau_lines[2] == "0,-0.75,0.75");

  const auto rho_lines = split_lines(region_csv(sample_region(MeasureKind::Rho, 101)));
  CHECK(rho_lines.size() == 102);

  // Lossless round trip of every printed value.
  const RegionCurve rho_curve = sample_region(MeasureKind::Rho, 101);
  for (std::size_t i = 1; i < rho_lines.size(); ++i) {
    const auto& line = rho_lines[i];
    const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
    const double t = std::strtod(line.substr(0, c1).c_str(), nullptr);
    const double lo = std::strtod(line.substr(c1 + 1, c2 - c1 - 1).c_str(), nullptr);
    const double up = std::strtod(line.substr(c2 + 1).c_str(), nullptr);
    const RegionSample& s = rho_curve.points[i - 1];
    CHECK(t == s.t);
    CHECK(lo == s.lower);
    CHECK(up == s.upper);
  }
}

TEST_CASE("json export round trips to an equal curve") {
  const RegionCurve curve = sample_region(MeasureKind::Footrule, 17);
  const RegionCurve back = region_from_json(region_json(curve));
  REQUIRE(back.resolution() == curve.resolution());
  CHECK(back.kind == curve.kind);
  for (int i = 0; i < curve.resolution(); ++i) {
    CHECK(back.points[static_cast<std::size_t>(i)].t ==
          curve.points[static_cast<std::size_t>(i)].t);
    CHECK(back.points[static_cast<std::size_t>(i)].lower ==
          curve.points[static_cast<std::size_t>(i)].lower);
    CHECK(back.points[static_cast<std::size_t>(i)].upper ==
          curve.points[static_cast<std::size_t>(i)].upper);
  }
}

TEST_CASE("svg geometry equals the declared viewport transform") {
  const RegionCurve curve = sample_region(MeasureKind::Tau, 21);
  const std::string svg = region_svg(curve, 500, 500);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find(">beta<") != std::string::npos);
  CHECK(svg.find(">tau<") != std::string::npos);

  const SvgTransform tr = svg_transform(MeasureKind::Tau, 500, 500);
  const auto verts = polygon_vertices(svg);
  REQUIRE(verts.size() == 42);  // upper left-to-right, then lower reversed
  for (int i = 0; i < 21; ++i) {
    const auto& s = curve.points[static_cast<std::size_t>(i)];
    CHECK(verts[static_cast<std::size_t>(i)].first == doctest::Approx(tr.x(s.t)).epsilon(1e-12));
    CHECK(verts[static_cast<std::size_t>(i)].second ==
          doctest::Approx(tr.y(s.upper)).epsilon(1e-12));
    const auto& rev = verts[static_cast<std::size_t>(41 - i)];
    CHECK(rev.first == doctest::Approx(tr.x(s.t)).epsilon(1e-12));
    CHECK(rev.second == doctest::Approx(tr.y(s.lower)).epsilon(1e-12));
  }

  // The footrule axis spans [-1/2, 1].
  const SvgTransform ftr = svg_transform(MeasureKind::Footrule, 500, 500);
  CHECK(ftr.ymin == -0.5);
  CHECK(ftr.ymax == 1.0);
  const std::string fsvg = region_svg(sample_region(MeasureKind::Footrule, 5), 500, 500);
  CHECK(fsvg.find(">-0.5<") != std::string::npos);
  CHECK(fsvg.find(">footrule<") != std::string::npos);

  CHECK_THROWS_AS(region_svg(curve, 99, 500), CopulaError);

  // Determinism: identical inputs, identical bytes.
  CHECK(region_svg(curve, 500, 500) == svg);
}
