#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "concord/bounds.hpp"

namespace concord {

/// One sampled boundary pair of an attainable (beta, measure) region.
struct RegionSample {
  double t;
  double lower;
  double upper;
};

/// The sampled boundary of the set of attainable (beta(C), kind(C)) pairs.
struct RegionCurve {
  MeasureKind kind;
  std::vector<RegionSample> points;

  int resolution() const { return static_cast<int>(points.size()); }
};

struct RegionPoint {
  double beta;
  double value;
};

/// Samples both envelopes on a uniform t grid of `resolution` >= 2 points.
RegionCurve sample_region(MeasureKind kind, int resolution);

/// Membership in the closed region between the envelopes: true iff
/// beta_interval(kind, p.value) contains p.beta with 1e-12 slack. Throws
/// OutOfRange when p.value is outside the measure's range.
bool region_contains(MeasureKind kind, const RegionPoint& p);

/// CSV with header `t,lower,upper`; values printed with %.17g (lossless,
/// trailing zeros suppressed).
std::string region_csv(const RegionCurve& c);

/// JSON mirror of RegionCurve: {"kind": ..., "resolution": N, "points":
/// [{"t":..., "lower":..., "upper":...}, ...]}.
nlohmann::json region_json(const RegionCurve& c);
RegionCurve region_from_json(const nlohmann::json& j);

/// Affine data-to-pixel mapping used by the SVG rendering. Fixed margins;
/// x spans beta in [-1,1], y spans the measure's range ([-1,1], or [-1/2,1]
/// for the footrule), y-axis pointing up.
struct SvgTransform {
  double width, height;
  double ymin, ymax;
  static constexpr double kLeft = 60.0, kRight = 15.0, kTop = 15.0, kBottom = 45.0;

  double x(double t) const { return kLeft + (t + 1.0) / 2.0 * (width - kLeft - kRight); }
  double y(double v) const {
    return kTop + (ymax - v) / (ymax - ymin) * (height - kTop - kBottom);
  }
};

SvgTransform svg_transform(MeasureKind kind, int width, int height);

/// Standalone SVG 1.1 document: labeled axes (beta horizontal, the measure
/// vertical), the shaded region polygon between the envelope polylines, and
/// the two boundary polylines. Deterministic for fixed inputs; width and
/// height must be >= 100. Only the geometry is contract-bearing; styling
/// constants live in svg.cpp.
std::string region_svg(const RegionCurve& c, int width, int height);

/// Writes a region artifact the way the CLI `region` subcommand does.
/// `format` is "csv", "json" or "svg" (svg uses the given width/height).
void write_region_file(MeasureKind kind, int resolution, const std::string& format,
                       const std::string& path, int width = 640, int height = 480);

}  // namespace concord
