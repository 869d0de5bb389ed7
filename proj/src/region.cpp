#include "concord/region.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>

namespace concord {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

RegionCurve sample_region(MeasureKind kind, int resolution) {
  if (kind == MeasureKind::Beta) fail(Errc::OutOfRange, "no region for beta against itself");
  if (resolution < 2) fail(Errc::OutOfRange, "resolution must be >= 2");
  RegionCurve curve{kind, {}};
  curve.points.reserve(static_cast<std::size_t>(resolution));
  const Envelope lower{kind, Side::Lower};
  const Envelope upper{kind, Side::Upper};
  for (int i = 0; i < resolution; ++i) {
    const double t = -1.0 + 2.0 * i / (resolution - 1);
    curve.points.push_back({t, lower(t), upper(t)});
  }
  return curve;
}

bool region_contains(MeasureKind kind, const RegionPoint& p) {
  const auto [lo, hi] = beta_interval(kind, p.value);
  return p.beta >= lo - 1e-12 && p.beta <= hi + 1e-12;
}

std::string region_csv(const RegionCurve& c) {
  std::string out = "t,lower,upper\n";
  for (const auto& s : c.points) {
    out += fmt17(s.t);
    out += ',';
    out += fmt17(s.lower);
    out += ',';
    out += fmt17(s.upper);
    out += '\n';
  }
  return out;
}

nlohmann::json region_json(const RegionCurve& c) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& s : c.points)
    points.push_back({{"t", s.t}, {"lower", s.lower}, {"upper", s.upper}});
  return {{"kind", measure_name(c.kind)}, {"resolution", c.resolution()}, {"points", points}};
}

RegionCurve region_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("points"))
    fail(Errc::BadCopulaSpec, "region JSON must carry \"kind\" and \"points\"");
  RegionCurve curve{measure_from_name(j["kind"].get<std::string>()), {}};
  for (const auto& p : j["points"])
    curve.points.push_back({p.at("t").get<double>(), p.at("lower").get<double>(),
                            p.at("upper").get<double>()});
  if (j.contains("resolution") && j["resolution"].get<int>() != curve.resolution())
    fail(Errc::BadCopulaSpec, "region JSON resolution disagrees with its point count");
  return curve;
}

SvgTransform svg_transform(MeasureKind kind, int width, int height) {
  return {static_cast<double>(width), static_cast<double>(height), measure_floor(kind), 1.0};
}

std::string region_svg(const RegionCurve& c, int width, int height) {
  if (width < 100 || height < 100) fail(Errc::OutOfRange, "svg size must be >= 100x100");
  const SvgTransform tr = svg_transform(c.kind, width, height);

  std::string svg;
  auto emit = [&](const std::string& s) { svg += s; };
  emit("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
  emit("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
       std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
       std::to_string(width) + " " + std::to_string(height) + "\">\n");
  emit("<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");

  // Grid and tick labels at fixed data coordinates.
  const double xticks[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  emit("<g stroke=\"#dddddd\" stroke-width=\"1\">\n");
  for (double t : xticks)
    emit("<line x1=\"" + fmt17(tr.x(t)) + "\" y1=\"" + fmt17(tr.y(tr.ymin)) + "\" x2=\"" +
         fmt17(tr.x(t)) + "\" y2=\"" + fmt17(tr.y(tr.ymax)) + "\"/>\n");
  for (double v = -1.0; v <= 1.0 + 1e-9; v += 0.5) {
    if (v < tr.ymin - 1e-9) continue;
    emit("<line x1=\"" + fmt17(tr.x(-1.0)) + "\" y1=\"" + fmt17(tr.y(v)) + "\" x2=\"" +
         fmt17(tr.x(1.0)) + "\" y2=\"" + fmt17(tr.y(v)) + "\"/>\n");
  }
  emit("</g>\n");

  // Shaded region: upper envelope left to right, then lower reversed.
  emit("<polygon fill=\"#9ecae1\" fill-opacity=\"0.7\" stroke=\"none\" points=\"");
  for (const auto& s : c.points) emit(fmt17(tr.x(s.t)) + "," + fmt17(tr.y(s.upper)) + " ");
  for (auto it = c.points.rbegin(); it != c.points.rend(); ++it)
    emit(fmt17(tr.x(it->t)) + "," + fmt17(tr.y(it->lower)) + (std::next(it) != c.points.rend() ? " " : ""));
  emit("\"/>\n");

  auto polyline = [&](bool upper) {
    emit("<polyline fill=\"none\" stroke=\"#3182bd\" stroke-width=\"1.5\" points=\"");
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const auto& s = c.points[i];
      emit(fmt17(tr.x(s.t)) + "," + fmt17(tr.y(upper ? s.upper : s.lower)) +
           (i + 1 < c.points.size() ? " " : ""));
    }
    emit("\"/>\n");
  };
  polyline(true);
  polyline(false);

  // Axes.
  emit("<g stroke=\"#333333\" stroke-width=\"1\">\n");
  emit("<line x1=\"" + fmt17(tr.x(-1.0)) + "\" y1=\"" + fmt17(tr.y(tr.ymin)) + "\" x2=\"" +
       fmt17(tr.x(1.0)) + "\" y2=\"" + fmt17(tr.y(tr.ymin)) + "\"/>\n");
  emit("<line x1=\"" + fmt17(tr.x(-1.0)) + "\" y1=\"" + fmt17(tr.y(tr.ymin)) + "\" x2=\"" +
       fmt17(tr.x(-1.0)) + "\" y2=\"" + fmt17(tr.y(tr.ymax)) + "\"/>\n");
  emit("</g>\n");
  emit("<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n");
  for (double t : xticks)
    emit("<text x=\"" + fmt17(tr.x(t)) + "\" y=\"" + fmt17(tr.y(tr.ymin) + 16.0) +
         "\" text-anchor=\"middle\">" + fmt17(t) + "</text>\n");
  for (double v = -1.0; v <= 1.0 + 1e-9; v += 0.5) {
    if (v < tr.ymin - 1e-9) continue;
    emit("<text x=\"" + fmt17(tr.x(-1.0) - 6.0) + "\" y=\"" + fmt17(tr.y(v) + 4.0) +
         "\" text-anchor=\"end\">" + fmt17(v) + "</text>\n");
  }
  emit("<text x=\"" + fmt17(tr.x(0.0)) + "\" y=\"" + fmt17(tr.y(tr.ymin) + 34.0) +
       "\" text-anchor=\"middle\">beta</text>\n");
  emit("<text x=\"14\" y=\"" + fmt17(0.5 * (tr.y(tr.ymin) + tr.y(tr.ymax))) +
       "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
       fmt17(0.5 * (tr.y(tr.ymin) + tr.y(tr.ymax))) + ")\">" + measure_name(c.kind) +
       "</text>\n");
  emit("</g>\n");
  emit("</svg>\n");
  return svg;
}

void write_region_file(MeasureKind kind, int resolution, const std::string& format,
                       const std::string& path, int width, int height) {
  const RegionCurve curve = sample_region(kind, resolution);
  std::string payload;
  if (format == "csv") {
    payload = region_csv(curve);
  } else if (format == "json") {
    payload = region_json(curve).dump(2);
    payload += '\n';
  } else if (format == "svg") {
    payload = region_svg(curve, width, height);
  } else {
    fail(Errc::OutOfRange, "unknown region format \"" + format + "\"");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::OutOfRange, "cannot open output file " + path);
  out << payload;
}

}  // namespace concord
