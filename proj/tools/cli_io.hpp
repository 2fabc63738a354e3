#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "snail/error.hpp"
#include "snail/mapping.hpp"
#include "snail/params.hpp"

namespace snail::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

// non-finite numbers would make the document invalid
inline json num(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::OutOfRange, "non-finite value in payload");
  return x;
}

template <class T>
json opt_num(const std::optional<T>& x) {
  return x ? num(*x) : json(nullptr);
}

inline json params_json(const SnailParams& p) {
  return {{"alpha", num(p.alpha)}, {"beta", num(p.beta)}, {"gamma", num(p.gamma)},
          {"swapped", p.swapped}};
}

inline json envelope(const std::string& command, json params, json payload,
                     const std::vector<std::string>& warnings) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  out["params"] = std::move(params);
  out["payload"] = std::move(payload);
  out["warnings"] = warnings;
  return out;
}

inline std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string curve_csv(const Polyline& pl) {
  std::string s = "theta,u,v\n";
  for (const BoundaryPoint& b : pl.points) {
    s += g17(b.theta) + "," + g17(b.u) + "," + g17(b.v) + "\n";
  }
  return s;
}

inline json curve_json(const Polyline& pl) {
  json pts = json::array();
  for (const BoundaryPoint& b : pl.points) {
    pts.push_back({{"theta", num(b.theta)}, {"u", num(b.u)}, {"v", num(b.v)}});
  }
  return {{"open", pl.open}, {"count", pl.points.size()}, {"points", std::move(pts)}};
}

namespace detail {

inline std::string fx(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace detail

// SVG 1.1; the v axis points up, so y = -v
inline std::string render_curve_svg(const Polyline& pl) {
  if (pl.points.empty()) throw Error(ErrorCode::EmptyPolyline, "nothing to draw");
  double umin = pl.points[0].u, umax = umin, vmin = pl.points[0].v, vmax = vmin;
  for (const BoundaryPoint& b : pl.points) {
    umin = std::min(umin, b.u);
    umax = std::max(umax, b.u);
    vmin = std::min(vmin, b.v);
    vmax = std::max(vmax, b.v);
  }
  const double w = std::max(umax - umin, 1e-12);
  const double h = std::max(vmax - vmin, 1e-12);
  const double mx = 0.05 * w;
  const double my = 0.05 * h;
  const double x0 = umin - mx;
  const double y0 = -vmax - my;
  const double vw = w + 2 * mx;
  const double vh = h + 2 * my;
  const double stroke = 0.004 * std::max(vw, vh);
  using detail::fx;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fx(x0) + " " +
       fx(y0) + " " + fx(vw) + " " + fx(vh) + "\" width=\"640\" height=\"" +
       fx(640.0 * vh / vw) + "\">\n";
  std::string pts;
  for (const BoundaryPoint& b : pl.points) {
    if (!pts.empty()) pts += ' ';
    pts += fx(b.u) + "," + fx(-b.v);
  }
  const std::string style = "fill=\"none\" stroke=\"black\" stroke-width=\"" + fx(stroke) + "\"";
  if (pl.open) {
    s += "  <polyline points=\"" + pts + "\" " + style + "/>\n";
    s += "  <text x=\"" + fx(x0 + mx) + "\" y=\"" + fx(y0 + 2 * my) + "\" font-size=\"" +
         fx(0.04 * vh) + "\">open curve (unbounded domain)</text>\n";
  } else {
    s += "  <polygon points=\"" + pts + "\" " + style + "/>\n";
  }
  // unit bar along the real axis, anchored at the lower-left corner
  const double bx = umin;
  const double by = -vmin + 0.5 * my;
  s += "  <line x1=\"" + fx(bx) + "\" y1=\"" + fx(by) + "\" x2=\"" + fx(bx + 1.0) + "\" y2=\"" +
       fx(by) + "\" stroke=\"gray\" stroke-width=\"" + fx(stroke) + "\"/>\n";
  s += "  <text x=\"" + fx(bx + 0.5) + "\" y=\"" + fx(by - 0.1 * my) + "\" font-size=\"" +
       fx(0.04 * vh) + "\" text-anchor=\"middle\">1</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace snail::cli
