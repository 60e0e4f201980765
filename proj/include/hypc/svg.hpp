#pragma once

// Static SVG figures of the half-plane. The viewport spans [xmin, xmax] by
// [0, ymax] in model coordinates; the bottom edge is the boundary line.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hypc/plane.hpp"

namespace hypc::svg {

struct Viewport {
  double xmin;
  double xmax;
  double ymax;
};

struct Figure {
  std::vector<Line> lines;
  std::vector<Point> points;
  std::vector<std::pair<Point, Point>> segments;
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

inline double f64(const Scalar& s) { return s.to_float(53).value; }

// Center and radius of a semicircle, or the abscissa of a vertical line.
struct Shape {
  bool vertical;
  double center;
  double radius;
};

inline Shape shape(const Line& L) {
  const Cycle& f = L.cycle();
  if (f.a.is_zero()) return {true, f64(-f.c / f.b.x), 0.0};
  return {false, f64(-f.b.x / (Scalar(2) * f.a)), f64(sqrt(norm(f)) / (Scalar(2) * abs(f.a)))};
}

class Canvas {
 public:
  explicit Canvas(Viewport v) : v_(v), scale_(kWidth / (v.xmax - v.xmin)) {}

  double px(double x) const { return (x - v_.xmin) * scale_; }
  double py(double y) const { return (v_.ymax - y) * scale_; }
  double len(double d) const { return d * scale_; }
  double width() const { return kWidth; }
  double height() const { return v_.ymax * scale_; }
  const Viewport& viewport() const { return v_; }

 private:
  static constexpr double kWidth = 600.0;
  Viewport v_;
  double scale_;
};

}  // namespace detail

inline std::string render(const Figure& fig, Viewport v) {
  if (!(v.xmax > v.xmin) || !(v.ymax > 0)) throw DomainError("render: empty viewport");
  using detail::num;
  const detail::Canvas cv(v);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(cv.width()) << "\" height=\""
      << num(cv.height()) << "\" viewBox=\"0 0 " << num(cv.width()) << ' ' << num(cv.height()) << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const Line& L : fig.lines) {
    const auto s = detail::shape(L);
    if (s.vertical) {
      out << "<line x1=\"" << num(cv.px(s.center)) << "\" y1=\"" << num(cv.py(0)) << "\" x2=\""
          << num(cv.px(s.center)) << "\" y2=\"" << num(cv.py(v.ymax)) << "\"/>\n";
    } else {
      const double r = cv.len(s.radius);
      out << "<path d=\"M " << num(cv.px(s.center - s.radius)) << ' ' << num(cv.py(0)) << " A " << num(r) << ' '
          << num(r) << " 0 0 1 " << num(cv.px(s.center + s.radius)) << ' ' << num(cv.py(0)) << "\"/>\n";
    }
  }
  for (const auto& [a, b] : fig.segments) {
    const double ax = detail::f64(a.x()), ay = detail::f64(a.y());
    const double bx = detail::f64(b.x()), by = detail::f64(b.y());
    const Line L = line_through(standard_context(), a, b);
    const auto s = detail::shape(L);
    if (s.vertical) {
      out << "<line x1=\"" << num(cv.px(ax)) << "\" y1=\"" << num(cv.py(ay)) << "\" x2=\"" << num(cv.px(bx))
          << "\" y2=\"" << num(cv.py(by)) << "\"/>\n";
    } else {
      const double r = cv.len(s.radius);
      out << "<path d=\"M " << num(cv.px(ax)) << ' ' << num(cv.py(ay)) << " A " << num(r) << ' ' << num(r)
          << " 0 0 " << (ax < bx ? 1 : 0) << ' ' << num(cv.px(bx)) << ' ' << num(cv.py(by)) << "\"/>\n";
    }
  }
  out << "</g>\n";
  for (const Point& u : fig.points)
    out << "<circle cx=\"" << num(cv.px(detail::f64(u.x()))) << "\" cy=\"" << num(cv.py(detail::f64(u.y())))
        << "\" r=\"3\" fill=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace hypc::svg
