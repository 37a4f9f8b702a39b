// SVG figures. All drawing happens in mathematical coordinates inside one
// transform group that flips the y axis; the canvas is 600 px wide with a
// uniform scale, so the fixed pixel sizes below convert to user units by
// dividing by that scale.
//
//   axes            #808080  1 px
//   parabola y=x^2  #000000  2 px
//   circle          #2e8b57  2 px
//   hyperbola       #c0392b  2 px
//   marked points   #000000  radius 4 px, class="intersection" or "mark"
//   curve families  #1f77b4 #2ca02c #d62728 #9467bd #ff7f0e #8c564b #e377c2 #17becf
//
// Numbers are written with 6 significant digits ("%.6g") so identical input
// yields identical bytes.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "tusi/error.hpp"
#include "tusi/geometry.hpp"

namespace tusi {

namespace {

constexpr double kWidthPx = 600.0;
constexpr int kSamples = 400;
constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#2ca02c", "#d62728", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

class Canvas {
 public:
  explicit Canvas(const ViewWindow& w) : w_(w) {
    w.validate();
    scale_ = kWidthPx / (w.xmax - w.xmin);
    height_ = std::round(scale_ * (w.ymax - w.ymin));
  }

  double px(double pixels) const { return pixels / scale_; }

  void line(double x0, double y0, double x1, double y1, const char* color, double width_px) {
    body_ << "    <line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1)
          << "\" y2=\"" << num(y1) << "\" stroke=\"" << color << "\" stroke-width=\""
          << num(px(width_px)) << "\"/>\n";
  }

  void axes() {
    if (w_.ymin <= 0.0 && w_.ymax >= 0.0) line(w_.xmin, 0.0, w_.xmax, 0.0, "#808080", 1.0);
    if (w_.xmin <= 0.0 && w_.xmax >= 0.0) line(0.0, w_.ymin, 0.0, w_.ymax, "#808080", 1.0);
  }

  // y = f(x) sampled across the window.
  void graph(const std::function<double(double)>& f, const char* color, const char* label) {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= kSamples; ++i) {
      const double x = w_.xmin + (w_.xmax - w_.xmin) * i / kSamples;
      pts.emplace_back(x, f(x));
    }
    polyline(pts, color, label);
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const char* color,
                const char* label) {
    body_ << "    <polyline class=\"" << label << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"" << num(px(2.0)) << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      // Keep wildly off-screen samples from dominating the file.
      const double span = w_.ymax - w_.ymin;
      const double y = std::clamp(pts[i].second, w_.ymin - span, w_.ymax + span);
      body_ << (i ? " " : "") << num(pts[i].first) << "," << num(y);
    }
    body_ << "\"/>\n";
  }

  void circle(double cx, double cy, double r, const char* color, const char* label) {
    body_ << "    <circle class=\"" << label << "\" cx=\"" << num(cx) << "\" cy=\"" << num(cy)
          << "\" r=\"" << num(r) << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
          << num(px(2.0)) << "\"/>\n";
  }

  void mark(double x, double y, const char* label) {
    body_ << "    <circle class=\"" << label << "\" cx=\"" << num(x) << "\" cy=\"" << num(y)
          << "\" r=\"" << num(px(4.0)) << "\" fill=\"#000000\"/>\n";
  }

  std::string finish(const std::string& title) const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidthPx)
        << "\" height=\"" << num(height_) << "\" viewBox=\"0 0 " << num(kWidthPx) << " "
        << num(height_) << "\">\n"
        << "  <title>" << title << "</title>\n"
        << "  <defs>\n    <clipPath id=\"view\">\n      <rect x=\"" << num(w_.xmin) << "\" y=\""
        << num(w_.ymin) << "\" width=\"" << num(w_.xmax - w_.xmin) << "\" height=\""
        << num(w_.ymax - w_.ymin) << "\"/>\n    </clipPath>\n  </defs>\n"
        << "  <g transform=\"matrix(" << num(scale_) << " 0 0 " << num(-scale_) << " "
        << num(-scale_ * w_.xmin) << " " << num(scale_ * w_.ymax) << ")\">\n"
        << "   <g clip-path=\"url(#view)\">\n"
        << body_.str() << "   </g>\n  </g>\n</svg>\n";
    return out.str();
  }

 private:
  ViewWindow w_;
  double scale_;
  double height_;
  std::ostringstream body_;
};

}  // namespace

std::string emit_svg(const ConicSystem& c, const ViewWindow& window) {
  Canvas canvas(window);
  canvas.axes();
  canvas.graph([](double x) { return x * x; }, "#000000", "parabola");

  const double a = c.semi_axis();
  if (c.kind == ConicKind::circle) {
    if (!c.degenerate) canvas.circle(c.center_x, 0.0, a, "#2e8b57", "circle");
  } else {
    // (x - h)^2 - y^2 = a^2: right and left branches x = h +- sqrt(a^2 + y^2).
    for (double side : {1.0, -1.0}) {
      std::vector<std::pair<double, double>> pts;
      for (int i = 0; i <= kSamples; ++i) {
        const double y = window.ymin + (window.ymax - window.ymin) * i / kSamples;
        pts.emplace_back(c.center_x + side * std::sqrt(a * a + y * y), y);
      }
      canvas.polyline(pts, "#c0392b", "hyperbola");
    }
  }
  canvas.mark(0.0, 0.0, "origin");
  for (const auto& p : intersect_with_parabola(c)) canvas.mark(p.x, p.y, "intersection");

  const bool circle = c.kind == ConicKind::circle;
  const std::string title = std::string(circle ? "x^3 + x + q" : "x^3 - x + q'") + ", " +
                            (circle ? "q = " : "q' = ") + num(c.q_value) +
                            (c.reflected ? " (reflected)" : "");
  return canvas.finish(title);
}

std::string emit_tusi_split_svg(const ViewWindow& window) {
  Canvas canvas(window);
  canvas.axes();
  canvas.graph([](double a) { return a * a - a * a * a; }, kPalette[0], "tusi");
  canvas.graph([](double a) { return a * a * a + a; }, kPalette[1], "normal");
  canvas.graph([](double) { return 4.0 / 27.0; }, kPalette[2], "level");
  canvas.mark(2.0 / 3.0, 0.0, "mark");
  canvas.mark(2.0 / 3.0, 4.0 / 27.0, "mark");
  canvas.mark(-1.0 / 3.0, 4.0 / 27.0, "mark");
  canvas.mark(-1.0 / 3.0, 0.0, "mark");
  return canvas.finish("alpha^2 - alpha^3 and alpha^3 + alpha with y = 4/27");
}

std::string emit_phi_family_svg(int n_max, const ViewWindow& window) {
  if (n_max < 2) throw InputError("phi family needs n_max >= 2");
  Canvas canvas(window);
  canvas.axes();
  for (int n = 2; n <= n_max; ++n) {
    const char* color = kPalette[static_cast<std::size_t>(n - 2) % kPalette.size()];
    canvas.graph([n](double a) { return phi_n(n, a); }, color, "phi");
  }
  return canvas.finish("alpha^(n-1) - alpha^n, n = 2.." + std::to_string(n_max));
}

}  // namespace tusi
