#include "ncycle/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ncycle/arrangement.hpp"

namespace ncycle {

namespace {

constexpr int kDigits = 6;

std::string num(const Rational& r) { return r.to_decimal(kDigits); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_svg(const CycleEmbedding& emb, const RenderOptions& opts) {
  if (opts.width <= 0 || opts.height <= 0) throw std::invalid_argument("render size must be positive");
  const auto& corners = emb.corners();
  const std::size_t n = emb.size();

  auto by_x = [](const Point& a, const Point& b) { return a.x < b.x; };
  auto by_y = [](const Point& a, const Point& b) { return a.y < b.y; };
  const auto [xlo, xhi] = std::minmax_element(corners.begin(), corners.end(), by_x);
  const auto [ylo, yhi] = std::minmax_element(corners.begin(), corners.end(), by_y);
  Rational extent = std::max(xhi->x - xlo->x, yhi->y - ylo->y);
  if (extent.is_zero()) extent = Rational(1);
  const Rational margin = extent * Rational(5, 100);
  const Rational view_w = xhi->x - xlo->x + margin * Rational(2);
  const Rational view_h = yhi->y - ylo->y + margin * Rational(2);
  const Rational radius = extent / Rational(80);
  const Rational font = extent / Rational(25);

  std::vector<bool> splitter(n, false);
  if (opts.highlight_splitters) {
    try {
      const auto report = splitter_analysis(emb);
      for (std::size_t i = 0; i < n; ++i) {
        splitter[i] = report.segments[i].classification == SegmentClass::Splitter;
      }
    } catch (const DegenerateInput&) {
      // drawn unhighlighted
    }
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width << "\" height=\""
      << opts.height << "\" viewBox=\"" << num(xlo->x - margin) << " " << num(-(yhi->y + margin)) << " "
      << num(view_w) << " " << num(view_h) << "\">\n";
  out << "<title>" << n << "-cycle embedding</title>\n";

  if (opts.shade_regions) {
    out << "<polygon fill=\"" << escape(opts.fill) << "\" fill-rule=\"evenodd\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < n; ++i) {
      out << (i ? " " : "") << num(corners[i].x) << "," << num(-corners[i].y);
    }
    out << "\"/>\n";
  }

  out << "<g stroke-linecap=\"round\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = corners[i];
    const Point& b = corners[(i + 1) % n];
    out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(-a.y) << "\" x2=\"" << num(b.x) << "\" y2=\""
        << num(-b.y) << "\" stroke=\"" << escape(splitter[i] ? opts.splitter_stroke : opts.stroke)
        << "\" stroke-width=\"" << (splitter[i] ? 3 : 1.5) << "\" vector-effect=\"non-scaling-stroke\""
        << (splitter[i] ? " class=\"splitter\"" : "") << "/>\n";
  }
  out << "</g>\n";

  out << "<g stroke=\"" << escape(opts.stroke) << "\" fill=\"" << escape(opts.corner_fill) << "\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "<circle cx=\"" << num(corners[i].x) << "\" cy=\"" << num(-corners[i].y) << "\" r=\"" << num(radius)
        << "\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  out << "</g>\n";

  if (opts.label_corners) {
    out << "<g font-family=\"sans-serif\" font-size=\"" << num(font) << "\" fill=\"" << escape(opts.stroke)
        << "\">\n";
    for (std::size_t i = 0; i < n; ++i) {
      out << "<text x=\"" << num(corners[i].x + radius * Rational(3, 2)) << "\" y=\""
          << num(-corners[i].y - radius * Rational(3, 2)) << "\">" << i << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ncycle
