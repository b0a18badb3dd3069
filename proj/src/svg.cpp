#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "edss/sweep.hpp"

namespace edss {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 220.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

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

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

}  // namespace

std::string to_svg(const SweepTable& table, const std::string& title) {
  std::vector<Series> series;
  if (!table.columns.empty()) {
    const auto d_it = std::find(table.columns.begin(), table.columns.end(), "d");
    const bool split = d_it != table.columns.end();
    const std::size_t d_col = static_cast<std::size_t>(d_it - table.columns.begin());
    std::map<std::string, std::size_t> index;
    for (std::size_t c = 1; c < table.columns.size(); ++c) {
      if (split && c == d_col) continue;
      for (const auto& row : table.rows) {
        std::string label = table.columns[c];
        if (split) label += " (d=" + format_number(row[d_col]) + ")";
        auto [it, fresh] = index.emplace(label, series.size());
        if (fresh) series.push_back({label, {}, {}});
        series[it->second].x.push_back(row[0]);
        series[it->second].y.push_back(row[c]);
      }
    }
  }

  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  bool first = true;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (first) {
        x0 = x1 = s.x[i];
        y0 = y1 = s.y[i];
        first = false;
      }
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  }
  y0 = std::min(y0, 0.0);
  if (x1 <= x0) x1 = x0 + 1.0;
  if (y1 <= y0) y1 = y0 + 1.0;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return kTop + ph - (y - y0) / (y1 - y0) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<title>" << escape(title) << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kLeft << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
     << escape(title) << "</text>\n";
  os << "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw
     << "\" y2=\"" << kTop + ph << "\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
     << kTop + ph << "\"/>\n</g>\n";
  os << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    os << "<text x=\"" << format_number(px(xv)) << "\" y=\"" << kTop + ph + 16
       << "\" text-anchor=\"middle\">" << format_number(xv) << "</text>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << format_number(py(yv) + 3)
       << "\" text-anchor=\"end\">" << format_number(yv) << "</text>\n";
  }
  if (!table.columns.empty()) {
    os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12
       << "\" text-anchor=\"middle\">" << escape(table.columns[0]) << "</text>\n";
  }
  os << "</g>\n";

  os << "<g class=\"series\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    std::string points, xs, ys;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) {
        points += ' ';
        xs += ',';
        ys += ',';
      }
      points += format_number(px(s.x[i])) + ',' + format_number(py(s.y[i]));
      xs += format_number(s.x[i]);
      ys += format_number(s.y[i]);
    }
    os << "<polyline data-name=\"" << escape(s.label) << "\" data-x=\"" << xs
       << "\" data-values=\"" << ys << "\" stroke=\"" << kPalette[k % std::size(kPalette)]
       << "\" points=\"" << points << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const double y = kTop + 12.0 * static_cast<double>(k);
    const double x = kLeft + pw + 12;
    os << "<line x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << x + 16 << "\" y2=\"" << y
       << "\" stroke=\"" << kPalette[k % std::size(kPalette)] << "\"/>\n";
    os << "<text x=\"" << x + 20 << "\" y=\"" << y + 3 << "\">" << escape(series[k].label)
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace edss
