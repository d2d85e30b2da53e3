#include "plot.hpp"

#include <algorithm>

#include "inflatable/error.hpp"

namespace inflatable::cli {

namespace {

// twice / 2 as a decimal, e.g. 3 -> "1.5".
std::string half(long twice) {
  std::string s = std::to_string(twice / 2);
  if (twice % 2 != 0) s += ".5";
  return s;
}

std::string plot_ascii(const Permutation& tau) {
  const std::size_t n = tau.size();
  if (n > kMaxAsciiPlot) {
    throw ResourceError("ascii plots are limited to length <= 200, got " +
                        std::to_string(n));
  }
  std::string out;
  out.reserve(2 * n * n);
  for (std::size_t row = n; row >= 1; --row) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out.push_back(' ');
      out.push_back(static_cast<std::size_t>(tau[i]) == row ? 'o' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

std::string plot_svg(const Permutation& tau) {
  const long n = static_cast<long>(tau.size());
  const std::string size = std::to_string(n);
  const std::string pixels = std::to_string(std::max(200L, 16 * n));
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + size + " " +
         size + "\" width=\"" + pixels + "\" height=\"" + pixels + "\">\n";
  out += "<title>" + to_string(tau) + "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size +
         "\" fill=\"white\"/>\n";
  out += "<g stroke=\"#d0d0d0\" stroke-width=\"0.03\">\n";
  for (long k = 0; k <= n; ++k) {
    const std::string at = std::to_string(k);
    out += "<line x1=\"" + at + "\" y1=\"0\" x2=\"" + at + "\" y2=\"" + size + "\"/>\n";
    out += "<line x1=\"0\" y1=\"" + at + "\" x2=\"" + size + "\" y2=\"" + at + "\"/>\n";
  }
  out += "</g>\n<g fill=\"black\">\n";
  for (long i = 1; i <= n; ++i) {
    const long v = tau[i - 1];
    out += "<circle cx=\"" + half(2 * i - 1) + "\" cy=\"" + half(2 * (n - v) + 1) +
           "\" r=\"0.3\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace

std::string plot(const Permutation& tau, PlotFormat format) {
  return format == PlotFormat::svg ? plot_svg(tau) : plot_ascii(tau);
}

}  // namespace inflatable::cli
