#include "thompson/cli/plot.hpp"

#include <sstream>

namespace thompson::cli {

std::string decimal(const Rational& r, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round half up: floor((2 num scale + den) / (2 den))
  Integer scaled;
  const Integer numer = 2 * r.numerator() * scale + r.denominator();
  const Integer denom = 2 * r.denominator();
  mpz_fdiv_q(scaled.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());

  const bool negative = scaled < 0;
  std::string digits_text = (negative ? Integer(-scaled) : scaled).get_str();
  if (digits_text.size() <= static_cast<std::size_t>(digits)) {
    digits_text.insert(0, static_cast<std::size_t>(digits) + 1 - digits_text.size(), '0');
  }
  std::string whole = digits_text.substr(0, digits_text.size() - static_cast<std::size_t>(digits));
  std::string frac = digits_text.substr(whole.size());
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = negative ? "-" + whole : whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

std::string render_svg(const PLElement& f) {
  std::ostringstream points;
  std::ostringstream exact;
  bool first = true;
  for (const auto& b : f.breaks()) {
    if (!first) {
      points << ' ';
      exact << ' ';
    }
    first = false;
    points << decimal(b.x) << ',' << decimal(b.y);
    exact << b.x << ',' << b.y;
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"-0.05 -0.05 1.1 1.1\">\n"
      << "  <title>F(" << f.base() << ") element, " << f.breaks().size() << " breakpoints</title>\n"
      << "  <g transform=\"translate(0,1) scale(1,-1)\">\n"
      << "    <rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.003\"/>\n"
      << "    <line x1=\"0\" y1=\"0\" x2=\"1\" y2=\"1\" stroke=\"#cccccc\" stroke-width=\"0.003\" "
         "stroke-dasharray=\"0.02 0.02\"/>\n"
      << "    <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.006\" stroke-linejoin=\"round\"\n"
      << "              points=\"" << points.str() << "\"\n"
      << "              data-base=\"" << f.base() << "\" data-breaks=\"" << exact.str() << "\"/>\n"
      << "  </g>\n"
      << "</svg>\n";
  return svg.str();
}

}  // namespace thompson::cli
