#include "thompson/element.hpp"

#include <algorithm>
#include <ostream>

namespace thompson {

namespace {

Rational slope(const Breakpoint& a, const Breakpoint& b) { return (b.y - a.y) / (b.x - a.x); }

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

// Removes interior breakpoints whose neighbouring segments share a slope.
std::vector<Breakpoint> canonicalize(std::vector<Breakpoint> pts) {
  if (pts.size() <= 2) return pts;
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  out.push_back(std::move(pts.front()));
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (!collinear(out.back(), pts[i], pts[i + 1])) out.push_back(std::move(pts[i]));
  }
  out.push_back(std::move(pts.back()));
  return out;
}

// Index of the segment [breaks[i], breaks[i+1]] containing `v` in the
// coordinate selected by `coord`; the right endpoint 1 belongs to the last one.
template <class Coord>
std::size_t locate(std::span<const Breakpoint> breaks, const Rational& v, Coord coord) {
  auto it = std::upper_bound(breaks.begin() + 1, breaks.end() - 1, v,
                             [&](const Rational& value, const Breakpoint& b) { return value < coord(b); });
  return static_cast<std::size_t>(it - breaks.begin()) - 1;
}

Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& x) {
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

Rational preimage(const Breakpoint& a, const Breakpoint& b, const Rational& y) {
  return a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
}

void check_same_base(const PLElement& f, const PLElement& g) {
  if (f.base() != g.base()) throw BaseMismatch(f.base(), g.base());
}

}  // namespace

const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::kEmpty:
      return "empty";
    case ValidationCode::kEndpointNotFixed:
      return "endpoint-not-fixed";
    case ValidationCode::kNonMonotone:
      return "non-monotone";
    case ValidationCode::kNonNAdic:
      return "non-n-adic";
    case ValidationCode::kNonPowerSlope:
      return "non-power-slope";
  }
  return "unknown";
}

PLElement::PLElement(int base) : base_(base) {
  require_base(base);
  breaks_ = {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}};
}

PLElement::PLElement(Trusted, std::vector<Breakpoint> breaks, int base)
    : base_(base), breaks_(canonicalize(std::move(breaks))) {}

PLElement PLElement::validate(std::vector<Breakpoint> breaks, int base) {
  require_base(base);
  if (breaks.empty()) throw ValidationError(ValidationCode::kEmpty, "empty breakpoint list");
  const Breakpoint& first = breaks.front();
  const Breakpoint& last = breaks.back();
  if (breaks.size() < 2 || first.x != 0 || first.y != 0 || last.x != 1 || last.y != 1) {
    throw ValidationError(ValidationCode::kEndpointNotFixed, "graph must start at (0,0) and end at (1,1)");
  }
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (!(breaks[i - 1].x < breaks[i].x) || !(breaks[i - 1].y < breaks[i].y)) {
      throw ValidationError(ValidationCode::kNonMonotone,
                            "breakpoints not strictly increasing at index " + std::to_string(i));
    }
  }
  for (const auto& b : breaks) {
    if (!is_nadic(b.x, base) || !is_nadic(b.y, base)) {
      throw ValidationError(ValidationCode::kNonNAdic, "breakpoint (" + b.x.str() + "," + b.y.str() +
                                                           ") is not " + std::to_string(base) + "-adic");
    }
  }
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    const Rational s = slope(breaks[i - 1], breaks[i]);
    if (!is_power_of_n(s, base)) {
      throw ValidationError(ValidationCode::kNonPowerSlope,
                            "slope " + s.str() + " on segment " + std::to_string(i - 1) + " is not a power of " +
                                std::to_string(base));
    }
  }
  return PLElement(Trusted{}, std::move(breaks), base);
}

long PLElement::slope_exponent(std::size_t i) const {
  return *is_power_of_n(slope(breaks_.at(i), breaks_.at(i + 1)), base_);
}

bool operator<(const PLElement& a, const PLElement& b) {
  if (a.base_ != b.base_) return a.base_ < b.base_;
  return std::lexicographical_compare(a.breaks_.begin(), a.breaks_.end(), b.breaks_.begin(), b.breaks_.end(),
                                      [](const Breakpoint& p, const Breakpoint& q) {
                                        if (p.x != q.x) return p.x < q.x;
                                        return p.y < q.y;
                                      });
}

Rational evaluate(const PLElement& f, const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("evaluate: " + x.str() + " is outside [0,1]");
  const auto breaks = f.breaks();
  const std::size_t i = locate(breaks, x, [](const Breakpoint& b) -> const Rational& { return b.x; });
  return interpolate(breaks[i], breaks[i + 1], x);
}

PLElement compose(const PLElement& f, const PLElement& g) {
  check_same_base(f, g);
  // Walk the range of g and the domain of f together: every vertex of f∘g
  // sits over a breakpoint of g or the g-preimage of a breakpoint of f.
  const auto gb = g.breaks();
  const auto fb = f.breaks();
  std::vector<Breakpoint> out;
  out.reserve(gb.size() + fb.size());
  out.push_back({Rational(0), Rational(0)});

  std::size_t i = 1;  // next breakpoint of g
  std::size_t j = 1;  // next breakpoint of f
  while (i < gb.size() && j < fb.size()) {
    const Rational& gy = gb[i].y;
    const Rational& fx = fb[j].x;
    if (gy == fx) {
      out.push_back({gb[i].x, fb[j].y});
      ++i;
      ++j;
    } else if (gy < fx) {
      out.push_back({gb[i].x, interpolate(fb[j - 1], fb[j], gy)});
      ++i;
    } else {
      out.push_back({preimage(gb[i - 1], gb[i], fx), fb[j].y});
      ++j;
    }
  }
  return PLElement(PLElement::Trusted{}, std::move(out), f.base());
}

PLElement inverse(const PLElement& f) {
  std::vector<Breakpoint> out;
  out.reserve(f.breaks_.size());
  for (const auto& b : f.breaks_) out.push_back({b.y, b.x});
  return PLElement(PLElement::Trusted{}, std::move(out), f.base());
}

bool equals(const PLElement& f, const PLElement& g) {
  check_same_base(f, g);
  return f == g;
}

PLElement power(const PLElement& f, long n) {
  PLElement base_elem = n < 0 ? inverse(f) : f;
  unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  PLElement result(f.base());
  while (k > 0) {
    if (k & 1UL) result = compose(result, base_elem);
    k >>= 1;
    if (k > 0) base_elem = compose(base_elem, base_elem);
  }
  return result;
}

PLElement conjugate(const PLElement& h, const PLElement& f) { return compose(compose(h, f), inverse(h)); }

FixedSet fixed_set(const PLElement& f) {
  FixedSet pieces;
  const auto b = f.breaks();
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const Rational s = slope(b[i], b[i + 1]);
    if (s == 1) {
      if (b[i].x == b[i].y) pieces.push_back({b[i].x, b[i + 1].x});
      continue;
    }
    // x = y0 + s (x - x0)  <=>  x (1 - s) = y0 - s x0
    const Rational x = (b[i].y - s * b[i].x) / (Rational(1) - s);
    if (b[i].x <= x && x <= b[i + 1].x) pieces.push_back({x, x});
  }
  FixedSet merged;
  for (auto& p : pieces) {
    if (!merged.empty() && p.lo <= merged.back().hi) {
      if (merged.back().hi < p.hi) merged.back().hi = std::move(p.hi);
    } else {
      merged.push_back(std::move(p));
    }
  }
  return merged;
}

std::pair<long, long> boundary_slopes(const PLElement& f) {
  return {f.slope_exponent(0), f.slope_exponent(f.segment_count() - 1)};
}

std::ostream& operator<<(std::ostream& os, const PLElement& f) {
  os << "F(" << f.base() << ")[";
  bool first = true;
  for (const auto& b : f.breaks()) {
    if (!first) os << ' ';
    first = false;
    os << '(' << b.x << ',' << b.y << ')';
  }
  return os << ']';
}

}  // namespace thompson
