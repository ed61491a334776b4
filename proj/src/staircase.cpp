#include "brim/staircase.hpp"

#include <algorithm>

namespace brim {

MonomialIdeal::MonomialIdeal(std::vector<Exponent> gens) {
  for (auto [a, b] : gens)
    if (a < 0 || b < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Sorted by a, a generator is minimal iff its b is below every earlier b.
  for (auto [a, b] : gens)
    if (gens_.empty() || b < gens_.back().second) gens_.emplace_back(a, b);
}

bool MonomialIdeal::is_m_primary() const {
  return !gens_.empty() && !is_unit() && gens_.front().first == 0 && gens_.back().second == 0;
}

bool MonomialIdeal::contains(Exponent p) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](Exponent g) { return g.first <= p.first && g.second <= p.second; });
}

std::size_t monomial_colength(const MonomialIdeal& a) {
  if (a.is_unit()) return 0;
  if (!a.is_m_primary()) throw Error(ErrorCode::NotMPrimary, "monomial ideal is not m-primary");
  const auto& g = a.generators();
  std::size_t n = 0;
  for (std::size_t k = 0; k + 1 < g.size(); ++k)
    n += static_cast<std::size_t>(g[k + 1].first - g[k].first) * static_cast<std::size_t>(g[k].second);
  return n;
}

namespace {

long cross(Exponent o, Exponent a, Exponent b) {
  return static_cast<long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long>(a.second - o.second) * (b.first - o.first);
}

}  // namespace

NewtonPolygon newton_polygon(const MonomialIdeal& a) {
  if (!a.is_m_primary()) throw Error(ErrorCode::NotMPrimary, "Newton polygon needs an m-primary ideal");
  // Lower convex hull (monotone chain); the generators are already sorted by x.
  std::vector<Exponent> hull;
  for (auto p : a.generators()) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  long twice = 0;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k)
    twice += static_cast<long>(hull[k + 1].first - hull[k].first) * (hull[k].second + hull[k + 1].second);
  return NewtonPolygon{hull, Rational(Integer(twice), Integer(2))};
}

std::size_t newton_multiplicity(const MonomialIdeal& a) {
  if (a.is_unit()) return 0;
  const auto c = newton_polygon(a).covolume;
  return static_cast<std::size_t>((c * Rational(2)).numerator().get_ui());
}

MonomialIdeal integral_closure(const MonomialIdeal& a) {
  if (a.is_unit()) return a;
  const auto hull = newton_polygon(a).vertices;
  std::vector<Exponent> out;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    auto [x1, y1] = hull[k];
    auto [x2, y2] = hull[k + 1];
    const long dx = x2 - x1, dy = y1 - y2;
    for (long x = x1; x < x2; ++x) {
      // smallest y with y >= y1 - dy (x - x1) / dx
      const long num = static_cast<long>(y1) * dx - dy * (x - x1);
      const long y = num <= 0 ? 0 : (num + dx - 1) / dx;
      out.emplace_back(static_cast<int>(x), static_cast<int>(y));
    }
  }
  out.push_back(hull.back());
  return MonomialIdeal(std::move(out));
}

}  // namespace brim
