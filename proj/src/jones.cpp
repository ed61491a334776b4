#include "brim/jones.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

namespace brim {

namespace {

long cross(Exponent o, Exponent a, Exponent b) {
  return static_cast<long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long>(a.second - o.second) * (b.first - o.first);
}

int sign(long v) { return (v > 0) - (v < 0); }

}  // namespace

MonomialIdeal fitting_ideal(const MonomialIdeal& a, int i) {
  if (!a.is_m_primary()) throw Error(ErrorCode::NotMPrimary, "Fitting ideals need an m-primary monomial ideal");
  const auto& g = a.generators();
  const int n = static_cast<int>(g.size()) - 1;
  const int k = n + 1 - i;
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "negative Fitting index");
  if (k <= 0) return MonomialIdeal{{0, 0}};
  if (k > n) return MonomialIdeal{};
  // dp[c][s]: exponents of products using c columns so far; s = 1 when the
  // last column took its lower (y) entry, which blocks the next upper one.
  using Set = std::vector<Exponent>;
  std::vector<std::array<Set, 2>> dp(static_cast<std::size_t>(k) + 1);
  dp[0][0].push_back({0, 0});
  auto minimal = [](Set v) { return MonomialIdeal(std::move(v)).generators(); };
  for (int col = 0; col < n; ++col) {
    const int dx = g[col + 1].first - g[col].first;
    const int dy = g[col].second - g[col + 1].second;
    std::vector<std::array<Set, 2>> next(dp.size());
    for (int c = 0; c <= k; ++c)
      for (int s = 0; s < 2; ++s) {
        for (auto [x, y] : dp[c][s]) {
          next[c][0].push_back({x, y});
          if (c == k) continue;
          if (s == 0) next[c + 1][0].push_back({x + dx, y});
          next[c + 1][1].push_back({x, y + dy});
        }
      }
    for (auto& row : next)
      for (auto& set : row) set = set.empty() ? set : minimal(std::move(set));
    dp = std::move(next);
  }
  Set out = dp[k][0];
  out.insert(out.end(), dp[k][1].begin(), dp[k][1].end());
  return MonomialIdeal(std::move(out));
}

long ingclosed_sum(const MonomialIdeal& a) {
  if (!a.is_m_primary()) throw Error(ErrorCode::NotMPrimary, "monomial ideal is not m-primary");
  if (!(integral_closure(a) == a)) throw Error(ErrorCode::NotIntegrallyClosed, "ideal is not integrally closed");
  long sum = 0;
  const int n = static_cast<int>(a.size()) - 1;
  for (int i = 1; i <= n + 1; ++i) sum += (i % 2 ? 1 : -1) * static_cast<long>(newton_multiplicity(fitting_ideal(a, i)));
  return sum;
}

void JonesInstance::validate() const {
  if (s < 1 || t < 1 || i < 1 || j < 1 || d < 0 || e < 0)
    throw Error(ErrorCode::InvalidArgument, "need s, t, i, j >= 1 and d, e >= 0");
  if (d + e < 1) throw Error(ErrorCode::InvalidArgument, "J is not contained in mI (d = e = 0)");
}

std::string_view jones_case_name(JonesCase c) {
  switch (c) {
    case JonesCase::A1: return "a1";
    case JonesCase::A2: return "a2";
    case JonesCase::A3: return "a3";
    case JonesCase::A4: return "a4";
    case JonesCase::B1: return "b1";
    case JonesCase::B2: return "b2";
    case JonesCase::B3: return "b3";
    case JonesCase::Degenerate: return "DEGENERATE";
  }
  return "";
}

JonesCase jones_classify(const JonesInstance& in) {
  in.validate();
  const long above = static_cast<long>(in.s) * in.t - static_cast<long>(in.i) * in.j;
  if (above == 0) return JonesCase::Degenerate;
  const auto b = in.B();
  if (above > 0) {
    const int vt = sign(cross(in.Q(), in.T(), b));
    const int vp = sign(cross(in.Q(), in.P(), b));
    const int va = sign(cross(in.Q(), in.A(), b));
    if (vt > 0 && vp > 0 && va > 0) return JonesCase::A1;
    if (vt < 0 && vp > 0 && va > 0) return JonesCase::A2;
    if (vt < 0 && vp < 0 && va > 0) return JonesCase::A3;
    if (vt < 0 && vp < 0 && va < 0) return JonesCase::A4;
    return JonesCase::Degenerate;
  }
  const int vq = sign(cross(in.P(), in.Q(), b));
  const int vt = sign(cross(in.P(), in.T(), b));
  if (vq < 0 && vt < 0) return JonesCase::B1;
  if (vq > 0 && vt < 0) return JonesCase::B2;
  if (vq > 0 && vt > 0) return JonesCase::B3;
  return JonesCase::Degenerate;
}

long twice_dark_area(const JonesInstance& in) { return std::labs(cross(in.T(), in.B(), in.Q())); }
long twice_light_area(const JonesInstance& in) { return std::labs(cross(in.P(), in.B(), in.Q())); }

std::string staircase_svg(const MonomialIdeal& a, const std::optional<StaircaseAnnotation>& note) {
  if (!a.is_m_primary()) throw Error(ErrorCode::NotMPrimary, "staircase needs an m-primary monomial ideal");
  constexpr int kUnit = 20;
  const auto& g = a.generators();
  int w = g.back().first, h = g.front().second;
  if (note) {
    for (auto p : {note->inst.T(), note->inst.B(), note->inst.P(), note->inst.Q(), note->inst.A()}) {
      w = std::max(w, p.first);
      h = std::max(h, p.second);
    }
  }
  // Lattice (x, y) -> pixel; one unit of margin on every side.
  auto px = [&](int x) { return (x + 1) * kUnit; };
  auto py = [&](int y) { return (h + 1 - y) * kUnit; };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << (w + 2) * kUnit << "\" height=\""
     << (h + 2) * kUnit << "\" viewBox=\"0 0 " << (w + 2) * kUnit << ' ' << (h + 2) * kUnit << "\">\n";
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(w) << "\" y2=\"" << py(0)
     << "\" stroke=\"#888\"/>\n";
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(h)
     << "\" stroke=\"#888\"/>\n";
  if (note && note->shade) {
    const auto& in = note->inst;
    auto tri = [&](Exponent p, Exponent q, Exponent r, const char* fill, const char* cls) {
      os << "<polygon class=\"" << cls << "\" points=\"" << px(p.first) << ',' << py(p.second) << ' ' << px(q.first)
         << ',' << py(q.second) << ' ' << px(r.first) << ',' << py(r.second) << "\" fill=\"" << fill
         << "\" stroke=\"none\"/>\n";
    };
    tri(in.P(), in.B(), in.Q(), "#ddd", "light");
    tri(in.T(), in.B(), in.Q(), "#888", "dark");
  }
  os << "<polyline class=\"staircase\" fill=\"none\" stroke=\"black\" points=\"";
  os << px(g.front().first) << ',' << py(g.front().second);
  for (std::size_t k = 1; k < g.size(); ++k)
    os << ' ' << px(g[k].first) << ',' << py(g[k - 1].second) << ' ' << px(g[k].first) << ',' << py(g[k].second);
  os << "\"/>\n";
  os << "<polyline class=\"newton\" fill=\"none\" stroke=\"blue\" stroke-dasharray=\"4 2\" points=\"";
  const auto hull = newton_polygon(a).vertices;
  for (std::size_t k = 0; k < hull.size(); ++k) os << (k ? " " : "") << px(hull[k].first) << ',' << py(hull[k].second);
  os << "\"/>\n";
  for (auto [x, y] : g) os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"black\"/>\n";
  if (note) {
    const auto& in = note->inst;
    const std::pair<const char*, Exponent> pts[] = {{"T", in.T()}, {"B", in.B()}, {"P", in.P()}, {"Q", in.Q()},
                                                    {"A", in.A()}};
    for (const auto& [name, p] : pts)
      os << "<circle cx=\"" << px(p.first) << "\" cy=\"" << py(p.second) << "\" r=\"3\" fill=\"red\"/>"
         << "<text x=\"" << px(p.first) + 4 << "\" y=\"" << py(p.second) - 4 << "\" font-size=\"12\">" << name
         << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace brim
