#pragma once

#include <padic_lattes/upoly.hpp>
#include <padic_lattes/valuation.hpp>

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace padic_lattes {

/// Lower convex hull of {(i, v_p(a_i)) : a_i != 0}. The root t = 0 is
/// factored out first (ord0), so the hull starts at abscissa ord0 and
/// ends at the degree. Sign convention, pinned once for the whole
/// project: a segment of slope s carries roots of valuation -s, with
/// multiplicity the segment's horizontal length.
struct NewtonPolygon {
  BigInt prime;
  long ord0 = 0;
  std::vector<std::pair<long, Rat>> points;    // (i, v_p(a_i)), ascending i
  std::vector<std::pair<long, Rat>> vertices;  // lower hull, ascending i

  struct Segment {
    Rat slope;
    long length;
  };
  std::vector<Segment> segments() const {
    std::vector<Segment> out;
    for (std::size_t k = 1; k < vertices.size(); ++k) {
      const auto& [x0, y0] = vertices[k - 1];
      const auto& [x1, y1] = vertices[k];
      out.push_back({(y1 - y0) / Rat(x1 - x0), x1 - x0});
    }
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["prime"] = prime.str();
    j["ord0"] = ord0;
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const auto& [i, v] : vertices)
      verts.push_back(nlohmann::ordered_json::array({i, v.str()}));
    j["vertices"] = verts;
    return j;
  }
};

inline NewtonPolygon newton_polygon(const UPoly& f, const BigInt& p) {
  if (f.is_zero()) throw std::domain_error("newton_polygon: zero polynomial");
  if (!is_prime(p)) throw std::domain_error("newton_polygon: p is not prime");
  NewtonPolygon np;
  np.prime = p;
  np.ord0 = f.ord0();
  for (long i = np.ord0; i <= f.degree(); ++i) {
    const Rat c = f.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    np.points.emplace_back(i, val_of(c, p).value());
  }
  // Monotone-chain lower hull; collinear interior points are dropped so
  // consecutive slopes strictly increase.
  for (const auto& pt : np.points) {
    while (np.vertices.size() >= 2) {
      const auto& a = np.vertices[np.vertices.size() - 2];
      const auto& b = np.vertices.back();
      // keep b iff it lies strictly below segment a->pt
      const Rat lhs = (b.second - a.second) * Rat(pt.first - a.first);
      const Rat rhs = (pt.second - a.second) * Rat(b.first - a.first);
      if (lhs >= rhs)
        np.vertices.pop_back();
      else
        break;
    }
    np.vertices.push_back(pt);
  }
  return np;
}

/// Multiset of root valuations, obtained from the Newton polygon.
/// Entries are sorted by valuation; the total multiplicity plus the
/// multiplicity of the root 0 equals the degree.
struct RootValuationSpectrum {
  BigInt prime;
  long zero_root_multiplicity = 0;
  std::vector<std::pair<Rat, long>> entries;  // (valuation, multiplicity)

  long total_multiplicity() const {
    long s = zero_root_multiplicity;
    for (const auto& [v, m] : entries) s += m;
    return s;
  }

  friend bool operator==(const RootValuationSpectrum& a,
                         const RootValuationSpectrum& b) {
    return a.prime == b.prime &&
           a.zero_root_multiplicity == b.zero_root_multiplicity &&
           a.entries == b.entries;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["prime"] = prime.str();
    j["ord0"] = zero_root_multiplicity;
    nlohmann::ordered_json spec = nlohmann::ordered_json::array();
    for (const auto& [v, m] : entries) {
      nlohmann::ordered_json e;
      e["valuation"] = v.str();
      e["multiplicity"] = m;
      spec.push_back(e);
    }
    j["spectrum"] = spec;
    return j;
  }

  std::string str() const {
    std::string s = "{";
    for (const auto& [v, m] : entries) {
      if (s.size() > 1) s += ", ";
      s += "(" + v.str() + "," + std::to_string(m) + ")";
    }
    s += "}";
    if (zero_root_multiplicity > 0)
      s += " + 0-root x" + std::to_string(zero_root_multiplicity);
    return s;
  }
};

inline RootValuationSpectrum root_valuations(const UPoly& f, const BigInt& p) {
  NewtonPolygon np = newton_polygon(f, p);
  RootValuationSpectrum sp;
  sp.prime = p;
  sp.zero_root_multiplicity = np.ord0;
  for (const auto& seg : np.segments()) sp.entries.emplace_back(-seg.slope, seg.length);
  std::sort(sp.entries.begin(), sp.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return sp;
}

}  // namespace padic_lattes
