#pragma once

#include <padic_lattes/projpoint.hpp>
#include <padic_lattes/ratmap.hpp>

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace padic_lattes {

struct EscapeCertificate {
  std::string kind;
};

/// Per-point predicate installed by the family modules; a returned
/// certificate proves the orbit is infinite.
using EscapePredicate =
    std::function<std::optional<EscapeCertificate>(const ProjPoint&)>;

enum class HitWhich { Zero, Infinity, Other };

inline std::string hit_which_str(HitWhich w) {
  switch (w) {
    case HitWhich::Zero: return "0";
    case HitWhich::Infinity: return "inf";
    default: return "other";
  }
}

/// Exact forward orbit with termination status. points holds the orbit
/// segment actually computed; for PreperiodicTail the repeated point is
/// not stored again, so points.size() == tail_length + period and
/// f(points.back()) == points[tail_length].
struct OrbitRecord {
  ProjPoint seed;
  std::vector<ProjPoint> points;

  enum class Kind { PreperiodicTail, HitFixed, EscapeCertified, Unresolved };
  Kind kind = Kind::Unresolved;

  long tail_length = 0, period = 0;       // PreperiodicTail
  HitWhich hit = HitWhich::Other;         // HitFixed
  long hit_step = 0;                      // HitFixed
  std::string certificate_kind;           // EscapeCertified
  long certificate_step = 0;              // EscapeCertified
  long max_steps = 0;                     // Unresolved

  bool is_preperiodic() const {
    return kind == Kind::PreperiodicTail || kind == Kind::HitFixed;
  }
  std::string status_str() const {
    switch (kind) {
      case Kind::PreperiodicTail:
        return "PreperiodicTail(" + std::to_string(tail_length) + "," +
               std::to_string(period) + ")";
      case Kind::HitFixed:
        return "HitFixed(" + hit_which_str(hit) + "," +
               std::to_string(hit_step) + ")";
      case Kind::EscapeCertified:
        return "EscapeCertified(" + certificate_kind + "," +
               std::to_string(certificate_step) + ")";
      default:
        return "Unresolved(" + std::to_string(max_steps) + ")";
    }
  }
};

/// Iterates f exactly, detecting repetition by exact equality of
/// normalized coordinates. The orbit stops at the first visit to 0 or
/// infinity (or an extra family target) when that point is fixed; a
/// non-fixed first visit closes the HitFixed door for good and the orbit
/// runs on to plain cycle detection. coordinate_bit_cap bounds exact
/// coordinate growth; exceeding it reports Unresolved at that step.
inline OrbitRecord orbit(const RatMap& f, const ProjPoint& seed, long max_steps,
                         const EscapePredicate& escape = nullptr,
                         const std::vector<ProjPoint>& extra_targets = {},
                         long coordinate_bit_cap = 1 << 20) {
  if (max_steps < 1) throw std::domain_error("orbit: max_steps must be >= 1");
  OrbitRecord rec;
  rec.seed = seed;
  rec.max_steps = max_steps;

  std::unordered_map<ProjPoint, long> index;
  bool hit_door_open = true;

  auto is_target = [&](const ProjPoint& p) {
    if (p.is_infinity() || p == ProjPoint(Rat(0))) return true;
    for (const auto& t : extra_targets)
      if (p == t) return true;
    return false;
  };
  auto which_of = [](const ProjPoint& p) {
    if (p.is_infinity()) return HitWhich::Infinity;
    if (p == ProjPoint(Rat(0))) return HitWhich::Zero;
    return HitWhich::Other;
  };
  auto too_big = [&](const ProjPoint& p) {
    if (p.is_infinity()) return false;
    const auto bits = boost::multiprecision::msb(
        p.affine().num() == 0 ? BigInt(1) : BigInt(boost::multiprecision::abs(p.affine().num()))) +
                      boost::multiprecision::msb(p.affine().den());
    return static_cast<long>(bits) > coordinate_bit_cap;
  };

  // Arrival handling returns true when the orbit is finished.
  auto arrive = [&](const ProjPoint& p, long step) {
    rec.points.push_back(p);
    index.emplace(p, step);
    if (hit_door_open && is_target(p)) {
      hit_door_open = false;
      if (f.eval(p) == p) {
        rec.kind = OrbitRecord::Kind::HitFixed;
        rec.hit = which_of(p);
        rec.hit_step = step;
        return true;
      }
    }
    if (escape) {
      if (auto cert = escape(p)) {
        rec.kind = OrbitRecord::Kind::EscapeCertified;
        rec.certificate_kind = cert->kind;
        rec.certificate_step = step;
        return true;
      }
    }
    return false;
  };

  if (arrive(seed, 0)) return rec;
  for (long step = 1; step <= max_steps; ++step) {
    ProjPoint q = f.eval(rec.points.back());
    auto it = index.find(q);
    if (it != index.end()) {
      rec.kind = OrbitRecord::Kind::PreperiodicTail;
      rec.tail_length = it->second;
      rec.period = step - it->second;
      return rec;
    }
    if (too_big(q)) {
      rec.kind = OrbitRecord::Kind::Unresolved;
      rec.max_steps = step;
      return rec;
    }
    if (arrive(q, step)) return rec;
  }
  rec.kind = OrbitRecord::Kind::Unresolved;
  return rec;
}

}  // namespace padic_lattes
