#pragma once

#include <padic_lattes/rat.hpp>

#include <functional>
#include <string>

namespace padic_lattes {

/// Point of the projective line over Q, normalized so affine points are
/// (x, 1) and infinity is (1, 0). Exact equality on normalized
/// coordinates is the cycle-detection primitive for orbits.
class ProjPoint {
 public:
  ProjPoint() : x_(0), inf_(false) {}
  ProjPoint(Rat x) : x_(std::move(x)), inf_(false) {}
  static ProjPoint infinity() {
    ProjPoint p;
    p.inf_ = true;
    p.x_ = Rat(1);
    return p;
  }

  bool is_infinity() const { return inf_; }
  const Rat& affine() const {
    if (inf_) throw std::domain_error("ProjPoint: affine coordinate of infinity");
    return x_;
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.x_ == b.x_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) {
    return !(a == b);
  }

  std::string str() const { return inf_ ? "inf" : x_.str(); }

 private:
  Rat x_;
  bool inf_;
};

}  // namespace padic_lattes

namespace std {
template <>
struct hash<padic_lattes::ProjPoint> {
  std::size_t operator()(const padic_lattes::ProjPoint& p) const {
    if (p.is_infinity()) return 0x9e3779b97f4a7c15ull;
    return std::hash<padic_lattes::Rat>{}(p.affine());
  }
};
}  // namespace std
