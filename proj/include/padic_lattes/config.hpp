#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace padic_lattes {

/// Per-family recursion-depth caps. Degrees grow like 4^n (Weierstrass),
/// 4^n (Legendre raw) and d^(n-1) (general family), so the caps keep the
/// exact arithmetic at desk scale. PADIC_LATTES_LEVEL_CAP overrides all
/// three.
struct LevelCaps {
  long weierstrass = 5;
  long legendre = 3;
  long general = 4;
};

inline std::optional<long> level_cap_env() {
  const char* v = std::getenv("PADIC_LATTES_LEVEL_CAP");
  if (!v || !*v) return std::nullopt;
  return std::strtol(v, nullptr, 10);
}

inline LevelCaps effective_caps(std::optional<long> override_cap = {}) {
  LevelCaps caps;
  std::optional<long> o = override_cap ? override_cap : level_cap_env();
  if (o) {
    caps.weierstrass = *o;
    caps.legendre = *o;
    caps.general = *o;
  }
  return caps;
}

inline void check_cap(long n, long cap, const char* family) {
  if (n > cap)
    throw std::domain_error(std::string(family) + ": level " +
                            std::to_string(n) + " exceeds the cap " +
                            std::to_string(cap) +
                            " (set PADIC_LATTES_LEVEL_CAP to raise it)");
}

}  // namespace padic_lattes
