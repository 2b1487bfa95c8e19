#pragma once

#include <padic_lattes/nfelem.hpp>
#include <padic_lattes/ratmap.hpp>

#include <stdexcept>

namespace padic_lattes {

inline bool is_fixed_nf(const RatMap& f, const NFElem& x) {
  return eval_nf(f.num(), x) == x * eval_nf(f.den(), x);
}

/// f'(x) at a fixed point lying in Q[t]/(m).
inline NFElem multiplier_at_nf(const RatMap& f, const NFElem& x) {
  if (!is_fixed_nf(f, x))
    throw std::domain_error("multiplier_at_nf: point is not fixed");
  const NFElem n = eval_nf(f.num(), x), d = eval_nf(f.den(), x);
  if (d.is_zero()) throw std::domain_error("multiplier_at_nf: pole");
  const NFElem np = eval_nf(f.num().derivative(), x);
  const NFElem dp = eval_nf(f.den().derivative(), x);
  return (np * d - n * dp) / (d * d);
}

}  // namespace padic_lattes
