#pragma once

#include <optional>

#include "paut/field.hpp"
#include "paut/laurent.hpp"

namespace paut {

inline std::optional<Scalar> exact_quotient(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) return std::nullopt;
  return a / b;
}
inline std::optional<Laurent> exact_quotient(const Laurent& a, const Laurent& b) { return a.try_divide(b); }

// c -> c^p. Elements of F_p are fixed.
inline Scalar coeff_frobenius(const Scalar& c) { return c; }
inline Laurent coeff_frobenius(const Laurent& c) { return c.frobenius(); }

inline Scalar coeff_zero(Field f, const Scalar*) { return Scalar::zero(f); }
inline Laurent coeff_zero(Field f, const Laurent*) { return Laurent::zero(f); }

template <class C>
C zero_of(Field f) {
  return coeff_zero(f, static_cast<const C*>(nullptr));
}
template <class C>
C one_of(Field f) {
  return C(Scalar::one(f));
}
template <class C>
C from_scalar(const Scalar& s) {
  return C(s);
}

}  // namespace paut
