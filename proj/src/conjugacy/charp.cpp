#include "paut/conjugacy.hpp"

namespace paut {

UPoly delta_map(const UPoly& r) { return r.shift(Scalar::one(r.field())) - r; }

UPoly n_map(const UPoly& f) {
  std::uint64_t p = f.field().characteristic();
  if (p == 0) throw DomainError("N is only defined in positive characteristic");
  if (p > 100000) throw DomainError("N is limited to p <= 100000");
  UPoly acc(f.field());
  for (std::uint64_t k = 0; k < p; ++k) acc += f.shift(Scalar(f.field(), static_cast<long>(k)));
  return acc;
}

bool in_v(const UPoly& f) {
  std::uint64_t p = f.field().characteristic();
  if (p == 0) return f.is_zero();
  auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero() && (i + 1) % p != 0) return false;
  }
  return true;
}

UPoly v_embed(const UPoly& p_tilde, std::uint64_t p) {
  Field k = p_tilde.field();
  UPoly out(k);
  auto c = p_tilde.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out += UPoly::monomial(c[i], static_cast<int>(i * p + p - 1));
  return out;
}

namespace detail {

// F = v + delta(r), killing from the top every coefficient whose index m has m+1 invertible.
std::pair<UPoly, UPoly> split_delta(const UPoly& f) {
  Field k = f.field();
  std::uint64_t p = k.characteristic();
  UPoly v = f, r(k);
  for (;;) {
    int m = static_cast<int>(v.degree().is_neg_inf() ? -1 : v.degree().value());
    while (m >= 0 && (v.coeff(m).is_zero() || (p != 0 && (static_cast<std::uint64_t>(m) + 1) % p == 0))) --m;
    if (m < 0) break;
    UPoly term = UPoly::monomial(v.coeff(m) / Scalar(k, static_cast<long>(m + 1)), m + 1);
    v -= delta_map(term);
    r += term;
  }
  return {v, r};
}

}  // namespace detail

CharPDecomposition decompose_v_delta(const UPoly& f) {
  std::uint64_t p = f.field().characteristic();
  if (p == 0) throw DomainError("the V/delta decomposition needs positive characteristic");
  auto [v, r] = detail::split_delta(f);
  std::vector<Scalar> red;
  auto c = v.coeffs();
  for (std::size_t i = p - 1; i < c.size(); i += p) red.push_back(c[i]);
  return {f, v, r, UPoly(f.field(), std::move(red))};
}

}  // namespace paut
