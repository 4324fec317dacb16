#include <algorithm>

#include "paut/degeneration.hpp"

namespace paut {

namespace {

template <class D, class F>
PolyMap<D> map_all(const TFamily& a, Field target, F&& fn) {
  std::vector<Poly<D>> out;
  for (const auto& c : a.components()) out.push_back(c.template map_coefficients<D>(target, fn));
  return PolyMap<D>(std::move(out));
}

}  // namespace

Valuation family_valuation(const TFamily& a) {
  std::optional<long> v;
  for (const auto& c : a.components())
    for (const auto& [m, l] : c.terms()) {
      long e = l.valuation().value();
      v = v ? std::min(*v, e) : e;
    }
  return v ? Valuation(*v) : Valuation::neg_inf();
}

Endo family_value_at_zero(const TFamily& a) {
  Valuation v = family_valuation(a);
  if (v.is_neg_inf()) throw DomainError("zero family");
  if (v.value() < 0) throw PoleError(v.value());
  return map_all<Scalar>(a, a.field(), [](const Laurent& l) { return l.value_at_zero(); });
}

Endo specialize(const TFamily& a, const Scalar& c) {
  if (c.is_zero()) return family_value_at_zero(a);
  return map_all<Scalar>(a, a.field(), [&](const Laurent& l) { return l.evaluate(c); });
}

TFamily substitute_t_power(const TFamily& a, int m) {
  return map_all<Laurent>(a, a.field(), [&](const Laurent& l) { return l.substitute_power(m); });
}

TFamily compose_families(const TFamily& f, const TFamily& g) { return compose(f, g); }

TFamily family_inverse(const TFamily& a, const TFamily& candidate) {
  TFamily id = TFamily::identity(a.field(), a.nvars());
  if (candidate.nvars() != a.nvars() || !(compose(a, candidate) == id) || !(compose(candidate, a) == id))
    throw NotInvertible("not invertible over the ring");
  return candidate;
}

TFamily family_inverse(const TFamily& a) {
  if (a.nvars() != 2) throw DomainError("family inverse needs two variables or a candidate inverse");
  return family_inverse(a, invert_plane_map(a));
}

XAlphaSet x_alpha(const TFamily& a, std::size_t samples) {
  Valuation v = family_valuation(a);
  if (v.is_neg_inf() || v.value() >= 0) throw DomainError("no pole at t=0");
  int m = static_cast<int>(-v.value());
  Field k = a.field();
  XAlphaSet out{m, map_all<Scalar>(a, k, [&](const Laurent& l) { return l.coefficient(-m); }), {}, {}};
  int n = a.nvars();
  // Unit vectors, then (1, s, s^2, ...) and (s, 1, ..., 1) for s = 2, 3, ...
  std::vector<std::vector<Scalar>> ladder;
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> e(static_cast<std::size_t>(n), Scalar::zero(k));
    e[static_cast<std::size_t>(i)] = Scalar::one(k);
    ladder.push_back(e);
  }
  for (long s = 1; s <= 16; ++s) {
    std::vector<Scalar> geo, flat;
    Scalar c(k, s), power = Scalar::one(k);
    for (int i = 0; i < n; ++i) {
      geo.push_back(power);
      power *= c;
      flat.push_back(i == 0 ? c : Scalar::one(k));
    }
    ladder.push_back(geo);
    ladder.push_back(flat);
  }
  for (const auto& y : ladder) {
    if (out.images.size() >= samples) break;
    if (std::find(out.sample_points.begin(), out.sample_points.end(), y) != out.sample_points.end()) continue;
    std::vector<Scalar> img;
    bool nonzero = false;
    for (const auto& c : out.reduced.components()) {
      img.push_back(c.evaluate(y));
      nonzero = nonzero || !img.back().is_zero();
    }
    if (!nonzero) continue;
    InfinityPoint pt(img);
    if (std::find(out.images.begin(), out.images.end(), pt) != out.images.end()) continue;
    out.sample_points.push_back(y);
    out.images.push_back(pt);
  }
  return out;
}

PoleReport pole_propagation_check(const PlaneAut& f, const TFamily& alpha) {
  if (f.degree().value() < 2) throw DomainError("pole propagation needs deg f >= 2");
  if (alpha.field() != f.field() || alpha.nvars() != 2) throw DomainError("ring mismatch");
  PoleReport r;
  r.nu_alpha = family_valuation(alpha);
  TFamily ainv = family_inverse(alpha);
  TFamily F = lift_t(f.forward()), Finv = lift_t(f.inverse_map());
  r.nu_conjugate = family_valuation(compose(ainv, compose(F, alpha)));
  r.nu_inverse_conjugate = family_valuation(compose(ainv, compose(Finv, alpha)));
  r.nu_reverse_inverse = family_valuation(compose(alpha, compose(Finv, ainv)));
  auto has_pole = [](Valuation v) { return v.is_neg_inf() || v.value() < 0; };
  r.dichotomy = has_pole(r.nu_conjugate) || has_pole(r.nu_reverse_inverse);
  if (!has_pole(r.nu_alpha)) {
    r.note = "alpha has no pole; no claim";
    return r;
  }
  r.i_f = indeterminacy_point(f);
  r.x = x_alpha(alpha);
  for (const auto& p : r.x->images) r.avoids.push_back(!(p == *r.i_f));
  r.hypothesis = std::any_of(r.avoids.begin(), r.avoids.end(), [](bool b) { return b; });
  r.implication_holds = !r.hypothesis || has_pole(r.nu_conjugate);
  if (!r.hypothesis) r.note = "every sampled point of X_alpha lies in I_f; samples cannot certify containment";
  return r;
}

}  // namespace paut
