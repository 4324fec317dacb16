#include <stdexcept>

#include "paut/conjugacy.hpp"

namespace paut {

namespace detail {
std::pair<UPoly, UPoly> split_delta(const UPoly& f);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::I:
      return "I";
    case Family::II:
      return "II";
    case Family::III:
      return "III";
    case Family::IV:
      return "IV";
  }
  return "?";
}

JonquieresFactor NormalForm::as_factor() const {
  Field k = a.field();
  Scalar one = Scalar::one(k), zero = Scalar::zero(k);
  switch (family) {
    case Family::I:
      return {a, UPoly(k), zero};
    case Family::II:
      return {one, P, zero};
    case Family::III:
      return {a, UPoly::monomial(one, m - 1) * P.compose(UPoly::monomial(one, m)), zero};
    case Family::IV:
      return {one, k.is_rationals() ? UPoly(k) : v_embed(P, k.characteristic()), one};
  }
  throw std::logic_error("unknown family");
}

Endo NormalForm::representative() const { return as_factor().to_map(); }

std::string NormalForm::describe() const {
  switch (family) {
    case Family::I:
      return "I(a=" + a.to_string() + ")";
    case Family::II:
      return "II(P=" + P.to_string("x2") + ")";
    case Family::III:
      return "III(zeta=" + a.to_string() + ", m=" + std::to_string(m) + ", P=" + P.to_string("x2") + ")";
    case Family::IV:
      return "IV(P=" + P.to_string("x2") + ")";
  }
  return "?";
}

std::pair<NormalForm, JonquieresFactor> normal_form_sj(const JonquieresFactor& j) {
  Field k = j.field();
  Scalar one = Scalar::one(k), zero = Scalar::zero(k);
  auto conj = [](const JonquieresFactor& h, const JonquieresFactor& x) { return h.compose(x).compose(h.inverse()); };
  if (!j.a.is_one()) {
    const Scalar& a = j.a;
    JonquieresFactor t{one, UPoly(k), a * j.c / (one - a)};
    JonquieresFactor j1 = conj(t, j);
    if (!j1.c.is_zero()) throw std::logic_error("translation did not vanish");
    // (x1 + R, x2) changes the coefficient of x2^n by r_n (a^-n - a).
    std::vector<Scalar> r;
    auto pc = j1.P.coeffs();
    for (std::size_t n = 0; n < pc.size(); ++n) {
      Scalar gap = a - a.pow(-static_cast<long>(n));
      r.push_back(gap.is_zero() ? zero : pc[n] / gap);
    }
    JonquieresFactor kill{one, UPoly(k, std::move(r)), zero};
    JonquieresFactor j2 = conj(kill, j1);
    JonquieresFactor total = kill.compose(t);
    if (j2.P.is_zero()) return {NormalForm{Family::I, a, 0, UPoly(k)}, total};
    auto order = a.multiplicative_order();
    if (!order) throw std::logic_error("surviving coefficients for an element of infinite order");
    int m = static_cast<int>(*order);
    std::vector<Scalar> red;
    auto sc = j2.P.coeffs();
    for (std::size_t i = 0; i < sc.size(); ++i) {
      if (sc[i].is_zero()) continue;
      if ((i + 1) % static_cast<std::size_t>(m) != 0) throw std::logic_error("surviving exponent off the residue class");
      std::size_t idx = i / static_cast<std::size_t>(m);
      if (red.size() <= idx) red.resize(idx + 1, zero);
      red[idx] = sc[i];
    }
    return {NormalForm{Family::III, a, m, UPoly(k, std::move(red))}, total};
  }
  if (j.c.is_zero()) return {NormalForm{Family::II, one, 0, j.P}, JonquieresFactor::identity(k)};
  JonquieresFactor scale{j.c, UPoly(k), zero};
  JonquieresFactor j1 = conj(scale, j);
  auto [v, rr] = detail::split_delta(j1.P);
  JonquieresFactor kill{one, -rr, zero};
  JonquieresFactor j2 = conj(kill, j1);
  if (!(j2.P == v) || !j2.c.is_one()) throw std::logic_error("family IV reduction failed");
  UPoly red(k);
  if (!k.is_rationals()) {
    std::uint64_t p = k.characteristic();
    std::vector<Scalar> c;
    auto vc = v.coeffs();
    for (std::size_t i = p - 1; i < vc.size(); i += p) c.push_back(vc[i]);
    red = UPoly(k, std::move(c));
  }
  return {NormalForm{Family::IV, one, 0, red}, kill.compose(scale)};
}

NormalFormResult normal_form(const PlaneAut& f) {
  if (!f.is_special()) throw DomainError("normal form needs a special automorphism (Jacobian 1)");
  if (!is_algebraic(f)) throw DomainError("not algebraic");
  NormalizedAut n = henon_normalize(f);
  const auto* sj = std::get_if<SJForm>(&n);
  if (!sj) throw std::logic_error("algebraic map normalized to a Hénon word");
  auto [form, k] = normal_form_sj(sj->element);
  PlaneAut h = compose(PlaneAut::from_word(AmalgamWord(f.field(), {k})), sj->conjugator);
  if (!(conjugate(h, f).forward() == form.representative()))
    throw std::logic_error("normal form fails the conjugation identity");
  return {form, h};
}

}  // namespace paut
