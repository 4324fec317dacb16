#include <stdexcept>

#include "paut/conjugacy.hpp"

namespace paut {

namespace detail {
std::pair<UPoly, UPoly> split_delta(const UPoly& f);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      return "unknown";
  }
  return "?";
}

namespace {

struct FormDecision {
  Verdict verdict = Verdict::no;
  std::optional<PlaneAut> k;  // G = k∘F∘k^-1
  bool needs_extension = false;
  std::string reason;
};

PlaneAut aut_of(Field f, const Factor& x) { return PlaneAut::from_word(AmalgamWord(f, {x})); }

FormDecision yes(PlaneAut k, std::string reason) { return {Verdict::yes, std::move(k), false, std::move(reason)}; }
FormDecision no(std::string reason) { return {Verdict::no, std::nullopt, false, std::move(reason)}; }
FormDecision needs_extension(std::string reason) {
  return {Verdict::unknown, std::nullopt, true, "requires field extension: " + reason};
}

bool is_translation_class(const NormalForm& n) {
  if (n.family == Family::II) return n.P.degree() == 0;
  return n.family == Family::IV && n.P.is_zero();
}

// (x1 + c, x2) -> (x1, x2 + 1)
PlaneAut translation_swap(const NormalForm& from) {
  Field k = from.a.field();
  Scalar c = from.P.coeff(0);
  Factor scale = JonquieresFactor{c.inverse(), UPoly(k), Scalar::zero(k)};
  Factor turn = AffineFactor::linear(Scalar::zero(k), -Scalar::one(k), Scalar::one(k), Scalar::zero(k));
  return PlaneAut::from_word(AmalgamWord(k, {turn, scale}));
}

FormDecision decide_ii(const NormalForm& F, const NormalForm& G) {
  Field k = F.a.field();
  const UPoly &P = F.P, &Q = G.P;
  if (P.degree() != Q.degree()) return no("degrees of P differ");
  auto d = static_cast<unsigned>(P.degree().value());
  auto candidates = (Q.lead() / P.lead()).roots_of_power(d + 1);
  if (candidates.empty()) return needs_extension("no root of a^" + std::to_string(d + 1) + " = lead(Q)/lead(P)");
  bool incomplete = false;
  for (const auto& a : candidates) {
    std::vector<Scalar> bs;
    Scalar dk(k, static_cast<long>(d));
    if (d == 0) {
      bs.push_back(Scalar::zero(k));
    } else if (!dk.is_zero()) {
      Scalar qd = Q.coeff(static_cast<int>(d) - 1) / a.pow(d);
      bs.push_back((qd - P.coeff(static_cast<int>(d) - 1)) / (dk * P.lead()));
    } else if (k.characteristic() <= 4096) {
      bs = field_elements(k);
    } else {
      incomplete = true;
    }
    for (const auto& b : bs) {
      if (P.affine_arg(a, b).scaled(a) == Q) {
        Factor h = JonquieresFactor{a, UPoly(k), -(b / a)};
        return yes(aut_of(k, h), "Q(x) = a P(a x + b) with a = " + a.to_string() + ", b = " + b.to_string());
      }
    }
  }
  if (incomplete) return needs_extension("translation search not supported for this field");
  return no("no (a, b) in " + k.descriptor() + " with Q(x) = a P(a x + b)");
}

FormDecision decide_iii(const NormalForm& F, const NormalForm& G) {
  Field k = F.a.field();
  if (!(F.a == G.a) || F.m != G.m) return no("roots of unity differ");
  const UPoly &P = F.P, &Q = G.P;
  if (P.degree() != Q.degree()) return no("degrees of P differ");
  auto e = static_cast<unsigned>(P.degree().value());
  auto candidates = (Q.lead() / P.lead()).roots_of_power(e + 1);
  if (candidates.empty()) return needs_extension("no root of s^" + std::to_string(e + 1) + " = lead(Q)/lead(P)");
  bool scale_found = false;
  for (const auto& s : candidates) {
    if (!(P.affine_arg(s, Scalar::zero(k)).scaled(s) == Q)) continue;
    scale_found = true;
    auto as = s.roots_of_power(static_cast<unsigned>(F.m));
    if (as.empty()) continue;
    Factor h = JonquieresFactor{as.front(), UPoly(k), Scalar::zero(k)};
    return yes(aut_of(k, h), "Q(u) = s P(s u) with s = a^m, a = " + as.front().to_string());
  }
  if (scale_found) return needs_extension("no m-th root of the scale factor");
  return no("no s in " + k.descriptor() + " with Q(u) = s P(s u)");
}

UPoly pth_power_part(const NormalForm& n) {
  Field k = n.a.field();
  PlaneAut fp = power(aut_of(k, n.as_factor()), static_cast<long>(k.characteristic()));
  if (!(fp.forward()[1] == ScalarPoly::variable(k, 2, 1))) throw std::logic_error("p-th power moves x2");
  return UPoly::from_poly(fp.forward()[0] - ScalarPoly::variable(k, 2, 0), 1);
}

FormDecision decide_iv(const NormalForm& F, const NormalForm& G) {
  Field k = F.a.field();
  if (k.is_rationals()) return no("distinct translation normal forms");
  UPoly pt = pth_power_part(F), qt = pth_power_part(G);
  JonquieresFactor fj = F.as_factor(), gj = G.as_factor();
  Scalar one = Scalar::one(k), zero = Scalar::zero(k);
  // x2 -> x2 + c keeps the degree and the leading coefficient.
  if (pt.degree() != qt.degree()) return no("p-th power parts have different degrees");
  if (!pt.degree().is_neg_inf() && !(pt.lead() == qt.lead()))
    return no("p-th power parts have different leading coefficients");
  if (k.characteristic() > 4096) return needs_extension("translation search not supported for this field");
  for (const auto& c : field_elements(k)) {
    if (!(qt == pt.shift(c))) continue;
    JonquieresFactor t{one, UPoly(k), -c};
    JonquieresFactor moved = t.compose(fj).compose(t.inverse());
    auto [v, r] = detail::split_delta(gj.P - moved.P);
    if (!v.is_zero()) continue;
    JonquieresFactor kill{one, r, zero};
    return yes(aut_of(k, kill.compose(t)), "p-th powers agree up to x2 -> x2 + " + c.to_string());
  }
  long d = pt.degree().is_neg_inf() ? 0 : pt.degree().value();
  if (d <= 0 || d % static_cast<long>(k.characteristic()) != 0)
    return no("p-th powers are not related by a translation");
  return needs_extension("translation may lie outside " + k.descriptor());
}

FormDecision decide_forms(const NormalForm& F, const NormalForm& G) {
  Field k = F.a.field();
  if (F == G) return yes(PlaneAut::identity(k), "identical normal forms");
  if (is_translation_class(F) && is_translation_class(G) && F.family != G.family) {
    PlaneAut swap = F.family == Family::II ? translation_swap(F) : translation_swap(G).inverse();
    return yes(swap, "translations (x1 + 1, x2) and (x1, x2 + 1) are conjugate");
  }
  if (F.family != G.family) return no("different families " + family_name(F.family) + " and " + family_name(G.family));
  switch (F.family) {
    case Family::I:
      if (F.a * G.a == Scalar::one(k)) {
        Factor turn = AffineFactor::linear(Scalar::zero(k), Scalar::one(k), -Scalar::one(k), Scalar::zero(k));
        return yes(aut_of(k, turn), "a = b^-1");
      }
      return no("a is neither b nor b^-1");
    case Family::II:
      return decide_ii(F, G);
    case Family::III:
      return decide_iii(F, G);
    case Family::IV:
      return decide_iv(F, G);
  }
  throw std::logic_error("unknown family");
}

}  // namespace

ConjugacyResult are_conjugate_algebraic(const PlaneAut& f, const PlaneAut& g) {
  if (f.field() != g.field()) throw DomainError("ring mismatch");
  NormalFormResult nf = normal_form(f), ng = normal_form(g);
  ConjugacyResult res;
  res.form_f = nf.form;
  res.form_g = ng.form;
  FormDecision d = decide_forms(nf.form, ng.form);
  res.verdict = d.verdict;
  res.needs_extension = d.needs_extension;
  res.reason = d.reason;
  if (d.k) {
    PlaneAut F = PlaneAut::from_word(AmalgamWord(f.field(), {nf.form.as_factor()}));
    PlaneAut G = PlaneAut::from_word(AmalgamWord(f.field(), {ng.form.as_factor()}));
    bool forms_ok = conjugate(*d.k, F) == G;
    res.checks.push_back({"normal forms conjugate", forms_ok});
    PlaneAut h = compose(compose(ng.conjugator.inverse(), *d.k), nf.conjugator);
    bool ok = conjugate(h, f) == g;
    res.checks.push_back({"g = h f h^-1", ok});
    if (!forms_ok || !ok) throw std::logic_error("conjugator fails verification");
    res.conjugator = h;
  }
  return res;
}

ConjugacyResult are_conjugate(const PlaneAut& f, const PlaneAut& g) {
  if (!f.is_special() || !g.is_special()) throw DomainError("conjugacy test needs special automorphisms (Jacobian 1)");
  bool af = is_algebraic(f), ag = is_algebraic(g);
  if (af && ag) return are_conjugate_algebraic(f, g);
  ConjugacyResult res;
  if (af != ag) {
    res.verdict = Verdict::no;
    res.reason = "exactly one of the maps is algebraic";
    return res;
  }
  auto hf = std::get<HenonForm>(henon_normalize(f));
  auto hg = std::get<HenonForm>(henon_normalize(g));
  res.invariants_f = henon_invariants(hf);
  res.invariants_g = henon_invariants(hg);
  if (!(*res.invariants_f == *res.invariants_g)) {
    res.verdict = Verdict::no;
    res.reason = "cyclic de Jonquières degrees differ";
    return res;
  }
  Endo target = hf.core.recompose();
  auto gs = hg.core.factors();
  for (std::size_t r = 0; r < gs.size(); r += 2) {
    std::vector<Factor> rotated(gs.begin() + static_cast<std::ptrdiff_t>(r), gs.end());
    rotated.insert(rotated.end(), gs.begin(), gs.begin() + static_cast<std::ptrdiff_t>(r));
    if (!(AmalgamWord(f.field(), rotated).recompose() == target)) continue;
    PlaneAut prefix = PlaneAut::from_word(
        AmalgamWord(f.field(), std::vector<Factor>(gs.begin(), gs.begin() + static_cast<std::ptrdiff_t>(r))));
    PlaneAut h = compose(compose(hg.conjugator.inverse(), prefix), hf.conjugator);
    bool ok = conjugate(h, f) == g;
    res.checks.push_back({"g = h f h^-1", ok});
    if (!ok) throw std::logic_error("rotation certificate fails verification");
    res.verdict = Verdict::yes;
    res.conjugator = h;
    res.reason = "cyclic rotation of the normalized words";
    return res;
  }
  res.verdict = Verdict::unknown;
  res.reason = "invariants agree but no rotation certificate was found";
  return res;
}

std::pair<PlaneAut, long> minimize_conjugator(const PlaneAut& f, const PlaneAut& h) {
  if (!f.word() || !h.word()) throw DomainError("minimization needs special automorphisms");
  // Degrees of h∘f^l are read off reduced words; only the winner is expanded.
  AmalgamWord step = *f.word(), back = f.word()->inverse();
  AmalgamWord up = reduce_word(*h.word()), down = up, best = up;
  long best_l = 0;
  for (long s = 1; s <= 16; ++s) {
    up = reduce_word(up.then(step));
    down = reduce_word(down.then(back));
    if (up.degree() < best.degree()) {
      best = up;
      best_l = s;
    }
    if (down.degree() < best.degree()) {
      best = down;
      best_l = -s;
    }
    if (s >= std::abs(best_l) + 2 && up.degree() > best.degree() && down.degree() > best.degree()) break;
  }
  return {PlaneAut::from_word(best), best_l};
}

CertificateReport verify_conjugacy_certificate(const PlaneAut& f, const PlaneAut& g, const PlaneAut& h) {
  CertificateReport r;
  if (f.field() != g.field() || f.field() != h.field()) return r;
  r.valid = conjugate(h, f) == g;
  r.deg_h = h.degree();
  r.deg_g = g.degree();
  long dh = r.deg_h.value(), dg = r.deg_g.value();
  r.regular_bound = dh * dh <= dg;
  r.diagonal_bound = dh <= dg;
  r.deg_h_min = r.deg_h;
  r.regular_bound_min = r.regular_bound;
  if (r.valid && f.is_special() && h.is_special() && !is_algebraic(f)) {
    auto [hm, l] = minimize_conjugator(f, h);
    r.minimizing_power = l;
    r.deg_h_min = hm.degree();
    long m = hm.degree().value();
    r.regular_bound_min = m * m <= dg;
  }
  return r;
}

}  // namespace paut
