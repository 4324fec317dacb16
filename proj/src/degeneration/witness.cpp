#include <algorithm>
#include <random>
#include <stdexcept>

#include "paut/degeneration.hpp"

namespace paut {

namespace {

LaurentPoly tpow(Field k, int e) { return LaurentPoly::constant(k, 2, Laurent::monomial(Scalar::one(k), e)); }
LaurentPoly cst(const Scalar& c) { return LaurentPoly::constant(c.field(), 2, Laurent(c)); }
LaurentPoly var(Field k, int i) { return LaurentPoly::variable(k, 2, i); }

// (t^e x1, t^-e x2)
TFamily diagonal(Field k, int e) { return TFamily({tpow(k, e) * var(k, 0), tpow(k, -e) * var(k, 1)}); }

LaurentPoly shift_t(const LaurentPoly& p, int e) {
  return p.map_coefficients<Laurent>(p.field(), [e](const Laurent& l) { return l.shifted(e); });
}

bool has_pole(Valuation v) { return v.is_neg_inf() || v.value() < 0; }

// Deterministic nonzero parameters.
std::vector<Scalar> sample_params(Field k, std::size_t count) {
  std::mt19937_64 rng(0x5eed);
  std::vector<Scalar> out;
  if (!k.is_rationals() && k.characteristic() - 1 <= count) {
    for (std::uint64_t c = 1; c < k.characteristic(); ++c) out.emplace_back(k, static_cast<long>(c));
    while (out.size() < count) out.push_back(out[out.size() % (k.characteristic() - 1)]);
    return out;
  }
  while (out.size() < count) {
    Scalar c;
    if (k.is_rationals()) {
      std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
      c = Scalar(k, mpq_class(num(rng), den(rng)));
    } else {
      std::uniform_int_distribution<std::uint64_t> u(1, k.characteristic() - 1);
      c = Scalar(k, static_cast<long>(u(rng)));
    }
    if (c.is_zero() || std::find(out.begin(), out.end(), c) != out.end()) continue;
    out.push_back(c);
  }
  return out;
}

// Fills family, limit and checks from source and conjugator.
void finish(DegenerationWitness& w, const TFamily& conj_inverse) {
  TFamily direct = compose(conj_inverse, compose(lift_t(w.source), w.conjugator));
  w.checks.push_back({"family = conjugator^-1 f conjugator", direct == w.family});
  Valuation v = family_valuation(w.family);
  w.checks.push_back({"family has no pole", !has_pole(v)});
  w.limit = family_value_at_zero(w.family);
  auto params = sample_params(w.source.field(), 3);
  w.checks.push_back({"specializations conjugate to f", check_specializations(w, params)});
  for (const auto& c : w.checks)
    if (!c.passed) throw std::logic_error("degeneration witness fails: " + c.name);
}

DegenerationWitness diagonal_witness(const Scalar& zeta, int m, const UPoly& P) {
  Field k = zeta.field();
  NormalForm nf{m == 1 ? Family::II : Family::III, zeta, m == 1 ? 0 : m, P};
  Endo f = nf.representative();
  // (zeta x1 + t^m x2^(m-1) P(t^m x2^m), zeta^-1 x2)
  LaurentPoly arg = tpow(k, m) * var(k, 1).pow(static_cast<unsigned>(m));
  LaurentPoly first = cst(zeta) * var(k, 0) + tpow(k, m) * var(k, 1).pow(static_cast<unsigned>(m - 1)) * P.apply(arg);
  TFamily expected({first, cst(zeta.inverse()) * var(k, 1)});
  DegenerationWitness w{f, diagonal(k, -1), expected, f, {}, {}, {}, {}, m == 1 ? std::nullopt : std::optional<int>(m),
                        {}, {}};
  finish(w, diagonal(k, 1));
  Endo target({ScalarPoly::variable(k, 2, 0).scaled(zeta), ScalarPoly::variable(k, 2, 1).scaled(zeta.inverse())});
  w.checks.push_back({"limit is diagonal", w.limit == target});
  if (!w.checks.back().passed) throw std::logic_error("unexpected limit");
  return w;
}

}  // namespace

std::string variant_name(Variant v) { return v == Variant::F1 ? "F1" : "F2"; }

Variant parse_variant(std::string_view s) {
  if (s == "F1") return Variant::F1;
  if (s == "F2") return Variant::F2;
  throw ParseError("variant must be F1 or F2", 0);
}

bool check_specializations(const DegenerationWitness& w, std::span<const Scalar> params) {
  TFamily inv = family_inverse(w.conjugator);
  for (const auto& c : params) {
    Endo h = specialize(w.conjugator, c), hinv = specialize(inv, c);
    if (!(specialize(w.family, c) == compose(hinv, compose(w.source, h)))) return false;
  }
  return true;
}

DegenerationWitness degenerate_family_ii(const UPoly& P) { return diagonal_witness(Scalar::one(P.field()), 1, P); }

DegenerationWitness degenerate_family_iii(const Scalar& zeta, int m, const UPoly& P) {
  auto ord = zeta.multiplicative_order();
  if (m < 2 || !ord || *ord != static_cast<std::uint64_t>(m))
    throw DomainError("zeta must be a primitive m-th root of unity with m >= 2");
  return diagonal_witness(zeta, m, P);
}

DegenerationWitness degenerate_family_iv(const UPoly& Q, Variant variant) {
  Field k = Q.field();
  if (k.is_rationals()) throw DomainError("family (iv) degeneration needs positive characteristic");
  Endo f({(ScalarPoly::variable(k, 2, 0) + Q.to_poly(2, 1)),
          ScalarPoly::variable(k, 2, 1) + ScalarPoly::constant(2, Scalar::one(k))});
  LaurentPoly x1 = var(k, 0), x2 = var(k, 1);
  DegenerationWitness w{f, TFamily::identity(k, 2), lift_t(f), f, {}, {}, {}, {}, {}, {}, {}};
  if (Q.is_zero()) {
    if (variant == Variant::F2) {
      w.conjugator = diagonal(k, 1);
      w.family = TFamily({x1, x2 + tpow(k, 1)});
      finish(w, diagonal(k, -1));
    } else {
      finish(w, w.conjugator);
    }
    return w;
  }
  int d = static_cast<int>(Q.degree().value());
  Scalar mu = Q.lead();
  // q = p^e with e >= 1
  long q = static_cast<long>(k.characteristic());
  while (q <= d) q *= static_cast<long>(k.characteristic());
  Scalar lambda = mu.inverse().pow(q);
  w.d = d;
  w.mu = mu;
  w.q = q;
  w.lambda = lambda;
  auto uq = static_cast<unsigned>(q);
  // alpha = (x1/t^d, t^d x2 + lambda x1^q + 1/t)
  LaurentPoly a2 = tpow(k, d) * x2 + cst(lambda) * x1.pow(uq) + tpow(k, -1);
  TFamily alpha({tpow(k, -d) * x1, a2});
  TFamily alpha_inv = family_inverse(
      alpha, TFamily({tpow(k, d) * x1, tpow(k, -d) * (x2 - cst(lambda) * tpow(k, d * static_cast<int>(q)) * x1.pow(uq) -
                                                       tpow(k, -1))}));
  TFamily G = compose(alpha_inv, compose(lift_t(f), alpha));
  LaurentPoly P = shift_t(G[0] - x1 - cst(mu), -1);
  w.P = P;
  w.checks.push_back({"P has no pole", !has_pole(family_valuation(TFamily({P, x2})))});
  w.checks.push_back(
      {"second component is x2 - lambda t^(q-d) P^q", G[1] == x2 - cst(lambda) * tpow(k, static_cast<int>(q) - d) * P.pow(uq)});
  w.checks.push_back({"Q(alpha2) = mu/t^d + P/t^(d-1)", Q.apply(a2) == cst(mu) * tpow(k, -d) + shift_t(P, 1 - d)});
  for (const auto& c : w.checks)
    if (!c.passed) throw std::logic_error("family (iv) identity fails: " + c.name);

  if (variant == Variant::F1) {
    // h = (-mu x2, mu^-1 x1)
    TFamily h({cst(-mu) * x2, cst(mu.inverse()) * x1});
    TFamily h_inv({cst(mu) * x2, cst(-mu.inverse()) * x1});
    w.family = compose(h, compose(G, h_inv));
    w.conjugator = compose(alpha, h_inv);
    finish(w, compose(h, alpha_inv));
    Endo step({ScalarPoly::variable(k, 2, 0), ScalarPoly::variable(k, 2, 1) + ScalarPoly::constant(2, Scalar::one(k))});
    w.checks.push_back({"limit is (x1, x2 + 1)", w.limit == step});
  } else {
    int bound = static_cast<int>((1 + q * P.degree_in(0)) / (q - d)) + 1;
    for (int m = 1;; ++m) {
      if (m > bound) throw std::logic_error("no m up to the bound clears the poles");
      TFamily Gm = substitute_t_power(G, m);
      TFamily F2 = compose(diagonal(k, 1), compose(Gm, diagonal(k, -1)));
      if (has_pole(family_valuation(F2)) || !family_value_at_zero(F2).is_identity()) continue;
      w.m = m;
      w.family = F2;
      w.conjugator = compose(substitute_t_power(alpha, m), diagonal(k, -1));
      finish(w, compose(diagonal(k, 1), substitute_t_power(alpha_inv, m)));
      break;
    }
    w.checks.push_back({"limit is the identity", w.limit.is_identity()});
  }
  if (!w.checks.back().passed) throw std::logic_error("unexpected limit");
  return w;
}

DegenerationWitness degenerate(const PlaneAut& f, Variant variant) {
  NormalFormResult nf = normal_form(f);
  const NormalForm& n = nf.form;
  DegenerationWitness w = [&] {
    switch (n.family) {
      case Family::I:
        throw DomainError("family I (diagonalizable) has no degeneration of this kind");
      case Family::II:
        return degenerate_family_ii(n.P);
      case Family::III:
        return degenerate_family_iii(n.a, n.m, n.P);
      case Family::IV:
        return degenerate_family_iv(v_embed(n.P, f.field().characteristic()), variant);
    }
    throw std::logic_error("unknown family");
  }();
  if (!(w.source == nf.form.representative())) throw std::logic_error("witness source differs from the normal form");
  // family = c^-1 H f H^-1 c, so H^-1 c conjugates f itself.
  const PlaneAut& H = nf.conjugator;
  TFamily c_inv = family_inverse(w.conjugator);
  w.source = f.forward();
  w.conjugator = compose(lift_t(H.inverse_map()), w.conjugator);
  TFamily direct = compose(compose(c_inv, lift_t(H.forward())), compose(lift_t(f.forward()), w.conjugator));
  w.checks.push_back({"family = conjugator^-1 f conjugator (original map)", direct == w.family});
  if (!w.checks.back().passed) throw std::logic_error("rewritten conjugator fails verification");
  return w;
}

}  // namespace paut
