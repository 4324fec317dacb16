#include "paut/plane_aut.hpp"

#include <stdexcept>

namespace paut {

namespace {

// The elementary step x_big -> x_big - c * x_small^k.
template <class C>
struct Elementary {
  int big;
  C c;
  unsigned k;
};

template <class C>
PolyMap<C> apply_elementary_inverse(const Elementary<C>& e, const PolyMap<C>& g) {
  std::vector<Poly<C>> comps(g.components().begin(), g.components().end());
  auto big = static_cast<std::size_t>(e.big), small = 1 - big;
  comps[big] -= comps[small].pow(e.k).scaled(e.c);
  return PolyMap<C>(std::move(comps));
}

template <class C>
C divide_or_throw(const C& a, const C& b) {
  auto q = exact_quotient(a, b);
  if (!q) throw NotInvertible("not invertible over the ring");
  return *q;
}

}  // namespace

template <class C>
PolyMap<C> invert_plane_map(const PolyMap<C>& f) {
  if (f.nvars() != 2) throw DomainError("expected a map of the plane");
  Field k = f.field();
  std::vector<Elementary<C>> steps;
  PolyMap<C> cur = f;
  for (;;) {
    Degree d0 = cur[0].degree(), d1 = cur[1].degree();
    if (d0.is_neg_inf() || d1.is_neg_inf()) throw NotInvertible("not invertible: a component vanishes");
    if (std::max(d0, d1) <= 1) break;
    int big = d0 >= d1 ? 0 : 1;
    long db = big == 0 ? d0.value() : d1.value(), ds = big == 0 ? d1.value() : d0.value();
    if (ds < 1 || db % ds != 0) throw NotInvertible("not invertible: leading degrees do not divide");
    auto e = static_cast<unsigned>(db / ds);
    const Poly<C>& pb = cur[static_cast<std::size_t>(big)];
    Poly<C> tb = pb.leading_form();
    Poly<C> ts = cur[static_cast<std::size_t>(1 - big)].leading_form().pow(e);
    if (tb.leading_term().first != ts.leading_term().first)
      throw NotInvertible("not invertible: leading forms are not proportional");
    C c = divide_or_throw(tb.leading_term().second, ts.leading_term().second);
    if (!(tb == ts.scaled(c))) throw NotInvertible("not invertible: leading forms are not proportional");
    Elementary<C> step{big, c, e};
    cur = apply_elementary_inverse(step, cur);
    steps.push_back(std::move(step));
  }
  Monomial x1 = Monomial::variable(0), x2 = Monomial::variable(1), one;
  C a = cur[0].coefficient(x1), b = cur[0].coefficient(x2), c = cur[1].coefficient(x1), d = cur[1].coefficient(x2);
  C e = cur[0].coefficient(one), g = cur[1].coefficient(one);
  C inv = divide_or_throw(one_of<C>(k), a * d - b * c);
  PolyMap<C> acc = PolyMap<C>::identity(k, 2);
  for (const auto& s : steps) acc = apply_elementary_inverse(s, acc);
  // Affine inverse: M^-1 (y - v).
  Poly<C> y1 = acc[0] - Poly<C>::constant(k, 2, e), y2 = acc[1] - Poly<C>::constant(k, 2, g);
  Poly<C> r1 = (y1.scaled(d) - y2.scaled(b)).scaled(inv);
  Poly<C> r2 = (y2.scaled(a) - y1.scaled(c)).scaled(inv);
  return PolyMap<C>({r1, r2});
}

template Endo invert_plane_map(const Endo&);
template LaurentMap invert_plane_map(const LaurentMap&);

PlaneAut PlaneAut::create(const Endo& f) {
  if (f.nvars() != 2) throw DomainError("expected a map of the plane");
  ScalarPoly jac = paut::jacobian(f);
  if (jac.is_zero() || !jac.is_constant()) throw NotInvertible("not an automorphism: Jacobian is not a nonzero constant");
  Endo inv = invert_plane_map(f);
  Endo id = Endo::identity(f.field(), 2);
  if (f.degree() <= 8 && (!(compose(f, inv) == id) || !(compose(inv, f) == id)))
    throw std::logic_error("computed inverse fails the composition check");
  if (inv.degree() != f.degree()) throw std::logic_error("inverse degree differs from forward degree");
  Scalar j = jac.constant_term();
  std::optional<AmalgamWord> w;
  if (j.is_one()) w = jvdk_factor(f);
  return PlaneAut(f, std::move(inv), j, std::move(w));
}

PlaneAut PlaneAut::from_word(const AmalgamWord& w) {
  AmalgamWord r = w.is_reduced() ? w : reduce_word(w);
  return PlaneAut(r.recompose(), r.inverse().recompose(), Scalar::one(w.field()), r);
}

PlaneAut PlaneAut::identity(Field k) { return from_word(AmalgamWord::identity(k)); }

PlaneAut PlaneAut::inverse() const {
  std::optional<AmalgamWord> w;
  if (word_) w = word_->inverse();
  return PlaneAut(inverse_, forward_, jac_.inverse(), std::move(w));
}

PlaneAut compose(const PlaneAut& f, const PlaneAut& g) {
  if (f.field() != g.field()) throw DomainError("ring mismatch in composition");
  if (f.word_ && g.word_) return PlaneAut::from_word(f.word_->then(*g.word_));
  Endo fwd = compose(f.forward_, g.forward_);
  Endo inv = compose(g.inverse_, f.inverse_);
  Scalar j = f.jac_ * g.jac_;
  std::optional<AmalgamWord> w;
  if (j.is_one()) w = jvdk_factor(fwd);
  return PlaneAut(std::move(fwd), std::move(inv), j, std::move(w));
}

PlaneAut power(const PlaneAut& f, long k) {
  if (k < 0) return power(f.inverse(), -k);
  PlaneAut r = PlaneAut::identity(f.field()), base = f;
  while (k) {
    if (k & 1) r = compose(r, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return r;
}

PlaneAut conjugate(const PlaneAut& h, const PlaneAut& f) { return compose(compose(h, f), h.inverse()); }

Degree composite_degree(const PlaneAut& f, const PlaneAut& g) {
  if (f.word() && g.word()) return Degree(reduce_word(f.word()->then(*g.word())).degree());
  Endo top = compose(highest_part(f.forward()), highest_part(g.forward()));
  if (!top.degree().is_neg_inf() && f.degree() >= 1 && g.degree() >= 1) return top.degree();
  return compose(f, g).degree();
}

std::vector<Degree> degree_sequence(const PlaneAut& f, int m) {
  if (m < 1) throw DomainError("degree sequence length must be positive");
  if (!f.word()) return degree_sequence(f.forward(), m);
  std::vector<Degree> out;
  AmalgamWord w = *f.word();
  for (int k = 1; k <= m; ++k) {
    if (k > 1) w = reduce_word(w.then(*f.word()));
    out.push_back(Degree(w.degree()));
  }
  return out;
}

InfinityPoint indeterminacy_point(const PlaneAut& f) {
  if (f.degree() < 2) throw DomainError("degree 1: no indeterminacy point");
  Endo a = highest_part(f.forward());
  return common_zero_at_infinity(a[0], a[1]);
}

InfinityPoint image_point_at_infinity(const PlaneAut& f) {
  if (f.degree() < 2) throw DomainError("degree 1: no image point at infinity");
  Field k = f.field();
  Endo a = highest_part(f.forward());
  std::vector<std::vector<Scalar>> ladder;
  long limit = k.is_rationals() ? 16 : static_cast<long>(std::min<std::uint64_t>(k.characteristic(), 16));
  for (long s = 0; s < limit; ++s) ladder.push_back({Scalar::one(k), Scalar(k, s)});
  ladder.push_back({Scalar::zero(k), Scalar::one(k)});
  std::vector<InfinityPoint> found;
  for (const auto& y : ladder) {
    Scalar v1 = a[0].evaluate(y), v2 = a[1].evaluate(y);
    if (v1.is_zero() && v2.is_zero()) continue;
    found.emplace_back(std::vector<Scalar>{v1, v2});
    if (found.size() == 2) break;
  }
  if (found.size() < 2 || !(found[0] == found[1])) throw std::logic_error("image at infinity is not a single point");
  try {
    if (!(indeterminacy_point(f.inverse()) == found[0]))
      throw std::logic_error("image at infinity differs from the inverse's indeterminacy point");
  } catch (const FieldExtensionRequired&) {
  }
  return found[0];
}

MultiplicativityReport degree_multiplicativity_test(const PlaneAut& f, const PlaneAut& g) {
  if (f.degree() < 2 || g.degree() < 2) throw DomainError("multiplicativity test needs degrees at least 2");
  MultiplicativityReport r;
  r.degree_of_composite = composite_degree(g, f);
  r.multiplicative = r.degree_of_composite == Degree(g.degree().value() * f.degree().value());
  try {
    r.x_f = image_point_at_infinity(f);
    r.i_g = indeterminacy_point(g);
    r.point_test = !(*r.x_f == *r.i_g);
    if (*r.point_test != r.multiplicative) throw std::logic_error("point test disagrees with degree test");
  } catch (const FieldExtensionRequired& e) {
    r.point_error = e.what();
  }
  return r;
}

bool is_dynamically_regular(const PlaneAut& f) {
  if (f.degree() < 2) return false;
  long d = f.degree().value();
  bool regular = composite_degree(f, f) == Degree(d * d);
  try {
    bool distinct = !(indeterminacy_point(f) == indeterminacy_point(f.inverse()));
    if (distinct != regular) throw std::logic_error("regularity point test disagrees with degree test");
  } catch (const FieldExtensionRequired&) {
  }
  return regular;
}

bool is_algebraic(const PlaneAut& f) { return composite_degree(f, f) <= f.degree(); }

}  // namespace paut
