#include <algorithm>
#include <stdexcept>

#include "paut/amalgam.hpp"

namespace paut {

AffineFactor AffineFactor::identity(Field k) {
  Scalar z = Scalar::zero(k), o = Scalar::one(k);
  return {o, z, z, o, z, z};
}

AffineFactor AffineFactor::linear(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Scalar z = Scalar::zero(a.field());
  AffineFactor r{a, b, c, d, z, z};
  if (!r.determinant().is_one()) throw DomainError("affine factor must have determinant 1");
  return r;
}

AffineFactor AffineFactor::from_map(const Endo& m) {
  if (m.nvars() != 2 || m.degree() > 1) throw DomainError("not an affine map of the plane");
  Monomial x1 = Monomial::variable(0), x2 = Monomial::variable(1), one;
  AffineFactor r{m[0].coefficient(x1), m[0].coefficient(x2), m[1].coefficient(x1),
                 m[1].coefficient(x2), m[0].coefficient(one), m[1].coefficient(one)};
  if (!r.determinant().is_one()) throw DomainError("affine factor must have determinant 1");
  return r;
}

bool AffineFactor::is_identity() const { return *this == identity(field()); }

Endo AffineFactor::to_map() const {
  Field k = field();
  auto x1 = ScalarPoly::variable(k, 2, 0), x2 = ScalarPoly::variable(k, 2, 1);
  return Endo({x1.scaled(a) + x2.scaled(b) + ScalarPoly::constant(2, e),
               x1.scaled(c) + x2.scaled(d) + ScalarPoly::constant(2, f)});
}

AffineFactor AffineFactor::inverse() const {
  AffineFactor r{d, -b, -c, a, Scalar::zero(field()), Scalar::zero(field())};
  r.e = -(r.a * e + r.b * f);
  r.f = -(r.c * e + r.d * f);
  return r;
}

AffineFactor AffineFactor::compose(const AffineFactor& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d,
          a * o.e + b * o.f + e, c * o.e + d * o.f + f};
}

InfinityPoint AffineFactor::act_at_infinity(const InfinityPoint& y) const {
  auto v = y.coords();
  return InfinityPoint({a * v[0] + b * v[1], c * v[0] + d * v[1]});
}

JonquieresFactor JonquieresFactor::identity(Field k) { return {Scalar::one(k), UPoly(k), Scalar::zero(k)}; }

Endo JonquieresFactor::to_map() const {
  Field k = field();
  auto x1 = ScalarPoly::variable(k, 2, 0), x2 = ScalarPoly::variable(k, 2, 1);
  return Endo({x1.scaled(a) + P.to_poly(2, 1), x2.scaled(a.inverse()) + ScalarPoly::constant(2, c)});
}

JonquieresFactor JonquieresFactor::inverse() const {
  Scalar ai = a.inverse();
  return {ai, (-P.affine_arg(a, -(a * c))).scaled(ai), -(a * c)};
}

JonquieresFactor JonquieresFactor::compose(const JonquieresFactor& o) const {
  Scalar ai = a.inverse();
  return {a * o.a, o.P.scaled(a) + P.affine_arg(o.a.inverse(), o.c), ai * o.c + c};
}

AffineFactor to_affine(const JonquieresFactor& j) {
  if (!j.in_saff()) throw DomainError("de Jonquières factor is not affine");
  Scalar z = Scalar::zero(j.field());
  return {j.a, j.P.coeff(1), z, j.a.inverse(), j.P.coeff(0), j.c};
}

JonquieresFactor to_jonquieres(const AffineFactor& x) {
  if (!x.in_sj()) throw DomainError("affine factor is not triangular");
  return {x.a, UPoly(x.field(), {x.e, x.b}), x.f};
}

bool is_affine(const Factor& x) { return std::holds_alternative<AffineFactor>(x); }

bool in_intersection(const Factor& x) {
  if (auto* a = std::get_if<AffineFactor>(&x)) return a->in_sj();
  return std::get<JonquieresFactor>(x).in_saff();
}

Endo factor_map(const Factor& x) {
  return std::visit([](const auto& v) { return v.to_map(); }, x);
}

Factor factor_inverse(const Factor& x) {
  return std::visit([](const auto& v) -> Factor { return v.inverse(); }, x);
}

Endo apply_factor(const Factor& x, const Endo& g) {
  if (auto* a = std::get_if<AffineFactor>(&x)) {
    return Endo({g[0].scaled(a->a) + g[1].scaled(a->b) + ScalarPoly::constant(2, a->e),
                 g[0].scaled(a->c) + g[1].scaled(a->d) + ScalarPoly::constant(2, a->f)});
  }
  const auto& j = std::get<JonquieresFactor>(x);
  return Endo({g[0].scaled(j.a) + j.P.apply(g[1]), g[1].scaled(j.a.inverse()) + ScalarPoly::constant(2, j.c)});
}

std::string format_factor(const Factor& x) {
  return (is_affine(x) ? "A:" : "J:") + format_map(factor_map(x));
}

AmalgamWord::AmalgamWord(Field k, std::vector<Factor> factors, bool reduced)
    : field_(k), factors_(std::move(factors)), reduced_(reduced) {
  for (const auto& x : factors_) {
    Field fk = std::visit([](const auto& v) { return v.field(); }, x);
    if (fk != k) throw DomainError("ring mismatch in word factors");
  }
}

AmalgamWord AmalgamWord::identity(Field k) { return AmalgamWord(k, {AffineFactor::identity(k)}, true); }

Endo AmalgamWord::recompose() const {
  Endo g = Endo::identity(field_, 2);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) g = apply_factor(*it, g);
  return g;
}

AmalgamWord AmalgamWord::inverse() const {
  std::vector<Factor> out;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) out.push_back(factor_inverse(*it));
  return AmalgamWord(field_, std::move(out), reduced_);
}

AmalgamWord AmalgamWord::then(const AmalgamWord& other) const {
  if (other.field_ != field_) throw DomainError("ring mismatch in word product");
  std::vector<Factor> out = factors_;
  out.insert(out.end(), other.factors_.begin(), other.factors_.end());
  return AmalgamWord(field_, std::move(out));
}

std::vector<int> AmalgamWord::jonquieres_degrees() const {
  std::vector<int> out;
  for (const auto& x : factors_) {
    if (auto* j = std::get_if<JonquieresFactor>(&x)) out.push_back(j->degree());
  }
  return out;
}

long AmalgamWord::degree() const {
  if (!reduced_) return reduce_word(*this).degree();
  long d = 1;
  for (int k : jonquieres_degrees()) d *= k;
  return d;
}

namespace {

Factor merge(const Factor& x, const Factor& y) {
  if (is_affine(x)) return std::get<AffineFactor>(x).compose(std::get<AffineFactor>(y));
  return std::get<JonquieresFactor>(x).compose(std::get<JonquieresFactor>(y));
}

// Re-tag an intersection element to match `like`.
Factor retag(const Factor& x, const Factor& like) {
  if (is_affine(x) == is_affine(like)) return x;
  if (is_affine(x)) return to_jonquieres(std::get<AffineFactor>(x));
  return to_affine(std::get<JonquieresFactor>(x));
}

}  // namespace

AmalgamWord reduce_word(const AmalgamWord& w) {
  std::vector<Factor> fs(w.factors().begin(), w.factors().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
      if (is_affine(fs[i]) == is_affine(fs[i + 1])) {
        fs[i] = merge(fs[i], fs[i + 1]);
        fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        break;
      }
    }
    if (changed || fs.size() < 2) continue;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (!in_intersection(fs[i])) continue;
      if (i + 1 < fs.size())
        fs[i + 1] = merge(retag(fs[i], fs[i + 1]), fs[i + 1]);
      else
        fs[i - 1] = merge(fs[i - 1], retag(fs[i], fs[i - 1]));
      fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  if (fs.empty()) fs.push_back(AffineFactor::identity(w.field()));
  if (fs.size() == 1 && !is_affine(fs[0]) && in_intersection(fs[0]))
    fs[0] = to_affine(std::get<JonquieresFactor>(fs[0]));
  return AmalgamWord(w.field(), std::move(fs), true);
}

AmalgamWord jvdk_factor(const Endo& f) {
  if (f.nvars() != 2) throw DomainError("factorization needs a map of the plane");
  Field k = f.field();
  ScalarPoly jac = jacobian(f);
  if (!(jac == ScalarPoly::constant(2, Scalar::one(k))))
    throw DomainError("factorization needs a special automorphism (Jacobian 1)");
  std::vector<Factor> fs;
  Endo cur = f;
  while (cur.degree() >= 2) {
    Endo top = highest_part(cur);
    AffineFactor rot = AffineFactor::identity(k);
    if (top[1].is_zero()) {
      // already [0:1:0]
    } else if (top[0].is_zero()) {
      rot = AffineFactor::linear(Scalar::zero(k), -Scalar::one(k), Scalar::one(k), Scalar::zero(k));
    } else {
      Scalar r = top[1].leading_term().second / top[0].leading_term().second;
      if (!(top[1] == top[0].scaled(r))) throw NotInvertible("not an automorphism: highest parts are not proportional");
      rot = AffineFactor::linear(Scalar::one(k), Scalar::zero(k), r, Scalar::one(k));
    }
    if (!rot.is_identity()) {
      fs.push_back(rot);
      cur = apply_factor(rot.inverse(), cur);
    }
    Degree d = cur[0].degree(), e = cur[1].degree();
    if (e < 1 || d.value() % e.value() != 0) throw NotInvertible("not an automorphism: degrees do not divide");
    auto q = static_cast<unsigned>(d.value() / e.value());
    ScalarPoly pw = cur[1].pow(q);
    ScalarPoly t1 = cur[0].leading_form(), t2 = pw.leading_form();
    Scalar c = t1.leading_term().second / t2.leading_term().second;
    if (!(t1 == t2.scaled(c))) throw NotInvertible("not an automorphism: elementary reduction fails");
    fs.push_back(JonquieresFactor{Scalar::one(k), UPoly::monomial(c, static_cast<int>(q)), Scalar::zero(k)});
    cur = Endo({cur[0] - pw.scaled(c), cur[1]});
  }
  if (cur.degree() < 1) throw NotInvertible("not an automorphism: constant component");
  fs.push_back(AffineFactor::from_map(cur));
  AmalgamWord w = reduce_word(AmalgamWord(k, std::move(fs)));
  if (!(w.recompose() == f)) throw std::logic_error("factorization does not recompose to its input");
  return w;
}

}  // namespace paut
