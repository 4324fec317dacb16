#include "paut/upoly.hpp"

#include "paut/format.hpp"

namespace paut {

UPoly::UPoly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.field() != f) throw DomainError("ring mismatch in univariate polynomial");
  }
  trim();
}

UPoly UPoly::monomial(const Scalar& c, int k) {
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar::zero(c.field()));
  v.back() = c;
  return UPoly(c.field(), std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar::zero(field_);
  return c_[static_cast<std::size_t>(k)];
}

Scalar UPoly::lead() const { return c_.empty() ? Scalar::zero(field_) : c_.back(); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (field_ != o.field_) throw DomainError("ring mismatch in univariate addition");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.field_ != b.field_) throw DomainError("ring mismatch in univariate multiplication");
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(a.field_, std::move(out));
}

UPoly UPoly::scaled(const Scalar& s) const {
  UPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

UPoly UPoly::compose(const UPoly& g) const {
  UPoly acc(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
  return acc;
}

UPoly UPoly::affine_arg(const Scalar& a, const Scalar& b) const { return compose(UPoly(field_, {b, a})); }

UPoly UPoly::pow(unsigned e) const {
  UPoly r = constant(Scalar::one(field_)), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Scalar UPoly::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  UPoly q(field_), r = *this;
  Scalar inv = d.lead().inverse();
  auto dd = static_cast<int>(d.c_.size()) - 1;
  while (!r.is_zero() && static_cast<int>(r.c_.size()) - 1 >= dd) {
    int k = static_cast<int>(r.c_.size()) - 1 - dd;
    UPoly t = monomial(r.lead() * inv, k);
    q += t;
    r -= t * d;
  }
  return {q, r};
}

UPoly UPoly::monic() const { return is_zero() ? *this : scaled(lead().inverse()); }

UPoly UPoly::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Scalar(field_, static_cast<long>(i)));
  return UPoly(field_, std::move(out));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ScalarPoly UPoly::to_poly(int nvars, int var) const {
  std::vector<ScalarPoly::Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) terms.emplace_back(Monomial::variable(var, static_cast<int>(i)), c_[i]);
  }
  return ScalarPoly::from_terms(field_, nvars, std::move(terms));
}

UPoly UPoly::from_poly(const ScalarPoly& p, int var) {
  std::vector<Scalar> out;
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() != m[var]) throw DomainError("polynomial depends on more than one variable");
    auto k = static_cast<std::size_t>(m[var]);
    if (out.size() <= k) out.resize(k + 1, Scalar::zero(p.field()));
    out[k] = c;
  }
  return UPoly(p.field(), std::move(out));
}

std::string UPoly::to_string(const std::string& var) const {
  return format_poly(to_poly(1, 0), {var});
}

}  // namespace paut
