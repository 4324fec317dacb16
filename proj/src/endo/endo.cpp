#include "paut/endo.hpp"

#include <algorithm>
#include <sstream>

#include "paut/upoly.hpp"

namespace paut {

template <class C>
PolyMap<C>::PolyMap(std::vector<Poly<C>> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw DomainError("a map needs at least one component");
  Degree d = Degree::neg_inf();
  for (const auto& c : comps_) {
    if (c.nvars() != nvars() || c.field() != comps_.front().field())
      throw DomainError("components must share the field and have one variable per component");
    d = std::max(d, c.degree());
  }
  degree_ = d;
}

template <class C>
PolyMap<C> PolyMap<C>::identity(Field f, int n) {
  std::vector<Poly<C>> comps;
  for (int i = 0; i < n; ++i) comps.push_back(Poly<C>::variable(f, n, i));
  return PolyMap(std::move(comps));
}

template class PolyMap<Scalar>;
template class PolyMap<Laurent>;

template <class C>
PolyMap<C> compose(const PolyMap<C>& f, const PolyMap<C>& g) {
  if (f.nvars() != g.nvars() || f.field() != g.field()) throw DomainError("dimension or ring mismatch in composition");
  std::vector<Poly<C>> out;
  for (const auto& c : f.components()) out.push_back(c.compose(g.components()));
  return PolyMap<C>(std::move(out));
}

namespace {

template <class C>
Poly<C> det(std::vector<std::vector<Poly<C>>> m) {
  auto n = m.size();
  if (n == 1) return m[0][0];
  Poly<C> acc(m[0][0].field(), m[0][0].nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly<C>>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly<C>> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    Poly<C> term = m[0][j] * det(std::move(minor));
    if (j % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

}  // namespace

template <class C>
Poly<C> jacobian(const PolyMap<C>& f) {
  std::vector<std::vector<Poly<C>>> m;
  for (const auto& c : f.components()) {
    std::vector<Poly<C>> row;
    for (int j = 0; j < f.nvars(); ++j) row.push_back(c.derivative(j));
    m.push_back(std::move(row));
  }
  return det(std::move(m));
}

template <class C>
PolyMap<C> highest_part(const PolyMap<C>& f) {
  if (f.degree().is_neg_inf()) throw DomainError("highest part of the zero map");
  auto d = static_cast<int>(f.degree().value());
  std::vector<Poly<C>> out;
  for (const auto& c : f.components()) out.push_back(c.homogeneous_part(d));
  return PolyMap<C>(std::move(out));
}

template <class C>
std::string format_map(const PolyMap<C>& f) {
  std::string out = "(";
  for (int i = 0; i < f.nvars(); ++i) {
    if (i) out += ", ";
    out += format_poly(f[static_cast<std::size_t>(i)]);
  }
  return out + ")";
}

template Endo compose(const Endo&, const Endo&);
template LaurentMap compose(const LaurentMap&, const LaurentMap&);
template ScalarPoly jacobian(const Endo&);
template LaurentPoly jacobian(const LaurentMap&);
template Endo highest_part(const Endo&);
template LaurentMap highest_part(const LaurentMap&);
template std::string format_map(const Endo&);
template std::string format_map(const LaurentMap&);

LaurentMap lift_t(const Endo& f) {
  std::vector<LaurentPoly> out;
  for (const auto& c : f.components()) out.push_back(lift_t(c));
  return LaurentMap(std::move(out));
}

Endo drop_t(const LaurentMap& f) {
  std::vector<ScalarPoly> out;
  for (const auto& c : f.components()) out.push_back(drop_t(c));
  return Endo(std::move(out));
}

Endo parse_endo(std::string_view src, Field f) {
  auto comps = parse_tuple(src, f);
  std::vector<ScalarPoly> out;
  for (const auto& c : comps) {
    if (involves_t(c)) throw DomainError("expected a map without the parameter t");
    out.push_back(drop_t(c));
  }
  return Endo(std::move(out));
}

Degree composite_degree(const Endo& f, const Endo& g) {
  if (f.degree() >= 1 && g.degree() >= 1) {
    Endo top = compose(highest_part(f), highest_part(g));
    if (!top.degree().is_neg_inf()) return top.degree();
  }
  return compose(f, g).degree();
}

namespace {

// Deterministic sample points (1, s, s^2, ...) for s = 0, 1, 2, ... and the unit vectors.
std::vector<std::vector<Scalar>> sample_points(Field f, int n, int count) {
  std::vector<std::vector<Scalar>> out;
  for (int s = 0; s < count; ++s) {
    std::vector<Scalar> y;
    Scalar v = Scalar::one(f), base(f, static_cast<long>(s));
    for (int i = 0; i < n; ++i) {
      y.push_back(v);
      v *= base;
    }
    out.push_back(std::move(y));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> y(static_cast<std::size_t>(n), Scalar::zero(f));
    y[static_cast<std::size_t>(i)] = Scalar::one(f);
    out.push_back(std::move(y));
  }
  return out;
}

bool iterate_nonzero(const Endo& top, int m, std::vector<Scalar> y) {
  for (int k = 0; k < m; ++k) {
    std::vector<Scalar> next;
    bool any = false;
    for (const auto& c : top.components()) {
      next.push_back(c.evaluate(y));
      any = any || !next.back().is_zero();
    }
    if (!any) return false;
    y = std::move(next);
  }
  return true;
}

}  // namespace

bool top_iterate_certificate(const Endo& f, int m) {
  if (f.degree() < 1) return false;
  Endo top = highest_part(f);
  if (!f.field().is_rationals()) {
    for (auto& y : sample_points(f.field(), f.nvars(), 8)) {
      if (iterate_nonzero(top, m, y)) return true;
    }
    return false;
  }
  // Over Q a nonzero value modulo a prime certifies a nonzero value over Q.
  Field mod = Field::prime(2305843009213693951ull);
  std::vector<ScalarPoly> reduced;
  for (const auto& c : top.components())
    reduced.push_back(c.map_coefficients<Scalar>(mod, [mod](const Scalar& s) { return s.reduce_to(mod); }));
  Endo top_mod(std::move(reduced));
  for (auto& y : sample_points(mod, f.nvars(), 8)) {
    if (iterate_nonzero(top_mod, m, y)) return true;
  }
  return false;
}

std::vector<Degree> degree_sequence(const Endo& f, int m) {
  if (m < 1) throw DomainError("degree sequence length must be positive");
  constexpr long kBudget = 4096;
  std::vector<Degree> out;
  std::optional<Endo> power;
  bool full = true;
  for (int k = 1; k <= m; ++k) {
    if (k == 1) {
      out.push_back(f.degree());
      continue;
    }
    if (full && f.degree() >= 2 && top_iterate_certificate(f, k)) {
      Degree d = 1;
      for (int i = 0; i < k; ++i) d = Degree(d.value() * f.degree().value());
      out.push_back(d);
      continue;
    }
    full = false;
    if (!power) {
      power = f;
      for (int i = 2; i < k; ++i) power = compose(f, *power);
    }
    if (f.degree() >= 1 && power->degree() >= 1 && f.degree().value() * power->degree().value() > kBudget)
      throw DomainError("degree sequence exceeds the symbolic budget");
    power = compose(f, *power);
    out.push_back(power->degree());
  }
  return out;
}

InfinityPoint::InfinityPoint(std::vector<Scalar> coords) : y_(std::move(coords)) {
  auto it = std::find_if(y_.begin(), y_.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == y_.end()) throw DomainError("point at infinity with all coordinates zero");
  Scalar inv = it->inverse();
  for (auto& s : y_) s *= inv;
}

std::string InfinityPoint::to_string() const {
  std::string out = "[0";
  for (const auto& s : y_) out += ":" + s.to_string();
  return out + "]";
}

namespace {

// a(u, 1) as a univariate polynomial in u.
UPoly dehomogenize(const ScalarPoly& a) {
  std::vector<Scalar> c;
  for (const auto& [m, v] : a.terms()) {
    auto k = static_cast<std::size_t>(m[0]);
    if (c.size() <= k) c.resize(k + 1, Scalar::zero(a.field()));
    c[k] += v;
  }
  return UPoly(a.field(), std::move(c));
}

// The unique root of g = lead*(u - r)^k, or throws.
Scalar single_root(const UPoly& g) {
  auto k = static_cast<int>(g.degree().value());
  Field f = g.field();
  UPoly mg = g.monic();
  std::uint64_t p = f.characteristic();
  // Write k = p^s * k0; then (u - r)^k = (u^(p^s) - r^(p^s))^k0.
  int k0 = k;
  std::uint64_t ps = 1;
  while (p != 0 && k0 % static_cast<int>(p) == 0) {
    k0 /= static_cast<int>(p);
    ps *= p;
  }
  // Coefficient of u^(ps*(k0-1)) is -k0 * r^ps.
  Scalar c = mg.coeff(static_cast<int>(ps) * (k0 - 1));
  Scalar rps = -c / Scalar(f, static_cast<long>(k0));
  // In F_p the map r -> r^ps is the identity.
  Scalar r = rps;
  UPoly lin(f, {-r, Scalar::one(f)});
  if (lin.pow(static_cast<unsigned>(k)) != mg)
    throw FieldExtensionRequired("the indeterminacy point is not rational over " + f.descriptor());
  return r;
}

}  // namespace

InfinityPoint common_zero_at_infinity(const ScalarPoly& a1, const ScalarPoly& a2) {
  Field f = a1.field();
  Degree d = std::max(a1.degree(), a2.degree());
  if (d < 1) throw DomainError("no indeterminacy for maps of degree at most 1");
  long mult_y2 = d.value();
  UPoly g(f);
  for (const ScalarPoly* a : {&a1, &a2}) {
    if (a->is_zero()) continue;
    UPoly u = dehomogenize(*a);
    mult_y2 = std::min(mult_y2, d.value() - u.degree().value());
    g = UPoly::gcd(g, u);
  }
  bool at_y2 = mult_y2 > 0;
  bool finite = g.degree() >= 1;
  if (at_y2 && finite) throw DomainError("indeterminacy locus is not a single point");
  if (at_y2) return InfinityPoint({Scalar::one(f), Scalar::zero(f)});
  if (!finite) throw DomainError("highest parts have no common zero at infinity");
  return InfinityPoint({single_root(g), Scalar::one(f)});
}

}  // namespace paut
