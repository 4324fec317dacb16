#include "paut/field.hpp"

#include <charconv>
#include <numeric>

#include "paut/errors.hpp"
#include "paut/ext_int.hpp"

namespace paut {

std::int64_t ExtendedInt::value() const {
  if (is_neg_inf()) throw DomainError("value of -inf requested");
  return v_;
}

std::string ExtendedInt::to_string() const { return is_neg_inf() ? "-inf" : std::to_string(v_); }

namespace modular {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace modular

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62) || !modular::is_prime(p))
    throw DomainError("unsupported field characteristic " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view d) {
  if (d == "Q") return rationals();
  if (d.substr(0, 3) == "Fp:") {
    std::uint64_t p = 0;
    auto rest = d.substr(3);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && !rest.empty()) return prime(p);
  }
  throw DomainError("bad field descriptor '" + std::string(d) + "' (expected Q or Fp:<prime>)");
}

std::string Field::descriptor() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

namespace {

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Scalar::Scalar(Field f, long v) : p_(f.characteristic()) {
  if (p_ == 0) {
    q_ = v;
  } else {
    long m = v % static_cast<long>(p_);
    r_ = static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(p_) : m);
  }
}

Scalar::Scalar(Field f, const mpz_class& v) : p_(f.characteristic()) {
  if (p_ == 0)
    q_ = v;
  else
    r_ = reduce_mpz(v, p_);
}

Scalar::Scalar(Field f, const mpq_class& q) : p_(f.characteristic()) {
  if (p_ == 0) {
    q_ = q;
    q_.canonicalize();
    return;
  }
  std::uint64_t num = reduce_mpz(q.get_num(), p_);
  std::uint64_t den = reduce_mpz(q.get_den(), p_);
  if (den == 0)
    throw DomainError("literal " + q.get_str() + " is not representable in " + f.descriptor());
  r_ = modular::mul(num, modular::pow(den, p_ - 2, p_), p_);
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw DomainError("ring mismatch between " + field().descriptor() + " and " + o.field().descriptor());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0)
    r.q_ = -q_;
  else
    r.r_ = r_ == 0 ? 0 : p_ - r_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = modular::mul(r_, o.r_, p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar r = *this;
  if (p_ == 0)
    r.q_ = 1 / q_;
  else
    r.r_ = modular::pow(r_, p_ - 2, p_);
  return r;
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = *this;
  if (p_ == 0) {
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  } else {
    r.r_ = modular::pow(r_, static_cast<std::uint64_t>(e), p_);
  }
  return r;
}

namespace {

std::optional<mpz_class> exact_root(const mpz_class& v, unsigned n) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), n) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::vector<Scalar> Scalar::roots_of_power(unsigned n) const {
  if (n == 0) throw DomainError("zeroth root requested");
  Field f = field();
  if (is_zero()) return {*this};
  if (p_ == 0) {
    bool neg = sgn(q_) < 0;
    if (neg && n % 2 == 0) return {};
    mpz_class num = abs(q_.get_num());
    auto rn = exact_root(num, n);
    auto rd = exact_root(q_.get_den(), n);
    if (!rn || !rd) return {};
    mpq_class root(*rn, *rd);
    root.canonicalize();
    if (neg) return {Scalar(f, mpq_class(-root))};
    if (n % 2 == 1) return {Scalar(f, root)};
    return {Scalar(f, root), Scalar(f, mpq_class(-root))};
  }
  std::uint64_t g = std::gcd<std::uint64_t>(n, p_ - 1);
  if (g == 1) {
    // x -> x^n is a bijection; invert the exponent modulo p-1.
    mpz_class inv;
    mpz_class nn(n), m(static_cast<unsigned long>(p_ - 1));
    mpz_invert(inv.get_mpz_t(), nn.get_mpz_t(), m.get_mpz_t());
    Scalar r = *this;
    r.r_ = modular::pow(r_, inv.get_ui(), p_);
    return {r};
  }
  if (p_ > (1u << 22)) throw DomainError("root extraction in " + f.descriptor() + " is limited to p < 2^22");
  std::vector<Scalar> out;
  for (std::uint64_t x = 1; x < p_; ++x) {
    if (modular::pow(x, n, p_) == r_) out.push_back(Scalar(f, static_cast<long>(x)));
  }
  return out;
}

std::optional<std::uint64_t> Scalar::multiplicative_order() const {
  if (is_zero()) return std::nullopt;
  if (p_ == 0) {
    if (q_ == 1) return 1;
    if (q_ == -1) return 2;
    return std::nullopt;
  }
  std::uint64_t n = p_ - 1, order = p_ - 1;
  auto strip = [&](std::uint64_t q) {
    while (order % q == 0 && modular::pow(r_, order / q, p_) == 1) order /= q;
  };
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    strip(q);
  }
  if (n > 1) strip(n);
  return order;
}

Scalar Scalar::reduce_to(Field target) const {
  if (target == field()) return *this;
  if (p_ != 0) throw DomainError("cannot map " + field().descriptor() + " into " + target.descriptor());
  return Scalar(target, q_);
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

std::size_t Scalar::hash() const {
  if (p_ != 0) return std::hash<std::uint64_t>{}(r_);
  return std::hash<std::string>{}(q_.get_str());
}

std::vector<Scalar> field_elements(Field f) {
  if (f.is_rationals()) throw DomainError("cannot enumerate the rationals");
  if (f.characteristic() > (1u << 22)) throw DomainError("field too large to enumerate");
  std::vector<Scalar> out;
  for (std::uint64_t x = 0; x < f.characteristic(); ++x) out.emplace_back(f, static_cast<long>(x));
  return out;
}

}  // namespace paut
