#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace paut {

// The base field: the rationals or a prime field F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field{}; }
  // Throws DomainError unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);
  // Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view descriptor);

  bool is_rationals() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string descriptor() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, long v);
  Scalar(Field f, const mpz_class& v);
  // Throws DomainError when the denominator vanishes in F_p.
  Scalar(Field f, const mpq_class& q);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }

  Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  // Every a in the field with a^n equal to this value, without repetition.
  std::vector<Scalar> roots_of_power(unsigned n) const;
  // Multiplicative order, or nullopt when infinite (over Q only -1 and 1 have finite order).
  std::optional<std::uint64_t> multiplicative_order() const;

  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }
  // Image under Q -> F_p (throws if the denominator vanishes); identity on F_p.
  Scalar reduce_to(Field target) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void check_same(const Scalar& o) const;
  std::uint64_t p_ = 0;
  std::uint64_t r_ = 0;
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// All elements of a small prime field in the order 0, 1, ..., p-1.
std::vector<Scalar> field_elements(Field f);

namespace modular {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
bool is_prime(std::uint64_t n);
}  // namespace modular

}  // namespace paut
