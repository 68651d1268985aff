#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hlb {

// Ground field: Q (characteristic 0) or GF(p) for an odd prime p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(FieldSpec a, FieldSpec b) noexcept { return a.p_ == b.p_; }

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_odd_prime(std::uint64_t p);

class Scalar {
 public:
  Scalar() = default;  // zero of Q
  explicit Scalar(FieldSpec f) : p_(f.characteristic()) {}
  Scalar(FieldSpec f, long n);
  Scalar(FieldSpec f, long num, long den);

  // Accepts "a" or "a/b" with optional sign; b must be invertible in the field.
  static Scalar parse(FieldSpec f, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  // *this -= a * b without temporaries.
  void sub_mul(const Scalar& a, const Scalar& b);
  void add_mul(const Scalar& a, const Scalar& b);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Canonical text: reduced "a" or "a/b" over Q, residue in [0,p) over GF(p).
  std::string str() const;
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

 private:
  void check(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint32_t p_ = 0;
};

}  // namespace hlb
