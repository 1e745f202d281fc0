#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ntrans {

/// Coefficient domain: the rationals (p == 0) or a prime field GF(p).
struct Field {
  long p = 0;

  static Field rationals() { return Field{0}; }
  /// Throws std::invalid_argument unless `prime` is an actual prime.
  static Field gf(long prime);

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string to_string() const;
};

/// Exact scalar: an arbitrary-precision rational, or a residue in [0, p).
/// Arithmetic between scalars of different fields is a logic error.
class Scalar {
 public:
  Scalar() = default;  // zero over the rationals
  Scalar(const Field& f, long value);
  Scalar(const Field& f, const mpq_class& value);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  /// Accepts an optionally signed integer, or "a/b" over the rationals.
  static std::optional<Scalar> parse(const Field& f, const std::string& text);

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }
  Field field() const { return Field{p_}; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Division by zero throws std::domain_error.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const { return one(field()) / *this; }

  bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "-3/4" over the rationals; the canonical residue over GF(p).
  std::string to_string() const;

 private:
  mpq_class v_;
  long p_ = 0;

  void reduce_();
  void check_same_(const Scalar& o) const;
};

}  // namespace ntrans
