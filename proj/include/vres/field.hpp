#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "vres/error.hpp"

namespace vres {

// Exact rational arithmetic. Stateless; Value is a GMP rational.
struct RationalField {
  using Value = mpq_class;
  Value zero() const { return Value(0); }
  Value one() const { return Value(1); }
  Value from_int(long n) const { return Value(n); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return Value(a / b); }
  Value neg(const Value& a) const { return -a; }
  bool is_zero(const Value& a) const { return sgn(a) == 0; }
  bool eq(const Value& a, const Value& b) const { return a == b; }
  std::string render(const Value& a) const { return a.get_str(); }
  std::string name() const { return "rational"; }
};

// GF(p) for a runtime prime p < 2^31. Values are stored reduced to [0, p);
// rendering uses the symmetric representative so small negatives print as
// such.
class PrimeField {
public:
  using Value = std::int64_t;

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (p < 2) throw ArgumentError("field characteristic must be a prime");
    if (p >= (std::int64_t{1} << 31)) throw ArgumentError("prime too large");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw ArgumentError(std::to_string(p) + " is not prime");
  }

  std::int64_t characteristic() const { return p_; }

  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value from_int(long n) const {
    Value v = n % p_;
    return v < 0 ? v + p_ : v;
  }
  Value add(Value a, Value b) const {
    Value v = a + b;
    return v >= p_ ? v - p_ : v;
  }
  Value sub(Value a, Value b) const {
    Value v = a - b;
    return v < 0 ? v + p_ : v;
  }
  Value mul(Value a, Value b) const { return (a * b) % p_; }
  Value neg(Value a) const { return a == 0 ? 0 : p_ - a; }
  Value inv(Value a) const {
    if (a == 0) throw ArgumentError("division by zero in GF(p)");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return t < 0 ? t + p_ : t;
  }
  Value div(Value a, Value b) const { return mul(a, inv(b)); }
  bool is_zero(Value a) const { return a == 0; }
  bool eq(Value a, Value b) const { return a == b; }
  std::string render(Value a) const {
    // symmetric representative: (-p/2, p/2]
    return std::to_string(a > p_ / 2 ? a - p_ : a);
  }
  std::string name() const { return "gf(" + std::to_string(p_) + ")"; }

private:
  std::int64_t p_;
};

// Runtime field selection. Parsed from CLI flags / environment; every report
// states which field produced it.
struct FieldSpec {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::int64_t p = 32003;

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec gf(std::int64_t p) { return FieldSpec{Kind::prime, p}; }
  // Accepts "rational" | "q" | "gf(P)" | bare prime "P".
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && (kind == Kind::rational || p == o.p);
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

// Calls fn with the concrete field object selected by spec. fn must accept
// both RationalField and PrimeField (usually a generic lambda).
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rational) return fn(RationalField{});
  return fn(PrimeField(spec.p));
}

}  // namespace vres
