#pragma once

#include <string>
#include <vector>

#include "vres/error.hpp"

namespace vres {

// Monomial in a fixed polynomial ring, stored as its exponent vector.
// The ring is implicit: all monomials taking part in one operation must have
// the same number of variables.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int nvars);

  int nvars() const { return static_cast<int>(exp_.size()); }
  int exponent(int var) const { return exp_[var]; }
  const std::vector<int>& exponents() const { return exp_; }

  bool is_one() const;
  int total_degree() const;
  bool divides(const Monomial& other) const;

  Monomial times(const Monomial& other) const;
  // Exact quotient; throws if *this is not divisible by d.
  Monomial quotient(const Monomial& d) const;
  // this / gcd(this, d) — the "colon by a monomial" building block.
  Monomial quotient_saturating(const Monomial& d) const;
  // Zero out the exponents of every variable in the support of b.
  Monomial drop_support_of(const Monomial& b) const;
  Monomial pow(int k) const;

  std::vector<int> support() const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }
  // Lexicographic on exponent vectors; used for canonical orderings.
  bool operator<(const Monomial& o) const { return exp_ < o.exp_; }

private:
  std::vector<int> exp_;
  void check_same_ring(const Monomial& o) const;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// Renders with explicit separators, e.g. "x0^2*x1*y0"; the unit is "1".
std::string render_monomial(const Monomial& m, const std::vector<std::string>& names);
// Accepts products of names with optional ^exponent: "x0^2*x1", "1".
// Throws ArgumentError naming the offending token.
Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names);

// Monomial ideal, kept as its unique minimal generating set in a canonical
// order (lexicographic on exponent vectors), so equal ideals compare equal.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<Monomial> generators, int nvars);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& m) const;
  // True iff every minimal generator is a single variable.
  bool is_prime() const;

  MonomialIdeal plus(const Monomial& m) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  MonomialIdeal colon(const Monomial& b) const;
  // Saturation with respect to another monomial ideal: iterate
  // I -> intersection over generators b of (I : b) until stable.
  MonomialIdeal saturate(const MonomialIdeal& b) const;
  // Ideal generated by the d-th powers of the generators.
  MonomialIdeal bracket_power(int d) const;
  // Height: minimum size of a set of variables meeting every generator's
  // support. 0 for the zero ideal; nvars for the unit ideal by convention.
  int codimension() const;

  bool operator==(const MonomialIdeal& o) const {
    return nvars_ == o.nvars_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

private:
  std::vector<Monomial> gens_;  // minimal, sorted
  int nvars_ = 0;
};

// Cox ring data for a smooth toric variety: variable names, the irrelevant
// ideal, and (optionally) the Picard grading of the variables, one row per
// Picard group factor. The grading is carried for display only; all internal
// bookkeeping is in the fine (Z^n) grading.
struct ToricContext {
  std::vector<std::string> variables;
  MonomialIdeal irrelevant;
  std::vector<std::vector<int>> picard_grading;  // may be empty

  int nvars() const { return static_cast<int>(variables.size()); }
  std::vector<int> picard_degree(const Monomial& m) const;
};

// Context for P^n x P^k: variables x0..xn, y0..yk, irrelevant ideal
// generated by all x_i*y_j, Picard grading (deg_x, deg_y).
ToricContext product_of_projective_spaces(int n, int k);

}  // namespace vres
