#include "vres/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vres {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_)
    if (e < 0) throw ArgumentError("monomial exponents must be non-negative");
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

int Monomial::total_degree() const {
  return std::accumulate(exp_.begin(), exp_.end(), 0);
}

void Monomial::check_same_ring(const Monomial& o) const {
  if (nvars() != o.nvars())
    throw ArgumentError("monomials live in different rings (" +
                        std::to_string(nvars()) + " vs " + std::to_string(o.nvars()) +
                        " variables)");
}

bool Monomial::divides(const Monomial& other) const {
  check_same_ring(other);
  for (int i = 0; i < nvars(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  check_same_ring(other);
  std::vector<int> e(exp_);
  for (int i = 0; i < nvars(); ++i) e[i] += other.exp_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& d) const {
  if (!d.divides(*this)) throw ArgumentError("inexact monomial quotient");
  std::vector<int> e(exp_);
  for (int i = 0; i < nvars(); ++i) e[i] -= d.exp_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_saturating(const Monomial& d) const {
  check_same_ring(d);
  std::vector<int> e(exp_);
  for (int i = 0; i < nvars(); ++i) e[i] = std::max(0, e[i] - d.exp_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::drop_support_of(const Monomial& b) const {
  check_same_ring(b);
  std::vector<int> e(exp_);
  for (int i = 0; i < nvars(); ++i)
    if (b.exp_[i] > 0) e[i] = 0;
  return Monomial(std::move(e));
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw ArgumentError("negative monomial power");
  std::vector<int> e(exp_);
  for (int& x : e) x *= k;
  return Monomial(std::move(e));
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < nvars(); ++i)
    if (exp_[i] > 0) s.push_back(i);
  return s;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  a.check_same_ring(b);
  std::vector<int> e(a.exp_);
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exp_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  a.check_same_ring(b);
  std::vector<int> e(a.exp_);
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exp_[i]);
  return Monomial(std::move(e));
}

std::string render_monomial(const Monomial& m, const std::vector<std::string>& names) {
  if (m.nvars() != static_cast<int>(names.size()))
    throw ArgumentError("variable name list does not match monomial ring");
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!first) out << '*';
    out << names[i];
    if (e > 1) out << '^' << e;
    first = false;
  }
  if (first) return "1";
  return out.str();
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names) {
  std::vector<int> e(names.size(), 0);
  std::string token;
  std::vector<std::string> tokens;
  for (char c : text) {
    if (c == '*') {
      tokens.push_back(token);
      token.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token.push_back(c);
    }
  }
  tokens.push_back(token);
  for (const std::string& t : tokens) {
    if (t.empty()) throw ArgumentError("empty factor in monomial '" + text + "'");
    if (t == "1") continue;
    std::string name = t;
    int exp = 1;
    auto caret = t.find('^');
    if (caret != std::string::npos) {
      name = t.substr(0, caret);
      const std::string digits = t.substr(caret + 1);
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ArgumentError("bad exponent in token '" + t + "'");
      exp = std::stoi(digits);
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw ArgumentError("unknown variable '" + name + "' in monomial '" + text + "'");
    e[it - names.begin()] += exp;
  }
  return Monomial(std::move(e));
}

namespace {

// Drop generators divisible by another generator; sort canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i]))  // proper: duplicates already removed
        redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators, int nvars) : nvars_(nvars) {
  for (const Monomial& g : generators)
    if (g.nvars() != nvars)
      throw ArgumentError("ideal generator has wrong number of variables");
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::is_prime() const {
  for (const Monomial& g : gens_)
    if (g.total_degree() != 1) return false;
  return true;
}

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const {
  std::vector<Monomial> gens(gens_);
  gens.push_back(m);
  return MonomialIdeal(std::move(gens), nvars_);
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  if (nvars_ != other.nvars_) throw ArgumentError("ideals in different rings");
  // Intersection of monomial ideals: pairwise lcms of generators.
  std::vector<Monomial> gens;
  for (const Monomial& a : gens_)
    for (const Monomial& b : other.gens_) gens.push_back(lcm(a, b));
  return MonomialIdeal(std::move(gens), nvars_);
}

MonomialIdeal MonomialIdeal::colon(const Monomial& b) const {
  std::vector<Monomial> gens;
  for (const Monomial& g : gens_) gens.push_back(g.quotient_saturating(b));
  return MonomialIdeal(std::move(gens), nvars_);
}

MonomialIdeal MonomialIdeal::saturate(const MonomialIdeal& b) const {
  if (b.is_zero()) throw ArgumentError("saturation by the zero ideal");
  MonomialIdeal current = *this;
  for (;;) {
    MonomialIdeal next = current.colon(b.gens_[0]);
    for (size_t j = 1; j < b.gens_.size(); ++j)
      next = next.intersect(current.colon(b.gens_[j]));
    if (next == current) return current;
    current = std::move(next);
  }
}

MonomialIdeal MonomialIdeal::bracket_power(int d) const {
  std::vector<Monomial> gens;
  for (const Monomial& g : gens_) gens.push_back(g.pow(d));
  return MonomialIdeal(std::move(gens), nvars_);
}

int MonomialIdeal::codimension() const {
  if (gens_.empty()) return 0;
  if (is_unit()) return nvars_;
  std::vector<std::vector<int>> supports;
  for (const Monomial& g : gens_) supports.push_back(g.support());
  if (nvars_ > 30) throw ArgumentError("codimension: too many variables");
  // Smallest vertex cover of the supports, by increasing subset size.
  for (int size = 1; size <= nvars_; ++size) {
    for (unsigned mask = 0; mask < (1u << nvars_); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      bool covers = true;
      for (const auto& s : supports) {
        bool hit = false;
        for (int v : s)
          if (mask & (1u << v)) { hit = true; break; }
        if (!hit) { covers = false; break; }
      }
      if (covers) return size;
    }
  }
  return nvars_;
}

std::vector<int> ToricContext::picard_degree(const Monomial& m) const {
  std::vector<int> deg;
  for (const auto& row : picard_grading) {
    int d = 0;
    for (int i = 0; i < m.nvars(); ++i) d += row[i] * m.exponent(i);
    deg.push_back(d);
  }
  return deg;
}

ToricContext product_of_projective_spaces(int n, int k) {
  if (n < 0 || k < 0) throw ArgumentError("product_of_projective_spaces: negative dimension");
  ToricContext ctx;
  for (int i = 0; i <= n; ++i) ctx.variables.push_back("x" + std::to_string(i));
  for (int j = 0; j <= k; ++j) ctx.variables.push_back("y" + std::to_string(j));
  const int nv = n + k + 2;
  std::vector<Monomial> gens;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= k; ++j) {
      std::vector<int> e(nv, 0);
      e[i] = 1;
      e[n + 1 + j] = 1;
      gens.emplace_back(std::move(e));
    }
  ctx.irrelevant = MonomialIdeal(std::move(gens), nv);
  std::vector<int> row_x(nv, 0), row_y(nv, 0);
  for (int i = 0; i <= n; ++i) row_x[i] = 1;
  for (int j = 0; j <= k; ++j) row_y[n + 1 + j] = 1;
  ctx.picard_grading = {row_x, row_y};
  return ctx;
}

}  // namespace vres
