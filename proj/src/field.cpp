#include "vres/field.hpp"

#include <cctype>

namespace vres {

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t.empty() || t == "rational" || t == "rationals" || t == "q")
    return FieldSpec::rationals();
  std::string digits = t;
  if (t.rfind("gf(", 0) == 0 && t.back() == ')')
    digits = t.substr(3, t.size() - 4);
  else if (t.rfind("gf", 0) == 0)
    digits = t.substr(2);
  if (digits.empty()) throw ArgumentError("cannot parse field '" + text + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ArgumentError("cannot parse field '" + text + "'");
  std::int64_t p = 0;
  try {
    p = std::stoll(digits);
  } catch (const std::exception&) {
    throw ArgumentError("field characteristic '" + digits + "' out of range");
  }
  (void)PrimeField(p);  // rejects composites and oversized moduli up front
  return FieldSpec::gf(p);
}

std::string FieldSpec::to_string() const {
  if (kind == Kind::rational) return "rational";
  return "gf(" + std::to_string(p) + ")";
}

}  // namespace vres
