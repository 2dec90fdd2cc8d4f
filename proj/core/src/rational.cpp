#include "nilorb/rational.hpp"

#include <regex>

#include "nilorb/error.hpp"

namespace nilorb {

std::string to_string(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(std::string_view text) {
  static const std::regex form(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?)");
  std::smatch m;
  const std::string s(text);
  if (!std::regex_match(s, m, form)) throw DomainError("not a rational number: '" + s + "'");
  using Int = boost::multiprecision::cpp_int;
  std::string num = m[1].str();
  if (num.front() == '+') num.erase(0, 1);
  const Int p(num);
  const Int q = m[2].matched ? Int(m[2].str()) : Int(1);
  if (q == 0) throw DomainError("zero denominator in '" + s + "'");
  return Rational(p, q);
}

}  // namespace nilorb
