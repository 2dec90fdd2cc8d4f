#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nilorb {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
[[nodiscard]] std::string to_string(const Rational& x);

/// Accepts "p", "-p", "p/q". Throws DomainError on malformed text or q = 0.
[[nodiscard]] Rational parse_rational(std::string_view text);

}  // namespace nilorb
