#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rrtrop/poly.hpp"

namespace rrtrop {

// Accepts the canonical grammar (signed terms of `coeff*var^k*...`) and, as a
// convenience, parenthesized products and powers such as "(x-y-z)^4".
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

Rational parse_rational(std::string_view text);
// "(w1,...,wn)" with rational entries; parentheses optional.
WeightVector parse_weight(std::string_view text);
SignVector parse_signs(std::string_view text);

// Input file: a `vars: x, y, z` header line, then one polynomial per line.
// Blank lines and lines starting with '#' are ignored.
struct PolynomialFile {
  RingPtr ring;
  std::vector<Polynomial> polynomials;
};

PolynomialFile parse_polynomial_file(std::string_view text);
PolynomialFile read_polynomial_file(const std::string& path);
std::string format_polynomial_file(const PolynomialFile& file);

}  // namespace rrtrop
