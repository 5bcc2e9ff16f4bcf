#ifndef POWMAT_FORMAT_HPP
#define POWMAT_FORMAT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powmat/matrix.hpp"
#include "powmat/poly.hpp"

namespace powmat {

/// Malformed textual input. The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t n = 1;
};

/// "p" or "p^n".
FieldSpec parse_field_spec(std::string_view text);
/// "c0,c1,...,cn".
std::vector<std::uint32_t> parse_modulus(std::string_view text);

enum class PolyFormat { Coefficients, Monomial };

struct ParsedPoly {
  ReducedPoly poly;
  PolyFormat format;
};

/// Either "a0,a1,..." (low degree first) or monomial syntax such as
/// "1+1x+1x^2". Coefficients use the canonical integer encoding; exponents
/// of q and above are folded by the x^q = x rule.
ParsedPoly parse_poly(const Field& field, std::string_view text);

/// Canonical integer element; throws ParseError unless it lies in the field.
Elem parse_element(const Field& field, std::string_view text);

std::string format_poly(const ReducedPoly& f, PolyFormat format);
/// Canonical integer, or the polynomial-basis expression ("3+2t") when pretty.
std::string format_element(const FieldCtx& field, Elem e, bool pretty);
/// Rows of space-separated entries.
std::string format_matrix(const Matrix& a, bool pretty);

}  // namespace powmat

#endif  // POWMAT_FORMAT_HPP
