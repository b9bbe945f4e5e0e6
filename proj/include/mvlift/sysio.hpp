#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mvlift/algebra.hpp"

namespace mvlift {

/// Parses a system file:
///
///   vars: x1 x2          (first non-comment line)
///   (1 - x1^2)*x2 + 2    (one polynomial per line)
///   # comment            (anywhere; also after an expression)
///
/// Coefficients are integers combined with +, -, *, / and the imaginary unit
/// `i`; `*` may be omitted; `^` takes a (possibly negative) integer, negative
/// powers only of monomials. Throws ParseError with the offending position.
PolySystem parse_system(std::string_view text);

/// Parses a single expression over the given variables.
LaurentPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

/// Canonical text of one polynomial: graded-lex descending, lowest-terms coefficients.
std::string format_polynomial(const LaurentPolynomial& f, const std::vector<std::string>& variables);

/// Canonical file. Each comment line is emitted as "# <line>" after the header.
std::string serialize_system(const PolySystem& sys, const std::vector<std::string>& comments = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

bool is_identifier(std::string_view s);

}  // namespace mvlift
