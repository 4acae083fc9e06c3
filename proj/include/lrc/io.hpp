#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrc/codec.hpp"

namespace lrc {

// Matrix exponent text format. First line: "rows cols q"; then one line per
// row where each entry is "-" (the zero symbol) or an integer e meaning
// alpha^e. This form depends only on exponents, not on the generating
// polynomial, so it is the one used to compare matrices across tools.
std::string format_matrix(const Matrix& a);

// Parses the exponent format; the field is rebuilt from q with the default
// polynomial. The overload checks q against the supplied field instead.
Matrix parse_matrix(std::string_view text);
Matrix parse_matrix(std::string_view text, FieldPtr field);

// Symbol files: decimal values in [0, q), whitespace-separated.
std::string format_symbols(std::span<const Symbol> symbols);
std::vector<Symbol> parse_symbols(std::string_view text, const Field& field);

// Code spec files: lines of "key = value" with keys m, n, ell, g, field
// (gf2^w) and variant (gc | gc-ext | diag | diag-ext); '#' starts a comment.
LrcParams parse_code_spec(std::string_view text);
std::string format_code_spec(const LrcParams& p);

// "3,7,12" -> coordinates.
ErasurePattern parse_erasures(std::string_view csv, std::size_t length);
// "0:2,1:4" -> row:column pairs on the m x n array.
ErasurePattern parse_erasures_rc(std::string_view csv, std::size_t m, std::size_t n);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace lrc
