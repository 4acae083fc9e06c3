#pragma once

#include <string>
#include <string_view>

#include "lrc/matrix.hpp"

namespace lrc {

// Which parity-check construction to use for an (m, n; ell, g) code.
//
//   GC       block-diagonal local RS checks plus a repeated global RS band;
//            needs q > n.
//   GC_EXT   extended-RS local checks, global band padded with a zero
//            column; needs q = n.
//   DIAG     local RS checks with per-row-block shifted evaluation points,
//            global band spanning all mn coordinates; needs q > mn.
//   DIAG_EXT like DIAG with an extended-RS last block and a zero-padded
//            global band; needs q = mn.
enum class Variant { GC, GC_EXT, DIAG, DIAG_EXT };

std::string to_string(Variant v);
Variant parse_variant(std::string_view s);  // gc | gc-ext | diag | diag-ext

// An (m, n; ell, g) locally recoverable code instance: codewords are m x n
// arrays (read row-wise), each row carries ell local parities, and g global
// parities span the whole array.
struct LrcParams {
    std::size_t m = 1;
    std::size_t n = 2;
    std::size_t ell = 1;
    std::size_t g = 0;
    FieldPtr field;
    Variant variant = Variant::GC;
};

struct CodeParamsReport {
    std::size_t length;     // m*n
    std::size_t dimension;  // m*(n-ell) - g
    std::size_t bound_d;    // Singleton-type distance bound
    std::size_t locality;   // n - ell
};

// The representative of s modulo t in [0, t-1]; t >= 1, s may be negative.
long long mod_reduce(long long s, long long t);

// Singleton-type bound on the minimum distance:
//   d <= ell + n*floor(g/(n-ell)) + (g mod (n-ell)) + 1.
std::size_t singleton_bound(std::size_t n, std::size_t ell, std::size_t g);

// Specialization for ell + g < n, where the bound collapses to ell + g + 1.
std::size_t special_bound(std::size_t n, std::size_t ell, std::size_t g);

// Shape checks (1 <= ell < n, m >= 1, g small enough for the variant's
// global band, nonnegative dimension) plus the per-variant field-size
// requirement. `force` skips only the field-size requirement.
void validate_params(const LrcParams& p, bool force = false);

// True when the construction's distance claim d = ell + g + 1 meets the
// bound with equality: ell + g < n, and for the gc variants g <= ell + 1.
bool optimality_regime(const LrcParams& p);

// r x n parity-check block of a Reed-Solomon code with r parities:
// entry (t, c) = alpha^((i+t)(j+c)), exponents reduced mod q-1.
Matrix rs_matrix(std::size_t n, std::size_t r, std::size_t i, std::size_t j, FieldPtr field);

// r x n parity-check block of an extended Reed-Solomon code: an all-ones
// first row; below it, column c < n-1 holds alpha^(t(j+c)) for t = 1..r-1
// and the last column is zero.
Matrix ers_matrix(std::size_t n, std::size_t r, std::size_t j, FieldPtr field);

Matrix build_gc(const LrcParams& p);
Matrix build_gc_ext(const LrcParams& p);
Matrix build_diag(const LrcParams& p);
Matrix build_diag_ext(const LrcParams& p);

// Dispatch on p.variant. The result is (ell*m + g) x (m*n) with full row rank.
Matrix build_parity_check(const LrcParams& p, bool force = false);

CodeParamsReport report(const LrcParams& p);

}  // namespace lrc
