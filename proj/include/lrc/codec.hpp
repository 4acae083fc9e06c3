#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lrc/constructions.hpp"

namespace lrc {

// Coordinate roles within the row-major m*n symbol array. The three lists
// partition [0, mn); each is strictly increasing.
struct CodeLayout {
    std::vector<std::size_t> data_positions;           // k entries
    std::vector<std::size_t> local_parity_positions;   // ell per row, last ell columns
    std::vector<std::size_t> global_parity_positions;  // g entries
};

// A set of erased coordinates, strictly increasing, all in [0, length).
class ErasurePattern {
public:
    ErasurePattern() = default;

    // Sorts and validates; throws on duplicates or out-of-range positions.
    ErasurePattern(std::vector<std::size_t> positions, std::size_t length);

    const std::vector<std::size_t>& positions() const { return positions_; }
    std::size_t size() const { return positions_.size(); }
    bool empty() const { return positions_.empty(); }

private:
    std::vector<std::size_t> positions_;
};

// A built code: parameters, parity-check matrix and coordinate layout.
class LrcCode {
public:
    // Builds the parity-check matrix for p and derives the systematic
    // layout. `force` skips the variant's field-size requirement.
    static LrcCode build(const LrcParams& p, bool force = false);

    const LrcParams& params() const { return params_; }
    const Matrix& parity_check() const { return h_; }
    const CodeLayout& layout() const { return layout_; }

    std::size_t length() const { return params_.m * params_.n; }
    std::size_t dimension() const { return params_.m * (params_.n - params_.ell) - params_.g; }

private:
    LrcCode(LrcParams p, Matrix h, CodeLayout layout);

    LrcParams params_;
    Matrix h_;
    CodeLayout layout_;
};

// Coordinate roles as a pure function of the array shape: the last ell
// columns of each row are local parities, the last g remaining cells in
// row-major order are global parities, and data fills the rest.
CodeLayout layout_positions(std::size_t m, std::size_t n, std::size_t ell, std::size_t g);

// layout_positions plus a check that the parity-position submatrix of H is
// invertible; throws when it is singular.
CodeLayout make_layout(const LrcParams& p, const Matrix& h);

// The unique codeword agreeing with `data` on the data positions.
std::vector<Symbol> encode(const LrcCode& code, std::span<const Symbol> data);

// H * word; zero iff word is a codeword.
std::vector<Symbol> syndrome(const LrcCode& code, std::span<const Symbol> word);

// Repairs one row in isolation: `row_symbols` is that row's n symbols and
// `erased_cols` the erased column indices within the row (at most ell).
// Returns the corrected row, or nullopt when the local check cannot
// determine the erased symbols uniquely.
std::optional<std::vector<Symbol>> decode_row_local(const LrcCode& code, std::size_t row,
                                                    std::span<const Symbol> row_symbols,
                                                    std::span<const std::size_t> erased_cols);

struct DecodeResult {
    // The recovered codeword, or nullopt when unrecoverable.
    std::optional<std::vector<Symbol>> word;
    // When unrecoverable: erased positions whose parity-check columns are
    // linearly dependent (the witness).
    std::vector<std::size_t> dependent_positions;

    bool ok() const { return word.has_value(); }
};

// Two-phase erasure decoding: first every row with at most ell erasures is
// repaired from its own local parities, then the remaining erasures are
// solved against the full parity-check matrix. Values stored at erased
// positions of `received` are ignored.
DecodeResult decode(const LrcCode& code, std::span<const Symbol> received,
                    const ErasurePattern& erasures);

// Generic one-shot decoder: solves all erasures against the full
// parity-check matrix without the local phase. Succeeds on exactly the same
// patterns as decode() and returns the same codeword.
DecodeResult decode_linear(const LrcCode& code, std::span<const Symbol> received,
                           const ErasurePattern& erasures);

}  // namespace lrc
