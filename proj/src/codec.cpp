#include "lrc/codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lrc {

namespace {

void require_word_length(const LrcCode& code, std::size_t got) {
    if (got != code.length())
        throw std::invalid_argument("word has " + std::to_string(got) + " symbols, expected " +
                                    std::to_string(code.length()));
}

// Solves for the symbols at `unknown` given the rest of `word`, using the
// check rows of `h`. Requires the unknown columns to be independent;
// returns false when they are not (or when the data is inconsistent).
bool solve_erasures(const Matrix& h, std::vector<Symbol>& word,
                    const std::vector<std::size_t>& unknown) {
    if (unknown.empty()) return true;

    Matrix a = submatrix_cols(h, unknown);
    if (rank(a) != unknown.size()) return false;

    // rhs = H * word with the unknown coordinates zeroed (characteristic 2).
    std::vector<Symbol> masked = word;
    for (std::size_t pos : unknown) masked[pos] = 0;
    std::vector<Symbol> rhs = mul_vec(h, masked);

    auto x = solve(a, rhs);
    if (!x) return false;
    for (std::size_t i = 0; i < unknown.size(); ++i) word[unknown[i]] = (*x)[i];
    return true;
}

}  // namespace

ErasurePattern::ErasurePattern(std::vector<std::size_t> positions, std::size_t length)
    : positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (positions_[i] >= length)
            throw std::out_of_range("erasure position " + std::to_string(positions_[i]) +
                                    " out of range [0, " + std::to_string(length) + ")");
        if (i > 0 && positions_[i] == positions_[i - 1])
            throw std::invalid_argument("duplicate erasure position " + std::to_string(positions_[i]));
    }
}

CodeLayout layout_positions(std::size_t m, std::size_t n, std::size_t ell, std::size_t g) {
    if (ell >= n) throw std::invalid_argument("layout: need ell < n");
    const std::size_t mn = m * n;
    if (g > m * (n - ell)) throw std::invalid_argument("layout: need g <= m*(n-ell)");

    CodeLayout layout;
    std::vector<bool> is_local(mn, false);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = n - ell; c < n; ++c) {
            layout.local_parity_positions.push_back(r * n + c);
            is_local[r * n + c] = true;
        }

    std::vector<std::size_t> non_local;
    for (std::size_t pos = 0; pos < mn; ++pos)
        if (!is_local[pos]) non_local.push_back(pos);

    // Global parities claim the tail of the row-major order.
    layout.global_parity_positions.assign(non_local.end() - g, non_local.end());
    layout.data_positions.assign(non_local.begin(), non_local.end() - g);
    return layout;
}

CodeLayout make_layout(const LrcParams& p, const Matrix& h) {
    if (h.rows() != p.ell * p.m + p.g || h.cols() != p.m * p.n)
        throw std::invalid_argument("parity-check matrix shape does not match params");
    CodeLayout layout = layout_positions(p.m, p.n, p.ell, p.g);

    std::vector<std::size_t> parity = layout.local_parity_positions;
    parity.insert(parity.end(), layout.global_parity_positions.begin(),
                  layout.global_parity_positions.end());
    std::sort(parity.begin(), parity.end());
    if (!columns_independent(h, parity))
        throw std::runtime_error("parity-position submatrix of H is singular; cannot encode systematically");
    return layout;
}

LrcCode::LrcCode(LrcParams p, Matrix h, CodeLayout layout)
    : params_(std::move(p)), h_(std::move(h)), layout_(std::move(layout)) {}

LrcCode LrcCode::build(const LrcParams& p, bool force) {
    Matrix h = build_parity_check(p, force);
    CodeLayout layout = make_layout(p, h);
    return LrcCode(p, std::move(h), layout);
}

std::vector<Symbol> encode(const LrcCode& code, std::span<const Symbol> data) {
    const CodeLayout& layout = code.layout();
    if (data.size() != layout.data_positions.size())
        throw std::invalid_argument("data has " + std::to_string(data.size()) + " symbols, expected " +
                                    std::to_string(layout.data_positions.size()));

    std::vector<Symbol> word(code.length(), 0);
    for (std::size_t i = 0; i < data.size(); ++i) word[layout.data_positions[i]] = data[i];

    std::vector<std::size_t> parity = layout.local_parity_positions;
    parity.insert(parity.end(), layout.global_parity_positions.begin(),
                  layout.global_parity_positions.end());
    std::sort(parity.begin(), parity.end());
    if (!solve_erasures(code.parity_check(), word, parity))
        throw std::runtime_error("parity solve failed; layout invariant violated");
    return word;
}

std::vector<Symbol> syndrome(const LrcCode& code, std::span<const Symbol> word) {
    require_word_length(code, word.size());
    return mul_vec(code.parity_check(), word);
}

std::optional<std::vector<Symbol>> decode_row_local(const LrcCode& code, std::size_t row,
                                                    std::span<const Symbol> row_symbols,
                                                    std::span<const std::size_t> erased_cols) {
    const LrcParams& p = code.params();
    if (row >= p.m) throw std::out_of_range("row index out of range");
    if (row_symbols.size() != p.n)
        throw std::invalid_argument("row slice must have n symbols");
    if (erased_cols.size() > p.ell)
        throw std::invalid_argument("row has more than ell erasures; local repair cannot apply");

    std::vector<Symbol> fixed(row_symbols.begin(), row_symbols.end());
    if (erased_cols.empty()) return fixed;

    for (std::size_t c : erased_cols)
        if (c >= p.n) throw std::out_of_range("erased column out of range");

    // The row's local check block: rows row*ell .. row*ell+ell-1 of H,
    // restricted to the row's own n columns.
    const Matrix& h = code.parity_check();
    Matrix block(h.field(), p.ell, p.n);
    for (std::size_t t = 0; t < p.ell; ++t)
        for (std::size_t c = 0; c < p.n; ++c) block.set(t, c, h(row * p.ell + t, row * p.n + c));

    std::vector<std::size_t> unknown(erased_cols.begin(), erased_cols.end());
    std::sort(unknown.begin(), unknown.end());
    if (!solve_erasures(block, fixed, unknown)) return std::nullopt;
    return fixed;
}

DecodeResult decode(const LrcCode& code, std::span<const Symbol> received,
                    const ErasurePattern& erasures) {
    require_word_length(code, received.size());
    const LrcParams& p = code.params();

    std::vector<Symbol> word(received.begin(), received.end());
    std::vector<std::vector<std::size_t>> per_row(p.m);
    for (std::size_t pos : erasures.positions()) per_row[pos / p.n].push_back(pos % p.n);

    // Phase 1: repair every row that its own local parities can cover.
    std::vector<std::size_t> remaining;
    for (std::size_t r = 0; r < p.m; ++r) {
        if (per_row[r].empty()) continue;
        if (per_row[r].size() <= p.ell) {
            auto fixed = decode_row_local(code, r, {word.data() + r * p.n, p.n}, per_row[r]);
            if (fixed) {
                std::copy(fixed->begin(), fixed->end(), word.begin() + r * p.n);
                continue;
            }
        }
        for (std::size_t c : per_row[r]) remaining.push_back(r * p.n + c);
    }

    // Phase 2: solve what is left against the full parity-check matrix.
    std::sort(remaining.begin(), remaining.end());
    if (!solve_erasures(code.parity_check(), word, remaining))
        return DecodeResult{std::nullopt, remaining};
    return DecodeResult{std::move(word), {}};
}

DecodeResult decode_linear(const LrcCode& code, std::span<const Symbol> received,
                           const ErasurePattern& erasures) {
    require_word_length(code, received.size());
    std::vector<Symbol> word(received.begin(), received.end());
    if (!solve_erasures(code.parity_check(), word, erasures.positions()))
        return DecodeResult{std::nullopt, erasures.positions()};
    return DecodeResult{std::move(word), {}};
}

}  // namespace lrc
