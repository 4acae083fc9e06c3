#include "lrc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

namespace lrc {

namespace {

constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > kNoLimit) return kNoLimit;
    }
    return static_cast<std::uint64_t>(r);
}

// Lexicographic successor of an increasing index combination over [0, n).
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t t = c.size();
    for (std::size_t i = t; i-- > 0;) {
        if (c[i] < n - t + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// The combination at position `rank` in lexicographic order.
std::vector<std::size_t> combination_unrank(std::size_t n, std::size_t t, std::uint64_t rank) {
    std::vector<std::size_t> c(t);
    std::size_t v = 0;
    for (std::size_t i = 0; i < t; ++i) {
        while (true) {
            std::uint64_t with_v = binomial(n - 1 - v, t - 1 - i);
            if (rank < with_v) {
                c[i] = v++;
                break;
            }
            rank -= with_v;
            ++v;
        }
    }
    return c;
}

void charge(EnumerationLimits& limits, std::uint64_t planned, const std::string& what) {
    if (planned > limits.budget)
        throw BudgetExceeded(what + " needs " + std::to_string(planned) +
                             " column-subset checks, budget is " + std::to_string(limits.budget));
    limits.budget -= planned;
}

struct ChunkResult {
    bool found = false;
    std::uint64_t local_index = 0;  // checks performed in the chunk before the hit
    std::vector<std::size_t> subset;
};

// Scans combination ranks [begin, end) of size-t subsets of h's columns.
// Stops early when a lower-indexed chunk has already reported a hit.
void scan_chunk(const Matrix& h, std::size_t t, std::uint64_t begin, std::uint64_t end,
                unsigned chunk_index, std::atomic<unsigned>& best_chunk, ChunkResult& out) {
    std::vector<std::size_t> combo = combination_unrank(h.cols(), t, begin);
    for (std::uint64_t i = 0; begin + i < end; ++i) {
        if ((i & 0xFF) == 0 && best_chunk.load(std::memory_order_relaxed) < chunk_index) return;
        if (!columns_independent(h, combo)) {
            out.found = true;
            out.local_index = i;
            out.subset = combo;
            unsigned cur = best_chunk.load(std::memory_order_relaxed);
            while (cur > chunk_index &&
                   !best_chunk.compare_exchange_weak(cur, chunk_index, std::memory_order_relaxed)) {
            }
            return;
        }
        next_combination(combo, h.cols());
    }
}

}  // namespace

std::optional<std::vector<std::size_t>> first_dependent_subset(const Matrix& h, std::size_t t,
                                                               EnumerationLimits& limits) {
    if (t == 0 || t > h.cols()) return std::nullopt;
    const std::uint64_t total = binomial(h.cols(), t);
    charge(limits, total, "scanning size-" + std::to_string(t) + " column subsets");

    unsigned jobs = std::max(1u, limits.jobs);
    if (total < jobs) jobs = static_cast<unsigned>(total);

    std::vector<ChunkResult> results(jobs);
    std::atomic<unsigned> best_chunk{jobs};
    if (jobs == 1) {
        scan_chunk(h, t, 0, total, 0, best_chunk, results[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        const std::uint64_t chunk = total / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            const std::uint64_t begin = j * chunk;
            const std::uint64_t end = (j + 1 == jobs) ? total : begin + chunk;
            workers.emplace_back(scan_chunk, std::cref(h), t, begin, end, j, std::ref(best_chunk),
                                 std::ref(results[j]));
        }
        for (auto& w : workers) w.join();
    }

    for (unsigned j = 0; j < jobs; ++j) {
        if (!results[j].found) continue;
        // Refund as if the scan had been sequential up to the witness.
        const std::uint64_t chunk = jobs > 1 ? total / jobs : total;
        const std::uint64_t global_rank = (jobs > 1 ? j * chunk : 0) + results[j].local_index;
        limits.budget += total - (global_rank + 1);
        return results[j].subset;
    }
    return std::nullopt;
}

std::size_t min_distance(const Matrix& h, EnumerationLimits limits) {
    const std::size_t tmax = std::min(h.cols(), rank(h) + 1);
    for (std::size_t t = 1; t <= tmax; ++t)
        if (first_dependent_subset(h, t, limits)) return t;
    throw std::invalid_argument("all columns independent: the code has no nonzero codeword");
}

bool distance_at_least(const Matrix& h, std::size_t delta, EnumerationLimits limits) {
    if (delta <= 1) return true;
    const std::size_t t = delta - 1;
    if (t > h.cols()) return true;  // no subsets of that size
    return !first_dependent_subset(h, t, limits).has_value();
}

bool is_optimal(const LrcParams& p, std::size_t d) {
    return d == singleton_bound(p.n, p.ell, p.g);
}

Matrix xor_collapse(const Matrix& h, std::size_t m, std::size_t ell, std::size_t g) {
    if (h.rows() != m * ell + g)
        throw std::invalid_argument("xor_collapse: matrix has " + std::to_string(h.rows()) +
                                    " rows, expected ell*m+g = " + std::to_string(m * ell + g));
    Matrix out(h.field(), ell + g, h.cols());
    for (std::size_t t = 0; t < ell; ++t)
        for (std::size_t c = 0; c < h.cols(); ++c) {
            Symbol acc = 0;
            for (std::size_t k = 0; k < m; ++k) acc = static_cast<Symbol>(acc ^ h(k * ell + t, c));
            out.set(t, c, acc);
        }
    for (std::size_t t = 0; t < g; ++t)
        for (std::size_t c = 0; c < h.cols(); ++c) out.set(ell + t, c, h(m * ell + t, c));
    return out;
}

namespace {

// Shared core of the PMDS/SD checks: for every puncture set P drawn from
// `puncture_choices` and every g-subset E of the remaining coordinates,
// the columns of h on P union E must be independent.
PropertyReport run_property_check(const Matrix& h, const std::vector<std::vector<std::size_t>>& puncture_choices,
                                  std::size_t g, EnumerationLimits& limits, const std::string& what) {
    PropertyReport rep;
    // Correcting zero further erasures is vacuous.
    if (puncture_choices.empty() || g == 0) return rep;
    const std::size_t cols = h.cols();
    const std::size_t punct_size = puncture_choices.front().size();

    const std::uint64_t per_p = binomial(cols - punct_size, g);
    std::uint64_t planned = kNoLimit;
    if (per_p != kNoLimit && puncture_choices.size() <= kNoLimit / std::max<std::uint64_t>(per_p, 1))
        planned = per_p * puncture_choices.size();
    charge(limits, planned, what);

    std::vector<bool> in_p(cols);
    for (const auto& p : puncture_choices) {
        std::fill(in_p.begin(), in_p.end(), false);
        for (std::size_t pos : p) in_p[pos] = true;
        std::vector<std::size_t> rest;
        rest.reserve(cols - p.size());
        for (std::size_t pos = 0; pos < cols; ++pos)
            if (!in_p[pos]) rest.push_back(pos);

        std::vector<std::size_t> e(g);
        for (std::size_t i = 0; i < g; ++i) e[i] = i;
        do {
            ++rep.cases_checked;
            std::vector<std::size_t> joint = p;
            for (std::size_t i : e) joint.push_back(rest[i]);
            std::sort(joint.begin(), joint.end());
            if (!columns_independent(h, joint)) {
                rep.holds = false;
                std::vector<std::size_t> erased;
                for (std::size_t i : e) erased.push_back(rest[i]);
                rep.witness = PropertyWitness{p, erased};
                limits.budget += planned - rep.cases_checked;
                return rep;
            }
        } while (next_combination(e, rest.size()));
    }
    limits.budget += planned - rep.cases_checked;
    return rep;
}

std::vector<std::vector<std::size_t>> row_combinations(std::size_t n, std::size_t ell) {
    std::vector<std::vector<std::size_t>> out;
    if (ell == 0) {
        out.push_back({});
        return out;
    }
    std::vector<std::size_t> c(ell);
    for (std::size_t i = 0; i < ell; ++i) c[i] = i;
    do {
        out.push_back(c);
    } while (next_combination(c, n));
    return out;
}

}  // namespace

PropertyReport check_pmds_matrix(const Matrix& h, std::size_t m, std::size_t n, std::size_t ell,
                                 std::size_t g, EnumerationLimits limits) {
    if (h.cols() != m * n) throw std::invalid_argument("check_pmds: matrix has wrong column count");

    // All ways of puncturing exactly ell positions in each of the m rows:
    // the product of per-row column combinations, last row varying fastest.
    const auto per_row = row_combinations(n, ell);
    std::vector<std::vector<std::size_t>> punctures;
    std::vector<std::size_t> idx(m, 0);
    bool more = true;
    while (more) {
        std::vector<std::size_t> p;
        p.reserve(m * ell);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c : per_row[idx[r]]) p.push_back(r * n + c);
        punctures.push_back(std::move(p));

        more = false;
        for (std::size_t r = m; r-- > 0;) {
            if (++idx[r] < per_row.size()) {
                more = true;
                break;
            }
            idx[r] = 0;
        }
    }
    return run_property_check(h, punctures, g, limits, "maximal-recoverability check");
}

PropertyReport check_sd_matrix(const Matrix& h, std::size_t m, std::size_t n, std::size_t ell,
                               std::size_t g, EnumerationLimits limits) {
    if (h.cols() != m * n) throw std::invalid_argument("check_sd: matrix has wrong column count");

    // Puncture whole array columns: the same ell column indices in every row.
    std::vector<std::vector<std::size_t>> punctures;
    for (const auto& cols : row_combinations(n, ell)) {
        std::vector<std::size_t> p;
        p.reserve(m * ell);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c : cols) p.push_back(r * n + c);
        std::sort(p.begin(), p.end());
        punctures.push_back(std::move(p));
    }
    return run_property_check(h, punctures, g, limits, "sector-disk check");
}

PropertyReport check_pmds(const LrcCode& code, EnumerationLimits limits) {
    const LrcParams& p = code.params();
    return check_pmds_matrix(code.parity_check(), p.m, p.n, p.ell, p.g, limits);
}

PropertyReport check_sd(const LrcCode& code, EnumerationLimits limits) {
    const LrcParams& p = code.params();
    return check_sd_matrix(code.parity_check(), p.m, p.n, p.ell, p.g, limits);
}

}  // namespace lrc
