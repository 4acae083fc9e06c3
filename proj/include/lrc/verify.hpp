#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "lrc/codec.hpp"

namespace lrc {

// Raised when a verification would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Guard for the exhaustive searches, counted in column-subset rank checks.
// A level of subsets is charged up front and unspent checks are refunded,
// so a search either runs to completion or fails loudly before starting.
struct EnumerationLimits {
    std::uint64_t budget = 100'000'000;
    unsigned jobs = 1;
};

// The lexicographically first size-t column subset of `h` that is linearly
// dependent, or nullopt when all are independent. With jobs > 1 the
// combination sequence is split into contiguous ranges scanned in parallel;
// the result does not depend on the job count.
std::optional<std::vector<std::size_t>> first_dependent_subset(const Matrix& h, std::size_t t,
                                                               EnumerationLimits& limits);

// True minimum distance of the code with parity-check matrix `h`: the
// smallest t such that some t columns are dependent.
std::size_t min_distance(const Matrix& h, EnumerationLimits limits = {});

// True iff every subset of delta-1 columns is independent.
bool distance_at_least(const Matrix& h, std::size_t delta, EnumerationLimits limits = {});

// Whether d meets the Singleton-type bound with equality.
bool is_optimal(const LrcParams& p, std::size_t d);

// Collapses the local rows of a diag/diag-ext parity-check matrix: row t
// (t < ell) of the result is the XOR of rows t, ell+t, ..., (m-1)ell+t, and
// the g global rows follow unchanged. For the diag constructions this
// reproduces a single length-mn RS/ERS check.
Matrix xor_collapse(const Matrix& h, std::size_t m, std::size_t ell, std::size_t g);

struct PropertyWitness {
    std::vector<std::size_t> punctured;  // coordinates deleted first
    std::vector<std::size_t> erased;     // additional erasures that fail
};

struct PropertyReport {
    bool holds = true;
    std::optional<PropertyWitness> witness;  // first counterexample
    std::uint64_t cases_checked = 0;
};

// Maximal recoverability: for every choice of exactly ell punctured
// positions per row, the punctured code corrects any g further erasures.
PropertyReport check_pmds(const LrcCode& code, EnumerationLimits limits = {});

// Sector-disk property: like PMDS, but the punctured positions are ell
// whole columns of the array (the same columns in every row).
PropertyReport check_sd(const LrcCode& code, EnumerationLimits limits = {});

// Matrix-level cores of the property checks; ell = 0 degenerates to a plain
// MDS check of the g global parities.
PropertyReport check_pmds_matrix(const Matrix& h, std::size_t m, std::size_t n, std::size_t ell,
                                 std::size_t g, EnumerationLimits limits = {});
PropertyReport check_sd_matrix(const Matrix& h, std::size_t m, std::size_t n, std::size_t ell,
                               std::size_t g, EnumerationLimits limits = {});

}  // namespace lrc
