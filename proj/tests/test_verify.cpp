#include "doctest.h"
#include "golden.hpp"
#include "lrc/io.hpp"
#include "lrc/verify.hpp"

using namespace lrc;

TEST_CASE("reed-solomon blocks are MDS: distance r+1") {
    auto f16 = make_field(4);
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t r = 1; r < n; ++r)
            CHECK(min_distance(rs_matrix(n, r, 0, 0, f16)) == r + 1);
}

TEST_CASE("reference codes hit their published distances") {
    CHECK(min_distance(build_gc({3, 6, 2, 3, make_field(3), Variant::GC})) == 6);
    CHECK(min_distance(build_gc_ext({2, 8, 2, 2, make_field(3), Variant::GC_EXT})) == 5);
    CHECK(min_distance(build_diag({3, 5, 2, 2, make_field(4), Variant::DIAG})) == 5);
}

TEST_CASE("distance_at_least") {
    Matrix eh = build_gc_ext({2, 8, 2, 2, make_field(3), Variant::GC_EXT});
    CHECK(distance_at_least(eh, 5));
    CHECK_FALSE(distance_at_least(eh, 6));
    CHECK(distance_at_least(eh, 1));

    Matrix ext = build_diag_ext({2, 8, 1, 4, make_field(4), Variant::DIAG_EXT});
    CHECK_FALSE(distance_at_least(ext, 7));  // its true distance is 6
    CHECK(distance_at_least(ext, 6));
}

TEST_CASE("first dependent subset is lexicographically first and job-invariant") {
    Matrix h = build_diag({3, 5, 2, 2, make_field(4), Variant::DIAG});

    EnumerationLimits seq;
    auto w1 = first_dependent_subset(h, 5, seq);
    REQUIRE(w1.has_value());
    CHECK_FALSE(columns_independent(h, *w1));

    for (unsigned jobs : {2u, 3u, 7u}) {
        EnumerationLimits par;
        par.jobs = jobs;
        auto w2 = first_dependent_subset(h, 5, par);
        REQUIRE(w2.has_value());
        CHECK(*w2 == *w1);
    }

    EnumerationLimits none;
    CHECK_FALSE(first_dependent_subset(h, 4, none).has_value());
}

TEST_CASE("enumeration budget guards the search") {
    Matrix h = build_gc({3, 6, 2, 3, make_field(3), Variant::GC});
    EnumerationLimits tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(min_distance(h, tiny), BudgetExceeded);

    // an early hit refunds the unscanned remainder
    Matrix z = Matrix::zeros(make_field(3), 2, 6);
    EnumerationLimits lim;
    lim.budget = 100;
    auto w = first_dependent_subset(z, 1, lim);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<std::size_t>{0});
    CHECK(lim.budget == 99);
}

TEST_CASE("is_optimal compares against the bound") {
    auto f8 = make_field(3);
    auto f16 = make_field(4);
    CHECK(is_optimal({3, 6, 2, 3, f8, Variant::GC}, 6));
    CHECK_FALSE(is_optimal({2, 8, 1, 4, f16, Variant::DIAG_EXT}, 5));  // bound is 6
    CHECK(is_optimal({2, 8, 1, 4, f16, Variant::DIAG_EXT}, 6));
    CHECK(is_optimal({4, 7, 3, 0, f16, Variant::GC}, 4));  // g=0: d = ell+1
}

TEST_CASE("xor collapse of the diag constructions") {
    auto f16 = make_field(4);

    Matrix h = build_diag({3, 5, 2, 2, f16, Variant::DIAG});
    Matrix collapsed = xor_collapse(h, 3, 2, 2);
    CHECK(collapsed == parse_matrix(golden::kCollapsed_3_5_2_2));
    CHECK(collapsed == rs_matrix(15, 4, 0, 0, f16));

    Matrix ext = build_diag_ext({2, 8, 1, 4, f16, Variant::DIAG_EXT});
    Matrix ext_collapsed = xor_collapse(ext, 2, 1, 4);
    CHECK(ext_collapsed == parse_matrix(golden::kCollapsedExt_2_8_1_4));
    CHECK(ext_collapsed == ers_matrix(16, 5, 0, f16));

    // m = 1 leaves the matrix unchanged
    Matrix one = build_diag({1, 5, 2, 2, f16, Variant::DIAG});
    CHECK(xor_collapse(one, 1, 2, 2) == one);

    CHECK_THROWS_AS(xor_collapse(h, 2, 2, 2), std::invalid_argument);
}

TEST_CASE("collapse of the other diag shape") {
    auto f16 = make_field(4);
    Matrix h = build_diag({3, 5, 1, 3, f16, Variant::DIAG});
    CHECK(xor_collapse(h, 3, 1, 3) == rs_matrix(15, 4, 0, 0, f16));
}

TEST_CASE("pmds and sd reports on a small diag code") {
    LrcCode code = LrcCode::build({2, 4, 1, 1, make_field(4), Variant::DIAG});

    PropertyReport pmds = check_pmds(code);
    PropertyReport sd = check_sd(code);
    CHECK(pmds.cases_checked > 0);
    CHECK(sd.cases_checked > 0);
    CHECK(pmds.holds == !pmds.witness.has_value());
    CHECK(sd.holds == !sd.witness.has_value());
    if (pmds.holds) CHECK(sd.holds);  // column punctures are a subset of the per-row ones

    if (!pmds.holds) {
        // a witness names ell punctures per row plus g erasures whose
        // columns really are dependent
        std::vector<std::size_t> joint = pmds.witness->punctured;
        joint.insert(joint.end(), pmds.witness->erased.begin(), pmds.witness->erased.end());
        std::sort(joint.begin(), joint.end());
        CHECK_FALSE(columns_independent(code.parity_check(), joint));
    }
}

TEST_CASE("pmds degenerate shapes") {
    auto f16 = make_field(4);

    // g = 0: nothing to erase after puncturing
    LrcCode trivial = LrcCode::build({2, 4, 1, 0, f16, Variant::DIAG});
    CHECK(check_pmds(trivial).holds);
    CHECK(check_sd(trivial).holds);

    // ell = 0 reduces to a plain MDS check of the global parities
    Matrix rs = rs_matrix(6, 2, 0, 0, f16);
    PropertyReport mds = check_pmds_matrix(rs, 1, 6, 0, 2);
    CHECK(mds.holds);
    CHECK(mds.cases_checked == 15);  // C(6,2) erasure pairs

    // a non-MDS matrix is caught
    Matrix bad(f16, 2, 6);
    bad.set(0, 0, 1);
    bad.set(1, 0, 1);
    bad.set(0, 1, 1);
    bad.set(1, 1, 1);  // columns 0 and 1 coincide
    PropertyReport nope = check_pmds_matrix(bad, 1, 6, 0, 2);
    CHECK_FALSE(nope.holds);
    REQUIRE(nope.witness.has_value());
    CHECK(nope.witness->erased == std::vector<std::size_t>{0, 1});
}

TEST_CASE("distance obeys the bound in the special regime") {
    auto f16 = make_field(4);
    for (std::size_t ell = 1; ell <= 2; ++ell)
        for (std::size_t g = 0; g <= 2; ++g) {
            if (ell + g >= 4) continue;
            LrcParams p{2, 4, ell, g, f16, Variant::DIAG};
            std::size_t d = min_distance(build_diag(p));
            CHECK(d <= special_bound(p.n, p.ell, p.g));
            CHECK(d == p.ell + p.g + 1);
        }
}
