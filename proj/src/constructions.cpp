#include "lrc/constructions.hpp"

#include <stdexcept>

namespace lrc {

namespace {

void require_variant(const LrcParams& p, Variant v) {
    if (p.variant != v)
        throw std::invalid_argument("builder called with variant " + to_string(p.variant) +
                                    ", expected " + to_string(v));
}

Matrix gc_impl(const LrcParams& p) {
    Matrix local = kronecker(Matrix::identity(p.field, p.m), rs_matrix(p.n, p.ell, 0, 0, p.field));
    if (p.g == 0) return local;
    Matrix global = kronecker(Matrix::ones_row(p.field, p.m), rs_matrix(p.n, p.g, p.ell, 0, p.field));
    return vstack(local, global);
}

Matrix gc_ext_impl(const LrcParams& p) {
    Matrix local = kronecker(Matrix::identity(p.field, p.m), ers_matrix(p.n, p.ell, 0, p.field));
    if (p.g == 0) return local;
    Matrix band = hstack(rs_matrix(p.n - 1, p.g, p.ell, 0, p.field), Matrix::zeros(p.field, p.g, 1));
    return vstack(local, kronecker(Matrix::ones_row(p.field, p.m), band));
}

// Local block k evaluates its row code at points alpha^(k*n), ...,
// alpha^(k*n + n - 1), so the m blocks together tile the mn evaluation
// points of the length-mn global band; XOR-collapsing the local rows then
// reproduces an RS/ERS check of length mn (see xor_collapse).
Matrix diag_impl(const LrcParams& p) {
    const std::size_t mn = p.m * p.n;
    Matrix h(p.field, p.ell * p.m + p.g, mn);
    for (std::size_t k = 0; k < p.m; ++k) {
        Matrix block = rs_matrix(p.n, p.ell, 0, k * p.n, p.field);
        for (std::size_t t = 0; t < p.ell; ++t)
            for (std::size_t c = 0; c < p.n; ++c) h.set(k * p.ell + t, k * p.n + c, block(t, c));
    }
    if (p.g > 0) {
        Matrix global = rs_matrix(mn, p.g, p.ell, 0, p.field);
        for (std::size_t t = 0; t < p.g; ++t)
            for (std::size_t c = 0; c < mn; ++c) h.set(p.ell * p.m + t, c, global(t, c));
    }
    return h;
}

Matrix diag_ext_impl(const LrcParams& p) {
    const std::size_t mn = p.m * p.n;
    Matrix h(p.field, p.ell * p.m + p.g, mn);
    for (std::size_t k = 0; k < p.m; ++k) {
        Matrix block = (k + 1 < p.m) ? rs_matrix(p.n, p.ell, 0, k * p.n, p.field)
                                     : ers_matrix(p.n, p.ell, k * p.n, p.field);
        for (std::size_t t = 0; t < p.ell; ++t)
            for (std::size_t c = 0; c < p.n; ++c) h.set(k * p.ell + t, k * p.n + c, block(t, c));
    }
    if (p.g > 0) {
        Matrix global = rs_matrix(mn - 1, p.g, p.ell, 0, p.field);
        for (std::size_t t = 0; t < p.g; ++t)
            for (std::size_t c = 0; c + 1 < mn; ++c) h.set(p.ell * p.m + t, c, global(t, c));
    }
    return h;
}

Matrix dispatch(const LrcParams& p) {
    switch (p.variant) {
        case Variant::GC: return gc_impl(p);
        case Variant::GC_EXT: return gc_ext_impl(p);
        case Variant::DIAG: return diag_impl(p);
        case Variant::DIAG_EXT: return diag_ext_impl(p);
    }
    throw std::logic_error("unknown variant");
}

}  // namespace

std::string to_string(Variant v) {
    switch (v) {
        case Variant::GC: return "gc";
        case Variant::GC_EXT: return "gc-ext";
        case Variant::DIAG: return "diag";
        case Variant::DIAG_EXT: return "diag-ext";
    }
    throw std::logic_error("unknown variant");
}

Variant parse_variant(std::string_view s) {
    if (s == "gc") return Variant::GC;
    if (s == "gc-ext") return Variant::GC_EXT;
    if (s == "diag") return Variant::DIAG;
    if (s == "diag-ext") return Variant::DIAG_EXT;
    throw std::invalid_argument("unknown variant '" + std::string(s) +
                                "' (expected gc, gc-ext, diag or diag-ext)");
}

long long mod_reduce(long long s, long long t) {
    if (t <= 0) throw std::invalid_argument("mod_reduce: modulus must be positive");
    long long u = s % t;
    if (u < 0) u += t;
    return u;
}

std::size_t singleton_bound(std::size_t n, std::size_t ell, std::size_t g) {
    if (n < 1 || ell >= n) throw std::invalid_argument("singleton_bound: need 0 <= ell < n");
    const std::size_t rho = n - ell;
    return ell + n * (g / rho) + (g % rho) + 1;
}

std::size_t special_bound(std::size_t n, std::size_t ell, std::size_t g) {
    if (n < 1 || ell >= n) throw std::invalid_argument("special_bound: need 0 <= ell < n");
    if (ell + g >= n) throw std::invalid_argument("special_bound: needs ell + g < n");
    return ell + g + 1;
}

void validate_params(const LrcParams& p, bool force) {
    if (!p.field) throw std::invalid_argument("params carry no field");
    if (p.m < 1) throw std::invalid_argument("need m >= 1");
    if (p.ell < 1 || p.ell >= p.n) throw std::invalid_argument("need 1 <= ell < n");
    if (p.g > p.m * (p.n - p.ell))
        throw std::invalid_argument("need g <= m*(n-ell): the code dimension would be negative");

    // The global band is a Reed-Solomon block and cannot have more rows
    // than its length allows.
    const std::size_t mn = p.m * p.n;
    switch (p.variant) {
        case Variant::GC:
            if (p.g >= p.n) throw std::invalid_argument("variant gc: the global band needs g < n");
            break;
        case Variant::GC_EXT:
            if (p.g != 0 && p.g >= p.n - 1)
                throw std::invalid_argument("variant gc-ext: the global band needs g < n-1");
            break;
        case Variant::DIAG:
            if (p.g >= mn) throw std::invalid_argument("variant diag: the global band needs g < m*n");
            break;
        case Variant::DIAG_EXT:
            if (p.g != 0 && p.g >= mn - 1)
                throw std::invalid_argument("variant diag-ext: the global band needs g < m*n-1");
            break;
    }

    if (force) return;
    const std::uint32_t q = p.field->size();
    switch (p.variant) {
        case Variant::GC:
            if (q <= p.n)
                throw std::invalid_argument("variant gc requires q > n; got q=" + std::to_string(q) +
                                            ", n=" + std::to_string(p.n));
            break;
        case Variant::GC_EXT:
            if (q != p.n)
                throw std::invalid_argument("variant gc-ext requires q = n; got q=" + std::to_string(q) +
                                            ", n=" + std::to_string(p.n));
            break;
        case Variant::DIAG:
            if (q <= mn)
                throw std::invalid_argument("variant diag requires q > m*n; got q=" + std::to_string(q) +
                                            ", m*n=" + std::to_string(mn));
            break;
        case Variant::DIAG_EXT:
            if (q != mn)
                throw std::invalid_argument("variant diag-ext requires q = m*n; got q=" +
                                            std::to_string(q) + ", m*n=" + std::to_string(mn));
            break;
    }
}

bool optimality_regime(const LrcParams& p) {
    if (p.ell + p.g >= p.n) return false;
    if (p.variant == Variant::GC || p.variant == Variant::GC_EXT) return p.g <= p.ell + 1;
    return true;
}

Matrix rs_matrix(std::size_t n, std::size_t r, std::size_t i, std::size_t j, FieldPtr field) {
    if (r < 1 || r >= n) throw std::invalid_argument("rs_matrix: need 1 <= r < n");
    Matrix h(field, r, n);
    for (std::size_t t = 0; t < r; ++t)
        for (std::size_t c = 0; c < n; ++c) {
            const std::int64_t e = static_cast<std::int64_t>(i + t) * static_cast<std::int64_t>(j + c);
            h.set(t, c, field->alpha_pow(e));
        }
    return h;
}

Matrix ers_matrix(std::size_t n, std::size_t r, std::size_t j, FieldPtr field) {
    if (r < 1 || r >= n) throw std::invalid_argument("ers_matrix: need 1 <= r < n");
    Matrix h(field, r, n);
    for (std::size_t c = 0; c < n; ++c) h.set(0, c, 1);
    for (std::size_t t = 1; t < r; ++t)
        for (std::size_t c = 0; c + 1 < n; ++c) {
            const std::int64_t e = static_cast<std::int64_t>(t) * static_cast<std::int64_t>(j + c);
            h.set(t, c, field->alpha_pow(e));
        }
    return h;
}

Matrix build_gc(const LrcParams& p) {
    require_variant(p, Variant::GC);
    validate_params(p);
    return gc_impl(p);
}

Matrix build_gc_ext(const LrcParams& p) {
    require_variant(p, Variant::GC_EXT);
    validate_params(p);
    return gc_ext_impl(p);
}

Matrix build_diag(const LrcParams& p) {
    require_variant(p, Variant::DIAG);
    validate_params(p);
    return diag_impl(p);
}

Matrix build_diag_ext(const LrcParams& p) {
    require_variant(p, Variant::DIAG_EXT);
    validate_params(p);
    return diag_ext_impl(p);
}

Matrix build_parity_check(const LrcParams& p, bool force) {
    validate_params(p, force);
    return dispatch(p);
}

CodeParamsReport report(const LrcParams& p) {
    CodeParamsReport r{};
    r.length = p.m * p.n;
    r.dimension = p.m * (p.n - p.ell) - p.g;
    r.bound_d = singleton_bound(p.n, p.ell, p.g);
    r.locality = p.n - p.ell;
    return r;
}

}  // namespace lrc
