#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {

// Field symbol in polynomial-basis representation, value in [0, q).
using Symbol = std::uint16_t;

// GF(2^w) for 1 <= w <= 16, realized as log/antilog tables over a fixed
// primitive element alpha (the class of x modulo the generating polynomial).
//
// Immutable after construction; all operations are pure and safe to share
// across threads.
class Field {
public:
    static constexpr unsigned kMinDegree = 1;
    static constexpr unsigned kMaxDegree = 16;

    // Builds GF(2^w) from the default primitive polynomial for w.
    explicit Field(unsigned w);

    // Builds GF(2^w) from an explicit polynomial bitmask (bit i = coefficient
    // of x^i, bit w must be set). Throws if the polynomial is not primitive.
    Field(unsigned w, std::uint32_t poly);

    unsigned degree() const { return w_; }
    std::uint32_t size() const { return q_; }       // q = 2^w
    std::uint32_t order() const { return q_ - 1; }  // order of alpha
    std::uint32_t poly() const { return poly_; }

    Symbol add(Symbol a, Symbol b) const;
    Symbol sub(Symbol a, Symbol b) const { return add(a, b); }
    Symbol mul(Symbol a, Symbol b) const;
    Symbol div(Symbol a, Symbol b) const;  // b != 0
    Symbol inv(Symbol a) const;            // a != 0

    // alpha^e with e reduced mod q-1; negative exponents allowed.
    Symbol alpha_pow(std::int64_t e) const;

    // Discrete log base alpha, in [0, q-1); a != 0.
    unsigned log_alpha(Symbol a) const;

    // Default primitive polynomial bitmask for degree w.
    static std::uint32_t default_poly(unsigned w);

private:
    void check_symbol(Symbol a) const;

    unsigned w_;
    std::uint32_t q_;
    std::uint32_t poly_;
    std::vector<Symbol> exp_;          // q-1 entries, exp_[e] = alpha^e
    std::vector<std::uint16_t> log_;   // log_[exp_[e]] = e, log_[0] unused
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned w);
FieldPtr make_field(unsigned w, std::uint32_t poly);

// Two fields are interchangeable when degree and polynomial agree.
bool same_field(const Field& a, const Field& b);

// Config/CLI name of a field: "gf2^w".
std::string field_name(const Field& f);
FieldPtr parse_field_name(std::string_view name);

}  // namespace lrc
