#include "lrc/gf.hpp"

#include <charconv>
#include <stdexcept>

namespace lrc {

namespace {

// Reduce e into [0, order); works for negative e.
std::uint32_t mod_order(std::int64_t e, std::uint32_t order) {
    std::int64_t r = e % static_cast<std::int64_t>(order);
    if (r < 0) r += order;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

std::uint32_t Field::default_poly(unsigned w) {
    // One primitive polynomial per degree, bit i = coefficient of x^i.
    static constexpr std::uint32_t kPoly[17] = {
        0,
        0x3,      // x + 1
        0x7,      // x^2 + x + 1
        0xB,      // x^3 + x + 1
        0x13,     // x^4 + x + 1
        0x25,     // x^5 + x^2 + 1
        0x43,     // x^6 + x + 1
        0x89,     // x^7 + x^3 + 1
        0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
        0x211,    // x^9 + x^4 + 1
        0x409,    // x^10 + x^3 + 1
        0x805,    // x^11 + x^2 + 1
        0x1053,   // x^12 + x^6 + x^4 + x + 1
        0x201B,   // x^13 + x^4 + x^3 + x + 1
        0x4443,   // x^14 + x^10 + x^6 + x + 1
        0x8003,   // x^15 + x + 1
        0x1100B,  // x^16 + x^12 + x^3 + x + 1
    };
    if (w < kMinDegree || w > kMaxDegree)
        throw std::invalid_argument("field degree w must be in [1, 16], got " + std::to_string(w));
    return kPoly[w];
}

Field::Field(unsigned w) : Field(w, default_poly(w)) {}

Field::Field(unsigned w, std::uint32_t poly) : w_(w), poly_(poly) {
    if (w < kMinDegree || w > kMaxDegree)
        throw std::invalid_argument("field degree w must be in [1, 16], got " + std::to_string(w));
    q_ = 1u << w;
    if ((poly_ & q_) == 0 || poly_ >= (q_ << 1) || (poly_ & 1u) == 0)
        throw std::invalid_argument("polynomial bitmask must have degree exactly w and constant term 1");

    exp_.resize(q_ - 1);
    log_.assign(q_, 0xFFFF);

    std::uint32_t b = 1;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        if (log_[b] != 0xFFFF)
            throw std::invalid_argument("polynomial is not primitive for GF(2^" + std::to_string(w) + ")");
        exp_[e] = static_cast<Symbol>(b);
        log_[b] = static_cast<std::uint16_t>(e);
        b <<= 1;
        if (b & q_) b ^= poly_;
    }
    if (b != 1)
        throw std::invalid_argument("polynomial is not primitive for GF(2^" + std::to_string(w) + ")");
}

void Field::check_symbol(Symbol a) const {
    if (static_cast<std::uint32_t>(a) >= q_)
        throw std::out_of_range("symbol value " + std::to_string(a) + " not in field of size " +
                                std::to_string(q_));
}

Symbol Field::add(Symbol a, Symbol b) const {
    check_symbol(a);
    check_symbol(b);
    return static_cast<Symbol>(a ^ b);
}

Symbol Field::mul(Symbol a, Symbol b) const {
    check_symbol(a);
    check_symbol(b);
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

Symbol Field::div(Symbol a, Symbol b) const {
    return mul(a, inv(b));
}

Symbol Field::inv(Symbol a) const {
    check_symbol(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    std::uint32_t e = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[e];
}

Symbol Field::alpha_pow(std::int64_t e) const {
    return exp_[mod_order(e, q_ - 1)];
}

unsigned Field::log_alpha(Symbol a) const {
    check_symbol(a);
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
}

FieldPtr make_field(unsigned w) { return std::make_shared<const Field>(w); }

FieldPtr make_field(unsigned w, std::uint32_t poly) { return std::make_shared<const Field>(w, poly); }

bool same_field(const Field& a, const Field& b) {
    return a.degree() == b.degree() && a.poly() == b.poly();
}

std::string field_name(const Field& f) {
    return "gf2^" + std::to_string(f.degree());
}

FieldPtr parse_field_name(std::string_view name) {
    constexpr std::string_view prefix = "gf2^";
    if (name.substr(0, prefix.size()) != prefix)
        throw std::invalid_argument("field name must look like gf2^w, got '" + std::string(name) + "'");
    std::string_view digits = name.substr(prefix.size());
    unsigned w = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), w);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw std::invalid_argument("field name must look like gf2^w, got '" + std::string(name) + "'");
    return make_field(w);
}

}  // namespace lrc
