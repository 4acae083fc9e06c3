#include "lrc/io.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lrc {

namespace {

long long parse_int(std::string_view token, const std::string& what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw std::invalid_argument("cannot parse " + what + " from '" + std::string(token) + "'");
    return value;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(sep, start);
        if (end == std::string_view::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return parts;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

Matrix parse_matrix_tokens(std::string_view text, FieldPtr field_override) {
    auto tokens = tokenize(text);
    if (tokens.size() < 3) throw std::invalid_argument("matrix file: missing 'rows cols q' header");
    const auto rows = static_cast<std::size_t>(parse_int(tokens[0], "row count"));
    const auto cols = static_cast<std::size_t>(parse_int(tokens[1], "column count"));
    const auto q = static_cast<std::uint32_t>(parse_int(tokens[2], "field size"));

    FieldPtr field = std::move(field_override);
    if (field) {
        if (field->size() != q)
            throw std::invalid_argument("matrix file declares q=" + std::to_string(q) +
                                        " but the field has q=" + std::to_string(field->size()));
    } else {
        if (q < 2 || !std::has_single_bit(q))
            throw std::invalid_argument("matrix file: q must be a power of two, got " + std::to_string(q));
        field = make_field(static_cast<unsigned>(std::bit_width(q) - 1));
    }

    if (tokens.size() != 3 + rows * cols)
        throw std::invalid_argument("matrix file: expected " + std::to_string(rows * cols) +
                                    " entries, found " + std::to_string(tokens.size() - 3));
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        const std::string& tok = tokens[3 + i];
        if (tok == "-") continue;
        const long long e = parse_int(tok, "exponent");
        m.set(i / cols, i % cols, field->alpha_pow(e));
    }
    return m;
}

}  // namespace

std::string format_matrix(const Matrix& a) {
    std::ostringstream out;
    out << a.rows() << ' ' << a.cols() << ' ' << a.field()->size() << '\n';
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (c) out << ' ';
            const Symbol v = a(r, c);
            if (v == 0)
                out << '-';
            else
                out << a.field()->log_alpha(v);
        }
        out << '\n';
    }
    return out.str();
}

Matrix parse_matrix(std::string_view text) { return parse_matrix_tokens(text, nullptr); }

Matrix parse_matrix(std::string_view text, FieldPtr field) {
    if (!field) throw std::invalid_argument("parse_matrix: null field");
    return parse_matrix_tokens(text, std::move(field));
}

std::string format_symbols(std::span<const Symbol> symbols) {
    std::ostringstream out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out << ' ';
        out << symbols[i];
    }
    out << '\n';
    return out.str();
}

std::vector<Symbol> parse_symbols(std::string_view text, const Field& field) {
    std::vector<Symbol> symbols;
    for (const auto& tok : tokenize(text)) {
        const long long v = parse_int(tok, "symbol");
        if (v < 0 || static_cast<std::uint64_t>(v) >= field.size())
            throw std::out_of_range("symbol value " + tok + " not in [0, " +
                                    std::to_string(field.size()) + ")");
        symbols.push_back(static_cast<Symbol>(v));
    }
    return symbols;
}

LrcParams parse_code_spec(std::string_view text) {
    LrcParams p;
    bool seen_m = false, seen_n = false, seen_ell = false, seen_g = false, seen_field = false,
         seen_variant = false;
    for (std::string_view line : split(text, '\n')) {
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("code spec: expected 'key = value', got '" + std::string(line) + "'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key == "m") {
            p.m = static_cast<std::size_t>(parse_int(value, "m"));
            seen_m = true;
        } else if (key == "n") {
            p.n = static_cast<std::size_t>(parse_int(value, "n"));
            seen_n = true;
        } else if (key == "ell") {
            p.ell = static_cast<std::size_t>(parse_int(value, "ell"));
            seen_ell = true;
        } else if (key == "g") {
            p.g = static_cast<std::size_t>(parse_int(value, "g"));
            seen_g = true;
        } else if (key == "field") {
            p.field = parse_field_name(value);
            seen_field = true;
        } else if (key == "variant") {
            p.variant = parse_variant(value);
            seen_variant = true;
        } else {
            throw std::invalid_argument("code spec: unknown key '" + key + "'");
        }
    }
    if (!(seen_m && seen_n && seen_ell && seen_g && seen_field && seen_variant))
        throw std::invalid_argument("code spec: keys m, n, ell, g, field, variant are all required");
    return p;
}

std::string format_code_spec(const LrcParams& p) {
    std::ostringstream out;
    out << "m = " << p.m << '\n'
        << "n = " << p.n << '\n'
        << "ell = " << p.ell << '\n'
        << "g = " << p.g << '\n'
        << "field = " << field_name(*p.field) << '\n'
        << "variant = " << to_string(p.variant) << '\n';
    return out.str();
}

ErasurePattern parse_erasures(std::string_view csv, std::size_t length) {
    std::vector<std::size_t> positions;
    if (!trim(csv).empty())
        for (std::string_view part : split(csv, ',')) {
            part = trim(part);
            const long long v = parse_int(part, "erasure coordinate");
            if (v < 0) throw std::out_of_range("erasure coordinate must be nonnegative");
            positions.push_back(static_cast<std::size_t>(v));
        }
    return ErasurePattern(std::move(positions), length);
}

ErasurePattern parse_erasures_rc(std::string_view csv, std::size_t m, std::size_t n) {
    std::vector<std::size_t> positions;
    if (!trim(csv).empty())
        for (std::string_view part : split(csv, ',')) {
            part = trim(part);
            const auto colon = part.find(':');
            if (colon == std::string_view::npos)
                throw std::invalid_argument("expected row:col, got '" + std::string(part) + "'");
            const long long r = parse_int(trim(part.substr(0, colon)), "row");
            const long long c = parse_int(trim(part.substr(colon + 1)), "column");
            if (r < 0 || static_cast<std::size_t>(r) >= m)
                throw std::out_of_range("row " + std::to_string(r) + " out of range [0, " +
                                        std::to_string(m) + ")");
            if (c < 0 || static_cast<std::size_t>(c) >= n)
                throw std::out_of_range("column " + std::to_string(c) + " out of range [0, " +
                                        std::to_string(n) + ")");
            positions.push_back(static_cast<std::size_t>(r) * n + static_cast<std::size_t>(c));
        }
    return ErasurePattern(std::move(positions), m * n);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace lrc
