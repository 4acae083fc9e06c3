// lrctk: build, inspect and exercise locally recoverable erasure codes on
// m x n symbol arrays (ell local parities per row, g global parities).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lrc/io.hpp"
#include "lrc/verify.hpp"

namespace {

using namespace lrc;

// One failing verify claim flips the exit code but the report still prints.
struct ClaimFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodeOptions {
    std::string spec_file;
    std::size_t m = 0, n = 0, ell = 0, g = 0;
    std::string field;
    std::string variant;
    bool force = false;

    void attach(CLI::App* cmd, bool with_force = true) {
        cmd->add_option("--spec", spec_file, "code spec file (key = value lines)");
        cmd->add_option("--m", m, "array rows");
        cmd->add_option("--n", n, "array columns (row length)");
        cmd->add_option("--ell", ell, "local parities per row");
        cmd->add_option("--g", g, "global parities");
        cmd->add_option("--field", field, "field name, e.g. gf2^4");
        cmd->add_option("--variant", variant, "gc | gc-ext | diag | diag-ext");
        if (with_force)
            cmd->add_flag("--force", force, "build even when the variant's field-size rule fails");
    }

    LrcParams resolve() const {
        if (!spec_file.empty()) return parse_code_spec(read_text_file(spec_file));
        if (m == 0 || n == 0 || field.empty() || variant.empty())
            throw CLI::ValidationError(
                "provide --spec or all of --m, --n, --ell, --g, --field, --variant");
        LrcParams p;
        p.m = m;
        p.n = n;
        p.ell = ell;
        p.g = g;
        p.field = parse_field_name(field);
        p.variant = parse_variant(variant);
        return p;
    }
};

void write_output(const std::string& path, const std::string& content) {
    if (path == "-")
        std::cout << content;
    else
        write_text_file(path, content);
}

std::string poly_hex(const Field& f) {
    std::ostringstream out;
    out << "0x" << std::hex << f.poly();
    return out.str();
}

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i];
    }
    return out.str();
}

EnumerationLimits limits_from_env(unsigned jobs) {
    EnumerationLimits lim;
    lim.jobs = jobs;
    if (const char* env = std::getenv("LRC_WORK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw std::invalid_argument("LRC_WORK_BUDGET must be a positive integer, got '" +
                                        std::string(env) + "'");
        lim.budget = v;
    }
    return lim;
}

void cmd_bound(std::size_t m, std::size_t n, std::size_t ell, std::size_t g) {
    if (m < 1 || ell < 1 || ell >= n) throw std::invalid_argument("need m >= 1 and 1 <= ell < n");
    if (g > m * (n - ell)) throw std::invalid_argument("need g <= m*(n-ell)");
    const std::size_t k = m * (n - ell) - g;
    std::cout << "(m,n;ell,g) = (" << m << "," << n << ";" << ell << "," << g << ")\n";
    std::cout << "code: [" << m * n << ", " << k << "]\n";
    std::cout << "locality: " << n - ell << "\n";
    std::cout << "bound: d <= " << singleton_bound(n, ell, g) << "\n";
    std::cout << "regime ell+g < n: " << (ell + g < n ? "yes" : "no") << "\n";
}

void cmd_build(const CodeOptions& opts, const std::string& out_path) {
    LrcParams p = opts.resolve();
    Matrix h = build_parity_check(p, opts.force);
    std::ostream& info = (out_path == "-") ? std::cerr : std::cout;
    info << "variant: " << to_string(p.variant) << "\n";
    info << "field: " << field_name(*p.field) << " (poly " << poly_hex(*p.field) << ")\n";
    info << "H: " << h.rows() << " x " << h.cols() << "\n";
    info << "full row rank: " << (rank(h) == h.rows() ? "yes" : "no") << "\n";
    write_output(out_path, format_matrix(h));
    if (out_path != "-") info << "wrote " << out_path << "\n";
}

void cmd_encode(const CodeOptions& opts, const std::string& data_path, const std::string& out_path) {
    LrcParams p = opts.resolve();
    LrcCode code = LrcCode::build(p, opts.force);
    std::vector<Symbol> data = parse_symbols(read_text_file(data_path), *p.field);
    std::vector<Symbol> word = encode(code, data);
    write_output(out_path, format_symbols(word));
    std::ostream& info = (out_path == "-") ? std::cerr : std::cout;
    info << "encoded " << data.size() << " data symbols into " << word.size() << "\n";
    if (out_path != "-") info << "wrote " << out_path << "\n";
}

void cmd_decode(const CodeOptions& opts, const std::string& received_path,
                const std::string& erasures_csv, const std::string& erasures_rc_csv,
                const std::string& out_path) {
    LrcParams p = opts.resolve();
    LrcCode code = LrcCode::build(p, opts.force);
    std::vector<Symbol> received = parse_symbols(read_text_file(received_path), *p.field);

    const ErasurePattern flat = parse_erasures(erasures_csv, code.length());
    const ErasurePattern by_cell = parse_erasures_rc(erasures_rc_csv, p.m, p.n);
    std::vector<std::size_t> positions = flat.positions();
    positions.insert(positions.end(), by_cell.positions().begin(), by_cell.positions().end());
    ErasurePattern pattern(std::move(positions), code.length());

    DecodeResult result = decode(code, received, pattern);
    if (!result.ok()) {
        std::cerr << "unrecoverable: columns of H at positions " << join(result.dependent_positions)
                  << " are linearly dependent\n";
        std::exit(2);
    }
    std::vector<Symbol> check = syndrome(code, *result.word);
    for (Symbol s : check)
        if (s != 0) {
            std::cerr << "input is inconsistent with the code outside the erasures\n";
            std::exit(2);
        }
    write_output(out_path, format_symbols(*result.word));
    std::ostream& info = (out_path == "-") ? std::cerr : std::cout;
    info << "recovered " << pattern.size() << " erased symbols\n";
    if (out_path != "-") info << "wrote " << out_path << "\n";
}

void cmd_verify(const CodeOptions& opts, std::optional<std::size_t> claimed_distance, bool pmds,
                bool sd, unsigned jobs) {
    LrcParams p = opts.resolve();
    Matrix h = build_parity_check(p, opts.force);
    CodeParamsReport rep = report(p);

    std::cout << "params: m=" << p.m << " n=" << p.n << " ell=" << p.ell << " g=" << p.g
              << " field=" << field_name(*p.field) << " variant=" << to_string(p.variant) << "\n";
    std::cout << "poly: " << poly_hex(*p.field) << "\n";
    std::cout << "length: " << rep.length << "\n";
    std::cout << "dimension: " << rep.dimension << "\n";
    std::cout << "locality: " << rep.locality << "\n";
    std::cout << "bound: d <= " << rep.bound_d << "\n";

    bool all_hold = true;

    const bool full_rank = rank(h) == h.rows();
    std::cout << "full row rank: " << (full_rank ? "yes" : "no") << "\n";
    if (!full_rank) all_hold = false;

    EnumerationLimits lim = limits_from_env(jobs);
    if (claimed_distance) {
        const bool ok = distance_at_least(h, *claimed_distance, lim);
        std::cout << "distance >= " << *claimed_distance << ": " << (ok ? "yes" : "no") << "\n";
        if (!ok) {
            EnumerationLimits wlim = limits_from_env(jobs);
            auto witness = first_dependent_subset(h, *claimed_distance - 1, wlim);
            if (witness) std::cout << "witness (dependent columns): " << join(*witness) << "\n";
            all_hold = false;
        }
    } else {
        const std::size_t d = min_distance(h, lim);
        std::cout << "distance: " << d << "\n";
        const bool optimal = is_optimal(p, d);
        std::cout << "optimal: " << (optimal ? "yes" : "no") << "\n";
        if (!optimal) {
            EnumerationLimits wlim = limits_from_env(jobs);
            auto witness = first_dependent_subset(h, d, wlim);
            if (witness) std::cout << "witness (dependent columns): " << join(*witness) << "\n";
        }
        // a forced build suppresses the construction's optimality claim
        if (!opts.force && optimality_regime(p) && !optimal) all_hold = false;
    }

    if (p.variant == Variant::DIAG || p.variant == Variant::DIAG_EXT) {
        Matrix collapsed = xor_collapse(h, p.m, p.ell, p.g);
        const std::size_t mn = p.m * p.n;
        Matrix expected = (p.variant == Variant::DIAG)
                              ? rs_matrix(mn, p.ell + p.g, 0, 0, p.field)
                              : ers_matrix(mn, p.ell + p.g, 0, p.field);
        const bool ok = collapsed == expected;
        std::cout << "xor-collapse: " << (ok ? "ok" : "mismatch") << "\n";
        if (!ok) all_hold = false;
    }

    if (pmds || sd) {
        LrcCode code = LrcCode::build(p, opts.force);
        if (pmds) {
            PropertyReport r = check_pmds(code, limits_from_env(jobs));
            std::cout << "pmds: " << (r.holds ? "holds" : "fails") << " (cases checked: "
                      << r.cases_checked << ")\n";
            if (r.witness)
                std::cout << "pmds witness: punctured " << join(r.witness->punctured) << "; erased "
                          << join(r.witness->erased) << "\n";
        }
        if (sd) {
            PropertyReport r = check_sd(code, limits_from_env(jobs));
            std::cout << "sd: " << (r.holds ? "holds" : "fails") << " (cases checked: "
                      << r.cases_checked << ")\n";
            if (r.witness)
                std::cout << "sd witness: punctured " << join(r.witness->punctured) << "; erased "
                          << join(r.witness->erased) << "\n";
        }
    }

    if (!all_hold) throw ClaimFailed("verification failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally recoverable erasure codes: parity-check construction, "
                 "encoding, decoding and exhaustive verification"};
    app.require_subcommand(1);

    // bound
    auto* bound = app.add_subcommand("bound", "print length, dimension and the distance bound");
    std::size_t b_m = 0, b_n = 0, b_ell = 0, b_g = 0;
    bound->add_option("--m", b_m, "array rows")->required();
    bound->add_option("--n", b_n, "array columns")->required();
    bound->add_option("--ell", b_ell, "local parities per row")->required();
    bound->add_option("--g", b_g, "global parities")->required();

    // build
    auto* build = app.add_subcommand("build", "write a parity-check matrix in exponent form");
    CodeOptions build_opts;
    build_opts.attach(build);
    std::string build_out;
    build->add_option("--out", build_out, "output path, or - for stdout")->required();

    // encode
    auto* enc = app.add_subcommand("encode", "encode a data file into a codeword file");
    CodeOptions enc_opts;
    enc_opts.attach(enc);
    std::string enc_data, enc_out;
    enc->add_option("--data", enc_data, "file with k data symbols")->required();
    enc->add_option("--out", enc_out, "output path, or - for stdout")->required();

    // decode
    auto* dec = app.add_subcommand("decode", "recover erased symbols of a received word");
    CodeOptions dec_opts;
    dec_opts.attach(dec);
    std::string dec_received, dec_out, dec_erasures, dec_erasures_rc;
    dec->add_option("--received", dec_received, "file with mn symbols (erased entries ignored)")
        ->required();
    dec->add_option("--erasures", dec_erasures, "erased coordinates, e.g. 3,7,12");
    dec->add_option("--erasures-rc", dec_erasures_rc, "erased row:col pairs, e.g. 0:2,1:4");
    dec->add_option("--out", dec_out, "output path, or - for stdout")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "measure the code against its claims");
    CodeOptions ver_opts;
    ver_opts.attach(ver);
    std::size_t ver_distance = 0;
    auto* dist_opt = ver->add_option("--distance", ver_distance, "check d >= this instead of exact d");
    bool ver_pmds = false, ver_sd = false;
    unsigned ver_jobs = 1;
    ver->add_flag("--pmds", ver_pmds, "also run the maximal-recoverability check");
    ver->add_flag("--sd", ver_sd, "also run the sector-disk check");
    ver->add_option("--jobs", ver_jobs, "parallel workers for subset enumeration");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) {
            cmd_bound(b_m, b_n, b_ell, b_g);
        } else if (build->parsed()) {
            cmd_build(build_opts, build_out);
        } else if (enc->parsed()) {
            cmd_encode(enc_opts, enc_data, enc_out);
        } else if (dec->parsed()) {
            cmd_decode(dec_opts, dec_received, dec_erasures, dec_erasures_rc, dec_out);
        } else if (ver->parsed()) {
            std::optional<std::size_t> claimed;
            if (dist_opt->count() > 0) claimed = ver_distance;
            cmd_verify(ver_opts, claimed, ver_pmds, ver_sd, ver_jobs);
        }
    } catch (const ClaimFailed&) {
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
