// wfp: command line front end for the wide-sense frameproof code library.
//
// Exit codes: 0 = ok, 1 = the checked property fails, 2 = input error,
// 3 = inconclusive (node budget exhausted), 4 = internal error.
//
// All wall-clock timing goes to stderr; stdout is deterministic for a fixed
// seed and thread count, and byte-identical across thread counts.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wfp/bounds.hpp"
#include "wfp/chains.hpp"
#include "wfp/code.hpp"
#include "wfp/codefile.hpp"
#include "wfp/json_io.hpp"
#include "wfp/oracles.hpp"
#include "wfp/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInternal = 4;

int env_threads() {
    const char* v = std::getenv("WFP_THREADS");
    if (!v || !*v) return 1;
    char* end = nullptr;
    long t = std::strtol(v, &end, 10);
    if (*end != '\0' || t < 1 || t > 256)
        throw std::invalid_argument("WFP_THREADS must be an integer in 1..256");
    return static_cast<int>(t);
}

std::string coalition_string(const std::vector<int>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ids[i]);
    }
    return s + "}";
}

void pad_to(std::string& s, std::size_t w, bool right) {
    if (s.size() >= w) return;
    std::string fill(w - s.size(), ' ');
    s = right ? fill + s : s + fill;
}

void print_table(const std::vector<std::vector<std::string>>& rows,
                 const std::vector<bool>& right_align) {
    std::vector<std::size_t> width(right_align.size(), 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c)
            width[c] = std::max(width[c], r[c].size());
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            std::string cell = r[c];
            pad_to(cell, width[c], right_align[c]);
            if (c) line += "  ";
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        std::cout << line << "\n";
    }
}

struct RangeSpec {
    int lo = 0;
    int hi = 0;
};

RangeSpec parse_range(const std::string& text) {
    auto dots = text.find("..");
    std::string a = dots == std::string::npos ? text : text.substr(0, dots);
    std::string b = dots == std::string::npos ? text : text.substr(dots + 2);
    std::size_t pa = 0, pb = 0;
    RangeSpec r;
    try {
        r.lo = std::stoi(a, &pa);
        r.hi = std::stoi(b, &pb);
    } catch (const std::exception&) {
        throw std::invalid_argument("range must be \"a..b\" with integers a, b");
    }
    if (pa != a.size() || pb != b.size())
        throw std::invalid_argument("range must be \"a..b\" with integers a, b");
    if (r.lo < 1 || r.hi > 64 || r.lo > r.hi)
        throw std::invalid_argument("range must satisfy 1 <= a <= b <= 64");
    return r;
}

std::string bound_cell(const wfp::bounds::BoundReport& r, const char* absent) {
    if (r.applicable && r.value) return std::to_string(*r.value);
    return absent;
}

int cmd_verify(const std::string& path, int t, const std::string& method, bool as_json) {
    if (method != "direct" && method != "structural" && method != "both")
        throw std::invalid_argument("--method must be direct, structural or both");
    if (method != "direct" && t != 2)
        throw std::invalid_argument("--method " + method + " requires --t 2");
    wfp::Code code = wfp::io::read_code_file(path);

    std::optional<wfp::DirectViolation> direct;
    std::optional<wfp::StructuralViolation> structural;
    if (method != "structural") direct = wfp::is_twfp_direct(code, t);
    if (method != "direct") structural = wfp::is_2wfp_structural(code);

    if (method == "both" && direct.has_value() != structural.has_value()) {
        std::cerr << "internal error: direct and structural verdicts disagree\n";
        return kExitInternal;
    }
    bool ok = !direct && !structural;

    if (as_json) {
        std::cout << wfp::io::verify_json(code, {t, method, ok, direct, structural});
    } else if (ok) {
        std::cout << "OK\n";
    } else if (direct) {
        std::cout << "violation X=" << coalition_string(direct->coalition) << " frames word "
                  << direct->framed << "\n";
    } else {
        std::cout << "violation at word " << structural->index << ": coincidence family "
                  << (structural->kind == wfp::ViolationKind::NotSperner ? "is not Sperner"
                                                                         : "has a covering pair")
                  << "\n";
    }
    return ok ? kExitOk : kExitPropertyFails;
}

int cmd_analyze(const std::string& path, bool as_json) {
    wfp::Code code = wfp::io::read_code_file(path);
    wfp::AnalysisReport report = wfp::analyze(code);
    if (as_json) {
        std::cout << wfp::io::analysis_json(code, report);
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"word", "l", "u", "d", "sperner", "non2cov", "case"});
    for (std::size_t i = 0; i < report.profiles.size(); ++i) {
        const auto& p = report.profiles[i];
        rows.push_back({std::to_string(p.index), std::to_string(p.min_size),
                        std::to_string(p.max_size), std::to_string(p.spread),
                        p.sperner ? "yes" : "no", p.non_2_covering ? "yes" : "no",
                        report.case_labels[i]});
    }
    print_table(rows, {true, true, true, true, false, false, false});
    std::cout << "min d = " << report.min_spread << "\n";
    return kExitOk;
}

int cmd_bounds(const std::string& range_text, const std::string& format) {
    RangeSpec range = parse_range(range_text);
    if (format == "json") {
        std::cout << wfp::io::bounds_table_json(range.lo, range.hi);
        return kExitOk;
    }
    if (format != "table" && format != "csv")
        throw std::invalid_argument("--format must be table, json or csv");

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "stinson-wei", "panoui", "improved", "best", "method"});
    for (int n = range.lo; n <= range.hi; ++n) {
        auto best = wfp::bounds::best_upper_bound(n);
        rows.push_back({std::to_string(n),
                        bound_cell(wfp::bounds::bound_stinson_wei(n), "n/a"),
                        bound_cell(wfp::bounds::bound_panoui(n), "caveat"),
                        bound_cell(wfp::bounds::bound_improved(n), "n/a"),
                        std::to_string(*best.value), best.method});
    }
    if (format == "csv") {
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < r.size(); ++c)
                std::cout << (c ? "," : "") << r[c];
            std::cout << "\n";
        }
    } else {
        print_table(rows, {true, true, true, true, true, false});
    }
    return kExitOk;
}

int cmd_search(int n, int q, int t, std::uint64_t budget, std::uint64_t seed,
               const std::string& out, bool as_json) {
    wfp::search::SearchOptions opts;
    opts.node_budget = budget;
    opts.seed = seed;
    opts.threads = env_threads();
    wfp::search::SearchResult r = wfp::search::search_max_code(n, q, t, opts);

    std::cerr << "size=" << r.size
              << " status=" << (r.status == wfp::search::SearchStatus::Optimal ? "optimal"
                                                                               : "budget-exhausted")
              << " nodes=" << r.nodes_explored << " seed=" << r.seed << "\n";
    std::fprintf(stderr, "wall: %.3fs\n", r.wall_seconds);

    if (as_json) {
        std::cout << wfp::io::search_json(r);
    } else if (out.empty()) {
        std::cout << wfp::io::serialize_code(r.best_code);
    } else {
        wfp::io::write_code_file(r.best_code, out);
    }
    return r.status == wfp::search::SearchStatus::Optimal ? kExitOk : kExitInconclusive;
}

int cmd_scd(int n) {
    wfp::ChainDecomposition d = wfp::symmetric_chain_decomposition(n);
    for (const auto& chain : d.chains) {
        std::string line;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i) line += ' ';
            line += chain[i].to_string();
        }
        std::cout << line << "\n";
    }
    return kExitOk;
}

int cmd_maxfam(int n, bool as_json) {
    auto start = std::chrono::steady_clock::now();
    wfp::oracles::FamilyCertificate cert = wfp::oracles::max_non2cov_sperner(n);
    std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
    std::fprintf(stderr, "wall: %.3fs\n", wall.count());

    if (as_json) {
        std::cout << wfp::io::certificate_json(cert);
        return kExitOk;
    }
    std::cout << "n = " << cert.n << "\n"
              << "optimum = " << cert.optimum << "\n"
              << "status = "
              << (cert.status == wfp::oracles::OracleStatus::Exact ? "exact" : "inconclusive")
              << "\n"
              << "nodes = " << cert.nodes << "\n"
              << "search space = " << cert.search_space_size << "\n";
    std::string witness;
    for (const auto& s : cert.witness) {
        if (!witness.empty()) witness += ' ';
        witness += s.to_string();
    }
    std::cout << "witness: " << witness << "\n";
    return cert.status == wfp::oracles::OracleStatus::Exact ? kExitOk : kExitInconclusive;
}

int cmd_gen(int n, int q, int m, std::uint64_t seed) {
    wfp::Code code = wfp::oracles::random_code(n, q, m, seed);
    std::cout << wfp::io::serialize_code(code);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wide-sense 2-frameproof code toolkit"};
    app.require_subcommand(1);

    std::string path, method = "both", range_text, format = "table", out;
    int t = 2, n = 0, q = 0, m = 0;
    std::uint64_t budget = 10'000'000, seed = 0;
    bool as_json = false;

    auto* verify = app.add_subcommand("verify", "check the frameproof property of a code file");
    verify->add_option("path", path, "code file")->required();
    verify->add_option("--t", t, "coalition size bound (default 2)");
    verify->add_option("--method", method, "direct|structural|both (default both)");
    verify->add_flag("--json", as_json, "emit a JSON report");

    auto* analyze = app.add_subcommand("analyze", "per-codeword coincidence family profile");
    analyze->add_option("path", path, "code file")->required();
    analyze->add_flag("--json", as_json, "emit a JSON report");

    auto* bounds = app.add_subcommand("bounds", "upper bound table for binary codes");
    bounds->add_option("--n-range", range_text, "code length range a..b")->required();
    bounds->add_option("--format", format, "table|json|csv (default table)");

    auto* search = app.add_subcommand("search", "branch and bound search for a large code");
    search->add_option("--n", n, "code length")->required();
    search->add_option("--q", q, "alphabet size")->required();
    search->add_option("--t", t, "coalition size bound (default 2)");
    search->add_option("--budget", budget, "node budget (default 10^7)");
    search->add_option("--seed", seed, "seed recorded in the result (default 0)");
    search->add_option("--out", out, "write the best code to this file instead of stdout");
    search->add_flag("--json", as_json, "emit the JSON result instead of a code file");

    auto* scd = app.add_subcommand("scd", "symmetric chain decomposition of the subset lattice");
    scd->add_option("--n", n, "ground set size")->required();

    auto* maxfam = app.add_subcommand("maxfam", "exact maximum Sperner non-2-covering family");
    maxfam->add_option("--n", n, "ground set size")->required();
    maxfam->add_flag("--json", as_json, "emit the JSON certificate");

    auto* gen = app.add_subcommand("gen", "generate a uniform random code file");
    gen->add_option("--n", n, "code length")->required();
    gen->add_option("--q", q, "alphabet size")->required();
    gen->add_option("--m", m, "number of words")->required();
    gen->add_option("--seed", seed, "RNG seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (verify->parsed()) return cmd_verify(path, t, method, as_json);
        if (analyze->parsed()) return cmd_analyze(path, as_json);
        if (bounds->parsed()) return cmd_bounds(range_text, format);
        if (search->parsed()) return cmd_search(n, q, t, budget, seed, out, as_json);
        if (scd->parsed()) return cmd_scd(n);
        if (maxfam->parsed()) return cmd_maxfam(n, as_json);
        if (gen->parsed()) return cmd_gen(n, q, m, seed);
    } catch (const wfp::io::ParseError& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::runtime_error& e) {
        // file open/write failures: the path came from the user
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
