// permres: build the complex of a composition, run verification suites and
// print exactness reports.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "permres/complex.hpp"
#include "permres/exactness.hpp"
#include "permres/export.hpp"
#include "permres/violation.hpp"

using namespace permres;
using nlohmann::json;

namespace {

constexpr int kMaxUnforcedRank = 7;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int r = 0;
    std::string lambda;
    std::string ring;
    std::optional<int> degree;
    std::string suite;
    std::string out;
    std::string json_path;
    bool force = false;
};

std::optional<Composition> parse_lambda(const RunConfig& cfg) {
    if (cfg.lambda.empty()) return std::nullopt;
    Composition c;
    try {
        c = Composition::parse(cfg.lambda);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --lambda: ") + e.what());
    }
    if (c.size() == 0) throw UsageError("--lambda must have positive size");
    if (cfg.r != 0 && c.size() != cfg.r) throw UsageError("--lambda does not sum to --r");
    return c;
}

int rank_of(const RunConfig& cfg, const std::optional<Composition>& lambda) {
    const int r = lambda ? lambda->size() : cfg.r;
    if (r <= 0) throw UsageError("give --r or --lambda");
    if (r >= kMaxRank) throw UsageError("r too large");
    if (r > kMaxUnforcedRank && !cfg.force) throw UsageError("r > 7 needs --force");
    return r;
}

std::vector<Specialization> strategies(const RunConfig& cfg) {
    if (cfg.ring.empty()) return full_battery();
    try {
        return {Specialization::parse(cfg.ring)};
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --ring: ") + e.what());
    }
}

void emit(const json& report, const RunConfig& cfg) {
    const std::string text = report.dump(2);
    if (!cfg.json_path.empty()) {
        std::ofstream f(cfg.json_path);
        if (!f) throw std::runtime_error("cannot write " + cfg.json_path);
        f << text << '\n';
    }
    std::cout << text << '\n';
}

int cmd_build(const RunConfig& cfg) {
    auto lambda = parse_lambda(cfg);
    if (!lambda) throw UsageError("build needs --lambda");
    rank_of(cfg, lambda);
    Specialization spec = Specialization::generic();
    if (!cfg.ring.empty()) spec = strategies(cfg).front();
    const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
    std::filesystem::create_directories(dir);

    const int top = a_of(*lambda);
    int lo = 0, hi = top;
    if (cfg.degree) {
        if (*cfg.degree < 0 || *cfg.degree > top) throw UsageError("--degree outside 0..a(lambda)");
        lo = hi = *cfg.degree;
    }
    ComplexIndex index(*lambda, hi);
    BoundaryBuilder<LaurentRing> builder(index, LaurentRing{});

    std::cout << "lambda " << lambda->to_string() << " a " << top << " dims";
    std::cout << ' ' << enumerate_Tst(*lambda).size();
    for (int n = 0; n <= hi; ++n) std::cout << ' ' << index.dim(n);
    std::cout << " (C_-1 .. C_" << hi << ")\n";

    const bool json_out = !cfg.json_path.empty();
    {
        std::ofstream f(dir / "basis_-1.txt");
        write_standard_listing(f, *lambda);
    }
    for (int n = lo; n <= hi; ++n) {
        std::ofstream f(dir / ("basis_" + std::to_string(n) + ".txt"));
        write_basis_listing(f, index, n);
    }
    for (int n = lo; n <= hi; ++n) {
        LaurentMatrix m = n == 0 ? builder.matrix_zero() : builder.matrix(n);
        const auto stem = dir / ("d_" + std::to_string(n));
        if (spec.kind == Specialization::Kind::Generic) {
            if (json_out) {
                std::ofstream(stem.string() + ".json") << matrix_json(n, m).dump() << '\n';
            } else {
                std::ofstream f(stem.string() + ".txt");
                write_matrix_text(f, n, m);
            }
        } else {
            std::ofstream f(stem.string() + ".txt");
            f << "degree " << n << " rows " << m.rows << " cols " << m.cols << '\n';
            for (std::size_t j = 0; j < m.columns.size(); ++j)
                for (const auto& [i, x] : m.columns[j]) {
                    auto v = specialize(x, spec);
                    if (!v.is_zero()) f << i << ' ' << j << ' ' << "{0:" << v.to_string() << "}\n";
                }
        }
        std::cout << "wrote " << stem.string() << (json_out && spec.kind == Specialization::Kind::Generic ? ".json" : ".txt")
                  << " (" << m.rows << " x " << m.cols << ", " << m.nonzeros() << " nonzeros)\n";
    }
    return 0;
}

std::vector<Composition> lambdas_for(const RunConfig& cfg, int r) {
    auto lambda = parse_lambda(cfg);
    if (lambda) return {*lambda};
    return compositions_of(r, r);
}

json suite_ddzero(const RunConfig& cfg, int r, bool& pass) {
    json items = json::array();
    for (const auto& lambda : lambdas_for(cfg, r)) {
        auto rep = check_composite_zero(lambda);
        json item{{"lambda", lambda.to_string()}, {"symbols", rep.symbols}, {"ok", rep.ok}};
        if (!rep.ok) item["failed_degree"] = rep.failed_degree;
        pass = pass && rep.ok;
        items.push_back(item);
    }
    return items;
}

json exactness_items(const std::vector<Composition>& lambdas, const RunConfig& cfg, int lo, int hi, bool with_ab,
                     bool& pass) {
    json items = json::array();
    const auto strats = strategies(cfg);
    for (const auto& lambda : lambdas) {
        const int top = a_of(lambda);
        const int h = std::min(hi, top);
        ComplexIndex index(lambda, std::min(h + 1, top));
        json per = json::array();
        bool ok = true;
        for (const auto& s : strats) {
            auto rep = check_exactness(index, s, lo, h);
            ok = ok && rep.all_exact();
            per.push_back(to_json(rep));
        }
        json item{{"lambda", lambda.to_string()}, {"ok", ok}, {"reports", per}};
        if (with_ab) {
            const std::uint32_t q0 = generic_point(lambda, kLargePrime, 1);
            json ab = json::array();
            for (int n = -1; n <= top; ++n) {
                auto res = check_AB(index, n, kLargePrime, q0);
                ok = ok && res.A && res.B;
                ab.push_back({{"n", n}, {"A", res.A}, {"B", res.B}, {"k_size", res.k_size}});
            }
            item["ok"] = ok;
            item["AB"] = ab;
        }
        pass = pass && ok;
        items.push_back(item);
    }
    return items;
}

std::vector<Tableau> nonstandard_tableaux(const Composition& lambda) {
    std::vector<Tableau> out;
    for (const auto& t : enumerate_Trs(lambda))
        if (!is_standard(t)) out.push_back(t);
    return out;
}

std::vector<std::vector<int>> subsets_up_to(const std::vector<int>& Z, int max_size) {
    std::vector<std::vector<int>> out;
    const std::size_t z = Z.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << z); ++mask) {
        if (std::popcount(mask) > max_size) continue;
        std::vector<int> X;
        for (std::size_t j = 0; j < z; ++j)
            if (mask >> j & 1) X.push_back(Z[j]);
        out.push_back(X);
    }
    return out;
}

json suite_lemma53(const RunConfig& cfg, int r, bool& pass) {
    json items = json::array();
    for (const auto& lambda : lambdas_for(cfg, r))
        for (const auto& t : nonstandard_tableaux(lambda)) {
            auto v = find_violation(t);
            std::int64_t subsets = 0;
            std::string failure;
            for (const auto& X : subsets_up_to(v.Z, v.n())) {
                ++subsets;
                auto res = check_subset(v, X);
                if (!res.ok && failure.empty()) failure = res.failure;
            }
            json item{{"lambda", lambda.to_string()}, {"t", t.to_string()}, {"subsets", subsets},
                      {"ok", failure.empty()}};
            if (!failure.empty()) item["failure"] = failure;
            pass = pass && failure.empty();
            items.push_back(item);
        }
    return items;
}

json suite_lemma54(const RunConfig& cfg, int r, bool& pass) {
    json items = json::array();
    for (const auto& lambda : lambdas_for(cfg, r)) {
        const auto ts = nonstandard_tableaux(lambda);
        if (ts.empty()) continue;
        ComplexIndex index(lambda, 1);
        for (const auto& t : ts) {
            auto rep = verify_lemma_5_4(t, &index);
            json item{{"lambda", lambda.to_string()}, {"t", t.to_string()}, {"l", rep.l},
                      {"expected_l", rep.expected_l}, {"ok", rep.ok}};
            if (!rep.ok) item["failure"] = rep.failure;
            pass = pass && rep.ok;
            items.push_back(item);
        }
    }
    return items;
}

json suite_prop22(const RunConfig& cfg, int r, bool& pass) {
    json items = json::array();
    const auto all = compositions_of(r, r);
    std::vector<Composition> tops = all;
    if (auto lambda = parse_lambda(cfg)) tops = {*lambda};
    for (const auto& lambda : tops) {
        std::int64_t checked = 0;
        std::string failure;
        for (const auto& mu : all) {
            if (!dominance_leq(mu, lambda)) continue;
            const int wb = static_cast<int>(pair_data(lambda, mu).wedge.size());
            for (const auto& nu : all) {
                if (!dominance_leq(nu, mu)) continue;
                const int wa = static_cast<int>(pair_data(mu, nu).wedge.size());
                for (int b = 0; b < wb; ++b)
                    for (int a = 0; a < wa; ++a) {
                        ++checked;
                        auto f = ascending_closure_failure(lambda, mu, nu, b, a);
                        if (!f.empty() && failure.empty()) failure = f;
                    }
            }
        }
        json item{{"lambda", lambda.to_string()}, {"pairs", checked}, {"ok", failure.empty()}};
        if (!failure.empty()) item["failure"] = failure;
        pass = pass && failure.empty();
        items.push_back(item);
    }
    return items;
}

int cmd_verify(const RunConfig& cfg) {
    auto lambda = parse_lambda(cfg);
    const int r = rank_of(cfg, lambda);
    bool pass = true;
    json items;
    const auto& s = cfg.suite;
    if (s == "ddzero") {
        items = suite_ddzero(cfg, r, pass);
    } else if (s == "degree0") {
        items = exactness_items(lambdas_for(cfg, r), cfg, -1, 0, false, pass);
    } else if (s == "tame") {
        std::vector<Composition> tame;
        for (const auto& c : lambdas_for(cfg, r))
            if (is_tame(c)) tame.push_back(c);
        items = exactness_items(tame, cfg, -1, 1 << 20, true, pass);
    } else if (s == "all-partitions") {
        std::vector<Composition> parts = lambda ? std::vector<Composition>{*lambda} : partitions_of(r);
        items = exactness_items(parts, cfg, -1, 1 << 20, false, pass);
    } else if (s == "lemma53") {
        items = suite_lemma53(cfg, r, pass);
    } else if (s == "lemma54") {
        items = suite_lemma54(cfg, r, pass);
    } else if (s == "prop22") {
        items = suite_prop22(cfg, r, pass);
    } else {
        throw UsageError("unknown --suite " + s);
    }
    emit({{"suite", s}, {"r", r}, {"pass", pass}, {"items", items}}, cfg);
    std::cerr << s << " r=" << r << ": " << (pass ? "pass" : "FAIL") << " (" << items.size() << " items)\n";
    return pass ? 0 : 1;
}

int cmd_report(const RunConfig& cfg) {
    auto lambda = parse_lambda(cfg);
    if (!lambda) throw UsageError("report needs --lambda");
    rank_of(cfg, lambda);
    auto reports = full_report(*lambda, strategies(cfg));
    bool exact = true;
    for (const auto& rep : reports) exact = exact && rep.all_exact();
    if (cfg.degree) {
        for (auto& rep : reports)
            std::erase_if(rep.degrees, [&](const DegreeReport& d) { return d.n != *cfg.degree; });
    }
    emit(to_json(reports), cfg);
    std::cerr << "lambda " << lambda->to_string() << ": " << (exact ? "exact" : "not certified exact everywhere")
              << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation module complexes of Hecke algebras"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--r", cfg.r, "size r");
        sub->add_option("--lambda", cfg.lambda, "composition a,b,c");
        sub->add_option("--ring", cfg.ring, "generic | q1-int | int:-1 | rat:q0 | fp:p,q0");
        sub->add_option("--degree", cfg.degree, "restrict to one degree");
        sub->add_option("--json", cfg.json_path, "also write JSON here");
        sub->add_flag("--force", cfg.force, "allow r > 7");
    };
    auto* build = app.add_subcommand("build", "write basis listings and boundary matrices");
    common(build);
    build->add_option("--out", cfg.out, "output directory");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify);
    verify->add_option("--suite", cfg.suite, "ddzero|degree0|tame|all-partitions|lemma53|lemma54|prop22")
        ->required();
    verify->add_option("--out", cfg.out, "accepted; this command writes no files");
    auto* report = app.add_subcommand("report", "exactness report as JSON");
    common(report);
    report->add_option("--out", cfg.out, "accepted; this command writes no files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (*build) return cmd_build(cfg);
        if (*verify) return cmd_verify(cfg);
        return cmd_report(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
