#include "permres/exactness.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

namespace permres {

namespace {

template <class Ring>
SparseMatrix<typename Ring::value_type> boundary_over(BoundaryBuilder<Ring>& b, int n) {
    return n == 0 ? b.matrix_zero() : b.matrix(n);
}

// Ranks of d_lo..d_hi over a field ring, highest degree first so that the
// pivots of d_{n+1} can clear columns of d_n.
template <class Ring>
RankTable field_ranks(const ComplexIndex& index, const Ring& ring, int lo, int hi, bool clearing) {
    RankTable table;
    const int top = index.top_degree();
    table.rank.assign(static_cast<std::size_t>(top + 1), std::nullopt);
    lo = std::max(lo, 0);
    hi = std::min(hi, top);
    BoundaryBuilder<Ring> builder(index, ring);
    std::vector<char> cleared;
    for (int n = hi; n >= lo; --n) {
        auto m = boundary_over(builder, n);
        ColumnReducer<Ring> red(ring, m.rows);
        std::vector<char> lows(static_cast<std::size_t>(m.rows), 0);
        std::int64_t rank = 0;
        for (std::int64_t j = 0; j < m.cols; ++j) {
            if (clearing && !cleared.empty() && cleared[static_cast<std::size_t>(j)]) continue;
            std::int64_t low = red.reduce(std::move(m.columns[static_cast<std::size_t>(j)]));
            if (low >= 0) {
                ++rank;
                lows[static_cast<std::size_t>(low)] = 1;
            }
        }
        table.rank[static_cast<std::size_t>(n)] = rank;
        cleared = std::move(lows);
    }
    table.method = clearing ? "column reduction with clearing" : "column reduction";
    return table;
}

std::uint32_t residue_of(const Rational& x, std::uint32_t p) {
    PrimeField F(p, 1);
    BigInt num = numerator(x) % p, den = denominator(x) % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    std::uint32_t d = static_cast<std::uint32_t>(den);
    if (d == 0) throw std::invalid_argument("denominator vanishes mod p");
    return F.mul(static_cast<std::uint32_t>(num), F.inv(d));
}

std::int64_t dim_at(const ComplexIndex& index, int n) {
    if (n == -1) return static_cast<std::int64_t>(enumerate_Tst(index.lambda()).size());
    return index.dim(n);
}

std::int64_t rows_of_boundary(const ComplexIndex& index, int n) { return dim_at(index, n - 1); }

struct Needed {
    int lo = 0, hi = -1;  // boundary degrees
};

Needed needed(const ComplexIndex& index, int lo, int hi) {
    return {std::max(lo, 0), std::min(hi + 1, index.top_degree())};
}

}  // namespace

bool ExactnessReport::all_exact() const {
    for (const auto& d : degrees)
        if (!d.exact || !*d.exact) return false;
    return true;
}

RankTable ranks_mod_p(const ComplexIndex& index, std::uint32_t p, std::uint32_t q0, int lo, int hi, bool clearing) {
    PrimeField F(p, q0);
    return field_ranks(index, F, lo, hi, clearing);
}

std::uint32_t generic_point(const Composition& lambda, std::uint32_t p, int salt) {
    std::seed_seq seq{static_cast<int>(std::hash<std::string>{}(lambda.to_string()) & 0x7fffffff), salt, 20231};
    std::mt19937_64 gen(seq);
    std::uniform_int_distribution<std::uint32_t> dist(2, p - 2);
    return dist(gen);
}

std::vector<Specialization> full_battery() {
    std::vector<Specialization> out{Specialization::generic()};
    for (auto& s : default_battery()) out.push_back(s);
    return out;
}

ExactnessReport check_exactness(const ComplexIndex& index, const Specialization& spec, int lo, int hi,
                                const EngineOptions& options) {
    const int top = index.top_degree();
    lo = std::max(lo, -1);
    hi = std::min(hi, top);
    if (index.built_degree() < std::min(hi + 1, top)) throw std::invalid_argument("complex index not built far enough");
    ExactnessReport report{index.lambda(), spec.name(), {}};
    const Needed need = needed(index, lo, hi);

    auto rank_at = [](const RankTable& t, int n) -> std::optional<std::int64_t> {
        if (n < 0 || n >= static_cast<int>(t.rank.size())) return std::int64_t{0};
        return t.rank[static_cast<std::size_t>(n)];
    };
    std::int64_t largest_dim = 0, largest_area = 0;
    for (int n = need.lo; n <= need.hi; ++n) {
        largest_dim = std::max({largest_dim, dim_at(index, n), rows_of_boundary(index, n)});
        largest_area = std::max(largest_area, dim_at(index, n) * rows_of_boundary(index, n));
    }

    // Fill rows from a rank table; `certify` decides a degree whose ranks are
    // only lower bounds (sandwich with rank d_n + rank d_{n+1} <= dim C_n).
    auto fill = [&](const RankTable& t, bool lower_bounds_only, const std::string& method) {
        for (int n = lo; n <= hi; ++n) {
            DegreeReport row;
            row.n = n;
            row.dim = dim_at(index, n);
            auto a = rank_at(t, n), b = rank_at(t, n + 1);
            row.rank_dn = a.value_or(0);
            row.rank_dnext = b.value_or(0);
            row.method = method;
            if (a && b) {
                const bool full = *a + *b == row.dim;
                if (full || !lower_bounds_only) row.exact = full;
            }
            report.degrees.push_back(row);
        }
    };

    switch (spec.kind) {
        case Specialization::Kind::Prime: {
            auto t = ranks_mod_p(index, spec.p, spec.q0_mod, need.lo, need.hi, options.clearing);
            fill(t, false, "F_" + std::to_string(spec.p) + " " + t.method);
            break;
        }
        case Specialization::Kind::Rational: {
            if (largest_dim <= options.rational_limit) {
                RationalRing R(spec.q0);
                auto t = field_ranks(index, R, need.lo, need.hi, options.clearing);
                fill(t, false, "exact rational " + t.method);
            } else {
                auto t = ranks_mod_p(index, kLargePrime, residue_of(spec.q0, kLargePrime), need.lo, need.hi,
                                     options.clearing);
                fill(t, true, "lower bounds over F_" + std::to_string(kLargePrime) + ", certified by rank sum");
            }
            break;
        }
        case Specialization::Kind::Generic: {
            if (largest_area <= options.bareiss_limit) {
                BoundaryBuilder<LaurentRing> builder(index, LaurentRing{});
                RankTable t;
                t.rank.assign(static_cast<std::size_t>(top + 1), std::nullopt);
                for (int n = need.lo; n <= need.hi; ++n)
                    t.rank[static_cast<std::size_t>(n)] = rank_generic(boundary_over(builder, n));
                fill(t, false, "fraction-free elimination over Z[q,q^-1]");
            } else {
                const std::uint32_t q0 = generic_point(index.lambda(), kLargePrime);
                auto t = ranks_mod_p(index, kLargePrime, q0, need.lo, need.hi, options.clearing);
                fill(t, true,
                     "lower bounds over F_" + std::to_string(kLargePrime) + " at q0=" + std::to_string(q0) +
                         ", certified by rank sum");
            }
            break;
        }
        case Specialization::Kind::Integer: {
            if (largest_area > options.snf_limit) {
                // ranks over Q only; integrality left undecided
                auto t = ranks_mod_p(index, kLargePrime, residue_of(spec.q0, kLargePrime), need.lo, need.hi,
                                     options.clearing);
                fill(t, true, "too large for Smith form");
                for (auto& row : report.degrees) row.exact.reset();
                break;
            }
            RationalRing R(spec.q0);
            BoundaryBuilder<RationalRing> builder(index, R);
            std::vector<std::optional<std::vector<BigInt>>> divisors(static_cast<std::size_t>(top + 2));
            RankTable t;
            t.rank.assign(static_cast<std::size_t>(top + 1), std::nullopt);
            for (int n = need.lo; n <= need.hi; ++n) {
                auto m = boundary_over(builder, n);
                IntMatrix dense(static_cast<std::size_t>(m.rows), std::vector<BigInt>(static_cast<std::size_t>(m.cols)));
                for (std::size_t j = 0; j < m.columns.size(); ++j)
                    for (const auto& [i, x] : m.columns[j]) dense[i][j] = numerator(x);
                auto d = smith_normal_form(std::move(dense));
                t.rank[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(d.size());
                divisors[static_cast<std::size_t>(n)] = std::move(d);
            }
            fill(t, false, "Smith normal form over Z");
            for (auto& row : report.degrees) {
                const int next = row.n + 1;
                std::vector<BigInt> dv;
                if (next <= top) {
                    if (!divisors[static_cast<std::size_t>(next)]) {
                        row.exact.reset();
                        continue;
                    }
                    dv = *divisors[static_cast<std::size_t>(next)];
                }
                const bool units = std::all_of(dv.begin(), dv.end(), [](const BigInt& x) { return x == 1; });
                if (row.exact) row.exact = *row.exact && units;
                row.divisors = std::move(dv);
            }
            break;
        }
    }
    return report;
}

DegreeReport check_exact_at(const ComplexIndex& index, int n, const Specialization& spec,
                            const EngineOptions& options) {
    auto report = check_exactness(index, spec, n, n, options);
    if (report.degrees.empty()) throw std::invalid_argument("degree out of range");
    return report.degrees.front();
}

std::vector<ExactnessReport> full_report(const Composition& lambda, const std::vector<Specialization>& strategies,
                                         const EngineOptions& options) {
    ComplexIndex index(lambda);
    std::vector<ExactnessReport> out;
    for (const auto& s : strategies) out.push_back(check_exactness(index, s, -1, index.top_degree(), options));
    return out;
}

std::vector<std::int64_t> standard_tail_symbols(const ComplexIndex& index, int n) {
    std::vector<std::int64_t> out;
    if (n < 0 || n > index.top_degree()) return out;
    std::vector<std::vector<int>> standard(index.universe().size());
    std::vector<char> known(index.universe().size(), 0);
    auto standard_of = [&](int id) -> const std::vector<int>& {
        if (!known[static_cast<std::size_t>(id)]) {
            const auto tails = enumerate_Trs(index.universe()[static_cast<std::size_t>(id)]);
            for (std::size_t t = 0; t < tails.size(); ++t)
                if (is_standard(tails[t])) standard[static_cast<std::size_t>(id)].push_back(static_cast<int>(t));
            known[static_cast<std::size_t>(id)] = 1;
        }
        return standard[static_cast<std::size_t>(id)];
    };
    for (std::int64_t p = 0; p < index.prefix_count(n); ++p) {
        const int last = index.prefix(n, p).chain.back();
        const std::int64_t base = index.prefix_base(n, p);
        for (int t : standard_of(last)) out.push_back(base + t);
    }
    return out;
}

ABResult check_AB(const ComplexIndex& index, int n, std::uint32_t p, std::uint32_t q0) {
    const int top = index.top_degree();
    if (n < -1 || n > top) throw std::invalid_argument("check_AB: degree out of range");
    PrimeField F(p, q0);
    BoundaryBuilder<PrimeField> builder(index, F);
    ABResult res;
    const auto K = standard_tail_symbols(index, n);
    res.k_size = static_cast<std::int64_t>(K.size());
    const std::int64_t dim = dim_at(index, n);

    // (B_n): d_n is injective on K_n.
    if (n == -1 || K.empty()) {
        res.B = true;
    } else {
        auto m = boundary_over(builder, n);
        ColumnReducer<PrimeField> red(F, m.rows);
        std::int64_t rank = 0;
        for (auto j : K)
            if (red.reduce(m.columns[static_cast<std::size_t>(j)]) >= 0) ++rank;
        res.B = rank == res.k_size;
    }
    // (A_n): im d_{n+1} spans C_n modulo the K_n coordinates.
    if (n + 1 > top) {
        res.A = res.k_size == dim;
    } else {
        auto m = boundary_over(builder, n + 1);
        std::vector<char> in_k(static_cast<std::size_t>(m.rows), 0);
        for (auto j : K) in_k[static_cast<std::size_t>(j)] = 1;
        ColumnReducer<PrimeField> red(F, m.rows);
        std::int64_t rank = 0;
        for (auto& col : m.columns) {
            ColumnReducer<PrimeField>::Column kept;
            for (auto& e : col)
                if (!in_k[e.first]) kept.push_back(e);
            if (red.reduce(std::move(kept)) >= 0) ++rank;
        }
        res.A = rank == dim - res.k_size;
    }
    return res;
}

namespace {

nlohmann::json big_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

}  // namespace

nlohmann::json to_json(const ExactnessReport& report) {
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& d : report.degrees) {
        nlohmann::json row{{"n", d.n},
                           {"dim", d.dim},
                           {"rank_dn", d.rank_dn},
                           {"rank_dnext", d.rank_dnext},
                           {"exact", d.exact ? nlohmann::json(*d.exact) : nlohmann::json(nullptr)},
                           {"method", d.method}};
        if (d.divisors) {
            nlohmann::json dv = nlohmann::json::array();
            for (const auto& x : *d.divisors) dv.push_back(big_to_json(x));
            row["divisors"] = dv;
        }
        degrees.push_back(row);
    }
    return {{"lambda", report.lambda.to_string()}, {"degrees", degrees}, {"strategy", report.strategy}};
}

nlohmann::json to_json(const std::vector<ExactnessReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    return out;
}

}  // namespace permres
