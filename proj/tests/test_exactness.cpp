#include "catch_amalgamated.hpp"

#include <random>

#include "permres/exactness.hpp"
#include "test_support.hpp"

using namespace permres;

namespace {

LaurentMatrix random_matrix(std::mt19937_64& gen, int rows, int cols, double density) {
    std::bernoulli_distribution keep(density);
    LaurentMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
            if (!keep(gen)) continue;
            auto x = testing_support::random_laurent(gen, 3, 2, 3);
            if (!x.is_zero()) m.columns[static_cast<std::size_t>(j)].emplace_back(static_cast<std::uint32_t>(i), x);
        }
    return m;
}

// A product of a random rows x k and k x cols matrix has rank at most k.
LaurentMatrix low_rank(std::mt19937_64& gen, int rows, int cols, int k) {
    return multiply(random_matrix(gen, rows, k, 0.8), random_matrix(gen, k, cols, 0.8), LaurentRing{});
}

ModMatrix mod_matrix(const std::vector<std::vector<std::uint32_t>>& dense) {
    ModMatrix m(static_cast<std::int64_t>(dense.size()), static_cast<std::int64_t>(dense[0].size()));
    for (std::size_t j = 0; j < dense[0].size(); ++j)
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (dense[i][j]) m.columns[j].emplace_back(static_cast<std::uint32_t>(i), dense[i][j]);
    return m;
}

}  // namespace

TEST_CASE("modular rank examples", "[exactness-engine]") {
    CHECK(rank_mod_p(mod_matrix({{1, 2}, {2, 4}}), 7) == 1);
    CHECK(rank_mod_p(mod_matrix({{1, 2}, {3, 4}}), 7) == 2);
    CHECK(rank_mod_p(mod_matrix({{1, 1}, {1, 1}}), 2) == 1);
    CHECK_THROWS_AS(rank_mod_p(mod_matrix({{1, 2}, {3, 4}}), 2), std::invalid_argument);
    CHECK(rank_mod_p(mod_matrix({{0, 0, 0}}), 5) == 0);
    CHECK(rank_mod_p(ModMatrix(0, 4), 5) == 0);
}

TEST_CASE("generic rank agrees with the fraction reference", "[exactness-engine]") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + static_cast<int>(gen() % 6), cols = 1 + static_cast<int>(gen() % 6);
        const int k = static_cast<int>(gen() % 4);
        auto m = trial % 2 ? random_matrix(gen, rows, cols, 0.5) : low_rank(gen, rows, cols, k);
        const auto g = rank_generic(m);
        CHECK(g == rank_fraction_reference(m));
        if (trial % 2 == 0) CHECK(g <= k);
        // Specializations never raise the rank.
        for (const auto& s : default_battery()) CHECK(rank_specialized(m, s) <= g);
        CHECK(rank_rational(m, Rational(7, 3)) <= g);
    }
}

TEST_CASE("specialization at q = 1 can drop the rank", "[exactness-engine]") {
    LaurentMatrix m(1, 1);
    m.columns[0].emplace_back(0, q_power(1) - LaurentScalar(1));
    CHECK(rank_generic(m) == 1);
    CHECK(rank_specialized(m, Specialization::rational(1)) == 0);
    CHECK(rank_specialized(m, Specialization::rational(2)) == 1);
    CHECK(rank_specialized(m, Specialization::prime(5, 6)) == 0);
    CHECK_THROWS_AS(rank_specialized(m, Specialization::generic()), std::invalid_argument);
}

TEST_CASE("Smith normal form examples", "[exactness-engine]") {
    CHECK(smith_normal_form({{1, 0}, {0, 1}}) == std::vector<BigInt>{1, 1});
    CHECK(smith_normal_form({{2}}) == std::vector<BigInt>{2});
    CHECK(smith_normal_form({{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
    CHECK(smith_normal_form({{2, 4}, {4, 8}}) == std::vector<BigInt>{2});
    CHECK(smith_normal_form({{0, 0}}).empty());
    CHECK(smith_normal_form({{4, 6}, {6, 9}, {2, 3}}) == std::vector<BigInt>{1});

    LaurentMatrix m(1, 2);
    m.columns[0].emplace_back(0, q_power(1) + LaurentScalar(1));
    m.columns[1].emplace_back(0, q_power(-1));
    auto at1 = integer_specialization(m, 1);
    CHECK(at1 == IntMatrix{{2, 1}});
    auto atm1 = integer_specialization(m, -1);
    CHECK(atm1 == IntMatrix{{0, -1}});
}

TEST_CASE("Smith normal form products match the determinant", "[exactness-engine]") {
    std::mt19937_64 gen(9);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m(3, std::vector<BigInt>(3));
        for (auto& row : m)
            for (auto& x : row) x = c(gen);
        const BigInt det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        auto d = smith_normal_form(m);
        for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
        if (det == 0) {
            CHECK(d.size() < 3);
        } else {
            REQUIRE(d.size() == 3);
            CHECK(d[0] * d[1] * d[2] == abs(det));
        }
    }
}

TEST_CASE("exactness report examples", "[exactness-engine]") {
    auto reports = full_report({3}, full_battery());
    REQUIRE(reports.size() == full_battery().size());
    for (const auto& rep : reports) {
        CHECK(rep.all_exact());
        REQUIRE(rep.degrees.size() == 2);
        CHECK(rep.degrees[0].n == -1);
        CHECK(rep.degrees[0].dim == 1);
    }

    for (const auto& rep : full_report({1, 1}, full_battery())) {
        INFO(rep.strategy);
        CHECK(rep.all_exact());
        REQUIRE(rep.degrees.size() == 3);
        CHECK(rep.degrees[1].dim == 2);
        CHECK(rep.degrees[1].rank_dn == 1);
        CHECK(rep.degrees[1].rank_dnext == 1);
    }

    for (const auto& rep : full_report({2, 1}, full_battery())) CHECK(rep.all_exact());

    ComplexIndex idx({1, 2}, 1);
    for (const auto& s : full_battery()) {
        auto rep = check_exactness(idx, s, -1, 0);
        INFO(s.name());
        CHECK(rep.all_exact());
        CHECK(rep.degrees[0].dim == 0);
    }
}

TEST_CASE("integral divisors", "[exactness-engine]") {
    ComplexIndex idx({2, 2});
    for (int q0 : {1, -1}) {
        auto rep = check_exactness(idx, Specialization::integer(q0), -1, idx.top_degree());
        CHECK(rep.all_exact());
        for (const auto& d : rep.degrees) {
            REQUIRE(d.divisors.has_value());
            for (const auto& x : *d.divisors) CHECK(x == 1);
        }
    }
}

TEST_CASE("routes agree", "[exactness-engine]") {
    EngineOptions no_clearing;
    no_clearing.clearing = false;
    EngineOptions modular_only;
    modular_only.bareiss_limit = 0;
    modular_only.rational_limit = 0;
    for (int r = 1; r <= 4; ++r)
        for (const auto& lambda : compositions_of(r, r)) {
            if (a_of(lambda) > 4) continue;
            ComplexIndex idx(lambda);
            const int top = idx.top_degree();
            for (const auto& s : {Specialization::generic(), Specialization::rational(Rational(1, 2)),
                                  Specialization::prime(3, 2), Specialization::prime(101, 1)}) {
                auto a = check_exactness(idx, s, -1, top);
                auto b = check_exactness(idx, s, -1, top, no_clearing);
                auto c = check_exactness(idx, s, -1, top, modular_only);
                REQUIRE(a.degrees.size() == b.degrees.size());
                REQUIRE(a.degrees.size() == c.degrees.size());
                for (std::size_t j = 0; j < a.degrees.size(); ++j) {
                    INFO(lambda.to_string() << " " << s.name() << " n=" << a.degrees[j].n);
                    CHECK(a.degrees[j].rank_dn == b.degrees[j].rank_dn);
                    CHECK(a.degrees[j].exact == b.degrees[j].exact);
                    if (c.degrees[j].exact.has_value()) CHECK(a.degrees[j].exact == c.degrees[j].exact);
                }
            }
        }
}

TEST_CASE("rank sums never exceed the dimension", "[exactness-engine]") {
    for (int r = 1; r <= 4; ++r)
        for (const auto& lambda : compositions_of(r, r)) {
            if (a_of(lambda) > 4) continue;
            ComplexIndex idx(lambda);
            for (const auto& rep : full_report(lambda, {Specialization::generic(), Specialization::integer(1),
                                                        Specialization::prime(3, 1)}))
                for (const auto& d : rep.degrees) {
                    INFO(lambda.to_string() << " " << rep.strategy << " n=" << d.n);
                    CHECK(d.rank_dn + d.rank_dnext <= d.dim);
                    CHECK(d.dim == (d.n < 0 ? static_cast<std::int64_t>(enumerate_Tst(lambda).size()) * lambda.is_partition() : idx.dim(d.n)));
                    if (d.exact.has_value()) CHECK(*d.exact == (d.rank_dn + d.rank_dnext == d.dim));
                }
        }
}

TEST_CASE("degree zero is exact for every composition", "[exactness-engine]") {
    for (int r = 1; r <= 4; ++r)
        for (const auto& lambda : compositions_of(r, r)) {
            ComplexIndex idx(lambda, 1);
            for (const auto& s : full_battery()) {
                auto rep = check_exactness(idx, s, -1, 0);
                INFO(lambda.to_string() << " " << s.name());
                CHECK(rep.all_exact());
            }
        }
}

TEST_CASE("standard tails span and are independent", "[exactness-engine]") {
    for (int r = 1; r <= 4; ++r)
        for (const auto& lambda : compositions_of(r, r)) {
            ComplexIndex idx(lambda, 1);
            auto k0 = standard_tail_symbols(idx, 0);
            CHECK(k0.size() == (lambda.is_partition() ? enumerate_Tst(lambda).size() : 0u));
            auto ab = check_AB(idx, 0, kLargePrime, generic_point(lambda, kLargePrime, 1));
            INFO(lambda.to_string());
            CHECK(ab.A);
            CHECK(ab.B);
        }
    for (int r = 1; r <= 4; ++r)
        for (const auto& lambda : compositions_of(r, r)) {
            if (!is_tame(lambda)) continue;
            ComplexIndex idx(lambda);
            for (int n = -1; n <= idx.top_degree(); ++n) {
                auto ab = check_AB(idx, n, kLargePrime, generic_point(lambda, kLargePrime, 1));
                INFO(lambda.to_string() << " n=" << n);
                CHECK(ab.A);
                CHECK(ab.B);
            }
        }
}

TEST_CASE("generic point is deterministic and in range", "[exactness-engine]") {
    auto a = generic_point({2, 1}, kLargePrime);
    CHECK(a == generic_point({2, 1}, kLargePrime));
    CHECK(a >= 2);
    CHECK(a <= kLargePrime - 2);
    CHECK(generic_point({2, 1}, 101, 3) <= 99);
}

TEST_CASE("report json", "[exactness-engine]") {
    ComplexIndex idx({2, 1});
    auto j = to_json(check_exactness(idx, Specialization::integer(1), -1, 1));
    CHECK(j["lambda"] == "2,1");
    CHECK(j["strategy"] == "int:1");
    REQUIRE(j["degrees"].size() == 3);
    const auto& d = j["degrees"][1];
    for (const char* key : {"n", "dim", "rank_dn", "rank_dnext", "exact", "method", "divisors"}) CHECK(d.contains(key));
    CHECK(d["n"] == 0);
    CHECK(d["exact"] == true);
    auto all = to_json(full_report({2, 1}, full_battery()));
    CHECK(all.is_array());
    CHECK(all.size() == full_battery().size());
    CHECK(full_battery().size() == 17);
}
