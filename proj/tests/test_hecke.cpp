#include "catch_amalgamated.hpp"

#include <random>

#include "permres/hecke.hpp"
#include "test_support.hpp"

using namespace permres;

using H = HeckeElement<LaurentRing>;

namespace {

const LaurentRing L;

H T(const Permutation& w) { return H::basis(L, w); }

H random_element(std::mt19937_64& gen, int r) {
    const auto all = all_permutations(r);
    H h(L, r);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int k = 0; k < 3; ++k) h.add_term(all[pick(gen)], testing_support::random_laurent(gen, 2, 2, 3));
    return h;
}

}  // namespace

TEST_CASE("defining relation", "[hecke]") {
    const auto s = Permutation::simple(2, 1);
    const LaurentScalar q = q_power(1);
    CHECK(mul_by_Ts(H::one(L, 2), 1) == T(s));
    H ss(L, 2);
    ss.add_term(Permutation(2), q);
    ss.add_term(s, q - 1);
    CHECK(mul_by_Ts(T(s), 1) == ss);
    // (T_s T_s) T_s two ways
    CHECK(mul_by_Ts(mul_by_Ts(T(s), 1), 1) == mul(T(s), mul(T(s), T(s))));
    CHECK_THROWS(mul_by_Ts(T(s), 2));
}

TEST_CASE("identity and length-additive products", "[hecke]") {
    for (int r = 1; r <= 4; ++r) {
        const auto all = all_permutations(r);
        for (const auto& v : all) {
            CHECK(mul(T(v), H::one(L, r)) == T(v));
            CHECK(mul(H::one(L, r), T(v)) == T(v));
            for (const auto& w : all)
                if ((v * w).length() == v.length() + w.length()) CHECK(mul(T(v), T(w)) == T(v * w));
        }
    }
}

// T_v T_w is supported on the v u with u a subword of w.
TEST_CASE("product support", "[hecke]") {
    std::int64_t terms = 0;
    for (int r = 1; r <= 4; ++r) {
        const auto all = all_permutations(r);
        for (const auto& v : all)
            for (const auto& w : all) {
                const H p = mul(T(v), T(w));
                for (const auto& [x, c] : p.support()) {
                    CHECK(strong_bruhat_leq(v.inverse() * x, w));
                    ++terms;
                }
            }
    }
    CHECK(terms > 24 * 24);
}

TEST_CASE("associativity on random triples", "[hecke]") {
    std::mt19937_64 gen(7);
    for (int r = 2; r <= 4; ++r)
        for (int k = 0; k < 25; ++k) {
            auto a = random_element(gen, r), b = random_element(gen, r), c = random_element(gen, r);
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        }
}

TEST_CASE("q = 1 gives the group algebra", "[hecke]") {
    RationalRing Q(1);
    using HQ = HeckeElement<RationalRing>;
    for (int r = 1; r <= 4; ++r) {
        const auto all = all_permutations(r);
        for (const auto& v : all)
            for (const auto& w : all) CHECK(mul(HQ::basis(Q, v), HQ::basis(Q, w)) == HQ::basis(Q, v * w));
    }
}

TEST_CASE("x, y and z elements", "[hecke]") {
    const auto s = Permutation::simple(2, 1);
    CHECK(x_elem(L, Composition{1, 1, 1}) == H::one(L, 3));
    CHECK(x_elem(L, Composition{2}) == T(Permutation(2)) + T(s));
    CHECK(y_elem(L, Composition{1, 1}) == H::one(L, 2));
    H y2(L, 2);
    y2.add_term(Permutation(2), 1);
    y2.add_term(s, -q_power(-1));
    CHECK(y_elem(L, Composition{2}) == y2);
    CHECK(y_elem(L, Composition{3, 1}).size() == 6);
    CHECK(z_elem(L, Composition{1, 1}) == y2);
    CHECK(z_elem(L, Composition{2}) == x_elem(L, Composition{2}));
    CHECK_THROWS(z_elem(L, Composition{1, 2}));
}

TEST_CASE("x_lambda absorbs its Young subgroup", "[hecke]") {
    for (int r = 1; r <= 5; ++r)
        for (const auto& lambda : compositions_of(r, r)) {
            const auto x = x_elem(L, lambda);
            for (const auto& v : enumerate_W_lambda(lambda)) CHECK(mul(x, T(v)) == x.scaled(q_power(v.length())));
        }
}

TEST_CASE("rendering", "[hecke]") {
    CHECK(render(x_elem(L, Composition{2})) == "(1) * T[1 2] + (1) * T[2 1]");
}
