#include "catch_amalgamated.hpp"

#include <algorithm>
#include <map>

#include "permres/shapes.hpp"

using namespace permres;

namespace {

// Partial sums comparison written out independently.
bool dominated(const Composition& a, const Composition& b) {
    int sa = 0, sb = 0;
    for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

std::vector<Composition> all_compositions(int r) {
    // every composition of r has at most r nonzero parts but may have
    // interior zeros; length r suffices for the dominance checks below
    return compositions_of(r, r);
}

int longest_chain(const Composition& lambda, const std::vector<Composition>& pool,
                  std::map<Composition, int>& memo) {
    auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (const auto& mu : pool)
        if (dominance_less(lambda, mu)) best = std::max(best, 1 + longest_chain(mu, pool, memo));
    return memo[lambda] = best;
}

}  // namespace

TEST_CASE("composition basics", "[shapes]") {
    Composition c{1, 0, 2, 0, 0};
    CHECK(c.length() == 3);
    CHECK(c.size() == 3);
    CHECK(c != Composition({1, 2}));
    CHECK(Composition::parse("1,0,2") == c);
    CHECK(c.to_string() == "1,0,2");
    CHECK_THROWS(Composition::parse("1,x"));
    CHECK_THROWS(Composition::parse("1,-2"));
    CHECK_THROWS(Composition::parse(""));
    CHECK(Composition({2, 1}).is_partition());
    CHECK_FALSE(c.is_partition());
}

TEST_CASE("dominance examples and order axioms", "[shapes]") {
    CHECK(dominance_leq({1, 1, 1}, {2, 1}));
    CHECK(dominance_leq({2, 1}, {2, 1}));
    CHECK(dominance_leq({1, 1, 1}, {2, 0, 1}));
    CHECK_FALSE(dominance_leq({2, 1}, {1, 2}));
    for (int r = 1; r <= 5; ++r) {
        const auto all = all_compositions(r);
        for (const auto& a : all)
            for (const auto& b : all) {
                CHECK(dominance_leq(a, b) == dominated(a, b));
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                if (!dominance_leq(a, b)) continue;
                for (const auto& c : all)
                    if (dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
    }
}

TEST_CASE("dual partitions", "[shapes]") {
    CHECK(dual({4}) == Composition({1, 1, 1, 1}));
    CHECK(dual({2, 1}) == Composition({2, 1}));
    CHECK(dual({3, 1}) == Composition({2, 1, 1}));
    for (int r = 1; r <= 6; ++r)
        for (const auto& l : partitions_of(r)) CHECK(dual(dual(l)) == l);
    for (int r = 1; r <= 5; ++r)
        for (const auto& a : partitions_of(r))
            for (const auto& b : partitions_of(r)) CHECK(dominance_leq(a, b) == dominance_leq(dual(b), dual(a)));
    CHECK(dj_leq({1, 1, 1}, {3}));
    CHECK(dj_leq({1, 2}, {2, 1}));
    CHECK(dj_leq({2, 1}, {2, 1}));
}

TEST_CASE("partitions are listed completely", "[shapes]") {
    const int counts[] = {1, 1, 2, 3, 5, 7, 11};
    for (int r = 1; r <= 6; ++r) {
        auto ps = partitions_of(r);
        CHECK(static_cast<int>(ps.size()) == counts[r]);
        for (const auto& p : ps) CHECK(p.is_partition());
    }
}

TEST_CASE("bar and quasi-partitions", "[shapes]") {
    CHECK(bar({2, 1}) == Composition({2, 1}));
    CHECK(bar({1, 2}) == Composition({2, 1}));
    CHECK(bar({0, 2}) == Composition({1, 1}));
    CHECK(is_quasi_partition({1, 2}));
    CHECK_FALSE(is_quasi_partition({0, 2}));
    for (int r = 1; r <= 5; ++r)
        for (const auto& mu : all_compositions(r)) {
            const auto b = bar(mu);
            CHECK(b.is_partition());
            CHECK(dominance_leq(mu, b));
            for (const auto& p : partitions_of(r))
                if (dominance_leq(mu, p)) CHECK(dominance_leq(b, p));
            if (mu.is_partition()) CHECK(is_quasi_partition(mu));
            CHECK(is_quasi_partition(mu) == (mu.sorted() == b));
        }
}

TEST_CASE("tame compositions", "[shapes]") {
    CHECK(is_tame({4}));
    CHECK(is_tame({3, 2, 1}));
    CHECK(is_tame({2, 1}));
    // brute force over all dominating compositions
    for (int r = 1; r <= 6; ++r) {
        const auto all = all_compositions(r);
        std::map<Composition, bool> quasi;
        for (const auto& mu : all) quasi[mu] = is_quasi_partition(mu);
        for (const auto& l : all) {
            bool tame = true;
            for (const auto& mu : all)
                if (dominance_leq(l, mu) && !quasi[mu]) tame = false;
            CHECK(is_tame(l) == tame);
        }
    }
    // every partition with at most three rows and third row at most 1
    for (int r = 1; r <= 6; ++r)
        for (const auto& l : partitions_of(r))
            if (l.length() <= 2 || (l.length() == 3 && l[2] <= 1)) CHECK(is_tame(l));
}

TEST_CASE("dominating compositions", "[shapes]") {
    CHECK(dominating_compositions({3}) == std::vector<Composition>{{3}});
    CHECK(dominating_compositions({1, 1}) == std::vector<Composition>{{1, 1}, {2}});
    auto d111 = dominating_compositions({1, 1, 1});
    CHECK(std::find(d111.begin(), d111.end(), Composition({2, 0, 1})) != d111.end());
    for (int r = 1; r <= 5; ++r)
        for (const auto& l : all_compositions(r)) {
            std::vector<Composition> expect;
            for (const auto& mu : all_compositions(r))
                if (dominance_leq(l, mu)) expect.push_back(mu);
            auto got = dominating_compositions(l);
            CHECK(got == expect);
            for (const auto& mu : got) CHECK(mu.length() <= l.length());
        }
}

TEST_CASE("chains and a(lambda)", "[shapes]") {
    CHECK(chains({1, 1}, 0).size() == 1);
    auto c1 = chains({1, 1}, 1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == ChainOfShapes{{1, 1}, {2}});
    CHECK(chains({1, 1}, 2).empty());
    CHECK(a_of({3}) == 0);
    CHECK(a_of({1, 1}) == 1);
    for (int r = 1; r <= 5; ++r) {
        const auto all = all_compositions(r);
        std::map<Composition, int> memo;
        for (const auto& l : all) {
            CHECK(a_of(l) == longest_chain(l, all, memo));
            if (r > 4) continue;
            for (int n = 0; n <= a_of(l); ++n)
                for (const auto& ch : chains(l, n)) {
                    REQUIRE(static_cast<int>(ch.size()) == n + 1);
                    CHECK(ch.front() == l);
                    for (int k = 0; k < n; ++k) CHECK(dominance_less(ch[k], ch[k + 1]));
                }
            CHECK(chains(l, a_of(l) + 1).empty());
        }
    }
    std::map<Composition, int> memo;
    CHECK(a_of({1, 1, 1}) == longest_chain({1, 1, 1}, all_compositions(3), memo));
}

TEST_CASE("multinomials", "[shapes]") {
    CHECK(multinomial({2, 1}) == 3);
    CHECK(multinomial({1, 0, 2}) == 3);
    CHECK(multinomial({1, 1, 1, 1, 1}) == 120);
}
