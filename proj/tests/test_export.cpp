#include "catch_amalgamated.hpp"

#include <algorithm>
#include <sstream>

#include "permres/export.hpp"

using namespace permres;

TEST_CASE("matrix text round trip", "[cli]") {
    for (const auto& lambda : {Composition({1, 1}), Composition({2, 1}), Composition({1, 2, 1})}) {
        auto c = build_complex(lambda);
        for (int n = 0; n <= c.top; ++n) {
            std::ostringstream os;
            write_matrix_text(os, n, c.d[static_cast<std::size_t>(n)]);
            std::istringstream is(os.str());
            int degree = -5;
            auto back = read_matrix_text(is, &degree);
            CHECK(degree == n);
            CHECK(back == c.d[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("matrix text format", "[cli]") {
    std::ostringstream os;
    write_matrix_text(os, 1, boundary({1, 1}, 1));
    CHECK(os.str() == "degree 1 rows 2 cols 1\n0 0 {0:1}\n1 0 {1:1}\n");
    std::istringstream bad("degree 1 rows 1 cols 1\n3 0 {0:1}\n");
    CHECK_THROWS(read_matrix_text(bad, nullptr));
}

TEST_CASE("matrix json", "[cli]") {
    auto j = matrix_json(0, boundary_zero({1, 1}));
    CHECK(j["degree"] == 0);
    CHECK(j["rows"] == 1);
    CHECK(j["cols"] == 2);
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][1]["row"] == 0);
    CHECK(j["entries"][1]["col"] == 1);
    CHECK(j["entries"][1]["terms"]["-1"] == "-1");
}

TEST_CASE("basis listing", "[cli]") {
    ComplexIndex idx({1, 1});
    std::ostringstream os;
    write_basis_listing(os, idx, 1);
    const std::string s = os.str();
    CHECK(std::count(s.begin(), s.end(), '\n') == 1);
    CHECK(s.rfind("0 ", 0) == 0);
    std::ostringstream st;
    write_standard_listing(st, Composition({2, 1}));
    const std::string t = st.str();
    CHECK(std::count(t.begin(), t.end(), '\n') == 2);
}
