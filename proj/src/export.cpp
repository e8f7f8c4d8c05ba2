#include "permres/export.hpp"

#include <sstream>
#include <stdexcept>

#include "permres/tableau.hpp"

namespace permres {

void write_matrix_text(std::ostream& os, int degree, const LaurentMatrix& m) {
    os << "degree " << degree << " rows " << m.rows << " cols " << m.cols << '\n';
    for (std::size_t j = 0; j < m.columns.size(); ++j)
        for (const auto& [i, x] : m.columns[j]) os << i << ' ' << j << ' ' << x.to_term_map() << '\n';
}

LaurentMatrix read_matrix_text(std::istream& is, int* degree) {
    std::string word_degree, word_rows, word_cols;
    int n = 0;
    std::int64_t rows = 0, cols = 0;
    if (!(is >> word_degree >> n >> word_rows >> rows >> word_cols >> cols) || word_degree != "degree" ||
        word_rows != "rows" || word_cols != "cols" || rows < 0 || cols < 0)
        throw std::invalid_argument("matrix header expected");
    if (degree) *degree = n;
    LaurentMatrix m(rows, cols);
    std::int64_t i = 0, j = 0;
    std::string terms;
    while (is >> i >> j >> terms) {
        if (i < 0 || i >= rows || j < 0 || j >= cols) throw std::invalid_argument("matrix entry out of range");
        auto& col = m.columns[static_cast<std::size_t>(j)];
        if (!col.empty() && col.back().first >= static_cast<std::uint32_t>(i))
            throw std::invalid_argument("matrix entries out of order");
        col.emplace_back(static_cast<std::uint32_t>(i), LaurentScalar::parse_term_map(terms));
    }
    if (!is.eof()) throw std::invalid_argument("malformed matrix entry");
    return m;
}

nlohmann::json matrix_json(int degree, const LaurentMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t j = 0; j < m.columns.size(); ++j)
        for (const auto& [i, x] : m.columns[j]) {
            nlohmann::json terms = nlohmann::json::object();
            for (const auto& t : x.terms()) terms[std::to_string(t.exponent)] = t.coefficient.str();
            entries.push_back({{"row", i}, {"col", j}, {"terms", terms}});
        }
    return {{"degree", degree}, {"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

void write_basis_listing(std::ostream& os, const ComplexIndex& index, int n) {
    for (std::int64_t s = 0; s < index.dim(n); ++s) {
        auto sym = index.symbol(n, s);
        os << s << ' ';
        for (std::size_t c = 0; c < sym.chain.size(); ++c) os << (c ? " < " : "") << '(' << sym.chain[c].to_string() << ')';
        os << " |";
        for (const auto& T : sym.tableaux) os << ' ' << T.to_string();
        os << " | " << sym.tail.to_string() << '\n';
    }
}

void write_standard_listing(std::ostream& os, const Composition& lambda) {
    int k = 0;
    for (const auto& t : enumerate_Tst(lambda)) os << k++ << ' ' << t.to_string() << '\n';
}

}  // namespace permres
