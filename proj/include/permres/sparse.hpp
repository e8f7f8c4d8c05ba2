#pragma once

// Column-major sparse matrices over an arbitrary coefficient type.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permres/laurent.hpp"

namespace permres {

template <class V>
struct SparseMatrix {
    using Entry = std::pair<std::uint32_t, V>;
    using Column = std::vector<Entry>;  // sorted by row, no zeros

    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<Column> columns;

    SparseMatrix() = default;
    SparseMatrix(std::int64_t rows_, std::int64_t cols_)
        : rows(rows_), cols(cols_), columns(static_cast<std::size_t>(cols_)) {}

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns) n += c.size();
        return n;
    }
    bool is_zero() const {
        for (const auto& c : columns)
            if (!c.empty()) return false;
        return true;
    }
    bool operator==(const SparseMatrix& other) const = default;
};

using LaurentMatrix = SparseMatrix<LaurentScalar>;

/// Applies a ring's from_laurent entrywise, dropping new zeros.
template <class Ring>
SparseMatrix<typename Ring::value_type> convert(const LaurentMatrix& m, const Ring& R) {
    SparseMatrix<typename Ring::value_type> out(m.rows, m.cols);
    for (std::size_t j = 0; j < m.columns.size(); ++j)
        for (const auto& [i, x] : m.columns[j]) {
            auto v = R.from_laurent(x);
            if (!R.is_zero(v)) out.columns[j].emplace_back(i, std::move(v));
        }
    return out;
}

/// a * b over the ring R.
template <class Ring>
SparseMatrix<typename Ring::value_type> multiply(const SparseMatrix<typename Ring::value_type>& a,
                                                 const SparseMatrix<typename Ring::value_type>& b, const Ring& R) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
    using V = typename Ring::value_type;
    SparseMatrix<V> out(a.rows, b.cols);
    std::vector<V> acc(static_cast<std::size_t>(a.rows), R.zero());
    std::vector<char> touched(static_cast<std::size_t>(a.rows), 0);
    std::vector<std::uint32_t> rows;
    for (std::size_t j = 0; j < b.columns.size(); ++j) {
        rows.clear();
        for (const auto& [k, y] : b.columns[j])
            for (const auto& [i, x] : a.columns[k]) {
                acc[i] = R.add(acc[i], R.mul(x, y));
                if (!touched[i]) {
                    touched[i] = 1;
                    rows.push_back(i);
                }
            }
        std::sort(rows.begin(), rows.end());
        for (auto i : rows) {
            if (!R.is_zero(acc[i])) out.columns[j].emplace_back(i, acc[i]);
            acc[i] = R.zero();
            touched[i] = 0;
        }
    }
    return out;
}

/// Dense row-major copy.
template <class V>
std::vector<std::vector<V>> to_dense(const SparseMatrix<V>& m, const V& zero) {
    std::vector<std::vector<V>> d(static_cast<std::size_t>(m.rows), std::vector<V>(static_cast<std::size_t>(m.cols), zero));
    for (std::size_t j = 0; j < m.columns.size(); ++j)
        for (const auto& [i, x] : m.columns[j]) d[i][j] = x;
    return d;
}

template <class V>
SparseMatrix<V> from_dense(const std::vector<std::vector<V>>& d, std::int64_t cols, const V& zero) {
    SparseMatrix<V> m(static_cast<std::int64_t>(d.size()), cols);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j)
            if (!(d[i][j] == zero)) m.columns[j].emplace_back(static_cast<std::uint32_t>(i), d[i][j]);
    return m;
}

/// Column subset, preserving order.
template <class V>
SparseMatrix<V> select_columns(const SparseMatrix<V>& m, const std::vector<std::int64_t>& keep) {
    SparseMatrix<V> out(m.rows, static_cast<std::int64_t>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) out.columns[k] = m.columns.at(static_cast<std::size_t>(keep[k]));
    return out;
}

}  // namespace permres
