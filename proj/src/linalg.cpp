#include "permres/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace permres {

namespace {

template <class Ring>
std::int64_t field_rank(const SparseMatrix<typename Ring::value_type>& m, const Ring& ring) {
    ColumnReducer<Ring> red(ring, m.rows);
    std::int64_t rank = 0;
    for (const auto& col : m.columns)
        if (red.reduce(col) >= 0) ++rank;
    return rank;
}

}  // namespace

ColumnReduction reduce_columns_mod_p(const ModMatrix& m, std::uint32_t p, const std::vector<std::int64_t>* only) {
    for (const auto& col : m.columns)
        for (const auto& [i, x] : col)
            if (x == 0 || x >= p) throw std::invalid_argument("reduce_columns_mod_p: entry outside [1, p)");
    PrimeField F(p, 1);
    ColumnReducer<PrimeField> red(F, m.rows);
    ColumnReduction out;
    out.low.assign(static_cast<std::size_t>(m.cols), -1);
    auto run = [&](std::int64_t j) {
        std::int64_t low = red.reduce(m.columns[static_cast<std::size_t>(j)]);
        out.low[static_cast<std::size_t>(j)] = low;
        if (low >= 0) ++out.rank;
    };
    if (only) {
        for (std::int64_t j : *only) run(j);
    } else {
        for (std::int64_t j = 0; j < m.cols; ++j) run(j);
    }
    return out;
}

std::int64_t rank_mod_p(const ModMatrix& m, std::uint32_t p) { return reduce_columns_mod_p(m, p).rank; }

std::int64_t rank_rational(const LaurentMatrix& m, const Rational& q0) {
    RationalRing R(q0);
    return field_rank(convert(m, R), R);
}

std::int64_t rank_specialized(const LaurentMatrix& m, const Specialization& spec) {
    switch (spec.kind) {
        case Specialization::Kind::Rational:
            return rank_rational(m, spec.q0);
        case Specialization::Kind::Prime: {
            PrimeField F(spec.p, spec.q0_mod);
            return field_rank(convert(m, F), F);
        }
        default:
            throw std::invalid_argument("rank_specialized needs a field specialization, got " + spec.name());
    }
}

std::int64_t rank_generic(const LaurentMatrix& m) {
    auto a = to_dense(m, LaurentScalar{});
    const std::size_t rows = a.size();
    const std::size_t cols = static_cast<std::size_t>(m.cols);
    LaurentScalar prev = 1;
    std::size_t k = 0;
    for (; k < rows && k < cols; ++k) {
        // pivot: fewest terms, then first by (row, col)
        std::size_t pr = rows, pc = cols, best = 0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const auto& x = a[i][j];
                if (x.is_zero()) continue;
                if (pr == rows || x.term_count() < best) {
                    pr = i;
                    pc = j;
                    best = x.term_count();
                }
            }
        if (pr == rows) break;
        std::swap(a[k], a[pr]);
        if (pc != k)
            for (auto& row : a) std::swap(row[k], row[pc]);
        const LaurentScalar piv = a[k][k];
        for (std::size_t i = k + 1; i < rows; ++i) {
            const LaurentScalar f = a[i][k];
            for (std::size_t j = k + 1; j < cols; ++j) {
                LaurentScalar v = piv * a[i][j];
                if (!f.is_zero() && !a[k][j].is_zero()) v -= f * a[k][j];
                a[i][j] = v.is_zero() ? v : laurent_divide_exact(v, prev);
            }
            a[i][k] = LaurentScalar{};
        }
        prev = piv;
    }
    return static_cast<std::int64_t>(k);
}

std::int64_t rank_fraction_reference(const LaurentMatrix& m) {
    const std::size_t rows = static_cast<std::size_t>(m.rows);
    const std::size_t cols = static_cast<std::size_t>(m.cols);
    std::vector<std::vector<FractionScalar>> a(rows, std::vector<FractionScalar>(cols));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, x] : m.columns[j]) a[i][j] = FractionScalar(x);
    std::int64_t rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            FractionScalar f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

IntMatrix integer_specialization(const LaurentMatrix& m, int q0) {
    if (q0 != 1 && q0 != -1) throw std::invalid_argument("integer specialization needs q0 = 1 or -1");
    IntMatrix out(static_cast<std::size_t>(m.rows), std::vector<BigInt>(static_cast<std::size_t>(m.cols)));
    for (std::size_t j = 0; j < m.columns.size(); ++j)
        for (const auto& [i, x] : m.columns[j]) {
            Rational v = evaluate_rational(x, Rational(q0));
            out[i][j] = numerator(v);
        }
    return out;
}

namespace {

// Dense Smith form of a small matrix; appends nonzero |diagonal| entries.
void dense_snf(std::vector<std::vector<BigInt>> a, std::vector<BigInt>& out) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t t = 0; t < rows && t < cols; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) {
                std::sort(out.begin(), out.end());
                return;
            }
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                BigInt f = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                BigInt f = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the rest by the pivot
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
        }
        out.push_back(abs(a[t][t]));
    }
    std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    // Sparse elimination on unit pivots first.
    std::vector<std::map<std::size_t, BigInt>> row(rows);
    std::vector<std::set<std::size_t>> col(cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (m[i][j] != 0) {
                row[i].emplace(j, m[i][j]);
                col[j].insert(i);
            }
    m.clear();
    std::vector<char> row_alive(rows, 1), col_alive(cols, 1);
    std::vector<BigInt> divisors;
    for (;;) {
        std::size_t pr = rows, pc = cols, cost = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (!row_alive[i]) continue;
            for (const auto& [j, x] : row[i]) {
                if (x != 1 && x != -1) continue;
                std::size_t c = (row[i].size() - 1) * (col[j].size() - 1);
                if (pr == rows || c < cost) {
                    pr = i;
                    pc = j;
                    cost = c;
                }
            }
        }
        if (pr == rows) break;
        const BigInt piv = row[pr].at(pc);  // its own inverse
        const auto prow = row[pr];
        std::vector<std::size_t> targets(col[pc].begin(), col[pc].end());
        for (std::size_t i : targets) {
            if (i == pr) continue;
            BigInt f = row[i].at(pc) * piv;
            for (const auto& [j, x] : prow) {
                auto it = row[i].find(j);
                BigInt v = (it == row[i].end() ? BigInt(0) : it->second) - f * x;
                if (v == 0) {
                    if (it != row[i].end()) row[i].erase(it);
                    col[j].erase(i);
                } else if (it == row[i].end()) {
                    row[i].emplace(j, v);
                    col[j].insert(i);
                } else {
                    it->second = v;
                }
            }
        }
        for (const auto& [j, x] : prow) col[j].erase(pr);
        // the pivot row is now the only entry of column pc
        row[pr].clear();
        row_alive[pr] = 0;
        col_alive[pc] = 0;
        divisors.push_back(1);
    }
    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t i = 0; i < rows; ++i)
        if (row_alive[i] && !row[i].empty()) live_rows.push_back(i);
    for (std::size_t j = 0; j < cols; ++j)
        if (col_alive[j] && !col[j].empty()) live_cols.push_back(j);
    std::vector<std::vector<BigInt>> rest(live_rows.size(), std::vector<BigInt>(live_cols.size()));
    for (std::size_t a = 0; a < live_rows.size(); ++a)
        for (std::size_t b = 0; b < live_cols.size(); ++b) {
            auto it = row[live_rows[a]].find(live_cols[b]);
            if (it != row[live_rows[a]].end()) rest[a][b] = it->second;
        }
    dense_snf(std::move(rest), divisors);
    return divisors;
}

}  // namespace permres
