#pragma once

// Ranks and normal forms of boundary matrices.

#include <cstdint>
#include <optional>
#include <vector>

#include "permres/rings.hpp"
#include "permres/sparse.hpp"

namespace permres {

using ModMatrix = SparseMatrix<std::uint32_t>;

/// Incremental column reduction over a field ring ("low" pivots).
/// reduce() returns the pivot row of the reduced column, or -1 when the column
/// lies in the span of the columns added before.
template <class Ring>
struct ColumnReducer {
    using V = typename Ring::value_type;
    using Column = std::vector<std::pair<std::uint32_t, V>>;

    const Ring& ring;
    std::vector<std::int64_t> pivot_of_row;
    std::vector<Column> reduced;  // indexed by pivot slot

    ColumnReducer(const Ring& r, std::int64_t rows) : ring(r), pivot_of_row(static_cast<std::size_t>(rows), -1) {}

    // Returns the low row of the reduced column or -1.
    std::int64_t reduce(Column work) {
        Column scratch;
        while (!work.empty()) {
            const std::uint32_t low = work.back().first;
            const std::int64_t slot = pivot_of_row[low];
            if (slot < 0) {
                V inv = ring.inv(work.back().second);
                for (auto& e : work) e.second = ring.mul(e.second, inv);
                pivot_of_row[low] = static_cast<std::int64_t>(reduced.size());
                reduced.push_back(std::move(work));
                return low;
            }
            const Column& piv = reduced[static_cast<std::size_t>(slot)];
            // work -= c * piv, with c the low coefficient (piv is normalized)
            const V c = work.back().second;
            scratch.clear();
            scratch.reserve(work.size() + piv.size());
            std::size_t a = 0, b = 0;
            while (a < work.size() || b < piv.size()) {
                if (b == piv.size() || (a < work.size() && work[a].first < piv[b].first)) {
                    scratch.push_back(std::move(work[a++]));
                } else if (a == work.size() || piv[b].first < work[a].first) {
                    scratch.emplace_back(piv[b].first, ring.neg(ring.mul(c, piv[b].second)));
                    ++b;
                } else {
                    V v = ring.sub(work[a].second, ring.mul(c, piv[b].second));
                    if (!ring.is_zero(v)) scratch.emplace_back(work[a].first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            std::swap(work, scratch);
        }
        return -1;
    }
};

/// Result of left-to-right column reduction over F_p.
/// low[j] is the pivot row of reduced column j, or -1 if it reduced to zero.
struct ColumnReduction {
    std::int64_t rank = 0;
    std::vector<std::int64_t> low;
};

/// Reduces the columns of m (entries in [0, p)) in order; only the
/// columns listed in `only` are reduced when given (the others count as zero).
ColumnReduction reduce_columns_mod_p(const ModMatrix& m, std::uint32_t p,
                                     const std::vector<std::int64_t>* only = nullptr);

std::int64_t rank_mod_p(const ModMatrix& m, std::uint32_t p);

/// Rank over the field of a specialization (Rational or Prime kind);
/// throws std::invalid_argument for the generic or integer kinds.
std::int64_t rank_specialized(const LaurentMatrix& m, const Specialization& spec);

/// Rank over Q with exact rational elimination.
std::int64_t rank_rational(const LaurentMatrix& m, const Rational& q0);

/// Rank over the fraction field of Z[q, q^-1] by fraction-free elimination.
std::int64_t rank_generic(const LaurentMatrix& m);

/// Naive elimination over fractions; a slow reference.
std::int64_t rank_fraction_reference(const LaurentMatrix& m);

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Nonzero elementary divisors d_1 | d_2 | ... (positive).
std::vector<BigInt> smith_normal_form(IntMatrix m);

/// Entries of m evaluated at q = q0 in {1, -1}.
IntMatrix integer_specialization(const LaurentMatrix& m, int q0);

}  // namespace permres
