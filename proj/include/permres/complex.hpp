#pragma once

// The complex C̃^λ: basis symbols (chain, ascending tableaux, row-standard tail)
// and the boundary maps d_n and d_0.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permres/hom.hpp"
#include "permres/sparse.hpp"

namespace permres {

struct ChainBasisSymbol {
    ChainOfShapes chain;
    std::vector<GeneralizedTableau> tableaux;  // T_i ∈ T^∧(λ^(i), λ^(i-1))
    Tableau tail;                               // t ∈ T^rs(λ^(n))
};

/// Sparse coefficient list over ascending indices of T^∧(c2, c0):
/// the expansion of φ_b ∘ φ_a for φ_a: M^{c0} -> M^{c1}, φ_b: M^{c1} -> M^{c2}.
/// Throws std::runtime_error if the expansion is inconsistent or leaves D^∧.
const std::vector<std::pair<int, LaurentScalar>>& merge_constants(const Composition& c0, const Composition& c1,
                                                                  const Composition& c2, int a, int b);

/// ε_t ∘ φ_a for φ_a: M^{c0} -> M^{c1} and t the tail-th tableau of T^rs(c1);
/// entries indexed by tail position in T^rs(c0).
std::vector<std::pair<int, LaurentScalar>> eps_constants(const Composition& c0, const Composition& c1, int a,
                                                         int tail);

/// Packed (chain ids, tableau indices) of a basis symbol without its tail.
using PrefixKey = std::string;

/// Index structure of all B_n^λ.
class ComplexIndex {
public:
    /// Enumerates degrees 0..max_degree (all degrees when max_degree < 0).
    explicit ComplexIndex(const Composition& lambda, int max_degree = -1);

    const Composition& lambda() const { return lambda_; }
    /// Compositions dominating λ, lexicographic; chain entries are ids into this list.
    const std::vector<Composition>& universe() const { return universe_; }
    /// a(λ), the top nonzero degree of the complex.
    int top_degree() const { return top_; }
    /// Highest enumerated degree.
    int built_degree() const { return static_cast<int>(degrees_.size()) - 1; }
    std::int64_t dim(int n) const;
    std::int64_t prefix_count(int n) const;

    struct Prefix {
        std::vector<int> chain;  // n + 1 ids
        std::vector<int> a;      // n tableau indices
    };
    Prefix prefix(int n, std::int64_t p) const;
    std::int64_t prefix_base(int n, std::int64_t p) const;
    int tail_count(int id) const;
    /// Basis index of (prefix key, tail) in degree n, or -1.
    std::int64_t find(int n, const PrefixKey& key, int tail) const;
    /// (prefix position, tail) for a basis index.
    std::pair<std::int64_t, int> locate(int n, std::int64_t index) const;
    ChainBasisSymbol symbol(int n, std::int64_t index) const;
    /// Index of a fully specified symbol; throws std::invalid_argument if absent.
    std::int64_t index_of(const ChainBasisSymbol& s) const;
    int id_of(const Composition& c) const;

    static PrefixKey make_key(const std::vector<int>& chain, const std::vector<int>& a);

private:
    struct Degree {
        std::vector<PrefixKey> keys;
        std::vector<std::int64_t> base;  // size keys + 1
        std::unordered_map<PrefixKey, std::int64_t> position;
    };
    Composition lambda_;
    std::vector<Composition> universe_;
    std::vector<int> tails_;
    std::vector<Degree> degrees_;
    int top_ = 0;
};

/// dim C_n for n = 0..a(λ), counted without enumerating symbols.
std::vector<std::int64_t> complex_dimensions(const Composition& lambda);

std::vector<ChainBasisSymbol> enumerate_symbols(const Composition& lambda, int n);

/// Boundary columns over a coefficient ring, with converted constant caches.
template <class Ring>
class BoundaryBuilder {
public:
    using V = typename Ring::value_type;
    using Column = typename SparseMatrix<V>::Column;

    BoundaryBuilder(const ComplexIndex& index, Ring ring) : index_(index), ring_(std::move(ring)) {}

    const ComplexIndex& index() const { return index_; }
    const Ring& ring() const { return ring_; }

    /// Face d_{n,i} (1 <= i <= n) of a degree-n basis symbol, without sign.
    Column face(int n, int i, std::int64_t symbol) {
        if (n < 1 || i < 1 || i > n) throw std::invalid_argument("face index out of range");
        auto [p, tail] = index_.locate(n, symbol);
        auto pre = index_.prefix(n, p);
        std::vector<std::pair<std::int64_t, V>> acc;
        add_face(n, i, pre, tail, ring_.one(), acc);
        return finish(acc);
    }

    /// d_n applied to a degree-n basis symbol (n >= 1).
    Column column(int n, std::int64_t symbol) {
        auto [p, tail] = index_.locate(n, symbol);
        auto pre = index_.prefix(n, p);
        std::vector<std::pair<std::int64_t, V>> acc;
        for (int i = 1; i <= n; ++i) add_face(n, i, pre, tail, i % 2 ? ring_.one() : ring_.neg(ring_.one()), acc);
        return finish(acc);
    }

    SparseMatrix<V> matrix(int n) {
        if (n < 1) throw std::invalid_argument("use matrix_zero for degree 0");
        SparseMatrix<V> m(index_.dim(n - 1), index_.dim(n));
        for (std::int64_t j = 0; j < m.cols; ++j) m.columns[static_cast<std::size_t>(j)] = column(n, j);
        return m;
    }

    /// d_0: rows T^st(λ), columns T^rs(λ), entries α_{d_t, e}.
    SparseMatrix<V> matrix_zero() {
        const auto& lambda = index_.lambda();
        const auto& sd = shape_data(lambda);
        const auto basis = specht_basis(lambda);
        SparseMatrix<V> m(static_cast<std::int64_t>(basis.vectors.size()), sd.size());
        for (std::size_t t = 0; t < basis.vectors.size(); ++t)
            for (int e = 0; e < sd.size(); ++e) {
                const auto& x = basis.vectors[t][static_cast<std::size_t>(sd.tail_to_d[static_cast<std::size_t>(e)])];
                if (x.is_zero()) continue;
                V v = ring_.from_laurent(x);
                if (!ring_.is_zero(v)) m.columns[static_cast<std::size_t>(e)].emplace_back(static_cast<std::uint32_t>(t), v);
            }
        return m;
    }

private:
    using Constants = std::vector<std::pair<int, V>>;

    const Constants& merged(int c0, int c1, int c2, int a, int b) {
        std::uint64_t key = (static_cast<std::uint64_t>(c0) << 48) | (static_cast<std::uint64_t>(c1) << 36) |
                            (static_cast<std::uint64_t>(c2) << 24) | (static_cast<std::uint64_t>(a) << 12) |
                            static_cast<std::uint64_t>(b);
        auto it = merge_cache_.find(key);
        if (it != merge_cache_.end()) return it->second;
        const auto& u = index_.universe();
        Constants out;
        for (const auto& [f, x] : merge_constants(u[static_cast<std::size_t>(c0)], u[static_cast<std::size_t>(c1)],
                                                  u[static_cast<std::size_t>(c2)], a, b)) {
            V v = ring_.from_laurent(x);
            if (!ring_.is_zero(v)) out.emplace_back(f, v);
        }
        return merge_cache_.emplace(key, std::move(out)).first->second;
    }

    const Constants& eps(int c0, int c1, int a, int tail) {
        std::uint64_t key = (static_cast<std::uint64_t>(c0) << 48) | (static_cast<std::uint64_t>(c1) << 36) |
                            (static_cast<std::uint64_t>(a) << 24) | static_cast<std::uint64_t>(tail);
        auto it = eps_cache_.find(key);
        if (it != eps_cache_.end()) return it->second;
        const auto& u = index_.universe();
        Constants out;
        for (const auto& [e, x] : eps_constants(u[static_cast<std::size_t>(c0)], u[static_cast<std::size_t>(c1)], a, tail)) {
            V v = ring_.from_laurent(x);
            if (!ring_.is_zero(v)) out.emplace_back(e, v);
        }
        return eps_cache_.emplace(key, std::move(out)).first->second;
    }

    void add_face(int n, int i, const ComplexIndex::Prefix& pre, int tail, const V& sign,
                  std::vector<std::pair<std::int64_t, V>>& acc) {
        std::vector<int> chain = pre.chain;
        std::vector<int> a = pre.a;
        if (i < n) {
            const Constants& c = merged(chain[static_cast<std::size_t>(i - 1)], chain[static_cast<std::size_t>(i)],
                                        chain[static_cast<std::size_t>(i + 1)], a[static_cast<std::size_t>(i - 1)],
                                        a[static_cast<std::size_t>(i)]);
            chain.erase(chain.begin() + i);
            a.erase(a.begin() + i);
            for (const auto& [f, x] : c) {
                a[static_cast<std::size_t>(i - 1)] = f;
                std::int64_t target = index_.find(n - 1, ComplexIndex::make_key(chain, a), tail);
                if (target < 0) throw std::logic_error("face leaves the basis");
                acc.emplace_back(target, ring_.mul(sign, x));
            }
        } else {
            const Constants& c = eps(chain[static_cast<std::size_t>(n - 1)], chain[static_cast<std::size_t>(n)],
                                     a[static_cast<std::size_t>(n - 1)], tail);
            chain.pop_back();
            a.pop_back();
            const PrefixKey key = ComplexIndex::make_key(chain, a);
            std::int64_t base = index_.find(n - 1, key, 0);
            if (base < 0) throw std::logic_error("face leaves the basis");
            for (const auto& [e, x] : c) acc.emplace_back(base + e, ring_.mul(sign, x));
        }
    }

    Column finish(std::vector<std::pair<std::int64_t, V>>& acc) {
        std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        Column out;
        for (auto& [row, v] : acc) {
            if (!out.empty() && out.back().first == static_cast<std::uint32_t>(row)) {
                out.back().second = ring_.add(out.back().second, v);
                if (ring_.is_zero(out.back().second)) out.pop_back();
            } else if (!ring_.is_zero(v)) {
                out.emplace_back(static_cast<std::uint32_t>(row), std::move(v));
            }
        }
        return out;
    }

    const ComplexIndex& index_;
    Ring ring_;
    std::unordered_map<std::uint64_t, Constants> merge_cache_;
    std::unordered_map<std::uint64_t, Constants> eps_cache_;
};

using BoundaryMatrix = LaurentMatrix;

/// d_n over Z[q, q^-1] for n >= 1 (empty when n exceeds a(λ)).
BoundaryMatrix boundary(const Composition& lambda, int n);
/// d_0 over Z[q, q^-1]; a 0 x |T^rs(λ)| matrix for non-partitions.
BoundaryMatrix boundary_zero(const Composition& lambda);

struct ChainComplexData {
    Composition lambda;
    int top = 0;                      // a(λ)
    std::vector<std::int64_t> dims;   // dims[n + 1] = dim C_n, n = -1..top
    std::vector<BoundaryMatrix> d;    // d[n] : C_n -> C_{n-1}, n = 0..top
    std::int64_t dim(int n) const { return n < -1 || n > top ? 0 : dims[static_cast<std::size_t>(n + 1)]; }
};

ChainComplexData build_complex(const Composition& lambda);

/// A basis symbol by indices: chain shapes, positions in T^∧ and in T^rs(λ^(n)).
/// Works without enumerating the whole degree.
struct PackedSymbol {
    std::vector<Composition> chain;
    std::vector<int> a;
    int tail = 0;
    auto operator<=>(const PackedSymbol&) const = default;
};

/// d_n of one symbol (n = chain length - 1 >= 1), sorted by symbol.
std::vector<std::pair<PackedSymbol, LaurentScalar>> packed_boundary(const PackedSymbol& s);

/// A random degree-n symbol of λ (chain extended step by step; not uniform).
/// Returns false if the chain walk reaches a maximal shape early.
bool random_symbol(const Composition& lambda, int n, std::uint64_t seed, PackedSymbol& out);

/// d(d(s)) = 0 for one packed symbol, with d_0 applied when s has degree 1.
bool packed_composite_zero(const PackedSymbol& s);

/// Direct check of d_n ∘ d_{n+1} = 0 (n >= 0) over Z[q, q^-1].
struct CompositeZeroReport {
    bool ok = true;
    int failed_degree = -1;  // the n of the first failing product
    std::int64_t symbols = 0;
};
CompositeZeroReport check_composite_zero(const Composition& lambda);

/// Associativity of the merge constants over every chain x ◁ y ◁ z ◁ w in
/// `universe`, and compatibility of the ε-constants with merging over x ◁ y ◁ z.
/// Together these give the simplicial identities behind d∘d = 0 for every
/// composition whose dominating shapes lie in `universe`.
struct LocalIdentityReport {
    bool ok = true;
    std::int64_t merge_checks = 0;
    std::int64_t eps_checks = 0;
    std::string failure;
};
LocalIdentityReport check_local_identities(const std::vector<Composition>& universe);

}  // namespace permres
