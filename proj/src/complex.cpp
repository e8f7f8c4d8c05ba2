#include "permres/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "caches.hpp"

namespace permres {

namespace {

using MergeKey = std::tuple<Composition, Composition, Composition, int, int>;

std::map<MergeKey, std::vector<std::pair<int, LaurentScalar>>>& merge_cache() {
    static std::map<MergeKey, std::vector<std::pair<int, LaurentScalar>>> cache;
    return cache;
}

}  // namespace

namespace detail {
void clear_complex_cache() { merge_cache().clear(); }
}  // namespace detail

const std::vector<std::pair<int, LaurentScalar>>& merge_constants(const Composition& c0, const Composition& c1,
                                                                  const Composition& c2, int a, int b) {
    MergeKey key{c0, c1, c2, a, b};
    auto& cache = merge_cache();
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    const HomMatrix& alpha = ascending_phi(c1, c0, a);
    const HomMatrix& beta = ascending_phi(c2, c1, b);
    const auto& s2 = shape_data(c2);
    // Column of the identity of the composite: β applied to α(x_{c0}).
    std::vector<LaurentScalar> col(static_cast<std::size_t>(s2.size()));
    for (const auto& [k, x] : alpha.columns[0])
        for (const auto& [f, y] : beta.columns[static_cast<std::size_t>(k)]) col[static_cast<std::size_t>(f)] += y * x;

    const auto& pd = pair_data(c2, c0);
    std::vector<std::pair<int, LaurentScalar>> out;
    for (std::size_t rep = 0; rep < pd.reps.size(); ++rep) {
        const auto& x = col[static_cast<std::size_t>(pd.reps[rep])];
        if (x.is_zero()) continue;
        int w = pd.wedge_of_rep[rep];
        if (w < 0)
            throw std::runtime_error("composite of ascending homs has a coefficient outside D^wedge (" + c0.to_string() +
                                     " -> " + c1.to_string() + " -> " + c2.to_string() + ")");
        out.emplace_back(w, x);
    }
    for (int f = 0; f < s2.size(); ++f) {
        const auto& expected = col[static_cast<std::size_t>(pd.reps[static_cast<std::size_t>(pd.double_coset_of[static_cast<std::size_t>(f)])])];
        if (!(col[static_cast<std::size_t>(f)] == expected))
            throw std::runtime_error("composite is not constant on a double coset");
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return cache.emplace(key, std::move(out)).first->second;
}

std::vector<std::pair<int, LaurentScalar>> eps_constants(const Composition& c0, const Composition& c1, int a,
                                                         int tail) {
    const auto& rows = ascending_phi_rows(c1, c0, a);
    const auto& s0 = shape_data(c0);
    const auto& s1 = shape_data(c1);
    std::vector<std::pair<int, LaurentScalar>> out;
    for (const auto& [e, x] : rows.at(static_cast<std::size_t>(s1.tail_to_d.at(static_cast<std::size_t>(tail)))))
        out.emplace_back(s0.d_to_tail[static_cast<std::size_t>(e)], x);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

PrefixKey ComplexIndex::make_key(const std::vector<int>& chain, const std::vector<int>& a) {
    PrefixKey key;
    key.reserve(chain.size() + a.size());
    for (int c : chain) key.push_back(static_cast<char>(c));
    for (int x : a) key.push_back(static_cast<char>(x));
    return key;
}

ComplexIndex::ComplexIndex(const Composition& lambda, int max_degree)
    : lambda_(lambda), universe_(dominating_compositions(lambda)) {
    if (universe_.size() > 255) throw std::invalid_argument("composition universe too large");
    const int m = static_cast<int>(universe_.size());
    for (const auto& c : universe_) tails_.push_back(static_cast<int>(multinomial(c)));
    std::vector<std::vector<int>> up(static_cast<std::size_t>(m));
    std::vector<std::vector<int>> wedge(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (dominance_less(universe_[static_cast<std::size_t>(x)], universe_[static_cast<std::size_t>(y)])) {
                up[static_cast<std::size_t>(x)].push_back(y);
                int w = static_cast<int>(
                    pair_data(universe_[static_cast<std::size_t>(y)], universe_[static_cast<std::size_t>(x)]).wedge.size());
                if (w > 255) throw std::invalid_argument("too many ascending tableaux");
                wedge[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = w;
            }
    const int start = id_of(lambda);
    for (int n = 0; max_degree < 0 || n <= max_degree; ++n) {
        Degree deg;
        deg.base.push_back(0);
        std::vector<int> chain{start};
        std::vector<int> a;
        std::function<void()> tuples = [&]() {
            if (a.size() + 1 == chain.size()) {
                PrefixKey key = make_key(chain, a);
                deg.position.emplace(key, static_cast<std::int64_t>(deg.keys.size()));
                deg.keys.push_back(std::move(key));
                deg.base.push_back(deg.base.back() + tails_[static_cast<std::size_t>(chain.back())]);
                return;
            }
            std::size_t k = a.size();
            int count = wedge[static_cast<std::size_t>(chain[k])][static_cast<std::size_t>(chain[k + 1])];
            for (int x = 0; x < count; ++x) {
                a.push_back(x);
                tuples();
                a.pop_back();
            }
        };
        std::function<void()> chains_rec = [&]() {
            if (static_cast<int>(chain.size()) == n + 1) {
                tuples();
                return;
            }
            for (int y : up[static_cast<std::size_t>(chain.back())]) {
                chain.push_back(y);
                chains_rec();
                chain.pop_back();
            }
        };
        chains_rec();
        if (deg.keys.empty()) break;
        degrees_.push_back(std::move(deg));
    }
    top_ = a_of(lambda);
}

std::vector<std::int64_t> complex_dimensions(const Composition& lambda) {
    const auto universe = dominating_compositions(lambda);
    const std::size_t m = universe.size();
    // ways[c] = number of (chain, tableaux) prefixes of the current length ending at c
    std::vector<std::int64_t> ways(m, 0);
    for (std::size_t x = 0; x < m; ++x)
        if (universe[x] == lambda) ways[x] = 1;
    std::vector<std::int64_t> dims;
    for (;;) {
        std::int64_t total = 0;
        bool any = false;
        for (std::size_t x = 0; x < m; ++x)
            if (ways[x]) {
                any = true;
                total += ways[x] * multinomial(universe[x]);
            }
        if (!any) break;
        dims.push_back(total);
        std::vector<std::int64_t> next(m, 0);
        for (std::size_t x = 0; x < m; ++x) {
            if (!ways[x]) continue;
            for (std::size_t y = 0; y < m; ++y)
                if (dominance_less(universe[x], universe[y]))
                    next[y] += ways[x] * static_cast<std::int64_t>(pair_data(universe[y], universe[x]).wedge.size());
        }
        ways = std::move(next);
    }
    return dims;
}

int ComplexIndex::id_of(const Composition& c) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), c);
    if (it == universe_.end() || !(*it == c)) return -1;
    return static_cast<int>(it - universe_.begin());
}

std::int64_t ComplexIndex::dim(int n) const {
    if (n < 0 || n > top_degree()) return 0;
    if (n > built_degree()) throw std::out_of_range("degree not enumerated");
    return degrees_[static_cast<std::size_t>(n)].base.back();
}

std::int64_t ComplexIndex::prefix_count(int n) const {
    if (n < 0 || n > top_degree()) return 0;
    if (n > built_degree()) throw std::out_of_range("degree not enumerated");
    return static_cast<std::int64_t>(degrees_[static_cast<std::size_t>(n)].keys.size());
}

ComplexIndex::Prefix ComplexIndex::prefix(int n, std::int64_t p) const {
    const auto& key = degrees_.at(static_cast<std::size_t>(n)).keys.at(static_cast<std::size_t>(p));
    Prefix out;
    for (int k = 0; k <= n; ++k) out.chain.push_back(static_cast<unsigned char>(key[static_cast<std::size_t>(k)]));
    for (int k = 0; k < n; ++k) out.a.push_back(static_cast<unsigned char>(key[static_cast<std::size_t>(n + 1 + k)]));
    return out;
}

std::int64_t ComplexIndex::prefix_base(int n, std::int64_t p) const {
    return degrees_.at(static_cast<std::size_t>(n)).base.at(static_cast<std::size_t>(p));
}

int ComplexIndex::tail_count(int id) const { return tails_.at(static_cast<std::size_t>(id)); }

std::int64_t ComplexIndex::find(int n, const PrefixKey& key, int tail) const {
    if (n < 0 || n > built_degree()) return -1;
    const auto& deg = degrees_[static_cast<std::size_t>(n)];
    auto it = deg.position.find(key);
    if (it == deg.position.end()) return -1;
    return deg.base[static_cast<std::size_t>(it->second)] + tail;
}

std::pair<std::int64_t, int> ComplexIndex::locate(int n, std::int64_t index) const {
    const auto& base = degrees_.at(static_cast<std::size_t>(n)).base;
    if (index < 0 || index >= base.back()) throw std::out_of_range("symbol index out of range");
    auto it = std::upper_bound(base.begin(), base.end(), index);
    std::int64_t p = (it - base.begin()) - 1;
    return {p, static_cast<int>(index - base[static_cast<std::size_t>(p)])};
}

ChainBasisSymbol ComplexIndex::symbol(int n, std::int64_t index) const {
    auto [p, tail] = locate(n, index);
    auto pre = prefix(n, p);
    ChainBasisSymbol s{{}, {}, t_canonical(lambda_)};
    for (int id : pre.chain) s.chain.push_back(universe_[static_cast<std::size_t>(id)]);
    for (int k = 0; k < n; ++k)
        s.tableaux.push_back(pair_data(s.chain[static_cast<std::size_t>(k + 1)], s.chain[static_cast<std::size_t>(k)])
                                 .wedge[static_cast<std::size_t>(pre.a[static_cast<std::size_t>(k)])]
                                 .T);
    const auto& sd = shape_data(s.chain.back());
    s.tail = Tableau(s.chain.back(), sd.D[static_cast<std::size_t>(sd.tail_to_d[static_cast<std::size_t>(tail)])].one_line());
    return s;
}

std::int64_t ComplexIndex::index_of(const ChainBasisSymbol& s) const {
    const int n = static_cast<int>(s.chain.size()) - 1;
    if (n < 0 || static_cast<int>(s.tableaux.size()) != n) throw std::invalid_argument("malformed symbol");
    std::vector<int> chain;
    for (const auto& c : s.chain) {
        int id = id_of(c);
        if (id < 0) throw std::invalid_argument("symbol shape outside the complex");
        chain.push_back(id);
    }
    std::vector<int> a;
    for (int k = 0; k < n; ++k) {
        const auto& wedge = pair_data(s.chain[static_cast<std::size_t>(k + 1)], s.chain[static_cast<std::size_t>(k)]).wedge;
        auto it = std::find_if(wedge.begin(), wedge.end(),
                               [&](const AscendingEntry& e) { return e.T == s.tableaux[static_cast<std::size_t>(k)]; });
        if (it == wedge.end()) throw std::invalid_argument("symbol tableau is not ascending");
        a.push_back(static_cast<int>(it - wedge.begin()));
    }
    const auto& sd = shape_data(s.chain.back());
    int d = sd.index_of(tableau_to_d(s.tail));
    std::int64_t idx = find(n, make_key(chain, a), sd.d_to_tail[static_cast<std::size_t>(d)]);
    if (idx < 0) throw std::invalid_argument("symbol not in the basis");
    return idx;
}

std::vector<ChainBasisSymbol> enumerate_symbols(const Composition& lambda, int n) {
    ComplexIndex index(lambda, n);
    std::vector<ChainBasisSymbol> out;
    for (std::int64_t k = 0; k < index.dim(n); ++k) out.push_back(index.symbol(n, k));
    return out;
}

BoundaryMatrix boundary(const Composition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("boundary needs n >= 1");
    ComplexIndex index(lambda, n);
    if (n > index.top_degree()) return BoundaryMatrix(index.dim(n - 1), 0);
    BoundaryBuilder<LaurentRing> builder(index, LaurentRing{});
    return builder.matrix(n);
}

BoundaryMatrix boundary_zero(const Composition& lambda) {
    ComplexIndex index(lambda, 0);
    BoundaryBuilder<LaurentRing> builder(index, LaurentRing{});
    return builder.matrix_zero();
}

ChainComplexData build_complex(const Composition& lambda) {
    ComplexIndex index(lambda);
    BoundaryBuilder<LaurentRing> builder(index, LaurentRing{});
    ChainComplexData data;
    data.lambda = lambda;
    data.top = index.top_degree();
    data.dims.push_back(static_cast<std::int64_t>(enumerate_Tst(lambda).size()));
    for (int n = 0; n <= data.top; ++n) data.dims.push_back(index.dim(n));
    data.d.push_back(builder.matrix_zero());
    for (int n = 1; n <= data.top; ++n) data.d.push_back(builder.matrix(n));
    return data;
}

std::vector<std::pair<PackedSymbol, LaurentScalar>> packed_boundary(const PackedSymbol& s) {
    const int n = static_cast<int>(s.chain.size()) - 1;
    if (n < 1 || static_cast<int>(s.a.size()) != n) throw std::invalid_argument("packed_boundary: malformed symbol");
    std::map<PackedSymbol, LaurentScalar> acc;
    for (int i = 1; i <= n; ++i) {
        const LaurentScalar sign = i % 2 ? 1 : -1;
        PackedSymbol t = s;
        if (i < n) {
            const auto& c = merge_constants(s.chain[static_cast<std::size_t>(i - 1)], s.chain[static_cast<std::size_t>(i)],
                                            s.chain[static_cast<std::size_t>(i + 1)], s.a[static_cast<std::size_t>(i - 1)],
                                            s.a[static_cast<std::size_t>(i)]);
            t.chain.erase(t.chain.begin() + i);
            t.a.erase(t.a.begin() + i);
            for (const auto& [f, x] : c) {
                t.a[static_cast<std::size_t>(i - 1)] = f;
                acc[t] += sign * x;
            }
        } else {
            const auto c = eps_constants(s.chain[static_cast<std::size_t>(n - 1)], s.chain[static_cast<std::size_t>(n)],
                                         s.a[static_cast<std::size_t>(n - 1)], s.tail);
            t.chain.pop_back();
            t.a.pop_back();
            for (const auto& [e, x] : c) {
                t.tail = e;
                acc[t] += sign * x;
            }
        }
    }
    std::vector<std::pair<PackedSymbol, LaurentScalar>> out;
    for (auto& [k, v] : acc)
        if (!v.is_zero()) out.emplace_back(k, std::move(v));
    return out;
}

bool random_symbol(const Composition& lambda, int n, std::uint64_t seed, PackedSymbol& out) {
    std::mt19937_64 gen(seed);
    out = PackedSymbol{{lambda}, {}, 0};
    for (int k = 0; k < n; ++k) {
        const auto& cur = out.chain.back();
        std::vector<Composition> up;
        for (const auto& c : dominating_compositions(cur))
            if (dominance_less(cur, c)) up.push_back(c);
        if (up.empty()) return false;
        const auto& next = up[std::uniform_int_distribution<std::size_t>(0, up.size() - 1)(gen)];
        const auto w = pair_data(next, cur).wedge.size();
        out.a.push_back(static_cast<int>(std::uniform_int_distribution<std::size_t>(0, w - 1)(gen)));
        out.chain.push_back(next);
    }
    out.tail = std::uniform_int_distribution<int>(0, shape_data(out.chain.back()).size() - 1)(gen);
    return true;
}

LocalIdentityReport check_local_identities(const std::vector<Composition>& universe) {
    LocalIdentityReport rep;
    const std::size_t m = universe.size();
    std::vector<std::vector<std::size_t>> up(m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            if (dominance_less(universe[x], universe[y])) up[x].push_back(y);
    auto wedge = [&](std::size_t hi, std::size_t lo) {
        return static_cast<int>(pair_data(universe[hi], universe[lo]).wedge.size());
    };
    auto fail = [&](const std::string& why) {
        if (rep.ok) rep.failure = why;
        rep.ok = false;
    };
    for (std::size_t x = 0; x < m && rep.ok; ++x)
        for (std::size_t y : up[x])
            for (std::size_t z : up[y]) {
                const auto &X = universe[x], &Y = universe[y], &Z = universe[z];
                const int wa = wedge(y, x), wb = wedge(z, y);
                for (int a = 0; a < wa; ++a)
                    for (int b = 0; b < wb; ++b) {
                        const auto& ab = merge_constants(X, Y, Z, a, b);
                        // ε_t ∘ (φ_b ∘ φ_a) = (ε_t ∘ φ_b) ∘ φ_a
                        for (int t = 0; t < shape_data(Z).size(); ++t) {
                            std::map<int, LaurentScalar> lhs, rhs;
                            for (const auto& [f, c] : ab)
                                for (const auto& [e, v] : eps_constants(X, Z, f, t)) lhs[e] += c * v;
                            for (const auto& [s, c] : eps_constants(Y, Z, b, t))
                                for (const auto& [e, v] : eps_constants(X, Y, a, s)) rhs[e] += c * v;
                            std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
                            std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
                            ++rep.eps_checks;
                            if (lhs != rhs)
                                fail("eps compatibility fails for " + X.to_string() + " < " + Y.to_string() + " < " +
                                     Z.to_string());
                        }
                        // (φ_c ∘ φ_b) ∘ φ_a = φ_c ∘ (φ_b ∘ φ_a)
                        for (std::size_t w : up[z]) {
                            const auto& W = universe[w];
                            const int wc = wedge(w, z);
                            for (int c = 0; c < wc; ++c) {
                                std::map<int, LaurentScalar> lhs, rhs;
                                for (const auto& [f, u] : ab)
                                    for (const auto& [g, v] : merge_constants(X, Z, W, f, c)) lhs[g] += u * v;
                                for (const auto& [f, u] : merge_constants(Y, Z, W, b, c))
                                    for (const auto& [g, v] : merge_constants(X, Y, W, a, f)) rhs[g] += u * v;
                                std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
                                std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
                                ++rep.merge_checks;
                                if (lhs != rhs)
                                    fail("merge associativity fails for " + X.to_string() + " < " + Y.to_string() +
                                         " < " + Z.to_string() + " < " + W.to_string());
                            }
                        }
                    }
            }
    return rep;
}

bool packed_composite_zero(const PackedSymbol& s) {
    const auto first = packed_boundary(s);
    if (s.chain.size() == 2) {
        const auto d0 = boundary_zero(s.chain.front());
        std::vector<LaurentScalar> acc(static_cast<std::size_t>(d0.rows));
        for (const auto& [t, x] : first)
            for (const auto& [row, y] : d0.columns[static_cast<std::size_t>(t.tail)]) acc[row] += x * y;
        return std::all_of(acc.begin(), acc.end(), [](const LaurentScalar& v) { return v.is_zero(); });
    }
    std::map<PackedSymbol, LaurentScalar> acc;
    for (const auto& [t, x] : first)
        for (const auto& [u, y] : packed_boundary(t)) acc[u] += x * y;
    return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

CompositeZeroReport check_composite_zero(const Composition& lambda) {
    CompositeZeroReport rep;
    ComplexIndex index(lambda);
    BoundaryBuilder<LaurentRing> builder(index, LaurentRing{});
    for (int n = 0; n <= index.top_degree(); ++n) rep.symbols += index.dim(n);
    LaurentMatrix lower = builder.matrix_zero();
    for (int n = 1; n <= index.top_degree(); ++n) {
        LaurentMatrix upper = builder.matrix(n);
        if (!multiply(lower, upper, builder.ring()).is_zero()) {
            rep.ok = false;
            rep.failed_degree = n - 1;
            return rep;
        }
        lower = std::move(upper);
    }
    return rep;
}

}  // namespace permres
