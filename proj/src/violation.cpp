#include "permres/violation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "permres/linalg.hpp"
#include "permres/parabolic.hpp"

namespace permres {

namespace {

bool contains(const std::vector<int>& sorted, int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Subsets of `from` of the given size, each sorted.
std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& from, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (std::size_t j = start; j < from.size(); ++j) {
            cur.push_back(from[j]);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    if (size >= 0 && size <= static_cast<int>(from.size())) rec(rec, 0);
    return out;
}

// The row-standard tableau equal to v.t except rows k, k+1 hold Z∖Y and Y.
Tableau replace_rows(const ViolationData& v, const Composition& shape, const std::vector<int>& Y) {
    auto rows = v.t.rows();
    rows.resize(std::max<std::size_t>(rows.size(), static_cast<std::size_t>(v.k + 1)));
    rows[static_cast<std::size_t>(v.k - 1)] = set_minus(v.Z, Y);
    rows[static_cast<std::size_t>(v.k)] = Y;
    std::vector<int> flat;
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    return Tableau(shape, flat);
}

}  // namespace

ViolationData find_violation(const Tableau& t) {
    if (!is_row_standard(t)) throw std::invalid_argument("find_violation: tableau is not row-standard");
    if (is_standard(t)) throw std::invalid_argument("find_violation: tableau is standard");
    const auto rows = t.rows();
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
        const auto& a = rows[k];
        const auto& b = rows[k + 1];
        std::size_t j = 0;
        while (j < a.size() && j < b.size() && a[j] < b[j]) ++j;
        const bool column_break = j < a.size() && j < b.size();
        if (!column_break && a.size() >= b.size()) continue;
        ViolationData v{t, static_cast<int>(k) + 1, a, b, static_cast<int>(j), {}};
        v.Z = a;
        v.Z.insert(v.Z.end(), b.begin(), b.end());
        std::sort(v.Z.begin(), v.Z.end());
        return v;
    }
    throw std::logic_error("find_violation: no violating pair of rows");
}

SubsetShapeData subset_data(const ViolationData& v, const std::vector<int>& X_in) {
    std::vector<int> X = X_in;
    std::sort(X.begin(), X.end());
    if (std::adjacent_find(X.begin(), X.end()) != X.end()) throw std::invalid_argument("subset_data: repeated entry");
    if (static_cast<int>(X.size()) > v.n()) throw std::invalid_argument("subset_data: |X| > n");
    for (int x : X)
        if (!contains(v.Z, x)) throw std::invalid_argument("subset_data: X is not a subset of Z");

    const auto& lam = v.t.shape();
    const int k = v.k;
    const int m = v.m(), n = v.n(), x = static_cast<int>(X.size());
    std::vector<int> mu, nu;
    for (int j = 0; j < std::max(lam.length(), k + 1); ++j) mu.push_back(lam[j]);
    mu[static_cast<std::size_t>(k - 1)] = m + n - x;
    mu[static_cast<std::size_t>(k)] = x;
    for (int j = 0; j < k; ++j) nu.push_back(lam[j]);
    nu.push_back(n - x);
    nu.push_back(x);
    for (int j = k + 1; j < lam.length(); ++j) nu.push_back(lam[j]);

    SubsetShapeData s{X, Composition(mu), Composition(nu), t_canonical(Composition(mu)), Permutation(lam.size()), {}, {}, {}, {}};
    s.tX = replace_rows(v, s.mu, X);
    s.dX = tableau_to_d(s.tX);
    int before = 0;
    for (int j = 0; j < k - 1; ++j) before += lam[j];
    for (int p = 1; p <= lam.size(); ++p) {
        if (p > before && p <= before + m)
            s.A.push_back(p);
        else if (p > before + m && p <= before + m + n - x)
            s.B.push_back(p);
        else if (p > before + m + n - x && p <= before + m + n)
            s.C.push_back(p);
        else
            s.D.push_back(p);
    }
    return s;
}

std::vector<Permutation> w_Xd_set(const ViolationData& v, const SubsetShapeData& s, const Permutation& d) {
    const auto& lam = v.t.shape();
    const Permutation dX_inv = s.dX.inverse();
    std::vector<Permutation> out;
    for (const auto& e : shape_data(lam).W) {
        if (!in_D_lambda(e, s.nu)) continue;
        Permutation w = e * d * dX_inv;
        if (in_W_lambda(w, s.mu)) out.push_back(w);
    }
    return out;
}

int w_XY_length_formula(const ViolationData& v, const std::vector<int>& X, const std::vector<int>& Y) {
    std::vector<int> xs = X, ys = Y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const auto rest = set_minus(v.Z, ys);
    int total = 0;
    for (int y : set_minus(ys, xs))
        for (int z : rest)
            if (y < z) ++total;
    return total;
}

std::vector<int> x_tilde(const ViolationData& v, const std::vector<int>& X) {
    std::vector<int> out = X;
    for (int j = v.i + 1; j < v.n(); ++j) out.push_back(v.b[static_cast<std::size_t>(j)]);
    std::sort(out.begin(), out.end());
    return out;
}

int f_of(const ViolationData& v, const std::vector<int>& X) {
    int total = 0;
    for (int j = 1; j <= v.i; ++j)
        if (std::find(X.begin(), X.end(), v.a[static_cast<std::size_t>(j - 1)]) != X.end()) total += v.m() + 1 - j;
    return total;
}

SubsetCheck check_subset(const ViolationData& v, const std::vector<int>& X) {
    SubsetCheck res;
    auto fail = [&](const std::string& why) {
        if (res.ok) res.failure = why;
        res.ok = false;
    };
    const auto& lam = v.t.shape();
    const auto s = subset_data(v, X);
    const auto& sd = shape_data(lam);
    const auto& smu = shape_data(s.mu);

    // direct: ε_X ∘ φ_1^{μ_X, λ}
    const HomMatrix phi1 = phi(s.mu, lam, Permutation(lam.size()));
    const Functional direct = eps_compose(Functional::eps(s.mu, smu.index_of(s.dX)), phi1);

    Functional by_d{lam, std::vector<LaurentScalar>(static_cast<std::size_t>(sd.size()))};
    std::vector<int> nonempty;
    std::map<int, int> length_of;
    for (int d = 0; d < sd.size(); ++d) {
        const auto w = w_Xd_set(v, s, sd.D[static_cast<std::size_t>(d)]);
        if (w.size() > 1) fail("W_{X,d} has more than one element for d = " + sd.D[static_cast<std::size_t>(d)].to_string());
        if (w.empty()) continue;
        nonempty.push_back(d);
        length_of[d] = w[0].length();
        by_d.values[static_cast<std::size_t>(d)] = q_power(w[0].length());
    }
    if (!(by_d == direct)) fail("sum over W_{X,d} differs from eps_compose");

    Functional by_y{lam, std::vector<LaurentScalar>(static_cast<std::size_t>(sd.size()))};
    std::vector<int> images;
    for (const auto& extra : subsets_of_size(set_minus(v.Z, s.X), v.n() - static_cast<int>(s.X.size()))) {
        std::vector<int> Y = s.X;
        Y.insert(Y.end(), extra.begin(), extra.end());
        std::sort(Y.begin(), Y.end());
        const Tableau tY = replace_rows(v, lam, Y);
        const int d = sd.index_of(tableau_to_d(tY));
        if (d < 0) {
            fail("d_Y not in D_lambda");
            continue;
        }
        images.push_back(d);
        const int l = w_XY_length_formula(v, s.X, Y);
        if (auto it = length_of.find(d); it == length_of.end() || it->second != l)
            fail("length formula disagrees for Y with tableau " + tY.to_string());
        by_y.values[static_cast<std::size_t>(d)] += q_power(l);
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) fail("Y -> d_Y is not injective");
    if (images != nonempty) fail("image of Y -> d_Y differs from {d : W_{X,d} nonempty}");
    if (!(by_y == direct)) fail("sum over Y differs from eps_compose");
    return res;
}

std::vector<C1Term> c1_terms(const ViolationData& v) {
    const auto& lam = v.t.shape();
    const Permutation id(lam.size());
    std::vector<C1Term> out;
    const int i = v.i;
    for (unsigned mask = 0; mask < (1u << i); ++mask) {
        std::vector<int> X;
        for (int j = 0; j < i; ++j)
            if (mask & (1u << j)) X.push_back(v.a[static_cast<std::size_t>(j)]);
        std::sort(X.begin(), X.end());
        const auto Xt = x_tilde(v, X);
        const auto s = subset_data(v, Xt);
        if (!dominance_less(lam, s.mu)) throw std::logic_error("c1: chain is not strict");
        const auto& pd = pair_data(s.mu, lam);
        auto it = std::find_if(pd.wedge.begin(), pd.wedge.end(), [&](const AscendingEntry& e) { return e.d == id; });
        if (it == pd.wedge.end()) throw std::logic_error("c1: identity is not ascending");
        LaurentScalar c = q_power(f_of(v, X));
        if (X.size() % 2) c = -c;
        out.push_back({ChainBasisSymbol{{lam, s.mu}, {it->T}, s.tX}, c, X});
    }
    return out;
}

std::vector<std::pair<std::int64_t, LaurentScalar>> c1_element(const ComplexIndex& index, const Tableau& t) {
    std::vector<std::pair<std::int64_t, LaurentScalar>> out;
    for (auto& term : c1_terms(find_violation(t))) out.emplace_back(index.index_of(term.symbol), term.coefficient);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

C1BoundaryReport verify_lemma_5_4(const Tableau& t, const ComplexIndex* index) {
    std::unique_ptr<ComplexIndex> own;
    if (!index) {
        own = std::make_unique<ComplexIndex>(t.shape(), 1);
        index = own.get();
    }
    C1BoundaryReport rep;
    const auto v = find_violation(t);
    std::vector<int> Y = v.b;
    std::sort(Y.begin(), Y.end());
    rep.expected_l = f_of(v, {}) + w_XY_length_formula(v, x_tilde(v, {}), Y);

    BoundaryBuilder<LaurentRing> builder(*index, LaurentRing{});
    std::map<int, LaurentScalar> acc;
    for (const auto& [j, c] : c1_element(*index, t))
        for (const auto& [row, x] : builder.column(1, j)) acc[static_cast<int>(row)] += c * x;
    for (auto& [row, x] : acc)
        if (!x.is_zero()) rep.boundary.emplace_back(row, x);

    const auto& sd = shape_data(t.shape());
    const int pos = sd.d_to_tail[static_cast<std::size_t>(sd.index_of(tableau_to_d(t)))];
    rep.ok = true;
    auto it = acc.find(pos);
    if (it == acc.end() || !it->second.is_monomial() || it->second.terms()[0].coefficient != 1) {
        rep.ok = false;
        rep.failure = "coefficient of eps_t is " + (it == acc.end() ? std::string("0") : it->second.to_string());
    } else {
        rep.l = it->second.terms()[0].exponent;
        if (rep.l != rep.expected_l) {
            rep.ok = false;
            rep.failure = "exponent " + std::to_string(rep.l) + " differs from " + std::to_string(rep.expected_l);
        }
    }
    for (const auto& [row, x] : rep.boundary)
        if (row > pos) {
            rep.ok = false;
            rep.failure = "support at a lex-larger tableau (position " + std::to_string(row) + ")";
            break;
        }
    return rep;
}

std::vector<int> tail_reduction_failures(const Composition& lambda, std::uint32_t p, std::uint32_t q0) {
    ComplexIndex index(lambda, 1);
    PrimeField F(p, q0);
    ColumnReducer<PrimeField> red(F, index.dim(0));
    if (index.built_degree() >= 1) {
        BoundaryBuilder<PrimeField> builder(index, F);
        for (std::int64_t j = 0; j < index.dim(1); ++j) red.reduce(builder.column(1, j));
    }
    const auto tails = enumerate_Trs(lambda);
    std::vector<int> failures;
    for (std::size_t pos = 0; pos < tails.size(); ++pos) {
        // independent of im(d_1) + span of the earlier ε
        const bool independent = red.reduce({{static_cast<std::uint32_t>(pos), 1u}}) >= 0;
        if (independent && !is_standard(tails[pos])) failures.push_back(static_cast<int>(pos));
    }
    return failures;
}

}  // namespace permres
