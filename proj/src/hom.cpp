#include "permres/hom.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "caches.hpp"

namespace permres {

namespace {

// |P_i w ∩ Q_j| for all i, j; equal exactly on W_λ w W_μ.
std::vector<int> double_coset_key(const Permutation& w, const std::vector<int>& block_lambda,
                                  const std::vector<int>& block_mu, int len_mu) {
    int len_lambda = block_lambda.empty() ? 0 : block_lambda.back() + 1;
    std::vector<int> key(static_cast<std::size_t>(len_lambda * len_mu), 0);
    for (int p = 0; p < w.r(); ++p)
        ++key[static_cast<std::size_t>(block_lambda[static_cast<std::size_t>(p)] * len_mu +
                                       block_mu[static_cast<std::size_t>(w.at(p))])];
    return key;
}

struct PairCacheEntry {
    PairData data;
    std::vector<std::unique_ptr<HomMatrix>> phis;
    std::vector<std::unique_ptr<std::vector<HomMatrix::Column>>> rows;
};

std::map<std::pair<Composition, Composition>, std::unique_ptr<PairCacheEntry>>& pair_cache() {
    static std::map<std::pair<Composition, Composition>, std::unique_ptr<PairCacheEntry>> cache;
    return cache;
}

PairCacheEntry& pair_entry(const Composition& lambda, const Composition& mu) {
    auto& cache = pair_cache();
    auto key = std::make_pair(lambda, mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    if (lambda.size() != mu.size()) throw std::invalid_argument("hom: size mismatch");

    auto entry = std::make_unique<PairCacheEntry>();
    PairData& pd = entry->data;
    pd.lambda = lambda;
    pd.mu = mu;
    const auto& sd = shape_data(lambda);
    const auto bl = lambda.block_of();
    const auto bm = mu.block_of();
    std::map<std::vector<int>, int> rep_of_key;
    for (int f = 0; f < sd.size(); ++f) {
        const auto& pf = sd.D[static_cast<std::size_t>(f)];
        if (in_D_lambda(pf.inverse(), mu)) {
            rep_of_key.emplace(double_coset_key(pf, bl, bm, mu.length()), static_cast<int>(pd.reps.size()));
            pd.reps.push_back(f);
        }
    }
    pd.double_coset_of.resize(static_cast<std::size_t>(sd.size()));
    for (int f = 0; f < sd.size(); ++f)
        pd.double_coset_of[static_cast<std::size_t>(f)] =
            rep_of_key.at(double_coset_key(sd.D[static_cast<std::size_t>(f)], bl, bm, mu.length()));
    pd.wedge_of_rep.assign(pd.reps.size(), -1);
    for (auto& T : enumerate_T_wedge(lambda, mu)) {
        Permutation d = gen_tableau_to_d(T);
        int f = sd.index_of(d);
        int rep = pd.double_coset_of.at(static_cast<std::size_t>(f));
        if (pd.reps[static_cast<std::size_t>(rep)] != f) throw std::logic_error("ascending tableau gave a non-distinguished d");
        pd.wedge_of_rep[static_cast<std::size_t>(rep)] = static_cast<int>(pd.wedge.size());
        pd.wedge_rep.push_back(rep);
        pd.wedge.push_back({d, std::move(T)});
    }
    entry->phis.resize(pd.wedge.size());
    entry->rows.resize(pd.wedge.size());
    it = cache.emplace(key, std::move(entry)).first;
    return *it->second;
}

HomMatrix phi_from_rep(const PairData& pd, int rep) {
    const auto& sl = shape_data(pd.lambda);
    const auto& sm = shape_data(pd.mu);
    const LaurentRing R;
    std::vector<std::vector<LaurentScalar>> dense(static_cast<std::size_t>(sm.size()));
    dense[0].assign(static_cast<std::size_t>(sl.size()), LaurentScalar());
    for (int f = 0; f < sl.size(); ++f)
        if (pd.double_coset_of[static_cast<std::size_t>(f)] == rep) dense[0][static_cast<std::size_t>(f)] = 1;
    // T_e = T_{e'} T_s for a right descent s of e, and e' = e s ∈ D_μ comes earlier.
    for (int e = 1; e < sm.size(); ++e) {
        const auto& pe = sm.D[static_cast<std::size_t>(e)];
        int s = 1;
        while (pe.right_ascent(s)) ++s;
        int prev = sm.index_of(pe.times_simple(s));
        if (prev < 0 || prev >= e) throw std::logic_error("D_mu is not closed under right truncation");
        dense[static_cast<std::size_t>(e)] = act_simple_dense(sl, R, dense[static_cast<std::size_t>(prev)], s);
    }
    HomMatrix m(pd.mu, pd.lambda);
    for (int e = 0; e < sm.size(); ++e)
        for (int f = 0; f < sl.size(); ++f) {
            auto& x = dense[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
            if (!x.is_zero()) m.columns[static_cast<std::size_t>(e)].emplace_back(f, std::move(x));
        }
    return m;
}

}  // namespace

namespace detail {
void clear_hom_cache() { pair_cache().clear(); }
}  // namespace detail

HomMatrix::HomMatrix(Composition source_, Composition target_)
    : source(std::move(source_)), target(std::move(target_)) {
    rows = shape_data(target).size();
    cols = shape_data(source).size();
    columns.resize(static_cast<std::size_t>(cols));
}

LaurentScalar HomMatrix::at(int row, int col) const {
    const auto& c = columns.at(static_cast<std::size_t>(col));
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
    if (it != c.end() && it->first == row) return it->second;
    return {};
}

std::size_t HomMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

HomMatrix identity_hom(const Composition& lambda) {
    HomMatrix m(lambda, lambda);
    for (int i = 0; i < m.cols; ++i) m.columns[static_cast<std::size_t>(i)].emplace_back(i, 1);
    return m;
}

const PairData& pair_data(const Composition& lambda, const Composition& mu) { return pair_entry(lambda, mu).data; }

HomMatrix phi(const Composition& lambda, const Composition& mu, const Permutation& d) {
    const auto& pd = pair_data(lambda, mu);
    int f = shape_data(lambda).index_of(d);
    if (f < 0 || pd.reps[static_cast<std::size_t>(pd.double_coset_of[static_cast<std::size_t>(f)])] != f)
        throw std::invalid_argument("phi: " + d.to_string() + " is not in D_{lambda,mu}");
    return phi_from_rep(pd, pd.double_coset_of[static_cast<std::size_t>(f)]);
}

std::vector<HomMatrix> hom_basis(const Composition& lambda, const Composition& mu) {
    const auto& pd = pair_data(lambda, mu);
    std::vector<HomMatrix> out;
    for (std::size_t k = 0; k < pd.reps.size(); ++k) out.push_back(phi_from_rep(pd, static_cast<int>(k)));
    return out;
}

const HomMatrix& ascending_phi(const Composition& lambda, const Composition& mu, int a) {
    auto& entry = pair_entry(lambda, mu);
    auto& slot = entry.phis.at(static_cast<std::size_t>(a));
    if (!slot) slot = std::make_unique<HomMatrix>(phi_from_rep(entry.data, entry.data.wedge_rep[static_cast<std::size_t>(a)]));
    return *slot;
}

const std::vector<HomMatrix::Column>& ascending_phi_rows(const Composition& lambda, const Composition& mu, int a) {
    auto& entry = pair_entry(lambda, mu);
    auto& slot = entry.rows.at(static_cast<std::size_t>(a));
    if (!slot) {
        const HomMatrix& m = ascending_phi(lambda, mu, a);
        auto rows = std::make_unique<std::vector<HomMatrix::Column>>(static_cast<std::size_t>(m.rows));
        for (int e = 0; e < m.cols; ++e)
            for (const auto& [f, x] : m.columns[static_cast<std::size_t>(e)]) (*rows)[static_cast<std::size_t>(f)].emplace_back(e, x);
        slot = std::move(rows);
    }
    return *slot;
}

HomMatrix compose(const HomMatrix& beta, const HomMatrix& alpha) {
    if (!(beta.source == alpha.target)) throw std::invalid_argument("compose: shape mismatch");
    HomMatrix out(alpha.source, beta.target);
    std::vector<LaurentScalar> acc(static_cast<std::size_t>(beta.rows));
    std::vector<bool> touched(static_cast<std::size_t>(beta.rows), false);
    for (int e = 0; e < alpha.cols; ++e) {
        std::vector<int> rows;
        for (const auto& [k, a] : alpha.columns[static_cast<std::size_t>(e)])
            for (const auto& [f, b] : beta.columns[static_cast<std::size_t>(k)]) {
                acc[static_cast<std::size_t>(f)] += b * a;
                if (!touched[static_cast<std::size_t>(f)]) {
                    touched[static_cast<std::size_t>(f)] = true;
                    rows.push_back(f);
                }
            }
        std::sort(rows.begin(), rows.end());
        for (int f : rows) {
            auto& x = acc[static_cast<std::size_t>(f)];
            if (!x.is_zero()) out.columns[static_cast<std::size_t>(e)].emplace_back(f, std::move(x));
            x = LaurentScalar();
            touched[static_cast<std::size_t>(f)] = false;
        }
    }
    return out;
}

HomMatrix linear_combination(const std::vector<LaurentScalar>& coefficients, const std::vector<HomMatrix>& basis) {
    if (coefficients.size() != basis.size() || basis.empty())
        throw std::invalid_argument("linear_combination: size mismatch");
    HomMatrix out(basis[0].source, basis[0].target);
    for (int e = 0; e < out.cols; ++e) {
        std::map<int, LaurentScalar> acc;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (coefficients[k].is_zero()) continue;
            for (const auto& [f, x] : basis[k].columns[static_cast<std::size_t>(e)]) acc[f] += coefficients[k] * x;
        }
        for (auto& [f, x] : acc)
            if (!x.is_zero()) out.columns[static_cast<std::size_t>(e)].emplace_back(f, std::move(x));
    }
    return out;
}

std::vector<LaurentScalar> expand_in_phi(const HomMatrix& psi) {
    const auto& pd = pair_data(psi.target, psi.source);
    std::vector<LaurentScalar> coeffs(pd.reps.size());
    for (std::size_t k = 0; k < pd.reps.size(); ++k) coeffs[k] = psi.at(pd.reps[k], 0);
    HomMatrix again = linear_combination(coeffs, hom_basis(psi.target, psi.source));
    if (!(again == psi)) throw std::domain_error("not in the phi-span");
    return coeffs;
}

std::vector<AscendingEntry> ascending_index(const Composition& lambda, const Composition& mu) {
    return pair_data(lambda, mu).wedge;
}

bool in_W_lambda_mu(const Permutation& w, const Composition& lambda, const Composition& mu) {
    const auto bl = lambda.block_of();
    const auto bm = mu.block_of();
    for (int p = 0; p < w.r(); ++p)
        if (bm[static_cast<std::size_t>(w.at(p))] < bl[static_cast<std::size_t>(p)]) return false;
    return true;
}

Functional Functional::eps(const Composition& shape, int d) {
    Functional f{shape, std::vector<LaurentScalar>(static_cast<std::size_t>(shape_data(shape).size()))};
    f.values.at(static_cast<std::size_t>(d)) = 1;
    return f;
}

Functional eps_compose(const Functional& eps, const HomMatrix& phi) {
    if (!(eps.shape == phi.target) || static_cast<int>(eps.values.size()) != phi.rows)
        throw std::invalid_argument("eps_compose: shape mismatch");
    Functional out{phi.source, std::vector<LaurentScalar>(static_cast<std::size_t>(phi.cols))};
    for (int e = 0; e < phi.cols; ++e)
        for (const auto& [f, x] : phi.columns[static_cast<std::size_t>(e)])
            if (!eps.values[static_cast<std::size_t>(f)].is_zero())
                out.values[static_cast<std::size_t>(e)] += eps.values[static_cast<std::size_t>(f)] * x;
    return out;
}

}  // namespace permres

namespace permres {

std::string ascending_closure_failure(const Composition& lambda, const Composition& mu, const Composition& nu, int b,
                                      int a) {
    const auto coeffs = expand_in_phi(compose(ascending_phi(lambda, mu, b), ascending_phi(mu, nu, a)));
    const auto& pd = pair_data(lambda, nu);
    for (std::size_t f = 0; f < coeffs.size(); ++f)
        if (!coeffs[f].is_zero() && pd.wedge_of_rep[f] < 0)
            return "(" + lambda.to_string() + ")<-(" + mu.to_string() + ")<-(" + nu.to_string() + ") b=" +
                   std::to_string(b) + " a=" + std::to_string(a) + ": coefficient " + coeffs[f].to_string() +
                   " at non-ascending " + shape_data(lambda).D[static_cast<std::size_t>(pd.reps[f])].to_string();
    return {};
}

}  // namespace permres
