#include "permres/perm_module.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "caches.hpp"

namespace permres {

namespace {

std::map<Composition, std::unique_ptr<ShapeData>>& shape_cache() {
    static std::map<Composition, std::unique_ptr<ShapeData>> cache;
    return cache;
}

std::unique_ptr<ShapeData> build_shape_data(const Composition& lambda) {
    auto sd = std::make_unique<ShapeData>();
    sd->shape = lambda;
    sd->r = lambda.size();
    sd->D = enumerate_D_lambda(lambda);
    sd->W = enumerate_W_lambda(lambda);
    for (int i = 0; i < sd->size(); ++i) {
        sd->index.emplace(sd->D[static_cast<std::size_t>(i)].key(), i);
        sd->lengths.push_back(sd->D[static_cast<std::size_t>(i)].length());
    }
    std::vector<int> order(static_cast<std::size_t>(sd->size()));
    for (int i = 0; i < sd->size(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sd->D[static_cast<std::size_t>(a)] < sd->D[static_cast<std::size_t>(b)]; });
    sd->tail_to_d = order;
    sd->d_to_tail.assign(order.size(), 0);
    for (std::size_t t = 0; t < order.size(); ++t) sd->d_to_tail[static_cast<std::size_t>(order[t])] = static_cast<int>(t);
    for (int d = 0; d < sd->size(); ++d) {
        const auto& pd = sd->D[static_cast<std::size_t>(d)];
        for (int s = 1; s < sd->r; ++s) {
            Permutation ds = pd.times_simple(s);
            int target = sd->index_of(ds);
            if (target < 0)
                sd->steps.push_back({d, ShapeData::Move::Stay});
            else if (pd.right_ascent(s))
                sd->steps.push_back({target, ShapeData::Move::Up});
            else
                sd->steps.push_back({target, ShapeData::Move::Down});
        }
    }
    return sd;
}

}  // namespace

int ShapeData::index_of(const Permutation& d) const {
    auto it = index.find(d.key());
    return it == index.end() ? -1 : it->second;
}

const ShapeData& shape_data(const Composition& lambda) {
    auto& cache = shape_cache();
    auto it = cache.find(lambda);
    if (it == cache.end()) it = cache.emplace(lambda, build_shape_data(lambda)).first;
    return *it->second;
}

namespace detail {
void clear_shape_cache() { shape_cache().clear(); }
}  // namespace detail

void clear_caches() {
    detail::clear_complex_cache();
    detail::clear_hom_cache();
    detail::clear_shape_cache();
}

SpechtBasis specht_basis(const Composition& lambda) {
    SpechtBasis basis;
    basis.shape = lambda;
    if (!lambda.is_partition()) return basis;
    const LaurentRing R;
    const auto& sd = shape_data(lambda);
    const Permutation wl = w_lambda(lambda);
    const Composition conj = dual(lambda);

    // z_λ = (x_λ T_{w_λ}) y_{λ'} with x_λ T_{w_λ} the basis vector at w_λ.
    MVector<LaurentRing> xt = MVector<LaurentRing>::basis(R, lambda, sd.index_of(wl));
    MVector<LaurentRing> z(R, lambda);
    for (const auto& [w, c] : y_elem(R, conj).sorted_terms()) {
        auto part = act(xt, w);
        for (int e = 0; e < sd.size(); ++e)
            z.coords()[static_cast<std::size_t>(e)] += c * part.coords()[static_cast<std::size_t>(e)];
    }

    const Permutation wc = w_lambda(conj);
    struct Entry {
        Tableau t;
        Permutation d;
    };
    std::vector<Entry> entries;
    for (const auto& d : all_permutations(sd.r))
        if (weak_prefix_leq(d, wc)) entries.push_back({Tableau(lambda, (wl * d).one_line()), d});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return lex_less(a.t, b.t); });
    for (const auto& e : entries) {
        basis.d.push_back(e.d);
        basis.index_tableaux.push_back(e.t);
        basis.vectors.push_back(act(z, e.d).coords());
    }
    return basis;
}

LeadingTermReport leading_term_check(const Composition& lambda) {
    LeadingTermReport report;
    const auto basis = specht_basis(lambda);
    if (!lambda.is_partition()) return report;
    const auto& sd = shape_data(lambda);
    const Permutation wl = w_lambda(lambda);
    for (std::size_t k = 0; k < basis.d.size(); ++k) {
        const auto& d = basis.d[k];
        const Permutation lead = wl * d;
        const int lead_index = sd.index_of(lead);
        std::ostringstream why;
        if (lead_index < 0) {
            why << "lambda=" << lambda.to_string() << " d=" << d.to_string() << ": w_lambda d not distinguished";
        } else if (!(basis.vectors[k][static_cast<std::size_t>(lead_index)] == q_power(d.length()))) {
            why << "lambda=" << lambda.to_string() << " d=" << d.to_string() << " e=" << lead.to_string()
                << ": leading coefficient " << basis.vectors[k][static_cast<std::size_t>(lead_index)];
        } else {
            for (int e = 0; e < sd.size(); ++e) {
                if (e == lead_index || basis.vectors[k][static_cast<std::size_t>(e)].is_zero()) continue;
                if (sd.lengths[static_cast<std::size_t>(e)] <= lead.length()) {
                    why << "lambda=" << lambda.to_string() << " d=" << d.to_string()
                        << " e=" << sd.D[static_cast<std::size_t>(e)].to_string() << ": support not longer";
                    break;
                }
            }
        }
        if (!why.str().empty()) {
            report.ok = false;
            report.failure = why.str();
            return report;
        }
    }
    return report;
}

std::vector<std::vector<LaurentScalar>> psi_matrix(const Composition& lambda) {
    return specht_basis(lambda).vectors;
}

}  // namespace permres
