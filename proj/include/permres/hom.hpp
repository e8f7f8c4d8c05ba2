#pragma once

// Hom_H(M^μ, M^λ) with basis φ_d (d ∈ D_{λ,μ}) and its ascending part.

#include <string>
#include <utility>
#include <vector>

#include "permres/perm_module.hpp"

namespace permres {

/// Matrix of an H-linear map M^μ -> M^λ: rows over D_λ, columns over D_μ,
/// column e holds the image of x_μ T_e.
struct HomMatrix {
    using Column = std::vector<std::pair<int, LaurentScalar>>;  // sorted by row

    Composition source;  // μ
    Composition target;  // λ
    int rows = 0;
    int cols = 0;
    std::vector<Column> columns;

    HomMatrix() = default;
    HomMatrix(Composition source_, Composition target_);
    LaurentScalar at(int row, int col) const;
    std::size_t nonzeros() const;
    bool operator==(const HomMatrix& other) const = default;
};

HomMatrix identity_hom(const Composition& lambda);
/// φ_d^{λ,μ}; throws std::invalid_argument unless d ∈ D_{λ,μ}.
HomMatrix phi(const Composition& lambda, const Composition& mu, const Permutation& d);
/// One matrix per element of D_{λ,μ}, in D_{λ,μ} order.
std::vector<HomMatrix> hom_basis(const Composition& lambda, const Composition& mu);
/// β ∘ α.
HomMatrix compose(const HomMatrix& beta, const HomMatrix& alpha);
HomMatrix linear_combination(const std::vector<LaurentScalar>& coefficients, const std::vector<HomMatrix>& basis);

/// Coefficients over D_{λ,μ} with ψ = Σ a_f φ_f. Every entry of the
/// recombination is compared with ψ; throws std::domain_error("not in the φ-span").
std::vector<LaurentScalar> expand_in_phi(const HomMatrix& psi);

struct AscendingEntry {
    Permutation d;
    GeneralizedTableau T;
};

/// D^∧_{λ,μ} as (d, T) pairs, T ∈ T^∧(λ,μ) in lex order.
std::vector<AscendingEntry> ascending_index(const Composition& lambda, const Composition& mu);

/// P_i w ⊆ Q_i ∪ Q_{i+1} ∪ ... for every i (P from λ, Q from μ).
bool in_W_lambda_mu(const Permutation& w, const Composition& lambda, const Composition& mu);

/// A linear form on M^λ in the dual basis ε_d.
struct Functional {
    Composition shape;
    std::vector<LaurentScalar> values;  // over D_λ
    static Functional eps(const Composition& shape, int d);
    bool operator==(const Functional& other) const = default;
};

/// ε ∘ φ, a form on the source of φ.
Functional eps_compose(const Functional& eps, const HomMatrix& phi);

/// Cached data for a pair (λ, μ) used by the complex builder.
struct PairData {
    Composition lambda;
    Composition mu;
    std::vector<int> reps;             // D_{λ,μ} as D_λ indices, in D_{λ,μ} order
    std::vector<int> double_coset_of;  // D_λ index -> position in reps
    std::vector<AscendingEntry> wedge;
    std::vector<int> wedge_rep;        // wedge index -> position in reps
    std::vector<int> wedge_of_rep;     // position in reps -> wedge index or -1
};

const PairData& pair_data(const Composition& lambda, const Composition& mu);
/// φ_d for the a-th ascending tableau of T^∧(λ,μ).
const HomMatrix& ascending_phi(const Composition& lambda, const Composition& mu, int a);
/// Row view of ascending_phi: rows[f] lists (e, entry).
const std::vector<HomMatrix::Column>& ascending_phi_rows(const Composition& lambda, const Composition& mu, int a);

/// For φ_b ∈ Hom^∧(M^μ, M^λ) and φ_a ∈ Hom^∧(M^ν, M^μ), the expansion of
/// φ_b ∘ φ_a vanishes outside D^∧_{λ,ν}. Empty string on success.
std::string ascending_closure_failure(const Composition& lambda, const Composition& mu, const Composition& nu, int b,
                                      int a);

}  // namespace permres
