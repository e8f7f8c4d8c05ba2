#pragma once

// Witness data for a non-standard row-standard tableau and the element c_1
// of C_1 whose boundary has leading term q^l ε_t.

#include <optional>
#include <string>
#include <vector>

#include "permres/complex.hpp"

namespace permres {

/// Rows k and k+1 (1-based k) of t written a_1..a_m and b_1..b_n, with
/// a_j < b_j for j <= i and (a_{i+1} > b_{i+1} or m = i).
struct ViolationData {
    Tableau t;
    int k = 0;
    std::vector<int> a;
    std::vector<int> b;
    int i = 0;
    std::vector<int> Z;  // sorted
    int m() const { return static_cast<int>(a.size()); }
    int n() const { return static_cast<int>(b.size()); }
};

/// Smallest k with a violation in rows k, k+1. Throws std::invalid_argument
/// if t is not row-standard or is standard.
ViolationData find_violation(const Tableau& t);

struct SubsetShapeData {
    std::vector<int> X;  // sorted
    Composition mu;      // μ_X
    Composition nu;      // ν_X
    Tableau tX;
    Permutation dX;
    std::vector<int> A, B, C, D;  // 1-based points
};

/// Throws std::invalid_argument unless X ⊆ Z and |X| <= n.
SubsetShapeData subset_data(const ViolationData& v, const std::vector<int>& X);

/// W_{X,d} = W_{μ_X} ∩ (D_{ν_X} ∩ W_λ) d d_X^{-1}, by enumeration.
std::vector<Permutation> w_Xd_set(const ViolationData& v, const SubsetShapeData& s, const Permutation& d);

/// Σ_{y ∈ Y∖X} |{z ∈ Z∖Y : y < z}|.
int w_XY_length_formula(const ViolationData& v, const std::vector<int>& X, const std::vector<int>& Y);

/// X̃ = X ∪ {b_{i+2}, ..., b_n}.
std::vector<int> x_tilde(const ViolationData& v, const std::vector<int>& X);
/// f(X) = Σ_{a_j ∈ X, j <= i} (m + 1 - j).
int f_of(const ViolationData& v, const std::vector<int>& X);

/// Result of comparing the closed forms for ε_X ∘ φ_1 with direct computation.
struct SubsetCheck {
    bool ok = true;
    std::string failure;
};

/// For one X: |W_{X,d}| <= 1 for all d; the d with W_{X,d} nonempty are the d_Y;
/// ε_X ∘ φ_1 agrees with Σ_d q^{l(w_{X,d})} ε_d and with Σ_Y q^{l(w_{X,Y})} ε_Y;
/// l(w_{X,Y}) agrees with the counting formula.
SubsetCheck check_subset(const ViolationData& v, const std::vector<int>& X);

struct C1Term {
    ChainBasisSymbol symbol;
    LaurentScalar coefficient;
    std::vector<int> X;  // the subset of {a_1..a_i}
};

std::vector<C1Term> c1_terms(const ViolationData& v);
/// c_1 as a sparse vector over the degree-1 basis of `index` (sorted by index).
std::vector<std::pair<std::int64_t, LaurentScalar>> c1_element(const ComplexIndex& index, const Tableau& t);

struct C1BoundaryReport {
    bool ok = false;
    int l = 0;           // exponent found on ε_t
    int expected_l = 0;  // f(∅) + l(w_{∅̃, {b_1..b_n}})
    std::vector<std::pair<int, LaurentScalar>> boundary;  // d_1(c_1) over T^rs(λ) positions
    std::string failure;
};

/// index must be built for t's shape through degree 1; built on demand when null.
C1BoundaryReport verify_lemma_5_4(const Tableau& t, const ComplexIndex* index = nullptr);

/// Positions (in T^rs(λ)) of the non-standard t for which ε_t fails to lie in
/// im(d_1) + C_{0,<t} over F_p at q0, checked by rank.
std::vector<int> tail_reduction_failures(const Composition& lambda, std::uint32_t p, std::uint32_t q0);

}  // namespace permres
