#pragma once

// Young subgroups W_λ and their distinguished coset representatives.

#include <utility>
#include <vector>

#include "permres/permutation.hpp"
#include "permres/shapes.hpp"

namespace permres {

/// Permutations stabilising every block of P_λ, in lexicographic order.
std::vector<Permutation> enumerate_W_lambda(const Composition& lambda);
bool in_W_lambda(const Permutation& w, const Composition& lambda);

/// d ∈ D_λ iff d is increasing on every block of P_λ.
bool in_D_lambda(const Permutation& d, const Composition& lambda);

/// D_λ ordered by (length, one-line).
std::vector<Permutation> enumerate_D_lambda(const Composition& lambda);

/// w = w1 d with w1 ∈ W_λ and d ∈ D_λ.
std::pair<Permutation, Permutation> coset_decompose(const Permutation& w, const Composition& lambda);

/// D_{λ,μ} = D_λ ∩ D_μ^{-1}, ordered by (length, one-line).
std::vector<Permutation> enumerate_D_lambda_mu(const Composition& lambda, const Composition& mu);

/// The w with (t^λ w)' = t^{λ'}. Throws std::invalid_argument for non-partitions.
Permutation w_lambda(const Composition& lambda);

/// Sort key matching the D_λ ordering.
bool length_lex_less(const Permutation& a, const Permutation& b);

}  // namespace permres
