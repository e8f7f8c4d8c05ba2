#pragma once

// λ-tableaux and generalized tableaux. Boxes are numbered 0..r-1 row by row,
// following t^λ, so both kinds are stored as a flat array over boxes.

#include <compare>
#include <string>
#include <vector>

#include "permres/permutation.hpp"
#include "permres/shapes.hpp"

namespace permres {

class Tableau {
public:
    /// entries[p] is the (1-based) entry of box p.
    Tableau(Composition shape, std::vector<int> entries);
    static Tableau from_rows(const std::vector<std::vector<int>>& rows);

    const Composition& shape() const { return shape_; }
    const std::vector<int>& entries() const { return entries_; }
    std::vector<std::vector<int>> rows() const;
    /// `[1,2]/[3]`
    std::string to_string() const;

    bool operator==(const Tableau& other) const = default;

private:
    Composition shape_;
    std::vector<int> entries_;
};

Tableau t_canonical(const Composition& lambda);
/// Entrywise image x -> (x)w.
Tableau act(const Tableau& t, const Permutation& w);
/// Reflection in the diagonal; the shape must be a partition.
Tableau transpose(const Tableau& t);
bool is_row_standard(const Tableau& t);
/// Row-standard with row-standard transpose; false for non-partition shapes.
bool is_standard(const Tableau& t);
/// The d ∈ D_λ with t = t^λ d. Throws std::invalid_argument unless row-standard.
Permutation tableau_to_d(const Tableau& t);
Tableau d_to_tableau(const Permutation& d, const Composition& lambda);

/// T^rs(λ) and T^st(λ), lexicographic by row reading sequence.
std::vector<Tableau> enumerate_Trs(const Composition& lambda);
std::vector<Tableau> enumerate_Tst(const Composition& lambda);

/// Lexicographic comparison of row reading sequences (same shape required).
bool lex_less(const Tableau& a, const Tableau& b);

class GeneralizedTableau {
public:
    GeneralizedTableau(Composition shape, Composition content, std::vector<int> entries);
    static GeneralizedTableau from_rows(const Composition& content, const std::vector<std::vector<int>>& rows);

    const Composition& shape() const { return shape_; }
    const Composition& content() const { return content_; }
    const std::vector<int>& entries() const { return entries_; }
    std::vector<std::vector<int>> rows() const;
    std::string to_string() const;

    bool operator==(const GeneralizedTableau& other) const = default;

private:
    Composition shape_;
    Composition content_;
    std::vector<int> entries_;
};

/// T^λ_μ: box p gets the i with p ∈ Q_i.
GeneralizedTableau gen_canonical(const Composition& lambda, const Composition& mu);
/// (wT)(p) = T(pw).
GeneralizedTableau act_left(const Permutation& w, const GeneralizedTableau& t);
bool is_row_semistandard(const GeneralizedTableau& t);
/// Every entry of row i is at least i.
bool is_ascending(const GeneralizedTableau& t);
/// Rows weakly increasing and columns strictly increasing.
bool is_gen_standard(const GeneralizedTableau& t);

/// T^rs(λ,μ) and T^∧(λ,μ), lexicographic by row reading sequence.
std::vector<GeneralizedTableau> enumerate_T_rs(const Composition& lambda, const Composition& mu);
std::vector<GeneralizedTableau> enumerate_T_wedge(const Composition& lambda, const Composition& mu);

/// The distinguished double coset representative belonging to a row-semistandard T.
Permutation gen_tableau_to_d(const GeneralizedTableau& t);
/// Inverse direction: box p gets the i with (p)d ∈ Q_i.
GeneralizedTableau d_to_gen_tableau(const Permutation& d, const Composition& lambda, const Composition& mu);

}  // namespace permres
