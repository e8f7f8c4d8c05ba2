#pragma once

// Compositions, partitions, dominance and chains of shapes.

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace permres {

/// A finite sequence of non-negative integers with trailing zeros trimmed.
/// Interior zeros are kept: (1,0,2) and (1,2) are different compositions.
class Composition {
public:
    Composition() = default;
    Composition(std::vector<int> parts);  // NOLINT
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    /// Parses `a,b,c`. Throws std::invalid_argument on malformed text.
    static Composition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    /// Part i (0-based); zero beyond the stored length.
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    int size() const { return total_; }
    bool is_partition() const;
    /// Parts sorted weakly descending (the composition written as a partition).
    Composition sorted() const;
    /// 0-based index of the first point of block i.
    int block_start(int i) const;
    /// block_of()[p] = i when the 0-based point p lies in block i.
    std::vector<int> block_of() const;
    std::string to_string() const;

    bool operator==(const Composition& other) const { return parts_ == other.parts_; }
    std::strong_ordering operator<=>(const Composition& other) const { return parts_ <=> other.parts_; }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// λ ⊴ μ: every partial sum of λ is at most the corresponding one of μ.
bool dominance_leq(const Composition& lambda, const Composition& mu);
bool dominance_less(const Composition& lambda, const Composition& mu);
Composition dual(const Composition& lambda);
/// λ ≤ μ in the sense μ' ⊴ λ'.
bool dj_leq(const Composition& lambda, const Composition& mu);

/// All partitions of r, lexicographically decreasing.
std::vector<Composition> partitions_of(int r);
/// All compositions of r with at most max_length parts, lexicographic.
std::vector<Composition> compositions_of(int r, int max_length);

/// The least partition dominating μ.
Composition bar(const Composition& mu);
bool is_quasi_partition(const Composition& mu);
bool is_tame(const Composition& lambda);

/// All μ with λ ⊴ μ, in lexicographic order of parts.
std::vector<Composition> dominating_compositions(const Composition& lambda);

using ChainOfShapes = std::vector<Composition>;

/// All strict chains λ = λ^0 ◁ λ^1 ◁ ... ◁ λ^n, lexicographic by part sequences.
std::vector<ChainOfShapes> chains(const Composition& lambda, int n);
/// Length of the longest strict chain starting at λ.
int a_of(const Composition& lambda);

/// r! / prod λ_i!
long long multinomial(const Composition& lambda);

}  // namespace permres

template <>
struct std::hash<permres::Composition> {
    std::size_t operator()(const permres::Composition& c) const {
        std::size_t h = 0;
        for (int x : c.parts()) h = h * 31 + static_cast<std::size_t>(x) + 1;
        return h;
    }
};
