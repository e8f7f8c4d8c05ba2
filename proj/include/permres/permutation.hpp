#pragma once

// Permutations of {1..r} acting on the right: (i)(uv) = ((i)u)v.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace permres {

constexpr int kMaxRank = 16;

class Permutation {
public:
    explicit Permutation(int r = 1);
    /// One-line notation, 1-based: images[i-1] = (i)w.
    static Permutation from_one_line(const std::vector<int>& images);
    /// The simple transposition s_i = (i, i+1), 1 <= i < r.
    static Permutation simple(int r, int i);
    static Permutation transposition(int r, int a, int b);
    /// Inverse of key().
    static Permutation from_key(std::uint64_t key, int r);

    int r() const { return r_; }
    /// (i)w for 1 <= i <= r.
    int image(int i) const { return a_[static_cast<std::size_t>(i - 1)] + 1; }
    /// 0-based image of the 0-based point i.
    int at(int i) const { return a_[static_cast<std::size_t>(i)]; }
    std::vector<int> one_line() const;
    bool is_identity() const;

    /// Right-action product: (i)(this * v) = ((i)this)v.
    Permutation operator*(const Permutation& v) const;
    Permutation inverse() const;
    /// w s_i, i.e. swap the values i and i+1 in one-line notation.
    Permutation times_simple(int i) const;
    /// s_i w, i.e. swap the entries at positions i and i+1.
    Permutation simple_times(int i) const;
    /// True iff l(w s_i) = l(w) + 1.
    bool right_ascent(int i) const;

    int length() const;
    std::uint64_t key() const;
    std::string to_string() const;

    bool operator==(const Permutation& other) const { return r_ == other.r_ && a_ == other.a_; }
    /// Lexicographic on one-line notation.
    std::strong_ordering operator<=>(const Permutation& other) const;

private:
    std::array<std::uint8_t, kMaxRank> a_{};
    int r_ = 1;
};

int length(const Permutation& w);

/// A word i_1..i_k with w = s_{i_1} ... s_{i_k} and k = l(w).
std::vector<int> reduced_word(const Permutation& w);

Permutation from_word(int r, const std::vector<int>& word);

/// Usual strong Bruhat order (u is a subword of v), by the sorted-prefix test.
bool strong_bruhat_leq(const Permutation& u, const Permutation& v);

/// l(u) + l(u^-1 v) = l(v): u is a prefix of a reduced expression of v.
bool weak_prefix_leq(const Permutation& u, const Permutation& v);

/// All of W in lexicographic one-line order.
std::vector<Permutation> all_permutations(int r);

}  // namespace permres

template <>
struct std::hash<permres::Permutation> {
    std::size_t operator()(const permres::Permutation& w) const { return std::hash<std::uint64_t>{}(w.key()); }
};
