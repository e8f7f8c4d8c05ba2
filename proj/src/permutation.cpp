#include "permres/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permres {

Permutation::Permutation(int r) : r_(r) {
    if (r < 1 || r > kMaxRank) throw std::invalid_argument("permutation rank out of range");
    for (int i = 0; i < r; ++i) a_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
    Permutation w(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        int v = images[i];
        if (v < 1 || v > w.r_ || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[static_cast<std::size_t>(v - 1)] = true;
        w.a_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return w;
}

Permutation Permutation::simple(int r, int i) {
    if (i < 1 || i >= r) throw std::invalid_argument("simple index out of range");
    return transposition(r, i, i + 1);
}

Permutation Permutation::transposition(int r, int a, int b) {
    Permutation w(r);
    if (a < 1 || b < 1 || a > r || b > r) throw std::invalid_argument("transposition out of range");
    std::swap(w.a_[static_cast<std::size_t>(a - 1)], w.a_[static_cast<std::size_t>(b - 1)]);
    return w;
}

Permutation Permutation::from_key(std::uint64_t key, int r) {
    Permutation w(r);
    for (int i = 0; i < r; ++i) w.a_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((key >> (4 * i)) & 0xF);
    return w;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) out[static_cast<std::size_t>(i)] = a_[static_cast<std::size_t>(i)] + 1;
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < r_; ++i)
        if (a_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& v) const {
    if (r_ != v.r_) throw std::invalid_argument("permutation rank mismatch");
    Permutation w(r_);
    for (int i = 0; i < r_; ++i) w.a_[static_cast<std::size_t>(i)] = v.a_[a_[static_cast<std::size_t>(i)]];
    return w;
}

Permutation Permutation::inverse() const {
    Permutation w(r_);
    for (int i = 0; i < r_; ++i) w.a_[a_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    return w;
}

Permutation Permutation::times_simple(int i) const {
    Permutation w = *this;
    for (int k = 0; k < r_; ++k) {
        auto& x = w.a_[static_cast<std::size_t>(k)];
        if (x == i - 1)
            x = static_cast<std::uint8_t>(i);
        else if (x == i)
            x = static_cast<std::uint8_t>(i - 1);
    }
    return w;
}

Permutation Permutation::simple_times(int i) const {
    Permutation w = *this;
    std::swap(w.a_[static_cast<std::size_t>(i - 1)], w.a_[static_cast<std::size_t>(i)]);
    return w;
}

bool Permutation::right_ascent(int i) const {
    for (int k = 0; k < r_; ++k) {
        int x = a_[static_cast<std::size_t>(k)];
        if (x == i - 1) return true;
        if (x == i) return false;
    }
    return false;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < r_; ++j)
            if (a_[static_cast<std::size_t>(i)] > a_[static_cast<std::size_t>(j)]) ++inv;
    return inv;
}

std::uint64_t Permutation::key() const {
    std::uint64_t k = 0;
    for (int i = 0; i < r_; ++i) k |= static_cast<std::uint64_t>(a_[static_cast<std::size_t>(i)]) << (4 * i);
    return k;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) os << (i ? " " : "") << a_[static_cast<std::size_t>(i)] + 1;
    os << "]";
    return os.str();
}

std::strong_ordering Permutation::operator<=>(const Permutation& other) const {
    if (auto c = r_ <=> other.r_; c != 0) return c;
    for (int i = 0; i < r_; ++i)
        if (auto c = a_[static_cast<std::size_t>(i)] <=> other.a_[static_cast<std::size_t>(i)]; c != 0) return c;
    return std::strong_ordering::equal;
}

int length(const Permutation& w) { return w.length(); }

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    Permutation x = w;
    bool found = true;
    while (found) {
        found = false;
        for (int i = 1; i < x.r(); ++i) {
            if (x.at(i - 1) > x.at(i)) {
                word.push_back(i);
                x = x.simple_times(i);
                found = true;
                break;
            }
        }
    }
    return word;
}

Permutation from_word(int r, const std::vector<int>& word) {
    Permutation w(r);
    for (int i : word) w = w.times_simple(i);
    return w;
}

bool strong_bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.r() != v.r()) throw std::invalid_argument("permutation rank mismatch");
    const int r = u.r();
    std::vector<int> su;
    std::vector<int> sv;
    for (int k = 0; k < r; ++k) {
        su.insert(std::upper_bound(su.begin(), su.end(), u.at(k)), u.at(k));
        sv.insert(std::upper_bound(sv.begin(), sv.end(), v.at(k)), v.at(k));
        for (int j = 0; j <= k; ++j)
            if (su[static_cast<std::size_t>(j)] > sv[static_cast<std::size_t>(j)]) return false;
    }
    return true;
}

bool weak_prefix_leq(const Permutation& u, const Permutation& v) {
    return u.length() + (u.inverse() * v).length() == v.length();
}

std::vector<Permutation> all_permutations(int r) {
    std::vector<int> line(static_cast<std::size_t>(r));
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

}  // namespace permres
