#include "permres/parabolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace permres {

namespace {

void require_size(const Composition& lambda) {
    if (lambda.size() < 1 || lambda.size() > kMaxRank) throw std::invalid_argument("composition size out of range");
}

}  // namespace

bool length_lex_less(const Permutation& a, const Permutation& b) {
    int la = a.length();
    int lb = b.length();
    if (la != lb) return la < lb;
    return a < b;
}

bool in_W_lambda(const Permutation& w, const Composition& lambda) {
    const auto block = lambda.block_of();
    for (int p = 0; p < w.r(); ++p)
        if (block[static_cast<std::size_t>(p)] != block[static_cast<std::size_t>(w.at(p))]) return false;
    return true;
}

std::vector<Permutation> enumerate_W_lambda(const Composition& lambda) {
    require_size(lambda);
    const int r = lambda.size();
    std::vector<Permutation> out;
    std::vector<int> line(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) line[static_cast<std::size_t>(i)] = i + 1;
    // Odometer over the blocks: each block runs through its permutations.
    std::vector<std::pair<int, int>> ranges;
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda[i] > 1) ranges.emplace_back(lambda.block_start(i), lambda.block_start(i) + lambda[i]);
    while (true) {
        out.push_back(Permutation::from_one_line(line));
        int k = static_cast<int>(ranges.size()) - 1;
        while (k >= 0) {
            auto [s, e] = ranges[static_cast<std::size_t>(k)];
            if (std::next_permutation(line.begin() + s, line.begin() + e)) break;
            --k;
        }
        if (k < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_D_lambda(const Permutation& d, const Composition& lambda) {
    for (int i = 0; i < lambda.length(); ++i) {
        int s = lambda.block_start(i);
        for (int p = s + 1; p < s + lambda[i]; ++p)
            if (d.at(p - 1) > d.at(p)) return false;
    }
    return true;
}

std::vector<Permutation> enumerate_D_lambda(const Composition& lambda) {
    require_size(lambda);
    const int r = lambda.size();
    // A word c with c[v] = block receiving value v; each block takes its values in order.
    std::vector<int> word;
    for (int i = 0; i < lambda.length(); ++i)
        for (int k = 0; k < lambda[i]; ++k) word.push_back(i);
    std::vector<Permutation> out;
    do {
        std::vector<int> next(static_cast<std::size_t>(lambda.length()));
        for (int i = 0; i < lambda.length(); ++i) next[static_cast<std::size_t>(i)] = lambda.block_start(i);
        std::vector<int> line(static_cast<std::size_t>(r));
        for (int v = 0; v < r; ++v) {
            int b = word[static_cast<std::size_t>(v)];
            line[static_cast<std::size_t>(next[static_cast<std::size_t>(b)]++)] = v + 1;
        }
        out.push_back(Permutation::from_one_line(line));
    } while (std::next_permutation(word.begin(), word.end()));
    std::sort(out.begin(), out.end(), length_lex_less);
    return out;
}

std::pair<Permutation, Permutation> coset_decompose(const Permutation& w, const Composition& lambda) {
    if (w.r() != lambda.size()) throw std::invalid_argument("coset_decompose: size mismatch");
    std::vector<int> line(static_cast<std::size_t>(w.r()));
    for (int i = 0; i < lambda.length(); ++i) {
        int s = lambda.block_start(i);
        std::vector<int> images;
        for (int p = s; p < s + lambda[i]; ++p) images.push_back(w.at(p) + 1);
        std::sort(images.begin(), images.end());
        for (int k = 0; k < lambda[i]; ++k) line[static_cast<std::size_t>(s + k)] = images[static_cast<std::size_t>(k)];
    }
    Permutation d = Permutation::from_one_line(line);
    return {w * d.inverse(), d};
}

std::vector<Permutation> enumerate_D_lambda_mu(const Composition& lambda, const Composition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("D_lambda_mu: size mismatch");
    std::vector<Permutation> out;
    for (const auto& d : enumerate_D_lambda(lambda))
        if (in_D_lambda(d.inverse(), mu)) out.push_back(d);
    return out;
}

Permutation w_lambda(const Composition& lambda) {
    if (!lambda.is_partition()) throw std::invalid_argument("w_lambda needs a partition");
    const Composition conj = dual(lambda);
    std::vector<int> line(static_cast<std::size_t>(lambda.size()));
    // box (i, j) holds λ_0+...+λ_{i-1}+j in t^λ and λ'_0+...+λ'_{j-1}+i in t^{λ'}
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            line[static_cast<std::size_t>(lambda.block_start(i) + j)] = conj.block_start(j) + i + 1;
    return Permutation::from_one_line(line);
}

}  // namespace permres
