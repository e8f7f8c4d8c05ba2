#pragma once

// Elements of the Hecke algebra H_{r,q} in the T_w basis.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permres/parabolic.hpp"
#include "permres/permutation.hpp"
#include "permres/rings.hpp"
#include "permres/shapes.hpp"

namespace permres {

template <class Ring>
class HeckeElement {
public:
    using value_type = typename Ring::value_type;

    HeckeElement(Ring ring, int r) : ring_(std::move(ring)), r_(r) {}
    static HeckeElement basis(Ring ring, const Permutation& w) {
        HeckeElement h(ring, w.r());
        h.add_term(w, h.ring_.one());
        return h;
    }
    static HeckeElement one(Ring ring, int r) { return basis(std::move(ring), Permutation(r)); }

    const Ring& ring() const { return ring_; }
    int r() const { return r_; }
    const std::unordered_map<Permutation, value_type>& support() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    value_type coefficient(const Permutation& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    void add_term(const Permutation& w, const value_type& c) {
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    HeckeElement& operator+=(const HeckeElement& other) {
        for (const auto& [w, c] : other.terms_) add_term(w, c);
        return *this;
    }
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) {
        for (const auto& [w, c] : b.terms_) a.add_term(w, a.ring_.neg(c));
        return a;
    }
    HeckeElement scaled(const value_type& c) const {
        HeckeElement out(ring_, r_);
        for (const auto& [w, x] : terms_) out.add_term(w, ring_.mul(x, c));
        return out;
    }

    bool operator==(const HeckeElement& other) const { return r_ == other.r_ && terms_ == other.terms_; }

    /// Terms sorted by (length, one-line).
    std::vector<std::pair<Permutation, value_type>> sorted_terms() const {
        std::vector<std::pair<Permutation, value_type>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return length_lex_less(a.first, b.first); });
        return out;
    }

private:
    Ring ring_;
    int r_;
    std::unordered_map<Permutation, value_type> terms_;
};

/// h T_s by the defining rule.
template <class Ring>
HeckeElement<Ring> mul_by_Ts(const HeckeElement<Ring>& h, int s) {
    if (s < 1 || s >= h.r()) throw std::invalid_argument("simple index out of range");
    const Ring& R = h.ring();
    const auto q = R.q_power(1);
    const auto q_minus_1 = R.sub(q, R.one());
    HeckeElement<Ring> out(R, h.r());
    for (const auto& [w, c] : h.support()) {
        Permutation ws = w.times_simple(s);
        if (w.right_ascent(s)) {
            out.add_term(ws, c);
        } else {
            out.add_term(ws, R.mul(c, q));
            out.add_term(w, R.mul(c, q_minus_1));
        }
    }
    return out;
}

template <class Ring>
HeckeElement<Ring> mul(const HeckeElement<Ring>& a, const HeckeElement<Ring>& b) {
    if (a.r() != b.r()) throw std::invalid_argument("Hecke product: rank mismatch");
    HeckeElement<Ring> out(a.ring(), a.r());
    for (const auto& [w, c] : b.support()) {
        HeckeElement<Ring> partial = a;
        for (int s : reduced_word(w)) partial = mul_by_Ts(partial, s);
        out += partial.scaled(c);
    }
    return out;
}

template <class Ring>
HeckeElement<Ring> x_elem(const Ring& ring, const Composition& lambda) {
    HeckeElement<Ring> h(ring, lambda.size());
    for (const auto& w : enumerate_W_lambda(lambda)) h.add_term(w, ring.one());
    return h;
}

template <class Ring>
HeckeElement<Ring> y_elem(const Ring& ring, const Composition& lambda) {
    HeckeElement<Ring> h(ring, lambda.size());
    for (const auto& w : enumerate_W_lambda(lambda)) {
        int l = w.length();
        auto c = ring.q_power(-l);
        h.add_term(w, l % 2 ? ring.neg(c) : c);
    }
    return h;
}

/// x_λ T_{w_λ} y_{λ'}; λ must be a partition.
template <class Ring>
HeckeElement<Ring> z_elem(const Ring& ring, const Composition& lambda) {
    if (!lambda.is_partition()) throw std::invalid_argument("z_elem needs a partition");
    auto xt = mul(x_elem(ring, lambda), HeckeElement<Ring>::basis(ring, w_lambda(lambda)));
    return mul(xt, y_elem(ring, dual(lambda)));
}

/// `c * T[1 3 2] + ...` (Laurent coefficients).
std::string render(const HeckeElement<LaurentRing>& h);

}  // namespace permres
