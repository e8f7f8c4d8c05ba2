#pragma once

// The permutation modules M^λ = x_λ H with basis x_λ T_d (d ∈ D_λ), and the
// Specht basis z_λ T_d inside them.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "permres/hecke.hpp"
#include "permres/tableau.hpp"

namespace permres {

/// Cached combinatorial data of one composition.
struct ShapeData {
    enum class Move : std::uint8_t { Up, Down, Stay };
    struct Step {
        int target;
        Move move;
    };

    Composition shape;
    int r = 0;
    std::vector<Permutation> D;  // D_λ ordered by (length, one-line)
    std::vector<int> lengths;
    std::vector<Permutation> W;  // W_λ
    std::vector<int> tail_to_d;  // T^rs(λ) in lex order -> D index
    std::vector<int> d_to_tail;
    std::vector<Step> steps;     // steps[d * (r - 1) + s - 1]
    std::unordered_map<std::uint64_t, int> index;

    int size() const { return static_cast<int>(D.size()); }
    /// D index of d, or -1 when d ∉ D_λ.
    int index_of(const Permutation& d) const;
    const Step& step(int d, int s) const { return steps[static_cast<std::size_t>(d * (r - 1) + s - 1)]; }
};

const ShapeData& shape_data(const Composition& lambda);

/// Drops every cached shape, hom and structure-constant table.
void clear_caches();

/// v T_s on a dense coordinate vector over D_λ.
template <class Ring>
std::vector<typename Ring::value_type> act_simple_dense(const ShapeData& sd, const Ring& R,
                                                        const std::vector<typename Ring::value_type>& v,
                                                        int s) {
    const auto q = R.q_power(1);
    const auto q_minus_1 = R.sub(q, R.one());
    std::vector<typename Ring::value_type> out(v.size(), R.zero());
    for (int d = 0; d < sd.size(); ++d) {
        const auto& c = v[static_cast<std::size_t>(d)];
        if (R.is_zero(c)) continue;
        const auto& st = sd.step(d, s);
        auto& target = out[static_cast<std::size_t>(st.target)];
        switch (st.move) {
            case ShapeData::Move::Up: target = R.add(target, c); break;
            case ShapeData::Move::Down:
                target = R.add(target, R.mul(q, c));
                out[static_cast<std::size_t>(d)] = R.add(out[static_cast<std::size_t>(d)], R.mul(q_minus_1, c));
                break;
            case ShapeData::Move::Stay: target = R.add(target, R.mul(q, c)); break;
        }
    }
    return out;
}

/// An element of M^λ in the basis x_λ T_d.
template <class Ring>
class MVector {
public:
    using value_type = typename Ring::value_type;

    MVector(Ring ring, Composition shape)
        : ring_(std::move(ring)), shape_(std::move(shape)),
          coords_(static_cast<std::size_t>(shape_data(shape_).size()), ring_.zero()) {}
    static MVector basis(Ring ring, const Composition& shape, int d) {
        MVector v(std::move(ring), shape);
        v.coords_.at(static_cast<std::size_t>(d)) = v.ring_.one();
        return v;
    }

    const Ring& ring() const { return ring_; }
    const Composition& shape() const { return shape_; }
    const std::vector<value_type>& coords() const { return coords_; }
    std::vector<value_type>& coords() { return coords_; }
    bool operator==(const MVector& other) const { return shape_ == other.shape_ && coords_ == other.coords_; }

private:
    Ring ring_;
    Composition shape_;
    std::vector<value_type> coords_;
};

template <class Ring>
MVector<Ring> act_simple(const MVector<Ring>& v, int s) {
    const auto& sd = shape_data(v.shape());
    if (s < 1 || s >= sd.r) throw std::invalid_argument("simple index out of range");
    MVector<Ring> out(v.ring(), v.shape());
    out.coords() = act_simple_dense(sd, v.ring(), v.coords(), s);
    return out;
}

/// v T_w along a reduced word of w.
template <class Ring>
MVector<Ring> act(const MVector<Ring>& v, const Permutation& w) {
    MVector<Ring> out = v;
    for (int s : reduced_word(w)) out = act_simple(out, s);
    return out;
}

/// The element of H: x_λ T_d = sum over w1 ∈ W_λ of T_{w1 d}.
template <class Ring>
HeckeElement<Ring> lift(const MVector<Ring>& v) {
    const auto& sd = shape_data(v.shape());
    const Ring& R = v.ring();
    HeckeElement<Ring> h(R, sd.r);
    for (int d = 0; d < sd.size(); ++d) {
        const auto& c = v.coords()[static_cast<std::size_t>(d)];
        if (R.is_zero(c)) continue;
        for (const auto& w1 : sd.W) h.add_term(w1 * sd.D[static_cast<std::size_t>(d)], c);
    }
    return h;
}

/// Writes h ∈ x_λ H in the basis x_λ T_d. Throws std::domain_error("not in M^λ")
/// when the T_w coefficients are not constant on the cosets W_λ d.
template <class Ring>
MVector<Ring> reduce_to_basis(const HeckeElement<Ring>& h, const Composition& lambda) {
    const auto& sd = shape_data(lambda);
    if (h.r() != sd.r) throw std::invalid_argument("reduce_to_basis: rank mismatch");
    const Ring& R = h.ring();
    MVector<Ring> out(R, lambda);
    std::vector<int> count(static_cast<std::size_t>(sd.size()), 0);
    for (const auto& [w, c] : h.support()) {
        auto [w1, d] = coset_decompose(w, lambda);
        int idx = sd.index_of(d);
        auto expected = h.coefficient(d);
        if (!(expected == c)) throw std::domain_error("not in M^lambda: coefficient differs within a coset");
        out.coords()[static_cast<std::size_t>(idx)] = expected;
        ++count[static_cast<std::size_t>(idx)];
    }
    for (int d = 0; d < sd.size(); ++d)
        if (count[static_cast<std::size_t>(d)] != 0 &&
            count[static_cast<std::size_t>(d)] != static_cast<int>(sd.W.size()))
            throw std::domain_error("not in M^lambda: coset only partly supported");
    return out;
}

/// Basis z_λ T_d (d a prefix of w_{λ'}), indexed by the standard tableaux
/// t^λ w_λ d in lex order. Empty for non-partitions.
struct SpechtBasis {
    Composition shape;
    std::vector<Permutation> d;
    std::vector<Tableau> index_tableaux;
    std::vector<std::vector<LaurentScalar>> vectors;  // coordinates over D_λ
};

SpechtBasis specht_basis(const Composition& lambda);

struct LeadingTermReport {
    bool ok = true;
    std::string failure;  // names (λ, d, e) on a violation
};

/// Coefficient q^{l(d)} at w_λ d and support only at w_λ d or longer e.
LeadingTermReport leading_term_check(const Composition& lambda);

/// Row per standard tableau (lex order), column per e ∈ D_λ: the α_{d,e}.
std::vector<std::vector<LaurentScalar>> psi_matrix(const Composition& lambda);

}  // namespace permres
