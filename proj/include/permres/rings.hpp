#pragma once

// Coefficient rings: the generic Laurent ring and its specializations q -> q0.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "permres/laurent.hpp"

namespace permres {

/// Describes a target for q -> q0. Parsed from `generic`, `q1-int`, `int:1`,
/// `int:-1`, `rat:2`, `rat:1/2`, `fp:5,2`.
struct Specialization {
    enum class Kind { Generic, Integer, Rational, Prime };
    Kind kind = Kind::Generic;
    Rational q0 = 1;     // Integer and Rational kinds
    std::uint32_t p = 0;  // Prime kind
    std::uint32_t q0_mod = 0;

    static Specialization generic();
    static Specialization integer(int q0);            // q0 must be 1 or -1
    static Specialization rational(const Rational& q0);
    static Specialization prime(std::uint32_t p, std::int64_t q0);
    static Specialization parse(const std::string& text);

    bool is_field() const { return kind == Kind::Rational || kind == Kind::Prime; }
    std::string name() const;
    bool operator==(const Specialization& other) const;
};

/// The default battery: Q at q0 in {1, -1, 2, 1/2} and F_p for p in {3, 5, 101}.
/// For p = 3, 5 every nonzero q0 is included; for p = 101 the listed sample.
std::vector<Specialization> default_battery();

bool is_prime(std::uint64_t n);
std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exponent, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// Value in a specialized target ring together with the target itself.
class SpecializedScalar {
public:
    SpecializedScalar(Specialization target, Rational value);
    SpecializedScalar(Specialization target, std::uint32_t residue);

    const Specialization& target() const { return target_; }
    bool is_zero() const;
    /// Rational value (Integer and Rational kinds).
    const Rational& rational() const;
    /// Residue (Prime kind).
    std::uint32_t residue() const;
    std::string to_string() const;

    friend SpecializedScalar operator+(const SpecializedScalar& a, const SpecializedScalar& b);
    friend SpecializedScalar operator*(const SpecializedScalar& a, const SpecializedScalar& b);
    friend bool operator==(const SpecializedScalar& a, const SpecializedScalar& b);

private:
    Specialization target_;
    std::variant<Rational, std::uint32_t> value_;
};

/// Evaluates p at q = q0. Throws std::invalid_argument for the generic target.
SpecializedScalar specialize(const LaurentScalar& p, const Specialization& target);

Rational evaluate_rational(const LaurentScalar& p, const Rational& q0);
std::uint32_t evaluate_mod(const LaurentScalar& p, std::uint32_t prime, std::uint32_t q0);

// Ring objects used to instantiate the templated algorithms. Each provides
// value_type, zero, one, add, sub, mul, neg, is_zero, from_laurent and name;
// fields additionally provide inv.

struct LaurentRing {
    using value_type = LaurentScalar;
    static constexpr bool is_field = false;
    value_type zero() const { return {}; }
    value_type one() const { return 1; }
    value_type q_power(int k) const { return permres::q_power(k); }
    value_type from_laurent(const LaurentScalar& x) const { return x; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    std::string name() const { return "generic"; }
};

struct RationalRing {
    using value_type = Rational;
    static constexpr bool is_field = true;
    Rational q0;
    explicit RationalRing(Rational q0_);
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type q_power(int k) const;
    value_type from_laurent(const LaurentScalar& x) const { return evaluate_rational(x, q0); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const { return 1 / a; }
    bool is_zero(const value_type& a) const { return a == 0; }
    std::string name() const;
};

struct PrimeField {
    using value_type = std::uint32_t;
    static constexpr bool is_field = true;
    std::uint32_t p;
    std::uint32_t q0;
    std::uint32_t q0_inv;
    PrimeField(std::uint32_t p_, std::int64_t q0_);
    value_type zero() const { return 0; }
    value_type one() const { return 1 % p; }
    value_type q_power(int k) const {
        return k >= 0 ? pow_mod(q0, static_cast<std::uint64_t>(k), p)
                      : pow_mod(q0_inv, static_cast<std::uint64_t>(-static_cast<long long>(k)), p);
    }
    value_type from_laurent(const LaurentScalar& x) const { return evaluate_mod(x, p, q0); }
    value_type add(value_type a, value_type b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type inv(value_type a) const { return inv_mod(a, p); }
    bool is_zero(value_type a) const { return a == 0; }
    std::string name() const;
};

}  // namespace permres
