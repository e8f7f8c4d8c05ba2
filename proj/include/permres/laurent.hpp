#pragma once

// Exact scalars in Z[q, q^-1] and its fraction field.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permres {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An element of Z[q, q^-1], stored as a sparse term list sorted by ascending
/// exponent. Zero coefficients are never stored; zero is the empty list.
class LaurentScalar {
public:
    struct Term {
        int exponent;
        BigInt coefficient;
        bool operator==(const Term&) const = default;
    };

    LaurentScalar() = default;
    LaurentScalar(long long constant);  // NOLINT: implicit from integers is intended
    LaurentScalar(const BigInt& constant);
    static LaurentScalar monomial(const BigInt& coefficient, int exponent);
    /// Build from arbitrary (exponent, coefficient) pairs; duplicates are summed.
    static LaurentScalar from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True for c*q^k with c = +1 or -1, the units of the ring.
    bool is_unit() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    int min_exponent() const;
    int max_exponent() const;
    BigInt coefficient(int exponent) const;

    LaurentScalar shifted(int k) const;  // multiply by q^k
    LaurentScalar operator-() const;
    LaurentScalar& operator+=(const LaurentScalar& other);
    LaurentScalar& operator-=(const LaurentScalar& other);
    LaurentScalar& operator*=(const LaurentScalar& other);
    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
    bool operator==(const LaurentScalar& other) const = default;

    std::size_t hash() const;
    /// `2*q^3 - q + 1`, exponents descending.
    std::string to_string() const;
    /// `{exp:coef,...}`, exponents ascending; the matrix export form.
    std::string to_term_map() const;
    static LaurentScalar parse_term_map(const std::string& text);

private:
    void add_scaled(const LaurentScalar& other, int sign);
    std::vector<Term> terms_;
};

LaurentScalar q_power(int k);

/// Returns c with b*c == a. Throws std::domain_error if b is zero or does not
/// divide a in Z[q, q^-1].
LaurentScalar laurent_divide_exact(const LaurentScalar& a, const LaurentScalar& b);

std::ostream& operator<<(std::ostream& os, const LaurentScalar& x);

/// Element of the fraction field of Z[q, q^-1]. No cancellation is performed;
/// equality is decided by cross multiplication.
class FractionScalar {
public:
    FractionScalar() : numerator_(0), denominator_(1) {}
    FractionScalar(LaurentScalar numerator);  // NOLINT
    FractionScalar(LaurentScalar numerator, LaurentScalar denominator);

    const LaurentScalar& numerator() const { return numerator_; }
    const LaurentScalar& denominator() const { return denominator_; }
    bool is_zero() const { return numerator_.is_zero(); }

    FractionScalar operator-() const { return {-numerator_, denominator_}; }
    friend FractionScalar operator+(const FractionScalar& a, const FractionScalar& b);
    friend FractionScalar operator-(const FractionScalar& a, const FractionScalar& b);
    friend FractionScalar operator*(const FractionScalar& a, const FractionScalar& b);
    friend FractionScalar operator/(const FractionScalar& a, const FractionScalar& b);
    friend bool operator==(const FractionScalar& a, const FractionScalar& b);

private:
    void normalize_units();
    LaurentScalar numerator_;
    LaurentScalar denominator_;
};

}  // namespace permres

template <>
struct std::hash<permres::LaurentScalar> {
    std::size_t operator()(const permres::LaurentScalar& x) const { return x.hash(); }
};
