#include "permres/rings.hpp"

#include <sstream>
#include <stdexcept>

namespace permres {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exponent, std::uint32_t p) {
    std::uint64_t result = 1 % p;
    std::uint64_t b = base % p;
    while (exponent) {
        if (exponent & 1) result = result * b % p;
        b = b * b % p;
        exponent >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

namespace {

std::uint32_t reduce_signed(std::int64_t v, std::uint32_t p) {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    return static_cast<std::uint32_t>(m);
}

std::uint32_t reduce_big(const BigInt& v, std::uint32_t p) {
    BigInt m = v % p;
    if (m < 0) m += p;
    return static_cast<std::uint32_t>(m);
}

Rational rational_power(const Rational& q0, int k) {
    Rational base = k >= 0 ? q0 : Rational(1) / q0;
    Rational result = 1;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) result *= base;
    return result;
}

std::string rational_text(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

Specialization Specialization::generic() { return {}; }

Specialization Specialization::integer(int q0) {
    if (q0 != 1 && q0 != -1)
        throw std::invalid_argument("integer specialization needs q0 = 1 or -1");
    Specialization s;
    s.kind = Kind::Integer;
    s.q0 = q0;
    return s;
}

Specialization Specialization::rational(const Rational& q0) {
    if (q0 == 0) throw std::invalid_argument("q0 = 0 is not invertible");
    Specialization s;
    s.kind = Kind::Rational;
    s.q0 = q0;
    return s;
}

Specialization Specialization::prime(std::uint32_t p, std::int64_t q0) {
    if (!is_prime(p) || p > (1u << 31)) throw std::invalid_argument("not a usable prime: " + std::to_string(p));
    std::uint32_t r = reduce_signed(q0, p);
    if (r == 0) throw std::invalid_argument("q0 is not invertible mod " + std::to_string(p));
    Specialization s;
    s.kind = Kind::Prime;
    s.p = p;
    s.q0_mod = r;
    return s;
}

Specialization Specialization::parse(const std::string& text) {
    try {
        if (text == "generic") return generic();
        if (text == "q1-int") return integer(1);
        if (text.rfind("int:", 0) == 0) return integer(std::stoi(text.substr(4)));
        if (text.rfind("rat:", 0) == 0) return rational(Rational(text.substr(4)));
        if (text.rfind("fp:", 0) == 0) {
            auto comma = text.find(',', 3);
            if (comma == std::string::npos) throw std::invalid_argument("fp needs p,q0");
            long long p = std::stoll(text.substr(3, comma - 3));
            if (p <= 0) throw std::invalid_argument("bad prime");
            return prime(static_cast<std::uint32_t>(p), std::stoll(text.substr(comma + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad ring descriptor: " + text);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("bad ring descriptor: " + text);
    } catch (const std::runtime_error&) {
        // boost rejects malformed rationals this way
        throw std::invalid_argument("bad ring descriptor: " + text);
    }
    throw std::invalid_argument("bad ring descriptor: " + text);
}

std::string Specialization::name() const {
    switch (kind) {
        case Kind::Generic: return "generic";
        case Kind::Integer: return "int:" + rational_text(q0);
        case Kind::Rational: return "rat:" + rational_text(q0);
        case Kind::Prime: return "fp:" + std::to_string(p) + "," + std::to_string(q0_mod);
    }
    return "?";
}

bool Specialization::operator==(const Specialization& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::Generic: return true;
        case Kind::Integer:
        case Kind::Rational: return q0 == other.q0;
        case Kind::Prime: return p == other.p && q0_mod == other.q0_mod;
    }
    return false;
}

std::vector<Specialization> default_battery() {
    std::vector<Specialization> out;
    for (const char* q : {"1", "-1", "2", "1/2"}) out.push_back(Specialization::rational(Rational(q)));
    for (std::uint32_t p : {3u, 5u})
        for (std::uint32_t q = 1; q < p; ++q) out.push_back(Specialization::prime(p, q));
    for (std::int64_t q : {1, 100, 2, 51, 10, 37}) out.push_back(Specialization::prime(101, q));
    return out;
}

SpecializedScalar::SpecializedScalar(Specialization target, Rational value)
    : target_(std::move(target)), value_(std::move(value)) {
    if (target_.kind != Specialization::Kind::Integer && target_.kind != Specialization::Kind::Rational)
        throw std::invalid_argument("rational value needs a rational or integer target");
    if (target_.kind == Specialization::Kind::Integer &&
        boost::multiprecision::denominator(std::get<Rational>(value_)) != 1)
        throw std::invalid_argument("non-integral value in integer target");
}

SpecializedScalar::SpecializedScalar(Specialization target, std::uint32_t residue)
    : target_(std::move(target)), value_(residue) {
    if (target_.kind != Specialization::Kind::Prime)
        throw std::invalid_argument("residue needs a prime target");
    value_ = residue % target_.p;
}

bool SpecializedScalar::is_zero() const {
    if (auto* r = std::get_if<Rational>(&value_)) return *r == 0;
    return std::get<std::uint32_t>(value_) == 0;
}

const Rational& SpecializedScalar::rational() const { return std::get<Rational>(value_); }

std::uint32_t SpecializedScalar::residue() const { return std::get<std::uint32_t>(value_); }

std::string SpecializedScalar::to_string() const {
    if (auto* r = std::get_if<Rational>(&value_)) return rational_text(*r);
    return std::to_string(std::get<std::uint32_t>(value_));
}

SpecializedScalar operator+(const SpecializedScalar& a, const SpecializedScalar& b) {
    if (!(a.target_ == b.target_)) throw std::invalid_argument("mixed specializations");
    if (a.target_.kind == Specialization::Kind::Prime)
        return {a.target_, static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.residue()) + b.residue()) %
                                                      a.target_.p)};
    return {a.target_, a.rational() + b.rational()};
}

SpecializedScalar operator*(const SpecializedScalar& a, const SpecializedScalar& b) {
    if (!(a.target_ == b.target_)) throw std::invalid_argument("mixed specializations");
    if (a.target_.kind == Specialization::Kind::Prime)
        return {a.target_,
                static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.residue()) * b.residue() % a.target_.p)};
    return {a.target_, a.rational() * b.rational()};
}

bool operator==(const SpecializedScalar& a, const SpecializedScalar& b) {
    return a.target_ == b.target_ && a.value_ == b.value_;
}

Rational evaluate_rational(const LaurentScalar& p, const Rational& q0) {
    if (q0 == 0) throw std::domain_error("evaluation at q0 = 0");
    Rational sum = 0;
    for (const auto& t : p.terms()) sum += Rational(t.coefficient) * rational_power(q0, t.exponent);
    return sum;
}

std::uint32_t evaluate_mod(const LaurentScalar& p, std::uint32_t prime, std::uint32_t q0) {
    std::uint32_t q0_inv = inv_mod(q0, prime);
    std::uint64_t sum = 0;
    for (const auto& t : p.terms()) {
        std::uint32_t power = t.exponent >= 0 ? pow_mod(q0, static_cast<std::uint64_t>(t.exponent), prime)
                                              : pow_mod(q0_inv, static_cast<std::uint64_t>(-t.exponent), prime);
        sum = (sum + static_cast<std::uint64_t>(reduce_big(t.coefficient, prime)) * power) % prime;
    }
    return static_cast<std::uint32_t>(sum);
}

SpecializedScalar specialize(const LaurentScalar& p, const Specialization& target) {
    switch (target.kind) {
        case Specialization::Kind::Generic: throw std::invalid_argument("cannot specialize to the generic ring");
        case Specialization::Kind::Integer:
        case Specialization::Kind::Rational: return {target, evaluate_rational(p, target.q0)};
        case Specialization::Kind::Prime: return {target, evaluate_mod(p, target.p, target.q0_mod)};
    }
    throw std::logic_error("unreachable");
}

RationalRing::RationalRing(Rational q0_) : q0(std::move(q0_)) {
    if (q0 == 0) throw std::invalid_argument("q0 = 0 is not invertible");
}

Rational RationalRing::q_power(int k) const { return rational_power(q0, k); }

std::string RationalRing::name() const { return "rat:" + rational_text(q0); }

PrimeField::PrimeField(std::uint32_t p_, std::int64_t q0_) : p(p_) {
    if (!is_prime(p) || p > (1u << 31)) throw std::invalid_argument("not a usable prime: " + std::to_string(p));
    q0 = reduce_signed(q0_, p);
    if (q0 == 0) throw std::invalid_argument("q0 is not invertible mod " + std::to_string(p));
    q0_inv = inv_mod(q0, p);
}

std::string PrimeField::name() const { return "fp:" + std::to_string(p) + "," + std::to_string(q0); }

}  // namespace permres
