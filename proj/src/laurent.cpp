#include "permres/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permres {

LaurentScalar::LaurentScalar(long long constant) {
    if (constant != 0) terms_.push_back({0, BigInt(constant)});
}

LaurentScalar::LaurentScalar(const BigInt& constant) {
    if (constant != 0) terms_.push_back({0, constant});
}

LaurentScalar LaurentScalar::monomial(const BigInt& coefficient, int exponent) {
    LaurentScalar x;
    if (coefficient != 0) x.terms_.push_back({exponent, coefficient});
    return x;
}

LaurentScalar LaurentScalar::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    LaurentScalar x;
    for (auto& t : terms) {
        if (!x.terms_.empty() && x.terms_.back().exponent == t.exponent)
            x.terms_.back().coefficient += t.coefficient;
        else
            x.terms_.push_back(std::move(t));
        if (x.terms_.back().coefficient == 0) x.terms_.pop_back();
    }
    return x;
}

LaurentScalar q_power(int k) { return LaurentScalar::monomial(1, k); }

bool LaurentScalar::is_one() const {
    return terms_.size() == 1 && terms_[0].exponent == 0 && terms_[0].coefficient == 1;
}

bool LaurentScalar::is_unit() const {
    return terms_.size() == 1 && (terms_[0].coefficient == 1 || terms_[0].coefficient == -1);
}

int LaurentScalar::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero");
    return terms_.front().exponent;
}

int LaurentScalar::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("max_exponent of zero");
    return terms_.back().exponent;
}

BigInt LaurentScalar::coefficient(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent) return it->coefficient;
    return 0;
}

LaurentScalar LaurentScalar::shifted(int k) const {
    LaurentScalar x = *this;
    for (auto& t : x.terms_) t.exponent += k;
    return x;
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar x = *this;
    for (auto& t : x.terms_) t.coefficient = -t.coefficient;
    return x;
}

void LaurentScalar::add_scaled(const LaurentScalar& other, int sign) {
    if (other.terms_.empty()) return;
    if (terms_.empty()) {
        terms_ = other.terms_;
        if (sign < 0)
            for (auto& t : terms_) t.coefficient = -t.coefficient;
        return;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->exponent < a->exponent) {
            merged.push_back({b->exponent, sign > 0 ? b->coefficient : BigInt(-b->coefficient)});
            ++b;
        } else {
            BigInt c = sign > 0 ? BigInt(a->coefficient + b->coefficient) : BigInt(a->coefficient - b->coefficient);
            if (c != 0) merged.push_back({a->exponent, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& other) {
    add_scaled(other, +1);
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& other) {
    add_scaled(other, -1);
    return *this;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    LaurentScalar x;
    if (a.terms_.empty() || b.terms_.empty()) return x;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
        const auto& other = a.terms_.size() == 1 ? b : a;
        x.terms_.reserve(other.terms_.size());
        for (const auto& t : other.terms_)
            x.terms_.push_back({t.exponent + single.exponent, t.coefficient * single.coefficient});
        return x;
    }
    const int low = a.terms_.front().exponent + b.terms_.front().exponent;
    const int high = a.terms_.back().exponent + b.terms_.back().exponent;
    std::vector<BigInt> dense(static_cast<std::size_t>(high - low + 1));
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            dense[static_cast<std::size_t>(s.exponent + t.exponent - low)] += s.coefficient * t.coefficient;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) x.terms_.push_back({low + static_cast<int>(i), std::move(dense[i])});
    return x;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& other) {
    *this = *this * other;
    return *this;
}

std::size_t LaurentScalar::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& t : terms_) {
        h ^= std::hash<int>{}(t.exponent) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= boost::multiprecision::hash_value(t.coefficient) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
}

std::string LaurentScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BigInt c = it->coefficient;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (it->exponent == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "q";
        if (it->exponent != 1) os << "^" << it->exponent;
    }
    return os.str();
}

std::string LaurentScalar::to_term_map() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << ",";
        os << terms_[i].exponent << ":" << terms_[i].coefficient;
    }
    os << "}";
    return os.str();
}

LaurentScalar LaurentScalar::parse_term_map(const std::string& text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("malformed term map: " + text);
    std::vector<Term> terms;
    std::string body = text.substr(1, text.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("malformed term: " + item);
        terms.push_back({std::stoi(item.substr(0, colon)), BigInt(item.substr(colon + 1))});
    }
    return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentScalar& x) { return os << x.to_string(); }

LaurentScalar laurent_divide_exact(const LaurentScalar& a, const LaurentScalar& b) {
    if (b.is_zero()) throw std::domain_error("laurent_divide_exact: division by zero");
    if (a.is_zero()) return {};
    if (b.is_monomial()) {
        const auto& t = b.terms()[0];
        std::vector<LaurentScalar::Term> out;
        out.reserve(a.term_count());
        for (const auto& s : a.terms()) {
            BigInt rem;
            BigInt quo;
            boost::multiprecision::divide_qr(s.coefficient, t.coefficient, quo, rem);
            if (rem != 0) throw std::domain_error("laurent_divide_exact: not divisible");
            out.push_back({s.exponent - t.exponent, std::move(quo)});
        }
        return LaurentScalar::from_terms(std::move(out));
    }
    // Long division from the top exponent down; the units q^k are stripped
    // implicitly by working relative to the minimal exponents.
    const int b_low = b.min_exponent();
    const int b_high = b.max_exponent();
    const BigInt& lead = b.terms().back().coefficient;
    LaurentScalar rem = a;
    std::vector<LaurentScalar::Term> quotient;
    while (!rem.is_zero()) {
        if (rem.max_exponent() - rem.min_exponent() < b_high - b_low)
            throw std::domain_error("laurent_divide_exact: not divisible");
        const auto& top = rem.terms().back();
        BigInt r;
        BigInt c;
        boost::multiprecision::divide_qr(top.coefficient, lead, c, r);
        if (r != 0) throw std::domain_error("laurent_divide_exact: not divisible");
        const int e = top.exponent - b_high;
        quotient.push_back({e, c});
        rem -= LaurentScalar::monomial(c, e) * b;
    }
    return LaurentScalar::from_terms(std::move(quotient));
}

FractionScalar::FractionScalar(LaurentScalar numerator)
    : numerator_(std::move(numerator)), denominator_(1) {}

FractionScalar::FractionScalar(LaurentScalar numerator, LaurentScalar denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_.is_zero()) throw std::domain_error("FractionScalar: zero denominator");
    normalize_units();
}

void FractionScalar::normalize_units() {
    // Pull a monomial denominator into the numerator; keeps small fractions small.
    if (denominator_.is_unit()) {
        const auto& t = denominator_.terms()[0];
        numerator_ = numerator_.shifted(-t.exponent);
        if (t.coefficient < 0) numerator_ = -numerator_;
        denominator_ = 1;
    }
    if (numerator_.is_zero()) denominator_ = 1;
}

FractionScalar operator+(const FractionScalar& a, const FractionScalar& b) {
    if (a.denominator_ == b.denominator_) return {a.numerator_ + b.numerator_, a.denominator_};
    return {a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
            a.denominator_ * b.denominator_};
}

FractionScalar operator-(const FractionScalar& a, const FractionScalar& b) { return a + (-b); }

FractionScalar operator*(const FractionScalar& a, const FractionScalar& b) {
    return {a.numerator_ * b.numerator_, a.denominator_ * b.denominator_};
}

FractionScalar operator/(const FractionScalar& a, const FractionScalar& b) {
    if (b.is_zero()) throw std::domain_error("FractionScalar: division by zero");
    return {a.numerator_ * b.denominator_, a.denominator_ * b.numerator_};
}

bool operator==(const FractionScalar& a, const FractionScalar& b) {
    return a.numerator_ * b.denominator_ == b.numerator_ * a.denominator_;
}

}  // namespace permres
