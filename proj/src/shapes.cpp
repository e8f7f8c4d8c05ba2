#include "permres/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace permres {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_) {
        if (x < 0) throw std::invalid_argument("negative part in composition");
        total_ += x;
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Composition Composition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    if (text.empty()) throw std::invalid_argument("empty composition");
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 4)
            throw std::invalid_argument("malformed composition: " + text);
        parts.push_back(std::stoi(item));
    }
    if (text.back() == ',') throw std::invalid_argument("malformed composition: " + text);
    return Composition(parts);
}

bool Composition::is_partition() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1]) return false;
    return true;
}

Composition Composition::sorted() const {
    auto p = parts_;
    std::sort(p.begin(), p.end(), std::greater<>());
    return Composition(p);
}

int Composition::block_start(int i) const {
    int s = 0;
    for (int k = 0; k < i && k < length(); ++k) s += parts_[static_cast<std::size_t>(k)];
    return s;
}

std::vector<int> Composition::block_of() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(total_));
    for (int i = 0; i < length(); ++i)
        for (int k = 0; k < parts_[static_cast<std::size_t>(i)]; ++k) out.push_back(i);
    return out;
}

std::string Composition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

bool dominance_leq(const Composition& lambda, const Composition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("dominance between different sizes");
    const int len = std::max(lambda.length(), mu.length());
    int a = 0;
    int b = 0;
    for (int i = 0; i < len; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a > b) return false;
    }
    return true;
}

bool dominance_less(const Composition& lambda, const Composition& mu) {
    return !(lambda == mu) && dominance_leq(lambda, mu);
}

Composition dual(const Composition& lambda) {
    int top = 0;
    for (int x : lambda.parts()) top = std::max(top, x);
    std::vector<int> out;
    for (int i = 1; i <= top; ++i) {
        int c = 0;
        for (int x : lambda.parts())
            if (x >= i) ++c;
        out.push_back(c);
    }
    return Composition(out);
}

bool dj_leq(const Composition& lambda, const Composition& mu) { return dominance_leq(dual(mu), dual(lambda)); }

std::vector<Composition> compositions_of(int r, int max_length) {
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            if (!cur.empty() && cur.back() != 0) out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_length) return;
        for (int x = 0; x <= remaining; ++x) {
            cur.push_back(x);
            rec(remaining - x);
            cur.pop_back();
        }
    };
    if (r > 0) rec(r);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> partitions_of(int r) {
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int x = std::min(cap, remaining); x >= 1; --x) {
            cur.push_back(x);
            rec(remaining - x, x);
            cur.pop_back();
        }
    };
    rec(r, r);
    return out;
}

Composition bar(const Composition& mu) {
    std::vector<Composition> above;
    for (const auto& nu : partitions_of(mu.size()))
        if (dominance_leq(mu, nu)) above.push_back(nu);
    for (const auto& nu : above) {
        bool least = true;
        for (const auto& other : above)
            if (!dominance_leq(nu, other)) {
                least = false;
                break;
            }
        if (least) return nu;
    }
    throw std::logic_error("no least dominating partition");
}

bool is_quasi_partition(const Composition& mu) { return mu.sorted() == bar(mu); }

bool is_tame(const Composition& lambda) {
    for (const auto& mu : dominating_compositions(lambda))
        if (!is_quasi_partition(mu)) return false;
    return true;
}

std::vector<Composition> dominating_compositions(const Composition& lambda) {
    std::vector<Composition> out;
    for (const auto& mu : compositions_of(lambda.size(), std::max(1, lambda.length())))
        if (dominance_leq(lambda, mu)) out.push_back(mu);
    return out;
}

std::vector<ChainOfShapes> chains(const Composition& lambda, int n) {
    std::vector<ChainOfShapes> out;
    if (n < 0) return out;
    const auto up = dominating_compositions(lambda);
    ChainOfShapes cur{lambda};
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == n + 1) {
            out.push_back(cur);
            return;
        }
        const Composition last = cur.back();
        for (const auto& mu : up) {
            if (!dominance_less(last, mu)) continue;
            cur.push_back(mu);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

int a_of(const Composition& lambda) {
    const auto up = dominating_compositions(lambda);
    std::map<Composition, int> memo;
    std::function<int(const Composition&)> height = [&](const Composition& c) {
        if (auto it = memo.find(c); it != memo.end()) return it->second;
        int best = 0;
        for (const auto& mu : up)
            if (dominance_less(c, mu)) best = std::max(best, 1 + height(mu));
        memo[c] = best;
        return best;
    };
    return height(lambda);
}

long long multinomial(const Composition& lambda) {
    long long v = 1;
    int n = 0;
    for (int x : lambda.parts())
        for (int k = 1; k <= x; ++k) {
            ++n;
            v = v * n / k;
        }
    return v;
}

}  // namespace permres
