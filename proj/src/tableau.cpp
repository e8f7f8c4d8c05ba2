#include "permres/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "permres/parabolic.hpp"

namespace permres {

namespace {

std::vector<std::vector<int>> split_rows(const Composition& shape, const std::vector<int>& flat) {
    std::vector<std::vector<int>> rows;
    std::size_t p = 0;
    for (int i = 0; i < shape.length(); ++i) {
        rows.emplace_back(flat.begin() + static_cast<long>(p), flat.begin() + static_cast<long>(p) + shape[i]);
        p += static_cast<std::size_t>(shape[i]);
    }
    return rows;
}

std::string render_rows(const std::vector<std::vector<int>>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << "/";
        os << "[";
        for (std::size_t j = 0; j < rows[i].size(); ++j) os << (j ? "," : "") << rows[i][j];
        os << "]";
    }
    return os.str();
}

std::pair<Composition, std::vector<int>> flatten(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    std::vector<int> flat;
    for (const auto& row : rows) {
        parts.push_back(static_cast<int>(row.size()));
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return {Composition(parts), flat};
}

// Box (row, column) for every box index.
std::vector<std::pair<int, int>> box_coordinates(const Composition& shape) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape[i]; ++j) out.emplace_back(i, j);
    return out;
}

}  // namespace

Tableau::Tableau(Composition shape, std::vector<int> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
    const int r = shape_.size();
    if (static_cast<int>(entries_.size()) != r) throw std::invalid_argument("tableau: wrong number of entries");
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (int x : entries_) {
        if (x < 1 || x > r || seen[static_cast<std::size_t>(x - 1)])
            throw std::invalid_argument("tableau entries must be a permutation of 1..r");
        seen[static_cast<std::size_t>(x - 1)] = true;
    }
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
    auto [shape, flat] = flatten(rows);
    return {shape, flat};
}

std::vector<std::vector<int>> Tableau::rows() const { return split_rows(shape_, entries_); }

std::string Tableau::to_string() const { return render_rows(rows()); }

Tableau t_canonical(const Composition& lambda) {
    std::vector<int> flat(static_cast<std::size_t>(lambda.size()));
    for (int p = 0; p < lambda.size(); ++p) flat[static_cast<std::size_t>(p)] = p + 1;
    return {lambda, flat};
}

Tableau act(const Tableau& t, const Permutation& w) {
    if (w.r() != t.shape().size()) throw std::invalid_argument("act: size mismatch");
    auto flat = t.entries();
    for (int& x : flat) x = w.image(x);
    return {t.shape(), flat};
}

Tableau transpose(const Tableau& t) {
    if (!t.shape().is_partition()) throw std::invalid_argument("transpose needs a partition shape");
    const Composition conj = dual(t.shape());
    std::vector<int> flat(t.entries().size());
    auto boxes = box_coordinates(t.shape());
    for (std::size_t p = 0; p < boxes.size(); ++p) {
        auto [i, j] = boxes[p];
        flat[static_cast<std::size_t>(conj.block_start(j) + i)] = t.entries()[p];
    }
    return {conj, flat};
}

bool is_row_standard(const Tableau& t) {
    const auto& s = t.shape();
    for (int i = 0; i < s.length(); ++i) {
        int b = s.block_start(i);
        for (int p = b + 1; p < b + s[i]; ++p)
            if (t.entries()[static_cast<std::size_t>(p - 1)] > t.entries()[static_cast<std::size_t>(p)]) return false;
    }
    return true;
}

bool is_standard(const Tableau& t) {
    if (!t.shape().is_partition()) return false;
    return is_row_standard(t) && is_row_standard(transpose(t));
}

Permutation tableau_to_d(const Tableau& t) {
    if (!is_row_standard(t)) throw std::invalid_argument("tableau_to_d needs a row-standard tableau");
    return Permutation::from_one_line(t.entries());
}

Tableau d_to_tableau(const Permutation& d, const Composition& lambda) {
    if (!in_D_lambda(d, lambda)) throw std::invalid_argument("d_to_tableau: d is not distinguished");
    return {lambda, d.one_line()};
}

std::vector<Tableau> enumerate_Trs(const Composition& lambda) {
    std::vector<Tableau> out;
    for (const auto& d : enumerate_D_lambda(lambda)) out.emplace_back(lambda, d.one_line());
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Tableau> enumerate_Tst(const Composition& lambda) {
    std::vector<Tableau> out;
    if (!lambda.is_partition()) return out;
    for (auto& t : enumerate_Trs(lambda))
        if (is_standard(t)) out.push_back(std::move(t));
    return out;
}

bool lex_less(const Tableau& a, const Tableau& b) {
    if (!(a.shape() == b.shape())) throw std::invalid_argument("lex_less: shape mismatch");
    return a.entries() < b.entries();
}

GeneralizedTableau::GeneralizedTableau(Composition shape, Composition content, std::vector<int> entries)
    : shape_(std::move(shape)), content_(std::move(content)), entries_(std::move(entries)) {
    if (shape_.size() != content_.size() || static_cast<int>(entries_.size()) != shape_.size())
        throw std::invalid_argument("generalized tableau: size mismatch");
    std::vector<int> count(static_cast<std::size_t>(content_.length()), 0);
    for (int x : entries_) {
        if (x < 1 || x > content_.length()) throw std::invalid_argument("generalized tableau: entry out of range");
        ++count[static_cast<std::size_t>(x - 1)];
    }
    for (int i = 0; i < content_.length(); ++i)
        if (count[static_cast<std::size_t>(i)] != content_[i])
            throw std::invalid_argument("generalized tableau: content mismatch");
}

GeneralizedTableau GeneralizedTableau::from_rows(const Composition& content, const std::vector<std::vector<int>>& rows) {
    auto [shape, flat] = flatten(rows);
    return {shape, content, flat};
}

std::vector<std::vector<int>> GeneralizedTableau::rows() const { return split_rows(shape_, entries_); }

std::string GeneralizedTableau::to_string() const { return render_rows(rows()); }

GeneralizedTableau gen_canonical(const Composition& lambda, const Composition& mu) {
    auto block = mu.block_of();
    std::vector<int> flat(block.size());
    for (std::size_t p = 0; p < block.size(); ++p) flat[p] = block[p] + 1;
    return {lambda, mu, flat};
}

GeneralizedTableau act_left(const Permutation& w, const GeneralizedTableau& t) {
    std::vector<int> flat(t.entries().size());
    for (int p = 0; p < w.r(); ++p) flat[static_cast<std::size_t>(p)] = t.entries()[static_cast<std::size_t>(w.at(p))];
    return {t.shape(), t.content(), flat};
}

bool is_row_semistandard(const GeneralizedTableau& t) {
    const auto& s = t.shape();
    for (int i = 0; i < s.length(); ++i) {
        int b = s.block_start(i);
        for (int p = b + 1; p < b + s[i]; ++p)
            if (t.entries()[static_cast<std::size_t>(p - 1)] > t.entries()[static_cast<std::size_t>(p)]) return false;
    }
    return true;
}

bool is_ascending(const GeneralizedTableau& t) {
    const auto& s = t.shape();
    for (int i = 0; i < s.length(); ++i) {
        int b = s.block_start(i);
        for (int p = b; p < b + s[i]; ++p)
            if (t.entries()[static_cast<std::size_t>(p)] < i + 1) return false;
    }
    return true;
}

bool is_gen_standard(const GeneralizedTableau& t) {
    if (!is_row_semistandard(t)) return false;
    const auto& s = t.shape();
    for (int i = 0; i + 1 < s.length(); ++i)
        for (int j = 0; j < std::min(s[i], s[i + 1]); ++j)
            if (t.entries()[static_cast<std::size_t>(s.block_start(i) + j)] >=
                t.entries()[static_cast<std::size_t>(s.block_start(i + 1) + j)])
                return false;
    return true;
}

namespace {

// Row-semistandard fillings; row i only uses values >= min_value(i).
std::vector<GeneralizedTableau> fill_rows(const Composition& lambda, const Composition& mu,
                                          const std::function<int(int)>& min_value) {
    std::vector<GeneralizedTableau> out;
    std::vector<int> remaining(mu.parts());
    std::vector<int> flat;
    const int values = mu.length();
    std::function<void(int, int, int)> rec = [&](int row, int filled, int value) {
        if (row == lambda.length()) {
            out.emplace_back(lambda, mu, flat);
            return;
        }
        if (filled == lambda[row]) {
            rec(row + 1, 0, 1);
            return;
        }
        for (int v = std::max(value, min_value(row)); v <= values; ++v) {
            if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<std::size_t>(v - 1)];
            flat.push_back(v);
            rec(row, filled + 1, v);
            flat.pop_back();
            ++remaining[static_cast<std::size_t>(v - 1)];
        }
    };
    if (lambda.size() != mu.size()) throw std::invalid_argument("tableaux: size mismatch");
    rec(0, 0, 1);
    return out;
}

}  // namespace

std::vector<GeneralizedTableau> enumerate_T_rs(const Composition& lambda, const Composition& mu) {
    return fill_rows(lambda, mu, [](int) { return 1; });
}

std::vector<GeneralizedTableau> enumerate_T_wedge(const Composition& lambda, const Composition& mu) {
    return fill_rows(lambda, mu, [](int row) { return row + 1; });
}

Permutation gen_tableau_to_d(const GeneralizedTableau& t) {
    if (!is_row_semistandard(t)) throw std::invalid_argument("gen_tableau_to_d needs a row-semistandard tableau");
    const auto& mu = t.content();
    std::vector<int> next(static_cast<std::size_t>(mu.length()));
    for (int i = 0; i < mu.length(); ++i) next[static_cast<std::size_t>(i)] = mu.block_start(i);
    std::vector<int> line(t.entries().size());
    for (std::size_t p = 0; p < line.size(); ++p)
        line[p] = ++next[static_cast<std::size_t>(t.entries()[p] - 1)];
    return Permutation::from_one_line(line);
}

GeneralizedTableau d_to_gen_tableau(const Permutation& d, const Composition& lambda, const Composition& mu) {
    auto block = mu.block_of();
    std::vector<int> flat(static_cast<std::size_t>(d.r()));
    for (int p = 0; p < d.r(); ++p) flat[static_cast<std::size_t>(p)] = block[static_cast<std::size_t>(d.at(p))] + 1;
    return {lambda, mu, flat};
}

}  // namespace permres
