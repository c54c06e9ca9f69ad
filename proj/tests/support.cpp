#include "support.hpp"

#include <algorithm>
#include <map>

namespace testsupport {

using freealg::Monomial;
using freealg::Polynomial;
using freealg::RingPtr;
using freealg::VarId;
using freealg::Word;

Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& eng, int max_terms,
                             int max_word, int max_exp, int coeff_range) {
    Polynomial acc = Polynomial::zero(ring);
    const int terms = 1 + static_cast<int>(draw(eng, max_terms));
    for (int t = 0; t < terms; ++t) {
        freealg::Coeff coeff(1 + draw(eng, coeff_range));
        if (draw(eng, 2) == 1)
            coeff = -coeff;
        Polynomial term = Polynomial::constant(ring, coeff);
        if (ring->generator_count() > 0) {
            const int len = static_cast<int>(draw(eng, max_word + 1));
            for (int i = 0; i < len; ++i)
                term *= Polynomial::generator(
                    ring, static_cast<VarId>(draw(eng, ring->generator_count())));
        }
        for (VarId c = 0; c < ring->central_count(); ++c) {
            const auto exp = static_cast<std::uint32_t>(draw(eng, max_exp + 1));
            if (exp > 0)
                term *= pow(Polynomial::central(ring, c), exp);
        }
        acc += term;
    }
    return acc;
}

std::optional<std::vector<Rational>> rational_coordinates(const std::vector<Polynomial>& span,
                                                          const Polynomial& target) {
    const auto cmp = [](const Monomial& a, const Monomial& b) {
        return freealg::monomial_less(a, b);
    };
    std::map<Monomial, std::size_t, decltype(cmp)> columns(cmp);
    const auto index_monomials = [&](const Polynomial& p) {
        for (const auto& term : p.terms())
            columns.emplace(term.mono, 0);
    };
    for (const auto& p : span)
        index_monomials(p);
    index_monomials(target);
    std::size_t next = 0;
    for (auto& [mono, idx] : columns)
        idx = next++;

    // Rows are monomials, columns the spanning vectors, last column the
    // target; solve by full reduction.
    const std::size_t rows = columns.size();
    const std::size_t cols = span.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& term : span[j].terms())
            a[columns.at(term.mono)][j] = Rational(term.coeff);
    for (const auto& term : target.terms())
        a[columns.at(term.mono)][cols] = Rational(term.coeff);

    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t r = row;
        while (r < rows && a[r][col] == 0)
            ++r;
        if (r == rows)
            continue;
        std::swap(a[row], a[r]);
        for (std::size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == row || a[r2][col] == 0)
                continue;
            const Rational factor = a[r2][col] / a[row][col];
            for (std::size_t c = col; c <= cols; ++c)
                a[r2][c] -= factor * a[row][c];
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (a[r][cols] != 0)
            return std::nullopt;

    std::vector<Rational> solution(cols, Rational(0));
    for (const auto& [pr, pc] : pivots)
        solution[pc] = a[pr][cols] / a[pr][pc];
    return solution;
}

std::vector<Polynomial> two_sided_word_products(const Polynomial& k, int total_degree) {
    const RingPtr& ring = k.ring();
    const int inner = static_cast<int>(k.total_degree());
    std::vector<Polynomial> products;
    if (inner > total_degree)
        return products;

    const auto words_of_length = [&](int len) {
        std::vector<Polynomial> words{Polynomial::constant(ring, 1)};
        for (int i = 0; i < len; ++i) {
            std::vector<Polynomial> longer;
            for (const auto& w : words)
                for (VarId g = 0; g < ring->generator_count(); ++g)
                    longer.push_back(w * Polynomial::generator(ring, g));
            words = std::move(longer);
        }
        return words;
    };

    for (int left = 0; left + inner <= total_degree; ++left) {
        const int right = total_degree - inner - left;
        for (const auto& w1 : words_of_length(left))
            for (const auto& w2 : words_of_length(right))
                products.push_back(w1 * k * w2);
    }
    return products;
}

} // namespace testsupport
