#include "abelnc/polynomial.hpp"

#include <omp.h>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace freealg {

namespace {

// Cross-product count above which operator* goes parallel.
constexpr std::size_t kParallelProductGrain = 4096;

using Term = Polynomial::Term;

bool term_mono_less(const Term& a, const Term& b) {
    return monomial_less(a.mono, b.mono);
}

// Sort, combine equal monomials, drop zeros.
std::vector<Term> canonicalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_mono_less);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& term : terms) {
        if (term.coeff == 0)
            continue;
        if (!out.empty() && out.back().mono == term.mono) {
            out.back().coeff += term.coeff;
            if (out.back().coeff == 0)
                out.pop_back();
        } else {
            out.push_back(std::move(term));
        }
    }
    return out;
}

// Merge of two canonical term lists; stays canonical.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (monomial_less(a[i].mono, b[j].mono)) {
            out.push_back(a[i++]);
        } else if (monomial_less(b[j].mono, a[i].mono)) {
            out.push_back(b[j++]);
        } else {
            Coeff sum = a[i].coeff + b[j].coeff;
            if (sum != 0)
                out.push_back(Term{a[i].mono, std::move(sum)});
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

// All products of lhs[first..last) against every rhs term, canonicalized.
std::vector<Term> cross_block(const std::vector<Term>& lhs, std::size_t first, std::size_t last,
                              const std::vector<Term>& rhs) {
    std::vector<Term> products;
    products.reserve((last - first) * rhs.size());
    for (std::size_t i = first; i < last; ++i)
        for (const Term& r : rhs)
            products.push_back(Term{monomial_product(lhs[i].mono, r.mono), lhs[i].coeff * r.coeff});
    return canonicalize(std::move(products));
}

void validate_monomial(const RingSpec& ring, const Monomial& mono) {
    VarId prev = 0;
    bool have_prev = false;
    for (const auto& [id, exp] : mono.central) {
        if (id >= ring.central_count())
            throw ContractViolation("central variable id out of range for ring " + ring.describe());
        if (exp == 0)
            throw ContractViolation("central exponent must be positive");
        if (have_prev && prev >= id)
            throw ContractViolation("central part must be strictly sorted by variable id");
        prev = id;
        have_prev = true;
    }
    for (VarId id : mono.word)
        if (id >= ring.generator_count())
            throw ContractViolation("generator id out of range for ring " + ring.describe());
}

} // namespace

bool monomial_less(const Monomial& a, const Monomial& b) {
    if (a.word.size() != b.word.size())
        return a.word.size() < b.word.size();
    if (a.word != b.word)
        return a.word < b.word;
    return a.central < b.central;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.central.reserve(a.central.size() + b.central.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.central.size() && j < b.central.size()) {
        if (a.central[i].first < b.central[j].first) {
            out.central.push_back(a.central[i++]);
        } else if (b.central[j].first < a.central[i].first) {
            out.central.push_back(b.central[j++]);
        } else {
            out.central.emplace_back(a.central[i].first, a.central[i].second + b.central[j].second);
            ++i;
            ++j;
        }
    }
    out.central.insert(out.central.end(), a.central.begin() + i, a.central.end());
    out.central.insert(out.central.end(), b.central.begin() + j, b.central.end());
    out.word.reserve(a.word.size() + b.word.size());
    out.word.insert(out.word.end(), a.word.begin(), a.word.end());
    out.word.insert(out.word.end(), b.word.begin(), b.word.end());
    return out;
}

std::uint64_t monomial_degree(const Monomial& m) {
    std::uint64_t degree = m.word.size();
    for (const auto& [id, exp] : m.central)
        degree += exp;
    return degree;
}

Polynomial Polynomial::zero(RingPtr ring) {
    return Polynomial(std::move(ring), {});
}

Polynomial Polynomial::constant(RingPtr ring, Coeff value) {
    std::vector<Term> terms;
    if (value != 0)
        terms.push_back(Term{Monomial{}, std::move(value)});
    return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::generator(RingPtr ring, VarId id) {
    if (id >= ring->generator_count())
        throw ContractViolation("generator id out of range for ring " + ring->describe());
    return Polynomial(std::move(ring), {Term{Monomial{{}, {id}}, 1}});
}

Polynomial Polynomial::central(RingPtr ring, VarId id) {
    if (id >= ring->central_count())
        throw ContractViolation("central variable id out of range for ring " + ring->describe());
    return Polynomial(std::move(ring), {Term{Monomial{{{id, 1}}, {}}, 1}});
}

Polynomial Polynomial::variable(RingPtr ring, VarRef ref) {
    return ref.kind == VarKind::Noncommuting ? generator(std::move(ring), ref.id)
                                             : central(std::move(ring), ref.id);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    for (const Term& term : terms)
        validate_monomial(*ring, term.mono);
    return Polynomial(std::move(ring), canonicalize(std::move(terms)));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono == Monomial{});
}

bool Polynomial::is_central() const {
    for (const Term& term : terms_)
        if (!term.mono.word.empty())
            return false;
    return true;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t degree = 0;
    for (const Term& term : terms_)
        degree = std::max(degree, monomial_degree(term.mono));
    return degree;
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> terms = terms_;
    for (Term& term : terms)
        term.coeff = -term.coeff;
    return Polynomial(ring_, std::move(terms));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_same_ring(*ring_, *rhs.ring_);
    terms_ = merge_add(terms_, rhs.terms_);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    return *this += -rhs;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    check_same_ring(*lhs.ring_, *rhs.ring_);
    const std::size_t rows = lhs.terms_.size();
    const std::size_t cross = rows * rhs.terms_.size();
    const int threads = omp_get_max_threads();
    if (cross < kParallelProductGrain || threads <= 1 || omp_in_parallel())
        return Polynomial(lhs.ring_, cross_block(lhs.terms_, 0, rows, rhs.terms_));

    // Partition lhs rows into one contiguous block per thread; each block's
    // partial product is canonical, so folding them is a plain merge. Exact
    // integer addition makes the result independent of the fold order.
    const std::size_t blocks = std::min<std::size_t>(threads, rows);
    std::vector<std::vector<Polynomial::Term>> partials(blocks);
#pragma omp parallel for schedule(static)
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t first = rows * b / blocks;
        const std::size_t last = rows * (b + 1) / blocks;
        partials[b] = cross_block(lhs.terms_, first, last, rhs.terms_);
    }
    std::vector<Polynomial::Term> acc = std::move(partials[0]);
    for (std::size_t b = 1; b < blocks; ++b)
        acc = merge_add(acc, partials[b]);
    return Polynomial(lhs.ring_, std::move(acc));
}

Polynomial mul_serial(const Polynomial& lhs, const Polynomial& rhs) {
    check_same_ring(*lhs.ring(), *rhs.ring());
    std::vector<Polynomial::Term> products;
    products.reserve(lhs.terms().size() * rhs.terms().size());
    for (const Polynomial::Term& l : lhs.terms())
        for (const Polynomial::Term& r : rhs.terms())
            products.push_back(
                Polynomial::Term{monomial_product(l.mono, r.mono), l.coeff * r.coeff});
    return Polynomial::from_terms(lhs.ring(), std::move(products));
}

Polynomial operator*(const Coeff& scalar, const Polynomial& p) {
    if (scalar == 0)
        return Polynomial::zero(p.ring());
    std::vector<Polynomial::Term> terms = p.terms();
    for (Polynomial::Term& term : terms)
        term.coeff *= scalar;
    return Polynomial::from_terms(p.ring(), std::move(terms));
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    check_same_ring(*lhs.ring_, *rhs.ring_);
    return lhs.terms_ == rhs.terms_;
}

Polynomial pow(const Polynomial& base, std::uint32_t exponent) {
    Polynomial result = Polynomial::constant(base.ring(), 1);
    if (exponent == 0)
        return result;
    Polynomial square = base;
    while (true) {
        if (exponent & 1u)
            result *= square;
        exponent >>= 1u;
        if (exponent == 0)
            break;
        square *= square;
    }
    return result;
}

Polynomial substitute(const Polynomial& p, VarRef var, const Polynomial& replacement) {
    const RingSpec& ring = *p.ring();
    check_same_ring(ring, *replacement.ring());
    const std::size_t limit =
        var.kind == VarKind::Noncommuting ? ring.generator_count() : ring.central_count();
    if (var.id >= limit)
        throw ContractViolation("substitution variable out of range for ring " + ring.describe());
    if (var.kind == VarKind::Central && !replacement.is_central())
        throw ContractViolation("cannot substitute non-central polynomial for central variable '" +
                                ring.central_name(var.id) + "'");

    Polynomial acc = Polynomial::zero(p.ring());
    for (const Polynomial::Term& term : p.terms()) {
        CentralPart kept;
        std::uint32_t hits = 0;
        for (const auto& [id, exp] : term.mono.central) {
            if (var.kind == VarKind::Central && id == var.id)
                hits = exp;
            else
                kept.push_back({id, exp});
        }
        const bool word_stays = var.kind == VarKind::Central;
        Polynomial piece = Polynomial::from_terms(
            p.ring(), {Polynomial::Term{Monomial{std::move(kept), word_stays ? term.mono.word : Word{}},
                                        term.coeff}});
        if (hits > 0)
            piece *= pow(replacement, hits);
        if (!word_stays) {
            // Rebuild the word left to right, gluing maximal runs of
            // untouched letters into single monomials.
            Word run;
            auto flush = [&] {
                if (run.empty())
                    return;
                piece *= Polynomial::from_terms(p.ring(),
                                                {Polynomial::Term{Monomial{{}, std::move(run)}, 1}});
                run.clear();
            };
            for (VarId letter : term.mono.word) {
                if (letter == var.id) {
                    flush();
                    piece *= replacement;
                } else {
                    run.push_back(letter);
                }
            }
            flush();
        }
        acc += piece;
    }
    return acc;
}

bool equals(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs == rhs;
}

std::string serialize(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    const RingSpec& ring = *p.ring();
    std::string out;
    bool first = true;
    for (const Polynomial::Term& term : p.terms()) {
        const bool negative = term.coeff < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::vector<std::string> chain;
        for (const auto& [id, exp] : term.mono.central) {
            std::string factor = ring.central_name(id);
            if (exp != 1)
                factor += "^" + std::to_string(exp);
            chain.push_back(std::move(factor));
        }
        if (!term.mono.word.empty()) {
            std::string word;
            for (std::size_t i = 0; i < term.mono.word.size(); ++i) {
                if (i)
                    word += '.';
                word += ring.generator_name(term.mono.word[i]);
            }
            chain.push_back(std::move(word));
        }
        const Coeff magnitude = negative ? Coeff(-term.coeff) : term.coeff;
        if (magnitude != 1 || chain.empty())
            chain.insert(chain.begin(), magnitude.str());
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i)
                out += '*';
            out += chain[i];
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& out, const Polynomial& p) {
    return out << serialize(p);
}

} // namespace freealg
