#pragma once

#include "abelnc/ring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace freealg {

using Coeff = boost::multiprecision::cpp_int;

/// A word in the free monoid over the noncommuting generators, as a
/// sequence of generator ids. Empty word = multiplicative identity.
using Word = std::vector<VarId>;

/// Exponents of the central variables, stored sparsely as (id, exponent)
/// pairs sorted by id with all exponents > 0.
using CentralPart = std::vector<std::pair<VarId, std::uint32_t>>;

struct Monomial {
    CentralPart central;
    Word word;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Strict total order used for the canonical term sequence: word length
/// first, then the word lexicographically by generator id, then the central
/// part lexicographically as (id, exponent) pairs.
bool monomial_less(const Monomial& a, const Monomial& b);

Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Word length plus the sum of central exponents.
std::uint64_t monomial_degree(const Monomial& m);

/// Element of Z<generators> with the ring's central variables adjoined.
/// Terms are kept canonical: sorted by monomial_less, coefficients nonzero,
/// monomials distinct. Two polynomials compare equal iff they are the same
/// element; operations on polynomials from different rings throw
/// RingMismatchError.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Coeff coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, Coeff value);
    static Polynomial generator(RingPtr ring, VarId id);
    static Polynomial central(RingPtr ring, VarId id);
    static Polynomial variable(RingPtr ring, VarRef ref);

    /// Builds from an arbitrary term list (any order, repeats, zeros);
    /// canonicalizes. Monomials must be well-formed for the ring.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// True when every term has an empty word part (the element lies in the
    /// commutative coefficient subring, hence commutes with everything).
    bool is_central() const;

    /// Max monomial degree over the terms; 0 for the zero polynomial.
    std::uint64_t total_degree() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Coeff& scalar, const Polynomial& p);

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) { return !(lhs == rhs); }

private:
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    RingPtr ring_;
    std::vector<Term> terms_; // canonical
};

/// Nonnegative powers only; pow(p, 0) == 1 for every p, including 0.
Polynomial pow(const Polynomial& base, std::uint32_t exponent);

/// Ring homomorphism fixing everything except `var`, which is mapped to
/// `replacement` (same ring). A central `var` requires a central replacement,
/// else the result would not be well defined; that case throws
/// ContractViolation.
Polynomial substitute(const Polynomial& p, VarRef var, const Polynomial& replacement);

bool equals(const Polynomial& lhs, const Polynomial& rhs);

/// Canonical text form, parseable back by the expression syntax. Examples:
/// "0", "1", "2*c*X.x1 - 3*x2.x2".
std::string serialize(const Polynomial& p);

std::ostream& operator<<(std::ostream& out, const Polynomial& p);

/// Plain nested-loop product, kept as the reference implementation for the
/// OpenMP path taken by operator* on large inputs.
Polynomial mul_serial(const Polynomial& lhs, const Polynomial& rhs);

} // namespace freealg
