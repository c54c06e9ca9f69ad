#pragma once

#include "abelnc/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <random>
#include <vector>

namespace testsupport {

using Rational = boost::multiprecision::cpp_rational;

/// Uniform-ish draw via modulo; std::uniform_int_distribution is not
/// reproducible across standard libraries, and test fixtures must be.
inline std::uint64_t draw(std::mt19937_64& eng, std::uint64_t bound) {
    return eng() % bound;
}

/// Random element built through the public factories, so it is canonical by
/// construction. Commutative rings (no generators) get central-only terms.
freealg::Polynomial random_polynomial(const freealg::RingPtr& ring, std::mt19937_64& eng,
                                      int max_terms = 6, int max_word = 4, int max_exp = 3,
                                      int coeff_range = 9);

/// Coordinates of `target` in the spanning set, solved exactly over Q by
/// Gaussian elimination on the monomial-basis matrix. Empty when target
/// lies outside the span; one solution of possibly many when the spanning
/// set is dependent.
std::optional<std::vector<Rational>> rational_coordinates(
    const std::vector<freealg::Polynomial>& span, const freealg::Polynomial& target);

inline bool in_rational_span(const std::vector<freealg::Polynomial>& span,
                             const freealg::Polynomial& target) {
    return rational_coordinates(span, target).has_value();
}

/// Every product w1 * k * w2 with w1, w2 words over the ring's noncommuting
/// generators and |w1| + deg(k) + |w2| = total_degree. The span of these is
/// the degree slice of the two-sided ideal generated by k (for homogeneous
/// k).
std::vector<freealg::Polynomial> two_sided_word_products(const freealg::Polynomial& k,
                                                         int total_degree);

} // namespace testsupport
