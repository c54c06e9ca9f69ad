#pragma once

#include "abelnc/polynomial.hpp"
#include "abelnc/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace identities {

using freealg::Coeff;
using freealg::Polynomial;
using freealg::RingPtr;

/// Ambient ring shapes the catalog is verified in.
///
/// UniversalXY adjoins a central c and sets Y := c - X, so X+Y is the single
/// central term c; an identity holding there holds in every ring where X+Y
/// is central, by mapping c to X+Y. UniversalXYV plays the same role for the
/// hypothesis "X+Y+x(V) central" via a central d and Y := d - X - x(V).
/// Free declares X, x1..xn, Y as independent noncommuting generators (no
/// hypothesis at all). Commutative declares everything central, plus one
/// extra variable z used as the collapse target for the classical
/// specializations.
enum class Model { UniversalXY, UniversalXYV, Free, Commutative };

enum class Identity {
    Thm1,
    Thm2,
    Thm4,
    Thm5,
    Polar1,
    Polar2,
    Abel1,
    Abel2,
    Abel3,
    Hurwitz1,
    Hurwitz2,
    Hurwitz3,
};

enum class Side { Lhs, Rhs };

/// Whether sums over subsets/tuples run through the OpenMP partitioned path
/// or the plain serial reference loop. Results are identical.
enum class Execution { Parallel, Serial };

Model model_for(Identity identity);

/// Lowercase command-line token, e.g. "thm1", "polar2", "hurwitz3".
std::string_view identity_token(Identity identity);
std::optional<Identity> identity_from_token(std::string_view token);
const std::vector<Identity>& catalog();

/// Display names matching the model list above: "UNIVERSAL_XY", etc.
std::string_view model_token(Model model);

struct IdentityCase {
    Identity identity = Identity::Thm1;
    int n = 0;
    std::optional<int> m; // Polar2 only, 0 <= m < n

    /// Throws ContractViolation unless n >= 0 and the m-field matches the
    /// identity (present with 0 <= m < n for Polar2, absent otherwise).
    void validate() const;
};

/// The ground set V = {1..n} together with the model ring and the
/// distinguished elements X, Y, x_1..x_n (and z in the commutative model).
class Setup {
public:
    static Setup make(int n, Model model);
    static Setup for_case(const IdentityCase& kase);

    int n() const { return n_; }
    Model model() const { return model_; }
    const RingPtr& ring() const { return ring_; }

    const Polynomial& X() const { return X_; }
    const Polynomial& Y() const { return Y_; }
    /// x_s for s in 1..n.
    const Polynomial& x(int s) const;
    const std::vector<Polynomial>& xs() const { return xs_; }
    /// The collapse variable of the commutative model; throws elsewhere.
    const Polynomial& z() const;

    Polynomial zero() const { return Polynomial::zero(ring_); }
    Polynomial one() const { return Polynomial::constant(ring_, 1); }

    /// x(S) for S given as a bitmask (bit i ⇔ element i+1).
    Polynomial subset_sum_mask(std::uint64_t mask) const;

private:
    Setup(int n, Model model);

    int n_;
    Model model_;
    RingPtr ring_;
    Polynomial X_;
    Polynomial Y_;
    std::vector<Polynomial> xs_;
    std::optional<Polynomial> z_;
};

/// x(S) = Σ_{s∈S} x_s; elements of S must lie in 1..n.
Polynomial subset_sum(const Setup& setup, const std::vector<int>& S);

/// The named side of the case's identity, with every edge convention
/// (empty S, |S| = n, n = 0) encoded as an explicit case split. Polar
/// cases are not sides in this sense and are rejected; they live in
/// polarization_sum below.
Polynomial build_side(const Setup& setup, const IdentityCase& kase, Side side,
                      Execution exec = Execution::Parallel);

/// Same, but with the role of Y played by an explicit polynomial. Exists for
/// the bridge between the two centrality hypotheses: feeding Y + x(V)
/// through the Thm4 builders must reproduce the Thm5 sides.
Polynomial build_side_with_y(const Setup& setup, const IdentityCase& kase, Side side,
                             const Polynomial& y, Execution exec = Execution::Parallel);

/// Serial reference for the partitioned subset/tuple sums.
Polynomial build_side_serial(const Setup& setup, const IdentityCase& kase, Side side);

/// Both sides of any catalog case, polar ones included (Polar1 compares the
/// alternating sum against the permutation sum; Polar2 against zero).
std::pair<Polynomial, Polynomial> build_sides(const Setup& setup, const IdentityCase& kase,
                                              Execution exec = Execution::Parallel);

/// Σ_{S⊆V} (−1)^{n−|S|} (X + x(S))^m.
Polynomial polarization_sum(const Setup& setup, int m, Execution exec = Execution::Parallel);

/// r(base, W) = Σ_{S⊆W} (−1)^{|W|−|S|} (base + x(S))^m.
Polynomial alternating_sum(const Setup& setup, const Polynomial& base, const std::vector<int>& W,
                           int m);

/// Σ over all orderings (i1,…,in) of V of x_{i1}⋯x_{in}.
Polynomial permutation_sum(const Setup& setup);

/// Number of addends of the ordered-tuple sum: Σ_{k=0}^{n} n!/(n−k)!,
/// counted during enumeration (nothing is deduplicated).
std::uint64_t thm1_rhs_addend_count(int n);

struct VerificationReport {
    IdentityCase kase;
    Model model = Model::UniversalXY;
    bool equal = false;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    Polynomial diff;
    double elapsed_ms = 0.0;
};

/// Builds both sides in the identity's forced model and reports whether the
/// difference is exactly zero. A false verdict is a report, not an error.
VerificationReport verify(const IdentityCase& kase, Execution exec = Execution::Parallel);

/// LHS − RHS of the first/second theorem built in the Free model, where no
/// centrality holds; nonzero for n >= 2 and the object of the worked-example
/// checks.
Polynomial free_diff_thm1(int n);
Polynomial free_diff_thm2(int n);

Coeff binomial(unsigned n, unsigned k);
Coeff factorial(unsigned n);
/// n!/k! for k <= n.
Coeff factorial_quotient(unsigned n, unsigned k);

} // namespace identities
