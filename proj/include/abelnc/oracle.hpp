#pragma once

#include "abelnc/polynomial.hpp"
#include "abelnc/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

struct OracleConfig {
    int dim = 3;
    std::uint64_t modulus = 1'000'000'007ULL;
    int trials = 20;
    std::uint64_t seed = 0;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_probable_prime(std::uint64_t n);

/// Dense square matrix over Z/p. Small dimensions only; this is a testing
/// device, not a linear-algebra library.
class MatModP {
public:
    MatModP(int dim, std::uint64_t modulus);
    static MatModP identity(int dim, std::uint64_t modulus);
    static MatModP scalar(int dim, std::uint64_t modulus, std::uint64_t value);

    int dim() const { return dim_; }
    std::uint64_t modulus() const { return modulus_; }

    std::uint64_t& at(int row, int col) { return entries_[index(row, col)]; }
    std::uint64_t at(int row, int col) const { return entries_[index(row, col)]; }

    bool is_zero() const;
    /// True for c·I, any c (including 0).
    bool is_scalar() const;

    MatModP& operator+=(const MatModP& rhs);
    MatModP& operator-=(const MatModP& rhs);
    friend MatModP operator+(MatModP lhs, const MatModP& rhs) { return lhs += rhs; }
    friend MatModP operator-(MatModP lhs, const MatModP& rhs) { return lhs -= rhs; }
    friend MatModP operator*(const MatModP& lhs, const MatModP& rhs);

    friend bool operator==(const MatModP&, const MatModP&) = default;

private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(col);
    }

    int dim_;
    std::uint64_t modulus_;
    std::vector<std::uint64_t> entries_; // row-major
};

/// One point of the matrix ring M_dim(Z/p): a matrix per noncommuting
/// generator, a scalar per central variable. Scalar matrices are exactly the
/// center of the full matrix ring, so every centrality hypothesis holds at
/// evaluation time by construction. Carries the seed it was drawn from so
/// witnesses replay.
struct Assignment {
    int dim = 0;
    std::uint64_t modulus = 0;
    std::uint64_t seed = 0;
    std::vector<MatModP> generators;
    std::vector<std::uint64_t> centrals;

    /// Replayable text block: modulus, dimension, seed, then row-major
    /// entries per generator and one scalar per central variable.
    std::string to_text(const freealg::RingSpec& ring) const;
};

/// Entries drawn uniformly via a seeded deterministic generator; the same
/// (cfg, ring) pair always produces the same assignment.
Assignment random_assignment(const OracleConfig& cfg, const freealg::RingSpec& ring);
/// Same with an explicit seed (used for independent per-trial draws).
Assignment random_assignment_seeded(const OracleConfig& cfg, const freealg::RingSpec& ring,
                                    std::uint64_t seed);

/// The ring homomorphism into M_dim(Z/p) defined by the assignment: words
/// multiply left to right, central variables contribute scalar powers,
/// coefficients reduce mod p.
MatModP eval_matrix(const freealg::Polynomial& p, const Assignment& a, const OracleConfig& cfg);

enum class Verdict { EqualWhp, Unequal };

std::string_view verdict_token(Verdict verdict); // "EQUAL_WHP" / "UNEQUAL"

struct ProbabilisticReport {
    Verdict verdict = Verdict::EqualWhp;
    std::optional<Assignment> witness; // Unequal only; witness of lowest trial index
    int witness_trial = -1;
    int trials = 0;
    std::uint64_t seed = 0;
    /// Naive total-degree bound of lhs - rhs; the failure probabilities
    /// below are the heuristic d/p Schwartz-Zippel-style estimates (the
    /// noncommutative case has no proven bound).
    std::uint64_t degree_bound = 0;
    double per_trial_failure_bound = 0.0;
    double overall_failure_bound = 0.0;
};

/// Evaluates lhs - rhs at cfg.trials independently seeded assignments.
/// UNEQUAL is always correct; EQUAL_WHP is wrong with probability at most
/// the reported bound. Trials run concurrently; the reported witness is the
/// one with the lowest trial index, so the result is deterministic.
ProbabilisticReport probabilistic_verify(const freealg::Polynomial& lhs,
                                         const freealg::Polynomial& rhs, const OracleConfig& cfg);

/// How the commutant C is drawn in the weakened-centrality search.
enum class CommutantForm {
    PolynomialInT, // C = a0 + a1·T + a2·T², rejected if scalar
    Scalar,        // control: C = a0·I, so X+Y is central and no witness exists
};

struct WeakCentralityWitness {
    Assignment assignment; // over the free n=3 ring {X, x1, x2, x3, Y}
    int trial = -1;
    std::uint64_t seed = 0;
};

/// Searches for matrices where T = x1+x2+x3+X commutes with X+Y (taking
/// Y := C - X for a non-scalar C commuting with T) yet the n=3 ordered-tuple
/// identity fails, demonstrating that the weakened hypothesis
/// [x1+x2+x3+X, X+Y] = 0 does not suffice. Returns the first witness by
/// trial index, or nullopt after cfg.trials attempts. Every returned witness
/// satisfies the commutation exactly (checked) and evaluates the two sides
/// to different matrices.
std::optional<WeakCentralityWitness> weak_centrality_witness(
    const OracleConfig& cfg, CommutantForm form = CommutantForm::PolynomialInT);

} // namespace oracle
