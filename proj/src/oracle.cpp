#include "abelnc/oracle.hpp"

#include "abelnc/identities.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace oracle {

using freealg::ContractViolation;
using freealg::Polynomial;

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1)
            acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return splitmix64(seed + static_cast<std::uint64_t>(trial));
}

void check_config(const OracleConfig& cfg) {
    if (cfg.dim < 1)
        throw ContractViolation("oracle dimension must be >= 1");
    if (cfg.modulus < 2)
        throw ContractViolation("oracle modulus must be >= 2");
    if (cfg.trials < 1)
        throw ContractViolation("oracle trials must be >= 1");
}

void check_compatible(const Assignment& a, const OracleConfig& cfg,
                      const freealg::RingSpec& ring) {
    if (a.dim != cfg.dim || a.modulus != cfg.modulus)
        throw ContractViolation("assignment does not match the oracle config");
    if (a.generators.size() != ring.generator_count() ||
        a.centrals.size() != ring.central_count())
        throw ContractViolation("assignment does not cover ring " + ring.describe());
}

// std::uniform_int_distribution is implementation-defined; plain modulo on
// the raw 64-bit stream keeps assignments byte-stable across platforms.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t p) {
    return rng() % p;
}

MatModP random_matrix(std::mt19937_64& rng, int dim, std::uint64_t p) {
    MatModP m(dim, p);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            m.at(r, c) = draw(rng, p);
    return m;
}

std::uint64_t coeff_mod(const freealg::Coeff& coeff, std::uint64_t p) {
    freealg::Coeff r = coeff % p;
    if (r < 0)
        r += p;
    return r.convert_to<std::uint64_t>();
}

} // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                                29ULL, 31ULL, 37ULL}) {
        if (n % small == 0)
            return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses decide primality for every 64-bit integer.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                            31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

MatModP::MatModP(int dim, std::uint64_t modulus)
    : dim_(dim), modulus_(modulus),
      entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0) {
    if (dim < 1)
        throw ContractViolation("matrix dimension must be >= 1");
    if (modulus < 2)
        throw ContractViolation("matrix modulus must be >= 2");
}

MatModP MatModP::identity(int dim, std::uint64_t modulus) {
    return scalar(dim, modulus, 1);
}

MatModP MatModP::scalar(int dim, std::uint64_t modulus, std::uint64_t value) {
    MatModP m(dim, modulus);
    for (int i = 0; i < dim; ++i)
        m.at(i, i) = value % modulus;
    return m;
}

bool MatModP::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::uint64_t e) { return e == 0; });
}

bool MatModP::is_scalar() const {
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            if (at(r, c) != (r == c ? at(0, 0) : 0))
                return false;
    return true;
}

MatModP& MatModP::operator+=(const MatModP& rhs) {
    if (dim_ != rhs.dim_ || modulus_ != rhs.modulus_)
        throw ContractViolation("matrix shape/modulus mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] = (entries_[i] + rhs.entries_[i]) % modulus_;
    return *this;
}

MatModP& MatModP::operator-=(const MatModP& rhs) {
    if (dim_ != rhs.dim_ || modulus_ != rhs.modulus_)
        throw ContractViolation("matrix shape/modulus mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] = (entries_[i] + modulus_ - rhs.entries_[i]) % modulus_;
    return *this;
}

MatModP operator*(const MatModP& lhs, const MatModP& rhs) {
    if (lhs.dim_ != rhs.dim_ || lhs.modulus_ != rhs.modulus_)
        throw ContractViolation("matrix shape/modulus mismatch");
    const int dim = lhs.dim_;
    const std::uint64_t p = lhs.modulus_;
    MatModP out(dim, p);
    for (int r = 0; r < dim; ++r)
        for (int k = 0; k < dim; ++k) {
            const std::uint64_t v = lhs.at(r, k);
            if (v == 0)
                continue;
            for (int c = 0; c < dim; ++c)
                out.at(r, c) = (out.at(r, c) + mulmod(v, rhs.at(k, c), p)) % p;
        }
    return out;
}

std::string Assignment::to_text(const freealg::RingSpec& ring) const {
    std::ostringstream out;
    out << "modulus: " << modulus << "\n";
    out << "dim: " << dim << "\n";
    out << "seed: " << seed << "\n";
    for (freealg::VarId id = 0; id < generators.size(); ++id) {
        out << ring.generator_name(id) << ":\n";
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c)
                out << (c ? " " : "") << generators[id].at(r, c);
            out << "\n";
        }
    }
    for (freealg::VarId id = 0; id < centrals.size(); ++id)
        out << ring.central_name(id) << ": " << centrals[id] << "\n";
    return out.str();
}

Assignment random_assignment_seeded(const OracleConfig& cfg, const freealg::RingSpec& ring,
                                    std::uint64_t seed) {
    check_config(cfg);
    std::mt19937_64 rng(seed);
    Assignment a;
    a.dim = cfg.dim;
    a.modulus = cfg.modulus;
    a.seed = seed;
    a.generators.reserve(ring.generator_count());
    for (std::size_t i = 0; i < ring.generator_count(); ++i)
        a.generators.push_back(random_matrix(rng, cfg.dim, cfg.modulus));
    a.centrals.reserve(ring.central_count());
    for (std::size_t i = 0; i < ring.central_count(); ++i)
        a.centrals.push_back(draw(rng, cfg.modulus));
    return a;
}

Assignment random_assignment(const OracleConfig& cfg, const freealg::RingSpec& ring) {
    return random_assignment_seeded(cfg, ring, cfg.seed);
}

MatModP eval_matrix(const Polynomial& p, const Assignment& a, const OracleConfig& cfg) {
    check_config(cfg);
    check_compatible(a, cfg, *p.ring());
    MatModP acc(cfg.dim, cfg.modulus);
    for (const Polynomial::Term& term : p.terms()) {
        std::uint64_t scalar = coeff_mod(term.coeff, cfg.modulus);
        for (const auto& [id, exp] : term.mono.central)
            scalar = mulmod(scalar, powmod(a.centrals[id], exp, cfg.modulus), cfg.modulus);
        if (scalar == 0)
            continue;
        MatModP factor = MatModP::scalar(cfg.dim, cfg.modulus, scalar);
        for (freealg::VarId letter : term.mono.word)
            factor = factor * a.generators[letter];
        acc += factor;
    }
    return acc;
}

std::string_view verdict_token(Verdict verdict) {
    return verdict == Verdict::EqualWhp ? "EQUAL_WHP" : "UNEQUAL";
}

ProbabilisticReport probabilistic_verify(const Polynomial& lhs, const Polynomial& rhs,
                                         const OracleConfig& cfg) {
    check_config(cfg);
    freealg::check_same_ring(*lhs.ring(), *rhs.ring());
    const Polynomial diff = lhs - rhs;

    ProbabilisticReport report;
    report.trials = cfg.trials;
    report.seed = cfg.seed;
    report.degree_bound = std::max(lhs.total_degree(), rhs.total_degree());
    report.per_trial_failure_bound =
        static_cast<double>(report.degree_bound) / static_cast<double>(cfg.modulus);
    report.overall_failure_bound = std::pow(report.per_trial_failure_bound, cfg.trials);

    if (diff.is_zero())
        return report;

    const freealg::RingSpec& ring = *diff.ring();
    int found = cfg.trials;
#pragma omp parallel for schedule(dynamic) reduction(min : found)
    for (int t = 0; t < cfg.trials; ++t) {
        const Assignment a = random_assignment_seeded(cfg, ring, trial_seed(cfg.seed, t));
        if (!eval_matrix(diff, a, cfg).is_zero())
            found = std::min(found, t);
    }
    if (found < cfg.trials) {
        report.verdict = Verdict::Unequal;
        report.witness_trial = found;
        report.witness = random_assignment_seeded(cfg, ring, trial_seed(cfg.seed, found));
    }
    return report;
}

std::optional<WeakCentralityWitness> weak_centrality_witness(const OracleConfig& cfg,
                                                             CommutantForm form) {
    check_config(cfg);
    if (cfg.dim < 2)
        throw ContractViolation("weak-centrality search needs dim >= 2");

    using identities::Identity;
    using identities::IdentityCase;
    using identities::Model;
    using identities::Setup;
    const Setup setup = Setup::make(3, Model::Free);
    const IdentityCase kase{Identity::Thm1, 3, {}};
    const Polynomial lhs = identities::build_side(setup, kase, identities::Side::Lhs);
    const Polynomial rhs = identities::build_side(setup, kase, identities::Side::Rhs);
    const freealg::RingSpec& ring = *setup.ring(); // generators X, x1, x2, x3, Y

    for (int t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed = trial_seed(cfg.seed, t);
        std::mt19937_64 rng(seed);
        const MatModP X = random_matrix(rng, cfg.dim, cfg.modulus);
        const MatModP x1 = random_matrix(rng, cfg.dim, cfg.modulus);
        const MatModP x2 = random_matrix(rng, cfg.dim, cfg.modulus);
        const MatModP x3 = random_matrix(rng, cfg.dim, cfg.modulus);
        const MatModP T = X + x1 + x2 + x3;

        // C commutes with T by construction; Y := C - X then gives
        // [T, X+Y] = [T, C] = 0 without X+Y being central.
        MatModP C = MatModP::scalar(cfg.dim, cfg.modulus, draw(rng, cfg.modulus));
        if (form == CommutantForm::PolynomialInT) {
            const std::uint64_t a1 = draw(rng, cfg.modulus);
            const std::uint64_t a2 = draw(rng, cfg.modulus);
            C += MatModP::scalar(cfg.dim, cfg.modulus, a1) * T;
            C += MatModP::scalar(cfg.dim, cfg.modulus, a2) * T * T;
            if (C.is_scalar())
                continue; // degenerate draw; a scalar C would make X+Y central
        }
        if (!(T * C == C * T))
            throw std::logic_error("commutant construction failed");
        const MatModP Y = C - X;

        Assignment a;
        a.dim = cfg.dim;
        a.modulus = cfg.modulus;
        a.seed = seed;
        a.generators = {X, x1, x2, x3, Y};
        if (eval_matrix(lhs, a, cfg) == eval_matrix(rhs, a, cfg))
            continue;
        (void)ring;
        return WeakCentralityWitness{std::move(a), t, seed};
    }
    return std::nullopt;
}

} // namespace oracle
