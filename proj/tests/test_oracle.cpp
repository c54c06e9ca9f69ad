#include "abelnc/oracle.hpp"

#include "abelnc/identities.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace oracle;
using freealg::Coeff;
using freealg::ContractViolation;
using freealg::Polynomial;
using freealg::RingPtr;

TEST_CASE("deterministic primality test over the full 64-bit range") {
    CHECK(is_probable_prime(2));
    CHECK(is_probable_prime(3));
    CHECK(is_probable_prime(1'000'000'007ULL));
    CHECK(is_probable_prime(2305843009213693951ULL)); // 2^61 - 1
    CHECK(is_probable_prime(18446744073709551557ULL)); // largest 64-bit prime

    CHECK(!is_probable_prime(0));
    CHECK(!is_probable_prime(1));
    CHECK(!is_probable_prime(4));
    CHECK(!is_probable_prime(561));        // Carmichael
    CHECK(!is_probable_prime(3215031751ULL)); // strong pseudoprime to 2,3,5,7
    CHECK(!is_probable_prime(2305843009213693953ULL));
}

TEST_CASE("matrix arithmetic mod p") {
    const std::uint64_t p = 7;
    MatModP a(2, p);
    a.at(0, 0) = 3;
    a.at(0, 1) = 5;
    a.at(1, 0) = 6;
    a.at(1, 1) = 2;
    MatModP b(2, p);
    b.at(0, 0) = 1;
    b.at(0, 1) = 4;
    b.at(1, 0) = 2;
    b.at(1, 1) = 0;

    const MatModP sum = a + b;
    CHECK(sum.at(0, 0) == 4);
    CHECK(sum.at(0, 1) == 2); // 5 + 4 = 9 = 2 mod 7
    const MatModP diff = b - a;
    CHECK(diff.at(0, 0) == 5); // 1 - 3 = -2 = 5 mod 7
    const MatModP prod = a * b;
    CHECK(prod.at(0, 0) == 6); // 3*1 + 5*2 = 13 = 6
    CHECK(prod.at(0, 1) == 5); // 3*4 + 5*0 = 12 = 5
    CHECK(prod.at(1, 0) == 3); // 6*1 + 2*2 = 10 = 3
    CHECK(prod.at(1, 1) == 3); // 6*4 + 2*0 = 24 = 3

    CHECK(MatModP::identity(2, p) * a == a);
    CHECK(a * MatModP::identity(2, p) == a);
    CHECK((a - a).is_zero());
    CHECK(MatModP::scalar(2, p, 3).is_scalar());
    CHECK(!a.is_scalar());
    CHECK(MatModP(2, p).is_zero());

    const MatModP wrong(3, p);
    CHECK_THROWS_AS(a + wrong, ContractViolation);
    const MatModP wrong_mod(2, 11);
    CHECK_THROWS_AS(a * wrong_mod, ContractViolation);
}

TEST_CASE("modular products survive moduli near 2^64") {
    const std::uint64_t p = 18446744073709551557ULL;
    MatModP a(1, p);
    a.at(0, 0) = p - 1;
    const MatModP sq = a * a;
    CHECK(sq.at(0, 0) == 1); // (-1)^2
}

TEST_CASE("oracle config is validated") {
    const RingPtr ring = freealg::make_ring({"X"}, {});
    const Polynomial x = Polynomial::generator(ring, 0);
    OracleConfig cfg;
    cfg.dim = 0;
    CHECK_THROWS_AS((void)probabilistic_verify(x, x, cfg), ContractViolation);
    cfg.dim = 2;
    cfg.modulus = 1;
    CHECK_THROWS_AS((void)probabilistic_verify(x, x, cfg), ContractViolation);
    cfg.modulus = 101;
    cfg.trials = 0;
    CHECK_THROWS_AS((void)probabilistic_verify(x, x, cfg), ContractViolation);
}

TEST_CASE("assignments are deterministic in the seed") {
    const RingPtr ring = freealg::make_ring({"X", "x1"}, {"c"});
    OracleConfig cfg;
    cfg.seed = 5;
    const Assignment a = random_assignment(cfg, *ring);
    const Assignment b = random_assignment(cfg, *ring);
    CHECK(a.generators == b.generators);
    CHECK(a.centrals == b.centrals);
    CHECK(a.generators.size() == 2);
    CHECK(a.centrals.size() == 1);

    const Assignment c = random_assignment_seeded(cfg, *ring, 6);
    CHECK(a.generators != c.generators);

    const std::string text = a.to_text(*ring);
    CHECK(text.find("modulus: 1000000007") != std::string::npos);
    CHECK(text.find("X:") != std::string::npos);
    CHECK(text.find("c:") != std::string::npos);
}

TEST_CASE("matrix evaluation is a ring homomorphism") {
    const RingPtr ring = freealg::make_ring({"X", "x1"}, {"c"});
    OracleConfig cfg;
    cfg.dim = 3;
    cfg.seed = 11;
    const Assignment a = random_assignment(cfg, *ring);

    CHECK(eval_matrix(Polynomial::constant(ring, 1), a, cfg) ==
          MatModP::identity(cfg.dim, cfg.modulus));
    CHECK(eval_matrix(Polynomial::zero(ring), a, cfg).is_zero());
    CHECK(eval_matrix(Polynomial::central(ring, 0), a, cfg) ==
          MatModP::scalar(cfg.dim, cfg.modulus, a.centrals[0]));
    CHECK(eval_matrix(Polynomial::constant(ring, -1), a, cfg) ==
          MatModP::scalar(cfg.dim, cfg.modulus, cfg.modulus - 1));
    // coefficients reduce mod p, however large
    CHECK(eval_matrix(Polynomial::constant(ring, Coeff(1) << 100), a, cfg) ==
          MatModP::scalar(cfg.dim, cfg.modulus,
                          ((Coeff(1) << 100) % cfg.modulus).convert_to<std::uint64_t>()));

    std::mt19937_64 eng(9);
    for (int i = 0; i < 15; ++i) {
        const Polynomial p = testsupport::random_polynomial(ring, eng, 5, 3, 2);
        const Polynomial q = testsupport::random_polynomial(ring, eng, 5, 3, 2);
        CHECK(eval_matrix(p + q, a, cfg) == eval_matrix(p, a, cfg) + eval_matrix(q, a, cfg));
        CHECK(eval_matrix(p * q, a, cfg) == eval_matrix(p, a, cfg) * eval_matrix(q, a, cfg));
    }
}

TEST_CASE("probabilistic verification separates unequal polynomials") {
    const RingPtr ring = freealg::make_ring({"x1", "x2"}, {});
    const Polynomial a = Polynomial::generator(ring, 0) * Polynomial::generator(ring, 1);
    const Polynomial b = Polynomial::generator(ring, 1) * Polynomial::generator(ring, 0);
    OracleConfig cfg;
    cfg.trials = 10;

    const ProbabilisticReport equal = probabilistic_verify(a, a, cfg);
    CHECK(equal.verdict == Verdict::EqualWhp);
    CHECK(!equal.witness.has_value());
    CHECK(equal.trials == 10);
    CHECK(verdict_token(equal.verdict) == "EQUAL_WHP");

    const ProbabilisticReport unequal = probabilistic_verify(a, b, cfg);
    REQUIRE(unequal.verdict == Verdict::Unequal);
    REQUIRE(unequal.witness.has_value());
    CHECK(unequal.witness_trial >= 0);
    CHECK(unequal.degree_bound == 2);
    CHECK(unequal.per_trial_failure_bound > 0.0);
    // soundness: the witness really does separate the two sides
    CHECK(eval_matrix(a, *unequal.witness, cfg) != eval_matrix(b, *unequal.witness, cfg));

    // identical seeds replay to the identical witness
    const ProbabilisticReport again = probabilistic_verify(a, b, cfg);
    CHECK(again.witness_trial == unequal.witness_trial);
    CHECK(again.witness->generators == unequal.witness->generators);
    CHECK(verdict_token(again.verdict) == "UNEQUAL");
}

TEST_CASE("one-dimensional evaluations cannot see noncommutativity") {
    const RingPtr ring = freealg::make_ring({"x1", "x2"}, {});
    const Polynomial a = Polynomial::generator(ring, 0) * Polynomial::generator(ring, 1);
    const Polynomial b = Polynomial::generator(ring, 1) * Polynomial::generator(ring, 0);
    OracleConfig cfg;
    cfg.dim = 1;
    cfg.trials = 30;
    CHECK(probabilistic_verify(a, b, cfg).verdict == Verdict::EqualWhp);
}

TEST_CASE("weakened centrality: commutant witnesses break the n = 3 identity") {
    OracleConfig cfg;
    cfg.trials = 200;

    const auto witness = weak_centrality_witness(cfg);
    REQUIRE(witness.has_value());

    // replay: same config finds the same trial again
    const auto replay = weak_centrality_witness(cfg);
    REQUIRE(replay.has_value());
    CHECK(replay->trial == witness->trial);
    CHECK(replay->assignment.generators == witness->assignment.generators);

    // the witness satisfies the weakened hypothesis [x1+x2+x3+X, X+Y] = 0 ...
    const auto& gens = witness->assignment.generators;
    REQUIRE(gens.size() == 5);
    const MatModP t = gens[0] + gens[1] + gens[2] + gens[3];
    const MatModP xy = gens[0] + gens[4];
    CHECK(t * xy == xy * t);
    CHECK(!xy.is_scalar()); // and is not a disguised central evaluation

    // ... yet the n = 3 identity fails on it
    identities::IdentityCase kase;
    kase.identity = identities::Identity::Thm1;
    kase.n = 3;
    const identities::Setup setup = identities::Setup::make(3, identities::Model::Free);
    const Polynomial lhs = identities::build_side(setup, kase, identities::Side::Lhs);
    const Polynomial rhs = identities::build_side(setup, kase, identities::Side::Rhs);
    CHECK(eval_matrix(lhs, witness->assignment, cfg) !=
          eval_matrix(rhs, witness->assignment, cfg));

    // control: a genuinely scalar X + Y satisfies the identity at every trial
    CHECK(!weak_centrality_witness(cfg, CommutantForm::Scalar).has_value());
}

TEST_CASE("weak centrality witness needs room for a non-scalar commutant") {
    OracleConfig cfg;
    cfg.dim = 1;
    CHECK_THROWS_AS((void)weak_centrality_witness(cfg), ContractViolation);
}
