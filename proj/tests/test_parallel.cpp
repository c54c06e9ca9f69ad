// The sandboxy CI box may expose a single core; omp_set_num_threads forces
// real team sizes so the partitioned paths actually split work.

#include "abelnc/identities.hpp"
#include "abelnc/oracle.hpp"
#include "abelnc/polynomial.hpp"

#include "support.hpp"

#include <doctest.h>

#include <omp.h>

using namespace identities;
using freealg::Polynomial;
using freealg::RingPtr;

namespace {

struct ThreadCount {
    explicit ThreadCount(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~ThreadCount() { omp_set_num_threads(saved); }
    int saved;
};

} // namespace

TEST_CASE("large products take the partitioned path and agree with the reference") {
    const ThreadCount guard(4);
    const RingPtr ring = freealg::make_ring({"X", "x1", "x2"}, {"c"});
    const Polynomial base = Polynomial::generator(ring, 0) + Polynomial::generator(ring, 1) +
                            Polynomial::generator(ring, 2);
    const Polynomial mixed = base - Polynomial::central(ring, 0);

    // 243 x 363 cross products, far beyond the parallel grain
    const Polynomial p = pow(base, 5);
    const Polynomial q = pow(mixed, 5);
    REQUIRE(p.term_count() * q.term_count() > 4096);
    const Polynomial parallel = p * q;
    CHECK(parallel == mul_serial(p, q));

    const ThreadCount single(1);
    CHECK(parallel == p * q);
}

TEST_CASE("every catalog case builds identically in serial and parallel") {
    const ThreadCount guard(4);
    for (const Identity id : catalog()) {
        IdentityCase kase;
        kase.identity = id;
        kase.n = 4;
        if (id == Identity::Polar2)
            kase.m = 3;
        const Setup setup = Setup::for_case(kase);
        const auto parallel = build_sides(setup, kase, Execution::Parallel);
        const auto serial = build_sides(setup, kase, Execution::Serial);
        CHECK(parallel.first == serial.first);
        CHECK(parallel.second == serial.second);
    }
}

TEST_CASE("build_side_serial is the same function, minus the threads") {
    const ThreadCount guard(4);
    const IdentityCase kase{Identity::Thm1, 5, std::nullopt};
    const Setup setup = Setup::for_case(kase);
    CHECK(build_side_serial(setup, kase, Side::Rhs) == build_side(setup, kase, Side::Rhs));
    CHECK(build_side_serial(setup, kase, Side::Lhs) == build_side(setup, kase, Side::Lhs));
}

TEST_CASE("polarization sums are thread-count independent") {
    for (const int threads : {1, 2, 4}) {
        const ThreadCount guard(threads);
        const Setup s = Setup::make(5, Model::Free);
        CHECK(polarization_sum(s, 5, Execution::Parallel) ==
              polarization_sum(s, 5, Execution::Serial));
    }
}

TEST_CASE("oracle verdicts and witnesses do not depend on the team size") {
    const Setup s = Setup::make(2, Model::UniversalXY);
    const IdentityCase thm1{Identity::Thm1, 2, std::nullopt};
    const IdentityCase thm2{Identity::Thm2, 2, std::nullopt};
    const Polynomial lhs = build_side(s, thm1, Side::Lhs);
    const Polynomial rhs = build_side(s, thm2, Side::Rhs);

    oracle::OracleConfig cfg;
    cfg.trials = 16;

    const ThreadCount four(4);
    const auto wide = oracle::probabilistic_verify(lhs, rhs, cfg);
    const ThreadCount one(1);
    const auto narrow = oracle::probabilistic_verify(lhs, rhs, cfg);

    REQUIRE(wide.verdict == oracle::Verdict::Unequal);
    CHECK(narrow.verdict == wide.verdict);
    CHECK(narrow.witness_trial == wide.witness_trial);
    CHECK(narrow.witness->generators == wide.witness->generators);
    CHECK(narrow.witness->centrals == wide.witness->centrals);
}
