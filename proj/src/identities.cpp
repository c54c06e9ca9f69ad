#include "abelnc/identities.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>

namespace identities {

using freealg::ContractViolation;
using freealg::Polynomial;

namespace {

struct IdentityInfo {
    Identity id;
    std::string_view token;
    Model model;
};

constexpr std::array<IdentityInfo, 12> kIdentityInfo = {{
    {Identity::Thm1, "thm1", Model::UniversalXY},
    {Identity::Thm2, "thm2", Model::UniversalXY},
    {Identity::Thm4, "thm4", Model::UniversalXY},
    {Identity::Thm5, "thm5", Model::UniversalXYV},
    {Identity::Polar1, "polar1", Model::Free},
    {Identity::Polar2, "polar2", Model::Free},
    {Identity::Abel1, "abel1", Model::Commutative},
    {Identity::Abel2, "abel2", Model::Commutative},
    {Identity::Abel3, "abel3", Model::Commutative},
    {Identity::Hurwitz1, "hurwitz1", Model::Commutative},
    {Identity::Hurwitz2, "hurwitz2", Model::Commutative},
    {Identity::Hurwitz3, "hurwitz3", Model::Commutative},
}};

const IdentityInfo& info_for(Identity id) {
    const auto index = static_cast<std::size_t>(id);
    return kIdentityInfo.at(index);
}

// Partitioned sum of addend(i) for i in [0, count). Addition of canonical
// integer polynomials is exact and commutative, so the partial sums combine
// to the same canonical result regardless of how the range was split.
template <class AddendFn>
Polynomial partitioned_sum(const RingPtr& ring, std::uint64_t count, const AddendFn& addend,
                           Execution exec) {
    if (exec == Execution::Serial || count < 2 || omp_get_max_threads() <= 1 ||
        omp_in_parallel()) {
        Polynomial acc = Polynomial::zero(ring);
        for (std::uint64_t i = 0; i < count; ++i)
            acc += addend(i);
        return acc;
    }
    std::vector<Polynomial> partials(omp_get_max_threads(), Polynomial::zero(ring));
#pragma omp parallel
    {
        Polynomial local = Polynomial::zero(ring);
#pragma omp for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            local += addend(static_cast<std::uint64_t>(i));
        partials[omp_get_thread_num()] = std::move(local);
    }
    Polynomial acc = Polynomial::zero(ring);
    for (Polynomial& part : partials)
        acc += part;
    return acc;
}

std::uint64_t full_mask(int n) {
    return n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
}

RingPtr setup_ring(int n, Model model) {
    if (n < 0)
        throw ContractViolation("n must be nonnegative");
    if (n >= 63)
        throw ContractViolation("subset masks need n < 63");
    std::vector<std::string> gens;
    std::vector<std::string> centrals;
    auto push_xs = [&](std::vector<std::string>& out) {
        for (int s = 1; s <= n; ++s)
            out.push_back("x" + std::to_string(s));
    };
    switch (model) {
    case Model::UniversalXY:
        gens.push_back("X");
        push_xs(gens);
        centrals = {"c"};
        break;
    case Model::UniversalXYV:
        gens.push_back("X");
        push_xs(gens);
        centrals = {"d"};
        break;
    case Model::Free:
        gens.push_back("X");
        push_xs(gens);
        gens.push_back("Y");
        break;
    case Model::Commutative:
        centrals = {"X", "Y"};
        push_xs(centrals);
        centrals.push_back("z");
        break;
    }
    return freealg::make_ring(std::move(gens), std::move(centrals));
}

Polynomial setup_y(const RingPtr& ring, int n, Model model, const Polynomial& X) {
    switch (model) {
    case Model::UniversalXY:
        return Polynomial::central(ring, 0) - X;
    case Model::UniversalXYV: {
        Polynomial y = Polynomial::central(ring, 0) - X;
        for (int s = 1; s <= n; ++s)
            y -= Polynomial::generator(ring, static_cast<freealg::VarId>(s));
        return y;
    }
    case Model::Free:
        return Polynomial::generator(ring, static_cast<freealg::VarId>(n + 1));
    case Model::Commutative:
        return Polynomial::central(ring, 1);
    }
    throw ContractViolation("unknown model");
}

// Validates S as a subset of {1..n} and encodes it as a bitmask.
std::uint64_t subset_mask(int n, const std::vector<int>& S) {
    std::uint64_t mask = 0;
    for (int s : S) {
        if (s < 1 || s > n)
            throw ContractViolation("element " + std::to_string(s) + " is not in {1.." +
                                    std::to_string(n) + "}");
        const std::uint64_t bit = std::uint64_t{1} << (s - 1);
        if (mask & bit)
            throw ContractViolation("repeated element " + std::to_string(s) + " in subset");
        mask |= bit;
    }
    return mask;
}

std::uint32_t u32(int value) {
    return static_cast<std::uint32_t>(value);
}

Polynomial thm1_lhs(const Setup& s, const Polynomial& Y, Execution exec) {
    const int n = s.n();
    return partitioned_sum(
        s.ring(), std::uint64_t{1} << n,
        [&](std::uint64_t mask) {
            const int k = std::popcount(mask);
            const Polynomial xS = s.subset_sum_mask(mask);
            return pow(s.X() + xS, u32(k)) * pow(Y - xS, u32(n - k));
        },
        exec);
}

// Sum over ordered tuples of distinct elements, enumerated depth-first with
// the partial word product carried down; nothing is deduplicated. The k = 0
// root contributes (X+Y)^n.
Polynomial thm1_rhs(const Setup& s, const Polynomial& Y, Execution exec,
                    std::uint64_t* addend_count) {
    const int n = s.n();
    std::vector<Polynomial> xy_pow;
    xy_pow.reserve(n + 1);
    xy_pow.push_back(s.one());
    const Polynomial xy = s.X() + Y;
    for (int j = 1; j <= n; ++j)
        xy_pow.push_back(xy_pow.back() * xy);

    auto dfs = [&](auto&& self, const Polynomial& prefix, std::uint32_t used, int k,
                   std::uint64_t& count) -> Polynomial {
        ++count;
        Polynomial acc = xy_pow[n - k] * prefix;
        for (int i = 0; i < n; ++i) {
            if (used & (1u << i))
                continue;
            acc += self(self, prefix * s.x(i + 1), used | (1u << i), k + 1, count);
        }
        return acc;
    };

    std::uint64_t count = 0;
    Polynomial total = s.zero();
    if (exec == Execution::Serial || n < 2 || omp_get_max_threads() <= 1 || omp_in_parallel()) {
        total = dfs(dfs, s.one(), 0, 0, count);
    } else {
        // One branch per first tuple element; the empty tuple is the root.
        total = xy_pow[n];
        count = 1;
        std::vector<Polynomial> branch(n, s.zero());
        std::vector<std::uint64_t> branch_count(n, 0);
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i)
            branch[i] = dfs(dfs, s.x(i + 1), 1u << i, 1, branch_count[i]);
        for (int i = 0; i < n; ++i) {
            total += branch[i];
            count += branch_count[i];
        }
    }
    if (addend_count)
        *addend_count = count;
    return total;
}

Polynomial thm2_lhs(const Setup& s, const Polynomial& Y, Execution exec) {
    const int n = s.n();
    return partitioned_sum(
        s.ring(), std::uint64_t{1} << n,
        [&](std::uint64_t mask) {
            const int k = std::popcount(mask);
            if (k == 0)
                return pow(Y, u32(n)); // X(X+x(∅))^{-1} reads as 1
            const Polynomial xS = s.subset_sum_mask(mask);
            return s.X() * pow(s.X() + xS, u32(k - 1)) * pow(Y - xS, u32(n - k));
        },
        exec);
}

Polynomial thm4_lhs(const Setup& s, const Polynomial& Y, Execution exec) {
    const int n = s.n();
    const Polynomial xV = s.subset_sum_mask(full_mask(n));
    return partitioned_sum(
        s.ring(), std::uint64_t{1} << n,
        [&](std::uint64_t mask) {
            const int k = std::popcount(mask);
            if (k == 0 && k == n)
                return s.one(); // n = 0: both conventions at once
            if (k == 0)
                return pow(Y, u32(n - 1)) * (Y - xV);
            if (k == n)
                return s.X() * pow(s.X() + xV, u32(n - 1));
            const Polynomial xS = s.subset_sum_mask(mask);
            return s.X() * pow(s.X() + xS, u32(k - 1)) * pow(Y - xS, u32(n - k - 1)) * (Y - xV);
        },
        exec);
}

Polynomial thm4_rhs(const Setup& s, const Polynomial& Y) {
    const int n = s.n();
    if (n == 0)
        return s.one();
    const Polynomial xV = s.subset_sum_mask(full_mask(n));
    return (s.X() + Y - xV) * pow(s.X() + Y, u32(n - 1));
}

Polynomial thm5_lhs(const Setup& s, const Polynomial& Y, Execution exec) {
    const int n = s.n();
    const Polynomial xV = s.subset_sum_mask(full_mask(n));
    return partitioned_sum(
        s.ring(), std::uint64_t{1} << n,
        [&](std::uint64_t mask) {
            const int k = std::popcount(mask);
            if (k == 0 && k == n)
                return s.one();
            if (k == 0)
                return pow(Y + xV, u32(n - 1)) * Y;
            if (k == n)
                return s.X() * pow(s.X() + xV, u32(n - 1));
            const Polynomial xS = s.subset_sum_mask(mask);
            const Polynomial xRest = s.subset_sum_mask(full_mask(n) & ~mask);
            return s.X() * pow(s.X() + xS, u32(k - 1)) * pow(Y + xRest, u32(n - k - 1)) * Y;
        },
        exec);
}

Polynomial thm5_rhs(const Setup& s, const Polynomial& Y) {
    const int n = s.n();
    if (n == 0)
        return s.one();
    const Polynomial xV = s.subset_sum_mask(full_mask(n));
    return (s.X() + Y) * pow(s.X() + Y + xV, u32(n - 1));
}

// The classical one-variable identities, explicit binomial/factorial
// coefficients and all, built over the commutative setup's z.
Polynomial abel_side(int which, Side side, const Setup& s, Execution exec) {
    const int n = s.n();
    const Polynomial& X = s.X();
    const Polynomial& Y = s.Y();
    const Polynomial& Z = s.z();

    if (side == Side::Lhs) {
        return partitioned_sum(
            s.ring(), static_cast<std::uint64_t>(n) + 1,
            [&](std::uint64_t ku) {
                const int k = static_cast<int>(ku);
                const Polynomial kZ = Coeff(k) * Z;
                Polynomial addend = s.zero();
                switch (which) {
                case 1:
                    addend = pow(X + kZ, u32(k)) * pow(Y - kZ, u32(n - k));
                    break;
                case 2:
                    addend = k == 0 ? pow(Y, u32(n))
                                    : X * pow(X + kZ, u32(k - 1)) * pow(Y - kZ, u32(n - k));
                    break;
                case 3: {
                    const Polynomial left = k == 0 ? s.one() : X * pow(X + kZ, u32(k - 1));
                    const Polynomial right =
                        k == n ? s.one()
                               : Y * pow(Y + Coeff(n - k) * Z, u32(n - k - 1));
                    addend = left * right;
                    break;
                }
                }
                return binomial(u32(n), u32(k)) * addend;
            },
            exec);
    }

    switch (which) {
    case 1:
        return partitioned_sum(
            s.ring(), static_cast<std::uint64_t>(n) + 1,
            [&](std::uint64_t ku) {
                const int k = static_cast<int>(ku);
                return factorial_quotient(u32(n), u32(k)) *
                       (pow(X + Y, u32(k)) * pow(Z, u32(n - k)));
            },
            exec);
    case 2:
        return pow(X + Y, u32(n));
    default:
        return n == 0 ? s.one() : (X + Y) * pow(X + Y + Coeff(n) * Z, u32(n - 1));
    }
}

} // namespace

Model model_for(Identity identity) {
    return info_for(identity).model;
}

std::string_view identity_token(Identity identity) {
    return info_for(identity).token;
}

std::optional<Identity> identity_from_token(std::string_view token) {
    for (const IdentityInfo& info : kIdentityInfo)
        if (info.token == token)
            return info.id;
    return std::nullopt;
}

const std::vector<Identity>& catalog() {
    static const std::vector<Identity> all = [] {
        std::vector<Identity> v;
        for (const IdentityInfo& info : kIdentityInfo)
            v.push_back(info.id);
        return v;
    }();
    return all;
}

std::string_view model_token(Model model) {
    switch (model) {
    case Model::UniversalXY: return "UNIVERSAL_XY";
    case Model::UniversalXYV: return "UNIVERSAL_XYV";
    case Model::Free: return "FREE";
    case Model::Commutative: return "COMMUTATIVE";
    }
    return "?";
}

void IdentityCase::validate() const {
    if (n < 0)
        throw ContractViolation("n must be nonnegative");
    if (identity == Identity::Polar2) {
        if (!m)
            throw ContractViolation("polar2 requires m");
        if (*m < 0 || *m >= n)
            throw ContractViolation("polar2 requires 0 <= m < n");
    } else if (m) {
        throw ContractViolation("m is only meaningful for polar2");
    }
}

Setup::Setup(int n, Model model)
    : n_(n),
      model_(model),
      ring_(setup_ring(n, model)),
      X_(model == Model::Commutative ? Polynomial::central(ring_, 0)
                                     : Polynomial::generator(ring_, 0)),
      Y_(setup_y(ring_, n, model, X_)) {
    const bool commutative = model == Model::Commutative;
    for (int s = 1; s <= n; ++s)
        xs_.push_back(commutative ? Polynomial::central(ring_, static_cast<freealg::VarId>(1 + s))
                                  : Polynomial::generator(ring_, static_cast<freealg::VarId>(s)));
    if (commutative)
        z_ = Polynomial::central(ring_, static_cast<freealg::VarId>(n + 2));
}

Setup Setup::make(int n, Model model) {
    return Setup(n, model);
}

Setup Setup::for_case(const IdentityCase& kase) {
    kase.validate();
    return Setup(kase.n, model_for(kase.identity));
}

const Polynomial& Setup::x(int s) const {
    if (s < 1 || s > n_)
        throw ContractViolation("element " + std::to_string(s) + " is not in {1.." +
                                std::to_string(n_) + "}");
    return xs_[static_cast<std::size_t>(s - 1)];
}

const Polynomial& Setup::z() const {
    if (!z_)
        throw ContractViolation("z exists only in the commutative model");
    return *z_;
}

Polynomial Setup::subset_sum_mask(std::uint64_t mask) const {
    if (n_ < 64 && (mask >> n_) != 0)
        throw ContractViolation("subset mask out of range");
    Polynomial acc = zero();
    for (int s = 0; s < n_; ++s)
        if (mask & (std::uint64_t{1} << s))
            acc += xs_[static_cast<std::size_t>(s)];
    return acc;
}

Polynomial subset_sum(const Setup& setup, const std::vector<int>& S) {
    return setup.subset_sum_mask(subset_mask(setup.n(), S));
}

Polynomial build_side_with_y(const Setup& setup, const IdentityCase& kase, Side side,
                             const Polynomial& y, Execution exec) {
    kase.validate();
    if (setup.n() != kase.n)
        throw ContractViolation("setup and case disagree on n");
    freealg::check_same_ring(*setup.ring(), *y.ring());

    switch (kase.identity) {
    case Identity::Thm1:
        return side == Side::Lhs ? thm1_lhs(setup, y, exec) : thm1_rhs(setup, y, exec, nullptr);
    case Identity::Thm2:
        return side == Side::Lhs ? thm2_lhs(setup, y, exec) : pow(setup.X() + y, u32(kase.n));
    case Identity::Thm4:
        return side == Side::Lhs ? thm4_lhs(setup, y, exec) : thm4_rhs(setup, y);
    case Identity::Thm5:
        return side == Side::Lhs ? thm5_lhs(setup, y, exec) : thm5_rhs(setup, y);
    case Identity::Polar1:
    case Identity::Polar2:
        throw ContractViolation("polar cases are alternating sums; use polarization_sum");
    case Identity::Abel1:
    case Identity::Abel2:
    case Identity::Abel3: {
        if (setup.model() != Model::Commutative)
            throw ContractViolation("abel identities live in the commutative model");
        const int which = 1 + static_cast<int>(kase.identity) - static_cast<int>(Identity::Abel1);
        return abel_side(which, side, setup, exec);
    }
    case Identity::Hurwitz1:
        if (setup.model() != Model::Commutative)
            throw ContractViolation("hurwitz identities live in the commutative model");
        return side == Side::Lhs ? thm1_lhs(setup, y, exec) : thm1_rhs(setup, y, exec, nullptr);
    case Identity::Hurwitz2:
        if (setup.model() != Model::Commutative)
            throw ContractViolation("hurwitz identities live in the commutative model");
        return side == Side::Lhs ? thm2_lhs(setup, y, exec) : pow(setup.X() + y, u32(kase.n));
    case Identity::Hurwitz3:
        if (setup.model() != Model::Commutative)
            throw ContractViolation("hurwitz identities live in the commutative model");
        return side == Side::Lhs ? thm5_lhs(setup, y, exec) : thm5_rhs(setup, y);
    }
    throw ContractViolation("unknown identity");
}

Polynomial build_side(const Setup& setup, const IdentityCase& kase, Side side, Execution exec) {
    return build_side_with_y(setup, kase, side, setup.Y(), exec);
}

Polynomial build_side_serial(const Setup& setup, const IdentityCase& kase, Side side) {
    return build_side(setup, kase, side, Execution::Serial);
}

Polynomial polarization_sum(const Setup& setup, int m, Execution exec) {
    if (m < 0)
        throw ContractViolation("exponent must be nonnegative");
    const int n = setup.n();
    return partitioned_sum(
        setup.ring(), std::uint64_t{1} << n,
        [&](std::uint64_t mask) {
            const int k = std::popcount(mask);
            Polynomial addend = pow(setup.X() + setup.subset_sum_mask(mask), u32(m));
            return (n - k) % 2 ? -addend : addend;
        },
        exec);
}

Polynomial alternating_sum(const Setup& setup, const Polynomial& base, const std::vector<int>& W,
                           int m) {
    if (m < 0)
        throw ContractViolation("exponent must be nonnegative");
    freealg::check_same_ring(*setup.ring(), *base.ring());
    subset_mask(setup.n(), W);
    const int w = static_cast<int>(W.size());
    Polynomial acc = setup.zero();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w); ++mask) {
        const int k = std::popcount(mask);
        Polynomial shifted = base;
        for (int i = 0; i < w; ++i)
            if (mask & (std::uint64_t{1} << i))
                shifted += setup.x(W[static_cast<std::size_t>(i)]);
        const Polynomial addend = pow(shifted, u32(m));
        acc += (w - k) % 2 ? -addend : addend;
    }
    return acc;
}

Polynomial permutation_sum(const Setup& setup) {
    const int n = setup.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        order[static_cast<std::size_t>(i)] = i + 1;
    Polynomial acc = setup.zero();
    do {
        Polynomial prod = setup.one();
        for (int s : order)
            prod *= setup.x(s);
        acc += prod;
    } while (std::next_permutation(order.begin(), order.end()));
    return acc;
}

std::uint64_t thm1_rhs_addend_count(int n) {
    const Setup setup = Setup::make(n, Model::Free);
    std::uint64_t count = 0;
    thm1_rhs(setup, setup.Y(), Execution::Serial, &count);
    return count;
}

std::pair<Polynomial, Polynomial> build_sides(const Setup& setup, const IdentityCase& kase,
                                              Execution exec) {
    kase.validate();
    if (kase.identity == Identity::Polar1)
        return {polarization_sum(setup, kase.n, exec), permutation_sum(setup)};
    if (kase.identity == Identity::Polar2)
        return {polarization_sum(setup, *kase.m, exec), setup.zero()};
    return {build_side(setup, kase, Side::Lhs, exec), build_side(setup, kase, Side::Rhs, exec)};
}

VerificationReport verify(const IdentityCase& kase, Execution exec) {
    kase.validate();
    const auto start = std::chrono::steady_clock::now();
    const Setup setup = Setup::for_case(kase);
    auto [lhs, rhs] = build_sides(setup, kase, exec);
    Polynomial diff = lhs - rhs;
    const auto end = std::chrono::steady_clock::now();
    const double elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return VerificationReport{kase,
                              setup.model(),
                              diff.is_zero(),
                              lhs.term_count(),
                              rhs.term_count(),
                              std::move(diff),
                              elapsed_ms};
}

Polynomial free_diff_thm1(int n) {
    const Setup setup = Setup::make(n, Model::Free);
    const IdentityCase kase{Identity::Thm1, n, {}};
    return build_side(setup, kase, Side::Lhs) - build_side(setup, kase, Side::Rhs);
}

Polynomial free_diff_thm2(int n) {
    const Setup setup = Setup::make(n, Model::Free);
    const IdentityCase kase{Identity::Thm2, n, {}};
    return build_side(setup, kase, Side::Lhs) - build_side(setup, kase, Side::Rhs);
}

Coeff binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    Coeff acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= n - i;
        acc /= i + 1; // exact: acc is C(n, i+1) after this step
    }
    return acc;
}

Coeff factorial(unsigned n) {
    Coeff acc = 1;
    for (unsigned i = 2; i <= n; ++i)
        acc *= i;
    return acc;
}

Coeff factorial_quotient(unsigned n, unsigned k) {
    if (k > n)
        throw ContractViolation("factorial_quotient needs k <= n");
    Coeff acc = 1;
    for (unsigned i = k + 1; i <= n; ++i)
        acc *= i;
    return acc;
}

} // namespace identities
