#include "abelnc/cli.hpp"

#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <vector>

namespace cli {

namespace {

using freealg::Polynomial;
using identities::IdentityCase;
using nlohmann::ordered_json;

constexpr std::size_t kDiffTermLimit = 200;

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string_view mode_token(Mode mode) {
    switch (mode) {
    case Mode::Symbolic: return "symbolic";
    case Mode::Oracle: return "oracle";
    case Mode::Both: return "both";
    }
    return "?";
}

std::string diff_text(const Polynomial& diff) {
    if (diff.term_count() <= kDiffTermLimit)
        return freealg::serialize(diff);
    std::vector<Polynomial::Term> head(diff.terms().begin(),
                                       diff.terms().begin() + kDiffTermLimit);
    const std::size_t rest = diff.term_count() - kDiffTermLimit;
    return freealg::serialize(Polynomial::from_terms(diff.ring(), std::move(head))) +
           " + [truncated: " + std::to_string(rest) + " more terms]";
}

void warn_modulus(const oracle::OracleConfig& cfg, std::ostream& err) {
    if (!oracle::is_probable_prime(cfg.modulus))
        err << "warning: modulus " << cfg.modulus
            << " is not prime; the failure bound is meaningless\n";
}

ordered_json oracle_json(const oracle::OracleConfig& cfg, const oracle::ProbabilisticReport& probe,
                         const freealg::RingSpec& ring) {
    ordered_json j;
    j["dim"] = cfg.dim;
    j["modulus"] = cfg.modulus;
    j["trials"] = probe.trials;
    j["verdict"] = std::string(oracle::verdict_token(probe.verdict));
    j["degree_bound"] = probe.degree_bound;
    j["per_trial_failure_bound"] = probe.per_trial_failure_bound;
    if (probe.witness) {
        j["witness_trial"] = probe.witness_trial;
        j["witness"] = probe.witness->to_text(ring);
    }
    return j;
}

void oracle_text(const oracle::OracleConfig& cfg, const oracle::ProbabilisticReport& probe,
                 const freealg::RingSpec& ring, std::ostream& out) {
    out << "oracle: " << oracle::verdict_token(probe.verdict) << " (dim " << cfg.dim
        << ", modulus " << cfg.modulus << ", trials " << probe.trials << ", degree bound "
        << probe.degree_bound << ")\n";
    if (probe.witness) {
        out << "witness (trial " << probe.witness_trial << "):\n"
            << probe.witness->to_text(ring);
    }
}

int run_verify(const VerifyCommand& cmd, const GlobalOptions& global, std::ostream& out,
               std::ostream& err) {
    IdentityCase kase = cmd.kase;
    kase.validate();
    if (kase.n > global.warn_threshold)
        err << "warning: n = " << kase.n << " exceeds " << global.warn_threshold
            << "; expect very large intermediate polynomials\n";

    oracle::OracleConfig cfg = cmd.oracle_cfg;
    cfg.seed = global.seed;
    const bool with_oracle = cmd.mode != Mode::Symbolic;
    if (with_oracle)
        warn_modulus(cfg, err);

    const Stopwatch watch;
    const identities::Setup setup = identities::Setup::for_case(kase);
    const auto [lhs, rhs] = identities::build_sides(setup, kase);
    const Polynomial diff = lhs - rhs;

    std::optional<oracle::ProbabilisticReport> probe;
    if (with_oracle)
        probe = oracle::probabilistic_verify(lhs, rhs, cfg);
    const double elapsed = global.no_timing ? 0.0 : watch.ms();

    const bool equal = cmd.mode == Mode::Oracle ? probe->verdict == oracle::Verdict::EqualWhp
                                                : diff.is_zero();

    if (global.format == OutputFormat::Json) {
        ordered_json j;
        j["identity"] = std::string(identities::identity_token(kase.identity));
        j["n"] = kase.n;
        if (kase.m)
            j["m"] = *kase.m;
        j["model"] = std::string(identities::model_token(setup.model()));
        j["equal"] = equal;
        j["lhs_terms"] = lhs.term_count();
        j["rhs_terms"] = rhs.term_count();
        j["diff"] = diff_text(diff);
        j["elapsed_ms"] = elapsed;
        if (probe) {
            j["seed"] = cfg.seed;
            j["oracle"] = oracle_json(cfg, *probe, *setup.ring());
        }
        out << j.dump(2) << "\n";
    } else {
        out << "identity: " << identities::identity_token(kase.identity) << "\n";
        out << "n: " << kase.n << "\n";
        if (kase.m)
            out << "m: " << *kase.m << "\n";
        out << "model: " << identities::model_token(setup.model()) << "\n";
        out << "equal: " << (equal ? "true" : "false") << "\n";
        out << "lhs_terms: " << lhs.term_count() << "\n";
        out << "rhs_terms: " << rhs.term_count() << "\n";
        out << "diff: " << diff_text(diff) << "\n";
        out << "elapsed_ms: " << elapsed << "\n";
        if (probe) {
            out << "seed: " << cfg.seed << "\n";
            oracle_text(cfg, *probe, *setup.ring(), out);
        }
    }
    return equal ? 0 : 1;
}

int run_expand(const ExpandCommand& cmd, const GlobalOptions& global, std::ostream& out,
               std::ostream&) {
    const freealg::RingPtr ring = parse_ring_decl(cmd.ring_decl);
    const Expr ast = parse_expr(cmd.expr, *ring);
    const Polynomial result = evaluate(ast, ring);
    if (global.format == OutputFormat::Json) {
        ordered_json j;
        j["expr"] = cmd.expr;
        j["result"] = freealg::serialize(result);
        j["terms"] = result.term_count();
        out << j.dump(2) << "\n";
    } else {
        out << freealg::serialize(result) << "\n";
    }
    return 0;
}

int run_fuzz(const FuzzCommand& cmd, const GlobalOptions& global, std::ostream& out,
             std::ostream& err) {
    const freealg::RingPtr ring = parse_ring_decl(cmd.ring_decl);
    const Polynomial lhs = evaluate(parse_expr(cmd.lhs, *ring), ring);
    const Polynomial rhs = evaluate(parse_expr(cmd.rhs, *ring), ring);

    oracle::OracleConfig cfg = cmd.oracle_cfg;
    cfg.seed = global.seed;
    const bool with_symbolic = cmd.mode != Mode::Oracle;
    const bool with_oracle = cmd.mode != Mode::Symbolic;
    if (with_oracle)
        warn_modulus(cfg, err);

    const Stopwatch watch;
    std::optional<Polynomial> diff;
    if (with_symbolic)
        diff = lhs - rhs;
    std::optional<oracle::ProbabilisticReport> probe;
    if (with_oracle)
        probe = oracle::probabilistic_verify(lhs, rhs, cfg);
    const double elapsed = global.no_timing ? 0.0 : watch.ms();

    const bool equal =
        with_symbolic ? diff->is_zero() : probe->verdict == oracle::Verdict::EqualWhp;

    if (global.format == OutputFormat::Json) {
        ordered_json j;
        j["mode"] = std::string(mode_token(cmd.mode));
        j["equal"] = equal;
        j["lhs_terms"] = lhs.term_count();
        j["rhs_terms"] = rhs.term_count();
        if (diff)
            j["diff"] = diff_text(*diff);
        j["elapsed_ms"] = elapsed;
        if (probe) {
            j["seed"] = cfg.seed;
            j["oracle"] = oracle_json(cfg, *probe, *ring);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "mode: " << mode_token(cmd.mode) << "\n";
        out << "equal: " << (equal ? "true" : "false") << "\n";
        out << "lhs_terms: " << lhs.term_count() << "\n";
        out << "rhs_terms: " << rhs.term_count() << "\n";
        if (diff)
            out << "diff: " << diff_text(*diff) << "\n";
        out << "elapsed_ms: " << elapsed << "\n";
        if (probe) {
            out << "seed: " << cfg.seed << "\n";
            oracle_text(cfg, *probe, *ring, out);
        }
    }
    return equal ? 0 : 1;
}

int run_bench(const BenchCommand& cmd, const GlobalOptions& global, std::ostream& out,
              std::ostream& err) {
    if (cmd.n_min < 0 || cmd.n_min > cmd.n_max)
        throw freealg::ContractViolation("bench needs 0 <= n-min <= n-max");
    if (cmd.n_max > global.warn_threshold)
        err << "warning: n-max = " << cmd.n_max << " exceeds " << global.warn_threshold
            << "; expect very large intermediate polynomials\n";

    ordered_json rows = ordered_json::array();
    if (global.format == OutputFormat::Text)
        out << "identity      n   lhs_terms   rhs_terms   serial_ms   parallel_ms\n";

    for (int n = cmd.n_min; n <= cmd.n_max; ++n) {
        // polar2 needs m < n; benchmark its heaviest valid case
        if (cmd.identity == identities::Identity::Polar2 && n == 0)
            continue;
        IdentityCase kase{cmd.identity, n, {}};
        if (cmd.identity == identities::Identity::Polar2)
            kase.m = n - 1;
        const identities::Setup setup = identities::Setup::for_case(kase);

        const Stopwatch serial_watch;
        const auto serial = identities::build_sides(setup, kase, identities::Execution::Serial);
        const double serial_ms = global.no_timing ? 0.0 : serial_watch.ms();

        const Stopwatch parallel_watch;
        const auto parallel =
            identities::build_sides(setup, kase, identities::Execution::Parallel);
        const double parallel_ms = global.no_timing ? 0.0 : parallel_watch.ms();

        if (serial.first != parallel.first || serial.second != parallel.second)
            throw std::logic_error("serial and parallel builders disagree");

        if (global.format == OutputFormat::Json) {
            ordered_json row;
            row["identity"] = std::string(identities::identity_token(cmd.identity));
            row["n"] = n;
            if (kase.m)
                row["m"] = *kase.m;
            row["lhs_terms"] = serial.first.term_count();
            row["rhs_terms"] = serial.second.term_count();
            row["serial_ms"] = serial_ms;
            row["parallel_ms"] = parallel_ms;
            rows.push_back(std::move(row));
        } else {
            out << std::left << std::setw(12) << identities::identity_token(cmd.identity)
                << std::right << std::setw(3) << n << std::setw(12)
                << serial.first.term_count() << std::setw(12) << serial.second.term_count()
                << std::setw(12) << std::fixed << std::setprecision(2) << serial_ms
                << std::setw(14) << parallel_ms << "\n";
            out.unsetf(std::ios::fixed);
            out << std::setprecision(6);
        }
    }
    if (global.format == OutputFormat::Json)
        out << rows.dump(2) << "\n";
    return 0;
}

int run_one(const VerifyCommand& cmd, const GlobalOptions& global, std::ostream& out,
            std::ostream& err) {
    return run_verify(cmd, global, out, err);
}

int run_one(const ExpandCommand& cmd, const GlobalOptions& global, std::ostream& out,
            std::ostream& err) {
    return run_expand(cmd, global, out, err);
}

int run_one(const FuzzCommand& cmd, const GlobalOptions& global, std::ostream& out,
            std::ostream& err) {
    return run_fuzz(cmd, global, out, err);
}

int run_one(const BenchCommand& cmd, const GlobalOptions& global, std::ostream& out,
            std::ostream& err) {
    return run_bench(cmd, global, out, err);
}

} // namespace

std::optional<Mode> mode_from_token(std::string_view token) {
    if (token == "symbolic")
        return Mode::Symbolic;
    if (token == "oracle")
        return Mode::Oracle;
    if (token == "both")
        return Mode::Both;
    return std::nullopt;
}

std::optional<OutputFormat> format_from_token(std::string_view token) {
    if (token == "text")
        return OutputFormat::Text;
    if (token == "json")
        return OutputFormat::Json;
    return std::nullopt;
}

int run(const Command& command, std::ostream& out, std::ostream& err) {
    try {
        return std::visit(
            [&](const auto& cmd) { return run_one(cmd, command.global, out, err); },
            command.action);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const freealg::RingMismatchError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const freealg::ContractViolation& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cli
