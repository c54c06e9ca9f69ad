#pragma once

#include "abelnc/expr.hpp"
#include "abelnc/identities.hpp"
#include "abelnc/oracle.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace cli {

enum class Mode { Symbolic, Oracle, Both };
enum class OutputFormat { Text, Json };

std::optional<Mode> mode_from_token(std::string_view token);
std::optional<OutputFormat> format_from_token(std::string_view token);

struct GlobalOptions {
    OutputFormat format = OutputFormat::Text;
    std::uint64_t seed = 0;
    /// n above this draws a stderr warning (term counts explode).
    int warn_threshold = 8;
    /// Report elapsed_ms as 0 so identical inputs give byte-identical output.
    bool no_timing = false;
};

struct VerifyCommand {
    identities::IdentityCase kase;
    Mode mode = Mode::Symbolic;
    oracle::OracleConfig oracle_cfg; // seed is overwritten from GlobalOptions
};

struct ExpandCommand {
    std::string ring_decl;
    std::string expr;
};

struct FuzzCommand {
    std::string ring_decl;
    std::string lhs;
    std::string rhs;
    Mode mode = Mode::Oracle;
    oracle::OracleConfig oracle_cfg;
};

struct BenchCommand {
    identities::Identity identity = identities::Identity::Thm1;
    int n_min = 0;
    int n_max = 6;
};

struct Command {
    GlobalOptions global;
    std::variant<VerifyCommand, ExpandCommand, FuzzCommand, BenchCommand> action;
};

/// Executes one command, writing the report to `out` and warnings/errors to
/// `err`. Returns 0 when the identity holds / the expression expanded, 1 when
/// an identity fails (nonzero diff or UNEQUAL), 2 on usage/parse errors.
int run(const Command& command, std::ostream& out, std::ostream& err);

} // namespace cli
