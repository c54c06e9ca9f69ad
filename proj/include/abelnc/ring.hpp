#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freealg {

/// Two polynomials met whose ring declarations differ.
class RingMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its contract (non-central substitution
/// target, out-of-range subset element, wrong model for an identity, ...).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using VarId = std::uint32_t;

enum class VarKind { Noncommuting, Central };

struct VarRef {
    VarKind kind;
    VarId id;

    friend bool operator==(const VarRef&, const VarRef&) = default;
};

/// Declares one algebra instance: an ordered list of noncommuting generators
/// over the integers extended by the listed central (commuting) variables.
/// Variable identity is positional within its kind; names exist for the text
/// syntax and error messages.
///
/// Names must match [A-Za-z][A-Za-z0-9_]* and be distinct across both lists.
class RingSpec {
public:
    RingSpec(std::vector<std::string> noncommuting, std::vector<std::string> central);

    std::size_t generator_count() const { return noncommuting_.size(); }
    std::size_t central_count() const { return central_.size(); }

    const std::string& generator_name(VarId id) const { return noncommuting_.at(id); }
    const std::string& central_name(VarId id) const { return central_.at(id); }
    const std::string& name_of(VarRef ref) const;

    std::optional<VarRef> find(std::string_view name) const;

    /// Like find(), but throws ContractViolation for unknown names.
    VarRef require(std::string_view name) const;

    /// One-line rendering for error messages, e.g. "<X,x1,x2 | c>".
    std::string describe() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    std::vector<std::string> noncommuting_;
    std::vector<std::string> central_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> noncommuting, std::vector<std::string> central);

/// Throws RingMismatchError naming both specs unless they are equal
/// (same pointer or same variable lists).
void check_same_ring(const RingSpec& a, const RingSpec& b);

} // namespace freealg
