#include "abelnc/ring.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace freealg {

namespace {

bool valid_name(std::string_view name) {
    if (name.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(name.front())))
        return false;
    for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            return false;
    return true;
}

} // namespace

RingSpec::RingSpec(std::vector<std::string> noncommuting, std::vector<std::string> central)
    : noncommuting_(std::move(noncommuting)), central_(std::move(central)) {
    std::set<std::string_view> seen;
    auto check = [&](const std::vector<std::string>& names) {
        for (const auto& name : names) {
            if (!valid_name(name))
                throw ContractViolation("invalid variable name '" + name + "'");
            if (!seen.insert(name).second)
                throw ContractViolation("duplicate variable name '" + name + "'");
        }
    };
    check(noncommuting_);
    check(central_);
}

const std::string& RingSpec::name_of(VarRef ref) const {
    return ref.kind == VarKind::Noncommuting ? generator_name(ref.id) : central_name(ref.id);
}

std::optional<VarRef> RingSpec::find(std::string_view name) const {
    for (VarId id = 0; id < noncommuting_.size(); ++id)
        if (noncommuting_[id] == name)
            return VarRef{VarKind::Noncommuting, id};
    for (VarId id = 0; id < central_.size(); ++id)
        if (central_[id] == name)
            return VarRef{VarKind::Central, id};
    return std::nullopt;
}

VarRef RingSpec::require(std::string_view name) const {
    if (auto ref = find(name))
        return *ref;
    throw ContractViolation("unknown variable '" + std::string(name) + "' in ring " + describe());
}

std::string RingSpec::describe() const {
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < noncommuting_.size(); ++i)
        out << (i ? "," : "") << noncommuting_[i];
    out << " | ";
    for (std::size_t i = 0; i < central_.size(); ++i)
        out << (i ? "," : "") << central_[i];
    out << '>';
    return out.str();
}

RingPtr make_ring(std::vector<std::string> noncommuting, std::vector<std::string> central) {
    return std::make_shared<const RingSpec>(std::move(noncommuting), std::move(central));
}

void check_same_ring(const RingSpec& a, const RingSpec& b) {
    if (&a == &b || a == b)
        return;
    throw RingMismatchError("ring mismatch: " + a.describe() + " vs " + b.describe());
}

} // namespace freealg
