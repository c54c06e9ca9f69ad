#pragma once

#include "abelnc/polynomial.hpp"
#include "abelnc/ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cli {

/// Syntax or name-resolution failure, carrying the offset into the source
/// text where it happened.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Expression tree over one ring. Products preserve operand order; powers
/// carry a literal nonnegative exponent.
struct Expr {
    enum class Kind { Literal, Variable, Sum, Difference, Product, Power };

    Kind kind = Kind::Literal;
    freealg::Coeff literal;            // Literal
    std::string name;                  // Variable
    freealg::VarRef var{};             // Variable
    std::uint32_t exponent = 0;        // Power (base in children[0])
    std::vector<Expr> children;        // binary for Sum/Difference/Product
    std::size_t pos = 0;
};

/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'.') factor)*
///   factor := atom ('^' uint)?
///   atom   := name | uint | '(' expr ')'
/// Left-associative, '^' binds tightest, juxtaposition is not multiplication.
/// '.' is multiplication at the same precedence as '*' so that serialized
/// word parts parse back. Unary minus desugars to difference(0, term).
Expr parse_expr(std::string_view text, const freealg::RingSpec& ring);

freealg::Polynomial evaluate(const Expr& e, const freealg::RingPtr& ring);

/// Ring declarations like "central:c; free:X,x1". Sections in either order,
/// both optional, names comma-separated.
freealg::RingPtr parse_ring_decl(std::string_view decl);

} // namespace cli
