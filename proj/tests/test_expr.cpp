#include "abelnc/expr.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace cli;
using freealg::Polynomial;
using freealg::RingPtr;

namespace {

const RingPtr& ring() {
    static RingPtr r = parse_ring_decl("central:c; free:X,x1,x2");
    return r;
}

Polynomial eval(std::string_view text) { return evaluate(parse_expr(text, *ring()), ring()); }

std::size_t error_position(std::string_view text) {
    try {
        (void)parse_expr(text, *ring());
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected a ParseError");
    return SIZE_MAX;
}

} // namespace

TEST_CASE("ring declarations parse in either section order") {
    CHECK(parse_ring_decl("central:c; free:X,x1")->describe() == "<X,x1 | c>");
    CHECK(parse_ring_decl("free: X , x1 ;central: c")->describe() == "<X,x1 | c>");
    CHECK(parse_ring_decl("free:X")->describe() == "<X | >");
    CHECK(parse_ring_decl("central:z")->describe() == "< | z>");

    CHECK_THROWS_AS((void)parse_ring_decl("frei:X"), ParseError);
    CHECK_THROWS_AS((void)parse_ring_decl("free X"), ParseError);
    CHECK_THROWS_AS((void)parse_ring_decl("free:X; free:Y"), ParseError);
    CHECK_THROWS_AS((void)parse_ring_decl("free:X,,Y"), ParseError);
    // duplicate names are a ring-level contract, not a syntax error
    CHECK_THROWS_AS((void)parse_ring_decl("free:X,X"), freealg::ContractViolation);
}

TEST_CASE("AST shape of the worked grammar example") {
    const Expr e = parse_expr("X*(X+x1)^2 - 3", *ring());
    REQUIRE(e.kind == Expr::Kind::Difference);
    REQUIRE(e.children.size() == 2);
    CHECK(e.children[1].kind == Expr::Kind::Literal);
    CHECK(e.children[1].literal == 3);

    const Expr& prod = e.children[0];
    REQUIRE(prod.kind == Expr::Kind::Product);
    CHECK(prod.children[0].kind == Expr::Kind::Variable);
    CHECK(prod.children[0].name == "X");

    const Expr& pw = prod.children[1];
    REQUIRE(pw.kind == Expr::Kind::Power);
    CHECK(pw.exponent == 2);
    REQUIRE(pw.children.size() == 1);
    CHECK(pw.children[0].kind == Expr::Kind::Sum);
}

TEST_CASE("products preserve operand order") {
    CHECK(eval("x1*x2") != eval("x2*x1"));
    CHECK(eval("c*x1") == eval("x1*c"));
    CHECK(eval("X.x1") == eval("X*x1"));
}

TEST_CASE("precedence and associativity") {
    CHECK(eval("X+x1*x2") == eval("X+(x1*x2)"));
    CHECK(eval("X-x1-x2") == eval("(X-x1)-x2"));
    CHECK(eval("-X^2") == eval("0-(X^2)"));
    CHECK(eval("2^3") == eval("8"));
    CHECK(eval("X^0") == eval("1"));
    CHECK(eval("0^0") == eval("1"));
    CHECK(eval("-3*X") == eval("0-3*X"));
    CHECK(eval("X*(X+x1)^2-3") == eval("X*(X+x1)*(X+x1)-3"));
}

TEST_CASE("parse errors carry positions") {
    CHECK(error_position("X^-1") == 2);
    CHECK(error_position("X*(x1") == 5);
    CHECK(error_position("X*?") == 2);
    CHECK(error_position("y1+X") == 0);
    CHECK(error_position("") == 0);
    CHECK(error_position("X x1") == 2); // juxtaposition is not multiplication
    CHECK(error_position("2X") == 1);
    CHECK(error_position("X^99999999999") == 2);

    CHECK_THROWS_WITH_AS((void)parse_expr("X^-1", *ring()),
                         "negative exponent (at position 2)", ParseError);
    CHECK_THROWS_WITH_AS((void)parse_expr("y1+X", *ring()),
                         "unknown variable 'y1' (at position 0)", ParseError);
}

TEST_CASE("literal exponents can be large and exact") {
    CHECK(eval("2^64") == eval("18446744073709551616"));
    CHECK(eval("(X+x1)^0 - 1") == Polynomial::zero(ring()));
}

TEST_CASE("parse after serialize is the identity on canonical forms") {
    std::mt19937_64 eng(42);
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = testsupport::random_polynomial(ring(), eng);
        CHECK(eval(freealg::serialize(p)) == p);
    }
    CHECK(eval("0") == Polynomial::zero(ring()));
    CHECK(eval("1").is_constant());
}
