#include <doctest.h>

#include <string>
#include <vector>

#include "clustermono/errors.hpp"
#include "clustermono/laurent.hpp"
#include "oracles.hpp"

using namespace cmono;

namespace {

LaurentPolynomial P(const char* text, std::size_t rank = 3) { return parse_laurent(text, rank); }

std::vector<mpq_class> ones(std::size_t n) { return std::vector<mpq_class>(n, mpq_class(1)); }

}  // namespace

TEST_CASE("canonical text form orders terms lexicographically, x1 most significant") {
    CHECK(to_string(P("1 + x2 + x1*x3")) == "x1*x3 + x2 + 1");
    CHECK(to_string(P("x2^-1 + x1^-1*x2 - 3")) == "-3 + x2^-1 + x1^-1*x2");
    CHECK(to_string(LaurentPolynomial(2)) == "0");
    CHECK(to_string(P("-x1")) == "-x1");
    const std::vector<std::string> names{"a", "b", "c"};
    CHECK(to_string(P("x1*x3 + 2"), names) == "a*c + 2");
    CHECK(parse_laurent("a*c + 2", 3, names) == P("x1*x3 + 2"));
}

TEST_CASE("parse and print round-trip on random polynomials") {
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rank = static_cast<std::size_t>(oracle::uniform(1, 4));
        const auto p = oracle::random_laurent(rank);
        CHECK(parse_laurent(to_string(p), rank) == p);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_laurent("x1 +", 2), ParseError);
    CHECK_THROWS_AS(parse_laurent("x1 * (x2", 2), ParseError);
    CHECK_THROWS_AS(parse_laurent("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_laurent("(x1 + 1)^-1", 1), Error);
    CHECK_THROWS_AS(parse_laurent("(x1 + 1)/(x1 + 2)", 1), DivisionError);
}

TEST_CASE("add") {
    CHECK(P("x1 + 1") + P("x2 - 1") == P("x1 + x2"));
    const auto p = P("x1^-1*x3 + 7");
    CHECK(p + LaurentPolynomial(3) == p);
    CHECK(to_string(P("x2 + 1") + P("x1*x3")) == "x1*x3 + x2 + 1");
    CHECK_THROWS_AS(add(P("x1", 2), P("x1", 3)), StructuralError);
    CHECK((p - p).is_zero());
}

TEST_CASE("mul") {
    CHECK(P("(1 + x2)") * P("x1 + x3") == P("x1 + x3 + x1*x2 + x2*x3"));
    const auto p = P("x1*x2^-2 + 3");
    CHECK(p * LaurentPolynomial::constant(3, 1) == p);
    const auto prod = P("(1 + x2)*(x1 + x3)") * P("x1 + x3") * P("x1 + x3 + x1*x2");
    CHECK(prod.coefficient({2, 1, 1}) == 5);
    CHECK_THROWS_AS(mul(P("x1", 1), P("x1", 2)), StructuralError);
}

TEST_CASE("pow") {
    CHECK(pow(P("1 + x2"), 2) == P("1 + 2*x2 + x2^2"));
    CHECK(pow(P("x1 + x2^-1"), 0) == LaurentPolynomial::constant(3, 1));
    CHECK(pow(P("x1*x3 + x2 + 1"), 1) * pow(P("x1*x3 + (x2 + 1)^2"), 0) == P("x1*x3 + x2 + 1"));
    // Binomial row against Pascal's triangle.
    const auto q = pow(P("1 + x1", 1), 20);
    for (int k = 0; k <= 20; ++k) CHECK(q.coefficient({k}) == oracle::choose(20, k));
}

TEST_CASE("exact_div") {
    CHECK(exact_div(P("x1*x3 + x2 + 1"), P("x2")) == P("x1*x2^-1*x3 + 1 + x2^-1"));
    CHECK(exact_div(P("x2^2 + 2*x2 + 1"), P("x2 + 1")) == P("x2 + 1"));
    CHECK(exact_div(P("x1*x3 + 1") * P("x1*x3 + x2 + 1"), P("x1*x3 + 1")) == P("x1*x3 + x2 + 1"));
    CHECK_THROWS_AS(exact_div(P("x1"), LaurentPolynomial(3)), DomainError);
    try {
        (void)exact_div(P("x1^2 + 1", 1), P("x1 + 1", 1));
        FAIL("expected a division error");
    } catch (const DivisionError& e) {
        CHECK(e.remainder() == "2");
    }
}

TEST_CASE("exact_div inverts mul on random inputs") {
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rank = static_cast<std::size_t>(oracle::uniform(1, 3));
        const auto p = oracle::random_laurent(rank);
        const auto q = oracle::random_nonzero_laurent(rank);
        CHECK(exact_div(p * q, q) == p);
    }
}

TEST_CASE("ring axioms on random triples") {
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t rank = static_cast<std::size_t>(oracle::uniform(1, 3));
        const auto a = oracle::random_laurent(rank);
        const auto b = oracle::random_laurent(rank);
        const auto c = oracle::random_laurent(rank);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == LaurentPolynomial(rank));
    }
}

TEST_CASE("mul agrees with substitution at random points") {
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rank = static_cast<std::size_t>(oracle::uniform(1, 3));
        const auto p = oracle::random_laurent(rank);
        const auto q = oracle::random_laurent(rank);
        const auto v = oracle::random_point(rank);
        CHECK(oracle::substitute(p * q, v) == oracle::substitute(p, v) * oracle::substitute(q, v));
        CHECK(evaluate(p * q, v) == evaluate(p, v) * evaluate(q, v));
        CHECK(evaluate(p, v) == oracle::substitute(p, v));
    }
}

TEST_CASE("normalize") {
    const auto a = normalize(P("(x1*x3 + x2 + 1)/(x1*x2)"));
    CHECK(a.numerator == P("x1*x3 + x2 + 1"));
    CHECK(a.dvector == std::vector<int>{1, 1, 0});
    const auto b = normalize(P("x1"));
    CHECK(b.numerator == LaurentPolynomial::constant(3, 1));
    CHECK(b.dvector == std::vector<int>{-1, 0, 0});
    const auto c = normalize(P("(x1*x3 + (x2 + 1)^2)/(x1*x2*x3)"));
    CHECK(c.dvector == std::vector<int>{1, 1, 1});
    CHECK(to_string(c.numerator) == "x1*x3 + x2^2 + 2*x2 + 1");
    CHECK_THROWS_AS(normalize(LaurentPolynomial(2)), DomainError);
}

TEST_CASE("normalize round-trip on random polynomials") {
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rank = static_cast<std::size_t>(oracle::uniform(1, 4));
        const auto p = oracle::random_nonzero_laurent(rank);
        const auto nf = normalize(p);
        CHECK(nf.reconstruct() == p);
        CHECK(nf.numerator.is_polynomial());
        const auto lo = nf.numerator.min_exponents();
        for (std::size_t j = 0; j < rank; ++j) {
            CHECK(lo[j] == 0);
            CHECK(nf.dvector[j] == -p.min_exponents()[j]);
        }
    }
}

TEST_CASE("evaluate") {
    CHECK(evaluate(P("x1*x3 + 1"), ones(3)) == 2);
    const std::vector<mpq_class> pt{2, 3, 5};
    CHECK(evaluate(P("(x2 + 1)/x1"), pt) == 2);
    // Straightforward cluster of three entries; product at (1,1,1) by hand: 4 * 2 * 3.
    const auto m = P("(1 + x2)*(x1 + x3)/(x1*x2*x3)") * P("(x1 + x3)/x2") * P("(x1 + x3 + x1*x2)/(x2*x3)");
    CHECK(evaluate(m, ones(3)) == 24);
    CHECK(oracle::substitute(m, ones(3)) == 24);
    const std::vector<mpq_class> zero{1, 0, 1};
    CHECK_THROWS_AS(evaluate(m, zero), DomainError);
    CHECK_THROWS_AS(evaluate(m, ones(2)), StructuralError);
}

TEST_CASE("coefficient_array") {
    const auto a = coefficient_array(P("x1*x3 + x2 + 1"));
    CHECK(a.shape() == std::vector<std::size_t>{2, 2, 2});
    std::size_t nonzero = 0;
    for (const auto& v : a.data()) nonzero += v != 0;
    CHECK(nonzero == 3);  // three terms, so three occupied cells
    const auto k = coefficient_array(LaurentPolynomial::constant(3, 7));
    CHECK(k.shape() == std::vector<std::size_t>{1, 1, 1});
    CHECK(k[0] == 7);
    const auto s = coefficient_array(P("1 + 2*x1 + x1^2", 1));
    CHECK(s.data() == std::vector<mpz_class>{1, 2, 1});
    const auto off = coefficient_array(P("x1^-2*x2 + x1", 2));
    CHECK(off.offsets() == std::vector<long>{-2, 0});
    CHECK_THROWS_AS(coefficient_array(LaurentPolynomial(2)), DomainError);
    CHECK_THROWS_AS(coefficient_array(P("x1 - 1", 1)), DomainError);
}

TEST_CASE("coefficient_array round-trips nonnegative polynomials") {
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rank = static_cast<std::size_t>(oracle::uniform(1, 3));
        const auto signed_p = oracle::random_nonzero_laurent(rank);
        LaurentPolynomial p(rank);
        for (const auto& [e, c] : signed_p.terms()) p.add_term(e, abs(c));
        CHECK(from_coefficient_array(coefficient_array(p)) == p);
    }
}

TEST_CASE("dense guard") {
    CHECK_THROWS_AS(coefficient_array(P("x1^20000 + x2^20000", 2)), ResourceError);
}
