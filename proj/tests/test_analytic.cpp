#include <doctest.h>

#include <algorithm>
#include <vector>

#include "clustermono/analytic.hpp"
#include "clustermono/errors.hpp"
#include "clustermono/seqprops.hpp"
#include "oracles.hpp"

using namespace cmono;

namespace {

using Poly = UnivariatePolynomial;

mpq_class Q(long n, long d = 1) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

std::vector<mpz_class> Z(std::initializer_list<long> v) {
    std::vector<mpz_class> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

const auto inf = ExtendedRational::plus_infinity();
const auto ninf = ExtendedRational::minus_infinity();

/// Sign changes of p on a fine rational grid in [lo, hi], plus exact zeros
/// at grid points. Only a lower bound, tight for well-separated roots.
std::size_t grid_roots(const Poly& p, const mpq_class& lo, const mpq_class& hi, int steps) {
    std::size_t count = 0;
    mpq_class prev = p(lo);
    if (prev == 0) ++count;
    for (int i = 1; i <= steps; ++i) {
        const mpq_class x = lo + (hi - lo) * i / steps;
        const mpq_class v = p(x);
        if (v == 0)
            ++count;
        else if (prev != 0 && sgn(v) != sgn(prev))
            ++count;
        prev = v;
    }
    return count;
}

/// prod (x + r_i) with r_i >= 0 drawn as small rationals.
Poly random_real_rooted(int max_degree, std::vector<mpq_class>* roots = nullptr) {
    Poly p = Poly::constant(Q(oracle::uniform(1, 5)));
    const int deg = static_cast<int>(oracle::uniform(1, max_degree));
    for (int i = 0; i < deg; ++i) {
        const mpq_class r = Q(oracle::uniform(0, 12), oracle::uniform(1, 4));
        if (roots) roots->push_back(-r);
        p = p * Poly(std::vector<mpq_class>{r, 1});
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial basics") {
    const Poly p{1, 2, 1};
    CHECK(p.degree() == 2);
    CHECK(p(Q(3)) == 16);
    CHECK(p.derivative() == Poly{2, 2});
    CHECK(Poly{0, 0}.is_zero());
    CHECK(Poly{}.degree() == -1);
    CHECK(p.compose(Poly{-1, 1}) == Poly{0, 0, 1});
    CHECK(to_string(Poly{3, 0, -1}) == "-x^2 + 3");
    const auto [q, r] = divmod(Poly{-1, 0, 0, 1}, Poly{-1, 1});
    CHECK(q == Poly{1, 1, 1});
    CHECK(r.is_zero());
    CHECK_THROWS_AS(divmod(p, Poly{}), DomainError);
    CHECK(gcd(Poly{-1, 0, 1}, Poly{1, 2, 1}) == Poly{1, 1});
    CHECK(squarefree_part(pow(Poly{1, 1}, 3) * Poly{-2, 1}) == Poly{-2, -1, 1});
}

TEST_CASE("divmod identity on random inputs") {
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<mpq_class> a, b;
        for (long i = 0, n = oracle::uniform(0, 7); i < n; ++i) a.push_back(Q(oracle::uniform(-9, 9), oracle::uniform(1, 3)));
        for (long i = 0, n = oracle::uniform(1, 4); i < n; ++i) b.push_back(Q(oracle::uniform(-9, 9), oracle::uniform(1, 3)));
        const Poly A(a), B(b);
        if (B.is_zero()) continue;
        const auto [q, r] = divmod(A, B);
        CHECK(q * B + r == A);
        CHECK(r.degree() < B.degree());
    }
}

TEST_CASE("pochhammer and binomial") {
    CHECK(pochhammer(Q(7, 3), 0) == 1);
    CHECK(pochhammer(Q(-3), 4) == 0);
    CHECK(pochhammer(Q(2), 3) == 24);
    CHECK(pochhammer(Q(1, 2), 2) == Q(3, 4));
    for (long n = 0; n <= 64; ++n)
        for (long k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
    CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("terminating 2F1") {
    CHECK(gauss_2f1_terminating(Q(-4), Q(3, 2), Q(5), Q(0)) == 1);
    CHECK(gauss_2f1_polynomial(Q(-1), Q(-1), Q(1)) == Poly{1, 1});
    CHECK(termination_index(Q(-3), Q(1, 2)) == 3u);
    CHECK(termination_index(Q(-3), Q(-1)) == 1u);
    CHECK_FALSE(termination_index(Q(1, 2), Q(2)).has_value());
    CHECK_THROWS_AS(gauss_2f1_polynomial(Q(1, 2), Q(2), Q(3)), DomainError);
    CHECK_THROWS_AS(gauss_2f1_polynomial(Q(-3), Q(1), Q(-1)), DomainError);
    // Direct series oracle: sum (a)_n (b)_n / ((c)_n n!) z^n with hand-rolled rising factorials.
    for (int trial = 0; trial < 200; ++trial) {
        const long n = oracle::uniform(0, 6);
        const mpq_class a = Q(-n), b = Q(oracle::uniform(-10, 10), oracle::uniform(1, 3));
        const mpq_class c = Q(oracle::uniform(1, 12), oracle::uniform(1, 3));
        const mpq_class z = Q(oracle::uniform(-5, 5), oracle::uniform(1, 4));
        mpq_class sum = 0, term = 1;
        for (long k = 0; k <= n; ++k) {
            sum += term;
            term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
        }
        CHECK(gauss_2f1_terminating(a, b, c, z) == sum);
    }
}

TEST_CASE("q_poly") {
    CHECK(q_poly(2, 2, 2) == Poly{1, 4, 1});
    CHECK(q_poly(5, 3, 0) == Poly{1});
    CHECK(q_poly(3, 1, 1) == Poly{3, 1});
    for (unsigned a = 0; a <= 8; ++a)
        for (unsigned b = 0; b <= 8; ++b)
            for (unsigned N = 0; N <= a + b; ++N) {
                const auto q = q_poly(a, b, N);
                for (unsigned j = 0; j <= N; ++j)
                    CHECK(q.coefficient(j) == mpq_class(oracle::choose(a, static_cast<long>(N) - j) * oracle::choose(b, j)));
            }
}

TEST_CASE("Jacobi polynomials") {
    CHECK(jacobi_poly(0, Q(3), Q(1, 2)) == Poly{1});
    CHECK(jacobi_poly(1, Q(0), Q(0)) == Poly{0, 1});
    // Legendre P2 = (3x^2 - 1)/2.
    CHECK(jacobi_poly(2, Q(0), Q(0)) == Poly(std::vector<mpq_class>{Q(-1, 2), 0, Q(3, 2)}));
    // P1^(a,b) = (a+1) + (a+b+2)(x-1)/2.
    CHECK(jacobi_poly(1, Q(2), Q(3)) == Poly(std::vector<mpq_class>{Q(3) - Q(7, 2), Q(7, 2)}));
    CHECK_THROWS_AS(jacobi_poly(2, Q(-1), Q(0)), DomainError);
    // Symmetry P_n^(a,b)(-x) = (-1)^n P_n^(b,a)(x).
    for (unsigned n = 0; n <= 6; ++n) {
        const auto p = jacobi_poly(n, Q(2), Q(5, 3));
        const auto q = jacobi_poly(n, Q(5, 3), Q(2));
        const mpq_class sign = n % 2 ? -1 : 1;
        CHECK(p.compose(Poly{0, -1}) == q * sign);
    }
}

TEST_CASE("three representations of Q agree") {
    const std::vector<mpq_class> ts{Q(-3), Q(-1, 2), Q(0), Q(2, 3), Q(5)};
    for (unsigned a = 0; a <= 8; ++a)
        for (unsigned b = 0; b <= 8; ++b)
            for (unsigned N = 0; N <= std::min(a, b); ++N) {
                const auto q = q_poly(a, b, N);
                for (const auto& t : ts) {
                    CHECK(q_via_hypergeometric(a, b, N, t) == q(t));
                    CHECK(q_via_jacobi(a, b, N, t) == q(t));
                }
            }
    CHECK_THROWS_AS(q_via_jacobi(3, 3, 1, Q(1)), DomainError);
    CHECK_THROWS_AS(q_via_hypergeometric(2, 5, 3, Q(1, 2)), DomainError);
}

TEST_CASE("Pfaff transformations") {
    CHECK(pfaff_check(Q(-1), Q(1), Q(2), Q(1, 2)).passed());
    CHECK(gauss_2f1_terminating(Q(-1), Q(1), Q(2), Q(1, 2)) == Q(3, 4));
    CHECK(pfaff_check(Q(-3), Q(2), Q(5, 2), Q(0)).passed());
    CHECK(pfaff_check(Q(-2), Q(1), Q(3), Q(1)).verdict() == Verdict::precondition_failed);
    CHECK(pfaff_check(Q(1, 2), Q(1, 3), Q(3), Q(1, 2)).verdict() == Verdict::precondition_failed);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const mpq_class a = Q(-oracle::uniform(0, 6));
        const mpq_class b = oracle::uniform(0, 1) ? Q(-oracle::uniform(0, 6)) : Q(oracle::uniform(-9, 9), oracle::uniform(1, 4));
        const mpq_class c = Q(oracle::uniform(1, 20), oracle::uniform(1, 3));
        mpq_class z = 1;
        while (z == 1) z = Q(oracle::uniform(-7, 7), oracle::uniform(1, 5));
        const auto r = pfaff_check(a, b, c, z);
        CHECK(r.verdict() != Verdict::fail);
        checked += r.passed();
    }
    CHECK(checked >= 190);
}

TEST_CASE("Sturm counting") {
    CHECK(sturm_real_root_count(Poly{-1, 0, 1}, ninf, inf) == 2);
    CHECK(sturm_real_root_count(Poly{1, 0, 1}, ninf, inf) == 0);
    CHECK(sturm_real_root_count(Poly{1, 4, 1}, ninf, inf) == 2);
    CHECK(sturm_real_root_count(Poly{-1, 0, 1}, ExtendedRational::finite(-1), ExtendedRational::finite(1)) == 1);
    CHECK(sturm_real_root_count(pow(Poly{1, 1}, 3), ninf, inf) == 1);
    CHECK_THROWS_AS(sturm_real_root_count(Poly{}, ninf, inf), DomainError);
    CHECK_THROWS_AS(sturm_real_root_count(Poly{1, 1}, inf, ninf), DomainError);
    const auto chain = sturm_chain(Poly{-1, 0, 1});
    CHECK(chain.chain.size() == 3);
}

TEST_CASE("Sturm agrees with grid sign changes for separated rational roots") {
    for (int trial = 0; trial < 150; ++trial) {
        // Distinct integer roots in [-10, 10] are at least 1 apart; a grid of step 1/4 sees them all.
        std::vector<long> roots;
        const long deg = oracle::uniform(1, 6);
        while (static_cast<long>(roots.size()) < deg) {
            const long r = oracle::uniform(-10, 10);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        Poly p{1};
        for (long r : roots) p = p * Poly{-r, 1};
        // A factor with no real roots leaves the count unchanged.
        if (trial % 2) p = p * Poly{oracle::uniform(1, 5), 0, 1};
        const mpq_class lo = Q(-21, 2), hi = Q(21, 2);
        CHECK(sturm_real_root_count(p, ninf, inf) == roots.size());
        CHECK(sturm_real_root_count(p, ExtendedRational::finite(lo), ExtendedRational::finite(hi)) ==
              grid_roots(p, lo, hi, 84));
        const mpq_class cut = Q(oracle::uniform(-20, 20), 2);
        const auto below = static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [&](long r) { return r <= cut; }));
        CHECK(sturm_real_root_count(p, ninf, ExtendedRational::finite(cut)) == below);
    }
}

TEST_CASE("real-rootedness") {
    CHECK(is_real_rooted(pow(Poly{1, 1}, 3)).passed());
    const auto r = is_real_rooted(Poly{1, 1, 1});
    REQUIRE(r.verdict() == Verdict::fail);
    CHECK(r.witness()->values == Z({2, 0}));
    CHECK(is_real_rooted(pow(Poly{1, 0, 1}, 2) * Poly{0, 1}).verdict() == Verdict::fail);
    for (unsigned a = 0; a <= 8; ++a)
        for (unsigned b = 0; b <= 8; ++b)
            for (unsigned N = 0; N <= std::min(a, b); ++N) CHECK(is_real_rooted(q_poly(a, b, N)).passed());
}

TEST_CASE("Jacobi roots are simple and inside (-1, 1)") {
    for (unsigned a = 0; a <= 8; ++a)
        for (unsigned b = 0; b <= 8; ++b)
            for (unsigned N = 0; N <= std::min(a, b); ++N) {
                const auto p = jacobi_poly(N, Q(static_cast<long>(a) - N), Q(static_cast<long>(b) - N));
                CHECK(roots_in_open_interval(p, Q(-1), Q(1)).passed());
            }
    CHECK_FALSE(roots_in_open_interval(Poly{-1, 0, 1}, Q(-1), Q(1)).passed());
    CHECK_FALSE(roots_in_open_interval(pow(Poly{0, 1}, 2), Q(-1), Q(1)).passed());
}

TEST_CASE("Newton inequalities") {
    CHECK(newton_implies_logconcave_check(pow(Poly{1, 1}, 4)).passed());
    const auto p = Poly{1, 2} * Poly{1, 3} * Poly{1, 5};
    CHECK(integer_coefficients(p) == Z({1, 10, 31, 30}));
    CHECK(newton_implies_logconcave_check(p).passed());
    CHECK(newton_implies_logconcave_check(Poly{1, 1, 1}).verdict() == Verdict::precondition_failed);
    CHECK(newton_implies_logconcave_check(Poly{-1, 0, 1}).verdict() == Verdict::precondition_failed);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<mpq_class> roots;
        const auto q = random_real_rooted(7, &roots);
        CHECK(is_real_rooted(q).passed());
        CHECK(newton_implies_logconcave_check(q).passed());
    }
}

TEST_CASE("S, T and theta sequences against generating functions") {
    for (unsigned a = 0; a <= 5; ++a)
        for (unsigned b = 0; b <= 5; ++b)
            for (unsigned c = 0; c <= 5; ++c) {
                for (unsigned N = 0; N <= a + b; ++N) {
                    oracle::IntPoly f;
                    for (unsigned j = 0; j <= N; ++j)
                        f = oracle::poly_add(f, oracle::one_plus_x_pow(N + j + c),
                                             oracle::choose(a, static_cast<long>(N) - j) * oracle::choose(b, j));
                    CHECK(s_sequence(a, b, c, N) == oracle::trim(f));
                }
                for (unsigned N = 0; N <= b + c; ++N) {
                    oracle::IntPoly f;
                    for (unsigned i = 0; i <= N; ++i)
                        f = oracle::poly_add(f, oracle::one_plus_x_pow(a + b + c - i),
                                             oracle::choose(b, i) * oracle::choose(c, static_cast<long>(N) - i));
                    CHECK(t_sequence(a, b, c, N) == oracle::trim(f));
                }
            }
    CHECK(s_sequence(0, 0, 4, 0) == oracle::pascal(4)[4]);
    CHECK(t_sequence(3, 0, 0, 0) == oracle::pascal(3)[3]);
}

TEST_CASE("theta is a prefix of a convolution") {
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6; ++b)
            for (unsigned c = 0; c <= 6; ++c)
                for (unsigned k = 0; k <= 6; ++k) {
                    oracle::IntPoly u(a + 1);
                    for (unsigned r = 0; r <= a; ++r) u[r] = oracle::choose(a, r) * oracle::choose(a + b + c - r, k);
                    auto w = oracle::poly_mul(u, oracle::one_plus_x_pow(c));
                    w.resize(a + c + 1);
                    CHECK(theta_sequence(a, b, c, k) == oracle::trim(w));
                }
}
