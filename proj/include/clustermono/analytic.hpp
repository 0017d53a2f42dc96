#pragma once

// Exact univariate analysis: rational-coefficient polynomials, terminating
// Gauss hypergeometric sums, Jacobi polynomials, Sturm chains and the
// coefficient sequences whose log-concavity reduces to real-rootedness.
//
// Nothing here touches floating point.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "clustermono/report.hpp"

namespace cmono {

/// Dense polynomial over Q, constant term first. The zero polynomial has
/// no coefficients; otherwise the leading coefficient is nonzero.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<mpq_class> coefficients);
    UnivariatePolynomial(std::initializer_list<long> coefficients);

    static UnivariatePolynomial constant(const mpq_class& c);
    static UnivariatePolynomial monomial(std::size_t degree, const mpq_class& c = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
    mpq_class coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpq_class(0); }
    const mpq_class& leading() const;

    mpq_class operator()(const mpq_class& x) const;
    UnivariatePolynomial derivative() const;
    /// p(q(x)).
    UnivariatePolynomial compose(const UnivariatePolynomial& q) const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator*=(const mpq_class& c);

    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend UnivariatePolynomial operator*(UnivariatePolynomial a, const mpq_class& c) { return a *= c; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a) { return a *= -1; }

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

UnivariatePolynomial pow(const UnivariatePolynomial& p, unsigned e);

/// Quotient and remainder; throws DomainError for a zero divisor.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b);
/// Monic greatest common divisor (zero when both inputs are zero).
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
/// p / gcd(p, p'): same distinct roots, all simple.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p);

std::string to_string(const UnivariatePolynomial& p, char var = 'x');

// ---------------------------------------------------------------------------
// Hypergeometric and Jacobi

/// Binomial coefficient C(n, k) for integer n >= 0; zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// Rising factorial q (q+1) ... (q+n-1); (q)_0 = 1.
mpq_class pochhammer(const mpq_class& q, unsigned n);

/// Smallest M with (a)_{M+1} = 0 or (b)_{M+1} = 0, when a or b is a
/// nonpositive integer.
std::optional<unsigned> termination_index(const mpq_class& a, const mpq_class& b);

/// Terminating 2F1(a, b; c; z) as a polynomial in z. Throws DomainError when
/// neither a nor b is a nonpositive integer, or when (c)_n vanishes before
/// the series terminates.
UnivariatePolynomial gauss_2f1_polynomial(const mpq_class& a, const mpq_class& b, const mpq_class& c);
mpq_class gauss_2f1_terminating(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& z);

/// P_n^{(alpha, beta)}(x) expanded from its terminating series in (1-x)/2.
/// Throws DomainError unless alpha, beta > -1.
UnivariatePolynomial jacobi_poly(unsigned n, const mpq_class& alpha, const mpq_class& beta);

/// Q(t) = sum_j C(a, N-j) C(b, j) t^j.
UnivariatePolynomial q_poly(unsigned a, unsigned b, unsigned N);
/// C(a, N) * 2F1(-N, -b; a-N+1; t). Requires N <= a.
mpq_class q_via_hypergeometric(unsigned a, unsigned b, unsigned N, const mpq_class& t);
/// C(a, N) (1-t)^N N!/(a-N+1)_N P_N^{(a-N, b-N)}((1+t)/(1-t)). Requires
/// N <= min(a, b) and t != 1.
mpq_class q_via_jacobi(unsigned a, unsigned b, unsigned N, const mpq_class& t);

/// Checks both Pfaff transformations wherever they terminate:
/// form 1 when a is a nonpositive integer, form 2 when b is. Precondition
/// failures (neither terminates, z = 1, vanishing (c)_n) are reported as
/// precondition_failed.
CheckReport pfaff_check(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& z);

// ---------------------------------------------------------------------------
// Real roots

/// A rational or one of the two infinities.
struct ExtendedRational {
    enum class Kind { negative_infinity, finite, positive_infinity };
    Kind kind = Kind::finite;
    mpq_class value = 0;

    static ExtendedRational minus_infinity() { return {Kind::negative_infinity, 0}; }
    static ExtendedRational plus_infinity() { return {Kind::positive_infinity, 0}; }
    static ExtendedRational finite(mpq_class v) { return {Kind::finite, std::move(v)}; }
};

bool operator<(const ExtendedRational& a, const ExtendedRational& b);

struct SturmChain {
    std::vector<UnivariatePolynomial> chain;
};

/// p, p', then negated remainders until the remainder vanishes. Entries are
/// rescaled by positive constants, which leaves every sign unchanged.
SturmChain sturm_chain(const UnivariatePolynomial& p);
/// Sign changes of the chain at x, zeros skipped.
std::size_t sign_variations(const SturmChain& chain, const ExtendedRational& x);

/// Number of distinct real roots in (lo, hi]. Throws DomainError on the zero
/// polynomial or an empty interval.
std::size_t sturm_real_root_count(const UnivariatePolynomial& p, const ExtendedRational& lo,
                                  const ExtendedRational& hi);

/// Passes when p has deg(p) real roots counted with multiplicity.
/// Witness values: (degree, real roots with multiplicity).
CheckReport is_real_rooted(const UnivariatePolynomial& p);

/// Passes when all deg(p) roots are real, simple and inside the open
/// interval (lo, hi).
CheckReport roots_in_open_interval(const UnivariatePolynomial& p, const mpq_class& lo, const mpq_class& hi);

/// Newton: nonnegative coefficients plus real roots imply a log-concave
/// coefficient row. Violated hypotheses give precondition_failed; a plain
/// failure would contradict Newton's inequalities.
CheckReport newton_implies_logconcave_check(const UnivariatePolynomial& p);

// ---------------------------------------------------------------------------
// Coefficient sequences (trailing zeros dropped)

/// S_k = sum_{i+j=N} C(a,i) C(b,j) C(N+j+c, k).
std::vector<mpz_class> s_sequence(unsigned a, unsigned b, unsigned c, unsigned N);
/// T_k = sum_{i+j=N} C(b,i) C(c,j) C(a+b+c-i, k).
std::vector<mpz_class> t_sequence(unsigned a, unsigned b, unsigned c, unsigned N);
/// theta_h = sum_{l=0}^{h} C(a, h-l) C(a+b+c-h+l, k) C(c, l), h = 0..a+c.
std::vector<mpz_class> theta_sequence(unsigned a, unsigned b, unsigned c, unsigned k);

/// Integer coefficient row of a polynomial with integral coefficients.
std::vector<mpz_class> integer_coefficients(const UnivariatePolynomial& p);

}  // namespace cmono
