#pragma once

// Sparse multivariate Laurent polynomials with arbitrary-precision integer
// coefficients.
//
// Terms live in a std::map keyed by exponent vector, so iteration is in
// ascending lexicographic order with x1 the most significant variable. The
// canonical text form lists terms in descending order, e.g. `x1*x3 + x2 + 1`.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "clustermono/coefficient_array.hpp"

namespace cmono {

/// Fixed-length vector of signed exponents.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t rank) : e_(rank, 0) {}
    ExponentVector(std::initializer_list<int> e) : e_(e) {}
    explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) {}

    std::size_t size() const noexcept { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    auto begin() const noexcept { return e_.begin(); }
    auto end() const noexcept { return e_.end(); }
    const std::vector<int>& values() const noexcept { return e_; }

    ExponentVector& operator+=(const ExponentVector& o);
    ExponentVector& operator-=(const ExponentVector& o);
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
    friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

    /// Componentwise a >= b.
    bool dominates(const ExponentVector& b) const;

    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<int> e_;
};

class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, mpz_class>;

    /// The zero polynomial in `rank` variables.
    explicit LaurentPolynomial(std::size_t rank);

    static LaurentPolynomial constant(std::size_t rank, const mpz_class& c);
    /// x_{index+1}; `index` is zero-based.
    static LaurentPolynomial variable(std::size_t rank, std::size_t index);
    static LaurentPolynomial monomial(const ExponentVector& e, const mpz_class& c = 1);

    std::size_t rank() const noexcept { return rank_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    mpz_class coefficient(const ExponentVector& e) const;

    /// Adds c * x^e, dropping the term if it cancels.
    void add_term(const ExponentVector& e, const mpz_class& c);

    /// Per-variable minimum and maximum exponent over the support (requires nonzero).
    ExponentVector min_exponents() const;
    ExponentVector max_exponents() const;
    /// True when every exponent is nonnegative.
    bool is_polynomial() const;

    /// Multiplication by the monomial x^shift.
    LaurentPolynomial shifted(const ExponentVector& shift) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    std::size_t rank_;
    TermMap terms_;
};

/// Numerator / d-vector normal form: p = numerator / prod_j x_j^dvector[j],
/// with numerator a polynomial not divisible by any variable.
struct NormalForm {
    LaurentPolynomial numerator;
    std::vector<int> dvector;

    LaurentPolynomial reconstruct() const;
};

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial sub(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial pow(const LaurentPolynomial& p, unsigned e);

/// r with r * q == p. Throws DomainError for q == 0 and DivisionError, carrying
/// the remainder, when q does not divide p.
LaurentPolynomial exact_div(const LaurentPolynomial& p, const LaurentPolynomial& q);

NormalForm normalize(const LaurentPolynomial& p);

/// Exact value at a point with nonzero rational entries.
mpq_class evaluate(const LaurentPolynomial& p, std::span<const mpq_class> point);

/// Dense coefficients over the tight bounding box of the support.
CoefficientArray coefficient_array(const LaurentPolynomial& p);
/// Inverse of coefficient_array: the sparse polynomial with the array's
/// nonzero cells as terms.
LaurentPolynomial from_coefficient_array(const CoefficientArray& arr);

inline LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q) { return add(p, q); }
inline LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q) { return sub(p, q); }
inline LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) { return mul(p, q); }

/// Canonical text form. Variables are printed as x1..xn unless `names` is given.
std::string to_string(const LaurentPolynomial& p, std::span<const std::string> names = {});

/// Parses an expression over integers, variables, + - * / ^ and parentheses.
/// `/` is exact Laurent division; `^` takes an integer exponent, negative
/// only for monomial bases. With rank 0 the rank is inferred from the
/// largest xN index present. `names`, when given, replace x1..xn.
LaurentPolynomial parse_laurent(std::string_view text, std::size_t rank = 0,
                                std::span<const std::string> names = {});

}  // namespace cmono
