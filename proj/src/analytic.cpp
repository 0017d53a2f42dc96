#include "clustermono/analytic.hpp"

#include <algorithm>

#include "clustermono/errors.hpp"
#include "clustermono/seqprops.hpp"

namespace cmono {

namespace {

bool is_nonpositive_integer(const mpq_class& q) { return q.get_den() == 1 && sgn(q) <= 0; }

int sign_at(const UnivariatePolynomial& p, const ExtendedRational& x) {
    if (p.is_zero()) return 0;
    switch (x.kind) {
        case ExtendedRational::Kind::positive_infinity: return sgn(p.leading());
        case ExtendedRational::Kind::negative_infinity:
            return (p.degree() % 2 == 0) ? sgn(p.leading()) : -sgn(p.leading());
        case ExtendedRational::Kind::finite: return sgn(p(x.value));
    }
    return 0;
}

UnivariatePolynomial scaled_positive(UnivariatePolynomial p) {
    if (p.is_zero()) return p;
    mpq_class lc = abs(p.leading());
    p *= 1 / lc;
    return p;
}

std::vector<mpz_class> trim_trailing_zeros(std::vector<mpz_class> seq) {
    while (!seq.empty() && sgn(seq.back()) == 0) seq.pop_back();
    return seq;
}

}  // namespace

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<mpq_class> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

UnivariatePolynomial::UnivariatePolynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(const mpq_class& c) { return UnivariatePolynomial({c}); }

UnivariatePolynomial UnivariatePolynomial::monomial(std::size_t degree, const mpq_class& c) {
    std::vector<mpq_class> coeffs(degree + 1);
    coeffs[degree] = c;
    return UnivariatePolynomial(std::move(coeffs));
}

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const mpq_class& UnivariatePolynomial::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

mpq_class UnivariatePolynomial::operator()(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpq_class> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::compose(const UnivariatePolynomial& q) const {
    UnivariatePolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const mpq_class& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial pow(const UnivariatePolynomial& p, unsigned e) {
    UnivariatePolynomial result = UnivariatePolynomial::constant(1);
    for (unsigned i = 0; i < e; ++i) result = result * p;
    return result;
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<mpq_class> rem = a.coefficients();
    const auto& den = b.coefficients();
    const std::size_t db = den.size() - 1;
    if (rem.size() < den.size()) return {UnivariatePolynomial{}, a};
    std::vector<mpq_class> quot(rem.size() - db);
    for (std::size_t k = rem.size(); k-- > db;) {
        if (sgn(rem[k]) == 0) continue;
        mpq_class c = rem[k] / den[db];
        quot[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * den[j];
    }
    return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial x = a, y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    mpq_class inv = 1 / x.leading();
    return x * inv;
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
    if (p.degree() <= 0) return p;
    return divmod(p, gcd(p, p.derivative())).first;
}

std::string to_string(const UnivariatePolynomial& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.coefficients().size(); k-- > 0;) {
        const mpq_class& c = p.coefficients()[k];
        if (sgn(c) == 0) continue;
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        mpq_class mag = abs(c);
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hypergeometric and Jacobi

mpz_class binomial(long n, long k) {
    if (n < 0) throw DomainError("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpq_class pochhammer(const mpq_class& q, unsigned n) {
    mpq_class r = 1;
    for (unsigned i = 0; i < n; ++i) r *= q + i;
    return r;
}

std::optional<unsigned> termination_index(const mpq_class& a, const mpq_class& b) {
    std::optional<unsigned> m;
    for (const mpq_class* p : {&a, &b}) {
        if (!is_nonpositive_integer(*p)) continue;
        mpz_class neg = -p->get_num();
        unsigned idx = static_cast<unsigned>(neg.get_ui());
        m = m ? std::min(*m, idx) : idx;
    }
    return m;
}

UnivariatePolynomial gauss_2f1_polynomial(const mpq_class& a, const mpq_class& b, const mpq_class& c) {
    const auto m = termination_index(a, b);
    if (!m) throw DomainError("2F1: series does not terminate (no upper parameter is a nonpositive integer)");
    std::vector<mpq_class> coeffs(*m + 1);
    // Term ratio: t_{n+1}/t_n = (a+n)(b+n)/((c+n)(n+1)).
    mpq_class term = 1;
    for (unsigned n = 0; n <= *m; ++n) {
        coeffs[n] = term;
        if (n == *m) break;
        mpq_class cn = c + n;
        if (sgn(cn) == 0) throw DomainError("2F1: (c)_n vanishes before the series terminates");
        term *= (a + n) * (b + n);
        term /= cn * (n + 1);
    }
    return UnivariatePolynomial(std::move(coeffs));
}

mpq_class gauss_2f1_terminating(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& z) {
    return gauss_2f1_polynomial(a, b, c)(z);
}

UnivariatePolynomial jacobi_poly(unsigned n, const mpq_class& alpha, const mpq_class& beta) {
    if (alpha <= -1 || beta <= -1) throw DomainError("jacobi_poly: alpha and beta must exceed -1");
    const UnivariatePolynomial series = gauss_2f1_polynomial(-mpq_class(n), 1 + alpha + beta + n, alpha + 1);
    // Substitute w = (1 - x)/2.
    const UnivariatePolynomial w(std::vector<mpq_class>{mpq_class(1, 2), mpq_class(-1, 2)});
    mpq_class scale = pochhammer(alpha + 1, n);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    scale /= fact;
    return series.compose(w) * scale;
}

UnivariatePolynomial q_poly(unsigned a, unsigned b, unsigned N) {
    std::vector<mpq_class> coeffs(N + 1);
    for (unsigned j = 0; j <= N; ++j) coeffs[j] = binomial(a, static_cast<long>(N) - j) * binomial(b, j);
    return UnivariatePolynomial(std::move(coeffs));
}

mpq_class q_via_hypergeometric(unsigned a, unsigned b, unsigned N, const mpq_class& t) {
    if (N > a) throw DomainError("q_via_hypergeometric: requires N <= a");
    mpq_class lower = mpq_class(a) - N + 1;
    return binomial(a, N) * gauss_2f1_terminating(-mpq_class(N), -mpq_class(b), lower, t);
}

mpq_class q_via_jacobi(unsigned a, unsigned b, unsigned N, const mpq_class& t) {
    if (N > a || N > b) throw DomainError("q_via_jacobi: requires N <= min(a, b)");
    if (t == 1) throw DomainError("q_via_jacobi: t = 1 is excluded");
    const auto P = jacobi_poly(N, mpq_class(a) - N, mpq_class(b) - N);
    const mpq_class one_minus_t = 1 - t;
    mpq_class x = (1 + t) / one_minus_t;
    mpq_class scale = binomial(a, N);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), N);
    scale *= mpq_class(fact) / pochhammer(mpq_class(a) - N + 1, N);
    mpq_class power = 1;
    for (unsigned i = 0; i < N; ++i) power *= one_minus_t;
    return scale * power * P(x);
}

CheckReport pfaff_check(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& z) {
    const char* name = "pfaff";
    if (z == 1) return CheckReport::precondition(name, Witness{{}, {}, {}, "z = 1"});
    const bool form1 = is_nonpositive_integer(a);
    const bool form2 = is_nonpositive_integer(b);
    if (!form1 && !form2)
        return CheckReport::precondition(name, Witness{{}, {}, {}, "neither a nor b is a nonpositive integer"});

    const mpq_class w = z / (z - 1);
    std::size_t examined = 0;
    try {
        const mpq_class lhs = gauss_2f1_terminating(a, b, c, z);
        auto one_minus_z_pow = [&](const mpq_class& e) {
            // e is a nonnegative integer here.
            mpq_class r = 1;
            for (unsigned long i = 0; i < e.get_num().get_ui(); ++i) r *= 1 - z;
            return r;
        };
        if (form1) {
            ++examined;
            const mpq_class rhs = one_minus_z_pow(-a) * gauss_2f1_terminating(a, c - b, c, w);
            if (lhs != rhs)
                return CheckReport::failure(name, Witness{{}, {}, {}, "form 1: lhs=" + lhs.get_str() + " rhs=" + rhs.get_str()},
                                            examined);
        }
        if (form2) {
            ++examined;
            const mpq_class rhs = one_minus_z_pow(-b) * gauss_2f1_terminating(c - a, b, c, w);
            if (lhs != rhs)
                return CheckReport::failure(name, Witness{{}, {}, {}, "form 2: lhs=" + lhs.get_str() + " rhs=" + rhs.get_str()},
                                            examined);
        }
    } catch (const DomainError& e) {
        return CheckReport::precondition(name, Witness{{}, {}, {}, e.what()}, examined);
    }
    return CheckReport::success(name, examined);
}

// ---------------------------------------------------------------------------
// Real roots

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.kind == ExtendedRational::Kind::finite && a.value < b.value;
}

SturmChain sturm_chain(const UnivariatePolynomial& p) {
    SturmChain out;
    if (p.is_zero()) return out;
    out.chain.push_back(scaled_positive(p));
    UnivariatePolynomial d = p.derivative();
    if (d.is_zero()) return out;
    out.chain.push_back(scaled_positive(d));
    for (;;) {
        const auto& prev = out.chain[out.chain.size() - 2];
        const auto& cur = out.chain.back();
        auto r = divmod(prev, cur).second;
        if (r.is_zero()) break;
        out.chain.push_back(scaled_positive(-r));
    }
    return out;
}

std::size_t sign_variations(const SturmChain& chain, const ExtendedRational& x) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& q : chain.chain) {
        int s = sign_at(q, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::size_t sturm_real_root_count(const UnivariatePolynomial& p, const ExtendedRational& lo,
                                  const ExtendedRational& hi) {
    if (p.is_zero()) throw DomainError("sturm_real_root_count: zero polynomial");
    if (!(lo < hi)) throw DomainError("sturm_real_root_count: empty interval");
    // The squarefree part keeps the chain free of a common factor, so zeros of
    // p at an endpoint do not wipe out the whole chain.
    const auto chain = sturm_chain(squarefree_part(p));
    const std::size_t vlo = sign_variations(chain, lo);
    const std::size_t vhi = sign_variations(chain, hi);
    return vlo - vhi;
}

CheckReport is_real_rooted(const UnivariatePolynomial& p) {
    const char* name = "real_rooted";
    if (p.is_zero()) return CheckReport::precondition(name, Witness{{}, {}, {}, "zero polynomial"});
    std::size_t real_roots = 0;
    std::size_t layers = 0;
    UnivariatePolynomial f = p;
    while (f.degree() > 0) {
        const UnivariatePolynomial g = gcd(f, f.derivative());
        const UnivariatePolynomial s = divmod(f, g).first;
        real_roots += sturm_real_root_count(s, ExtendedRational::minus_infinity(), ExtendedRational::plus_infinity());
        ++layers;
        f = g;
    }
    const auto degree = static_cast<std::size_t>(p.degree());
    if (real_roots != degree)
        return CheckReport::failure(name,
                                    Witness{{}, {}, {mpz_class(static_cast<unsigned long>(degree)),
                                                     mpz_class(static_cast<unsigned long>(real_roots))},
                                            "degree vs real roots with multiplicity"},
                                    layers);
    return CheckReport::success(name, layers);
}

CheckReport roots_in_open_interval(const UnivariatePolynomial& p, const mpq_class& lo, const mpq_class& hi) {
    const char* name = "roots_in_open_interval";
    if (p.is_zero()) return CheckReport::precondition(name, Witness{{}, {}, {}, "zero polynomial"});
    if (!(lo < hi)) return CheckReport::precondition(name, Witness{{}, {}, {}, "empty interval"});
    const auto degree = static_cast<std::size_t>(p.degree());
    const auto sq = squarefree_part(p);
    const auto distinct = static_cast<std::size_t>(sq.degree());
    std::size_t inside =
        sturm_real_root_count(p, ExtendedRational::finite(lo), ExtendedRational::finite(hi));
    if (sgn(p(hi)) == 0) --inside;
    auto as_mpz = [](std::size_t v) { return mpz_class(static_cast<unsigned long>(v)); };
    if (distinct != degree)
        return CheckReport::failure(name, Witness{{}, {}, {as_mpz(degree), as_mpz(distinct)}, "repeated root"}, 1);
    if (inside != degree)
        return CheckReport::failure(name, Witness{{}, {}, {as_mpz(degree), as_mpz(inside)}, "roots outside interval"},
                                    1);
    return CheckReport::success(name, 1);
}

std::vector<mpz_class> integer_coefficients(const UnivariatePolynomial& p) {
    std::vector<mpz_class> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        if (c.get_den() != 1) throw DomainError("integer_coefficients: non-integral coefficient " + c.get_str());
        out.push_back(c.get_num());
    }
    return out;
}

CheckReport newton_implies_logconcave_check(const UnivariatePolynomial& p) {
    const char* name = "newton_log_concave";
    if (p.is_zero()) return CheckReport::precondition(name, Witness{{}, {}, {}, "zero polynomial"});
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        if (sgn(p.coefficients()[k]) < 0)
            return CheckReport::precondition(name, Witness{0, {static_cast<long>(k)}, {}, "negative coefficient"});
    if (auto rr = is_real_rooted(p); !rr.passed()) {
        auto w = *rr.witness();
        w.note = "not real-rooted";
        return CheckReport::precondition(name, std::move(w));
    }
    // Clear denominators; positive scaling preserves log-concavity.
    mpz_class common = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> row;
    row.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        mpq_class scaled = c * common;
        row.push_back(scaled.get_num());
    }
    auto lc = is_log_concave(std::span<const mpz_class>(row));
    if (!lc.passed()) return CheckReport::failure(name, *lc.witness(), lc.examined());
    return CheckReport::success(name, lc.examined());
}

// ---------------------------------------------------------------------------
// Coefficient sequences

std::vector<mpz_class> s_sequence(unsigned a, unsigned b, unsigned c, unsigned N) {
    const long top = static_cast<long>(N) + b + c;  // largest N + j + c
    std::vector<mpz_class> seq(static_cast<std::size_t>(top) + 1);
    for (unsigned i = 0; i <= std::min(a, N); ++i) {
        const unsigned j = N - i;
        if (j > b) continue;
        const mpz_class weight = binomial(a, i) * binomial(b, j);
        const long n = static_cast<long>(N) + j + c;
        for (long k = 0; k <= n; ++k) seq[static_cast<std::size_t>(k)] += weight * binomial(n, k);
    }
    return trim_trailing_zeros(std::move(seq));
}

std::vector<mpz_class> t_sequence(unsigned a, unsigned b, unsigned c, unsigned N) {
    const long total = static_cast<long>(a) + b + c;
    std::vector<mpz_class> seq(static_cast<std::size_t>(total) + 1);
    for (unsigned i = 0; i <= std::min(b, N); ++i) {
        const unsigned j = N - i;
        if (j > c) continue;
        const mpz_class weight = binomial(b, i) * binomial(c, j);
        const long n = total - i;
        for (long k = 0; k <= n; ++k) seq[static_cast<std::size_t>(k)] += weight * binomial(n, k);
    }
    return trim_trailing_zeros(std::move(seq));
}

std::vector<mpz_class> theta_sequence(unsigned a, unsigned b, unsigned c, unsigned k) {
    const long total = static_cast<long>(a) + b + c;
    std::vector<mpz_class> seq(a + c + 1);
    for (long h = 0; h <= static_cast<long>(a + c); ++h)
        for (long l = 0; l <= h; ++l)
            seq[static_cast<std::size_t>(h)] += binomial(a, h - l) * binomial(total - h + l, k) * binomial(c, l);
    return trim_trailing_zeros(std::move(seq));
}

}  // namespace cmono
