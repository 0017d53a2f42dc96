#include "clustermono/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "clustermono/errors.hpp"

namespace cmono {

namespace {

void require_same_rank(const LaurentPolynomial& p, const LaurentPolynomial& q, const char* op) {
    if (p.rank() != q.rank())
        throw StructuralError(std::string(op) + ": rank mismatch (" + std::to_string(p.rank()) + " vs " +
                              std::to_string(q.rank()) + ")");
}

// r -= c * x^shift * q, in place.
void submul_shifted(LaurentPolynomial::TermMap& r, const LaurentPolynomial& q, const ExponentVector& shift,
                    const mpz_class& c) {
    for (const auto& [e, qc] : q.terms()) {
        auto key = e + shift;
        auto [it, inserted] = r.try_emplace(std::move(key), 0);
        it->second -= c * qc;
        if (sgn(it->second) == 0) r.erase(it);
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
    if (o.size() != size()) throw StructuralError("exponent vectors differ in length");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
    if (o.size() != size()) throw StructuralError("exponent vectors differ in length");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

bool ExponentVector::dominates(const ExponentVector& b) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] < b.e_[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(std::size_t rank) : rank_(rank) {
    if (rank == 0) throw StructuralError("Laurent polynomial rank must be positive");
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, const mpz_class& c) {
    LaurentPolynomial p(rank);
    p.add_term(ExponentVector(rank), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t rank, std::size_t index) {
    if (index >= rank) throw StructuralError("variable index out of range");
    ExponentVector e(rank);
    e[index] = 1;
    return monomial(e);
}

LaurentPolynomial LaurentPolynomial::monomial(const ExponentVector& e, const mpz_class& c) {
    LaurentPolynomial p(e.size());
    p.add_term(e, c);
    return p;
}

mpz_class LaurentPolynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const mpz_class& c) {
    if (e.size() != rank_) throw StructuralError("term exponent vector has wrong length");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

ExponentVector LaurentPolynomial::min_exponents() const {
    if (is_zero()) throw DomainError("min_exponents of the zero polynomial");
    ExponentVector m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < rank_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

ExponentVector LaurentPolynomial::max_exponents() const {
    if (is_zero()) throw DomainError("max_exponents of the zero polynomial");
    ExponentVector m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < rank_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

bool LaurentPolynomial::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
        return std::all_of(t.first.begin(), t.first.end(), [](int x) { return x >= 0; });
    });
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& shift) const {
    if (shift.size() != rank_) throw StructuralError("shift has wrong length");
    LaurentPolynomial r(rank_);
    // Translation preserves the lexicographic order, so append with a hint.
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    require_same_rank(*this, o, "add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    require_same_rank(*this, o, "sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial NormalForm::reconstruct() const {
    ExponentVector shift(numerator.rank());
    for (std::size_t j = 0; j < dvector.size(); ++j) shift[j] = -dvector[j];
    return numerator.shifted(shift);
}

// ---------------------------------------------------------------------------
// Arithmetic

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    LaurentPolynomial r = p;
    r += q;
    return r;
}

LaurentPolynomial sub(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    LaurentPolynomial r = p;
    r -= q;
    return r;
}

LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    require_same_rank(p, q, "mul");
    LaurentPolynomial r(p.rank());
    if (p.is_zero() || q.is_zero()) return r;
    LaurentPolynomial::TermMap acc;
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) {
            auto [it, inserted] = acc.try_emplace(ep + eq, 0);
            mpz_addmul(it->second.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
        }
    }
    for (auto& [e, c] : acc)
        if (sgn(c) != 0) r.add_term(e, c);
    return r;
}

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned e) {
    LaurentPolynomial result = LaurentPolynomial::constant(p.rank(), 1);
    LaurentPolynomial base = p;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

LaurentPolynomial exact_div(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    require_same_rank(p, q, "exact_div");
    if (q.is_zero()) throw DomainError("exact_div: division by the zero polynomial");
    const std::size_t n = p.rank();
    if (p.is_zero()) return LaurentPolynomial(n);

    // Clear minimal exponents so both operands are polynomials; the quotient
    // is shifted back at the end.
    const ExponentVector shift_p = p.min_exponents();
    const ExponentVector shift_q = q.min_exponents();
    const LaurentPolynomial divisor = q.shifted(ExponentVector(n) - shift_q);
    LaurentPolynomial::TermMap rest = p.shifted(ExponentVector(n) - shift_p).terms();

    const auto& [lead_exp, lead_coef] = *divisor.terms().rbegin();
    LaurentPolynomial quotient(n);
    LaurentPolynomial remainder(n);
    mpz_class c;
    while (!rest.empty()) {
        auto top = std::prev(rest.end());
        if (top->first.dominates(lead_exp) && mpz_divisible_p(top->second.get_mpz_t(), lead_coef.get_mpz_t())) {
            ExponentVector t = top->first - lead_exp;
            mpz_divexact(c.get_mpz_t(), top->second.get_mpz_t(), lead_coef.get_mpz_t());
            quotient.add_term(t, c);
            submul_shifted(rest, divisor, t, c);
        } else {
            remainder.add_term(top->first, top->second);
            rest.erase(top);
        }
    }
    if (!remainder.is_zero())
        throw DivisionError("exact_div: " + to_string(q) + " does not divide " + to_string(p),
                            to_string(remainder.shifted(shift_p)));
    return quotient.shifted(shift_p - shift_q);
}

NormalForm normalize(const LaurentPolynomial& p) {
    if (p.is_zero()) throw DomainError("normalize: zero polynomial has no normal form");
    ExponentVector mins = p.min_exponents();
    std::vector<int> dvector(p.rank());
    for (std::size_t j = 0; j < p.rank(); ++j) dvector[j] = -mins[j];
    return NormalForm{p.shifted(ExponentVector(p.rank()) - mins), std::move(dvector)};
}

mpq_class evaluate(const LaurentPolynomial& p, std::span<const mpq_class> point) {
    if (point.size() != p.rank()) throw StructuralError("evaluate: point has wrong length");
    for (const auto& v : point)
        if (sgn(v) == 0) throw DomainError("evaluate: evaluation point has a zero entry");
    mpq_class total = 0;
    mpq_class term, factor;
    for (const auto& [e, c] : p.terms()) {
        term = c;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            unsigned k = static_cast<unsigned>(e[j] < 0 ? -e[j] : e[j]);
            mpz_pow_ui(factor.get_num_mpz_t(), point[j].get_num_mpz_t(), k);
            mpz_pow_ui(factor.get_den_mpz_t(), point[j].get_den_mpz_t(), k);
            factor.canonicalize();
            if (e[j] > 0)
                term *= factor;
            else
                term /= factor;
        }
        total += term;
    }
    return total;
}

CoefficientArray coefficient_array(const LaurentPolynomial& p) {
    if (p.is_zero()) throw DomainError("coefficient_array: zero polynomial");
    const std::size_t n = p.rank();
    const ExponentVector lo = p.min_exponents();
    const ExponentVector hi = p.max_exponents();
    std::vector<std::size_t> shape(n);
    std::vector<long> offsets(n);
    std::size_t cells = 1;
    for (std::size_t j = 0; j < n; ++j) {
        shape[j] = static_cast<std::size_t>(hi[j] - lo[j]) + 1;
        offsets[j] = lo[j];
        if (cells > kMaxDenseCells / shape[j])
            throw ResourceError("coefficient_array: bounding box exceeds " + std::to_string(kMaxDenseCells) + " cells");
        cells *= shape[j];
    }
    std::vector<mpz_class> data(cells);
    for (const auto& [e, c] : p.terms()) {
        std::size_t flat = 0;
        for (std::size_t j = 0; j < n; ++j) flat = flat * shape[j] + static_cast<std::size_t>(e[j] - lo[j]);
        data[flat] = c;
    }
    return CoefficientArray(std::move(shape), std::move(offsets), std::move(data));
}

LaurentPolynomial from_coefficient_array(const CoefficientArray& arr) {
    LaurentPolynomial p(arr.dims());
    for (std::size_t flat = 0; flat < arr.size(); ++flat) {
        if (sgn(arr[flat]) == 0) continue;
        auto abs = arr.absolute_index(flat);
        std::vector<int> e(abs.begin(), abs.end());
        p.add_term(ExponentVector(std::move(e)), arr[flat]);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const LaurentPolynomial& p, std::span<const std::string> names) {
    if (!names.empty() && names.size() != p.rank()) throw StructuralError("to_string: wrong number of names");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = sgn(c) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        mpz_class mag = abs(c);
        std::string mono;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names.empty() ? "x" + std::to_string(j + 1) : names[j];
            if (e[j] != 1) mono += "^" + std::to_string(e[j]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t rank, std::span<const std::string> names)
        : text_(text), rank_(rank), names_(names) {}

    LaurentPolynomial run() {
        if (rank_ == 0) rank_ = names_.empty() ? infer_rank() : names_.size();
        if (!names_.empty() && names_.size() != rank_) throw ParseError("number of names does not match rank");
        auto r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return r;
    }

private:
    std::size_t infer_rank() const {
        std::size_t rank = 1;
        for (std::size_t i = 0; i < text_.size(); ++i) {
            if (text_[i] != 'x' || (i > 0 && is_ident(text_[i - 1]))) continue;
            std::size_t j = i + 1, idx = 0;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j])))
                idx = idx * 10 + static_cast<std::size_t>(text_[j++] - '0');
            if (j > i + 1) rank = std::max(rank, idx);
        }
        return rank;
    }

    static bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("Laurent expression: " + msg + " at offset " + std::to_string(pos_) + " in '" +
                         std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPolynomial expr() {
        skip_ws();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        LaurentPolynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    LaurentPolynomial term() {
        LaurentPolynomial acc = factor();
        for (;;) {
            if (accept('*'))
                acc = mul(acc, factor());
            else if (accept('/'))
                acc = exact_div(acc, factor());
            else
                return acc;
        }
    }

    LaurentPolynomial factor() {
        LaurentPolynomial base = primary();
        if (!accept('^')) return base;
        skip_ws();
        bool negative = false;
        if (accept('-')) negative = true;
        skip_ws();
        long k = integer_literal_small();
        if (!negative) return pow(base, static_cast<unsigned>(k));
        if (base.term_count() != 1 || abs(base.terms().begin()->second) != 1)
            fail("negative exponent requires a unit monomial base");
        const auto& [e, c] = *base.terms().begin();
        ExponentVector inv(rank_);
        for (std::size_t j = 0; j < rank_; ++j) inv[j] = -e[j] * static_cast<int>(k);
        mpz_class sign = (k % 2 == 1) ? c : mpz_class(1);
        return LaurentPolynomial::monomial(inv, sign);
    }

    long integer_literal_small() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        long v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc() || v > std::numeric_limits<int>::max()) fail("exponent out of range");
        return v;
    }

    LaurentPolynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            auto inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return LaurentPolynomial::constant(rank_, mpz_class(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
            std::string_view ident = text_.substr(start, pos_ - start);
            return LaurentPolynomial::variable(rank_, variable_index(ident));
        }
        fail(std::string("unexpected character '") + ch + "'");
    }

    std::size_t variable_index(std::string_view ident) {
        if (!names_.empty()) {
            for (std::size_t j = 0; j < names_.size(); ++j)
                if (names_[j] == ident) return j;
            fail("unknown variable '" + std::string(ident) + "'");
        }
        if (ident.size() < 2 || ident[0] != 'x') fail("unknown variable '" + std::string(ident) + "'");
        std::size_t idx = 0;
        auto [ptr, ec] = std::from_chars(ident.data() + 1, ident.data() + ident.size(), idx);
        if (ec != std::errc() || ptr != ident.data() + ident.size() || idx == 0 || idx > rank_)
            fail("variable '" + std::string(ident) + "' outside rank " + std::to_string(rank_));
        return idx - 1;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t rank_;
    std::span<const std::string> names_;
};

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text, std::size_t rank, std::span<const std::string> names) {
    return Parser(text, rank, names).run();
}

}  // namespace cmono
