#include "clustermono/cluster.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <gmpxx.h>

#include "clustermono/errors.hpp"

namespace cmono {

namespace {

void check_direction(std::size_t k, std::size_t n) {
    if (k >= n)
        throw DomainError("mutation direction " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n));
}

// Ratio propagation: d_j = -d_i * b_ij / b_ji along every nonzero entry,
// then each connected block is scaled to coprime positive integers.
std::vector<int> find_symmetrizer(const std::vector<std::vector<int>>& b) {
    const std::size_t n = b.size();
    std::vector<mpq_class> d(n, 0);
    std::vector<int> out(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (sgn(d[root]) != 0) continue;
        d[root] = 1;
        std::vector<std::size_t> block{root};
        for (std::size_t head = 0; head < block.size(); ++head) {
            const std::size_t i = block[head];
            for (std::size_t j = 0; j < n; ++j) {
                if (b[i][j] == 0) continue;
                mpq_class dj = -d[i] * b[i][j] / b[j][i];
                if (sgn(d[j]) == 0) {
                    d[j] = dj;
                    block.push_back(j);
                } else if (d[j] != dj) {
                    throw StructuralError("exchange matrix is not skew-symmetrizable (rows " + std::to_string(i + 1) +
                                          ", " + std::to_string(j + 1) + ")");
                }
            }
        }
        mpz_class den = 1, num = 0;
        for (auto i : block) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d[i].get_den_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), d[i].get_num_mpz_t());
        }
        for (auto i : block) {
            mpq_class scaled = d[i] * den / num;
            out[i] = static_cast<int>(scaled.get_num().get_si());
        }
    }
    return out;
}

std::string matrix_serial(const ExchangeMatrix& b, const std::vector<std::size_t>& inv) {
    std::string out;
    for (std::size_t i = 0; i < b.rank(); ++i) {
        out += i ? ";" : "";
        for (std::size_t j = 0; j < b.rank(); ++j) {
            out += j ? "," : "";
            out += std::to_string(b(inv[i], inv[j]));
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExchangeMatrix

ExchangeMatrix::ExchangeMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    if (n == 0) throw StructuralError("exchange matrix must have rank >= 1");
    for (std::size_t i = 0; i < n; ++i) {
        if (rows_[i].size() != n) throw StructuralError("exchange matrix must be square");
        if (rows_[i][i] != 0) throw StructuralError("exchange matrix diagonal must be zero");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const int a = rows_[i][j], c = rows_[j][i];
            if ((a == 0) != (c == 0) || (a != 0 && (a > 0) == (c > 0)))
                throw StructuralError("exchange matrix is not sign-skew-symmetric at (" + std::to_string(i + 1) + ", " +
                                      std::to_string(j + 1) + ")");
        }
    d_ = find_symmetrizer(rows_);
}

ExchangeMatrix ExchangeMatrix::negated() const {
    auto rows = rows_;
    for (auto& r : rows)
        for (auto& v : r) v = -v;
    return ExchangeMatrix(std::move(rows));
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
    const std::size_t n = b.rank();
    check_direction(k, n);
    std::vector<std::vector<int>> out(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out[i][j] = -b(i, j);
                continue;
            }
            const int bik = b(i, k), bkj = b(k, j);
            // Both products have the sign of bik*bkj; the sum is even.
            out[i][j] = b(i, j) + (bik * std::abs(bkj) + std::abs(bik) * bkj) / 2;
        }
    return ExchangeMatrix(std::move(out));
}

std::string to_string(const ExchangeMatrix& b) {
    std::string out = "[";
    for (std::size_t i = 0; i < b.rank(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < b.rank(); ++j) out += (j ? "," : "") + std::to_string(b(i, j));
        out += "]";
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// Seed

Seed::Seed(ExchangeMatrix matrix, std::vector<LaurentPolynomial> cluster)
    : matrix_(std::move(matrix)), cluster_(std::move(cluster)) {
    const std::size_t n = matrix_.rank();
    if (cluster_.size() != n) throw StructuralError("cluster length differs from matrix rank");
    for (std::size_t i = 0; i < n; ++i) {
        if (cluster_[i].rank() != n) throw StructuralError("cluster entry rank differs from matrix rank");
        if (cluster_[i].is_zero()) throw DomainError("cluster entry x" + std::to_string(i + 1) + " is zero");
        for (const auto& [e, c] : cluster_[i].terms())
            if (sgn(c) <= 0)
                throw DomainError("cluster entry " + to_string(cluster_[i]) + " has a nonpositive coefficient");
    }
}

Seed Seed::initial(ExchangeMatrix matrix) {
    const std::size_t n = matrix.rank();
    std::vector<LaurentPolynomial> cluster;
    cluster.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cluster.push_back(LaurentPolynomial::variable(n, i));
    return Seed(std::move(matrix), std::move(cluster));
}

Seed mutate_seed(const Seed& s, std::size_t k) {
    const std::size_t n = s.rank();
    check_direction(k, n);
    const auto& b = s.matrix();
    LaurentPolynomial plus = LaurentPolynomial::constant(n, 1);
    LaurentPolynomial minus = LaurentPolynomial::constant(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        const int bjk = b(j, k);
        if (bjk > 0) plus = plus * pow(s.cluster()[j], static_cast<unsigned>(bjk));
        if (bjk < 0) minus = minus * pow(s.cluster()[j], static_cast<unsigned>(-bjk));
    }
    auto cluster = s.cluster();
    cluster[k] = exact_div(plus + minus, s.cluster()[k]);
    return Seed(mutate_matrix(b, k), std::move(cluster));
}

Seed mutate_seed(const Seed& s, std::span<const std::size_t> word) {
    Seed out = s;
    for (auto k : word) out = mutate_seed(out, k);
    return out;
}

Seed negate_matrix_seed(const Seed& s) { return Seed(s.matrix().negated(), s.cluster()); }

LaurentPolynomial cluster_monomial(const Seed& s, std::span<const long> exponents) {
    const std::size_t n = s.rank();
    if (exponents.size() != n) throw StructuralError("exponent vector length differs from seed rank");
    LaurentPolynomial out = LaurentPolynomial::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (exponents[i] < 0) throw DomainError("cluster monomial exponents must be nonnegative");
        if (exponents[i] > 0) out = out * pow(s.cluster()[i], static_cast<unsigned>(exponents[i]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v]) throw StructuralError("permutation images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.degree() != inner.degree()) throw StructuralError("composing permutations of different degree");
    std::vector<std::size_t> images(inner.degree());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = outer(inner(i));
    return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do out.emplace_back(images);
    while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<std::vector<int>> permutation_matrix(const Permutation& sigma) {
    const std::size_t n = sigma.degree();
    std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) p[i][sigma(i)] = 1;
    return p;
}

ExchangeMatrix apply_permutation(const Permutation& sigma, const ExchangeMatrix& b) {
    const std::size_t n = b.rank();
    if (sigma.degree() != n) throw StructuralError("permutation degree differs from matrix rank");
    const auto inv = sigma.inverse();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = b(inv(i), inv(j));
    return ExchangeMatrix(std::move(rows));
}

Seed apply_permutation(const Permutation& sigma, const Seed& s) {
    if (sigma.degree() != s.rank()) throw StructuralError("permutation degree differs from seed rank");
    const auto inv = sigma.inverse();
    std::vector<LaurentPolynomial> cluster;
    cluster.reserve(s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i) cluster.push_back(s.cluster()[inv(i)]);
    return Seed(apply_permutation(sigma, s.matrix()), std::move(cluster));
}

std::string canonical_unlabeled_key(const Seed& s) {
    const std::size_t n = s.rank();
    std::vector<std::string> entries;
    entries.reserve(n);
    for (const auto& p : s.cluster()) entries.push_back(to_string(p));

    std::string best;
    bool first = true;
    std::vector<std::size_t> inv(n);
    std::iota(inv.begin(), inv.end(), 0);
    // Iterating over sigma^{-1} directly covers the same set of relabelings.
    do {
        std::string key;
        for (std::size_t i = 0; i < n; ++i) {
            key += entries[inv[i]];
            key += '|';
        }
        key += matrix_serial(s.matrix(), inv);
        if (first || key < best) {
            best = std::move(key);
            first = false;
        }
    } while (std::next_permutation(inv.begin(), inv.end()));
    return best;
}

std::vector<std::string> sorted_cluster_strings(const Seed& s, std::span<const std::string> names) {
    std::vector<std::string> out;
    out.reserve(s.rank());
    for (const auto& p : s.cluster()) out.push_back(to_string(p, names));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Exchange graph

ExchangeGraph enumerate_exchange_graph(const Seed& initial, std::size_t node_limit) {
    if (node_limit == 0) throw DomainError("node_limit must be at least 1");
    const std::size_t n = initial.rank();
    ExchangeGraph g;
    std::map<std::string, std::size_t> index;

    auto intern = [&](Seed s) {
        std::string key = canonical_unlabeled_key(s);
        auto [it, inserted] = index.emplace(key, g.seeds.size());
        if (inserted) {
            if (g.seeds.size() >= node_limit)
                throw ResourceError("exchange graph exceeds node limit " + std::to_string(node_limit));
            g.seeds.push_back(std::move(s));
            g.keys.push_back(std::move(key));
            g.neighbors.emplace_back(n, 0);
        }
        return it->second;
    };

    intern(initial);
    for (std::size_t u = 0; u < g.seeds.size(); ++u) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t v = intern(mutate_seed(g.seeds[u], k));
            g.neighbors[u][k] = v;
            if (u < v) g.edges.push_back({u, v, k});
        }
    }
    return g;
}

std::vector<LaurentPolynomial> list_cluster_variables(const ExchangeGraph& g) {
    std::map<std::string, const LaurentPolynomial*> seen;
    for (const auto& s : g.seeds)
        for (const auto& p : s.cluster()) seen.emplace(to_string(p), &p);
    std::vector<LaurentPolynomial> out;
    out.reserve(seen.size());
    for (const auto& [key, p] : seen) out.push_back(*p);
    return out;
}

std::string to_dot(const ExchangeGraph& g, std::span<const std::string> names) {
    std::string out = "graph exchange_graph {\n";
    for (std::size_t u = 0; u < g.size(); ++u) {
        std::string label;
        for (const auto& e : sorted_cluster_strings(g.seeds[u], names)) label += (label.empty() ? "" : ", ") + e;
        out += "  n" + std::to_string(u) + " [label=\"(" + label + ")\"];\n";
    }
    for (const auto& e : g.edges)
        out += "  n" + std::to_string(e.u) + " -- n" + std::to_string(e.v) + " [label=\"" +
               std::to_string(e.direction + 1) + "\"];\n";
    out += "}\n";
    return out;
}

// ---------------------------------------------------------------------------
// Seed files

SeedFile parse_seed_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    long rank = -1;
    std::vector<std::vector<int>> rows;
    std::vector<std::string> names;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("seed file line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "rank") {
            if (rank >= 0) throw fail("duplicate rank");
            if (!(ls >> rank) || rank <= 0) throw fail("rank must be a positive integer");
        } else if (word == "row") {
            if (rank < 0) throw fail("row before rank");
            std::vector<int> row;
            int v;
            while (ls >> v) row.push_back(v);
            if (!ls.eof()) throw fail("row entries must be integers");
            if (row.size() != static_cast<std::size_t>(rank)) throw fail("row has wrong length");
            rows.push_back(std::move(row));
        } else if (word == "names") {
            if (rank < 0) throw fail("names before rank");
            std::string name;
            while (ls >> name) names.push_back(name);
            if (names.size() != static_cast<std::size_t>(rank)) throw fail("names count differs from rank");
        } else {
            throw fail("unknown directive '" + word + "'");
        }
        std::string extra;
        if (word == "rank" && (ls >> extra)) throw fail("trailing text after rank");
    }
    if (rank < 0) throw ParseError("seed file: missing rank");
    if (rows.size() != static_cast<std::size_t>(rank))
        throw ParseError("seed file: expected " + std::to_string(rank) + " rows, got " + std::to_string(rows.size()));
    return SeedFile{ExchangeMatrix(std::move(rows)), std::move(names)};
}

SeedFile read_seed_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open seed file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_seed_file(buf.str());
}

std::string format_seed_file(const SeedFile& f) {
    std::string out = "rank " + std::to_string(f.matrix.rank()) + "\n";
    for (const auto& row : f.matrix.rows()) {
        out += "row";
        for (int v : row) out += " " + std::to_string(v);
        out += "\n";
    }
    if (!f.names.empty()) {
        out += "names";
        for (const auto& name : f.names) out += " " + name;
        out += "\n";
    }
    return out;
}

}  // namespace cmono
