#pragma once

// Seeds of skew-symmetrizable cluster algebras, mutation, the relabeling
// action of permutations, and breadth-first exchange-graph enumeration.
//
// Library indices are zero-based throughout; the CLI converts from the
// 1-based directions users type.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clustermono/laurent.hpp"

namespace cmono {

/// Square integer matrix with zero diagonal and a positive integer
/// symmetrizer D (D*B skew-symmetric), validated on construction.
class ExchangeMatrix {
public:
    explicit ExchangeMatrix(std::vector<std::vector<int>> rows);

    std::size_t rank() const noexcept { return rows_.size(); }
    int operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    /// Smallest positive integer symmetrizer (each connected block has gcd 1).
    const std::vector<int>& symmetrizer() const noexcept { return d_; }

    ExchangeMatrix negated() const;

    friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) { return a.rows_ == b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    std::vector<int> d_;
};

/// b'_ij = -b_ij on row/column k, else b_ij + (b_ik|b_kj| + |b_ik|b_kj)/2.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

std::string to_string(const ExchangeMatrix& b);

/// Exchange matrix plus cluster, each entry a Laurent polynomial in the
/// initial variables. Construction rejects a numerator with a nonpositive
/// coefficient.
class Seed {
public:
    Seed(ExchangeMatrix matrix, std::vector<LaurentPolynomial> cluster);

    /// The seed (x1, ..., xn; B).
    static Seed initial(ExchangeMatrix matrix);

    std::size_t rank() const noexcept { return matrix_.rank(); }
    const ExchangeMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<LaurentPolynomial>& cluster() const noexcept { return cluster_; }

    friend bool operator==(const Seed&, const Seed&) = default;

private:
    ExchangeMatrix matrix_;
    std::vector<LaurentPolynomial> cluster_;
};

Seed mutate_seed(const Seed& s, std::size_t k);
/// Applies directions left to right.
Seed mutate_seed(const Seed& s, std::span<const std::size_t> word);

/// Same cluster, matrix negated.
Seed negate_matrix_seed(const Seed& s);

/// prod cluster[i]^m_i. Throws DomainError on a negative exponent.
LaurentPolynomial cluster_monomial(const Seed& s, std::span<const long> exponents);

/// A bijection i -> images[i] on {0, ..., n-1}.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);

    std::size_t degree() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

/// (outer * inner)(i) = outer(inner(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);

/// All permutations of degree n in lexicographic order of their images.
std::vector<Permutation> all_permutations(std::size_t n);

/// P with P[i][j] = 1 iff i = sigma^{-1}(j), so that sigma(B) = P^T B P.
std::vector<std::vector<int>> permutation_matrix(const Permutation& sigma);

/// x'_i = x_{sigma^{-1}(i)}, b'_ij = b_{sigma^{-1}(i) sigma^{-1}(j)}.
ExchangeMatrix apply_permutation(const Permutation& sigma, const ExchangeMatrix& b);
Seed apply_permutation(const Permutation& sigma, const Seed& s);

/// Equal for two seeds iff one is a relabeling of the other. Minimizes the
/// serialization of (cluster, matrix) over all n! relabelings.
std::string canonical_unlabeled_key(const Seed& s);

/// Canonical strings of the cluster entries, sorted.
std::vector<std::string> sorted_cluster_strings(const Seed& s, std::span<const std::string> names = {});

struct ExchangeEdge {
    std::size_t u;
    std::size_t v;
    std::size_t direction;  ///< mutation direction at node u's representative
    friend bool operator==(const ExchangeEdge&, const ExchangeEdge&) = default;
};

/// Unlabeled seeds reachable from the initial one. Node 0 is the initial
/// seed; nodes are numbered in discovery order.
struct ExchangeGraph {
    std::vector<Seed> seeds;
    std::vector<std::string> keys;
    /// neighbors[u][k]: node reached by mutating u's representative at k.
    std::vector<std::vector<std::size_t>> neighbors;
    /// One entry per (u, k) with u < neighbors[u][k].
    std::vector<ExchangeEdge> edges;

    std::size_t size() const noexcept { return seeds.size(); }
};

/// Breadth-first closure under mutation. Throws ResourceError as soon as
/// more than node_limit unlabeled seeds have been found.
ExchangeGraph enumerate_exchange_graph(const Seed& initial, std::size_t node_limit);

/// Every cluster entry of every node, deduplicated, sorted by canonical string.
std::vector<LaurentPolynomial> list_cluster_variables(const ExchangeGraph& g);

/// Byte-stable DOT rendering; node labels are the sorted cluster strings.
std::string to_dot(const ExchangeGraph& g, std::span<const std::string> names = {});

/// Seed file: `rank N`, then N lines `row b_i1 ... b_iN`, optionally
/// `names v1 ... vN`. Blank lines and `#` comments are ignored.
struct SeedFile {
    ExchangeMatrix matrix;
    std::vector<std::string> names;
};

SeedFile parse_seed_file(std::string_view text);
SeedFile read_seed_file(const std::string& path);
std::string format_seed_file(const SeedFile& f);

}  // namespace cmono
