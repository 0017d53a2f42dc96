#pragma once

// Log-concavity, unimodality and internal-zero checks on dense coefficient
// arrays, plus the sequence convolution used to build log-concave families.
//
// Every check scans axes in increasing order and, within an axis, cells in
// row-major order, so the first witness found is the lexicographically least
// (axis, index) pair.

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "clustermono/coefficient_array.hpp"
#include "clustermono/report.hpp"

namespace cmono {

/// a^2 >= a_prev * a_next along every axis, cells outside the box read as 0.
/// Witness: the middle cell, values (prev, middle, next).
CheckReport is_log_concave(const CoefficientArray& arr);

/// Passes when no fiber has a zero strictly between two nonzero entries.
/// Witness: the zero cell, values (nearest nonzero before, 0, nearest nonzero after).
CheckReport has_internal_zeros(const CoefficientArray& arr);

enum class UnimodalityReading {
    /// One peak index per axis must serve every fiber (check name "unimodal").
    uniform_peak,
    /// Every fiber must have some peak of its own ("unimodal_per_fiber").
    per_fiber,
};

/// Zeros outside a fiber's support are not terms: the chain runs over the
/// support, and a peak index left (right) of it is valid when the support is
/// nonincreasing (nondecreasing). Identically zero fibers accept every index.
CheckReport is_unimodal(const CoefficientArray& arr, UnimodalityReading reading = UnimodalityReading::uniform_peak);

/// Peak indices of one fiber under the support convention above.
std::vector<bool> fiber_peak_mask(std::span<const mpz_class> fiber);

/// All k such that seq is nondecreasing on [0, k] and nonincreasing on [k, end).
std::vector<std::size_t> valid_peaks(std::span<const mpz_class> seq);

/// Cauchy product; both inputs must be nonempty.
std::vector<mpz_class> convolve(std::span<const mpz_class> a, std::span<const mpz_class> b);

/// a_i a_j >= a_{i-r} a_{j+r} for all i <= j, r >= 0 in range. The input must
/// be nonnegative, log-concave and free of internal zeros; otherwise the
/// verdict is precondition_failed with the violated check's witness.
CheckReport check_shifted_products(std::span<const mpz_class> a);

/// Sequence conveniences (a 1-D array with lower bound 0).
CheckReport is_log_concave(std::span<const mpz_class> seq);
CheckReport has_internal_zeros(std::span<const mpz_class> seq);
CheckReport is_unimodal(std::span<const mpz_class> seq,
                        UnimodalityReading reading = UnimodalityReading::uniform_peak);

std::vector<mpz_class> to_mpz(std::span<const long> seq);

}  // namespace cmono
