#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace cmono {

/// Dense arrays larger than this are refused with a ResourceError.
inline constexpr std::size_t kMaxDenseCells = 100'000'000;

/// Dense m-dimensional array of nonnegative integers over a box
/// [l_1..n_1] x ... x [l_m..n_m]. Storage is row-major (last axis fastest);
/// `offsets()` holds the lower bounds l_j so that absolute indices can be
/// recovered for witnesses.
class CoefficientArray {
public:
    /// Throws DomainError on a negative entry, StructuralError when `data`
    /// does not match `shape`, ResourceError beyond kMaxDenseCells.
    CoefficientArray(std::vector<std::size_t> shape, std::vector<long> offsets,
                     std::vector<mpz_class> data);

    /// One-dimensional array with lower bound 0.
    static CoefficientArray from_sequence(std::vector<mpz_class> seq);
    static CoefficientArray from_sequence(std::span<const long> seq);

    std::size_t dims() const noexcept { return shape_.size(); }
    const std::vector<std::size_t>& shape() const noexcept { return shape_; }
    const std::vector<long>& offsets() const noexcept { return offsets_; }
    const std::vector<mpz_class>& data() const noexcept { return data_; }
    std::size_t size() const noexcept { return data_.size(); }
    std::size_t stride(std::size_t axis) const { return strides_.at(axis); }

    const mpz_class& operator[](std::size_t flat) const { return data_[flat]; }

    /// Flat index of a box-relative multi-index.
    std::size_t flat_index(std::span<const std::size_t> rel) const;
    /// Box-relative multi-index of a flat index.
    std::vector<std::size_t> unravel(std::size_t flat) const;
    /// Absolute (offset-adjusted) multi-index of a flat index.
    std::vector<long> absolute_index(std::size_t flat) const;

    /// New array whose axis i is this array's axis perm[i].
    CoefficientArray permute_axes(std::span<const std::size_t> perm) const;

    friend bool operator==(const CoefficientArray&, const CoefficientArray&) = default;

private:
    std::vector<std::size_t> shape_;
    std::vector<long> offsets_;
    std::vector<mpz_class> data_;
    std::vector<std::size_t> strides_;
};

}  // namespace cmono
