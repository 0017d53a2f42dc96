#include "clustermono/coefficient_array.hpp"

#include <string>

#include "clustermono/errors.hpp"

namespace cmono {

CoefficientArray::CoefficientArray(std::vector<std::size_t> shape, std::vector<long> offsets,
                                   std::vector<mpz_class> data)
    : shape_(std::move(shape)), offsets_(std::move(offsets)), data_(std::move(data)) {
    if (offsets_.size() != shape_.size())
        throw StructuralError("coefficient array: offsets and shape differ in length");
    std::size_t cells = 1;
    for (std::size_t extent : shape_) {
        if (extent == 0) throw StructuralError("coefficient array: empty axis");
        if (cells > kMaxDenseCells / extent)
            throw ResourceError("coefficient array exceeds " + std::to_string(kMaxDenseCells) + " cells");
        cells *= extent;
    }
    if (data_.size() != cells)
        throw StructuralError("coefficient array: data length " + std::to_string(data_.size()) +
                              " does not match box of " + std::to_string(cells) + " cells");
    for (const auto& v : data_)
        if (sgn(v) < 0) throw DomainError("coefficient array entries must be nonnegative");

    strides_.assign(shape_.size(), 1);
    for (std::size_t axis = shape_.size(); axis-- > 1;) strides_[axis - 1] = strides_[axis] * shape_[axis];
}

CoefficientArray CoefficientArray::from_sequence(std::vector<mpz_class> seq) {
    std::size_t n = seq.size();
    return CoefficientArray({n}, {0}, std::move(seq));
}

CoefficientArray CoefficientArray::from_sequence(std::span<const long> seq) {
    std::vector<mpz_class> data(seq.begin(), seq.end());
    return from_sequence(std::move(data));
}

std::size_t CoefficientArray::flat_index(std::span<const std::size_t> rel) const {
    if (rel.size() != shape_.size()) throw StructuralError("coefficient array: index has wrong length");
    std::size_t flat = 0;
    for (std::size_t axis = 0; axis < rel.size(); ++axis) {
        if (rel[axis] >= shape_[axis]) throw DomainError("coefficient array: index outside box");
        flat += rel[axis] * strides_[axis];
    }
    return flat;
}

std::vector<std::size_t> CoefficientArray::unravel(std::size_t flat) const {
    std::vector<std::size_t> rel(shape_.size());
    for (std::size_t axis = 0; axis < shape_.size(); ++axis) {
        rel[axis] = flat / strides_[axis];
        flat %= strides_[axis];
    }
    return rel;
}

std::vector<long> CoefficientArray::absolute_index(std::size_t flat) const {
    auto rel = unravel(flat);
    std::vector<long> abs(rel.size());
    for (std::size_t axis = 0; axis < rel.size(); ++axis)
        abs[axis] = offsets_[axis] + static_cast<long>(rel[axis]);
    return abs;
}

CoefficientArray CoefficientArray::permute_axes(std::span<const std::size_t> perm) const {
    const std::size_t m = dims();
    if (perm.size() != m) throw StructuralError("permute_axes: permutation has wrong degree");
    std::vector<bool> seen(m, false);
    for (auto p : perm) {
        if (p >= m || seen[p]) throw DomainError("permute_axes: not a permutation");
        seen[p] = true;
    }
    std::vector<std::size_t> shape(m);
    std::vector<long> offsets(m);
    for (std::size_t i = 0; i < m; ++i) {
        shape[i] = shape_[perm[i]];
        offsets[i] = offsets_[perm[i]];
    }
    std::vector<mpz_class> data(data_.size());
    for (std::size_t flat = 0; flat < data_.size(); ++flat) {
        auto rel = unravel(flat);
        // destination index: dst[i] = rel[perm[i]]
        std::size_t dst = 0, stride = 1;
        for (std::size_t i = m; i-- > 0;) {
            dst += rel[perm[i]] * stride;
            stride *= shape[i];
        }
        data[dst] = data_[flat];
    }
    return CoefficientArray(std::move(shape), std::move(offsets), std::move(data));
}

}  // namespace cmono
