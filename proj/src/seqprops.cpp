#include "clustermono/seqprops.hpp"

#include <algorithm>
#include <string>

#include "clustermono/errors.hpp"

namespace cmono {

namespace {

std::size_t axis_coordinate(const CoefficientArray& arr, std::size_t flat, std::size_t axis) {
    return (flat / arr.stride(axis)) % arr.shape()[axis];
}

// Calls fn(base) for the first cell of every fiber along `axis`, in row-major
// order of the complement tuple. Stops early when fn returns false.
template <class Fn>
void for_each_fiber(const CoefficientArray& arr, std::size_t axis, Fn&& fn) {
    for (std::size_t flat = 0; flat < arr.size(); ++flat) {
        if (axis_coordinate(arr, flat, axis) != 0) continue;
        if (!fn(flat)) return;
    }
}

std::vector<mpz_class> fiber_values(const CoefficientArray& arr, std::size_t base, std::size_t axis) {
    std::vector<mpz_class> out(arr.shape()[axis]);
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = arr[base + t * arr.stride(axis)];
    return out;
}

Witness cell_witness(const CoefficientArray& arr, std::size_t axis, std::size_t flat, std::vector<mpz_class> values,
                     std::string note = {}) {
    return Witness{axis, arr.absolute_index(flat), std::move(values), std::move(note)};
}

constexpr const char* is_log_concave_name = "log_concave";
constexpr const char* has_internal_zeros_name = "no_internal_zeros";
constexpr const char* is_unimodal_name = "unimodal";
constexpr const char* is_unimodal_per_fiber_name = "unimodal_per_fiber";

}  // namespace

CheckReport is_log_concave(const CoefficientArray& arr) {
    static const mpz_class zero = 0;
    std::size_t examined = 0;
    mpz_class square, product;
    for (std::size_t axis = 0; axis < arr.dims(); ++axis) {
        const std::size_t stride = arr.stride(axis);
        const std::size_t extent = arr.shape()[axis];
        for (std::size_t flat = 0; flat < arr.size(); ++flat) {
            ++examined;
            const std::size_t t = axis_coordinate(arr, flat, axis);
            const mpz_class& prev = t > 0 ? arr[flat - stride] : zero;
            const mpz_class& next = t + 1 < extent ? arr[flat + stride] : zero;
            if (sgn(prev) == 0 || sgn(next) == 0) continue;
            square = arr[flat] * arr[flat];
            product = prev * next;
            if (square < product)
                return CheckReport::failure(is_log_concave_name, cell_witness(arr, axis, flat, {prev, arr[flat], next}),
                                            examined);
        }
    }
    return CheckReport::success(is_log_concave_name, examined);
}

CheckReport has_internal_zeros(const CoefficientArray& arr) {
    std::size_t examined = 0;
    std::optional<CheckReport> failed;
    for (std::size_t axis = 0; axis < arr.dims() && !failed; ++axis) {
        const std::size_t stride = arr.stride(axis);
        for_each_fiber(arr, axis, [&](std::size_t base) {
            const auto values = fiber_values(arr, base, axis);
            examined += values.size();
            auto first = std::find_if(values.begin(), values.end(), [](const mpz_class& v) { return sgn(v) != 0; });
            if (first == values.end()) return true;
            auto last = std::find_if(values.rbegin(), values.rend(), [](const mpz_class& v) { return sgn(v) != 0; });
            const std::size_t lo = static_cast<std::size_t>(first - values.begin());
            const std::size_t hi = values.size() - 1 - static_cast<std::size_t>(last - values.rbegin());
            for (std::size_t q = lo + 1; q < hi; ++q) {
                if (sgn(values[q]) != 0) continue;
                std::size_t p = q, r = q;
                while (sgn(values[p]) == 0) --p;
                while (sgn(values[r]) == 0) ++r;
                failed = CheckReport::failure(
                    has_internal_zeros_name,
                    cell_witness(arr, axis, base + q * stride, {values[p], values[q], values[r]}), examined);
                return false;
            }
            return true;
        });
    }
    if (failed) return *failed;
    return CheckReport::success(has_internal_zeros_name, examined);
}

std::vector<std::size_t> valid_peaks(std::span<const mpz_class> seq) {
    const std::size_t n = seq.size();
    std::vector<std::size_t> peaks;
    if (n == 0) return peaks;
    // rising[k]: seq nondecreasing on [0, k]; falling[k]: nonincreasing on [k, n).
    std::vector<bool> rising(n, true), falling(n, true);
    for (std::size_t k = 1; k < n; ++k) rising[k] = rising[k - 1] && seq[k - 1] <= seq[k];
    for (std::size_t k = n - 1; k-- > 0;) falling[k] = falling[k + 1] && seq[k] >= seq[k + 1];
    for (std::size_t k = 0; k < n; ++k)
        if (rising[k] && falling[k]) peaks.push_back(k);
    return peaks;
}

std::vector<bool> fiber_peak_mask(std::span<const mpz_class> fiber) {
    const std::size_t n = fiber.size();
    std::size_t p = 0;
    while (p < n && sgn(fiber[p]) == 0) ++p;
    if (p == n) return std::vector<bool>(n, true);
    std::size_t q = n - 1;
    while (sgn(fiber[q]) == 0) --q;
    const auto support = fiber.subspan(p, q - p + 1);
    std::vector<bool> mask(n, false);
    for (auto k : valid_peaks(support)) mask[p + k] = true;
    // Outside the support the chain only constrains the support itself.
    const bool rising = mask[q], falling = mask[p];
    for (std::size_t k = 0; k < p; ++k) mask[k] = falling;
    for (std::size_t k = q + 1; k < n; ++k) mask[k] = rising;
    return mask;
}

CheckReport is_unimodal(const CoefficientArray& arr, UnimodalityReading reading) {
    const char* name = reading == UnimodalityReading::uniform_peak ? is_unimodal_name : is_unimodal_per_fiber_name;
    std::size_t examined = 0;
    std::optional<CheckReport> failed;
    for (std::size_t axis = 0; axis < arr.dims() && !failed; ++axis) {
        const std::size_t stride = arr.stride(axis);
        const std::size_t extent = arr.shape()[axis];
        std::vector<bool> common(extent, true);
        for_each_fiber(arr, axis, [&](std::size_t base) {
            const auto values = fiber_values(arr, base, axis);
            examined += values.size();
            const auto mine = fiber_peak_mask(values);
            if (std::find(mine.begin(), mine.end(), true) == mine.end()) {
                // A strict descent followed later by a strict ascent; report the valley.
                std::size_t i = 0;
                while (values[i] <= values[i + 1]) ++i;
                std::size_t j = i + 1;
                while (values[j] >= values[j + 1]) ++j;
                failed = CheckReport::failure(
                    name,
                    cell_witness(arr, axis, base + j * stride, {values[i], values[j], values[j + 1]},
                                 "fiber has no peak"),
                    examined);
                return false;
            }
            if (reading == UnimodalityReading::per_fiber) return true;
            const auto candidate = std::find(common.begin(), common.end(), true);
            const std::size_t k = static_cast<std::size_t>(candidate - common.begin());
            bool any = false;
            for (std::size_t t = 0; t < extent; ++t) {
                common[t] = common[t] && mine[t];
                any = any || common[t];
            }
            if (!any) {
                static const mpz_class zero = 0;
                failed = CheckReport::failure(
                    name,
                    cell_witness(arr, axis, base + k * stride,
                                 {k > 0 ? values[k - 1] : zero, values[k], k + 1 < extent ? values[k + 1] : zero},
                                 "no common peak index"),
                    examined);
                return false;
            }
            return true;
        });
    }
    if (failed) return *failed;
    return CheckReport::success(name, examined);
}

std::vector<mpz_class> convolve(std::span<const mpz_class> a, std::span<const mpz_class> b) {
    if (a.empty() || b.empty()) throw DomainError("convolve: sequences must be nonempty");
    std::vector<mpz_class> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    return out;
}

CheckReport check_shifted_products(std::span<const mpz_class> a) {
    const char* name = "shifted_products";
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) < 0)
            return CheckReport::precondition(name, Witness{0, {static_cast<long>(i)}, {a[i]}, "negative entry"});
    if (a.empty()) return CheckReport::success(name, 0);
    const auto arr = CoefficientArray::from_sequence(std::vector<mpz_class>(a.begin(), a.end()));
    if (auto lc = is_log_concave(arr); !lc.passed()) {
        auto w = *lc.witness();
        w.note = "not log-concave";
        return CheckReport::precondition(name, std::move(w));
    }
    if (auto iz = has_internal_zeros(arr); !iz.passed()) {
        auto w = *iz.witness();
        w.note = "internal zero";
        return CheckReport::precondition(name, std::move(w));
    }

    std::size_t examined = 0;
    const std::size_t n = a.size();
    mpz_class inner, outer;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            inner = a[i] * a[j];
            for (std::size_t r = 1; r <= i && j + r < n; ++r) {
                ++examined;
                outer = a[i - r] * a[j + r];
                if (inner < outer)
                    return CheckReport::failure(
                        name,
                        Witness{0,
                                {static_cast<long>(i), static_cast<long>(j), static_cast<long>(r)},
                                {a[i - r], a[i], a[j], a[j + r]},
                                "a_i*a_j < a_{i-r}*a_{j+r}"},
                        examined);
            }
        }
    }
    return CheckReport::success(name, examined);
}

CheckReport is_log_concave(std::span<const mpz_class> seq) {
    if (seq.empty()) return CheckReport::success(is_log_concave_name, 0);
    return is_log_concave(CoefficientArray::from_sequence(std::vector<mpz_class>(seq.begin(), seq.end())));
}

CheckReport has_internal_zeros(std::span<const mpz_class> seq) {
    if (seq.empty()) return CheckReport::success(has_internal_zeros_name, 0);
    return has_internal_zeros(CoefficientArray::from_sequence(std::vector<mpz_class>(seq.begin(), seq.end())));
}

CheckReport is_unimodal(std::span<const mpz_class> seq, UnimodalityReading reading) {
    if (seq.empty())
        return CheckReport::success(
            reading == UnimodalityReading::uniform_peak ? is_unimodal_name : is_unimodal_per_fiber_name, 0);
    return is_unimodal(CoefficientArray::from_sequence(std::vector<mpz_class>(seq.begin(), seq.end())), reading);
}

std::vector<mpz_class> to_mpz(std::span<const long> seq) { return {seq.begin(), seq.end()}; }

}  // namespace cmono
