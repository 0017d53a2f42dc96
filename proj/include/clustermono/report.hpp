#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cmono {

enum class Verdict { pass, fail, precondition_failed };

/// Where a check broke. `axis` is zero-based (printed as x1, x2, ...);
/// `index` is the absolute multi-index of the offending cell.
struct Witness {
    std::optional<std::size_t> axis;
    std::vector<long> index;
    std::vector<mpz_class> values;
    std::string note;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Verdict of one property check. A failing verdict always carries a
/// witness; a passing one never does.
class CheckReport {
public:
    static CheckReport success(std::string check, std::size_t examined);
    static CheckReport failure(std::string check, Witness witness, std::size_t examined);
    static CheckReport precondition(std::string check, Witness witness, std::size_t examined = 0);

    const std::string& check() const noexcept { return check_; }
    Verdict verdict() const noexcept { return verdict_; }
    bool passed() const noexcept { return verdict_ == Verdict::pass; }
    const std::optional<Witness>& witness() const noexcept { return witness_; }
    std::size_t examined() const noexcept { return examined_; }

    friend bool operator==(const CheckReport&, const CheckReport&) = default;

private:
    CheckReport(std::string check, Verdict verdict, std::optional<Witness> witness, std::size_t examined)
        : check_(std::move(check)), verdict_(verdict), witness_(std::move(witness)), examined_(examined) {}

    std::string check_;
    Verdict verdict_;
    std::optional<Witness> witness_;
    std::size_t examined_;
};

const char* to_string(Verdict v);

/// One-line record with a fixed field order:
/// `check=<name> verdict=<v> [axis=xJ index=i,j,.. values=a,b,c [note="..."]] examined=N`.
std::string to_record(const CheckReport& report);

}  // namespace cmono
