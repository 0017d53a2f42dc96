#include "clustermono/report.hpp"

#include "clustermono/errors.hpp"

namespace cmono {

CheckReport CheckReport::success(std::string check, std::size_t examined) {
    return CheckReport(std::move(check), Verdict::pass, std::nullopt, examined);
}

CheckReport CheckReport::failure(std::string check, Witness witness, std::size_t examined) {
    return CheckReport(std::move(check), Verdict::fail, std::move(witness), examined);
}

CheckReport CheckReport::precondition(std::string check, Witness witness, std::size_t examined) {
    return CheckReport(std::move(check), Verdict::precondition_failed, std::move(witness), examined);
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::precondition_failed: return "precondition";
    }
    return "?";
}

namespace {

template <class Seq, class Fn>
std::string join(const Seq& seq, Fn&& fn) {
    std::string out;
    for (const auto& v : seq) {
        if (!out.empty()) out += ',';
        out += fn(v);
    }
    return out;
}

}  // namespace

std::string to_record(const CheckReport& report) {
    std::string out = "check=" + report.check() + " verdict=" + to_string(report.verdict());
    if (const auto& w = report.witness()) {
        if (w->axis) out += " axis=x" + std::to_string(*w->axis + 1);
        if (!w->index.empty()) out += " index=" + join(w->index, [](long v) { return std::to_string(v); });
        if (!w->values.empty()) out += " values=" + join(w->values, [](const mpz_class& v) { return v.get_str(); });
        if (!w->note.empty()) out += " note=\"" + w->note + "\"";
    }
    out += " examined=" + std::to_string(report.examined());
    return out;
}

}  // namespace cmono
