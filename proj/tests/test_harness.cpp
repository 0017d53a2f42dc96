#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "clustermono/errors.hpp"
#include "clustermono/harness.hpp"
#include "oracles.hpp"

using namespace cmono;

namespace {

LaurentPolynomial P(const std::string& text) { return parse_laurent(text, 3); }

const CampaignRecord* find(const CampaignReport& r, const std::string& subject_prefix, const std::string& check = "") {
    for (const auto& rec : r.records)
        if (rec.subject.rfind(subject_prefix, 0) == 0 && (check.empty() || rec.report.check() == check)) return &rec;
    return nullptr;
}

}  // namespace

TEST_CASE("case names and initial matrices") {
    CHECK(parse_case("inward") == A3Case::inward);
    CHECK(parse_case("cyclic") == A3Case::cyclic);
    CHECK_FALSE(parse_case("linear").has_value());
    CHECK(std::string(to_string(A3Case::straightforward)) == "straightforward");
    CHECK(initial_matrix(A3Case::cyclic) ==
          ExchangeMatrix(std::vector<std::vector<int>>{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
    CHECK(parse_reading("per-fiber") == UnimodalityReading::per_fiber);
    CHECK_FALSE(parse_reading("loose").has_value());
}

TEST_CASE("reference tables: fourteen distinct rows, nine variables each") {
    for (auto c : {A3Case::inward, A3Case::straightforward, A3Case::cyclic}) {
        const auto& rows = table_rows(c);
        REQUIRE(rows.size() == 14);
        std::set<std::string> vars, keys;
        for (const auto& row : rows) {
            REQUIRE(row.size() == 3);
            std::vector<std::string> entries;
            for (const auto& e : row) {
                entries.push_back(to_string(P(e)));
                vars.insert(entries.back());
            }
            std::sort(entries.begin(), entries.end());
            keys.insert(entries[0] + "|" + entries[1] + "|" + entries[2]);
        }
        CHECK(vars.size() == 9);
        CHECK(keys.size() == 14);
    }
}

TEST_CASE("table verification") {
    for (auto c : {A3Case::inward, A3Case::straightforward, A3Case::cyclic}) {
        const auto r = verify_tables(c);
        CHECK(r.passed());
        CHECK(r.unexpected() == 0);
        CHECK(r.records.size() >= 14);
    }
}

TEST_CASE("straightforward row 13 numerator") {
    const auto& row = table_rows(A3Case::straightforward)[12];
    const auto m = P(row[0]) * P(row[1]) * P(row[2]);
    const auto nf = normalize(m);
    CHECK(nf.dvector == std::vector<int>{1, 3, 2});
    CHECK(nf.numerator ==
          P("x1^3*(1 + 2*x2 + x2^2) + x1^2*(3 + 5*x2 + 2*x2^2)*x3 + x1*(3 + 4*x2 + x2^2)*x3^2 + (1 + x2)*x3^3"));
    const auto arr = coefficient_array(nf.numerator);
    CHECK(oracle::log_concave(arr));
    CHECK(oracle::no_internal_zeros(arr));
    CHECK(oracle::unimodal_uniform(arr));
    const auto r = reproduce_example();
    CHECK(r.passed());
}

TEST_CASE("counterexample") {
    const auto r = reproduce_counterexample();
    CHECK(r.passed());
    const CampaignRecord* product = nullptr;
    for (const auto& rec : r.records)
        if (rec.expected == Verdict::fail) product = &rec;
    REQUIRE(product != nullptr);
    REQUIRE(product->report.witness().has_value());
    const auto& w = *product->report.witness();
    CHECK(w.axis == 1u);
    CHECK(w.index == std::vector<long>{3, 3});
    CHECK(w.values == std::vector<mpz_class>{23, 8, 4});
    CHECK(mpz_class(8 * 8) < mpz_class(23 * 4));
}

TEST_CASE("reduction of the four orientations") {
    CHECK(a3_orientations().size() == 4);
    const auto r = verify_reduction();
    CHECK(r.passed());
    const Permutation sigma({1, 2, 0});
    CHECK(rename_variables(P("x1*x2^-1 + x3"), sigma) == P("x2*x3^-1 + x1"));
}

TEST_CASE("small ranks") {
    CampaignConfig cfg;
    cfg.max_exponent = 6;
    CHECK(verify_small_rank("A1", cfg).passed());
    CHECK(verify_small_rank("A3", cfg).passed());
    // A2 monomials fail the uniform-peak reading but pass per fiber.
    const auto uniform = verify_small_rank("A2", cfg);
    CHECK_FALSE(uniform.passed());
    const auto* witness = find(uniform, "cluster=4 exponents=0,4", "unimodal");
    REQUIRE(witness != nullptr);
    CHECK(witness->report.verdict() == Verdict::fail);
    cfg.reading = UnimodalityReading::per_fiber;
    CHECK(verify_small_rank("A2", cfg).passed());
    CHECK_THROWS_AS(verify_small_rank("B2", cfg), Error);
}

TEST_CASE("monomial campaign at small bound") {
    CampaignConfig cfg;
    cfg.max_exponent = 1;
    const auto r = verify_theorem(A3Case::straightforward, cfg);
    CHECK(r.passed());
    CHECK(r.records.size() == 14 * 8 * 3);
    const auto* zero = find(r, "cluster=1 exponents=0,0,0");
    REQUIRE(zero != nullptr);
    CHECK(zero->report.passed());
}

TEST_CASE("reports are identical across worker counts") {
    CampaignConfig one;
    one.max_exponent = 2;
    CampaignConfig many = one;
    many.workers = 4;
    const auto a = verify_theorem(A3Case::inward, one);
    const auto b = verify_theorem(A3Case::inward, many);
    CHECK(to_text(a) == to_text(b));
    CHECK(to_text(a) == to_text(verify_theorem(A3Case::inward, one)));
    const auto seed = Seed::initial(ExchangeMatrix(std::vector<std::vector<int>>{{0, 1}, {-1, 0}}));
    CHECK(to_text(scan_conjecture(seed, one)) == to_text(scan_conjecture(seed, many)));
}

TEST_CASE("report text form") {
    const auto r = reproduce_counterexample();
    const auto text = to_text(r);
    CHECK(text.find("summary records=") != std::string::npos);
    CHECK(text.find("result PASS") != std::string::npos);
    CHECK(text.find("expect=fail") != std::string::npos);
    CHECK(text.find("values=23,8,4") != std::string::npos);
    CHECK(to_brief_text(r).find("record ") == std::string::npos);
}

TEST_CASE("conjecture scan labels itself as evidence") {
    CampaignConfig cfg;
    cfg.max_exponent = 1;
    const auto r = scan_conjecture(Seed::initial(initial_matrix(A3Case::cyclic)), cfg);
    bool labeled = false;
    for (const auto& line : r.info) labeled = labeled || line.find("evidence") != std::string::npos;
    CHECK(labeled);
    CHECK(r.passed());
    cfg.node_limit = 3;
    CHECK_THROWS_AS(scan_conjecture(Seed::initial(initial_matrix(A3Case::cyclic)), cfg), ResourceError);
}
