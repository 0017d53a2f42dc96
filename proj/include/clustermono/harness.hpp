#pragma once

// Verification campaigns over the three reduced A3 orientations and small
// ranks. Each campaign returns a report whose text form is deterministic for
// a fixed configuration, independent of the worker count.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clustermono/cluster.hpp"
#include "clustermono/report.hpp"
#include "clustermono/seqprops.hpp"

namespace cmono {

enum class A3Case { inward, straightforward, cyclic };

std::optional<A3Case> parse_case(std::string_view name);
const char* to_string(A3Case c);
ExchangeMatrix initial_matrix(A3Case c);

/// Published clusters of a case, one row of three expression strings each.
const std::vector<std::vector<std::string>>& table_rows(A3Case c);

struct CampaignConfig {
    unsigned max_exponent = 4;
    std::size_t node_limit = 10'000;
    unsigned workers = 1;
    UnimodalityReading reading = UnimodalityReading::uniform_peak;
};

/// "uniform" or "per-fiber".
const char* to_string(UnimodalityReading r);
std::optional<UnimodalityReading> parse_reading(std::string_view name);

struct CampaignRecord {
    std::string subject;
    CheckReport report;
    Verdict expected = Verdict::pass;

    bool as_expected() const noexcept { return report.verdict() == expected; }
};

struct CampaignReport {
    std::string campaign;
    std::vector<std::string> info;
    std::vector<CampaignRecord> records;
    /// Wall-clock time; never part of the text form.
    double seconds = 0;

    std::size_t unexpected() const;
    bool passed() const { return unexpected() == 0; }
};

/// Header, info lines, one line per record, summary block.
std::string to_text(const CampaignReport& r);
/// Info lines, records that did not meet their expectation, summary block.
std::string to_brief_text(const CampaignReport& r);

/// Enumerates the case, matches every cluster against its table row as a
/// multiset of canonical strings, and checks node count, regularity and the
/// number of distinct cluster variables.
CampaignReport verify_tables(A3Case c);

/// Log-concavity, internal zeros and uniform-peak unimodality of the
/// numerator of every cluster monomial with exponents in [0, max_exponent].
CampaignReport verify_monomials(const Seed& initial, const std::string& label, const CampaignConfig& cfg);
CampaignReport verify_theorem(A3Case c, const CampaignConfig& cfg);

/// The product of two log-concave Laurent polynomials that is not
/// log-concave; the product record is expected to fail.
CampaignReport reproduce_counterexample();

/// The (1,1,1) monomial of one straightforward cluster compared with its
/// reference expansion, checked under both unimodality readings.
CampaignReport reproduce_example();

/// "A1", "A2": all monomials up to max_exponent; "A3": the nine variables of
/// each reduced case.
CampaignReport verify_small_rank(std::string_view type, const CampaignConfig& cfg);

/// Monomial scan of a user seed. The report is evidence, not a proof.
CampaignReport scan_conjecture(const Seed& initial, const CampaignConfig& cfg);

/// Each of the four A3 orientations up to relabeling is matched to a reduced
/// case by a relabeling and a sign, and the match is confirmed by comparing
/// the enumerated clusters after renaming the variables.
CampaignReport verify_reduction();

/// The four A3 orientations up to relabeling: inward, outward, linear, cyclic.
std::vector<std::pair<std::string, ExchangeMatrix>> a3_orientations();

/// Substitutes x_{sigma(i)} for every x_i.
LaurentPolynomial rename_variables(const LaurentPolynomial& p, const Permutation& sigma);

}  // namespace cmono
