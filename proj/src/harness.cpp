#include "clustermono/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "clustermono/errors.hpp"
#include "clustermono/seqprops.hpp"

namespace cmono {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// fn(i) for i in [0, count) on up to `workers` threads. Results must be
// written to per-index slots; the first exception is rethrown after join.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::string join_longs(std::span<const long> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string cluster_label(const Seed& s) {
    std::string out;
    for (const auto& e : sorted_cluster_strings(s)) out += (out.empty() ? "" : ", ") + e;
    return "(" + out + ")";
}

CheckReport count_check(const std::string& name, std::size_t found, std::size_t expected) {
    if (found == expected) return CheckReport::success(name, 1);
    return CheckReport::failure(
        name, Witness{{}, {}, {mpz_class(static_cast<unsigned long>(found)), mpz_class(static_cast<unsigned long>(expected))},
                      "found vs expected"},
        1);
}

std::vector<CheckReport> property_checks(const LaurentPolynomial& numerator, UnimodalityReading reading) {
    const auto arr = coefficient_array(numerator);
    return {is_log_concave(arr), has_internal_zeros(arr), is_unimodal(arr, reading)};
}

void add_variable_checks(const ExchangeGraph& g, const std::string& label, UnimodalityReading reading,
                         CampaignReport& out) {
    for (const auto& v : list_cluster_variables(g)) {
        const auto nf = normalize(v);
        for (auto& r : property_checks(nf.numerator, reading))
            out.records.push_back({label + " variable=" + to_string(v), std::move(r)});
    }
}

std::vector<std::vector<long>> exponent_grid(std::size_t n, unsigned max_exponent) {
    std::vector<std::vector<long>> out;
    std::vector<long> e(n, 0);
    for (;;) {
        out.push_back(e);
        std::size_t i = n;
        while (i > 0 && e[i - 1] == static_cast<long>(max_exponent)) e[--i] = 0;
        if (i == 0) break;
        ++e[i - 1];
    }
    return out;
}

std::set<std::vector<std::string>> cluster_set(const ExchangeGraph& g, const Permutation* rename) {
    std::set<std::vector<std::string>> out;
    for (const auto& s : g.seeds) {
        std::vector<std::string> entries;
        for (const auto& p : s.cluster()) entries.push_back(to_string(rename ? rename_variables(p, *rename) : p));
        std::sort(entries.begin(), entries.end());
        out.insert(std::move(entries));
    }
    return out;
}

const A3Case kCases[] = {A3Case::inward, A3Case::straightforward, A3Case::cyclic};

}  // namespace

// ---------------------------------------------------------------------------

std::optional<A3Case> parse_case(std::string_view name) {
    for (auto c : kCases)
        if (name == to_string(c)) return c;
    return std::nullopt;
}

const char* to_string(UnimodalityReading r) {
    return r == UnimodalityReading::uniform_peak ? "uniform" : "per-fiber";
}

std::optional<UnimodalityReading> parse_reading(std::string_view name) {
    if (name == "uniform") return UnimodalityReading::uniform_peak;
    if (name == "per-fiber") return UnimodalityReading::per_fiber;
    return std::nullopt;
}

const char* to_string(A3Case c) {
    switch (c) {
        case A3Case::inward: return "inward";
        case A3Case::straightforward: return "straightforward";
        case A3Case::cyclic: return "cyclic";
    }
    return "?";
}

ExchangeMatrix initial_matrix(A3Case c) {
    // An arrow i -> j is b_ij = 1, b_ji = -1.
    switch (c) {
        case A3Case::inward: return ExchangeMatrix({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}});
        case A3Case::straightforward: return ExchangeMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
        case A3Case::cyclic: return ExchangeMatrix({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
    }
    throw DomainError("unknown case");
}

std::vector<std::pair<std::string, ExchangeMatrix>> a3_orientations() {
    const auto inward = initial_matrix(A3Case::inward);
    return {{"inward", inward},
            {"outward", inward.negated()},
            {"linear", initial_matrix(A3Case::straightforward)},
            {"cyclic", initial_matrix(A3Case::cyclic)}};
}

LaurentPolynomial rename_variables(const LaurentPolynomial& p, const Permutation& sigma) {
    const std::size_t n = p.rank();
    if (sigma.degree() != n) throw StructuralError("permutation degree differs from polynomial rank");
    LaurentPolynomial out(n);
    for (const auto& [e, c] : p.terms()) {
        ExponentVector f(n);
        for (std::size_t i = 0; i < n; ++i) f[sigma(i)] = e[i];
        out.add_term(f, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports

std::size_t CampaignReport::unexpected() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const CampaignRecord& r) { return !r.as_expected(); }));
}

namespace {

std::string record_line(const CampaignRecord& r) {
    std::string out = "record " + r.subject;
    if (r.expected != Verdict::pass) out += std::string(" expect=") + to_string(r.expected);
    return out + " " + to_record(r.report) + "\n";
}

std::string summary_block(const CampaignReport& r) {
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& rec : r.records) ++counts[static_cast<int>(rec.report.verdict())];
    return "summary records=" + std::to_string(r.records.size()) + " pass=" + std::to_string(counts[0]) +
           " fail=" + std::to_string(counts[1]) + " precondition=" + std::to_string(counts[2]) +
           " unexpected=" + std::to_string(r.unexpected()) + "\nresult " + (r.passed() ? "PASS" : "FAIL") + "\n";
}

}  // namespace

std::string to_text(const CampaignReport& r) {
    std::string out = "campaign " + r.campaign + "\n";
    for (const auto& line : r.info) out += "info " + line + "\n";
    for (const auto& rec : r.records) out += record_line(rec);
    return out + summary_block(r);
}

std::string to_brief_text(const CampaignReport& r) {
    std::string out = "campaign " + r.campaign + "\n";
    for (const auto& line : r.info) out += "info " + line + "\n";
    for (const auto& rec : r.records)
        if (!rec.as_expected()) out += record_line(rec);
    return out + summary_block(r);
}

// ---------------------------------------------------------------------------
// Campaigns

CampaignReport verify_tables(A3Case c) {
    const auto start = Clock::now();
    CampaignReport out;
    out.campaign = std::string("verify-tables ") + to_string(c);

    const auto g = enumerate_exchange_graph(Seed::initial(initial_matrix(c)), 1000);
    const auto variables = list_cluster_variables(g);
    out.info.push_back("nodes=" + std::to_string(g.size()) + " edges=" + std::to_string(g.edges.size()) +
                       " variables=" + std::to_string(variables.size()));

    out.records.push_back({"graph", count_check("node_count", g.size(), 14)});
    std::size_t irregular = 0;
    for (std::size_t u = 0; u < g.size(); ++u) {
        std::set<std::size_t> distinct(g.neighbors[u].begin(), g.neighbors[u].end());
        if (distinct.size() != 3 || distinct.count(u)) ++irregular;
    }
    out.records.push_back({"graph", count_check("irregular_nodes", irregular, 0)});

    std::map<std::vector<std::string>, std::size_t> by_cluster;
    for (std::size_t u = 0; u < g.size(); ++u) by_cluster.emplace(sorted_cluster_strings(g.seeds[u]), u);

    const auto& rows = table_rows(c);
    std::vector<bool> listed(g.size(), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::string> entries;
        for (const auto& text : rows[i]) entries.push_back(to_string(parse_laurent(text, 3)));
        std::sort(entries.begin(), entries.end());
        const std::string subject = "row=" + std::to_string(i + 1);
        auto it = by_cluster.find(entries);
        if (it == by_cluster.end()) {
            std::string want;
            for (const auto& e : entries) want += (want.empty() ? "" : ", ") + e;
            out.records.push_back(
                {subject, CheckReport::failure("table_row", Witness{{}, {}, {}, "no enumerated cluster (" + want + ")"}, 1)});
            continue;
        }
        listed[it->second] = true;
        out.info.push_back(subject + " node=" + std::to_string(it->second + 1) + " " + cluster_label(g.seeds[it->second]));
        out.records.push_back({subject, CheckReport::success("table_row", 1)});
    }
    for (std::size_t u = 0; u < g.size(); ++u)
        if (!listed[u])
            out.records.push_back({"node=" + std::to_string(u + 1),
                                   CheckReport::failure("listed", Witness{{}, {}, {}, cluster_label(g.seeds[u])}, 1)});

    out.records.push_back({"graph", count_check("variable_count", variables.size(), 9)});
    out.seconds = elapsed(start);
    return out;
}

CampaignReport verify_monomials(const Seed& initial, const std::string& label, const CampaignConfig& cfg) {
    const auto start = Clock::now();
    CampaignReport out;
    out.campaign = label;
    const auto g = enumerate_exchange_graph(initial, cfg.node_limit);
    const auto grid = exponent_grid(initial.rank(), cfg.max_exponent);
    out.info.push_back("nodes=" + std::to_string(g.size()) + " max_exponent=" + std::to_string(cfg.max_exponent) +
                       " monomials=" + std::to_string(g.size() * grid.size()) +
                       " unimodality=" + to_string(cfg.reading));
    for (std::size_t u = 0; u < g.size(); ++u)
        out.info.push_back("cluster=" + std::to_string(u + 1) + " " + cluster_label(g.seeds[u]));

    const std::size_t tasks = g.size() * grid.size();
    std::vector<std::vector<CheckReport>> results(tasks);
    parallel_for(tasks, cfg.workers, [&](std::size_t t) {
        const auto& seed = g.seeds[t / grid.size()];
        const auto& e = grid[t % grid.size()];
        results[t] = property_checks(normalize(cluster_monomial(seed, e)).numerator, cfg.reading);
    });
    for (std::size_t t = 0; t < tasks; ++t) {
        const std::string subject = "cluster=" + std::to_string(t / grid.size() + 1) +
                                    " exponents=" + join_longs(grid[t % grid.size()]);
        for (auto& r : results[t]) out.records.push_back({subject, std::move(r)});
    }
    out.seconds = elapsed(start);
    return out;
}

CampaignReport verify_theorem(A3Case c, const CampaignConfig& cfg) {
    return verify_monomials(Seed::initial(initial_matrix(c)), std::string("verify-theorem ") + to_string(c), cfg);
}

CampaignReport reproduce_counterexample() {
    const auto start = Clock::now();
    CampaignReport out;
    out.campaign = "counterexample";
    const auto f = parse_laurent("(2 + 3*x1 + x1^2 + 3*x2 + 4*x1*x2 + 3*x1^2*x2 + 4*x1*x2^2)/(x1*x2)", 2);
    const auto g = parse_laurent("(5 + 5*x1 + x1^2 + 4*x2 + 4*x1*x2 + x1^2*x2 + x1^2*x2^2)/(x1*x2)", 2);
    const auto product = normalize(f * g).numerator;
    out.info.push_back("f = " + to_string(f));
    out.info.push_back("g = " + to_string(g));
    out.info.push_back("numerator(f*g) = " + to_string(product));

    out.records.push_back({"f", is_log_concave(coefficient_array(normalize(f).numerator))});
    out.records.push_back({"g", is_log_concave(coefficient_array(normalize(g).numerator))});
    auto prod_report = is_log_concave(coefficient_array(product));
    const auto witness = prod_report.witness();
    out.records.push_back({"f*g", prod_report, Verdict::fail});

    const Witness expected{1, {3, 3}, {23, 8, 4}, {}};
    if (witness) {
        const auto& v = witness->values;
        mpz_class square = v[1] * v[1], cross = v[0] * v[2];
        out.info.push_back("witness " + v[1].get_str() + "^2 = " + square.get_str() + " < " + cross.get_str() + " = " +
                           v[0].get_str() + "*" + v[2].get_str());
    }
    out.records.push_back({"f*g", witness && *witness == expected
                                      ? CheckReport::success("witness_matches", 1)
                                      : CheckReport::failure("witness_matches",
                                                             Witness{{}, {}, {}, "expected axis x2 at (3,3): 23, 8, 4"}, 1)});
    out.seconds = elapsed(start);
    return out;
}

CampaignReport reproduce_example() {
    const auto start = Clock::now();
    CampaignReport out;
    out.campaign = "example";
    const auto g = enumerate_exchange_graph(Seed::initial(initial_matrix(A3Case::straightforward)), 1000);
    std::vector<std::string> want;
    for (const auto& text : table_rows(A3Case::straightforward)[12]) want.push_back(to_string(parse_laurent(text, 3)));
    std::sort(want.begin(), want.end());
    const Seed* seed = nullptr;
    for (const auto& s : g.seeds)
        if (sorted_cluster_strings(s) == want) seed = &s;
    if (!seed) {
        out.records.push_back({"row=13", CheckReport::failure("cluster_found", Witness{{}, {}, {}, "not enumerated"}, 1)});
        return out;
    }
    const std::vector<long> ones{1, 1, 1};
    const auto nf = normalize(cluster_monomial(*seed, ones));
    const auto reference = parse_laurent(
        "x1^3*(1+2*x2+x2^2) + x1^2*(3+5*x2+2*x2^2)*x3 + x1*(3+4*x2+x2^2)*x3^2 + (1+x2)*x3^3", 3);
    out.info.push_back("numerator = " + to_string(nf.numerator));
    out.info.push_back("dvector = " + join_longs(std::vector<long>(nf.dvector.begin(), nf.dvector.end())));
    out.records.push_back({"numerator", nf.numerator == reference
                                            ? CheckReport::success("matches_reference", 1)
                                            : CheckReport::failure("matches_reference",
                                                                   Witness{{}, {}, {}, to_string(nf.numerator)}, 1)});
    out.records.push_back({"dvector", nf.dvector == std::vector<int>{1, 3, 2}
                                          ? CheckReport::success("matches_reference", 1)
                                          : CheckReport::failure("matches_reference", Witness{{}, {}, {}, "expected 1,3,2"}, 1)});
    for (auto reading : {UnimodalityReading::uniform_peak, UnimodalityReading::per_fiber})
        for (auto& r : property_checks(nf.numerator, reading)) out.records.push_back({"monomial", std::move(r)});
    out.seconds = elapsed(start);
    return out;
}

CampaignReport verify_small_rank(std::string_view type, const CampaignConfig& cfg) {
    const auto start = Clock::now();
    CampaignReport out;
    if (type == "A1") {
        out.campaign = "verify-small-rank A1";
        out.info.push_back(std::string("unimodality=") + to_string(cfg.reading));
        const auto g = enumerate_exchange_graph(Seed::initial(ExchangeMatrix(std::vector<std::vector<int>>{{0}})), cfg.node_limit);
        out.info.push_back("nodes=" + std::to_string(g.size()));
        add_variable_checks(g, "A1", cfg.reading, out);
    } else if (type == "A2") {
        out = verify_monomials(Seed::initial(ExchangeMatrix({{0, 1}, {-1, 0}})), "verify-small-rank A2", cfg);
    } else if (type == "A3") {
        out.campaign = "verify-small-rank A3";
        out.info.push_back(std::string("unimodality=") + to_string(cfg.reading));
        for (auto c : kCases) {
            const auto g = enumerate_exchange_graph(Seed::initial(initial_matrix(c)), cfg.node_limit);
            add_variable_checks(g, to_string(c), cfg.reading, out);
        }
    } else {
        throw DomainError("unknown small-rank type '" + std::string(type) + "' (expected A1, A2 or A3)");
    }
    out.seconds = elapsed(start);
    return out;
}

CampaignReport scan_conjecture(const Seed& initial, const CampaignConfig& cfg) {
    auto out = verify_monomials(initial, "scan-conjecture rank=" + std::to_string(initial.rank()), cfg);
    out.info.insert(out.info.begin(), "evidence only: a clean scan covers this seed and bound, nothing more");
    return out;
}

CampaignReport verify_reduction() {
    const auto start = Clock::now();
    CampaignReport out;
    out.campaign = "verify-reduction";
    std::map<A3Case, ExchangeGraph> reduced;
    for (auto c : kCases) reduced.emplace(c, enumerate_exchange_graph(Seed::initial(initial_matrix(c)), 1000));
    const auto perms = all_permutations(3);

    std::optional<std::set<std::vector<std::string>>> inward_variables;
    for (const auto& [name, q] : a3_orientations()) {
        const std::string subject = "orientation=" + name;
        std::optional<std::tuple<A3Case, Permutation, int>> match;
        for (auto c : kCases)
            for (int sign : {1, -1})
                for (const auto& sigma : perms)
                    if (!match && apply_permutation(sigma, sign > 0 ? q : q.negated()) == initial_matrix(c))
                        match.emplace(c, sigma, sign);
        if (!match) {
            out.records.push_back({subject, CheckReport::failure("reduction", Witness{{}, {}, {}, "no reduced case"}, 0)});
            continue;
        }
        const auto& [c, sigma, sign] = *match;
        std::string images;
        for (auto v : sigma.images()) images += (images.empty() ? "" : ",") + std::to_string(v + 1);
        out.info.push_back(name + " -> " + to_string(c) + " sigma=" + images + " sign=" + (sign > 0 ? "+" : "-"));

        const auto g = enumerate_exchange_graph(Seed::initial(q), 1000);
        const bool same = cluster_set(g, &sigma) == cluster_set(reduced.at(c), nullptr);
        out.records.push_back({subject, same ? CheckReport::success("reduction", g.size())
                                             : CheckReport::failure("reduction",
                                                                    Witness{{}, {}, {}, "renamed clusters differ"}, g.size())});

        // Outward is the negative of inward: identical clusters without renaming.
        auto plain = cluster_set(g, nullptr);
        if (name == "inward") inward_variables = plain;
        if (name == "outward")
            out.records.push_back({subject, inward_variables && plain == *inward_variables
                                                ? CheckReport::success("same_as_inward", g.size())
                                                : CheckReport::failure("same_as_inward",
                                                                       Witness{{}, {}, {}, "cluster sets differ"}, g.size())});
    }
    out.seconds = elapsed(start);
    return out;
}

}  // namespace cmono
