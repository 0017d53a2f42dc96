// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage, input or resource error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clustermono/cluster.hpp"
#include "clustermono/errors.hpp"
#include "clustermono/harness.hpp"
#include "clustermono/laurent.hpp"
#include "clustermono/seqprops.hpp"

namespace {

using namespace cmono;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
    unsigned workers = 1;
    std::string report_path;
    std::string seed;
    std::vector<std::size_t> word;
    std::size_t limit = 10'000;
    std::string dot_path;
    std::size_t cluster_id = 1;
    std::string exponents;
    std::string laurent_file;
    std::string case_name;
    unsigned max_exponent = 4;
    std::string small_rank;
    std::string reading = "uniform";
};

// A built-in case name or a seed file path.
SeedFile load_seed(const std::string& arg) {
    if (auto c = parse_case(arg)) return SeedFile{initial_matrix(*c), {}};
    return read_seed_file(arg);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

A3Case require_case(const std::string& name) {
    if (auto c = parse_case(name)) return *c;
    throw DomainError("unknown case '" + name + "' (expected inward, straightforward or cyclic)");
}

std::vector<long> parse_exponents(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw ParseError("bad exponent '" + item + "'");
        out.push_back(v);
    }
    return out;
}

int finish(const CampaignReport& r, const Options& opt) {
    if (!opt.report_path.empty()) write_file(opt.report_path, to_text(r));
    std::cout << to_brief_text(r);
    return r.passed() ? kPass : kFail;
}

void print_seed(const Seed& s, const std::vector<std::string>& names) {
    std::cout << "matrix " << to_string(s.matrix()) << "\n";
    for (std::size_t i = 0; i < s.rank(); ++i) std::cout << "x" << i + 1 << "' = " << to_string(s.cluster()[i], names) << "\n";
}

int run_mutate(const Options& opt) {
    const auto file = load_seed(opt.seed);
    Seed s = Seed::initial(file.matrix);
    for (auto k : opt.word) {
        if (k == 0) throw DomainError("mutation directions are 1-based");
        s = mutate_seed(s, k - 1);
    }
    print_seed(s, file.names);
    return kPass;
}

int run_enumerate(const Options& opt) {
    const auto file = load_seed(opt.seed);
    const auto g = enumerate_exchange_graph(Seed::initial(file.matrix), opt.limit);
    const auto vars = list_cluster_variables(g);
    std::cout << "nodes " << g.size() << "\nedges " << g.edges.size() << "\nvariables " << vars.size() << "\n";
    for (std::size_t u = 0; u < g.size(); ++u) {
        std::cout << "cluster " << u + 1 << " (";
        const auto entries = sorted_cluster_strings(g.seeds[u], file.names);
        for (std::size_t i = 0; i < entries.size(); ++i) std::cout << (i ? ", " : "") << entries[i];
        std::cout << ")\n";
    }
    if (!opt.dot_path.empty()) write_file(opt.dot_path, to_dot(g, file.names));
    return kPass;
}

int print_checks(const LaurentPolynomial& p, const std::vector<std::string>& names, UnimodalityReading reading) {
    const auto nf = normalize(p);
    std::cout << "numerator " << to_string(nf.numerator, names) << "\ndvector";
    for (std::size_t i = 0; i < nf.dvector.size(); ++i) std::cout << (i ? "," : " ") << nf.dvector[i];
    std::cout << "\n";
    const auto arr = coefficient_array(nf.numerator);
    bool ok = true;
    for (const auto& r : {is_log_concave(arr), has_internal_zeros(arr), is_unimodal(arr, reading)}) {
        std::cout << to_record(r) << "\n";
        ok = ok && r.passed();
    }
    return ok ? kPass : kFail;
}

int run_expand(const Options& opt) {
    const auto file = load_seed(opt.seed);
    const auto g = enumerate_exchange_graph(Seed::initial(file.matrix), opt.limit);
    if (opt.cluster_id == 0 || opt.cluster_id > g.size())
        throw DomainError("cluster id must be in 1.." + std::to_string(g.size()));
    const auto& seed = g.seeds[opt.cluster_id - 1];
    const auto m = cluster_monomial(seed, parse_exponents(opt.exponents));
    std::cout << "monomial " << to_string(m, file.names) << "\n";
    return print_checks(m, file.names, *parse_reading(opt.reading));
}

int run_check(const Options& opt) {
    std::istringstream in(read_file(opt.laurent_file));
    std::size_t rank = 0;
    std::string expr, line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (expr.empty() && ls >> word && word == "rank") {
            if (!(ls >> rank) || rank == 0) throw ParseError("rank must be a positive integer");
            continue;
        }
        expr += line + " ";
    }
    const auto p = parse_laurent(expr, rank);
    std::cout << "polynomial " << to_string(p) << "\n";
    return print_checks(p, {}, *parse_reading(opt.reading));
}

CampaignConfig config_of(const Options& opt) {
    CampaignConfig cfg;
    cfg.workers = opt.workers;
    cfg.node_limit = opt.limit;
    cfg.max_exponent = opt.max_exponent;
    cfg.reading = *parse_reading(opt.reading);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster monomial expansion and log-concavity checks"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    Options opt;
    app.add_option("--workers", opt.workers, "worker threads for monomial campaigns")->check(CLI::PositiveNumber);
    app.add_option("--report", opt.report_path, "write the full campaign report here");
    app.add_option("--unimodality", opt.reading, "uniform: one peak index per axis; per-fiber: a peak per fiber")
        ->check(CLI::IsMember({"uniform", "per-fiber"}));

    const char* seed_help = "seed file, or one of inward|straightforward|cyclic";

    auto* mutate = app.add_subcommand("mutate", "mutate the initial seed along a word of 1-based directions");
    mutate->add_option("seedfile", opt.seed, seed_help)->required();
    mutate->add_option("k", opt.word, "directions")->required();

    auto* enumerate = app.add_subcommand("enumerate", "enumerate the exchange graph");
    enumerate->add_option("seedfile", opt.seed, seed_help)->required();
    enumerate->add_option("--limit", opt.limit, "node limit")->check(CLI::PositiveNumber);
    enumerate->add_option("--dot", opt.dot_path, "write DOT here");

    auto* expand = app.add_subcommand("expand", "expand and check one cluster monomial");
    expand->add_option("seedfile", opt.seed, seed_help)->required();
    expand->add_option("--cluster", opt.cluster_id, "1-based cluster id as listed by enumerate")->required();
    expand->add_option("--exponents", opt.exponents, "comma-separated exponents")->required();
    expand->add_option("--limit", opt.limit, "node limit")->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "check a Laurent polynomial read from a file");
    check->add_option("laurent-file", opt.laurent_file, "optional `rank N` line, then an expression")->required();

    auto* tables = app.add_subcommand("verify-tables", "reproduce the cluster table of a reduced case");
    tables->add_option("case", opt.case_name, "inward|straightforward|cyclic")->required();

    auto* theorem = app.add_subcommand("verify-theorem", "check every cluster monomial up to a bound");
    theorem->add_option("case", opt.case_name, "inward|straightforward|cyclic")->required();
    theorem->add_option("--max-exponent", opt.max_exponent, "per-variable exponent bound");

    app.add_subcommand("counterexample", "product of two log-concave polynomials that is not log-concave");
    app.add_subcommand("example", "expanded straightforward monomial against its expected form");
    app.add_subcommand("verify-reduction", "match the four A3 orientations to the reduced cases");

    auto* small = app.add_subcommand("verify-small-rank", "rank-1 and rank-2 checks");
    small->add_option("type", opt.small_rank, "A1|A2|A3")->required()->check(CLI::IsMember({"A1", "A2", "A3"}));
    small->add_option("--max-exponent", opt.max_exponent, "per-variable exponent bound");

    auto* scan = app.add_subcommand("scan-conjecture", "monomial scan of a user seed (evidence only)");
    scan->add_option("seedfile", opt.seed, seed_help)->required();
    scan->add_option("--max-exponent", opt.max_exponent, "per-variable exponent bound");
    scan->add_option("--limit", opt.limit, "node limit")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*mutate) return run_mutate(opt);
        if (*enumerate) return run_enumerate(opt);
        if (*expand) return run_expand(opt);
        if (*check) return run_check(opt);
        if (*tables) return finish(verify_tables(require_case(opt.case_name)), opt);
        if (*theorem) return finish(verify_theorem(require_case(opt.case_name), config_of(opt)), opt);
        if (*small) {
            auto cfg = config_of(opt);
            if (small->count("--max-exponent") == 0) cfg.max_exponent = 6;
            return finish(verify_small_rank(opt.small_rank, cfg), opt);
        }
        if (*scan) {
            auto cfg = config_of(opt);
            if (scan->count("--max-exponent") == 0) cfg.max_exponent = 2;
            return finish(scan_conjecture(Seed::initial(load_seed(opt.seed).matrix), cfg), opt);
        }
        if (app.got_subcommand("counterexample")) return finish(reproduce_counterexample(), opt);
        if (app.got_subcommand("example")) return finish(reproduce_example(), opt);
        if (app.got_subcommand("verify-reduction")) return finish(verify_reduction(), opt);
    } catch (const DivisionError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
