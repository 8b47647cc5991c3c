// scac: command-line front end for the conflict-avoiding code library.
//
// Exit status: 0 success, 1 well-formed input but the property is false,
// 2 usage error or malformed input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <scac/io.hpp>
#include <scac/scac.hpp>

namespace {

using scac::io::json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

scac::Code read_code(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return scac::io::parse_code(buf.str());
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

scac::Mode parse_mode(const std::string& s) { return s == "cac" ? scac::Mode::cac : scac::Mode::scac; }

std::vector<double> parse_offsets(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) throw UsageError("bad offset '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::string cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : sep) + p;
    return s;
}

// --- subcommands ---------------------------------------------------------

int cmd_verify(const std::string& mode, const std::string& file) {
    const auto code = read_code(file);
    const auto m = parse_mode(mode);
    const auto r = scac::validate(code, m);
    emit(scac::io::to_json(r));
    return (m == scac::Mode::cac ? r.is_cac : r.is_scac) ? kOk : kFalse;
}

int cmd_double(const std::string& file) {
    const auto code = read_code(file);
    if (!scac::is_cac(code)) {
        std::cerr << "scac double: input is not a CAC\n";
        emit(scac::io::to_json(scac::check_cac(code)));
        return kFalse;
    }
    emit(scac::io::to_json(scac::double_code(code)));
    return kOk;
}

int cmd_bound(std::int64_t L, bool tsv, bool all) {
    if (L < 3) throw UsageError("bound: L must be at least 3");
    auto statements = scac::m_statements(L);
    for (auto& r : scac::ms_statements(L)) statements.push_back(r);
    if (tsv) {
        std::cout << "quantity\tL\tkind\tlower\tupper\tapplicable\tprovenance\tnote\n";
        for (const auto& r : statements) {
            if (!r.applicable && !all) continue;
            const bool has_lo = r.applicable && r.kind != scac::BoundKind::upper;
            const bool has_hi = r.applicable && r.kind != scac::BoundKind::lower;
            std::cout << to_string(r.quantity) << '\t' << L << '\t' << to_string(r.kind) << '\t'
                      << (has_lo ? std::to_string(r.lo) : "-") << '\t' << (has_hi ? std::to_string(r.hi) : "-")
                      << '\t' << (r.applicable ? "yes" : "no") << '\t' << r.provenance << '\t'
                      << (r.note.empty() ? "-" : r.note) << '\n';
        }
        return kOk;
    }
    json list = json::array();
    for (const auto& r : statements)
        if (r.applicable || all) list.push_back(scac::io::to_json(r));
    json out{{"L", L}, {"statements", std::move(list)}};
    out["M"] = scac::io::to_json(scac::m_bracket(L));
    if (L % 2 == 0) out["MS"] = scac::io::to_json(scac::ms_bracket(L));
    emit(out);
    return kOk;
}

int cmd_search(const std::string& mode, int L, int weight, std::uint64_t budget, unsigned threads, bool stats,
               bool equi_only) {
    if (L < 3) throw UsageError("search: L must be at least 3");
    if (weight < 2 || weight > L) throw UsageError("search: need 2 <= weight <= L");
    scac::SearchOptions opts;
    opts.budget = budget;
    opts.threads = std::max(1u, threads);
    opts.equi_only = equi_only;
    const auto out = scac::max_code(L, weight, parse_mode(mode), opts);
    emit(scac::io::to_json(out, stats));
    return kOk;
}

int cmd_equi(int L, bool graph) {
    if (L < 3 || L % 2 == 0) throw UsageError("equi: L must be odd and at least 3");
    const auto g = scac::build_graph(L);
    if (graph) {
        std::cout << scac::graph_tsv(g);
        return kOk;
    }
    auto out = scac::io::to_json(scac::m_e_with_witness(L));
    out["cycles"] = g.cycles.size();
    out["tight_exists"] = scac::tight_exists(L);
    const auto l2 = scac::leave2_case(L);
    out["leave2_case"] = l2 ? json(std::string(1, *l2)) : json(nullptr);
    emit(out);
    return kOk;
}

struct SimulateArgs {
    std::string file;
    std::string offsets;
    bool worst_case = false;
    std::optional<std::size_t> victim;
    std::uint64_t sample = 0;
    std::optional<std::uint64_t> seed;
};

int cmd_simulate(const SimulateArgs& a) {
    const auto code = read_code(a.file);
    const int modes = !a.offsets.empty() + a.worst_case + (a.sample > 0);
    if (modes != 1) throw UsageError("simulate: give exactly one of --offsets, --worst-case, --sample");
    if (a.victim && *a.victim >= code.size()) throw UsageError("simulate: victim index out of range");

    if (!a.offsets.empty()) {
        const auto offs = parse_offsets(a.offsets);
        if (offs.size() != code.size())
            throw UsageError("simulate: expected " + std::to_string(code.size()) + " offsets");
        scac::OffsetAssignment assignment;
        try {
            assignment = scac::OffsetAssignment::from_slots(code.length(), offs);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        auto out = scac::io::to_json(scac::simulate(code, assignment));
        out["offsets"] = scac::io::offsets_json(assignment);
        emit(out);
        return kOk;
    }

    if (a.sample > 0 && !a.seed) throw UsageError("simulate: --sample requires --seed");
    std::vector<std::size_t> victims;
    if (a.victim)
        victims.push_back(*a.victim);
    else
        for (std::size_t i = 0; i < code.size(); ++i) victims.push_back(i);
    json list = json::array();
    int sigma = code.weight();
    for (auto v : victims) {
        const auto w = a.worst_case ? scac::worst_case_sigma(code, v) : scac::sampled_sigma(code, v, a.sample, *a.seed);
        sigma = std::min(sigma, w.sigma);
        list.push_back(scac::io::to_json(w));
    }
    emit({{"sigma", sigma}, {"victims", std::move(list)}});
    return kOk;
}

int cmd_catalog(std::int64_t from, std::int64_t to, const std::string& quantity, bool tsv) {
    if (from < 3 || to < from) throw UsageError("catalog: need 3 <= from <= to");
    const bool ms = quantity == "ms";
    if (tsv) std::cout << "L\tlower\tupper\texact\tprovenance\n";
    json rows = json::array();
    for (auto L = from; L <= to; ++L) {
        if (ms && L % 2 != 0) continue;
        const auto b = ms ? scac::ms_bracket(L) : scac::m_bracket(L);
        if (tsv) {
            std::cout << L << '\t' << cell(b.lo) << '\t' << cell(b.hi) << '\t' << (b.exact() ? "yes" : "no") << '\t'
                      << (b.provenance.empty() ? "-" : join(b.provenance, ",")) << '\n';
        } else {
            rows.push_back({{"L", L},
                            {"lower", b.lo ? json(*b.lo) : json(nullptr)},
                            {"upper", b.hi ? json(*b.hi) : json(nullptr)},
                            {"exact", b.exact()},
                            {"provenance", b.provenance}});
        }
    }
    if (!tsv) emit({{"quantity", ms ? "MS" : "M"}, {"rows", std::move(rows)}});
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conflict-avoiding and strongly conflict-avoiding codes"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    const std::vector<std::string> modes{"cac", "scac"};

    std::string verify_mode = "scac", verify_file;
    auto* verify = app.add_subcommand("verify", "check a code given as JSON");
    verify->add_option("--mode", verify_mode, "cac or scac")->check(CLI::IsMember(modes));
    verify->add_option("file", verify_file, "code JSON ('-' for stdin)")->required();

    std::string double_file;
    auto* dbl = app.add_subcommand("double", "map a CAC of length L to an SCAC of length 2L");
    dbl->add_option("file", double_file, "code JSON ('-' for stdin)")->required();

    std::int64_t bound_L = 0;
    bool bound_tsv = false, bound_all = false;
    auto* bound = app.add_subcommand("bound", "closed-form statements about M(L,3) and M_S(L,3)");
    bound->add_option("L", bound_L)->required();
    bound->add_flag("--tsv", bound_tsv, "tab-separated output");
    bound->add_flag("--all", bound_all, "include statements whose hypotheses fail");

    std::string search_mode = "scac";
    int search_L = 0, search_w = 3;
    std::uint64_t search_budget = scac::SearchOptions{}.budget;
    unsigned search_threads = 1;
    bool search_stats = false, search_equi = false;
    auto* search = app.add_subcommand("search", "exact maximum code size by branch and bound");
    search->add_option("--mode", search_mode, "cac or scac")->check(CLI::IsMember(modes));
    search->add_option("L", search_L)->required();
    search->add_option("--weight,-w", search_w, "codeword weight");
    search->add_option("--budget", search_budget, "node limit");
    search->add_option("--threads", search_threads, "worker threads")->envname("SCAC_THREADS");
    search->add_flag("--stats", search_stats, "report nodes explored");
    search->add_flag("--equi-only", search_equi, "restrict to equi-difference codewords");

    int equi_L = 0;
    bool equi_graph = false;
    auto* equi = app.add_subcommand("equi", "cycle graph, M^e(L,3) and an equi-difference witness (odd L)");
    equi->add_option("L", equi_L)->required();
    equi->add_flag("--graph", equi_graph, "dump the cycles as TSV");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "collision channel without feedback");
    simulate->add_option("file", sim.file, "code JSON ('-' for stdin)")->required();
    simulate->add_option("--offsets", sim.offsets, "comma-separated offsets in slots, multiples of 0.5");
    simulate->add_flag("--worst-case", sim.worst_case, "exact minimum success count per victim");
    simulate->add_option("--victim", sim.victim, "victim index (default: every user)");
    simulate->add_option("--sample", sim.sample, "random offset assignments per victim");
    simulate->add_option("--seed", sim.seed, "seed for --sample");

    std::int64_t cat_from = 0, cat_to = 0;
    std::string cat_quantity = "ms";
    bool cat_tsv = false;
    auto* catalog = app.add_subcommand("catalog", "sharpest known interval for a range of lengths");
    catalog->add_option("--from", cat_from)->required();
    catalog->add_option("--to", cat_to)->required();
    catalog->add_option("--quantity", cat_quantity, "ms or m")->check(CLI::IsMember({"ms", "m"}));
    catalog->add_flag("--tsv", cat_tsv, "tab-separated output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) return cmd_verify(verify_mode, verify_file);
        if (*dbl) return cmd_double(double_file);
        if (*bound) return cmd_bound(bound_L, bound_tsv, bound_all);
        if (*search)
            return cmd_search(search_mode, search_L, search_w, search_budget, search_threads, search_stats,
                              search_equi);
        if (*equi) return cmd_equi(equi_L, equi_graph);
        if (*simulate) return cmd_simulate(sim);
        if (*catalog) return cmd_catalog(cat_from, cat_to, cat_quantity, cat_tsv);
    } catch (const UsageError& e) {
        std::cerr << "scac: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
