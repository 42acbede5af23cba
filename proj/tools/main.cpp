#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "specrig/batch.hpp"
#include "specrig/errors.hpp"
#include "specrig/extremal.hpp"
#include "specrig/graph6.hpp"
#include "specrig/harness.hpp"
#include "specrig/matroid_union.hpp"
#include "specrig/numfmt.hpp"
#include "specrig/spectral.hpp"

using namespace specrig;
using nlohmann::json;

namespace {

// exit codes: 0 success, 1 counterexample found, 2 input error, 3 budget exceeded
constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct Options {
    RunConfig cfg;
    std::uint64_t seed = 0;
    std::string output;        // empty = stdout
    std::string format = "json"; // json | text
};

// SPECRIG_CONFIG may point at a JSON file of defaults; flags override it.
void load_config_file(Options& o) {
    const char* path = std::getenv("SPECRIG_CONFIG");
    if (!path || !*path) return;
    std::ifstream in(path);
    if (!in) throw parameter_error(std::string("cannot open config file ") + path);
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw parameter_error(std::string("malformed config file ") + path);
    if (j.contains("tolerance")) o.cfg.tolerance = j["tolerance"].get<double>();
    if (j.contains("margin")) o.cfg.margin = j["margin"].get<double>();
    if (j.contains("seed")) o.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("rejection_cap")) o.cfg.rejection_cap = j["rejection_cap"].get<long>();
    if (j.contains("class_budget")) o.cfg.class_budget = j["class_budget"].get<long>();
    if (j.contains("pair_budget")) o.cfg.pair_budget = j["pair_budget"].get<long>();
    if (j.contains("threads")) o.cfg.threads = j["threads"].get<int>();
    if (j.contains("output")) o.output = j["output"].get<std::string>();
    if (j.contains("format")) o.format = j["format"].get<std::string>();
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw parameter_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string text_from_json(const std::string& line) {
    json j = json::parse(line);
    std::ostringstream out;
    bool first = true;
    for (auto& [key, value] : j.items()) {
        if (!first) out << " ";
        first = false;
        out << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    return out.str();
}

void emit(Output& out, const Options& o, const std::string& json_line) {
    if (o.format == "text")
        out.stream() << text_from_json(json_line) << "\n";
    else
        out.stream() << json_line << "\n";
}

std::vector<int> parse_subset(const std::string& spec, const Graph& g) {
    std::vector<int> ids;
    if (spec == "all") {
        ids.resize(static_cast<size_t>(g.edge_count()));
        for (int i = 0; i < g.edge_count(); ++i) ids[static_cast<size_t>(i)] = i;
        return ids;
    }
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        size_t pos = 0;
        int id = std::stoi(token, &pos);
        if (pos != token.size()) throw parameter_error("bad edge index '" + token + "'");
        if (id < 0 || id >= g.edge_count()) throw parameter_error("edge index out of range");
        ids.push_back(id);
    }
    return ids;
}

int cmd_construct(const Options& o, int n, int delta, int k, long class_index, bool list_all) {
    ExtremalParams p(n, delta, k);
    Output out(o.output);
    if (list_all) {
        for (const Graph& g : enumerate_class(p, false, o.cfg.class_budget))
            out.stream() << to_graph6(g) << "\n";
    } else if (class_index >= 0) {
        out.stream() << to_graph6(class_member(p, class_index)) << "\n";
    } else {
        out.stream() << to_graph6(build_extremal(p)) << "\n";
    }
    return kExitOk;
}

int cmd_spectral(const Options& o, const std::string& path) {
    Output out(o.output);
    for (const Graph& g : read_graph6_file(path)) {
        SpectralResult s = spectral_radius(g, o.cfg.tolerance);
        json j;
        j["graph6"] = to_graph6(g);
        j["n"] = g.n();
        j["m"] = g.edge_count();
        j["lambda1"] = round_sig(s.value);
        j["residual"] = round_sig(s.residual);
        j["iterations"] = s.iterations;
        if (g.n() >= 2) j["mu2"] = round_sig(algebraic_connectivity(g, o.cfg.tolerance).mu2);
        if (g.n() >= 1 && g.min_degree() >= 1) j["hong_bound"] = round_sig(hong_bound(g));
        emit(out, o, j.dump());
    }
    return kExitOk;
}

int cmd_pack(const Options& o, const std::string& path, int k, int ell) {
    Output out(o.output);
    for (const Graph& g : read_graph6_file(path)) {
        PackingCertificate c = pack_rigid_and_trees(g, k, ell);
        emit(out, o, certificate_to_json(c));
    }
    return kExitOk;
}

int cmd_rank(const Options& o, const std::string& path, int k, int ell, const std::string& subset) {
    Output out(o.output);
    for (const Graph& g : read_graph6_file(path)) {
        std::vector<int> ids = parse_subset(subset, g);
        EdgeSubset f = EdgeSubset::of(g, ids);
        int r_rigid = rigid_rank(f);
        int r_circ = circuit_rank(f);
        long outside = g.edge_count() - f.size();
        auto [full_rank, lab] = union_rank(g, k, ell);
        json j;
        j["graph6"] = to_graph6(g);
        j["n"] = g.n();
        j["m"] = g.edge_count();
        j["k"] = k;
        j["ell"] = ell;
        j["subset_size"] = f.size();
        j["r_rigid"] = r_rigid;
        j["r_circuit"] = r_circ;
        j["outside"] = outside;
        j["value"] = static_cast<long>(k) * r_rigid + static_cast<long>(ell) * r_circ + outside;
        j["union_rank"] = full_rank;
        j["target"] = static_cast<long>(k) * (2 * g.n() - 3) + static_cast<long>(ell) * (g.n() - 1);
        emit(out, o, j.dump());
    }
    return kExitOk;
}

int cmd_cdg(const Options& o, const std::string& path, int k) {
    Output out(o.output);
    for (const Graph& g : read_graph6_file(path)) {
        Mu2Report r = check_mu2_conditions(g, k, o.cfg);
        json j = json::parse(mu2_report_to_json(r));
        j["graph6"] = to_graph6(g);
        emit(out, o, j.dump());
    }
    return kExitOk;
}

int cmd_verify(const Options& o, const std::string& path, int k, int delta_flag, int n_flag,
               long trials) {
    Output out(o.output);
    std::vector<VerificationRecord> records;
    if (!path.empty()) {
        for (const Graph& g : read_graph6_file(path)) {
            int delta = delta_flag > 0 ? delta_flag : g.min_degree();
            ExtremalParams p(g.n(), delta, k);
            records.push_back(verify_threshold_packing(g, p, o.cfg));
        }
    } else {
        if (n_flag <= 0 || delta_flag <= 0) throw parameter_error("generator mode needs --n and --delta");
        ExtremalParams p(n_flag, delta_flag, k);
        records = sample_and_verify(p, trials, o.seed, o.cfg);
    }
    bool counterexample = false;
    for (const auto& r : records) {
        emit(out, o, record_to_json(r));
        if (r.verdict == Verdict::counterexample) counterexample = true;
    }
    emit(out, o, records_summary_json(records));
    return counterexample ? kExitCounterexample : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    try {
        load_config_file(o);
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    CLI::App app{"rigidity/tree packing and spectral threshold toolkit"};
    app.require_subcommand(1);
    app.add_option("--tolerance", o.cfg.tolerance, "eigensolver residual tolerance");
    app.add_option("--margin", o.cfg.margin, "spectral comparison margin");
    app.add_option("--seed", o.seed, "seed for randomized subcommands");
    app.add_option("--threads", o.cfg.threads, "worker threads (0 = all)");
    app.add_option("--rejection-cap", o.cfg.rejection_cap, "sampling rejections per trial");
    app.add_option("--class-budget", o.cfg.class_budget, "labeled enumeration cap");
    app.add_option("--pair-budget", o.cfg.pair_budget, "pair-deletion scan cap");
    app.add_option("-o,--output", o.output, "output file (default stdout)");
    app.add_option("--format", o.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    int n = 0, delta = 0, k = 1, ell = 0;
    long class_index = -1, trials = 0;
    bool list_all = false;
    std::string graph_path, subset = "all";

    CLI::App* construct = app.add_subcommand("construct", "emit extremal family members as graph6");
    construct->fallthrough();
    construct->add_option("--n", n, "order")->required();
    construct->add_option("--delta", delta, "minimum degree")->required();
    construct->add_option("--k", k, "packing parameter")->required();
    construct->add_option("--class-index", class_index, "labeled class member to emit");
    construct->add_flag("--list", list_all, "emit the whole labeled class");

    CLI::App* verify = app.add_subcommand("verify", "check the spectral threshold packing implication");
    verify->fallthrough();
    verify->add_option("--graph", graph_path, "graph6 input file");
    verify->add_option("--k", k, "packing parameter")->required();
    verify->add_option("--delta", delta, "required minimum degree (default: measured)");
    verify->add_option("--n", n, "order for generator mode");
    verify->add_option("--trials", trials, "sampled graphs in generator mode");

    CLI::App* pack = app.add_subcommand("pack", "pack k spanning rigid subgraphs and ell spanning trees");
    pack->fallthrough();
    pack->add_option("--graph", graph_path, "graph6 input file")->required();
    pack->add_option("--k", k, "rigid slots")->required();
    pack->add_option("--ell", ell, "tree slots")->required();

    CLI::App* rank = app.add_subcommand("rank", "matroid rank decomposition of an edge subset");
    rank->fallthrough();
    rank->add_option("--graph", graph_path, "graph6 input file")->required();
    rank->add_option("--k", k, "rigid copies")->required();
    rank->add_option("--ell", ell, "circuit copies")->required();
    rank->add_option("--subset", subset, "'all' or comma-separated edge indices");

    CLI::App* spectral = app.add_subcommand("spectral", "spectral radius, mu2 and the degree-based bound");
    spectral->fallthrough();
    spectral->add_option("--graph", graph_path, "graph6 input file")->required();

    CLI::App* cdg = app.add_subcommand("cdg", "algebraic connectivity conditions for rigid packings");
    cdg->fallthrough();
    cdg->add_option("--graph", graph_path, "graph6 input file")->required();
    cdg->add_option("--k", k, "packing parameter")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        o.cfg.validate();
        if (construct->parsed()) return cmd_construct(o, n, delta, k, class_index, list_all);
        if (verify->parsed()) return cmd_verify(o, graph_path, k, delta, n, trials);
        if (pack->parsed()) return cmd_pack(o, graph_path, k, ell);
        if (rank->parsed()) return cmd_rank(o, graph_path, k, ell, subset);
        if (spectral->parsed()) return cmd_spectral(o, graph_path);
        if (cdg->parsed()) return cmd_cdg(o, graph_path, k);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
