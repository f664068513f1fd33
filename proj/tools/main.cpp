#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmfvs/approx.hpp"
#include "mmfvs/exact.hpp"
#include "mmfvs/gen.hpp"
#include "mmfvs/graph.hpp"
#include "mmfvs/io.hpp"
#include "mmfvs/reduce.hpp"
#include "mmfvs/scale.hpp"
#include "mmfvs/solution.hpp"

using json = nlohmann::ordered_json;
using namespace mmfvs;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MMFVS_SEED"))
        return std::stoull(env);
    return 0;
}

json external_ids(const VertexSet& s) {
    json arr = json::array();
    for (VertexId x : s)
        arr.push_back(x + 1);
    return arr;
}

json base_report(const std::string& algorithm, const Graph& g) {
    json r;
    r["schema"] = 1;
    r["algorithm"] = algorithm;
    r["n"] = g.num_vertices();
    r["m"] = g.num_edges();
    r["solution_size"] = nullptr;
    r["solution"] = nullptr;
    r["guarantee"] = nullptr;
    r["branch"] = nullptr;
    r["elapsed_ms"] = 0.0;
    r["certificate_ok"] = true;
    r["optimal"] = nullptr;
    return r;
}

void put_solution(json& r, const Graph& g, const FvsSolution& sol) {
    r["solution_size"] = sol.size();
    r["solution"] = external_ids(sol.fvs);
    bool ok = sol.verify(g);
    r["certificate_ok"] = ok;
    if (!ok)
        throw std::runtime_error("solution failed self-verification");
}

json run_reduce(const Graph& g, const std::string& out_path) {
    Timer t;
    ReductionTrace trace = reduce(g);
    json r = base_report("reduce", g);
    r["reduced_n"] = trace.reduced.num_vertices();
    r["reduced_m"] = trace.reduced.num_edges();
    r["steps"] = trace.steps.size();
    r["elapsed_ms"] = t.ms();
    if (!out_path.empty())
        write_file(out_path, serialize_graph(trace.reduced));
    return r;
}

json run_approx(const Graph& g, const std::string& algo) {
    Timer t;
    ApproxReport rep = algo == "delta" ? approx_delta(g) : approx_poly(g);
    json r = base_report("approx-" + algo, g);
    put_solution(r, g, rep.solution);
    r["guarantee"] = rep.guarantee;
    r["branch"] = branch_name(rep.branch);
    r["reduced_n"] = rep.reduced_n;
    r["elapsed_ms"] = t.ms();
    return r;
}

json run_exact(const Graph& g, std::uint64_t budget) {
    Timer t;
    ExactResult res = exact_mmfvs(g, budget);
    json r = base_report("exact", g);
    put_solution(r, g, res.solution);
    r["optimal"] = res.optimal;
    r["explored_nodes"] = res.explored_nodes;
    r["elapsed_ms"] = t.ms();
    return r;
}

json run_smallfvs(const Graph& g, const VertexSet& fvs) {
    Timer t;
    SmallFvsResult res = smallfvs(g, fvs, std::max<int>(1, static_cast<int>(fvs.size())));
    json r = base_report("smallfvs", g);
    put_solution(r, g, res.solution);
    r["explored_states"] = res.explored_states;
    r["elapsed_ms"] = t.ms();
    return r;
}

json run_subexp(const Graph& g, double ratio) {
    Timer t;
    SubexpResult res = subexp(g, ratio);
    json r = base_report("subexp", g);
    put_solution(r, g, res.solution);
    r["branch"] = res.early_return ? "early-return" : "pairs";
    json pairs = json::array();
    for (const auto& p : res.pairs)
        pairs.push_back({{"i", p.i}, {"j", p.j}, {"solution_size", p.solution_size}});
    r["pairs"] = pairs;
    r["elapsed_ms"] = t.ms();
    return r;
}

json run_gen(const std::string& family, const std::vector<std::string>& params,
             std::uint64_t seed, const std::string& out_path) {
    Timer t;
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + family + "' expects " +
                                        std::to_string(k) + " parameter(s)");
    };
    Graph g;
    json extra;
    if (family == "tight-forest") {
        need(1);
        auto [graph, s] = gen_tight_forest(std::stoi(params[0]));
        g = std::move(graph);
        extra["designated_fvs"] = external_ids(s);
    } else if (family == "tight-extremal") {
        need(1);
        g = gen_tight_extremal(std::stoi(params[0]));
    } else if (family == "mis-gadget") {
        need(1);
        g = gen_mis_gadget(parse_graph(read_file(params[0]))).product;
    } else if (family == "nph-gadget") {
        need(1);
        g = gen_nph_gadget(parse_graph(read_file(params[0]))).product;
    } else if (family == "gnp") {
        need(2);
        g = gen_random_gnp(std::stoi(params[0]), std::stod(params[1]), seed);
    } else if (family == "gnm") {
        need(2);
        g = gen_random_gnm(std::stoi(params[0]), std::stoi(params[1]), seed);
    } else if (family == "planted") {
        need(2);
        auto [graph, s] = gen_random_with_small_fvs(std::stoi(params[0]),
                                                    std::stoi(params[1]), seed);
        g = std::move(graph);
        extra["planted_fvs"] = external_ids(s);
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }

    std::ostringstream prov;
    prov << "gen " << family;
    for (const std::string& p : params)
        prov << " " << p;
    prov << " seed=" << seed;
    std::string text = serialize_graph(g, {prov.str()});
    if (!out_path.empty())
        write_file(out_path, text);

    json r = base_report("gen-" + family, g);
    for (auto& [k, v] : extra.items())
        r[k] = v;
    if (out_path.empty())
        r["instance"] = text;
    else
        r["out"] = out_path;
    r["seed"] = seed;
    r["elapsed_ms"] = t.ms();
    return r;
}

int run_verify(const Graph& g, const VertexSet& s) {
    MinimalityVerdict v = is_minimal_fvs(g, s);
    json r;
    r["schema"] = 1;
    r["algorithm"] = "verify";
    r["n"] = g.num_vertices();
    r["m"] = g.num_edges();
    r["solution_size"] = s.size();
    r["solution"] = external_ids(s);
    switch (v.status) {
    case MinimalityVerdict::Status::Minimal: {
        r["verdict"] = "minimal-fvs";
        FvsSolution sol = certify(g, s);
        json certs = json::object();
        for (const auto& [u, cyc] : sol.certificates) {
            json c = json::array();
            for (VertexId x : cyc.vertices)
                c.push_back(x + 1);
            certs[std::to_string(u + 1)] = c;
        }
        r["certificates"] = certs;
        std::cout << r.dump(2) << "\n";
        return 0;
    }
    case MinimalityVerdict::Status::NotFvs: {
        r["verdict"] = "not-fvs";
        json c = json::array();
        for (VertexId x : v.cycle->vertices)
            c.push_back(x + 1);
        r["cycle"] = c;
        std::cout << r.dump(2) << "\n";
        return 2;
    }
    case MinimalityVerdict::Status::Redundant:
        r["verdict"] = "redundant";
        r["redundant_vertex"] = *v.redundant + 1;
        std::cout << r.dump(2) << "\n";
        return 3;
    }
    return 1;
}

json run_bench(const std::string& suite_path, const std::string& csv_path) {
    std::istringstream in(read_file(suite_path));
    std::string line;
    json records = json::array();
    int lineno = 0;
    std::size_t total_size = 0, total_n = 0;
    double total_ms = 0.0;
    bool all_certified = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t)
            tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#')
            continue;
        Graph g;
        std::string name;
        if (tok[0] == "file") {
            if (tok.size() != 2)
                throw std::invalid_argument("suite line " + std::to_string(lineno) +
                                            ": expected 'file <path>'");
            g = parse_graph(read_file(tok[1]));
            name = tok[1];
        } else {
            // `family params... seed`
            if (tok.size() < 2)
                throw std::invalid_argument("suite line " + std::to_string(lineno) +
                                            ": expected 'family params seed'");
            std::uint64_t seed = std::stoull(tok.back());
            std::vector<std::string> params(tok.begin() + 1, tok.end() - 1);
            json gen_rep = run_gen(tok[0], params, seed, "");
            g = parse_graph(gen_rep["instance"].get<std::string>());
            name = line;
        }
        json rec = run_approx(g, "poly");
        rec["instance"] = name;
        total_size += rec["solution_size"].get<std::size_t>();
        total_n += g.num_vertices();
        total_ms += rec["elapsed_ms"].get<double>();
        all_certified = all_certified && rec["certificate_ok"].get<bool>();
        records.push_back(std::move(rec));
    }
    json aggregate;
    aggregate["instances"] = records.size();
    aggregate["total_n"] = total_n;
    aggregate["total_solution_size"] = total_size;
    aggregate["total_elapsed_ms"] = total_ms;
    aggregate["all_certified"] = all_certified;
    json out;
    out["schema"] = 1;
    out["algorithm"] = "bench";
    out["records"] = records;
    out["aggregate"] = aggregate;
    if (!csv_path.empty()) {
        std::ostringstream csv;
        csv << "instances,total_n,total_solution_size,total_elapsed_ms,all_certified\n"
            << records.size() << "," << total_n << "," << total_size << ","
            << total_ms << "," << (all_certified ? "true" : "false") << "\n";
        write_file(csv_path, csv.str());
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum minimal feedback vertex set toolkit"};
    app.require_subcommand(1);

    std::string graph_path, fvs_path, out_path, algo = "poly";
    std::string family, suite_path, csv_path;
    std::vector<std::string> params;
    std::uint64_t budget = kDefaultExactBudget;
    std::uint64_t seed = default_seed();
    double ratio = 2.0;

    auto* c_reduce = app.add_subcommand("reduce", "apply the safe reduction rules");
    c_reduce->add_option("graph", graph_path)->required();
    c_reduce->add_option("--out", out_path, "write the reduced instance here");

    auto* c_approx = app.add_subcommand("approx", "approximation algorithms");
    c_approx->add_option("graph", graph_path)->required();
    c_approx->add_option("--algo", algo)->check(CLI::IsMember({"delta", "poly"}));

    auto* c_exact = app.add_subcommand("exact", "exact search");
    c_exact->add_option("graph", graph_path)->required();
    c_exact->add_option("--budget", budget, "node budget");

    auto* c_small = app.add_subcommand("smallfvs", "3-approximation given an fvs");
    c_small->add_option("graph", graph_path)->required();
    c_small->add_option("--fvs", fvs_path, "fvs file, one id per line")->required();

    auto* c_subexp = app.add_subcommand("subexp", "ratio trade-off driver");
    c_subexp->add_option("graph", graph_path)->required();
    c_subexp->add_option("--ratio", ratio)->required();

    auto* c_gen = app.add_subcommand("gen", "instance generators");
    c_gen->add_option("family", family,
                      "tight-forest | tight-extremal | mis-gadget | nph-gadget | "
                      "gnp | gnm | planted")
        ->required();
    c_gen->add_option("params", params, "family parameters");
    c_gen->add_option("--seed", seed);
    c_gen->add_option("--out", out_path, "write the instance here");

    auto* c_verify = app.add_subcommand("verify", "check a solution file");
    c_verify->add_option("graph", graph_path)->required();
    c_verify->add_option("solution", fvs_path)->required();

    auto* c_bench = app.add_subcommand("bench", "run a benchmark suite");
    c_bench->add_option("--suite", suite_path)->required();
    c_bench->add_option("--csv", csv_path, "flattened aggregate row");

    CLI11_PARSE(app, argc, argv);

    try {
        json report;
        if (c_reduce->parsed()) {
            report = run_reduce(parse_graph(read_file(graph_path)), out_path);
        } else if (c_approx->parsed()) {
            report = run_approx(parse_graph(read_file(graph_path)), algo);
        } else if (c_exact->parsed()) {
            report = run_exact(parse_graph(read_file(graph_path)), budget);
        } else if (c_small->parsed()) {
            Graph g = parse_graph(read_file(graph_path));
            report = run_smallfvs(g, parse_solution(read_file(fvs_path), g));
        } else if (c_subexp->parsed()) {
            report = run_subexp(parse_graph(read_file(graph_path)), ratio);
        } else if (c_gen->parsed()) {
            report = run_gen(family, params, seed, out_path);
        } else if (c_verify->parsed()) {
            Graph g = parse_graph(read_file(graph_path));
            return run_verify(g, parse_solution(read_file(fvs_path), g));
        } else if (c_bench->parsed()) {
            report = run_bench(suite_path, csv_path);
        }
        std::cout << report.dump(2) << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
