#include "ricci/run.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ricci/curvature.hpp"
#include "ricci/io.hpp"
#include "ricci/matching.hpp"
#include "ricci/spectral.hpp"

namespace ricci::cli {

namespace {

using nlohmann::ordered_json;

Graph load_source(const RunConfig& cfg) {
    if (!cfg.graph_file.empty() && !cfg.generator.empty())
        throw UnsupportedParameter("give either --graph or --generate, not both");
    if (!cfg.graph_file.empty())
        return load_graph_file(cfg.graph_file);
    if (!cfg.generator.empty())
        return generate_named(cfg.generator);
    throw UnsupportedParameter("a graph source is required: --graph FILE or --generate NAME");
}

std::string source_name(const RunConfig& cfg) {
    return cfg.graph_file.empty() ? cfg.generator : cfg.graph_file;
}

ordered_json graph_meta(const Graph& g, const std::string& source) {
    ordered_json j;
    j["source"] = source;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    return j;
}

const char* method_name(Method m) {
    switch (m) {
    case Method::Flow:
        return "flow";
    case Method::SrgFormula:
        return "formula";
    case Method::Both:
        return "both";
    }
    return "flow";
}

ordered_json certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["plan_cost"] = rational_to_json(c.plan_cost);
    j["dual_value"] = rational_to_json(c.dual_value);
    j["gap_zero"] = c.gap_zero;
    return j;
}

ordered_json report_to_json(const CurvatureReport& r) {
    ordered_json j;
    j["u"] = r.u;
    j["v"] = r.v;
    j["method"] = method_name(r.method);
    j["eps"] = rational_to_json(r.eps);
    j["w1"] = rational_to_json(r.w1);
    j["kappa_eps"] = rational_to_json(r.kappa_eps);
    j["condensed"] = rational_to_json(r.condensed);
    if (r.matching_size)
        j["matching_size"] = *r.matching_size;
    else
        j["matching_size"] = nullptr;
    j["certificate"] = certificate_to_json(r.certificate);
    return j;
}

struct CsvRow {
    int u = 0;
    int v = 0;
    Rational kappa;
    std::string method;
    std::optional<int> matching_size;
    bool gap_zero = false;
};

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
    out << "u,v,kappa_num,kappa_den,method,matching_size,gap_zero\n";
    for (const auto& r : rows) {
        out << r.u << ',' << r.v << ',' << r.kappa.num().str() << ',' << r.kappa.den().str()
            << ',' << r.method << ',';
        if (r.matching_size)
            out << *r.matching_size;
        out << ',' << (r.gap_zero ? "true" : "false") << '\n';
    }
}

CsvRow csv_row(const CurvatureReport& r) {
    return {r.u, r.v, r.condensed, method_name(r.method), r.matching_size, r.certificate.gap_zero};
}

void emit(std::ostream& out, const ordered_json& j) {
    out << j.dump(2) << '\n';
}

// kappa at one fixed laziness, with the chord slope and a halving probe that
// flags any nonlinearity; the route for graphs where the limit shortcut does
// not apply.
struct ScaledReport {
    int u = 0;
    int v = 0;
    Rational eps;
    Rational kappa;
    Rational slope;
    bool linear_at_half_eps = false;
    Certificate certificate;
};

ScaledReport scaled_report(const Graph& g, int u, int v, const Rational& eps) {
    if (!g.has_edge(u, v))
        throw NotAnEdge("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
    Measure mu = lazy_measure(g, u, eps);
    Measure nu = lazy_measure(g, v, eps);
    WassersteinResult flow = wasserstein(g, mu, nu);
    ScaledReport r;
    r.u = u;
    r.v = v;
    r.eps = eps;
    r.kappa = Rational(1) - flow.value;
    r.slope = r.kappa / eps;
    Rational at_half = kappa_eps(g, u, v, eps / 2);
    r.linear_at_half_eps = at_half + at_half == r.kappa;
    Rational plan_cost = flow.plan.cost(g);
    Rational dual = dual_bound(g, flow.potential, mu, nu);
    r.certificate = {plan_cost, dual, plan_cost == flow.value && dual == flow.value};
    return r;
}

ordered_json scaled_to_json(const ScaledReport& r) {
    ordered_json j;
    j["u"] = r.u;
    j["v"] = r.v;
    j["method"] = "scaled";
    j["eps"] = rational_to_json(r.eps);
    j["kappa_eps"] = rational_to_json(r.kappa);
    j["scaled_slope"] = rational_to_json(r.slope);
    j["linear_at_half_eps"] = r.linear_at_half_eps;
    j["certificate"] = certificate_to_json(r.certificate);
    return j;
}

ordered_json id_list(const std::vector<int>& ids) {
    return ordered_json(ids);
}

int cmd_curvature(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_source(cfg);
    if (cfg.edge.has_value() == cfg.all_edges)
        throw UnsupportedParameter("curvature needs exactly one of --edge U,V or --all");
    if (cfg.certify && cfg.eps)
        throw UnsupportedParameter("--certify and --eps are mutually exclusive");

    if (cfg.eps) {
        if (!(Rational(0) < *cfg.eps) || Rational(1) < *cfg.eps)
            throw UnsupportedParameter("--eps must lie in (0, 1]");
        std::vector<std::pair<int, int>> targets =
            cfg.all_edges ? g.edges() : std::vector<std::pair<int, int>>{*cfg.edge};
        std::vector<ScaledReport> reports;
        reports.reserve(targets.size());
        for (auto [u, v] : targets)
            reports.push_back(scaled_report(g, u, v, *cfg.eps));
        if (cfg.format == Format::Csv) {
            std::vector<CsvRow> rows;
            for (const auto& r : reports)
                rows.push_back({r.u, r.v, r.kappa, "scaled", std::nullopt,
                                r.certificate.gap_zero});
            write_csv(out, rows);
        } else {
            ordered_json j;
            j["graph"] = graph_meta(g, source_name(cfg));
            auto arr = ordered_json::array();
            for (const auto& r : reports)
                arr.push_back(scaled_to_json(r));
            j["reports"] = std::move(arr);
            emit(out, j);
        }
        return 0;
    }

    if (cfg.all_edges) {
        CurvatureProfile profile = curvature_profile(g);
        if (cfg.format == Format::Csv) {
            std::vector<CsvRow> rows;
            for (const auto& r : profile.reports)
                rows.push_back(csv_row(r));
            write_csv(out, rows);
        } else {
            ordered_json j;
            j["graph"] = graph_meta(g, source_name(cfg));
            auto arr = ordered_json::array();
            for (const auto& r : profile.reports)
                arr.push_back(report_to_json(r));
            j["reports"] = std::move(arr);
            j["summary"] = ordered_json{{"min", rational_to_json(profile.summary.min_value)},
                                        {"max", rational_to_json(profile.summary.max_value)},
                                        {"mean", rational_to_json(profile.summary.mean_value)},
                                        {"uniform", profile.summary.uniform}};
            emit(out, j);
        }
        return 0;
    }

    auto [u, v] = *cfg.edge;
    CurvatureReport report = cfg.certify ? srg_curvature_certified(g, u, v) : edge_report(g, u, v);
    if (cfg.format == Format::Csv) {
        write_csv(out, {csv_row(report)});
        return 0;
    }
    ordered_json j;
    j["graph"] = graph_meta(g, source_name(cfg));
    j["report"] = report_to_json(report);
    if (cfg.certify) {
        // Full replay data: the structured plan, its pairs, and the potential.
        CoreNeighborhood cn = decompose(g, u, v);
        BipartiteGraph h = induced_bipartite(g, cn);
        Matching m = maximum_matching(h);
        auto pairing = two_step_pairing(g, h, m);
        TransportPlan plan = srg_plan(g, cn, h, m, pairing);
        Potential pot = srg_potential(cn, h, m);
        ordered_json replay;
        auto matched = ordered_json::array();
        for (auto [l, r] : m.pairs())
            matched.push_back({h.left_ids[l], h.right_ids[r]});
        replay["matched_pairs"] = std::move(matched);
        auto stepped = ordered_json::array();
        for (auto [a, b] : pairing)
            stepped.push_back({a, b});
        replay["two_step_pairs"] = std::move(stepped);
        auto triplets = ordered_json::array();
        for (const auto& [key, mass] : plan.entries)
            triplets.push_back({key.first, key.second, rational_to_json(mass)["num"],
                                rational_to_json(mass)["den"]});
        replay["plan"] = std::move(triplets);
        ordered_json pot_json;
        for (const auto& [vertex, value] : pot.values)
            pot_json[std::to_string(vertex)] = value;
        replay["potential"] = std::move(pot_json);
        j["replay"] = std::move(replay);
    }
    emit(out, j);
    return 0;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_source(cfg);
    if (!cfg.edge)
        throw UnsupportedParameter("decompose needs --edge U,V");
    if (cfg.format == Format::Csv)
        throw UnsupportedParameter("decompose reports are JSON only");
    auto [x, y] = *cfg.edge;
    CoreNeighborhood cn = decompose(g, x, y);
    ordered_json j;
    j["graph"] = graph_meta(g, source_name(cfg));
    j["edge"] = {cn.x, cn.y};
    j["triangle"] = id_list(cn.triangle);
    j["exclusive_x"] = id_list(cn.exclusive_x);
    j["exclusive_y"] = id_list(cn.exclusive_y);
    j["pentagon"] = id_list(cn.pentagon);
    j["sizes"] = ordered_json{{"triangle", cn.triangle.size()},
                              {"exclusive_x", cn.exclusive_x.size()},
                              {"exclusive_y", cn.exclusive_y.size()},
                              {"pentagon", cn.pentagon.size()}};
    emit(out, j);
    return 0;
}

int cmd_matching(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_source(cfg);
    if (!cfg.edge)
        throw UnsupportedParameter("matching needs --edge U,V");
    if (cfg.format == Format::Csv)
        throw UnsupportedParameter("matching reports are JSON only");
    auto [x, y] = *cfg.edge;
    CoreNeighborhood cn = decompose(g, x, y);
    BipartiteGraph h = induced_bipartite(g, cn);
    Matching m = maximum_matching(h);
    AlternatingReach reach = alternating_reach(h, m, Side::Right);
    CountingIdentity identity = counting_identity_check(h, m, Side::Right);

    ordered_json j;
    j["graph"] = graph_meta(g, source_name(cfg));
    j["edge"] = {x, y};
    j["left"] = id_list(h.left_ids);
    j["right"] = id_list(h.right_ids);
    j["matching_size"] = m.size();
    auto pairs = ordered_json::array();
    for (auto [l, r] : m.pairs())
        pairs.push_back({h.left_ids[l], h.right_ids[r]});
    j["pairs"] = std::move(pairs);
    std::vector<int> reach_right, reach_left;
    for (int r : reach.reach_s)
        reach_right.push_back(h.right_ids[r]);
    for (int l : reach.reach_t)
        reach_left.push_back(h.left_ids[l]);
    j["alternating_reach"] = ordered_json{{"from_side", "right"},
                                          {"reach_side", id_list(reach_right)},
                                          {"reach_other", id_list(reach_left)}};
    j["counting_identity"] = ordered_json{{"reach_s", identity.reach_s},
                                          {"reach_t", identity.reach_t},
                                          {"side_size", identity.side_size},
                                          {"matching_size", identity.matching_size},
                                          {"holds", identity.holds}};
    emit(out, j);
    return identity.holds ? 0 : 1;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Graph g = load_source(cfg);
    if (cfg.format == Format::Csv)
        throw UnsupportedParameter("spectrum reports are JSON only");
    std::optional<Rational> min_curvature;
    if (g.is_connected() && g.edge_count() > 0 && g.vertex_count() >= 2)
        min_curvature = curvature_profile(g).summary.min_value;
    Lambda1Report report = lambda1_checks(g, min_curvature.value_or(Rational(0)));
    ordered_json j;
    j["graph"] = graph_meta(g, source_name(cfg));
    j["eigenvalues"] = eigenvalues(normalized_laplacian(g));
    j["lambda1"] = report.lambda1;
    j["upper_bound"] = static_cast<double>(g.vertex_count()) / (g.vertex_count() - 1);
    if (min_curvature)
        j["min_curvature"] = rational_to_json(*min_curvature);
    else
        j["min_curvature"] = nullptr;
    j["checks"] = ordered_json{{"upper_bound_ok", report.leq_bound_ok},
                               {"lichnerowicz_ok", report.lichnerowicz_ok},
                               {"connected", report.connected}};
    emit(out, j);
    if (!report.leq_bound_ok || !report.lichnerowicz_ok) {
        err << "math inconsistency: spectral bound violated\n";
        return 1;
    }
    return 0;
}

ordered_json rigidity_to_json(const RigidityResult& r) {
    ordered_json j;
    j["is_complete"] = r.is_complete;
    if (r.min_edge_curvature)
        j["min_edge_curvature"] = rational_to_json(*r.min_edge_curvature);
    else
        j["min_edge_curvature"] = nullptr;
    j["consistent"] = r.consistent;
    return j;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.random_count > 0) {
        if (!cfg.graph_file.empty() || !cfg.generator.empty())
            throw UnsupportedParameter("verify --random does not take a graph source");
        if (cfg.format == Format::Csv)
            throw UnsupportedParameter("verify reports are JSON only");
        std::mt19937_64 rng(cfg.seed);
        ordered_json rows = ordered_json::array();
        bool all_consistent = true;
        for (int i = 0; i < cfg.random_count; ++i) {
            Graph g = random_connected_graph(rng, 2, cfg.random_max_n);
            RigidityResult r = rigidity_check(g);
            all_consistent = all_consistent && r.consistent;
            ordered_json row;
            row["index"] = i;
            row["n"] = g.vertex_count();
            row["m"] = g.edge_count();
            row["rigidity"] = rigidity_to_json(r);
            rows.push_back(std::move(row));
        }
        ordered_json j;
        j["random"] = ordered_json{
            {"count", cfg.random_count}, {"max_n", cfg.random_max_n}, {"seed", cfg.seed}};
        j["graphs"] = std::move(rows);
        j["all_consistent"] = all_consistent;
        emit(out, j);
        if (!all_consistent) {
            err << "math inconsistency: rigidity failed on a random graph\n";
            return 1;
        }
        return 0;
    }
    Graph g = load_source(cfg);
    if (cfg.format == Format::Csv)
        throw UnsupportedParameter("verify reports are JSON only");
    RigidityResult r = rigidity_check(g);
    ordered_json j;
    j["graph"] = graph_meta(g, source_name(cfg));
    j["rigidity"] = rigidity_to_json(r);
    emit(out, j);
    if (!r.consistent) {
        err << "math inconsistency: completeness and edge curvatures disagree\n";
        return 1;
    }
    return 0;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
    if (cfg.paley.empty())
        throw UnsupportedParameter("scan needs --paley q1,q2,...");
    auto rows = conjecture_scan(cfg.paley);
    if (cfg.format == Format::Csv) {
        out << "q,n,d,alpha,beta,perfect_matching_everywhere,uniform,"
               "curvature_num,curvature_den,conjectured_num,conjectured_den,agrees\n";
        for (const auto& r : rows) {
            out << r.q << ',' << r.params.n << ',' << r.params.d << ',' << r.params.alpha << ','
                << r.params.beta << ',' << (r.perfect_matching_everywhere ? "true" : "false")
                << ',' << (r.uniform ? "true" : "false") << ',' << r.curvature.num().str() << ','
                << r.curvature.den().str() << ',' << r.conjectured.num().str() << ','
                << r.conjectured.den().str() << ',' << (r.agrees ? "true" : "false") << '\n';
        }
        return 0;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["q"] = r.q;
        row["params"] = ordered_json{{"n", r.params.n},
                                     {"d", r.params.d},
                                     {"alpha", r.params.alpha},
                                     {"beta", r.params.beta}};
        row["perfect_matching_everywhere"] = r.perfect_matching_everywhere;
        row["uniform"] = r.uniform;
        row["curvature"] = rational_to_json(r.curvature);
        row["conjectured"] = rational_to_json(r.conjectured);
        row["agrees"] = r.agrees;
        arr.push_back(std::move(row));
    }
    ordered_json j;
    j["rows"] = std::move(arr);
    emit(out, j);
    return 0;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_source(cfg);
    if (cfg.format == Format::Csv)
        throw UnsupportedParameter("generate emits an edge list or JSON, not CSV");
    if (cfg.format == Format::Json)
        emit(out, graph_to_json(g));
    else
        out << to_edge_list(g);
    return 0;
}

std::pair<int, int> parse_edge_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("edge must look like U,V, got '" + text + "'");
    try {
        std::size_t pos = 0;
        long long u = std::stoll(text.substr(0, comma), &pos);
        if (pos != comma)
            throw std::invalid_argument(text);
        std::string second = text.substr(comma + 1);
        long long v = std::stoll(second, &pos);
        if (pos != second.size())
            throw std::invalid_argument(text);
        if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
            throw std::out_of_range(text);
        return {static_cast<int>(u), static_cast<int>(v)};
    } catch (const std::exception&) {
        throw ParseError("edge must look like U,V with vertex ids, got '" + text + "'");
    }
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
        case Command::Curvature:
            return cmd_curvature(cfg, out);
        case Command::Decompose:
            return cmd_decompose(cfg, out);
        case Command::Matching:
            return cmd_matching(cfg, out);
        case Command::Spectrum:
            return cmd_spectrum(cfg, out, err);
        case Command::Verify:
            return cmd_verify(cfg, out, err);
        case Command::Scan:
            return cmd_scan(cfg, out);
        case Command::Generate:
            return cmd_generate(cfg, out);
        }
        return 2;
    } catch (const MathInconsistency& e) {
        err << "math inconsistency: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string edge_text, eps_text, format_text;

    CLI::App app{"exact condensed Ricci curvature for graph edges"};
    app.require_subcommand(1);

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--graph", cfg.graph_file, "graph file, edge list or JSON");
        cmd->add_option("--generate", cfg.generator,
                        "named generator: complete:n, cycle:n, bipartite:s,t, rooks:r, "
                        "paley:q, petersen, shrikhande, hoffman-singleton");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_text, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* curvature = app.add_subcommand("curvature", "edge curvature with certificates");
    add_source(curvature);
    add_format(curvature);
    curvature->add_option("--edge", edge_text, "edge endpoints U,V");
    curvature->add_flag("--all", cfg.all_edges, "every edge plus a summary");
    curvature->add_flag("--certify", cfg.certify,
                        "require the matching-based certified route and emit replay data");
    curvature->add_option("--eps", eps_text,
                          "laziness N/D: report kappa at eps with a linearity probe");

    auto* decompose_cmd = app.add_subcommand("decompose", "core neighborhood of an edge");
    add_source(decompose_cmd);
    decompose_cmd->add_option("--edge", edge_text, "edge endpoints U,V")->required();

    auto* matching_cmd =
        app.add_subcommand("matching", "maximum matching between exclusive neighborhoods");
    add_source(matching_cmd);
    matching_cmd->add_option("--edge", edge_text, "edge endpoints U,V")->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "normalized Laplacian spectrum and bounds");
    add_source(spectrum_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "completeness rigidity check");
    add_source(verify_cmd);
    verify_cmd->add_option("--random", cfg.random_count,
                           "check this many seeded random connected graphs")
        ->check(CLI::Range(1, 1'000'000));
    verify_cmd->add_option("--max-n", cfg.random_max_n, "largest random graph size")
        ->check(CLI::Range(2, 64));
    verify_cmd->add_option("--seed", cfg.seed, "random corpus seed");

    auto* scan_cmd = app.add_subcommand("scan", "Paley graph conjecture scan");
    scan_cmd->add_option("--paley", cfg.paley, "comma-separated primes, each 1 mod 4")
        ->delimiter(',');
    add_format(scan_cmd);

    auto* generate_cmd = app.add_subcommand("generate", "emit a generated graph");
    add_source(generate_cmd);
    add_format(generate_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand(curvature))
        cfg.command = Command::Curvature;
    else if (app.got_subcommand(decompose_cmd))
        cfg.command = Command::Decompose;
    else if (app.got_subcommand(matching_cmd))
        cfg.command = Command::Matching;
    else if (app.got_subcommand(spectrum_cmd))
        cfg.command = Command::Spectrum;
    else if (app.got_subcommand(verify_cmd))
        cfg.command = Command::Verify;
    else if (app.got_subcommand(scan_cmd))
        cfg.command = Command::Scan;
    else if (app.got_subcommand(generate_cmd))
        cfg.command = Command::Generate;

    if (format_text.empty())
        cfg.format = cfg.command == Command::Generate ? Format::Text : Format::Json;
    else
        cfg.format = format_text == "csv" ? Format::Csv : Format::Json;

    try {
        if (!edge_text.empty())
            cfg.edge = parse_edge_pair(edge_text);
        if (!eps_text.empty())
            cfg.eps = Rational::parse(eps_text);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    return run(cfg, out, err);
}

} // namespace ricci::cli
