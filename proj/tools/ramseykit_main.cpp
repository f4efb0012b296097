// ramseykit: density computation, quasirandomness verification suites,
// block-construction experiments, and Ramsey bound tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramseykit/bounds.hpp"
#include "ramseykit/construction.hpp"
#include "ramseykit/graph.hpp"
#include "ramseykit/kernel.hpp"
#include "ramseykit/pattern.hpp"
#include "ramseykit/quasirandom.hpp"
#include "ramseykit/simd.hpp"

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, delim)) parts.push_back(item);
    return parts;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rk::DomainError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_builtin_pattern(const std::string& s) {
    return s.size() >= 2 && (s[0] == 'K' || s[0] == 'C' || s[0] == 'P' || s[0] == 'E') &&
           s.find_first_not_of("0123456789,", 1) == std::string::npos;
}

rk::SimpleGraph parse_graph_spec(const std::string& spec) {
    if (spec.rfind("g6:", 0) == 0) return rk::graph_from_graph6(spec.substr(3));
    if (spec.find(':') != std::string::npos) {
        auto parts = split(spec, ':');
        const std::string& kind = parts[0];
        if (kind == "paley" && parts.size() == 2) return rk::paley_graph(std::stoi(parts[1]));
        if (kind == "gnp" && parts.size() == 4)
            return rk::gnp_graph(std::stoi(parts[1]), std::stod(parts[2]),
                                 static_cast<std::uint64_t>(std::stoull(parts[3])));
        if (kind == "wrand" && parts.size() == 4)
            return rk::w_random_graph(rk::block_graphon(std::stoi(parts[1])).kernel, std::stoi(parts[2]),
                                      static_cast<std::uint64_t>(std::stoull(parts[3])));
        if (kind == "circulant" && parts.size() == 3) {
            std::vector<int> ds;
            for (const auto& d : split(parts[2], ',')) ds.push_back(std::stoi(d));
            return rk::circulant_graph(std::stoi(parts[1]), ds);
        }
        throw rk::DomainError("unknown graph generator: " + spec);
    }
    if (looks_like_builtin_pattern(spec)) {
        rk::PatternGraph p = rk::pattern_from_name(spec);
        rk::SimpleGraph g(p.vertex_count());
        for (auto [u, v] : p.edges()) g.add_edge(u, v);
        return g;
    }
    std::string text = read_file(spec);
    // Edge-list files start with a vertex count; anything else is graph6.
    if (!text.empty() && std::isdigit(static_cast<unsigned char>(text[0])))
        return rk::graph_from_edge_list_text(text);
    auto nl = text.find('\n');
    return rk::graph_from_graph6(nl == std::string::npos ? text : text.substr(0, nl));
}

rk::PatternGraph parse_pattern_spec(const std::string& spec) {
    if (looks_like_builtin_pattern(spec)) return rk::pattern_from_name(spec);
    return rk::parse_pattern_text(read_file(spec));
}

rk::StepKernel parse_kernel_spec(const std::string& spec, rk::Mode mode) {
    if (spec.rfind("block:", 0) == 0) {
        rk::StepKernel k = rk::block_graphon(std::stoi(spec.substr(6))).kernel;
        return mode == rk::Mode::exact ? k : rk::to_float(k);
    }
    rk::StepKernel k = rk::kernel_from_json(read_file(spec));
    if (mode == rk::Mode::exact && k.mode() != rk::Mode::exact)
        throw rk::UsageError("exact mode requested but kernel file is float");
    return mode == rk::Mode::exact ? k : rk::to_float(k);
}

struct OutputSink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw rk::DomainError("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& out() { return *os; }
};

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int emit_rows(OutputSink& sink, const std::string& format, const std::vector<rk::TrialRow>& rows) {
    bool all_hold = true;
    if (format == "csv") {
        sink.out() << "suite,seed,instance,lhs,rhs,slack,holds\n";
        for (const auto& r : rows) {
            sink.out() << r.suite << "," << r.seed << ",\"" << r.instance << "\"," << fmt_double(r.lhs)
                       << "," << fmt_double(r.rhs) << "," << fmt_double(r.slack) << ","
                       << (r.holds ? "true" : "false") << "\n";
            all_hold = all_hold && r.holds;
        }
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"suite", r.suite},
                           {"seed", r.seed},
                           {"instance", r.instance},
                           {"lhs", r.lhs},
                           {"rhs", r.rhs},
                           {"slack", r.slack},
                           {"holds", r.holds}});
            all_hold = all_hold && r.holds;
        }
        sink.out() << arr.dump(2) << "\n";
    } else {
        // one summary line per suite, violations listed as they appear
        std::size_t i = 0;
        while (i < rows.size()) {
            std::size_t j = i;
            int violations = 0;
            double min_slack = HUGE_VAL;
            for (; j < rows.size() && rows[j].suite == rows[i].suite; ++j) {
                if (!rows[j].holds) {
                    ++violations;
                    sink.out() << "VIOLATION " << rows[j].suite << " seed=" << rows[j].seed << " "
                               << rows[j].instance << " lhs=" << rows[j].lhs << " rhs=" << rows[j].rhs
                               << "\n";
                }
                min_slack = std::min(min_slack, rows[j].slack);
                all_hold = all_hold && rows[j].holds;
            }
            sink.out() << rows[i].suite << ": " << (j - i) << " trials, " << violations
                       << " violations, min slack " << fmt_double(min_slack) << "\n";
            i = j;
        }
    }
    return all_hold ? 0 : 1;
}

json bound_to_json(const rk::BoundResult& res) {
    json j{{"k", res.k},
           {"l", res.l},
           {"r", res.r_used},
           {"epsilon", res.cfg.epsilon},
           {"C_eps", res.cfg.c_eps},
           {"phi", res.phi_value},
           {"log_alpha", res.log_alpha_value},
           {"log_bound", res.bound_log.ln},
           {"log_es", res.es_log.ln},
           {"log_ratio", res.ratio_log.ln},
           {"regime", rk::regime_name(res.regime)}};
    if (res.exact_available) j["exact_bound_floor"] = res.exact_floor.to_string();
    if (res.derived_c != 0.0) j["derived_c"] = res.derived_c;
    return j;
}

void emit_bound(OutputSink& sink, const std::string& format, const rk::BoundResult& res) {
    if (format == "json") {
        sink.out() << bound_to_json(res).dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        sink.out() << "k,l,r,epsilon,C_eps,phi,log_alpha,log_bound,log_es,log_ratio,regime\n";
        sink.out() << res.k << "," << res.l << "," << res.r_used << "," << res.cfg.epsilon << ","
                   << res.cfg.c_eps << "," << fmt_double(res.phi_value) << ","
                   << fmt_double(res.log_alpha_value) << "," << fmt_double(res.bound_log.ln) << ","
                   << fmt_double(res.es_log.ln) << "," << fmt_double(res.ratio_log.ln) << ","
                   << rk::regime_name(res.regime) << "\n";
        return;
    }
    sink.out() << "R(" << res.k + 1 << "," << res.l + 1 << ") <= exp(" << fmt_double(res.bound_log.ln)
               << ")  [regime " << rk::regime_name(res.regime) << ", r=" << res.r_used
               << ", log ratio to Erdos-Szekeres " << fmt_double(res.ratio_log.ln) << "]\n";
    if (res.exact_available) sink.out() << "exact bound floor: " << res.exact_floor.to_string() << "\n";
    if (res.derived_c != 0.0) sink.out() << "derived c: " << fmt_double(res.derived_c) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"effective-quasirandomness and Ramsey bound toolkit"};
    app.fallthrough();  // let global flags appear after the subcommand
    app.require_subcommand(1);

    std::string format = "human", out_path;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string mode_str = "exact";
    app.add_option("--format", format, "output format: human|csv|json")->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--seed", seed, "master seed")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads (changes timing only)")->capture_default_str();
    app.add_option("--mode", mode_str, "arithmetic mode: exact|float")->capture_default_str();

    // density
    auto* density_cmd = app.add_subcommand("density", "H-density of a kernel or graph");
    std::string density_pattern, density_kernel, density_graph, density_center;
    density_cmd->add_option("--pattern", density_pattern, "pattern (K4, C5, P3, K2,3, E2, or file)")->required();
    density_cmd->add_option("--kernel", density_kernel, "kernel (block:<m> or JSON file)");
    density_cmd->add_option("--graph", density_graph, "graph (builtin, generator, g6:, or file)");
    density_cmd->add_option("--center", density_center, "center the kernel at this density first");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "centered degree/codegree statistics of a graph");
    std::string stats_graph, stats_p;
    stats_cmd->add_option("--graph", stats_graph)->required();
    stats_cmd->add_option("--p", stats_p, "centering density, rational like 1/2")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named inequality suite");
    std::string verify_suite;
    int verify_trials = 200;
    verify_cmd->add_option("suite", verify_suite, "kab|local|bipartite-global|general-global|k2a|expansion|all")
        ->required();
    verify_cmd->add_option("--trials", verify_trials)->capture_default_str();

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "generators and block-construction experiments");
    auto* cg = construct_cmd->add_subcommand("graph", "emit a generated graph");
    std::string cg_gen, cg_fmt = "edges";
    cg->add_option("--gen", cg_gen, "K5 | paley:q | gnp:n:p:seed | wrand:m:n:seed | circulant:n:d1,d2")
        ->required();
    cg->add_option("--graph-format", cg_fmt, "edges|g6")->capture_default_str();
    auto* ck = construct_cmd->add_subcommand("kernel", "emit a kernel as JSON");
    std::string ck_gen;
    ck->add_option("--gen", ck_gen, "block:<m>")->required();
    auto* cw = construct_cmd->add_subcommand("wrand-stats", "mu/nu statistics of W-random graphs");
    int cw_m = 2, cw_n = 0, cw_seeds = 20;
    cw->add_option("--m", cw_m, "block count")->required();
    cw->add_option("--n", cw_n, "vertex count (default 500 m^2)");
    cw->add_option("--seeds", cw_seeds)->capture_default_str();
    auto* cd = construct_cmd->add_subcommand("connected-density", "closed-form centered block density");
    std::string cd_pattern;
    int cd_m = 2;
    cd->add_option("--pattern", cd_pattern)->required();
    cd->add_option("--m", cd_m)->required();
    auto* cv = construct_cmd->add_subcommand("deviation", "connected r-vertex term sum vs floor");
    int cv_r = 3, cv_m = 2;
    cv->add_option("--r", cv_r)->required();
    cv->add_option("--m", cv_m)->required();
    construct_cmd->require_subcommand(1);

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "Ramsey upper bound evaluation");
    long long b_k = 0, b_l = 0;
    int b_r = 8;
    double b_eps = 0.25, b_ceps = 1.0, b_ceps_small = 1e-2;
    bool b_best = false;
    bound_cmd->add_option("--k", b_k)->required();
    bound_cmd->add_option("--l", b_l)->required();
    bound_cmd->add_option("--r", b_r)->capture_default_str();
    bound_cmd->add_option("--eps", b_eps)->capture_default_str();
    bound_cmd->add_option("--Ceps", b_ceps)->capture_default_str();
    bound_cmd->add_option("--ceps-small", b_ceps_small)->capture_default_str();
    bound_cmd->add_flag("--best", b_best, "use the prescribed r = eps^3 log k / (64 C_eps)");

    // table
    auto* table_cmd = app.add_subcommand("table", "diagonal bound table over a log grid of k");
    long long t_kmin = 1000, t_kmax = 10000000;
    int t_points = 9, t_r = 8;
    double t_eps = 0.25, t_ceps = 1.0;
    bool t_best = false;
    table_cmd->add_option("--k-min", t_kmin)->capture_default_str();
    table_cmd->add_option("--k-max", t_kmax)->capture_default_str();
    table_cmd->add_option("--points", t_points)->capture_default_str();
    table_cmd->add_option("--r", t_r)->capture_default_str();
    table_cmd->add_option("--eps", t_eps)->capture_default_str();
    table_cmd->add_option("--Ceps", t_ceps)->capture_default_str();
    table_cmd->add_flag("--best", t_best);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "small-parameter Ramsey oracle");
    auto* oracle_ramsey = oracle_cmd->add_subcommand("ramsey", "exact R(s,t) up to n_max");
    int o_s = 3, o_t = 3, o_nmax = 6;
    oracle_ramsey->add_option("--s", o_s)->required();
    oracle_ramsey->add_option("--t", o_t)->required();
    oracle_ramsey->add_option("--nmax", o_nmax)->required();
    auto* oracle_witness = oracle_cmd->add_subcommand("witness", "find a witness on exactly n vertices");
    int ow_s = 3, ow_t = 3, ow_n = 5;
    oracle_witness->add_option("--s", ow_s)->required();
    oracle_witness->add_option("--t", ow_t)->required();
    oracle_witness->add_option("--n", ow_n)->required();
    oracle_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit clean; bad usage is 2
    }

    try {
        OutputSink sink;
        sink.open(out_path);
        rk::Mode mode = mode_str == "float" ? rk::Mode::floating : rk::Mode::exact;
        if (mode_str != "float" && mode_str != "exact") throw rk::UsageError("mode must be exact or float");

        if (*density_cmd) {
            if (density_kernel.empty() == density_graph.empty())
                throw rk::UsageError("density needs exactly one of --kernel / --graph");
            rk::PatternGraph h = parse_pattern_spec(density_pattern);
            rk::StepKernel w = density_kernel.empty()
                                   ? rk::embed_graph(parse_graph_spec(density_graph), mode)
                                   : parse_kernel_spec(density_kernel, mode);
            if (!density_center.empty()) {
                if (mode == rk::Mode::exact)
                    w = rk::center(w, rk::Rat::from_string(density_center));
                else
                    w = rk::center(w, rk::Rat::from_string(density_center).to_double());
            }
            if (mode == rk::Mode::exact) {
                rk::Rat v = rk::density_exact(h, w);
                if (format == "json")
                    sink.out() << json{{"density", v.to_string()}, {"value", v.to_double()}}.dump() << "\n";
                else
                    sink.out() << v.to_string() << "\n";
            } else {
                double v = rk::density(h, w);
                if (format == "json")
                    sink.out() << json{{"density", v}}.dump() << "\n";
                else
                    sink.out() << fmt_double(v) << "\n";
            }
            return 0;
        }

        if (*stats_cmd) {
            rk::SimpleGraph g = parse_graph_spec(stats_graph);
            rk::CenteredStats st = rk::centered_stats(g, rk::Rat::from_string(stats_p), jobs);
            if (format == "json") {
                sink.out() << json{{"n", st.n},
                                   {"p", st.p.to_string()},
                                   {"mu", st.mu.to_string()},
                                   {"nu", st.nu.to_string()},
                                   {"mu_value", st.mu_d},
                                   {"nu_value", st.nu_d}}
                                  .dump(2)
                           << "\n";
            } else if (format == "csv") {
                sink.out() << "n,p,mu,nu\n"
                           << st.n << "," << st.p.to_string() << "," << fmt_double(st.mu_d) << ","
                           << fmt_double(st.nu_d) << "\n";
            } else {
                sink.out() << "n=" << st.n << " p=" << st.p.to_string() << " mu=" << st.mu.to_string()
                           << " (" << fmt_double(st.mu_d) << ") nu=" << st.nu.to_string() << " ("
                           << fmt_double(st.nu_d) << ")\n";
            }
            return 0;
        }

        if (*verify_cmd) {
            std::vector<rk::TrialRow> rows;
            if (verify_suite == "all") {
                for (const auto& s : rk::suite_names()) {
                    auto part = rk::run_suite(s, verify_trials, seed, jobs);
                    rows.insert(rows.end(), part.begin(), part.end());
                }
            } else {
                rows = rk::run_suite(verify_suite, verify_trials, seed, jobs);
            }
            return emit_rows(sink, format, rows);
        }

        if (*construct_cmd) {
            if (*cg) {
                rk::SimpleGraph g = parse_graph_spec(cg_gen);
                if (cg_fmt == "g6")
                    sink.out() << rk::graph_to_graph6(g) << "\n";
                else
                    sink.out() << rk::graph_to_edge_list_text(g);
                return 0;
            }
            if (*ck) {
                sink.out() << rk::kernel_to_json(parse_kernel_spec(ck_gen, rk::Mode::exact)) << "\n";
                return 0;
            }
            if (*cw) {
                int n = cw_n > 0 ? cw_n : 500 * cw_m * cw_m;
                rk::StepKernel kernel = rk::block_graphon(cw_m).kernel;
                double lo = 1.0 / (8.0 * cw_m), hi = 2.0 / cw_m;
                if (format == "csv") sink.out() << "m,n,seed,mu,nu,in_band\n";
                int in_band = 0;
                for (int i = 0; i < cw_seeds; ++i) {
                    std::uint64_t s = seed + static_cast<std::uint64_t>(i);
                    rk::SimpleGraph g = rk::w_random_graph(kernel, n, s);
                    rk::CenteredStats st = rk::centered_stats(g, rk::Rat(1, 2), jobs);
                    bool ok = st.mu_d >= lo && st.mu_d <= hi && st.nu_d >= lo && st.nu_d <= hi;
                    in_band += ok;
                    if (format == "csv")
                        sink.out() << cw_m << "," << n << "," << s << "," << fmt_double(st.mu_d) << ","
                                   << fmt_double(st.nu_d) << "," << (ok ? "true" : "false") << "\n";
                    else
                        sink.out() << "seed " << s << ": mu=" << fmt_double(st.mu_d)
                                   << " nu=" << fmt_double(st.nu_d) << (ok ? "" : "  [outside band]") << "\n";
                }
                if (format != "csv")
                    sink.out() << in_band << "/" << cw_seeds << " seeds inside [" << fmt_double(lo) << ", "
                               << fmt_double(hi) << "]\n";
                return 0;
            }
            if (*cd) {
                rk::Rat v = rk::connected_density(parse_pattern_spec(cd_pattern), cd_m);
                sink.out() << v.to_string() << "\n";
                return 0;
            }
            if (*cv) {
                rk::DeviationBound d = rk::deviation_lower_bound(cv_r, cv_m);
                if (format == "json")
                    sink.out() << json{{"sum", d.sum.to_string()},
                                       {"floor", d.floor_value.to_string()},
                                       {"connected_spanning_subgraphs", d.connected_spanning_subgraphs},
                                       {"holds", d.holds}}
                                      .dump(2)
                               << "\n";
                else
                    sink.out() << "sum=" << d.sum.to_string() << " floor=" << d.floor_value.to_string()
                               << " connected_spanning=" << d.connected_spanning_subgraphs
                               << (d.holds ? " holds" : " VIOLATED") << "\n";
                return d.holds ? 0 : 1;
            }
        }

        if (*bound_cmd) {
            rk::BoundResult res;
            if (b_best) {
                res = rk::best_bound(b_k, b_l, b_eps, b_ceps);
            } else {
                rk::BoundConfig cfg{b_r, b_eps, b_ceps, b_ceps_small};
                res = rk::ramsey_upper_bound(cfg, b_k, b_l);
            }
            emit_bound(sink, format, res);
            return 0;
        }

        if (*table_cmd) {
            sink.out() << "k,l,r,epsilon,C_eps,phi,log_alpha,log_bound,log_es,log_ratio,regime\n";
            for (int i = 0; i < t_points; ++i) {
                double frac = t_points == 1 ? 0.0 : static_cast<double>(i) / (t_points - 1);
                long long k = static_cast<long long>(
                    std::llround(std::exp(std::log(static_cast<double>(t_kmin)) +
                                          frac * (std::log(static_cast<double>(t_kmax)) -
                                                  std::log(static_cast<double>(t_kmin))))));
                rk::BoundResult res;
                if (t_best) {
                    res = rk::best_bound(k, k, t_eps, t_ceps);
                } else {
                    rk::BoundConfig cfg{t_r, t_eps, t_ceps, 1e-2};
                    res = rk::ramsey_upper_bound(cfg, k, k);
                }
                sink.out() << res.k << "," << res.l << "," << res.r_used << "," << t_eps << "," << t_ceps
                           << "," << fmt_double(res.phi_value) << "," << fmt_double(res.log_alpha_value)
                           << "," << fmt_double(res.bound_log.ln) << "," << fmt_double(res.es_log.ln)
                           << "," << fmt_double(res.ratio_log.ln) << "," << rk::regime_name(res.regime)
                           << "\n";
            }
            return 0;
        }

        if (*oracle_cmd) {
            if (*oracle_ramsey) {
                auto r = rk::ramsey_exact(o_s, o_t, o_nmax);
                if (r)
                    sink.out() << *r << "\n";
                else
                    sink.out() << "unknown\n";
                return 0;
            }
            if (*oracle_witness) {
                auto g = rk::find_ramsey_witness(ow_s, ow_t, ow_n);
                if (g)
                    sink.out() << rk::graph_to_graph6(*g) << "\n";
                else
                    sink.out() << "none\n";
                return 0;
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
