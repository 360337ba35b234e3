// pscfkit: probabilistic voting rules and axiom verification on weak-order
// profiles, with exact rational arithmetic throughout.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pscf/harness.hpp"
#include "pscf/lottery.hpp"
#include "pscf/prefs.hpp"
#include "pscf/ratlp.hpp"
#include "pscf/rng.hpp"
#include "pscf/rules.hpp"
#include "pscf/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using json = nlohmann::ordered_json;
using namespace pscf;

namespace {

Profile load_profile(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open profile file '" + path + "'");
        buffer << in.rdbuf();
    }
    return parse_profile(buffer.str());
}

ScoringVector parse_scores(const std::string& text) {
    std::vector<Rational> scores;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) scores.push_back(parse_rational(token));
    return ScoringVector(std::move(scores));
}

RuleFn make_rule(const std::string& name, const std::optional<std::string>& scores) {
    if (name == "rmec") return [](const Profile& p) { return rmec(p); };
    if (name == "smec") {
        if (scores) {
            const ScoringVector s = parse_scores(*scores);
            return [s](const Profile& p) { return s_mec(p, s); };
        }
        return [](const Profile& p) {
            return s_mec(p, ScoringVector::rank_maximal(p.num_agents(), p.num_alternatives()));
        };
    }
    if (name == "rankmax") return [](const Profile& p) { return rank_maximal_rule(p); };
    if (name == "rd") return [](const Profile& p) { return random_dictatorship(p); };
    if (name == "rsd") return [](const Profile& p) { return rsd(p); };
    throw CLI::ValidationError("rule", "unknown rule '" + name + "'");
}

json lottery_to_json(const Lottery& lottery, const Profile& profile) {
    return json::parse(lottery_json(lottery, profile.alternatives()));
}

void print_lottery_human(const Lottery& lottery, const Profile& profile) {
    for (int a : lottery.support())
        std::cout << "  " << profile.alternatives()[a].label << "  "
                  << rational_str(lottery.prob(a)) << "\n";
}

// ranges like "4-8" or "6"
std::pair<int, int> parse_range(const std::string& text) {
    const auto dash = text.find('-');
    if (dash == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1))};
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw CLI::ValidationError("sizes", "expected N-RANGExM-RANGE, e.g. 4-8x4-8");
    const auto [n_lo, n_hi] = parse_range(text.substr(0, x));
    const auto [m_lo, m_hi] = parse_range(text.substr(x + 1));
    std::vector<std::pair<int, int>> sizes;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int m = m_lo; m <= m_hi; ++m) sizes.emplace_back(n, m);
    return sizes;
}

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

int run_verify(const std::string& axiom, const Profile& profile, const RuleFn& rule,
               const std::string& rule_name, std::optional<int> agent_1based,
               const std::optional<std::string>& alt_label, const std::string& domain_name,
               bool as_json) {
    json report;
    report["axiom"] = axiom;
    report["rule"] = rule_name;
    bool ok = true;

    std::vector<int> agents;
    if (agent_1based) {
        if (*agent_1based < 1 || *agent_1based > profile.num_agents())
            throw std::runtime_error("agent index out of range (1.." +
                                     std::to_string(profile.num_agents()) + ")");
        agents.push_back(*agent_1based - 1);
    } else {
        for (int i = 0; i < profile.num_agents(); ++i) agents.push_back(i);
    }

    if (axiom == "expost") {
        const Lottery outcome = rule(profile);
        ok = ex_post_efficient(outcome, profile);
        json pareto = json::array();
        for (int a : pareto_optimal_set(profile))
            pareto.push_back(profile.alternatives()[a].label);
        report["lottery"] = lottery_to_json(outcome, profile);
        report["pareto_optimal"] = pareto;
        report["ok"] = ok;
    } else if (axiom == "sdeff") {
        const Lottery outcome = rule(profile);
        const EfficiencyVerdict verdict = sd_efficient(outcome, profile);
        ok = verdict.efficient;
        report["lottery"] = lottery_to_json(outcome, profile);
        report["ok"] = ok;
        report["witness"] =
            verdict.witness ? lottery_to_json(*verdict.witness, profile) : json(nullptr);
    } else if (axiom == "participation") {
        json entries = json::array();
        for (int i : agents) {
            const ParticipationReport r = participation_report(rule, profile, i);
            ok = ok && r.very_strong_ok;
            entries.push_back({{"agent", profile.agent_name(i)},
                               {"sd_ok", r.sd_ok},
                               {"strong_ok", r.strong_ok},
                               {"very_strong_ok", r.very_strong_ok},
                               {"with", lottery_to_json(r.with_outcome, profile)},
                               {"without", lottery_to_json(r.without_outcome, profile)}});
        }
        report["agents"] = entries;
        report["ok"] = ok;
    } else if (axiom == "sp") {
        MisreportDomain domain = MisreportDomain::all;
        if (domain_name == "strict") domain = MisreportDomain::strict;
        else if (domain_name == "dichotomous") domain = MisreportDomain::dichotomous;
        else if (domain_name != "all")
            throw std::runtime_error("domain must be all, strict or dichotomous");
        json entries = json::array();
        for (int i : agents) {
            const auto manipulations = strategyproofness_scan(rule, profile, i, domain);
            ok = ok && manipulations.empty();
            json list = json::array();
            for (const auto& manip : manipulations)
                list.push_back(
                    {{"misreport", format_weak_order(manip.misreport, profile.alternatives())},
                     {"outcome", lottery_to_json(manip.outcome, profile)}});
            entries.push_back({{"agent", profile.agent_name(i)}, {"manipulations", list}});
        }
        report["agents"] = entries;
        report["ok"] = ok;
    } else if (axiom == "propshare") {
        const Lottery outcome = rule(profile);
        ok = proportional_share_ok(outcome, profile);
        report["lottery"] = lottery_to_json(outcome, profile);
        report["ok"] = ok;
    } else if (axiom == "sduniform") {
        const Lottery outcome = rule(profile);
        ok = sd_uniform_ok(outcome, profile);
        report["lottery"] = lottery_to_json(outcome, profile);
        report["ok"] = ok;
    } else if (axiom == "monotone") {
        std::vector<int> alts;
        if (alt_label) alts.push_back(profile.alternative_id(*alt_label));
        else
            for (int a = 0; a < profile.num_alternatives(); ++a) alts.push_back(a);
        json entries = json::array();
        for (int i : agents)
            for (int a : alts) {
                const bool holds = monotonicity_check(rule, profile, i, a);
                ok = ok && holds;
                entries.push_back({{"agent", profile.agent_name(i)},
                                   {"alternative", profile.alternatives()[a].label},
                                   {"ok", holds}});
            }
        report["checks"] = entries;
        report["ok"] = ok;
    } else {
        throw std::runtime_error("unknown axiom '" + axiom + "'");
    }

    if (as_json) {
        std::cout << report.dump() << "\n";
    } else {
        std::cout << axiom << " (" << rule_name << "): " << (ok ? "holds" : "FAILS") << "\n";
        if (report.contains("lottery"))
            std::cout << "  lottery: " << report["lottery"].dump() << "\n";
        if (report.contains("witness") && !report["witness"].is_null())
            std::cout << "  dominated by: " << report["witness"].dump() << "\n";
        if (axiom == "participation")
            for (const auto& entry : report["agents"])
                std::cout << "  agent " << entry["agent"].get<std::string>()
                          << ": sd=" << entry["sd_ok"].get<bool>()
                          << " strong=" << entry["strong_ok"].get<bool>()
                          << " very_strong=" << entry["very_strong_ok"].get<bool>() << "\n";
        if (axiom == "sp")
            for (const auto& entry : report["agents"])
                for (const auto& manip : entry["manipulations"])
                    std::cout << "  agent " << entry["agent"].get<std::string>()
                              << " gains via: " << manip["misreport"].get<std::string>()
                              << " -> " << manip["outcome"].dump() << "\n";
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"probabilistic voting rules and axiom verification"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "sample a uniform random profile");
    int gen_n = 4, gen_m = 4;
    std::uint64_t gen_seed = 0;
    gen->add_option("--n", gen_n, "number of agents")->required();
    gen->add_option("--m", gen_m, "number of alternatives")->required();
    gen->add_option("--seed", gen_seed, "RNG seed");

    // --- rule ---
    auto* rule_cmd = app.add_subcommand("rule", "run a voting rule on a profile");
    std::string rule_name, rule_profile;
    std::optional<std::string> rule_scores;
    bool rule_json_flag = false;
    rule_cmd->add_option("name", rule_name, "rmec | smec | rankmax | rd | rsd")->required();
    rule_cmd->add_option("--profile", rule_profile, "profile file ('-' for stdin)")->required();
    rule_cmd->add_option("--scores", rule_scores,
                         "comma-separated rational scores for smec (default base n+1)");
    rule_cmd->add_flag("--json", rule_json_flag, "machine-readable output");

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "check an axiom on a profile");
    std::string verify_axiom, verify_profile, verify_rule = "rmec", verify_domain = "all";
    std::optional<std::string> verify_scores, verify_alt;
    std::optional<int> verify_agent;
    bool verify_json_flag = false;
    verify_cmd
        ->add_option("axiom", verify_axiom,
                     "expost | sdeff | participation | sp | propshare | sduniform | monotone")
        ->required();
    verify_cmd->add_option("--profile", verify_profile, "profile file ('-' for stdin)")
        ->required();
    verify_cmd->add_option("--rule", verify_rule, "rule to verify (default rmec)");
    verify_cmd->add_option("--scores", verify_scores, "scores when --rule smec");
    verify_cmd->add_option("--agent", verify_agent, "1-based agent (default: all)");
    verify_cmd->add_option("--alt", verify_alt, "alternative label for monotone");
    verify_cmd->add_option("--domain", verify_domain, "sp misreport domain (all|strict|dichotomous)");
    verify_cmd->add_flag("--json", verify_json_flag, "machine-readable output");

    // --- experiment ---
    auto* experiment = app.add_subcommand("experiment", "randomized and exhaustive scans");
    experiment->require_subcommand(1);

    auto* table2 = experiment->add_subcommand(
        "table2", "per-cell count of SD-efficient rule outcomes on random profiles");
    int t2_trials = 10000;
    std::uint64_t t2_seed = 0;
    std::string t2_sizes = "4-8x4-8", t2_rule = "rmec";
    bool t2_serial = false, t2_json_flag = false;
    int t2_threads = 0;
    table2->add_option("--trials", t2_trials, "profiles per cell");
    table2->add_option("--seed", t2_seed, "RNG seed");
    table2->add_option("--sizes", t2_sizes, "cell grid, e.g. 4-8x4-8");
    table2->add_option("--rule", t2_rule, "rule to test (default rmec)");
    table2->add_flag("--serial", t2_serial, "use the serial reference path");
    table2->add_option("--threads", t2_threads, "OpenMP thread count (0 = default)");
    table2->add_flag("--json", t2_json_flag, "machine-readable output");

    auto* exhaustive = experiment->add_subcommand(
        "exhaustive", "scan every profile (up to anonymity) for SD-dominated RMEC outcomes");
    int ex_n = 4, ex_m = 4;
    std::uint64_t ex_budget = 2'000'000;
    bool ex_serial = false, ex_json_flag = false;
    int ex_threads = 0;
    exhaustive->add_option("--n", ex_n, "number of agents")->required();
    exhaustive->add_option("--m", ex_m, "number of alternatives")->required();
    exhaustive->add_option("--budget", ex_budget, "instance-count budget");
    exhaustive->add_flag("--serial", ex_serial, "use the serial reference path");
    exhaustive->add_option("--threads", ex_threads, "OpenMP thread count (0 = default)");
    exhaustive->add_flag("--json", ex_json_flag, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            std::cout << format_profile(sample_profile(gen_n, gen_m, gen_seed));
            return 0;
        }
        if (rule_cmd->parsed()) {
            const Profile profile = load_profile(rule_profile);
            const Lottery outcome = make_rule(rule_name, rule_scores)(profile);
            if (rule_json_flag) {
                json out;
                out["rule"] = rule_name;
                out["lottery"] = lottery_to_json(outcome, profile);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << rule_name << " lottery:\n";
                print_lottery_human(outcome, profile);
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            const Profile profile = load_profile(verify_profile);
            const RuleFn rule = make_rule(verify_rule, verify_scores);
            return run_verify(verify_axiom, profile, rule, verify_rule, verify_agent,
                              verify_alt, verify_domain, verify_json_flag);
        }
        if (table2->parsed()) {
            apply_threads(t2_threads);
            ExperimentSpec spec;
            spec.sizes = parse_sizes(t2_sizes);
            spec.trials = t2_trials;
            spec.seed = t2_seed;
            spec.rule = t2_rule;
            const auto cells = run_table2(spec, t2_serial ? Exec::serial : Exec::parallel);
            if (t2_json_flag) {
                json out = json::array();
                for (const auto& cell : cells)
                    out.push_back({{"n", cell.n},
                                   {"m", cell.m},
                                   {"trials", cell.trials},
                                   {"sd_efficient", cell.sd_efficient_count},
                                   {"elapsed_seconds", cell.elapsed_seconds}});
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "sd-efficient outcomes out of " << t2_trials
                          << " random profiles per cell (rule: " << t2_rule << ")\n";
                std::cout << "  m\\n";
                std::vector<int> ns, ms;
                for (const auto& cell : cells) {
                    if (std::find(ns.begin(), ns.end(), cell.n) == ns.end()) ns.push_back(cell.n);
                    if (std::find(ms.begin(), ms.end(), cell.m) == ms.end()) ms.push_back(cell.m);
                }
                for (int n : ns) std::cout << "\t" << n;
                std::cout << "\n";
                for (int m : ms) {
                    std::cout << "  " << m;
                    for (int n : ns)
                        for (const auto& cell : cells)
                            if (cell.n == n && cell.m == m)
                                std::cout << "\t" << cell.sd_efficient_count;
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (exhaustive->parsed()) {
            apply_threads(ex_threads);
            const auto started = std::chrono::steady_clock::now();
            const std::uint64_t dominated = exhaustive_rmec_efficiency(
                ex_n, ex_m, ex_serial ? Exec::serial : Exec::parallel, ex_budget);
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                    .count();
            if (ex_json_flag) {
                json out{{"n", ex_n},
                         {"m", ex_m},
                         {"sd_dominated_profiles", dominated},
                         {"elapsed_seconds", elapsed}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "n=" << ex_n << " m=" << ex_m << ": " << dominated
                          << " profiles with an SD-dominated RMEC outcome ("
                          << elapsed << " s)\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
