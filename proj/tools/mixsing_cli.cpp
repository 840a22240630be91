#include "mixsing/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace mixsing;

namespace {

IVec parse_weight(const std::string& s) {
    IVec w;
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad weight '" + s + "'");
        w.push_back(std::stoll(tok));
    }
    return w;
}

std::uint64_t parse_seed(const std::string& s) {
    if (s == "random") {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    return std::stoull(s);
}

void emit(const Json& j, bool pretty) {
    if (!pretty) {
        std::cout << j.dump() << "\n";
        return;
    }
    if (j.contains("error")) std::cout << "error in " << j["error"]["stage"].get<std::string>() << ": "
                                       << j["error"]["message"].get<std::string>() << "\n";
    std::cout << "f = " << j.value("canonical", "") << "\n";
    if (j.contains("invariants")) {
        const Json& ci = j["invariants"];
        for (const auto& r : ci["per_face"])
            std::cout << "  face " << r["face_id"] << ": " << r["face_function"].get<std::string>() << "  m=" << r["m"]
                      << " r*=" << r["r_star"] << " chi(F*)=" << r["chi_F_star"] << " [" << r["route"].get<std::string>()
                      << "]\n";
        std::cout << "lkn = " << ci["lkn"] << "\nchi(F) = " << ci["chi_F"] << "\nmu = " << ci["mu"]
                  << "\nzeta = " << ci["zeta"]["text"].get<std::string>() << "\n";
    }
    if (j.contains("verdict")) std::cout << "verdict: " << (j["verdict"].is_string() ? j["verdict"].get<std::string>() : j["verdict"]["kind"].get<std::string>()) << "\n";
    if (j.contains("lkn") && !j.contains("invariants")) std::cout << "lkn = " << j["lkn"] << "\n";
    if (j.contains("zeta") && j["zeta"].contains("text") && !j.contains("invariants")) std::cout << "zeta = " << j["zeta"]["text"].get<std::string>() << "\n";
    if (j.contains("vertices")) std::cout << j.dump(2) << "\n";
    if (j.contains("newton") && !j.contains("invariants")) std::cout << j["newton"].dump(2) << "\n";
    if (j.contains("warnings"))
        for (const auto& w : j["warnings"]) std::cout << "warning: " << w.get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mixed polynomial singularities: Newton boundary, non-degeneracy, link and Milnor fiber invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

    std::string expr, weight_s, mode = "nondeg", seed_s = "0", plot_path;
    int starts = 64, iters = 500, steps = 2048;
    bool plot = false;

    auto* newton = app.add_subcommand("newton", "Newton boundary data");
    newton->add_option("expr", expr, "Mixed polynomial")->required();
    newton->add_option("--weight", weight_s, "Face query for weight p1,p2,...");
    newton->add_flag("--plot-data", plot, "Print the vertex polyline as CSV");

    auto* an = app.add_subcommand("analyze", "Full pipeline for n=2");
    an->add_option("expr", expr)->required();
    an->add_option("--seed", seed_s, "Integer seed or 'random'");
    an->add_option("--starts", starts);
    an->add_option("--iters", iters);
    an->add_option("--steps", steps);

    auto* pr = app.add_subcommand("probe", "Non-degeneracy prober");
    pr->add_option("expr", expr)->required();
    pr->add_option("--mode", mode)->check(CLI::IsMember({"nondeg", "strong", "true"}));
    pr->add_option("--seed", seed_s, "Integer seed or 'random'");
    pr->add_option("--starts", starts);
    pr->add_option("--iters", iters);
    pr->add_option("--weight", weight_s, "Probe a single face");

    auto* lk = app.add_subcommand("lkn", "Link component count");
    lk->add_option("expr", expr)->required();
    lk->add_option("--steps", steps);
    lk->add_option("--seed", seed_s, "Integer seed or 'random'");

    auto* fa = app.add_subcommand("fan", "Regular fan of the dual Newton diagram");
    fa->add_option("expr", expr)->required();

    auto* ze = app.add_subcommand("zeta", "Monodromy zeta function");
    ze->add_option("expr", expr)->required();
    ze->add_option("--steps", steps);
    ze->add_option("--seed", seed_s, "Integer seed or 'random'");

    CLI11_PARSE(app, argc, argv);

    MixedPolynomial f;
    try {
        f = parse(expr);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    Json out = envelope(cmd, expr, f);
    std::string stage = cmd;
    try {
        std::uint64_t seed = parse_seed(seed_s);
        ProbeConfig cfg;
        cfg.starts = starts;
        cfg.iters = iters;
        cfg.seed = seed;
        InvariantOptions opt;
        opt.steps = steps;
        opt.seed = seed;
        std::optional<IVec> weight;
        if (!weight_s.empty()) weight = parse_weight(weight_s);
        if (cmd == "newton") {
            if (plot) {
                std::cout << plot_data_csv(f);
                return 0;
            }
            out["newton"] = newton_report(f, weight);
        } else if (cmd == "analyze") {
            AnalyzeResult r = analyze(expr, f, cfg, opt);
            emit(r.report, pretty);
            if (r.error) {
                std::cerr << r.error->stage << ": " << r.error->message << "\n";
                return r.error->exit_code;
            }
            return 0;
        } else if (cmd == "probe") {
            CheckMode m = mode == "strong" ? CheckMode::strong : mode == "true" ? CheckMode::true_nd : CheckMode::nondeg;
            out.update(probe_report(f, m, cfg, weight));
        } else if (cmd == "lkn") {
            out.update(lkn_report(f, steps, seed));
        } else if (cmd == "fan") {
            out.update(fan_report(f));
        } else if (cmd == "zeta") {
            out.update(zeta_report(f, opt));
        }
    } catch (const NonConvergence& e) {
        std::cerr << stage << ": " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << stage << ": " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << stage << ": " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << stage << ": " << e.what() << "\n";
        return 2;
    }
    emit(out, pretty);
    return 0;
}
