#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "muskatlab/config.hpp"
#include "muskatlab/errors.hpp"
#include "muskatlab/estimator.hpp"
#include "muskatlab/evolution.hpp"
#include "muskatlab/io.hpp"
#include "muskatlab/norms.hpp"
#include "muskatlab/parallel.hpp"
#include "muskatlab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBlowup = 2;
constexpr int kExitIdentity = 3;
constexpr int kExitRefinement = 4;

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    int threads = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

std::string resolve_out_dir(const CommonOpts& opts, const muskat::RunConfig& rc) {
    if (!opts.out_dir.empty()) return opts.out_dir;
    if (!rc.output.dir.empty()) return rc.output.dir;
    if (const char* env = std::getenv("MUSKATLAB_OUT"); env && *env) return env;
    return ".";
}

std::string out_path(const std::string& dir, const muskat::RunConfig& rc,
                     const std::string& suffix) {
    return (std::filesystem::path(dir) / (rc.output.prefix + "_" + suffix)).string();
}

muskat::RunConfig load(const CommonOpts& opts) {
    if (opts.config_path.empty()) throw muskat::ConfigError("--config is required");
    muskat::RunConfig rc = muskat::load_run_config(opts.config_path);
    if (opts.seed_set) rc.ensemble.seed = opts.seed;
    return rc;
}

int cmd_simulate(const CommonOpts& opts) {
    const muskat::RunConfig rc = load(opts);
    const std::string dir = resolve_out_dir(opts, rc);
    const muskat::RealField f0 = muskat::make_profile(rc.sim.grid, rc.sim.profile);
    muskat::dump_field(f0, out_path(dir, rc, "initial.json"));
    try {
        const std::vector<muskat::SimState> states = muskat::evolve(f0, rc.sim);
        muskat::write_text(out_path(dir, rc, "snapshots.csv"), muskat::snapshots_to_csv(states));
        muskat::dump_field(states.back().f, out_path(dir, rc, "final.json"));
        if (states.size() >= 3) {
            const muskat::EnergyReport energy = muskat::energy_report(states);
            muskat::write_text(out_path(dir, rc, "energy.csv"), muskat::energy_to_csv(energy));
            std::cout << "measured energy constant F = " << energy.f_measured << "\n";
        }
        const muskat::SimState& last = states.back();
        std::cout << "t = " << last.t << "  Hs = " << last.diag.hs << "  Linf = " << last.diag.linf
                  << "  mean = " << last.diag.mean << "\n";
        std::cout << "wrote " << states.size() << " snapshots to " << dir << "\n";
        return kExitOk;
    } catch (const muskat::BlowupError& e) {
        muskat::write_text(out_path(dir, rc, "blowup.json"),
                           nlohmann::json{{"blowup", true}, {"time", e.time}}.dump(2));
        std::cerr << "blowup detected at t = " << e.time << "\n";
        return kExitBlowup;
    }
}

int cmd_verify(const CommonOpts& opts) {
    const muskat::RunConfig rc = load(opts);
    const std::string dir = resolve_out_dir(opts, rc);
    const muskat::IdentitySuite suite = muskat::run_identity_suite(rc);
    muskat::write_text(out_path(dir, rc, "verify.json"), muskat::identity_suite_to_json(suite));
    for (const muskat::IdentityResult& r : suite.results) {
        std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << "  measured " << r.measured
                  << "  tolerance " << r.tolerance << "\n";
    }
    return suite.all_pass ? kExitOk : kExitIdentity;
}

int cmd_campaign(const CommonOpts& opts) {
    const muskat::RunConfig rc = load(opts);
    const std::string dir = resolve_out_dir(opts, rc);
    muskat::CampaignConfig cc;
    cc.ensemble = rc.ensemble;
    cc.params = rc.params;
    cc.checks = rc.checks;
    const std::vector<muskat::EstimateReport> reports = muskat::campaign(cc);
    muskat::write_text(out_path(dir, rc, "reports.json"), muskat::reports_to_json(reports));
    bool flagged = false;
    for (const muskat::EstimateReport& r : reports) {
        std::cout << r.id << " @ " << r.resolution_tag << "  max " << r.max << "  median "
                  << r.median << "  p90 " << r.p90 << "  degenerate " << r.degenerate_count
                  << (r.refinement_flag ? "  [refinement flag]" : "") << "\n";
        flagged = flagged || r.refinement_flag;
    }
    return flagged ? kExitRefinement : kExitOk;
}

int cmd_norms(const std::string& field_path, const std::vector<double>& sigmas) {
    const muskat::RealField f = muskat::load_field(field_path);
    nlohmann::json j;
    j["L"] = f.grid().half_length;
    j["N"] = f.grid().sample_count;
    j["linf"] = muskat::linf_norm(f);
    j["mean"] = f.mean();
    j["lipschitz"] = muskat::lipschitz_sup(f);
    nlohmann::json sob = nlohmann::json::object();
    for (double s : sigmas) sob[std::to_string(s)] = muskat::sobolev_norm(f, s);
    j["sobolev"] = sob;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_convergence(const CommonOpts& opts) {
    const muskat::RunConfig rc = load(opts);
    const std::string dir = resolve_out_dir(opts, rc);
    const muskat::RealField f0 = muskat::make_profile(rc.sim.grid, rc.sim.profile);
    const std::vector<muskat::CauchyRow> rows =
        muskat::cauchy_study(f0, rc.convergence.cutoffs, rc.convergence.s_prime, rc.sim);
    muskat::write_text(out_path(dir, rc, "cauchy.csv"), muskat::cauchy_to_csv(rows));
    for (const muskat::CauchyRow& r : rows) {
        std::cout << "n " << r.n_low << " -> " << r.n_high << "  sup L2 " << r.sup_l2
                  << "  sup Hs' " << r.sup_hsp << "  total " << r.sup_total << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral laboratory for a singular-integral interface equation"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--threads", opts.threads, "worker threads (0 = logical cores)");

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* c = sub->add_option("--config", opts.config_path, "INI config path");
        if (needs_config) c->required();
        sub->add_option("--out", opts.out_dir, "output directory (overrides config)");
        sub->add_option("--seed", opts.seed, "ensemble seed override")
            ->each([&](const std::string&) { opts.seed_set = true; });
    };

    CLI::App* simulate = app.add_subcommand("simulate", "integrate the interface equation");
    add_common(simulate, true);
    CLI::App* verify = app.add_subcommand("verify", "run the deterministic identity suite");
    add_common(verify, true);
    CLI::App* campaign = app.add_subcommand("campaign", "run inequality-ratio ensembles");
    add_common(campaign, true);
    CLI::App* convergence = app.add_subcommand("convergence", "Galerkin cutoff Cauchy study");
    add_common(convergence, true);

    CLI::App* norms = app.add_subcommand("norms", "print norms of a dumped field");
    std::string field_path;
    std::vector<double> sigmas{0.0, 1.0};
    norms->add_option("field", field_path, "field dump JSON")->required();
    norms->add_option("--sigma", sigmas, "homogeneous Sobolev indices");

    CLI11_PARSE(app, argc, argv);
    muskat::set_thread_count(opts.threads);

    try {
        if (simulate->parsed()) return cmd_simulate(opts);
        if (verify->parsed()) return cmd_verify(opts);
        if (campaign->parsed()) return cmd_campaign(opts);
        if (convergence->parsed()) return cmd_convergence(opts);
        if (norms->parsed()) return cmd_norms(field_path, sigmas);
    } catch (const muskat::BlowupError& e) {
        std::cerr << "blowup detected at t = " << e.time << "\n";
        return kExitBlowup;
    } catch (const muskat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
