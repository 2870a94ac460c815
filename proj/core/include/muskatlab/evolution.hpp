#pragma once

#include <limits>
#include <string>
#include <vector>

#include "muskatlab/finite_diff.hpp"
#include "muskatlab/grid.hpp"

namespace muskat {

enum class Stepper { Etd1, EtdRk2 };

struct InitialProfile {
    std::string kind = "gaussian";  // gaussian | packet | sine | windowed_linear | zero
    double amplitude = 0.5;
    double width = 0.8;
    double wavenumber = 3.0;
    double slope = 0.5;
};

RealField make_profile(const Grid& g, const InitialProfile& p);

struct SimConfig {
    Grid grid;
    double cutoff = std::numeric_limits<double>::infinity();  // galerkin cutoff, inf = none
    double s = 1.6;                                           // energy index, in (3/2, 2)
    double dt = 0.0;                                          // 0 -> 0.5 / cutoff
    double t_end = 0.5;
    Stepper stepper = Stepper::EtdRk2;
    InitialProfile profile;
    int snapshot_every = 1;  // cadence in steps
    bool nonlinear = true;
    double blowup_factor = 1e3;

    double epsilon() const { return s - 1.5; }
    double effective_dt() const;
    void validate() const;
};

struct Diagnostics {
    double h1 = 0.0;
    double hs = 0.0;
    double hs_half = 0.0;
    double lipschitz = 0.0;
    double linf = 0.0;
    double mean = 0.0;
    double dissipation = 0.0;  // h * sum (Lambda^{s+1/2} f)^2 / (1 + f_x^2)
};

struct SimState {
    double t = 0.0;
    RealField f;
    Diagnostics diag;
};

Diagnostics diagnose(const RealField& f, double s);
SimState make_state(double t, const RealField& f, const SimConfig& cfg);

// One ETD step.  Throws BlowupError if the H^s norm exceeds hs_ceiling or the
// field stops being finite.
SimState step(const SimState& state, const SimConfig& cfg,
              double hs_ceiling = std::numeric_limits<double>::infinity());

// Integrates from project(f0, cutoff) to t_end, returning snapshots every
// snapshot_every steps (always including the initial and final states).
std::vector<SimState> evolve(const RealField& f0, const SimConfig& cfg);
std::vector<SimState> evolve(const SimConfig& cfg);

struct EnergyRow {
    double t = 0.0;
    double hs_sq = 0.0;
    double ddt_hs_sq = 0.0;  // centered difference of hs_sq over snapshots
    double hs_half_sq = 0.0;
    double dissipation = 0.0;
    double lipschitz = 0.0;
};

struct EnergyReport {
    std::vector<EnergyRow> rows;  // interior snapshots
    // smallest constant with (1/2) d/dt ||f||_{H^s}^2
    //   + ||f||_{H^{s+1/2}}^2 / (4 (1 + K^2)) <= F ||f||_{H^s}^2 on every row
    double f_measured = 0.0;
};

EnergyReport energy_report(const std::vector<SimState>& states);

struct CauchyRow {
    double n_low = 0.0;
    double n_high = 0.0;
    double sup_l2 = 0.0;
    double sup_hsp = 0.0;
    double sup_total = 0.0;  // sup over snapshot times of (L2 + H^{s'}) difference
};

std::vector<CauchyRow> cauchy_study(const RealField& f0, const std::vector<double>& cutoffs,
                                    double s_prime, const SimConfig& base);

struct StabilityReport {
    std::vector<double> times;
    std::vector<double> diff_hhalf;  // H^{1/2} norm of the trajectory difference
    double initial = 0.0;
    double c_measured = 0.0;  // max over t > 0 of log(d(t)/d(0)) / t; 0 if d(0) = 0
};

StabilityReport stability_study(const RealField& f0, const RealField& perturbation, double eps_amp,
                                const SimConfig& cfg);

}  // namespace muskat
