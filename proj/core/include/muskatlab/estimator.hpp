#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "muskatlab/grid.hpp"

namespace muskat {

struct Localization {
    bool enabled = false;
    double inner_frac = 0.25;  // plateau half-width as a fraction of L
    double outer_frac = 0.5;   // support half-width as a fraction of L
};

struct EnsembleSpec {
    Grid grid;
    std::uint64_t seed = 1;
    int count = 20;
    double beta = 1.7;   // |u_k| ~ k^{-beta}; beta > 1/2 keeps sample H^1 tame
    double k_max = 0.0;  // 0 -> largest wavenumber with index <= N/3
    double amplitude = 0.5;
    Localization localization;

    int max_mode_index() const;
    void validate() const;
};

// Deterministic rough sample: uniform phases and jittered magnitudes from a
// counter-based generator keyed by (seed, index, mode); mean removed after the
// localization envelope is applied.
RealField random_field(const EnsembleSpec& spec, int index);

enum class CheckId {
    LowFreq,
    Lipschitz,
    Remainder,
    RemainderHsum,
    DriftHolder,
    Commutator,
    ParaRemainder,
    Kpv,
    Product,
    Composition,
    HilbertComm,
};

std::string to_string(CheckId id);
CheckId check_id_from_string(const std::string& name);
std::vector<CheckId> all_checks();

struct CheckParams {
    double eps = 0.25;       // in (0, 1/2)
    double nu = 0.2;         // drift Holder exponent, in (0, eps); also (theta, 1)
    double theta = 0.1;      // negative Sobolev index, in (0, nu)
    double delta = 0.25;     // Lipschitz-continuity gap, in [0, 1/2)
    double sigma = 1.5;      // composition target index, in (1, 2)
    double s_product = 0.5;  // product-rule index, in (0, 1)

    void validate(CheckId id) const;
};

// LHS/RHS ratio of one inequality on one sample pair; throws DegenerateRhsError
// when the RHS falls below 1e-14.  Single-field checks ignore b.
double check_ratio(CheckId id, const RealField& a, const RealField& b, const CheckParams& params);

struct EstimateReport {
    std::string id;
    CheckParams params;
    Grid grid;
    std::uint64_t seed = 0;
    std::vector<double> ratios;
    double max = 0.0;
    double median = 0.0;
    double p90 = 0.0;
    int degenerate_count = 0;
    bool refinement_flag = false;
    std::string resolution_tag;
};

EstimateReport check(CheckId id, const EnsembleSpec& spec, const CheckParams& params);

struct CampaignConfig {
    EnsembleSpec ensemble;
    CheckParams params;
    std::vector<CheckId> checks;
};

// Runs every listed check at N and 2N; a check whose max ratio grows by more
// than 2x under refinement gets its refinement_flag set on both reports.
std::vector<EstimateReport> campaign(const CampaignConfig& cfg);

}  // namespace muskat
