#pragma once

#include <string>
#include <vector>

#include "muskatlab/estimator.hpp"
#include "muskatlab/evolution.hpp"
#include "muskatlab/grid.hpp"

namespace muskat {

// Field dump schema: {"L": half_length, "N": samples, "samples": [...]}.
// Doubles round-trip bit-exactly (shortest-representation printing).
std::string field_to_json(const RealField& f);
RealField field_from_json(const std::string& text);
void dump_field(const RealField& f, const std::string& path);
RealField load_field(const std::string& path);

std::string snapshots_to_csv(const std::vector<SimState>& states);
std::string energy_to_csv(const EnergyReport& report);
std::string cauchy_to_csv(const std::vector<CauchyRow>& rows);
std::string stability_to_csv(const StabilityReport& report);

std::string report_to_json(const EstimateReport& report);
std::string reports_to_json(const std::vector<EstimateReport>& reports);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace muskat
