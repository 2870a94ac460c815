#include "muskatlab/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "muskatlab/errors.hpp"

namespace muskat {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string field_to_json(const RealField& f) {
    json j;
    j["L"] = f.grid().half_length;
    j["N"] = f.grid().sample_count;
    j["samples"] = f.samples();
    return j.dump();
}

RealField field_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw IoError("field dump is not valid JSON");
    if (!j.is_object() || !j.contains("L") || !j.contains("N") || !j.contains("samples"))
        throw IoError("field dump must be an object with keys L, N, samples");
    if (!j["L"].is_number() || !j["N"].is_number_integer() || !j["samples"].is_array())
        throw IoError("field dump has wrongly typed keys");
    const double half_length = j["L"].get<double>();
    const int n = j["N"].get<int>();
    std::vector<double> samples;
    samples.reserve(j["samples"].size());
    for (const auto& v : j["samples"]) {
        if (!v.is_number()) throw IoError("field samples must be numbers");
        samples.push_back(v.get<double>());
    }
    if (static_cast<int>(samples.size()) != n)
        throw IoError("field dump sample count disagrees with N");
    return RealField::from_samples(Grid::make(half_length, n), std::move(samples));
}

void dump_field(const RealField& f, const std::string& path) { write_text(path, field_to_json(f)); }

RealField load_field(const std::string& path) { return field_from_json(read_text(path)); }

std::string snapshots_to_csv(const std::vector<SimState>& states) {
    std::ostringstream out;
    out << "t,h1,hs,hs_half,lipschitz,linf,mean,dissipation\n";
    for (const SimState& s : states) {
        out << fmt(s.t) << ',' << fmt(s.diag.h1) << ',' << fmt(s.diag.hs) << ','
            << fmt(s.diag.hs_half) << ',' << fmt(s.diag.lipschitz) << ',' << fmt(s.diag.linf)
            << ',' << fmt(s.diag.mean) << ',' << fmt(s.diag.dissipation) << '\n';
    }
    return out.str();
}

std::string energy_to_csv(const EnergyReport& report) {
    std::ostringstream out;
    out << "t,hs_sq,ddt_hs_sq,hs_half_sq,dissipation,lipschitz\n";
    for (const EnergyRow& r : report.rows) {
        out << fmt(r.t) << ',' << fmt(r.hs_sq) << ',' << fmt(r.ddt_hs_sq) << ','
            << fmt(r.hs_half_sq) << ',' << fmt(r.dissipation) << ',' << fmt(r.lipschitz) << '\n';
    }
    return out.str();
}

std::string cauchy_to_csv(const std::vector<CauchyRow>& rows) {
    std::ostringstream out;
    out << "n_low,n_high,sup_l2,sup_hsp,sup_total\n";
    for (const CauchyRow& r : rows) {
        out << fmt(r.n_low) << ',' << fmt(r.n_high) << ',' << fmt(r.sup_l2) << ','
            << fmt(r.sup_hsp) << ',' << fmt(r.sup_total) << '\n';
    }
    return out.str();
}

std::string stability_to_csv(const StabilityReport& report) {
    std::ostringstream out;
    out << "t,diff_hhalf\n";
    for (size_t i = 0; i < report.times.size(); ++i)
        out << fmt(report.times[i]) << ',' << fmt(report.diff_hhalf[i]) << '\n';
    return out.str();
}

namespace {

json report_json(const EstimateReport& r) {
    json j;
    j["id"] = r.id;
    j["params"] = {{"eps", r.params.eps},     {"nu", r.params.nu},
                   {"theta", r.params.theta}, {"delta", r.params.delta},
                   {"sigma", r.params.sigma}, {"s_product", r.params.s_product}};
    j["grid"] = {{"L", r.grid.half_length}, {"N", r.grid.sample_count}};
    j["seed"] = r.seed;
    j["ratios"] = r.ratios;
    j["max"] = r.max;
    j["median"] = r.median;
    j["p90"] = r.p90;
    j["degenerate_count"] = r.degenerate_count;
    j["refinement_flag"] = r.refinement_flag;
    j["resolution"] = r.resolution_tag;
    return j;
}

}  // namespace

std::string report_to_json(const EstimateReport& report) { return report_json(report).dump(2); }

std::string reports_to_json(const std::vector<EstimateReport>& reports) {
    json arr = json::array();
    for (const EstimateReport& r : reports) arr.push_back(report_json(r));
    return arr.dump(2);
}

void write_text(const std::string& path, const std::string& text) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace muskat
