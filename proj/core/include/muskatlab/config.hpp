#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "muskatlab/estimator.hpp"
#include "muskatlab/evolution.hpp"

namespace muskat {

// Flat INI tree: [section] headers, key = value lines, '#'/';' comments.
// Typed getters mark keys consumed; finish() rejects anything left over, with
// the offending line number.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin);

    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    std::uint64_t get_u64(const std::string& section, const std::string& key,
                          std::uint64_t fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
    std::vector<double> get_doubles(const std::string& section, const std::string& key,
                                    const std::vector<double>& fallback) const;
    std::vector<std::string> get_strings(const std::string& section, const std::string& key,
                                         const std::vector<std::string>& fallback) const;

    void finish() const;  // throws ConfigError on unconsumed keys

  private:
    struct Entry {
        std::string text;
        int line = 0;
    };
    const Entry* find(const std::string& section, const std::string& key) const;

    std::string origin_;
    std::map<std::string, std::map<std::string, Entry>> sections_;
    mutable std::set<std::string> consumed_;
};

struct OutputConfig {
    std::string dir;  // empty -> --out flag, then MUSKATLAB_OUT, then "."
    std::string prefix = "run";
};

struct ConvergenceConfig {
    std::vector<double> cutoffs{32.0, 64.0, 128.0, 256.0};
    double s_prime = 1.1;
};

struct VerifyConfig {
    double perturb_rule = 0.0;  // relative weight perturbation; negative control
    int ensemble_count = 10;
};

struct RunConfig {
    SimConfig sim;  // sim.grid is the shared grid
    EnsembleSpec ensemble;
    CheckParams params;
    std::vector<CheckId> checks;
    ConvergenceConfig convergence;
    VerifyConfig verify;
    OutputConfig output;
};

// Parses and range-validates every section; unknown keys are errors.
RunConfig load_run_config(const std::string& path);
RunConfig run_config_from_string(const std::string& text, const std::string& origin);

}  // namespace muskat
