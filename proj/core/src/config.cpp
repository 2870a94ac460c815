#include "muskatlab/config.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "muskatlab/errors.hpp"

namespace muskat {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& message) {
    throw ConfigError(origin + ":" + std::to_string(line) + ": " + message);
}

}  // namespace

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const size_t cut = raw.find_first_of("#;");
        std::string s = trim(cut == std::string::npos ? raw : raw.substr(0, cut));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail(origin, line, "unterminated section header");
            section = lower(trim(s.substr(1, s.size() - 2)));
            if (section.empty()) fail(origin, line, "empty section name");
            continue;
        }
        const size_t eq = s.find('=');
        if (eq == std::string::npos) fail(origin, line, "expected key = value");
        const std::string key = lower(trim(s.substr(0, eq)));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail(origin, line, "empty key");
        if (section.empty()) fail(origin, line, "key before any [section]");
        auto& sec = cfg.sections_[section];
        if (sec.count(key)) fail(origin, line, "duplicate key '" + key + "'");
        sec[key] = Entry{value, line};
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

const Config::Entry* Config::find(const std::string& section, const std::string& key) const {
    auto s = sections_.find(lower(section));
    if (s == sections_.end()) return nullptr;
    auto k = s->second.find(lower(key));
    if (k == s->second.end()) return nullptr;
    consumed_.insert(lower(section) + "." + lower(key));
    return &k->second;
}

bool Config::has(const std::string& section, const std::string& key) const {
    auto s = sections_.find(lower(section));
    return s != sections_.end() && s->second.count(lower(key)) > 0;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    const Entry* e = find(section, key);
    return e ? e->text : fallback;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    if (lower(e->text) == "inf") return std::numeric_limits<double>::infinity();
    try {
        size_t used = 0;
        const double v = std::stod(e->text, &used);
        if (used != e->text.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        fail(origin_, e->line, "expected a number for '" + key + "', got '" + e->text + "'");
    }
}

int Config::get_int(const std::string& section, const std::string& key, int fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    try {
        size_t used = 0;
        const long v = std::stol(e->text, &used);
        if (used != e->text.size()) throw std::invalid_argument("trailing junk");
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
            throw std::out_of_range("int");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        fail(origin_, e->line, "expected an integer for '" + key + "', got '" + e->text + "'");
    }
}

std::uint64_t Config::get_u64(const std::string& section, const std::string& key,
                              std::uint64_t fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    try {
        size_t used = 0;
        const unsigned long long v = std::stoull(e->text, &used);
        if (used != e->text.size()) throw std::invalid_argument("trailing junk");
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        fail(origin_, e->line, "expected an unsigned integer for '" + key + "'");
    }
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    const std::string v = lower(e->text);
    if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
    if (v == "false" || v == "no" || v == "off" || v == "0") return false;
    fail(origin_, e->line, "expected a boolean for '" + key + "', got '" + e->text + "'");
}

std::vector<double> Config::get_doubles(const std::string& section, const std::string& key,
                                        const std::vector<double>& fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    std::vector<double> out;
    for (const std::string& item : split_list(e->text)) {
        try {
            size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            fail(origin_, e->line, "expected a number list for '" + key + "'");
        }
    }
    return out;
}

std::vector<std::string> Config::get_strings(const std::string& section, const std::string& key,
                                             const std::vector<std::string>& fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    return split_list(e->text);
}

void Config::finish() const {
    for (const auto& [section, keys] : sections_) {
        for (const auto& [key, entry] : keys) {
            if (!consumed_.count(section + "." + key))
                fail(origin_, entry.line, "unknown key '" + section + "." + key + "'");
        }
    }
}

namespace {

Stepper parse_stepper(const std::string& name, const std::string& origin) {
    const std::string v = lower(name);
    if (v == "etd1") return Stepper::Etd1;
    if (v == "etdrk2") return Stepper::EtdRk2;
    throw ConfigError(origin + ": unknown stepper '" + name + "' (expected etd1 or etdrk2)");
}

std::vector<CheckId> parse_checks(const std::vector<std::string>& names) {
    std::vector<CheckId> out;
    for (const std::string& n : names) {
        if (lower(n) == "all") return all_checks();
        out.push_back(check_id_from_string(n));
    }
    return out;
}

RunConfig build_run_config(const Config& cfg, const std::string& origin) {
    RunConfig rc;

    const double half_length = cfg.get_double("grid", "half_length", std::numbers::pi);
    const int samples = cfg.get_int("grid", "samples", 1024);
    const Grid grid = Grid::make(half_length, samples);

    rc.sim.grid = grid;
    rc.sim.cutoff = cfg.get_double("sim", "cutoff", std::numeric_limits<double>::infinity());
    rc.sim.s = cfg.get_double("sim", "s", 1.6);
    rc.sim.dt = cfg.get_double("sim", "dt", 0.0);
    rc.sim.t_end = cfg.get_double("sim", "t_end", 0.5);
    rc.sim.stepper = parse_stepper(cfg.get_string("sim", "stepper", "etdrk2"), origin);
    rc.sim.snapshot_every = cfg.get_int("sim", "snapshot_every", 1);
    rc.sim.nonlinear = cfg.get_bool("sim", "nonlinear", true);
    rc.sim.blowup_factor = cfg.get_double("sim", "blowup_factor", 1e3);
    rc.sim.profile.kind = cfg.get_string("sim", "profile", "gaussian");
    rc.sim.profile.amplitude = cfg.get_double("sim", "amplitude", 0.5);
    rc.sim.profile.width = cfg.get_double("sim", "width", 0.8);
    rc.sim.profile.wavenumber = cfg.get_double("sim", "wavenumber", 3.0);
    rc.sim.profile.slope = cfg.get_double("sim", "slope", 0.5);

    rc.ensemble.grid = grid;
    rc.ensemble.seed = cfg.get_u64("ensemble", "seed", 1);
    rc.ensemble.count = cfg.get_int("ensemble", "count", 20);
    rc.ensemble.beta = cfg.get_double("ensemble", "beta", 1.7);
    rc.ensemble.k_max = cfg.get_double("ensemble", "k_max", 0.0);
    rc.ensemble.amplitude = cfg.get_double("ensemble", "amplitude", 0.5);
    rc.ensemble.localization.enabled = cfg.get_bool("ensemble", "localize", true);
    rc.ensemble.localization.inner_frac = cfg.get_double("ensemble", "inner_frac", 0.25);
    rc.ensemble.localization.outer_frac = cfg.get_double("ensemble", "outer_frac", 0.5);

    rc.params.eps = cfg.get_double("check", "eps", 0.25);
    rc.params.nu = cfg.get_double("check", "nu", 0.2);
    rc.params.theta = cfg.get_double("check", "theta", 0.1);
    rc.params.delta = cfg.get_double("check", "delta", 0.25);
    rc.params.sigma = cfg.get_double("check", "sigma", 1.5);
    rc.params.s_product = cfg.get_double("check", "s_product", 0.5);
    rc.checks = parse_checks(cfg.get_strings("check", "checks", {"all"}));

    rc.convergence.cutoffs =
        cfg.get_doubles("convergence", "cutoffs", {32.0, 64.0, 128.0, 256.0});
    rc.convergence.s_prime = cfg.get_double("convergence", "s_prime", 1.1);

    rc.verify.perturb_rule = cfg.get_double("verify", "perturb_rule", 0.0);
    rc.verify.ensemble_count = cfg.get_int("verify", "ensemble_count", 10);

    rc.output.dir = cfg.get_string("output", "dir", "");
    rc.output.prefix = cfg.get_string("output", "prefix", "run");

    cfg.finish();

    // Range validation with the same preconditions the modules enforce.
    rc.sim.validate();
    rc.ensemble.validate();
    for (CheckId id : rc.checks) rc.params.validate(id);
    if (rc.convergence.cutoffs.size() < 2)
        throw ConfigError(origin + ": convergence needs at least two cutoffs");
    if (!(rc.convergence.s_prime > 0.0 && rc.convergence.s_prime < rc.sim.s))
        throw ConfigError(origin + ": s_prime must lie in (0, s)");
    if (rc.verify.ensemble_count < 1)
        throw ConfigError(origin + ": verify.ensemble_count must be >= 1");
    return rc;
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
    return build_run_config(Config::parse_file(path), path);
}

RunConfig run_config_from_string(const std::string& text, const std::string& origin) {
    return build_run_config(Config::parse_string(text, origin), origin);
}

}  // namespace muskat
