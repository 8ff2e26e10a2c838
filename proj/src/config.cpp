#include "mcvd/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace mcvd::io {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> parts;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            parts.push_back(item);
        }
    }
    return parts;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("config error: line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& s, int line, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size() || !std::isfinite(v)) {
            fail(line, "malformed value for '" + key + "': " + s);
        }
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
        fail(line, "malformed value for '" + key + "': " + s);
    }
}

long long parse_int(const std::string& s, int line, const std::string& key) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        fail(line, "malformed value for '" + key + "': " + s);
    }
    return v;
}

std::vector<double> parse_double_list(const std::string& value, int line,
                                      const std::string& key, bool positive) {
    std::vector<double> out;
    for (const auto& item : split_list(value)) {
        const double v = parse_double(item, line, key);
        if (positive && v <= 0.0) {
            fail(line, "'" + key + "' must be positive, got " + item);
        }
        out.push_back(v);
    }
    if (out.empty()) {
        fail(line, "empty value for '" + key + "'");
    }
    return out;
}

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ExperimentPlan parse_config(const std::string& text) {
    ExperimentPlan plan;
    std::stringstream ss(text);
    std::string raw;
    int line_no = 0;
    bool have_scenario = false;
    while (std::getline(ss, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(line_no, "expected 'key = value', got: " + trim(raw));
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) {
            fail(line_no, "empty value for '" + key + "'");
        }

        if (key == "scenario") {
            plan.scenarios.clear();
            for (const auto& name : split_list(value)) {
                const auto s = engine::scenario_from_name(name);
                if (!s) {
                    fail(line_no, "unknown scenario '" + name + "'");
                }
                plan.scenarios.push_back(*s);
            }
            if (plan.scenarios.empty()) {
                fail(line_no, "empty value for 'scenario'");
            }
            have_scenario = true;
        } else if (key == "d") {
            plan.distances = parse_double_list(value, line_no, key, true);
        } else if (key == "r_enz") {
            plan.enzyme_radii = parse_double_list(value, line_no, key, true);
        } else if (key == "t_s") {
            plan.symbol_periods = parse_double_list(value, line_no, key, true);
        } else if (key == "half_life") {
            plan.half_lives = parse_double_list(value, line_no, key, true);
        } else if (key == "D") {
            plan.base.diffusion = parse_double(value, line_no, key);
            if (plan.base.diffusion <= 0.0) fail(line_no, "'D' must be positive");
        } else if (key == "r_r") {
            plan.base.rx_radius = parse_double(value, line_no, key);
            if (plan.base.rx_radius <= 0.0) fail(line_no, "'r_r' must be positive");
        } else if (key == "delta_t") {
            plan.base.time_step = parse_double(value, line_no, key);
            if (plan.base.time_step <= 0.0) fail(line_no, "'delta_t' must be positive");
        } else if (key == "molecules") {
            plan.base.molecules_per_symbol = parse_int(value, line_no, key);
            if (plan.base.molecules_per_symbol <= 0) {
                fail(line_no, "'molecules' must be positive");
            }
        } else if (key == "t_end") {
            plan.base.t_end = parse_double(value, line_no, key);
            if (plan.base.t_end <= 0.0) fail(line_no, "'t_end' must be positive");
        } else if (key == "replications") {
            const auto reps = parse_int(value, line_no, key);
            if (reps < 1) fail(line_no, "'replications' must be >= 1");
            plan.base.replications = static_cast<int>(reps);
        } else if (key == "seed") {
            plan.base.master_seed = static_cast<std::uint64_t>(parse_int(value, line_no, key));
        } else if (key == "bin_width") {
            plan.base.signal_bin_width = parse_double(value, line_no, key);
            if (plan.base.signal_bin_width <= 0.0) fail(line_no, "'bin_width' must be positive");
        } else if (key == "everywhere_radius") {
            plan.base.everywhere_radius = parse_double(value, line_no, key);
            if (plan.base.everywhere_radius <= 0.0) {
                fail(line_no, "'everywhere_radius' must be positive");
            }
        } else if (key == "bits") {
            plan.base.bit_sequence.clear();
            for (char c : value) {
                if (c == '0' || c == '1') {
                    plan.base.bit_sequence.push_back(c - '0');
                } else {
                    fail(line_no, "'bits' must be a string of 0s and 1s");
                }
            }
        } else if (key == "threads") {
            const auto t = parse_int(value, line_no, key);
            if (t < 1) fail(line_no, "'threads' must be >= 1");
            plan.threads = static_cast<int>(t);
        } else if (key == "out") {
            plan.out_dir = value;
        } else if (key == "dump_hits") {
            if (value == "true" || value == "1") {
                plan.dump_hits = true;
            } else if (value == "false" || value == "0") {
                plan.dump_hits = false;
            } else {
                fail(line_no, "malformed value for 'dump_hits': " + value);
            }
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }
    if (!have_scenario) {
        throw ConfigError("config error: scenario missing");
    }

    // Base fields track the first value of each sweep axis so a plan is a
    // valid single config as well.
    plan.base.scenario = plan.scenarios.front();
    if (!plan.distances.empty()) plan.base.distance = plan.distances.front();
    if (!plan.enzyme_radii.empty()) plan.base.enzyme_radius = plan.enzyme_radii.front();
    if (!plan.symbol_periods.empty()) plan.base.symbol_period = plan.symbol_periods.front();
    if (!plan.half_lives.empty()) plan.base.unit_half_life = plan.half_lives.front();
    if (plan.base.symbol_period > plan.base.t_end) {
        throw ConfigError("config error: 't_s' must not exceed 't_end'");
    }
    return plan;
}

std::string render_config(const ExperimentPlan& plan) {
    std::ostringstream out;
    auto list = [&out](const char* key, const std::vector<double>& values) {
        if (values.empty()) {
            return;
        }
        out << key << " = ";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out << ",";
            out << format_g(values[i]);
        }
        out << "\n";
    };
    out << "scenario = ";
    for (std::size_t i = 0; i < plan.scenarios.size(); ++i) {
        if (i) out << ",";
        out << engine::scenario_name(plan.scenarios[i]);
    }
    out << "\n";
    list("d", plan.distances);
    list("r_enz", plan.enzyme_radii);
    list("t_s", plan.symbol_periods);
    list("half_life", plan.half_lives);
    out << "D = " << format_g(plan.base.diffusion) << "\n";
    out << "r_r = " << format_g(plan.base.rx_radius) << "\n";
    out << "delta_t = " << format_g(plan.base.time_step) << "\n";
    out << "molecules = " << plan.base.molecules_per_symbol << "\n";
    out << "t_end = " << format_g(plan.base.t_end) << "\n";
    out << "replications = " << plan.base.replications << "\n";
    out << "seed = " << plan.base.master_seed << "\n";
    out << "bin_width = " << format_g(plan.base.signal_bin_width) << "\n";
    out << "everywhere_radius = " << format_g(plan.base.everywhere_radius) << "\n";
    if (!plan.base.bit_sequence.empty()) {
        out << "bits = ";
        for (int b : plan.base.bit_sequence) out << b;
        out << "\n";
    }
    out << "threads = " << plan.threads << "\n";
    out << "out = " << plan.out_dir << "\n";
    out << "dump_hits = " << (plan.dump_hits ? "true" : "false") << "\n";
    return out.str();
}

bool operator==(const ExperimentPlan& a, const ExperimentPlan& b) {
    const auto& x = a.base;
    const auto& y = b.base;
    return a.scenarios == b.scenarios && a.distances == b.distances &&
           a.enzyme_radii == b.enzyme_radii && a.symbol_periods == b.symbol_periods &&
           a.half_lives == b.half_lives && a.out_dir == b.out_dir &&
           a.threads == b.threads && a.dump_hits == b.dump_hits &&
           x.diffusion == y.diffusion && x.rx_radius == y.rx_radius &&
           x.enzyme_radius == y.enzyme_radius && x.distance == y.distance &&
           x.molecules_per_symbol == y.molecules_per_symbol &&
           x.symbol_period == y.symbol_period && x.t_end == y.t_end &&
           x.unit_half_life == y.unit_half_life && x.time_step == y.time_step &&
           x.scenario == y.scenario && x.bit_sequence == y.bit_sequence &&
           x.replications == y.replications && x.master_seed == y.master_seed &&
           x.signal_bin_width == y.signal_bin_width &&
           x.everywhere_radius == y.everywhere_radius;
}

}  // namespace mcvd::io
