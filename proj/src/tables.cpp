#include "mcvd/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <tuple>

namespace mcvd::io {

namespace {

std::ofstream open(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("io error: cannot write '" + path + "'");
    }
    return out;
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_signal_csv(const std::string& path, const metrics::ReceivedSignal& signal) {
    auto out = open(path);
    out << "bin_start_s,bin_end_s,mean_count,std_count\n";
    for (std::size_t i = 0; i + 1 < signal.bin_edges.size(); ++i) {
        out << format_number(signal.bin_edges[i]) << ','
            << format_number(signal.bin_edges[i + 1]) << ','
            << format_number(signal.mean_counts[i]) << ','
            << format_number(signal.std_counts[i]) << '\n';
    }
}

void write_itr_csv(const std::string& path, const std::vector<metrics::ItrResult>& rows) {
    auto out = open(path);
    out << "scenario,d_um,r_enz_um,t_s_s,half_life_s,itr_mean,itr_std,replications\n";
    for (const auto& row : rows) {
        out << engine::scenario_name(row.scenario) << ',' << format_number(row.distance)
            << ',' << format_number(row.enzyme_radius) << ','
            << format_number(row.symbol_period) << ','
            << format_number(row.unit_half_life) << ',' << format_number(row.itr_mean)
            << ',' << format_number(row.itr_std) << ',' << row.replications << '\n';
    }
}

void write_hits_csv(const std::string& path,
                    const std::vector<engine::HitRecordSet>& replications) {
    auto out = open(path);
    out << "replication,hit_time_s,x_um,y_um,z_um\n";
    for (const auto& rep : replications) {
        for (const auto& hit : rep.hits) {
            out << rep.replication_id << ',' << format_number(hit.time) << ','
                << format_number(hit.position.x) << ',' << format_number(hit.position.y)
                << ',' << format_number(hit.position.z) << '\n';
        }
    }
}

void write_optimum_csv(const std::string& path, const std::vector<OptimumRow>& rows) {
    auto out = open(path);
    out << "d_um,t_s_s,r_enz_star_um,itr_min\n";
    for (const auto& row : rows) {
        out << format_number(row.distance) << ',' << format_number(row.symbol_period)
            << ',' << format_number(row.r_enz_star) << ',' << format_number(row.itr_min)
            << '\n';
    }
}

void sort_canonically(std::vector<metrics::ItrResult>& rows) {
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(static_cast<int>(a.scenario), a.distance, a.enzyme_radius,
                               a.symbol_period, a.unit_half_life) <
               std::make_tuple(static_cast<int>(b.scenario), b.distance, b.enzyme_radius,
                               b.symbol_period, b.unit_half_life);
    });
}

}  // namespace mcvd::io
