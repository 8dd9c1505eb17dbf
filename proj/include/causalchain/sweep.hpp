#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace causalchain {

enum class Backend { Dense, Fermion, Auto };
enum class OutputFormat { Csv, Json };

struct SweepConfig {
    int n_sites = 4;
    double theta_min = 0.0;
    double theta_max = 1.5707963267948966;  // pi/2
    int steps = 65;
    Backend backend = Backend::Auto;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path;  // empty = stdout
};

struct SweepRecord {
    double theta;
    int n_sites;
    double m_x;
    double c_zz;
    double p_left;
    double p_right;
    double p_total;
    double k_avg;
    double m_z_thermo;
    double o_str_thermo;
    double o_str_finite;
    double classical_bound;  // 0.75
};

std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// CSV: header row, comma delimiter, '.' decimal, 15 significant digits.
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);

/// JSON: array of flat objects with the CSV field names as keys.
void write_json(std::ostream& out, const std::vector<SweepRecord>& records);

}  // namespace causalchain
