#include "causalchain/diagnostics.hpp"

#include <cmath>

#include "causalchain/errors.hpp"
#include "causalchain/fermion.hpp"
#include "causalchain/sweep.hpp"

namespace causalchain {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double mz_thermo(double theta) {
    if (theta < 0.0 || theta > kPi / 2.0)
        throw validation_error("mz_thermo requires theta in [0, pi/2]");
    if (theta >= kPi / 4.0) return 0.0;
    const double t = std::tan(theta);
    return std::pow(1.0 - t * t, 0.125);
}

double ostr_thermo(double theta) {
    if (theta < 0.0 || theta > kPi / 2.0)
        throw validation_error("ostr_thermo requires theta in [0, pi/2]");
    if (theta <= kPi / 4.0) return 0.0;
    const double t = std::tan(theta);
    return std::pow(1.0 - 1.0 / (t * t), 0.25);
}

double ostr_finite(const TfimSpec& spec) {
    const auto g = correlation_matrix(solve_modes(build_quadratic_form(spec)));
    const double str = string_expectation(g);
    return str * str;
}

QptEstimate locate_qpt(const std::vector<SweepRecord>& sweep) {
    if (sweep.size() < 33)
        throw validation_error("QPT location needs at least 33 sweep points");
    for (size_t i = 1; i < sweep.size(); ++i)
        if (!(sweep[i].theta > sweep[i - 1].theta))
            throw validation_error("sweep grid must be strictly increasing in theta");
    if (sweep.front().theta > kPi / 4.0 || sweep.back().theta < kPi / 4.0)
        throw validation_error("sweep grid must cover the critical angle");

    size_t peak = 0;
    for (size_t i = 1; i < sweep.size(); ++i)
        if (sweep[i].p_total > sweep[peak].p_total) peak = i;

    double refined = sweep[peak].theta;
    if (peak > 0 && peak + 1 < sweep.size()) {
        // Vertex of the parabola through the three points around the peak.
        const double x0 = sweep[peak - 1].theta, x1 = sweep[peak].theta,
                     x2 = sweep[peak + 1].theta;
        const double y0 = sweep[peak - 1].p_total, y1 = sweep[peak].p_total,
                     y2 = sweep[peak + 1].p_total;
        const double d1 = (y1 - y0) / (x1 - x0);
        const double d2 = (y2 - y1) / (x2 - x1);
        const double curvature = (d2 - d1) / (x2 - x0);
        if (curvature < 0.0) refined = 0.5 * (x0 + x1) - 0.5 * d1 / curvature;
    }

    size_t crossing = 0;
    double best = std::abs(sweep[0].m_z_thermo - sweep[0].o_str_thermo);
    for (size_t i = 1; i < sweep.size(); ++i) {
        const double gap = std::abs(sweep[i].m_z_thermo - sweep[i].o_str_thermo);
        if (gap < best) {
            best = gap;
            crossing = i;
        }
    }
    return QptEstimate{sweep[peak].theta, refined, sweep[crossing].theta};
}

}  // namespace causalchain
