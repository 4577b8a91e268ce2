#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace uavlink {

/// Loss curve y = a ln(x) + b, y in percent, x in bits, for one power level.
struct LossCurve {
    double a = 0.0;
    double b = 0.0;
    double power_dbm = 0.0;

    bool operator==(const LossCurve&) const = default;
};

/// Curves ordered by strictly increasing power.
class CurveFamily {
public:
    explicit CurveFamily(std::vector<LossCurve> curves);

    const std::vector<LossCurve>& curves() const noexcept { return curves_; }
    double min_power_dbm() const noexcept { return curves_.front().power_dbm; }
    double max_power_dbm() const noexcept { return curves_.back().power_dbm; }

    /// Member with exactly this power, or nullptr.
    const LossCurve* find(double power_dbm) const noexcept;

    bool operator==(const CurveFamily&) const = default;

private:
    std::vector<LossCurve> curves_;
};

/// 6.8 ln x + 26 @ 5 dBm, 7.1 ln x + 4 @ 7 dBm, 6.2 ln x - 6 @ 9 dBm.
CurveFamily reference_curve_family();

struct FitPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Ordinary least squares of y on ln(x).
LossCurve fit_log_curve(std::span<const FitPoint> points, double power_dbm);

double evaluate_curve(const LossCurve& curve, double x);

/// exp((y - b) / a).
double invert_curve(const LossCurve& curve, double y);

/// Analytic inverse at an exact member power, otherwise of (a, b) linearly
/// interpolated between the bracketing members. No extrapolation.
double predict_packet_size(double loss_percent, double power_dbm, const CurveFamily& family);

/// Nearest-neighbour lookup on x = 10, 20, ..., 10000 restricted to rows with
/// positive loss; ties go to the smaller x. power_dbm must be a member power.
std::uint64_t grid_oracle_predict(double loss_percent, double power_dbm, const CurveFamily& family);

} // namespace uavlink
