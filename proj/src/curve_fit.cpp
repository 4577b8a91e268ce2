#include "uavlink/curve_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "uavlink/error.hpp"

namespace uavlink {

namespace {

constexpr std::uint64_t kGridStart = 10;
constexpr std::uint64_t kGridStop = 10000;
constexpr std::uint64_t kGridStep = 10;

} // namespace

CurveFamily::CurveFamily(std::vector<LossCurve> curves) : curves_(std::move(curves)) {
    if (curves_.empty()) fail(ErrorKind::InvalidArgument, "curve family is empty");
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        const auto& c = curves_[i];
        if (!std::isfinite(c.a) || !std::isfinite(c.b) || !std::isfinite(c.power_dbm)) {
            fail(ErrorKind::InvalidArgument, "curve coefficients must be finite");
        }
        if (i > 0 && !(c.power_dbm > curves_[i - 1].power_dbm)) {
            fail(ErrorKind::InvalidArgument, "curve powers must be strictly increasing");
        }
    }
}

const LossCurve* CurveFamily::find(double power_dbm) const noexcept {
    for (const auto& c : curves_) {
        if (c.power_dbm == power_dbm) return &c;
    }
    return nullptr;
}

CurveFamily reference_curve_family() {
    return CurveFamily({{6.8, 26.0, 5.0}, {7.1, 4.0, 7.0}, {6.2, -6.0, 9.0}});
}

LossCurve fit_log_curve(std::span<const FitPoint> points, double power_dbm) {
    for (const auto& p : points) {
        if (!(p.x >= 1.0)) fail(ErrorKind::Domain, "fit points need x >= 1");
    }
    std::vector<double> xs;
    for (const auto& p : points) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    if (std::unique(xs.begin(), xs.end()) - xs.begin() < 2) {
        fail(ErrorKind::InvalidArgument, "fit needs at least 2 distinct x values");
    }

    const auto n = static_cast<double>(points.size());
    double mean_u = 0.0;
    double mean_y = 0.0;
    for (const auto& p : points) {
        mean_u += std::log(p.x);
        mean_y += p.y;
    }
    mean_u /= n;
    mean_y /= n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& p : points) {
        const double du = std::log(p.x) - mean_u;
        sxx += du * du;
        sxy += du * (p.y - mean_y);
    }
    if (!(sxx > 0.0)) fail(ErrorKind::DegenerateData, "ln(x) has zero variance");

    const double a = sxy / sxx;
    return {a, mean_y - a * mean_u, power_dbm};
}

double evaluate_curve(const LossCurve& curve, double x) {
    if (!(x >= 1.0)) fail(ErrorKind::Domain, "packet size must be >= 1 bit");
    return curve.a * std::log(x) + curve.b;
}

double invert_curve(const LossCurve& curve, double y) {
    if (curve.a == 0.0) fail(ErrorKind::NonInvertible, "curve with zero slope is not invertible");
    return std::exp((y - curve.b) / curve.a);
}

double predict_packet_size(double loss_percent, double power_dbm, const CurveFamily& family) {
    if (const LossCurve* exact = family.find(power_dbm)) return invert_curve(*exact, loss_percent);
    if (!(power_dbm >= family.min_power_dbm() && power_dbm <= family.max_power_dbm())) {
        fail(ErrorKind::OutOfRange, "power " + std::to_string(power_dbm) + " dBm is outside the curve family range");
    }
    const auto& curves = family.curves();
    const auto upper = std::find_if(curves.begin(), curves.end(),
                                    [&](const LossCurve& c) { return c.power_dbm > power_dbm; });
    const LossCurve& hi = *upper;
    const LossCurve& lo = *(upper - 1);
    const double t = (power_dbm - lo.power_dbm) / (hi.power_dbm - lo.power_dbm);
    const LossCurve blended{lo.a + t * (hi.a - lo.a), lo.b + t * (hi.b - lo.b), power_dbm};
    return invert_curve(blended, loss_percent);
}

std::uint64_t grid_oracle_predict(double loss_percent, double power_dbm, const CurveFamily& family) {
    const LossCurve* curve = family.find(power_dbm);
    if (curve == nullptr) {
        fail(ErrorKind::InvalidArgument, "grid lookup needs a power that is a member of the curve family");
    }
    std::uint64_t best_x = 0;
    double best_err = std::numeric_limits<double>::infinity();
    for (std::uint64_t x = kGridStart; x <= kGridStop; x += kGridStep) {
        const double y = evaluate_curve(*curve, static_cast<double>(x));
        if (!(y > 0.0)) continue;
        const double err = std::abs(y - loss_percent);
        if (err < best_err) {
            best_err = err;
            best_x = x;
        }
    }
    if (best_x == 0) fail(ErrorKind::EmptyTable, "no grid row has positive loss");
    return best_x;
}

} // namespace uavlink
