#pragma once

#include <cstdint>
#include <string_view>

#include "uavlink/topology.hpp"

namespace uavlink {

/// Speed of light used by the propagation model, m/s.
inline constexpr double kSpeedOfLight = 3.0e8;

enum class BerModel {
    Code,  ///< 0.5 * exp(-snr / 2)
    Text,  ///< 0.5 * exp(-snr)
};

std::string_view to_string(BerModel model);
BerModel parse_ber_model(std::string_view name);

struct RadioParams {
    double tx_power_dbm = 7.0;
    double noise_floor_dbm = -100.0;
    double frequency_hz = 2.4e9;
    BerModel ber_model = BerModel::Code;

    bool operator==(const RadioParams&) const = default;
};

struct LinkQuality {
    double rx_power_dbm = 0.0;
    double snr_db = 0.0;
    double snr_linear = 0.0;
    double ber = 0.0;
    double loss_prob = 0.0;
};

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// Free-space power ratio (lambda / (4 pi d))^2.
double friis_gain_linear(double distance_m, double frequency_hz);

/// 20 log10(d) + 20 log10(f) + 20 log10(4 pi / c).
double fspl_db(double distance_m, double frequency_hz);

double ber_from_snr(double snr_linear, BerModel model);

/// Probability that at least one of packet_bits independent bits is corrupted.
double packet_loss_prob(double ber, std::uint64_t packet_bits);

LinkQuality link_quality(double distance_m, const RadioParams& radio, std::uint64_t packet_bits);

/// Mean over the topology's pairs of loss_prob * 100.
double mean_pair_loss_percent(const Topology& topology, const RadioParams& radio,
                              std::uint64_t packet_bits);

} // namespace uavlink
