#include "uavlink/link_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "uavlink/error.hpp"

namespace uavlink {

namespace {

void check_path(double distance_m, double frequency_hz) {
    if (!(distance_m > 0.0)) fail(ErrorKind::Domain, "distance must be > 0 m");
    if (!(frequency_hz > 0.0)) fail(ErrorKind::Domain, "frequency must be > 0 Hz");
}

} // namespace

std::string_view to_string(BerModel model) {
    return model == BerModel::Code ? "code" : "text";
}

BerModel parse_ber_model(std::string_view name) {
    if (name == "code") return BerModel::Code;
    if (name == "text") return BerModel::Text;
    fail(ErrorKind::InvalidArgument, "unknown BER model '" + std::string(name) + "'");
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) {
    if (!(mw > 0.0)) fail(ErrorKind::Domain, "power must be > 0 mW to express in dBm");
    return 10.0 * std::log10(mw);
}

double friis_gain_linear(double distance_m, double frequency_hz) {
    check_path(distance_m, frequency_hz);
    const double wavelength = kSpeedOfLight / frequency_hz;
    const double ratio = wavelength / (4.0 * std::numbers::pi * distance_m);
    return ratio * ratio;
}

double fspl_db(double distance_m, double frequency_hz) {
    check_path(distance_m, frequency_hz);
    return 20.0 * std::log10(distance_m) + 20.0 * std::log10(frequency_hz) +
           20.0 * std::log10(4.0 * std::numbers::pi / kSpeedOfLight);
}

double ber_from_snr(double snr_linear, BerModel model) {
    if (!(snr_linear >= 0.0)) fail(ErrorKind::Domain, "SNR must be >= 0 (linear)");
    const double exponent = model == BerModel::Code ? snr_linear / 2.0 : snr_linear;
    return 0.5 * std::exp(-exponent);
}

double packet_loss_prob(double ber, std::uint64_t packet_bits) {
    if (packet_bits == 0) fail(ErrorKind::InvalidArgument, "packet size must be >= 1 bit");
    if (!(ber >= 0.0 && ber <= 1.0)) fail(ErrorKind::Domain, "BER must lie in [0, 1]");
    if (ber == 0.0) return 0.0;
    if (packet_bits == 1) return ber;
    // 1 - (1 - ber)^n without cancellation when ber is tiny.
    return -std::expm1(static_cast<double>(packet_bits) * std::log1p(-ber));
}

LinkQuality link_quality(double distance_m, const RadioParams& radio, std::uint64_t packet_bits) {
    LinkQuality q;
    const double rx_mw = dbm_to_mw(radio.tx_power_dbm) * friis_gain_linear(distance_m, radio.frequency_hz);
    q.rx_power_dbm = mw_to_dbm(rx_mw);
    q.snr_db = q.rx_power_dbm - radio.noise_floor_dbm;
    q.snr_linear = std::pow(10.0, q.snr_db / 10.0);
    q.ber = ber_from_snr(q.snr_linear, radio.ber_model);
    q.loss_prob = packet_loss_prob(q.ber, packet_bits);
    return q;
}

double mean_pair_loss_percent(const Topology& topology, const RadioParams& radio,
                              std::uint64_t packet_bits) {
    if (topology.pairs.empty()) fail(ErrorKind::InvalidArgument, "topology has no pairs");
    double sum = 0.0;
    for (const auto& pair : topology.pairs) {
        const double d = distance(topology, pair.source, pair.destination);
        sum += link_quality(d, radio, packet_bits).loss_prob * 100.0;
    }
    return sum / static_cast<double>(topology.pairs.size());
}

} // namespace uavlink
