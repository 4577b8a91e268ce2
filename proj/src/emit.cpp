#include "uavlink/emit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "uavlink/error.hpp"

namespace uavlink {

namespace {

using Json = nlohmann::ordered_json;

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

Json sweep_spec_json(const SweepSpec& spec) {
    Json doc;
    doc["base_seed"] = spec.base_seed;
    doc["num_uavs"] = spec.num_uavs;
    doc["area"] = {{"width", spec.area.width_m}, {"height", spec.area.height_m}};
    doc["num_pairs"] = spec.num_pairs;
    doc["radio"] = {{"tx_power_dbm", spec.radio.tx_power_dbm},
                    {"noise_floor_dbm", spec.radio.noise_floor_dbm},
                    {"frequency_hz", spec.radio.frequency_hz},
                    {"ber_model", std::string(to_string(spec.radio.ber_model))}};
    doc["packet_sizes"] = spec.packet_sizes;
    doc["swept_axis"] = std::string(to_string(spec.swept_axis));
    doc["axis_values"] = spec.axis_values;
    doc["replicates"] = spec.replicates;
    return doc;
}

} // namespace

std::string format_number(double value) {
    if (value == 0.0) return "0";  // folds -0
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 6);
    if (ec != std::errc{}) fail(ErrorKind::Io, "number formatting failed");
    return std::string(buf, ptr);
}

double round_significant(double value) {
    if (!std::isfinite(value)) return value;
    const auto text = format_number(value);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

PacketSizePrediction predict(double loss_percent, double power_dbm, const CurveFamily& family) {
    PacketSizePrediction p;
    p.loss_percent = loss_percent;
    p.power_dbm = power_dbm;
    p.analytic_bits = predict_packet_size(loss_percent, power_dbm, family);
    if (family.find(power_dbm) != nullptr) p.grid_bits = grid_oracle_predict(loss_percent, power_dbm, family);
    return p;
}

std::string emit_table(const SweepResult& result, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "axis_value,packet_size_bits,mean_loss_percent,std_loss_percent\n";
        for (const auto& row : result.rows) {
            out << format_number(row.axis_value) << ',' << row.packet_size_bits << ','
                << format_number(row.mean_loss_percent) << ',' << format_number(row.std_loss_percent) << '\n';
        }
        return out.str();
    }
    Json doc;
    doc["axis"] = std::string(to_string(result.spec.swept_axis));
    doc["spec"] = sweep_spec_json(result.spec);
    Json rows = Json::array();
    for (const auto& row : result.rows) {
        rows.push_back({{"axis_value", round_significant(row.axis_value)},
                        {"packet_size_bits", row.packet_size_bits},
                        {"mean_loss_percent", round_significant(row.mean_loss_percent)},
                        {"std_loss_percent", round_significant(row.std_loss_percent)}});
    }
    doc["rows"] = std::move(rows);
    return render(doc);
}

std::string emit_table(const std::vector<TraceSample>& trace, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "tick,packet_bits,loss_percent,power_dbm,event\n";
        for (const auto& s : trace) {
            out << s.tick << ',' << s.packet_bits << ',' << format_number(s.loss_percent) << ','
                << format_number(s.power_dbm) << ',' << to_string(s.event) << '\n';
        }
        return out.str();
    }
    Json rows = Json::array();
    for (const auto& s : trace) {
        rows.push_back({{"tick", s.tick},
                        {"packet_bits", s.packet_bits},
                        {"loss_percent", round_significant(s.loss_percent)},
                        {"power_dbm", round_significant(s.power_dbm)},
                        {"event", std::string(to_string(s.event))}});
    }
    Json doc;
    doc["rows"] = std::move(rows);
    return render(doc);
}

std::string emit_table(const Topology& topology, OutputFormat format) {
    if (format == OutputFormat::Json) return serialize_topology(topology);
    std::ostringstream out;
    out << "uav,x_m,y_m\n";
    for (std::size_t i = 0; i < topology.positions.size(); ++i) {
        out << i << ',' << format_number(topology.positions[i].x_m) << ','
            << format_number(topology.positions[i].y_m) << '\n';
    }
    return out.str();
}

std::string emit_table(const CurveFamily& family, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "power_dbm,a,b\n";
        for (const auto& c : family.curves()) {
            out << format_number(c.power_dbm) << ',' << format_number(c.a) << ',' << format_number(c.b) << '\n';
        }
        return out.str();
    }
    Json rows = Json::array();
    for (const auto& c : family.curves()) {
        rows.push_back({{"power_dbm", round_significant(c.power_dbm)},
                        {"a", round_significant(c.a)},
                        {"b", round_significant(c.b)}});
    }
    Json doc;
    doc["curves"] = std::move(rows);
    return render(doc);
}

std::string emit_table(const PacketSizePrediction& p, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "target_loss_percent,power_dbm,analytic_bits,grid_bits\n";
        out << format_number(p.loss_percent) << ',' << format_number(p.power_dbm) << ','
            << format_number(p.analytic_bits) << ',';
        if (p.grid_bits) out << *p.grid_bits;
        out << '\n';
        return out.str();
    }
    Json doc;
    doc["target_loss_percent"] = round_significant(p.loss_percent);
    doc["power_dbm"] = round_significant(p.power_dbm);
    doc["analytic_bits"] = round_significant(p.analytic_bits);
    doc["grid_bits"] = p.grid_bits ? Json(*p.grid_bits) : Json(nullptr);
    return render(doc);
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorKind::Io, "cannot open " + tmp.string() + " for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            fail(ErrorKind::Io, "failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        fail(ErrorKind::Io, "cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

} // namespace uavlink
