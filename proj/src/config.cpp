#include "uavlink/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "uavlink/error.hpp"

namespace uavlink {

namespace {

using Json = nlohmann::ordered_json;

enum class Kind { Unsigned, Real, Text, RealList, UnsignedList, JsonValue };

struct KeySpec {
    std::string_view key;
    Kind kind;
};

constexpr KeySpec kKeys[] = {
    {"seed", Kind::Unsigned},
    {"num_uavs", Kind::Unsigned},
    {"area_width", Kind::Real},
    {"area_height", Kind::Real},
    {"num_pairs", Kind::Unsigned},
    {"tx_power_dbm", Kind::Real},
    {"noise_floor_dbm", Kind::Real},
    {"frequency_hz", Kind::Real},
    {"bandwidth_hz", Kind::Real},
    {"ber_model", Kind::Text},
    {"packet_sizes", Kind::UnsignedList},
    {"replicates", Kind::Unsigned},
    {"threads", Kind::Unsigned},
    {"power_axis_dbm", Kind::RealList},
    {"frequency_axis_hz", Kind::RealList},
    {"area_axis_m", Kind::RealList},
    {"count_axis", Kind::RealList},
    {"curve_family", Kind::JsonValue},
    {"rungs", Kind::JsonValue},
    {"initial_packet_bits", Kind::Unsigned},
    {"growth_step_bits", Kind::Unsigned},
    {"backoff_bits", Kind::Unsigned},
    {"max_ticks", Kind::Unsigned},
    {"target_loss_percent", Kind::Real},
    {"target_power_dbm", Kind::Real},
    {"format", Kind::Text},
    {"out", Kind::Text},
};

const KeySpec* find_key(std::string_view key) {
    for (const auto& spec : kKeys) {
        if (spec.key == key) return &spec;
    }
    return nullptr;
}

std::uint64_t parse_unsigned_text(const std::string& key, std::string_view text) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw ConfigError(key, "expected a non-negative integer, got '" + std::string(text) + "'");
    return value;
}

double parse_real_text(const std::string& key, std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw ConfigError(key, "expected a number, got '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

Json flag_value(const std::string& key, Kind kind, const std::string& text) {
    switch (kind) {
    case Kind::Unsigned: return parse_unsigned_text(key, text);
    case Kind::Real: return parse_real_text(key, text);
    case Kind::Text: return text;
    case Kind::RealList:
    case Kind::UnsignedList: {
        Json list = Json::array();
        if (text.empty()) return list;
        for (auto part : split_commas(text)) {
            if (kind == Kind::RealList) {
                list.push_back(parse_real_text(key, part));
            } else {
                list.push_back(parse_unsigned_text(key, part));
            }
        }
        return list;
    }
    case Kind::JsonValue:
        try {
            return Json::parse(text);
        } catch (const Json::exception& e) {
            throw ConfigError(key, std::string("malformed JSON value: ") + e.what());
        }
    }
    throw ConfigError(key, "unsupported value");
}

// Typed readers over the merged document; every failure names the key.

const Json& at(const Json& doc, std::string_view key) { return doc.at(std::string(key)); }

std::uint64_t get_unsigned(const Json& doc, std::string_view key) {
    const auto& v = at(doc, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw ConfigError(std::string(key), "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

double get_real(const Json& doc, std::string_view key) {
    const auto& v = at(doc, key);
    if (!v.is_number()) throw ConfigError(std::string(key), "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(std::string(key), "expected a finite number");
    return x;
}

std::string get_text(const Json& doc, std::string_view key) {
    const auto& v = at(doc, key);
    if (!v.is_string()) throw ConfigError(std::string(key), "expected a string");
    return v.get<std::string>();
}

std::vector<double> get_real_list(const Json& doc, std::string_view key) {
    const auto& v = at(doc, key);
    if (!v.is_array()) throw ConfigError(std::string(key), "expected a list of numbers");
    std::vector<double> out;
    for (const auto& item : v) {
        if (!item.is_number() || !std::isfinite(item.get<double>())) {
            throw ConfigError(std::string(key), "expected a list of finite numbers");
        }
        out.push_back(item.get<double>());
    }
    return out;
}

std::vector<std::uint64_t> get_unsigned_list(const Json& doc, std::string_view key) {
    const auto& v = at(doc, key);
    if (!v.is_array()) throw ConfigError(std::string(key), "expected a list of integers");
    std::vector<std::uint64_t> out;
    for (const auto& item : v) {
        if (!item.is_number_unsigned() && !(item.is_number_integer() && item.get<std::int64_t>() >= 0)) {
            throw ConfigError(std::string(key), "expected a list of non-negative integers");
        }
        out.push_back(item.get<std::uint64_t>());
    }
    return out;
}

void require(bool ok, std::string_view key, const std::string& message) {
    if (!ok) throw ConfigError(std::string(key), message);
}

void require_increasing(const std::vector<double>& values, std::string_view key) {
    require(!values.empty(), key, "must not be empty");
    for (std::size_t i = 1; i < values.size(); ++i) {
        require(values[i] > values[i - 1], key, "must be strictly increasing");
    }
}

double get_field(const Json& obj, const char* field, std::string_view key) {
    if (!obj.is_object() || !obj.contains(field) || !obj.at(field).is_number()) {
        throw ConfigError(std::string(key), std::string("each entry needs a numeric '") + field + "'");
    }
    const double x = obj.at(field).get<double>();
    require(std::isfinite(x), key, std::string("'") + field + "' must be finite");
    return x;
}

void reject_extra_fields(const Json& obj, std::initializer_list<std::string_view> allowed, std::string_view key) {
    for (const auto& [name, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
            throw ConfigError(std::string(key), "unknown field '" + name + "'");
        }
    }
}

Json curve_family_json(const CurveFamily& family) {
    Json arr = Json::array();
    for (const auto& c : family.curves()) {
        arr.push_back({{"power_dbm", c.power_dbm}, {"a", c.a}, {"b", c.b}});
    }
    return arr;
}

Json rungs_json(const std::vector<PowerRung>& rungs) {
    Json arr = Json::array();
    for (const auto& r : rungs) {
        arr.push_back({{"power_dbm", r.power_dbm}, {"loss_threshold_percent", r.loss_threshold_percent}});
    }
    return arr;
}

Json to_document(const RunConfig& c) {
    Json doc;
    doc["seed"] = c.seed;
    doc["num_uavs"] = c.num_uavs;
    doc["area_width"] = c.area.width_m;
    doc["area_height"] = c.area.height_m;
    doc["num_pairs"] = c.num_pairs;
    doc["tx_power_dbm"] = c.radio.tx_power_dbm;
    doc["noise_floor_dbm"] = c.radio.noise_floor_dbm;
    doc["frequency_hz"] = c.radio.frequency_hz;
    doc["bandwidth_hz"] = c.bandwidth_hz;
    doc["ber_model"] = std::string(to_string(c.radio.ber_model));
    doc["packet_sizes"] = c.packet_sizes;
    doc["replicates"] = c.replicates;
    doc["threads"] = c.threads;
    doc["power_axis_dbm"] = c.power_axis_dbm;
    doc["frequency_axis_hz"] = c.frequency_axis_hz;
    doc["area_axis_m"] = c.area_axis_m;
    doc["count_axis"] = c.count_axis;
    doc["curve_family"] = curve_family_json(c.curve_family);
    doc["rungs"] = rungs_json(c.policy.rungs);
    doc["initial_packet_bits"] = c.policy.initial_packet_bits;
    doc["growth_step_bits"] = c.policy.growth_step_bits;
    doc["backoff_bits"] = c.policy.backoff_bits;
    doc["max_ticks"] = c.policy.max_ticks;
    doc["target_loss_percent"] = c.target_loss_percent;
    doc["target_power_dbm"] = c.target_power_dbm;
    doc["format"] = std::string(to_string(c.format));
    doc["out"] = c.out;
    return doc;
}

std::int64_t get_policy_int(const Json& doc, std::string_view key) {
    const auto v = get_unsigned(doc, key);
    require(v <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()), key, "value too large");
    return static_cast<std::int64_t>(v);
}

RunConfig from_document(const Json& doc) {
    RunConfig c;
    c.seed = get_unsigned(doc, "seed");

    c.num_uavs = get_unsigned(doc, "num_uavs");
    require(c.num_uavs >= 2 && c.num_uavs <= 100000, "num_uavs", "must be between 2 and 100000");
    c.area.width_m = get_real(doc, "area_width");
    require(c.area.width_m > 0.0, "area_width", "must be > 0");
    c.area.height_m = get_real(doc, "area_height");
    require(c.area.height_m > 0.0, "area_height", "must be > 0");
    c.num_pairs = get_unsigned(doc, "num_pairs");
    require(c.num_pairs >= 1, "num_pairs", "must be >= 1");
    require(c.num_pairs <= c.num_uavs * (c.num_uavs - 1), "num_pairs",
            "exceeds the number of ordered UAV pairs");

    c.radio.tx_power_dbm = get_real(doc, "tx_power_dbm");
    c.radio.noise_floor_dbm = get_real(doc, "noise_floor_dbm");
    c.radio.frequency_hz = get_real(doc, "frequency_hz");
    require(c.radio.frequency_hz > 0.0, "frequency_hz", "must be > 0");
    c.bandwidth_hz = get_real(doc, "bandwidth_hz");
    require(c.bandwidth_hz > 0.0, "bandwidth_hz", "must be > 0");
    const auto ber = get_text(doc, "ber_model");
    require(ber == "code" || ber == "text", "ber_model", "must be 'code' or 'text'");
    c.radio.ber_model = parse_ber_model(ber);

    c.packet_sizes = get_unsigned_list(doc, "packet_sizes");
    require(!c.packet_sizes.empty(), "packet_sizes", "must not be empty");
    for (std::size_t i = 0; i < c.packet_sizes.size(); ++i) {
        require(c.packet_sizes[i] >= 1, "packet_sizes", "sizes must be >= 1 bit");
        require(i == 0 || c.packet_sizes[i] > c.packet_sizes[i - 1], "packet_sizes", "must be strictly increasing");
    }
    c.replicates = get_unsigned(doc, "replicates");
    require(c.replicates >= 1, "replicates", "must be >= 1");
    const auto threads = get_unsigned(doc, "threads");
    require(threads >= 1 && threads <= 1024, "threads", "must be between 1 and 1024");
    c.threads = static_cast<unsigned>(threads);

    c.power_axis_dbm = get_real_list(doc, "power_axis_dbm");
    require_increasing(c.power_axis_dbm, "power_axis_dbm");
    c.frequency_axis_hz = get_real_list(doc, "frequency_axis_hz");
    require_increasing(c.frequency_axis_hz, "frequency_axis_hz");
    require(c.frequency_axis_hz.front() > 0.0, "frequency_axis_hz", "frequencies must be > 0");
    c.area_axis_m = get_real_list(doc, "area_axis_m");
    require_increasing(c.area_axis_m, "area_axis_m");
    require(c.area_axis_m.front() > 0.0, "area_axis_m", "sides must be > 0");
    c.count_axis = get_real_list(doc, "count_axis");
    require_increasing(c.count_axis, "count_axis");
    for (double v : c.count_axis) {
        require(v >= 2.0 && v <= 100000.0 && v == std::floor(v), "count_axis", "counts must be integers between 2 and 100000");
    }

    const auto& family = at(doc, "curve_family");
    require(family.is_array() && !family.empty(), "curve_family", "expected a non-empty list of curves");
    std::vector<LossCurve> curves;
    for (const auto& entry : family) {
        reject_extra_fields(entry, {"power_dbm", "a", "b"}, "curve_family");
        curves.push_back({get_field(entry, "a", "curve_family"), get_field(entry, "b", "curve_family"),
                          get_field(entry, "power_dbm", "curve_family")});
    }
    try {
        c.curve_family = CurveFamily(std::move(curves));
    } catch (const Error& e) {
        throw ConfigError("curve_family", e.what());
    }

    const auto& rungs = at(doc, "rungs");
    require(rungs.is_array() && !rungs.empty(), "rungs", "expected a non-empty list of rungs");
    c.policy.rungs.clear();
    for (const auto& entry : rungs) {
        reject_extra_fields(entry, {"power_dbm", "loss_threshold_percent"}, "rungs");
        c.policy.rungs.push_back({get_field(entry, "power_dbm", "rungs"),
                                  get_field(entry, "loss_threshold_percent", "rungs")});
    }
    c.policy.initial_packet_bits = get_policy_int(doc, "initial_packet_bits");
    require(c.policy.initial_packet_bits >= 1, "initial_packet_bits", "must be >= 1");
    c.policy.growth_step_bits = get_policy_int(doc, "growth_step_bits");
    c.policy.backoff_bits = get_policy_int(doc, "backoff_bits");
    c.policy.max_ticks = get_policy_int(doc, "max_ticks");
    require(c.policy.max_ticks >= 1, "max_ticks", "must be >= 1");
    try {
        validate_policy(c.policy, c.curve_family);
    } catch (const Error& e) {
        throw ConfigError("rungs", e.what());
    }

    c.target_loss_percent = get_real(doc, "target_loss_percent");
    c.target_power_dbm = get_real(doc, "target_power_dbm");

    const auto format = get_text(doc, "format");
    require(format == "csv" || format == "json", "format", "must be 'csv' or 'json'");
    c.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    c.out = get_text(doc, "out");
    return c;
}

bool blank(std::string_view text) {
    return std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch) != 0; });
}

} // namespace

std::string_view to_string(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json";
}

SweepSpec RunConfig::sweep_spec(SweptAxis axis) const {
    SweepSpec spec;
    spec.base_seed = seed;
    spec.num_uavs = num_uavs;
    spec.area = area;
    spec.num_pairs = num_pairs;
    spec.radio = radio;
    spec.packet_sizes = packet_sizes;
    spec.swept_axis = axis;
    spec.replicates = replicates;
    switch (axis) {
    case SweptAxis::PacketSizeByPower: spec.axis_values = power_axis_dbm; break;
    case SweptAxis::Frequency: spec.axis_values = frequency_axis_hz; break;
    case SweptAxis::Area: spec.axis_values = area_axis_m; break;
    case SweptAxis::UavCount: spec.axis_values = count_axis; break;
    }
    return spec;
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto& spec : kKeys) keys.emplace_back(spec.key);
    return keys;
}

std::string canonical_key(std::string_view flag) {
    while (!flag.empty() && flag.front() == '-') flag.remove_prefix(1);
    std::string key(flag);
    std::replace(key.begin(), key.end(), '-', '_');
    if (key == "loss") return "target_loss_percent";
    if (key == "power") return "target_power_dbm";
    return find_key(key) != nullptr ? key : std::string{};
}

RunConfig parse_config(std::string_view file_contents, const std::vector<FlagOverride>& flags) {
    Json doc = to_document(RunConfig{});

    if (!blank(file_contents)) {
        Json file;
        try {
            file = Json::parse(file_contents);
        } catch (const Json::exception& e) {
            throw ConfigError("config", std::string("malformed JSON: ") + e.what());
        }
        if (!file.is_object()) throw ConfigError("config", "top level must be a JSON object");
        for (const auto& [key, value] : file.items()) {
            if (find_key(key) == nullptr) throw ConfigError(key, "unknown key");
            doc[key] = value;
        }
    }

    for (const auto& [flag, text] : flags) {
        const std::string key = canonical_key(flag);
        if (key.empty()) throw ConfigError(flag, "unknown key");
        doc[key] = flag_value(key, find_key(key)->kind, text);
    }

    try {
        return from_document(doc);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError("config", e.what());
    } catch (const Json::exception& e) {
        throw ConfigError("config", e.what());
    }
}

std::string serialize_config(const RunConfig& config) {
    return to_document(config).dump(2) + "\n";
}

} // namespace uavlink
