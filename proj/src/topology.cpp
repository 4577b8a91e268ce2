#include "uavlink/topology.hpp"

#include <cmath>

#include <json.hpp>

#include "uavlink/error.hpp"
#include "uavlink/rng.hpp"

namespace uavlink {

namespace {

void check_topology(const Topology& t) {
    validate_area(t.area);
    for (const auto& p : t.positions) {
        if (!(p.x_m >= 0.0 && p.x_m <= t.area.width_m && p.y_m >= 0.0 && p.y_m <= t.area.height_m)) {
            fail(ErrorKind::InvalidArgument, "position outside the area");
        }
    }
    const auto n = t.positions.size();
    for (std::size_t a = 0; a < t.pairs.size(); ++a) {
        const auto& pr = t.pairs[a];
        if (pr.source >= n || pr.destination >= n) {
            fail(ErrorKind::InvalidArgument, "pair index out of range");
        }
        if (pr.source == pr.destination) {
            fail(ErrorKind::InvalidArgument, "pair links a UAV to itself");
        }
        for (std::size_t b = 0; b < a; ++b) {
            if (t.pairs[b] == pr) fail(ErrorKind::InvalidArgument, "duplicate pair");
        }
    }
}

} // namespace

void validate_area(const AreaSpec& area) {
    if (!(area.width_m > 0.0) || !std::isfinite(area.width_m)) {
        fail(ErrorKind::InvalidArgument, "area width must be a positive finite length");
    }
    if (!(area.height_m > 0.0) || !std::isfinite(area.height_m)) {
        fail(ErrorKind::InvalidArgument, "area height must be a positive finite length");
    }
}

Topology generate_topology(std::uint64_t seed, std::size_t num_uavs, const AreaSpec& area,
                           std::size_t num_pairs) {
    validate_area(area);
    if (num_uavs < 2) {
        fail(ErrorKind::InvalidArgument, "at least 2 UAVs are required");
    }
    const std::size_t available = num_uavs * (num_uavs - 1);
    if (num_pairs > available) {
        fail(ErrorKind::InvalidArgument, std::to_string(num_pairs) + " pairs requested but only " +
                                             std::to_string(available) + " ordered pairs exist");
    }

    Topology t;
    t.seed = seed;
    t.area = area;

    Rng rng(seed);
    t.positions.reserve(num_uavs);
    for (std::size_t i = 0; i < num_uavs; ++i) {
        const double x = rng.next_uniform() * area.width_m;
        const double y = rng.next_uniform() * area.height_m;
        t.positions.push_back({x, y});
    }

    std::vector<LinkPair> all;
    all.reserve(available);
    for (std::size_t i = 0; i < num_uavs; ++i) {
        for (std::size_t j = 0; j < num_uavs; ++j) {
            if (i != j) all.push_back({i, j});
        }
    }
    t.pairs.reserve(num_pairs);
    for (auto idx : sample_without_replacement(rng, all.size(), num_pairs)) {
        t.pairs.push_back(all[idx]);
    }
    return t;
}

double distance(const Topology& topology, std::size_t i, std::size_t j) {
    const auto n = topology.positions.size();
    if (i >= n || j >= n) {
        fail(ErrorKind::InvalidArgument, "UAV index out of range");
    }
    const auto& a = topology.positions[i];
    const auto& b = topology.positions[j];
    const double dx = a.x_m - b.x_m;
    const double dy = a.y_m - b.y_m;
    return std::sqrt(dx * dx + dy * dy);
}

std::string serialize_topology(const Topology& topology) {
    nlohmann::ordered_json doc;
    doc["seed"] = topology.seed;
    doc["area"] = {{"width", topology.area.width_m}, {"height", topology.area.height_m}};
    auto positions = nlohmann::ordered_json::array();
    for (const auto& p : topology.positions) positions.push_back({p.x_m, p.y_m});
    doc["positions"] = std::move(positions);
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& p : topology.pairs) pairs.push_back({p.source, p.destination});
    doc["pairs"] = std::move(pairs);
    return doc.dump(2) + "\n";
}

Topology parse_topology(std::string_view document) {
    Topology t;
    try {
        const auto doc = nlohmann::json::parse(document);
        t.seed = doc.at("seed").get<std::uint64_t>();
        t.area.width_m = doc.at("area").at("width").get<double>();
        t.area.height_m = doc.at("area").at("height").get<double>();
        for (const auto& p : doc.at("positions")) {
            if (p.size() != 2) fail(ErrorKind::InvalidArgument, "position must be [x, y]");
            t.positions.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        for (const auto& p : doc.at("pairs")) {
            if (p.size() != 2) fail(ErrorKind::InvalidArgument, "pair must be [src, dst]");
            t.pairs.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>()});
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidArgument, std::string("malformed topology document: ") + e.what());
    }
    check_topology(t);
    return t;
}

} // namespace uavlink
