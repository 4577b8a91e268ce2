#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace uavlink {

struct AreaSpec {
    double width_m = 1500.0;
    double height_m = 1500.0;

    bool operator==(const AreaSpec&) const = default;
};

struct Position {
    double x_m = 0.0;
    double y_m = 0.0;

    bool operator==(const Position&) const = default;
};

/// Directional link between two UAVs, identified by index.
struct LinkPair {
    std::size_t source = 0;
    std::size_t destination = 0;

    bool operator==(const LinkPair&) const = default;
};

/// Static 2-D snapshot of a swarm and its communicating pairs.
struct Topology {
    std::vector<Position> positions;
    std::vector<LinkPair> pairs;
    std::uint64_t seed = 0;
    AreaSpec area;

    std::size_t num_uavs() const noexcept { return positions.size(); }

    bool operator==(const Topology&) const = default;
};

void validate_area(const AreaSpec& area);

/// Places num_uavs uniformly in the area (x then y, UAV 0 first) and picks
/// num_pairs ordered pairs out of the lexicographic list of all (i, j), i != j,
/// continuing with the same generator.
Topology generate_topology(std::uint64_t seed, std::size_t num_uavs, const AreaSpec& area,
                           std::size_t num_pairs);

/// Euclidean distance in meters between UAVs i and j.
double distance(const Topology& topology, std::size_t i, std::size_t j);

/// Topology document: JSON with seed, area {width, height}, positions
/// [[x, y], ...] and pairs [[src, dst], ...]. Coordinates are written with
/// round-trip precision.
std::string serialize_topology(const Topology& topology);
Topology parse_topology(std::string_view document);

} // namespace uavlink
