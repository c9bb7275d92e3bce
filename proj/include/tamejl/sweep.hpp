#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tamejl/identities.hpp"

namespace tamejl {

struct GridSpec {
    std::vector<std::int64_t> q_list;
    std::int64_t n_max = 0;
    std::int64_t w_samples = 0;  ///< nonzero w values drawn per (q, e, f) besides w = 0
    std::uint64_t w_seed = 1;
    std::int64_t t_max = 0;
    std::int64_t a_max = 0;
    bool strict = false;  ///< count t = 0 shapes with e > 1 separately as relaxed
    Mutation mutation = Mutation::None;
};

void validate_grid(const GridSpec& grid);

/// Coordinates that reproduce an instance through the CLI.
struct InstanceCoords {
    ExtensionParams params;
    CsaParams A;
    std::string tower;   ///< comma-separated subgroup tokens for H_0..H_{t-1}
    std::string levels;  ///< comma-separated a_0..a_{t-1}
};

struct FailureRecord {
    InstanceCoords coords;
    std::vector<OrbitVerdict> failing;
    std::string error;
};

struct SweepSummary {
    std::int64_t extensions = 0;
    std::int64_t instances = 0;
    std::int64_t orbits = 0;
    std::int64_t orbit_passes = 0;
    std::int64_t orbit_failures = 0;
    std::int64_t aggregate_failures = 0;
    std::int64_t instance_failures = 0;
    std::int64_t relaxed_instances = 0;  ///< only counted when strict is set
    std::int64_t relaxed_failures = 0;
    std::vector<FailureRecord> failures;  ///< in enumeration order, capped

    void merge(const SweepSummary& other);
};

/// The distinct w values used for one (q, e, f): 0 first, then the samples ascending.
std::vector<std::int64_t> sample_w(const GridSpec& grid, std::int64_t q, std::int64_t e,
                                   std::int64_t f);

/// Every extension of the grid in deterministic order.
std::vector<ExtensionParams> grid_extensions(const GridSpec& grid);

/// Visits every instance of the grid in deterministic order.
void for_each_instance(const GridSpec& grid, const std::function<void(const Instance&)>& visit);

std::string format_tower(const ExtensionModel& X, const TowerShape& shape);
std::string format_levels(const TowerShape& shape);

/// Parses subgroup tokens E, F, e<k>f<l> (when unique) or mask:<hex>; the
/// chain is closed by Gamma_{L/F}.
TowerShape parse_tower(const ExtensionModel& X, const std::vector<std::string>& tokens,
                       const std::vector<std::int64_t>& levels);

InstanceCoords coords_of(const Instance& inst);

SweepSummary sweep(const GridSpec& grid, unsigned jobs = 1, std::size_t max_failure_rows = 64);

}  // namespace tamejl
