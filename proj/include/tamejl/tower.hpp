#pragma once

#include <cstdint>
#include <vector>

#include "tamejl/csa.hpp"
#include "tamejl/localfield.hpp"

namespace tamejl {

/// Subfield chain E_0 > E_1 > ... > E_t = F, stored as the Galois subgroups
/// H_0 < H_1 < ... < H_t = Gamma_{L/F}, with levels a_0 < ... < a_{t-1}.
struct TowerShape {
    std::vector<SubfieldHandle> subgroups;
    std::vector<std::int64_t> levels;

    std::int64_t t() const noexcept { return static_cast<std::int64_t>(levels.size()); }

    /// The shape with t = 0, i.e. H_0 = Gamma_{L/F}.
    static TowerShape trivial(const ExtensionModel& X) { return {{X.gamma_F()}, {}}; }

    friend bool operator==(const TowerShape&, const TowerShape&) = default;
};

struct JumpData {
    std::int64_t k = 0;
    std::int64_t a_k = 0;
    std::int64_t e_next = 1;  ///< e(A_{k+1}/O_E)
    bool product_even = false;
    std::int64_t two_j_k = 0;  ///< 2 j_k = a_k e(A/O_E)

    /// j_k; meaningful when product_even holds.
    std::int64_t j_k() const noexcept { return two_j_k / 2; }
};

/// Throws UnramifiedViolation, NonStrictTower or NonIncreasingLevels. A t = 0
/// shape is accepted for every extension.
void validate_shape(const ExtensionModel& X, const TowerShape& shape);

/// All valid shapes with t <= max_t and levels in [1, max_level].
std::vector<TowerShape> enumerate_shapes(const ExtensionModel& X, std::int64_t max_t,
                                         std::int64_t max_level);

/// k with g in H_{k+1} - H_k; -1 when g lies in H_0.
std::int64_t depth_index(const ExtensionModel& X, const TowerShape& shape, GaloisElement g);

JumpData jump_data(const ExtensionModel& X, const CsaParams& A, const TowerShape& shape,
                   std::int64_t k);

}  // namespace tamejl
