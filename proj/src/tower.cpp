#include "tamejl/tower.hpp"

#include <functional>
#include <string>

#include "tamejl/error.hpp"

namespace tamejl {

void validate_shape(const ExtensionModel& X, const TowerShape& shape)
{
    const std::int64_t t = shape.t();
    if (static_cast<std::int64_t>(shape.subgroups.size()) != t + 1) {
        throw Error(ErrorKind::InvalidParams, "tower needs exactly t+1 subgroups for t levels");
    }
    for (const auto& H : shape.subgroups) check_subgroup(X, H);
    if (shape.subgroups.back() != X.gamma_F()) {
        throw Error(ErrorKind::NonStrictTower, "tower must end at F");
    }
    if (t >= 1 && inertia_order(X, shape.subgroups.front()) != 1) {
        throw Error(ErrorKind::UnramifiedViolation, "E/E_0 is ramified");
    }
    for (std::int64_t k = 0; k < t; ++k) {
        const auto lo = shape.subgroups[static_cast<std::size_t>(k)].cosets;
        const auto hi = shape.subgroups[static_cast<std::size_t>(k + 1)].cosets;
        if ((lo & ~hi) != 0 || lo == hi) {
            throw Error(ErrorKind::NonStrictTower,
                        "H_" + std::to_string(k) + " is not properly contained in H_"
                            + std::to_string(k + 1));
        }
    }
    for (std::int64_t k = 0; k < t; ++k) {
        const std::int64_t a = shape.levels[static_cast<std::size_t>(k)];
        const std::int64_t prev = k == 0 ? 0 : shape.levels[static_cast<std::size_t>(k - 1)];
        if (a <= prev) {
            throw Error(ErrorKind::NonIncreasingLevels,
                        "level a_" + std::to_string(k) + " = " + std::to_string(a)
                            + " does not exceed " + std::to_string(prev));
        }
    }
}

std::vector<TowerShape> enumerate_shapes(const ExtensionModel& X, std::int64_t max_t,
                                         std::int64_t max_level)
{
    const auto lattice = enumerate_subfields(X);
    const SubfieldHandle top = X.gamma_F();
    std::vector<TowerShape> out;
    out.push_back(TowerShape::trivial(X));

    // Chains H_0 < ... < H_t = top, grown downward from the top.
    std::vector<std::vector<SubfieldHandle>> chains;
    std::function<void(std::vector<SubfieldHandle>&)> grow = [&](std::vector<SubfieldHandle>& chain) {
        const std::int64_t t = static_cast<std::int64_t>(chain.size()) - 1;
        if (t >= 1 && inertia_order(X, chain.back()) == 1) {
            chains.emplace_back(chain.rbegin(), chain.rend());
        }
        if (t >= max_t) return;
        const auto upper = chain.back().cosets;
        for (const auto& H : lattice) {
            if ((H.cosets & ~upper) != 0 || H.cosets == upper) continue;
            chain.push_back(H);
            grow(chain);
            chain.pop_back();
        }
    };
    std::vector<SubfieldHandle> start{top};
    grow(start);

    for (const auto& chain : chains) {
        const auto t = static_cast<std::int64_t>(chain.size()) - 1;
        std::vector<std::int64_t> levels;
        std::function<void(std::int64_t)> pick = [&](std::int64_t lowest) {
            if (static_cast<std::int64_t>(levels.size()) == t) {
                out.push_back({chain, levels});
                return;
            }
            for (std::int64_t a = lowest; a <= max_level; ++a) {
                levels.push_back(a);
                pick(a + 1);
                levels.pop_back();
            }
        };
        pick(1);
    }
    return out;
}

std::int64_t depth_index(const ExtensionModel& X, const TowerShape& shape, GaloisElement g)
{
    const std::int64_t idx = X.coset_index(g);
    for (std::size_t k = 0; k < shape.subgroups.size(); ++k) {
        if (contains(shape.subgroups[k], idx)) return static_cast<std::int64_t>(k) - 1;
    }
    throw Error(ErrorKind::InvalidParams, "element outside Gamma_{L/F}");
}

JumpData jump_data(const ExtensionModel& X, const CsaParams& A, const TowerShape& shape,
                   std::int64_t k)
{
    if (k < 0 || k >= shape.t()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "k=" + std::to_string(k) + " outside [0, " + std::to_string(shape.t()) + ")");
    }
    const OrderInvariants inv = order_invariants(X, A);
    JumpData out;
    out.k = k;
    out.a_k = shape.levels[static_cast<std::size_t>(k)];
    out.e_next =
        centralizer_invariants(X, A, shape.subgroups[static_cast<std::size_t>(k + 1)]).e_over_E;
    out.product_even = (out.a_k * out.e_next) % 2 == 0;
    out.two_j_k = out.a_k * inv.e_E;
    return out;
}

}  // namespace tamejl
