#include "tamejl/finmod.hpp"

#include <algorithm>

#include "tamejl/arith.hpp"
#include "tamejl/error.hpp"

namespace tamejl {

using arith::floor_mod;

std::string_view to_string(ModuleClass cls) noexcept
{
    return cls == ModuleClass::Zero ? "0" : "U";
}

std::int64_t u_dim(const ExtensionModel&, const RootOrbit& orbit) noexcept
{
    return orbit.F_alpha.f;
}

std::int64_t coset_dim(const ExtensionModel& X, const DoubleCoset& dc)
{
    if (dc.ij == CosetCoord{0, 0}) return X.f();
    return u_dim(X, make_orbit(X, X.coset_rep(dc.ij)));
}

std::vector<DoubleCoset> graded_piece(const ExtensionModel& X, const CsaParams& A,
                                      std::int64_t j_prime)
{
    const OrderInvariants inv = order_invariants(X, A);
    std::vector<DoubleCoset> out;
    for (auto& dc : enumerate_double_cosets(X)) {
        if (floor_mod(dc.ij.j - A.h * j_prime, inv.e_E) == 0) out.push_back(std::move(dc));
    }
    return out;
}

std::int64_t graded_piece_target(const ExtensionModel& X, const CsaParams& A)
{
    const OrderInvariants inv = order_invariants(X, A);
    return inv.r * inv.s * inv.s * A.d;
}

ModuleClass v_module(const ExtensionModel& X, const CsaParams& A, const TowerShape& shape,
                     GaloisElement g)
{
    const std::int64_t k = depth_index(X, shape, g);
    if (k == -1) return ModuleClass::Zero;
    const JumpData jd = jump_data(X, A, shape, k);
    if (!jd.product_even) return ModuleClass::Zero;
    const OrderInvariants inv = order_invariants(X, A);
    const std::int64_t j = X.coset_of(g).j;
    return floor_mod(j - A.h * jd.j_k(), inv.e_E) == 0 ? ModuleClass::U : ModuleClass::Zero;
}

std::vector<CosetCoord> v_layer(const ExtensionModel& X, const CsaParams& A,
                                const TowerShape& shape, std::int64_t k)
{
    const JumpData jd = jump_data(X, A, shape, k);
    std::vector<CosetCoord> out;
    if (!jd.product_even) return out;
    for (const auto& dc : enumerate_double_cosets(X)) {
        if (dc.ij == CosetCoord{0, 0}) continue;
        const GaloisElement g = X.coset_rep(dc.ij);
        if (depth_index(X, shape, g) != k) continue;
        if (v_module(X, A, shape, g) == ModuleClass::U) out.push_back(dc.ij);
    }
    return out;
}

bool symp_iso_direct(const ExtensionModel& X, const CsaParams& A, const TowerShape& shape,
                     const RootOrbit& orbit)
{
    if (!orbit.symmetric()) {
        throw Error(ErrorKind::NotSymmetric, "module comparison needs a symmetric orbit");
    }
    const CsaParams split = CsaParams::split(A.n());
    return v_module(X, A, shape, orbit.rep) == v_module(X, split, shape, orbit.rep);
}

bool symp_iso_criterion(const ExtensionModel&, const CsaParams& A, const RootOrbit& orbit)
{
    if (!orbit.symmetric()) {
        throw Error(ErrorKind::NotSymmetric, "module comparison needs a symmetric orbit");
    }
    return orbit.ij.j == 0 || A.m % 2 == 0;
}

}  // namespace tamejl
