#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamejl/chartools.hpp"
#include "tamejl/csa.hpp"
#include "tamejl/finmod.hpp"
#include "tamejl/localfield.hpp"
#include "tamejl/roots.hpp"
#include "tamejl/tower.hpp"

namespace tamejl {

enum class Side { Split, Given };

/// Deliberate corruptions used to show the verifier is not vacuous.
enum class Mutation { None, FlipIota, FlipLegendre, FlipModuleClass };

std::string_view to_string(Mutation mutation) noexcept;

/// Everything about E/F that does not depend on A or the tower.
struct ExtensionContext {
    ExtensionModel X;
    std::vector<RootOrbit> orbits;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

std::shared_ptr<const ExtensionContext> make_context(const ExtensionParams& params);

struct Instance {
    std::shared_ptr<const ExtensionContext> ext;
    CsaParams A;
    TowerShape shape;
    Mutation mutation = Mutation::None;

    const ExtensionModel& X() const noexcept { return ext->X; }

    CsaParams side_algebra(Side side) const noexcept
    {
        return side == Side::Split ? CsaParams::split(A.n()) : A;
    }
};

/// Validates A against X and the shape, then assembles the instance.
Instance make_instance(std::shared_ptr<const ExtensionContext> ext, const CsaParams& A,
                       TowerShape shape, Mutation mutation = Mutation::None);

/// Kaletha's per-root character epsilon_alpha restricted to E^x.
TameQuadChar epsilon_alpha(const Instance& inst, const RootOrbit& orbit, Side side);

/// Product of epsilon_alpha over one root per +-pair of asymmetric orbits and
/// over every symmetric orbit.
TameQuadChar epsilon_total(const Instance& inst, Side side);

/// iota_g for a symmetric orbit; throws NotSymmetric otherwise.
Sign iota(const Instance& inst, const RootOrbit& orbit);

/// Module class of V_A[g] (side Given) or V_{A*}[g] (side Split) as seen by the
/// Tam side; honours Mutation::FlipModuleClass.
ModuleClass tam_module(const Instance& inst, const RootOrbit& orbit, Side side);

/// zeta_{Tam,alpha} restricted to E^x for a symmetric orbit. Throws
/// IotaIncoherence when the modules agree but iota is not +1 on a symmetric
/// unramified orbit.
TameQuadChar zeta_tam_restricted(const Instance& inst, const RootOrbit& orbit);

/// zeta_{Tam,alpha} zeta_{Tam,alpha'} restricted to E^x for alpha = [1; g],
/// alpha' = [1; g^{-1}].
TameQuadChar zeta_tam_pair(const Instance& inst, const RootOrbit& orbit);

/// Product of the symmetric characters and the asymmetric pair products.
TameQuadChar nu_zeta_total(const Instance& inst);

struct OrbitVerdict {
    CosetCoord ij;
    std::optional<CosetCoord> partner;  ///< [g^{-1}] for asymmetric pairs
    RootClass cls = RootClass::Asymmetric;
    TameQuadChar lhs;  ///< Tam side
    TameQuadChar rhs;  ///< epsilon_{G*} epsilon_G
    bool pass = false;

    std::int64_t depth = -1;
    ModuleClass module_given = ModuleClass::Zero;
    ModuleClass module_split = ModuleClass::Zero;
    bool gate_given = false;  ///< ord_x membership on the Kaletha side
    bool gate_split = false;
    bool vmod_ord_agree = true;
    std::optional<Sign> iota;
    std::string error;  ///< set when the Tam side raised instead of returning
};

struct Report {
    std::vector<OrbitVerdict> verdicts;
    TameQuadChar lhs_total;  ///< nu_{zeta_Tam}
    TameQuadChar rhs_total;  ///< epsilon_total(Split) * epsilon_total(Given)
    bool aggregate_pass = false;
    bool products_consistent = false;  ///< totals equal the products of per-orbit values
    bool pass = false;
    std::string error;
};

Report verify_instance(const Instance& inst);

}  // namespace tamejl
