#include "tamejl/identities.hpp"

#include <algorithm>

#include "tamejl/error.hpp"

namespace tamejl {

std::string_view to_string(Mutation mutation) noexcept
{
    switch (mutation) {
    case Mutation::None: return "none";
    case Mutation::FlipIota: return "flip-iota";
    case Mutation::FlipLegendre: return "flip-legendre";
    case Mutation::FlipModuleClass: return "flip-module";
    }
    return "?";
}

std::shared_ptr<const ExtensionContext> make_context(const ExtensionParams& params)
{
    auto ctx = std::make_shared<ExtensionContext>();
    ctx->X = build_extension(params);
    ctx->orbits = enumerate_orbits(ctx->X);
    ctx->pairs = asymmetric_pairs(ctx->orbits);
    return ctx;
}

Instance make_instance(std::shared_ptr<const ExtensionContext> ext, const CsaParams& A,
                       TowerShape shape, Mutation mutation)
{
    order_invariants(ext->X, A);
    validate_shape(ext->X, shape);
    return {std::move(ext), A, std::move(shape), mutation};
}

namespace {

// Quadratic symbol used on the Kaletha side for asymmetric and symmetric
// unramified roots.
Sign kaletha_symbol(const Instance& inst, const RootOrbit& orbit, MuExponent x, Side side)
{
    Sign s = orbit.cls == RootClass::Asymmetric ? legendre_kx(orbit.Q_alpha, x)
                                                : legendre_k1(orbit.Q_alpha, orbit.q_pm, x);
    if (inst.mutation == Mutation::FlipLegendre && side == Side::Given) s = negate(s);
    return s;
}

// Whether r_k/2 = a_k/(2e) lies in ord_x(alpha) for the algebra of the given side.
bool kaletha_gate(const Instance& inst, const RootOrbit& orbit, Side side)
{
    const std::int64_t k = depth_index(inst.X(), inst.shape, orbit.rep);
    if (k == -1) return false;
    const Rational half_depth(inst.shape.levels[static_cast<std::size_t>(k)], 2 * inst.X().e());
    return ord_contains(inst.X(), inst.side_algebra(side), orbit, half_depth);
}

}  // namespace

TameQuadChar epsilon_alpha(const Instance& inst, const RootOrbit& orbit, Side side)
{
    if (orbit.cls == RootClass::SymmetricRamified) {
        // gamma -> f_side(alpha)^{v_E(gamma)}; the split toral invariant is +1.
        const Sign f_side = side == Side::Split
            ? Sign::plus
            : brauer_torsion_sign(inst.A, orbit.n_alpha());
        return {Sign::plus, f_side};
    }
    if (!kaletha_gate(inst, orbit, side)) return TameQuadChar::trivial();
    const MuExponent at_unit = root_eval(inst.X(), orbit, 1, 0);
    const MuExponent at_uniformizer = root_eval(inst.X(), orbit, 0, 1);
    return {kaletha_symbol(inst, orbit, at_unit, side),
            kaletha_symbol(inst, orbit, at_uniformizer, side)};
}

TameQuadChar epsilon_total(const Instance& inst, Side side)
{
    TameQuadChar out;
    for (const auto& [k, l] : inst.ext->pairs) {
        out = out * epsilon_alpha(inst, inst.ext->orbits[k], side);
    }
    for (const auto& orbit : inst.ext->orbits) {
        if (orbit.symmetric()) out = out * epsilon_alpha(inst, orbit, side);
    }
    return out;
}

Sign iota(const Instance& inst, const RootOrbit& orbit)
{
    Sign out = Sign::plus;
    switch (orbit.cls) {
    case RootClass::Asymmetric:
        throw Error(ErrorKind::NotSymmetric, "iota is defined for symmetric orbits only");
    case RootClass::SymmetricUnramified: {
        const bool power_of_sigma = inst.X().coset_of(orbit.rep).j == 0;
        const bool fixes_uniformizer = orbit.rep.a == 0;
        out = (power_of_sigma || fixes_uniformizer) ? Sign::plus : sign_pow(inst.A.m);
        break;
    }
    case RootClass::SymmetricRamified:
        out = sign_pow(inst.A.m);
        break;
    }
    if (inst.mutation == Mutation::FlipIota) out = negate(out);
    return out;
}

ModuleClass tam_module(const Instance& inst, const RootOrbit& orbit, Side side)
{
    ModuleClass cls = v_module(inst.X(), inst.side_algebra(side), inst.shape, orbit.rep);
    if (inst.mutation == Mutation::FlipModuleClass && side == Side::Given) {
        cls = cls == ModuleClass::U ? ModuleClass::Zero : ModuleClass::U;
    }
    return cls;
}

TameQuadChar zeta_tam_restricted(const Instance& inst, const RootOrbit& orbit)
{
    const Sign io = iota(inst, orbit);
    const bool iso = tam_module(inst, orbit, Side::Given) == tam_module(inst, orbit, Side::Split);
    if (iso) {
        // t-factors of isomorphic modules cancel; only iota survives on varpi_E.
        if (orbit.cls == RootClass::SymmetricUnramified && io != Sign::plus) {
            throw Error(ErrorKind::IotaIncoherence,
                        "isomorphic modules but iota = -1 at a symmetric unramified orbit");
        }
        return {Sign::plus, io};
    }
    if (orbit.cls != RootClass::SymmetricUnramified) {
        throw Error(ErrorKind::CriterionViolation,
                    "non-isomorphic modules at a symmetric ramified orbit");
    }
    // V_A + V_{A*} = U_[g]: the t-factors of U_[g] in closed form.
    const MuExponent at_unit = root_eval(inst.X(), orbit, 1, 0);
    const MuExponent beta = root_eval(inst.X(), orbit, 0, 1);
    const Sign t1_mu = legendre_k1(orbit.Q_alpha, orbit.q_pm, at_unit);
    const Sign t0_fixed = beta.value == 0 ? Sign::minus : Sign::plus;
    const Sign t_varpi = negate(t0_fixed) * legendre_k1(orbit.Q_alpha, orbit.q_pm, beta);
    return {t1_mu, io * t_varpi};
}

TameQuadChar zeta_tam_pair(const Instance& inst, const RootOrbit& orbit)
{
    if (orbit.symmetric()) {
        throw Error(ErrorKind::InvalidParams, "pair product needs an asymmetric orbit");
    }
    const MuExponent at_unit = root_eval(inst.X(), orbit, 1, 0);
    const MuExponent at_uniformizer = root_eval(inst.X(), orbit, 0, 1);
    TameQuadChar out;
    for (Side side : {Side::Given, Side::Split}) {
        if (tam_module(inst, orbit, side) == ModuleClass::Zero) continue;
        out = out * TameQuadChar{perm_sign(orbit.Q_alpha, at_unit),
                                 perm_sign(orbit.Q_alpha, at_uniformizer)};
    }
    return out;
}

TameQuadChar nu_zeta_total(const Instance& inst)
{
    TameQuadChar out;
    for (const auto& [k, l] : inst.ext->pairs) {
        out = out * zeta_tam_pair(inst, inst.ext->orbits[k]);
    }
    for (const auto& orbit : inst.ext->orbits) {
        if (orbit.symmetric()) out = out * zeta_tam_restricted(inst, orbit);
    }
    return out;
}

namespace {

OrbitVerdict judge(const Instance& inst, const RootOrbit& orbit)
{
    OrbitVerdict v;
    v.ij = orbit.ij;
    v.cls = orbit.cls;
    v.depth = depth_index(inst.X(), inst.shape, orbit.rep);
    v.module_given = tam_module(inst, orbit, Side::Given);
    v.module_split = tam_module(inst, orbit, Side::Split);
    v.gate_given = kaletha_gate(inst, orbit, Side::Given);
    v.gate_split = kaletha_gate(inst, orbit, Side::Split);
    v.vmod_ord_agree = (v_module(inst.X(), inst.A, inst.shape, orbit.rep) != ModuleClass::Zero)
                           == v.gate_given
        && (v_module(inst.X(), inst.side_algebra(Side::Split), inst.shape, orbit.rep)
            != ModuleClass::Zero)
               == v.gate_split;
    v.rhs = epsilon_alpha(inst, orbit, Side::Split) * epsilon_alpha(inst, orbit, Side::Given);
    try {
        if (orbit.symmetric()) {
            v.iota = iota(inst, orbit);
            v.lhs = zeta_tam_restricted(inst, orbit);
        } else {
            v.partner = orbit.inverse_ij;
            v.lhs = zeta_tam_pair(inst, orbit);
        }
        v.pass = v.lhs == v.rhs;
    } catch (const Error& err) {
        v.error = err.what();
        v.pass = false;
    }
    return v;
}

}  // namespace

Report verify_instance(const Instance& inst)
{
    Report report;
    TameQuadChar lhs_product;
    TameQuadChar rhs_product;
    bool all_pass = true;
    for (const auto& [k, l] : inst.ext->pairs) {
        report.verdicts.push_back(judge(inst, inst.ext->orbits[k]));
    }
    for (const auto& orbit : inst.ext->orbits) {
        if (orbit.symmetric()) report.verdicts.push_back(judge(inst, orbit));
    }
    std::sort(report.verdicts.begin(), report.verdicts.end(),
              [](const OrbitVerdict& a, const OrbitVerdict& b) { return a.ij < b.ij; });
    for (const auto& v : report.verdicts) {
        lhs_product = lhs_product * v.lhs;
        rhs_product = rhs_product * v.rhs;
        all_pass = all_pass && v.pass;
    }
    report.rhs_total = epsilon_total(inst, Side::Split) * epsilon_total(inst, Side::Given);
    try {
        report.lhs_total = nu_zeta_total(inst);
        report.aggregate_pass = report.lhs_total == report.rhs_total;
        report.products_consistent =
            report.lhs_total == lhs_product && report.rhs_total == rhs_product;
    } catch (const Error& err) {
        report.error = err.what();
        report.aggregate_pass = false;
        report.products_consistent = false;
    }
    report.pass = all_pass && report.aggregate_pass && report.products_consistent;
    return report;
}

}  // namespace tamejl
