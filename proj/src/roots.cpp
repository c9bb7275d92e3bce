#include "tamejl/roots.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "tamejl/arith.hpp"
#include "tamejl/error.hpp"

namespace tamejl {

using arith::floor_mod;
using arith::mulmod;
using arith::powmod;

std::string_view to_string(RootClass cls) noexcept
{
    switch (cls) {
    case RootClass::Asymmetric: return "asym";
    case RootClass::SymmetricUnramified: return "sym-unram";
    case RootClass::SymmetricRamified: return "sym-ram";
    }
    return "?";
}

namespace {

std::vector<std::int64_t> members_of(const ExtensionModel& X, GaloisElement g)
{
    std::set<std::int64_t> out;
    const auto gE = gamma_E_elements(X);
    for (const auto& h : gE) out.insert(X.coset_index(X.compose(h, g)));
    return {out.begin(), out.end()};
}

}  // namespace

CosetCoord double_coset_of(const ExtensionModel& X, GaloisElement g)
{
    // Coset indices i*f + j order exactly like (i, j) lexicographically.
    return X.coset_coord(members_of(X, g).front());
}

std::vector<DoubleCoset> enumerate_double_cosets(const ExtensionModel& X)
{
    std::vector<DoubleCoset> out;
    std::vector<bool> seen(static_cast<std::size_t>(X.n()), false);
    for (std::int64_t idx = 0; idx < X.n(); ++idx) {
        if (seen[static_cast<std::size_t>(idx)]) continue;
        DoubleCoset dc;
        dc.ij = X.coset_coord(idx);
        dc.members = members_of(X, X.coset_rep(idx));
        for (auto m : dc.members) seen[static_cast<std::size_t>(m)] = true;
        out.push_back(std::move(dc));
    }
    return out;
}

std::vector<GaloisElement> stabilizer(const ExtensionModel& X, GaloisElement g)
{
    const GaloisElement g_inv = X.inverse(g);
    std::vector<GaloisElement> out;
    for (const auto& x : gamma_E_elements(X)) {
        if (X.in_gamma_E(X.compose(g_inv, X.compose(x, g)))) out.push_back(x);
    }
    return out;
}

std::vector<GaloisElement> pm_stabilizer(const ExtensionModel& X, GaloisElement g)
{
    std::vector<GaloisElement> out = stabilizer(X, g);
    for (const auto& h : gamma_E_elements(X)) {
        const GaloisElement x = X.compose(g, h);
        if (X.in_gamma_E(X.compose(x, g))) out.push_back(x);
    }
    return out;
}

RootOrbit make_orbit(const ExtensionModel& X, GaloisElement g)
{
    if (!X.is_valid(g)) {
        throw Error(ErrorKind::InvalidParams, "element violates e*a = (q^c - 1) w_L");
    }
    if (X.in_gamma_E(g)) {
        throw Error(ErrorKind::InvalidParams, "trivial double coset has no root orbit");
    }
    RootOrbit orbit;
    orbit.rep = g;
    orbit.ij = double_coset_of(X, g);
    orbit.inverse_ij = double_coset_of(X, X.inverse(g));
    orbit.F_alpha = subgroup_invariants(X, stabilizer(X, g));
    orbit.F_pm = subgroup_invariants(X, pm_stabilizer(X, g));
    orbit.Q_alpha = arith::checked_pow(X.q(), orbit.F_alpha.f, X.Q());
    orbit.q_pm = arith::checked_pow(X.q(), orbit.F_pm.f, X.Q());
    orbit.cls = classify_by_stabilizers(X, orbit);
    return orbit;
}

std::vector<RootOrbit> enumerate_orbits(const ExtensionModel& X)
{
    std::vector<RootOrbit> out;
    for (const auto& dc : enumerate_double_cosets(X)) {
        if (dc.ij == CosetCoord{0, 0}) continue;
        out.push_back(make_orbit(X, X.coset_rep(dc.ij)));
    }
    return out;
}

RootOrbit with_representative(const ExtensionModel& X, const RootOrbit& orbit, GaloisElement g)
{
    if (double_coset_of(X, g) != orbit.ij) {
        throw Error(ErrorKind::InvalidParams, "representative lies in a different double coset");
    }
    RootOrbit out = make_orbit(X, g);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> asymmetric_pairs(
    const std::vector<RootOrbit>& orbits)
{
    std::map<CosetCoord, std::size_t> index;
    for (std::size_t k = 0; k < orbits.size(); ++k) index[orbits[k].ij] = k;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        if (orbits[k].symmetric()) continue;
        const std::size_t l = index.at(orbits[k].inverse_ij);
        if (k < l) out.emplace_back(k, l);
    }
    return out;
}

RootClass classify_by_stabilizers(const ExtensionModel& X, const RootOrbit& orbit)
{
    if (double_coset_of(X, X.inverse(orbit.rep)) != double_coset_of(X, orbit.rep)) {
        return RootClass::Asymmetric;
    }
    const FieldInvariants Fa = subgroup_invariants(X, stabilizer(X, orbit.rep));
    const FieldInvariants Fpm = subgroup_invariants(X, pm_stabilizer(X, orbit.rep));
    return Fa.e == Fpm.e ? RootClass::SymmetricUnramified : RootClass::SymmetricRamified;
}

RootClass classify_by_criterion(const ExtensionModel& X, const RootOrbit& orbit)
{
    const CosetCoord ij = double_coset_of(X, orbit.rep);
    if (double_coset_of(X, X.inverse(orbit.rep)) != ij) return RootClass::Asymmetric;
    const std::int64_t f = X.f();
    if (ij.j != 0 && 2 * ij.j != f) {
        throw Error(ErrorKind::CriterionViolation,
                    "symmetric coset with j=" + std::to_string(ij.j) + ", f=" + std::to_string(f));
    }
    if (X.e() % 2 == 0) {
        const GaloisElement middle = X.power(X.sigma(), X.e() / 2);
        if (double_coset_of(X, middle) == ij) return RootClass::SymmetricRamified;
    }
    return RootClass::SymmetricUnramified;
}

MuExponent root_eval(const ExtensionModel& X, const RootOrbit& orbit, std::int64_t u,
                     std::int64_t v)
{
    const std::int64_t M = X.mu_order();
    const std::int64_t unit = mulmod(floor_mod(u, M), X.u_E(), M);
    const std::int64_t one_minus_qc = floor_mod(1 - powmod(X.q(), orbit.rep.c, M), M);
    const std::int64_t value = mulmod(unit, one_minus_qc, M) - mulmod(floor_mod(v, M), orbit.rep.a, M);
    return MuExponent::make(value, M);
}

bool ord_contains(const ExtensionModel& X, const CsaParams& A, const RootOrbit& orbit,
                  const Rational& r)
{
    const OrderInvariants inv = order_invariants(X, A);
    const Rational jp = r * inv.e_F;
    if (jp.denominator() != 1) return false;
    const std::int64_t j = orbit.ij.j;
    return floor_mod(j - A.h * jp.numerator(), inv.e_E) == 0;
}

}  // namespace tamejl
