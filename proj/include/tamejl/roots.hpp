#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "tamejl/chartools.hpp"
#include "tamejl/csa.hpp"
#include "tamejl/localfield.hpp"

namespace tamejl {

enum class RootClass { Asymmetric, SymmetricUnramified, SymmetricRamified };

std::string_view to_string(RootClass cls) noexcept;

inline bool is_symmetric(RootClass cls) noexcept { return cls != RootClass::Asymmetric; }

/// A double coset Gamma_E g Gamma_E, trivial or not.
struct DoubleCoset {
    CosetCoord ij;                      ///< lexicographically least (i, j) in the coset
    std::vector<std::int64_t> members;  ///< left coset indices, ascending
};

/// All double cosets, ordered by canonical (i, j); the trivial one comes first.
std::vector<DoubleCoset> enumerate_double_cosets(const ExtensionModel& X);

/// Canonical (i, j) of the double coset containing g.
CosetCoord double_coset_of(const ExtensionModel& X, GaloisElement g);

struct RootOrbit {
    GaloisElement rep;  ///< representative used for all evaluations
    CosetCoord ij;      ///< canonical coordinates of the double coset
    RootClass cls = RootClass::Asymmetric;
    FieldInvariants F_alpha;  ///< (e, f) of F_alpha = E g(E)
    FieldInvariants F_pm;     ///< (e, f) of F_{+-alpha}; equals F_alpha when asymmetric
    std::int64_t Q_alpha = 0;  ///< |k_{F_alpha}|
    std::int64_t q_pm = 0;     ///< |k_{F_{+-alpha}}|
    CosetCoord inverse_ij;     ///< canonical coordinates of [g^{-1}]

    /// [F_{+-alpha} : F]
    std::int64_t n_alpha() const noexcept { return F_pm.degree(); }
    bool symmetric() const noexcept { return is_symmetric(cls); }
};

/// One entry per nontrivial double coset, canonical (i, j) ascending.
std::vector<RootOrbit> enumerate_orbits(const ExtensionModel& X);

/// Builds the orbit data of [g] using g itself as the representative.
RootOrbit make_orbit(const ExtensionModel& X, GaloisElement g);

/// Same orbit evaluated through another representative g' of the same
/// double coset. Throws InvalidParams if g' lies elsewhere.
RootOrbit with_representative(const ExtensionModel& X, const RootOrbit& orbit, GaloisElement g);

/// Index pairs (k, l) into `orbits` with [g_l] = [g_k^{-1}], k < l.
std::vector<std::pair<std::size_t, std::size_t>> asymmetric_pairs(
    const std::vector<RootOrbit>& orbits);

/// Gamma_alpha = Gamma_E cap g Gamma_E g^{-1}.
std::vector<GaloisElement> stabilizer(const ExtensionModel& X, GaloisElement g);

/// Gamma_{+-alpha}: Gamma_alpha together with the elements swapping alpha and -alpha.
std::vector<GaloisElement> pm_stabilizer(const ExtensionModel& X, GaloisElement g);

RootClass classify_by_stabilizers(const ExtensionModel& X, const RootOrbit& orbit);
RootClass classify_by_criterion(const ExtensionModel& X, const RootOrbit& orbit);

/// Exponent in mu_L of alpha(zeta_E^u varpi_E^v).
MuExponent root_eval(const ExtensionModel& X, const RootOrbit& orbit, std::int64_t u,
                     std::int64_t v);

/// Whether r lies in ord_x(alpha) for the principal order attached to A.
bool ord_contains(const ExtensionModel& X, const CsaParams& A, const RootOrbit& orbit,
                  const Rational& r);

}  // namespace tamejl
