#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tamejl/csa.hpp"
#include "tamejl/localfield.hpp"
#include "tamejl/roots.hpp"
#include "tamejl/tower.hpp"

namespace tamejl {

/// Isomorphism class of V_A[g]: either 0 or U_[g].
enum class ModuleClass { Zero, U };

std::string_view to_string(ModuleClass cls) noexcept;

/// k_F-dimension of U_[g], i.e. f(F_alpha/F).
std::int64_t u_dim(const ExtensionModel& X, const RootOrbit& orbit) noexcept;

/// k_F-dimension of the summand attached to a double coset; the trivial
/// coset contributes k_E of dimension f.
std::int64_t coset_dim(const ExtensionModel& X, const DoubleCoset& dc);

/// Double cosets [sigma^i phi^j] with j = h j' mod f_0, including [1] when it qualifies.
std::vector<DoubleCoset> graded_piece(const ExtensionModel& X, const CsaParams& A,
                                      std::int64_t j_prime);

/// r(A) s(A)^2 [k_D : k_F]
std::int64_t graded_piece_target(const ExtensionModel& X, const CsaParams& A);

ModuleClass v_module(const ExtensionModel& X, const CsaParams& A, const TowerShape& shape,
                     GaloisElement g);

/// Canonical coordinates of the double cosets in H_{k+1} - H_k contributing U.
std::vector<CosetCoord> v_layer(const ExtensionModel& X, const CsaParams& A,
                                const TowerShape& shape, std::int64_t k);

/// V_A[g] = V_{A*}[g] by comparing the two module classes.
bool symp_iso_direct(const ExtensionModel& X, const CsaParams& A, const TowerShape& shape,
                     const RootOrbit& orbit);

/// The closed-form answer: j = 0 or m even.
bool symp_iso_criterion(const ExtensionModel& X, const CsaParams& A, const RootOrbit& orbit);

}  // namespace tamejl
