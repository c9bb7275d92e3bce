#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace tamejl {

/// Residue cardinality q of F, ramification index e, residue degree f of E/F,
/// and the exponent w of z_{E/F} (where varpi_E^e = z_{E/F} varpi_F) in mu_E.
struct ExtensionParams {
    std::int64_t q = 3;
    std::int64_t e = 1;
    std::int64_t f = 1;
    std::int64_t w = 0;

    std::int64_t n() const noexcept { return e * f; }

    friend bool operator==(const ExtensionParams&, const ExtensionParams&) = default;
};

/// g(varpi_E) = zeta^a varpi_E and g(x) = x^{q^c} on mu_L.
struct GaloisElement {
    std::int64_t a = 0;
    std::int64_t c = 0;

    friend bool operator==(const GaloisElement&, const GaloisElement&) = default;
    friend auto operator<=>(const GaloisElement&, const GaloisElement&) = default;
};

/// A subgroup H with Gamma_{L/E} <= H <= Gamma_{L/F}, stored as the set of left
/// cosets g Gamma_{L/E} it contains. Bit i*f + j stands for sigma^i phi^j.
struct SubfieldHandle {
    std::uint64_t cosets = 0;

    friend bool operator==(const SubfieldHandle&, const SubfieldHandle&) = default;
    friend auto operator<=>(const SubfieldHandle&, const SubfieldHandle&) = default;
};

/// (e, f) of a subfield M over F.
struct FieldInvariants {
    std::int64_t e = 1;
    std::int64_t f = 1;

    std::int64_t degree() const noexcept { return e * f; }

    friend bool operator==(const FieldInvariants&, const FieldInvariants&) = default;
};

/// Coset coordinates (i, j) of sigma^i phi^j.
struct CosetCoord {
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend bool operator==(const CosetCoord&, const CosetCoord&) = default;
    friend auto operator<=>(const CosetCoord&, const CosetCoord&) = default;
};

class ExtensionModel {
public:
    const ExtensionParams& params() const noexcept { return params_; }
    std::int64_t q() const noexcept { return params_.q; }
    std::int64_t e() const noexcept { return params_.e; }
    std::int64_t f() const noexcept { return params_.f; }
    std::int64_t n() const noexcept { return params_.e * params_.f; }

    std::int64_t f_L() const noexcept { return f_L_; }
    /// |k_L|
    std::int64_t Q() const noexcept { return Q_; }
    /// |mu_L| = Q - 1
    std::int64_t mu_order() const noexcept { return Q_ - 1; }
    /// (Q-1)/(q^f-1): exponent of the generator of mu_E inside mu_L.
    std::int64_t u_E() const noexcept { return u_E_; }
    std::int64_t w_L() const noexcept { return w_L_; }
    std::int64_t w_e() const noexcept { return w_e_; }

    GaloisElement sigma() const noexcept { return sigma_; }
    GaloisElement phi() const noexcept { return phi_; }
    GaloisElement identity() const noexcept { return {0, 0}; }
    /// Generator (0, f) of the cyclic group Gamma_{L/E}.
    GaloisElement phi_E() const noexcept { return {0, params_.f % f_L_}; }

    GaloisElement compose(GaloisElement g, GaloisElement h) const noexcept;
    GaloisElement inverse(GaloisElement g) const noexcept;
    GaloisElement power(GaloisElement g, std::int64_t k) const noexcept;
    bool is_valid(GaloisElement g) const noexcept;

    /// sigma^i phi^j
    GaloisElement coset_rep(CosetCoord ij) const noexcept;
    GaloisElement coset_rep(std::int64_t index) const noexcept;
    CosetCoord coset_of(GaloisElement g) const noexcept;
    std::int64_t coset_index(GaloisElement g) const noexcept;
    std::int64_t coset_index(CosetCoord ij) const noexcept { return ij.i * params_.f + ij.j; }
    CosetCoord coset_coord(std::int64_t index) const noexcept
    {
        return {index / params_.f, index % params_.f};
    }

    bool in_gamma_E(GaloisElement g) const noexcept { return coset_index(g) == 0; }

    SubfieldHandle gamma_E() const noexcept { return {1}; }
    SubfieldHandle gamma_F() const noexcept;

    friend ExtensionModel build_extension(const ExtensionParams& params);

private:
    ExtensionParams params_{};
    std::int64_t f_L_ = 1;
    std::int64_t Q_ = 2;
    std::int64_t u_E_ = 1;
    std::int64_t w_L_ = 0;
    std::int64_t w_e_ = 0;
    GaloisElement sigma_{};
    GaloisElement phi_{};
    std::vector<GaloisElement> phi_powers_;
};

/// Checks the parameter invariants without building anything.
void validate_params(const ExtensionParams& params);

ExtensionModel build_extension(const ExtensionParams& params);

inline GaloisElement compose(const ExtensionModel& X, GaloisElement g, GaloisElement h)
{
    return X.compose(g, h);
}

inline GaloisElement inverse(const ExtensionModel& X, GaloisElement g)
{
    return X.inverse(g);
}

/// Every (a, c) satisfying e*a = (q^c - 1) w_L mod Q-1, ordered by (c, a).
std::vector<GaloisElement> enumerate_group(const ExtensionModel& X);

/// Elements of Gamma_{L/E}: (0, c) with f | c.
std::vector<GaloisElement> gamma_E_elements(const ExtensionModel& X);

/// Expands a handle into the explicit list of its group elements.
std::vector<GaloisElement> elements_of(const ExtensionModel& X, SubfieldHandle H);

/// Closure check on the coset mask. Throws NotASubgroup on failure.
void check_subgroup(const ExtensionModel& X, SubfieldHandle H);
bool is_subgroup(const ExtensionModel& X, SubfieldHandle H) noexcept;

/// Smallest subgroup containing Gamma_{L/E} and the given cosets.
SubfieldHandle subgroup_closure(const ExtensionModel& X, SubfieldHandle seed);

/// All subgroups between Gamma_{L/E} and Gamma_{L/F}, ascending by mask.
std::vector<SubfieldHandle> enumerate_subfields(const ExtensionModel& X);

bool contains(SubfieldHandle H, std::int64_t coset_index) noexcept;
std::int64_t coset_count(SubfieldHandle H) noexcept;

/// Invariants (e_M, f_M) of the fixed field M of H.
FieldInvariants subfield_invariants(const ExtensionModel& X, SubfieldHandle H);

/// Same, for an arbitrary subgroup given by its elements (need not contain
/// Gamma_{L/E}). The list is checked for closure.
FieldInvariants subgroup_invariants(const ExtensionModel& X,
                                    const std::vector<GaloisElement>& elements);

/// Number of cosets in H lying over the inertia subgroup, i.e. |H cap I|.
std::int64_t inertia_order(const ExtensionModel& X, SubfieldHandle H) noexcept;

}  // namespace tamejl
