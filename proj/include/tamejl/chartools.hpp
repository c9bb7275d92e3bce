#pragma once

#include <cstdint>
#include <iosfwd>

namespace tamejl {

/// Element of the multiplicative group {+1, -1}.
enum class Sign : int { plus = 1, minus = -1 };

constexpr Sign operator*(Sign a, Sign b) noexcept
{
    return a == b ? Sign::plus : Sign::minus;
}

constexpr Sign& operator*=(Sign& a, Sign b) noexcept
{
    a = a * b;
    return a;
}

constexpr Sign negate(Sign s) noexcept { return s * Sign::minus; }

/// (-1)^k
constexpr Sign sign_pow(std::int64_t k) noexcept
{
    return (k % 2 == 0) ? Sign::plus : Sign::minus;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// Checked conversion from an integer value; anything but +-1 raises NotQuadratic.
Sign sign_from_int(std::int64_t v);

std::ostream& operator<<(std::ostream& os, Sign s);

/// Exponent of a root of unity with respect to a fixed generator of a cyclic
/// group of order `modulus`. The value is always reduced into [0, modulus).
struct MuExponent {
    std::int64_t value = 0;
    std::int64_t modulus = 1;

    static MuExponent make(std::int64_t value, std::int64_t modulus);

    friend bool operator==(const MuExponent&, const MuExponent&) = default;
};

MuExponent operator+(MuExponent a, MuExponent b);

/// Re-expresses x as an exponent of the generator of the subgroup of order
/// field_size - 1. Throws NotInSubfield when x lies outside that subgroup.
MuExponent restrict_to_subfield(MuExponent x, std::int64_t field_size);

/// Quadratic character of k^x for |k| = field_size.
Sign legendre_kx(std::int64_t field_size, MuExponent x);

/// Quadratic character of the norm-one subgroup k^1 of k/k_pm, where
/// |k| = field_size = sub_size^2.
Sign legendre_k1(std::int64_t field_size, std::int64_t sub_size, MuExponent x);

/// Signature of multiplication by x as a permutation of the field of size
/// field_size, from the cycle structure: (Q-1)/t cycles of length t on k^x.
Sign perm_sign(std::int64_t field_size, MuExponent x);

/// Same signature, computed by walking every cycle of the permutation
/// explicitly. Intended for small fields.
Sign perm_sign_bruteforce(std::int64_t field_size, MuExponent x);

/// A {+-1}-valued character of E^x trivial on 1 + p_E, stored through its
/// values on the fixed generator of mu_E and on the uniformizer.
struct TameQuadChar {
    Sign on_unit_gen = Sign::plus;
    Sign on_uniformizer = Sign::plus;

    static constexpr TameQuadChar trivial() noexcept { return {}; }

    /// Builds the character from raw integer values; raises NotQuadratic
    /// unless both are +-1.
    static TameQuadChar from_values(std::int64_t unit_value, std::int64_t uniformizer_value);

    bool is_trivial() const noexcept
    {
        return on_unit_gen == Sign::plus && on_uniformizer == Sign::plus;
    }

    friend bool operator==(const TameQuadChar&, const TameQuadChar&) = default;
};

constexpr TameQuadChar char_mul(TameQuadChar a, TameQuadChar b) noexcept
{
    return {a.on_unit_gen * b.on_unit_gen, a.on_uniformizer * b.on_uniformizer};
}

constexpr TameQuadChar operator*(TameQuadChar a, TameQuadChar b) noexcept
{
    return char_mul(a, b);
}

/// Value at zeta_E^u * varpi_E^v.
Sign char_eval(TameQuadChar chi, std::int64_t u, std::int64_t v) noexcept;

std::ostream& operator<<(std::ostream& os, const TameQuadChar& chi);

}  // namespace tamejl
