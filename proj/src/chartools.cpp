#include "tamejl/chartools.hpp"

#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "tamejl/arith.hpp"
#include "tamejl/error.hpp"

namespace tamejl {

namespace {

using arith::floor_mod;

void require_field_size(std::int64_t field_size)
{
    if (field_size < 2) {
        throw Error(ErrorKind::InvalidParams, "field size must be at least 2");
    }
}

}  // namespace

Sign sign_from_int(std::int64_t v)
{
    if (v == 1) return Sign::plus;
    if (v == -1) return Sign::minus;
    throw Error(ErrorKind::NotQuadratic, "value " + std::to_string(v) + " is not a sign");
}

std::ostream& operator<<(std::ostream& os, Sign s)
{
    return os << (s == Sign::plus ? "+1" : "-1");
}

MuExponent MuExponent::make(std::int64_t value, std::int64_t modulus)
{
    if (modulus < 1) {
        throw Error(ErrorKind::InvalidParams, "modulus must be positive");
    }
    return {floor_mod(value, modulus), modulus};
}

MuExponent operator+(MuExponent a, MuExponent b)
{
    if (a.modulus != b.modulus) {
        throw Error(ErrorKind::InvalidParams, "adding exponents of different cyclic groups");
    }
    return MuExponent::make(a.value + b.value, a.modulus);
}

MuExponent restrict_to_subfield(MuExponent x, std::int64_t field_size)
{
    require_field_size(field_size);
    const std::int64_t order = field_size - 1;
    if (x.modulus % order != 0) {
        throw Error(ErrorKind::NotInSubfield,
                    "mu of order " + std::to_string(order) + " is not inside mu of order "
                        + std::to_string(x.modulus));
    }
    const std::int64_t step = x.modulus / order;
    if (x.value % step != 0) {
        throw Error(ErrorKind::NotInSubfield,
                    "exponent " + std::to_string(x.value) + " is not a multiple of "
                        + std::to_string(step));
    }
    return {x.value / step, order};
}

Sign legendre_kx(std::int64_t field_size, MuExponent x)
{
    const MuExponent local = restrict_to_subfield(x, field_size);
    return sign_pow(local.value);
}

Sign legendre_k1(std::int64_t field_size, std::int64_t sub_size, MuExponent x)
{
    if (sub_size < 2 || sub_size * sub_size != field_size) {
        throw Error(ErrorKind::InvalidParams, "k^1 symbol needs |k| = |k_pm|^2");
    }
    const MuExponent local = restrict_to_subfield(x, field_size);
    // k^1 is the subgroup of index sub_size - 1, cyclic of order sub_size + 1.
    if (local.value % (sub_size - 1) != 0) {
        throw Error(ErrorKind::NotNormOne,
                    "index " + std::to_string(local.value) + " not divisible by "
                        + std::to_string(sub_size - 1));
    }
    return sign_pow(local.value / (sub_size - 1));
}

Sign perm_sign(std::int64_t field_size, MuExponent x)
{
    const MuExponent local = restrict_to_subfield(x, field_size);
    const std::int64_t group_order = local.modulus;
    const std::int64_t order = group_order / std::gcd(local.value, group_order);
    const std::int64_t cycles = group_order / order;
    // A permutation of N points with c cycles has sign (-1)^(N - c); 0 is a fixed point.
    return sign_pow(group_order - cycles);
}

Sign perm_sign_bruteforce(std::int64_t field_size, MuExponent x)
{
    const MuExponent local = restrict_to_subfield(x, field_size);
    const std::int64_t n = field_size;
    // Points: 0 .. n-2 stand for zeta^k, point n-1 stands for the zero element.
    std::vector<std::int64_t> image(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k + 1 < n; ++k) {
        image[static_cast<std::size_t>(k)] = (k + local.value) % local.modulus;
    }
    image[static_cast<std::size_t>(n - 1)] = n - 1;

    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::int64_t transpositions = 0;
    for (std::int64_t start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::int64_t length = 0;
        for (std::int64_t p = start; !seen[static_cast<std::size_t>(p)];
             p = image[static_cast<std::size_t>(p)]) {
            seen[static_cast<std::size_t>(p)] = true;
            ++length;
        }
        transpositions += length - 1;
    }
    return sign_pow(transpositions);
}

TameQuadChar TameQuadChar::from_values(std::int64_t unit_value, std::int64_t uniformizer_value)
{
    return {sign_from_int(unit_value), sign_from_int(uniformizer_value)};
}

Sign char_eval(TameQuadChar chi, std::int64_t u, std::int64_t v) noexcept
{
    Sign out = Sign::plus;
    if (chi.on_unit_gen == Sign::minus) out *= sign_pow(u);
    if (chi.on_uniformizer == Sign::minus) out *= sign_pow(v);
    return out;
}

std::ostream& operator<<(std::ostream& os, const TameQuadChar& chi)
{
    return os << '(' << chi.on_unit_gen << ',' << chi.on_uniformizer << ')';
}

}  // namespace tamejl
