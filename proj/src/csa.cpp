#include "tamejl/csa.hpp"

#include <numeric>
#include <string>

#include "tamejl/arith.hpp"
#include "tamejl/error.hpp"

namespace tamejl {

void validate_csa(const CsaParams& A)
{
    if (A.m < 1 || A.d < 1) {
        throw Error(ErrorKind::InvalidParams, "m and d must be positive");
    }
    if (A.h < 0 || A.h >= A.d) {
        throw Error(ErrorKind::InvalidParams, "h must lie in [0, d)");
    }
    if (std::gcd(A.h, A.d) != 1) {
        throw Error(ErrorKind::InvalidParams,
                    "gcd(h, d) = " + std::to_string(std::gcd(A.h, A.d)) + ", expected 1");
    }
}

std::vector<CsaParams> enumerate_csa(std::int64_t n)
{
    std::vector<CsaParams> out;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        for (std::int64_t h = 0; h < d; ++h) {
            if (std::gcd(h, d) == 1) out.push_back({n / d, d, h});
        }
    }
    return out;
}

OrderInvariants order_invariants(const ExtensionModel& X, const CsaParams& A)
{
    validate_csa(A);
    if (A.n() != X.n()) {
        throw Error(ErrorKind::DimensionMismatch, "m*d = " + std::to_string(A.n())
                                                      + " but e*f = " + std::to_string(X.n()));
    }
    OrderInvariants out;
    const std::int64_t g = std::gcd(A.d, X.e());
    out.r = X.e() / g;
    out.s = std::gcd(X.f(), A.m);
    out.e_F = A.d * out.r;
    out.e_E = A.d / g;
    return out;
}

CentralizerInvariants centralizer_invariants(const ExtensionModel& X, const CsaParams& A,
                                             SubfieldHandle H_k)
{
    const FieldInvariants Ek = subfield_invariants(X, H_k);
    const std::int64_t deg_Ek = Ek.degree();
    const std::int64_t deg_E_over_Ek = X.n() / deg_Ek;
    const std::int64_t f_E_over_Ek = X.f() / Ek.f;
    CentralizerInvariants out;
    out.m_k = std::gcd(A.m, deg_E_over_Ek);
    out.d_k = A.d / std::gcd(A.d, deg_Ek);
    out.e_over_E = f_E_over_Ek / std::gcd(A.m, f_E_over_Ek);
    return out;
}

BrauerClass::BrauerClass(Rational value)
{
    // boost::rational keeps the denominator positive; reduce into [0, 1).
    const std::int64_t den = value.denominator();
    value_ = Rational(arith::floor_mod(value.numerator(), den), den);
}

BrauerClass BrauerClass::operator+(const BrauerClass& other) const
{
    return BrauerClass(value_ + other.value_);
}

BrauerClass BrauerClass::scaled(std::int64_t k) const
{
    return BrauerClass(value_ * k);
}

Sign brauer_torsion_sign(const CsaParams& A, std::int64_t n_alpha)
{
    const BrauerClass cls = BrauerClass::of(A).scaled(n_alpha);
    if (cls.is_trivial()) return Sign::plus;
    if (cls.value() == Rational(1, 2)) return Sign::minus;
    throw Error(ErrorKind::NotTwoTorsion,
                std::to_string(n_alpha) + " * " + std::to_string(A.h) + "/" + std::to_string(A.d)
                    + " is not 2-torsion in Q/Z");
}

Sign symram_epsilon_product(const CsaParams& A, std::int64_t v) noexcept
{
    return sign_pow(A.m * v);
}

}  // namespace tamejl
