#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "tamejl/chartools.hpp"
#include "tamejl/localfield.hpp"

namespace tamejl {

using Rational = boost::rational<std::int64_t>;

/// A = M_m(D) with inv_F(D) = h/d.
struct CsaParams {
    std::int64_t m = 1;
    std::int64_t d = 1;
    std::int64_t h = 0;

    static CsaParams split(std::int64_t n) noexcept { return {n, 1, 0}; }

    std::int64_t n() const noexcept { return m * d; }
    bool is_split() const noexcept { return d == 1; }

    friend bool operator==(const CsaParams&, const CsaParams&) = default;
};

void validate_csa(const CsaParams& A);

/// Every (m, d, h) with m*d = n and gcd(h, d) = 1, ordered by (d, h).
std::vector<CsaParams> enumerate_csa(std::int64_t n);

struct OrderInvariants {
    std::int64_t r = 1;    ///< r(A) = e / gcd(d, e)
    std::int64_t s = 1;    ///< s(A) = gcd(f, m)
    std::int64_t e_F = 1;  ///< e(A/O_F) = d * r
    std::int64_t e_E = 1;  ///< e(A/O_E) = d / gcd(d, e) = f_0

    friend bool operator==(const OrderInvariants&, const OrderInvariants&) = default;
};

OrderInvariants order_invariants(const ExtensionModel& X, const CsaParams& A);

struct CentralizerInvariants {
    std::int64_t m_k = 1;
    std::int64_t d_k = 1;
    std::int64_t e_over_E = 1;  ///< e(A_k/O_E)

    friend bool operator==(const CentralizerInvariants&, const CentralizerInvariants&) = default;
};

/// Invariants of the centralizer A_k of E_k in A, E_k the fixed field of H_k.
CentralizerInvariants centralizer_invariants(const ExtensionModel& X, const CsaParams& A,
                                             SubfieldHandle H_k);

/// An element of Br(F) = Q/Z, kept as a reduced fraction in [0, 1).
class BrauerClass {
public:
    BrauerClass() = default;
    explicit BrauerClass(Rational value);

    static BrauerClass of(const CsaParams& A) { return BrauerClass(Rational(A.h, A.d)); }

    const Rational& value() const noexcept { return value_; }
    bool is_trivial() const noexcept { return value_.numerator() == 0; }
    bool is_two_torsion() const noexcept { return value_.denominator() <= 2; }

    BrauerClass operator+(const BrauerClass& other) const;
    BrauerClass scaled(std::int64_t k) const;

    friend bool operator==(const BrauerClass&, const BrauerClass&) = default;

private:
    Rational value_{0};
};

/// The sign of inv_F(n_alpha [A]) in (1/2)Z/Z; throws NotTwoTorsion otherwise.
Sign brauer_torsion_sign(const CsaParams& A, std::int64_t n_alpha);

/// (-1)^{m v}
Sign symram_epsilon_product(const CsaParams& A, std::int64_t v) noexcept;

}  // namespace tamejl
