#include "tamejl/localfield.hpp"

#include <bit>
#include <deque>
#include <set>
#include <string>

#include "tamejl/arith.hpp"
#include "tamejl/error.hpp"

namespace tamejl {

using arith::floor_mod;
using arith::mulmod;
using arith::powmod;

namespace {

// Q - 1 must stay well inside int64 so that exponent sums never overflow.
constexpr std::int64_t kMaxFieldSize = std::int64_t{1} << 61;
constexpr std::int64_t kMaxDegree = 64;

std::string describe(const ExtensionParams& p)
{
    return "q=" + std::to_string(p.q) + " e=" + std::to_string(p.e) + " f=" + std::to_string(p.f)
        + " w=" + std::to_string(p.w);
}

}  // namespace

void validate_params(const ExtensionParams& p)
{
    if (p.q < 3 || !arith::is_prime_power(p.q)) {
        throw Error(ErrorKind::InvalidParams, "q must be a prime power, got " + std::to_string(p.q));
    }
    const std::int64_t prime = arith::smallest_prime_factor(p.q);
    if (prime == 2) {
        throw Error(ErrorKind::InvalidParams, "q must be odd, got " + std::to_string(p.q));
    }
    if (p.e < 1 || p.f < 1) {
        throw Error(ErrorKind::InvalidParams, "e and f must be positive");
    }
    if (p.e % prime == 0) {
        throw Error(ErrorKind::TameViolation,
                    "p=" + std::to_string(prime) + " divides e=" + std::to_string(p.e));
    }
    if (p.e * p.f > kMaxDegree) {
        throw Error(ErrorKind::InvalidParams, "degree n=ef above " + std::to_string(kMaxDegree));
    }
    const std::int64_t qf = arith::checked_pow(p.q, p.f, kMaxFieldSize);
    if (qf < 0) {
        throw Error(ErrorKind::InvalidParams, "q^f too large: " + describe(p));
    }
    if (p.w < 0 || p.w >= qf - 1) {
        throw Error(ErrorKind::InvalidParams,
                    "w must lie in [0, q^f - 1), got " + std::to_string(p.w));
    }
}

ExtensionModel build_extension(const ExtensionParams& params)
{
    validate_params(params);
    const std::int64_t q = params.q;
    const std::int64_t e = params.e;
    const std::int64_t f = params.f;
    const std::int64_t qf_minus_1 = arith::checked_pow(q, f, kMaxFieldSize) - 1;

    ExtensionModel X;
    X.params_ = params;

    bool found = false;
    for (std::int64_t fp = f; fp <= f * e * e; fp += f) {
        const std::int64_t Qp = arith::checked_pow(q, fp, kMaxFieldSize);
        if (Qp < 0) {
            throw Error(ErrorKind::InvalidParams, "splitting field too large: " + describe(params));
        }
        const std::int64_t M = Qp - 1;
        if (M % e != 0) continue;
        const std::int64_t uE = M / qf_minus_1;
        if (mulmod(params.w, uE, e) != 0) continue;
        X.f_L_ = fp;
        X.Q_ = Qp;
        found = true;
        break;
    }
    if (!found) {
        throw Error(ErrorKind::SearchExhausted, "no f' <= f*e^2 for " + describe(params));
    }

    const std::int64_t M = X.Q_ - 1;
    X.u_E_ = M / qf_minus_1;
    X.w_L_ = params.w * X.u_E_;
    X.w_e_ = X.w_L_ / e;
    X.sigma_ = {M / e % M, 0};
    X.phi_ = {mulmod(X.w_e_, q - 1, M), 1 % X.f_L_};

    X.phi_powers_.reserve(static_cast<std::size_t>(f));
    GaloisElement acc = X.identity();
    for (std::int64_t j = 0; j < f; ++j) {
        X.phi_powers_.push_back(acc);
        acc = X.compose(acc, X.phi_);
    }
    return X;
}

GaloisElement ExtensionModel::compose(GaloisElement g, GaloisElement h) const noexcept
{
    const std::int64_t M = Q_ - 1;
    const std::int64_t qc = powmod(params_.q, g.c, M);
    return {floor_mod(g.a + mulmod(qc, h.a, M), M), (g.c + h.c) % f_L_};
}

GaloisElement ExtensionModel::inverse(GaloisElement g) const noexcept
{
    const std::int64_t M = Q_ - 1;
    const std::int64_t c_inv = floor_mod(-g.c, f_L_);
    // q^{-c} = q^{f_L - c} since q^{f_L} = Q = 1 mod Q-1.
    const std::int64_t q_inv = powmod(params_.q, c_inv, M);
    return {floor_mod(-mulmod(q_inv, g.a, M), M), c_inv};
}

GaloisElement ExtensionModel::power(GaloisElement g, std::int64_t k) const noexcept
{
    if (k < 0) return power(inverse(g), -k);
    GaloisElement result = identity();
    GaloisElement base = g;
    while (k > 0) {
        if (k & 1) result = compose(result, base);
        base = compose(base, base);
        k >>= 1;
    }
    return result;
}

bool ExtensionModel::is_valid(GaloisElement g) const noexcept
{
    const std::int64_t M = Q_ - 1;
    if (g.a < 0 || g.a >= M || g.c < 0 || g.c >= f_L_) return false;
    const std::int64_t lhs = mulmod(params_.e, g.a, M);
    const std::int64_t rhs = mulmod(floor_mod(powmod(params_.q, g.c, M) - 1, M), w_L_, M);
    return lhs == rhs;
}

GaloisElement ExtensionModel::coset_rep(CosetCoord ij) const noexcept
{
    const std::int64_t M = Q_ - 1;
    const GaloisElement phij = phi_powers_[static_cast<std::size_t>(ij.j)];
    return {floor_mod(mulmod(ij.i, sigma_.a, M) + phij.a, M), phij.c};
}

GaloisElement ExtensionModel::coset_rep(std::int64_t index) const noexcept
{
    return coset_rep(coset_coord(index));
}

CosetCoord ExtensionModel::coset_of(GaloisElement g) const noexcept
{
    const std::int64_t M = Q_ - 1;
    const std::int64_t j = g.c % params_.f;
    const GaloisElement phij = phi_powers_[static_cast<std::size_t>(j)];
    const std::int64_t step = M / params_.e;
    const std::int64_t i = floor_mod(g.a - phij.a, M) / step;
    return {i, j};
}

std::int64_t ExtensionModel::coset_index(GaloisElement g) const noexcept
{
    return coset_index(coset_of(g));
}

SubfieldHandle ExtensionModel::gamma_F() const noexcept
{
    const std::int64_t count = n();
    return {count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1};
}

std::vector<GaloisElement> enumerate_group(const ExtensionModel& X)
{
    const std::int64_t M = X.mu_order();
    const std::int64_t e = X.e();
    std::vector<GaloisElement> out;
    out.reserve(static_cast<std::size_t>(e * X.f_L()));
    for (std::int64_t c = 0; c < X.f_L(); ++c) {
        const std::int64_t R = mulmod(floor_mod(powmod(X.q(), c, M) - 1, M), X.w_L(), M);
        for (std::int64_t k = 0; k < e; ++k) {
            out.push_back({R / e + k * (M / e), c});
        }
    }
    return out;
}

std::vector<GaloisElement> gamma_E_elements(const ExtensionModel& X)
{
    std::vector<GaloisElement> out;
    for (std::int64_t c = 0; c < X.f_L(); c += X.f()) out.push_back({0, c});
    return out;
}

std::vector<GaloisElement> elements_of(const ExtensionModel& X, SubfieldHandle H)
{
    const auto gE = gamma_E_elements(X);
    std::vector<GaloisElement> out;
    for (std::int64_t idx = 0; idx < X.n(); ++idx) {
        if (!contains(H, idx)) continue;
        const GaloisElement r = X.coset_rep(idx);
        for (const auto& h : gE) out.push_back(X.compose(r, h));
    }
    return out;
}

bool contains(SubfieldHandle H, std::int64_t coset_index) noexcept
{
    return (H.cosets >> coset_index) & 1U;
}

std::int64_t coset_count(SubfieldHandle H) noexcept
{
    return std::popcount(H.cosets);
}

namespace {

std::uint64_t bit(std::int64_t idx) { return std::uint64_t{1} << idx; }

// One round of closure: adds phi_E * r and r1 * r2 for all cosets r, r1, r2 in H.
// Left multiplication by Gamma_{L/E} together with products of coset
// representatives generates H * H once H is a union of double cosets.
std::uint64_t closure_step(const ExtensionModel& X, std::uint64_t mask)
{
    std::uint64_t out = mask | 1U;
    const GaloisElement phiE = X.phi_E();
    for (std::int64_t r = 0; r < X.n(); ++r) {
        if (!((mask >> r) & 1U)) continue;
        const GaloisElement gr = X.coset_rep(r);
        out |= bit(X.coset_index(X.compose(phiE, gr)));
        for (std::int64_t s = 0; s < X.n(); ++s) {
            if (!((mask >> s) & 1U)) continue;
            out |= bit(X.coset_index(X.compose(gr, X.coset_rep(s))));
        }
    }
    return out;
}

}  // namespace

bool is_subgroup(const ExtensionModel& X, SubfieldHandle H) noexcept
{
    if (!contains(H, 0)) return false;
    if (X.n() < 64 && (H.cosets >> X.n()) != 0) return false;
    return closure_step(X, H.cosets) == H.cosets;
}

void check_subgroup(const ExtensionModel& X, SubfieldHandle H)
{
    if (!is_subgroup(X, H)) {
        throw Error(ErrorKind::NotASubgroup, "coset mask " + std::to_string(H.cosets)
                                                 + " is not a subgroup containing Gamma_{L/E}");
    }
}

SubfieldHandle subgroup_closure(const ExtensionModel& X, SubfieldHandle seed)
{
    std::uint64_t mask = seed.cosets | 1U;
    for (;;) {
        const std::uint64_t next = closure_step(X, mask);
        if (next == mask) return {mask};
        mask = next;
    }
}

std::vector<SubfieldHandle> enumerate_subfields(const ExtensionModel& X)
{
    std::set<SubfieldHandle> found;
    std::deque<SubfieldHandle> queue;
    const SubfieldHandle start = subgroup_closure(X, X.gamma_E());
    found.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        const SubfieldHandle S = queue.front();
        queue.pop_front();
        for (std::int64_t idx = 0; idx < X.n(); ++idx) {
            if (contains(S, idx)) continue;
            const SubfieldHandle T = subgroup_closure(X, {S.cosets | bit(idx)});
            if (found.insert(T).second) queue.push_back(T);
        }
    }
    return {found.begin(), found.end()};
}

std::int64_t inertia_order(const ExtensionModel& X, SubfieldHandle H) noexcept
{
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < X.e(); ++i) {
        if (contains(H, X.coset_index(CosetCoord{i, 0}))) ++count;
    }
    return count;
}

FieldInvariants subfield_invariants(const ExtensionModel& X, SubfieldHandle H)
{
    check_subgroup(X, H);
    const std::int64_t cosets = coset_count(H);
    const std::int64_t inertia = inertia_order(X, H);
    // |H| = cosets * f_L / f, so f_L * inertia / |H| = f * inertia / cosets.
    return {X.e() / inertia, X.f() * inertia / cosets};
}

FieldInvariants subgroup_invariants(const ExtensionModel& X,
                                    const std::vector<GaloisElement>& elements)
{
    const std::set<GaloisElement> set(elements.begin(), elements.end());
    if (set.empty() || !set.count(X.identity())) {
        throw Error(ErrorKind::NotASubgroup, "subgroup must contain the identity");
    }
    for (const auto& g : set) {
        for (const auto& h : set) {
            if (!set.count(X.compose(g, h))) {
                throw Error(ErrorKind::NotASubgroup, "element list not closed under composition");
            }
        }
    }
    std::int64_t inertia = 0;
    for (const auto& g : set) {
        if (g.c == 0) ++inertia;
    }
    const auto order = static_cast<std::int64_t>(set.size());
    if (X.e() % inertia != 0 || (X.f_L() * inertia) % order != 0) {
        throw Error(ErrorKind::NotASubgroup, "subgroup orders incompatible with Gamma_{L/F}");
    }
    return {X.e() / inertia, X.f_L() * inertia / order};
}

}  // namespace tamejl
