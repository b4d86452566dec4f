#pragma once

// Exact arithmetic in F_p and Z_{p^k}, plus irreducibility of monic quadratics.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace medq {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest prime accepted; keeps p^4 well inside 64 bits.
inline constexpr std::uint64_t kMaxPrime = 1u << 15;

inline constexpr bool is_prime_number(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline constexpr std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

/// A prime p with 2 <= p <= kMaxPrime, validated on construction.
class Prime {
public:
    explicit Prime(std::uint64_t p) : p_(p) {
        if (p > kMaxPrime) throw Error("prime " + std::to_string(p) + " exceeds the supported cap");
        if (!is_prime_number(p)) throw Error(std::to_string(p) + " is not prime");
    }

    constexpr std::uint64_t value() const noexcept { return p_; }
    friend constexpr bool operator==(Prime, Prime) = default;
    friend constexpr auto operator<=>(Prime, Prime) = default;

private:
    std::uint64_t p_;
};

/// An element of F_p, always reduced.
class FpScalar {
public:
    FpScalar(std::int64_t v, Prime p) : p_(p) {
        const auto m = static_cast<std::int64_t>(p.value());
        v %= m;
        if (v < 0) v += m;
        value_ = static_cast<std::uint64_t>(v);
    }

    std::uint64_t value() const noexcept { return value_; }
    Prime modulus() const noexcept { return p_; }

    FpScalar operator+(FpScalar o) const { check(o); return {static_cast<std::int64_t>((value_ + o.value_) % p_.value()), p_}; }
    FpScalar operator-(FpScalar o) const { check(o); return {static_cast<std::int64_t>(value_ + p_.value() - o.value_), p_}; }
    FpScalar operator*(FpScalar o) const { check(o); return {static_cast<std::int64_t>((value_ * o.value_) % p_.value()), p_}; }
    FpScalar operator-() const { return {-static_cast<std::int64_t>(value_), p_}; }

    friend bool operator==(FpScalar, FpScalar) = default;

private:
    void check(FpScalar o) const {
        if (o.p_ != p_) throw Error("F_p scalars with different moduli");
    }

    std::uint64_t value_ = 0;
    Prime p_;
};

/// An element of Z_{p^k}, always reduced.
class ResidueMod {
public:
    ResidueMod(std::int64_t v, Prime p, unsigned k) : p_(p), k_(k) {
        if (k == 0) throw Error("exponent k must be at least 1");
        const auto m = static_cast<std::int64_t>(ipow(p.value(), k));
        v %= m;
        if (v < 0) v += m;
        value_ = static_cast<std::uint64_t>(v);
    }

    std::uint64_t value() const noexcept { return value_; }
    Prime prime() const noexcept { return p_; }
    unsigned exponent() const noexcept { return k_; }
    std::uint64_t modulus() const noexcept { return ipow(p_.value(), k_); }
    bool is_unit() const noexcept { return value_ % p_.value() != 0; }

    friend bool operator==(ResidueMod, ResidueMod) = default;

private:
    std::uint64_t value_ = 0;
    Prime p_;
    unsigned k_;
};

/// Multiplicative inverse in F_p via the extended Euclidean algorithm.
inline FpScalar fp_inv(FpScalar x) {
    if (x.value() == 0) throw Error("not invertible");
    std::int64_t r0 = static_cast<std::int64_t>(x.modulus().value());
    std::int64_t r1 = static_cast<std::int64_t>(x.value());
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1; r0 = r1; r1 = t;
        t = s0 - q * s1; s0 = s1; s1 = t;
    }
    return {s0, x.modulus()};
}

/// True iff x^2 - b x - a has no root in F_p. Decided by trying every x,
/// which also covers p = 2.
inline bool is_irreducible_quadratic(FpScalar a, FpScalar b) {
    if (a.modulus() != b.modulus()) throw Error("coefficients over different fields");
    const std::uint64_t p = a.modulus().value();
    for (std::uint64_t x = 0; x < p; ++x) {
        // x^2 - b x - a == 0  <=>  x^2 + (p-b) x + (p-a) == 0 (mod p)
        const std::uint64_t v = (x * x + (p - b.value()) * x + (p - a.value())) % p;
        if (v == 0) return false;
    }
    return true;
}

/// Exhaustive count of irreducible x^2 - b x - a over F_p.
inline std::uint64_t count_irreducible_quadratics(Prime p) {
    std::uint64_t n = 0;
    for (std::uint64_t a = 0; a < p.value(); ++a)
        for (std::uint64_t b = 0; b < p.value(); ++b)
            if (is_irreducible_quadratic(FpScalar(static_cast<std::int64_t>(a), p),
                                         FpScalar(static_cast<std::int64_t>(b), p)))
                ++n;
    return n;
}

}  // namespace medq
