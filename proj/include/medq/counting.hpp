#pragma once

// Closed-form counts of medial quasigroups, multiplicativity over n, the
// per-row counts of the Z_p^2 classification, and exact Lagrange
// interpolation of count series.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "medq/fp.hpp"

namespace medq {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when a prime-power factor has no known closed form (exponent >= 3).
class UnknownPrimePowerError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline BigInt big_pow(const BigInt& b, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

inline BigInt cyclic_count(const BigInt& p, unsigned k) {
    BigInt sum = 0;
    for (unsigned i = k - 1; i <= 2 * k - 1; ++i) sum += big_pow(p, i);
    return big_pow(p, 2 * k) + big_pow(p, 2 * k - 2) - big_pow(p, k - 1) - sum;
}

inline BigInt zp2_count(const BigInt& p) { return big_pow(p, 4) - p * p - p - 1; }

}  // namespace detail

/// mq(Z_{p^k}) = p^{2k} + p^{2k-2} - p^{k-1} - sum_{i=k-1}^{2k-1} p^i.
inline BigInt closed_form_cyclic(Prime p, unsigned k) {
    if (k == 0) throw Error("k must be at least 1");
    return detail::cyclic_count(BigInt(p.value()), k);
}

/// mq(Z_p^2) = p^4 - p^2 - p - 1.
inline BigInt closed_form_zp2(Prime p) { return detail::zp2_count(BigInt(p.value())); }

/// mq(p^2) = mq(Z_{p^2}) + mq(Z_p^2) = 2p^4 - p^3 - p^2 - 3p - 1.
inline BigInt closed_form_order_p2(Prime p) {
    const BigInt q(p.value());
    return 2 * detail::big_pow(q, 4) - detail::big_pow(q, 3) - q * q - 3 * q - 1;
}

/// Prime factorization by trial division, ascending primes.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// mq(n) by multiplicativity; every prime-power factor must have exponent <= 2.
inline BigInt count_composite(std::uint64_t n) {
    if (n == 0) throw Error("n must be positive");
    BigInt total = 1;
    for (const auto& [p, e] : factorize(n)) {
        const BigInt q(p);
        if (e == 1) {
            total *= detail::cyclic_count(q, 1);
        } else if (e == 2) {
            total *= 2 * detail::big_pow(q, 4) - detail::big_pow(q, 3) - q * q - 3 * q - 1;
        } else {
            throw UnknownPrimePowerError("unknown prime-power count for " + std::to_string(p) + "^" +
                                         std::to_string(e));
        }
    }
    return total;
}

/// The 15 sub-row identifiers of the Z_p^2 classification, in table order.
inline constexpr std::array<std::string_view, 15> kZp2CaseTags = {
    "case1.scalar-scalar.regular",
    "case1.scalar-scalar.singular",
    "case1.scalar-diag.regular",
    "case1.scalar-diag.singular",
    "case1.scalar-jordan.regular",
    "case1.scalar-jordan.singular",
    "case1.scalar-irreducible.regular",
    "case2.diag.rank2",
    "case2.diag.rank1",
    "case2.diag.rank0",
    "case3.jordan.rank2",
    "case3.jordan.rank1",
    "case3.jordan.rank0",
    "case4.irreducible.regular",
    "case4.irreducible.singular",
};

inline constexpr std::string_view kCyclicCaseTag = "cyclic";

/// Number of triples the classification assigns to a sub-row, as a
/// polynomial in p.
inline BigInt zp2_row_count(std::string_view tag, Prime prime) {
    const BigInt p(prime.value());
    if (tag == "case1.scalar-scalar.regular") return p * p - 3 * p + 3;
    if (tag == "case1.scalar-scalar.singular") return 2 * (p - 2);
    if (tag == "case1.scalar-diag.regular") return (p - 2) * (p * p - 4 * p + 5) / 2;
    if (tag == "case1.scalar-diag.singular") return 2 * (p - 2) * (p - 2);
    if (tag == "case1.scalar-jordan.regular") return p * p - 3 * p + 3;
    if (tag == "case1.scalar-jordan.singular") return 2 * (p - 2);
    if (tag == "case1.scalar-irreducible.regular") return p * (p - 1) * (p - 1) / 2;
    if (tag == "case2.diag.rank2") return (p - 2) * (p - 2) * (p * p - 3 * p + 4) / 2;
    if (tag == "case2.diag.rank1") return 2 * (p - 2) * (p * p - 4 * p + 5);
    if (tag == "case2.diag.rank0") return 2 * (p - 2) * (p - 3);
    if (tag == "case3.jordan.rank2") return p * (p * p - 3 * p + 3);
    if (tag == "case3.jordan.rank1") return 2 * (p - 1) * (p - 2);
    if (tag == "case3.jordan.rank0") return 3 * (p - 2);
    if (tag == "case4.irreducible.regular") return (p * p - p) * (p * p - 2) / 2;
    if (tag == "case4.irreducible.singular") return p * p - p;
    throw Error("unknown case tag " + std::string(tag));
}

/// Polynomial with rational coefficients, lowest degree first, no trailing zeros.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    BigRational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

    bool has_integer_coefficients() const {
        for (const auto& c : coeffs_)
            if (boost::multiprecision::denominator(c) != 1) return false;
        return true;
    }

    BigRational operator()(const BigRational& x) const {
        BigRational r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// e.g. "2x^4 - x^3 - x^2 - 3x - 1"; non-integer coefficients print as "(3/2)x".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (int d = degree(); d >= 0; --d) {
            BigRational c = coeffs_[static_cast<std::size_t>(d)];
            if (c == 0) continue;
            const bool negative = c < 0;
            if (negative) c = -c;
            if (s.empty()) {
                if (negative) s += "-";
            } else {
                s += negative ? " - " : " + ";
            }
            const bool integral = boost::multiprecision::denominator(c) == 1;
            std::string mag = integral ? boost::multiprecision::numerator(c).str() : "(" + c.str() + ")";
            if (d == 0) {
                s += integral ? mag : c.str();
            } else {
                if (c != 1) s += mag;
                s += "x";
                if (d > 1) s += "^" + std::to_string(d);
            }
        }
        return s;
    }

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

/// The unique polynomial of degree < points.size() through the points.
inline RationalPolynomial interpolate_count_polynomial(const std::vector<std::pair<BigInt, BigInt>>& points) {
    if (points.empty()) throw Error("interpolation needs at least one point");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first) throw Error("duplicate abscissa " + points[i].first.str());

    const std::size_t n = points.size();
    std::vector<BigRational> result(n, BigRational(0));
    for (std::size_t i = 0; i < n; ++i) {
        // basis = prod_{j != i} (x - x_j), built up one linear factor at a time
        std::vector<BigRational> basis{BigRational(1)};
        BigRational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const BigRational xj(points[j].first);
            std::vector<BigRational> next(basis.size() + 1, BigRational(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * xj;
            }
            basis = std::move(next);
            denom *= BigRational(points[i].first) - xj;
        }
        const BigRational scale = BigRational(points[i].second) / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) result[d] += basis[d] * scale;
    }
    return RationalPolynomial(std::move(result));
}

/// The first n primes, ascending.
inline std::vector<std::uint64_t> first_primes(std::size_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 2; out.size() < n; ++c)
        if (is_prime_number(c)) out.push_back(c);
    return out;
}

}  // namespace medq
