#pragma once

// 2x2 matrices over F_p. Singular matrices are allowed; invertibility is
// enforced by the Automorphism wrapper in gl2.hpp.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "medq/fp.hpp"

namespace medq {

class Mat2 {
public:
    /// Row-major entries m00, m01, m10, m11, reduced mod p.
    Mat2(std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11, Prime p)
        : prime_(p), p_(static_cast<std::uint32_t>(p.value())) {
        const std::int64_t in[4] = {m00, m01, m10, m11};
        for (int i = 0; i < 4; ++i) {
            std::int64_t v = in[i] % static_cast<std::int64_t>(p_);
            if (v < 0) v += p_;
            e_[i] = static_cast<std::uint32_t>(v);
        }
    }

    static Mat2 identity(Prime p) { return {1, 0, 0, 1, p}; }
    static Mat2 zero(Prime p) { return {0, 0, 0, 0, p}; }
    static Mat2 scalar(std::int64_t a, Prime p) { return {a, 0, 0, a, p}; }

    Prime modulus() const noexcept { return prime_; }
    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t operator()(int row, int col) const noexcept { return e_[row * 2 + col]; }
    FpScalar at(int row, int col) const { return {e_[row * 2 + col], modulus()}; }
    const std::array<std::uint32_t, 4>& entries() const noexcept { return e_; }

    Mat2 operator*(const Mat2& o) const {
        check(o);
        const std::uint64_t q = p_;
        Mat2 r = *this;
        r.e_[0] = static_cast<std::uint32_t>((std::uint64_t{e_[0]} * o.e_[0] + std::uint64_t{e_[1]} * o.e_[2]) % q);
        r.e_[1] = static_cast<std::uint32_t>((std::uint64_t{e_[0]} * o.e_[1] + std::uint64_t{e_[1]} * o.e_[3]) % q);
        r.e_[2] = static_cast<std::uint32_t>((std::uint64_t{e_[2]} * o.e_[0] + std::uint64_t{e_[3]} * o.e_[2]) % q);
        r.e_[3] = static_cast<std::uint32_t>((std::uint64_t{e_[2]} * o.e_[1] + std::uint64_t{e_[3]} * o.e_[3]) % q);
        return r;
    }

    Mat2 operator+(const Mat2& o) const {
        check(o);
        Mat2 r = *this;
        for (int i = 0; i < 4; ++i) r.e_[i] = (e_[i] + o.e_[i]) % p_;
        return r;
    }

    Mat2 operator-(const Mat2& o) const {
        check(o);
        Mat2 r = *this;
        for (int i = 0; i < 4; ++i) r.e_[i] = (e_[i] + p_ - o.e_[i]) % p_;
        return r;
    }

    /// Matrix times column vector (x, y).
    std::array<std::uint32_t, 2> apply(std::uint32_t x, std::uint32_t y) const noexcept {
        const std::uint64_t q = p_;
        return {static_cast<std::uint32_t>((std::uint64_t{e_[0]} * x + std::uint64_t{e_[1]} * y) % q),
                static_cast<std::uint32_t>((std::uint64_t{e_[2]} * x + std::uint64_t{e_[3]} * y) % q)};
    }

    std::uint32_t det_value() const noexcept {
        const std::uint64_t q = p_;
        const std::uint64_t ad = std::uint64_t{e_[0]} * e_[3] % q;
        const std::uint64_t bc = std::uint64_t{e_[1]} * e_[2] % q;
        return static_cast<std::uint32_t>((ad + q - bc) % q);
    }

    bool is_zero() const noexcept { return e_[0] == 0 && e_[1] == 0 && e_[2] == 0 && e_[3] == 0; }

    std::string to_string() const {
        return "[[" + std::to_string(e_[0]) + "," + std::to_string(e_[1]) + "],[" +
               std::to_string(e_[2]) + "," + std::to_string(e_[3]) + "]]";
    }

    friend bool operator==(const Mat2&, const Mat2&) = default;
    friend auto operator<=>(const Mat2&, const Mat2&) = default;

private:
    void check(const Mat2& o) const {
        if (o.p_ != p_) throw Error("matrices over different fields");
    }

    std::array<std::uint32_t, 4> e_{};
    Prime prime_;
    std::uint32_t p_;
};

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) { return a * b; }

inline FpScalar mat_det(const Mat2& a) { return {a.det_value(), a.modulus()}; }

/// 0 for the zero matrix, 1 for nonzero singular, 2 for invertible.
inline int mat_rank(const Mat2& a) {
    if (a.is_zero()) return 0;
    return a.det_value() == 0 ? 1 : 2;
}

inline Mat2 mat_inv(const Mat2& a) {
    const std::uint32_t d = a.det_value();
    if (d == 0) throw Error("matrix " + a.to_string() + " is singular");
    const std::int64_t di = static_cast<std::int64_t>(fp_inv(FpScalar(d, a.modulus())).value());
    return {di * a(1, 1), -di * a(0, 1), -di * a(1, 0), di * a(0, 0), a.modulus()};
}

/// Every invertible 2x2 matrix over F_p, in lexicographic entry order.
inline std::vector<Mat2> gl2_elements(Prime p) {
    const auto q = static_cast<std::int64_t>(p.value());
    std::vector<Mat2> out;
    out.reserve(static_cast<std::size_t>((q * q - 1) * (q * q - q)));
    for (std::int64_t a = 0; a < q; ++a)
        for (std::int64_t b = 0; b < q; ++b)
            for (std::int64_t c = 0; c < q; ++c)
                for (std::int64_t d = 0; d < q; ++d) {
                    Mat2 m(a, b, c, d, p);
                    if (m.det_value() != 0) out.push_back(m);
                }
    return out;
}

inline std::uint64_t gl2_order(Prime p) {
    const std::uint64_t q = p.value();
    return (q * q - 1) * (q * q - q);
}

}  // namespace medq
