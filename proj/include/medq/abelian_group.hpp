#pragma once

// The two ambient group families: cyclic Z_{p^k} and elementary abelian Z_p^2.
// Elements have a fixed deterministic order (ascending residue, or
// lexicographic (x, y)), and most algorithms work on indices into that order.

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "medq/fp.hpp"
#include "medq/mat2.hpp"

namespace medq {

enum class GroupKind { Cyclic, ElemAbelianRank2 };

class GroupSpec {
public:
    static GroupSpec cyclic(Prime p, unsigned k) {
        if (k == 0) throw Error("cyclic group needs k >= 1");
        std::uint64_t order = 1;
        for (unsigned i = 0; i < k; ++i) {
            order *= p.value();
            if (order > (std::uint64_t{1} << 32)) throw Error("cyclic group order too large");
        }
        return GroupSpec(GroupKind::Cyclic, p, k);
    }
    static GroupSpec zp2(Prime p) { return GroupSpec(GroupKind::ElemAbelianRank2, p, 2); }

    GroupKind kind() const noexcept { return kind_; }
    bool is_cyclic() const noexcept { return kind_ == GroupKind::Cyclic; }
    Prime prime() const noexcept { return p_; }
    /// k for Z_{p^k}; 2 for Z_p^2.
    unsigned exponent() const noexcept { return k_; }
    std::size_t order() const noexcept { return static_cast<std::size_t>(ipow(p_.value(), k_)); }

    /// Stable identifier used in exports, e.g. "zp2:p=3" or "cyclic:p=3,k=2".
    std::string to_string() const {
        if (is_cyclic())
            return "cyclic:p=" + std::to_string(p_.value()) + ",k=" + std::to_string(k_);
        return "zp2:p=" + std::to_string(p_.value());
    }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

private:
    GroupSpec(GroupKind kind, Prime p, unsigned k) : kind_(kind), p_(p), k_(k) {}

    GroupKind kind_;
    Prime p_;
    unsigned k_;
};

struct Vec2 {
    FpScalar x;
    FpScalar y;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

using GroupElement = std::variant<ResidueMod, Vec2>;

inline bool belongs_to(const GroupElement& e, const GroupSpec& g) {
    if (const auto* r = std::get_if<ResidueMod>(&e))
        return g.is_cyclic() && r->prime() == g.prime() && r->exponent() == g.exponent();
    const auto& v = std::get<Vec2>(e);
    return !g.is_cyclic() && v.x.modulus() == g.prime();
}

inline GroupElement add(const GroupElement& a, const GroupElement& b) {
    if (a.index() != b.index()) throw Error("adding elements of different groups");
    if (const auto* ra = std::get_if<ResidueMod>(&a)) {
        const auto& rb = std::get<ResidueMod>(b);
        if (ra->prime() != rb.prime() || ra->exponent() != rb.exponent())
            throw Error("adding elements of different groups");
        return ResidueMod(static_cast<std::int64_t>(ra->value() + rb.value()), ra->prime(), ra->exponent());
    }
    const auto& va = std::get<Vec2>(a);
    const auto& vb = std::get<Vec2>(b);
    if (va.x.modulus() != vb.x.modulus()) throw Error("adding elements of different groups");
    return Vec2{va.x + vb.x, va.y + vb.y};
}

inline GroupElement element_at(const GroupSpec& g, std::size_t index) {
    const auto p = g.prime();
    if (g.is_cyclic()) return ResidueMod(static_cast<std::int64_t>(index), p, g.exponent());
    const auto q = p.value();
    return Vec2{FpScalar(static_cast<std::int64_t>(index / q), p), FpScalar(static_cast<std::int64_t>(index % q), p)};
}

inline std::size_t index_of(const GroupSpec& g, const GroupElement& e) {
    if (!belongs_to(e, g)) throw Error("element does not belong to " + g.to_string());
    if (const auto* r = std::get_if<ResidueMod>(&e)) return static_cast<std::size_t>(r->value());
    const auto& v = std::get<Vec2>(e);
    return static_cast<std::size_t>(v.x.value() * g.prime().value() + v.y.value());
}

inline GroupElement zero_element(const GroupSpec& g) { return element_at(g, 0); }

inline std::vector<GroupElement> elements(const GroupSpec& g) {
    std::vector<GroupElement> out;
    out.reserve(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) out.push_back(element_at(g, i));
    return out;
}

/// Component list of an element: {residue} or {x, y}.
inline std::vector<std::uint64_t> components(const GroupElement& e) {
    if (const auto* r = std::get_if<ResidueMod>(&e)) return {r->value()};
    const auto& v = std::get<Vec2>(e);
    return {v.x.value(), v.y.value()};
}

/// Index arithmetic for the deterministic element order.
inline std::size_t add_indices(const GroupSpec& g, std::size_t a, std::size_t b) noexcept {
    if (g.is_cyclic()) return (a + b) % g.order();
    const std::size_t q = g.prime().value();
    return ((a / q + b / q) % q) * q + (a % q + b % q) % q;
}

/// An endomorphism of G: multiplication by a residue (cyclic) or a 2x2 matrix
/// over F_p, not necessarily invertible.
using Endomorphism = std::variant<ResidueMod, Mat2>;

inline std::size_t apply_endomorphism(const GroupSpec& g, const Endomorphism& m, std::size_t index) {
    if (const auto* r = std::get_if<ResidueMod>(&m)) {
        const std::uint64_t n = g.order();
        return static_cast<std::size_t>((r->value() % n) * index % n);
    }
    const auto& a = std::get<Mat2>(m);
    const std::uint32_t q = a.p();
    const auto v = a.apply(static_cast<std::uint32_t>(index / q), static_cast<std::uint32_t>(index % q));
    return std::size_t{v[0]} * q + v[1];
}

inline bool acts_on(const Endomorphism& m, const GroupSpec& g) {
    if (const auto* r = std::get_if<ResidueMod>(&m))
        return g.is_cyclic() && r->prime() == g.prime() && r->exponent() == g.exponent();
    return !g.is_cyclic() && std::get<Mat2>(m).modulus() == g.prime();
}

struct CosetList {
    std::vector<GroupElement> representatives;
    std::size_t subgroup_order = 0;
    /// Element indices of the representatives, ascending.
    std::vector<std::size_t> representative_indices;
    /// coset_of[i] is the position in `representatives` of the coset holding element i.
    std::vector<std::size_t> coset_of;
};

/// Cosets of Im(M) in G. The image is found by applying M to every element;
/// representatives are picked greedily in element order, so the first one is
/// always zero and each is the least element of its coset.
inline CosetList quotient_cosets(const GroupSpec& g, const Endomorphism& m) {
    if (!acts_on(m, g)) throw Error("endomorphism does not act on " + g.to_string());
    const std::size_t n = g.order();
    std::vector<char> in_image(n, 0);
    for (std::size_t i = 0; i < n; ++i) in_image[apply_endomorphism(g, m, i)] = 1;
    std::vector<std::size_t> image;
    for (std::size_t i = 0; i < n; ++i)
        if (in_image[i]) image.push_back(i);

    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    CosetList out;
    out.subgroup_order = image.size();
    out.coset_of.assign(n, kUnassigned);
    for (std::size_t i = 0; i < n; ++i) {
        if (out.coset_of[i] != kUnassigned) continue;
        const std::size_t id = out.representative_indices.size();
        out.representative_indices.push_back(i);
        out.representatives.push_back(element_at(g, i));
        for (std::size_t h : image) out.coset_of[add_indices(g, i, h)] = id;
    }
    return out;
}

}  // namespace medq
