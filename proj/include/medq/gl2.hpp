#pragma once

// Automorphism groups of the ambient groups: units of Z_{p^k} and GL(2,p),
// with the standard conjugacy-class representatives of GL(2,p) and their
// centralizers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "medq/abelian_group.hpp"
#include "medq/fp.hpp"
#include "medq/mat2.hpp"

namespace medq {

/// An invertible endomorphism: a unit residue (cyclic G) or a matrix in GL(2,p).
class Automorphism {
public:
    explicit Automorphism(ResidueMod unit) : value_(unit) {
        if (!unit.is_unit()) throw Error("residue " + std::to_string(unit.value()) + " is not a unit");
    }
    explicit Automorphism(Mat2 m) : value_(m) {
        if (m.det_value() == 0) throw Error("matrix " + m.to_string() + " is not invertible");
    }

    bool is_unit() const noexcept { return std::holds_alternative<ResidueMod>(value_); }
    bool is_matrix() const noexcept { return std::holds_alternative<Mat2>(value_); }
    const ResidueMod& unit() const { return std::get<ResidueMod>(value_); }
    const Mat2& matrix() const { return std::get<Mat2>(value_); }
    const Endomorphism& endomorphism() const noexcept { return value_; }

    bool acts_on(const GroupSpec& g) const { return medq::acts_on(value_, g); }
    std::size_t apply(const GroupSpec& g, std::size_t index) const { return apply_endomorphism(g, value_, index); }

    std::string to_string() const {
        if (is_unit()) return std::to_string(unit().value());
        return matrix().to_string();
    }

    friend bool operator==(const Automorphism&, const Automorphism&) = default;

private:
    Endomorphism value_;
};

inline bool commutes(const Automorphism& a, const Automorphism& b) {
    if (a.is_unit() != b.is_unit()) throw Error("automorphisms of different groups");
    if (a.is_unit()) {
        if (a.unit().modulus() != b.unit().modulus() || a.unit().prime() != b.unit().prime())
            throw Error("automorphisms of different groups");
        return true;
    }
    return a.matrix() * b.matrix() == b.matrix() * a.matrix();
}

/// The endomorphism 1 - phi - psi.
inline Endomorphism one_minus_sum(const Automorphism& phi, const Automorphism& psi) {
    if (phi.is_unit() != psi.is_unit()) throw Error("automorphisms of different groups");
    if (phi.is_unit()) {
        const auto& u = phi.unit();
        return ResidueMod(1 - static_cast<std::int64_t>(u.value()) - static_cast<std::int64_t>(psi.unit().value()),
                          u.prime(), u.exponent());
    }
    const auto p = phi.matrix().modulus();
    return Mat2::identity(p) - phi.matrix() - psi.matrix();
}

/// Aut(Z_{p^k}): residues coprime to p, ascending.
inline std::vector<Automorphism> units(Prime p, unsigned k) {
    const std::uint64_t n = ipow(p.value(), k);
    std::vector<Automorphism> out;
    out.reserve(static_cast<std::size_t>(n - n / p.value()));
    for (std::uint64_t r = 1; r < n; ++r)
        if (r % p.value() != 0) out.emplace_back(ResidueMod(static_cast<std::int64_t>(r), p, k));
    return out;
}

enum class ConjKind { ScalarDiag, DistinctDiag, Jordan, IrreducibleCompanion };

inline const char* kind_name(ConjKind k) noexcept {
    switch (k) {
        case ConjKind::ScalarDiag: return "scalar";
        case ConjKind::DistinctDiag: return "diag";
        case ConjKind::Jordan: return "jordan";
        case ConjKind::IrreducibleCompanion: return "irreducible";
    }
    return "?";
}

/// A conjugacy-class representative of GL(2,p) in one of the four normal forms:
///   ScalarDiag(a)            [[a,0],[0,a]],  a != 0
///   DistinctDiag(a,b)        [[a,0],[0,b]],  0 < a < b
///   Jordan(a)                [[a,1],[0,a]],  a != 0
///   IrreducibleCompanion(a,b) [[0,1],[a,b]], x^2 - b x - a irreducible
class ConjClassRep {
public:
    static ConjClassRep scalar_diag(std::uint32_t a, Prime p) {
        require(a % p.value() != 0, "ScalarDiag needs a != 0");
        return {ConjKind::ScalarDiag, reduce(a, p), 0, p};
    }
    static ConjClassRep distinct_diag(std::uint32_t a, std::uint32_t b, Prime p) {
        require(a > 0 && a < b && b < p.value(), "DistinctDiag needs 0 < a < b < p");
        return {ConjKind::DistinctDiag, a, b, p};
    }
    static ConjClassRep jordan(std::uint32_t a, Prime p) {
        require(a % p.value() != 0, "Jordan needs a != 0");
        return {ConjKind::Jordan, reduce(a, p), 0, p};
    }
    static ConjClassRep irreducible_companion(std::uint32_t a, std::uint32_t b, Prime p) {
        require(is_irreducible_quadratic(FpScalar(a, p), FpScalar(b, p)),
                "IrreducibleCompanion needs x^2 - b x - a irreducible");
        return {ConjKind::IrreducibleCompanion, reduce(a, p), reduce(b, p), p};
    }

    ConjKind kind() const noexcept { return kind_; }
    std::uint32_t a() const noexcept { return a_; }
    std::uint32_t b() const noexcept { return b_; }
    Prime prime() const noexcept { return p_; }

    std::string to_string() const {
        std::string s = std::string(kind_name(kind_)) + "(" + std::to_string(a_);
        if (kind_ == ConjKind::DistinctDiag || kind_ == ConjKind::IrreducibleCompanion) s += "," + std::to_string(b_);
        return s + ")";
    }

    friend bool operator==(const ConjClassRep&, const ConjClassRep&) = default;

private:
    ConjClassRep(ConjKind k, std::uint32_t a, std::uint32_t b, Prime p) : kind_(k), a_(a), b_(b), p_(p) {}

    static void require(bool ok, const char* what) {
        if (!ok) throw Error(what);
    }
    static std::uint32_t reduce(std::uint32_t v, Prime p) { return static_cast<std::uint32_t>(v % p.value()); }

    ConjKind kind_;
    std::uint32_t a_;
    std::uint32_t b_;
    Prime p_;
};

inline Mat2 to_matrix(const ConjClassRep& r) {
    const auto p = r.prime();
    switch (r.kind()) {
        case ConjKind::ScalarDiag: return {r.a(), 0, 0, r.a(), p};
        case ConjKind::DistinctDiag: return {r.a(), 0, 0, r.b(), p};
        case ConjKind::Jordan: return {r.a(), 1, 0, r.a(), p};
        case ConjKind::IrreducibleCompanion: return {0, 1, r.a(), r.b(), p};
    }
    throw Error("unknown representative kind");
}

/// All p^2 - 1 representatives, grouped by kind in the order
/// ScalarDiag, DistinctDiag, Jordan, IrreducibleCompanion.
inline std::vector<ConjClassRep> conj_class_reps(Prime p) {
    const auto q = static_cast<std::uint32_t>(p.value());
    std::vector<ConjClassRep> out;
    out.reserve(q * q - 1);
    for (std::uint32_t a = 1; a < q; ++a) out.push_back(ConjClassRep::scalar_diag(a, p));
    for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = a + 1; b < q; ++b) out.push_back(ConjClassRep::distinct_diag(a, b, p));
    for (std::uint32_t a = 1; a < q; ++a) out.push_back(ConjClassRep::jordan(a, p));
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            if (is_irreducible_quadratic(FpScalar(a, p), FpScalar(b, p)))
                out.push_back(ConjClassRep::irreducible_companion(a, b, p));
    return out;
}

/// A set of matrices kept sorted and deduplicated.
class MatrixSet {
public:
    MatrixSet() = default;
    explicit MatrixSet(std::vector<Mat2> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    const std::vector<Mat2>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(const Mat2& m) const { return std::binary_search(members_.begin(), members_.end(), m); }

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const MatrixSet&, const MatrixSet&) = default;

private:
    std::vector<Mat2> members_;
};

/// Brute force: every B in GL(2,p) with AB = BA.
inline MatrixSet centralizer(const Mat2& a) {
    if (a.det_value() == 0) throw Error("centralizer of singular matrix " + a.to_string());
    std::vector<Mat2> out;
    for (const auto& b : gl2_elements(a.modulus()))
        if (a * b == b * a) out.push_back(b);
    return MatrixSet(std::move(out));
}

/// Elements of `within` that commute with `a`.
inline MatrixSet centralizer_in(const MatrixSet& within, const Mat2& a) {
    std::vector<Mat2> out;
    for (const auto& b : within)
        if (a * b == b * a) out.push_back(b);
    return MatrixSet(std::move(out));
}

/// The closed-form centralizer of a normal-form representative, built from its
/// parametrization rather than by search.
inline MatrixSet parametrized_centralizer(const ConjClassRep& r) {
    const auto p = r.prime();
    const auto q = static_cast<std::int64_t>(p.value());
    std::vector<Mat2> out;
    switch (r.kind()) {
        case ConjKind::ScalarDiag:
            out = gl2_elements(p);
            break;
        case ConjKind::DistinctDiag:
            for (std::int64_t u = 1; u < q; ++u)
                for (std::int64_t v = 1; v < q; ++v) out.emplace_back(u, 0, 0, v, p);
            break;
        case ConjKind::Jordan:
            for (std::int64_t u = 1; u < q; ++u)
                for (std::int64_t v = 0; v < q; ++v) out.emplace_back(u, v, 0, u, p);
            break;
        case ConjKind::IrreducibleCompanion:
            for (std::int64_t u = 0; u < q; ++u)
                for (std::int64_t v = 0; v < q; ++v)
                    if (u != 0 || v != 0) out.emplace_back(u, v, r.a() * v, u + r.b() * v, p);
            break;
    }
    return MatrixSet(std::move(out));
}

/// Dense integer code of a matrix, in [0, p^4).
inline std::size_t matrix_code(const Mat2& m) noexcept {
    const std::size_t q = m.p();
    return ((std::size_t{m(0, 0)} * q + m(0, 1)) * q + m(1, 0)) * q + m(1, 1);
}

/// Conjugacy classes of `group` under conjugation by its own elements,
/// found by brute force. Classes are listed in order of their least member.
inline std::vector<MatrixSet> conjugacy_classes(const std::vector<Mat2>& group) {
    if (group.empty()) return {};
    const std::size_t q = group.front().p();
    std::vector<char> seen(q * q * q * q, 0);
    std::vector<Mat2> sorted = group;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Mat2> inverses;
    inverses.reserve(sorted.size());
    for (const auto& g : sorted) inverses.push_back(mat_inv(g));

    std::vector<MatrixSet> classes;
    for (const auto& a : sorted) {
        if (seen[matrix_code(a)]) continue;
        std::vector<Mat2> cls;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const Mat2 c = sorted[i] * a * inverses[i];
            if (!seen[matrix_code(c)]) {
                seen[matrix_code(c)] = 1;
                cls.push_back(c);
            }
        }
        classes.emplace_back(std::move(cls));
    }
    return classes;
}

inline std::vector<MatrixSet> gl2_conjugacy_classes(Prime p) { return conjugacy_classes(gl2_elements(p)); }

}  // namespace medq
