#pragma once

// Isomorphism-class representatives of quasigroups affine over G.
//
// The classes correspond one-to-one with triples (phi, psi, c) where
//   phi ranges over conjugacy-class representatives X of Aut(G),
//   psi over conjugacy-class representatives Y_phi of C(phi), conjugating
//       only by elements of C(phi),
//   c   over orbit representatives of C(phi) ∩ C(psi) acting on G/Im(1-phi-psi).
//
// For Z_p^2 the representatives of X are the four normal forms of GL(2,p).
// If phi is scalar then C(phi) = GL(2,p) and Y_phi = X; otherwise C(phi) is
// abelian and Y_phi = C(phi). For Z_{p^k} everything is abelian and
// X = Y_phi = units.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "medq/abelian_group.hpp"
#include "medq/counting.hpp"
#include "medq/gl2.hpp"
#include "medq/union_find.hpp"

namespace medq {

struct RepresentativeTriple {
    Automorphism phi;
    Automorphism psi;
    GroupElement c;
    std::string case_tag;
};

struct EnumerationReport {
    GroupSpec group;
    std::vector<RepresentativeTriple> triples;
    std::map<std::string, std::uint64_t> tallies;
    std::uint64_t total = 0;
};

inline std::vector<Automorphism> matrices_as_automorphisms(const std::vector<Mat2>& ms) {
    std::vector<Automorphism> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.emplace_back(m);
    return out;
}

/// X: conjugacy-class representatives of Aut(G).
inline std::vector<Automorphism> reps_X(const GroupSpec& g) {
    if (g.is_cyclic()) return units(g.prime(), g.exponent());
    std::vector<Automorphism> out;
    for (const auto& r : conj_class_reps(g.prime())) out.emplace_back(to_matrix(r));
    return out;
}

/// The normal form that `phi` is, if it is one of the designated representatives.
inline std::optional<ConjClassRep> designated_rep(const Mat2& phi) {
    for (const auto& r : conj_class_reps(phi.modulus()))
        if (to_matrix(r) == phi) return r;
    return std::nullopt;
}

/// Y_phi: conjugacy-class representatives of C(phi) under conjugation inside C(phi).
inline std::vector<Automorphism> reps_Y(const GroupSpec& g, const Automorphism& phi) {
    if (!phi.acts_on(g)) throw Error("phi does not act on " + g.to_string());
    if (g.is_cyclic()) return units(g.prime(), g.exponent());
    const auto rep = designated_rep(phi.matrix());
    if (!rep) throw Error("phi " + phi.to_string() + " is not a designated representative");
    if (rep->kind() == ConjKind::ScalarDiag) return reps_X(g);
    return matrices_as_automorphisms(centralizer(phi.matrix()).members());
}

/// C(phi) ∩ C(psi) by brute force; the whole unit group for cyclic G.
inline std::vector<Automorphism> stabilizer(const GroupSpec& g, const Automorphism& phi, const Automorphism& psi) {
    if (!phi.acts_on(g) || !psi.acts_on(g)) throw Error("automorphism does not act on " + g.to_string());
    if (!commutes(phi, psi)) throw Error("phi and psi do not commute");
    if (g.is_cyclic()) return units(g.prime(), g.exponent());
    return matrices_as_automorphisms(centralizer_in(centralizer(phi.matrix()), psi.matrix()).members());
}

namespace detail {

/// Orbit representatives (as element indices) of `acting` on the cosets,
/// taking the least coset representative of each orbit, ascending.
template <class Apply>
std::vector<std::size_t> orbit_rep_indices(const CosetList& cosets, std::size_t acting_count, Apply&& apply) {
    const std::size_t m = cosets.representative_indices.size();
    if (m == 1) return {0};
    UnionFind uf(m);
    for (std::size_t s = 0; s < acting_count; ++s)
        for (std::size_t r = 0; r < m; ++r)
            uf.unite(r, cosets.coset_of[apply(s, cosets.representative_indices[r])]);
    // Cosets are numbered in element order, so the first coset seen in an
    // orbit holds its least representative.
    std::vector<std::size_t> least;
    std::vector<char> taken(m, 0);
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t root = uf.find(r);
        if (taken[root]) continue;
        taken[root] = 1;
        least.push_back(cosets.representative_indices[r]);
    }
    return least;
}

inline std::vector<std::size_t> orbit_reps_matrix(const GroupSpec& g, const Mat2& m, const std::vector<Mat2>& acting) {
    if (mat_rank(m) == 2) return {0};
    const CosetList cosets = quotient_cosets(g, m);
    return orbit_rep_indices(cosets, acting.size(), [&](std::size_t s, std::size_t idx) {
        return apply_endomorphism(g, acting[s], idx);
    });
}

inline std::vector<std::size_t> orbit_reps_cyclic(const GroupSpec& g, const ResidueMod& m,
                                                  const std::vector<Automorphism>& unit_group) {
    const CosetList cosets = quotient_cosets(g, m);
    return orbit_rep_indices(cosets, unit_group.size(), [&](std::size_t s, std::size_t idx) {
        return unit_group[s].apply(g, idx);
    });
}

}  // namespace detail

/// G_{phi,psi}: orbit representatives of C(phi) ∩ C(psi) on G/Im(1-phi-psi),
/// each the least coset representative of its orbit, zero first.
inline std::vector<GroupElement> orbit_reps_c(const GroupSpec& g, const Automorphism& phi, const Automorphism& psi) {
    const auto stab = stabilizer(g, phi, psi);
    const CosetList cosets = quotient_cosets(g, one_minus_sum(phi, psi));
    const auto idx = detail::orbit_rep_indices(cosets, stab.size(), [&](std::size_t s, std::size_t i) {
        return stab[s].apply(g, i);
    });
    std::vector<GroupElement> out;
    for (auto i : idx) out.push_back(element_at(g, i));
    return out;
}

namespace detail {

inline std::vector<RepresentativeTriple> enumerate_cyclic_for(const GroupSpec& g, const Automorphism& phi,
                                                              const std::vector<Automorphism>& unit_group) {
    std::vector<RepresentativeTriple> out;
    // The quotient and the acting group depend on 1 - phi - psi alone.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> cache;
    for (const auto& psi : unit_group) {
        const auto m = std::get<ResidueMod>(one_minus_sum(phi, psi));
        auto it = cache.find(m.value());
        if (it == cache.end()) it = cache.emplace(m.value(), orbit_reps_cyclic(g, m, unit_group)).first;
        for (auto c : it->second)
            out.push_back({phi, psi, element_at(g, c), std::string(kCyclicCaseTag)});
    }
    return out;
}

inline std::string zp2_case_tag(const ConjClassRep& phi, ConjKind psi_kind, int rank) {
    switch (phi.kind()) {
        case ConjKind::ScalarDiag:
            return std::string("case1.scalar-") + kind_name(psi_kind) + (rank == 2 ? ".regular" : ".singular");
        case ConjKind::DistinctDiag: return "case2.diag.rank" + std::to_string(rank);
        case ConjKind::Jordan: return "case3.jordan.rank" + std::to_string(rank);
        case ConjKind::IrreducibleCompanion:
            return std::string("case4.irreducible") + (rank == 2 ? ".regular" : ".singular");
    }
    throw Error("unknown representative kind");
}

inline std::vector<RepresentativeTriple> enumerate_zp2_for(const GroupSpec& g, const ConjClassRep& phi_rep,
                                                           const std::vector<ConjClassRep>& all_reps,
                                                           const std::vector<Mat2>& gl) {
    const Prime p = g.prime();
    const Mat2 phi = to_matrix(phi_rep);
    const Mat2 one = Mat2::identity(p);
    const bool scalar = phi_rep.kind() == ConjKind::ScalarDiag;
    const std::vector<Mat2> c_phi = scalar ? gl : centralizer(phi).members();

    std::vector<RepresentativeTriple> out;
    auto emit = [&](const Mat2& psi, ConjKind psi_kind) {
        const Mat2 m = one - phi - psi;
        const int rank = mat_rank(m);
        const std::string tag = zp2_case_tag(phi_rep, psi_kind, rank);
        std::vector<std::size_t> cs{0};
        if (rank < 2) {
            std::vector<Mat2> stab;
            for (const auto& b : c_phi)
                if (b * psi == psi * b) stab.push_back(b);
            cs = orbit_reps_matrix(g, m, stab);
        }
        for (auto c : cs) out.push_back({Automorphism(phi), Automorphism(psi), element_at(g, c), tag});
    };

    if (scalar) {
        for (const auto& r : all_reps) emit(to_matrix(r), r.kind());
    } else {
        for (const auto& psi : c_phi) emit(psi, phi_rep.kind());
    }
    return out;
}

template <class Work>
void run_parallel(std::size_t count, unsigned jobs, Work&& work) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) work(i);
        });
}

}  // namespace detail

/// Full list of representative triples, per-case tallies and total. The
/// output is identical for every value of `jobs`.
inline EnumerationReport enumerate(const GroupSpec& g, unsigned jobs = 1) {
    EnumerationReport report{g, {}, {}, 0};
    std::vector<std::vector<RepresentativeTriple>> parts;

    if (g.is_cyclic()) {
        const auto unit_group = units(g.prime(), g.exponent());
        parts.resize(unit_group.size());
        detail::run_parallel(unit_group.size(), jobs, [&](std::size_t i) {
            parts[i] = detail::enumerate_cyclic_for(g, unit_group[i], unit_group);
        });
        report.tallies[std::string(kCyclicCaseTag)] = 0;
    } else {
        const auto reps = conj_class_reps(g.prime());
        const auto gl = gl2_elements(g.prime());
        parts.resize(reps.size());
        detail::run_parallel(reps.size(), jobs, [&](std::size_t i) {
            parts[i] = detail::enumerate_zp2_for(g, reps[i], reps, gl);
        });
        for (auto tag : kZp2CaseTags) report.tallies[std::string(tag)] = 0;
    }

    for (auto& part : parts)
        for (auto& t : part) {
            ++report.tallies[t.case_tag];
            report.triples.push_back(std::move(t));
        }
    report.total = report.triples.size();
    return report;
}

/// Sum of the enumerated totals over Z_{p^2} and Z_p^2.
inline std::uint64_t enumerated_order_p2(Prime p, unsigned jobs = 1) {
    return enumerate(GroupSpec::cyclic(p, 2), jobs).total + enumerate(GroupSpec::zp2(p), jobs).total;
}

}  // namespace medq
