#include <gtest/gtest.h>

#include <algorithm>

#include "medq/enumerator.hpp"

using namespace medq;

namespace {

Automorphism mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint64_t p) {
    return Automorphism(Mat2(a, b, c, d, Prime(p)));
}

std::vector<Mat2> as_matrices(const std::vector<Automorphism>& v) {
    std::vector<Mat2> out;
    for (const auto& a : v) out.push_back(a.matrix());
    return out;
}

}  // namespace

TEST(RepsX, Sizes) {
    EXPECT_EQ(reps_X(GroupSpec::cyclic(Prime(3), 2)).size(), 6u);
    EXPECT_EQ(reps_X(GroupSpec::zp2(Prime(3))).size(), 8u);
    EXPECT_EQ(reps_X(GroupSpec::zp2(Prime(2))).size(), 3u);
    EXPECT_EQ(reps_X(GroupSpec::zp2(Prime(3))).size(), gl2_conjugacy_classes(Prime(3)).size());
}

TEST(RepsY, Examples) {
    const auto g = GroupSpec::zp2(Prime(3));
    EXPECT_EQ(reps_Y(g, mat(1, 0, 0, 1, 3)).size(), 8u);
    EXPECT_EQ(reps_Y(g, mat(1, 1, 0, 1, 3)).size(), 6u);
    EXPECT_EQ(reps_Y(g, mat(1, 0, 0, 2, 3)).size(), 4u);
    EXPECT_THROW(reps_Y(g, mat(1, 0, 1, 1, 3)), Error);  // conjugate to Jordan(1), but not the designated form
    EXPECT_EQ(reps_Y(GroupSpec::cyclic(Prime(3), 2), Automorphism(ResidueMod(2, Prime(3), 2))).size(), 6u);
}

TEST(RepsY, IsConjugacyTransversalInsideCentralizer) {
    for (std::uint64_t q : {2u, 3u, 5u}) {
        const auto g = GroupSpec::zp2(Prime(q));
        for (const auto& phi : reps_X(g)) {
            const auto ys = as_matrices(reps_Y(g, phi));
            const auto classes = conjugacy_classes(centralizer(phi.matrix()).members());
            ASSERT_EQ(classes.size(), ys.size()) << phi.to_string();
            for (const auto& cls : classes)
                EXPECT_EQ(std::count_if(ys.begin(), ys.end(), [&](const Mat2& y) { return cls.contains(y); }), 1);
        }
    }
}

TEST(Stabilizer, Examples) {
    const std::uint64_t q = 5;
    const auto g = GroupSpec::zp2(Prime(q));
    EXPECT_EQ(stabilizer(g, mat(2, 0, 0, 2, q), mat(3, 0, 0, 3, q)).size(), gl2_order(Prime(q)));
    EXPECT_EQ(stabilizer(g, mat(1, 0, 0, 3, q), mat(4, 0, 0, 2, q)).size(), (q - 1) * (q - 1));
    EXPECT_EQ(stabilizer(g, mat(2, 0, 0, 2, q), mat(3, 1, 0, 3, q)).size(), q * (q - 1));
    EXPECT_EQ(stabilizer(GroupSpec::cyclic(Prime(3), 2), Automorphism(ResidueMod(2, Prime(3), 2)),
                         Automorphism(ResidueMod(4, Prime(3), 2)))
                  .size(),
              6u);
    EXPECT_THROW(stabilizer(g, mat(1, 1, 0, 1, q), mat(1, 0, 1, 1, q)), Error);
}

TEST(OrbitRepsC, RegularGivesZeroOnly) {
    const auto g = GroupSpec::zp2(Prime(3));
    // 1 - I - I = -I, invertible
    const auto reps = orbit_reps_c(g, mat(1, 0, 0, 1, 3), mat(1, 0, 0, 1, 3));
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_EQ(reps[0], zero_element(g));
}

TEST(OrbitRepsC, RankOneGivesTwo) {
    for (std::uint64_t q : {3u, 5u}) {
        const auto g = GroupSpec::zp2(Prime(q));
        for (const auto& phi : reps_X(g))
            for (const auto& psi : reps_Y(g, phi)) {
                if (mat_rank(std::get<Mat2>(one_minus_sum(phi, psi))) != 1) continue;
                const auto reps = orbit_reps_c(g, phi, psi);
                ASSERT_EQ(reps.size(), 2u);
                EXPECT_EQ(reps[0], zero_element(g));
            }
    }
}

TEST(OrbitRepsC, DistinctDiagRankZeroGivesFour) {
    // phi = diag(a, b), psi = diag(1-a, 1-b): 1 - phi - psi = 0
    const auto g = GroupSpec::zp2(Prime(5));
    const auto reps = orbit_reps_c(g, mat(2, 0, 0, 3, 5), mat(-1, 0, 0, -2, 5));
    ASSERT_EQ(reps.size(), 4u);
    std::vector<std::vector<std::uint64_t>> comps;
    for (const auto& r : reps) comps.push_back(components(r));
    EXPECT_EQ(comps, (std::vector<std::vector<std::uint64_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(OrbitRepsC, TwoPowerCyclicIsAlwaysRegular) {
    // Two odd units sum to an even residue, so 1 - phi - psi is odd and
    // hence a unit: every pair contributes exactly one triple.
    const Prime two(2);
    const auto g = GroupSpec::cyclic(two, 3);
    for (const auto& phi : units(two, 3))
        for (const auto& psi : units(two, 3)) {
            const auto reps = orbit_reps_c(g, phi, psi);
            ASSERT_EQ(reps.size(), 1u);
            EXPECT_EQ(reps[0], zero_element(g));
        }
    EXPECT_EQ(enumerate(GroupSpec::cyclic(two, 5)).total, 16u * 16u);
}

TEST(OrbitRepsC, OddCyclicValuations) {
    const Prime three(3);
    const auto g = GroupSpec::cyclic(three, 2);
    // 1 - 5 - 5 = -9 = 0 mod 9: quotient is all of Z_9, orbits {0}, {3,6}, units
    const auto full = orbit_reps_c(g, Automorphism(ResidueMod(5, three, 2)), Automorphism(ResidueMod(5, three, 2)));
    std::vector<std::uint64_t> vals;
    for (const auto& r : full) vals.push_back(components(r)[0]);
    EXPECT_EQ(vals, (std::vector<std::uint64_t>{0, 1, 3}));
    // 1 - 2 - 2 = -3 = 6: image 3Z_9, quotient Z_3, orbits {0}, {1,2}
    const auto part = orbit_reps_c(g, Automorphism(ResidueMod(2, three, 2)), Automorphism(ResidueMod(2, three, 2)));
    vals.clear();
    for (const auto& r : part) vals.push_back(components(r)[0]);
    EXPECT_EQ(vals, (std::vector<std::uint64_t>{0, 1}));
}

TEST(Enumerate, TotalsMatchClosedForms) {
    EXPECT_EQ(enumerate(GroupSpec::zp2(Prime(2))).total, 9u);
    EXPECT_EQ(enumerate(GroupSpec::zp2(Prime(3))).total, 68u);
    EXPECT_EQ(enumerate(GroupSpec::cyclic(Prime(3), 2)).total, 48u);
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}, {2, 5}, {3, 4}, {5, 3}})
        EXPECT_EQ(enumerate(GroupSpec::cyclic(Prime(p), k)).total, closed_form_cyclic(Prime(p), k)) << p << "^" << k;
}

TEST(Enumerate, TalliesAtThree) {
    const auto r = enumerate(GroupSpec::zp2(Prime(3)));
    const std::vector<std::uint64_t> expect{3, 2, 1, 2, 3, 2, 6, 2, 4, 0, 9, 4, 3, 21, 6};
    ASSERT_EQ(r.tallies.size(), kZp2CaseTags.size());
    for (std::size_t i = 0; i < kZp2CaseTags.size(); ++i)
        EXPECT_EQ(r.tallies.at(std::string(kZp2CaseTags[i])), expect[i]) << kZp2CaseTags[i];
    std::uint64_t sum = 0;
    for (const auto& [tag, n] : r.tallies) sum += n;
    EXPECT_EQ(sum, r.total);
    EXPECT_EQ(r.triples.size(), r.total);
}

TEST(Enumerate, DegenerateRowsAtTwoAreZero) {
    const auto r = enumerate(GroupSpec::zp2(Prime(2)));
    for (auto tag : kZp2CaseTags)
        EXPECT_EQ(BigInt(r.tallies.at(std::string(tag))), zp2_row_count(tag, Prime(2))) << tag;
    EXPECT_EQ(r.tallies.at("case2.diag.rank2"), 0u);
    EXPECT_EQ(r.tallies.at("case3.jordan.rank0"), 0u);
}

TEST(Enumerate, TriplesSatisfyInvariants) {
    const auto g = GroupSpec::zp2(Prime(3));
    for (const auto& t : enumerate(g).triples) {
        EXPECT_TRUE(commutes(t.phi, t.psi));
        EXPECT_TRUE(belongs_to(t.c, g));
        EXPECT_NE(std::find(kZp2CaseTags.begin(), kZp2CaseTags.end(), t.case_tag), kZp2CaseTags.end());
    }
}

TEST(Enumerate, DeterministicAcrossJobCounts) {
    for (const auto& g : {GroupSpec::zp2(Prime(5)), GroupSpec::cyclic(Prime(3), 3)}) {
        const auto serial = enumerate(g, 1);
        const auto parallel = enumerate(g, 4);
        ASSERT_EQ(serial.total, parallel.total);
        EXPECT_EQ(serial.tallies, parallel.tallies);
        for (std::size_t i = 0; i < serial.triples.size(); ++i) {
            EXPECT_EQ(serial.triples[i].phi, parallel.triples[i].phi);
            EXPECT_EQ(serial.triples[i].psi, parallel.triples[i].psi);
            EXPECT_EQ(serial.triples[i].c, parallel.triples[i].c);
            EXPECT_EQ(serial.triples[i].case_tag, parallel.triples[i].case_tag);
        }
    }
}

TEST(CaseFour, DeterminantIdentityAndSingularPoint) {
    for (std::uint64_t q : {3u, 5u, 7u}) {
        const Prime p(q);
        for (const auto& r : conj_class_reps(p)) {
            if (r.kind() != ConjKind::IrreducibleCompanion) continue;
            const Mat2 phi = to_matrix(r);
            for (std::int64_t u = 0; u < static_cast<std::int64_t>(q); ++u)
                for (std::int64_t v = 0; v < static_cast<std::int64_t>(q); ++v) {
                    if (u == 0 && v == 0) continue;
                    const Mat2 psi(u, v, r.a() * v, u + r.b() * v, p);
                    const Mat2 m = Mat2::identity(p) - phi - psi;
                    const std::int64_t a = r.a(), b = r.b();
                    const FpScalar formula((1 - u) * (1 - u) - b * (1 - u) * (1 + v) - a * (1 + v) * (1 + v), p);
                    EXPECT_EQ(mat_det(m), formula);
                    const bool at_point = u == 1 && FpScalar(v, p) == FpScalar(-1, p);
                    EXPECT_EQ(m.det_value() == 0, at_point);
                }
        }
    }
}

TEST(Orbits, CentralizerActionOnWholeGroup) {
    for (std::uint64_t q : {3u, 5u, 7u}) {
        const Prime p(q);
        const auto g = GroupSpec::zp2(p);
        for (const auto& r : conj_class_reps(p)) {
            const auto orbits = detail::orbit_reps_matrix(g, Mat2::zero(p), centralizer(to_matrix(r)).members());
            switch (r.kind()) {
                case ConjKind::ScalarDiag: EXPECT_EQ(orbits.size(), 2u); break;
                case ConjKind::DistinctDiag: EXPECT_EQ(orbits.size(), 4u); break;
                case ConjKind::Jordan: EXPECT_EQ(orbits.size(), 3u); break;
                case ConjKind::IrreducibleCompanion: EXPECT_EQ(orbits.size(), 2u); break;
            }
        }
    }
}

TEST(OrderP2, SumOfEnumeratedTotals) {
    EXPECT_EQ(enumerated_order_p2(Prime(2)), 13u);
    EXPECT_EQ(enumerated_order_p2(Prime(3)), 116u);
}
