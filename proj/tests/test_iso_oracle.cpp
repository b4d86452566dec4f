#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "medq/enumerator.hpp"
#include "medq/iso_oracle.hpp"

using namespace medq;

namespace {

std::vector<CayleyTable> affine_tables(const GroupSpec& g) {
    std::vector<CayleyTable> out;
    for (const auto& f : all_affine_forms(g)) out.push_back(build_table(f));
    return out;
}

std::vector<CayleyTable> representative_tables(const GroupSpec& g) {
    std::vector<CayleyTable> out;
    for (const auto& t : enumerate(g).triples) out.push_back(build_table(AffineForm(g, t.phi, t.psi, t.c)));
    return out;
}

std::vector<std::uint32_t> random_perm(std::size_t n, std::mt19937& rng) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Exhaustive check over all n! bijections, for tiny n.
bool brute_isomorphic(const CayleyTable& s, const CayleyTable& t) {
    if (s.order() != t.order()) return false;
    std::vector<std::uint32_t> perm(s.order());
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        if (relabel(s, perm) == t) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

void expect_one_to_one(const GroupSpec& g) {
    const auto classes = classify(affine_tables(g));
    const auto reps = representative_tables(g);
    ASSERT_EQ(classes.size(), reps.size()) << g.to_string();
    const auto hits = match_to_classes(classes, reps);
    std::vector<int> count(classes.size(), 0);
    for (const auto& h : hits) {
        ASSERT_TRUE(h.has_value());
        ++count[*h];
    }
    for (int c : count) EXPECT_EQ(c, 1);
}

}  // namespace

TEST(AreIsomorphic, ReflexiveAndRelabeling) {
    std::mt19937 rng(3);
    for (const auto& t : representative_tables(GroupSpec::zp2(Prime(3)))) {
        EXPECT_TRUE(are_isomorphic(t, t));
        const auto s = relabel(t, random_perm(t.order(), rng));
        EXPECT_TRUE(are_isomorphic(t, s));
        EXPECT_TRUE(are_isomorphic(s, t));
        EXPECT_EQ(fingerprint(s), fingerprint(t));
    }
}

TEST(AreIsomorphic, KleinVersusCyclic) {
    const auto z4 = build_table(AffineForm(GroupSpec::cyclic(Prime(2), 2), Automorphism(ResidueMod(1, Prime(2), 2)),
                                           Automorphism(ResidueMod(1, Prime(2), 2)), ResidueMod(0, Prime(2), 2)));
    const Prime two(2);
    const auto klein = build_table(AffineForm(GroupSpec::zp2(two), Automorphism(Mat2::identity(two)),
                                              Automorphism(Mat2::identity(two)), Vec2{FpScalar(0, two), FpScalar(0, two)}));
    EXPECT_FALSE(are_isomorphic(z4, klein));
    EXPECT_FALSE(brute_isomorphic(z4, klein));
}

TEST(AreIsomorphic, AgreesWithBruteForceOnOrderFour) {
    const auto squares = all_latin_squares(4);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, squares.size() - 1);
    for (int i = 0; i < 300; ++i) {
        const auto& s = squares[pick(rng)];
        const auto& t = squares[pick(rng)];
        EXPECT_EQ(are_isomorphic(s, t), brute_isomorphic(s, t));
    }
}

TEST(AreIsomorphic, OrderMismatchAndCap) {
    EXPECT_FALSE(are_isomorphic(CayleyTable(1, {0}), CayleyTable(2, {0, 1, 1, 0})));
    std::vector<std::uint32_t> cells(17 * 17);
    for (std::size_t i = 0; i < 17; ++i)
        for (std::size_t j = 0; j < 17; ++j) cells[i * 17 + j] = static_cast<std::uint32_t>((i + j) % 17);
    const CayleyTable big(17, cells);
    EXPECT_THROW(are_isomorphic(big, big), Error);
}

TEST(AllAffineForms, Counts) {
    // Commuting pairs in a finite group number |G| * (number of classes).
    EXPECT_EQ(all_affine_forms(GroupSpec::zp2(Prime(2))).size(), 6u * 3u * 4u);
    EXPECT_EQ(all_affine_forms(GroupSpec::cyclic(Prime(3), 2)).size(), 36u * 9u);
    EXPECT_EQ(all_affine_forms(GroupSpec::zp2(Prime(3))).size(), 48u * 8u * 9u);
    EXPECT_THROW(all_affine_forms(GroupSpec::zp2(Prime(5))), Error);
}

TEST(Classify, SmallGroups) {
    EXPECT_EQ(classify(affine_tables(GroupSpec::zp2(Prime(2)))).size(), 9u);
    EXPECT_EQ(classify(affine_tables(GroupSpec::cyclic(Prime(2), 2))).size(), 4u);
    EXPECT_EQ(classify(affine_tables(GroupSpec::cyclic(Prime(3), 1))).size(), 5u);
}

TEST(Classify, ClassInvariants) {
    const auto tables = affine_tables(GroupSpec::cyclic(Prime(3), 2));
    const auto classes = classify(tables);
    EXPECT_EQ(classes.size(), 48u);
    std::size_t total = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        total += classes[c].members;
        EXPECT_EQ(classes[c].member_indices.size(), classes[c].members);
        if (c > 0) {
            EXPECT_LT(classes[c - 1].member_indices.front(), classes[c].member_indices.front());
        }
        for (auto i : classes[c].member_indices) EXPECT_TRUE(are_isomorphic(classes[c].canonical_member, tables[i]));
        for (std::size_t d = c + 1; d < classes.size(); ++d)
            EXPECT_FALSE(are_isomorphic(classes[c].canonical_member, classes[d].canonical_member));
    }
    EXPECT_EQ(total, tables.size());
}

TEST(Classify, IndependentOfWorkerCount) {
    const auto tables = affine_tables(GroupSpec::zp2(Prime(3)));
    const auto a = classify(tables, 1);
    const auto b = classify(tables, 4);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].member_indices, b[i].member_indices);
}

TEST(Classify, RejectsMixedOrdersAndOversize) {
    EXPECT_THROW(classify({CayleyTable(1, {0}), CayleyTable(2, {0, 1, 1, 0})}), Error);
    std::vector<std::uint32_t> cells(100);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) cells[i * 10 + j] = static_cast<std::uint32_t>((i + j) % 10);
    EXPECT_THROW(classify({CayleyTable(10, cells)}), Error);
}

TEST(OneToOne, EnumeratorMatchesOracleOrderFour) {
    expect_one_to_one(GroupSpec::zp2(Prime(2)));
    expect_one_to_one(GroupSpec::cyclic(Prime(2), 2));
}

TEST(OneToOne, EnumeratorMatchesOracleOrderNine) {
    expect_one_to_one(GroupSpec::cyclic(Prime(3), 2));
    expect_one_to_one(GroupSpec::zp2(Prime(3)));
}

TEST(ToyodaBruckCompleteness, MedialLatinSquaresUpToOrderFourAreAffine) {
    const std::vector<std::pair<std::size_t, std::vector<GroupSpec>>> orders{
        {2, {GroupSpec::cyclic(Prime(2), 1)}},
        {3, {GroupSpec::cyclic(Prime(3), 1)}},
        {4, {GroupSpec::cyclic(Prime(2), 2), GroupSpec::zp2(Prime(2))}},
    };
    for (const auto& [n, groups] : orders) {
        std::vector<CayleyTable> affine;
        for (const auto& g : groups)
            for (auto& t : affine_tables(g)) affine.push_back(std::move(t));
        const auto affine_classes = classify(affine);

        std::vector<CayleyTable> medial;
        for (auto& t : all_latin_squares(n))
            if (is_medial(t)) medial.push_back(std::move(t));
        for (const auto& hit : match_to_classes(affine_classes, medial)) EXPECT_TRUE(hit.has_value()) << "n=" << n;
        EXPECT_EQ(classify(medial).size(), affine_classes.size()) << "n=" << n;
    }
}

TEST(ToyodaBruckCompleteness, MedialCountOfOrderFour) {
    std::vector<CayleyTable> medial;
    for (auto& t : all_latin_squares(4))
        if (is_medial(t)) medial.push_back(std::move(t));
    EXPECT_EQ(classify(medial).size(), 13u);
}
