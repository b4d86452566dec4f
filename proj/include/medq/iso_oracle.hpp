#pragma once

// Ground-truth isomorphism testing on raw Cayley tables. Nothing here looks
// at affine structure: tables are compared by backtracking over partial
// bijections, so agreement with the enumerator is an independent check.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "medq/abelian_group.hpp"
#include "medq/gl2.hpp"
#include "medq/quasigroup.hpp"

namespace medq {

inline constexpr std::size_t kMaxIsoOrder = 16;
inline constexpr std::size_t kMaxClassifyOrder = 9;

struct Fingerprint {
    std::size_t order = 0;
    std::size_t idempotent_count = 0;
    std::vector<std::uint32_t> diagonal_cycle_type;
    std::vector<std::vector<std::uint32_t>> row_profile;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const CayleyTable& t) {
    return {t.order(), count_idempotents(t), map_signature(diagonal_map(t)), row_profile(t)};
}

struct IsoClass {
    CayleyTable canonical_member;
    std::size_t members = 0;
    Fingerprint fingerprint;
    /// Positions of the classified inputs in this class, ascending; the first
    /// one is the canonical member.
    std::vector<std::size_t> member_indices;
};

namespace detail {

/// Per-element labels that any isomorphism must preserve: idempotency plus
/// the row and column signatures. Labels are comparable across the two
/// tables because they index a shared dictionary.
class ElementLabels {
public:
    std::vector<std::size_t> label(const CayleyTable& t) {
        std::vector<std::size_t> out(t.order());
        for (std::size_t i = 0; i < t.order(); ++i) {
            Key key{t(i, i) == i, map_signature(row_map(t, i)), map_signature(column_map(t, i))};
            auto [it, inserted] = ids_.emplace(std::move(key), ids_.size());
            out[i] = it->second;
        }
        return out;
    }

private:
    using Key = std::tuple<bool, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
    std::map<Key, std::size_t> ids_;
};

class IsoSearch {
public:
    IsoSearch(const CayleyTable& s, const CayleyTable& t) : s_(s), t_(t), n_(s.order()), fwd_(n_, kNone), bwd_(n_, kNone) {
        ElementLabels labels;
        ls_ = labels.label(s);
        lt_ = labels.label(t);
    }

    bool run() {
        auto a = ls_, b = lt_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
        return extend();
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    bool extend() {
        std::size_t x = 0;
        while (x < n_ && fwd_[x] != kNone) ++x;
        if (x == n_) return true;
        for (std::size_t y = 0; y < n_; ++y) {
            if (bwd_[y] != kNone || lt_[y] != ls_[x]) continue;
            const std::size_t mark = mapped_.size();
            if (assign(x, y) && extend()) return true;
            undo(mark);
        }
        return false;
    }

    // Map x -> y and close under the operation: once a and b are mapped,
    // s(a, b) must go to t(fwd a, fwd b).
    bool assign(std::size_t x, std::size_t y) {
        std::vector<std::pair<std::size_t, std::size_t>> queue{{x, y}};
        while (!queue.empty()) {
            const auto [a, b] = queue.back();
            queue.pop_back();
            if (fwd_[a] == b) continue;
            if (fwd_[a] != kNone || bwd_[b] != kNone || ls_[a] != lt_[b]) return false;
            fwd_[a] = b;
            bwd_[b] = a;
            mapped_.push_back(a);
            for (std::size_t c : mapped_) {
                const std::size_t fc = fwd_[c];
                queue.emplace_back(s_(a, c), t_(b, fc));
                queue.emplace_back(s_(c, a), t_(fc, b));
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (mapped_.size() > mark) {
            const std::size_t a = mapped_.back();
            mapped_.pop_back();
            bwd_[fwd_[a]] = kNone;
            fwd_[a] = kNone;
        }
    }

    const CayleyTable& s_;
    const CayleyTable& t_;
    std::size_t n_;
    std::vector<std::size_t> fwd_, bwd_, mapped_;
    std::vector<std::size_t> ls_, lt_;
};

}  // namespace detail

/// True iff some bijection sigma has sigma(s[i][j]) = t[sigma(i)][sigma(j)].
inline bool are_isomorphic(const CayleyTable& s, const CayleyTable& t) {
    if (s.order() != t.order()) return false;
    if (s.order() > kMaxIsoOrder)
        throw Error("isomorphism test capped at order " + std::to_string(kMaxIsoOrder));
    if (s == t) return true;
    return detail::IsoSearch(s, t).run();
}

/// Every (phi, psi, c) with phi psi = psi phi, phi and psi in ascending
/// order, c in element order.
inline std::vector<AffineForm> all_affine_forms(const GroupSpec& g) {
    if (g.order() > kMaxClassifyOrder)
        throw Error("raw affine-form listing capped at order " + std::to_string(kMaxClassifyOrder));
    std::vector<Automorphism> aut;
    if (g.is_cyclic()) {
        aut = units(g.prime(), g.exponent());
    } else {
        for (const auto& m : gl2_elements(g.prime())) aut.emplace_back(m);
    }
    const auto elems = elements(g);
    std::vector<AffineForm> out;
    for (const auto& phi : aut)
        for (const auto& psi : aut) {
            if (!commutes(phi, psi)) continue;
            for (const auto& c : elems) out.emplace_back(g, phi, psi, c);
        }
    return out;
}

/// Partition tables into isomorphism classes, ordered by first occurrence.
/// Tables are bucketed by fingerprint, and buckets are independent, so
/// `jobs` workers may process them concurrently without affecting the result.
inline std::vector<IsoClass> classify(const std::vector<CayleyTable>& tables, unsigned jobs = 1) {
    if (tables.empty()) return {};
    const std::size_t n = tables.front().order();
    for (const auto& t : tables)
        if (t.order() != n) throw Error("classify needs tables of a single order");
    if (n > kMaxClassifyOrder)
        throw Error("classification capped at order " + std::to_string(kMaxClassifyOrder));

    std::vector<Fingerprint> prints;
    prints.reserve(tables.size());
    for (const auto& t : tables) prints.push_back(fingerprint(t));

    std::map<Fingerprint, std::size_t> bucket_of;
    std::vector<std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        auto [it, inserted] = bucket_of.emplace(prints[i], buckets.size());
        if (inserted) buckets.emplace_back();
        buckets[it->second].push_back(i);
    }

    // Each bucket yields classes as lists of member positions.
    std::vector<std::vector<std::vector<std::size_t>>> found(buckets.size());
    auto work = [&](std::size_t b) {
        auto& classes = found[b];
        for (std::size_t i : buckets[b]) {
            bool placed = false;
            for (auto& cls : classes)
                if (are_isomorphic(tables[cls.front()], tables[i])) {
                    cls.push_back(i);
                    placed = true;
                    break;
                }
            if (!placed) classes.push_back({i});
        }
    };
    if (jobs <= 1) {
        for (std::size_t b = 0; b < buckets.size(); ++b) work(b);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t b = next++; b < buckets.size(); b = next++) work(b);
            });
    }

    std::vector<IsoClass> out;
    for (auto& classes : found)
        for (auto& members : classes) {
            const std::size_t first = members.front();
            out.push_back({tables[first], members.size(), prints[first], std::move(members)});
        }
    std::sort(out.begin(), out.end(),
              [](const IsoClass& a, const IsoClass& b) { return a.member_indices.front() < b.member_indices.front(); });
    return out;
}

/// For each probe table, the index of the class it belongs to, if any.
inline std::vector<std::optional<std::size_t>> match_to_classes(const std::vector<IsoClass>& classes,
                                                                const std::vector<CayleyTable>& probes) {
    std::vector<std::optional<std::size_t>> out;
    out.reserve(probes.size());
    for (const auto& t : probes) {
        const Fingerprint fp = fingerprint(t);
        std::optional<std::size_t> hit;
        for (std::size_t c = 0; c < classes.size() && !hit; ++c)
            if (classes[c].fingerprint == fp && are_isomorphic(classes[c].canonical_member, t)) hit = c;
        out.push_back(hit);
    }
    return out;
}

/// Every Latin square of order n with symbols 0..n-1, in lexicographic row order.
inline std::vector<CayleyTable> all_latin_squares(std::size_t n) {
    if (n == 0 || n > 5) throw Error("Latin-square scan supports orders 1..5");
    std::vector<std::uint32_t> cells(n * n);
    std::vector<CayleyTable> out;
    std::vector<std::vector<char>> row_used(n, std::vector<char>(n, 0)), col_used(n, std::vector<char>(n, 0));
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n * n) {
            out.emplace_back(n, cells);
            return;
        }
        const std::size_t i = pos / n, j = pos % n;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (row_used[i][v] || col_used[j][v]) continue;
            row_used[i][v] = col_used[j][v] = 1;
            cells[pos] = v;
            self(self, pos + 1);
            row_used[i][v] = col_used[j][v] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace medq
