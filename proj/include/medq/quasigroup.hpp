#pragma once

// Quasigroups affine over an abelian group, materialized as Cayley tables.
//
// Text format of a table (bit-exact): a line holding n, then n lines of n
// space-separated decimal indices, each line newline-terminated, with no
// leading or trailing whitespace.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "medq/abelian_group.hpp"
#include "medq/gl2.hpp"

namespace medq {

/// (G, +, phi, psi, c) with phi, psi commuting automorphisms of G and c in G.
class AffineForm {
public:
    AffineForm(GroupSpec group, Automorphism phi, Automorphism psi, GroupElement c)
        : group_(group), phi_(std::move(phi)), psi_(std::move(psi)), c_(std::move(c)) {
        if (!phi_.acts_on(group_) || !psi_.acts_on(group_))
            throw Error("automorphism does not act on " + group_.to_string());
        if (!commutes(phi_, psi_)) throw Error("phi and psi do not commute");
        if (!belongs_to(c_, group_)) throw Error("c does not belong to " + group_.to_string());
    }

    const GroupSpec& group() const noexcept { return group_; }
    const Automorphism& phi() const noexcept { return phi_; }
    const Automorphism& psi() const noexcept { return psi_; }
    const GroupElement& c() const noexcept { return c_; }

private:
    GroupSpec group_;
    Automorphism phi_;
    Automorphism psi_;
    GroupElement c_;
};

class CayleyTable {
public:
    CayleyTable() = default;
    CayleyTable(std::size_t n, std::vector<std::uint32_t> cells) : n_(n), cells_(std::move(cells)) {
        if (n == 0) throw Error("table of order 0");
        if (cells_.size() != n * n) throw Error("table needs n*n cells");
        for (auto v : cells_)
            if (v >= n) throw Error("table entry " + std::to_string(v) + " out of range");
    }

    std::size_t order() const noexcept { return n_; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * n_ + j]; }
    const std::vector<std::uint32_t>& cells() const noexcept { return cells_; }

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> cells_;
};

/// t[i][j] = index of phi(g_i) + psi(g_j) + c.
inline CayleyTable build_table(const AffineForm& f) {
    const auto& g = f.group();
    const std::size_t n = g.order();
    const std::size_t c = index_of(g, f.c());
    std::vector<std::size_t> phi_c(n), psi_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        phi_c[i] = add_indices(g, f.phi().apply(g, i), c);
        psi_of[i] = f.psi().apply(g, i);
    }
    std::vector<std::uint32_t> cells(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cells[i * n + j] = static_cast<std::uint32_t>(add_indices(g, phi_c[i], psi_of[j]));
    return {n, std::move(cells)};
}

inline bool is_latin(const CayleyTable& t) {
    const std::size_t n = t.order();
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[t(i, j)]) return false;
            seen[t(i, j)] = 1;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[t(i, j)]) return false;
            seen[t(i, j)] = 1;
        }
    }
    return true;
}

/// (x*y)*(u*v) == (x*u)*(y*v) over all n^4 quadruples.
inline bool is_medial(const CayleyTable& t) {
    const std::size_t n = t.order();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t u = 0; u < n; ++u) {
                const auto xy = t(x, y);
                const auto xu = t(x, u);
                for (std::size_t v = 0; v < n; ++v)
                    if (t(xy, t(u, v)) != t(xu, t(y, v))) return false;
            }
    return true;
}

inline std::size_t count_idempotents(const CayleyTable& t) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < t.order(); ++i)
        if (t(i, i) == i) ++k;
    return k;
}

/// Relabeling-invariant signature of a self-map f of {0..n-1}: the sorted
/// lengths of its cycles followed by a 0 separator and the sorted in-degrees.
/// For a permutation this is its cycle type plus n ones.
inline std::vector<std::uint32_t> map_signature(const std::vector<std::uint32_t>& f) {
    const std::size_t n = f.size();
    std::vector<std::uint32_t> cycles;
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on current path, 2 done
    for (std::size_t s = 0; s < n; ++s) {
        if (state[s]) continue;
        std::vector<std::size_t> path;
        std::size_t x = s;
        while (state[x] == 0) {
            state[x] = 1;
            path.push_back(x);
            x = f[x];
        }
        if (state[x] == 1) {
            std::uint32_t len = 1;
            for (std::size_t y = f[x]; y != x; y = f[y]) ++len;
            cycles.push_back(len);
        }
        for (auto v : path) state[v] = 2;
    }
    std::sort(cycles.begin(), cycles.end());
    std::vector<std::uint32_t> indeg(n, 0);
    for (auto v : f) ++indeg[v];
    std::sort(indeg.begin(), indeg.end());
    cycles.push_back(0);
    cycles.insert(cycles.end(), indeg.begin(), indeg.end());
    return cycles;
}

inline std::vector<std::uint32_t> row_map(const CayleyTable& t, std::size_t i) {
    return {t.cells().begin() + static_cast<std::ptrdiff_t>(i * t.order()),
            t.cells().begin() + static_cast<std::ptrdiff_t>((i + 1) * t.order())};
}

inline std::vector<std::uint32_t> column_map(const CayleyTable& t, std::size_t j) {
    std::vector<std::uint32_t> f(t.order());
    for (std::size_t i = 0; i < t.order(); ++i) f[i] = t(i, j);
    return f;
}

inline std::vector<std::uint32_t> diagonal_map(const CayleyTable& t) {
    std::vector<std::uint32_t> f(t.order());
    for (std::size_t i = 0; i < t.order(); ++i) f[i] = t(i, i);
    return f;
}

/// Sorted multiset of the row signatures.
inline std::vector<std::vector<std::uint32_t>> row_profile(const CayleyTable& t) {
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(t.order());
    for (std::size_t i = 0; i < t.order(); ++i) rows.push_back(map_signature(row_map(t, i)));
    std::sort(rows.begin(), rows.end());
    return rows;
}

/// Relabel a table: returns s with s[perm[i]][perm[j]] = perm[t[i][j]].
inline CayleyTable relabel(const CayleyTable& t, const std::vector<std::uint32_t>& perm) {
    const std::size_t n = t.order();
    if (perm.size() != n) throw Error("relabeling has wrong size");
    std::vector<std::uint32_t> cells(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cells[perm[i] * n + perm[j]] = perm[t(i, j)];
    return {n, std::move(cells)};
}

inline void write_table(std::ostream& os, const CayleyTable& t) {
    const std::size_t n = t.order();
    os << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) os << ' ';
            os << t(i, j);
        }
        os << '\n';
    }
}

inline std::string to_text(const CayleyTable& t) {
    std::ostringstream os;
    write_table(os, t);
    return os.str();
}

/// Row i of the text format, without the newline.
inline std::string row_text(const CayleyTable& t, std::size_t i) {
    std::string s;
    for (std::size_t j = 0; j < t.order(); ++j) {
        if (j) s += ' ';
        s += std::to_string(t(i, j));
    }
    return s;
}

namespace detail {

inline bool parse_decimal(const std::string& s, std::size_t& pos, std::uint64_t& out) {
    const std::size_t start = pos;
    out = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        out = out * 10 + static_cast<std::uint64_t>(s[pos] - '0');
        if (out > (std::uint64_t{1} << 32)) return false;
        ++pos;
    }
    return pos > start;
}

}  // namespace detail

/// Reads zero or more concatenated tables in the strict text format.
inline std::vector<CayleyTable> read_tables(std::istream& is) {
    std::vector<CayleyTable> out;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw Error("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (is.eof()) fail("missing final newline");
        std::size_t pos = 0;
        std::uint64_t n = 0;
        if (!detail::parse_decimal(line, pos, n) || pos != line.size()) fail("expected table order");
        if (n == 0 || n > 4096) fail("unsupported table order " + std::to_string(n));
        std::vector<std::uint32_t> cells;
        cells.reserve(n * n);
        for (std::uint64_t i = 0; i < n; ++i) {
            if (!std::getline(is, line)) fail("table truncated");
            ++lineno;
            if (is.eof()) fail("missing final newline");
            pos = 0;
            for (std::uint64_t j = 0; j < n; ++j) {
                if (j > 0) {
                    if (pos >= line.size() || line[pos] != ' ') fail("expected single space separator");
                    ++pos;
                }
                std::uint64_t v = 0;
                if (!detail::parse_decimal(line, pos, v)) fail("expected decimal entry");
                if (v >= n) fail("entry out of range");
                cells.push_back(static_cast<std::uint32_t>(v));
            }
            if (pos != line.size()) fail("trailing characters in row");
        }
        out.emplace_back(static_cast<std::size_t>(n), std::move(cells));
    }
    return out;
}

inline CayleyTable parse_table(const std::string& text) {
    std::istringstream is(text);
    auto tables = read_tables(is);
    if (tables.size() != 1) throw Error("expected exactly one table");
    return std::move(tables.front());
}

}  // namespace medq
