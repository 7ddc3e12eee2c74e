#pragma once

// Independent reference implementations used only by the tests.

#include "as2/rational.hpp"
#include "as2/tree.hpp"

#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using as2::Label;
using as2::PlanarTree;
using as2::Rational;
using as2::Vertex;

/// Tree as parent array; vertex 0 is the root, children kept in list order.
struct ParentTree {
    std::vector<int> parent;
    std::vector<std::uint32_t> label;
    std::vector<std::vector<int>> kids;
};

inline void flatten(const std::vector<Vertex>& forest, int at, ParentTree& out) {
    for (const auto& v : forest) {
        const int id = static_cast<int>(out.parent.size());
        out.parent.push_back(at);
        out.label.push_back(v.label.index);
        out.kids.emplace_back();
        out.kids[at].push_back(id);
        flatten(v.children, id, out);
    }
}

inline ParentTree from_tree(const PlanarTree& t) {
    ParentTree p{{-1}, {0}, {{}}};
    flatten(t.branches(), 0, p);
    return p;
}

inline Vertex build(const ParentTree& p, int v) {
    Vertex out{Label{p.label[v]}, {}};
    for (int c : p.kids[v]) out.children.push_back(build(p, c));
    return out;
}

inline PlanarTree to_tree(const ParentTree& p) {
    std::vector<Vertex> branches;
    for (int c : p.kids[0]) branches.push_back(build(p, c));
    return PlanarTree(std::move(branches));
}

/// Copies the subtree of `src` below vertex `v` into `dst` under `at`; returns the new id.
inline int copy_into(const ParentTree& src, int v, ParentTree& dst, int at) {
    const int id = static_cast<int>(dst.parent.size());
    dst.parent.push_back(at);
    dst.label.push_back(src.label[v]);
    dst.kids.emplace_back();
    for (int c : src.kids[v]) {
        int nc = copy_into(src, c, dst, id);
        dst.kids[id].push_back(nc);
    }
    return id;
}

/// Multiset of grafting results, as a map tree -> multiplicity.
inline std::map<PlanarTree, long> graft_all(const PlanarTree& t1, const PlanarTree& t2, bool internal_only) {
    const ParentTree a = from_tree(t1);
    const ParentTree b = from_tree(t2);
    std::vector<int> targets;
    for (int v = 0; v < static_cast<int>(b.parent.size()); ++v)
        if (!internal_only || !b.kids[v].empty()) targets.push_back(v);
    const auto& roots = a.kids[0];
    std::map<PlanarTree, long> out;
    if (targets.empty()) return out;
    std::vector<std::size_t> choice(roots.size(), 0);
    while (true) {
        ParentTree r = b;
        std::map<int, std::vector<int>> incoming;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            int id = copy_into(a, roots[i], r, targets[choice[i]]);
            incoming[targets[choice[i]]].push_back(id);
        }
        for (auto& [v, ids] : incoming) {
            auto& ks = r.kids[v];
            ks.insert(ks.begin(), ids.begin(), ids.end());
        }
        ++out[to_tree(r)];
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == targets.size()) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    return out;
}

/// Dense Gaussian elimination over Q.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            const Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Catalan numbers by the convolution recurrence.
inline std::vector<long long> catalan_table(std::size_t n) {
    std::vector<long long> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
    return c;
}

/// Narayana numbers by counting Dyck paths of semilength n with k+1 peaks.
inline long long narayana_paths(int n, int k) {
    long long count = 0;
    const int len = 2 * n;
    for (long mask = 0; mask < (1L << len); ++mask) {
        int h = 0, peaks = 0, ups = 0;
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) {
            const bool up = (mask >> i) & 1;
            if (up) {
                ++h;
                ++ups;
            } else {
                if (i > 0 && ((mask >> (i - 1)) & 1)) ++peaks;
                if (--h < 0) ok = false;
            }
        }
        if (ok && h == 0 && ups == n && peaks == k + 1) ++count;
    }
    return count;
}

}  // namespace oracle
