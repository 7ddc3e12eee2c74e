#pragma once

/**
 * @file tree_products.hpp
 * @brief Grafting products *1 and *2 on QRT(S), the branch-splitting coproduct,
 *        and the pencil products on the tensor square.
 *
 * For trees T1 = T1[1]...T1[k] and T2:
 *
 *   T1 *1 T2 = sum over f: [k] -> Vertices(T2) of graft(T1, T2, f)
 *   T1 *2 T2 = sum over g: [k] -> Int(T2)      of graft(T1, T2, g)
 *
 * graft places the branches T1[i] with f(i) = v as new leftmost children of v,
 * in increasing i. Sums run over maps, so coinciding trees accumulate
 * multiplicity.
 *
 * Products are defined on trees of degree >= 1. In unital mode the degree-0
 * tree `()` is a two-sided unit for both products; the bare *2 sum would make
 * T *2 () vanish.
 */

#include "as2/lincomb.hpp"
#include "as2/tree.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace as2 {

using TreeLinComb = LinComb<PlanarTree>;
using TreePair = std::pair<PlanarTree, PlanarTree>;
using TreePairLinComb = LinComb<TreePair>;

enum class Product : int { first = 1, second = 2 };

enum class UnitMode : bool { strict = false, unital = true };

/// Images of the root branches of the left operand, one address per branch.
struct GraftMap {
    std::vector<VertexAddr> targets;
};

class DegreeZeroOperand : public std::invalid_argument {
public:
    DegreeZeroOperand() : std::invalid_argument("grafting product with a degree-0 operand in strict mode") {}
};

namespace detail {

inline void graft_rebuild(const std::vector<Vertex>& forest, const std::vector<Vertex>& scion,
                          const std::vector<std::vector<std::size_t>>& at, std::size_t& counter,
                          std::vector<Vertex>& out) {
    for (const auto& v : forest) {
        const std::size_t idx = ++counter;
        Vertex nv{v.label, {}};
        nv.children.reserve(at[idx].size() + v.children.size());
        for (auto i : at[idx]) nv.children.push_back(scion[i]);
        graft_rebuild(v.children, scion, at, counter, nv.children);
        out.push_back(std::move(nv));
    }
}

/// graft with targets given as preorder indices of t2 (0 = root).
inline PlanarTree graft_preorder(const PlanarTree& t1, const PlanarTree& t2,
                                 const std::vector<std::size_t>& targets) {
    std::vector<std::vector<std::size_t>> at(t2.degree() + 1);
    for (std::size_t i = 0; i < targets.size(); ++i) at[targets[i]].push_back(i);
    std::vector<Vertex> root;
    root.reserve(t1.root_arity() + t2.root_arity());
    for (auto i : at[0]) root.push_back(t1.branches()[i]);
    std::size_t counter = 0;
    graft_rebuild(t2.branches(), t1.branches(), at, counter, root);
    return PlanarTree(std::move(root));
}

/// Sums graft(t1, t2, f) over all maps f from the k root branches into `allowed`.
inline TreeLinComb graft_sum(const PlanarTree& t1, const PlanarTree& t2,
                             const std::vector<std::size_t>& allowed) {
    TreeLinComb out;
    const std::size_t k = t1.root_arity();
    if (allowed.empty() && k > 0) return out;
    std::vector<std::size_t> digit(k, 0);
    std::vector<std::size_t> targets(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) targets[i] = allowed[digit[i]];
        out.add(graft_preorder(t1, t2, targets), 1);
        std::size_t pos = 0;
        while (pos < k && ++digit[pos] == allowed.size()) digit[pos++] = 0;
        if (pos == k) break;
    }
    return out;
}

inline std::size_t preorder_index(const PlanarTree& t, const VertexAddr& addr) {
    auto all = vertices(t);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == addr) return i;
    throw std::out_of_range("invalid vertex address " + addr.str());
}

}  // namespace detail

/// Grafts the root branches of t1 onto t2 along f.
inline PlanarTree graft(const PlanarTree& t1, const PlanarTree& t2, const GraftMap& f) {
    if (f.targets.size() != t1.root_arity())
        throw std::invalid_argument("graft: map has " + std::to_string(f.targets.size()) +
                                    " targets but the left tree has " +
                                    std::to_string(t1.root_arity()) + " root branches");
    std::vector<std::size_t> targets;
    targets.reserve(f.targets.size());
    for (const auto& a : f.targets) targets.push_back(detail::preorder_index(t2, a));
    return detail::graft_preorder(t1, t2, targets);
}

inline TreeLinComb star1(const PlanarTree& t1, const PlanarTree& t2) {
    if (t1.degree() == 0 || t2.degree() == 0) throw DegreeZeroOperand();
    std::vector<std::size_t> all(t2.degree() + 1);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return detail::graft_sum(t1, t2, all);
}

inline TreeLinComb star2(const PlanarTree& t1, const PlanarTree& t2) {
    if (t1.degree() == 0 || t2.degree() == 0) throw DegreeZeroOperand();
    return detail::graft_sum(t1, t2, internal_vertex_indices(t2));
}

inline TreeLinComb star(Product op, const PlanarTree& t1, const PlanarTree& t2,
                        UnitMode mode = UnitMode::strict) {
    if (mode == UnitMode::unital) {
        if (t1.degree() == 0) return TreeLinComb(t2);
        if (t2.degree() == 0) return TreeLinComb(t1);
    }
    return op == Product::first ? star1(t1, t2) : star2(t1, t2);
}

/// Bilinear extension of *1 / *2.
inline TreeLinComb star_lin(Product op, const TreeLinComb& x, const TreeLinComb& y,
                            UnitMode mode = UnitMode::strict) {
    TreeLinComb out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.add(star(op, a, b, mode), ca * cb);
    return out;
}

/// Sum over ordered splittings of the root branches into two complementary subsequences.
inline TreePairLinComb coproduct(const PlanarTree& t) {
    TreePairLinComb out;
    const auto& br = t.branches();
    const std::size_t k = br.size();
    if (k >= 8 * sizeof(unsigned long long))
        throw std::length_error("coproduct: root arity too large");
    for (unsigned long long mask = 0; mask < (1ULL << k); ++mask) {
        std::vector<Vertex> left, right;
        for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1ULL ? left : right).push_back(br[i]);
        out.add(TreePair{PlanarTree(std::move(left)), PlanarTree(std::move(right))}, 1);
    }
    return out;
}

inline TreePairLinComb coproduct(const TreeLinComb& x) {
    TreePairLinComb out;
    for (const auto& [t, c] : x) out.add(coproduct(t), c);
    return out;
}

/// a (x) b for linear combinations a, b.
inline TreePairLinComb tensor(const TreeLinComb& a, const TreeLinComb& b) {
    TreePairLinComb out;
    for (const auto& [s, cs] : a)
        for (const auto& [t, ct] : b) out.add(TreePair{s, t}, cs * ct);
    return out;
}

/**
 * (a1 (x) b1) *_{lambda,mu} (a2 (x) b2)
 *   = (lambda a1 *1 a2 + mu a1 *2 a2) (x) (lambda b1 *1 b2 + mu b1 *2 b2),
 * extended bilinearly.
 */
inline TreePairLinComb pencil_tensor_product(const Rational& lambda, const Rational& mu,
                                             const TreePairLinComb& x, const TreePairLinComb& y,
                                             UnitMode mode = UnitMode::strict) {
    auto pencil = [&](const PlanarTree& s, const PlanarTree& t) {
        TreeLinComb out;
        if (!lambda.is_zero()) out.add(star(Product::first, s, t, mode), lambda);
        if (!mu.is_zero()) out.add(star(Product::second, s, t, mode), mu);
        return out;
    };
    TreePairLinComb out;
    for (const auto& [p1, c1] : x)
        for (const auto& [p2, c2] : y) out.add(tensor(pencil(p1.first, p2.first), pencil(p1.second, p2.second)), c1 * c2);
    return out;
}

/// Slotwise product on the tensor square: the pencil at (1,0) or (0,1).
inline TreePairLinComb slotwise_product(Product op, const TreePairLinComb& x, const TreePairLinComb& y,
                                        UnitMode mode = UnitMode::unital) {
    return op == Product::first ? pencil_tensor_product(1, 0, x, y, mode)
                                : pencil_tensor_product(0, 1, x, y, mode);
}

inline std::string render_pair(const TreePair& p, const Alphabet& alphabet) {
    return render_tree(p.first, alphabet) + " (x) " + render_tree(p.second, alphabet);
}

inline std::string render(const TreeLinComb& x, const Alphabet& alphabet) {
    return to_text(x, [&](const PlanarTree& t) { return render_tree(t, alphabet); });
}

inline std::string render(const TreePairLinComb& x, const Alphabet& alphabet) {
    return to_text(x, [&](const TreePair& p) { return render_pair(p, alphabet); });
}

inline TreeLinComb parse_tree_lincomb(std::string_view text, const Alphabet& alphabet) {
    return parse_lincomb<PlanarTree>(text, [&](std::string_view s, std::size_t& pos) {
        return parse_tree_at(s, pos, alphabet);
    });
}

}  // namespace as2
