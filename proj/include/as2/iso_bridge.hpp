#pragma once

/**
 * @file iso_bridge.hpp
 * @brief Evaluation of product expressions in the tree algebra, its inverse
 *        on normal-form coordinates, and the rank checks behind them.
 *
 * Under the default assignment s -> (s), evaluation identifies the free
 * algebra on S with QRT(S). Inversion solves against the evaluation matrix of
 * the word monomials, one block per label multiset; a block that is not
 * square and full rank raises SolveFailure.
 */

#include "as2/free_as2.hpp"
#include "as2/linalg.hpp"
#include "as2/report.hpp"
#include "as2/tree_products.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace as2 {

/// Generator images; the default sends every label s to the two-vertex tree (s).
class GeneratorAssignment {
public:
    explicit GeneratorAssignment(const Alphabet& alphabet) {
        for (auto l : alphabet.labels()) images_.emplace(l, single_vertex_tree(l));
    }

    void assign(Label l, PlanarTree t) { images_.insert_or_assign(l, std::move(t)); }

    [[nodiscard]] const PlanarTree& image(Label l) const {
        auto it = images_.find(l);
        if (it == images_.end())
            throw std::invalid_argument("unassigned label index " + std::to_string(l.index));
        return it->second;
    }

private:
    std::map<Label, PlanarTree> images_;
};

inline TreeLinComb eval_expr(const Expr& e, const GeneratorAssignment& g) {
    if (e.is_generator()) return TreeLinComb(g.image(e.label()));
    return star_lin(e.op(), eval_expr(e.left(), g), eval_expr(e.right(), g));
}

inline TreeLinComb eval_expr(const ExprLinComb& x, const GeneratorAssignment& g) {
    TreeLinComb out;
    for (const auto& [e, c] : x) out.add(eval_expr(e, g), c);
    return out;
}

inline TreeLinComb eval_expr(const NFLinComb& x, const GeneratorAssignment& g) {
    return eval_expr(to_expr_lincomb(x), g);
}

using BasisCoordinates = NFLinComb;

class SolveFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Inverts evaluation under the default assignment. Blocks (degree plus label
 * multiset) are built on first use and cached.
 */
class TreeBasisSolver {
public:
    explicit TreeBasisSolver(Alphabet alphabet) : alphabet_(std::move(alphabet)), assignment_(alphabet_) {}

    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }

    BasisCoordinates tree_to_basis(const TreeLinComb& x) {
        std::map<std::vector<std::size_t>, TreeLinComb> parts;
        std::size_t degree = 0;
        bool first = true;
        for (const auto& [t, c] : x) {
            if (t.degree() == 0) throw std::invalid_argument("tree_to_basis: degree-0 tree");
            if (!first && t.degree() != degree)
                throw std::invalid_argument("tree_to_basis: input is not homogeneous");
            degree = t.degree();
            first = false;
            parts[label_counts(t, alphabet_.size())].add(t, c);
        }
        BasisCoordinates out;
        for (const auto& [counts, part] : parts) {
            const Block& b = block(counts);
            auto coords = b.echelon.express(part);
            if (!coords) throw SolveFailure("tree_to_basis: tree outside the evaluated span");
            for (const auto& [row, c] : *coords) out.add(b.monomials[row], c);
        }
        return out;
    }

    BasisCoordinates tree_to_basis(const PlanarTree& t) { return tree_to_basis(TreeLinComb(t)); }

private:
    struct Block {
        std::vector<NFMonomial> monomials;
        Echelon<PlanarTree> echelon;
    };

    const Block& block(const std::vector<std::size_t>& counts) {
        std::lock_guard lock(mutex_);
        if (auto it = blocks_.find(counts); it != blocks_.end()) return it->second;
        std::size_t degree = 0;
        for (auto c : counts) degree += c;
        Block b;
        for (const auto& m : word_monomials(degree)) {
            std::vector<Label> leaves;
            leaf_labels(m.expr(), leaves);
            std::vector<std::size_t> mc(alphabet_.size(), 0);
            for (auto l : leaves) ++mc[l.index];
            if (mc == counts) b.monomials.push_back(m);
        }
        std::size_t trees = 0;
        for (const auto& t : trees_of_degree(degree))
            if (label_counts(t, alphabet_.size()) == counts) ++trees;
        for (std::size_t i = 0; i < b.monomials.size(); ++i)
            b.echelon.insert(eval_expr(b.monomials[i].expr(), assignment_), i);
        if (b.echelon.rank() != b.monomials.size() || b.monomials.size() != trees)
            throw SolveFailure("evaluation block is singular: rank " + std::to_string(b.echelon.rank()) +
                               ", monomials " + std::to_string(b.monomials.size()) + ", trees " +
                               std::to_string(trees));
        return blocks_.emplace(counts, std::move(b)).first->second;
    }

    const std::vector<NFMonomial>& word_monomials(std::size_t degree) {
        auto it = words_.find(degree);
        if (it == words_.end()) it = words_.emplace(degree, gen_word_monomials(degree, alphabet_)).first;
        return it->second;
    }

    const std::vector<PlanarTree>& trees_of_degree(std::size_t degree) {
        auto it = trees_.find(degree);
        if (it == trees_.end()) it = trees_.emplace(degree, enumerate_trees(degree, alphabet_)).first;
        return it->second;
    }

    Alphabet alphabet_;
    GeneratorAssignment assignment_;
    std::mutex mutex_;
    std::map<std::vector<std::size_t>, Block> blocks_;
    std::map<std::size_t, std::vector<NFMonomial>> words_;
    std::map<std::size_t, std::vector<PlanarTree>> trees_;
};

// ---------------------------------------------------------------------------
// Generation by degree-1 elements

namespace detail {

inline ExprLinComb mul_lin(Product op, const ExprLinComb& a, const ExprLinComb& b) {
    ExprLinComb out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out.add(Expr::node(op, x, y), cx * cy);
    return out;
}

inline std::optional<ExprLinComb> decompose(const PlanarTree& t, std::size_t& fuel,
                                            std::set<PlanarTree>& open);

inline std::optional<ExprLinComb> decompose_body(const PlanarTree& t, std::size_t& fuel,
                                                 std::set<PlanarTree>& open) {

    ExprLinComb result;
    TreeLinComb extra;
    if (t.root_arity() == 1) {
        // T = T' *1 s - T' *2 s - (trees with some branches of T' at the root)
        const Vertex& child = t.branches().front();
        PlanarTree sub(child.children);
        PlanarTree s = single_vertex_tree(child.label);
        auto sub_expr = decompose(sub, fuel, open);
        if (!sub_expr) return std::nullopt;
        ExprLinComb gen(Expr::generator(child.label));
        result = mul_lin(Product::first, *sub_expr, gen) - mul_lin(Product::second, *sub_expr, gen);
        extra = star1(sub, s) - star2(sub, s);
    } else {
        // T = T' . T'' with T' a single branch; T' *1 T'' = T + (lower root arity)
        PlanarTree head({t.branches().front()});
        PlanarTree tail(std::vector<Vertex>(t.branches().begin() + 1, t.branches().end()));
        auto head_expr = decompose(head, fuel, open);
        if (!head_expr) return std::nullopt;
        auto tail_expr = decompose(tail, fuel, open);
        if (!tail_expr) return std::nullopt;
        result = mul_lin(Product::first, *head_expr, *tail_expr);
        extra = star1(head, tail);
    }
    extra.add(t, -1);
    for (const auto& [u, c] : extra) {
        auto sub = decompose(u, fuel, open);
        if (!sub) return std::nullopt;
        result.add(*sub, -c);
    }
    return result;
}

/// A tree that re-enters itself can never finish, so the whole call fails at once.
inline std::optional<ExprLinComb> decompose(const PlanarTree& t, std::size_t& fuel,
                                            std::set<PlanarTree>& open) {
    if (fuel == 0) return std::nullopt;
    --fuel;
    if (t.degree() == 1) return ExprLinComb(Expr::generator(t.branches().front().label));
    if (!open.insert(t).second) return std::nullopt;
    auto out = decompose_body(t, fuel, open);
    open.erase(t);
    return out;
}

}  // namespace detail

/**
 * Expresses a tree through degree-1 generators by the degree/root-arity
 * recursion. The recursion can cycle between root arities at equal degree.
 * It runs on a budget of recursive calls and stops early once a tree reaches
 * itself again; std::nullopt means either of these happened.
 */
inline std::optional<ExprLinComb> decompose_generation(const PlanarTree& t, std::size_t fuel,
                                                       std::size_t* used = nullptr) {
    if (t.degree() == 0) throw std::invalid_argument("decompose_generation: degree-0 tree");
    if (fuel == 0) throw std::invalid_argument("decompose_generation: fuel must be >= 1");
    std::size_t remaining = fuel;
    std::set<PlanarTree> open;
    auto out = detail::decompose(t, remaining, open);
    if (used) *used = fuel - remaining;
    return out;
}

// ---------------------------------------------------------------------------
// Rank checks

/// All binary expressions with the given leaf sequence and any *1/*2 colouring.
inline std::vector<Expr> all_bracketings(const std::vector<Label>& leaves, std::size_t lo, std::size_t hi) {
    std::vector<Expr> out;
    if (hi - lo == 1) {
        out.push_back(Expr::generator(leaves[lo]));
        return out;
    }
    for (std::size_t mid = lo + 1; mid < hi; ++mid) {
        auto lefts = all_bracketings(leaves, lo, mid);
        auto rights = all_bracketings(leaves, mid, hi);
        for (auto op : {Product::first, Product::second})
            for (const auto& l : lefts)
                for (const auto& r : rights) out.push_back(Expr::node(op, l, r));
    }
    return out;
}

/// Every multilinear expression on n labels: shapes x colourings x leaf orders.
inline std::vector<Expr> all_multilinear_expressions(std::size_t n) {
    std::vector<Label> leaves;
    for (std::uint32_t i = 0; i < n; ++i) leaves.push_back(Label{i});
    std::vector<Expr> out;
    do {
        auto part = all_bracketings(leaves, 0, n);
        out.insert(out.end(), part.begin(), part.end());
    } while (std::next_permutation(leaves.begin(), leaves.end()));
    return out;
}

inline CheckReport multilinear_rank_check(std::size_t n) {
    if (n < 2 || n > 5) throw std::invalid_argument("multilinear_rank_check: n must be in [2, 5]");
    const Alphabet alphabet = Alphabet::letters(n);
    const GeneratorAssignment g(alphabet);
    SparseMatrix<PlanarTree> m;
    for (const auto& e : all_multilinear_expressions(n)) m.rows.push_back(eval_expr(e, g));
    const std::size_t r = rank(m);
    const BigInt expected = factorial(static_cast<unsigned>(n)) *
                            binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(n)) / (n + 1);
    const std::size_t span = m.column_keys().size();
    CheckReport rep{"multilinear_rank", {}, BigInt(r) == expected && BigInt(span) == expected};
    rep.with("n", n).with("expressions", m.rows.size()).with("rank", r).with("expected", big_to_json(expected));
    return rep;
}

/// Trees whose root has exactly one child, of the given degree.
inline std::vector<PlanarTree> one_child_trees(std::size_t degree, std::size_t num_labels) {
    std::vector<PlanarTree> out;
    for (auto& t : enumerate_trees(degree, num_labels))
        if (t.root_arity() == 1) out.push_back(std::move(t));
    return out;
}

/**
 * For each degree d <= max_degree: the *1-products g1 *1 ... *1 gk of
 * one-root-child trees with total degree d number exactly as many as a free
 * associative algebra on those generators has in degree d, and they have full
 * rank equal to the number of trees of degree d.
 */
inline std::vector<CheckReport> gl_generation_check(std::size_t max_degree, std::size_t num_labels) {
    if (max_degree > 4) throw std::invalid_argument("gl_generation_check: max_degree must be <= 4");
    std::vector<std::vector<PlanarTree>> gens(max_degree + 1);
    for (std::size_t d = 1; d <= max_degree; ++d) gens[d] = one_child_trees(d, num_labels);

    std::vector<CheckReport> out;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        // products[k] = all products of total degree k
        std::vector<std::vector<TreeLinComb>> products(d + 1);
        products[0].push_back(TreeLinComb(PlanarTree()));
        for (std::size_t k = 1; k <= d; ++k)
            for (std::size_t last = 1; last <= k; ++last)
                for (const auto& prefix : products[k - last])
                    for (const auto& gtree : gens[last])
                        products[k].push_back(star_lin(Product::first, prefix, TreeLinComb(gtree), UnitMode::unital));
        SparseMatrix<PlanarTree> m{products[d]};
        const std::size_t r = rank(m);
        const std::size_t trees = enumerate_trees(d, num_labels).size();
        CheckReport rep{"gl_generation", {}, r == products[d].size() && r == trees};
        rep.with("degree", d)
            .with("labels", num_labels)
            .with("generators", gens[d].size())
            .with("products", products[d].size())
            .with("rank", r)
            .with("trees", trees);
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace as2
