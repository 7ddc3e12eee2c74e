#pragma once

/**
 * @file free_as2.hpp
 * @brief Normal forms in the free algebra with two compatible associative
 *        products, and the monomial basis they live in.
 *
 * A monomial is in normal form when every *1 node has a generator as its left
 * factor and every *2 node has a left factor of tag 1 (a generator or a *1
 * node). The tag of a normal monomial is 2 exactly when its top node is *2.
 *
 * normal_form rewrites with
 *
 *   R1  (x *1 y) *1 z  ->  x *1 (y *1 z)
 *   R2  (x *2 y) *2 z  ->  x *2 (y *2 z)
 *   R3  (x *2 y) *1 z  ->  x *2 (y *1 z) + x *1 (y *2 z) - (x *1 y) *2 z
 *
 * at the innermost-leftmost redex. Every step is checked against the measure
 * (pairs (u, v) with u a *1 node and v a *2 node in u's left subtree,
 * total left depth of the leaves) in lexicographic order.
 */

#include "as2/expr.hpp"
#include "as2/lincomb.hpp"
#include "as2/rational.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace as2 {

inline bool is_normal(const Expr& e) {
    if (e.is_generator()) return true;
    const Expr& l = e.left();
    if (e.op() == Product::first) return l.is_generator() && is_normal(e.right());
    const bool left_tag1 = l.is_generator() || l.op() == Product::first;
    return left_tag1 && is_normal(l) && is_normal(e.right());
}

/// A monomial in normal form; construction validates.
class NFMonomial {
public:
    explicit NFMonomial(Expr e) : expr_(std::move(e)) {
        if (!is_normal(expr_)) throw std::invalid_argument("NFMonomial: expression is not in normal form");
    }

    [[nodiscard]] const Expr& expr() const { return expr_; }
    [[nodiscard]] std::size_t degree() const { return expr_.degree(); }
    /// 1 for generators and s *1 b', 2 for b1 *2 b2.
    [[nodiscard]] int tag() const {
        return !expr_.is_generator() && expr_.op() == Product::second ? 2 : 1;
    }

    friend std::strong_ordering operator<=>(const NFMonomial& a, const NFMonomial& b) {
        return a.expr_ <=> b.expr_;
    }
    friend bool operator==(const NFMonomial& a, const NFMonomial& b) { return a.expr_ == b.expr_; }

private:
    Expr expr_;
};

using NFLinComb = LinComb<NFMonomial>;

inline int top_tag(const NFMonomial& m) { return m.tag(); }

inline ExprLinComb to_expr_lincomb(const NFLinComb& x) {
    return x.map_keys([](const NFMonomial& m) { return m.expr(); });
}

inline std::string render(const NFLinComb& x, const Alphabet& alphabet) {
    return to_text(x, [&](const NFMonomial& m) { return render_expr(m.expr(), alphabet); });
}

// ---------------------------------------------------------------------------
// Rewriting

struct RewriteMeasure {
    std::size_t mixed_pairs = 0;
    std::size_t left_depth = 0;
    friend auto operator<=>(const RewriteMeasure&, const RewriteMeasure&) = default;
};

namespace detail {

struct MeasureParts {
    std::size_t star2_nodes = 0;
    std::size_t leaves = 0;
    RewriteMeasure m;
};

inline MeasureParts measure_parts(const Expr& e) {
    if (e.is_generator()) return {0, 1, {}};
    auto l = measure_parts(e.left());
    auto r = measure_parts(e.right());
    MeasureParts out;
    out.star2_nodes = l.star2_nodes + r.star2_nodes + (e.op() == Product::second ? 1 : 0);
    out.leaves = l.leaves + r.leaves;
    out.m.mixed_pairs = l.m.mixed_pairs + r.m.mixed_pairs + (e.op() == Product::first ? l.star2_nodes : 0);
    out.m.left_depth = l.m.left_depth + l.leaves + r.m.left_depth;
    return out;
}

}  // namespace detail

inline RewriteMeasure rewrite_measure(const Expr& e) { return detail::measure_parts(e).m; }

class TerminationViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using ExprTerms = std::vector<std::pair<Expr, Rational>>;

/// Applies one rule at the top of `e`, which must be a redex.
inline ExprTerms rewrite_at_top(const Expr& e) {
    const Expr& l = e.left();
    const Expr& x = l.left();
    const Expr& y = l.right();
    const Expr& z = e.right();
    if (e.op() == Product::first && l.op() == Product::first) return {{mul1(x, mul1(y, z)), 1}};
    if (e.op() == Product::second && l.op() == Product::second) return {{mul2(x, mul2(y, z)), 1}};
    if (e.op() == Product::first && l.op() == Product::second)
        return {{mul2(x, mul1(y, z)), 1}, {mul1(x, mul2(y, z)), 1}, {mul2(mul1(x, y), z), -1}};
    throw std::logic_error("rewrite_at_top: not a redex");
}

/// One rewrite step at the innermost-leftmost redex; `e` must not be normal.
inline ExprTerms rewrite_step(const Expr& e) {
    if (!is_normal(e.left())) {
        auto terms = rewrite_step(e.left());
        for (auto& [t, c] : terms) t = Expr::node(e.op(), t, e.right());
        return terms;
    }
    if (!is_normal(e.right())) {
        auto terms = rewrite_step(e.right());
        for (auto& [t, c] : terms) t = Expr::node(e.op(), e.left(), t);
        return terms;
    }
    return rewrite_at_top(e);
}

/// Statistics of a normalization run.
struct RewriteStats {
    std::size_t steps = 0;
};

inline NFLinComb normal_form(const ExprLinComb& x, RewriteStats* stats = nullptr) {
    ExprLinComb work = x;
    NFLinComb done;
    while (!work.empty()) {
        auto [e, c] = work.leading();
        work.erase(e);
        if (is_normal(e)) {
            done.add(NFMonomial(e), c);
            continue;
        }
        const auto before = rewrite_measure(e);
        for (auto& [t, k] : rewrite_step(e)) {
            if (!(rewrite_measure(t) < before))
                throw TerminationViolation("rewrite step did not decrease the termination measure");
            work.add(std::move(t), c * k);
        }
        if (stats) ++stats->steps;
    }
    return done;
}

inline NFLinComb normal_form(const Expr& e) { return normal_form(ExprLinComb(e)); }

// ---------------------------------------------------------------------------
// Monomial bases

/**
 * The multilinear basis on the given pairwise distinct labels, in generation
 * order: first a_k *1 b' for k in label order, then b1 *2 b2 over splittings
 * (A1, A2) with tag(b1) = 1.
 */
inline std::vector<NFMonomial> gen_multilinear_basis(const std::vector<Label>& labels) {
    const std::size_t n = labels.size();
    if (n == 0) throw std::invalid_argument("gen_multilinear_basis: empty label set");
    if (n > 20) throw std::invalid_argument("gen_multilinear_basis: too many labels");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (labels[i] == labels[j]) throw std::invalid_argument("gen_multilinear_basis: repeated label");

    std::map<unsigned, std::vector<Expr>> memo;
    auto build = [&](auto&& self, unsigned mask) -> const std::vector<Expr>& {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::vector<Expr> out;
        if ((mask & (mask - 1)) == 0) {
            unsigned k = 0;
            while (!((mask >> k) & 1U)) ++k;
            out.push_back(Expr::generator(labels[k]));
        } else {
            for (unsigned k = 0; k < n; ++k) {
                if (!((mask >> k) & 1U)) continue;
                const auto& rest = self(self, mask & ~(1U << k));
                for (const auto& b : rest) out.push_back(mul1(Expr::generator(labels[k]), b));
            }
            // Proper nonempty submasks in increasing order.
            for (unsigned sub = 1; sub < (1U << n); ++sub) {
                if ((sub & mask) != sub || sub == mask) continue;
                const auto& lefts = self(self, sub);
                const auto& rights = self(self, mask & ~sub);
                for (const auto& b1 : lefts) {
                    if (!b1.is_generator() && b1.op() == Product::second) continue;
                    for (const auto& b2 : rights) out.push_back(mul2(b1, b2));
                }
            }
        }
        return memo.emplace(mask, std::move(out)).first->second;
    };
    const auto& all = build(build, (1U << n) - 1);
    std::vector<NFMonomial> result;
    result.reserve(all.size());
    for (const auto& e : all) result.emplace_back(e);
    return result;
}

/// Normal monomials of degree n with leaves drawn freely from the first `num_labels` labels.
inline std::vector<NFMonomial> gen_word_monomials(std::size_t n, std::size_t num_labels) {
    if (n == 0) throw std::invalid_argument("gen_word_monomials: degree must be >= 1");
    std::vector<std::vector<Expr>> by_degree(n + 1);
    for (std::uint32_t s = 0; s < num_labels; ++s) by_degree[1].push_back(Expr::generator(Label{s}));
    for (std::size_t d = 2; d <= n; ++d) {
        auto& out = by_degree[d];
        for (std::uint32_t s = 0; s < num_labels; ++s)
            for (const auto& w : by_degree[d - 1]) out.push_back(mul1(Expr::generator(Label{s}), w));
        for (std::size_t k = 1; k < d; ++k)
            for (const auto& w1 : by_degree[k]) {
                if (!w1.is_generator() && w1.op() == Product::second) continue;
                for (const auto& w2 : by_degree[d - k]) out.push_back(mul2(w1, w2));
            }
    }
    std::vector<NFMonomial> result;
    result.reserve(by_degree[n].size());
    for (const auto& e : by_degree[n]) result.emplace_back(e);
    return result;
}

inline std::vector<NFMonomial> gen_word_monomials(std::size_t n, const Alphabet& alphabet) {
    return gen_word_monomials(n, alphabet.size());
}

struct TagCounts {
    BigInt tag1;
    BigInt tag2;
    BigInt total;
    friend bool operator==(const TagCounts&, const TagCounts&) = default;
};

/**
 * Multilinear basis sizes on [n] split by tag, counted with the recursion of
 * the basis definition: tag1(n) = n * total(n-1),
 * tag2(n) = sum_k C(n,k) tag1(k) total(n-k).
 */
inline TagCounts count_basis_by_tag(std::size_t n) {
    if (n == 0) throw std::invalid_argument("count_basis_by_tag: n must be >= 1");
    std::vector<BigInt> t1(n + 1), t2(n + 1), tot(n + 1);
    t1[1] = 1;
    t2[1] = 0;
    tot[1] = 1;
    for (std::size_t m = 2; m <= n; ++m) {
        t1[m] = BigInt(m) * tot[m - 1];
        for (std::size_t k = 1; k < m; ++k)
            t2[m] += binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)) * t1[k] * tot[m - k];
        tot[m] = t1[m] + t2[m];
    }
    return {t1[n], t2[n], tot[n]};
}

/// The same counts obtained by materializing the basis.
inline TagCounts count_basis_by_tag_enumerated(std::size_t n) {
    std::vector<Label> labels;
    for (std::uint32_t i = 0; i < n; ++i) labels.push_back(Label{i});
    TagCounts c{0, 0, 0};
    for (const auto& m : gen_multilinear_basis(labels)) (m.tag() == 1 ? c.tag1 : c.tag2) += 1;
    c.total = c.tag1 + c.tag2;
    return c;
}

}  // namespace as2
