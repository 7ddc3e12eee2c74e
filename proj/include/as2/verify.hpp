#pragma once

/**
 * @file verify.hpp
 * @brief The verification suites: each criterion runs exhaustively (or on a
 *        seeded random sample) at a fixed size and yields one CheckReport.
 *
 * VerifyConfig{} carries the reference sizes; `VerifyConfig::scaled` derives
 * all sizes from a single degree bound for the CLI.
 */

#include "as2/characters.hpp"
#include "as2/free_as2.hpp"
#include "as2/iso_bridge.hpp"
#include "as2/report.hpp"
#include "as2/tree_products.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace as2 {

struct VerifyConfig {
    std::size_t tree_count_max = 8;      // tree counts for n = 1..tree_count_max
    std::size_t laws_one_label = 5;      // total degree bound, one label
    std::size_t laws_two_labels = 4;     // total degree bound, two labels
    std::size_t basis_max = 6;           // multilinear and word basis counts
    std::size_t rewrite_exhaustive = 3;  // exhaustive soundness degree
    std::size_t rewrite_random_max = 5;  // random soundness degree
    std::size_t rewrite_samples = 1000;
    std::uint32_t seed = 20081215;
    std::size_t rank_max = 4;            // multilinear rank for n = 2..rank_max
    std::size_t roundtrip_max = 4;       // tree_to_basis roundtrip degree, two labels
    std::size_t series_order = 8;        // character / rational series
    std::size_t integer_order = 12;      // integer-only series
    std::size_t sl2_max = 8;
    std::size_t coassoc_max = 4;
    std::size_t hom_total = 3;
    std::size_t gl_max = 4;
    std::size_t gl_series_order = 10;

    static VerifyConfig scaled(std::size_t max_degree, std::size_t order) {
        VerifyConfig c;
        c.tree_count_max = 2 * max_degree;
        c.laws_one_label = max_degree + 1;
        c.laws_two_labels = max_degree;
        c.basis_max = max_degree + 2;
        c.rewrite_exhaustive = max_degree > 1 ? max_degree - 1 : 1;
        c.rewrite_random_max = max_degree + 1;
        c.rank_max = std::min<std::size_t>(max_degree, 5);
        c.roundtrip_max = max_degree;
        c.series_order = order;
        c.integer_order = order + 4;
        c.sl2_max = order;
        c.coassoc_max = max_degree;
        c.hom_total = max_degree > 1 ? max_degree - 1 : 1;
        c.gl_max = std::min<std::size_t>(max_degree, 4);
        c.gl_series_order = order + 2;
        return c;
    }
};

namespace detail {

inline std::vector<PlanarTree> trees_up_to(std::size_t max_degree, std::size_t labels, std::size_t min_degree) {
    std::vector<PlanarTree> out;
    for (std::size_t d = min_degree; d <= max_degree; ++d) {
        auto part = enumerate_trees(d, labels);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// Number of triples checked and the first failure, if any.
struct LawTally {
    std::size_t triples = 0;
    std::optional<std::string> failure;
};

inline void check_laws_on(const PlanarTree& a, const PlanarTree& b, const PlanarTree& c, UnitMode mode,
                          const Alphabet& alphabet, LawTally& tally) {
    ++tally.triples;
    if (tally.failure) return;
    const TreeLinComb x(a), y(b), z(c);
    auto s = [&](Product op, const TreeLinComb& u, const TreeLinComb& v) { return star_lin(op, u, v, mode); };
    const auto p1 = Product::first;
    const auto p2 = Product::second;
    auto where = [&] {
        return render_tree(a, alphabet) + ", " + render_tree(b, alphabet) + ", " + render_tree(c, alphabet);
    };
    if (s(p1, s(p1, x, y), z) != s(p1, x, s(p1, y, z))) tally.failure = "*1 associativity at " + where();
    else if (s(p2, s(p2, x, y), z) != s(p2, x, s(p2, y, z))) tally.failure = "*2 associativity at " + where();
    else if (s(p2, s(p1, x, y), z) + s(p1, s(p2, x, y), z) != s(p1, x, s(p2, y, z)) + s(p2, x, s(p1, y, z)))
        tally.failure = "four-term relation at " + where();
}

inline LawTally laws_exhaustive(std::size_t total, std::size_t labels, UnitMode mode) {
    const Alphabet alphabet = Alphabet::numbered(labels);
    const std::size_t min_deg = mode == UnitMode::unital ? 0 : 1;
    std::vector<std::vector<PlanarTree>> by_degree(total + 1);
    for (std::size_t d = min_deg; d <= total; ++d) by_degree[d] = enumerate_trees(d, labels);
    LawTally tally;
    for (std::size_t d1 = min_deg; d1 <= total; ++d1)
        for (std::size_t d2 = min_deg; d1 + d2 <= total; ++d2)
            for (std::size_t d3 = min_deg; d1 + d2 + d3 <= total; ++d3) {
                if (mode == UnitMode::unital && d1 && d2 && d3) continue;  // strict triples run separately
                for (const auto& a : by_degree[d1])
                    for (const auto& b : by_degree[d2])
                        for (const auto& c : by_degree[d3]) check_laws_on(a, b, c, mode, alphabet, tally);
            }
    return tally;
}

/// All expressions of the given degree with leaves from `labels` generators.
inline std::vector<Expr> all_expressions(std::size_t degree, std::size_t labels) {
    std::vector<Expr> out;
    std::vector<std::uint32_t> word(degree, 0);
    while (true) {
        std::vector<Label> leaves;
        for (auto w : word) leaves.push_back(Label{w});
        auto part = all_bracketings(leaves, 0, degree);
        out.insert(out.end(), part.begin(), part.end());
        std::size_t pos = 0;
        while (pos < degree && ++word[pos] == labels) word[pos++] = 0;
        if (pos == degree) break;
    }
    return out;
}

inline Expr random_expression(std::mt19937& rng, std::size_t degree, std::size_t labels) {
    if (degree == 1) {
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(labels - 1));
        return Expr::generator(Label{pick(rng)});
    }
    std::uniform_int_distribution<std::size_t> split(1, degree - 1);
    std::uniform_int_distribution<int> op(1, 2);
    const std::size_t left = split(rng);
    Expr l = random_expression(rng, left, labels);
    Expr r = random_expression(rng, degree - left, labels);
    return Expr::node(op(rng) == 1 ? Product::first : Product::second, std::move(l), std::move(r));
}

using TreeTriple = std::tuple<PlanarTree, PlanarTree, PlanarTree>;

inline LinComb<TreeTriple> coassoc_left(const PlanarTree& t) {
    LinComb<TreeTriple> out;
    for (const auto& [p, c] : coproduct(t))
        for (const auto& [q, d] : coproduct(p.first)) out.add(TreeTriple{q.first, q.second, p.second}, c * d);
    return out;
}

inline LinComb<TreeTriple> coassoc_right(const PlanarTree& t) {
    LinComb<TreeTriple> out;
    for (const auto& [p, c] : coproduct(t))
        for (const auto& [q, d] : coproduct(p.second)) out.add(TreeTriple{p.first, q.first, q.second}, c * d);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// products

inline CheckReport verify_tree_counts(const VerifyConfig& cfg) {
    static const std::int64_t kCatalan[] = {1, 2, 5, 14, 42, 132, 429, 1430};
    CheckReport rep{"tree_counts", {}, true};
    Json sizes = Json::array();
    for (std::size_t n = 1; n <= cfg.tree_count_max; ++n) {
        const auto size = enumerate_trees(n, 1).size();
        sizes.push_back(size);
        if (BigInt(size) != catalan(n)) rep.pass = false;
        if (n <= 8 && static_cast<std::int64_t>(size) != kCatalan[n - 1]) rep.pass = false;
    }
    rep.with("max_n", cfg.tree_count_max).with("sizes", sizes);
    return rep;
}

inline CheckReport verify_laws(const VerifyConfig& cfg) {
    CheckReport rep{"product_laws", {}, true};
    auto strict1 = detail::laws_exhaustive(cfg.laws_one_label, 1, UnitMode::strict);
    auto strict2 = detail::laws_exhaustive(cfg.laws_two_labels, 2, UnitMode::strict);
    auto unital1 = detail::laws_exhaustive(cfg.laws_one_label, 1, UnitMode::unital);
    auto unital2 = detail::laws_exhaustive(cfg.laws_two_labels, 2, UnitMode::unital);
    rep.with("one_label_total", cfg.laws_one_label)
        .with("two_label_total", cfg.laws_two_labels)
        .with("strict_triples", strict1.triples + strict2.triples)
        .with("unital_triples", unital1.triples + unital2.triples);
    for (const auto* t : {&strict1, &strict2, &unital1, &unital2})
        if (t->failure) {
            rep.pass = false;
            rep.with("failure", *t->failure);
            break;
        }
    return rep;
}

// ---------------------------------------------------------------------------
// basis

inline CheckReport verify_basis_counts(const VerifyConfig& cfg) {
    static const std::int64_t kBeta[] = {1, 4, 30, 336, 5040, 95040};
    CheckReport rep{"basis_counts", {}, true};
    Json multi = Json::array();
    for (std::size_t n = 1; n <= cfg.basis_max; ++n) {
        std::vector<Label> labels;
        for (std::uint32_t i = 0; i < n; ++i) labels.push_back(Label{i});
        const auto size = gen_multilinear_basis(labels).size();
        multi.push_back(size);
        const BigInt expected = factorial(static_cast<unsigned>(2 * n)) / factorial(static_cast<unsigned>(n + 1));
        if (BigInt(size) != expected) rep.pass = false;
        if (n <= 6 && static_cast<std::int64_t>(size) != kBeta[n - 1]) rep.pass = false;
    }
    Json words = Json::array();
    for (std::size_t s = 1; s <= 2; ++s)
        for (std::size_t n = 1; n <= cfg.basis_max; ++n) {
            const auto size = gen_word_monomials(n, s).size();
            words.push_back(size);
            BigInt expected = catalan(n);
            for (std::size_t i = 0; i < n; ++i) expected *= s;
            if (BigInt(size) != expected) rep.pass = false;
        }
    rep.with("max_n", cfg.basis_max).with("multilinear", multi).with("words_1_then_2_labels", words);
    return rep;
}

inline CheckReport verify_rewriting(const VerifyConfig& cfg) {
    const Alphabet alphabet = Alphabet::numbered(2);
    const GeneratorAssignment g(alphabet);
    CheckReport rep{"rewriting_soundness", {}, true};
    std::size_t exhaustive = 0, random = 0, steps = 0;
    auto check = [&](const Expr& e) -> bool {
        RewriteStats stats;
        NFLinComb nf;
        try {
            nf = normal_form(ExprLinComb(e), &stats);
        } catch (const TerminationViolation&) {
            rep.with("failure", "termination measure violated at " + render_expr(e, alphabet));
            return false;
        }
        steps += stats.steps;
        if (eval_expr(nf, g) != eval_expr(e, g)) {
            rep.with("failure", "evaluation differs after normalization of " + render_expr(e, alphabet));
            return false;
        }
        if (normal_form(to_expr_lincomb(nf)) != nf) {
            rep.with("failure", "normal_form not idempotent on " + render_expr(e, alphabet));
            return false;
        }
        return true;
    };
    for (std::size_t d = 1; d <= cfg.rewrite_exhaustive && rep.pass; ++d)
        for (const auto& e : detail::all_expressions(d, 2)) {
            ++exhaustive;
            if (!check(e)) {
                rep.pass = false;
                break;
            }
        }
    std::mt19937 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> deg(1, cfg.rewrite_random_max);
    for (std::size_t i = 0; i < cfg.rewrite_samples && rep.pass; ++i) {
        ++random;
        if (!check(detail::random_expression(rng, deg(rng), 2))) rep.pass = false;
    }
    rep.with("exhaustive_degree", cfg.rewrite_exhaustive)
        .with("exhaustive", exhaustive)
        .with("random_degree", cfg.rewrite_random_max)
        .with("random", random)
        .with("rewrite_steps", steps);
    return rep;
}

// ---------------------------------------------------------------------------
// iso

inline std::vector<CheckReport> verify_multilinear_rank(const VerifyConfig& cfg) {
    // (expressions, rank) pairs for n = 2, 3, 4
    static const std::size_t kExpected[][2] = {{4, 4}, {48, 30}, {960, 336}};
    std::vector<CheckReport> out;
    for (std::size_t n = 2; n <= cfg.rank_max; ++n) {
        auto rep = multilinear_rank_check(n);
        if (n <= 4) {
            const auto& f = rep.fields;
            const auto exprs = f[1].second.get<std::size_t>();
            const auto rank = f[2].second.get<std::size_t>();
            if (exprs != kExpected[n - 2][0] || rank != kExpected[n - 2][1]) rep.pass = false;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

inline CheckReport verify_roundtrip(const VerifyConfig& cfg) {
    const Alphabet alphabet = Alphabet::numbered(2);
    const GeneratorAssignment g(alphabet);
    TreeBasisSolver solver(alphabet);
    CheckReport rep{"iso_roundtrip", {}, true};
    std::size_t checked = 0;
    Json per_degree = Json::array();
    try {
        for (std::size_t d = 1; d <= cfg.roundtrip_max && rep.pass; ++d) {
            const auto trees = enumerate_trees(d, 2);
            per_degree.push_back(trees.size());
            for (const auto& t : trees) {
                ++checked;
                if (eval_expr(solver.tree_to_basis(t), g) != TreeLinComb(t)) {
                    rep.pass = false;
                    rep.with("failure", render_tree(t, alphabet));
                    break;
                }
            }
        }
    } catch (const SolveFailure& e) {
        rep.pass = false;
        rep.with("failure", std::string("SolveFailure: ") + e.what());
    }
    rep.with("max_degree", cfg.roundtrip_max).with("trees_per_degree", per_degree).with("checked", checked);
    return rep;
}

inline std::vector<CheckReport> verify_gl(const VerifyConfig& cfg) {
    std::vector<CheckReport> out;
    for (std::size_t labels = 1; labels <= 2; ++labels)
        for (auto& r : gl_generation_check(cfg.gl_max, labels)) {
            // generators in degree d number c_{d-1} |S|^d
            const auto d = r.fields[0].second.get<std::size_t>();
            BigInt expected = catalan(d - 1);
            for (std::size_t i = 0; i < d; ++i) expected *= labels;
            if (BigInt(r.fields[2].second.get<std::size_t>()) != expected) r.pass = false;
            out.push_back(std::move(r));
        }
    out.push_back(check_gl_series(cfg.gl_series_order));
    return out;
}

// ---------------------------------------------------------------------------
// series

/// Each identity at its order, plus a one-coefficient perturbation that must break it.
inline std::vector<CheckReport> verify_series(const VerifyConfig& cfg) {
    std::vector<CheckReport> out;
    auto mutation = [](std::string name, bool detected) {
        return CheckReport{std::move(name), {{"mutation_detected", detected}}, detected};
    };

    out.push_back(check_narayana_eq(cfg.integer_order));
    {
        auto s = narayana_series(cfg.integer_order);
        s[3].add_term(1, 1);  // N_{3,1}: 3 -> 4
        out.push_back(mutation("narayana_eq_mutation", !check_narayana_series(s).pass));
    }

    out.push_back(check_funcas(cfg.series_order));
    {
        auto f = build_F_char(cfg.series_order);
        f[4].add_term(2, 1);
        out.push_back(mutation("funcas_mutation", !check_funcas_series(f).pass));
    }

    out.push_back(check_koszul_gf(cfg.integer_order));
    {
        auto f = f_as2(cfg.integer_order);
        f[3] += QPoly(1);
        out.push_back(mutation("koszul_gf_mutation", !check_koszul_series(f, f_as2_dual(cfg.integer_order)).pass));
    }
    {
        // self-dual associative operad: f = x/(1-x)
        const auto fa = f_as(cfg.integer_order);
        auto rep = check_koszul_series(fa, fa);
        rep.check = "koszul_gf_as_selfdual";
        out.push_back(std::move(rep));
    }

    for (auto& r : check_beta_eqs(cfg.series_order)) out.push_back(std::move(r));
    {
        auto s = beta_series(cfg.series_order);
        // one basis element of [3] dropped: beta_3 = 29
        s.beta[3] = QPoly(Rational(29, 6));
        bool detected = false;
        for (const auto& r : check_beta_series(s, f_as2(cfg.series_order))) detected = detected || !r.pass;
        out.push_back(mutation("beta_mutation", detected));
    }
    {
        // enumerated basis agrees with the counting recursion where enumeration is feasible
        CheckReport rep{"beta_enumeration_agrees", {}, true};
        const std::size_t upto = std::min<std::size_t>(cfg.series_order, 6);
        for (std::size_t n = 1; n <= upto; ++n)
            if (count_basis_by_tag(n) != count_basis_by_tag_enumerated(n)) rep.pass = false;
        rep.with("max_n", upto);
        out.push_back(std::move(rep));
    }

    out.push_back(check_character_duality(cfg.series_order));
    {
        auto f = build_F_char(cfg.series_order);
        f[2].add_term(-1, 1);
        out.push_back(mutation("character_duality_mutation",
                               !check_duality_series(f, build_dual_char(cfg.series_order)).pass));
    }
    {
        // q = 1 specialization reproduces the dimension identity
        auto spec_f = build_F_char(cfg.series_order).at_q_one();
        auto spec_d = build_dual_char(cfg.series_order).at_q_one();
        CheckReport rep{"duality_q1_specialization", {}, true};
        QSeries f(SeriesKind::exponential, cfg.series_order), d(SeriesKind::exponential, cfg.series_order);
        for (std::size_t n = 0; n <= cfg.series_order; ++n) {
            f[n] = spec_f[n];
            d[n] = spec_d[n];
        }
        rep.pass = f == f_as2(cfg.series_order) && d == f_as2_dual(cfg.series_order) &&
                   check_koszul_series(f, d).pass;
        out.push_back(std::move(rep));
    }
    return out;
}

inline std::vector<CheckReport> verify_sl2(const VerifyConfig& cfg) {
    auto out = check_sl2_corollary(cfg.sl2_max);
    CheckReport n4{"sl2_n4", {}, false};
    const auto dec = sl2_decompose(build_F_char(4)[4]);
    n4.pass = dec == SL2Decomposition{{3, 1}, {1, 5}};
    n4.with("decomposition", render_decomposition(dec));
    out.push_back(std::move(n4));
    return out;
}

// ---------------------------------------------------------------------------
// hopf

inline CheckReport verify_coassociativity(const VerifyConfig& cfg) {
    CheckReport rep{"coproduct_coassociative_counital", {}, true};
    const Alphabet alphabet = Alphabet::numbered(2);
    std::size_t checked = 0;
    for (const auto& t : detail::trees_up_to(cfg.coassoc_max, 2, 0)) {
        ++checked;
        const auto delta = coproduct(t);
        TreeLinComb left_counit, right_counit;
        for (const auto& [p, c] : delta) {
            if (p.first.degree() == 0) left_counit.add(p.second, c);
            if (p.second.degree() == 0) right_counit.add(p.first, c);
        }
        if (detail::coassoc_left(t) != detail::coassoc_right(t) || left_counit != TreeLinComb(t) ||
            right_counit != TreeLinComb(t)) {
            rep.pass = false;
            rep.with("failure", render_tree(t, alphabet));
            break;
        }
    }
    rep.with("max_degree", cfg.coassoc_max).with("trees", checked);
    return rep;
}

inline CheckReport verify_coproduct_homomorphism(const VerifyConfig& cfg) {
    CheckReport rep{"coproduct_homomorphism", {}, true};
    const Alphabet alphabet = Alphabet::numbered(2);
    const auto trees = detail::trees_up_to(cfg.hom_total, 2, 0);
    std::size_t pairs = 0;
    for (const auto& a : trees)
        for (const auto& b : trees) {
            if (a.degree() + b.degree() > cfg.hom_total) continue;
            ++pairs;
            for (auto op : {Product::first, Product::second}) {
                const auto lhs = coproduct(star(op, a, b, UnitMode::unital));
                const auto rhs = slotwise_product(op, coproduct(a), coproduct(b), UnitMode::unital);
                if (lhs != rhs && rep.pass) {
                    rep.pass = false;
                    rep.with("failure", std::string(op == Product::first ? "*1" : "*2") + " at " +
                                            render_tree(a, alphabet) + ", " + render_tree(b, alphabet));
                }
            }
        }
    rep.with("max_total_degree", cfg.hom_total).with("pairs", pairs);
    return rep;
}

/// Degree-1 pair tensors (s) (x) (t) over the first `labels` labels.
inline std::vector<TreePairLinComb> degree_one_pair_tensors(std::size_t labels) {
    std::vector<TreePairLinComb> out;
    for (std::uint32_t s = 0; s < labels; ++s)
        for (std::uint32_t t = 0; t < labels; ++t)
            out.emplace_back(TreePair{single_vertex_tree(Label{s}), single_vertex_tree(Label{t})});
    return out;
}

struct PencilWitness {
    TreePairLinComb x, y, z;
    TreePairLinComb lhs, rhs;
};

/// First triple on which *_{1,0} and *_{0,1} violate the four-term relation.
inline std::optional<PencilWitness> find_pencil_witness(const std::vector<TreePairLinComb>& candidates) {
    auto A = [](const TreePairLinComb& u, const TreePairLinComb& v) { return pencil_tensor_product(1, 0, u, v); };
    auto B = [](const TreePairLinComb& u, const TreePairLinComb& v) { return pencil_tensor_product(0, 1, u, v); };
    for (const auto& x : candidates)
        for (const auto& y : candidates)
            for (const auto& z : candidates) {
                auto lhs = B(A(x, y), z) + A(B(x, y), z);
                auto rhs = A(x, B(y, z)) + B(x, A(y, z));
                if (lhs != rhs) return PencilWitness{x, y, z, lhs, rhs};
            }
    return std::nullopt;
}

inline std::vector<CheckReport> verify_pencil(const VerifyConfig&) {
    std::vector<CheckReport> out;
    const Alphabet alphabet = Alphabet::numbered(2);
    const auto tensors = degree_one_pair_tensors(2);
    const std::pair<int, int> params[] = {{1, 0}, {0, 1}, {1, 1}, {2, 3}};
    for (auto [l, m] : params) {
        CheckReport rep{"pencil_associative", {}, true};
        std::size_t triples = 0;
        for (const auto& x : tensors)
            for (const auto& y : tensors)
                for (const auto& z : tensors) {
                    ++triples;
                    auto xy = pencil_tensor_product(l, m, x, y);
                    auto yz = pencil_tensor_product(l, m, y, z);
                    if (pencil_tensor_product(l, m, xy, z) != pencil_tensor_product(l, m, x, yz)) rep.pass = false;
                }
        rep.with("lambda", l).with("mu", m).with("triples", triples);
        out.push_back(std::move(rep));
    }
    CheckReport wit{"pencil_not_compatible", {}, false};
    if (auto w = find_pencil_witness(tensors)) {
        wit.pass = true;
        wit.with("x", render(w->x, alphabet))
            .with("y", render(w->y, alphabet))
            .with("z", render(w->z, alphabet))
            .with("difference", render(w->lhs - w->rhs, alphabet));
    }
    out.push_back(std::move(wit));
    return out;
}

// ---------------------------------------------------------------------------
// Suites

enum class Suite { products, basis, iso, series, hopf, all };

/// One acceptance criterion: an id, a title, and the reports it aggregates.
struct Criterion {
    int id;
    std::string title;
    Suite suite;
    std::function<std::vector<CheckReport>(const VerifyConfig&)> run;
};

inline std::vector<Criterion> acceptance_criteria() {
    auto one = [](CheckReport (*f)(const VerifyConfig&)) {
        return [f](const VerifyConfig& c) { return std::vector<CheckReport>{f(c)}; };
    };
    return {
        {1, "tree counts are Catalan numbers", Suite::products, one(verify_tree_counts)},
        {2, "associativity and four-term relation", Suite::products, one(verify_laws)},
        {3, "monomial basis and word counts", Suite::basis, one(verify_basis_counts)},
        {4, "rewriting soundness", Suite::basis, one(verify_rewriting)},
        {5, "multilinear rank", Suite::iso, verify_multilinear_rank},
        {6, "isomorphism roundtrip", Suite::iso, one(verify_roundtrip)},
        {7, "series identities", Suite::series, verify_series},
        {8, "SL2 decomposition", Suite::series, verify_sl2},
        {9, "coproduct checks", Suite::hopf,
         [](const VerifyConfig& c) {
             return std::vector<CheckReport>{verify_coassociativity(c), verify_coproduct_homomorphism(c)};
         }},
        {10, "Grossman-Larson generation", Suite::iso, verify_gl},
        {11, "pencil products on the tensor square", Suite::hopf, verify_pencil},
    };
}

/// Time budget per criterion, in seconds.
inline double criterion_budget_seconds(int id) {
    switch (id) {
        case 1: return 5;
        case 2: return 60;
        case 3: return 30;
        case 4: return 60;
        case 5: return 90;
        case 6: return 60;
        case 7: return 10;
        case 8: return 5;
        case 9: return 60;
        case 10: return 30;
        case 11: return 30;
        default: return 0;
    }
}

inline std::optional<Suite> parse_suite(const std::string& s) {
    if (s == "products") return Suite::products;
    if (s == "basis") return Suite::basis;
    if (s == "iso") return Suite::iso;
    if (s == "series") return Suite::series;
    if (s == "hopf") return Suite::hopf;
    if (s == "all") return Suite::all;
    return std::nullopt;
}

struct CriterionResult {
    int id;
    std::string title;
    std::vector<CheckReport> reports;
    double seconds;
    double budget;
    bool pass;
};

inline std::vector<CriterionResult> run_suite(Suite suite, const VerifyConfig& cfg, bool enforce_budget) {
    std::vector<CriterionResult> out;
    for (const auto& c : acceptance_criteria()) {
        if (suite != Suite::all && c.suite != suite) continue;
        const auto start = std::chrono::steady_clock::now();
        auto reports = c.run(cfg);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const double budget = criterion_budget_seconds(c.id);
        bool pass = all_pass(reports) && (!enforce_budget || secs < budget);
        out.push_back({c.id, c.title, std::move(reports), secs, budget, pass});
    }
    return out;
}

}  // namespace as2
