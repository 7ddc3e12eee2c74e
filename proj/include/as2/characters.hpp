#pragma once

/**
 * @file characters.hpp
 * @brief Catalan/Narayana numbers, the SL2 characters of the components, and
 *        the generating-function identities they satisfy.
 *
 * Every checker comes in two layers: a `*_residual` / `check_*_series`
 * function that takes the series to test (so a perturbed series can be fed
 * in), and a `check_*(order)` entry point that builds the series from the
 * closed formulas or the basis counts.
 */

#include "as2/free_as2.hpp"
#include "as2/report.hpp"
#include "as2/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace as2 {

inline BigInt catalan(std::size_t n) {
    return binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(n)) / (n + 1);
}

inline BigInt narayana(std::size_t n, std::size_t k) {
    if (n < 1 || k >= n) throw std::out_of_range("narayana: need n >= 1 and 0 <= k <= n-1");
    return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
           binomial(static_cast<unsigned>(n), static_cast<unsigned>(k + 1)) / n;
}

namespace detail {

inline CheckReport residual_report(std::string name, std::size_t order, const QSeries& residual) {
    CheckReport rep{std::move(name), {}, residual.is_zero()};
    rep.with("order", order);
    const std::size_t v = residual.valuation();
    if (v <= residual.order()) rep.with("first_nonzero", v).with("residual", residual[v].str());
    else rep.with("residual", "0");
    return rep;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Narayana generating function: t x N^2 - t x N + t N - N + 1 = 0

/// N(t, x) = 1 + sum_{n>=1} sum_k N_{n,k} t^n x^k, with x stored as the q-exponent.
inline QSeries narayana_series(std::size_t order) {
    QSeries s = QSeries::constant(SeriesKind::ordinary, order, QPoly(1));
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t k = 0; k < n; ++k) s[n].add_term(static_cast<int>(k), Rational(narayana(n, k)));
    return s;
}

inline QSeries narayana_residual(const QSeries& series) {
    const std::size_t order = series.order();
    const QSeries t = QSeries::variable(SeriesKind::ordinary, order);
    const QPoly x = QPoly::monomial(1);
    const QSeries one = QSeries::constant(SeriesKind::ordinary, order, QPoly(1));
    const QSeries tN = t * series;
    return x * (tN * series) - x * tN + tN - series + one;
}

inline CheckReport check_narayana_series(const QSeries& series) {
    return detail::residual_report("narayana_eq", series.order(), narayana_residual(series));
}

inline CheckReport check_narayana_eq(std::size_t order) {
    if (order < 1) throw std::invalid_argument("check_narayana_eq: order must be >= 1");
    return check_narayana_series(narayana_series(order));
}

// ---------------------------------------------------------------------------
// SL2 character of the components: F = sum_n p1^n sum_k N_{n,k} q^{n-1-2k}

inline QSeries build_F_char(std::size_t order) {
    QSeries f(SeriesKind::character, order);
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t k = 0; k < n; ++k)
            f[n].add_term(static_cast<int>(n) - 1 - 2 * static_cast<int>(k), Rational(narayana(n, k)));
    return f;
}

/// Character of the dual: p1 / ((1 - q p1)(1 - q^-1 p1)) = sum_n [n]_q p1^n.
inline QSeries build_dual_char(std::size_t order) {
    QSeries f(SeriesKind::character, order);
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t k = 0; k < n; ++k) f[n].add_term(static_cast<int>(n) - 1 - 2 * static_cast<int>(k), 1);
    return f;
}

/// F - p1 (1 + q F)(1 + q^-1 F)
inline QSeries funcas_residual(const QSeries& f) {
    const std::size_t order = f.order();
    const QSeries p1 = QSeries::variable(SeriesKind::character, order);
    const QSeries one = QSeries::constant(SeriesKind::character, order, QPoly(1));
    const QSeries a = one + QPoly::monomial(1) * f;
    const QSeries b = one + QPoly::monomial(-1) * f;
    return f - p1 * (a * b);
}

inline CheckReport check_funcas_series(const QSeries& f) {
    return detail::residual_report("funcas", f.order(), funcas_residual(f));
}

inline CheckReport check_funcas(std::size_t order) {
    if (order < 2) throw std::invalid_argument("check_funcas: order must be >= 2");
    return check_funcas_series(build_F_char(order));
}

// ---------------------------------------------------------------------------
// Koszul duality of dimension series: f(-f_dual(-x)) = x

/// f(x) = sum_n c_n x^n (exponential generating function of n! c_n).
inline QSeries f_as2(std::size_t order) {
    QSeries f(SeriesKind::exponential, order);
    for (std::size_t n = 1; n <= order; ++n) f[n] = QPoly(Rational(catalan(n)));
    return f;
}

/// f_dual(x) = sum_n n x^n = x / (1 - x)^2 (dimension n * n!).
inline QSeries f_as2_dual(std::size_t order) {
    QSeries f(SeriesKind::exponential, order);
    for (std::size_t n = 1; n <= order; ++n) f[n] = QPoly(static_cast<std::int64_t>(n));
    return f;
}

/// f_As(x) = x / (1 - x).
inline QSeries f_as(std::size_t order) {
    QSeries f(SeriesKind::exponential, order);
    for (std::size_t n = 1; n <= order; ++n) f[n] = QPoly(1);
    return f;
}

/// f(-g(-x)) - x
inline QSeries koszul_residual(const QSeries& f, const QSeries& g) {
    const QSeries inner = QSeries(g.kind(), g.order()) - g.negate_variable();
    return f.compose(inner) - QSeries::variable(f.kind(), f.order());
}

inline CheckReport check_koszul_series(const QSeries& f, const QSeries& f_dual) {
    return detail::residual_report("koszul_gf", f.order(), koszul_residual(f, f_dual));
}

inline CheckReport check_koszul_gf(std::size_t order) {
    if (order < 2) throw std::invalid_argument("check_koszul_gf: order must be >= 2");
    return check_koszul_series(f_as2(order), f_as2_dual(order));
}

// ---------------------------------------------------------------------------
// Basis tag series: beta1 - x = x beta, beta = beta1 / (1 - beta1), f_As2 = f_As o beta1

struct BetaSeries {
    QSeries beta;
    QSeries beta1;
};

/// Exponential series of the multilinear basis counts, total and tag 1.
inline BetaSeries beta_series(std::size_t order) {
    BetaSeries s{QSeries(SeriesKind::exponential, order), QSeries(SeriesKind::exponential, order)};
    for (std::size_t n = 1; n <= order; ++n) {
        const auto counts = count_basis_by_tag(n);
        const BigInt nf = factorial(static_cast<unsigned>(n));
        s.beta[n] = QPoly(Rational(counts.total, nf));
        s.beta1[n] = QPoly(Rational(counts.tag1, nf));
    }
    return s;
}

inline std::vector<CheckReport> check_beta_series(const BetaSeries& s, const QSeries& f_as2_series) {
    const std::size_t order = s.beta.order();
    const QSeries x = QSeries::variable(SeriesKind::exponential, order);
    const QSeries one = QSeries::constant(SeriesKind::exponential, order, QPoly(1));
    std::vector<CheckReport> out;
    out.push_back(detail::residual_report("beta_eqbeta", order, s.beta1 - x - x * s.beta));
    out.push_back(detail::residual_report("beta_as_circ_beta1", order, s.beta - s.beta1 * (one - s.beta1).inverse()));
    out.push_back(detail::residual_report("beta_lift", order, f_as(order).compose(s.beta1) - f_as2_series));
    return out;
}

inline std::vector<CheckReport> check_beta_eqs(std::size_t order) {
    if (order < 2) throw std::invalid_argument("check_beta_eqs: order must be >= 2");
    return check_beta_series(beta_series(order), f_as2(order));
}

// ---------------------------------------------------------------------------
// Character duality restricted to (p1, q): eps(F) o eps(F_dual) = p1, eps: p1 -> -p1

inline QSeries duality_residual(const QSeries& f, const QSeries& f_dual) {
    return f.negate_variable().compose(f_dual.negate_variable()) - QSeries::variable(f.kind(), f.order());
}

inline CheckReport check_duality_series(const QSeries& f, const QSeries& f_dual) {
    return detail::residual_report("character_duality", f.order(), duality_residual(f, f_dual));
}

inline CheckReport check_character_duality(std::size_t order) {
    if (order < 2) throw std::invalid_argument("check_character_duality: order must be >= 2");
    return check_duality_series(build_F_char(order), build_dual_char(order));
}

// ---------------------------------------------------------------------------
// SL2 decomposition

/// (highest weight d, multiplicity) pairs, highest weight first.
using SL2Decomposition = std::vector<std::pair<int, BigInt>>;

class NotACharacter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Character of L(d): q^d + q^{d-2} + ... + q^{-d}.
inline QPoly irreducible_character(int d) {
    QPoly p;
    for (int e = -d; e <= d; e += 2) p.add_term(e, 1);
    return p;
}

inline QPoly reconstruct_character(const SL2Decomposition& dec) {
    QPoly p;
    for (const auto& [d, m] : dec) p += QPoly(Rational(m)) * irreducible_character(d);
    return p;
}

/// m_d = coeff(q^d) - coeff(q^{d+2}) for d >= 0.
inline SL2Decomposition sl2_decompose(const QPoly& chi) {
    if (!chi.is_symmetric()) throw NotACharacter("sl2_decompose: character is not symmetric in q <-> q^-1");
    SL2Decomposition out;
    if (chi.is_zero()) return out;
    for (const auto& [e, c] : chi.terms())
        if (!c.is_integer() || c.sign() < 0)
            throw NotACharacter("sl2_decompose: coefficients must be nonnegative integers");
    for (int d = chi.max_exponent(); d >= 0; --d) {
        Rational m = chi.coeff(d) - chi.coeff(d + 2);
        if (m.sign() < 0) throw NotACharacter("sl2_decompose: negative multiplicity for L(" + std::to_string(d) + ")");
        if (!m.is_zero()) out.emplace_back(d, m.numerator());
    }
    if (reconstruct_character(out) != chi)
        throw NotACharacter("sl2_decompose: character does not reconstruct");
    return out;
}

inline std::string render_decomposition(const SL2Decomposition& dec) {
    if (dec.empty()) return "0";
    std::string out;
    for (const auto& [d, m] : dec) {
        if (!out.empty()) out += " + ";
        out += "L(" + std::to_string(d) + ")";
        if (m != 1) out += "^" + m.str();
    }
    return out;
}

/// For each n <= max_n: multiplicity of L(n-1-2k) in the p1^n coefficient is N_{n,k} - N_{n,k-1}.
inline std::vector<CheckReport> check_sl2_corollary(std::size_t max_n) {
    if (max_n < 2) throw std::invalid_argument("check_sl2_corollary: max_n must be >= 2");
    const QSeries f = build_F_char(max_n);
    std::vector<CheckReport> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        CheckReport rep{"sl2_corollary", {}, true};
        rep.with("n", n);
        SL2Decomposition dec;
        try {
            dec = sl2_decompose(f[n]);
        } catch (const NotACharacter& e) {
            rep.pass = false;
            rep.with("error", e.what());
            out.push_back(std::move(rep));
            continue;
        }
        std::map<int, BigInt> got(dec.begin(), dec.end());
        SL2Decomposition expected;
        for (std::size_t k = 0; 2 * k <= n - 1; ++k) {
            const int d = static_cast<int>(n) - 1 - 2 * static_cast<int>(k);
            const BigInt m = narayana(n, k) - (k == 0 ? BigInt(0) : narayana(n, k - 1));
            if (m < 0) rep.pass = false;
            if (m != 0) expected.emplace_back(d, m);
            auto it = got.find(d);
            const BigInt have = it == got.end() ? BigInt(0) : it->second;
            if (have != m) rep.pass = false;
        }
        if (dec.size() != expected.size()) rep.pass = false;
        rep.with("decomposition", render_decomposition(dec)).with("expected", render_decomposition(expected));
        out.push_back(std::move(rep));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Free associative generation series: g / (1 - g) = sum c_n x^n, g = x (1 + sum c_n x^n)

inline CheckReport check_gl_series(std::size_t order) {
    QSeries catalans(SeriesKind::ordinary, order);
    for (std::size_t n = 1; n <= order; ++n) catalans[n] = QPoly(Rational(catalan(n)));
    const QSeries x = QSeries::variable(SeriesKind::ordinary, order);
    const QSeries one = QSeries::constant(SeriesKind::ordinary, order, QPoly(1));
    const QSeries g = x * (one + catalans);
    return detail::residual_report("gl_series", order, g * (one - g).inverse() - catalans);
}

}  // namespace as2
