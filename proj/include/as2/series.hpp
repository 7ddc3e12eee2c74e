#pragma once

/**
 * @file series.hpp
 * @brief Laurent polynomials in q and truncated power series with QPoly
 *        coefficients.
 */

#include "as2/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace as2 {

/// Finitely supported map exponent -> coefficient; negative exponents allowed.
class QPoly {
public:
    QPoly() = default;
    QPoly(Rational c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
    QPoly(std::int64_t c) : QPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static QPoly monomial(int exponent, const Rational& c = 1) {
        QPoly p;
        p.add_term(exponent, c);
        return p;
    }

    void add_term(int exponent, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    [[nodiscard]] Rational coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<int, Rational>& terms() const { return terms_; }
    [[nodiscard]] int max_exponent() const { return terms_.rbegin()->first; }
    [[nodiscard]] int min_exponent() const { return terms_.begin()->first; }

    /// Value at q = 1.
    [[nodiscard]] Rational at_one() const {
        Rational s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    [[nodiscard]] bool is_symmetric() const {
        for (const auto& [e, c] : terms_)
            if (coeff(-e) != c) return false;
        return true;
    }

    QPoly& operator+=(const QPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator-(const QPoly& a) { return QPoly() - a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }

    /// Descending exponents, e.g. `q^3 + 6 q + 6 q^-1 + q^-3`; `0` when empty.
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mag = c.abs().str();
            if (first) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            first = false;
            if (e == 0) {
                out += mag;
                continue;
            }
            if (mag != "1") out += mag + " ";
            out += "q";
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    std::map<int, Rational> terms_;
};

/// Ordinary and exponential series must not be mixed; characters are their own kind.
enum class SeriesKind { ordinary, exponential, character };

/// sum_{n=0}^{order} coeff[n] x^n  (mod x^{order+1})
class QSeries {
public:
    QSeries(SeriesKind kind, std::size_t order) : kind_(kind), coeffs_(order + 1) {}

    static QSeries variable(SeriesKind kind, std::size_t order) {
        QSeries s(kind, order);
        if (order >= 1) s.coeffs_[1] = QPoly(1);
        return s;
    }

    static QSeries constant(SeriesKind kind, std::size_t order, const QPoly& c) {
        QSeries s(kind, order);
        s.coeffs_[0] = c;
        return s;
    }

    [[nodiscard]] SeriesKind kind() const { return kind_; }
    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const QPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
    QPoly& operator[](std::size_t n) { return coeffs_.at(n); }

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Smallest n with a nonzero coefficient, or order()+1 for the zero series.
    [[nodiscard]] std::size_t valuation() const {
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            if (!coeffs_[n].is_zero()) return n;
        return coeffs_.size();
    }

    QSeries& operator+=(const QSeries& o) {
        check_compatible(o);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
        return *this;
    }
    QSeries& operator-=(const QSeries& o) {
        check_compatible(o);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
        return *this;
    }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        a.check_compatible(b);
        QSeries out(a.kind_, a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j)
                if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    friend QSeries operator*(const QPoly& c, QSeries s) {
        for (auto& x : s.coeffs_) x = c * x;
        return s;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.kind_ == b.kind_ && a.coeffs_ == b.coeffs_;
    }

    /// s(-x): the coefficient of x^n picks up (-1)^n.
    [[nodiscard]] QSeries negate_variable() const {
        QSeries out = *this;
        for (std::size_t n = 1; n < coeffs_.size(); n += 2) out.coeffs_[n] = -out.coeffs_[n];
        return out;
    }

    /// 1 / s; requires a nonzero constant coefficient that is a constant QPoly.
    [[nodiscard]] QSeries inverse() const {
        const QPoly& c0 = coeffs_[0];
        if (c0.is_zero() || c0.terms().size() != 1 || c0.terms().begin()->first != 0)
            throw std::domain_error("QSeries::inverse: constant term must be a nonzero scalar");
        const Rational inv0 = Rational(1) / c0.coeff(0);
        QSeries out(kind_, order());
        out.coeffs_[0] = QPoly(inv0);
        for (std::size_t n = 1; n <= order(); ++n) {
            QPoly acc;
            for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
            out.coeffs_[n] = QPoly(-inv0) * acc;
        }
        return out;
    }

    /**
     * outer(inner): substitutes `inner` for the variable of `outer`, leaving q
     * in the outer coefficients untouched. `inner` must have zero constant term.
     */
    [[nodiscard]] QSeries compose(const QSeries& inner) const {
        check_compatible(inner);
        if (!inner.coeffs_[0].is_zero())
            throw std::domain_error("QSeries::compose: inner series must have zero constant term");
        QSeries out(kind_, order());
        // Horner: ((c_N * y + c_{N-1}) * y + ...) * y + c_0
        for (std::size_t n = order() + 1; n-- > 0;) {
            out = out * inner;
            out.coeffs_[0] += coeffs_[n];
        }
        return out;
    }

    /// Each coefficient evaluated at q = 1.
    [[nodiscard]] QSeries at_q_one() const {
        QSeries out(kind_, order());
        for (std::size_t n = 0; n <= order(); ++n) out.coeffs_[n] = QPoly(coeffs_[n].at_one());
        return out;
    }

    /// One line per nonzero coefficient: `<var>^n : <coeff>`.
    [[nodiscard]] std::string table(const std::string& var) const {
        std::string out;
        for (std::size_t n = 0; n <= order(); ++n) {
            if (coeffs_[n].is_zero()) continue;
            out += var + "^" + std::to_string(n) + " : " + coeffs_[n].str() + "\n";
        }
        return out;
    }

private:
    void check_compatible(const QSeries& o) const {
        if (kind_ != o.kind_) throw std::invalid_argument("QSeries: mixing series kinds");
        if (order() != o.order()) throw std::invalid_argument("QSeries: truncation orders differ");
    }

    SeriesKind kind_;
    std::vector<QPoly> coeffs_;
};

}  // namespace as2
