#pragma once

/**
 * @file linalg.hpp
 * @brief Exact rank and row-combination solving for sparse matrices of LinCombs.
 *
 * Rows are LinCombs over a shared column-key domain. Elimination is
 * fraction-free: a row r is reduced against an echelon row b with leading
 * coefficient p by r <- p*r - r[lead]*b, and every stored row is kept
 * primitive (integer entries, content 1, positive leading entry). Pivots are
 * the leading (smallest) keys, so the outcome is a function of the row order
 * alone.
 */

#include "as2/lincomb.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace as2 {

template <class Key>
struct SparseMatrix {
    std::vector<LinComb<Key>> rows;

    [[nodiscard]] std::size_t num_rows() const { return rows.size(); }

    [[nodiscard]] std::set<Key> column_keys() const {
        std::set<Key> cols;
        for (const auto& r : rows)
            for (const auto& [k, c] : r) cols.insert(k);
        return cols;
    }
};

namespace detail {

/// Scale factor that makes `v` primitive with a positive leading entry.
template <class Key>
Rational primitive_scale(const LinComb<Key>& v) {
    BigInt den_lcm = 1;
    BigInt num_gcd = 0;
    for (const auto& [k, c] : v) {
        den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
        num_gcd = boost::multiprecision::gcd(num_gcd, c.numerator());
    }
    Rational s(den_lcm, num_gcd);
    if (v.leading().second.sign() < 0) s = -s;
    return s;
}

}  // namespace detail

/**
 * Incremental row echelon form. Each stored row remembers which combination
 * of inserted rows produced it, so membership queries can also return
 * coordinates.
 */
template <class Key>
class Echelon {
public:
    struct Row {
        LinComb<Key> vec;
        LinComb<std::size_t> origin;
    };

    /// Inserts row number `index`; returns true if it increased the rank.
    bool insert(const LinComb<Key>& row, std::size_t index) {
        Row r{row, LinComb<std::size_t>(index)};
        reduce_leading(r);
        if (r.vec.empty()) return false;
        auto s = detail::primitive_scale(r.vec);
        r.vec *= s;
        r.origin *= s;
        Key lead = r.vec.leading().first;
        pivots_.emplace(std::move(lead), std::move(r));
        return true;
    }

    [[nodiscard]] std::size_t rank() const { return pivots_.size(); }

    /// Coordinates x over inserted rows with sum x_i row_i = target, if any.
    [[nodiscard]] std::optional<LinComb<std::size_t>> express(const LinComb<Key>& target) const {
        LinComb<Key> rest = target;
        LinComb<std::size_t> coords;
        while (!rest.empty()) {
            auto [key, c] = rest.leading();
            auto it = pivots_.find(key);
            if (it == pivots_.end()) return std::nullopt;
            Rational factor = c / it->second.vec.leading().second;
            coords.add(it->second.origin, factor);
            rest.add(it->second.vec, -factor);
        }
        return coords;
    }

private:
    void reduce_leading(Row& r) const {
        while (!r.vec.empty()) {
            auto it = pivots_.find(r.vec.leading().first);
            if (it == pivots_.end()) return;
            const Row& b = it->second;
            Rational p = b.vec.leading().second;
            Rational c = r.vec.leading().second;
            r.vec *= p;
            r.vec.add(b.vec, -c);
            r.origin *= p;
            r.origin.add(b.origin, -c);
            if (r.vec.empty()) return;
            auto s = detail::primitive_scale(r.vec);
            r.vec *= s;
            r.origin *= s;
        }
    }

    std::map<Key, Row> pivots_;
};

/// Exact rank over Q.
template <class Key>
std::size_t rank(const SparseMatrix<Key>& m) {
    const std::size_t columns = m.column_keys().size();
    Echelon<Key> ech;
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        ech.insert(m.rows[i], i);
        if (ech.rank() == columns) break;
    }
    return ech.rank();
}

/**
 * Finds x (keyed by row index) with sum_i x_i * rows[i] = rhs, i.e. m^T x = rhs.
 * Returns std::nullopt when rhs is outside the row span. When rows are
 * dependent, later dependent rows get coefficient 0.
 */
template <class Key>
std::optional<LinComb<std::size_t>> solve(const SparseMatrix<Key>& m, const LinComb<Key>& rhs) {
    Echelon<Key> ech;
    for (std::size_t i = 0; i < m.rows.size(); ++i) ech.insert(m.rows[i], i);
    return ech.express(rhs);
}

}  // namespace as2
