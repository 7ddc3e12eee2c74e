#pragma once

/**
 * @file lincomb.hpp
 * @brief Finitely supported exact linear combinations over an ordered key domain.
 *
 * Keys are kept in a std::map, so iteration order is the key type's
 * operator<, which every key type in this library defines as its canonical
 * text order. Zero coefficients are never stored.
 */

#include "as2/error.hpp"
#include "as2/rational.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace as2 {

template <class Key>
class LinComb {
public:
    using key_type = Key;
    using container = std::map<Key, Rational>;
    using const_iterator = typename container::const_iterator;

    LinComb() = default;
    explicit LinComb(Key key, Rational coeff = 1) { add(std::move(key), coeff); }

    /// Adds `coeff * key`, dropping the term if it cancels.
    void add(Key key, const Rational& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
        if (inserted) return;
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }

    void add(const LinComb& other, const Rational& scale = 1) {
        if (scale.is_zero()) return;
        for (const auto& [k, c] : other.terms_) add(k, c * scale);
    }

    [[nodiscard]] Rational coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] bool contains(const Key& key) const { return terms_.count(key) != 0; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const_iterator begin() const { return terms_.begin(); }
    [[nodiscard]] const_iterator end() const { return terms_.end(); }
    [[nodiscard]] const std::pair<const Key, Rational>& leading() const { return *terms_.begin(); }

    void erase(const Key& key) { terms_.erase(key); }

    LinComb& operator+=(const LinComb& o) { add(o, 1); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, -1); return *this; }
    LinComb& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= s;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    /// Applies `fn` to every key and re-accumulates (images may collide).
    template <class F>
    [[nodiscard]] auto map_keys(F&& fn) const {
        using Out = std::decay_t<decltype(fn(std::declval<const Key&>()))>;
        LinComb<Out> out;
        for (const auto& [k, c] : terms_) out.add(fn(k), c);
        return out;
    }

private:
    container terms_;
};

/// ca*a + cb*b.
template <class Key>
LinComb<Key> lincomb_combine(const LinComb<Key>& a, const LinComb<Key>& b, const Rational& ca,
                             const Rational& cb) {
    LinComb<Key> out;
    out.add(a, ca);
    out.add(b, cb);
    return out;
}

/// `c1 KEY1 + c2 KEY2 - c3 KEY3`; `0` when empty.
template <class Key, class Render>
std::string to_text(const LinComb<Key>& lc, Render&& render_key) {
    if (lc.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : lc) {
        if (first) {
            out += c.str();
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            out += c.abs().str();
        }
        out += ' ';
        out += render_key(key);
        first = false;
    }
    return out;
}

/**
 * Parses the text form produced by to_text. `parse_key(text, pos)` must consume
 * one key starting at `pos` and advance `pos` past it. A bare key with no
 * coefficient means coefficient 1.
 */
template <class Key, class ParseKey>
LinComb<Key> parse_lincomb(std::string_view text, ParseKey&& parse_key) {
    LinComb<Key> out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (text.substr(pos) == "0") return out;
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) {
            if (first) throw ParseError("empty linear combination", pos);
            break;
        }
        Rational sign = 1;
        if (!first) {
            if (text[pos] != '+' && text[pos] != '-') throw ParseError("expected '+' or '-'", pos);
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        }
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        Rational coeff = 1;
        if (pos > start) {
            auto token = text.substr(start, pos - start);
            if (token == "-" || token == "+") {
                coeff = token == "-" ? -1 : 1;
            } else {
                try {
                    coeff = Rational::parse(token);
                } catch (const std::exception&) {
                    throw ParseError("bad coefficient", start);
                }
            }
            skip_ws();
        }
        out.add(parse_key(text, pos), sign * coeff);
        first = false;
    }
    return out;
}

}  // namespace as2
