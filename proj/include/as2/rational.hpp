#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * Thin value wrapper over boost::multiprecision::cpp_rational. The backend
 * keeps every value reduced with a positive denominator; this header adds the
 * canonical `p/q` text form and integer helpers used by the elimination code.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace as2 {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    using Backend = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}
    explicit Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = den < 0 ? Backend(BigInt(-num), BigInt(-den)) : Backend(num, den);
    }

    [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
    [[nodiscard]] bool is_integer() const { return denominator() == 1; }
    [[nodiscard]] int sign() const { return value_.sign(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// `p` for integers, `p/q` otherwise.
    [[nodiscard]] std::string str() const {
        auto num = numerator().str();
        if (is_integer()) return num;
        return num + "/" + denominator().str();
    }

    /// Parses `p`, `-p`, `p/q`. Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text) {
        auto digits = [](std::string_view s, bool allow_sign) {
            if (s.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        auto slash = text.find('/');
        auto num_text = text.substr(0, slash);
        if (!digits(num_text, true)) throw std::invalid_argument("bad rational: " + std::string(text));
        if (num_text[0] == '+') num_text.remove_prefix(1);
        BigInt num{std::string(num_text)};
        if (slash == std::string_view::npos) return Rational(num);
        auto den_text = text.substr(slash + 1);
        if (!digits(den_text, false)) throw std::invalid_argument("bad rational: " + std::string(text));
        return Rational(num, BigInt(std::string(den_text)));
    }

private:
    Backend value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace as2
