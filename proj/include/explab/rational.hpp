#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace explab {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number. Always in lowest terms, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}

    // num/den with arbitrary signs; throws on den == 0.
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = den < 0 ? Backend(-num, -den) : Backend(num, den);
    }

    // Accepts "p" or "p/q" with optional leading '-'.
    static Rational parse(std::string_view text);

    Integer num() const { return numerator(v_); }
    Integer den() const { return denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator(v_) == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    // Largest integer <= value (cpp_int division truncates toward zero).
    Integer floor() const {
        Integer q = numerator(v_) / denominator(v_);
        if (v_ < 0 && q * denominator(v_) != numerator(v_)) --q;
        return q;
    }
    Integer ceil() const { return -(-*this).floor(); }

    std::string str() const {
        std::string s = numerator(v_).str();
        if (denominator(v_) != 1) s += "/" + denominator(v_).str();
        return s;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    using Backend = boost::multiprecision::cpp_rational;
    Backend v_;
};

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
    auto read_int = [&](std::string_view s) -> Integer {
        if (s.empty()) bad();
        size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) bad();
        for (size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') bad();
        return Integer(std::string(s));
    };
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(read_int(text));
    return Rational(read_int(text.substr(0, slash)), read_int(text.substr(slash + 1)));
}

inline Rational pow(const Rational& base, unsigned e) {
    Rational r(1), b = base;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace explab
