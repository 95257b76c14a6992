#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace explab {

// Exponent vector of a power product, indexed by variable.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    std::size_t size() const { return exponents.size(); }
    int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }
    bool is_one() const {
        return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > m.exponents[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
        return r;
    }

    // Exact quotient; caller guarantees b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] -= b.exponents[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exponents.size(); ++i)
            r.exponents[i] = std::max(r.exponents[i], b.exponents[i]);
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exponents.size(); ++i)
            if (a.exponents[i] > 0 && b.exponents[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exponents != b.exponents; }
};

// Order-independent comparator for containers keyed by Monomial.
struct MonomialKeyLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.exponents < b.exponents;
    }
};

}  // namespace explab
