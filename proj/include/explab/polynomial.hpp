#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "explab/monomial.hpp"
#include "explab/order.hpp"
#include "explab/rational.hpp"

namespace explab {

// Sparse multivariate polynomial over Q with a fixed, ordered variable list.
// Zero coefficients are never stored; all exponent vectors have length
// variables().size().
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialKeyLess>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    static Polynomial constant(std::vector<std::string> variables, const Rational& c);
    static Polynomial term(std::vector<std::string> variables, Monomial m, const Rational& c);
    static Polynomial variable(std::vector<std::string> variables, std::size_t index);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t var_count() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the constant monomial (0 if absent).
    Rational constant_value() const;
    Rational coefficient(const Monomial& m) const;
    int total_degree() const;  // 0 for constants including the zero polynomial

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned e) const;

    Rational evaluate(std::span<const Rational> point) const;

    // Canonical text form: terms sorted descending by `order`.
    std::string str(const MonomialOrder& order = MonomialOrder()) const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

// Parses an arithmetic expression in +, -, *, /, ^, integer literals,
// parentheses and the declared variable names. Division is only allowed by
// (sub)expressions that evaluate to nonzero constants. Throws parse_error.
Polynomial parse(std::string_view text, const std::vector<std::string>& variables);

// Identifiers of `text` in first-appearance order; used by the CLI when no
// explicit variable list is given.
std::vector<std::string> scan_identifiers(std::string_view text);

// Exact formal partial derivative with respect to variable `index`.
Polynomial partial(const Polynomial& f, std::size_t index);

// Multivariate gcd over Q by primitive-part recursion; result is normalized
// to leading coefficient 1 (grevlex). gcd(0, g) = normalized g.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// True iff f has no repeated irreducible factor over Q, decided by reducing
// gcd(f, df/dx_1, ..., df/dx_n) to a constant. Pre: f nonzero, nonconstant.
bool squarefree_check(const Polynomial& f);

// f + g in the disjoint union of the variable sets; clashing names are
// renamed with numeric suffixes (both sides).
Polynomial join(const Polynomial& f, const Polynomial& g);

}  // namespace explab
