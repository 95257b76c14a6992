#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "explab/monomial.hpp"

namespace explab {

enum class OrderKind { grevlex, lex, grlex };

inline const char* order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "grlex";
    }
    return "?";
}

inline OrderKind order_kind_from_name(const std::string& name) {
    if (name == "grevlex") return OrderKind::grevlex;
    if (name == "lex") return OrderKind::lex;
    if (name == "grlex") return OrderKind::grlex;
    throw std::invalid_argument("unknown monomial order '" + name + "'");
}

// Total, multiplicative, well-founded order on monomials. The permutation
// lists variable indices from most to least significant; empty means identity.
class MonomialOrder {
public:
    MonomialOrder() : kind_(OrderKind::grevlex) {}
    explicit MonomialOrder(OrderKind kind, std::vector<int> perm = {})
        : kind_(kind), perm_(std::move(perm)) {}

    OrderKind kind() const { return kind_; }
    const std::vector<int>& permutation() const { return perm_; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        const std::size_t n = a.size();
        auto var = [&](std::size_t i) { return perm_.empty() ? int(i) : perm_[i]; };
        if (kind_ != OrderKind::lex) {
            int da = a.degree(), db = b.degree();
            if (da != db) return da < db ? -1 : 1;
        }
        if (kind_ == OrderKind::grevlex) {
            for (std::size_t i = n; i-- > 0;) {
                int d = a.exponents[var(i)] - b.exponents[var(i)];
                if (d != 0) return d < 0 ? 1 : -1;
            }
            return 0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            int d = a.exponents[var(i)] - b.exponents[var(i)];
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    OrderKind kind_;
    std::vector<int> perm_;
};

}  // namespace explab
