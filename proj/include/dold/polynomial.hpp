#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dold/types.hpp"

namespace dold {

/// Dense univariate polynomial with exact coefficients; coefficient i
/// multiplies x^i. Stored normalized: no trailing zero coefficients, so the
/// zero polynomial has an empty coefficient list.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

    static Polynomial monomial(const T& c, std::size_t degree) {
        std::vector<T> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<T>& coefficients() const { return coeffs_; }

    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
    T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    bool is_palindromic() const {
        return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(i);
        return Polynomial(std::move(d));
    }

    template <typename U>
    U evaluate(const U& x) const {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Quotient and remainder by a monic divisor. Exact over any coefficient
    /// ring because no division by the leading coefficient is needed.
    template <typename D>
    std::pair<Polynomial, Polynomial> divmod_monic(const Polynomial<D>& divisor) const {
        if (!divisor.is_monic()) throw DomainError("divmod_monic: divisor must be monic");
        const auto dn = static_cast<std::size_t>(divisor.degree());
        std::vector<T> rem = coeffs_;
        if (rem.size() <= dn) return {Polynomial{}, *this};
        std::vector<T> quot(rem.size() - dn);
        for (std::size_t i = rem.size(); i-- > dn;) {
            const T c = rem[i];
            if (c == 0) continue;
            quot[i - dn] = c;
            for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * T(divisor.coeff(j));
        }
        rem.resize(dn);
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    template <typename D>
    Polynomial mod_monic(const Polynomial<D>& divisor) const {
        return divmod_monic(divisor).second;
    }

    std::string to_string(char var = 'x') const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            T c = coeffs_[i];
            if (c == 0) continue;
            const bool neg = c < 0;
            if (neg) c = -c;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (c != 1 || i == 0) os << dold::to_string(c);
            if (i >= 1) os << var;
            if (i >= 2) os << '^' << i;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

}  // namespace dold
