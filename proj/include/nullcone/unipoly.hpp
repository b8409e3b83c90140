#ifndef NULLCONE_UNIPOLY_HPP
#define NULLCONE_UNIPOLY_HPP

#include "nullcone/matrix.hpp"
#include "nullcone/rational.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nullcone {

/// Dense univariate polynomial over the rationals, coefficient of X^i at
/// index i; trailing zeros are trimmed so degree is size()-1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& a) { return UniPoly({a}); }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
    static UniPoly monomial(std::size_t deg, const Rational& a) {
        std::vector<Rational> c(deg + 1, Rational(0));
        c[deg] = a;
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }

    UniPoly scaled(const Rational& k) const {
        std::vector<Rational> c = c_;
        for (auto& x : c) x *= k;
        return UniPoly(std::move(c));
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(Rational(1) / leading());
    }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("UniPoly::divmod: division by zero");
        UniPoly rem = *this;
        UniPoly quot;
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            const std::size_t k = rem.degree() - d.degree();
            const Rational f = rem.leading() / d.leading();
            quot = quot + UniPoly::monomial(k, f);
            rem = rem - d * UniPoly::monomial(k, f);
        }
        return {quot, rem};
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return UniPoly(std::move(c));
    }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    RatMat evaluate(const RatMat& a) const {
        if (a.rows() != a.cols()) throw std::invalid_argument("UniPoly::evaluate: matrix not square");
        RatMat acc(a.rows(), a.cols());
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * a;
            for (std::size_t d = 0; d < a.rows(); ++d) acc(d, d) += c_[i];
        }
        return acc;
    }

    bool only_odd_terms() const {
        for (std::size_t i = 0; i < c_.size(); i += 2)
            if (c_[i] != 0) return false;
        return true;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << rational_to_string(c_[i]) << ")";
            if (i >= 1) os << "*X";
            if (i >= 2) os << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace nullcone

#endif
