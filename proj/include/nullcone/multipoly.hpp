#ifndef NULLCONE_MULTIPOLY_HPP
#define NULLCONE_MULTIPOLY_HPP

#include "nullcone/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nullcone {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded lexicographic order, largest term first: higher total degree wins,
/// ties broken by lexicographically larger exponent vector. Iterating a term
/// map in this order yields the canonical serialization order.
struct GradedLexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Zero coefficients are never stored; the zero polynomial has an
/// empty term map.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

    explicit MultiPoly(std::size_t vars = 0) : vars_(vars) {}

    static MultiPoly zero(std::size_t vars) { return MultiPoly(vars); }

    static MultiPoly constant(std::size_t vars, const Rational& c) {
        MultiPoly p(vars);
        p.add_term(Exponents(vars, 0), c);
        return p;
    }

    static MultiPoly variable(std::size_t vars, std::size_t i) {
        if (i >= vars) throw std::out_of_range("MultiPoly::variable: index out of range");
        Exponents e(vars, 0);
        e[i] = 1;
        MultiPoly p(vars);
        p.add_term(e, Rational(1));
        return p;
    }

    static MultiPoly monomial(std::size_t vars, Exponents e, const Rational& c) {
        if (e.size() != vars) throw std::invalid_argument("MultiPoly::monomial: exponent length mismatch");
        MultiPoly p(vars);
        p.add_term(std::move(e), c);
        return p;
    }

    std::size_t vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; the zero polynomial reports 0.
    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Exponents e, const Rational& c) {
        if (e.size() != vars_) throw std::invalid_argument("MultiPoly::add_term: exponent length mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.vars_);
                for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MultiPoly scaled(const Rational& c) const {
        MultiPoly r(vars_);
        if (c == 0) return r;
        for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Splits into homogeneous parts, lowest degree first; empty iff zero.
    std::vector<std::pair<unsigned, MultiPoly>> homogeneous_components() const {
        std::map<unsigned, MultiPoly> parts;
        for (const auto& [e, c] : terms_) {
            const unsigned d = total_degree(e);
            auto it = parts.find(d);
            if (it == parts.end()) it = parts.emplace(d, MultiPoly(vars_)).first;
            it->second.add_term(e, c);
        }
        std::vector<std::pair<unsigned, MultiPoly>> out;
        out.reserve(parts.size());
        for (auto& [d, p] : parts) out.emplace_back(d, std::move(p));
        return out;
    }

    Rational evaluate(const std::vector<Rational>& v) const {
        if (v.size() != vars_) throw std::invalid_argument("MultiPoly::evaluate: point length mismatch");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < vars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= v[i];
            acc += t;
        }
        return acc;
    }

    /// Substitutes arg[i] for variable i; all arguments must share a common
    /// variable count, which becomes the variable count of the result.
    MultiPoly compose(const std::vector<MultiPoly>& args) const {
        if (args.size() != vars_) throw std::invalid_argument("MultiPoly::compose: argument count mismatch");
        std::size_t out_vars = vars_;
        if (!args.empty()) out_vars = args.front().vars();
        for (const auto& a : args)
            if (a.vars() != out_vars) throw std::invalid_argument("MultiPoly::compose: mixed variable counts");
        MultiPoly acc = MultiPoly::zero(out_vars);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = MultiPoly::constant(out_vars, c);
            for (std::size_t i = 0; i < vars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * args[i];
            acc += t;
        }
        return acc;
    }

    /// Degree in one variable.
    unsigned degree_in(std::size_t i) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << rational_to_string(c) << ")";
            for (std::size_t i = 0; i < vars_; ++i) {
                if (e[i] == 0) continue;
                os << "*x" << i + 1;
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    void check_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: variable-count mismatch");
    }

    std::size_t vars_;
    TermMap terms_;
};

inline MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
inline MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
inline MultiPoly poly_scale(const MultiPoly& a, const Rational& c) { return a.scaled(c); }

} // namespace nullcone

#endif
