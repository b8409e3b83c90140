#ifndef NULLCONE_QUADFORM_HPP
#define NULLCONE_QUADFORM_HPP

#include "nullcone/multipoly.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace nullcone {

/// Signature (p,q): p timelike directions (metric -1), q spacelike (+1).
struct Signature {
    unsigned p = 0;
    unsigned q = 0;

    Signature() = default;
    Signature(unsigned p_, unsigned q_) : p(p_), q(q_) {
        if (m() < 1) throw std::invalid_argument("Signature: dimension must be >= 1");
    }

    unsigned m() const { return p + q; }
    int metric_sign(std::size_t i) const { return i < p ? -1 : +1; }

    friend bool operator==(const Signature& a, const Signature& b) { return a.p == b.p && a.q == b.q; }
};

/// The diagonal quadratic form of a signature,
/// q = -x_1^2 - ... - x_p^2 + x_{p+1}^2 + ... + x_m^2.
struct QuadForm {
    Signature sig;

    explicit QuadForm(Signature s) : sig(s) {}

    MultiPoly poly() const {
        const std::size_t m = sig.m();
        MultiPoly q(m);
        for (std::size_t i = 0; i < m; ++i) {
            Exponents e(m, 0);
            e[i] = 2;
            q.add_term(std::move(e), Rational(sig.metric_sign(i)));
        }
        return q;
    }

    Rational value(const std::vector<Rational>& v) const {
        if (v.size() != sig.m()) throw std::invalid_argument("QuadForm::value: length mismatch");
        Rational acc(0);
        for (std::size_t i = 0; i < v.size(); ++i) acc += Rational(sig.metric_sign(i)) * v[i] * v[i];
        return acc;
    }
};

/// Exact division by the signature form. The divisor is monic (up to sign) as
/// a quadratic in a pivot variable: the last variable when q >= 1, otherwise
/// the first. Univariate division in that variable, with coefficients in the
/// remaining ones, decides divisibility by a zero remainder.
inline std::optional<MultiPoly> divide_by_q(const MultiPoly& p, const QuadForm& qf) {
    const std::size_t m = qf.sig.m();
    if (p.vars() != m) throw std::invalid_argument("divide_by_q: variable-count mismatch");
    const std::size_t pv = qf.sig.q >= 1 ? m - 1 : 0;
    const Rational lead(qf.sig.metric_sign(pv));

    const MultiPoly qpoly = qf.poly();
    MultiPoly rem = p;
    MultiPoly quot(m);
    while (!rem.is_zero()) {
        // Peel all terms of maximal pivot degree in one step.
        unsigned dmax = rem.degree_in(pv);
        if (dmax < 2) break;
        MultiPoly chunk(m);
        for (const auto& [e, c] : rem.terms()) {
            if (e[pv] != dmax) continue;
            Exponents e2 = e;
            e2[pv] -= 2;
            chunk.add_term(std::move(e2), c / lead);
        }
        quot += chunk;
        rem -= chunk * qpoly;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

/// Largest k with q^k | p; empty means infinite (p == 0).
inline std::optional<unsigned> q_valuation(const MultiPoly& p, const QuadForm& qf) {
    if (p.is_zero()) return std::nullopt;
    unsigned k = 0;
    MultiPoly cur = p;
    for (;;) {
        auto d = divide_by_q(cur, qf);
        if (!d) return k;
        cur = std::move(*d);
        ++k;
    }
}

struct InadmissibleSignature : std::invalid_argument {
    explicit InadmissibleSignature(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Signatures where "vanishes on the nullcone" is equivalent to divisibility
/// by q: the form must be indefinite and the dimension at least 3, so q is
/// irreducible over the complex numbers.
inline void require_admissible(const Signature& s) {
    if (s.p == 0 || s.q == 0)
        throw InadmissibleSignature("definite signature: nullcone degenerates to the origin");
    if (s.m() <= 2)
        throw InadmissibleSignature("dimension <= 2: the signature form is reducible");
}

inline bool vanishes_on_nullcone(const MultiPoly& p, const QuadForm& qf) {
    require_admissible(qf.sig);
    return divide_by_q(p, qf).has_value();
}

/// Entries of a Cayley-style rational rotation: for a pair of axes with equal
/// metric signs, (cos,sin) = ((1-t^2)/(1+t^2), 2t/(1+t^2)); for a mixed pair,
/// (cosh,sinh) = ((1+t^2)/(1-t^2), 2t/(1-t^2)), t != +-1. Both preserve the
/// signature form exactly.
struct PlaneRotation {
    std::size_t i, j;
    Rational c, s;
    bool hyperbolic;
};

inline PlaneRotation make_plane_rotation(const Signature& sig, std::size_t i, std::size_t j, const Rational& t) {
    if (i >= sig.m() || j >= sig.m() || i == j) throw std::invalid_argument("make_plane_rotation: bad axes");
    const bool mixed = sig.metric_sign(i) != sig.metric_sign(j);
    const Rational t2 = t * t;
    if (mixed) {
        if (t2 == 1) throw std::invalid_argument("make_plane_rotation: |t| = 1 degenerate for boosts");
        return PlaneRotation{i, j, (1 + t2) / (1 - t2), (2 * t) / (1 - t2), true};
    }
    return PlaneRotation{i, j, (1 - t2) / (1 + t2), (2 * t) / (1 + t2), false};
}

inline void apply_plane_rotation(std::vector<Rational>& v, const PlaneRotation& r) {
    const Rational a = v[r.i], b = v[r.j];
    if (r.hyperbolic) {
        v[r.i] = r.c * a + r.s * b;
        v[r.j] = r.s * a + r.c * b;
    } else {
        v[r.i] = r.c * a - r.s * b;
        v[r.j] = r.s * a + r.c * b;
    }
}

/// Seeded rotation parameter with |t| < 1, so boosts are never degenerate.
inline Rational rational_parameter(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den(2, 9);
    const int d = den(rng);
    std::uniform_int_distribution<int> num(-(d - 1), d - 1);
    return Rational(num(rng), d);
}

/// Deterministic exact null vectors: images of the base null vector
/// e_1 + e_{p+1} under seeded products of rational plane rotations.
inline std::vector<std::vector<Rational>> null_samples(const QuadForm& qf, std::size_t count,
                                                       std::uint64_t seed) {
    const Signature& sig = qf.sig;
    if (sig.p == 0 || sig.q == 0)
        throw InadmissibleSignature("null_samples: definite signature has trivial nullcone");
    const std::size_t m = sig.m();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> axis(0, m - 1);

    std::vector<std::vector<Rational>> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        std::vector<Rational> v(m, Rational(0));
        v[0] = 1;
        v[sig.p] = 1;
        const std::size_t rounds = 1 + (m > 2 ? 2u : 1u);
        for (std::size_t r = 0; r < rounds; ++r) {
            std::size_t i = axis(rng), j = axis(rng);
            if (i == j) j = (j + 1) % m;
            apply_plane_rotation(v, make_plane_rotation(sig, i, j, rational_parameter(rng)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace nullcone

#endif
