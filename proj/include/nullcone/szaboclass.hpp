#ifndef NULLCONE_SZABOCLASS_HPP
#define NULLCONE_SZABOCLASS_HPP

#include "nullcone/multipoly.hpp"
#include "nullcone/pseudolin.hpp"
#include "nullcone/quadform.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullcone {

/// Square matrix of multivariate polynomials, all entries homogeneous of one
/// common degree (or zero). Evaluation at a point yields an operator.
class HomPolyMap {
public:
    HomPolyMap(Signature sig, unsigned degree)
        : sig_(sig), degree_(degree), entries_(sig.m() * sig.m(), MultiPoly(sig.m())) {}

    static HomPolyMap zero(Signature sig, unsigned degree) { return HomPolyMap(sig, degree); }

    const Signature& sig() const { return sig_; }
    std::size_t dim() const { return sig_.m(); }
    unsigned degree() const { return degree_; }

    MultiPoly& at(std::size_t i, std::size_t j) { return entries_[i * dim() + j]; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }

    void set(std::size_t i, std::size_t j, MultiPoly p) {
        if (p.vars() != dim()) throw std::invalid_argument("HomPolyMap::set: variable count mismatch");
        if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != degree_))
            throw std::invalid_argument("HomPolyMap::set: entry is not homogeneous of the map degree");
        entries_[i * dim() + j] = std::move(p);
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const HomPolyMap& a, const HomPolyMap& b) {
        return a.sig_ == b.sig_ && a.degree_ == b.degree_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const HomPolyMap& a, const HomPolyMap& b) { return !(a == b); }

    RatMat evaluate(const std::vector<Rational>& v) const {
        RatMat m(dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) m(i, j) = at(i, j).evaluate(v);
        return m;
    }

    friend HomPolyMap operator*(const HomPolyMap& a, const HomPolyMap& b) {
        if (!(a.sig_ == b.sig_)) throw std::invalid_argument("HomPolyMap: signature mismatch");
        HomPolyMap r(a.sig_, a.degree_ + b.degree_);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                MultiPoly acc(a.dim());
                for (std::size_t k = 0; k < a.dim(); ++k) acc += a.at(i, k) * b.at(k, j);
                r.set(i, j, std::move(acc));
            }
        return r;
    }

    friend HomPolyMap operator+(const HomPolyMap& a, const HomPolyMap& b) {
        if (!(a.sig_ == b.sig_) || a.degree_ != b.degree_)
            throw std::invalid_argument("HomPolyMap: sum shape mismatch");
        HomPolyMap r(a.sig_, a.degree_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = a.entries_[i] + b.entries_[i];
        return r;
    }

    friend HomPolyMap operator-(const HomPolyMap& a, const HomPolyMap& b) {
        return a + b.scaled(Rational(-1));
    }

    HomPolyMap scaled(const Rational& c) const {
        HomPolyMap r(sig_, degree_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].scaled(c);
        return r;
    }

    /// Entrywise product with a scalar polynomial (degree bookkeeping shifts).
    HomPolyMap scalar_poly_mul(const MultiPoly& c) const {
        if (!c.is_homogeneous()) throw std::invalid_argument("scalar_poly_mul: scalar not homogeneous");
        HomPolyMap r(sig_, degree_ + c.degree());
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
        return r;
    }

    MultiPoly trace() const {
        MultiPoly t(dim());
        for (std::size_t i = 0; i < dim(); ++i) t += at(i, i);
        return t;
    }

private:
    Signature sig_;
    unsigned degree_;
    std::vector<MultiPoly> entries_;
};

/// Coefficient-level membership report for the class of odd self-adjoint
/// maps that annihilate their argument. All identities are polynomial, so a
/// passing report is a certificate rather than sampled evidence.
struct PClassReport {
    bool self_adjoint_ok = false;
    bool annihilates_ok = false;
    bool odd_degree_ok = false;
    unsigned degree = 0;
    unsigned n = 0; // degree = 2n+1 when odd_degree_ok

    bool member() const { return self_adjoint_ok && annihilates_ok && odd_degree_ok; }
};

inline PClassReport pclass_check(const HomPolyMap& s) {
    PClassReport rep;
    rep.degree = s.degree();
    rep.odd_degree_ok = s.degree() % 2 == 1;
    if (rep.odd_degree_ok) rep.n = (s.degree() - 1) / 2;

    const Signature sig = s.sig();
    const std::size_t m = s.dim();
    rep.self_adjoint_ok = true;
    for (std::size_t i = 0; i < m && rep.self_adjoint_ok; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const MultiPoly lhs = s.at(i, j).scaled(Rational(sig.metric_sign(i)));
            const MultiPoly rhs = s.at(j, i).scaled(Rational(sig.metric_sign(j)));
            if (lhs != rhs) {
                rep.self_adjoint_ok = false;
                break;
            }
        }

    rep.annihilates_ok = true;
    for (std::size_t i = 0; i < m && rep.annihilates_ok; ++i) {
        MultiPoly row(m);
        for (std::size_t j = 0; j < m; ++j) row += s.at(i, j) * MultiPoly::variable(m, j);
        if (!row.is_zero()) rep.annihilates_ok = false;
    }
    return rep;
}

inline HomPolyMap odd_power(const HomPolyMap& s, unsigned k) {
    if (k % 2 == 0 || k == 0) throw std::invalid_argument("odd_power: exponent must be odd and positive");
    HomPolyMap acc = s;
    for (unsigned i = 1; i < k; ++i) acc = acc * s;
    return acc;
}

inline MultiPoly trace_power_poly(const HomPolyMap& s, unsigned n) {
    if (n == 0) throw std::invalid_argument("trace_power_poly: power must be >= 1");
    HomPolyMap acc = s;
    for (unsigned i = 1; i < n; ++i) acc = acc * s;
    return acc.trace();
}

/// Check S(Tv) = T S(v) T^{-1} at seeded sample points; T must preserve the
/// metric exactly.
inline bool equivariance_check(const HomPolyMap& s, const RatMat& t, std::uint64_t seed = 1,
                               std::size_t samples = 10) {
    const InnerSpace sp{s.sig()};
    if (!is_isometry(t, sp)) throw std::invalid_argument("equivariance_check: not an isometry");
    const auto tinv_opt = t.inverse();
    const RatMat tinv = *tinv_opt;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (std::size_t rep = 0; rep < samples; ++rep) {
        std::vector<Rational> v(s.dim());
        for (auto& x : v) x = coef(rng);
        const RatMat lhs = s.evaluate(t.apply(v));
        const RatMat rhs = t * s.evaluate(v) * tinv;
        if (lhs != rhs) return false;
    }
    return true;
}

struct NilpotencyReport {
    bool nilpotent = false;
    std::optional<unsigned> failing_power; // first n with trace of S^n not vanishing on the cone
};

/// Pointwise nilpotency over the nullcone, decided by the trace criterion:
/// S(v) is nilpotent for every null v exactly when the traces of the first
/// m powers vanish on the cone, i.e. are divisible by the signature form.
inline NilpotencyReport pointwise_nilpotent_on_nullcone(const HomPolyMap& s) {
    require_admissible(s.sig());
    const QuadForm qf{s.sig()};
    NilpotencyReport rep;
    HomPolyMap acc = s;
    for (unsigned n = 1; n <= s.dim(); ++n) {
        if (n > 1) acc = acc * s;
        if (!divide_by_q(acc.trace(), qf)) {
            rep.nilpotent = false;
            rep.failing_power = n;
            return rep;
        }
    }
    rep.nilpotent = true;
    return rep;
}

struct VanishingOrderReport {
    std::optional<unsigned> order;  // smallest n <= m with S^n = 0 over the cone
    std::optional<unsigned> odd_k;  // greatest odd number below the order, for orders >= 4
};

inline bool vanishes_entrywise_on_nullcone(const HomPolyMap& s, const QuadForm& qf) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (!s.at(i, j).is_zero() && !divide_by_q(s.at(i, j), qf)) return false;
    return true;
}

inline VanishingOrderReport vanishing_order_on_nullcone(const HomPolyMap& s) {
    require_admissible(s.sig());
    const QuadForm qf{s.sig()};
    VanishingOrderReport rep;
    HomPolyMap acc = s;
    for (unsigned n = 1; n <= s.dim(); ++n) {
        if (n > 1) acc = acc * s;
        if (vanishes_entrywise_on_nullcone(acc, qf)) {
            rep.order = n;
            if (n >= 4) rep.odd_k = (n % 2 == 0) ? n - 1 : n - 2;
            return rep;
        }
    }
    return rep;
}

struct FactorError : std::invalid_argument {
    std::size_t row, col;
    FactorError(std::size_t i, std::size_t j)
        : std::invalid_argument("factor_out_q: entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") is not divisible by the signature form"),
          row(i), col(j) {}
};

/// Divides the whole map by the signature form; every entry must be
/// divisible. The quotient of a class member is again a class member two
/// degrees down.
inline HomPolyMap factor_out_q(const HomPolyMap& s) {
    const QuadForm qf{s.sig()};
    if (s.degree() < 2) throw std::invalid_argument("factor_out_q: degree too small");
    HomPolyMap t(s.sig(), s.degree() - 2);
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            auto d = divide_by_q(s.at(i, j), qf);
            if (!d) throw FactorError(i, j);
            t.set(i, j, std::move(*d));
        }
    return t;
}

/// Dimension of the space of degree-1 class members: self-adjoint linear
/// pencils annihilating their argument. The polarization argument makes this
/// space trivial; the certificate passes when the assembled linear system has
/// nullity zero.
struct TrivialityCertificate {
    std::size_t dimension = 0;
    bool passes() const { return dimension == 0; }
};

inline TrivialityCertificate degree_one_triviality(const Signature& sig) {
    const std::size_t m = sig.m();
    if (m < 2) throw std::invalid_argument("degree_one_triviality: dimension must be >= 2");
    // Unknowns: entries A_k[i][j], index k*m^2 + i*m + j.
    const std::size_t unknowns = m * m * m;
    std::vector<std::vector<Rational>> rows;
    auto idx = [m](std::size_t k, std::size_t i, std::size_t j) { return k * m * m + i * m + j; };

    // Self-adjointness of each coefficient matrix.
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                std::vector<Rational> row(unknowns, Rational(0));
                row[idx(k, i, j)] += Rational(sig.metric_sign(i));
                row[idx(k, j, i)] -= Rational(sig.metric_sign(j));
                rows.push_back(std::move(row));
            }
    // S(v)v = 0, coefficientwise in v_k v_j.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<Rational> diag(unknowns, Rational(0));
            diag[idx(k, i, k)] = 1;
            rows.push_back(std::move(diag));
            for (std::size_t j = k + 1; j < m; ++j) {
                std::vector<Rational> row(unknowns, Rational(0));
                row[idx(k, i, j)] += 1;
                row[idx(j, i, k)] += 1;
                rows.push_back(std::move(row));
            }
        }
    }
    RatMat sys = rows_to_matrix(rows, unknowns);
    TrivialityCertificate cert;
    cert.dimension = sys.kernel_basis().size();
    return cert;
}

/// Demonstration member of the odd class: S(v) = f(v) (v v^T G - q(v) I)
/// with f a coordinate. Self-adjoint, annihilates v, homogeneous cubic; on
/// the nullcone its image is the null line through v, so its square vanishes
/// there while the map itself does not.
inline HomPolyMap rank_one_null_image_map(const Signature& sig, std::size_t axis = 0) {
    const std::size_t m = sig.m();
    if (axis >= m) throw std::invalid_argument("rank_one_null_image_map: axis out of range");
    const MultiPoly f = MultiPoly::variable(m, axis);
    const MultiPoly q = QuadForm{sig}.poly();
    HomPolyMap s(sig, 3);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            MultiPoly vi = MultiPoly::variable(m, i);
            MultiPoly vj = MultiPoly::variable(m, j);
            MultiPoly entry = (vi * vj).scaled(Rational(sig.metric_sign(j)));
            if (i == j) entry -= q;
            s.set(i, j, f * entry);
        }
    return s;
}

/// A class member whose image direction is generically non-null: the
/// two-dimensional demo embedded into a larger signature, acting only on the
/// span of e_1 and a chosen spacelike axis. Its trace is not divisible by
/// the form, so it is not nilpotent over the cone.
inline HomPolyMap embedded_plane_map(const Signature& sig, std::size_t spacelike_axis) {
    const std::size_t m = sig.m();
    if (sig.p < 1 || sig.q < 1) throw std::invalid_argument("embedded_plane_map: needs p,q >= 1");
    const std::size_t a = 0, b = spacelike_axis;
    if (b < sig.p || b >= m) throw std::invalid_argument("embedded_plane_map: axis not spacelike");
    // u = (lambda_b, lambda_a) in the (a,b)-plane; S(v)x = lambda_a ip(x,u) u.
    const MultiPoly la = MultiPoly::variable(m, a);
    const MultiPoly lb = MultiPoly::variable(m, b);
    HomPolyMap s(sig, 3);
    // ip(x, u) = -x_a * lambda_b + x_b * lambda_a in the embedded plane.
    // Column for x = e_a: coefficient -lambda_b; for x = e_b: lambda_a.
    s.set(a, a, la * lb.scaled(Rational(-1)) * lb);
    s.set(b, a, la * lb.scaled(Rational(-1)) * la);
    s.set(a, b, la * la * lb);
    s.set(b, b, la * la * la);
    return s;
}

inline HomPolyMap embedded_plane_map(const Signature& sig) {
    return embedded_plane_map(sig, sig.p);
}

/// Difference of two embedded plane maps on distinct spacelike axes. Its
/// evaluation at e_1 is diag(0,...,1,...,-1,...), so the minimal polynomial
/// there is X(X^2-1): a valid symmetric spectral profile with l = 1.
inline HomPolyMap split_spectrum_map(const Signature& sig) {
    if (sig.q < 2) throw std::invalid_argument("split_spectrum_map: needs q >= 2");
    return embedded_plane_map(sig, sig.p) - embedded_plane_map(sig, sig.p + 1);
}

} // namespace nullcone

#endif
