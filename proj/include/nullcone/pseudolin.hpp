#ifndef NULLCONE_PSEUDOLIN_HPP
#define NULLCONE_PSEUDOLIN_HPP

#include "nullcone/matrix.hpp"
#include "nullcone/quadform.hpp"
#include "nullcone/unipoly.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullcone {

/// Inner-product space in the fixed diagonal model: metric -1 on the first p
/// basis vectors, +1 on the last q. The metric matrix is its own inverse.
struct InnerSpace {
    Signature sig;

    explicit InnerSpace(Signature s) : sig(s) {}

    std::size_t dim() const { return sig.m(); }

    RatMat metric() const {
        std::vector<Rational> d(dim());
        for (std::size_t i = 0; i < dim(); ++i) d[i] = Rational(sig.metric_sign(i));
        return RatMat::diagonal(d);
    }
};

using OperatorQ = RatMat;

inline Rational ip(const std::vector<Rational>& u, const std::vector<Rational>& v, const InnerSpace& sp) {
    if (u.size() != sp.dim() || v.size() != sp.dim())
        throw std::invalid_argument("ip: length mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < u.size(); ++i)
        acc += Rational(sp.sig.metric_sign(i)) * u[i] * v[i];
    return acc;
}

/// The reflection swapping the two definite halves: +1 on the spacelike
/// block, -1 on the timelike one. Composing with it exchanges self-adjointness
/// for the signature metric with self-adjointness for the associated definite
/// form g(v,w) = ip(v, phi w).
inline RatMat phi_map(const InnerSpace& sp) { return sp.metric(); }

inline RatMat phi_twist(const RatMat& a, const InnerSpace& sp) { return a * phi_map(sp); }

inline bool is_self_adjoint(const RatMat& a, const InnerSpace& sp) {
    if (a.rows() != sp.dim() || a.cols() != sp.dim()) return false;
    const RatMat g = sp.metric();
    return g * a == a.transpose() * g;
}

/// A subspace carried by an explicit linearly independent basis.
struct SubspaceQ {
    std::vector<std::vector<Rational>> basis;
    std::size_t ambient_dim = 0;

    std::size_t dim() const { return basis.size(); }
};

inline SubspaceQ make_subspace(std::vector<std::vector<Rational>> vectors, std::size_t ambient) {
    RatMat m = rows_to_matrix(vectors, ambient);
    if (m.rank() != vectors.size())
        throw std::invalid_argument("make_subspace: vectors are linearly dependent");
    return SubspaceQ{std::move(vectors), ambient};
}

inline SubspaceQ image_subspace(const RatMat& a) {
    return SubspaceQ{a.image_basis(), a.rows()};
}

inline SubspaceQ kernel_subspace(const RatMat& a) {
    return SubspaceQ{a.kernel_basis(), a.cols()};
}

inline bool is_totally_isotropic(const SubspaceQ& w, const InnerSpace& sp) {
    for (std::size_t i = 0; i < w.basis.size(); ++i)
        for (std::size_t j = i; j < w.basis.size(); ++j)
            if (ip(w.basis[i], w.basis[j], sp) != 0) return false;
    return true;
}

inline RatMat gram_matrix(const SubspaceQ& w, const InnerSpace& sp) {
    RatMat g(w.dim(), w.dim());
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j) g(i, j) = ip(w.basis[i], w.basis[j], sp);
    return g;
}

/// Monic minimal polynomial via the first linear dependence among the
/// flattened powers I, A, A^2, ...
inline UniPoly minimal_polynomial(const RatMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("minimal_polynomial: not square");
    const std::size_t n = a.rows();
    std::vector<RatMat> powers;
    powers.push_back(RatMat::identity(n));
    for (std::size_t k = 1; k <= n; ++k) powers.push_back(powers.back() * a);

    for (std::size_t deg = 1; deg <= n; ++deg) {
        // Solve sum_{i<deg} c_i A^i = -A^deg.
        RatMat sys(n * n, deg);
        std::vector<Rational> rhs(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = i * n + j;
                for (std::size_t k = 0; k < deg; ++k) sys(row, k) = powers[k](i, j);
                rhs[row] = -powers[deg](i, j);
            }
        // Least-degree relation: append rhs as extra column and reduce.
        RatMat aug(n * n, deg + 1);
        for (std::size_t r = 0; r < n * n; ++r) {
            for (std::size_t k = 0; k < deg; ++k) aug(r, k) = sys(r, k);
            aug(r, deg) = rhs[r];
        }
        const auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == deg) continue; // inconsistent, go higher
        std::vector<Rational> coeffs(deg + 1, Rational(0));
        coeffs[deg] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = aug(r, deg);
        return UniPoly(std::move(coeffs));
    }
    throw std::logic_error("minimal_polynomial: no annihilating polynomial found");
}

inline bool is_jordan_simple(const RatMat& a) {
    const UniPoly mu = minimal_polynomial(a);
    return gcd(mu, mu.derivative()).degree() == 0;
}

/// Exact rational isometries of the model metric: seeded products of plane
/// rotations plus optional axis reflections.
inline RatMat plane_rotation_matrix(const InnerSpace& sp, const PlaneRotation& r) {
    RatMat m = RatMat::identity(sp.dim());
    if (r.hyperbolic) {
        m(r.i, r.i) = r.c;
        m(r.j, r.j) = r.c;
        m(r.i, r.j) = r.s;
        m(r.j, r.i) = r.s;
    } else {
        m(r.i, r.i) = r.c;
        m(r.j, r.j) = r.c;
        m(r.i, r.j) = -r.s;
        m(r.j, r.i) = r.s;
    }
    return m;
}

inline bool is_isometry(const RatMat& t, const InnerSpace& sp) {
    const RatMat g = sp.metric();
    return t.transpose() * g * t == g;
}

inline RatMat random_isometry(const InnerSpace& sp, std::mt19937_64& rng, std::size_t factors = 3) {
    const std::size_t m = sp.dim();
    std::uniform_int_distribution<std::size_t> axis(0, m - 1);
    RatMat t = RatMat::identity(m);
    if (m == 1) return t;
    for (std::size_t f = 0; f < factors; ++f) {
        std::size_t i = axis(rng), j = axis(rng);
        if (i == j) j = (j + 1) % m;
        t = t * plane_rotation_matrix(sp, make_plane_rotation(sp.sig, i, j, rational_parameter(rng)));
    }
    return t;
}

/// Exact rational points with ip(v,v) = -1 (orbit of e_1) or +1 (orbit of
/// e_m) under seeded isometries.
inline std::vector<Rational> unit_timelike_sample(const InnerSpace& sp, std::mt19937_64& rng) {
    if (sp.sig.p == 0) throw InadmissibleSignature("unit_timelike_sample: no timelike directions");
    std::vector<Rational> v(sp.dim(), Rational(0));
    v[0] = 1;
    return random_isometry(sp, rng).apply(v);
}

inline std::vector<Rational> unit_spacelike_sample(const InnerSpace& sp, std::mt19937_64& rng) {
    if (sp.sig.q == 0) throw InadmissibleSignature("unit_spacelike_sample: no spacelike directions");
    std::vector<Rational> v(sp.dim(), Rational(0));
    v[sp.dim() - 1] = 1;
    return random_isometry(sp, rng).apply(v);
}

/// Analysis of a self-adjoint operator with vanishing cube. Checks, with
/// witnesses: the image of A^2 is totally isotropic; rank(A phi A^2) =
/// rank(A^2 phi A^2) = rank(A^2) and A maps Im(A phi A^2) isomorphically
/// onto Im(A^2); the induced inner product on Im(A phi A^2) is
/// non-degenerate; and Im(A^2) is orthogonal to Im(A phi A^2).
struct CubicNilpotentReport {
    bool image_sq_isotropic = false;
    std::size_t rank_a2 = 0;
    std::size_t rank_a_phi_a2 = 0;
    std::size_t rank_a2_phi_a2 = 0;
    bool ranks_equal = false;
    bool restriction_isomorphism = false;
    bool gram_nonsingular = false;
    bool orthogonal_images = false;
    Rational gram_determinant;

    bool all_hold() const {
        return image_sq_isotropic && ranks_equal && restriction_isomorphism && gram_nonsingular &&
               orthogonal_images;
    }
};

struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

inline CubicNilpotentReport cubic_nilpotent_report(const RatMat& a, const InnerSpace& sp) {
    if (a.rows() != sp.dim() || a.cols() != sp.dim())
        throw PreconditionError("cubic_nilpotent_report: dimension mismatch");
    if (!is_self_adjoint(a, sp))
        throw PreconditionError("cubic_nilpotent_report: operator is not self-adjoint");
    const RatMat a2 = a * a;
    const RatMat a3 = a2 * a;
    if (!a3.is_zero())
        throw PreconditionError("cubic_nilpotent_report: cube does not vanish");

    const RatMat phi = phi_map(sp);
    const RatMat a_phi_a2 = a * phi * a2;
    const RatMat a2_phi_a2 = a2 * phi * a2;

    CubicNilpotentReport rep;
    const SubspaceQ im_a2 = image_subspace(a2);
    const SubspaceQ im_apa2 = image_subspace(a_phi_a2);
    rep.rank_a2 = im_a2.dim();
    rep.rank_a_phi_a2 = im_apa2.dim();
    rep.rank_a2_phi_a2 = a2_phi_a2.rank();
    rep.image_sq_isotropic = is_totally_isotropic(im_a2, sp);
    rep.ranks_equal = rep.rank_a2 == rep.rank_a_phi_a2 && rep.rank_a2 == rep.rank_a2_phi_a2;

    // A carries the basis of Im(A phi A^2) to a spanning set of Im(A^2) of
    // the same rank exactly when the restriction is an isomorphism.
    std::vector<std::vector<Rational>> mapped;
    mapped.reserve(im_apa2.dim());
    for (const auto& b : im_apa2.basis) mapped.push_back(a.apply(b));
    const std::size_t mapped_rank = mapped.empty() ? 0 : rows_to_matrix(mapped, sp.dim()).rank();
    rep.restriction_isomorphism =
        mapped_rank == im_apa2.dim() && same_span(mapped, im_a2.basis, sp.dim());
    if (im_apa2.dim() == 0) rep.restriction_isomorphism = rep.rank_a2 == 0;

    const RatMat gram = gram_matrix(im_apa2, sp);
    rep.gram_determinant = im_apa2.dim() == 0 ? Rational(1) : gram.determinant();
    rep.gram_nonsingular = rep.gram_determinant != 0;

    rep.orthogonal_images = true;
    for (const auto& x : im_a2.basis)
        for (const auto& y : im_apa2.basis)
            if (ip(x, y, sp) != 0) rep.orthogonal_images = false;
    return rep;
}

/// Self-adjoint operators with vanishing cube, seeded. Rank-2 instances need
/// q >= 2 and come from a degenerate chain u0 -> u1 -> u2 -> 0 built on a
/// null frame; rank-1 instances (square already zero) are x -> ip(x,u)u for
/// null u. Everything is conjugated by random rational isometries.
inline RatMat cubic_nilpotent_fixture(const InnerSpace& sp, std::uint64_t seed, bool rank_two) {
    const Signature sig = sp.sig;
    if (sig.p < 1 || sig.q < 1)
        throw PreconditionError("cubic_nilpotent_fixture: needs an indefinite signature");
    if (rank_two && sig.q < 2)
        throw PreconditionError("cubic_nilpotent_fixture: rank-2 chain needs q >= 2");
    const std::size_t m = sp.dim();
    std::mt19937_64 rng(seed);
    RatMat a(m, m);
    if (rank_two) {
        // u0 = e_{p+2}, u1 = e_{p+1}, u2 = e_1 + e_{p+2}; A u0 = u1, A u1 = u2,
        // A u2 = 0, zero on the orthogonal complement. Self-adjoint by the
        // Gram pattern ip(u0,u2) = ip(u1,u1) = 1, ip(u1,u2) = ip(u2,u2) = 0.
        const std::size_t p = sig.p;
        std::vector<Rational> u1(m, Rational(0)), u2(m, Rational(0));
        u1[p] = 1;
        u2[0] = 1;
        u2[p + 1] = 1;
        // Action on the coordinate basis spanned with e_1, e_{p+1}, e_{p+2}:
        // A e_1 = -u1, A e_{p+1} = u2, A e_{p+2} = u1.
        for (std::size_t i = 0; i < m; ++i) {
            a(i, 0) = -u1[i];
            a(i, p) = u2[i];
            a(i, p + 1) = u1[i];
        }
    } else {
        std::vector<Rational> u(m, Rational(0));
        u[0] = 1;
        u[sig.p] = 1; // null
        const InnerSpace space(sig);
        const RatMat g = space.metric();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) a(i, j) = u[i] * Rational(sig.metric_sign(j)) * u[j];
    }
    const RatMat t = random_isometry(sp, rng, 4);
    const auto tinv = t.inverse();
    std::uniform_int_distribution<int> sc(1, 5);
    return (t * a * (*tinv)).scaled(Rational(sc(rng)));
}

} // namespace nullcone

#endif
