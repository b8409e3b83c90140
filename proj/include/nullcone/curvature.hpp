#ifndef NULLCONE_CURVATURE_HPP
#define NULLCONE_CURVATURE_HPP

#include "nullcone/matrix.hpp"
#include "nullcone/szaboclass.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace nullcone {

/// Five-index tensor with the curvature-derivative symmetries:
///   (pair)   T(x,y,z,w;v) = T(z,w,x,y;v) = -T(y,x,z,w;v)
///   (first)  T(x,y,z,w;v) + T(y,z,x,w;v) + T(z,x,y,w;v) = 0
///   (second) T(x,y,z,w;v) + T(x,y,w,v;z) + T(x,y,v,z;w) = 0
class CovDerivTensor {
public:
    explicit CovDerivTensor(Signature sig)
        : sig_(sig), m_(sig.m()), data_(pow5(sig.m()), Rational(0)) {}

    const Signature& sig() const { return sig_; }
    std::size_t dim() const { return m_; }

    Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t n) {
        return data_[flat(i, j, k, l, n)];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                       std::size_t n) const {
        return data_[flat(i, j, k, l, n)];
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    CovDerivTensor scaled(const Rational& c) const {
        CovDerivTensor t = *this;
        for (auto& x : t.data_) x *= c;
        return t;
    }

    friend bool operator==(const CovDerivTensor& a, const CovDerivTensor& b) {
        return a.sig_ == b.sig_ && a.data_ == b.data_;
    }
    friend bool operator!=(const CovDerivTensor& a, const CovDerivTensor& b) { return !(a == b); }

    std::size_t flat(std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                     std::size_t n) const {
        return (((i * m_ + j) * m_ + k) * m_ + l) * m_ + n;
    }

    static std::size_t pow5(std::size_t m) { return m * m * m * m * m; }

private:
    Signature sig_;
    std::size_t m_;
    std::vector<Rational> data_;
};

struct SymmetryViolation {
    std::string identity; // "pair-exchange", "antisymmetry", "first-cyclic", "second-cyclic"
    std::array<std::size_t, 5> index;
};

inline std::vector<SymmetryViolation> check_symmetries(const CovDerivTensor& t) {
    const std::size_t m = t.dim();
    std::vector<SymmetryViolation> out;
    std::array<std::size_t, 5> ix{};
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z)
                for (std::size_t w = 0; w < m; ++w)
                    for (std::size_t v = 0; v < m; ++v) {
                        ix = {x, y, z, w, v};
                        if (t.at(x, y, z, w, v) != t.at(z, w, x, y, v))
                            out.push_back({"pair-exchange", ix});
                        if (t.at(x, y, z, w, v) != -t.at(y, x, z, w, v))
                            out.push_back({"antisymmetry", ix});
                        if (t.at(x, y, z, w, v) + t.at(y, z, x, w, v) + t.at(z, x, y, w, v) != 0)
                            out.push_back({"first-cyclic", ix});
                        if (t.at(x, y, z, w, v) + t.at(x, y, w, v, z) + t.at(x, y, v, z, w) != 0)
                            out.push_back({"second-cyclic", ix});
                    }
    return out;
}

namespace detail {

/// The symmetry identities permute index positions, never values, so the
/// constraint system splits into blocks indexed by the multiset of the five
/// index values. Each block is solved exactly; the basis vectors of the
/// whole solution space are supported on single blocks.
struct TensorBlockBasis {
    // Each basis element: list of (flat 5-tuple, coefficient).
    std::vector<std::vector<std::pair<std::array<std::size_t, 5>, Rational>>> basis;
};

inline void enumerate_multisets(std::size_t m, std::size_t pos, std::size_t start,
                                std::array<std::size_t, 5>& cur,
                                std::vector<std::array<std::size_t, 5>>& out) {
    if (pos == 5) {
        out.push_back(cur);
        return;
    }
    for (std::size_t v = start; v < m; ++v) {
        cur[pos] = v;
        enumerate_multisets(m, pos + 1, v, cur, out);
    }
}

inline TensorBlockBasis symmetric_tensor_basis(std::size_t m) {
    TensorBlockBasis result;
    std::vector<std::array<std::size_t, 5>> multisets;
    std::array<std::size_t, 5> cur{};
    enumerate_multisets(m, 0, 0, cur, multisets);

    for (const auto& ms : multisets) {
        // Distinct arrangements of the multiset, canonical (lex) order.
        std::vector<std::array<std::size_t, 5>> tuples;
        std::array<std::size_t, 5> perm = ms;
        // ms is sorted ascending; iterate permutations lexicographically.
        do {
            tuples.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::map<std::array<std::size_t, 5>, std::size_t> local;
        for (std::size_t i = 0; i < tuples.size(); ++i) local[tuples[i]] = i;
        const std::size_t nvars = tuples.size();

        std::vector<std::vector<Rational>> rows;
        auto row_of = [&](std::initializer_list<std::pair<std::array<std::size_t, 5>, int>> terms) {
            std::vector<Rational> row(nvars, Rational(0));
            for (const auto& [tup, c] : terms) row[local.at(tup)] += c;
            rows.push_back(std::move(row));
        };
        for (const auto& t : tuples) {
            const auto [x, y, z, w, v] = std::tuple{t[0], t[1], t[2], t[3], t[4]};
            row_of({{{x, y, z, w, v}, 1}, {{z, w, x, y, v}, -1}});
            row_of({{{x, y, z, w, v}, 1}, {{y, x, z, w, v}, 1}});
            row_of({{{x, y, z, w, v}, 1}, {{y, z, x, w, v}, 1}, {{z, x, y, w, v}, 1}});
            row_of({{{x, y, z, w, v}, 1}, {{x, y, w, v, z}, 1}, {{x, y, v, z, w}, 1}});
        }
        RatMat sys = rows_to_matrix(rows, nvars);
        for (const auto& kvec : sys.kernel_basis()) {
            std::vector<std::pair<std::array<std::size_t, 5>, Rational>> elem;
            for (std::size_t i = 0; i < nvars; ++i)
                if (kvec[i] != 0) elem.emplace_back(tuples[i], kvec[i]);
            result.basis.push_back(std::move(elem));
        }
    }
    return result;
}

inline const TensorBlockBasis& cached_tensor_basis(std::size_t m) {
    static std::mutex mu;
    static std::map<std::size_t, TensorBlockBasis> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, symmetric_tensor_basis(m)).first;
    return it->second;
}

} // namespace detail

inline std::size_t symmetric_tensor_space_dimension(std::size_t m) {
    return detail::cached_tensor_basis(m).basis.size();
}

/// Seeded exact member of the symmetry class: a small-integer combination of
/// the nullspace basis. Dimension capped to keep the block solve desk-scale.
inline CovDerivTensor random_symmetric_tensor(const Signature& sig, std::uint64_t seed) {
    if (sig.m() < 2) throw std::invalid_argument("random_symmetric_tensor: dimension must be >= 2");
    if (sig.m() > 6) throw std::invalid_argument("random_symmetric_tensor: dimension capped at 6");
    const auto& basis = detail::cached_tensor_basis(sig.m());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-4, 4);
    CovDerivTensor t(sig);
    for (const auto& elem : basis.basis) {
        const Rational c(coef(rng));
        if (c == 0) continue;
        for (const auto& [tup, val] : elem)
            t.at(tup[0], tup[1], tup[2], tup[3], tup[4]) += c * val;
    }
    return t;
}

struct SymmetryError : std::invalid_argument {
    explicit SymmetryError(const std::string& msg) : std::invalid_argument(msg) {}
};

inline void require_symmetric(const CovDerivTensor& t) {
    if (!check_symmetries(t).empty())
        throw SymmetryError("tensor violates the curvature-derivative symmetries");
}

/// Operator of the cubic map at a point: M = G * B with
/// B[x][y] = sum T[x,a,b,y;c] v_a v_b v_c. It is self-adjoint and kills v.
inline RatMat szabo_at(const CovDerivTensor& t, const std::vector<Rational>& v) {
    require_symmetric(t);
    const std::size_t m = t.dim();
    if (v.size() != m) throw std::invalid_argument("szabo_at: vector length mismatch");
    RatMat b(m, m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            Rational acc(0);
            for (std::size_t a = 0; a < m; ++a) {
                if (v[a] == 0) continue;
                for (std::size_t c = 0; c < m; ++c) {
                    if (v[c] == 0) continue;
                    for (std::size_t bb = 0; bb < m; ++bb) {
                        if (v[bb] == 0) continue;
                        acc += t.at(x, a, bb, y, c) * v[a] * v[bb] * v[c];
                    }
                }
            }
            b(x, y) = acc;
        }
    RatMat s(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) s(i, j) = Rational(t.sig().metric_sign(i)) * b(i, j);
    return s;
}

/// The same operator as a degree-3 matrix of polynomials; evaluating it at
/// any rational point reproduces szabo_at exactly.
inline HomPolyMap szabo_polymap(const CovDerivTensor& t) {
    require_symmetric(t);
    const std::size_t m = t.dim();
    HomPolyMap s(t.sig(), 3);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            MultiPoly entry(m);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    for (std::size_t c = 0; c < m; ++c) {
                        const Rational& coef = t.at(i, a, b, j, c);
                        if (coef == 0) continue;
                        Exponents e(m, 0);
                        e[a]++;
                        e[b]++;
                        e[c]++;
                        entry.add_term(std::move(e), coef * Rational(t.sig().metric_sign(i)));
                    }
            s.set(i, j, std::move(entry));
        }
    return s;
}

/// The vanishing equivalence: the cubic map is identically zero exactly when
/// the tensor is.
struct VanishingEquivalenceReport {
    bool map_zero = false;
    bool tensor_zero = false;
    bool equivalent() const { return map_zero == tensor_zero; }
};

inline VanishingEquivalenceReport vanishing_equivalence_report(const CovDerivTensor& t) {
    VanishingEquivalenceReport rep;
    rep.map_zero = szabo_polymap(t).is_zero();
    rep.tensor_zero = t.is_zero();
    return rep;
}

/// Index-wise pushforward of the 5-tensor by an invertible map: the new
/// tensor evaluates old arguments through the inverse,
/// (A.T)(x1..x5) = T(A^{-1}x1, ..., A^{-1}x5). One index contracted at a time.
inline CovDerivTensor pushforward(const CovDerivTensor& t, const RatMat& a) {
    const std::size_t m = t.dim();
    if (a.rows() != m || a.cols() != m) throw std::invalid_argument("pushforward: dimension mismatch");
    const auto ainv_opt = a.inverse();
    if (!ainv_opt) throw std::invalid_argument("pushforward: map is singular");
    const RatMat& ainv = *ainv_opt;
    CovDerivTensor out = t;
    for (std::size_t pos = 0; pos < 5; ++pos) {
        CovDerivTensor next(t.sig());
        std::array<std::size_t, 5> ix{};
        for (ix[0] = 0; ix[0] < m; ++ix[0])
            for (ix[1] = 0; ix[1] < m; ++ix[1])
                for (ix[2] = 0; ix[2] < m; ++ix[2])
                    for (ix[3] = 0; ix[3] < m; ++ix[3])
                        for (ix[4] = 0; ix[4] < m; ++ix[4]) {
                            Rational acc(0);
                            auto jx = ix;
                            for (std::size_t r = 0; r < m; ++r) {
                                jx[pos] = r;
                                const Rational& f = ainv(r, ix[pos]);
                                if (f == 0) continue;
                                acc += out.at(jx[0], jx[1], jx[2], jx[3], jx[4]) * f;
                            }
                            next.at(ix[0], ix[1], ix[2], ix[3], ix[4]) = acc;
                        }
        out = std::move(next);
    }
    return out;
}

} // namespace nullcone

#endif
