#ifndef NULLCONE_POLYDEP_HPP
#define NULLCONE_POLYDEP_HPP

#include "nullcone/matrix.hpp"
#include "nullcone/multipoly.hpp"
#include "nullcone/quadform.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nullcone {

/// A list of r polynomial maps into a w-dimensional space, viewed as the
/// columns of a w x r matrix over the polynomial ring.
struct PolyMapFamily {
    Signature sig;
    std::size_t w = 0;
    std::vector<std::vector<MultiPoly>> maps; // r maps, each of length w

    std::size_t r() const { return maps.size(); }

    void validate() const {
        if (maps.empty()) throw std::invalid_argument("PolyMapFamily: no maps");
        if (r() > w) throw std::invalid_argument("PolyMapFamily: more maps than codomain dimensions");
        for (const auto& x : maps) {
            if (x.size() != w) throw std::invalid_argument("PolyMapFamily: map length mismatch");
            for (const auto& c : x)
                if (c.vars() != sig.m())
                    throw std::invalid_argument("PolyMapFamily: variable count mismatch");
        }
    }

    RatMat evaluate(const std::vector<Rational>& v) const {
        RatMat x(w, r());
        for (std::size_t j = 0; j < r(); ++j)
            for (std::size_t i = 0; i < w; ++i) x(i, j) = maps[j][i].evaluate(v);
        return x;
    }
};

/// Generators of the ideal of maximal minors, one per row subset in
/// canonical (lexicographic) order; zero generators are kept in place.
struct MinorIdeal {
    std::size_t w = 0, r = 0;
    std::vector<std::vector<std::size_t>> row_subsets;
    std::vector<MultiPoly> generators;
};

namespace detail {

inline void enumerate_subsets(std::size_t w, std::size_t r, std::size_t start,
                              std::vector<std::size_t>& cur,
                              std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == r) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (r - cur.size()) <= w; ++i) {
        cur.push_back(i);
        enumerate_subsets(w, r, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Cofactor expansion down the columns, memoized on the set of unused rows.
/// entry(i, j) is the (row, column) accessor of the square submatrix.
template <typename Entry>
MultiPoly memo_det(std::size_t n, std::size_t vars, Entry entry) {
    std::map<std::uint32_t, MultiPoly> memo;
    // Recursion over columns: at column c the bitmask holds the rows still free.
    auto rec = [&](auto&& self, std::size_t col, std::uint32_t free_rows) -> MultiPoly {
        if (col == n) return MultiPoly::constant(vars, Rational(1));
        auto it = memo.find(free_rows);
        if (it != memo.end()) return it->second;
        MultiPoly acc(vars);
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t bit = 1u << i;
            if (!(free_rows & bit)) continue; // used rows do not advance the sign
            const MultiPoly& e = entry(i, col);
            if (!e.is_zero()) {
                MultiPoly sub = self(self, col + 1, free_rows & ~bit);
                acc += (sign > 0 ? e * sub : (e * sub).scaled(Rational(-1)));
            }
            sign = -sign;
        }
        memo.emplace(free_rows, acc);
        return acc;
    };
    return rec(rec, 0, (n >= 32 ? ~0u : (1u << n) - 1u));
}

} // namespace detail

inline MinorIdeal minor_generators(const PolyMapFamily& f) {
    f.validate();
    MinorIdeal ideal;
    ideal.w = f.w;
    ideal.r = f.r();
    std::vector<std::size_t> cur;
    detail::enumerate_subsets(f.w, f.r(), 0, cur, ideal.row_subsets);
    ideal.generators.reserve(ideal.row_subsets.size());
    for (const auto& rows : ideal.row_subsets) {
        auto entry = [&](std::size_t i, std::size_t j) -> const MultiPoly& {
            return f.maps[j][rows[i]];
        };
        ideal.generators.push_back(detail::memo_det(f.r(), f.sig.m(), entry));
    }
    return ideal;
}

inline bool is_zero_ideal(const MinorIdeal& ideal) {
    for (const auto& g : ideal.generators)
        if (!g.is_zero()) return false;
    return true;
}

inline std::optional<std::size_t> first_nonzero_generator(const MinorIdeal& ideal) {
    for (std::size_t i = 0; i < ideal.generators.size(); ++i)
        if (!ideal.generators[i].is_zero()) return i;
    return std::nullopt;
}

/// Degree of linear dependence over the nullcone: the minimum q-adic
/// valuation over the nonzero minors, empty when the ideal is zero.
inline std::optional<unsigned> dependence_degree(const PolyMapFamily& f) {
    require_admissible(f.sig);
    const QuadForm qf{f.sig};
    const MinorIdeal ideal = minor_generators(f);
    std::optional<unsigned> k;
    for (const auto& g : ideal.generators) {
        const auto val = q_valuation(g, qf);
        if (!val) continue; // zero generator
        if (!k || *val < *k) k = *val;
    }
    return k;
}

/// Dependence at every null point: all minors lie in the ideal of the form,
/// i.e. the dependence degree is at least 1 (a zero ideal counts).
inline bool nullcone_dependent(const PolyMapFamily& f) {
    const auto k = dependence_degree(f);
    return !k || *k >= 1;
}

struct DependenceCertificate {
    std::vector<MultiPoly> coefficients; // one per map; combination lies in (q)
    std::vector<MultiPoly> quotient;     // y with sum c_j x_j = q * y
    std::size_t unit_position = 0;       // coefficient with q-valuation 0
    std::vector<Rational> base_point;    // null sample where the minor is nonzero
    std::vector<std::size_t> row_subset;
    std::vector<std::size_t> independent_columns;
};

struct CertificateError : std::runtime_error {
    explicit CertificateError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Builds the descent relation of the dependence argument: at a null point
/// where a maximal independent sub-family peaks, Cramer coefficients give
/// p_1 x_{c_1} + ... + p_s x_{c_s} - M x_t, which vanishes near the point on
/// the cone and is therefore exactly divisible by the form.
inline DependenceCertificate dependence_certificate(const PolyMapFamily& f, std::uint64_t seed = 7,
                                                    std::size_t sample_count = 50) {
    f.validate();
    require_admissible(f.sig);
    const QuadForm qf{f.sig};
    if (!nullcone_dependent(f))
        throw CertificateError("dependence_certificate: family is independent over the nullcone");
    const MinorIdeal ideal = minor_generators(f);
    if (is_zero_ideal(ideal))
        throw CertificateError("dependence_certificate: zero ideal, no certificate needed");

    const auto samples = null_samples(qf, sample_count, seed);
    std::vector<std::size_t> ranks(samples.size());
    std::size_t smax = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        ranks[i] = f.evaluate(samples[i]).rank();
        smax = std::max(smax, ranks[i]);
    }
    if (smax >= f.r())
        throw CertificateError("dependence_certificate: sampled rank contradicts dependence");

    for (std::size_t si = 0; si < samples.size(); ++si) {
        if (ranks[si] != smax) continue;
        const auto& v0 = samples[si];
        const RatMat x0 = f.evaluate(v0);

        // Greedy canonical independent columns at v0.
        std::vector<std::size_t> cols;
        {
            std::vector<std::vector<Rational>> acc;
            for (std::size_t j = 0; j < f.r() && cols.size() < smax; ++j) {
                acc.push_back(x0.column(j));
                if (rows_to_matrix(acc, f.w).rank() == acc.size())
                    cols.push_back(j);
                else
                    acc.pop_back();
            }
        }
        if (cols.size() != smax) continue;
        std::size_t target = 0;
        while (target < f.r() &&
               std::find(cols.begin(), cols.end(), target) != cols.end())
            ++target;
        if (target == f.r()) continue;

        // First row subset with a nonsingular evaluated minor.
        std::vector<std::vector<std::size_t>> subsets;
        std::vector<std::size_t> cur;
        detail::enumerate_subsets(f.w, smax, 0, cur, subsets);
        for (const auto& rows : subsets) {
            RatMat sub(smax, smax);
            for (std::size_t i = 0; i < smax; ++i)
                for (std::size_t j = 0; j < smax; ++j) sub(i, j) = x0(rows[i], cols[j]);
            if (sub.determinant() == 0) continue;

            auto minor_poly = [&](std::optional<std::size_t> replace_col) {
                auto entry = [&](std::size_t i, std::size_t j) -> const MultiPoly& {
                    const std::size_t col =
                        (replace_col && j == *replace_col) ? target : cols[j];
                    return f.maps[col][rows[i]];
                };
                return detail::memo_det(smax, f.sig.m(), entry);
            };

            const MultiPoly m_poly = minor_poly(std::nullopt);
            std::vector<MultiPoly> coeffs(f.r(), MultiPoly(f.sig.m()));
            for (std::size_t j = 0; j < smax; ++j) coeffs[cols[j]] = minor_poly(j);
            coeffs[target] = m_poly.scaled(Rational(-1));

            // Verify exact divisibility componentwise.
            std::vector<MultiPoly> quotient;
            quotient.reserve(f.w);
            bool ok = true;
            for (std::size_t comp = 0; comp < f.w && ok; ++comp) {
                MultiPoly combo(f.sig.m());
                for (std::size_t j = 0; j < f.r(); ++j) combo += coeffs[j] * f.maps[j][comp];
                auto d = divide_by_q(combo, qf);
                if (!d)
                    ok = false;
                else
                    quotient.push_back(std::move(*d));
            }
            if (!ok) continue;
            if (q_valuation(m_poly, qf) != 0u) continue;

            DependenceCertificate cert;
            cert.coefficients = std::move(coeffs);
            cert.quotient = std::move(quotient);
            cert.unit_position = target;
            cert.base_point = v0;
            cert.row_subset = rows;
            cert.independent_columns = cols;
            return cert;
        }
    }
    throw CertificateError("dependence_certificate: no valid base point among samples");
}

/// Replaces the certificate's unit column by the quotient map. The aligned
/// minors satisfy q * minor_new = c_unit * minor_old exactly, so the
/// dependence degree drops by exactly one.
inline PolyMapFamily descent_step(const PolyMapFamily& f, const DependenceCertificate& cert) {
    f.validate();
    const QuadForm qf{f.sig};
    if (cert.coefficients.size() != f.r() || cert.quotient.size() != f.w)
        throw CertificateError("descent_step: certificate shape mismatch");
    if (q_valuation(cert.coefficients[cert.unit_position], qf) != 0u)
        throw CertificateError("descent_step: unit coefficient lies in the ideal of the form");

    // Re-verify the defining identity sum c_j x_j = q * y.
    const MultiPoly q = qf.poly();
    for (std::size_t comp = 0; comp < f.w; ++comp) {
        MultiPoly combo(f.sig.m());
        for (std::size_t j = 0; j < f.r(); ++j) combo += cert.coefficients[j] * f.maps[j][comp];
        if (combo != q * cert.quotient[comp])
            throw CertificateError("descent_step: certificate identity fails");
    }

    PolyMapFamily next = f;
    next.maps[cert.unit_position] = cert.quotient;

    // Generator-level check: q * minor_new = c_unit * minor_old for each subset.
    const MinorIdeal before = minor_generators(f);
    const MinorIdeal after = minor_generators(next);
    const MultiPoly& cu = cert.coefficients[cert.unit_position];
    for (std::size_t g = 0; g < before.generators.size(); ++g)
        if (q * after.generators[g] != cu * before.generators[g])
            throw CertificateError("descent_step: minor scaling identity fails");
    return next;
}

struct DescentChain {
    std::vector<PolyMapFamily> families;      // starting family first, final last
    std::vector<DependenceCertificate> certs; // one per step
    std::vector<unsigned> degrees;            // dependence degree per family
};

/// Iterates descent until the dependence degree reaches zero. The degree
/// drops by exactly one per step, so the chain has exactly k steps.
inline DescentChain descend_to_zero(const PolyMapFamily& f, std::uint64_t seed = 7) {
    DescentChain chain;
    PolyMapFamily cur = f;
    auto k = dependence_degree(cur);
    if (!k) throw CertificateError("descend_to_zero: zero ideal");
    chain.families.push_back(cur);
    chain.degrees.push_back(*k);
    while (*k > 0) {
        DependenceCertificate cert = dependence_certificate(cur, seed);
        cur = descent_step(cur, cert);
        const auto k2 = dependence_degree(cur);
        if (!k2 || *k2 != *k - 1)
            throw CertificateError("descend_to_zero: degree did not drop by one");
        chain.certs.push_back(std::move(cert));
        chain.families.push_back(cur);
        chain.degrees.push_back(*k2);
        k = k2;
    }
    return chain;
}

} // namespace nullcone

#endif
