#ifndef NULLCONE_JSON_IO_HPP
#define NULLCONE_JSON_IO_HPP

#include "nullcone/curvature.hpp"
#include "nullcone/obstruction.hpp"
#include "nullcone/polydep.hpp"
#include "nullcone/spectral.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace nullcone {

using nlohmann::json;

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& msg) : std::invalid_argument(msg) {}
};

inline json signature_to_json(const Signature& s) { return json::array({s.p, s.q}); }

inline Signature signature_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
        throw ParseError("signature: expected [p, q] with nonnegative integers");
    return Signature(j[0].get<unsigned>(), j[1].get<unsigned>());
}

inline json multipoly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["exp"] = e;
        term["coef"] = rational_to_string(c);
        terms.push_back(std::move(term));
    }
    return json{{"vars", p.vars()}, {"terms", std::move(terms)}};
}

inline MultiPoly multipoly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw ParseError("polynomial: expected {vars, terms}");
    const std::size_t vars = j.at("vars").get<std::size_t>();
    MultiPoly p(vars);
    for (const auto& term : j.at("terms")) {
        const auto& je = term.at("exp");
        if (je.size() != vars) throw ParseError("polynomial: exponent length mismatch");
        Exponents e;
        for (const auto& x : je) e.push_back(x.get<unsigned>());
        p.add_term(std::move(e), rational_from_string(term.at("coef").get<std::string>()));
    }
    return p;
}

inline json tensor_to_json(const CovDerivTensor& t) {
    json entries = json::array();
    const std::size_t m = t.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    for (std::size_t n = 0; n < m; ++n) {
                        const Rational& c = t.at(i, j, k, l, n);
                        if (c == 0) continue;
                        entries.push_back(json{{"idx", {i, j, k, l, n}},
                                               {"coef", rational_to_string(c)}});
                    }
    return json{{"signature", signature_to_json(t.sig())}, {"entries", std::move(entries)}};
}

inline CovDerivTensor tensor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("signature") || !j.contains("entries"))
        throw ParseError("tensor: expected {signature, entries}");
    CovDerivTensor t{signature_from_json(j.at("signature"))};
    const std::size_t m = t.dim();
    for (const auto& entry : j.at("entries")) {
        const auto& ix = entry.at("idx");
        if (ix.size() != 5) throw ParseError("tensor: index tuple must have five entries");
        std::array<std::size_t, 5> idx{};
        for (std::size_t a = 0; a < 5; ++a) {
            idx[a] = ix[a].get<std::size_t>();
            if (idx[a] >= m) throw ParseError("tensor: index out of range");
        }
        t.at(idx[0], idx[1], idx[2], idx[3], idx[4]) =
            rational_from_string(entry.at("coef").get<std::string>());
    }
    return t;
}

inline json operator_to_json(const RatMat& a, const Signature& sig) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(rational_to_string(a(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"signature", signature_to_json(sig)}, {"entries", std::move(rows)}};
}

inline std::pair<RatMat, Signature> operator_from_json(const json& j) {
    if (!j.is_object() || !j.contains("signature") || !j.contains("entries"))
        throw ParseError("operator: expected {signature, entries}");
    const Signature sig = signature_from_json(j.at("signature"));
    const auto& rows = j.at("entries");
    const std::size_t m = sig.m();
    if (rows.size() != m) throw ParseError("operator: row count mismatch");
    RatMat a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != m) throw ParseError("operator: column count mismatch");
        for (std::size_t jj = 0; jj < m; ++jj)
            a(i, jj) = rational_from_string(rows[i][jj].get<std::string>());
    }
    return {a, sig};
}

inline json polymap_to_json(const HomPolyMap& s) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.dim(); ++j) row.push_back(multipoly_to_json(s.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"signature", signature_to_json(s.sig())},
                {"degree", s.degree()},
                {"entries", std::move(rows)}};
}

inline HomPolyMap polymap_from_json(const json& j) {
    if (!j.is_object() || !j.contains("signature") || !j.contains("degree") || !j.contains("entries"))
        throw ParseError("polymap: expected {signature, degree, entries}");
    const Signature sig = signature_from_json(j.at("signature"));
    HomPolyMap s(sig, j.at("degree").get<unsigned>());
    const auto& rows = j.at("entries");
    const std::size_t m = sig.m();
    if (rows.size() != m) throw ParseError("polymap: row count mismatch");
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != m) throw ParseError("polymap: column count mismatch");
        for (std::size_t jj = 0; jj < m; ++jj) {
            try {
                s.set(i, jj, multipoly_from_json(rows[i][jj]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("polymap entry invalid: ") + e.what());
            }
        }
    }
    return s;
}

inline json family_to_json(const PolyMapFamily& f) {
    json maps = json::array();
    for (const auto& x : f.maps) {
        json comps = json::array();
        for (const auto& c : x) comps.push_back(multipoly_to_json(c));
        maps.push_back(std::move(comps));
    }
    return json{{"signature", signature_to_json(f.sig)}, {"w", f.w}, {"maps", std::move(maps)}};
}

inline PolyMapFamily family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("signature") || !j.contains("w") || !j.contains("maps"))
        throw ParseError("family: expected {signature, w, maps}");
    PolyMapFamily f{signature_from_json(j.at("signature")), j.at("w").get<std::size_t>(), {}};
    for (const auto& mp : j.at("maps")) {
        std::vector<MultiPoly> comps;
        for (const auto& c : mp) comps.push_back(multipoly_from_json(c));
        f.maps.push_back(std::move(comps));
    }
    try {
        f.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("family invalid: ") + e.what());
    }
    return f;
}

inline json trace_to_json(const ProofTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        json inputs = json::object();
        for (const auto& [k, v] : s.inputs) inputs[k] = v;
        json witness = json::object();
        for (const auto& [k, v] : s.witness) witness[k] = v;
        steps.push_back(json{{"rule", s.rule},
                             {"inputs", std::move(inputs)},
                             {"conclusion", s.conclusion},
                             {"witness", std::move(witness)}});
    }
    return json{{"steps", std::move(steps)},
                {"contradiction", t.contradiction},
                {"verdict", t.verdict}};
}

inline ProofTrace trace_from_json(const json& j) {
    ProofTrace t;
    for (const auto& js : j.at("steps")) {
        TraceStep s;
        s.rule = js.at("rule").get<std::string>();
        for (const auto& [k, v] : js.at("inputs").items()) s.inputs[k] = v.get<std::int64_t>();
        s.conclusion = js.at("conclusion").get<std::string>();
        if (js.contains("witness"))
            for (const auto& [k, v] : js.at("witness").items())
                s.witness[k] = v.get<std::string>();
        t.steps.push_back(std::move(s));
    }
    t.contradiction = j.at("contradiction").get<bool>();
    t.verdict = j.at("verdict").get<std::string>();
    return t;
}

inline json bundle_descriptor_to_json(const BundleDescriptor& b) {
    json out{{"n", b.base_n}, {"rank", b.rank}};
    if (b.subbundle_of_trivial) out["subbundle_of_trivial"] = *b.subbundle_of_trivial;
    out["self_tensor_line"] = b.self_tensor_line;
    out["nowhere_zero_section"] = b.nowhere_zero_section;
    if (b.restriction_self_tensor_k) out["restriction_self_tensor_k"] = *b.restriction_self_tensor_k;
    if (b.sw) out["sw"] = b.sw->to_string();
    json res = json::array();
    for (const auto& r : b.ko_residues) res.push_back(r.str());
    out["ko_residues"] = std::move(res);
    return out;
}

} // namespace nullcone

#endif
