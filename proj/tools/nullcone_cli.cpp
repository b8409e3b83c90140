// Command-line surface over the library: exact JSON in, exact JSON or text
// out, deterministic for a fixed (input, seed, format).
//
// Exit codes: 0 success or positive verdict, 1 verified negative,
// 2 input error, 3 inapplicable hypothesis.

#include <CLI11.hpp>

#include "nullcone/nullcone.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace nullcone;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInapplicable = 3;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

std::vector<Rational> parse_vector(const std::string& text, std::size_t expect) {
    std::vector<Rational> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(rational_from_string(tok));
    if (v.size() != expect)
        throw ParseError("vector has " + std::to_string(v.size()) + " entries, expected " +
                         std::to_string(expect));
    return v;
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string render_trace(const ProofTrace& t) {
    std::ostringstream os;
    os << "verdict: " << t.verdict << "\n";
    for (const auto& s : t.steps) {
        os << "  [" << s.rule << "]";
        for (const auto& [k, v] : s.inputs) os << " " << k << "=" << v;
        os << ": " << s.conclusion << "\n";
    }
    return os.str();
}

std::string render_vector(const std::vector<Rational>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << rational_to_string(v[i]);
    }
    return os.str();
}

int cmd_check_symmetries(const std::string& file, bool as_json) {
    const CovDerivTensor t = tensor_from_json(load_json(file));
    const auto violations = check_symmetries(t);
    json out{{"command", "check-symmetries"},
             {"signature", signature_to_json(t.sig())},
             {"ok", violations.empty()},
             {"violation_count", violations.size()}};
    json sample = json::array();
    for (std::size_t i = 0; i < violations.size() && i < 10; ++i)
        sample.push_back(json{{"identity", violations[i].identity},
                              {"index", violations[i].index}});
    out["violations"] = std::move(sample);
    std::ostringstream text;
    if (violations.empty()) {
        text << "symmetries hold\n";
    } else {
        text << violations.size() << " violated identities; first witnesses:\n";
        for (std::size_t i = 0; i < violations.size() && i < 5; ++i) {
            text << "  " << violations[i].identity << " at (";
            for (std::size_t k = 0; k < 5; ++k)
                text << violations[i].index[k] << (k + 1 < 5 ? "," : ")\n");
        }
    }
    emit(out, as_json, text.str());
    return violations.empty() ? kExitOk : kExitNegative;
}

int cmd_szabo(const std::string& file, const std::string& at, bool poly, bool as_json) {
    const CovDerivTensor t = tensor_from_json(load_json(file));
    if (poly == !at.empty())
        throw ParseError("szabo: pass exactly one of --at or --poly");
    if (poly) {
        const HomPolyMap s = szabo_polymap(t);
        std::ostringstream text;
        text << "degree-3 operator map with " << s.dim() << "x" << s.dim() << " entries\n";
        emit(polymap_to_json(s), as_json, text.str());
        return kExitOk;
    }
    const auto v = parse_vector(at, t.dim());
    const RatMat s = szabo_at(t, v);
    std::ostringstream text;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            text << rational_to_string(s(i, j)) << (j + 1 < s.cols() ? " " : "\n");
    emit(operator_to_json(s, t.sig()), as_json, text.str());
    return kExitOk;
}

int cmd_pclass(const std::string& file, bool as_json) {
    const HomPolyMap s = polymap_from_json(load_json(file));
    const PClassReport rep = pclass_check(s);
    json out{{"command", "pclass"},
             {"signature", signature_to_json(s.sig())},
             {"degree", rep.degree},
             {"self_adjoint", rep.self_adjoint_ok},
             {"annihilates_argument", rep.annihilates_ok},
             {"odd_degree", rep.odd_degree_ok},
             {"member", rep.member()}};
    if (rep.member()) out["n"] = rep.n;
    std::ostringstream text;
    text << (rep.member() ? "member" : "not a member") << " (degree " << rep.degree;
    if (rep.member()) text << ", n = " << rep.n;
    text << ")\n";
    if (!rep.self_adjoint_ok) text << "  self-adjointness fails\n";
    if (!rep.annihilates_ok) text << "  argument is not annihilated\n";
    if (!rep.odd_degree_ok) text << "  degree is even\n";
    emit(out, as_json, text.str());
    return rep.member() ? kExitOk : kExitNegative;
}

int cmd_nilpotency(const std::string& file, bool as_json) {
    const HomPolyMap s = polymap_from_json(load_json(file));
    const auto pw = pointwise_nilpotent_on_nullcone(s);
    const auto vo = vanishing_order_on_nullcone(s);
    json out{{"command", "nilpotency"},
             {"signature", signature_to_json(s.sig())},
             {"pointwise_nilpotent", pw.nilpotent}};
    if (pw.failing_power) out["failing_power"] = *pw.failing_power;
    if (vo.order) out["vanishing_order"] = *vo.order;
    if (vo.odd_k) out["odd_power_diagnostic"] = *vo.odd_k;
    std::ostringstream text;
    text << "pointwise nilpotent over the nullcone: " << (pw.nilpotent ? "yes" : "no") << "\n";
    if (pw.failing_power) text << "  first failing trace power: " << *pw.failing_power << "\n";
    if (vo.order)
        text << "vanishing order over the nullcone: " << *vo.order << "\n";
    else
        text << "no power up to the dimension vanishes over the nullcone\n";
    if (vo.odd_k) text << "  odd power for the descent diagnostic: " << *vo.odd_k << "\n";
    emit(out, as_json, text.str());
    return pw.nilpotent ? kExitOk : kExitNegative;
}

int cmd_dependence(const std::string& file, std::uint64_t seed, bool as_json) {
    const PolyMapFamily f = family_from_json(load_json(file));
    const MinorIdeal ideal = minor_generators(f);
    json out{{"command", "dependence"},
             {"signature", signature_to_json(f.sig)},
             {"seed", seed},
             {"generator_count", ideal.generators.size()}};
    if (is_zero_ideal(ideal)) {
        out["verdict"] = "zero ideal";
        emit(out, as_json, "zero ideal: the maps are dependent over the whole space\n");
        return kExitOk;
    }
    const auto k = dependence_degree(f);
    out["dependence_degree"] = *k;
    std::ostringstream text;
    text << "dependence degree over the nullcone: " << *k << "\n";
    if (*k > 0) {
        const DescentChain chain = descend_to_zero(f, seed);
        json steps = json::array();
        for (std::size_t i = 0; i < chain.certs.size(); ++i) {
            const auto& c = chain.certs[i];
            steps.push_back(json{{"replaced_map", c.unit_position},
                                 {"base_point", render_vector(c.base_point)},
                                 {"degree_before", chain.degrees[i]},
                                 {"degree_after", chain.degrees[i + 1]}});
            text << "  step " << i + 1 << ": replaced map " << c.unit_position
                 << " using base point (" << render_vector(c.base_point) << "), degree "
                 << chain.degrees[i] << " -> " << chain.degrees[i + 1] << "\n";
        }
        out["descent"] = std::move(steps);
        out["final_degree"] = chain.degrees.back();
        text << "descent reached degree 0 in " << chain.certs.size() << " steps\n";
    } else {
        text << "no descent needed\n";
    }
    emit(out, as_json, text.str());
    return kExitOk;
}

int cmd_spectral(const std::string& file, const std::string& base, std::uint64_t seed,
                 bool as_json) {
    const HomPolyMap s = polymap_from_json(load_json(file));
    std::vector<Rational> v0(s.dim(), Rational(0));
    v0[0] = 1;
    if (!base.empty()) v0 = parse_vector(base, s.dim());
    const ProfileResult prof = spectral_profile(s, v0);
    json out{{"command", "spectral"},
             {"signature", signature_to_json(s.sig())},
             {"seed", seed},
             {"base_point", render_vector(v0)}};
    std::ostringstream text;
    if (prof.profile) {
        out["profile"] = json{{"l", prof.profile->l}};
        json sig_list = json::array();
        for (const auto& x : prof.profile->sigma) sig_list.push_back(rational_to_string(x));
        out["profile"]["sigma"] = std::move(sig_list);
        out["profile"]["mu_minus"] = prof.profile->mu_minus.to_string();
        text << "profile: l = " << prof.profile->l << ", minimal polynomial "
             << prof.profile->mu_minus.to_string() << "\n";
        if (prof.profile->l >= 1 && pclass_check(s).member()) {
            const bool eq = annihilator_identity_check(s, *prof.profile);
            out["annihilator_identity"] = eq;
            text << "annihilator identity: " << (eq ? "holds" : "fails") << "\n";
        }
    } else {
        out["profile_diagnosis"] = prof.diagnosis;
        text << "no profile: " << prof.diagnosis << "\n";
    }
    const GluedRankReport ranks = glued_rank_analysis(s, seed);
    out["ranks"] = json{{"spacelike", ranks.r_plus},
                        {"timelike", ranks.r_minus},
                        {"nullcone", ranks.r_null},
                        {"spacelike_constant", ranks.plus_constant},
                        {"timelike_constant", ranks.minus_constant},
                        {"timelike_equals_spacelike", ranks.minus_equals_plus},
                        {"nullcone_below_spacelike", ranks.null_below_plus},
                        {"spacelike_samples", ranks.plus_ranks},
                        {"timelike_samples", ranks.minus_ranks}};
    text << "ranks: spacelike " << ranks.r_plus << ", timelike " << ranks.r_minus
         << ", nullcone " << ranks.r_null << "\n";
    text << "  timelike = spacelike: " << (ranks.minus_equals_plus ? "observed" : "violated")
         << "; nullcone < spacelike: " << (ranks.null_below_plus ? "observed" : "violated")
         << "\n";
    emit(out, as_json, text.str());
    return kExitOk;
}

int cmd_obstruction(int case_id, unsigned n, std::uint64_t r, std::uint64_t k,
                    std::uint64_t rank_max, bool as_json) {
    CaseResult res;
    switch (case_id) {
        case 1: res = techn_case_double(n, r); break;
        case 2: res = techn_case_section(n, r, rank_max); break;
        case 3: res = techn_case_restricted(n, k, r); break;
        default: throw ParseError("obstruction: --case must be 1, 2, or 3");
    }
    const bool replays = replay_trace(res.trace);
    json out{{"command", "obstruction"},
             {"case", case_id},
             {"n", n},
             {"r", r},
             {"verdict", res.trace.verdict},
             {"replays", replays},
             {"trace", trace_to_json(res.trace)}};
    if (case_id == 3) out["k"] = k;
    if (case_id == 2) out["rank_max"] = rank_max;
    std::ostringstream text;
    text << render_trace(res.trace);
    text << "replay: " << (replays ? "ok" : "FAILED") << "\n";
    emit(out, as_json, text.str());
    if (!replays) return kExitNegative;
    switch (res.verdict) {
        case CaseVerdict::infeasible:
        case CaseVerdict::consistent: return kExitOk;
        case CaseVerdict::hypothesis_impossible: return kExitNegative;
    }
    return kExitNegative;
}

int cmd_wolf(unsigned p, unsigned q, bool as_json) {
    const WolfResult res = wolf_verdict(p, q);
    const bool replays = replay_trace(res.trace);
    json out{{"command", "wolf"},
             {"signature", json::array({p, q})},
             {"verdict", res.verdict == WolfVerdict::locally_symmetric ? "locally symmetric"
                                                                       : "inconclusive"},
             {"replays", replays},
             {"trace", trace_to_json(res.trace)}};
    std::ostringstream text;
    text << render_trace(res.trace) << "replay: " << (replays ? "ok" : "FAILED") << "\n";
    emit(out, as_json, text.str());
    if (!replays) return kExitNegative;
    return res.verdict == WolfVerdict::locally_symmetric ? kExitOk : kExitInapplicable;
}

PolyMapFamily seeded_cli_family(Signature sig, std::size_t w, std::size_t r, std::uint64_t seed) {
    const std::size_t m = sig.m();
    const MultiPoly q = QuadForm{sig}.poly();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> powers(0, 2);
    std::uniform_int_distribution<int> coef(1, 3);
    PolyMapFamily f{sig, w, {}};
    if (r == 0 || r > w) throw ParseError("gen-fixture: family needs 1 <= maps <= w");
    f.maps.assign(r, std::vector<MultiPoly>(w, MultiPoly::zero(m)));
    for (std::size_t j = 0; j < r; ++j) {
        MultiPoly entry = MultiPoly::constant(m, Rational(coef(rng)));
        const int a = powers(rng);
        for (int t = 0; t < a; ++t) entry = entry * q;
        f.maps[j][j] = entry;
    }
    std::uniform_int_distribution<std::size_t> pick(0, r - 1);
    std::uniform_int_distribution<std::size_t> var(0, m - 1);
    for (int step = 0; step < 3; ++step) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const MultiPoly c = MultiPoly::variable(m, var(rng));
        for (std::size_t comp = 0; comp < w; ++comp) f.maps[i][comp] += c * f.maps[j][comp];
    }
    return f;
}

int cmd_gen_fixture(const std::string& kind, Signature sig, std::uint64_t seed, bool rank_two,
                    std::size_t w, std::size_t r) {
    json out;
    if (kind == "tensor") {
        out = tensor_to_json(random_symmetric_tensor(sig, seed));
    } else if (kind == "szabo-polymap") {
        out = polymap_to_json(szabo_polymap(random_symmetric_tensor(sig, seed)));
    } else if (kind == "null-image-map") {
        out = polymap_to_json(rank_one_null_image_map(sig));
    } else if (kind == "plane-map") {
        out = polymap_to_json(embedded_plane_map(sig));
    } else if (kind == "split-map") {
        out = polymap_to_json(split_spectrum_map(sig));
    } else if (kind == "family") {
        out = family_to_json(seeded_cli_family(sig, w, r, seed));
    } else if (kind == "nilpotent-operator") {
        const InnerSpace sp{sig};
        out = operator_to_json(cubic_nilpotent_fixture(sp, seed, rank_two), sig);
    } else {
        throw ParseError("gen-fixture: unknown kind \"" + kind + "\"");
    }
    out["seed"] = seed;
    out["kind"] = kind;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact curvature-operator calculator over the nullcone"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for sampled witnesses (default 1)");

    std::string file, at, base, kind = "tensor", sigopt;
    bool poly = false, rank_two = true;
    unsigned n = 0;
    std::uint64_t r = 0, k = 0, rank_max = 0;
    std::size_t fam_w = 3, fam_r = 2;
    int case_id = 0;

    auto* c_sym = app.add_subcommand("check-symmetries", "verify tensor identities");
    c_sym->add_option("file", file)->required();

    auto* c_szb = app.add_subcommand("szabo", "operator of a tensor, at a point or as a map");
    c_szb->add_option("file", file)->required();
    c_szb->add_option("--at", at, "evaluation point, comma-separated rationals");
    c_szb->add_flag("--poly", poly, "emit the degree-3 operator map");

    auto* c_pcl = app.add_subcommand("pclass", "class membership of an operator map");
    c_pcl->add_option("file", file)->required();

    auto* c_nil = app.add_subcommand("nilpotency", "nullcone nilpotency and vanishing order");
    c_nil->add_option("file", file)->required();

    auto* c_dep = app.add_subcommand("dependence", "dependence degree and descent chain");
    c_dep->add_option("file", file)->required();

    auto* c_spc = app.add_subcommand("spectral", "profile and rank analysis");
    c_spc->add_option("file", file)->required();
    c_spc->add_option("--base", base, "unit timelike base point (default e_1)");

    auto* c_obs = app.add_subcommand("obstruction", "rank case analyses with traces");
    c_obs->add_option("--case", case_id, "1|2|3")->required();
    c_obs->add_option("--n", n, "base projective space index")->required();
    c_obs->add_option("--r", r, "bundle rank")->required();
    c_obs->add_option("--k", k, "restricted subspace index (case 3)");
    c_obs->add_option("--rank-max", rank_max, "ambient rank bound (case 2, default n+1)");

    auto* c_wolf = app.add_subcommand("wolf", "verdict for a signature");
    c_wolf->add_option("--signature", sigopt, "p,q")->required();

    auto* c_gen = app.add_subcommand("gen-fixture", "emit a seeded exact fixture");
    c_gen->add_option(
        "--kind", kind,
        "tensor|szabo-polymap|null-image-map|plane-map|split-map|family|nilpotent-operator");
    c_gen->add_option("--signature", sigopt, "p,q")->required();
    c_gen->add_flag("--rank-two,!--rank-one", rank_two,
                    "nilpotent operator rank (default rank-two)");
    c_gen->add_option("--w", fam_w, "family codomain dimension (default 3)");
    c_gen->add_option("--maps", fam_r, "family size (default 2)");

    CLI11_PARSE(app, argc, argv);
    const bool as_json = format == "json";

    auto parse_sig = [&](const std::string& text) {
        const auto comma = text.find(',');
        if (comma == std::string::npos) throw ParseError("signature: expected p,q");
        try {
            const int pp = std::stoi(text.substr(0, comma));
            const int qq = std::stoi(text.substr(comma + 1));
            if (pp < 0 || qq < 0) throw ParseError("signature: negative part");
            return Signature(unsigned(pp), unsigned(qq));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("signature: expected p,q");
        }
    };

    try {
        if (c_sym->parsed()) return cmd_check_symmetries(file, as_json);
        if (c_szb->parsed()) return cmd_szabo(file, at, poly, as_json);
        if (c_pcl->parsed()) return cmd_pclass(file, as_json);
        if (c_nil->parsed()) return cmd_nilpotency(file, as_json);
        if (c_dep->parsed()) return cmd_dependence(file, seed, as_json);
        if (c_spc->parsed()) return cmd_spectral(file, base, seed, as_json);
        if (c_obs->parsed()) {
            if (case_id == 2 && rank_max == 0) rank_max = std::uint64_t(n) + 1;
            return cmd_obstruction(case_id, n, r, k, rank_max, as_json);
        }
        if (c_wolf->parsed()) {
            const Signature s = parse_sig(sigopt);
            return cmd_wolf(s.p, s.q, as_json);
        }
        if (c_gen->parsed())
            return cmd_gen_fixture(kind, parse_sig(sigopt), seed, rank_two, fam_w, fam_r);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InadmissibleSignature& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const InapplicableError& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const SymmetryError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
