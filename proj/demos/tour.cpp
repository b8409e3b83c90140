// A short tour of the library: generate an exact curvature-derivative
// tensor, derive its cubic operator map, certify class membership, probe
// behavior over the nullcone, and finish with a signature verdict.

#include "nullcone/nullcone.hpp"

#include <iostream>

using namespace nullcone;

int main() {
    const Signature sig(1, 2);

    // A seeded exact member of the symmetry class.
    const CovDerivTensor tensor = random_symmetric_tensor(sig, 42);
    std::cout << "symmetry violations: " << check_symmetries(tensor).size() << "\n";

    // The associated degree-3 operator map and its membership certificate.
    const HomPolyMap s = szabo_polymap(tensor);
    const PClassReport membership = pclass_check(s);
    std::cout << "class member: " << (membership.member() ? "yes" : "no")
              << " (degree " << membership.degree << ")\n";

    // Evaluation is exact: the operator at v kills v.
    const std::vector<Rational> v{Rational(3), Rational(1), Rational(2)};
    const RatMat sv = s.evaluate(v);
    bool kills = true;
    for (const auto& x : sv.apply(v))
        if (x != 0) kills = false;
    std::cout << "S(v) v = 0: " << (kills ? "yes" : "no") << "\n";

    // Behavior over the nullcone: the demo map with a null image direction
    // has vanishing order two.
    const HomPolyMap demo = rank_one_null_image_map(sig);
    const auto order = vanishing_order_on_nullcone(demo);
    std::cout << "demo map vanishing order over the cone: " << *order.order << "\n";

    // Rank bookkeeping across spacelike, timelike, and null regimes.
    const GluedRankReport ranks = glued_rank_analysis(demo);
    std::cout << "ranks (spacelike/timelike/null): " << ranks.r_plus << "/" << ranks.r_minus
              << "/" << ranks.r_null << "\n";

    // The symbolic verdict for a signature, with a replayable trace.
    const WolfResult verdict = wolf_verdict(3, 3);
    std::cout << "signature (3,3): " << verdict.trace.verdict
              << " (trace replays: " << (replay_trace(verdict.trace) ? "yes" : "no") << ")\n";
    return 0;
}
