#pragma once
#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"

namespace gridhom {

struct Bigrading {
    int maslov = 0;
    int alexander = 0;
    bool operator==(const Bigrading& o) const {
        return maslov == o.maslov && alexander == o.alexander;
    }
    bool operator<(const Bigrading& o) const {
        if (maslov != o.maslov) return maslov < o.maslov;
        return alexander < o.alexander;
    }
};

// A cyclic torsion summand F[U]/U^order with generator in the given bigrading.
struct TorsionSummand {
    Bigrading at;
    int order = 1; // > 0
    bool operator==(const TorsionSummand& o) const { return at == o.at && order == o.order; }
    bool operator<(const TorsionSummand& o) const {
        if (!(at == o.at)) return at < o.at;
        return order < o.order;
    }
};

// Bigraded finitely generated F[U]-module, decomposed.  For a knot's GH^-
// there is exactly one tower; tensor products can momentarily carry more, so
// towers is a list.
struct UModule {
    std::vector<Bigrading> towers;
    std::vector<TorsionSummand> torsion;

    void normalize() {
        std::sort(towers.begin(), towers.end());
        std::sort(torsion.begin(), torsion.end());
    }
    bool operator==(const UModule& o) const {
        return towers == o.towers && torsion == o.torsion;
    }

    int tau() const {
        if (towers.size() != 1)
            throw PreconditionViolated("tau needs exactly one tower, found " +
                                       std::to_string(towers.size()));
        return -towers[0].alexander;
    }
};

// Graded tensor product over F[U] including Tor_1 (Kunneth correction).
// For cyclics: F[U]/U^a (x) F[U]/U^b = F[U]/U^min at summed bigrading, and
// Tor_1 = F[U]/U^min shifted by (1-2*max, -max) since the Koszul generator
// for U^max carries bidegree (-2max, -max) and homological degree 1.
inline UModule tensor_and_tor(const UModule& a, const UModule& b) {
    UModule r;
    auto add = [&](Bigrading g) { r.towers.push_back(g); };
    for (const auto& ta : a.towers)
        for (const auto& tb : b.towers)
            add({ta.maslov + tb.maslov, ta.alexander + tb.alexander});
    for (const auto& ta : a.towers)
        for (const auto& sb : b.torsion)
            r.torsion.push_back({{ta.maslov + sb.at.maslov, ta.alexander + sb.at.alexander},
                                 sb.order});
    for (const auto& sa : a.torsion)
        for (const auto& tb : b.towers)
            r.torsion.push_back({{sa.at.maslov + tb.maslov, sa.at.alexander + tb.alexander},
                                 sa.order});
    for (const auto& sa : a.torsion)
        for (const auto& sb : b.torsion) {
            int lo = std::min(sa.order, sb.order);
            int hi = std::max(sa.order, sb.order);
            int m = sa.at.maslov + sb.at.maslov;
            int al = sa.at.alexander + sb.at.alexander;
            r.torsion.push_back({{m, al}, lo});                         // Tor_0
            r.torsion.push_back({{m + 1 - 2 * hi, al - hi}, lo});       // Tor_1
        }
    r.normalize();
    return r;
}

} // namespace gridhom
