#include "nilbox/classify.hpp"

namespace nilbox {

const char* kind_name(SingKind k) {
    switch (k) {
        case SingKind::NonIsolatedAxis: return "non-isolated-axis";
        case SingKind::Saddle: return "saddle";
        case SingKind::CenterOrFocus: return "center-or-focus";
        case SingKind::Cusp: return "cusp";
        case SingKind::SaddleNode: return "saddle-node";
        case SingKind::EllipticHyperbolic: return "elliptic-hyperbolic";
        case SingKind::Node: return "node";
    }
    return "?";
}

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::Attracting: return "attracting";
        case Stability::Repelling: return "repelling";
        case Stability::NotApplicable: return "n/a";
    }
    return "?";
}

SingularityClass classify(const CharData& cd) {
    SingularityClass sc{SingKind::NonIsolatedAxis, Stability::NotApplicable, std::nullopt, ""};
    if (!cd.m) {
        // F ≡ 0 up to the truncation order: cases (1) and (2)
        sc.case_label = cd.n ? "2" : "1";
        return sc;
    }
    int m = *cd.m;
    sc.multiplicity = m;
    const bool m_odd = (m % 2 != 0);
    if (!cd.n) {
        // G ≡ 0: case (3)
        if (!m_odd) {
            sc.kind = SingKind::Cusp;
            sc.case_label = "3.ii";
        } else if (cd.a > 0) {
            sc.kind = SingKind::Saddle;
            sc.case_label = "3.i";
        } else {
            sc.kind = SingKind::CenterOrFocus;
            sc.case_label = "3.i";
        }
        return sc;
    }
    int n = *cd.n;
    // case (4)
    if (!m_odd) {
        if (m < 2 * n + 1) {
            sc.kind = SingKind::Cusp;
            sc.case_label = "4.i1";
        } else {  // m even so m ≠ 2n+1
            sc.kind = SingKind::SaddleNode;
            sc.case_label = "4.i2";
        }
        return sc;
    }
    if (cd.a > 0) {
        sc.kind = SingKind::Saddle;
        sc.case_label = "4.ii";
        return sc;
    }
    // m odd, a < 0
    Rat disc = cd.b * cd.b + 4 * cd.a * Rat(n + 1);
    bool node_side = (m > 2 * n + 1) || (m == 2 * n + 1 && disc >= 0);
    if (!node_side) {
        sc.kind = SingKind::CenterOrFocus;
        sc.case_label = "4.iii1";
        return sc;
    }
    if (n % 2 != 0) {
        sc.kind = SingKind::EllipticHyperbolic;
        sc.case_label = "4.iii2";
        return sc;
    }
    sc.kind = SingKind::Node;
    sc.case_label = "4.iii3";
    sc.stability = cd.b > 0 ? Stability::Repelling : Stability::Attracting;
    return sc;
}

int node_cyclicity_lower_bound(int m) {
    if (m % 2 == 0 || m < 3) throw input_error("node cyclicity bound requires odd m >= 3");
    return (m - 1) / 2;
}

int cusp_cyclicity_bound(int n) {
    if (n < 1) throw input_error("cusp cyclicity bound requires n >= 1");
    int best = 0;
    for (int L = 1; 3 * L / 2 <= n; ++L) best = L;
    return best;
}

}  // namespace nilbox
