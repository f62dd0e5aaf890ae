#ifndef NILBOX_CLASSIFY_HPP
#define NILBOX_CLASSIFY_HPP

#include "nilbox/system.hpp"

#include <optional>
#include <string>

namespace nilbox {

enum class SingKind {
    NonIsolatedAxis,
    Saddle,
    CenterOrFocus,
    Cusp,
    SaddleNode,
    EllipticHyperbolic,
    Node,
};

enum class Stability { Attracting, Repelling, NotApplicable };

struct SingularityClass {
    SingKind kind;
    Stability stability = Stability::NotApplicable;
    std::optional<int> multiplicity;  // nullopt = infinite / undetermined
    std::string case_label;
};

const char* kind_name(SingKind k);
const char* stability_name(Stability s);

/// Full nilpotent-singularity decision tree (cases 1–4, including the
/// discriminant b² + 4a(n+1) in exact arithmetic).
SingularityClass classify(const CharData& cd);

/// Lower bound ⌊(m−1)/2⌋ on limit cycles bifurcating from an m-multiple
/// nilpotent node. Requires m odd, m ≥ 3.
int node_cyclicity_lower_bound(int m);

/// Largest L with ⌊3L/2⌋ ≤ n, the cusp-of-order-n cycle bound.
int cusp_cyclicity_bound(int n);

}  // namespace nilbox

#endif
