#pragma once

#include <optional>

#include "cycgm/forms.hpp"
#include "cycgm/gauss_manin.hpp"

namespace cycgm {

/// Rank data for a list of coordinate vectors built from a section and its
/// covariant derivatives. Ranks are generic: a minor counts as nonzero iff
/// it is a nonzero rational function of the parameters.
struct FlagReport {
    Eigenform section;
    std::vector<std::string> directions;          // one entry per derivative taken
    std::vector<std::vector<RatFunc>> vectors;    // coordinates in 1, x, ..., x^(n-2)
    std::vector<int> ranks;                       // after 1, 2, ... vectors
    std::optional<RatFunc> determinant;           // present when #vectors == n-1
    bool full_rank = false;  // final rank == min(#vectors, n-1)
};

/// Section, then derivatives of increasing order along one direction:
/// s, Ds, D^2 s, ..., D^max_order s.
FlagReport derived_flag(const GaussManin& gm, const Eigenform& section,
                        const std::string& direction, int max_order);

/// Section plus one first derivative per listed direction; with
/// scale_by_Pprime each derivative column is multiplied by P'(t_k).
FlagReport multi_direction_span(const GaussManin& gm, const Eigenform& section,
                                const std::vector<std::string>& directions,
                                bool scale_by_Pprime);

struct Certificate {
    /// True when the flag consists of exactly n-1 vectors whose determinant
    /// is a nonzero rational function: the section stays outside every flat
    /// strict subbundle. False carries no linearity claim.
    bool certified = false;
    std::optional<RatFunc> witness;  // the nonzero maximal minor
    std::string reason;
};

Certificate nonlinearity_certificate(const FlagReport& report);

}  // namespace cycgm
