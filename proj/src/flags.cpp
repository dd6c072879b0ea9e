#include "cycgm/flags.hpp"

#include <sstream>

namespace cycgm {

namespace {

/// Incremental generic rank via Gaussian elimination over the function field.
class RankTracker {
public:
    explicit RankTracker(std::size_t dim) : dim_(dim) {}

    int add(std::vector<RatFunc> v) {
        for (const auto& row : echelon_) {
            const std::size_t p = pivot_of(row);
            if (v[p].is_zero()) continue;
            const RatFunc factor = v[p] / row[p];
            for (std::size_t i = 0; i < dim_; ++i) v[i] = v[i] - factor * row[i];
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!v[i].is_zero()) {
                echelon_.push_back(std::move(v));
                break;
            }
        }
        return static_cast<int>(echelon_.size());
    }

private:
    static std::size_t pivot_of(const std::vector<RatFunc>& row) {
        for (std::size_t i = 0; i < row.size(); ++i)
            if (!row[i].is_zero()) return i;
        throw Error("zero row stored in echelon basis");
    }
    std::size_t dim_;
    std::vector<std::vector<RatFunc>> echelon_;
};

FlagReport finish_report(const GaussManin& gm, Eigenform section,
                         std::vector<std::string> directions,
                         std::vector<std::vector<RatFunc>> vectors) {
    const std::size_t dim = static_cast<std::size_t>(gm.cover().n - 1);
    FlagReport report{std::move(section), std::move(directions), std::move(vectors),
                      {},                 std::nullopt,          false};

    RankTracker tracker(dim);
    for (const auto& v : report.vectors) report.ranks.push_back(tracker.add(v));

    if (report.vectors.size() == dim)
        report.determinant = det(RfMatrix::from_columns(gm.cover().table, report.vectors));

    const int final_rank = report.ranks.empty() ? 0 : report.ranks.back();
    report.full_rank =
        final_rank == static_cast<int>(std::min(report.vectors.size(), dim)) && final_rank > 0;
    return report;
}

void require_section(const GaussManin& gm, const Eigenform& section) {
    if (section.l != gm.cover().d - 1)
        throw Error("flag sections live in the l = d-1 trivialization");
    if (section.numerator.degree() > gm.cover().n - 2)
        throw Error("section degree exceeds n-2");
}

}  // namespace

FlagReport derived_flag(const GaussManin& gm, const Eigenform& section,
                        const std::string& direction, int max_order) {
    require_section(gm, section);
    const auto k = gm.cover().branch_index_of(direction);
    if (!k) throw DirectionError("'" + direction + "' is not a symbolic branch parameter");

    std::vector<std::vector<RatFunc>> vectors;
    std::vector<std::string> directions;
    PolyInX current = section.numerator;
    vectors.push_back(gm.coordinates(current));
    for (int order = 1; order <= max_order; ++order) {
        current = gm.derivative(current, *k);
        vectors.push_back(gm.coordinates(current));
        directions.push_back(direction);
    }
    return finish_report(gm, section, std::move(directions), std::move(vectors));
}

FlagReport multi_direction_span(const GaussManin& gm, const Eigenform& section,
                                const std::vector<std::string>& directions,
                                bool scale_by_Pprime) {
    require_section(gm, section);
    std::vector<std::vector<RatFunc>> vectors;
    vectors.push_back(gm.coordinates(section.numerator));
    for (std::size_t i = 0; i < directions.size(); ++i) {
        for (std::size_t j = i + 1; j < directions.size(); ++j)
            if (directions[i] == directions[j])
                throw DirectionError("repeated direction '" + directions[i] + "'");
        const auto k = gm.cover().branch_index_of(directions[i]);
        if (!k) throw DirectionError("'" + directions[i] + "' is not a symbolic branch parameter");
        PolyInX column = gm.derivative(section.numerator, *k);
        if (scale_by_Pprime) column = column * gm.Pprime_at(*k);
        vectors.push_back(gm.coordinates(column));
    }
    return finish_report(gm, section, directions, std::move(vectors));
}

Certificate nonlinearity_certificate(const FlagReport& report) {
    const int dim = report.section.cover.n - 1;
    const int final_rank = report.ranks.empty() ? 0 : report.ranks.back();
    Certificate cert;
    if (static_cast<int>(report.vectors.size()) != dim) {
        std::ostringstream reason;
        reason << "flag has " << report.vectors.size() << " vectors in a " << dim
               << "-dimensional eigenspace; independence of all of them is "
               << (report.vectors.size() > static_cast<std::size_t>(dim) ? "impossible"
                                                                         : "not full");
        cert.reason = reason.str();
        return cert;
    }
    if (!report.determinant || report.determinant->is_zero()) {
        cert.reason = "maximal minor vanishes identically";
        return cert;
    }
    cert.certified = true;
    cert.witness = report.determinant;
    cert.reason = "flag spans the eigenspace; determinant is a nonzero rational function";
    return cert;
}

}  // namespace cycgm
