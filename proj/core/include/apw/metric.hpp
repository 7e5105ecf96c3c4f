#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apw/residue_field.hpp"

namespace apw {

/// The three weight functions on A_p[w]:
///  - WM: |x|+|y| of the minimal-norm representative (the original,
///    metrically flawed formula);
///  - Wm: min of the w-form and wbar-form coordinate sums (the corrected
///    closed form);
///  - Graph: shortest-path length in the Cayley graph whose generators are
///    the six unit classes (the authoritative metric; provably valid).
enum class WeightKind { WM, Wm, Graph };

std::string_view to_string(WeightKind kind);                         // "wM" / "wm" / "graph"
std::optional<WeightKind> weight_kind_from_string(std::string_view); // inverse

/// Certificate for a failed metric axiom. For "triangle" the labels are
/// (a, b, c) and the distances (d(a,b), d(a,c), d(c,b)); for "identity"
/// and "symmetry" the labels are (a, b) with the one or two distances
/// involved. Certificates re-verify on replay (see reverify_violation).
struct AuditViolation {
    std::string axiom;
    std::vector<Label> labels;
    std::vector<std::int64_t> distances;
};

struct MetricAuditReport {
    WeightKind kind{};
    std::int64_t p{0};
    bool identity_ok{false};
    bool symmetry_ok{false};
    bool triangle_ok{false};
    std::optional<AuditViolation> first_violation;
    std::uint64_t violation_count{0};
    bool exhaustive{false};
    std::uint64_t trials{0}; // sampled mode only
    std::uint64_t seed{0};   // sampled mode only
};

struct WeightRow {
    Label label;
    std::int32_t w_M;
    std::int32_t w_m;
    std::int32_t graph;
};

struct WeightComparisonReport {
    std::int64_t p{0};
    std::vector<WeightRow> rows;
    std::uint64_t disagree_wM_wm{0};
    std::uint64_t disagree_wM_graph{0};
    std::uint64_t disagree_wm_graph{0};
    std::vector<Label> wm_graph_mismatch_labels;
};

/**
 * Per-field weight tables for the three kinds, computed once at
 * construction (the graph weights by BFS from class 0 over the six unit
 * generators). The referenced field must outlive this object.
 */
class Metrics {
public:
    explicit Metrics(const ResidueField& field);

    const ResidueField& field() const { return *field_; }

    std::int32_t weight(WeightKind kind, Label l) const;
    std::int32_t weight_M(Label l) const;
    std::int32_t weight_m(Label l) const;
    std::int32_t graph_weight(Label l) const;

    /// Weight of the class of l1 - l2 under the chosen kind.
    std::int32_t distance(WeightKind kind, Label l1, Label l2) const;

    /// Coordinatewise sum of distances; for Graph this equals the
    /// shortest-path distance in the product graph.
    std::int64_t word_distance(WeightKind kind, std::span<const Label> u,
                               std::span<const Label> v) const;

    static constexpr std::int64_t kDefaultExhaustiveLimit = 1000;

    /// Literal axiom scan: identity and symmetry over all label pairs,
    /// triangle over all label triples in ascending (a, b, c) order.
    /// Throws LimitExceeded when p > limit (the O(p^3) scan is capped).
    MetricAuditReport audit_exhaustive(WeightKind kind,
                                       std::int64_t limit = kDefaultExhaustiveLimit) const;

    /// Identity and symmetry are decided exactly (they reduce to O(p)
    /// weight-table scans); the triangle inequality is spot-checked on
    /// `trials` seeded uniform triples.
    MetricAuditReport audit_sampled(WeightKind kind, std::uint64_t trials,
                                    std::uint64_t seed) const;

    WeightComparisonReport compare_weights() const;

private:
    const ResidueField* field_;
    std::vector<std::int32_t> w_M_;
    std::vector<std::int32_t> w_m_;
    std::vector<std::int32_t> graph_;
};

/// Recomputes a certificate's distances and confirms it still witnesses
/// the claimed axiom failure.
bool reverify_violation(const Metrics& metrics, WeightKind kind, const AuditViolation& v);

std::string to_json(const MetricAuditReport& report);
std::string to_json(const WeightComparisonReport& report);

/// CSV export, header "label,w_M,w_m,graph".
void write_comparison_csv(const WeightComparisonReport& report, std::ostream& os);

} // namespace apw
