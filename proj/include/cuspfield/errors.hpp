#pragma once

#include <stdexcept>
#include <string>

namespace cuspfield {

// Error conditions surfaced across the library. Each maps to one failure
// mode of a specific operation; the CLI turns the category into an exit code.
enum class errc {
    malformed_input,
    inconsistent_diagram,
    disconnected_diagram,
    invalid_dt_realization,
    invalid_fraction,
    unsupported_diagram,
    not_hyperbolic_candidate,
    degenerate_label,
    negative_distance,
    coincident_points,
    precision_underflow,
    singular_jacobian,
    no_decrease,
    no_solution_found,
    no_geometric_solution,
    refinement_stalled,
    dependent_rows,
    no_relation_found,
    precision_too_low,
    elimination_stuck,
    degenerate_system,
    root_mismatch,
    degree_bound_violated,
    field_description_incomplete,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, std::string where, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + " [" + where + "]: " + what),
          code_(code), where_(std::move(where)) {}

    errc code() const { return code_; }
    // Provenance: "module.operation" plus an optional object id (region/arc/crossing).
    const std::string& where() const { return where_; }

private:
    errc code_;
    std::string where_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::malformed_input: return "MalformedInput";
        case errc::inconsistent_diagram: return "InconsistentDiagram";
        case errc::disconnected_diagram: return "DisconnectedDiagram";
        case errc::invalid_dt_realization: return "InvalidDTRealization";
        case errc::invalid_fraction: return "InvalidFraction";
        case errc::unsupported_diagram: return "UnsupportedDiagram";
        case errc::not_hyperbolic_candidate: return "NotHyperbolicCandidate";
        case errc::degenerate_label: return "DegenerateLabel";
        case errc::negative_distance: return "NegativeDistance";
        case errc::coincident_points: return "CoincidentPoints";
        case errc::precision_underflow: return "PrecisionUnderflow";
        case errc::singular_jacobian: return "SingularJacobian";
        case errc::no_decrease: return "NoDecrease";
        case errc::no_solution_found: return "NoSolutionFound";
        case errc::no_geometric_solution: return "NoGeometricSolution";
        case errc::refinement_stalled: return "RefinementStalled";
        case errc::dependent_rows: return "DependentRows";
        case errc::no_relation_found: return "NoRelationFound";
        case errc::precision_too_low: return "PrecisionTooLow";
        case errc::elimination_stuck: return "EliminationStuck";
        case errc::degenerate_system: return "DegenerateSystem";
        case errc::root_mismatch: return "RootMismatch";
        case errc::degree_bound_violated: return "DegreeBoundViolated";
        case errc::field_description_incomplete: return "FieldDescriptionIncomplete";
    }
    return "UnknownError";
}

} // namespace cuspfield
