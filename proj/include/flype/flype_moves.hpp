#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "flype/diagram.hpp"
#include "flype/diagram_map.hpp"

namespace flype {

struct PreconditionViolated : DiagramError {
    using DiagramError::DiagramError;
};
struct InvalidMove : DiagramError {
    using DiagramError::DiagramError;
};
struct DegenerateMove : DiagramError {
    using DiagramError::DiagramError;
};

// A diagrammatic flype on a source diagram: the circle through the destroyed
// crossing and the two edges it crosses, plus which side is flipped.  side 0
// selects the domain group of d-slots containing slot 0.
struct FlypeMove {
    std::uint32_t destroyed = 0;
    std::array<EdgeId, 2> circle_edges{0, 0};  // kept sorted
    int side = 0;

    bool operator==(const FlypeMove& o) const {
        return destroyed == o.destroyed && circle_edges == o.circle_edges && side == o.side;
    }
};

std::string to_json(const FlypeMove& m);
FlypeMove move_from_json(const std::string& text);

// Resolved geometry of a move on a concrete diagram.
struct MoveGeometry {
    std::uint32_t domain_slot = 0;                // domain darts at d are {s, s+1}
    std::vector<std::uint32_t> domain_crossings;  // tangle crossings, excluding d, sorted
    // per circle edge: dart on the domain side / outside; for an edge with an
    // end at d the d-end is recorded as the raw dart at d
    std::array<Dart, 2> cut_in{kNoDart, kNoDart};
    std::array<Dart, 2> cut_out{kNoDart, kNoDart};
    bool outside_empty = false;  // no crossing outside the circle
};

// Validates the circle condition and computes the geometry; throws
// InvalidMove / DegenerateMove.
MoveGeometry resolve_move(const Diagram& d, const FlypeMove& move);

struct FlypeAction {
    Diagram target;
    FlypeMove move;
    std::uint32_t created = 0;                 // crossing index in target
    std::vector<std::int32_t> crossing_image;  // size n, destroyed -> -1
    std::vector<Dart> dart_image;              // size 4n, destroyed darts -> kNoDart
    std::array<EdgeId, 2> ghost_edges{0, 0};   // target edges replacing the destroyed crossing
    MoveGeometry geometry;
};

// Applies the flype.  Crossing count, component count, alternating and
// planarity are preserved.  The domain tangle's rotation system is reversed.
FlypeAction apply_flype(const Diagram& d, const FlypeMove& move);

// All non-degenerate flype moves: domain contains at least one crossing
// besides d(f) and is not the whole diagram minus d(f).  Requires a reduced,
// alternating, prime, connected diagram.
std::vector<FlypeMove> enumerate_flypes(const Diagram& d);

// The move that undoes `action` on action.target (destroys the created
// crossing, same circle seen from the other side).
FlypeMove inverse_move(const FlypeAction& action);

}  // namespace flype
