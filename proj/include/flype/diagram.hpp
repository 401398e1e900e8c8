#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flype {

// A dart is a half-edge slot: dart = 4*crossing + slot, slots 0..3 in
// counterclockwise order around the crossing.
using Dart = std::uint32_t;

inline std::uint32_t crossing_of(Dart h) { return h >> 2; }
inline std::uint32_t slot_of(Dart h) { return h & 3u; }
inline Dart make_dart(std::uint32_t crossing, std::uint32_t slot) {
    return (crossing << 2) | (slot & 3u);
}
inline Dart opposite(Dart h) { return h ^ 2u; }               // other end of the strand through the crossing
inline Dart rotate_ccw(Dart h) { return (h & ~3u) | ((h + 1) & 3u); }
inline Dart rotate_cw(Dart h) { return (h & ~3u) | ((h + 3) & 3u); }

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedToken : DiagramError {
    using DiagramError::DiagramError;
};
struct EdgeIndexCountNotTwo : DiagramError {
    using DiagramError::DiagramError;
};
struct NonPlanar : DiagramError {
    using DiagramError::DiagramError;
};
struct DisconnectedInput : DiagramError {
    using DiagramError::DiagramError;
};

// Boundary of a face: the cyclic list of darts visited by rotation-system
// traversal (next = ccw-rotation of the paired dart).
struct Face {
    std::vector<Dart> boundary;
};

// An edge joins two darts.  Edge ids index the canonical edge list, which is
// sorted by the smaller dart of each edge.
using EdgeId = std::uint32_t;

// Immutable 4-valent planar map with over/under labels.  overAxis(c) == 0
// means the strand through slots {0,2} is the over-strand, == 1 means the
// strand through slots {1,3} is.  A PD token X[a,b,c,d] has the incoming
// under-strand at slot 0, so parsing always yields axis 1.
class Diagram {
public:
    Diagram() = default;
    Diagram(std::vector<Dart> pairing, std::vector<std::uint8_t> over_axis,
            std::uint32_t free_loops = 0);

    std::uint32_t crossing_count() const { return static_cast<std::uint32_t>(over_.size()); }
    std::uint32_t dart_count() const { return static_cast<std::uint32_t>(pair_.size()); }
    std::uint32_t free_loops() const { return loops_; }
    Dart pair(Dart h) const { return pair_.at(h); }
    std::uint8_t over_axis(std::uint32_t crossing) const { return over_.at(crossing); }
    bool passes_over(Dart h) const { return (slot_of(h) & 1u) == over_[crossing_of(h)]; }

    const std::vector<Dart>& pairing() const { return pair_; }
    const std::vector<std::uint8_t>& over_axes() const { return over_; }

    // Canonical edge list, sorted by smaller dart.
    const std::vector<std::pair<Dart, Dart>>& edges() const { return edges_; }
    EdgeId edge_of(Dart h) const { return edge_of_.at(h); }
    std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }

    std::optional<std::string> label(std::uint32_t crossing) const;
    Diagram with_label(std::uint32_t crossing, std::string text) const;
    Diagram with_over_axis(std::uint32_t crossing, std::uint8_t axis) const;
    Diagram with_free_loops(std::uint32_t loops) const;

    bool operator==(const Diagram& other) const {
        return pair_ == other.pair_ && over_ == other.over_ && loops_ == other.loops_;
    }

private:
    void build_edges();
    void check_valid() const;

    std::vector<Dart> pair_;           // fixed-point-free involution on darts
    std::vector<std::uint8_t> over_;   // per crossing, 0 or 1
    std::uint32_t loops_ = 0;          // crossingless closed components
    std::map<std::uint32_t, std::string> labels_;
    std::vector<std::pair<Dart, Dart>> edges_;
    std::vector<EdgeId> edge_of_;
};

// PD text format: whitespace-separated tokens X[a,b,c,d] and O[].
Diagram parse_pd(const std::string& text);
std::string to_pd(const Diagram& d);

// JSON format: {"crossings":[[a,b,c,d],...],"over":[axis,...],"loops":k}
std::string to_json(const Diagram& d);
Diagram from_json(const std::string& text);

std::vector<Face> faces(const Diagram& d);
// face_index[h] = index into faces(d) of the orbit containing dart h.
std::vector<std::uint32_t> face_index(const Diagram& d);

bool is_alternating(const Diagram& d);
bool is_reduced(const Diagram& d);
bool is_prime_diagram(const Diagram& d);
std::uint32_t component_count(const Diagram& d);
bool is_split_diagram(const Diagram& d);

// Connected components of the underlying 4-valent graph, one entry per
// crossing; ids are 0..k-1 in order of lowest crossing.
std::vector<std::uint32_t> graph_components(const Diagram& d);

// Orbits of the strand-walk successor (arrival darts).  Each closed strand
// appears as two orbits, one per orientation.
std::vector<std::vector<Dart>> strand_orbits(const Diagram& d);
// Next arrival dart when entering along h.
inline Dart strand_next(const Diagram& d, Dart h) { return d.pair(opposite(h)); }

}  // namespace flype
