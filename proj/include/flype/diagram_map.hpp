#pragma once

#include <cstdint>
#include <vector>

#include "flype/diagram.hpp"

namespace flype {

constexpr Dart kNoDart = 0xffffffffu;

// A crossing/slot bijection between two diagrams.  Orientation-preserving
// maps send slot s to (r + s) mod 4 at each crossing; orientation-reversing
// maps (reflect == true) send s to (r - s) mod 4, reverse every cyclic slot
// order and exchange the over-strand axis.
struct DiagramMap {
    std::vector<Dart> dart_image;
    bool reflect = false;

    std::uint32_t crossing_image(std::uint32_t c) const {
        return crossing_of(dart_image.at(make_dart(c, 0)));
    }
    Dart operator()(Dart h) const { return dart_image.at(h); }

    bool operator==(const DiagramMap& o) const {
        return dart_image == o.dart_image && reflect == o.reflect;
    }
};

DiagramMap identity_map(const Diagram& d);
// first applied map is `inner`: result(h) = outer(inner(h)).
DiagramMap compose(const DiagramMap& outer, const DiagramMap& inner);
DiagramMap inverse(const DiagramMap& m);

// True iff m is a structure-preserving bijection from a onto b (pairing,
// slot order per orientation case, over/under rule, matching free loops).
bool is_isomorphism(const Diagram& a, const Diagram& b, const DiagramMap& m);

// All crossing/slot bijections a -> b preserving incidence and over/under
// labels; with allow_reflection also the orientation-reversing ones.
// Deterministically ordered.  Empty list when not isomorphic.
std::vector<DiagramMap> diagram_isomorphisms(const Diagram& a, const Diagram& b,
                                             bool allow_reflection);

bool isomorphic(const Diagram& a, const Diagram& b, bool allow_reflection = true);

}  // namespace flype
