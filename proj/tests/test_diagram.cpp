#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "flype/diagram.hpp"
#include "flype/diagram_map.hpp"

using namespace flype;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kHopf = "X[1,3,2,4] X[3,1,4,2]";
const char* kFigEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

// Independent face-count oracle: walks every rotation-system orbit from
// scratch using an explicit next-map, no shared code with faces().
int face_count_oracle(const Diagram& d) {
    std::map<Dart, Dart> next;
    for (Dart h = 0; h < d.dart_count(); ++h) next[h] = rotate_ccw(d.pair(h));
    std::set<Dart> seen;
    int count = 0;
    for (auto [h, unused] : next) {
        if (seen.count(h)) continue;
        Dart cur = h;
        while (!seen.count(cur)) {
            seen.insert(cur);
            cur = next[cur];
        }
        ++count;
    }
    return count;
}

// Cut-vertex oracle for reducedness; a crossing carrying a loop edge is
// nugatory regardless of connectivity.
bool has_cut_vertex(const Diagram& d) {
    const std::uint32_t n = d.crossing_count();
    for (Dart h = 0; h < d.dart_count(); ++h)
        if (crossing_of(d.pair(h)) == crossing_of(h)) return true;
    if (n <= 1) return false;
    for (std::uint32_t v = 0; v < n; ++v) {
        std::set<std::uint32_t> seen{v};
        std::uint32_t start = v == 0 ? 1 : 0;
        std::vector<std::uint32_t> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            std::uint32_t w = stack.back();
            stack.pop_back();
            for (std::uint32_t s = 0; s < 4; ++s) {
                std::uint32_t u = crossing_of(d.pair(make_dart(w, s)));
                if (!seen.count(u)) {
                    seen.insert(u);
                    stack.push_back(u);
                }
            }
        }
        if (seen.size() < n) return true;
    }
    return false;
}

// Strand-walk alternation oracle, independent of is_alternating.
bool alternation_oracle(const Diagram& d) {
    std::set<Dart> seen;
    for (Dart h0 = 0; h0 < d.dart_count(); ++h0) {
        if (seen.count(h0)) continue;
        std::vector<bool> overs;
        Dart cur = h0;
        do {
            seen.insert(cur);
            overs.push_back((slot_of(cur) % 2) == d.over_axis(crossing_of(cur)));
            cur = d.pair(make_dart(crossing_of(cur), (slot_of(cur) + 2) % 4));
        } while (cur != h0);
        for (size_t i = 0; i < overs.size(); ++i)
            if (overs[i] == overs[(i + 1) % overs.size()]) return false;
    }
    return true;
}

Diagram granny_sum() {
    // connected sum of two trefoils: edge 1 of copy one and edge 7 of copy
    // two are cut and cross-spliced as edges 13, 14
    return parse_pd(
        "X[13,4,2,5] X[3,6,4,14] X[5,2,6,3]"
        " X[14,10,8,11] X[9,12,10,13] X[11,8,12,9]");
}

}  // namespace

TEST_CASE("parse_pd basics") {
    Diagram t = parse_pd(kTrefoil);
    CHECK(t.crossing_count() == 3);
    CHECK(t.edge_count() == 6);
    CHECK(faces(t).size() == 5);
    CHECK(face_count_oracle(t) == 5);

    Diagram o = parse_pd("O[]");
    CHECK(o.crossing_count() == 0);
    CHECK(o.free_loops() == 1);
    CHECK(component_count(o) == 1);

    CHECK_THROWS_AS(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6]"), MalformedToken);
    CHECK_THROWS_AS(parse_pd("X[1,1,1,2] X[2,3,3,4]"), EdgeIndexCountNotTwo);
}

TEST_CASE("faces partition corners") {
    for (const char* pd : {kTrefoil, kHopf, kFigEight, "X[1,1,2,2]"}) {
        Diagram d = parse_pd(pd);
        auto fs = faces(d);
        size_t total = 0;
        std::set<Dart> all;
        for (const auto& f : fs) {
            total += f.boundary.size();
            all.insert(f.boundary.begin(), f.boundary.end());
        }
        CHECK(total == 4 * d.crossing_count());
        CHECK(all.size() == total);
        CHECK((int)fs.size() == face_count_oracle(d));
    }
    // trefoil: two 3-gons and three 2-gons
    auto fs = faces(parse_pd(kTrefoil));
    std::multiset<size_t> sizes;
    for (const auto& f : fs) sizes.insert(f.boundary.size());
    CHECK(sizes == std::multiset<size_t>{2, 2, 2, 3, 3});
    // single-crossing kink has 3 faces
    CHECK(faces(parse_pd("X[1,1,2,2]")).size() == 3);
}

TEST_CASE("alternating predicate") {
    Diagram t = parse_pd(kTrefoil);
    CHECK(is_alternating(t));
    CHECK(alternation_oracle(t));
    Diagram toggled = t.with_over_axis(0, 0);
    CHECK_FALSE(is_alternating(toggled));
    CHECK_FALSE(alternation_oracle(toggled));
    CHECK(is_alternating(parse_pd("O[]")));
    CHECK(is_alternating(parse_pd(kFigEight)));
    CHECK(alternation_oracle(parse_pd(kFigEight)));
}

TEST_CASE("reducedness") {
    CHECK(is_reduced(parse_pd(kTrefoil)));
    CHECK_FALSE(is_reduced(parse_pd("X[1,1,2,2]")));
    CHECK(is_reduced(parse_pd(kHopf)));
    CHECK(is_reduced(parse_pd(kFigEight)));
    for (const char* pd : {kTrefoil, kHopf, kFigEight, "X[1,1,2,2]"}) {
        Diagram d = parse_pd(pd);
        CHECK(is_reduced(d) == !has_cut_vertex(d));
    }
    CHECK(has_cut_vertex(granny_sum()) == false);  // composite but reduced
    CHECK(is_reduced(granny_sum()));
}

TEST_CASE("primality") {
    CHECK(is_prime_diagram(parse_pd(kTrefoil)));
    CHECK(is_prime_diagram(parse_pd(kHopf)));
    CHECK(is_prime_diagram(parse_pd(kFigEight)));
    CHECK_FALSE(is_prime_diagram(granny_sum()));
    CHECK_THROWS_AS(is_prime_diagram(parse_pd("O[]")), DisconnectedInput);
}

TEST_CASE("components and split") {
    CHECK(component_count(parse_pd(kTrefoil)) == 1);
    CHECK(component_count(parse_pd(kHopf)) == 2);
    CHECK(component_count(parse_pd(kFigEight)) == 1);
    CHECK(component_count(granny_sum()) == 1);
    CHECK_FALSE(is_split_diagram(parse_pd(kTrefoil)));
    CHECK_FALSE(is_split_diagram(parse_pd(kHopf)));
    Diagram with_loop = parse_pd(kTrefoil).with_free_loops(1);
    CHECK(is_split_diagram(with_loop));
    CHECK(component_count(with_loop) == 2);
}

TEST_CASE("round trips") {
    for (const char* pd : {kTrefoil, kHopf, kFigEight, "X[1,1,2,2]", "O[]"}) {
        Diagram d = parse_pd(pd);
        CHECK(parse_pd(to_pd(d)) == d);
        CHECK(from_json(to_json(d)) == d);
    }
    Diagram toggled = parse_pd(kTrefoil).with_over_axis(1, 0);
    CHECK(from_json(to_json(toggled)) == toggled);
}

TEST_CASE("isomorphisms") {
    Diagram t = parse_pd(kTrefoil);
    auto autos = diagram_isomorphisms(t, t, false);
    CHECK(autos.size() >= 3);  // cyclic rotation symmetry
    bool has_identity = false;
    for (const auto& m : autos)
        if (m == identity_map(t)) has_identity = true;
    CHECK(has_identity);
    CHECK(diagram_isomorphisms(t, parse_pd(kFigEight), true).empty());

    // isomorphism-invariance of the predicates
    auto all = diagram_isomorphisms(t, t, true);
    CHECK(all.size() > autos.size());  // reflective symmetries exist
    for (const auto& m : all) {
        CHECK(is_isomorphism(t, t, m));
    }

    // group closure and inverses
    for (const auto& a : all) {
        CHECK(std::find(all.begin(), all.end(), inverse(a)) != all.end());
        for (const auto& b : all) {
            CHECK(std::find(all.begin(), all.end(), compose(a, b)) != all.end());
        }
    }
}

TEST_CASE("isomorphism respects labels on reflected maps") {
    // a reflected map must exchange the over-strand axis; the identity dart
    // map with reflect=true is not an isomorphism of an alternating knot
    Diagram t = parse_pd(kTrefoil);
    DiagramMap bogus = identity_map(t);
    bogus.reflect = true;
    CHECK_FALSE(is_isomorphism(t, t, bogus));
}

TEST_CASE("euler rejects nonplanar rotation systems") {
    // K4-style tangle wired to break the sphere condition
    std::vector<Dart> pairing(8);
    auto set = [&](Dart a, Dart b) {
        pairing[a] = b;
        pairing[b] = a;
    };
    // two crossings joined by four parallel edges in crossed order: genus 1
    set(make_dart(0, 0), make_dart(1, 0));
    set(make_dart(0, 1), make_dart(1, 2));
    set(make_dart(0, 2), make_dart(1, 1));
    set(make_dart(0, 3), make_dart(1, 3));
    CHECK_THROWS_AS(Diagram(pairing, {1, 1}, 0), NonPlanar);
}
