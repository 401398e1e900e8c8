#include "flype/flype_moves.hpp"

#include <algorithm>
#include <optional>

#include "json.hpp"

namespace flype {

std::string to_json(const FlypeMove& m) {
    nlohmann::json j;
    j["d"] = m.destroyed;
    j["edges"] = {m.circle_edges[0], m.circle_edges[1]};
    j["side"] = m.side;
    return j.dump();
}

FlypeMove move_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FlypeMove m;
    m.destroyed = j.at("d").get<std::uint32_t>();
    m.circle_edges[0] = j.at("edges")[0].get<EdgeId>();
    m.circle_edges[1] = j.at("edges")[1].get<EdgeId>();
    if (m.circle_edges[0] > m.circle_edges[1]) std::swap(m.circle_edges[0], m.circle_edges[1]);
    m.side = j.at("side").get<int>();
    return m;
}

namespace {

bool is_cut(const FlypeMove& m, EdgeId e) {
    return e == m.circle_edges[0] || e == m.circle_edges[1];
}

// Connected components of the graph minus crossing d, minus the two circle
// edges.  Entry for d stays UINT32_MAX.
std::vector<std::uint32_t> cut_components(const Diagram& dia, const FlypeMove& m) {
    std::vector<std::uint32_t> comp(dia.crossing_count(), UINT32_MAX);
    std::uint32_t n = 0;
    for (std::uint32_t c0 = 0; c0 < dia.crossing_count(); ++c0) {
        if (c0 == m.destroyed || comp[c0] != UINT32_MAX) continue;
        comp[c0] = n;
        std::vector<std::uint32_t> stack{c0};
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t s = 0; s < 4; ++s) {
                Dart h = make_dart(v, s);
                if (is_cut(m, dia.edge_of(h))) continue;
                std::uint32_t w = crossing_of(dia.pair(h));
                if (w == m.destroyed) continue;
                if (comp[w] == UINT32_MAX) {
                    comp[w] = n;
                    stack.push_back(w);
                }
            }
        }
        ++n;
    }
    return comp;
}

}  // namespace

MoveGeometry resolve_move(const Diagram& dia, const FlypeMove& move) {
    const std::uint32_t d = move.destroyed;
    if (d >= dia.crossing_count()) throw InvalidMove("destroyed crossing out of range");
    if (move.circle_edges[0] == move.circle_edges[1])
        throw InvalidMove("circle must cross two distinct edges");
    for (EdgeId e : move.circle_edges) {
        if (e >= dia.edge_count()) throw InvalidMove("circle edge out of range");
        auto [h1, h2] = dia.edges()[e];
        if (crossing_of(h1) == crossing_of(h2))
            throw InvalidMove("a closed curve cannot cross a loop edge exactly once");
    }
    for (std::uint32_t s = 0; s < 4; ++s)
        if (crossing_of(dia.pair(make_dart(d, s))) == d)
            throw InvalidMove("destroyed crossing carries a kink");

    auto comp = cut_components(dia, move);
    std::uint32_t ncomp = 0;
    for (std::uint32_t c = 0; c < dia.crossing_count(); ++c)
        if (c != d) ncomp = std::max(ncomp, comp[c] + 1);
    if (dia.crossing_count() <= 1) throw InvalidMove("nothing to flype");

    // side of each slot of d: 0 = unknown, 1 = in (domain candidate A), 2 = out.
    // First try every adjacent split; a split assigns sides to slots, then we
    // check coherence against the component structure.
    for (std::uint32_t s0 = 0; s0 < 4; ++s0) {
        // domain slots {s0, s0+1}
        std::array<int, 4> side{};  // 1 = domain, 2 = outside
        side[s0] = side[(s0 + 1) & 3] = 1;
        side[(s0 + 2) & 3] = side[(s0 + 3) & 3] = 2;

        // component color: 0 unknown, 1 in, 2 out
        std::vector<int> color(ncomp, 0);
        bool ok = true;
        auto paint = [&](std::uint32_t c, int col) {
            if (c == d) {
                ok = false;
                return;
            }
            if (color[comp[c]] == 0)
                color[comp[c]] = col;
            else if (color[comp[c]] != col)
                ok = false;
        };
        for (std::uint32_t s = 0; s < 4 && ok; ++s) {
            Dart h = make_dart(d, s);
            Dart p = dia.pair(h);
            if (is_cut(move, dia.edge_of(h))) {
                // the circle crosses this edge once, so its far end lies on
                // the other side; domain-slot attachments are rejected (they
                // only arise in non-prime configurations)
                if (side[s] == 1) {
                    ok = false;
                    break;
                }
                paint(crossing_of(p), 1);
            } else {
                paint(crossing_of(p), side[s]);
            }
        }
        if (!ok) continue;
        for (EdgeId e : move.circle_edges) {
            auto [h1, h2] = dia.edges()[e];
            if (crossing_of(h1) == d || crossing_of(h2) == d) continue;  // handled above
            std::uint32_t a = comp[crossing_of(h1)], b = comp[crossing_of(h2)];
            if (a == b) {
                ok = false;
                break;
            }
            // one end in, one out; orientation fixed by other constraints or free
            if (color[a] == 0 && color[b] == 0) continue;  // resolved below if forced elsewhere
            if (color[a] == 0) color[a] = 3 - color[b];
            if (color[b] == 0) color[b] = 3 - color[a];
            if (color[a] == color[b]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // second pass for cut edges whose colors only became known late
        for (EdgeId e : move.circle_edges) {
            auto [h1, h2] = dia.edges()[e];
            if (crossing_of(h1) == d || crossing_of(h2) == d) continue;
            std::uint32_t a = comp[crossing_of(h1)], b = comp[crossing_of(h2)];
            if (color[a] == 0 && color[b] == 0) {
                ok = false;  // a floating cut edge disconnected from d: not a single circle
                break;
            }
            if (color[a] == 0) color[a] = 3 - color[b];
            if (color[b] == 0) color[b] = 3 - color[a];
            if (color[a] == color[b]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // every component must be colored, the in side must be one connected
        // component, the out side at most one
        std::uint32_t in_comps = 0, out_comps = 0;
        for (std::uint32_t k = 0; k < ncomp; ++k) {
            if (color[k] == 1) ++in_comps;
            else if (color[k] == 2) ++out_comps;
            else ok = false;
        }
        if (!ok || in_comps != 1 || out_comps > 1) continue;

        MoveGeometry g;
        g.domain_slot = s0;
        g.outside_empty = (out_comps == 0);
        for (std::uint32_t c = 0; c < dia.crossing_count(); ++c)
            if (c != d && color[comp[c]] == 1) g.domain_crossings.push_back(c);
        if (g.domain_crossings.empty()) throw DegenerateMove("flype domain contains no crossing");
        for (int i = 0; i < 2; ++i) {
            auto [h1, h2] = dia.edges()[move.circle_edges[i]];
            auto side_of_end = [&](Dart h) -> int {
                if (crossing_of(h) == d) return side[slot_of(h)];
                return color[comp[crossing_of(h)]];
            };
            int s1 = side_of_end(h1);
            if (s1 == 1) {
                g.cut_in[i] = h1;
                g.cut_out[i] = h2;
            } else {
                g.cut_in[i] = h2;
                g.cut_out[i] = h1;
            }
        }

        // the requested side bit picks which group is the domain; we searched
        // all s0, so accept only the matching one
        bool contains_slot0 = (s0 == 0) || (s0 == 3);
        if ((move.side == 0) == contains_slot0) return g;
    }
    throw InvalidMove("no simple closed curve realizes this move");
}

namespace {

// Builds the flyped diagram for one chirality of the created crossing.
// Returns nullopt when the rotation system is not planar.
std::optional<Diagram> build_target(const Diagram& dia, const FlypeMove& move,
                                    const MoveGeometry& g, bool chirality,
                                    std::vector<Dart>& dart_image, std::uint32_t& created) {
    const std::uint32_t n = dia.crossing_count();
    const std::uint32_t d = move.destroyed;
    created = n - 1;
    std::vector<char> in_domain(n, 0);
    for (std::uint32_t c : g.domain_crossings) in_domain[c] = 1;

    auto new_index = [&](std::uint32_t c) { return c < d ? c : c - 1; };
    dart_image.assign(4 * n, kNoDart);
    for (std::uint32_t c = 0; c < n; ++c) {
        if (c == d) continue;
        for (std::uint32_t s = 0; s < 4; ++s) {
            std::uint32_t s2 = in_domain[c] ? ((4 - s) & 3) : s;
            dart_image[make_dart(c, s)] = make_dart(new_index(c), s2);
        }
    }

    std::vector<Dart> pairing(4 * n, kNoDart);
    auto join = [&](Dart a, Dart b) {
        pairing.at(a) = b;
        pairing.at(b) = a;
    };

    // edges untouched by the surgery
    for (EdgeId e = 0; e < dia.edge_count(); ++e) {
        if (is_cut(move, e)) continue;
        auto [h1, h2] = dia.edges()[e];
        if (crossing_of(h1) == d || crossing_of(h2) == d) continue;
        join(dart_image[h1], dart_image[h2]);
    }
    // strands through d reconnect directly unless spliced by the new crossing
    for (std::uint32_t t = 0; t < 2; ++t) {
        Dart ha = make_dart(d, t), hb = make_dart(d, t + 2);
        if (is_cut(move, dia.edge_of(ha)) || is_cut(move, dia.edge_of(hb))) continue;
        join(dart_image[dia.pair(ha)], dart_image[dia.pair(hb)]);
    }
    // splice the created crossing into the two circle edges
    auto attachment = [&](Dart end) -> Dart {
        if (crossing_of(end) != d) return dart_image[end];
        return dart_image[dia.pair(make_dart(d, (slot_of(end) + 2) & 3))];
    };
    std::array<Dart, 2> att_in{}, att_out{};
    for (int i = 0; i < 2; ++i) {
        att_in[i] = attachment(g.cut_in[i]);
        att_out[i] = attachment(g.cut_out[i]);
    }
    Dart c0 = make_dart(created, 0), c1 = make_dart(created, 1), c2 = make_dart(created, 2),
         c3 = make_dart(created, 3);
    join(c0, att_in[0]);
    join(c2, att_out[0]);
    if (!chirality) {
        join(c1, att_in[1]);
        join(c3, att_out[1]);
    } else {
        join(c1, att_out[1]);
        join(c3, att_in[1]);
    }

    std::vector<std::uint8_t> over(n, 1);
    for (std::uint32_t c = 0; c < n; ++c) {
        if (c == d) continue;
        std::uint8_t a = dia.over_axis(c);
        over[new_index(c)] = in_domain[c] ? static_cast<std::uint8_t>(1 - a) : a;
    }
    over[created] = 1;  // fixed up by the alternation anchor afterwards

    try {
        return Diagram(std::move(pairing), std::move(over), dia.free_loops());
    } catch (const NonPlanar&) {
        return std::nullopt;
    }
}

// Sets the over axis of `created` so the diagram alternates, anchored at the
// nearest other crossing along its strands.
Diagram fix_created_axis(Diagram target, std::uint32_t created) {
    for (std::uint32_t s = 0; s < 4; ++s) {
        Dart h = make_dart(created, s);
        bool over_here = (slot_of(h) & 1u) == target.over_axis(created);
        bool parity = over_here;
        Dart cur = h;
        for (std::uint32_t guard = 0; guard < target.dart_count() + 4; ++guard) {
            cur = strand_next(target, cur);
            parity = !parity;
            if (crossing_of(cur) != created) {
                bool want = parity;  // the next passage must have this over/under value
                bool have = target.passes_over(cur);
                if (want != have) {
                    return target.with_over_axis(created, 1 - target.over_axis(created));
                }
                return target;
            }
            if (cur == h) break;
        }
    }
    return target;
}

}  // namespace

FlypeAction apply_flype(const Diagram& dia, const FlypeMove& move) {
    MoveGeometry g = resolve_move(dia, move);
    FlypeAction act;
    act.move = move;
    act.geometry = g;

    std::optional<Diagram> target;
    std::vector<Dart> dart_image;
    std::uint32_t created = 0;
    for (bool chirality : {false, true}) {
        target = build_target(dia, move, g, chirality, dart_image, created);
        if (target) break;
    }
    if (!target) throw InvalidMove("flype result is not planar for either chirality");

    act.target = fix_created_axis(std::move(*target), created);
    act.created = created;
    act.dart_image = std::move(dart_image);
    act.crossing_image.assign(dia.crossing_count(), -1);
    for (std::uint32_t c = 0; c < dia.crossing_count(); ++c) {
        if (c == move.destroyed) continue;
        act.crossing_image[c] =
            static_cast<std::int32_t>(crossing_of(act.dart_image[make_dart(c, 0)]));
    }
    // ghost edges: for each strand through d, the target edge that swallowed
    // the destroyed crossing, identified by its domain-side continuation
    for (std::uint32_t t = 0; t < 2; ++t) {
        // the domain slot group {s, s+1} holds one slot of each parity;
        // strand t uses the slots of parity t
        std::uint32_t s =
            ((g.domain_slot & 1) == t) ? g.domain_slot : ((g.domain_slot + 1) & 3);
        Dart cont = act.dart_image[dia.pair(make_dart(move.destroyed, s))];
        act.ghost_edges[t] = act.target.edge_of(cont);
    }
    std::sort(act.ghost_edges.begin(), act.ghost_edges.end());
    return act;
}

FlypeMove inverse_move(const FlypeAction& action) {
    FlypeMove inv;
    inv.destroyed = action.created;
    inv.circle_edges = action.ghost_edges;
    // the flipped tangle is still the domain: find the side bit matching it
    for (int side = 0; side <= 1; ++side) {
        inv.side = side;
        try {
            MoveGeometry cand = resolve_move(action.target, inv);
            std::vector<std::uint32_t> want;
            for (std::uint32_t c : action.geometry.domain_crossings)
                want.push_back(static_cast<std::uint32_t>(action.crossing_image[c]));
            std::sort(want.begin(), want.end());
            if (cand.domain_crossings == want) return inv;
        } catch (const DiagramError&) {
        }
    }
    throw InvalidMove("no inverse move found");
}

std::vector<FlypeMove> enumerate_flypes(const Diagram& dia) {
    if (dia.crossing_count() == 0 || dia.crossing_count() == 1) return {};
    if (is_split_diagram(dia)) throw PreconditionViolated("enumerate_flypes requires a non-split diagram");
    if (!is_reduced(dia)) throw PreconditionViolated("enumerate_flypes requires a reduced diagram");
    if (!is_alternating(dia)) throw PreconditionViolated("enumerate_flypes requires an alternating diagram");
    if (!is_prime_diagram(dia)) throw PreconditionViolated("enumerate_flypes requires a prime diagram");

    std::vector<FlypeMove> out;
    for (std::uint32_t d = 0; d < dia.crossing_count(); ++d) {
        for (EdgeId e1 = 0; e1 < dia.edge_count(); ++e1) {
            auto [a1, b1] = dia.edges()[e1];
            if (crossing_of(a1) == d || crossing_of(b1) == d) continue;
            for (EdgeId e2 = e1 + 1; e2 < dia.edge_count(); ++e2) {
                auto [a2, b2] = dia.edges()[e2];
                if (crossing_of(a2) == d || crossing_of(b2) == d) continue;
                for (int side = 0; side <= 1; ++side) {
                    FlypeMove m{d, {e1, e2}, side};
                    try {
                        MoveGeometry g = resolve_move(dia, m);
                        if (!g.outside_empty) out.push_back(m);
                    } catch (const DiagramError&) {
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace flype
