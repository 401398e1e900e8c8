#include "flype/diagram_map.hpp"

#include <algorithm>

namespace flype {

DiagramMap identity_map(const Diagram& d) {
    DiagramMap m;
    m.dart_image.resize(d.dart_count());
    for (Dart h = 0; h < d.dart_count(); ++h) m.dart_image[h] = h;
    return m;
}

DiagramMap compose(const DiagramMap& outer, const DiagramMap& inner) {
    DiagramMap m;
    m.dart_image.resize(inner.dart_image.size());
    for (Dart h = 0; h < inner.dart_image.size(); ++h)
        m.dart_image[h] = outer.dart_image.at(inner.dart_image[h]);
    m.reflect = outer.reflect != inner.reflect;
    return m;
}

DiagramMap inverse(const DiagramMap& m) {
    DiagramMap r;
    r.dart_image.assign(m.dart_image.size(), kNoDart);
    for (Dart h = 0; h < m.dart_image.size(); ++h) r.dart_image.at(m.dart_image[h]) = h;
    r.reflect = m.reflect;
    return r;
}

bool is_isomorphism(const Diagram& a, const Diagram& b, const DiagramMap& m) {
    if (a.free_loops() != b.free_loops()) return false;
    if (a.dart_count() != b.dart_count()) return false;
    if (m.dart_image.size() != a.dart_count()) return false;
    std::vector<char> hit(b.dart_count(), 0);
    for (Dart h = 0; h < a.dart_count(); ++h) {
        Dart g = m.dart_image[h];
        if (g >= b.dart_count() || hit[g]) return false;
        hit[g] = 1;
    }
    for (Dart h = 0; h < a.dart_count(); ++h) {
        Dart g = m.dart_image[h];
        if (m.dart_image[a.pair(h)] != b.pair(g)) return false;
        Dart want = m.reflect ? rotate_cw(g) : rotate_ccw(g);
        if (m.dart_image[rotate_ccw(h)] != want) return false;
    }
    for (std::uint32_t c = 0; c < a.crossing_count(); ++c) {
        Dart g = m.dart_image[make_dart(c, 0)];
        std::uint32_t r = slot_of(g);
        std::uint8_t axis = a.over_axis(c);
        std::uint8_t want;
        if (!m.reflect) {
            want = static_cast<std::uint8_t>((axis + r) & 1u);
        } else {
            // case (2): the rotation m swaps the over and under strands
            want = static_cast<std::uint8_t>(1u - ((axis + r) & 1u));
        }
        if (b.over_axis(crossing_of(g)) != want) return false;
    }
    return true;
}

namespace {

// Extend the partial map generated by seed -> image across the component of
// the seed; returns false on contradiction.
bool propagate(const Diagram& a, const Diagram& b, bool reflect, Dart seed, Dart image,
               std::vector<Dart>& out) {
    std::vector<Dart> stack{seed};
    if (out[seed] != kNoDart) return out[seed] == image;
    out[seed] = image;
    while (!stack.empty()) {
        Dart h = stack.back();
        stack.pop_back();
        Dart g = out[h];
        Dart n1 = rotate_ccw(h);
        Dart w1 = reflect ? rotate_cw(g) : rotate_ccw(g);
        Dart n2 = a.pair(h);
        Dart w2 = b.pair(g);
        for (auto [n, w] : {std::pair{n1, w1}, std::pair{n2, w2}}) {
            if (out[n] == kNoDart) {
                out[n] = w;
                stack.push_back(n);
            } else if (out[n] != w) {
                return false;
            }
        }
    }
    return true;
}

void search_components(const Diagram& a, const Diagram& b, bool reflect,
                       const std::vector<Dart>& comp_seeds, size_t k, std::vector<Dart>& partial,
                       std::vector<char>& used_crossing, std::vector<DiagramMap>& out) {
    if (k == comp_seeds.size()) {
        DiagramMap m;
        m.dart_image = partial;
        m.reflect = reflect;
        if (is_isomorphism(a, b, m)) out.push_back(std::move(m));
        return;
    }
    Dart seed = comp_seeds[k];
    for (Dart image = 0; image < b.dart_count(); ++image) {
        if (used_crossing[crossing_of(image)]) continue;
        std::vector<Dart> trial = partial;
        if (!propagate(a, b, reflect, seed, image, trial)) continue;
        // mark target crossings consumed by this component
        std::vector<std::uint32_t> marked;
        bool clash = false;
        for (Dart h = 0; h < trial.size(); ++h) {
            if (partial[h] == kNoDart && trial[h] != kNoDart && slot_of(h) == 0) {
                std::uint32_t tc = crossing_of(trial[h]);
                if (used_crossing[tc]) {
                    clash = true;
                    break;
                }
                used_crossing[tc] = 1;
                marked.push_back(tc);
            }
        }
        if (!clash) {
            std::swap(partial, trial);
            search_components(a, b, reflect, comp_seeds, k + 1, partial, used_crossing, out);
            std::swap(partial, trial);
        }
        for (std::uint32_t tc : marked) used_crossing[tc] = 0;
    }
}

}  // namespace

std::vector<DiagramMap> diagram_isomorphisms(const Diagram& a, const Diagram& b,
                                             bool allow_reflection) {
    std::vector<DiagramMap> out;
    if (a.crossing_count() != b.crossing_count() || a.free_loops() != b.free_loops()) return out;
    if (a.crossing_count() == 0) {
        out.push_back(DiagramMap{});
        return out;
    }
    auto comp = graph_components(a);
    std::uint32_t ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<Dart> seeds;
    for (std::uint32_t k = 0; k < ncomp; ++k) {
        for (std::uint32_t c = 0; c < a.crossing_count(); ++c) {
            if (comp[c] == k) {
                seeds.push_back(make_dart(c, 0));
                break;
            }
        }
    }
    for (int reflect = 0; reflect <= (allow_reflection ? 1 : 0); ++reflect) {
        std::vector<Dart> partial(a.dart_count(), kNoDart);
        std::vector<char> used(b.crossing_count(), 0);
        search_components(a, b, reflect != 0, seeds, 0, partial, used, out);
    }
    std::sort(out.begin(), out.end(), [](const DiagramMap& x, const DiagramMap& y) {
        if (x.reflect != y.reflect) return !x.reflect;
        return x.dart_image < y.dart_image;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool isomorphic(const Diagram& a, const Diagram& b, bool allow_reflection) {
    return !diagram_isomorphisms(a, b, allow_reflection).empty();
}

}  // namespace flype
