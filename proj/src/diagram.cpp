#include "flype/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace flype {

Diagram::Diagram(std::vector<Dart> pairing, std::vector<std::uint8_t> over_axis,
                 std::uint32_t free_loops)
    : pair_(std::move(pairing)), over_(std::move(over_axis)), loops_(free_loops) {
    check_valid();
    build_edges();
}

void Diagram::check_valid() const {
    if (pair_.size() != 4u * over_.size())
        throw DiagramError("pairing size must be 4 * crossing count");
    for (Dart h = 0; h < pair_.size(); ++h) {
        Dart p = pair_[h];
        if (p >= pair_.size() || p == h || pair_[p] != h)
            throw DiagramError("halfEdgePairing is not a fixed-point-free involution");
    }
    for (std::uint8_t a : over_)
        if (a > 1) throw DiagramError("over axis must be 0 or 1");

    // Sphere planarity: V - E + F = 2 on every connected component, with F
    // counted by rotation-system face traversal.
    if (over_.empty()) return;
    std::vector<std::uint32_t> comp(over_.size(), UINT32_MAX);
    std::uint32_t ncomp = 0;
    for (std::uint32_t c = 0; c < over_.size(); ++c) {
        if (comp[c] != UINT32_MAX) continue;
        std::vector<std::uint32_t> stack{c};
        comp[c] = ncomp;
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t s = 0; s < 4; ++s) {
                std::uint32_t w = crossing_of(pair_[make_dart(v, s)]);
                if (comp[w] == UINT32_MAX) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::int64_t> verts(ncomp, 0), facesn(ncomp, 0);
    for (std::uint32_t c = 0; c < over_.size(); ++c) ++verts[comp[c]];
    std::vector<char> seen(pair_.size(), 0);
    for (Dart h = 0; h < pair_.size(); ++h) {
        if (seen[h]) continue;
        Dart cur = h;
        do {
            seen[cur] = 1;
            cur = rotate_ccw(pair_[cur]);
        } while (cur != h);
        ++facesn[comp[crossing_of(h)]];
    }
    for (std::uint32_t k = 0; k < ncomp; ++k) {
        // every component has E = 2V
        if (verts[k] - 2 * verts[k] + facesn[k] != 2)
            throw NonPlanar("rotation system does not embed in the sphere");
    }
}

void Diagram::build_edges() {
    edges_.clear();
    edge_of_.assign(pair_.size(), 0);
    for (Dart h = 0; h < pair_.size(); ++h)
        if (h < pair_[h]) edges_.push_back({h, pair_[h]});
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        edge_of_[edges_[e].first] = e;
        edge_of_[edges_[e].second] = e;
    }
}

std::optional<std::string> Diagram::label(std::uint32_t crossing) const {
    auto it = labels_.find(crossing);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

Diagram Diagram::with_label(std::uint32_t crossing, std::string text) const {
    Diagram d = *this;
    d.labels_[crossing] = std::move(text);
    return d;
}

Diagram Diagram::with_over_axis(std::uint32_t crossing, std::uint8_t axis) const {
    Diagram d = *this;
    d.over_.at(crossing) = axis;
    return d;
}

Diagram Diagram::with_free_loops(std::uint32_t loops) const {
    Diagram d = *this;
    d.loops_ = loops;
    return d;
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::vector<long> parse_bracket_list(const std::string& s, size_t& i, const char* what) {
    if (i >= s.size() || s[i] != '[') throw MalformedToken(std::string("expected '[' after ") + what);
    ++i;
    std::vector<long> out;
    skip_ws(s, i);
    if (i < s.size() && s[i] == ']') {
        ++i;
        return out;
    }
    while (true) {
        skip_ws(s, i);
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw MalformedToken("expected integer in PD token");
        out.push_back(std::stol(s.substr(start, i - start)));
        skip_ws(s, i);
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < s.size() && s[i] == ']') {
            ++i;
            return out;
        }
        throw MalformedToken("expected ',' or ']' in PD token");
    }
}

}  // namespace

Diagram parse_pd(const std::string& text) {
    std::vector<std::vector<long>> xs;
    std::uint32_t loops = 0;
    size_t i = 0;
    while (true) {
        skip_ws(text, i);
        if (i >= text.size()) break;
        char t = text[i];
        if (t == 'X' || t == 'x') {
            ++i;
            auto v = parse_bracket_list(text, i, "X");
            if (v.size() != 4) throw MalformedToken("X token must list exactly 4 edge indices");
            xs.push_back(v);
        } else if (t == 'O' || t == 'o') {
            ++i;
            auto v = parse_bracket_list(text, i, "O");
            if (!v.empty()) throw MalformedToken("O token takes no edge indices");
            ++loops;
        } else {
            throw MalformedToken(std::string("unexpected character '") + t + "' in PD text");
        }
    }
    std::map<long, std::vector<Dart>> where;
    for (std::uint32_t c = 0; c < xs.size(); ++c)
        for (std::uint32_t s = 0; s < 4; ++s) where[xs[c][s]].push_back(make_dart(c, s));
    std::vector<Dart> pairing(4 * xs.size(), 0);
    for (const auto& [edge, darts] : where) {
        if (darts.size() != 2)
            throw EdgeIndexCountNotTwo("edge index " + std::to_string(edge) + " appears " +
                                       std::to_string(darts.size()) + " times");
        pairing[darts[0]] = darts[1];
        pairing[darts[1]] = darts[0];
    }
    return Diagram(std::move(pairing), std::vector<std::uint8_t>(xs.size(), 1), loops);
}

std::string to_pd(const Diagram& d) {
    // Edge numbering follows the canonical edge list, 1-based.
    std::ostringstream out;
    for (std::uint32_t c = 0; c < d.crossing_count(); ++c) {
        if (c) out << ' ';
        out << "X[";
        for (std::uint32_t s = 0; s < 4; ++s) {
            if (s) out << ',';
            out << d.edge_of(make_dart(c, s)) + 1;
        }
        out << ']';
    }
    for (std::uint32_t k = 0; k < d.free_loops(); ++k) {
        if (d.crossing_count() || k) out << ' ';
        out << "O[]";
    }
    return out.str();
}

std::string to_json(const Diagram& d) {
    nlohmann::json j;
    j["crossings"] = nlohmann::json::array();
    for (std::uint32_t c = 0; c < d.crossing_count(); ++c) {
        nlohmann::json row = nlohmann::json::array();
        for (std::uint32_t s = 0; s < 4; ++s) row.push_back(d.edge_of(make_dart(c, s)) + 1);
        j["crossings"].push_back(row);
    }
    j["over"] = nlohmann::json::array();
    for (std::uint32_t c = 0; c < d.crossing_count(); ++c) j["over"].push_back(int(d.over_axis(c)));
    j["loops"] = d.free_loops();
    return j.dump();
}

Diagram from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::map<long, std::vector<Dart>> where;
    std::uint32_t n = static_cast<std::uint32_t>(j.at("crossings").size());
    for (std::uint32_t c = 0; c < n; ++c) {
        const auto& row = j["crossings"][c];
        if (row.size() != 4) throw MalformedToken("crossing rows must have 4 entries");
        for (std::uint32_t s = 0; s < 4; ++s) where[row[s].get<long>()].push_back(make_dart(c, s));
    }
    std::vector<Dart> pairing(4 * n, 0);
    for (const auto& [edge, darts] : where) {
        if (darts.size() != 2)
            throw EdgeIndexCountNotTwo("edge index " + std::to_string(edge) + " appears " +
                                       std::to_string(darts.size()) + " times");
        pairing[darts[0]] = darts[1];
        pairing[darts[1]] = darts[0];
    }
    std::vector<std::uint8_t> over(n, 1);
    if (j.contains("over")) {
        for (std::uint32_t c = 0; c < n; ++c) over[c] = static_cast<std::uint8_t>(j["over"][c].get<int>());
    }
    std::uint32_t loops = j.value("loops", 0u);
    return Diagram(std::move(pairing), std::move(over), loops);
}

std::vector<Face> faces(const Diagram& d) {
    std::vector<Face> out;
    std::vector<char> seen(d.dart_count(), 0);
    for (Dart h = 0; h < d.dart_count(); ++h) {
        if (seen[h]) continue;
        Face f;
        Dart cur = h;
        do {
            seen[cur] = 1;
            f.boundary.push_back(cur);
            cur = rotate_ccw(d.pair(cur));
        } while (cur != h);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::uint32_t> face_index(const Diagram& d) {
    std::vector<std::uint32_t> idx(d.dart_count(), 0);
    std::vector<char> seen(d.dart_count(), 0);
    std::uint32_t n = 0;
    for (Dart h = 0; h < d.dart_count(); ++h) {
        if (seen[h]) continue;
        Dart cur = h;
        do {
            seen[cur] = 1;
            idx[cur] = n;
            cur = rotate_ccw(d.pair(cur));
        } while (cur != h);
        ++n;
    }
    return idx;
}

std::vector<std::vector<Dart>> strand_orbits(const Diagram& d) {
    std::vector<std::vector<Dart>> orbits;
    std::vector<char> seen(d.dart_count(), 0);
    for (Dart h = 0; h < d.dart_count(); ++h) {
        if (seen[h]) continue;
        std::vector<Dart> orbit;
        Dart cur = h;
        do {
            seen[cur] = 1;
            orbit.push_back(cur);
            cur = strand_next(d, cur);
        } while (cur != h);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

bool is_alternating(const Diagram& d) {
    for (const auto& orbit : strand_orbits(d)) {
        for (size_t i = 0; i < orbit.size(); ++i) {
            bool a = d.passes_over(orbit[i]);
            bool b = d.passes_over(orbit[(i + 1) % orbit.size()]);
            if (a == b) return false;
        }
    }
    return true;
}

bool is_reduced(const Diagram& d) {
    auto fi = face_index(d);
    for (std::uint32_t c = 0; c < d.crossing_count(); ++c) {
        // corner j sits in the face orbit of dart (c, j+1); opposite corners
        // in one face mark a nugatory crossing
        if (fi[make_dart(c, 0)] == fi[make_dart(c, 2)]) return false;
        if (fi[make_dart(c, 1)] == fi[make_dart(c, 3)]) return false;
    }
    return true;
}

std::vector<std::uint32_t> graph_components(const Diagram& d) {
    std::vector<std::uint32_t> comp(d.crossing_count(), UINT32_MAX);
    std::uint32_t n = 0;
    for (std::uint32_t c = 0; c < d.crossing_count(); ++c) {
        if (comp[c] != UINT32_MAX) continue;
        std::vector<std::uint32_t> stack{c};
        comp[c] = n;
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t s = 0; s < 4; ++s) {
                std::uint32_t w = crossing_of(d.pair(make_dart(v, s)));
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

bool is_split_diagram(const Diagram& d) {
    std::uint32_t parts = d.free_loops();
    if (d.crossing_count() > 0) {
        auto comp = graph_components(d);
        parts += *std::max_element(comp.begin(), comp.end()) + 1;
    }
    return parts > 1;
}

std::uint32_t component_count(const Diagram& d) {
    return static_cast<std::uint32_t>(strand_orbits(d).size()) / 2 + d.free_loops();
}

bool is_prime_diagram(const Diagram& d) {
    if (d.crossing_count() == 0) throw DisconnectedInput("primality needs at least one crossing");
    auto comp = graph_components(d);
    if (*std::max_element(comp.begin(), comp.end()) != 0 || d.free_loops() > 0)
        throw DisconnectedInput("primality test requires a connected diagram");
    const std::uint32_t n = d.crossing_count();
    if (n == 1) return true;
    const auto& edges = d.edges();
    // For every pair of edges, check whether removing both separates two
    // crossing-containing parts.
    for (EdgeId e1 = 0; e1 < edges.size(); ++e1) {
        for (EdgeId e2 = e1 + 1; e2 < edges.size(); ++e2) {
            std::vector<std::uint32_t> mark(n, UINT32_MAX);
            std::uint32_t parts = 0;
            for (std::uint32_t c0 = 0; c0 < n; ++c0) {
                if (mark[c0] != UINT32_MAX) continue;
                mark[c0] = parts;
                std::vector<std::uint32_t> stack{c0};
                while (!stack.empty()) {
                    std::uint32_t v = stack.back();
                    stack.pop_back();
                    for (std::uint32_t s = 0; s < 4; ++s) {
                        Dart h = make_dart(v, s);
                        EdgeId e = d.edge_of(h);
                        if (e == e1 || e == e2) continue;
                        std::uint32_t w = crossing_of(d.pair(h));
                        if (mark[w] == UINT32_MAX) {
                            mark[w] = parts;
                            stack.push_back(w);
                        }
                    }
                }
                ++parts;
            }
            if (parts >= 2) return false;
        }
    }
    return true;
}

}  // namespace flype
