// Copyright 2026 The hexmatch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hexmatch/code.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hexmatch {

char link_type_char(LinkType t) {
    switch (t) {
        case LinkType::X:
            return 'x';
        case LinkType::Y:
            return 'y';
        case LinkType::Z:
            return 'z';
    }
    return '?';
}

namespace {

struct Pos {
    int32_t x;
    int32_t y;
    bool operator<(const Pos &o) const {
        return std::tie(y, x) < std::tie(o.y, o.x);
    }
};

std::map<Pos, uint32_t> position_index(const LayoutSpec &layout) {
    std::map<Pos, uint32_t> m;
    for (const auto &q : layout.qubits) {
        m[{q.x, q.y}] = q.index;
    }
    return m;
}

/// Checkerboard color of a vertex site; adjacent corners along a row and
/// vertically adjacent rows have opposite color.
int vertex_color(const QubitSite &v) {
    return ((v.x >> 1) + (v.y >> 1)) & 1;
}

}  // namespace

LinkClassification classify_links(const LayoutSpec &layout) {
    validate_layout(layout);
    auto adj = coupling_adjacency(layout);

    // The x/y assignment depends on which vertices have their z link pointing
    // up. That alternates with the checkerboard color of the vertex; the
    // absolute gauge is fixed by the first vertical edge (color of the upper
    // vertex of every vertical edge must agree).
    std::optional<int> down_color;
    for (const auto &q : layout.qubits) {
        if (q.role != QubitRole::Edge) {
            continue;
        }
        for (uint32_t nb : adj[q.index]) {
            const auto &v = layout.qubits[nb];
            if (v.x == q.x && v.y == q.y - 1) {
                // vertex above this aux: its z link points down
                int c = vertex_color(v);
                if (!down_color.has_value()) {
                    down_color = c;
                } else if (*down_color != c) {
                    throw std::invalid_argument(
                        "layout vertical edges are not consistent with a hexagonal brick embedding");
                }
            }
        }
    }
    int zdown = down_color.value_or(0);

    LinkClassification out;
    for (const auto &q : layout.qubits) {
        if (q.role != QubitRole::Edge) {
            continue;
        }
        std::vector<uint32_t> vs = adj[q.index];
        std::sort(vs.begin(), vs.end());
        if (vs.empty()) {
            std::ostringstream msg;
            msg << "edge qubit " << q.index << " has no vertex neighbor";
            throw std::invalid_argument(msg.str());
        }

        bool vertical = true;
        bool horizontal = true;
        for (uint32_t nb : vs) {
            const auto &v = layout.qubits[nb];
            vertical = vertical && v.x == q.x && (v.y == q.y - 1 || v.y == q.y + 1);
            horizontal = horizontal && v.y == q.y && (v.x == q.x - 1 || v.x == q.x + 1);
        }
        if (!vertical && !horizontal) {
            std::ostringstream msg;
            msg << "edge qubit " << q.index << " is not axis-aligned with its vertex neighbors";
            throw std::invalid_argument(msg.str());
        }

        if (vertical) {
            Link link;
            link.id = static_cast<uint32_t>(out.links.size());
            link.type = LinkType::Z;
            link.data_qubits = vs;
            link.aux_qubit = q.index;
            link.truncated = vs.size() == 1;
            out.links.push_back(std::move(link));
            continue;
        }

        if (vs.size() == 1) {
            out.excluded_edge_qubits.push_back(q.index);
            continue;
        }

        const auto &left = layout.qubits[vs[0]].x < layout.qubits[vs[1]].x ? layout.qubits[vs[0]]
                                                                           : layout.qubits[vs[1]];
        Link link;
        link.id = static_cast<uint32_t>(out.links.size());
        link.type = vertex_color(left) == zdown ? LinkType::Y : LinkType::X;
        link.data_qubits = vs;
        link.aux_qubit = q.index;
        link.truncated = false;
        out.links.push_back(std::move(link));
    }
    return out;
}

PlaquetteBuildResult build_plaquettes(const LayoutSpec &layout, const std::vector<Link> &links) {
    auto pos = position_index(layout);

    std::map<std::pair<uint32_t, uint32_t>, const Link *> link_between;
    for (const auto &link : links) {
        if (link.data_qubits.size() == 2) {
            link_between[{link.data_qubits[0], link.data_qubits[1]}] = &link;
        }
    }
    auto find_link = [&](uint32_t a, uint32_t b) -> const Link * {
        auto it = link_between.find({std::min(a, b), std::max(a, b)});
        return it == link_between.end() ? nullptr : it->second;
    };
    auto vertex_at = [&](int32_t x, int32_t y) -> std::optional<uint32_t> {
        auto it = pos.find({x, y});
        if (it == pos.end() || layout.qubits[it->second].role != QubitRole::Vertex) {
            return std::nullopt;
        }
        return it->second;
    };

    PlaquetteBuildResult out;
    for (const auto &q : layout.qubits) {
        if (q.role != QubitRole::Vertex) {
            continue;
        }
        // Treat q as the candidate top-left corner of a face.
        auto tl = vertex_at(q.x, q.y);
        auto tm = vertex_at(q.x + 2, q.y);
        auto tr = vertex_at(q.x + 4, q.y);
        auto bl = vertex_at(q.x, q.y + 2);
        auto bm = vertex_at(q.x + 2, q.y + 2);
        auto br = vertex_at(q.x + 4, q.y + 2);
        if (!tl || !tm || !tr || !bl || !bm || !br) {
            continue;
        }
        // Left vertical must exist for this to be a face anchored here.
        const Link *left = find_link(*tl, *bl);
        if (left == nullptr) {
            continue;
        }

        std::array<uint32_t, 6> corners = {*tl, *bl, *bm, *br, *tr, *tm};
        const Link *boundary[6];
        boundary[0] = left;
        bool complete = true;
        std::ostringstream missing;
        for (int k = 1; k < 6; k++) {
            boundary[k] = find_link(corners[k], corners[(k + 1) % 6]);
            if (boundary[k] == nullptr) {
                if (!complete) {
                    missing << ", ";
                }
                complete = false;
                missing << corners[k] << "-" << corners[(k + 1) % 6];
            }
        }
        if (!complete) {
            std::ostringstream msg;
            msg << "face anchored at qubit " << *tl << " excluded: missing boundary links "
                << missing.str();
            out.excluded_faces.push_back(msg.str());
            continue;
        }

        static const LinkType expected[6] = {LinkType::Z, LinkType::X, LinkType::Y,
                                             LinkType::Z, LinkType::X, LinkType::Y};
        for (int k = 0; k < 6; k++) {
            if (boundary[k]->type != expected[k]) {
                throw std::logic_error("face boundary types do not follow the z,x,y,z,x,y pattern");
            }
        }

        Plaquette p;
        p.id = static_cast<uint32_t>(out.plaquettes.size());
        p.qubits = corners;
        for (int k = 0; k < 6; k++) {
            p.boundary_links[k] = boundary[k]->id;
        }
        p.group_a = {p.boundary_links[0], p.boundary_links[2], p.boundary_links[4]};
        p.group_b = {p.boundary_links[1], p.boundary_links[3], p.boundary_links[5]};
        std::sort(p.group_a.begin(), p.group_a.end());
        std::sort(p.group_b.begin(), p.group_b.end());
        out.plaquettes.push_back(std::move(p));
    }
    return out;
}

std::vector<uint32_t> incident_z_links(const Plaquette &plaquette, const CodeSpec &code) {
    std::vector<uint32_t> out;
    for (uint32_t id : code.z_stabilizers) {
        const Link &link = code.links[id];
        for (uint32_t d : link.data_qubits) {
            if (std::find(plaquette.qubits.begin(), plaquette.qubits.end(), d) !=
                plaquette.qubits.end()) {
                out.push_back(id);
                break;
            }
        }
    }
    return out;
}

void schedule_shifts(CodeSpec &code) {
    std::vector<std::vector<const Plaquette *>> shifts;
    for (auto &p : code.plaquettes) {
        std::set<uint32_t> mine(p.incident_z_links.begin(), p.incident_z_links.end());
        uint32_t s = 0;
        for (; s < shifts.size(); s++) {
            bool clash = false;
            for (const Plaquette *other : shifts[s]) {
                for (uint32_t id : other->incident_z_links) {
                    if (mine.count(id)) {
                        clash = true;
                        break;
                    }
                }
                if (clash) {
                    break;
                }
            }
            if (!clash) {
                break;
            }
        }
        if (s == shifts.size()) {
            shifts.emplace_back();
        }
        p.shift = s;
        shifts[s].push_back(&p);
    }
    code.num_shifts = static_cast<uint32_t>(shifts.size());
}

CodeSpec build_code(const LayoutSpec &layout) {
    CodeSpec code;
    code.layout = layout;

    auto classification = classify_links(layout);
    code.links = std::move(classification.links);

    auto faces = build_plaquettes(layout, code.links);
    code.plaquettes = std::move(faces.plaquettes);

    // Vertices covered by some z link.
    std::set<uint32_t> z_covered;
    for (const auto &link : code.links) {
        if (link.type == LinkType::Z) {
            z_covered.insert(link.data_qubits.begin(), link.data_qubits.end());
        }
    }

    // A plaquette corner whose z link is entirely absent from the device
    // still needs a z stabilizer: the two-body operator truncates to a
    // single-qubit Z measured directly on the corner.
    std::set<uint32_t> need_truncated;
    for (const auto &p : code.plaquettes) {
        for (uint32_t v : p.qubits) {
            if (!z_covered.count(v)) {
                need_truncated.insert(v);
            }
        }
    }
    for (uint32_t v : need_truncated) {
        Link link;
        link.id = static_cast<uint32_t>(code.links.size());
        link.type = LinkType::Z;
        link.data_qubits = {v};
        link.aux_qubit = std::nullopt;
        link.truncated = true;
        code.links.push_back(std::move(link));
    }

    for (const auto &link : code.links) {
        if (link.type == LinkType::Z) {
            code.z_stabilizers.push_back(link.id);
        }
    }

    // No vertex may be touched by two z stabilizers.
    std::set<uint32_t> seen;
    for (uint32_t id : code.z_stabilizers) {
        for (uint32_t d : code.links[id].data_qubits) {
            if (!seen.insert(d).second) {
                throw std::invalid_argument("two z stabilizers touch the same vertex qubit");
            }
        }
    }

    for (auto &p : code.plaquettes) {
        p.incident_z_links = incident_z_links(p, code);
    }
    schedule_shifts(code);
    return code;
}

PauliString link_operator(const Link &link, uint32_t num_qubits) {
    PauliString p(num_qubits);
    char c = static_cast<char>(link_type_char(link.type) - 'a' + 'A');
    for (uint32_t q : link.data_qubits) {
        p.set_pauli(q, c);
    }
    return p;
}

PauliString plaquette_operator(const Plaquette &plaquette, uint32_t num_qubits) {
    static const char pattern[6] = {'X', 'Y', 'Z', 'X', 'Y', 'Z'};
    PauliString p(num_qubits);
    for (int k = 0; k < 6; k++) {
        p.set_pauli(plaquette.qubits[k], pattern[k]);
    }
    return p;
}

PauliString group_operator(const CodeSpec &code, const std::array<uint32_t, 3> &group) {
    PauliString p(static_cast<uint32_t>(code.layout.num_qubits()));
    for (uint32_t id : group) {
        p.mul(link_operator(code.links[id], p.num_qubits));
    }
    return p;
}

}  // namespace hexmatch
