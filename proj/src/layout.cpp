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

#include "hexmatch/layout.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hexmatch {

namespace {

struct GridPoint {
    int32_t x;
    int32_t y;
    bool operator<(const GridPoint &o) const {
        return std::tie(y, x) < std::tie(o.y, o.x);
    }
};

/// Accumulates sites keyed by grid position, then assigns row-major indices
/// and derives couplings from the aux-centric geometry (every coupling in a
/// heavy-hex layout joins an edge qubit to a vertex qubit).
struct GridBuilder {
    std::map<GridPoint, QubitRole> sites;

    void add(int32_t x, int32_t y, QubitRole role) {
        auto it = sites.find({x, y});
        if (it != sites.end()) {
            if (it->second != role) {
                throw std::logic_error("heavy-hex grid: conflicting roles at one site");
            }
            return;
        }
        sites[{x, y}] = role;
    }

    LayoutSpec finish(const std::string &name) {
        LayoutSpec layout;
        layout.name = name;

        int32_t min_x = 0;
        int32_t min_y = 0;
        if (!sites.empty()) {
            min_y = sites.begin()->first.y;
            min_x = sites.begin()->first.x;
            for (const auto &[p, role] : sites) {
                min_x = std::min(min_x, p.x);
            }
        }

        std::map<GridPoint, uint32_t> index_of;
        for (const auto &[p, role] : sites) {
            uint32_t idx = static_cast<uint32_t>(layout.qubits.size());
            index_of[p] = idx;
            layout.qubits.push_back({idx, role, p.x - min_x, p.y - min_y});
        }

        for (const auto &[p, role] : sites) {
            if (role != QubitRole::Edge) {
                continue;
            }
            uint32_t aux = index_of[p];
            const GridPoint candidates[4] = {
                {p.x - 1, p.y}, {p.x + 1, p.y}, {p.x, p.y - 1}, {p.x, p.y + 1}};
            for (const auto &c : candidates) {
                auto it = sites.find(c);
                if (it != sites.end() && it->second == QubitRole::Vertex) {
                    uint32_t v = index_of[c];
                    layout.couplings.emplace_back(std::min(aux, v), std::max(aux, v));
                }
            }
        }
        std::sort(layout.couplings.begin(), layout.couplings.end());
        return layout;
    }
};

/// Adds the twelve sites of the hexagon whose top-left corner sits at corner
/// column cc, hexagon row hr. Corner (c, r) maps to grid (2c, 2r).
void add_hexagon(GridBuilder &b, int cc, int hr) {
    int x0 = 2 * cc;
    int y0 = 2 * hr;
    for (int k = 0; k <= 4; k++) {
        b.add(x0 + k, y0, k % 2 == 0 ? QubitRole::Vertex : QubitRole::Edge);      // top side
        b.add(x0 + k, y0 + 2, k % 2 == 0 ? QubitRole::Vertex : QubitRole::Edge);  // bottom side
    }
    b.add(x0, y0 + 1, QubitRole::Edge);      // left vertical
    b.add(x0 + 4, y0 + 1, QubitRole::Edge);  // right vertical
}

/// Corner column of the top-left corner of hexagon (hr, hc). Odd hexagon
/// rows are offset by one corner column (the brick-wall pattern).
int hexagon_base_column(int hr, int hc) {
    return 2 * hc + (hr & 1);
}

LayoutSpec build_falcon_27() {
    GridBuilder b;
    for (int hc = 0; hc < 2; hc++) {
        add_hexagon(b, hexagon_base_column(0, hc), 0);
    }
    // Dangling auxiliaries present on the 27-qubit devices: vertical stubs
    // above/below the mid corners (these carry truncated z-links) and one
    // horizontal stub at each end.
    b.add(2, -1, QubitRole::Edge);
    b.add(6, -1, QubitRole::Edge);
    b.add(2, 3, QubitRole::Edge);
    b.add(6, 3, QubitRole::Edge);
    b.add(-1, 0, QubitRole::Edge);
    b.add(9, 2, QubitRole::Edge);
    return b.finish("falcon-27");
}

LayoutSpec build_hummingbird_65() {
    GridBuilder b;
    for (int hr = 0; hr < 4; hr++) {
        for (int hc = 0; hc < 2; hc++) {
            add_hexagon(b, hexagon_base_column(hr, hc), hr);
        }
    }
    // Horizontal stubs at the top-right and bottom-left row ends.
    b.add(9, 0, QubitRole::Edge);
    b.add(1, 8, QubitRole::Edge);
    return b.finish("hummingbird-65");
}

}  // namespace

LayoutSpec build_heavy_hex_layout(const std::string &name) {
    if (name == "falcon-27") {
        return build_falcon_27();
    }
    if (name == "hummingbird-65") {
        return build_hummingbird_65();
    }
    throw std::invalid_argument("unknown layout name: " + name);
}

LayoutSpec build_heavy_hex_layout(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("heavy-hex generator requires rows >= 1 and cols >= 1");
    }
    GridBuilder b;
    for (int hr = 0; hr < rows; hr++) {
        for (int hc = 0; hc < cols; hc++) {
            add_hexagon(b, hexagon_base_column(hr, hc), hr);
        }
    }
    std::ostringstream name;
    name << "hex-" << rows << "x" << cols;
    return b.finish(name.str());
}

LayoutSpec resolve_layout(const std::string &descriptor) {
    if (descriptor == "falcon-27" || descriptor == "hummingbird-65") {
        return build_heavy_hex_layout(descriptor);
    }
    if (descriptor.rfind("hex-", 0) == 0) {
        size_t sep = descriptor.find('x', 4);
        if (sep != std::string::npos) {
            try {
                int rows = std::stoi(descriptor.substr(4, sep - 4));
                int cols = std::stoi(descriptor.substr(sep + 1));
                return build_heavy_hex_layout(rows, cols);
            } catch (const std::invalid_argument &) {
                // fall through to file lookup
            }
        }
    }
    std::ifstream in(descriptor);
    if (!in) {
        throw std::invalid_argument(
            "layout descriptor is neither a built-in name, hex-RxC, nor a readable file: " + descriptor);
    }
    return load_layout_json(in, descriptor);
}

void validate_layout(const LayoutSpec &layout) {
    size_t n = layout.qubits.size();
    if (n == 0) {
        throw std::invalid_argument("layout has no qubits");
    }
    for (size_t i = 0; i < n; i++) {
        if (layout.qubits[i].index != i) {
            throw std::invalid_argument("layout qubit indices must be contiguous from 0");
        }
    }
    for (const auto &[a, b] : layout.couplings) {
        if (a >= n || b >= n || a == b) {
            throw std::invalid_argument("layout coupling references an invalid qubit index");
        }
    }

    auto adj = coupling_adjacency(layout);
    for (const auto &q : layout.qubits) {
        if (q.role != QubitRole::Edge) {
            continue;
        }
        size_t vertex_neighbors = 0;
        for (uint32_t nb : adj[q.index]) {
            if (layout.qubits[nb].role == QubitRole::Edge) {
                throw std::invalid_argument("edge qubits must not couple to edge qubits");
            }
            vertex_neighbors++;
        }
        if (vertex_neighbors < 1 || vertex_neighbors > 2) {
            throw std::invalid_argument("edge qubit must couple to exactly one or two vertex qubits");
        }
    }

    // Connectivity.
    std::vector<char> seen(n, 0);
    std::vector<uint32_t> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        uint32_t q = stack.back();
        stack.pop_back();
        for (uint32_t nb : adj[q]) {
            if (!seen[nb]) {
                seen[nb] = 1;
                reached++;
                stack.push_back(nb);
            }
        }
    }
    if (reached != n) {
        throw std::invalid_argument("layout coupling graph is not connected");
    }
}

std::vector<std::vector<uint32_t>> coupling_adjacency(const LayoutSpec &layout) {
    std::vector<std::vector<uint32_t>> adj(layout.qubits.size());
    for (const auto &[a, b] : layout.couplings) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

LayoutSpec load_layout_json(std::istream &in, const std::string &origin) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("failed to parse layout JSON from " + origin + ": " + e.what());
    }
    LayoutSpec layout;
    try {
        layout.name = j.at("name").get<std::string>();
        for (const auto &q : j.at("qubits")) {
            QubitSite site;
            site.index = q.at("index").get<uint32_t>();
            std::string role = q.at("role").get<std::string>();
            if (role == "vertex") {
                site.role = QubitRole::Vertex;
            } else if (role == "edge") {
                site.role = QubitRole::Edge;
            } else {
                throw std::invalid_argument("layout qubit role must be \"vertex\" or \"edge\"");
            }
            site.x = q.at("x").get<int32_t>();
            site.y = q.at("y").get<int32_t>();
            layout.qubits.push_back(site);
        }
        for (const auto &c : j.at("couplings")) {
            uint32_t a = c.at(0).get<uint32_t>();
            uint32_t b = c.at(1).get<uint32_t>();
            layout.couplings.emplace_back(std::min(a, b), std::max(a, b));
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("layout JSON from " + origin + " violates the schema: " + e.what());
    }
    std::sort(layout.qubits.begin(), layout.qubits.end(), [](const QubitSite &a, const QubitSite &b) {
        return a.index < b.index;
    });
    std::sort(layout.couplings.begin(), layout.couplings.end());
    validate_layout(layout);
    return layout;
}

LayoutSpec load_layout_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open layout file: " + path);
    }
    return load_layout_json(in, path);
}

void save_layout_json(const LayoutSpec &layout, std::ostream &out) {
    nlohmann::json j;
    j["name"] = layout.name;
    j["qubits"] = nlohmann::json::array();
    for (const auto &q : layout.qubits) {
        j["qubits"].push_back({
            {"index", q.index},
            {"role", q.role == QubitRole::Vertex ? "vertex" : "edge"},
            {"x", q.x},
            {"y", q.y},
        });
    }
    j["couplings"] = nlohmann::json::array();
    for (const auto &[a, b] : layout.couplings) {
        j["couplings"].push_back({a, b});
    }
    out << j.dump(2) << "\n";
}

}  // namespace hexmatch
