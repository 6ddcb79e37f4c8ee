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

#ifndef HEXMATCH_LAYOUT_HPP
#define HEXMATCH_LAYOUT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hexmatch {

enum class QubitRole : uint8_t {
    Vertex,  // data qubit on a lattice vertex
    Edge,    // auxiliary qubit on a lattice edge
};

/// One physical qubit site on the integer grid used by the brick-wall
/// embedding: vertex qubits sit at even-x grid points of a vertex row,
/// horizontal auxiliaries between them (odd x), and vertical auxiliaries on
/// the rows in between.
struct QubitSite {
    uint32_t index = 0;
    QubitRole role = QubitRole::Vertex;
    int32_t x = 0;
    int32_t y = 0;

    bool operator==(const QubitSite &other) const = default;
};

/// The physical qubit graph: sites plus couplings. Qubit indices are
/// contiguous from 0 and assigned row-major (by y, then x).
struct LayoutSpec {
    std::string name;
    std::vector<QubitSite> qubits;                        // indexed by qubit index
    std::vector<std::pair<uint32_t, uint32_t>> couplings;  // unordered pairs, stored a < b

    size_t num_qubits() const {
        return qubits.size();
    }

    bool operator==(const LayoutSpec &other) const = default;
};

/// Builds one of the named device layouts ("falcon-27", "hummingbird-65").
LayoutSpec build_heavy_hex_layout(const std::string &name);

/// Builds a rows x cols lattice of complete heavy hexagons (no dangling
/// boundary auxiliaries).
LayoutSpec build_heavy_hex_layout(int rows, int cols);

/// Accepts a built-in layout name, a "hex-RxC" generator descriptor, or a
/// path to a layout JSON file.
LayoutSpec resolve_layout(const std::string &descriptor);

/// Throws std::invalid_argument if any LayoutSpec invariant is violated:
/// contiguous indices, edge qubits coupled to 1..2 vertex qubits and to no
/// edge qubit, connected coupling graph.
void validate_layout(const LayoutSpec &layout);

/// Adjacency lists of the coupling graph.
std::vector<std::vector<uint32_t>> coupling_adjacency(const LayoutSpec &layout);

LayoutSpec load_layout_json(std::istream &in, const std::string &origin);
LayoutSpec load_layout_file(const std::string &path);
void save_layout_json(const LayoutSpec &layout, std::ostream &out);

}  // namespace hexmatch

#endif
