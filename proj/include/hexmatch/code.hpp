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

#ifndef HEXMATCH_CODE_HPP
#define HEXMATCH_CODE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hexmatch/layout.hpp"
#include "hexmatch/pauli.hpp"

namespace hexmatch {

enum class LinkType : uint8_t { X, Y, Z };

char link_type_char(LinkType t);

/// A link operator sigma^a (x) sigma^a on the two vertex qubits of a lattice
/// edge, or its single-qubit truncation at the device boundary. Truncated
/// links are always Z type and have exactly one data qubit; they may or may
/// not carry an (unused) auxiliary qubit.
struct Link {
    uint32_t id = 0;
    LinkType type = LinkType::Z;
    std::vector<uint32_t> data_qubits;  // 1 or 2 vertex qubits, ascending
    std::optional<uint32_t> aux_qubit;
    bool truncated = false;
};

/// A hexagonal face. `qubits` lists the six corner qubits in the fixed
/// convention [top-left, bottom-left, bottom-mid, bottom-right, top-right,
/// top-mid], chosen so that the boundary link between qubits k and k+1 has
/// type z, x, y, z, x, y for k = 0..5. The plaquette operator is then
/// W = X0 Y1 Z2 X3 Y4 Z5.
struct Plaquette {
    uint32_t id = 0;
    std::array<uint32_t, 6> qubits{};
    std::array<uint32_t, 6> boundary_links{};  // boundary_links[k] joins qubits k, k+1 mod 6
    std::array<uint32_t, 3> group_a{};         // one z, one y, one x; ascending link id
    std::array<uint32_t, 3> group_b{};
    std::vector<uint32_t> incident_z_links;    // every z stabilizer touching a corner
    uint32_t shift = 0;
};

struct LinkClassification {
    std::vector<Link> links;
    // Edge qubits with a single vertex neighbor in a non-z orientation; they
    // yield no link and are reported here.
    std::vector<uint32_t> excluded_edge_qubits;
};

struct PlaquetteBuildResult {
    std::vector<Plaquette> plaquettes;
    std::vector<std::string> excluded_faces;  // diagnostics for faces with missing x/y links
};

struct CodeSpec {
    LayoutSpec layout;
    std::vector<Link> links;
    std::vector<Plaquette> plaquettes;
    std::vector<uint32_t> z_stabilizers;  // ids of all z-type links, ascending
    uint32_t num_shifts = 0;
};

/// Classifies every edge qubit of the layout into a link. The orientation of
/// an edge follows the grid: vertical edges are z links; horizontal edges are
/// x links when their left vertex has its z link pointing up and y links
/// otherwise. Vertical edges with a single vertex neighbor become truncated z
/// links; horizontal ones are excluded and reported.
LinkClassification classify_links(const LayoutSpec &layout);

/// One plaquette per hexagonal face whose six corners and six boundary links
/// all exist. Faces with missing boundary links are excluded with a
/// diagnostic (only z links may ever be truncated, and boundary links join
/// two on-device corners, so truncation never applies to them).
PlaquetteBuildResult build_plaquettes(const LayoutSpec &layout, const std::vector<Link> &links);

/// Every z stabilizer (truncated included) touching any corner of the
/// plaquette, ascending id.
std::vector<uint32_t> incident_z_links(const Plaquette &plaquette, const CodeSpec &code);

/// Greedy deterministic shift assignment: plaquettes in id order take the
/// lowest shift whose members all have incident z-link sets disjoint from
/// theirs. Fills plaquette.shift and code.num_shifts.
void schedule_shifts(CodeSpec &code);

/// Full construction: classify links, build plaquettes, synthesize truncated
/// z links for plaquette corners whose z link is entirely absent from the
/// device, compute incident sets, pick z stabilizers, schedule shifts.
CodeSpec build_code(const LayoutSpec &layout);

/// The link operator as a symbolic Pauli string over all layout qubits.
PauliString link_operator(const Link &link, uint32_t num_qubits);

/// W = X0 Y1 Z2 X3 Y4 Z5 over the plaquette's corners.
PauliString plaquette_operator(const Plaquette &plaquette, uint32_t num_qubits);

/// Product of the link operators of group a or b.
PauliString group_operator(const CodeSpec &code, const std::array<uint32_t, 3> &group);

}  // namespace hexmatch

#endif
