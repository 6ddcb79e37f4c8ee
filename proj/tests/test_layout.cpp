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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace hexmatch;

TEST(layout, single_hexagon_counts) {
    LayoutSpec layout = build_heavy_hex_layout(1, 1);
    EXPECT_EQ(layout.num_qubits(), 12u);
    EXPECT_EQ(layout.couplings.size(), 12u);
    size_t vertices = 0;
    for (const auto &q : layout.qubits) {
        vertices += q.role == QubitRole::Vertex;
    }
    EXPECT_EQ(vertices, 6u);
    validate_layout(layout);
}

TEST(layout, builtin_qubit_counts) {
    LayoutSpec falcon = build_heavy_hex_layout("falcon-27");
    EXPECT_EQ(falcon.num_qubits(), 27u);
    EXPECT_EQ(falcon.couplings.size(), 28u);
    validate_layout(falcon);

    LayoutSpec hummingbird = build_heavy_hex_layout("hummingbird-65");
    EXPECT_EQ(hummingbird.num_qubits(), 65u);
    EXPECT_EQ(hummingbird.couplings.size(), 72u);
    validate_layout(hummingbird);
}

TEST(layout, unknown_name_rejected) {
    EXPECT_THROW(build_heavy_hex_layout("eagle-127"), std::invalid_argument);
    EXPECT_THROW(build_heavy_hex_layout(0, 3), std::invalid_argument);
    EXPECT_THROW(build_heavy_hex_layout(3, -1), std::invalid_argument);
}

TEST(layout, generators_are_deterministic) {
    EXPECT_EQ(build_heavy_hex_layout(3, 4), build_heavy_hex_layout(3, 4));
    EXPECT_EQ(build_heavy_hex_layout("falcon-27"), build_heavy_hex_layout("falcon-27"));
    EXPECT_EQ(build_heavy_hex_layout("hummingbird-65"), build_heavy_hex_layout("hummingbird-65"));
}

TEST(layout, row_major_indexing) {
    LayoutSpec layout = build_heavy_hex_layout("hummingbird-65");
    for (size_t i = 1; i < layout.qubits.size(); i++) {
        const auto &a = layout.qubits[i - 1];
        const auto &b = layout.qubits[i];
        EXPECT_TRUE(a.y < b.y || (a.y == b.y && a.x < b.x));
    }
}

TEST(layout, json_round_trip) {
    LayoutSpec layout = build_heavy_hex_layout(2, 3);
    std::stringstream buf;
    save_layout_json(layout, buf);
    LayoutSpec loaded = load_layout_json(buf, "buffer");
    EXPECT_EQ(layout, loaded);
}

TEST(layout, json_schema_errors) {
    std::stringstream bad1("{\"name\": \"x\"}");
    EXPECT_THROW(load_layout_json(bad1, "buffer"), std::invalid_argument);
    std::stringstream bad2("not json at all");
    EXPECT_THROW(load_layout_json(bad2, "buffer"), std::invalid_argument);
    // disconnected graph
    std::stringstream bad3(R"({
        "name": "disconnected",
        "qubits": [
            {"index": 0, "role": "vertex", "x": 0, "y": 0},
            {"index": 1, "role": "edge", "x": 1, "y": 0},
            {"index": 2, "role": "vertex", "x": 2, "y": 0},
            {"index": 3, "role": "vertex", "x": 6, "y": 0}
        ],
        "couplings": [[0, 1], [1, 2]]
    })");
    EXPECT_THROW(load_layout_json(bad3, "buffer"), std::invalid_argument);
}

TEST(layout, resolve_descriptor_forms) {
    EXPECT_EQ(resolve_layout("falcon-27").num_qubits(), 27u);
    EXPECT_EQ(resolve_layout("hex-2x2").name, "hex-2x2");
    EXPECT_THROW(resolve_layout("/does/not/exist.json"), std::invalid_argument);

    std::string path = testing::TempDir() + "hexmatch_layout_roundtrip.json";
    {
        std::ofstream out(path);
        save_layout_json(build_heavy_hex_layout(1, 2), out);
    }
    EXPECT_EQ(resolve_layout(path).num_qubits(), build_heavy_hex_layout(1, 2).num_qubits());
}

TEST(layout, builtin_files_match_builders) {
    for (const char *name : {"falcon-27", "hummingbird-65"}) {
        std::string path = std::string(HEXMATCH_SOURCE_DIR) + "/data/" + name + ".json";
        LayoutSpec from_file = load_layout_file(path);
        EXPECT_EQ(from_file, build_heavy_hex_layout(name)) << name;
    }
}
