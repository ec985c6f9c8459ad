/*
 * Copyright 2026 The lrqbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

#include "lrq/error.hpp"
#include "lrq/problems.hpp"

namespace lrq {

namespace {

// Heavy-hex lattices as IBM numbers them: a row of qubits, then the bridge
// qubits hanging below it, then the next row. Each bridge qubit joins the
// same column of two consecutive rows; a trailing group only touches the
// last row.
struct HeavyHexLayout {
    struct Row {
        unsigned first_col;
        unsigned last_col;
    };
    std::vector<Row> rows;
    std::array<unsigned, 4> even_gap_cols;
    std::array<unsigned, 4> odd_gap_cols;
    bool trailing_group;
};

std::vector<Coupling> build_heavy_hex(const HeavyHexLayout &layout) {
    std::vector<Coupling> out;
    NodeIndex next = 0;
    std::vector<std::vector<NodeIndex>> row_ids;  // row -> col -> id (or sentinel)
    constexpr NodeIndex kNone = ~NodeIndex{0};
    std::vector<std::vector<NodeIndex>> bridge_ids;
    const std::size_t n_gaps = layout.rows.size() - 1 + (layout.trailing_group ? 1 : 0);
    for (std::size_t r = 0; r < layout.rows.size(); ++r) {
        const auto &row = layout.rows[r];
        std::vector<NodeIndex> ids(row.last_col + 1, kNone);
        for (unsigned c = row.first_col; c <= row.last_col; ++c) {
            ids[c] = next++;
            if (c > row.first_col) {
                out.emplace_back(ids[c - 1], ids[c]);
            }
        }
        row_ids.push_back(std::move(ids));
        if (r < n_gaps) {
            std::vector<NodeIndex> bridges;
            for (int k = 0; k < 4; ++k) {
                bridges.push_back(next++);
            }
            bridge_ids.push_back(std::move(bridges));
        }
    }
    for (std::size_t g = 0; g < n_gaps; ++g) {
        const auto &cols = (g % 2 == 0) ? layout.even_gap_cols : layout.odd_gap_cols;
        for (int k = 0; k < 4; ++k) {
            const NodeIndex bridge = bridge_ids[g][k];
            out.emplace_back(row_ids[g].at(cols[k]), bridge);
            if (g + 1 < row_ids.size()) {
                out.emplace_back(bridge, row_ids[g + 1].at(cols[k]));
            }
        }
    }
    for (auto &[u, v] : out) {
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Coupling> eagle127() {
    HeavyHexLayout layout;
    layout.rows = {{0, 13}, {0, 14}, {0, 14}, {0, 14}, {0, 14}, {0, 14}, {1, 14}};
    layout.even_gap_cols = {0, 4, 8, 12};
    layout.odd_gap_cols = {2, 6, 10, 14};
    layout.trailing_group = false;
    return build_heavy_hex(layout);
}

std::vector<Coupling> heron133() {
    HeavyHexLayout layout;
    layout.rows.assign(7, {0, 14});
    layout.even_gap_cols = {0, 4, 8, 12};
    layout.odd_gap_cols = {2, 6, 10, 14};
    layout.trailing_group = true;
    return build_heavy_hex(layout);
}

std::vector<Coupling> heron156() {
    HeavyHexLayout layout;
    layout.rows.assign(8, {0, 15});
    layout.even_gap_cols = {3, 7, 11, 15};
    layout.odd_gap_cols = {1, 5, 9, 13};
    layout.trailing_group = false;
    return build_heavy_hex(layout);
}

// 20-qubit square-lattice device, couplers listed with 1-based qubit labels.
std::vector<Coupling> garnet20() {
    static constexpr std::array<std::pair<int, int>, 30> kOneBased = {{
        {1, 2},   {1, 4},   {2, 5},   {3, 4},   {3, 8},   {4, 5},   {4, 9},   {5, 6},
        {5, 10},  {6, 7},   {6, 11},  {7, 12},  {8, 9},   {8, 13},  {9, 10},  {9, 14},
        {10, 11}, {10, 15}, {11, 12}, {11, 16}, {12, 17}, {13, 14}, {14, 15}, {14, 18},
        {15, 16}, {15, 19}, {16, 17}, {16, 20}, {18, 19}, {19, 20},
    }};
    std::vector<Coupling> out;
    for (auto [a, b] : kOneBased) {
        out.emplace_back(static_cast<NodeIndex>(a - 1), static_cast<NodeIndex>(b - 1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t node_count(const std::vector<Coupling> &couplings) {
    NodeIndex max_node = 0;
    for (auto [u, v] : couplings) {
        max_node = std::max({max_node, u, v});
    }
    return couplings.empty() ? 0 : static_cast<std::size_t>(max_node) + 1;
}

std::vector<Coupling> heavy_hex_couplings(const std::string &id) {
    if (id == "eagle127") {
        return eagle127();
    }
    if (id == "heron133") {
        return heron133();
    }
    if (id == "heron156") {
        return heron156();
    }
    throw std::invalid_argument("unknown heavy-hex template '" + id +
                                "' (known: eagle127, heron133, heron156)");
}

std::vector<Coupling> square_template_couplings(const std::string &id) {
    if (id == "garnet20") {
        return garnet20();
    }
    throw std::invalid_argument("unknown square-lattice template '" + id + "' (known: garnet20)");
}

std::uint32_t parse_u32(std::string_view text, std::string_view what) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::vector<std::string> heavy_hex_templates() { return {"eagle127", "heron133", "heron156"}; }

Topology Topology::chain() { return Topology{}; }

Topology Topology::fully_connected() {
    Topology t;
    t.kind_ = TopologyKind::FullyConnected;
    return t;
}

Topology Topology::heavy_hex(std::string template_id) {
    heavy_hex_couplings(template_id);  // validates the name
    Topology t;
    t.kind_ = TopologyKind::HeavyHex;
    t.template_id_ = std::move(template_id);
    return t;
}

Topology Topology::square_grid(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0 || cols == 0 || std::uint64_t{rows} * cols < 2) {
        throw std::invalid_argument("square grid needs at least 2 nodes");
    }
    Topology t;
    t.kind_ = TopologyKind::SquareGrid;
    t.rows_ = rows;
    t.cols_ = cols;
    return t;
}

Topology Topology::square_template(std::string template_id) {
    square_template_couplings(template_id);
    Topology t;
    t.kind_ = TopologyKind::SquareGrid;
    t.template_id_ = std::move(template_id);
    return t;
}

Topology Topology::custom(std::vector<Coupling> couplings) {
    for (auto &[u, v] : couplings) {
        if (u == v) {
            throw std::invalid_argument("custom coupling list contains a self-loop");
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(couplings.begin(), couplings.end());
    if (std::adjacent_find(couplings.begin(), couplings.end()) != couplings.end()) {
        throw std::invalid_argument("custom coupling list contains duplicates");
    }
    Topology t;
    t.kind_ = TopologyKind::Custom;
    t.couplings_ = std::move(couplings);
    return t;
}

Topology Topology::parse(std::string_view tag) {
    if (tag == "chain") {
        return chain();
    }
    if (tag == "fc") {
        return fully_connected();
    }
    if (tag.starts_with("heavyhex:")) {
        return heavy_hex(std::string(tag.substr(9)));
    }
    if (tag.starts_with("grid:")) {
        const std::string_view rest = tag.substr(5);
        const auto x = rest.find('x');
        if (x != std::string_view::npos && x > 0 && rest.substr(0, x).find_first_not_of("0123456789") ==
                                                        std::string_view::npos) {
            return square_grid(parse_u32(rest.substr(0, x), "grid rows"),
                               parse_u32(rest.substr(x + 1), "grid cols"));
        }
        return square_template(std::string(rest));
    }
    if (tag == "custom") {
        throw ParseError("custom topology needs an explicit coupling list");
    }
    throw ParseError("unknown topology tag '" + std::string(tag) +
                     "' (expected chain, fc, heavyhex:<template>, grid:<r>x<c>, grid:<template>)");
}

std::string Topology::tag() const {
    switch (kind_) {
        case TopologyKind::Chain:
            return "chain";
        case TopologyKind::FullyConnected:
            return "fc";
        case TopologyKind::HeavyHex:
            return "heavyhex:" + template_id_;
        case TopologyKind::SquareGrid:
            if (!template_id_.empty()) {
                return "grid:" + template_id_;
            }
            return "grid:" + std::to_string(rows_) + "x" + std::to_string(cols_);
        case TopologyKind::Custom:
            return "custom";
    }
    return "custom";
}

bool Topology::is_native_layout() const {
    return kind_ == TopologyKind::HeavyHex || kind_ == TopologyKind::SquareGrid ||
           kind_ == TopologyKind::Custom;
}

std::vector<std::size_t> Topology::valid_sizes() const {
    switch (kind_) {
        case TopologyKind::Chain:
        case TopologyKind::FullyConnected:
            return {};
        case TopologyKind::HeavyHex:
            return {node_count(heavy_hex_couplings(template_id_))};
        case TopologyKind::SquareGrid:
            if (!template_id_.empty()) {
                return {node_count(square_template_couplings(template_id_))};
            }
            return {static_cast<std::size_t>(rows_) * cols_};
        case TopologyKind::Custom:
            return {std::max<std::size_t>(node_count(couplings_), 2)};
    }
    return {};
}

std::vector<Coupling> Topology::coupling_map(std::size_t n) const {
    const auto sizes = valid_sizes();
    if (!sizes.empty() && std::find(sizes.begin(), sizes.end(), n) == sizes.end()) {
        std::string valid;
        for (auto s : sizes) {
            valid += (valid.empty() ? "" : ", ") + std::to_string(s);
        }
        throw SizeMismatchError("size mismatch: topology " + tag() + " does not admit n=" +
                                std::to_string(n) + "; valid sizes: " + valid);
    }
    std::vector<Coupling> out;
    switch (kind_) {
        case TopologyKind::Chain:
            for (NodeIndex i = 0; i + 1 < n; ++i) {
                out.emplace_back(i, i + 1);
            }
            return out;
        case TopologyKind::FullyConnected:
            out.reserve(n * (n - 1) / 2);
            for (NodeIndex i = 0; i < n; ++i) {
                for (NodeIndex j = i + 1; j < n; ++j) {
                    out.emplace_back(i, j);
                }
            }
            return out;
        case TopologyKind::HeavyHex:
            return heavy_hex_couplings(template_id_);
        case TopologyKind::SquareGrid:
            if (!template_id_.empty()) {
                return square_template_couplings(template_id_);
            }
            for (NodeIndex r = 0; r < rows_; ++r) {
                for (NodeIndex c = 0; c < cols_; ++c) {
                    const NodeIndex id = r * cols_ + c;
                    if (c + 1 < cols_) {
                        out.emplace_back(id, id + 1);
                    }
                    if (r + 1 < rows_) {
                        out.emplace_back(id, id + cols_);
                    }
                }
            }
            std::sort(out.begin(), out.end());
            return out;
        case TopologyKind::Custom:
            return couplings_;
    }
    return out;
}

}  // namespace lrq
