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

#include <charconv>
#include <sstream>

#include "lrq/error.hpp"
#include "lrq/simulator.hpp"

namespace lrq {

std::string samples_to_text(const SampleSet &samples) {
    std::ostringstream out;
    out << "lrq-samples v1 nq=" << samples.n_qubits << " shots=" << samples.shots << '\n';
    for (const auto &[bits, count] : samples.counts) {
        out << bits.to_string() << ' ' << count << '\n';
    }
    return out.str();
}

namespace {

std::string at_line(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

std::uint64_t parse_count(std::string_view text, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(at_line(line_no) + "count overflow '" + std::string(text) + "'");
    }
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError(at_line(line_no) + "invalid count '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

SampleSet samples_from_text(std::string_view text, std::optional<std::size_t> expected_width) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> width = expected_width;
    std::optional<std::uint64_t> declared_shots;
    SampleSet out;
    bool any = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first.starts_with('#')) {
            continue;
        }
        if (first == "lrq-samples") {
            if (any) {
                throw ParseError(at_line(line_no) + "header must come first");
            }
            std::string tok;
            while (fields >> tok) {
                if (tok.starts_with("nq=")) {
                    const auto nq = static_cast<std::size_t>(parse_count(std::string_view(tok).substr(3), line_no));
                    if (width && *width != nq) {
                        throw ParseError(at_line(line_no) + "width mismatch: header nq=" + std::to_string(nq) +
                                         ", instance has " + std::to_string(*width) + " nodes");
                    }
                    width = nq;
                } else if (tok.starts_with("shots=")) {
                    declared_shots = parse_count(std::string_view(tok).substr(6), line_no);
                }
            }
            continue;
        }
        Bitstring bits;
        try {
            bits = Bitstring::parse(first);
        } catch (const ParseError &e) {
            throw ParseError(at_line(line_no) + e.what());
        }
        if (!width) {
            width = bits.size();
        }
        if (bits.size() != *width) {
            throw ParseError(at_line(line_no) + "width mismatch: bitstring has " + std::to_string(bits.size()) +
                             " bits, expected " + std::to_string(*width));
        }
        std::uint64_t count = 1;
        std::string count_text;
        if (fields >> count_text) {
            count = parse_count(count_text, line_no);
        }
        std::string trailing;
        if (fields >> trailing) {
            throw ParseError(at_line(line_no) + "unexpected trailing field '" + trailing + "'");
        }
        if (!any) {
            out.n_qubits = *width;
            any = true;
        }
        try {
            out.add(bits, count);
        } catch (const std::overflow_error &) {
            throw ParseError(at_line(line_no) + "count overflow");
        }
    }
    if (!any || out.shots == 0) {
        throw ParseError("sample file contains no samples");
    }
    if (declared_shots && *declared_shots != out.shots) {
        throw ParseError("header declares shots=" + std::to_string(*declared_shots) + " but lines sum to " +
                         std::to_string(out.shots));
    }
    return out;
}

}  // namespace lrq
