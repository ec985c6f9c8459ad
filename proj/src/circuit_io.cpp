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

#include "lrq/circuit.hpp"
#include "lrq/error.hpp"
#include "lrq/io_util.hpp"

namespace lrq {

namespace {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::RX:
            return "rx";
        case GateKind::RZ:
            return "rz";
        case GateKind::RZZ:
            return "rzz";
        case GateKind::CZ:
            return "cz";
        case GateKind::CNOT:
            return "cx";
        case GateKind::SWAP:
            return "swap";
        case GateKind::MeasureAll:
            return "measure";
    }
    return "?";
}

std::string layout_text(const Circuit &c) {
    std::string out;
    for (std::size_t i = 0; i < c.layout().size(); ++i) {
        out += (i ? "," : "") + std::to_string(c.layout()[i]);
    }
    return out;
}

std::vector<std::string_view> split(std::string_view line, std::string_view separators) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const std::size_t start = line.find_first_not_of(separators, pos);
        if (start == std::string_view::npos) {
            break;
        }
        const std::size_t end = std::min(line.find_first_of(separators, start), line.size());
        out.push_back(line.substr(start, end - start));
        pos = end;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view text, std::size_t line_no) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid number '" + std::string(text) + "'");
    }
    return value;
}

std::vector<Qubit> parse_layout(std::string_view text, std::size_t line_no) {
    std::vector<Qubit> out;
    for (auto tok : split(text, ",")) {
        out.push_back(parse_number<Qubit>(tok, line_no));
    }
    return out;
}

struct Header {
    std::size_t n_qubits = 0;
    Basis basis = Basis::AbstractZZ;
    std::vector<Qubit> layout;
    bool has_nq = false;
    bool has_basis = false;
};

void read_header_fields(std::span<const std::string_view> tokens, Header &h, std::size_t line_no) {
    for (auto tok : tokens) {
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) {
            continue;
        }
        const auto key = tok.substr(0, eq);
        const auto value = tok.substr(eq + 1);
        if (key == "nq") {
            h.n_qubits = parse_number<std::size_t>(value, line_no);
            h.has_nq = true;
        } else if (key == "basis") {
            h.basis = parse_basis(value);
            h.has_basis = true;
        } else if (key == "layout") {
            h.layout = parse_layout(value, line_no);
        }
    }
}

Circuit import_neutral(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    Circuit c;
    bool have_header = false;
    std::vector<Qubit> layout;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split(line, " \t\r");
        if (tokens.empty()) {
            continue;
        }
        if (!have_header) {
            if (tokens.size() < 2 || tokens[0] != "lrq-circuit" || tokens[1] != "v1") {
                throw ParseError("line 1: expected 'lrq-circuit v1' header");
            }
            Header h;
            read_header_fields(std::span(tokens).subspan(2), h, line_no);
            if (!h.has_nq || !h.has_basis) {
                throw ParseError("line 1: header needs nq= and basis=");
            }
            c = Circuit(h.n_qubits, h.basis);
            layout = std::move(h.layout);
            have_header = true;
            continue;
        }
        const auto op = tokens[0];
        auto qubit = [&](std::size_t i) {
            if (i >= tokens.size()) {
                throw ParseError("line " + std::to_string(line_no) + ": missing operand");
            }
            return parse_number<Qubit>(tokens[i], line_no);
        };
        auto angle = [&]() {
            if (tokens.size() < 2) {
                throw ParseError("line " + std::to_string(line_no) + ": missing angle");
            }
            return parse_number<double>(tokens[1], line_no);
        };
        try {
            if (op == "h") {
                c.append(Gate::h(qubit(1)));
            } else if (op == "rx") {
                c.append(Gate::rx(angle(), qubit(2)));
            } else if (op == "rz") {
                c.append(Gate::rz(angle(), qubit(2)));
            } else if (op == "rzz") {
                c.append(Gate::rzz(angle(), qubit(2), qubit(3)));
            } else if (op == "cz") {
                c.append(Gate::cz(qubit(1), qubit(2)));
            } else if (op == "cx") {
                c.append(Gate::cnot(qubit(1), qubit(2)));
            } else if (op == "swap") {
                c.append(Gate::swap(qubit(1), qubit(2)));
            } else if (op == "measure" && tokens.size() == 2 && tokens[1] == "all") {
                c.append(Gate::measure_all());
            } else {
                throw ParseError("line " + std::to_string(line_no) + ": unknown gate '" + std::string(op) + "'");
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_header) {
        throw ParseError("empty circuit file");
    }
    if (!layout.empty()) {
        c.set_layout(std::move(layout));
    }
    return c;
}

// Reads the subset of OpenQASM 2 that export_circuit writes.
Circuit import_qasm(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    Header h;
    Circuit c;
    bool have_register = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (line.starts_with("// lrq")) {
            const auto tokens = split(line, " \t\r");
            read_header_fields(tokens, h, line_no);
            continue;
        }
        if (const auto comment = line.find("//"); comment != std::string_view::npos) {
            line = line.substr(0, comment);
        }
        const auto tokens = split(line, " \t\r;");
        if (tokens.empty() || tokens[0] == "OPENQASM" || tokens[0] == "include" || tokens[0] == "creg") {
            continue;
        }
        auto index_of = [&](std::string_view operand) {
            const auto open = operand.find('[');
            const auto close = operand.find(']');
            if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
                throw ParseError("line " + std::to_string(line_no) + ": expected q[i]");
            }
            return parse_number<Qubit>(operand.substr(open + 1, close - open - 1), line_no);
        };
        if (tokens[0] == "qreg") {
            h.n_qubits = index_of(tokens.at(1));
            c = Circuit(h.n_qubits, h.has_basis ? h.basis : Basis::CNOT);
            have_register = true;
            continue;
        }
        if (!have_register) {
            throw ParseError("line " + std::to_string(line_no) + ": gate before qreg");
        }
        std::string_view op = tokens[0];
        double theta = 0.0;
        if (const auto paren = op.find('('); paren != std::string_view::npos) {
            const auto close = op.find(')');
            theta = parse_number<double>(op.substr(paren + 1, close - paren - 1), line_no);
            op = op.substr(0, paren);
        }
        if (op == "measure") {
            c.append(Gate::measure_all());
            continue;
        }
        std::vector<Qubit> qs;
        if (tokens.size() > 1) {
            for (auto operand : split(tokens[1], ",")) {
                qs.push_back(index_of(operand));
            }
        }
        auto need = [&](std::size_t k) {
            if (qs.size() != k) {
                throw ParseError("line " + std::to_string(line_no) + ": wrong operand count");
            }
        };
        try {
            if (op == "h") {
                need(1);
                c.append(Gate::h(qs[0]));
            } else if (op == "rx") {
                need(1);
                c.append(Gate::rx(theta, qs[0]));
            } else if (op == "rz") {
                need(1);
                c.append(Gate::rz(theta, qs[0]));
            } else if (op == "cx") {
                need(2);
                c.append(Gate::cnot(qs[0], qs[1]));
            } else if (op == "cz") {
                need(2);
                c.append(Gate::cz(qs[0], qs[1]));
            } else {
                throw ParseError("line " + std::to_string(line_no) + ": unsupported gate '" + std::string(op) + "'");
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_register) {
        throw ParseError("QASM text has no qreg");
    }
    if (!h.layout.empty()) {
        c.set_layout(std::move(h.layout));
    }
    return c;
}

}  // namespace

std::string export_circuit(const Circuit &circuit, CircuitFormat format) {
    std::ostringstream out;
    if (format == CircuitFormat::Neutral) {
        out << "lrq-circuit v1 nq=" << circuit.n_qubits() << " basis=" << basis_tag(circuit.basis());
        if (!circuit.has_identity_layout()) {
            out << " layout=" << layout_text(circuit);
        }
        out << '\n';
        for (const auto &g : circuit.gates()) {
            out << gate_name(g.kind);
            switch (g.kind) {
                case GateKind::H:
                    out << ' ' << g.qubits[0];
                    break;
                case GateKind::RX:
                case GateKind::RZ:
                    out << ' ' << format_double(g.theta) << ' ' << g.qubits[0];
                    break;
                case GateKind::RZZ:
                    out << ' ' << format_double(g.theta) << ' ' << g.qubits[0] << ' ' << g.qubits[1];
                    break;
                case GateKind::CZ:
                case GateKind::CNOT:
                case GateKind::SWAP:
                    out << ' ' << g.qubits[0] << ' ' << g.qubits[1];
                    break;
                case GateKind::MeasureAll:
                    out << " all";
                    break;
            }
            out << '\n';
        }
        return out.str();
    }

    for (const auto &g : circuit.gates()) {
        if (g.kind == GateKind::RZZ || g.kind == GateKind::SWAP) {
            throw std::invalid_argument("gate '" + std::string(gate_name(g.kind)) +
                                        "' is not expressible in OpenQASM 2 export; decompose to cz or cnot");
        }
    }
    const std::size_t n = circuit.n_qubits();
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "// lrq basis=" << basis_tag(circuit.basis());
    if (!circuit.has_identity_layout()) {
        out << " layout=" << layout_text(circuit);
    }
    out << "\nqreg q[" << n << "];\ncreg c[" << n << "];\n";
    for (const auto &g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::H:
                out << "h q[" << g.qubits[0] << "];\n";
                break;
            case GateKind::RX:
            case GateKind::RZ:
                out << gate_name(g.kind) << '(' << format_double(g.theta) << ") q[" << g.qubits[0] << "];\n";
                break;
            case GateKind::CZ:
            case GateKind::CNOT:
                out << gate_name(g.kind) << " q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
                break;
            case GateKind::MeasureAll:
                out << "measure q -> c;\n";
                break;
            case GateKind::RZZ:
            case GateKind::SWAP:
                break;
        }
    }
    return out.str();
}

Circuit import_circuit(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        throw ParseError("empty circuit text");
    }
    if (text.substr(first).starts_with("OPENQASM")) {
        return import_qasm(text);
    }
    return import_neutral(text);
}

}  // namespace lrq
