#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "costembed/circuit.hpp"

namespace costembed {

namespace {

std::string join(const std::vector<QubitIndex> &qs) {
    if (qs.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(qs[i]);
    }
    return out;
}

std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string &what) {
    throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": " + what);
}

std::vector<QubitIndex> parse_list(std::string_view s, std::size_t line_no) {
    std::vector<QubitIndex> out;
    if (s == "-") return out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        const auto item = s.substr(0, comma);
        QubitIndex q = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), q);
        if (ec != std::errc() || ptr != item.data() + item.size()) {
            parse_error(line_no, "bad qubit list '" + std::string(s) + "'");
        }
        out.push_back(q);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

struct Tokens {
    std::string head;
    std::vector<std::pair<std::string, std::string>> kv;

    const std::string *get(std::string_view key) const {
        for (const auto &[k, v] : kv) {
            if (k == key) return &v;
        }
        return nullptr;
    }
};

Tokens tokenize(const std::string &line, std::size_t line_no) {
    std::istringstream in(line);
    Tokens t;
    in >> t.head;
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            // Bare tokens are only used by the `cost` and `probe` headers.
            t.kv.emplace_back(tok, "");
            continue;
        }
        if (eq == 0) parse_error(line_no, "empty key");
        t.kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return t;
}

}  // namespace

std::string serialize(const Circuit &circuit) {
    std::ostringstream out;
    const auto &l = circuit.layout();
    out << "layout data=" << join(l.data) << " label=" << join(l.label) << " index=" << join(l.index)
        << " ancilla=" << join(l.ancilla) << " output=" << l.output << '\n';
    if (circuit.cost_kind()) {
        out << "cost " << to_string(*circuit.cost_kind()) << " readout=" << *circuit.cost_readout() << '\n';
    }
    if (circuit.probe_qubit()) {
        out << "probe qubit=" << *circuit.probe_qubit() << '\n';
    }
    std::vector<const ParamSlot *> slot_at(circuit.gates().size(), nullptr);
    for (const auto &s : circuit.slots()) slot_at[s.gate_position] = &s;
    for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
        const Gate &g = circuit.gates()[i];
        out << to_string(g.kind);
        if (g.kind == GateKind::PauliRotation || g.kind == GateKind::ControlledPauli) {
            out << " P=" << to_string(g.pauli);
        }
        if (!g.controls.empty()) out << " c=" << join(g.controls);
        out << " t=" << join(g.targets);
        if (slot_at[i] != nullptr) {
            out << " slot=" << slot_at[i]->id;
        } else if (g.angle) {
            out << " angle=" << format_angle(*g.angle);
        }
        out << '\n';
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<Circuit> circuit;
    std::optional<std::pair<CostKind, QubitIndex>> cost;
    std::optional<QubitIndex> probe;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const Tokens t = tokenize(line, line_no);
        if (t.head == "layout") {
            if (circuit) parse_error(line_no, "duplicate layout");
            RegisterLayout layout;
            for (auto [key, field] : {std::pair{"data", &layout.data}, std::pair{"label", &layout.label},
                                      std::pair{"index", &layout.index}, std::pair{"ancilla", &layout.ancilla}}) {
                const std::string *v = t.get(key);
                if (v == nullptr) parse_error(line_no, std::string("layout missing ") + key);
                *field = parse_list(*v, line_no);
            }
            const std::string *o = t.get("output");
            if (o == nullptr) parse_error(line_no, "layout missing output");
            const auto out_list = parse_list(*o, line_no);
            if (out_list.size() != 1) parse_error(line_no, "layout needs exactly one output");
            layout.output = out_list[0];
            circuit.emplace(std::move(layout));
            continue;
        }
        if (!circuit) parse_error(line_no, "layout line must come first");
        if (t.head == "cost") {
            if (t.kv.empty()) parse_error(line_no, "cost line needs a kind");
            const auto kind = cost_kind_from_string(t.kv.front().first);
            const std::string *r = t.get("readout");
            if (!kind || r == nullptr) parse_error(line_no, "malformed cost line");
            const auto q = parse_list(*r, line_no);
            if (q.size() != 1) parse_error(line_no, "cost readout must be one qubit");
            cost = {*kind, q[0]};
            continue;
        }
        if (t.head == "probe") {
            const std::string *q = t.get("qubit");
            if (q == nullptr) parse_error(line_no, "probe line needs qubit=");
            const auto qs = parse_list(*q, line_no);
            if (qs.size() != 1) parse_error(line_no, "probe must be one qubit");
            probe = qs[0];
            continue;
        }
        const auto kind = gate_kind_from_string(t.head);
        if (!kind) parse_error(line_no, "unknown gate '" + t.head + "'");
        Gate g;
        g.kind = *kind;
        if (const std::string *p = t.get("P")) {
            const auto pauli = pauli_from_string(*p);
            if (!pauli) parse_error(line_no, "unknown Pauli '" + *p + "'");
            g.pauli = *pauli;
        } else if (g.kind == GateKind::RZ || g.kind == GateKind::Z || g.kind == GateKind::CZ) {
            g.pauli = Pauli::Z;
        }
        if (const std::string *c = t.get("c")) g.controls = parse_list(*c, line_no);
        const std::string *tg = t.get("t");
        if (tg == nullptr) parse_error(line_no, "gate needs t=");
        g.targets = parse_list(*tg, line_no);
        const std::string *slot = t.get("slot");
        if (const std::string *a = t.get("angle"); a != nullptr && slot == nullptr) {
            double angle = 0.0;
            auto [ptr, ec] = std::from_chars(a->data(), a->data() + a->size(), angle);
            if (ec != std::errc() || ptr != a->data() + a->size()) parse_error(line_no, "bad angle '" + *a + "'");
            g.angle = angle;
        }
        try {
            if (slot != nullptr) {
                circuit->append_parameterized(g, *slot);
            } else {
                circuit->append(g);
            }
        } catch (const std::invalid_argument &e) {
            parse_error(line_no, e.what());
        } catch (const std::out_of_range &e) {
            parse_error(line_no, e.what());
        }
    }
    if (!circuit) throw std::invalid_argument("circuit text has no layout line");
    if (cost) {
        circuit->cost_kind_ = cost->first;
        circuit->cost_readout_ = cost->second;
    }
    circuit->probe_qubit_ = probe;
    return *circuit;
}

}  // namespace costembed
