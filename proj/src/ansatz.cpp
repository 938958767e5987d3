#include "costembed/circuit.hpp"

namespace costembed {

void append_single_qubit_block(Circuit &circuit, QubitIndex qubit, const std::string &prefix) {
    circuit.append_parameterized(gates::rx(qubit), prefix + "/rx0");
    circuit.append_parameterized(gates::rz(qubit), prefix + "/rz");
    circuit.append_parameterized(gates::rx(qubit), prefix + "/rx1");
}

Circuit build_xor_ansatz(const RegisterOptions &opts) {
    Circuit c(make_layout(2, 1, opts));
    const auto &d = c.layout().data;
    append_single_qubit_block(c, d[0], "d0");
    append_single_qubit_block(c, d[1], "d1");
    c.append(gates::cnot(d[0], d[1]));
    append_single_qubit_block(c, d[1], "out");
    return c;
}

Circuit build_iris_ansatz(const RegisterOptions &opts) {
    Circuit c(make_layout(4, 2, opts));
    const auto d = c.layout().data;
    for (std::size_t q = 0; q < 4; ++q) {
        append_single_qubit_block(c, d[q], "L0.q" + std::to_string(q));
    }
    c.append(gates::cnot(d[0], d[1]));
    c.append(gates::cnot(d[3], d[2]));
    append_single_qubit_block(c, d[1], "L1.q1");
    append_single_qubit_block(c, d[2], "L1.q2");
    c.append(gates::cnot(d[1], d[2]));
    append_single_qubit_block(c, d[2], "L2.q2");
    return c;
}

}  // namespace costembed
