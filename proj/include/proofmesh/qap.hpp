#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "proofmesh/circuit.hpp"
#include "proofmesh/domain.hpp"
#include "proofmesh/errors.hpp"
#include "proofmesh/field.hpp"

namespace proofmesh {

// One gate label's selector coefficients, sparse: (wire index, coefficient)
// pairs sorted by wire index.
using SelectorRow = std::vector<std::pair<std::uint32_t, FieldElement>>;

// Evaluation form of a quadratic arithmetic program. Gate j is labelled
// w^j on the domain; left/right/output hold the selector values L_i(w^j),
// R_i(w^j), O_i(w^j) for the wires that reach the gate, zero elsewhere. The
// target polynomial is T(x) = x^n - 1 over the label domain.
struct QapInstance {
    EvaluationDomain domain;
    std::uint32_t m = 0;  // largest wire index; wire 0 is the constant one
    std::vector<SelectorRow> left, right, output;
    std::vector<std::uint32_t> io, mid;  // sorted partition of {0..m}
};

namespace detail {

// Indexed wires reaching `operand` through zero or more addition gates; the
// coefficient counts distinct addition paths, so the weighted sum of wire
// values reproduces the operand's value exactly.
inline void accumulate_closure(const std::vector<Circuit::Node>& nodes,
                               const std::vector<std::map<std::uint32_t, FieldElement>>& closure,
                               std::uint32_t operand, const PrimeField& field,
                               std::map<std::uint32_t, FieldElement>& dst) {
    auto add_to = [&dst](std::uint32_t wire, const FieldElement& c) {
        auto [it, fresh] = dst.emplace(wire, c);
        if (!fresh) it->second += c;
    };
    if (nodes[operand].kind == Circuit::Node::Kind::add_gate) {
        for (const auto& [wire, c] : closure[operand]) add_to(wire, c);
    } else {
        add_to(nodes[operand].wire, field.one());
    }
}

inline SelectorRow to_row(const std::map<std::uint32_t, FieldElement>& entries) {
    SelectorRow row;
    row.reserve(entries.size());
    for (const auto& [wire, c] : entries)
        if (!c.is_zero()) row.emplace_back(wire, c);
    return row;
}

}  // namespace detail

// Builds the QAP of a padded circuit over the canonical power-of-two domain
// (coset shifted by the field generator, for the prover's division step).
inline QapInstance build_qap(const PrimeField& field, const Circuit& circuit) {
    const std::uint32_t n = circuit.num_mul_gates();
    if (n == 0 || (n & (n - 1)) != 0)
        throw Error("gate count must be a power of two; pad the circuit first");

    QapInstance qap{EvaluationDomain(field, n, std::nullopt, field.generator()),
                    circuit.m(),
                    {},
                    {},
                    {},
                    circuit.io_indices(),
                    circuit.mid_indices()};

    const auto& nodes = circuit.nodes();
    // Addition-node closures in one pass; construction order is topological.
    std::vector<std::map<std::uint32_t, FieldElement>> closure(nodes.size());
    for (std::size_t id = 0; id < nodes.size(); id++) {
        if (nodes[id].kind != Circuit::Node::Kind::add_gate) continue;
        detail::accumulate_closure(nodes, closure, nodes[id].lhs, field, closure[id]);
        detail::accumulate_closure(nodes, closure, nodes[id].rhs, field, closure[id]);
    }

    qap.left.reserve(n);
    qap.right.reserve(n);
    qap.output.reserve(n);
    for (std::uint32_t gate : circuit.mul_gate_nodes()) {
        std::map<std::uint32_t, FieldElement> l, r;
        detail::accumulate_closure(nodes, closure, nodes[gate].lhs, field, l);
        detail::accumulate_closure(nodes, closure, nodes[gate].rhs, field, r);
        qap.left.push_back(detail::to_row(l));
        qap.right.push_back(detail::to_row(r));
        qap.output.push_back(SelectorRow{{nodes[gate].wire, field.one()}});
    }
    return qap;
}

struct AbcVectors {
    std::vector<FieldElement> a, b, c;
};

// Per-gate operand and output values: a[j] = sum_i W_i L_i(w^j), likewise b
// and c. The witness satisfies the circuit iff a[j] b[j] = c[j] for all j.
inline AbcVectors abc_vectors(const QapInstance& qap, const Witness& witness) {
    if (witness.w.size() != static_cast<std::size_t>(qap.m) + 1)
        throw Error("witness length does not match the program");
    const PrimeField& field = qap.domain.field();
    auto combine = [&](const std::vector<SelectorRow>& rows) {
        std::vector<FieldElement> out;
        out.reserve(rows.size());
        for (const SelectorRow& row : rows) {
            FieldElement acc = field.zero();
            for (const auto& [wire, c] : row) acc += c * witness.w[wire];
            out.push_back(acc);
        }
        return out;
    };
    return AbcVectors{combine(qap.left), combine(qap.right), combine(qap.output)};
}

struct SelectorEvaluations {
    std::vector<FieldElement> left, right, output;  // indexed by wire, length m+1
};

// Evaluates every wire's selector interpolant at s with one shared Lagrange
// basis over the label domain: l_j(s) = w^j (s^n - 1) / (n (s - w^j)), or a
// Kronecker delta when s lies on the domain. Cost O(n + nonzeros).
inline SelectorEvaluations selector_evals_at(const QapInstance& qap, const FieldElement& s) {
    const PrimeField& field = qap.domain.field();
    const std::size_t n = qap.domain.size();
    if (!(s.field() == field)) throw Error("evaluation point from a different field");

    std::vector<FieldElement> basis;
    basis.reserve(n);
    FieldElement sn_minus_1 = s.pow(n) - field.one();
    if (sn_minus_1.is_zero()) {
        for (std::size_t j = 0; j < n; j++)
            basis.push_back(s == qap.domain.omega_pow(j) ? field.one() : field.zero());
    } else {
        std::vector<FieldElement> denom;
        denom.reserve(n);
        for (std::size_t j = 0; j < n; j++) denom.push_back(s - qap.domain.omega_pow(j));
        denom = batch_inverse(denom);
        FieldElement scale = sn_minus_1 * field.element(n % field.modulus()).inv();
        for (std::size_t j = 0; j < n; j++)
            basis.push_back(qap.domain.omega_pow(j) * scale * denom[j]);
    }

    SelectorEvaluations out{std::vector<FieldElement>(qap.m + 1, field.zero()),
                            std::vector<FieldElement>(qap.m + 1, field.zero()),
                            std::vector<FieldElement>(qap.m + 1, field.zero())};
    auto accumulate = [&](const std::vector<SelectorRow>& rows, std::vector<FieldElement>& dst) {
        for (std::size_t j = 0; j < rows.size(); j++) {
            if (basis[j].is_zero()) continue;
            for (const auto& [wire, c] : rows[j]) dst[wire] += c * basis[j];
        }
    };
    accumulate(qap.left, out.left);
    accumulate(qap.right, out.right);
    accumulate(qap.output, out.output);
    return out;
}

}  // namespace proofmesh
