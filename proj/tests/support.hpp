#pragma once

// Deterministic random-circuit generator shared by the proof-pipeline suite
// and the acceptance harness. Emits circuit text so every consumer also
// exercises the parser.

#include <cstdint>
#include <string>
#include <vector>

#include "proofmesh/field.hpp"
#include "proofmesh/rng.hpp"

namespace proofmesh {
namespace testsupport {

struct GeneratedCircuit {
    std::string text;
    std::uint32_t inputs = 0;
    std::uint32_t mul_gates = 0;
};

// Random DAG with `1..max_mul` multiplication gates and a sprinkling of
// additions. Each of the first gates consumes a distinct input so no input
// dangles; the last multiplication output is returned (and thus public).
inline GeneratedCircuit random_circuit(std::uint64_t seed, std::uint32_t max_mul) {
    Rng rng(seed);
    GeneratedCircuit out;
    out.mul_gates = 1 + static_cast<std::uint32_t>(rng.below(max_mul));
    out.inputs = 1 + static_cast<std::uint32_t>(rng.below(4));
    std::uint32_t adds = static_cast<std::uint32_t>(rng.below(out.mul_gates + 2));
    if (out.mul_gates + adds < out.inputs) adds = out.inputs - out.mul_gates;
    const std::uint32_t total = out.mul_gates + adds;

    std::vector<std::string> pool{"one"};
    out.text = "inputs " + std::to_string(out.inputs) + "\n";
    for (std::uint32_t i = 1; i <= out.inputs; i++) pool.push_back("w" + std::to_string(i));

    std::string last_mul;
    std::uint32_t made_mul = 0, made_add = 0;
    for (std::uint32_t g = 0; g < total; g++) {
        const std::uint32_t rem_mul = out.mul_gates - made_mul;
        const std::uint32_t rem_add = adds - made_add;
        const bool is_mul = rem_add == 0 || (rem_mul > 0 && rng.below(rem_mul + rem_add) < rem_mul);
        std::string name = (is_mul ? "m" : "a") + std::to_string(g + 1);
        std::string lhs = g < out.inputs ? "w" + std::to_string(g + 1)
                                         : pool[rng.below(pool.size())];
        std::string rhs = pool[rng.below(pool.size())];
        out.text += std::string(is_mul ? "mul " : "add ") + name + " " + lhs + " " + rhs + "\n";
        pool.push_back(name);
        if (is_mul) {
            last_mul = name;
            made_mul++;
        } else {
            made_add++;
        }
    }
    out.text += "return " + last_mul + "\n";
    return out;
}

inline std::vector<FieldElement> random_values(const PrimeField& field, std::size_t count,
                                               Rng& rng) {
    std::vector<FieldElement> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; i++) v.push_back(field.element(rng.below(field.modulus())));
    return v;
}

}  // namespace testsupport
}  // namespace proofmesh
