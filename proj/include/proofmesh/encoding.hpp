#pragma once

#include <cstdint>

#include "proofmesh/field.hpp"

namespace proofmesh {

enum class Group : std::uint8_t { g1 = 1, g2 = 2, gt = 3 };

// One encoded scalar, tagged with its group so source and target spaces
// cannot be mixed up at compile time. Supports exactly the operations a
// linearly homomorphic encoding grants: addition, subtraction, and scalar
// multiplication within a group, plus equality.
template <Group G>
struct Encoded {
    FieldElement value;

    Encoded operator+(const Encoded& other) const { return Encoded{value + other.value}; }
    Encoded operator-(const Encoded& other) const { return Encoded{value - other.value}; }
    bool operator==(const Encoded& other) const { return value == other.value; }
    bool operator!=(const Encoded& other) const { return value != other.value; }
};

template <Group G>
Encoded<G> operator*(const FieldElement& k, const Encoded<G>& e) {
    return Encoded<G>{k * e.value};
}

template <Group G>
Encoded<G> operator*(const Encoded<G>& e, const FieldElement& k) {
    return Encoded<G>{k * e.value};
}

// Transparent stand-in for a pairing-friendly curve: the encoding of a is a
// itself, and the pairing multiplies scalars (the target group is written
// additively to match the verifier's check). Satisfies the linearity and
// bilinearity laws exactly but hides NOTHING; swap in a curve backend with
// the same surface for any real deployment.
struct MockBackend {
    using Enc1 = Encoded<Group::g1>;
    using Enc2 = Encoded<Group::g2>;
    using EncT = Encoded<Group::gt>;

    static Enc1 encode1(const FieldElement& a) { return Enc1{a}; }
    static Enc2 encode2(const FieldElement& a) { return Enc2{a}; }
    static EncT pair(const Enc1& a, const Enc2& b) { return EncT{a.value * b.value}; }
};

}  // namespace proofmesh
