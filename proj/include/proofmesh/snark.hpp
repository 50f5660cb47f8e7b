#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "proofmesh/bytes.hpp"
#include "proofmesh/encoding.hpp"
#include "proofmesh/errors.hpp"
#include "proofmesh/field.hpp"
#include "proofmesh/mpc.hpp"
#include "proofmesh/qap.hpp"
#include "proofmesh/rng.hpp"

namespace proofmesh {

// Trapdoor values drawn during setup. They exist as a named type only so
// tests and the seeded sampler can pin them; nothing retains them afterwards.
struct ToxicParams {
    FieldElement s, alpha, beta, gamma, delta;
};

// Prover-side proof randomizers. Zero values still yield valid proofs; the
// blinding affects hiding, not validity.
struct Blinding {
    FieldElement r, q;
};

template <typename Backend>
struct EvaluationKeyT {
    using Enc1 = typename Backend::Enc1;
    using Enc2 = typename Backend::Enc2;

    Enc1 alpha1;
    Enc1 beta1;
    Enc2 beta2;
    Enc1 delta1;
    Enc2 delta2;
    std::vector<Enc1> l1;  // L_i(s), wires 0..m
    std::vector<Enc1> r1;  // R_i(s)
    std::vector<Enc2> r2;  // R_i(s) in the second group, for the proof's R part
    std::vector<std::pair<std::uint32_t, Enc1>> kpk;  // private-wire terms, ascending wire
    std::vector<Enc1> t;                              // s^j T(s)/delta, j = 0..n-2
    std::uint32_t n = 0, m = 0;
};

template <typename Backend>
struct VerificationKeyT {
    typename Backend::EncT alpha_beta;  // pair([alpha]_1, [beta]_2)
    typename Backend::Enc2 gamma2;
    typename Backend::Enc2 delta2;
    // Public-wire terms, ascending wire index.
    std::vector<std::pair<std::uint32_t, typename Backend::Enc1>> kvk;
};

template <typename Backend>
struct ProofT {
    typename Backend::Enc1 l;  // [L_r]_1
    typename Backend::Enc2 r;  // [R_q]_2
    typename Backend::Enc1 k;  // [K_{r,q}]_1
};

template <typename Backend>
struct KeyPairT {
    EvaluationKeyT<Backend> ek;
    VerificationKeyT<Backend> vk;
};

using EvaluationKey = EvaluationKeyT<MockBackend>;
using VerificationKey = VerificationKeyT<MockBackend>;
using Proof = ProofT<MockBackend>;
using KeyPair = KeyPairT<MockBackend>;

// Evaluates the program's selectors at the toxic point and encodes both
// keys. The per-wire verification and proving terms are
// k_i = beta L_i(s) + alpha R_i(s) + O_i(s), divided by gamma for the public
// wires and by delta for the private ones.
template <typename Backend = MockBackend>
KeyPairT<Backend> setup(const QapInstance& qap, const ToxicParams& toxic) {
    const PrimeField& field = qap.domain.field();
    const std::size_t n = qap.domain.size();
    for (const FieldElement* v : {&toxic.s, &toxic.alpha, &toxic.beta, &toxic.gamma, &toxic.delta}) {
        if (!(v->field() == field)) throw Error("toxic parameters from a different field");
        if (v->is_zero()) throw Error("toxic parameters must be nonzero");
    }
    FieldElement target = toxic.s.pow(n) - field.one();
    if (target.is_zero()) throw Error("toxic point s lies on the label domain");

    SelectorEvaluations sel = selector_evals_at(qap, toxic.s);
    FieldElement gamma_inv = toxic.gamma.inv();
    FieldElement delta_inv = toxic.delta.inv();

    KeyPairT<Backend> keys;
    EvaluationKeyT<Backend>& ek = keys.ek;
    ek.n = static_cast<std::uint32_t>(n);
    ek.m = qap.m;
    ek.alpha1 = Backend::encode1(toxic.alpha);
    ek.beta1 = Backend::encode1(toxic.beta);
    ek.beta2 = Backend::encode2(toxic.beta);
    ek.delta1 = Backend::encode1(toxic.delta);
    ek.delta2 = Backend::encode2(toxic.delta);
    ek.l1.reserve(qap.m + 1);
    ek.r1.reserve(qap.m + 1);
    ek.r2.reserve(qap.m + 1);
    for (std::uint32_t i = 0; i <= qap.m; i++) {
        ek.l1.push_back(Backend::encode1(sel.left[i]));
        ek.r1.push_back(Backend::encode1(sel.right[i]));
        ek.r2.push_back(Backend::encode2(sel.right[i]));
    }
    auto wire_term = [&](std::uint32_t i) {
        return toxic.beta * sel.left[i] + toxic.alpha * sel.right[i] + sel.output[i];
    };
    ek.kpk.reserve(qap.mid.size());
    for (std::uint32_t i : qap.mid) ek.kpk.emplace_back(i, Backend::encode1(wire_term(i) * delta_inv));
    ek.t.reserve(n >= 1 ? n - 1 : 0);
    FieldElement power = target * delta_inv;  // s^j T(s)/delta, starting at j = 0
    for (std::size_t j = 0; j + 1 < n; j++) {
        ek.t.push_back(Backend::encode1(power));
        power *= toxic.s;
    }

    VerificationKeyT<Backend>& vk = keys.vk;
    vk.alpha_beta = Backend::pair(Backend::encode1(toxic.alpha), Backend::encode2(toxic.beta));
    vk.gamma2 = Backend::encode2(toxic.gamma);
    vk.delta2 = Backend::encode2(toxic.delta);
    vk.kvk.reserve(qap.io.size());
    for (std::uint32_t i : qap.io) vk.kvk.emplace_back(i, Backend::encode1(wire_term(i) * gamma_inv));
    return keys;
}

namespace detail {

// Exact satisfiability test: the gate identity, checked pointwise on the
// label domain before any transform runs.
inline void require_satisfied(const AbcVectors& v) {
    for (std::size_t j = 0; j < v.a.size(); j++)
        if (!(v.a[j] * v.b[j] - v.c[j]).is_zero())
            throw UnsatisfiedWitness("witness does not satisfy circuit");
}

// h''[j] = (a''[j] b''[j] - c''[j]) / T(eta w^j); the divisor is the same
// nonzero constant at every coset point.
inline std::vector<FieldElement> coset_quotient(const EvaluationDomain& domain,
                                                const std::vector<FieldElement>& a,
                                                const std::vector<FieldElement>& b,
                                                const std::vector<FieldElement>& c) {
    std::vector<FieldElement> target = domain.target_eval_on_coset();
    FieldElement tinv = target[0].inv();
    std::vector<FieldElement> h;
    h.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); j++) h.push_back((a[j] * b[j] - c[j]) * tinv);
    return h;
}

}  // namespace detail

// Quotient coefficients h' of (L R - O) / T, computed through the coset: the
// numerator has degree 2n-2, but the quotient's degree n-2 fits the domain,
// so n coset evaluations pin it down. h'[n-1] is structurally zero.
inline std::vector<FieldElement> polynomial_division_centralized(const QapInstance& qap,
                                                                 const Witness& witness) {
    AbcVectors v = abc_vectors(qap, witness);
    detail::require_satisfied(v);
    const EvaluationDomain& d = qap.domain;
    std::vector<FieldElement> h = d.coset_ifft(detail::coset_quotient(
        d, d.coset_fft(d.ifft(std::move(v.a))), d.coset_fft(d.ifft(std::move(v.b))),
        d.coset_fft(d.ifft(std::move(v.c)))));
    if (!h[h.size() - 1].is_zero())
        throw UnsatisfiedWitness("witness does not satisfy circuit");
    return h;
}

struct DistributedProverOptions {
    RandomnessSource* randomness = nullptr;  // default: seeded from the protocol config
    const Corruption* corruption = nullptr;  // fault injection for one sub-run
    std::uint64_t corrupt_run = 1;           // which sub-run (1..4) gets `corruption`
};

// Same quotient through the multiparty pipeline: three composed-transform
// runs produce the coset values of L, R, O; the Hadamard/divide step stays
// at the prover; one multiparty inverse brings the quotient back to
// coefficients. Run tags 1..4 keep the server randomness streams disjoint.
//
// No trailing-coefficient assert here: a tampered server message corrupts h'
// silently, and the pipeline's fault story is to catch that downstream when
// the finished proof fails self-verification.
inline std::vector<FieldElement> polynomial_division_distributed(
    const QapInstance& qap, const Witness& witness, const ProtocolConfig& config,
    const DistributedProverOptions& opts = {}) {
    const EvaluationDomain& d = qap.domain;
    if (config.domain().size() != d.size() || !(config.domain().omega() == d.omega()) ||
        !(config.domain().eta() == d.eta()))
        throw Error("protocol domain does not match the program domain");

    AbcVectors v = abc_vectors(qap, witness);
    detail::require_satisfied(v);

    auto run = [&](ProtocolKind kind, const std::vector<FieldElement>& x, std::uint64_t tag) {
        SimulationOptions sim;
        sim.randomness = opts.randomness;
        sim.run_tag = tag;
        if (opts.corruption && opts.corrupt_run == tag) sim.corruption = opts.corruption;
        return kind == ProtocolKind::composed_fft ? mpc_composed_fft(config, x, sim)
                                                  : mpc_coset_ifft(config, x, sim);
    };
    std::vector<FieldElement> a2 = run(ProtocolKind::composed_fft, v.a, 1);
    std::vector<FieldElement> b2 = run(ProtocolKind::composed_fft, v.b, 2);
    std::vector<FieldElement> c2 = run(ProtocolKind::composed_fft, v.c, 3);
    return run(ProtocolKind::coset_ifft, detail::coset_quotient(d, a2, b2, c2), 4);
}

// Assembles the proof from encoded key material, the witness, and the
// quotient coefficients (length n, last entry unused by construction).
template <typename Backend>
ProofT<Backend> compute_proof(const EvaluationKeyT<Backend>& ek, const Witness& witness,
                              const std::vector<FieldElement>& h, const Blinding& blinding) {
    if (witness.w.size() != static_cast<std::size_t>(ek.m) + 1)
        throw Error("witness length does not match the evaluation key");
    if (h.size() != ek.n) throw Error("quotient length does not match the evaluation key");

    auto l_r = ek.alpha1;
    auto r_q1 = ek.beta1;
    auto r_q2 = ek.beta2;
    for (std::uint32_t i = 0; i <= ek.m; i++) {
        l_r = l_r + witness.w[i] * ek.l1[i];
        r_q1 = r_q1 + witness.w[i] * ek.r1[i];
        r_q2 = r_q2 + witness.w[i] * ek.r2[i];
    }
    l_r = l_r + blinding.r * ek.delta1;
    r_q1 = r_q1 + blinding.q * ek.delta1;
    r_q2 = r_q2 + blinding.q * ek.delta2;

    auto k = blinding.q * l_r + blinding.r * r_q1 - (blinding.r * blinding.q) * ek.delta1;
    for (const auto& [wire, term] : ek.kpk) k = k + witness.w[wire] * term;
    for (std::size_t j = 0; j + 1 < ek.n; j++) k = k + h[j] * ek.t[j];
    return ProofT<Backend>{l_r, r_q2, k};
}

// Pairing check: e(L, R) = e(alpha, beta) + e(I, gamma) + e(K, delta) with I
// the public-wire combination. `public_values` follows the verification
// key's ascending wire order.
template <typename Backend>
bool verify(const VerificationKeyT<Backend>& vk, const ProofT<Backend>& proof,
            const std::vector<FieldElement>& public_values) {
    if (public_values.size() != vk.kvk.size())
        throw Error("expected " + std::to_string(vk.kvk.size()) + " public values, got " +
                    std::to_string(public_values.size()));
    if (vk.kvk.empty())
        return Backend::pair(proof.l, proof.r) ==
               vk.alpha_beta + Backend::pair(proof.k, vk.delta2);
    auto i_term = public_values[0] * vk.kvk[0].second;
    for (std::size_t idx = 1; idx < vk.kvk.size(); idx++)
        i_term = i_term + public_values[idx] * vk.kvk[idx].second;
    return Backend::pair(proof.l, proof.r) ==
           vk.alpha_beta + Backend::pair(i_term, vk.gamma2) + Backend::pair(proof.k, vk.delta2);
}

// The distributed prover ends by verifying its own proof; identical to
// verify, named for the call site.
template <typename Backend>
bool prover_self_check(const VerificationKeyT<Backend>& vk, const ProofT<Backend>& proof,
                       const std::vector<FieldElement>& public_values) {
    return verify(vk, proof, public_values);
}

// The witness values on the public wires, in ascending wire order — the
// verifier-side inputs.
inline std::vector<FieldElement> public_values(const QapInstance& qap, const Witness& witness) {
    std::vector<FieldElement> out;
    out.reserve(qap.io.size());
    for (std::uint32_t i : qap.io) out.push_back(witness.w[i]);
    return out;
}

// Seeded parameter samplers, separate substreams so a shared master seed
// never correlates toxic and blinding draws.
inline ToxicParams sample_toxic(const PrimeField& field, std::size_t n, std::uint64_t seed) {
    if (n == 0 || n % (field.modulus() - 1) == 0)
        throw Error("no valid toxic point: every nonzero element is an n-th root of unity");
    Rng rng(substream_seed(seed, 1));
    auto nonzero = [&] { return field.element(1 + rng.below(field.modulus() - 1)); };
    FieldElement s = nonzero();
    while (s.pow(n).value() == 1) s = nonzero();
    return ToxicParams{s, nonzero(), nonzero(), nonzero(), nonzero()};
}

inline Blinding sample_blinding(const PrimeField& field, std::uint64_t seed) {
    Rng rng(substream_seed(seed, 2));
    FieldElement r = field.element(rng.below(field.modulus()));
    FieldElement q = field.element(rng.below(field.modulus()));
    return Blinding{r, q};
}

// ---- Key and proof files ---------------------------------------------------
//
// Length-prefixed little-endian binary, one magic per type, elements in type
// definition order. Only the transparent backend has a file form.

namespace detail {

inline void write_scalar(ByteWriter& w, const FieldElement& v) { w.u64(v.value()); }

inline FieldElement read_scalar(ByteReader& r, const PrimeField& field) {
    std::uint64_t v = r.u64();
    if (v >= field.modulus()) throw ParseError(0, "element out of field range");
    return field.element(v);
}

inline void check_modulus(ByteReader& r, const PrimeField& field) {
    std::uint64_t mod = r.u64();
    if (mod != field.modulus())
        throw ParseError(0, "file written for modulus " + std::to_string(mod) +
                                ", expected " + std::to_string(field.modulus()));
}

}  // namespace detail

inline std::vector<std::uint8_t> serialize_evaluation_key(const EvaluationKey& ek) {
    ByteWriter w;
    w.magic("PMEK1");
    w.u64(ek.alpha1.value.field().modulus());
    w.u32(ek.n);
    w.u32(ek.m);
    detail::write_scalar(w, ek.alpha1.value);
    detail::write_scalar(w, ek.beta1.value);
    detail::write_scalar(w, ek.beta2.value);
    detail::write_scalar(w, ek.delta1.value);
    detail::write_scalar(w, ek.delta2.value);
    auto write_vec = [&w](const auto& v) {
        w.u32(static_cast<std::uint32_t>(v.size()));
        for (const auto& e : v) detail::write_scalar(w, e.value);
    };
    write_vec(ek.l1);
    write_vec(ek.r1);
    write_vec(ek.r2);
    w.u32(static_cast<std::uint32_t>(ek.kpk.size()));
    for (const auto& [wire, e] : ek.kpk) {
        w.u32(wire);
        detail::write_scalar(w, e.value);
    }
    write_vec(ek.t);
    return w.take();
}

inline EvaluationKey parse_evaluation_key(const std::vector<std::uint8_t>& bytes,
                                          const PrimeField& field) {
    ByteReader r(bytes);
    r.magic("PMEK1");
    detail::check_modulus(r, field);
    EvaluationKey ek;
    ek.n = r.u32();
    ek.m = r.u32();
    if (ek.n == 0) throw ParseError(0, "evaluation key has empty domain");
    ek.alpha1.value = detail::read_scalar(r, field);
    ek.beta1.value = detail::read_scalar(r, field);
    ek.beta2.value = detail::read_scalar(r, field);
    ek.delta1.value = detail::read_scalar(r, field);
    ek.delta2.value = detail::read_scalar(r, field);
    auto read_count = [&r](std::size_t expect, const char* what) {
        std::uint32_t c = r.u32();
        if (c != expect) throw ParseError(0, std::string("unexpected ") + what + " count");
        return c;
    };
    read_count(ek.m + 1, "selector");
    for (std::uint32_t i = 0; i <= ek.m; i++)
        ek.l1.push_back(MockBackend::Enc1{detail::read_scalar(r, field)});
    read_count(ek.m + 1, "selector");
    for (std::uint32_t i = 0; i <= ek.m; i++)
        ek.r1.push_back(MockBackend::Enc1{detail::read_scalar(r, field)});
    read_count(ek.m + 1, "selector");
    for (std::uint32_t i = 0; i <= ek.m; i++)
        ek.r2.push_back(MockBackend::Enc2{detail::read_scalar(r, field)});
    std::uint32_t kpk_count = r.u32();
    if (kpk_count > ek.m + 1) throw ParseError(0, "unexpected private-term count");
    for (std::uint32_t i = 0; i < kpk_count; i++) {
        std::uint32_t wire = r.u32();
        if (wire > ek.m || (!ek.kpk.empty() && wire <= ek.kpk.back().first))
            throw ParseError(0, "private-term wires must be ascending");
        ek.kpk.emplace_back(wire, MockBackend::Enc1{detail::read_scalar(r, field)});
    }
    read_count(ek.n - 1, "quotient-term");
    for (std::uint32_t j = 0; j + 1 < ek.n; j++)
        ek.t.push_back(MockBackend::Enc1{detail::read_scalar(r, field)});
    if (!r.done()) throw ParseError(0, "trailing bytes after evaluation key");
    return ek;
}

inline std::vector<std::uint8_t> serialize_verification_key(const VerificationKey& vk) {
    ByteWriter w;
    w.magic("PMVK1");
    w.u64(vk.gamma2.value.field().modulus());
    detail::write_scalar(w, vk.alpha_beta.value);
    detail::write_scalar(w, vk.gamma2.value);
    detail::write_scalar(w, vk.delta2.value);
    w.u32(static_cast<std::uint32_t>(vk.kvk.size()));
    for (const auto& [wire, e] : vk.kvk) {
        w.u32(wire);
        detail::write_scalar(w, e.value);
    }
    return w.take();
}

inline VerificationKey parse_verification_key(const std::vector<std::uint8_t>& bytes,
                                              const PrimeField& field) {
    ByteReader r(bytes);
    r.magic("PMVK1");
    detail::check_modulus(r, field);
    VerificationKey vk;
    vk.alpha_beta.value = detail::read_scalar(r, field);
    vk.gamma2.value = detail::read_scalar(r, field);
    vk.delta2.value = detail::read_scalar(r, field);
    std::uint32_t count = r.u32();
    for (std::uint32_t i = 0; i < count; i++) {
        std::uint32_t wire = r.u32();
        if (!vk.kvk.empty() && wire <= vk.kvk.back().first)
            throw ParseError(0, "public-term wires must be ascending");
        vk.kvk.emplace_back(wire, MockBackend::Enc1{detail::read_scalar(r, field)});
    }
    if (!r.done()) throw ParseError(0, "trailing bytes after verification key");
    return vk;
}

inline std::vector<std::uint8_t> serialize_proof(const Proof& proof) {
    ByteWriter w;
    w.magic("PMPF1");
    w.u64(proof.l.value.field().modulus());
    detail::write_scalar(w, proof.l.value);
    detail::write_scalar(w, proof.r.value);
    detail::write_scalar(w, proof.k.value);
    return w.take();
}

inline Proof parse_proof(const std::vector<std::uint8_t>& bytes, const PrimeField& field) {
    ByteReader r(bytes);
    r.magic("PMPF1");
    detail::check_modulus(r, field);
    Proof proof;
    proof.l.value = detail::read_scalar(r, field);
    proof.r.value = detail::read_scalar(r, field);
    proof.k.value = detail::read_scalar(r, field);
    if (!r.done()) throw ParseError(0, "trailing bytes after proof");
    return proof;
}

}  // namespace proofmesh
