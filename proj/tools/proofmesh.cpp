// proofmesh: end-to-end demos, file-based proving and verifying, protocol
// benchmarks, and the exhaustive privacy audit, all behind one binary.
//
// Conventions: human-readable progress goes to stderr, machine output (CSV,
// verdicts, file paths) to stdout. Every subcommand is deterministic given
// --seed; PROOFMESH_SEED is the fallback when the flag is absent.
//
// Exit codes: 0 success, 1 verification/privacy failure, 2 input error,
// 3 unsatisfiable witness, 4 protocol abort, 5 enumeration budget exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "proofmesh/audit.hpp"
#include "proofmesh/circuit.hpp"
#include "proofmesh/errors.hpp"
#include "proofmesh/field.hpp"
#include "proofmesh/mpc.hpp"
#include "proofmesh/qap.hpp"
#include "proofmesh/rng.hpp"
#include "proofmesh/snark.hpp"

namespace {

using namespace proofmesh;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnsatisfiable = 3;
constexpr int kExitAbort = 4;
constexpr int kExitBudget = 5;

const char* kDemoCircuit = R"(inputs 3
add s w1 w2
mul m1 s w3
mul m2 m1 w3
return m2
)";

const PrimeField& pick_field(const std::string& name) {
    if (name == "test17") return PrimeField::test17();
    if (name == "desk") return PrimeField::desk();
    throw Error("unknown field '" + name + "', expected test17 or desk");
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PROOFMESH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error("PROOFMESH_SEED is not a number");
        }
    }
    return 1;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::uint8_t> read_binary_file(const std::string& path) {
    std::string text = read_text_file(path);
    return std::vector<std::uint8_t>(text.begin(), text.end());
}

void write_binary_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write to " + path + " failed");
}

std::string join(const std::vector<FieldElement>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (i) out << ' ';
        out << v[i].value();
    }
    return out.str();
}

// --tamper forms: wire:<i> bumps witness wire i after honest division,
// server:<theta> tampers one of server theta's reshare messages, and
// drop:<theta> suppresses that message entirely (the abort path).
struct Tamper {
    enum class What { none, wire, server, drop };
    What what = What::none;
    std::uint32_t index = 0;
};

Tamper parse_tamper(const std::string& text) {
    Tamper t;
    if (text.empty()) return t;
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error("expected --tamper <kind>:<index>");
    std::string kind = text.substr(0, colon);
    std::uint32_t index = 0;
    try {
        index = static_cast<std::uint32_t>(std::stoul(text.substr(colon + 1)));
    } catch (const std::exception&) {
        throw Error("bad --tamper index '" + text.substr(colon + 1) + "'");
    }
    if (kind == "wire")
        t.what = Tamper::What::wire;
    else if (kind == "server")
        t.what = Tamper::What::server;
    else if (kind == "drop")
        t.what = Tamper::What::drop;
    else
        throw Error("unknown --tamper kind '" + kind + "'");
    t.index = index;
    return t;
}

Corruption server_corruption(const Tamper& tamper, std::uint32_t num_servers) {
    if (tamper.index < 1 || tamper.index > num_servers)
        throw Error("--tamper server index out of range");
    Corruption c;
    c.round = 2;
    c.from = tamper.index;
    c.to = tamper.index % num_servers + 1;
    c.index = 0;
    c.kind = tamper.what == Tamper::What::drop ? Corruption::Kind::drop : Corruption::Kind::tamper;
    return c;
}

int cmd_demo(const std::string& field_name, std::uint64_t seed, const std::string& tamper_text) {
    const PrimeField& field = pick_field(field_name);
    Tamper tamper = parse_tamper(tamper_text);

    std::cerr << "demo: two-gate circuit, inputs (1, 2, 3), field " << field_name << "\n";
    Circuit circuit = Circuit::parse(kDemoCircuit);
    QapInstance qap = build_qap(field, circuit);
    Witness witness =
        circuit.evaluate(field, {field.element(1), field.element(2), field.element(3)});

    AbcVectors v = abc_vectors(qap, witness);
    std::cout << "a: " << join(v.a) << "\n";
    std::cout << "b: " << join(v.b) << "\n";
    std::cout << "c: " << join(v.c) << "\n";

    ToxicParams toxic = sample_toxic(field, qap.domain.size(), substream_seed(seed, 1));
    KeyPair keys = setup(qap, toxic);
    std::cerr << "demo: keys generated, toxic values discarded\n";

    std::vector<FieldElement> h = polynomial_division_centralized(qap, witness);
    ProtocolConfig config(qap.domain, SharingParams::canonical(field, 2, 1), seed);
    DistributedProverOptions opts;
    Corruption corruption;
    if (tamper.what == Tamper::What::server || tamper.what == Tamper::What::drop) {
        corruption = server_corruption(tamper, config.num_servers());
        opts.corruption = &corruption;
        opts.corrupt_run = 1;
    }
    std::vector<FieldElement> h_dist = polynomial_division_distributed(qap, witness, config, opts);
    if (tamper.what == Tamper::What::none && h != h_dist)
        throw Error("distributed quotient disagrees with the centralized one");
    std::cout << "h': " << join(h_dist) << "\n";
    std::cerr << "demo: quotient computed centrally and with K=2, T=1 servers\n";

    if (tamper.what == Tamper::What::wire) {
        if (tamper.index >= witness.w.size()) throw Error("--tamper wire index out of range");
        witness.w[tamper.index] += field.one();
        std::cerr << "demo: corrupted witness wire " << tamper.index << "\n";
    }

    Blinding blinding = sample_blinding(field, substream_seed(seed, 2));
    Proof proof = compute_proof(keys.ek, witness, h_dist, blinding);
    std::cout << "proof: L=" << proof.l.value.value() << " R=" << proof.r.value.value()
              << " K=" << proof.k.value.value() << "\n";

    if (!prover_self_check(keys.vk, proof, public_values(qap, witness))) {
        std::cerr << "proof failed self-verification\n";
        std::cout << "REJECTED\n";
        return kExitRejected;
    }
    std::cout << "VERIFIED\n";
    return kExitOk;
}

int cmd_setup(const std::string& circuit_path, const std::string& ek_path,
              const std::string& vk_path, const std::string& field_name, std::uint64_t seed) {
    const PrimeField& field = pick_field(field_name);
    Circuit circuit = Circuit::parse(read_text_file(circuit_path)).pad_to_power_of_two();
    QapInstance qap = build_qap(field, circuit);
    std::cerr << "setup: " << circuit_path << " has " << qap.domain.size()
              << " gates after padding, " << qap.m << " indexed wires\n";

    ToxicParams toxic = sample_toxic(field, qap.domain.size(), seed);
    KeyPair keys = setup(qap, toxic);
    write_binary_file(ek_path, serialize_evaluation_key(keys.ek));
    write_binary_file(vk_path, serialize_verification_key(keys.vk));
    std::cout << ek_path << "\n" << vk_path << "\n";
    return kExitOk;
}

int cmd_prove(const std::string& circuit_path, const std::string& input_path,
              const std::string& ek_path, const std::string& proof_path,
              const std::string& public_path, const std::string& vk_path,
              const std::string& field_name, bool distributed, std::uint32_t K, std::uint32_t T,
              std::uint64_t seed, const std::string& tamper_text) {
    const PrimeField& field = pick_field(field_name);
    Tamper tamper = parse_tamper(tamper_text);
    Circuit circuit = Circuit::parse(read_text_file(circuit_path)).pad_to_power_of_two();
    QapInstance qap = build_qap(field, circuit);
    EvaluationKey ek = parse_evaluation_key(read_binary_file(ek_path), field);
    if (ek.n != qap.domain.size() || ek.m != qap.m)
        throw Error("evaluation key does not fit this circuit");

    std::vector<FieldElement> inputs = parse_field_values(read_text_file(input_path), field);
    Witness witness = circuit.evaluate(field, inputs);
    if (tamper.what == Tamper::What::wire) {
        if (tamper.index >= witness.w.size()) throw Error("--tamper wire index out of range");
        witness.w[tamper.index] += field.one();
        std::cerr << "prove: corrupted witness wire " << tamper.index << "\n";
    }

    std::vector<FieldElement> h;
    if (distributed) {
        ProtocolConfig config(qap.domain, SharingParams::canonical(field, K, T), seed);
        DistributedProverOptions opts;
        Corruption corruption;
        if (tamper.what == Tamper::What::server || tamper.what == Tamper::What::drop) {
            corruption = server_corruption(tamper, config.num_servers());
            opts.corruption = &corruption;
            opts.corrupt_run = 1;
            std::cerr << "prove: interfering with server " << tamper.index << "\n";
        }
        h = polynomial_division_distributed(qap, witness, config, opts);
        std::cerr << "prove: quotient from " << config.num_servers() << " servers (K=" << K
                  << ", T=" << T << ")\n";
    } else {
        h = polynomial_division_centralized(qap, witness);
        std::cerr << "prove: quotient computed locally\n";
    }

    Blinding blinding = sample_blinding(field, substream_seed(seed, 2));
    Proof proof = compute_proof(ek, witness, h, blinding);

    if (!public_path.empty()) {
        std::ostringstream out;
        for (const FieldElement& x : public_values(qap, witness)) out << x.value() << "\n";
        std::string text = out.str();
        write_binary_file(public_path, std::vector<std::uint8_t>(text.begin(), text.end()));
    }
    if (!vk_path.empty()) {
        VerificationKey vk = parse_verification_key(read_binary_file(vk_path), field);
        if (!prover_self_check(vk, proof, public_values(qap, witness))) {
            std::cerr << "proof failed self-verification\n";
            return kExitRejected;
        }
        std::cerr << "prove: proof passed self-verification\n";
    }
    write_binary_file(proof_path, serialize_proof(proof));
    std::cout << proof_path << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& vk_path, const std::string& proof_path,
               const std::string& public_path, const std::string& field_name) {
    const PrimeField& field = pick_field(field_name);
    VerificationKey vk = parse_verification_key(read_binary_file(vk_path), field);
    Proof proof = parse_proof(read_binary_file(proof_path), field);
    std::vector<FieldElement> pub = parse_field_values(read_text_file(public_path), field);
    if (pub.size() != vk.kvk.size())
        throw Error("expected " + std::to_string(vk.kvk.size()) + " public values, got " +
                    std::to_string(pub.size()));
    if (verify(vk, proof, pub)) {
        std::cout << "VERIFIED\n";
        return kExitOk;
    }
    std::cout << "REJECTED\n";
    return kExitRejected;
}

int cmd_bench(std::uint32_t n, const std::vector<std::uint32_t>& ks, std::uint32_t T,
              const std::string& field_name, std::uint64_t seed) {
    const PrimeField& field = pick_field(field_name);
    for (std::uint32_t K : ks)
        if (K == 0 || n % K != 0)
            throw Error("K=" + std::to_string(K) + " does not divide n=" + std::to_string(n));

    std::vector<std::array<std::uint32_t, 3>> grid;
    for (std::uint32_t K : ks) grid.push_back({n, K, T});
    std::cerr << "bench: instrumented distributed transform, n=" << n << ", " << ks.size()
              << " chunk counts\n";
    std::cout << "n,K,T,party,mul_count,add_count\n";
    for (const ComplexityRow& row : complexity_report(field, grid, seed)) {
        std::cout << row.n << ',' << row.chunks << ',' << row.threshold << ','
                  << (row.party == 0 ? std::string("prover")
                                     : "server" + std::to_string(row.party))
                  << ',' << row.counts.mul << ',' << row.counts.add << "\n";
    }
    return kExitOk;
}

int cmd_privacy_audit(std::uint32_t n, std::uint32_t K, std::uint32_t T,
                      const std::vector<std::uint32_t>& colluders, std::uint32_t num_secrets,
                      const std::string& field_name, std::uint64_t seed, bool break_sharing) {
    const PrimeField& field = pick_field(field_name);
    EvaluationDomain domain(field, n, std::nullopt, field.generator());
    ProtocolConfig config(domain, SharingParams::canonical(field, K, T), seed);

    if (num_secrets < 2) throw Error("need at least two secrets to compare");
    Rng rng(substream_seed(seed, 3));
    std::vector<std::vector<FieldElement>> secrets;
    while (secrets.size() < num_secrets) {
        std::vector<FieldElement> s;
        for (std::uint32_t i = 0; i < n; i++) s.push_back(field.element(rng.below(field.modulus())));
        bool fresh = true;
        for (const auto& seen : secrets) fresh = fresh && seen != s;
        if (fresh) secrets.push_back(std::move(s));
    }

    std::cerr << "privacy-audit: n=" << n << ", K=" << K << ", T=" << T << ", colluders {";
    for (std::size_t i = 0; i < colluders.size(); i++)
        std::cerr << (i ? "," : "") << colluders[i];
    std::cerr << "}, " << num_secrets << " secrets\n";

    CensusResult census = privacy_census(config, colluders, secrets, break_sharing);
    std::cout << (census.is_private ? "PRIVATE" : "LEAKS") << " runs_per_secret="
              << census.runs_per_secret << " distinct_views=" << census.distinct_views << "\n";
    return census.is_private ? kExitOk : kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field proof pipeline with multiparty transform offloading"};
    app.require_subcommand(1);
    app.fallthrough();  // let --field/--seed appear after the subcommand name

    std::string field_name = "test17";
    std::uint64_t seed = 0;
    app.add_option("--field", field_name, "test17 or desk")->capture_default_str();
    app.add_option("--seed", seed, "randomness seed (fallback: PROOFMESH_SEED, then 1)");

    auto* demo = app.add_subcommand("demo", "run the built-in two-gate circuit end to end");
    std::string tamper_text;
    demo->add_option("--tamper", tamper_text, "wire:<i>, server:<theta>, or drop:<theta>");

    auto* setup_cmd = app.add_subcommand("setup", "generate evaluation and verification keys");
    std::string circuit_path, ek_path = "circuit.ek", vk_path = "circuit.vk";
    setup_cmd->add_option("circuit", circuit_path, "circuit description file")->required();
    setup_cmd->add_option("--ek-out", ek_path, "evaluation key output")->capture_default_str();
    setup_cmd->add_option("--vk-out", vk_path, "verification key output")->capture_default_str();

    auto* prove = app.add_subcommand("prove", "produce a proof from a circuit and inputs");
    std::string input_path, proof_path = "circuit.proof", public_path, prove_vk;
    bool distributed = false;
    std::uint32_t opt_k = 2, opt_t = 1;
    std::string prove_tamper;
    prove->add_option("circuit", circuit_path, "circuit description file")->required();
    prove->add_option("inputs", input_path, "input values, one per line")->required();
    prove->add_option("--ek", ek_path, "evaluation key file")->required();
    prove->add_option("--proof-out", proof_path, "proof output")->capture_default_str();
    prove->add_option("--public-out", public_path, "write public wire values here");
    prove->add_option("--vk", prove_vk, "verification key for a self-check before writing");
    prove->add_flag("--distributed", distributed, "offload the transforms to simulated servers");
    prove->add_option("--k", opt_k, "data chunks per transform")->capture_default_str();
    prove->add_option("--t", opt_t, "privacy threshold")->capture_default_str();
    prove->add_option("--tamper", prove_tamper, "wire:<i>, server:<theta>, or drop:<theta>");

    auto* verify_cmd = app.add_subcommand("verify", "check a proof against public values");
    std::string verify_vk, verify_proof, verify_public;
    verify_cmd->add_option("--vk", verify_vk, "verification key file")->required();
    verify_cmd->add_option("--proof", verify_proof, "proof file")->required();
    verify_cmd->add_option("--public", verify_public, "public values, one per line")->required();

    auto* bench = app.add_subcommand("bench", "per-party operation counts as CSV");
    std::uint32_t bench_n = 16384, bench_t = 1;
    std::vector<std::uint32_t> bench_ks{2, 4, 8};
    bench->add_option("--n", bench_n, "transform length")->capture_default_str();
    bench->add_option("--k", bench_ks, "comma-separated chunk counts")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--t", bench_t, "privacy threshold")->capture_default_str();

    auto* audit = app.add_subcommand("privacy-audit", "exhaustive collusion-view census");
    std::uint32_t audit_n = 2, audit_k = 1, audit_t = 1, audit_secrets = 3;
    std::vector<std::uint32_t> audit_colluders{1};
    bool break_sharing = false;
    audit->add_option("--n", audit_n, "transform length")->capture_default_str();
    audit->add_option("--k", audit_k, "data chunks")->capture_default_str();
    audit->add_option("--t", audit_t, "privacy threshold")->capture_default_str();
    audit->add_option("--colluders", audit_colluders, "comma-separated server indices")
        ->delimiter(',')
        ->capture_default_str();
    audit->add_option("--secrets", audit_secrets, "how many distinct secrets to compare")
        ->capture_default_str();
    audit->add_flag("--break-sharing", break_sharing,
                    "negative control: zero the blinding randomness");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.count("--seed") == 0) seed = default_seed();
        if (*demo) return cmd_demo(field_name, seed, tamper_text);
        if (*setup_cmd) return cmd_setup(circuit_path, ek_path, vk_path, field_name, seed);
        if (*prove)
            return cmd_prove(circuit_path, input_path, ek_path, proof_path, public_path, prove_vk,
                             field_name, distributed, opt_k, opt_t, seed, prove_tamper);
        if (*verify_cmd) return cmd_verify(verify_vk, verify_proof, verify_public, field_name);
        if (*bench) {
            if (!app.count("--field")) field_name = "desk";  // the 17-element field is too small
            return cmd_bench(bench_n, bench_ks, bench_t, field_name, seed);
        }
        if (*audit)
            return cmd_privacy_audit(audit_n, audit_k, audit_t, audit_colluders, audit_secrets,
                                     field_name, seed, break_sharing);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ProtocolAbort& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAbort;
    } catch (const UnsatisfiedWitness& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsatisfiable;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
