#include "proofmesh/mpc.hpp"

#include <cstdint>
#include <optional>
#include <vector>

#include "gtest/gtest.h"
#include "proofmesh/domain.hpp"
#include "proofmesh/field.hpp"
#include "proofmesh/opcount.hpp"
#include "proofmesh/rng.hpp"

namespace pm = proofmesh;

namespace {

pm::ProtocolConfig make_config(const pm::PrimeField& field, std::size_t n, std::uint32_t K,
                               std::uint32_t T, std::uint64_t seed,
                               std::optional<pm::FieldElement> omega = std::nullopt,
                               std::optional<pm::FieldElement> eta = std::nullopt) {
    pm::EvaluationDomain domain(field, n, omega, eta ? eta : std::optional(field.generator()));
    return pm::ProtocolConfig(domain, pm::SharingParams::canonical(field, K, T), seed);
}

std::vector<pm::FieldElement> random_vector(const pm::PrimeField& field, std::size_t n, pm::Rng& rng) {
    std::vector<pm::FieldElement> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; i++) v.push_back(field.element(rng.below(field.modulus())));
    return v;
}

std::vector<pm::FieldElement> elems(const pm::PrimeField& f, std::initializer_list<std::uint64_t> vals) {
    std::vector<pm::FieldElement> out;
    for (std::uint64_t v : vals) out.push_back(f.element(v));
    return out;
}

}  // namespace

TEST(MpcTest, ComposedMatchesOracleOnHandVector) {
    const pm::PrimeField& f = pm::PrimeField::test17();
    pm::EvaluationDomain domain(f, 4, f.element(4), f.element(2));
    pm::ProtocolConfig config(domain, pm::SharingParams::canonical(f, 2, 1), 42);
    std::vector<pm::FieldElement> a = elems(f, {1, 2, 3, 4});
    EXPECT_EQ(pm::mpc_composed_fft(config, a), domain.coset_fft(domain.ifft(a)));
}

TEST(MpcTest, ComposedAllZerosStaysZero) {
    const pm::PrimeField& f = pm::PrimeField::test17();
    pm::ProtocolConfig config = make_config(f, 8, 2, 2, 7);
    std::vector<pm::FieldElement> zeros(8, f.zero());
    EXPECT_EQ(pm::mpc_composed_fft(config, zeros), zeros);
}

TEST(MpcTest, ComposedDegenerateSingleServer) {
    const pm::PrimeField& f = pm::PrimeField::desk();
    pm::ProtocolConfig config = make_config(f, 16, 1, 0, 3);
    pm::Rng rng(99);
    std::vector<pm::FieldElement> a = random_vector(f, 16, rng);
    EXPECT_EQ(pm::mpc_composed_fft(config, a),
              config.domain().coset_fft(config.domain().ifft(a)));
}

TEST(MpcTest, ComposedMatchesOracleOnGrid) {
    pm::Rng rng(2024);
    for (const pm::PrimeField* f : {&pm::PrimeField::test17(), &pm::PrimeField::desk()}) {
        for (std::size_t n : {4u, 8u, 16u, 64u}) {
            if (n > (1u << f->two_adicity())) continue;
            if (f->modulus() == 17 && n >= 16) continue;  // every unit is a 16th root: no coset shift
            for (std::uint32_t K : {1u, 2u, 4u}) {
                if (n % K != 0) continue;
                for (std::uint32_t T : {0u, 1u, 2u}) {
                    pm::ProtocolConfig config = make_config(*f, n, K, T, 1000 + n + 10 * K + T);
                    for (int rep = 0; rep < 5; rep++) {
                        std::vector<pm::FieldElement> a = random_vector(*f, n, rng);
                        EXPECT_EQ(pm::mpc_composed_fft(config, a),
                                  config.domain().coset_fft(config.domain().ifft(a)))
                            << "p=" << f->modulus() << " n=" << n << " K=" << K << " T=" << T;
                    }
                }
            }
        }
    }
}

TEST(MpcTest, InverseMatchesHandVector) {
    // coset evaluation of the coefficients [1,2,3,4] at shift 2 over F_17 is
    // [15,13,11,16]; the distributed inverse must recover the coefficients.
    const pm::PrimeField& f = pm::PrimeField::test17();
    pm::EvaluationDomain domain(f, 4, f.element(4), f.element(2));
    pm::ProtocolConfig config(domain, pm::SharingParams::canonical(f, 2, 1), 5);
    EXPECT_EQ(pm::mpc_coset_ifft(config, elems(f, {15, 13, 11, 16})), elems(f, {1, 2, 3, 4}));
}

TEST(MpcTest, InverseMatchesOracleOnGrid) {
    pm::Rng rng(77);
    for (const pm::PrimeField* f : {&pm::PrimeField::test17(), &pm::PrimeField::desk()}) {
        for (std::size_t n : {4u, 8u, 16u, 64u}) {
            if (n > (1u << f->two_adicity())) continue;
            if (f->modulus() == 17 && n >= 16) continue;
            for (std::uint32_t K : {1u, 2u, 4u}) {
                if (n % K != 0) continue;
                for (std::uint32_t T : {0u, 1u, 2u}) {
                    pm::ProtocolConfig config = make_config(*f, n, K, T, 2000 + n + 10 * K + T);
                    for (int rep = 0; rep < 5; rep++) {
                        std::vector<pm::FieldElement> a = random_vector(*f, n, rng);
                        EXPECT_EQ(pm::mpc_coset_ifft(config, a), config.domain().coset_ifft(a))
                            << "p=" << f->modulus() << " n=" << n << " K=" << K << " T=" << T;
                    }
                }
            }
        }
    }
}

TEST(MpcTest, InverseDegenerateEqualsLocalTransform) {
    const pm::PrimeField& f = pm::PrimeField::test17();
    pm::ProtocolConfig config = make_config(f, 8, 1, 0, 11);
    pm::Rng rng(4);
    std::vector<pm::FieldElement> a = random_vector(f, 8, rng);
    EXPECT_EQ(pm::mpc_coset_ifft(config, a), config.domain().coset_ifft(a));
    EXPECT_EQ(pm::mpc_coset_ifft(config, std::vector<pm::FieldElement>(8, f.zero())),
              std::vector<pm::FieldElement>(8, f.zero()));
}

// The additive reshare summands held by the servers must sum to the true
// stride chunks of the coefficient vector, before any resharing hides them.
TEST(MpcTest, ReshareSummandsSumToCoefficientChunks) {
    const pm::PrimeField& desk = pm::PrimeField::desk();
    pm::Rng rng(31337);
    for (std::size_t n : {4u, 16u}) {
        for (std::uint32_t K : {2u, 4u}) {
            if (n % K != 0) continue;
            for (std::uint32_t T : {1u, 2u}) {
                pm::ProtocolConfig config = make_config(desk, n, K, T, 900 + n + K + T);
                std::vector<pm::FieldElement> a = random_vector(desk, n, rng);
                pm::SimulationResult run =
                    pm::run_simulation(config, pm::ProtocolKind::composed_fft, a);
                auto chunks = pm::stride_partition(config.domain().ifft(a), K);
                for (std::uint32_t j = 0; j < K; j++) {
                    std::vector<pm::FieldElement> sum(n / K, desk.zero());
                    for (const pm::ServerState& st : run.servers)
                        for (std::size_t t = 0; t < sum.size(); t++)
                            sum[t] = sum[t] + st.reshare_chunks[j][t];
                    EXPECT_EQ(sum, chunks[j]) << "n=" << n << " K=" << K << " T=" << T << " j=" << j;
                }
            }
        }
    }
}

// Both sharing layers of a run must open to the correct chunk vectors.
TEST(MpcTest, InternalSharingsReconstruct) {
    const pm::PrimeField& f = pm::PrimeField::test17();
    pm::ProtocolConfig config = make_config(f, 8, 2, 1, 60);
    pm::Rng rng(8);
    std::vector<pm::FieldElement> a = random_vector(f, 8, rng);
    pm::SimulationResult run = pm::run_simulation(config, pm::ProtocolKind::composed_fft, a);

    std::vector<pm::ShareVector> first_layer;
    for (const pm::ServerState& st : run.servers)
        first_layer.push_back(pm::ShareVector{st.index, st.share});
    auto input_chunks = pm::stride_partition(a, 2);
    auto coeff_chunks = pm::stride_partition(config.domain().ifft(a), 2);
    std::vector<pm::ShareVector> second_layer;
    for (const pm::ServerState& st : run.servers)
        second_layer.push_back(pm::ShareVector{st.index, st.aggregate});
    for (std::uint32_t j = 0; j < 2; j++) {
        EXPECT_EQ(pm::reconstruct_at(config.sharing(), first_layer, config.sharing().beta()[j]),
                  input_chunks[j]);
        EXPECT_EQ(pm::reconstruct_at(config.sharing(), second_layer, config.sharing().beta()[j]),
                  coeff_chunks[j]);
    }
}

TEST(MpcTest, SameSeedGivesIdenticalTranscriptBytes) {
    const pm::PrimeField& f = pm::PrimeField::desk();
    pm::Rng rng(15);
    std::vector<pm::FieldElement> a = random_vector(f, 8, rng);
    pm::ProtocolConfig config = make_config(f, 8, 2, 1, 1234);
    pm::SimulationResult r1 = pm::run_simulation(config, pm::ProtocolKind::composed_fft, a);
    pm::SimulationResult r2 = pm::run_simulation(config, pm::ProtocolKind::composed_fft, a);
    EXPECT_EQ(r1.transcript.serialize(), r2.transcript.serialize());
    EXPECT_EQ(r1.output, r2.output);
}

TEST(MpcTest, DifferentSeedsSameOutputDifferentViews) {
    const pm::PrimeField& f = pm::PrimeField::desk();
    pm::Rng rng(16);
    std::vector<pm::FieldElement> a = random_vector(f, 8, rng);
    pm::SimulationResult r1 =
        pm::run_simulation(make_config(f, 8, 2, 1, 1), pm::ProtocolKind::composed_fft, a);
    pm::SimulationResult r2 =
        pm::run_simulation(make_config(f, 8, 2, 1, 2), pm::ProtocolKind::composed_fft, a);
    EXPECT_EQ(r1.output, r2.output);
    bool views_differ = false;
    for (std::size_t i = 0; i < r1.servers[0].view_log.size(); i++)
        if (r1.servers[0].view_log[i].payload != r2.servers[0].view_log[i].payload) views_differ = true;
    EXPECT_TRUE(views_differ);
}

TEST(MpcTest, TranscriptSerializationRoundTrips) {
    const pm::PrimeField& f = pm::PrimeField::test17();
    pm::ProtocolConfig config = make_config(f, 4, 2, 1, 321);
    pm::Rng rng(22);
    std::vector<pm::FieldElement> a = random_vector(f, 4, rng);
    pm::Transcript tr = pm::run_simulation(config, pm::ProtocolKind::coset_ifft, a).transcript;
    std::vector<std::uint8_t> bytes = tr.serialize();
    pm::Transcript back = pm::Transcript::parse(bytes, f);
    EXPECT_EQ(back.serialize(), bytes);
    EXPECT_EQ(back.n, 4u);
    EXPECT_EQ(back.chunks, 2u);
    EXPECT_EQ(back.threshold, 1u);
    EXPECT_EQ(back.servers, 3u);
    EXPECT_EQ(back.seed, 321u);

    std::vector<std::uint8_t> truncated(bytes.begin(), bytes.end() - 3);
    EXPECT_THROW(pm::Transcript::parse(truncated, f), pm::ParseError);
    EXPECT_THROW(pm::Transcript::parse(bytes, pm::PrimeField::desk()), pm::ParseError);
}

TEST(MpcTest, ReplayReproducesOutputAndCatchesTampering) {
    const pm::PrimeField& f = pm::PrimeField::desk();
    pm::Rng rng(23);
    std::vector<pm::FieldElement> a = random_vector(f, 16, rng);
    pm::ProtocolConfig config = make_config(f, 16, 4, 2, 5150);
    for (pm::ProtocolKind kind : {pm::ProtocolKind::composed_fft, pm::ProtocolKind::coset_ifft}) {
        pm::SimulationResult run = pm::run_simulation(config, kind, a);
        EXPECT_EQ(pm::replay(config, kind, run.transcript), run.output);

        pm::Transcript bad = run.transcript;
        pm::Message& last = bad.messages.back();  // a server response in both protocols
        last.payload[0] += f.one();
        EXPECT_THROW(pm::replay(config, kind, bad), pm::ProtocolAbort);
    }
}

TEST(MpcTest, DroppedMessageAbortsWithFailingStep) {
    const pm::PrimeField& f = pm::PrimeField::test17();
    pm::ProtocolConfig config = make_config(f, 8, 2, 1, 77);
    pm::Rng rng(29);
    std::vector<pm::FieldElement> a = random_vector(f, 8, rng);

    pm::Corruption drop{2, 2, 1, 0, pm::Corruption::Kind::drop};
    pm::SimulationOptions opts;
    opts.corruption = &drop;
    try {
        pm::run_simulation(config, pm::ProtocolKind::composed_fft, a, opts);
        FAIL() << "expected ProtocolAbort";
    } catch (const pm::ProtocolAbort& e) {
        EXPECT_EQ(e.server, 2u);
        EXPECT_EQ(e.step, "server_aggregate");
    }
}

TEST(MpcTest, TamperedMessageChangesOutputSilently) {
    const pm::PrimeField& f = pm::PrimeField::desk();
    pm::ProtocolConfig config = make_config(f, 8, 2, 1, 78);
    pm::Rng rng(30);
    std::vector<pm::FieldElement> a = random_vector(f, 8, rng);
    pm::Corruption tamper{2, 2, 1, 0, pm::Corruption::Kind::tamper};
    pm::SimulationOptions opts;
    opts.corruption = &tamper;
    std::vector<pm::FieldElement> out = pm::mpc_composed_fft(config, a, opts);
    EXPECT_NE(out, config.domain().coset_fft(config.domain().ifft(a)));
}

TEST(MpcTest, ZeroRandomnessStillExact) {
    const pm::PrimeField& f = pm::PrimeField::test17();
    pm::ProtocolConfig config = make_config(f, 8, 4, 1, 79);
    pm::Rng rng(31);
    std::vector<pm::FieldElement> a = random_vector(f, 8, rng);
    pm::ZeroRandomness zeros;
    pm::SimulationOptions opts;
    opts.randomness = &zeros;
    EXPECT_EQ(pm::mpc_composed_fft(config, a, opts),
              config.domain().coset_fft(config.domain().ifft(a)));
}

TEST(MpcTest, ConfigRejectsBadParameters) {
    const pm::PrimeField& f = pm::PrimeField::test17();
    pm::EvaluationDomain no_coset(f, 8, std::nullopt, std::nullopt);
    EXPECT_THROW(pm::ProtocolConfig(no_coset, pm::SharingParams::canonical(f, 2, 1), 0),
                 pm::DomainError);
    pm::EvaluationDomain coset(f, 8, std::nullopt, f.generator());
    EXPECT_THROW(pm::ProtocolConfig(coset, pm::SharingParams::canonical(f, 3, 1), 0),
                 pm::DomainError);  // 3 does not divide 8
    pm::ProtocolConfig config(coset, pm::SharingParams::canonical(f, 2, 1), 0);
    std::vector<pm::FieldElement> short_input(4, f.zero());
    EXPECT_THROW(pm::mpc_composed_fft(config, short_input), pm::DomainError);
}

TEST(MpcTest, ViewLogsOnlyHoldOwnMail) {
    const pm::PrimeField& f = pm::PrimeField::test17();
    pm::ProtocolConfig config = make_config(f, 4, 2, 1, 80);
    pm::Rng rng(33);
    std::vector<pm::FieldElement> a = random_vector(f, 4, rng);
    pm::SimulationResult run = pm::run_simulation(config, pm::ProtocolKind::composed_fft, a);
    for (const pm::ServerState& st : run.servers) {
        EXPECT_FALSE(st.view_log.empty());
        for (const pm::Message& m : st.view_log) EXPECT_EQ(m.to, st.index);
    }
}

TEST(MpcTest, OperationCountsAttributeToParties) {
    const pm::PrimeField& f = pm::PrimeField::desk();
    pm::ProtocolConfig config = make_config(f, 16, 2, 1, 81);
    pm::Rng rng(34);
    std::vector<pm::FieldElement> a = random_vector(f, 16, rng);
    pm::OpCounter counter;
    {
        pm::ScopedCounting scope(counter);
        pm::mpc_composed_fft(config, a);
    }
    ASSERT_GE(counter.parties().size(), 4u);  // prover + 3 servers
    EXPECT_GT(counter.party(pm::OpCounter::kProver).mul, 0u);
    for (std::uint32_t theta = 1; theta <= 3; theta++) EXPECT_GT(counter.party(theta).mul, 0u);
    // Symmetric servers do identical work.
    EXPECT_EQ(counter.party(1).mul, counter.party(2).mul);
    EXPECT_EQ(counter.party(1).add, counter.party(3).add);
}
