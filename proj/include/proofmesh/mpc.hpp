#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "proofmesh/bytes.hpp"
#include "proofmesh/domain.hpp"
#include "proofmesh/errors.hpp"
#include "proofmesh/field.hpp"
#include "proofmesh/opcount.hpp"
#include "proofmesh/rng.hpp"
#include "proofmesh/sharing.hpp"

namespace proofmesh {

// Multiparty evaluation of the two transforms a QAP prover needs:
//
//   composed forward:  coset_fft(ifft(a))   (three rounds)
//   coset inverse:     coset_ifft(a)        (single server round)
//
// The length-n input is stride-partitioned into K chunks of length M = n/K,
// hidden behind a T-private Lagrange sharing, and each of the N = K + T
// servers only ever touches length-M vectors. Everything a server learns is
// recorded in its view log; the full message flow lands in a Transcript.
//
// Party indexing everywhere: 0 is the prover, 1..N are servers.

struct Message {
    std::uint32_t round = 0;
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    std::vector<FieldElement> payload;
};

enum class ProtocolKind : std::uint8_t { composed_fft = 1, coset_ifft = 2 };

// Where protocol randomness comes from. The simulator asks once per party and
// run; swapping the source lets tests enumerate or zero the coins without
// touching protocol code.
class RandomnessSource {
  public:
    virtual ~RandomnessSource() = default;

    // `count` vectors of `len` elements for `party` in run `run_tag`.
    virtual std::vector<std::vector<FieldElement>> draw(const PrimeField& field, std::uint32_t party,
                                                        std::uint64_t run_tag, std::size_t count,
                                                        std::size_t len) = 0;
};

// Default source: one independent substream per (run, party).
class SeededRandomness : public RandomnessSource {
  public:
    explicit SeededRandomness(std::uint64_t seed) : seed_(seed) {}

    std::vector<std::vector<FieldElement>> draw(const PrimeField& field, std::uint32_t party,
                                                std::uint64_t run_tag, std::size_t count,
                                                std::size_t len) override {
        Rng rng(substream_seed(seed_, run_tag, party));
        std::vector<std::vector<FieldElement>> out(count);
        for (auto& vec : out) {
            vec.reserve(len);
            for (std::size_t i = 0; i < len; i++) vec.push_back(field.element(rng.below(field.modulus())));
        }
        return out;
    }

  private:
    std::uint64_t seed_;
};

// All-zero coins; the negative control for the privacy audit.
class ZeroRandomness : public RandomnessSource {
  public:
    std::vector<std::vector<FieldElement>> draw(const PrimeField& field, std::uint32_t /*party*/,
                                                std::uint64_t /*run_tag*/, std::size_t count,
                                                std::size_t len) override {
        return std::vector<std::vector<FieldElement>>(count, std::vector<FieldElement>(len, field.zero()));
    }
};

// Fixed coins per party, flat value lists; parties absent from the map get
// zeros. This is how the exhaustive privacy census drives every run.
class ExplicitRandomness : public RandomnessSource {
  public:
    explicit ExplicitRandomness(std::map<std::uint32_t, std::vector<std::uint64_t>> values)
        : values_(std::move(values)) {}

    std::vector<std::vector<FieldElement>> draw(const PrimeField& field, std::uint32_t party,
                                                std::uint64_t /*run_tag*/, std::size_t count,
                                                std::size_t len) override {
        std::vector<std::vector<FieldElement>> out(count, std::vector<FieldElement>(len, field.zero()));
        auto it = values_.find(party);
        if (it == values_.end()) return out;
        if (it->second.size() != count * len)
            throw Error("explicit randomness for party " + std::to_string(party) + " has wrong length");
        for (std::size_t j = 0; j < count; j++)
            for (std::size_t i = 0; i < len; i++) out[j][i] = field.element(it->second[j * len + i]);
        return out;
    }

  private:
    std::map<std::uint32_t, std::vector<std::uint64_t>> values_;
};

// Fault injection: mutate the matching in-flight message. `tamper` bumps one
// element (silent data corruption, caught downstream by proof self-checks);
// `drop` truncates the payload (malformed message, surfaces as ProtocolAbort).
struct Corruption {
    enum class Kind : std::uint8_t { tamper, drop };
    std::uint32_t round = 0;
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    std::size_t index = 0;  // element to bump, tamper only
    Kind kind = Kind::tamper;
};

// Everything one server holds during a run. Step functions only ever read
// their own state plus the public config; cross-server data arrives solely
// through view_log, which is what makes the recorded views meaningful.
struct ServerState {
    std::uint32_t index = 0;  // 1-based
    std::vector<FieldElement> share;
    std::vector<FieldElement> y;                            // local inverse transform of `share`
    std::vector<std::vector<FieldElement>> reshare_chunks;  // this server's additive summands, per chunk
    std::vector<FieldElement> aggregate;
    std::vector<Message> view_log;  // every message this server received
};

// Complete record of one protocol run, byte-stable across platforms.
struct Transcript {
    std::uint64_t modulus = 0;
    std::uint32_t n = 0;
    std::uint32_t chunks = 0;     // K
    std::uint32_t threshold = 0;  // T
    std::uint32_t servers = 0;    // N
    std::uint64_t seed = 0;
    std::vector<Message> messages;  // delivery order

    std::vector<std::uint8_t> serialize() const {
        ByteWriter w;
        w.magic("PMTX1");
        w.u64(modulus);
        w.u32(n);
        w.u32(chunks);
        w.u32(threshold);
        w.u32(servers);
        w.u64(seed);
        w.u32(static_cast<std::uint32_t>(messages.size()));
        for (const Message& m : messages) {
            w.u32(static_cast<std::uint32_t>(12 + 8 * m.payload.size()));  // record length in bytes
            w.u32(m.round);
            w.u32(m.from);
            w.u32(m.to);
            for (const FieldElement& e : m.payload) w.u64(e.value());
        }
        return w.take();
    }

    static Transcript parse(const std::vector<std::uint8_t>& bytes, const PrimeField& field) {
        ByteReader r(bytes);
        r.magic("PMTX1");
        Transcript t;
        t.modulus = r.u64();
        if (t.modulus != field.modulus()) throw ParseError(0, "transcript field does not match");
        t.n = r.u32();
        t.chunks = r.u32();
        t.threshold = r.u32();
        t.servers = r.u32();
        t.seed = r.u64();
        std::uint32_t count = r.u32();
        t.messages.reserve(count);
        for (std::uint32_t i = 0; i < count; i++) {
            std::uint32_t len = r.u32();
            if (len < 12 || (len - 12) % 8 != 0) throw ParseError(0, "malformed message record");
            Message m;
            m.round = r.u32();
            m.from = r.u32();
            m.to = r.u32();
            std::size_t elems = (len - 12) / 8;
            m.payload.reserve(elems);
            for (std::size_t e = 0; e < elems; e++) {
                std::uint64_t v = r.u64();
                if (v >= field.modulus()) throw ParseError(0, "payload element out of range");
                m.payload.push_back(field.element(v));
            }
            t.messages.push_back(std::move(m));
        }
        if (!r.done()) throw ParseError(0, "trailing bytes after transcript");
        return t;
    }
};

// Public parameters of a distributed run: the full-size coset domain, its
// K-fold subdomain, the sharing geometry, and two precomputed tables that are
// pure functions of those (no secret enters them):
//
//   lambda(l, theta):  basis polynomial of evaluation point alpha_theta,
//                      evaluated at data point beta_l; used to open shared
//                      vectors at the data points.
//   reshare_weight(theta, u):  (1/K) * sum_l lambda(l, theta) * omega^{-u*l},
//                      the public factor server theta applies at position u
//                      when it turns its local transform into additive
//                      summands of the global coefficient vector.
class ProtocolConfig {
  public:
    ProtocolConfig(const EvaluationDomain& domain, SharingParams sharing, std::uint64_t rng_seed)
        : domain_(domain),
          sub_(domain.subdomain(sharing.data_chunks())),
          sharing_(std::move(sharing)),
          seed_(rng_seed) {
        if (&domain_.field() != &sharing_.field() &&
            domain_.field().modulus() != sharing_.field().modulus())
            throw DomainError("domain and sharing use different fields");
        if (!domain_.has_coset()) throw DomainError("protocol needs a coset domain");
        const std::size_t n = domain_.size();
        const std::uint32_t K = sharing_.data_chunks(), N = sharing_.num_servers();
        if (n % K != 0) throw DomainError("chunk count must divide the domain size");

        inv_chunks_ = field().element(K).inv();
        lambda_.resize(K);
        for (std::uint32_t l = 0; l < K; l++)
            lambda_[l] = sharing_.lagrange_coefficients(sharing_.beta()[l]);
        weights_.assign(N, std::vector<FieldElement>());
        for (std::uint32_t theta = 0; theta < N; theta++) {
            weights_[theta].reserve(n);
            for (std::size_t u = 0; u < n; u++) {
                FieldElement acc = field().zero();
                for (std::uint32_t l = 0; l < K; l++)
                    acc += lambda_[l][theta] * domain_.omega_inv_pow(u * l);
                weights_[theta].push_back(inv_chunks_ * acc);
            }
        }
    }

    const PrimeField& field() const { return domain_.field(); }
    const EvaluationDomain& domain() const { return domain_; }
    const EvaluationDomain& subdomain() const { return sub_; }
    const SharingParams& sharing() const { return sharing_; }
    std::uint32_t data_chunks() const { return sharing_.data_chunks(); }
    std::uint32_t privacy_threshold() const { return sharing_.privacy_threshold(); }
    std::uint32_t num_servers() const { return sharing_.num_servers(); }
    std::size_t chunk_length() const { return sub_.size(); }
    std::uint64_t seed() const { return seed_; }
    const FieldElement& inv_chunks() const { return inv_chunks_; }

    const FieldElement& lambda(std::size_t l, std::size_t theta) const { return lambda_[l][theta]; }
    const FieldElement& reshare_weight(std::uint32_t theta, std::size_t u) const {
        return weights_[theta - 1][u];
    }

  private:
    EvaluationDomain domain_;
    EvaluationDomain sub_;
    SharingParams sharing_;
    std::uint64_t seed_;
    FieldElement inv_chunks_;
    std::vector<std::vector<FieldElement>> lambda_;    // [K][N]
    std::vector<std::vector<FieldElement>> weights_;   // [N][n]
};

// ---- Individual protocol steps -------------------------------------------
//
// Exposed separately so tests can probe intermediate state; run_simulation
// wires them together in round order.

// Round 1, prover: stride-partition the input and share it under T fresh
// blinding vectors. Share theta goes to server theta.
inline std::vector<ShareVector> prover_share_phase(const ProtocolConfig& config,
                                                   const std::vector<FieldElement>& a,
                                                   const std::vector<std::vector<FieldElement>>& randomness) {
    if (a.size() != config.domain().size()) throw DomainError("input length must equal the domain size");
    return share(config.sharing(), stride_partition(a, config.data_chunks()), randomness);
}

// Round 1, server: inverse transform of the received share on the subdomain.
inline const std::vector<FieldElement>& server_local_ifft(const ProtocolConfig& config, ServerState& state) {
    if (state.share.size() != config.chunk_length())
        throw ProtocolAbort(state.index, "server_local_ifft", "share has wrong length");
    state.y = config.subdomain().ifft(state.share);
    return state.y;
}

// Round 2, server: expand the local transform into this server's additive
// summands of the global coefficient vector (weight table times y, read with
// period M), stride-partition them, and re-share under fresh randomness.
// Message to server gamma carries this server's contribution to gamma's
// second-layer share.
inline std::vector<Message> server_reshare(const ProtocolConfig& config, ServerState& state,
                                           const std::vector<std::vector<FieldElement>>& randomness) {
    if (state.y.size() != config.chunk_length())
        throw ProtocolAbort(state.index, "server_reshare", "local transform missing");
    const std::size_t n = config.domain().size(), M = config.chunk_length();
    std::vector<FieldElement> z;
    z.reserve(n);
    for (std::size_t u = 0; u < n; u++) z.push_back(config.reshare_weight(state.index, u) * state.y[u % M]);
    state.reshare_chunks = stride_partition(z, config.data_chunks());
    std::vector<ShareVector> shares = share(config.sharing(), state.reshare_chunks, randomness);
    std::vector<Message> out;
    out.reserve(shares.size());
    for (ShareVector& sv : shares)
        out.push_back(Message{2, state.index, sv.server, std::move(sv.payload)});
    return out;
}

// Round 2, server: sum the incoming second-layer share contributions.
inline const std::vector<FieldElement>& server_aggregate(const ProtocolConfig& config, ServerState& state) {
    const std::size_t M = config.chunk_length();
    state.aggregate.assign(M, config.field().zero());
    std::size_t seen = 0;
    for (const Message& m : state.view_log) {
        if (m.round != 2) continue;
        if (m.payload.size() != M)
            throw ProtocolAbort(m.from, "server_aggregate", "reshare message has wrong length");
        for (std::size_t i = 0; i < M; i++) state.aggregate[i] += m.payload[i];
        seen++;
    }
    if (seen != config.num_servers())
        throw ProtocolAbort(state.index, "server_aggregate", "missing reshare messages");
    return state.aggregate;
}

// Round 3, server: forward transform of the aggregate on the coset subdomain.
inline std::vector<FieldElement> server_coset_fft(const ProtocolConfig& config, ServerState& state) {
    if (state.aggregate.size() != config.chunk_length())
        throw ProtocolAbort(state.index, "server_coset_fft", "aggregate missing");
    return config.subdomain().coset_fft(state.aggregate);
}

// Final step, prover: open the response sharing at each data point to get the
// per-chunk transforms, then recombine them into the length-n result:
// out[i] = sum_j (omega^i * eta)^j * chunk_j[i mod M]   (j = 0..K-1).
inline std::vector<FieldElement> prover_decode(const ProtocolConfig& config,
                                               const std::vector<std::vector<FieldElement>>& responses) {
    const std::size_t M = config.chunk_length(), n = config.domain().size();
    const std::uint32_t K = config.data_chunks(), N = config.num_servers();
    if (responses.size() != N) throw ProtocolAbort(0, "prover_decode", "expected one response per server");
    for (std::size_t theta = 0; theta < N; theta++)
        if (responses[theta].size() != M)
            throw ProtocolAbort(static_cast<std::uint32_t>(theta + 1), "prover_decode",
                                "response has wrong length");
    std::vector<std::vector<FieldElement>> chunk(K, std::vector<FieldElement>(M, config.field().zero()));
    for (std::uint32_t j = 0; j < K; j++)
        for (std::uint32_t theta = 0; theta < N; theta++)
            for (std::size_t i = 0; i < M; i++) chunk[j][i] += config.lambda(j, theta) * responses[theta][i];

    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; i++) {
        FieldElement base = config.domain().omega_pow(i) * config.domain().eta();
        FieldElement pw = config.field().one();
        FieldElement acc = chunk[0][i % M];
        for (std::uint32_t j = 1; j < K; j++) {
            pw = pw * base;
            acc += pw * chunk[j][i % M];
        }
        out.push_back(acc);
    }
    return out;
}

// Final step of the inverse protocol: open the per-chunk inverse transforms
// and recombine with the inverse twiddles and the coset unscaling:
// out[i] = (1/K) * eta^{-i} * sum_j omega^{-i*j} * chunk_j[i mod M].
inline std::vector<FieldElement> prover_decode_inverse(const ProtocolConfig& config,
                                                       const std::vector<std::vector<FieldElement>>& responses) {
    const std::size_t M = config.chunk_length(), n = config.domain().size();
    const std::uint32_t K = config.data_chunks(), N = config.num_servers();
    if (responses.size() != N)
        throw ProtocolAbort(0, "prover_decode_inverse", "expected one response per server");
    for (std::size_t theta = 0; theta < N; theta++)
        if (responses[theta].size() != M)
            throw ProtocolAbort(static_cast<std::uint32_t>(theta + 1), "prover_decode_inverse",
                                "response has wrong length");
    std::vector<std::vector<FieldElement>> chunk(K, std::vector<FieldElement>(M, config.field().zero()));
    for (std::uint32_t j = 0; j < K; j++)
        for (std::uint32_t theta = 0; theta < N; theta++)
            for (std::size_t i = 0; i < M; i++) chunk[j][i] += config.lambda(j, theta) * responses[theta][i];

    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; i++) {
        FieldElement acc = chunk[0][i % M];
        for (std::uint32_t j = 1; j < K; j++)
            acc += config.domain().omega_inv_pow(i * j) * chunk[j][i % M];
        out.push_back(config.inv_chunks() * config.domain().eta_inv_pow(i) * acc);
    }
    return out;
}

// ---- Round-synchronous scheduler -----------------------------------------

struct SimulationOptions {
    RandomnessSource* randomness = nullptr;  // default: SeededRandomness(config.seed())
    std::uint64_t run_tag = 0;
    const Corruption* corruption = nullptr;
};

struct SimulationResult {
    std::vector<FieldElement> output;
    Transcript transcript;
    std::vector<ServerState> servers;  // final states, for view inspection
};

namespace detail {

inline void apply_corruption(Message& m, const Corruption* c) {
    if (!c || m.round != c->round || m.from != c->from || m.to != c->to) return;
    if (c->kind == Corruption::Kind::drop) {
        if (!m.payload.empty()) m.payload.pop_back();
        return;
    }
    if (c->index >= m.payload.size()) throw Error("corruption index out of range");
    m.payload[c->index] += m.payload[c->index].field().one();
}

}  // namespace detail

// Executes one protocol run. Deterministic given (config seed, run_tag):
// rounds are barriers, messages are delivered receiver-major in party order,
// and all randomness flows through `opts.randomness`. Servers communicate
// only via recorded messages; the returned transcript is the full wire log.
inline SimulationResult run_simulation(const ProtocolConfig& config, ProtocolKind kind,
                                       const std::vector<FieldElement>& input,
                                       const SimulationOptions& opts = {}) {
    const std::uint32_t N = config.num_servers(), T = config.privacy_threshold();
    const std::size_t M = config.chunk_length();
    SeededRandomness fallback(config.seed());
    RandomnessSource& coins = opts.randomness ? *opts.randomness : fallback;

    SimulationResult result;
    Transcript& tr = result.transcript;
    tr.modulus = config.field().modulus();
    tr.n = static_cast<std::uint32_t>(config.domain().size());
    tr.chunks = config.data_chunks();
    tr.threshold = config.privacy_threshold();
    tr.servers = N;
    tr.seed = config.seed();

    result.servers.resize(N);
    for (std::uint32_t theta = 1; theta <= N; theta++) result.servers[theta - 1].index = theta;

    auto deliver = [&](Message m) {
        detail::apply_corruption(m, opts.corruption);
        if (m.to != OpCounter::kProver) result.servers[m.to - 1].view_log.push_back(m);
        tr.messages.push_back(std::move(m));
    };

    // Round 1: prover shares the input.
    {
        ScopedParty as_prover(OpCounter::kProver);
        std::vector<ShareVector> shares =
            prover_share_phase(config, input, coins.draw(config.field(), OpCounter::kProver, opts.run_tag, T, M));
        for (ShareVector& sv : shares) deliver(Message{1, OpCounter::kProver, sv.server, std::move(sv.payload)});
    }
    for (std::uint32_t theta = 1; theta <= N; theta++) {
        ServerState& st = result.servers[theta - 1];
        st.share = st.view_log.back().payload;  // the only round-1 message a server gets
    }

    if (kind == ProtocolKind::composed_fft) {
        // Round 2: local inverse transform, then the all-to-all reshare.
        std::vector<Message> outbox;
        for (std::uint32_t theta = 1; theta <= N; theta++) {
            ScopedParty as_server(theta);
            ServerState& st = result.servers[theta - 1];
            server_local_ifft(config, st);
            std::vector<Message> msgs =
                server_reshare(config, st, coins.draw(config.field(), theta, opts.run_tag, T, M));
            for (Message& m : msgs) outbox.push_back(std::move(m));
        }
        for (std::uint32_t to = 1; to <= N; to++)
            for (std::uint32_t from = 1; from <= N; from++)
                for (Message& m : outbox)
                    if (m.to == to && m.from == from) deliver(std::move(m));

        // Round 3: aggregate, forward transform, respond to the prover.
        std::vector<std::vector<FieldElement>> responses(N);
        for (std::uint32_t theta = 1; theta <= N; theta++) {
            ScopedParty as_server(theta);
            ServerState& st = result.servers[theta - 1];
            server_aggregate(config, st);
            responses[theta - 1] = server_coset_fft(config, st);
        }
        for (std::uint32_t theta = 1; theta <= N; theta++)
            deliver(Message{3, theta, OpCounter::kProver, responses[theta - 1]});
        for (std::uint32_t theta = 1; theta <= N; theta++)  // decode what was actually delivered
            responses[theta - 1] = tr.messages[tr.messages.size() - N + theta - 1].payload;

        ScopedParty as_prover(OpCounter::kProver);
        result.output = prover_decode(config, responses);
        return result;
    }

    // Inverse protocol: single server round, direct response.
    std::vector<std::vector<FieldElement>> responses(N);
    for (std::uint32_t theta = 1; theta <= N; theta++) {
        ScopedParty as_server(theta);
        ServerState& st = result.servers[theta - 1];
        responses[theta - 1] = server_local_ifft(config, st);
    }
    for (std::uint32_t theta = 1; theta <= N; theta++)
        deliver(Message{2, theta, OpCounter::kProver, responses[theta - 1]});
    for (std::uint32_t theta = 1; theta <= N; theta++)
        responses[theta - 1] = tr.messages[tr.messages.size() - N + theta - 1].payload;

    ScopedParty as_prover(OpCounter::kProver);
    result.output = prover_decode_inverse(config, responses);
    return result;
}

// Distributed coset_fft(ifft(a)); equals the single-machine composition.
inline std::vector<FieldElement> mpc_composed_fft(const ProtocolConfig& config,
                                                  const std::vector<FieldElement>& a,
                                                  const SimulationOptions& opts = {}) {
    return run_simulation(config, ProtocolKind::composed_fft, a, opts).output;
}

// Distributed coset_ifft(a); equals the single-machine transform.
inline std::vector<FieldElement> mpc_coset_ifft(const ProtocolConfig& config,
                                                const std::vector<FieldElement>& a,
                                                const SimulationOptions& opts = {}) {
    return run_simulation(config, ProtocolKind::coset_ifft, a, opts).output;
}

// Re-executes every deterministic computation a transcript pins down and
// checks the recorded messages against the recomputation, then returns the
// recomputed protocol output. Server randomness only ever enters via recorded
// messages, so everything downstream of those is verifiable.
inline std::vector<FieldElement> replay(const ProtocolConfig& config, ProtocolKind kind,
                                        const Transcript& tr) {
    const std::uint32_t N = config.num_servers();
    const std::size_t M = config.chunk_length();
    if (tr.modulus != config.field().modulus() || tr.n != config.domain().size() ||
        tr.chunks != config.data_chunks() || tr.threshold != config.privacy_threshold() ||
        tr.servers != N)
        throw Error("transcript does not match the protocol configuration");

    auto find = [&](std::uint32_t round, std::uint32_t from, std::uint32_t to) -> const Message& {
        for (const Message& m : tr.messages)
            if (m.round == round && m.from == from && m.to == to) return m;
        throw ProtocolAbort(from, "replay", "transcript is missing a message");
    };

    if (kind == ProtocolKind::composed_fft) {
        std::vector<std::vector<FieldElement>> responses(N);
        for (std::uint32_t theta = 1; theta <= N; theta++) {
            ServerState st;
            st.index = theta;
            for (std::uint32_t from = 1; from <= N; from++) st.view_log.push_back(find(2, from, theta));
            server_aggregate(config, st);
            std::vector<FieldElement> w = server_coset_fft(config, st);
            const Message& recorded = find(3, theta, OpCounter::kProver);
            if (recorded.payload != w)
                throw ProtocolAbort(theta, "replay", "recorded response does not match recomputation");
            responses[theta - 1] = std::move(w);
        }
        return prover_decode(config, responses);
    }

    std::vector<std::vector<FieldElement>> responses(N);
    for (std::uint32_t theta = 1; theta <= N; theta++) {
        ServerState st;
        st.index = theta;
        st.share = find(1, OpCounter::kProver, theta).payload;
        if (st.share.size() != M) throw ProtocolAbort(theta, "replay", "share has wrong length");
        const Message& recorded = find(2, theta, OpCounter::kProver);
        if (recorded.payload != server_local_ifft(config, st))
            throw ProtocolAbort(theta, "replay", "recorded response does not match recomputation");
        responses[theta - 1] = recorded.payload;
    }
    return prover_decode_inverse(config, responses);
}

}  // namespace proofmesh
