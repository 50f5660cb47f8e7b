#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "proofmesh/bytes.hpp"
#include "proofmesh/errors.hpp"
#include "proofmesh/field.hpp"
#include "proofmesh/mpc.hpp"
#include "proofmesh/opcount.hpp"
#include "proofmesh/rng.hpp"

namespace proofmesh {

// Exhaustive privacy audit and operation-count instrumentation.
//
// The census treats the protocol as a black box: it fixes a secret input,
// runs the three-round distributed transform once for EVERY assignment of the
// unknown coins (the prover's blinding vectors and every honest server's
// reshare vectors), and collects the multiset of everything the colluding
// servers saw. T-privacy in the information-theoretic sense says that
// multiset is the same whatever the secret is; the census checks exactly
// that, with no statistical tolerance. The colluders' own coins are part of
// what the adversary already knows, so they stay pinned at zero rather than
// being enumerated.

inline constexpr double kCensusBudget = 1e7;

struct CensusResult {
    bool is_private = false;
    std::size_t runs_per_secret = 0;  // multiset size, counted with multiplicity
    std::size_t distinct_views = 0;   // distinct serialized views of the first secret
};

namespace detail {

// Canonical byte form of everything the colluding set received in one run:
// messages sorted by (round, to, from), fixed-width little-endian fields.
inline std::string serialize_views(const std::vector<ServerState>& servers,
                                   const std::vector<std::uint32_t>& colluders) {
    std::vector<const Message*> seen;
    for (std::uint32_t c : colluders)
        for (const Message& m : servers[c - 1].view_log) seen.push_back(&m);
    std::sort(seen.begin(), seen.end(), [](const Message* a, const Message* b) {
        return std::tie(a->round, a->to, a->from) < std::tie(b->round, b->to, b->from);
    });
    ByteWriter w;
    for (const Message* m : seen) {
        w.u32(m->round);
        w.u32(m->from);
        w.u32(m->to);
        for (const FieldElement& e : m->payload) w.u64(e.value());
    }
    const std::vector<std::uint8_t>& b = w.bytes();
    return std::string(b.begin(), b.end());
}

}  // namespace detail

// Enumerates all unknown randomness for each secret and compares the
// colluding-view multisets. `break_sharing` zeroes the prover's blinding
// instead of enumerating it: the deliberately unsafe variant the audit must
// flag, proving the census can detect a leak at all.
inline CensusResult privacy_census(const ProtocolConfig& config,
                                   const std::vector<std::uint32_t>& colluders,
                                   const std::vector<std::vector<FieldElement>>& secrets,
                                   bool break_sharing = false) {
    const std::uint32_t N = config.num_servers(), T = config.privacy_threshold();
    const std::size_t M = config.chunk_length();
    const std::uint64_t p = config.field().modulus();

    if (colluders.size() > T) throw Error("colluding set exceeds the privacy threshold");
    for (std::uint32_t c : colluders)
        if (c < 1 || c > N) throw Error("colluder index out of range");
    if (secrets.size() < 2) throw Error("census needs at least two secrets to compare");
    for (const auto& s : secrets)
        if (s.size() != config.domain().size()) throw Error("secret has wrong length");

    if (colluders.empty()) return CensusResult{true, 0, 0};  // nothing is seen at all

    std::vector<std::uint32_t> honest;
    for (std::uint32_t theta = 1; theta <= N; theta++)
        if (std::find(colluders.begin(), colluders.end(), theta) == colluders.end())
            honest.push_back(theta);

    // One enumeration slot per unknown coin: T vectors of length M for the
    // prover (unless deliberately broken) and for each honest server.
    std::vector<std::uint32_t> parties;
    if (!break_sharing) parties.push_back(OpCounter::kProver);
    parties.insert(parties.end(), honest.begin(), honest.end());
    const std::size_t dims = parties.size() * static_cast<std::size_t>(T) * M;

    const double required = std::pow(static_cast<double>(p), static_cast<double>(dims));
    if (required > kCensusBudget) {
        char need[32], have[32];
        std::snprintf(need, sizeof need, "%.4g", required);
        std::snprintf(have, sizeof have, "%.4g", kCensusBudget);
        throw BudgetError(required, std::string("census would need ") + need + " runs, budget is " + have);
    }
    const std::uint64_t runs = static_cast<std::uint64_t>(required + 0.5);

    std::vector<std::map<std::string, std::size_t>> multisets(secrets.size());
    std::vector<std::uint64_t> digits(dims);
    for (std::size_t which = 0; which < secrets.size(); which++) {
        std::fill(digits.begin(), digits.end(), 0);
        for (std::uint64_t run = 0; run < runs; run++) {
            std::map<std::uint32_t, std::vector<std::uint64_t>> coins;
            const std::size_t per_party = static_cast<std::size_t>(T) * M;
            for (std::size_t pi = 0; pi < parties.size(); pi++)
                coins[parties[pi]] = std::vector<std::uint64_t>(
                    digits.begin() + static_cast<std::ptrdiff_t>(pi * per_party),
                    digits.begin() + static_cast<std::ptrdiff_t>((pi + 1) * per_party));
            ExplicitRandomness source(std::move(coins));
            SimulationOptions opts;
            opts.randomness = &source;
            SimulationResult result =
                run_simulation(config, ProtocolKind::composed_fft, secrets[which], opts);
            multisets[which][detail::serialize_views(result.servers, colluders)]++;

            for (std::size_t d = 0; d < dims; d++) {  // odometer step
                if (++digits[d] < p) break;
                digits[d] = 0;
            }
        }
    }

    CensusResult out;
    out.runs_per_secret = runs;
    out.distinct_views = multisets[0].size();
    out.is_private = true;
    for (std::size_t which = 1; which < secrets.size(); which++)
        if (multisets[which] != multisets[0]) out.is_private = false;
    return out;
}

// ---- Operation-count instrumentation --------------------------------------

struct ComplexityRow {
    std::uint32_t n = 0;
    std::uint32_t chunks = 0;     // K
    std::uint32_t threshold = 0;  // T
    std::uint32_t party = 0;      // 0 = prover, otherwise server index
    OpCounts counts;
};

// Runs the distributed forward transform once per grid point on seeded random
// input and reports per-party operation counts. The public parameter tables
// (twiddles, sharing basis, reshare weights) are built before counting
// starts: they depend only on (n, K, T), never on the data.
inline std::vector<ComplexityRow> complexity_report(
    const PrimeField& field, const std::vector<std::array<std::uint32_t, 3>>& grid,
    std::uint64_t seed) {
    std::vector<ComplexityRow> rows;
    for (const auto& [n, K, T] : grid) {
        EvaluationDomain domain(field, n, std::nullopt, field.generator());
        ProtocolConfig config(domain, SharingParams::canonical(field, K, T),
                              substream_seed(seed, n, K));
        Rng rng(substream_seed(seed, 17, n + K + T));
        std::vector<FieldElement> input;
        input.reserve(n);
        for (std::uint32_t i = 0; i < n; i++) input.push_back(field.element(rng.below(field.modulus())));

        OpCounter counter;
        {
            ScopedCounting scope(counter);
            mpc_composed_fft(config, input);
        }
        for (std::uint32_t party = 0; party <= config.num_servers(); party++) {
            ComplexityRow row;
            row.n = n;
            row.chunks = K;
            row.threshold = T;
            row.party = party;
            row.counts = counter.party(party);
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace proofmesh
