#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proofmesh/errors.hpp"
#include "proofmesh/field.hpp"

namespace proofmesh {

// Threshold sharing of K data vectors with T randomness vectors over N = K+T
// servers. The degree-(N-1) polynomial u(z) interpolates the data at the
// first K beta points and the randomness at the remaining T; server theta
// receives u(alpha_theta). Any T colluding servers learn nothing about the
// data; all N shares reconstruct u(z) everywhere.
class SharingParams {
  public:
    SharingParams(const PrimeField& field, std::uint32_t K, std::uint32_t T,
                  std::vector<FieldElement> beta, std::vector<FieldElement> alpha)
        : field_(&field), K_(K), T_(T), beta_(std::move(beta)), alpha_(std::move(alpha)) {
        if (K_ < 1) throw SharingError("need at least one data chunk");
        if (beta_.size() != static_cast<std::size_t>(K_) + T_)
            throw SharingError("expected K+T interpolation points");
        if (alpha_.size() != static_cast<std::size_t>(K_) + T_)
            throw SharingError("expected N = K+T evaluation points");
        auto check_points = [&](const std::vector<FieldElement>& pts, const char* name) {
            for (std::size_t i = 0; i < pts.size(); i++) {
                if (!(pts[i].field() == field)) throw SharingError("points from a different field");
                if (pts[i].is_zero()) throw SharingError(std::string(name) + " points must be nonzero");
                for (std::size_t j = i + 1; j < pts.size(); j++)
                    if (pts[i] == pts[j]) throw SharingError(std::string(name) + " points must be distinct");
            }
        };
        check_points(beta_, "interpolation");
        check_points(alpha_, "evaluation");
        for (std::size_t l = 0; l < K_; l++)
            for (const auto& a : alpha_)
                if (a == beta_[l])
                    throw SharingError("evaluation points must avoid the data interpolation points");

        // Denominator inverses for both Lagrange bases, one batch inversion each.
        beta_denom_inv_ = basis_denominators(beta_);
        alpha_denom_inv_ = basis_denominators(alpha_);

        // beta-basis values at every evaluation point: share u(alpha) directly.
        beta_basis_at_alpha_.resize(beta_.size());
        for (std::size_t j = 0; j < beta_.size(); j++) {
            beta_basis_at_alpha_[j].reserve(alpha_.size());
            for (std::size_t t = 0; t < alpha_.size(); t++)
                beta_basis_at_alpha_[j].push_back(basis_value(beta_, beta_denom_inv_, j, alpha_[t]));
        }
    }

    // beta_j = j (1..K+T), alpha_theta = K+T+theta (1..N); disjoint by layout.
    static SharingParams canonical(const PrimeField& field, std::uint32_t K, std::uint32_t T) {
        std::uint32_t n_points = 2 * (K + T);
        if (n_points >= field.modulus())
            throw SharingError("field too small for K=" + std::to_string(K) +
                               ", T=" + std::to_string(T));
        std::vector<FieldElement> beta, alpha;
        for (std::uint32_t j = 1; j <= K + T; j++) beta.push_back(field.element(j));
        for (std::uint32_t t = 1; t <= K + T; t++) alpha.push_back(field.element(K + T + t));
        return SharingParams(field, K, T, std::move(beta), std::move(alpha));
    }

    const PrimeField& field() const { return *field_; }
    std::uint32_t data_chunks() const { return K_; }
    std::uint32_t privacy_threshold() const { return T_; }
    std::uint32_t num_servers() const { return K_ + T_; }
    const std::vector<FieldElement>& beta() const { return beta_; }
    const std::vector<FieldElement>& alpha() const { return alpha_; }

    // Lagrange basis over the alpha points evaluated at z; sums to one, and
    // collapses to a Kronecker delta when z is itself an alpha point.
    std::vector<FieldElement> lagrange_coefficients(const FieldElement& z) const {
        return basis_all(alpha_, alpha_denom_inv_, z);
    }

    // Lagrange basis over the beta points at z (data + randomness slots).
    std::vector<FieldElement> beta_basis_at(const FieldElement& z) const {
        return basis_all(beta_, beta_denom_inv_, z);
    }

    // Precomputed beta-basis value l_j(alpha_theta) (0-based j, theta).
    const FieldElement& beta_basis_at_alpha(std::size_t j, std::size_t theta) const {
        return beta_basis_at_alpha_[j][theta];
    }

  private:
    static std::vector<FieldElement> basis_denominators(const std::vector<FieldElement>& pts) {
        const PrimeField& f = pts[0].field();
        std::vector<FieldElement> denom;
        denom.reserve(pts.size());
        for (std::size_t j = 0; j < pts.size(); j++) {
            FieldElement d = f.one();
            for (std::size_t k = 0; k < pts.size(); k++)
                if (k != j) d *= pts[j] - pts[k];
            denom.push_back(d);
        }
        return batch_inverse(denom);
    }

    static FieldElement basis_value(const std::vector<FieldElement>& pts,
                                    const std::vector<FieldElement>& denom_inv, std::size_t j,
                                    const FieldElement& z) {
        FieldElement num = z.field().one();
        for (std::size_t k = 0; k < pts.size(); k++)
            if (k != j) num *= z - pts[k];
        return num * denom_inv[j];
    }

    // All basis values at z via prefix/suffix products; no runtime inversion.
    static std::vector<FieldElement> basis_all(const std::vector<FieldElement>& pts,
                                               const std::vector<FieldElement>& denom_inv,
                                               const FieldElement& z) {
        const std::size_t n = pts.size();
        const PrimeField& f = z.field();
        std::vector<FieldElement> diff;
        diff.reserve(n);
        for (const auto& p : pts) diff.push_back(z - p);
        std::vector<FieldElement> prefix(n + 1, f.one()), suffix(n + 1, f.one());
        for (std::size_t i = 0; i < n; i++) prefix[i + 1] = prefix[i] * diff[i];
        for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * diff[i];
        std::vector<FieldElement> out;
        out.reserve(n);
        for (std::size_t j = 0; j < n; j++) out.push_back(prefix[j] * suffix[j + 1] * denom_inv[j]);
        return out;
    }

    const PrimeField* field_;
    std::uint32_t K_, T_;
    std::vector<FieldElement> beta_, alpha_;
    std::vector<FieldElement> beta_denom_inv_, alpha_denom_inv_;
    std::vector<std::vector<FieldElement>> beta_basis_at_alpha_;
};

// One server's share: u(alpha_theta), element-wise over the payload.
struct ShareVector {
    std::uint32_t server = 0;  // 1-based
    std::vector<FieldElement> payload;
};

// Shares K equal-length chunks under T explicit randomness vectors.
// Randomness is caller input so protocols and audits control it directly.
inline std::vector<ShareVector> share(const SharingParams& params,
                                      const std::vector<std::vector<FieldElement>>& chunks,
                                      const std::vector<std::vector<FieldElement>>& randomness) {
    const std::uint32_t K = params.data_chunks(), T = params.privacy_threshold();
    const std::uint32_t N = params.num_servers();
    if (chunks.size() != K) throw SharingError("expected K data chunks");
    if (randomness.size() != T) throw SharingError("expected T randomness vectors");
    if (chunks[0].empty()) throw SharingError("chunks must be non-empty");
    const std::size_t len = chunks[0].size();
    for (const auto& c : chunks)
        if (c.size() != len) throw SharingError("chunks must have equal length");
    for (const auto& r : randomness)
        if (r.size() != len) throw SharingError("randomness must match the chunk length");

    std::vector<ShareVector> out(N);
    for (std::uint32_t theta = 0; theta < N; theta++) {
        std::vector<FieldElement> acc(len, params.field().zero());
        for (std::uint32_t j = 0; j < K + T; j++) {
            const auto& vec = j < K ? chunks[j] : randomness[j - K];
            const FieldElement& coef = params.beta_basis_at_alpha(j, theta);
            for (std::size_t i = 0; i < len; i++) acc[i] += coef * vec[i];
        }
        out[theta] = ShareVector{theta + 1, std::move(acc)};
    }
    return out;
}

// Evaluates the shared polynomial at z from all N shares.
inline std::vector<FieldElement> reconstruct_at(const SharingParams& params,
                                                const std::vector<ShareVector>& shares,
                                                const FieldElement& z) {
    if (shares.size() != params.num_servers())
        throw SharingError("reconstruction needs shares from all servers");
    const std::size_t len = shares[0].payload.size();
    for (const auto& s : shares)
        if (s.payload.size() != len) throw SharingError("shares must have equal length");
    std::vector<FieldElement> coeffs = params.lagrange_coefficients(z);
    std::vector<FieldElement> acc(len, params.field().zero());
    for (std::size_t theta = 0; theta < shares.size(); theta++)
        for (std::size_t i = 0; i < len; i++) acc[i] += coeffs[theta] * shares[theta].payload[i];
    return acc;
}

struct PqMatrices {
    std::vector<std::vector<FieldElement>> p;  // K x T
    std::vector<std::vector<FieldElement>> q;  // T x T
};

// Share-mixing matrices over the first T evaluation points: row i of [P; Q]
// is the beta-basis polynomial l_i evaluated there. Q is invertible for any
// valid parameter set, which is what makes T colluding views simulatable.
inline PqMatrices pq_matrices(const SharingParams& params) {
    const std::uint32_t K = params.data_chunks(), T = params.privacy_threshold();
    PqMatrices out;
    out.p.resize(K);
    for (std::uint32_t i = 0; i < K; i++)
        for (std::uint32_t j = 0; j < T; j++) out.p[i].push_back(params.beta_basis_at_alpha(i, j));
    out.q.resize(T);
    for (std::uint32_t i = 0; i < T; i++)
        for (std::uint32_t j = 0; j < T; j++)
            out.q[i].push_back(params.beta_basis_at_alpha(K + i, j));
    return out;
}

}  // namespace proofmesh
