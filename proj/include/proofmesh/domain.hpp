#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proofmesh/errors.hpp"
#include "proofmesh/field.hpp"

namespace proofmesh {

// Power-of-two evaluation domain S = {w^i} with an optional coset D = eta*S.
// Transforms are iterative radix-2 with bit-reversal reordering; an inverse
// transform of length M always carries the M^-1 factor. Twiddle tables are
// built once at construction.
class EvaluationDomain {
  public:
    EvaluationDomain(const PrimeField& field, std::size_t n,
                     std::optional<FieldElement> omega = std::nullopt,
                     std::optional<FieldElement> eta = std::nullopt)
        : field_(&field), n_(n) {
        if (n_ == 0 || (n_ & (n_ - 1)) != 0) throw DomainError("domain size must be a power of two");
        log2n_ = 0;
        while ((1ULL << log2n_) < n_) log2n_++;

        FieldElement w = omega ? *omega : field.root_of_unity(n_);
        if (omega) {
            if (!(w.field() == field)) throw DomainError("root of unity from a different field");
            if (w.pow(n_).value() != 1 || (n_ > 1 && w.pow(n_ / 2).value() == 1))
                throw DomainError(w.str() + " is not a primitive root of order " + std::to_string(n_));
        }
        omega_ = w;

        omega_pow_.reserve(n_);
        omega_inv_pow_.reserve(n_);
        FieldElement acc = field.one();
        for (std::size_t i = 0; i < n_; i++) {
            omega_pow_.push_back(acc);
            acc = acc * omega_;
        }
        omega_inv_pow_.push_back(field.one());
        for (std::size_t i = 1; i < n_; i++) omega_inv_pow_.push_back(omega_pow_[n_ - i]);
        n_inv_ = field.element(n_ % field.modulus()).inv();

        if (eta) {
            if (!(eta->field() == field)) throw DomainError("coset shift from a different field");
            if (eta->is_zero()) throw DomainError("coset shift must be nonzero");
            if (eta->pow(n_).value() == 1)
                throw DomainError("coset shift " + eta->str() + " lands on the base domain");
            eta_ = *eta;
            eta_pow_.reserve(n_);
            eta_inv_pow_.reserve(n_);
            FieldElement e = field.one();
            for (std::size_t i = 0; i < n_; i++) {
                eta_pow_.push_back(e);
                e = e * *eta_;
            }
            FieldElement einv = eta_->inv();
            e = field.one();
            for (std::size_t i = 0; i < n_; i++) {
                eta_inv_pow_.push_back(e);
                e = e * einv;
            }
        }
    }

    const PrimeField& field() const { return *field_; }
    std::size_t size() const { return n_; }
    std::uint32_t log2_size() const { return log2n_; }
    FieldElement omega() const { return omega_; }
    bool has_coset() const { return eta_.has_value(); }
    FieldElement eta() const {
        require_coset();
        return *eta_;
    }

    // w^i for any i (reduced mod n).
    FieldElement omega_pow(std::uint64_t i) const { return omega_pow_[i % n_]; }
    FieldElement omega_inv_pow(std::uint64_t i) const { return omega_inv_pow_[i % n_]; }
    FieldElement eta_pow(std::uint64_t i) const {
        require_coset();
        return i < n_ ? eta_pow_[i] : eta_->pow(i);
    }
    FieldElement eta_inv_pow(std::uint64_t i) const {
        require_coset();
        return i < n_ ? eta_inv_pow_[i] : eta_->inv().pow(i);
    }

    FieldElement element(std::size_t i) const { return omega_pow(i); }
    FieldElement coset_element(std::size_t i) const {
        require_coset();
        return *eta_ * omega_pow(i);
    }

    // out[i] = sum_u coeffs[u] * w^(i*u).
    std::vector<FieldElement> fft(std::vector<FieldElement> coeffs) const {
        check_len(coeffs);
        transform(coeffs, omega_pow_);
        return coeffs;
    }

    // Exact inverse of fft; carries the 1/n factor.
    std::vector<FieldElement> ifft(std::vector<FieldElement> evals) const {
        check_len(evals);
        transform(evals, omega_inv_pow_);
        for (auto& v : evals) v *= n_inv_;
        return evals;
    }

    // out[i] = poly(eta * w^i): scale coefficient u by eta^u, then fft.
    std::vector<FieldElement> coset_fft(std::vector<FieldElement> coeffs) const {
        require_coset();
        check_len(coeffs);
        for (std::size_t i = 0; i < n_; i++) coeffs[i] *= eta_pow_[i];
        transform(coeffs, omega_pow_);
        return coeffs;
    }

    std::vector<FieldElement> coset_ifft(std::vector<FieldElement> evals) const {
        require_coset();
        check_len(evals);
        transform(evals, omega_inv_pow_);
        for (std::size_t i = 0; i < n_; i++) {
            evals[i] *= n_inv_;
            evals[i] *= eta_inv_pow_[i];
        }
        return evals;
    }

    // (x^n - 1) evaluated over the coset: the constant eta^n - 1, n times.
    std::vector<FieldElement> target_eval_on_coset() const {
        require_coset();
        FieldElement c = eta_->pow(n_) - field_->one();
        if (c.is_zero()) throw DomainError("target polynomial vanishes on the coset");
        return std::vector<FieldElement>(n_, c);
    }

    // Subdomain of the K-strided labels: size n/K, root w^K, shift eta^K.
    EvaluationDomain subdomain(std::size_t K) const {
        if (K == 0 || n_ % K != 0) throw DomainError("stride must divide the domain size");
        std::size_t m = n_ / K;
        std::optional<FieldElement> sub_eta;
        if (eta_) sub_eta = eta_->pow(K);
        return EvaluationDomain(*field_, m, omega_.pow(K), sub_eta);
    }

  private:
    void require_coset() const {
        if (!eta_) throw DomainError("domain has no coset shift");
    }
    void check_len(const std::vector<FieldElement>& v) const {
        if (v.size() != n_) throw DomainError("vector length does not match domain size");
    }

    // In-place radix-2 transform over the given twiddle table.
    void transform(std::vector<FieldElement>& a, const std::vector<FieldElement>& pow) const {
        const std::size_t n = n_;
        for (std::size_t i = 1, j = 0; i < n; i++) {
            std::size_t bit = n >> 1;
            for (; j & bit; bit >>= 1) j ^= bit;
            j ^= bit;
            if (i < j) std::swap(a[i], a[j]);
        }
        for (std::size_t len = 2; len <= n; len <<= 1) {
            const std::size_t step = n / len;
            for (std::size_t i = 0; i < n; i += len) {
                for (std::size_t j = 0; j < len / 2; j++) {
                    FieldElement u = a[i + j];
                    FieldElement v = a[i + j + len / 2] * pow[step * j];
                    a[i + j] = u + v;
                    a[i + j + len / 2] = u - v;
                }
            }
        }
    }

    const PrimeField* field_;
    std::size_t n_;
    std::uint32_t log2n_;
    FieldElement omega_;
    FieldElement n_inv_;
    std::optional<FieldElement> eta_;
    std::vector<FieldElement> omega_pow_, omega_inv_pow_;
    std::vector<FieldElement> eta_pow_, eta_inv_pow_;
};

// chunks[j][t] = x[K*t + j]; the j-th decimated subsequence.
inline std::vector<std::vector<FieldElement>> stride_partition(const std::vector<FieldElement>& x,
                                                               std::size_t K) {
    if (K == 0 || x.size() % K != 0) throw DomainError("stride must divide the vector length");
    std::size_t m = x.size() / K;
    std::vector<std::vector<FieldElement>> chunks(K);
    for (std::size_t j = 0; j < K; j++) {
        chunks[j].reserve(m);
        for (std::size_t t = 0; t < m; t++) chunks[j].push_back(x[K * t + j]);
    }
    return chunks;
}

inline std::vector<FieldElement> stride_unpartition(const std::vector<std::vector<FieldElement>>& chunks) {
    if (chunks.empty()) throw DomainError("no chunks to interleave");
    std::size_t K = chunks.size(), m = chunks[0].size();
    for (const auto& c : chunks)
        if (c.size() != m) throw DomainError("chunks must have equal length");
    std::vector<FieldElement> x(K * m);
    for (std::size_t j = 0; j < K; j++)
        for (std::size_t t = 0; t < m; t++) x[K * t + j] = chunks[j][t];
    return x;
}

}  // namespace proofmesh
