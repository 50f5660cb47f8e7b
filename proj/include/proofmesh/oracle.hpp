#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proofmesh/errors.hpp"
#include "proofmesh/field.hpp"

namespace proofmesh {

// Brute-force reference implementations. These deliberately avoid the fast
// transform and interpolation paths so disagreements point at real bugs.
// All are guarded to small sizes; they exist for checking, not for use.

inline constexpr std::size_t kOracleSizeLimit = 4096;

namespace oracle {

inline void check_size(std::size_t n) {
    if (n > kOracleSizeLimit)
        throw Error("oracle guard: size " + std::to_string(n) + " exceeds " +
                    std::to_string(kOracleSizeLimit));
}

// out[i] = sum_u coeffs[u] * root^(i*u), by direct summation.
inline std::vector<FieldElement> naive_dft(const std::vector<FieldElement>& coeffs,
                                           const FieldElement& root) {
    check_size(coeffs.size());
    const PrimeField& f = root.field();
    std::vector<FieldElement> out;
    out.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); i++) {
        FieldElement acc = f.zero();
        for (std::size_t u = 0; u < coeffs.size(); u++)
            acc += coeffs[u] * root.pow(static_cast<std::uint64_t>(i) * u);
        out.push_back(acc);
    }
    return out;
}

// Exact inverse of naive_dft: root^(-i*u) summation scaled by 1/n.
inline std::vector<FieldElement> naive_idft(const std::vector<FieldElement>& evals,
                                            const FieldElement& root) {
    check_size(evals.size());
    const PrimeField& f = root.field();
    FieldElement rinv = root.inv();
    FieldElement ninv = f.element(evals.size() % f.modulus()).inv();
    std::vector<FieldElement> out;
    out.reserve(evals.size());
    for (std::size_t i = 0; i < evals.size(); i++) {
        FieldElement acc = f.zero();
        for (std::size_t u = 0; u < evals.size(); u++)
            acc += evals[u] * rinv.pow(static_cast<std::uint64_t>(i) * u);
        out.push_back(acc * ninv);
    }
    return out;
}

// Horner evaluation of the polynomial at shift * root^i for each i.
inline std::vector<FieldElement> naive_coset_eval(const std::vector<FieldElement>& coeffs,
                                                  const FieldElement& shift,
                                                  const FieldElement& root) {
    check_size(coeffs.size());
    const PrimeField& f = root.field();
    std::vector<FieldElement> out;
    out.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); i++) {
        FieldElement x = shift * root.pow(i);
        FieldElement acc = f.zero();
        for (std::size_t u = coeffs.size(); u-- > 0;) acc = acc * x + coeffs[u];
        out.push_back(acc);
    }
    return out;
}

struct PolyDivision {
    std::vector<FieldElement> quotient;
    std::vector<FieldElement> remainder;
};

// Classic long division of dividend by divisor (coefficients low to high).
inline PolyDivision naive_poly_divide(const std::vector<FieldElement>& dividend,
                                      const std::vector<FieldElement>& divisor) {
    check_size(dividend.size());
    std::size_t dlen = divisor.size();
    while (dlen > 0 && divisor[dlen - 1].is_zero()) dlen--;
    if (dlen == 0) throw Error("polynomial division by zero");
    const PrimeField& f = divisor[0].field();
    FieldElement lead_inv = divisor[dlen - 1].inv();

    std::vector<FieldElement> rem = dividend;
    std::size_t rlen = rem.size();
    while (rlen > 0 && rem[rlen - 1].is_zero()) rlen--;
    if (rlen < dlen) return {{}, std::vector<FieldElement>(rem.begin(), rem.begin() + rlen)};

    std::vector<FieldElement> quot(rlen - dlen + 1, f.zero());
    for (std::size_t ii = rlen; ii >= dlen; ii--) {
        std::size_t i = ii - 1;
        FieldElement c = rem[i] * lead_inv;
        quot[i - (dlen - 1)] = c;
        for (std::size_t k = 0; k < dlen; k++) rem[i - (dlen - 1) + k] -= c * divisor[k];
    }
    rem.resize(dlen - 1, f.zero());
    return {quot, rem};
}

// Row rank over the field by Gaussian elimination.
inline std::size_t matrix_rank(std::vector<std::vector<FieldElement>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); c++) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) pivot++;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        FieldElement inv = rows[rank][c].inv();
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r == rank || rows[r][c].is_zero()) continue;
            FieldElement factor = rows[r][c] * inv;
            for (std::size_t k = c; k < cols; k++) rows[r][k] -= factor * rows[rank][k];
        }
        rank++;
    }
    return rank;
}

// Lagrange interpolation evaluated at z, O(n^2), arbitrary distinct nodes.
inline FieldElement naive_interpolate_at(const std::vector<FieldElement>& nodes,
                                         const std::vector<FieldElement>& values,
                                         const FieldElement& z) {
    if (nodes.size() != values.size()) throw Error("interpolation arity mismatch");
    check_size(nodes.size());
    const PrimeField& f = z.field();
    FieldElement acc = f.zero();
    for (std::size_t j = 0; j < nodes.size(); j++) {
        FieldElement term = values[j];
        for (std::size_t k = 0; k < nodes.size(); k++) {
            if (k == j) continue;
            term *= (z - nodes[k]) * (nodes[j] - nodes[k]).inv();
        }
        acc += term;
    }
    return acc;
}

}  // namespace oracle
}  // namespace proofmesh
