#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proofmesh/errors.hpp"
#include "proofmesh/opcount.hpp"

namespace proofmesh {

class FieldElement;

// Prime field F_p for odd p < 2^32 with a known power-of-two subgroup.
// The built-in instances embed generators found by tools/find_generator.py;
// the constructor re-verifies every embedded constant, so a bad edit fails
// fast at startup rather than corrupting results downstream.
class PrimeField {
  public:
    PrimeField(std::uint64_t modulus, std::uint32_t two_adicity, std::uint64_t generator)
        : p_(modulus), two_adicity_(two_adicity), generator_(generator) {
        if (p_ < 3 || p_ >= (1ULL << 32)) throw FieldError("modulus out of supported range");
        if (!is_prime(p_)) throw FieldError("modulus " + std::to_string(p_) + " is not prime");
        std::uint64_t odd = p_ - 1;
        std::uint32_t adicity = 0;
        while (odd % 2 == 0) {
            odd /= 2;
            adicity++;
        }
        if (adicity != two_adicity_)
            throw FieldError("two-adicity of " + std::to_string(p_) + " is " + std::to_string(adicity));
        if (generator_ == 0 || generator_ >= p_) throw FieldError("generator out of range");
        // Full multiplicative order is checked against the factorization of p-1.
        for (std::uint64_t q : prime_factors(p_ - 1)) {
            if (pow_raw(generator_, (p_ - 1) / q) == 1)
                throw FieldError(std::to_string(generator_) + " does not generate F_" + std::to_string(p_));
        }
    }

    // 16-element test field; small enough for exhaustive enumeration.
    static const PrimeField& test17() {
        static const PrimeField f(17, 4, 3);
        return f;
    }

    // 15 * 2^27 + 1, the working prime for realistic transform sizes.
    static const PrimeField& desk() {
        static const PrimeField& f = desk_instance();
        return f;
    }

    std::uint64_t modulus() const { return p_; }
    std::uint32_t two_adicity() const { return two_adicity_; }
    std::uint64_t generator_value() const { return generator_; }

    inline FieldElement element(std::uint64_t value) const;
    inline FieldElement zero() const;
    inline FieldElement one() const;
    inline FieldElement generator() const;

    // Primitive root of unity of the given power-of-two order.
    inline FieldElement root_of_unity(std::uint64_t order) const;

    bool operator==(const PrimeField& o) const { return this == &o || p_ == o.p_; }

    // Raw helpers: modular arithmetic on canonical residues, no op counting.
    std::uint64_t add_raw(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub_raw(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
    std::uint64_t pow_raw(std::uint64_t base, std::uint64_t exp) const {
        std::uint64_t acc = 1, cur = base % p_;
        while (exp) {
            if (exp & 1) acc = mul_raw(acc, cur);
            cur = mul_raw(cur, cur);
            exp >>= 1;
        }
        return acc;
    }
    std::uint64_t inv_raw(std::uint64_t a) const {
        // Extended Euclid; one counted inversion regardless of internal steps.
        if (a == 0) throw FieldError("inverse of zero");
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(t);
    }

  private:
    static const PrimeField& desk_instance() {
        static const PrimeField f(2013265921, 27, 31);
        return f;
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; d++)
            if (n % d == 0) return false;
        return true;
    }

    static std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
        std::vector<std::uint64_t> out;
        for (std::uint64_t d = 2; d * d <= n; d++) {
            if (n % d == 0) {
                out.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) out.push_back(n);
        return out;
    }

    std::uint64_t p_;
    std::uint32_t two_adicity_;
    std::uint64_t generator_;
};

// Canonical residue in [0, p) tied to its field. Operations between
// elements of different fields are rejected, not coerced.
class FieldElement {
  public:
    FieldElement() : v_(0), f_(nullptr) {}
    FieldElement(std::uint64_t value, const PrimeField& field)
        : v_(value % field.modulus()), f_(&field) {}

    std::uint64_t value() const { return v_; }
    const PrimeField& field() const {
        if (!f_) throw FieldError("use of an empty field element");
        return *f_;
    }
    bool valid() const { return f_ != nullptr; }

    FieldElement operator+(const FieldElement& o) const {
        check_same(o);
        detail::tick_add();
        return raw(f_->add_raw(v_, o.v_));
    }
    FieldElement operator-(const FieldElement& o) const {
        check_same(o);
        detail::tick_add();
        return raw(f_->sub_raw(v_, o.v_));
    }
    FieldElement operator*(const FieldElement& o) const {
        check_same(o);
        detail::tick_mul();
        return raw(f_->mul_raw(v_, o.v_));
    }
    FieldElement operator-() const {
        field();
        return raw(v_ == 0 ? 0 : f_->modulus() - v_);
    }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inv() const {
        field();
        if (v_ == 0) throw FieldError("inverse of zero");
        detail::tick_inv();
        return raw(f_->inv_raw(v_));
    }

    // Square-and-multiply; pow(0, 0) = 1 by convention.
    FieldElement pow(std::uint64_t exp) const {
        field();
        FieldElement acc = raw(1), cur = *this;
        while (exp) {
            if (exp & 1) acc *= cur;
            cur *= cur;
            exp >>= 1;
        }
        return acc;
    }

    bool is_zero() const { return v_ == 0; }
    bool operator==(const FieldElement& o) const {
        if (f_ == nullptr || o.f_ == nullptr) return f_ == o.f_ && v_ == o.v_;
        check_same(o);
        return v_ == o.v_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

  private:
    FieldElement raw(std::uint64_t canonical) const {
        FieldElement e;
        e.v_ = canonical;
        e.f_ = f_;
        return e;
    }
    void check_same(const FieldElement& o) const {
        if (!f_ || !o.f_) throw FieldError("use of an empty field element");
        if (!(*f_ == *o.f_)) throw FieldError("elements belong to different fields");
    }

    std::uint64_t v_;
    const PrimeField* f_;
};

inline FieldElement PrimeField::element(std::uint64_t value) const { return FieldElement(value, *this); }
inline FieldElement PrimeField::zero() const { return FieldElement(0, *this); }
inline FieldElement PrimeField::one() const { return FieldElement(1, *this); }
inline FieldElement PrimeField::generator() const { return FieldElement(generator_, *this); }

inline FieldElement PrimeField::root_of_unity(std::uint64_t order) const {
    if (order == 0 || (order & (order - 1)) != 0)
        throw FieldError("root order must be a power of two");
    if (order > (1ULL << two_adicity_))
        throw FieldError("field has no root of unity of order " + std::to_string(order));
    std::uint64_t w = pow_raw(generator_, (p_ - 1) / order);
    // The result must have exact order `order`; anything else is a logic bug.
    if (pow_raw(w, order) != 1 || (order > 1 && pow_raw(w, order / 2) == 1))
        throw FieldError("derived root of unity fails the order check");
    return element(w);
}

// Inverts every element with one inversion and 3*(len-1) multiplications.
// Reports the index of the first zero input; empty input yields empty output.
inline std::vector<FieldElement> batch_inverse(const std::vector<FieldElement>& xs) {
    if (xs.empty()) return {};
    for (std::size_t i = 0; i < xs.size(); i++) {
        if (xs[i].is_zero())
            throw FieldError("batch inverse: zero input at index " + std::to_string(i));
    }
    std::vector<FieldElement> prefix(xs.size());
    prefix[0] = xs[0];
    for (std::size_t i = 1; i < xs.size(); i++) prefix[i] = prefix[i - 1] * xs[i];
    FieldElement walk = prefix.back().inv();
    std::vector<FieldElement> out(xs.size());
    for (std::size_t i = xs.size(); i-- > 1;) {
        out[i] = walk * prefix[i - 1];
        walk *= xs[i];
    }
    out[0] = walk;
    return out;
}

}  // namespace proofmesh
