#include "proofmesh/field.hpp"

#include <vector>

#include "gtest/gtest.h"

#include "proofmesh/rng.hpp"

namespace proofmesh {
namespace {

FieldElement random_element(const PrimeField& f, Rng& rng) {
    return f.element(rng.below(f.modulus()));
}

FieldElement random_nonzero(const PrimeField& f, Rng& rng) {
    return f.element(1 + rng.below(f.modulus() - 1));
}

TEST(PrimeField, BuiltinsVerify) {
    EXPECT_EQ(PrimeField::test17().modulus(), 17u);
    EXPECT_EQ(PrimeField::test17().two_adicity(), 4u);
    EXPECT_EQ(PrimeField::test17().generator_value(), 3u);
    EXPECT_EQ(PrimeField::desk().modulus(), 2013265921u);
    EXPECT_EQ(PrimeField::desk().two_adicity(), 27u);
    EXPECT_EQ(PrimeField::desk().generator_value(), 31u);
}

TEST(PrimeField, ConstructorRejectsBadConstants) {
    EXPECT_THROW(PrimeField(15, 1, 2), FieldError);   // composite
    EXPECT_THROW(PrimeField(17, 3, 3), FieldError);   // wrong adicity
    EXPECT_THROW(PrimeField(17, 4, 4), FieldError);   // 4 has order 4, not 16
    EXPECT_THROW(PrimeField(17, 4, 0), FieldError);
}

TEST(FieldElement, KnownAnswers17) {
    const PrimeField& f = PrimeField::test17();
    EXPECT_EQ((f.element(5) + f.element(13)).value(), 1u);
    EXPECT_EQ((f.element(3) * f.element(6)).value(), 1u);
    EXPECT_EQ((-f.element(0)).value(), 0u);
    EXPECT_EQ(f.element(4).inv().value(), 13u);
    EXPECT_EQ(f.element(1).inv().value(), 1u);
    EXPECT_EQ(f.element(16).inv().value(), 16u);
    EXPECT_EQ(f.element(4).pow(2).value(), 16u);
    EXPECT_EQ(f.element(4).pow(4).value(), 1u);
    EXPECT_EQ(f.element(0).pow(0).value(), 1u);
}

TEST(FieldElement, CanonicalOnConstruction) {
    const PrimeField& f = PrimeField::test17();
    EXPECT_EQ(f.element(17).value(), 0u);
    EXPECT_EQ(f.element(100).value(), 15u);
}

TEST(FieldElement, InverseOfZeroRejected) {
    EXPECT_THROW(PrimeField::test17().zero().inv(), FieldError);
}

TEST(FieldElement, MixedFieldsRejected) {
    FieldElement a = PrimeField::test17().element(2);
    FieldElement b = PrimeField::desk().element(2);
    EXPECT_THROW(a + b, FieldError);
    EXPECT_THROW(a * b, FieldError);
    EXPECT_THROW(a - b, FieldError);
}

TEST(FieldElement, AlgebraicPropertiesRandomized) {
    Rng rng(2024);
    for (const PrimeField* f : {&PrimeField::test17(), &PrimeField::desk()}) {
        for (int iter = 0; iter < 200; iter++) {
            FieldElement x = random_element(*f, rng);
            FieldElement y = random_element(*f, rng);
            FieldElement z = random_element(*f, rng);
            EXPECT_EQ(x + y, y + x);
            EXPECT_EQ(x * y, y * x);
            EXPECT_EQ((x + y) + z, x + (y + z));
            EXPECT_EQ((x * y) * z, x * (y * z));
            EXPECT_EQ(x * (y + z), x * y + x * z);
            EXPECT_EQ(x + (-x), f->zero());
            FieldElement nz = random_nonzero(*f, rng);
            EXPECT_EQ(nz * nz.inv(), f->one());
        }
    }
}

TEST(PrimeField, RootOfUnityOrders) {
    const PrimeField& f17 = PrimeField::test17();
    FieldElement w4 = f17.root_of_unity(4);
    EXPECT_EQ(w4.pow(4), f17.one());
    EXPECT_NE(w4.pow(2), f17.one());
    EXPECT_THROW(f17.root_of_unity(32), FieldError);
    EXPECT_THROW(f17.root_of_unity(3), FieldError);
    EXPECT_EQ(f17.root_of_unity(1), f17.one());

    // Half-order power is -1 for every order n >= 2, in both fields.
    for (const PrimeField* f : {&f17, &PrimeField::desk()}) {
        for (std::uint64_t n = 2; n <= (1ULL << f->two_adicity()) && n <= 1024; n *= 2) {
            FieldElement w = f->root_of_unity(n);
            EXPECT_EQ(w.pow(n / 2).value(), f->modulus() - 1);
        }
    }
}

TEST(BatchInverse, MatchesElementwise) {
    const PrimeField& f = PrimeField::test17();
    std::vector<FieldElement> in = {f.element(4), f.element(3)};
    std::vector<FieldElement> out = batch_inverse(in);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0].value(), 13u);
    EXPECT_EQ(out[1].value(), 6u);

    Rng rng(7);
    for (const PrimeField* fld : {&PrimeField::test17(), &PrimeField::desk()}) {
        std::vector<FieldElement> xs;
        for (int i = 0; i < 50; i++) xs.push_back(random_nonzero(*fld, rng));
        std::vector<FieldElement> batch = batch_inverse(xs);
        for (std::size_t i = 0; i < xs.size(); i++) EXPECT_EQ(batch[i], xs[i].inv());
    }
}

TEST(BatchInverse, EmptyAndZeroInputs) {
    const PrimeField& f = PrimeField::test17();
    EXPECT_TRUE(batch_inverse({}).empty());
    std::vector<FieldElement> with_zero = {f.element(3), f.element(0), f.element(5)};
    try {
        batch_inverse(with_zero);
        FAIL() << "zero input must be rejected";
    } catch (const FieldError& e) {
        EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos);
    }
}

TEST(BatchInverse, CostsOneInversion) {
    const PrimeField& f = PrimeField::desk();
    std::vector<FieldElement> xs;
    Rng rng(99);
    for (int i = 0; i < 64; i++) xs.push_back(random_nonzero(f, rng));
    OpCounter counter;
    {
        ScopedCounting scope(counter);
        batch_inverse(xs);
    }
    EXPECT_EQ(counter.total().inv, 1u);
    EXPECT_EQ(counter.total().mul, 3u * (xs.size() - 1));
}

}  // namespace
}  // namespace proofmesh
