#include <doctest.h>

#include "vlab/field.hpp"
#include "vlab/unipoly.hpp"

using namespace vlab;

TEST_SUITE_BEGIN("fields");

namespace {

void check_axioms(const FieldPtr& F, int cases, std::uint64_t seed) {
    Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        FieldElem a = F->random(rng), b = F->random(rng), c = F->random(rng);
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
        CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
        CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        CHECK(F->add(a, F->zero()) == a);
        CHECK(F->mul(a, F->one()) == a);
        CHECK(F->is_zero(F->add(a, F->neg(a))));
        CHECK(F->sub(a, b) == F->add(a, F->neg(b)));
        if (!F->is_zero(b)) {
            CHECK(F->is_one(F->mul(b, F->inv(b))));
            CHECK(F->mul(F->div(a, b), b) == a);
        }
    }
}


FieldPtr ext_field(std::uint64_t p, int k, std::uint64_t seed) {
    auto f = random_irreducible(p, k, seed);
    std::vector<std::uint64_t> mod;
    for (const auto& c : f.coeffs()) mod.push_back(c.as_prime());
    return Field::extension(p, mod);
}

} // namespace

TEST_CASE("axioms hold over QQ, F_p and F_p^k (>= 1000 cases each)") {
    check_axioms(Field::rationals(), 1000, 1);
    check_axioms(Field::prime(32003), 1000, 2);
    check_axioms(Field::prime(5), 1000, 3);
    check_axioms(ext_field(32003, 2, 1), 1000, 4);
    check_axioms(ext_field(5, 3, 1), 1000, 5);
}

TEST_CASE("pow and frobenius") {
    auto F = Field::prime(32003);
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        FieldElem a = F->random_nonzero(rng);
        CHECK(F->is_one(F->pow(a, 32002))); // Fermat
        CHECK(F->frobenius(a) == a);        // x^p = x on the prime field
    }
}

TEST_CASE("extension field: frobenius is an automorphism fixing F_p") {
    auto E = ext_field(32003, 3, 2);
    auto F = Field::prime(32003);
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        FieldElem a = E->random(rng), b = E->random(rng);
        CHECK(E->frobenius(E->add(a, b)) == E->add(E->frobenius(a), E->frobenius(b)));
        CHECK(E->frobenius(E->mul(a, b)) == E->mul(E->frobenius(a), E->frobenius(b)));
    }
    for (int v = 0; v < 20; ++v) {
        FieldElem a = E->embed(*F, F->from_int(v));
        CHECK(E->frobenius(a) == a);
    }
    // frobenius iterated ext_degree times is the identity
    FieldElem a = E->random(rng);
    FieldElem b = a;
    for (int i = 0; i < E->ext_degree(); ++i) b = E->frobenius(b);
    CHECK(a == b);
}

TEST_CASE("embed is a ring homomorphism") {
    auto E = ext_field(101, 2, 3);
    auto F = Field::prime(101);
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        FieldElem a = F->random(rng), b = F->random(rng);
        CHECK(E->embed(*F, F->add(a, b)) == E->add(E->embed(*F, a), E->embed(*F, b)));
        CHECK(E->embed(*F, F->mul(a, b)) == E->mul(E->embed(*F, a), E->embed(*F, b)));
    }
    CHECK(E->embed(*F, F->one()) == E->one());
}

TEST_CASE("parse/print round trip") {
    for (const auto& F : {Field::rationals(), Field::prime(32003)}) {
        Rng rng(17);
        for (int i = 0; i < 200; ++i) {
            FieldElem a = F->random(rng);
            CHECK(F->parse(F->to_string(a)) == a);
        }
    }
    auto Q = Field::rationals();
    CHECK(Q->parse("-3/7") == Q->div(Q->from_int(-3), Q->from_int(7)));
    auto E = ext_field(32003, 2, 4);
    Rng rng(19);
    for (int i = 0; i < 100; ++i) {
        FieldElem a = E->random(rng);
        CHECK(E->parse(E->to_string(a)) == a);
    }
}

TEST_CASE("from_int is a homomorphism and names are stable") {
    auto F = Field::prime(32003);
    CHECK(F->from_int(-1) == F->sub(F->zero(), F->one()));
    CHECK(F->from_int(32003) == F->zero());
    CHECK(F->name() == "F(32003)");
    CHECK(Field::rationals()->name() == "QQ");
}

TEST_CASE("invalid constructions are rejected") {
    CHECK_THROWS_AS(Field::prime(32004), Error);        // composite
    CHECK_THROWS_AS(Field::extension(5, {4, 0, 1}), Error); // t^2+4=(t-1)(t+1) over F_5
    auto F = Field::prime(101);
    CHECK_THROWS_AS((void)F->inv(F->zero()), Error);
    CHECK_THROWS_AS((void)F->div(F->one(), F->zero()), Error);
}

TEST_CASE("primality test agrees with trial division below 2000") {
    auto slow = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime_u64(n) == slow(n));
    CHECK(is_prime_u64(32003));
    CHECK(!is_prime_u64(32001));
}

TEST_SUITE_END();
