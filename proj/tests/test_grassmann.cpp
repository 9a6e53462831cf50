#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbk/cocycle.hpp"
#include "gbk/errors.hpp"
#include "gbk/galg.hpp"
#include "gbk/grassmann.hpp"

using namespace gbk;

namespace {

Vec unit_vec(long dim, long i, Cyclotomic c = Cyclotomic(1)) {
    Vec v(dim);
    v[i] = std::move(c);
    return v;
}

AlgPtr fz2() {
    AbelianGroup z2 = AbelianGroup::parse("Z2");
    return twisted_group_algebra(z2, Cocycle::trivial(z2));
}

AlgPtr point_block() {
    AbelianGroup z1 = AbelianGroup::parse("Z1");
    AbelianGroup z2 = AbelianGroup::parse("Z2");
    auto emb = SubgroupEmbedding::from_generator_images(z1, z2, {0});
    return matrix_twisted(1, emb, Cocycle::trivial(z1), {0});
}

AlgPtr ut2() {
    AbelianGroup z2 = AbelianGroup::parse("Z2");
    std::vector<std::vector<SVec>> mult(3, std::vector<SVec>(3));
    auto set = [&](long i, long j, long k) { mult[i][j] = {{k, Cyclotomic(1)}}; };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 2, 1);
    set(2, 2, 2);
    return make_graded_algebra(z2, {"E11", "E12", "E22"}, mult, {0, 1, 0});
}

AlgPtr m2() {
    AbelianGroup z1 = AbelianGroup::parse("Z1");
    AbelianGroup z2 = AbelianGroup::parse("Z2");
    auto emb = SubgroupEmbedding::from_generator_images(z1, z2, {0});
    return matrix_twisted(2, emb, Cocycle::trivial(z1), {0, 1});
}

// unit u, odd x with x^2 = y and x^3 = 0
AlgPtr cubic_radical() {
    AbelianGroup z2 = AbelianGroup::parse("Z2");
    std::vector<std::vector<SVec>> mult(3, std::vector<SVec>(3));
    auto one = [](long t) { return SVec{{t, Cyclotomic(1)}}; };
    mult[0][0] = one(0);
    mult[0][1] = one(1);
    mult[1][0] = one(1);
    mult[0][2] = one(2);
    mult[2][0] = one(2);
    mult[1][1] = one(2);
    return make_graded_algebra(z2, {"u", "x", "y"}, mult, {0, 1, 0});
}

AlgPtr fz2_central_split() {
    AbelianGroup z2 = AbelianGroup::parse("Z2");
    std::vector<std::vector<SVec>> mult(4, std::vector<SVec>(4));
    auto one = [](long t) { return SVec{{t, Cyclotomic(1)}}; };
    mult[0][0] = one(0);
    mult[0][1] = one(1);
    mult[1][0] = one(1);
    mult[1][1] = one(0);
    mult[0][2] = one(2);
    mult[2][0] = one(2);
    mult[0][3] = one(3);
    mult[3][0] = one(3);
    mult[1][2] = one(3);
    mult[2][1] = one(3);
    mult[1][3] = one(2);
    mult[3][1] = one(2);
    return make_graded_algebra(z2, {"e", "u", "z", "zu"}, mult, {0, 1, 0, 1});
}

} // namespace

TEST_CASE("truncated exterior algebra basics") {
    TruncatedGrassmann e = truncated_grassmann(2);
    CHECK(e.dim() == 3);
    CHECK(e.parity(0b01) == 1);
    CHECK(e.parity(0b11) == 0);
    CHECK(truncated_grassmann(3).label(0b101) == "e1e3");
    CHECK(e.label(0b11) == "e1e2");
    auto [m12, c12] = e.basis_product(0b01, 0b10);
    CHECK(m12 == 0b11);
    CHECK(c12 == Cyclotomic(1));
    auto [m21, c21] = e.basis_product(0b10, 0b01);
    CHECK(m21 == 0b11);
    CHECK(c21 == Cyclotomic(-1));
    CHECK(e.basis_product(0b01, 0b01).second.is_zero());
    CHECK_THROWS_AS(truncated_grassmann(0), InputError);
    CHECK_THROWS_AS(truncated_grassmann(13), InputError);
}

TEST_CASE("interleaving signs") {
    TruncatedGrassmann e = truncated_grassmann(3);
    // e1e3 * e2 picks up one transposition
    CHECK(e.basis_product(0b101, 0b010).second == Cyclotomic(-1));
    // e1 * e2e3 is already sorted
    CHECK(e.basis_product(0b001, 0b110).second == Cyclotomic(1));
    // e2 * e1e3 moves e2 past e1
    CHECK(e.basis_product(0b010, 0b101).second == Cyclotomic(-1));
}

TEST_CASE("explicit exterior algebras are nilpotent of index k plus one") {
    for (long k = 2; k <= 4; ++k) {
        AlgPtr alg = truncated_grassmann(k).to_algebra();
        CHECK(alg->dim() == (1L << k) - 1);
        auto nd = nilpotency_index(alg);
        REQUIRE(nd.has_value());
        CHECK(*nd == k + 1);
    }
    CHECK_THROWS_AS(truncated_grassmann(8).to_algebra(), InputError);
}

TEST_CASE("even part is commutative") {
    TruncatedGrassmann e = truncated_grassmann(4);
    AlgPtr alg = e.to_algebra();
    for (long i = 0; i < alg->dim(); ++i)
        for (long j = 0; j < alg->dim(); ++j) {
            if (e.parity(i + 1) || e.parity(j + 1)) continue;
            CHECK(alg->basis_product(i, j) == alg->basis_product(j, i));
        }
}

TEST_CASE("envelope of a purely even algebra is its even tensor part") {
    AbelianGroup z2 = AbelianGroup::parse("Z2");
    std::vector<std::vector<SVec>> mult(1, std::vector<SVec>(1));
    mult[0][0] = {{0, Cyclotomic(1)}};
    AlgPtr f = make_graded_algebra(z2, {"u"}, mult, {0});
    EnvelopeAlgebra env = envelope(f, 4);
    // even nonempty subsets of a 4-element set
    CHECK(env.algebra->dim() == 7);
    CHECK(env.k == 4);
    for (long i = 0; i < 7; ++i)
        for (long j = 0; j < 7; ++j)
            CHECK(env.algebra->basis_product(i, j) == env.algebra->basis_product(j, i));
}

TEST_CASE("envelope of an odd square-zero line is square-zero") {
    AbelianGroup z2 = AbelianGroup::parse("Z2");
    std::vector<std::vector<SVec>> mult(1, std::vector<SVec>(1));
    AlgPtr v = make_graded_algebra(z2, {"v"}, mult, {1});
    EnvelopeAlgebra env = envelope(v, 3);
    CHECK(env.algebra->dim() == 4);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j)
            CHECK(env.algebra->basis_product(i, j).empty());
}

TEST_CASE("envelope keeps the head grading") {
    AbelianGroup g = AbelianGroup::parse("Z2xZ2");
    AlgPtr a = twisted_group_algebra(g, Cocycle::trivial(g));
    EnvelopeAlgebra env = envelope(a, 2);
    // two even source elements pair with the one even mask, two odd
    // source elements pair with the two odd masks
    CHECK(env.algebra->dim() == 6);
    CHECK(env.algebra->group() == AbelianGroup::parse("Z2"));
    for (long t = 0; t < 6; ++t) {
        auto [b, mask] = env.basis_pairs[t];
        std::vector<long> c = g.coords(a->degree(b));
        CHECK(env.algebra->degree(t) == c[0]);
        CHECK((__builtin_popcountll(mask) & 1) == c[1]);
    }
}

TEST_CASE("envelope splits over direct products") {
    AbelianGroup g = AbelianGroup::parse("Z2xZ2");
    AlgPtr b1 = twisted_group_algebra(g, Cocycle::trivial(g));
    AlgPtr p = algebra_direct_product({b1, b1});
    EnvelopeAlgebra whole = envelope(p, 2);
    EnvelopeAlgebra part = envelope(b1, 2);
    long half = part.algebra->dim();
    REQUIRE(whole.algebra->dim() == 2 * half);
    for (long i = 0; i < half; ++i)
        for (long j = 0; j < half; ++j) {
            CHECK(whole.algebra->basis_product(i, j) == part.algebra->basis_product(i, j));
            SVec shifted;
            for (const auto& [t, c] : part.algebra->basis_product(i, j))
                shifted.push_back({t + half, c});
            CHECK(whole.algebra->basis_product(half + i, half + j) == shifted);
            CHECK(whole.algebra->basis_product(i, half + j).empty());
            CHECK(whole.algebra->basis_product(half + i, j).empty());
        }
}

TEST_CASE("envelope rejects gradings without a parity factor") {
    AbelianGroup z3 = AbelianGroup::parse("Z3");
    AlgPtr a = twisted_group_algebra(z3, Cocycle::trivial(z3));
    CHECK_THROWS_AS(envelope(a, 2), InputError);
    AbelianGroup z23 = AbelianGroup::parse("Z2xZ3");
    AlgPtr b = twisted_group_algebra(z23, Cocycle::trivial(z23));
    CHECK_THROWS_AS(envelope(b, 2), InputError);
    CHECK_THROWS_AS(envelope(fz2(), 0), InputError);
}

TEST_CASE("radical nilpotency bound for the triangular fixture") {
    SplitInput split;
    split.ambient = ut2();
    split.blocks = {point_block(), point_block()};
    split.block_embeddings = {{unit_vec(3, 0)}, {unit_vec(3, 2)}};
    split.radical_basis = {unit_vec(3, 1)};
    NilpotencyReport rep = check_radical_nilpotency(split, 2);
    CHECK(rep.nd_radical == 2);
    CHECK(rep.nd_envelope == 2);
    CHECK(rep.bound_holds);
}

TEST_CASE("radical nilpotency bound for a zero radical") {
    SplitInput split;
    split.ambient = algebra_direct_product({fz2(), fz2()});
    split.blocks = {fz2(), fz2()};
    split.block_embeddings = {{unit_vec(4, 0), unit_vec(4, 1)},
                              {unit_vec(4, 2), unit_vec(4, 3)}};
    split.radical_basis = {};
    NilpotencyReport rep = check_radical_nilpotency(split, 4);
    CHECK(rep.nd_radical == 1);
    CHECK(rep.nd_envelope == 1);
}

TEST_CASE("radical nilpotency bound for a cubic radical of mixed parity") {
    SplitInput split;
    split.ambient = cubic_radical();
    split.blocks = {point_block()};
    split.block_embeddings = {{unit_vec(3, 0)}};
    split.radical_basis = {unit_vec(3, 1), unit_vec(3, 2)};
    for (long k : {2, 4, 6}) {
        NilpotencyReport rep = check_radical_nilpotency(split, k);
        CHECK(rep.nd_radical == 3);
        CHECK(rep.nd_envelope == 3);
    }
}

TEST_CASE("radical nilpotency bound for the central split") {
    SplitInput split;
    split.ambient = fz2_central_split();
    split.blocks = {fz2()};
    split.block_embeddings = {{unit_vec(4, 0), unit_vec(4, 1)}};
    split.radical_basis = {unit_vec(4, 2), unit_vec(4, 3)};
    NilpotencyReport rep = check_radical_nilpotency(split, 6);
    CHECK(rep.nd_radical == 2);
    CHECK(rep.nd_envelope == 2);
}

TEST_CASE("triple commutator identity") {
    SUBCASE("a commutative envelope satisfies it") {
        AbelianGroup z2 = AbelianGroup::parse("Z2");
        std::vector<std::vector<SVec>> mult(1, std::vector<SVec>(1));
        mult[0][0] = {{0, Cyclotomic(1)}};
        AlgPtr f = make_graded_algebra(z2, {"u"}, mult, {0});
        IdentityCheck r =
            check_triple_commutator_identity(envelope(f, 4).algebra, 6, 16);
        CHECK(r.holds);
        CHECK(r.trials_run == 16);
    }
    SUBCASE("commutators of the central split envelope are central") {
        AlgPtr env = envelope(fz2_central_split(), 2).algebra;
        IdentityCheck r = check_triple_commutator_identity(env, 6, 24);
        CHECK(r.holds);
    }
    SUBCASE("the matrix algebra is a counterexample") {
        IdentityCheck r = check_triple_commutator_identity(m2(), 6, 32);
        CHECK_FALSE(r.holds);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->size() == 6);
        REQUIRE(r.value.has_value());
        CHECK_FALSE(vec_is_zero(*r.value));
        // replaying the witness reproduces the nonzero value
        auto bracket = [&](const Vec& x, const Vec& y) {
            AlgPtr a = m2();
            return vec_sub(a->mul(x, y), a->mul(y, x));
        };
        AlgPtr a = m2();
        Vec c1 = bracket(bracket((*r.witness)[0], (*r.witness)[1]), (*r.witness)[2]);
        Vec c2 = bracket(bracket((*r.witness)[3], (*r.witness)[4]), (*r.witness)[5]);
        CHECK(a->mul(c1, c2) == *r.value);
    }
    SUBCASE("variable counts are validated") {
        CHECK_THROWS_AS(check_triple_commutator_identity(m2(), 5, 4), InputError);
        CHECK_THROWS_AS(check_triple_commutator_identity(m2(), 3, 4), InputError);
        CHECK_THROWS_AS(check_triple_commutator_identity(m2(), 8, 4), InputError);
        CHECK_NOTHROW(check_triple_commutator_identity(m2(), 9, 2));
    }
}
