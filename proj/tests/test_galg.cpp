#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbk/errors.hpp"
#include "gbk/galg.hpp"

using gbk::AbelianGroup;
using gbk::AlgebraKind;
using gbk::AlgPtr;
using gbk::Cocycle;
using gbk::Cyclotomic;
using gbk::GradedAlgebra;
using gbk::InputError;
using gbk::rat_of;
using gbk::RowSpan;
using gbk::SubgroupEmbedding;
using gbk::SVec;
using gbk::Vec;
using gbk::Verdict3;
using gbk::VerificationError;

namespace {

Cocycle quaternion_cocycle() {
    AbelianGroup h({2, 2});
    std::vector<Cyclotomic> table(16, Cyclotomic(1));
    for (long x = 0; x < 4; ++x)
        for (long y = 0; y < 4; ++y) {
            auto cx = h.coords(x), cy = h.coords(y);
            if (cx[1] * cy[0] % 2 != 0) table[x * 4 + y] = Cyclotomic(-1);
        }
    return Cocycle(h, std::move(table));
}

Cocycle sign_cocycle_z2() {
    AbelianGroup h({2});
    std::vector<Cyclotomic> t(4, Cyclotomic(1));
    t[1 * 2 + 1] = Cyclotomic(-1);
    return Cocycle(h, std::move(t));
}

// Upper triangular 2x2 matrices graded by Z2 with E_12 in the odd part.
AlgPtr ut2() {
    AbelianGroup z2({2});
    std::vector<std::vector<SVec>> mult(3, std::vector<SVec>(3));
    // basis 0 = E_11, 1 = E_12, 2 = E_22
    mult[0][0] = {{0, Cyclotomic(1)}};
    mult[0][1] = {{1, Cyclotomic(1)}};
    mult[1][2] = {{1, Cyclotomic(1)}};
    mult[2][2] = {{2, Cyclotomic(1)}};
    return gbk::make_graded_algebra(z2, {"E11", "E12", "E22"}, std::move(mult),
                                    {0, 1, 0});
}

AlgPtr field_algebra() {
    AbelianGroup z1 = AbelianGroup::trivial();
    return gbk::twisted_group_algebra(z1, Cocycle::trivial(z1));
}

Vec unit_vec(long dim, long i, Cyclotomic c = Cyclotomic(1)) {
    Vec v(dim);
    v[i] = std::move(c);
    return v;
}

} // namespace

TEST_CASE("twisted group algebra over Z2") {
    AbelianGroup z2({2});
    auto plain = gbk::twisted_group_algebra(z2, Cocycle::trivial(z2));
    CHECK(plain->dim() == 2);
    CHECK(plain->kind() == AlgebraKind::twisted_group);
    CHECK(plain->label(0) == "eta_e");
    CHECK(plain->label(1) == "eta_1");
    CHECK(plain->degree(1) == 1);
    CHECK(plain->mul(unit_vec(2, 1), unit_vec(2, 1)) == unit_vec(2, 0));

    auto sgn = gbk::twisted_group_algebra(z2, sign_cocycle_z2());
    CHECK(sgn->mul(unit_vec(2, 1), unit_vec(2, 1)) == unit_vec(2, 0, Cyclotomic(-1)));
    auto u = gbk::unit_of(*sgn);
    REQUIRE(u.has_value());
    CHECK(*u == unit_vec(2, 0));
}

TEST_CASE("scaled cocycle moves the unit") {
    AbelianGroup z2({2});
    std::vector<Cyclotomic> t(4, Cyclotomic(2));
    Cocycle sigma(z2, std::move(t));
    auto a = gbk::twisted_group_algebra(z2, sigma);
    auto u = gbk::unit_of(*a);
    REQUIRE(u.has_value());
    CHECK(*u == unit_vec(2, 0, Cyclotomic(rat_of(1, 2))));
}

TEST_CASE("twisted algebras are division graded") {
    AbelianGroup groups[] = {AbelianGroup({2}), AbelianGroup({4}), AbelianGroup({2, 2})};
    std::vector<Cocycle> cocycles;
    cocycles.push_back(sign_cocycle_z2());
    cocycles.push_back(Cocycle::trivial(AbelianGroup({4})));
    cocycles.push_back(quaternion_cocycle());
    for (size_t c = 0; c < cocycles.size(); ++c) {
        const Cocycle& sigma = cocycles[c];
        const AbelianGroup& h = sigma.group();
        auto a = gbk::twisted_group_algebra(h, sigma);
        auto u = gbk::unit_of(*a);
        REQUIRE(u.has_value());
        for (long g = 0; g < h.order(); ++g) {
            long gi = h.inverse(g);
            Cyclotomic coeff =
                (sigma.value(g, gi) * sigma.value(h.identity(), h.identity())).inv();
            Vec candidate = unit_vec(a->dim(), gi, coeff);
            CHECK(a->mul(unit_vec(a->dim(), g), candidate) == *u);
            CHECK(a->mul(candidate, unit_vec(a->dim(), g)) == *u);
        }
    }
}

TEST_CASE("quaternion twisted algebra") {
    auto q = gbk::twisted_group_algebra(AbelianGroup({2, 2}), quaternion_cocycle());
    CHECK(q->dim() == 4);
    // eta_{(0,1)} eta_{(1,0)} = -eta_{(1,1)} while the reverse product is +.
    CHECK(q->mul(unit_vec(4, 1), unit_vec(4, 2)) == unit_vec(4, 3, Cyclotomic(-1)));
    CHECK(q->mul(unit_vec(4, 2), unit_vec(4, 1)) == unit_vec(4, 3));
    auto rad = gbk::jacobson_radical(q);
    CHECK(rad.span.dim() == 0);
    auto s = gbk::is_graded_simple(q);
    CHECK(s.verdict == Verdict3::yes);
}

TEST_CASE("matrix twisted over the trivial group") {
    AbelianGroup z1 = AbelianGroup::trivial();
    auto emb = SubgroupEmbedding::identity(z1);
    auto m2 = gbk::matrix_twisted(2, emb, Cocycle::trivial(z1), {0, 0});
    REQUIRE(m2->dim() == 4);
    CHECK(m2->kind() == AlgebraKind::matrix_twisted);
    CHECK(m2->label(gbk::twisted_basis_index(*m2, 0, 1, 0)) == "E_{1,2}.e");
    long e12 = gbk::twisted_basis_index(*m2, 0, 1, 0);
    long e21 = gbk::twisted_basis_index(*m2, 1, 0, 0);
    long e11 = gbk::twisted_basis_index(*m2, 0, 0, 0);
    long e22 = gbk::twisted_basis_index(*m2, 1, 1, 0);
    CHECK(m2->mul(unit_vec(4, e12), unit_vec(4, e21)) == unit_vec(4, e11));
    CHECK(gbk::vec_is_zero(m2->mul(unit_vec(4, e12), unit_vec(4, e12))));
    auto u = gbk::unit_of(*m2);
    REQUIRE(u.has_value());
    Vec want(4);
    want[e11] = Cyclotomic(1);
    want[e22] = Cyclotomic(1);
    CHECK(*u == want);
    CHECK(gbk::jacobson_radical(m2).span.dim() == 0);
    CHECK(!gbk::nilpotency_index(m2).has_value());
    CHECK(gbk::is_graded_simple(m2).verdict == Verdict3::yes);
}

TEST_CASE("elementary grading from the tuple") {
    AbelianGroup z2({2});
    AbelianGroup z1 = AbelianGroup::trivial();
    auto emb = SubgroupEmbedding::from_generator_images(z1, z2, {0});
    auto a = gbk::matrix_twisted(2, emb, Cocycle::trivial(z1), {0, 1});
    CHECK(a->group() == z2);
    CHECK(a->degree(gbk::twisted_basis_index(*a, 0, 0, 0)) == 0);
    CHECK(a->degree(gbk::twisted_basis_index(*a, 1, 1, 0)) == 0);
    CHECK(a->degree(gbk::twisted_basis_index(*a, 0, 1, 0)) == 1);
    CHECK(a->degree(gbk::twisted_basis_index(*a, 1, 0, 0)) == 1);
}

TEST_CASE("matrix twisted with a genuine subgroup") {
    AbelianGroup z4({4});
    AbelianGroup z2({2});
    // Z2 embeds in Z4 by doubling.
    auto emb = SubgroupEmbedding::from_generator_images(z2, z4, {2});
    auto a = gbk::matrix_twisted(2, emb, sign_cocycle_z2(), {0, 1});
    CHECK(a->dim() == 8);
    // deg(E_12 eta_1) = -0 + emb(1) + 1 = 3 in Z4.
    CHECK(a->degree(gbk::twisted_basis_index(*a, 0, 1, 1)) == 3);
    long i1 = gbk::twisted_basis_index(*a, 0, 1, 1);
    long i2 = gbk::twisted_basis_index(*a, 1, 0, 1);
    // (E_12 eta_1)(E_21 eta_1) = sigma(1,1) E_11 eta_0 = -E_11 eta_e.
    CHECK(a->mul(unit_vec(8, i1), unit_vec(8, i2)) ==
          unit_vec(8, gbk::twisted_basis_index(*a, 0, 0, 0), Cyclotomic(-1)));
    CHECK(gbk::jacobson_radical(a).span.dim() == 0);
    CHECK(gbk::is_graded_simple(a).verdict == Verdict3::yes);
    auto u = gbk::unit_of(*a);
    REQUIRE(u.has_value());
    CHECK(a->is_homogeneous(*u));
}

TEST_CASE("upper triangular radical") {
    auto a = ut2();
    auto rad = gbk::jacobson_radical(a);
    REQUIRE(rad.span.dim() == 1);
    CHECK(rad.span.contains(unit_vec(3, 1)));
    CHECK(rad.degrees == std::vector<long>{1});
    auto idx = gbk::nilpotency_index(*a, rad.span);
    REQUIRE(idx.has_value());
    CHECK(*idx == 2);

    auto q = gbk::quotient_algebra(a, rad);
    CHECK(q->dim() == 2);
    CHECK(gbk::jacobson_radical(q).span.dim() == 0);
    CHECK(q->mul(unit_vec(2, 0), unit_vec(2, 0)) == unit_vec(2, 0));
    CHECK(gbk::vec_is_zero(q->mul(unit_vec(2, 0), unit_vec(2, 1))));

    auto s = gbk::is_graded_simple(a);
    CHECK(s.verdict == Verdict3::no);
    REQUIRE(s.witness.has_value());
    CHECK(s.witness->span.dim() == 1);
    CHECK(s.witness->span.contains(unit_vec(3, 1)));
}

TEST_CASE("unit of the upper triangular algebra") {
    auto a = ut2();
    auto u = gbk::unit_of(*a);
    REQUIRE(u.has_value());
    Vec want(3);
    want[0] = Cyclotomic(1);
    want[2] = Cyclotomic(1);
    CHECK(*u == want);
}

TEST_CASE("algebras without a unit") {
    AbelianGroup z2({2});
    std::vector<std::vector<SVec>> mult(1, std::vector<SVec>(1));
    auto nil = gbk::make_graded_algebra(z2, {"x"}, std::move(mult), {1});
    CHECK(!gbk::unit_of(*nil).has_value());
    CHECK(gbk::nilpotency_index(nil) == 2);

    auto zero = gbk::make_graded_algebra(AbelianGroup::trivial(), {}, {}, {});
    auto u = gbk::unit_of(*zero);
    REQUIRE(u.has_value());
    CHECK(u->empty());
}

TEST_CASE("direct product of two fields") {
    auto f = field_algebra();
    auto ff = gbk::algebra_direct_product({f, f});
    CHECK(ff->dim() == 2);
    CHECK(ff->label(0) == "p0.eta_e");
    CHECK(ff->label(1) == "p1.eta_e");
    CHECK(gbk::vec_is_zero(ff->mul(unit_vec(2, 0), unit_vec(2, 1))));
    auto u = gbk::unit_of(*ff);
    REQUIRE(u.has_value());
    Vec want(2, Cyclotomic(1));
    CHECK(*u == want);
    CHECK(gbk::jacobson_radical(ff).span.dim() == 0);
    auto s = gbk::is_graded_simple(ff);
    CHECK(s.verdict == Verdict3::no);
    REQUIRE(s.witness.has_value());
    CHECK(s.witness->span.dim() == 1);
}

TEST_CASE("ideal closure in the upper triangular algebra") {
    auto a = ut2();
    auto j = gbk::ideal_closure(a, {unit_vec(3, 1)});
    CHECK(j.span.dim() == 1);
    auto big = gbk::ideal_closure(a, {unit_vec(3, 0)});
    CHECK(big.span.dim() == 2);
    CHECK(big.span.contains(unit_vec(3, 1)));
    CHECK(!big.span.contains(unit_vec(3, 2)));
    Vec mixed(3);
    mixed[0] = Cyclotomic(1);
    mixed[1] = Cyclotomic(1);
    CHECK_THROWS_AS(gbk::ideal_closure(a, {mixed}), InputError);
}

TEST_CASE("nilpotency index ladder") {
    AbelianGroup z1 = AbelianGroup::trivial();
    // x^2 = y, all other products zero: cube-zero algebra.
    std::vector<std::vector<SVec>> mult(2, std::vector<SVec>(2));
    mult[0][0] = {{1, Cyclotomic(1)}};
    auto a = gbk::make_graded_algebra(z1, {"x", "y"}, std::move(mult), {0, 0});
    CHECK(gbk::nilpotency_index(a) == 3);
    RowSpan just_y(2);
    just_y.add(unit_vec(2, 1));
    CHECK(gbk::nilpotency_index(*a, just_y) == 2);
    RowSpan empty(2);
    CHECK(gbk::nilpotency_index(*a, empty) == 1);
    RowSpan not_closed(2);
    not_closed.add(unit_vec(2, 0));
    CHECK_THROWS_AS(gbk::nilpotency_index(*a, not_closed), InputError);

    auto ut = ut2();
    CHECK(!gbk::nilpotency_index(ut).has_value());
}

TEST_CASE("simplicity of a raw matrix algebra") {
    // Same structure constants as M_2(F) but built through the raw constructor,
    // so the verdict has to come from the search rather than the construction.
    AbelianGroup z2({2});
    std::vector<std::vector<SVec>> mult(4, std::vector<SVec>(4));
    // basis 0 = E_11, 1 = E_12, 2 = E_21, 3 = E_22
    auto one = [](long k) { return SVec{{k, Cyclotomic(1)}}; };
    mult[0][0] = one(0);
    mult[0][1] = one(1);
    mult[1][2] = one(0);
    mult[1][3] = one(1);
    mult[2][0] = one(2);
    mult[2][1] = one(3);
    mult[3][2] = one(2);
    mult[3][3] = one(3);
    auto a = gbk::make_graded_algebra(z2, {"E11", "E12", "E21", "E22"},
                                      std::move(mult), {0, 1, 1, 0});
    CHECK(a->kind() == AlgebraKind::raw);
    auto s = gbk::is_graded_simple(a);
    CHECK(s.verdict == Verdict3::probably_yes);
}

TEST_CASE("simplicity rejects degenerate algebras") {
    auto zero = gbk::make_graded_algebra(AbelianGroup::trivial(), {}, {}, {});
    CHECK(gbk::is_graded_simple(zero).verdict == Verdict3::no);

    AbelianGroup z2({2});
    std::vector<std::vector<SVec>> mult(2, std::vector<SVec>(2));
    auto sq0 = gbk::make_graded_algebra(z2, {"x", "y"}, std::move(mult), {1, 1});
    auto s = gbk::is_graded_simple(sq0);
    CHECK(s.verdict == Verdict3::no);
    REQUIRE(s.witness.has_value());
    CHECK(s.witness->span.dim() == 1);

    // Nilpotent with nonzero square: witness is the span of the square.
    std::vector<std::vector<SVec>> m2(2, std::vector<SVec>(2));
    m2[0][0] = {{1, Cyclotomic(1)}};
    auto nil = gbk::make_graded_algebra(AbelianGroup::trivial(), {"x", "y"},
                                        std::move(m2), {0, 0});
    auto s2 = gbk::is_graded_simple(nil);
    CHECK(s2.verdict == Verdict3::no);
    REQUIRE(s2.witness.has_value());
    CHECK(s2.witness->span.dim() == 1);
    CHECK(s2.witness->span.contains(unit_vec(2, 1)));
}

TEST_CASE("constructor validation") {
    AbelianGroup z2({2});
    {
        std::vector<std::vector<SVec>> mult(2, std::vector<SVec>(2));
        mult[0][0] = {{1, Cyclotomic(1)}};
        CHECK_THROWS_AS(
            gbk::make_graded_algebra(z2, {"x", "y"}, std::move(mult), {0, 1}),
            VerificationError);
    }
    {
        std::vector<std::vector<SVec>> mult(2, std::vector<SVec>(2));
        mult[0][0] = {{1, Cyclotomic(1)}};
        mult[0][1] = {{0, Cyclotomic(1)}};
        CHECK_THROWS_AS(
            gbk::make_graded_algebra(AbelianGroup::trivial(), {"a", "b"},
                                     std::move(mult), {0, 0}),
            VerificationError);
    }
    {
        std::vector<std::vector<SVec>> mult(1, std::vector<SVec>(1));
        mult[0][0] = {{5, Cyclotomic(1)}};
        CHECK_THROWS_AS(
            gbk::make_graded_algebra(z2, {"x"}, std::move(mult), {0}), InputError);
    }
    {
        std::vector<std::vector<SVec>> mult(1, std::vector<SVec>(1));
        CHECK_THROWS_AS(gbk::make_graded_algebra(z2, {"x"}, std::move(mult), {7}),
                        InputError);
    }
    {
        long n = gbk::kMaxAlgebraDim + 1;
        std::vector<std::vector<SVec>> mult(n, std::vector<SVec>(n));
        CHECK_THROWS_AS(gbk::make_graded_algebra(AbelianGroup::trivial(), {},
                                                 std::move(mult),
                                                 std::vector<long>(n, 0)),
                        InputError);
        AbelianGroup z1 = AbelianGroup::trivial();
        CHECK_THROWS_AS(gbk::matrix_twisted(12, SubgroupEmbedding::identity(z1),
                                            Cocycle::trivial(z1),
                                            std::vector<long>(12, 0)),
                        InputError);
    }
    {
        std::vector<Cyclotomic> t(4, Cyclotomic(1));
        t[1] = Cyclotomic(-1);
        Cocycle broken(z2, std::move(t));
        CHECK_THROWS_AS(gbk::twisted_group_algebra(z2, broken), InputError);
    }
}

TEST_CASE("components and homogeneity") {
    auto a = ut2();
    Vec x(3);
    x[0] = Cyclotomic(1);
    x[1] = Cyclotomic(2);
    CHECK(!a->is_homogeneous(x));
    CHECK(a->component(x, 0) == unit_vec(3, 0));
    CHECK(a->component(x, 1) == unit_vec(3, 1, Cyclotomic(2)));
    long d = -1;
    CHECK(a->is_homogeneous(unit_vec(3, 1, Cyclotomic(5)), &d));
    CHECK(d == 1);
    CHECK(gbk::homogeneous_degree(Vec(3), a->degrees()) == 0);
    CHECK_THROWS_AS(gbk::homogeneous_degree(x, a->degrees()), VerificationError);
}

TEST_CASE("quotient rejects foreign and non ideal spans") {
    auto a = ut2();
    auto b = ut2();
    auto rad = gbk::jacobson_radical(a);
    CHECK_THROWS_AS(gbk::quotient_algebra(b, rad), InputError);
    RowSpan s(3);
    s.add(unit_vec(3, 0));
    gbk::GradedIdeal fake(a, std::move(s), {0});
    CHECK_THROWS_AS(gbk::quotient_algebra(a, fake), InputError);
}

TEST_CASE("radical of a mixed split algebra") {
    // F[Z2] plus a nilpotent odd arrow between the two idempotent halves.
    // Basis: u (even unit), v (odd, v^2 = u would be simple, so set v^2 = 0).
    AbelianGroup z2({2});
    std::vector<std::vector<SVec>> mult(2, std::vector<SVec>(2));
    mult[0][0] = {{0, Cyclotomic(1)}};
    mult[0][1] = {{1, Cyclotomic(1)}};
    mult[1][0] = {{1, Cyclotomic(1)}};
    auto a = gbk::make_graded_algebra(z2, {"u", "v"}, std::move(mult), {0, 1});
    auto rad = gbk::jacobson_radical(a);
    REQUIRE(rad.span.dim() == 1);
    CHECK(rad.span.contains(unit_vec(2, 1)));
    auto q = gbk::quotient_algebra(a, rad);
    CHECK(q->dim() == 1);
    CHECK(gbk::jacobson_radical(q).span.dim() == 0);
}

TEST_CASE("radical respects the grading on a random style fixture") {
    // dim 4, Z2-graded: two orthogonal idempotents and two odd radical arrows.
    AbelianGroup z2({2});
    std::vector<std::vector<SVec>> mult(4, std::vector<SVec>(4));
    auto one = [](long k) { return SVec{{k, Cyclotomic(1)}}; };
    // e1, e2 idempotent; a = e1 a e2, b = e2 b e1 with a b = 0, b a = 0.
    mult[0][0] = one(0);
    mult[1][1] = one(1);
    mult[0][2] = one(2);
    mult[2][1] = one(2);
    mult[1][3] = one(3);
    mult[3][0] = one(3);
    auto a = gbk::make_graded_algebra(z2, {"e1", "e2", "a", "b"}, std::move(mult),
                                      {0, 0, 1, 1});
    auto rad = gbk::jacobson_radical(a);
    CHECK(rad.span.dim() == 2);
    CHECK(rad.span.contains(unit_vec(4, 2)));
    CHECK(rad.span.contains(unit_vec(4, 3)));
    for (const auto& row : rad.span.rows()) CHECK(a->is_homogeneous(row));
    CHECK(gbk::nilpotency_index(*a, rad.span) == 2);
}
