#include <doctest.h>

#include "vlab/geometry.hpp"

using namespace vlab;

TEST_SUITE_BEGIN("geometry");

namespace {

// Apply D to f as a differential operator, term by term; independent of the
// pairing-by-matching-exponents implementation.
FieldElem apolarity_oracle(const MultiPoly& D, const MultiPoly& f) {
    const auto& F = f.ring()->field();
    FieldElem total = F->zero();
    for (const auto& t : D.terms()) {
        MultiPoly g = f;
        for (int v = 0; v < f.ring()->nvars(); ++v)
            for (int k = 0; k < t.mono.exp(v); ++k) g = g.derivative(v);
        // g is now a constant (degrees matched)
        FieldElem c = g.is_zero() ? F->zero() : g.terms()[0].coeff;
        total = F->add(total, F->mul(t.coeff, c));
    }
    return total;
}

bool projectively_equal(const FieldPtr& F, const std::vector<FieldElem>& a,
                        const std::vector<FieldElem>& b) {
    Mat M = Mat::from_rows(F, {a, b});
    return M.rank() <= 1;
}

// Cross-ratio of 4 points on P^1 as an unordered j-style invariant is
// overkill; for labeled configurations compare (a,b;c,d) directly.
FieldElem cross_ratio(const FieldPtr& F, const std::vector<std::vector<FieldElem>>& p) {
    auto det2 = [&](const std::vector<FieldElem>& u, const std::vector<FieldElem>& v) {
        return F->sub(F->mul(u[0], v[1]), F->mul(u[1], v[0]));
    };
    return F->div(F->mul(det2(p[0], p[2]), F->mul(det2(p[1], p[3]), F->one())),
                  F->mul(det2(p[0], p[3]), det2(p[1], p[2])));
}

} // namespace

TEST_CASE("apolarity pairing: displayed values and termwise oracle") {
    auto F = Field::prime(32003);
    auto dring = Ring::make_indexed("d", 3, F);
    auto xring = Ring::make_indexed("x", 3, F);
    MultiPoly D = MultiPoly::parse(dring, "d0*d2-d1^2");
    CHECK(apolarity_pair(D, MultiPoly::parse(xring, "x0*x2")) == F->one());
    CHECK(apolarity_pair(D, MultiPoly::parse(xring, "x1^2")) == F->from_int(-2));
    Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Term> dt, ft;
        for (int k = 0; k < 4; ++k) {
            Monomial m = Monomial::one(3);
            for (int i = 0; i < 3; ++i)
                m = m * Monomial::var(3, int(rng.below(3)));
            dt.push_back({m, F->random(rng)});
            Monomial m2 = Monomial::one(3);
            for (int i = 0; i < 3; ++i)
                m2 = m2 * Monomial::var(3, int(rng.below(3)));
            ft.push_back({m2, F->random(rng)});
        }
        MultiPoly D2(dring, dt), f2(xring, ft);
        CHECK(apolarity_pair(D2, f2) == apolarity_oracle(D2, f2));
    }
}

TEST_CASE("orthic web has dimension 4 with apolarity-matrix rank oracle") {
    auto F = Field::prime(32003);
    Rng rng(2024);
    auto h1 = ProjectiveTransform::random(F, 4, rng);
    auto h2 = ProjectiveTransform::random(F, 4, rng);
    auto web = orthic_web(h1, h2, F);
    CHECK(web.basis.size() == 4);
    // oracle: 6 cubic-quadrics paired against the 10 quadric monomials on P^3
    auto dring = Ring::make_indexed("d", 4, F);
    auto yring = Ring::make_indexed("y", 4, F);
    auto q1 = twisted_cubic_quadrics(h1, yring);
    auto q2 = twisted_cubic_quadrics(h2, yring);
    std::vector<MultiPoly> all = q1;
    all.insert(all.end(), q2.begin(), q2.end());
    auto monos = monomials_of_degree(dring, 2);
    Mat M(F, all.size(), monos.size());
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < monos.size(); ++j)
            M.at(i, j) = apolarity_pair(MultiPoly::term(dring, F->one(), monos[j]), all[i]);
    CHECK(M.rank() == 6);
    CHECK(10 - int(M.rank()) == 4);
    // every web member is apolar to all six quadrics
    for (const auto& w : web.basis)
        for (const auto& q : all)
            CHECK(F->is_zero(apolarity_pair(w.poly(dring), q)));
}

TEST_CASE("random symmetric web is not catalecticant in standard coordinates") {
    auto F = Field::prime(32003);
    Rng rng(5);
    std::vector<QuadricForm> basis;
    for (int k = 0; k < 4; ++k) {
        Mat G(F, 4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                FieldElem c = F->random(rng);
                G.at(size_t(i), size_t(j)) = c;
                G.at(size_t(j), size_t(i)) = c;
            }
        basis.emplace_back(G);
    }
    WebOfQuadrics web(basis);
    CHECK(!is_catalecticant(web, ProjectiveTransform::identity(F, 4)));
}

TEST_CASE("secant parameters: rank conditions surface as errors") {
    auto F = Field::prime(32003);
    // rank 1: gamma_i = c^i (a pure 6th power on the rational normal sextic)
    std::vector<FieldElem> rank1;
    FieldElem c = F->from_int(7), acc = F->one();
    for (int i = 0; i < 7; ++i) {
        rank1.push_back(acc);
        acc = F->mul(acc, c);
    }
    CHECK_THROWS_AS((void)secant_parameters(rank1, F), Error);
    // rank 2: sum of two powers
    std::vector<FieldElem> rank2(7, F->zero());
    FieldElem a = F->one(), b = F->one();
    FieldElem u = F->from_int(3), v = F->from_int(10);
    for (int i = 0; i < 7; ++i) {
        rank2[size_t(i)] = F->add(a, b);
        a = F->mul(a, u);
        b = F->mul(b, v);
    }
    auto q = secant_parameters(rank2, F);
    REQUIRE(q.size() == 3);
    // the binary quadric c0 + c1 T + c2 T^2 vanishes at T=u and T=v
    auto eval = [&](const FieldElem& t) {
        return F->add(q[0], F->add(F->mul(q[1], t), F->mul(q[2], F->mul(t, t))));
    };
    CHECK(F->is_zero(eval(u)));
    CHECK(F->is_zero(eval(v)));
    // generic rank 3: not on the secant variety
    Rng rng(9);
    std::vector<FieldElem> rank3;
    for (int i = 0; i < 7; ++i) rank3.push_back(F->random(rng));
    CHECK_THROWS_AS((void)secant_parameters(rank3, F), Error);
}

TEST_CASE("secant sextic ideal: minors vanish exactly on low-rank vectors") {
    auto F = Field::prime(32003);
    auto ring = p6_ring(F);
    Ideal sec = secant_sextic_ideal(ring);
    std::vector<FieldElem> rank2(7, F->zero());
    FieldElem a = F->one(), b = F->one();
    FieldElem u = F->from_int(4), v = F->from_int(9);
    for (int i = 0; i < 7; ++i) {
        rank2[size_t(i)] = F->add(a, b);
        a = F->mul(a, u);
        b = F->mul(b, v);
    }
    for (const auto& g : sec.generators()) CHECK(F->is_zero(g.evaluate(rank2)));
    Rng rng(11);
    std::vector<FieldElem> generic;
    for (int i = 0; i < 7; ++i) generic.push_back(F->random(rng));
    bool all_zero = true;
    for (const auto& g : sec.generators())
        all_zero = all_zero && F->is_zero(g.evaluate(generic));
    CHECK(!all_zero);
}

TEST_CASE("Gale of 4 points on P^1: direct kernel oracle") {
    auto F = Field::prime(32003);
    FieldElem lam = F->from_int(17);
    Mat A(F, 4, 2);
    A.at(0, 0) = F->one();
    A.at(1, 1) = F->one();
    A.at(2, 0) = F->one();
    A.at(2, 1) = F->one();
    A.at(3, 0) = F->one();
    A.at(3, 1) = lam;
    PointConfiguration cfg(A);
    auto gale = gale_transform(cfg);
    CHECK(gale.points.count() == 4);
    CHECK(gale.points.ambient_dim() == 1);
    // certificate holds
    for (const auto& l : gale.lambda) CHECK(!F->is_zero(l));
    // labeled cross-ratio of the Gale points equals that of
    // (1:1),(1:lam),(1:0),(0:1)
    std::vector<std::vector<FieldElem>> gp;
    for (int i = 0; i < 4; ++i) gp.push_back(gale.points.point(i));
    std::vector<std::vector<FieldElem>> expect = {
        {F->one(), F->one()}, {F->one(), lam}, {F->one(), F->zero()}, {F->zero(), F->one()}};
    CHECK(cross_ratio(F, gp) == cross_ratio(F, expect));
}

TEST_CASE("double Gale transform is projectively equivalent to the original") {
    auto F = Field::prime(32003);
    Rng rng(13);
    Mat A(F, 10, 4);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 4; ++j) A.at(i, j) = F->random(rng);
    PointConfiguration cfg(A);
    auto g1 = gale_transform(cfg);
    auto g2 = gale_transform(g1.points);
    REQUIRE(g2.points.count() == 10);
    REQUIRE(g2.points.ambient_dim() == 3);
    // solve for T with T a_i ~ b_i via the wedge conditions
    Mat M(F, 10 * 6, 16);
    size_t row = 0;
    for (int i = 0; i < 10; ++i) {
        auto a = cfg.point(i);
        auto b = g2.points.point(i);
        for (int r = 0; r < 4; ++r)
            for (int s = r + 1; s < 4; ++s) {
                for (int j = 0; j < 4; ++j) {
                    M.at(row, size_t(r * 4 + j)) =
                        F->add(M.at(row, size_t(r * 4 + j)), F->mul(a[size_t(j)], b[size_t(s)]));
                    M.at(row, size_t(s * 4 + j)) =
                        F->sub(M.at(row, size_t(s * 4 + j)), F->mul(a[size_t(j)], b[size_t(r)]));
                }
                ++row;
            }
    }
    auto ker = M.kernel();
    REQUIRE(ker.size() >= 1);
    Mat T(F, 4, 4);
    for (int r = 0; r < 4; ++r)
        for (int j = 0; j < 4; ++j) T.at(size_t(r), size_t(j)) = ker[0][size_t(r * 4 + j)];
    REQUIRE(T.inverse().has_value());
    for (int i = 0; i < 10; ++i)
        CHECK(projectively_equal(F, T.apply(cfg.point(i)), g2.points.point(i)));
}

TEST_CASE("gale_certificate accepts matched pairs and rejects garbage") {
    auto F = Field::prime(32003);
    Rng rng(17);
    Mat A(F, 10, 4);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 4; ++j) A.at(i, j) = F->random(rng);
    PointConfiguration cfg(A);
    auto g1 = gale_transform(cfg);
    CHECK(gale_certificate(cfg, g1.points, 3).has_value());
    Mat B(F, 10, 6);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 6; ++j) B.at(i, j) = F->random(rng);
    CHECK(!gale_certificate(cfg, PointConfiguration(B), 3).has_value());
}

TEST_CASE("wedge-square action is functorial and preserves the Plucker quadric") {
    auto F = Field::prime(32003);
    Rng rng(19);
    auto PR = plucker_ring(F);
    MultiPoly pq = plucker_quadric(PR);
    for (int trial = 0; trial < 10; ++trial) {
        auto A = ProjectiveTransform::random(F, 4, rng);
        auto B = ProjectiveTransform::random(F, 4, rng);
        CHECK(wedge2_action(A.m * B.m) == wedge2_action(A.m) * wedge2_action(B.m));
        // the induced map fixes the quadric up to det scaling
        Mat W = wedge2_action(A.m);
        std::optional<Mat> Winv = W.inverse();
        REQUIRE(Winv.has_value());
        std::vector<MultiPoly> images;
        for (int j = 0; j < 6; ++j) {
            MultiPoly img(PR);
            for (int i = 0; i < 6; ++i)
                img = img + MultiPoly::var(PR, i).scale(Winv->at(size_t(i), size_t(j)));
            images.push_back(img);
        }
        MultiPoly pulled = pq.substitute(images, PR);
        CHECK(pulled.monic() == pq.monic());
    }
}

TEST_CASE("hodge star is an involution on P^5 and swaps congruence classes") {
    auto F = Field::prime(32003);
    auto star = hodge_star(F);
    Mat sq = star.m * star.m;
    // +/- identity projectively
    bool plus = true, minus = true;
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            FieldElem want = i == j ? F->one() : F->zero();
            plus = plus && sq.at(i, j) == want;
            minus = minus && sq.at(i, j) == F->neg(want);
        }
    CHECK((plus || minus));
    auto PR = plucker_ring(F);
    Rng rng(23);
    auto h = ProjectiveTransform::random(F, 4, rng);
    Ideal C = congruence_ideal(h, false, PR);
    Ideal Cd = congruence_ideal(h, true, PR);
    CHECK(ideal_contains(C, plucker_quadric(PR)));
    CHECK(ideal_contains(Cd, plucker_quadric(PR)));
    CHECK(!ideal_equal(C, Cd));
}

TEST_CASE("random_isometry preserves the form exactly and fixes vertex points") {
    auto F = Field::prime(32003);
    auto R = p5_ring(F);
    QuadricForm Q = QuadricForm::from_poly(MultiPoly::parse(R, "x0*x3-x1^2"));
    std::vector<FieldElem> P(6, F->zero());
    P[5] = F->one();
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto g = random_isometry(Q, {P}, seed);
        Mat lhs = g.m.transpose() * Q.gram * g.m;
        CHECK(lhs == Q.gram);
        CHECK(projectively_equal(F, g.apply(P), P));
    }
    // a point outside the vertex cannot be constrained
    std::vector<FieldElem> bad(6, F->zero());
    bad[0] = F->one();
    CHECK_THROWS_AS((void)random_isometry(Q, {bad}, 1), Error);
}

TEST_CASE("quadric rank/vertex and quadrics through the Veronese") {
    auto F = Field::prime(32003);
    auto R = p5_ring(F);
    QuadricForm Q = QuadricForm::from_poly(MultiPoly::parse(R, "x0*x3-x1^2"));
    auto rv = quadric_rank_vertex(Q, R);
    CHECK(rv.rank == 3);
    CHECK(dimension(rv.vertex) == 2); // vertex plane of a rank-3 quadric in P^5
    Ideal V = veronese_ideal(ProjectiveTransform::identity(F, 6), R);
    auto quads = quadrics_through(V);
    CHECK(quads.size() == 6);
    for (const auto& q : quads) CHECK(ideal_contains(V, q));
}

TEST_CASE("quartics singular at prescribed points, with dimension counts") {
    auto F = Field::prime(32003);
    auto yring = Ring::make_indexed("y", 4, F);
    Mat one(F, 1, 4);
    one.at(0, 0) = F->one();
    auto qs = quartics_singular_at(PointConfiguration(one), yring);
    // conditions kill y0^4 and y0^3 y_j: 35 - 4 = 31
    CHECK(qs.size() == 31);
    for (const auto& q : qs) {
        CHECK(F->is_zero(q.evaluate({F->one(), F->zero(), F->zero(), F->zero()})));
        for (int v = 0; v < 4; ++v)
            CHECK(F->is_zero(q.derivative(v).evaluate({F->one(), F->zero(), F->zero(), F->zero()})));
    }
    Rng rng(29);
    Mat ten(F, 10, 4);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 4; ++j) ten.at(i, j) = F->random(rng);
    CHECK(quartics_singular_at(PointConfiguration(ten), yring).empty());
}

TEST_CASE("fixed_point_transform rejects dependent points") {
    auto F = Field::prime(32003);
    std::vector<FieldElem> P = {F->one(), F->from_int(2), F->from_int(3),
                                F->from_int(4), F->from_int(5), F->from_int(6)};
    std::vector<FieldElem> P2 = P;
    for (auto& c : P2) c = F->mul(c, F->from_int(7)); // same projective point
    CHECK_THROWS_AS((void)fixed_point_transform({P, P2}, F, 1), Error);
    auto g = fixed_point_transform({P}, F, 2);
    Mat prod = g.m * g.minv;
    CHECK(prod == Mat::identity(F, 6));
}

TEST_SUITE_END();
