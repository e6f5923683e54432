#include "vlab/geometry.hpp"

#include <algorithm>

namespace vlab {

// --------------------------------------------------------------------------
// basic types

ProjectiveTransform::ProjectiveTransform(Mat matrix)
    : m(std::move(matrix)), minv(m.field(), m.rows(), m.cols()) {
    auto inv = m.inverse();
    if (!inv) fail(ErrorCode::InvalidArgument, "projective transform must be invertible");
    minv = *inv;
}

ProjectiveTransform ProjectiveTransform::identity(const FieldPtr& F, int size) {
    return ProjectiveTransform(Mat::identity(F, size_t(size)));
}

ProjectiveTransform ProjectiveTransform::random(const FieldPtr& F, int size, Rng& rng) {
    for (int t = 0; t < 64; ++t) {
        Mat m(F, size_t(size), size_t(size));
        for (size_t i = 0; i < size_t(size); ++i)
            for (size_t j = 0; j < size_t(size); ++j) m.at(i, j) = F->random(rng);
        if (m.inverse()) return ProjectiveTransform(std::move(m));
    }
    fail(ErrorCode::RetriesExhausted, "no invertible random matrix in 64 draws");
}

ProjectiveTransform ProjectiveTransform::compose(const ProjectiveTransform& o) const {
    return ProjectiveTransform(m * o.m);
}

ProjectiveTransform ProjectiveTransform::inverse() const { return ProjectiveTransform(minv); }

std::vector<FieldElem> ProjectiveTransform::apply(const std::vector<FieldElem>& pt) const {
    return m.apply(pt);
}

QuadricForm::QuadricForm(Mat g) : gram(std::move(g)) {
    if (gram.rows() != gram.cols()) fail(ErrorCode::InvalidArgument, "Gram matrix not square");
    for (size_t i = 0; i < gram.rows(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (!(gram.at(i, j) == gram.at(j, i)))
                fail(ErrorCode::InvalidArgument, "Gram matrix not symmetric");
}

QuadricForm QuadricForm::from_poly(const MultiPoly& q) {
    const RingPtr& R = q.ring();
    const FieldPtr& F = R->field();
    size_t n = size_t(R->nvars());
    Mat g(F, n, n);
    FieldElem half = F->inv(F->from_int(2));
    for (const auto& t : q.terms()) {
        if (t.mono.deg != 2) fail(ErrorCode::InvalidArgument, "not a quadratic form");
        int a = -1, b = -1;
        for (int i = 0; i < int(n); ++i) {
            if (t.mono.exp(i) == 2) { a = b = i; }
            else if (t.mono.exp(i) == 1) { (a < 0 ? a : b) = i; }
        }
        if (a == b) {
            g.at(size_t(a), size_t(a)) = t.coeff;
        } else {
            FieldElem c = F->mul(t.coeff, half);
            g.at(size_t(a), size_t(b)) = c;
            g.at(size_t(b), size_t(a)) = c;
        }
    }
    return QuadricForm(std::move(g));
}

MultiPoly QuadricForm::poly(const RingPtr& ring) const {
    const FieldPtr& F = ring->field();
    size_t n = gram.rows();
    MultiPoly q(ring);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (F->is_zero(gram.at(i, j))) continue;
            q = q + (MultiPoly::var(ring, int(i)) * MultiPoly::var(ring, int(j)))
                        .scale(gram.at(i, j));
        }
    return q;
}

PointConfiguration::PointConfiguration(Mat pts) : rows(std::move(pts)) {
    const FieldPtr& F = rows.field();
    for (size_t i = 0; i < rows.rows(); ++i) {
        size_t piv = rows.cols();
        for (size_t j = 0; j < rows.cols(); ++j)
            if (!F->is_zero(rows.at(i, j))) { piv = j; break; }
        if (piv == rows.cols())
            fail(ErrorCode::InvalidArgument, "zero row in point configuration");
        FieldElem inv = F->inv(rows.at(i, piv));
        for (size_t j = 0; j < rows.cols(); ++j) rows.at(i, j) = F->mul(rows.at(i, j), inv);
    }
}

std::vector<FieldElem> PointConfiguration::point(int i) const {
    std::vector<FieldElem> p;
    for (size_t j = 0; j < rows.cols(); ++j) p.push_back(rows.at(size_t(i), j));
    return p;
}

WebOfQuadrics::WebOfQuadrics(std::vector<QuadricForm> b) : basis(std::move(b)) {
    if (basis.size() != 4) fail(ErrorCode::InvalidArgument, "a web has 4 basis quadrics");
    const FieldPtr& F = basis[0].gram.field();
    Mat flat(F, 4, 16);
    for (size_t k = 0; k < 4; ++k)
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) flat.at(k, 4 * i + j) = basis[k].gram.at(i, j);
    if (flat.rank() != 4)
        fail(ErrorCode::InvalidArgument, "web basis quadrics linearly dependent");
}

// --------------------------------------------------------------------------
// rings

RingPtr p5_ring(const FieldPtr& F) { return Ring::make_indexed("x", 6, F); }
RingPtr p2_ring(const FieldPtr& F) { return Ring::make_indexed("u", 3, F); }
RingPtr p6_ring(const FieldPtr& F) { return Ring::make_indexed("z", 7, F); }

RingPtr plucker_ring(const FieldPtr& F) {
    return Ring::make({"p01", "p02", "p03", "p12", "p13", "p23"}, F);
}

// --------------------------------------------------------------------------
// determinants and minors of polynomial matrices

namespace {

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    const RingPtr& R = m[0][0].ring();
    MultiPoly det(R);
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<MultiPoly>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        MultiPoly term = m[0][j] * poly_det(sub);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (int(cur.size()) == k) { out.push_back(cur); return; }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

} // namespace

std::vector<MultiPoly> matrix_minors(const std::vector<std::vector<MultiPoly>>& m, int k) {
    int rows = int(m.size()), cols = int(m[0].size());
    std::vector<std::vector<int>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    std::vector<MultiPoly> out;
    for (const auto& r : rs)
        for (const auto& c : cs) {
            std::vector<std::vector<MultiPoly>> sub;
            for (int i : r) {
                std::vector<MultiPoly> row;
                for (int j : c) row.push_back(m[size_t(i)][size_t(j)]);
                sub.push_back(std::move(row));
            }
            out.push_back(poly_det(sub));
        }
    return out;
}

// --------------------------------------------------------------------------
// Veronese surfaces

namespace {

// the symmetric coordinate arrangement whose 2x2 minors cut the surface
std::vector<std::vector<int>> veronese_matrix_indices() {
    return {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
}

std::vector<MultiPoly> standard_veronese_minors(const RingPtr& ring) {
    auto idx = veronese_matrix_indices();
    std::vector<std::vector<MultiPoly>> m(3, std::vector<MultiPoly>(3, MultiPoly(ring)));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m[i][j] = MultiPoly::var(ring, idx[i][j]);
    return matrix_minors(m, 2); // 9 minors; contains duplicates by symmetry
}

// substitution images x_i -> sum_j M(i,j) x_j
std::vector<MultiPoly> linear_images(const Mat& M, const RingPtr& ring) {
    std::vector<MultiPoly> images;
    for (size_t i = 0; i < M.rows(); ++i) {
        MultiPoly img(ring);
        for (size_t j = 0; j < M.cols(); ++j) {
            if (ring->field()->is_zero(M.at(i, j))) continue;
            img = img + MultiPoly::var(ring, int(j)).scale(M.at(i, j));
        }
        images.push_back(img);
    }
    return images;
}

} // namespace

Ideal veronese_ideal(const ProjectiveTransform& g, const RingPtr& ring) {
    auto minors = standard_veronese_minors(ring);
    auto images = linear_images(g.minv, ring);
    std::vector<MultiPoly> gens;
    for (const auto& q : minors) {
        MultiPoly t = q.substitute(images, ring);
        if (!t.is_zero()) gens.push_back(t);
    }
    return Ideal(ring, std::move(gens));
}

std::vector<MultiPoly> veronese_parametrization(const ProjectiveTransform& g,
                                                const RingPtr& plane) {
    auto u = [&](int i) { return MultiPoly::var(plane, i); };
    std::vector<MultiPoly> std_param = {u(0) * u(0), u(0) * u(1), u(0) * u(2),
                                        u(1) * u(1), u(1) * u(2), u(2) * u(2)};
    std::vector<MultiPoly> out;
    for (size_t i = 0; i < 6; ++i) {
        MultiPoly q(plane);
        for (size_t j = 0; j < 6; ++j) {
            if (plane->field()->is_zero(g.m.at(i, j))) continue;
            q = q + std_param[j].scale(g.m.at(i, j));
        }
        out.push_back(q);
    }
    return out;
}

Ideal pullback_to_plane(const Ideal& J, const ProjectiveTransform& g) {
    RingPtr plane = p2_ring(J.ring()->field());
    auto param = veronese_parametrization(g, plane);
    std::vector<MultiPoly> gens;
    for (const auto& f : J.generators()) {
        MultiPoly p = f.substitute(param, plane);
        if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) return Ideal(plane, {});
    return saturate(Ideal(plane, std::move(gens)), irrelevant_ideal(plane));
}

// --------------------------------------------------------------------------
// secant congruences

Mat wedge2_action(const Mat& h) {
    const FieldPtr& F = h.field();
    static const int pair_idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    Mat W(F, 6, 6);
    for (size_t r = 0; r < 6; ++r)
        for (size_t c = 0; c < 6; ++c) {
            int a = pair_idx[r][0], b = pair_idx[r][1];
            int cc = pair_idx[c][0], d = pair_idx[c][1];
            // coefficient of p_{cc,d} in the image of line coords under h:
            // (h e_cc ^ h e_d) component (a,b)
            FieldElem t1 = F->mul(h.at(size_t(a), size_t(cc)), h.at(size_t(b), size_t(d)));
            FieldElem t2 = F->mul(h.at(size_t(a), size_t(d)), h.at(size_t(b), size_t(cc)));
            W.at(r, c) = F->sub(t1, t2);
        }
    return W;
}

ProjectiveTransform hodge_star(const FieldPtr& F) {
    Mat S(F, 6, 6);
    FieldElem one = F->one(), neg = F->neg(F->one());
    S.at(0, 5) = one;  // p01 <- p23
    S.at(1, 4) = neg;  // p02 <- -p13
    S.at(2, 3) = one;  // p03 <- p12
    S.at(3, 2) = one;  // p12 <- p03
    S.at(4, 1) = neg;  // p13 <- -p02
    S.at(5, 0) = one;  // p23 <- p01
    return ProjectiveTransform(std::move(S));
}

MultiPoly plucker_quadric(const RingPtr& ring) {
    auto p = [&](int i) { return MultiPoly::var(ring, i); };
    return p(0) * p(5) - p(1) * p(4) + p(2) * p(3);
}

std::vector<MultiPoly> congruence_parametrization(const ProjectiveTransform& h,
                                                  bool dualize, const RingPtr& eplane) {
    const FieldPtr& F = eplane->field();
    auto e = [&](int i) { return MultiPoly::var(eplane, i); };
    // chord of the standard twisted cubic through parameters with elementary
    // symmetric coordinates (e0 : e1 : e2)
    std::vector<MultiPoly> std_param = {e(0) * e(0),           e(0) * e(1),
                                        e(1) * e(1) - e(0) * e(2), e(0) * e(2),
                                        e(1) * e(2),           e(2) * e(2)};
    Mat M = wedge2_action(h.m);
    if (dualize) M = hodge_star(F).m * M;
    std::vector<MultiPoly> out;
    for (size_t i = 0; i < 6; ++i) {
        MultiPoly q(eplane);
        for (size_t j = 0; j < 6; ++j) {
            if (F->is_zero(M.at(i, j))) continue;
            q = q + std_param[j].scale(M.at(i, j));
        }
        out.push_back(q);
    }
    return out;
}

namespace {

// Implicitize a 6-tuple of plane conics: the quadrics in the 6 ambient
// coordinates vanishing on the image, found as the kernel of the evaluation
// map from coordinate quadrics to plane quartics.
std::vector<MultiPoly> implicitize_conic_param(const std::vector<MultiPoly>& param,
                                               const RingPtr& ambient) {
    const RingPtr& eplane = param[0].ring();
    const FieldPtr& F = ambient->field();
    auto amb_monos = monomials_of_degree(ambient, 2);   // 21
    auto plane_monos = monomials_of_degree(eplane, 4);  // 15
    auto mono_index = [&](const Monomial& m) -> int {
        for (size_t i = 0; i < plane_monos.size(); ++i)
            if (plane_monos[i] == m) return int(i);
        return -1;
    };
    Mat A(F, plane_monos.size(), amb_monos.size());
    for (size_t c = 0; c < amb_monos.size(); ++c) {
        MultiPoly prod = MultiPoly::constant(eplane, F->one());
        for (int v = 0; v < 6; ++v)
            for (int k = 0; k < amb_monos[c].exp(v); ++k) prod = prod * param[size_t(v)];
        for (const auto& t : prod.terms()) {
            int r = mono_index(t.mono);
            if (r < 0) fail(ErrorCode::InvalidArgument, "degree bookkeeping failure");
            A.at(size_t(r), c) = t.coeff;
        }
    }
    auto ker = A.kernel();
    std::vector<MultiPoly> out;
    for (const auto& v : ker) {
        std::vector<Term> terms;
        for (size_t c = 0; c < amb_monos.size(); ++c)
            if (!F->is_zero(v[c])) terms.push_back(Term{amb_monos[c], v[c]});
        out.push_back(MultiPoly(ambient, std::move(terms)));
    }
    return out;
}

} // namespace

Ideal congruence_ideal(const ProjectiveTransform& h, bool dualize, const RingPtr& ring) {
    RingPtr eplane = Ring::make_indexed("e", 3, ring->field());
    auto param = congruence_parametrization(h, dualize, eplane);
    auto gens = implicitize_conic_param(param, ring);
    if (gens.size() != 6)
        fail(ErrorCode::DegenerateConfiguration, "congruence implicitization rank unexpected");
    return Ideal(ring, std::move(gens));
}

// --------------------------------------------------------------------------
// quadric utilities

std::vector<MultiPoly> quadrics_through(const Ideal& J, int d) {
    Ideal sat = saturate(J, irrelevant_ideal(J.ring()));
    const auto& gb = sat.groebner(MonomialOrder::grevlex());
    RingPtr R = J.ring()->order() == MonomialOrder::grevlex()
                    ? J.ring()
                    : J.ring()->with_order(MonomialOrder::grevlex());
    const FieldPtr& F = R->field();
    auto monos = monomials_of_degree(R, d);
    // standard monomials index the codomain of the reduction map
    std::vector<Monomial> std_monos;
    for (const auto& m : monos) {
        bool standard = true;
        for (const auto& g : gb)
            if (g.leading_monomial().divides(m)) { standard = false; break; }
        if (standard) std_monos.push_back(m);
    }
    auto std_index = [&](const Monomial& m) -> int {
        for (size_t i = 0; i < std_monos.size(); ++i)
            if (std_monos[i] == m) return int(i);
        return -1;
    };
    Mat A(F, std::max<size_t>(std_monos.size(), 1), monos.size());
    for (size_t c = 0; c < monos.size(); ++c) {
        MultiPoly nf = normal_form(MultiPoly::term(R, F->one(), monos[c]), gb);
        for (const auto& t : nf.terms()) {
            int r = std_index(t.mono);
            if (r < 0) fail(ErrorCode::InvalidArgument, "normal form left the standard span");
            A.at(size_t(r), c) = t.coeff;
        }
    }
    auto ker = A.kernel();
    std::vector<MultiPoly> out;
    for (const auto& v : ker) {
        std::vector<Term> terms;
        for (size_t c = 0; c < monos.size(); ++c)
            if (!F->is_zero(v[c])) terms.push_back(Term{monos[c], v[c]});
        out.push_back(MultiPoly(J.ring(), std::move(terms)).to_ring(J.ring()));
    }
    return out;
}

RankVertex quadric_rank_vertex(const QuadricForm& Q, const RingPtr& ring) {
    Mat R = Q.gram;
    auto piv = R.rref();
    std::vector<MultiPoly> gens;
    for (size_t i = 0; i < piv.size(); ++i) {
        MultiPoly l(ring);
        for (size_t j = 0; j < R.cols(); ++j) {
            if (ring->field()->is_zero(R.at(i, j))) continue;
            l = l + MultiPoly::var(ring, int(j)).scale(R.at(i, j));
        }
        gens.push_back(l);
    }
    return RankVertex{int(piv.size()), Ideal(ring, std::move(gens))};
}

ProjectiveTransform random_isometry(const QuadricForm& Q,
                                    const std::vector<std::vector<FieldElem>>& fixed,
                                    std::uint64_t seed) {
    const Mat& G = Q.gram;
    const FieldPtr& F = G.field();
    size_t n = G.rows();
    auto rad = G.kernel(); // radical basis
    size_t k = rad.size(), r = n - k;

    // complement of the radical from standard basis vectors
    std::vector<size_t> comp;
    {
        Mat test(F, n, 0);
        std::vector<std::vector<FieldElem>> cols(rad);
        for (size_t i = 0; i < n && cols.size() < n; ++i) {
            std::vector<FieldElem> e(n, F->zero());
            e[i] = F->one();
            std::vector<std::vector<FieldElem>> trial = cols;
            trial.push_back(e);
            Mat M(F, n, trial.size());
            for (size_t c = 0; c < trial.size(); ++c)
                for (size_t row = 0; row < n; ++row) M.at(row, c) = trial[c][row];
            if (M.rank() == trial.size()) {
                cols = trial;
                comp.push_back(i);
            }
        }
        if (comp.size() != r) fail(ErrorCode::DegenerateConfiguration, "no radical complement");
    }
    // change of basis B = [complement | radical]
    Mat B(F, n, n);
    for (size_t c = 0; c < r; ++c) B.at(comp[c], c) = F->one();
    for (size_t c = 0; c < k; ++c)
        for (size_t row = 0; row < n; ++row) B.at(row, r + c) = rad[c][row];
    Mat Binv = *B.inverse();
    // restricted form on the complement
    Mat S(F, r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) S.at(i, j) = G.at(comp[i], comp[j]);

    // constraint points must sit in the radical; coordinates in B-basis
    std::vector<std::vector<FieldElem>> rad_coords;
    for (const auto& p : fixed) {
        auto c = Binv.apply(p);
        for (size_t i = 0; i < r; ++i)
            if (!F->is_zero(c[i]))
                fail(ErrorCode::ConstraintInfeasible,
                     "fixed point not in the vertex of the quadric");
        rad_coords.push_back(std::vector<FieldElem>(c.begin() + long(r), c.end()));
    }

    Rng rng(seed ^ 0x150e711ull);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Rng rs = rng.split(std::uint64_t(attempt));
        // isometry of the nondegenerate part: product of reflections
        Mat A = Mat::identity(F, r);
        int nref = 2 + int(rs.below(4));
        for (int t = 0; t < nref; ++t) {
            std::vector<FieldElem> v;
            FieldElem q = F->zero();
            for (int tries = 0; tries < 32 && F->is_zero(q); ++tries) {
                v.clear();
                for (size_t i = 0; i < r; ++i) v.push_back(F->random(rs));
                std::vector<FieldElem> Sv(r, F->zero());
                for (size_t i = 0; i < r; ++i)
                    for (size_t j = 0; j < r; ++j)
                        Sv[i] = F->add(Sv[i], F->mul(S.at(i, j), v[j]));
                q = F->zero();
                for (size_t i = 0; i < r; ++i) q = F->add(q, F->mul(v[i], Sv[i]));
            }
            if (F->is_zero(q)) continue;
            // reflection I - (2/q) v (v^T S)
            std::vector<FieldElem> vS(r, F->zero());
            for (size_t j = 0; j < r; ++j)
                for (size_t i = 0; i < r; ++i)
                    vS[j] = F->add(vS[j], F->mul(v[i], S.at(i, j)));
            FieldElem c = F->div(F->from_int(2), q);
            Mat Ref = Mat::identity(F, r);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j)
                    Ref.at(i, j) = F->sub(Ref.at(i, j), F->mul(c, F->mul(v[i], vS[j])));
            A = Ref * A;
        }
        // radical block: arbitrary invertible R with the constraint vectors
        // as eigenvectors
        Mat Rblk = Mat::identity(F, std::max<size_t>(k, 1));
        if (k > 0) {
            size_t m = rad_coords.size();
            // basis of the radical coords starting with the constraints
            Mat C(F, k, k);
            std::vector<std::vector<FieldElem>> cols = rad_coords;
            for (size_t i = 0; i < k && cols.size() < k; ++i) {
                std::vector<FieldElem> e(k, F->zero());
                e[i] = F->one();
                std::vector<std::vector<FieldElem>> trial = cols;
                trial.push_back(e);
                Mat M(F, k, trial.size());
                for (size_t c = 0; c < trial.size(); ++c)
                    for (size_t row = 0; row < k; ++row) M.at(row, c) = trial[c][row];
                if (M.rank() == trial.size()) cols = trial;
            }
            if (cols.size() != k)
                fail(ErrorCode::ConstraintInfeasible, "dependent constraint points");
            for (size_t c = 0; c < k; ++c)
                for (size_t row = 0; row < k; ++row) C.at(row, c) = cols[c][row];
            // first m columns diagonal (eigenvectors), rest random
            Mat T(F, k, k);
            for (size_t c = 0; c < m; ++c) T.at(c, c) = F->random_nonzero(rs);
            for (size_t c = m; c < k; ++c)
                for (size_t row = 0; row < k; ++row) T.at(row, c) = F->random(rs);
            auto Tinv = T.inverse();
            if (!Tinv) continue;
            Rblk = C * T * *C.inverse();
        }
        // assemble in B-basis: [[A, 0], [N, Rblk]]
        Mat gt(F, n, n);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) gt.at(i, j) = A.at(i, j);
        for (size_t i = 0; i < k; ++i) {
            for (size_t j = 0; j < r; ++j) gt.at(r + i, j) = F->random(rs);
            for (size_t j = 0; j < k; ++j) gt.at(r + i, r + j) = Rblk.at(i, j);
        }
        Mat g = B * gt * Binv;
        if (!g.inverse()) continue;
        // exact similitude identity (lambda = 1 by construction)
        Mat lhs = g.transpose() * G * g;
        if (!(lhs == G)) continue;
        ProjectiveTransform pt(g);
        // constraints: projective fixing
        bool ok = true;
        for (const auto& p : fixed) {
            auto q = pt.apply(p);
            // q must be proportional to p
            FieldElem ratio = F->zero();
            bool set = false;
            for (size_t i = 0; i < n && ok; ++i) {
                if (F->is_zero(p[i])) {
                    if (!F->is_zero(q[i])) ok = false;
                } else if (!set) {
                    ratio = F->div(q[i], p[i]);
                    set = true;
                } else if (!(F->div(q[i], p[i]) == ratio)) {
                    ok = false;
                }
            }
            if (!set) ok = false;
        }
        if (ok) return pt;
    }
    fail(ErrorCode::ConstraintInfeasible, "no similitude satisfying constraints in 16 draws");
}

ProjectiveTransform fixed_point_transform(const std::vector<std::vector<FieldElem>>& points,
                                          const FieldPtr& F, std::uint64_t seed) {
    size_t m = points.size();
    if (m == 0) fail(ErrorCode::InvalidArgument, "need at least one point");
    size_t n = points[0].size();
    {
        Mat P(F, n, m);
        for (size_t c = 0; c < m; ++c)
            for (size_t i = 0; i < n; ++i) P.at(i, c) = points[c][i];
        if (P.rank() != m) fail(ErrorCode::DependentPoints, "fixed points projectively dependent");
    }
    Rng rng(seed ^ 0xf1c5ull);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Rng rs = rng.split(std::uint64_t(attempt));
        Mat B(F, n, n);
        for (size_t c = 0; c < m; ++c)
            for (size_t i = 0; i < n; ++i) B.at(i, c) = points[c][i];
        for (size_t c = m; c < n; ++c)
            for (size_t i = 0; i < n; ++i) B.at(i, c) = F->random(rs);
        auto Binv = B.inverse();
        if (!Binv) continue;
        // distinct nonzero eigenvalues
        std::vector<FieldElem> eig;
        bool distinct = true;
        for (size_t i = 0; i < n; ++i) {
            FieldElem e = F->random_nonzero(rs);
            for (const auto& o : eig)
                if (o == e) distinct = false;
            eig.push_back(e);
        }
        if (!distinct) continue;
        Mat D(F, n, n);
        for (size_t i = 0; i < n; ++i) D.at(i, i) = eig[i];
        return ProjectiveTransform(B * D * *Binv);
    }
    fail(ErrorCode::RetriesExhausted, "no suitable basis completion in 16 draws");
}

// --------------------------------------------------------------------------
// apolarity and webs

namespace {

FieldElem factorial_elem(const FieldPtr& F, int n) {
    FieldElem r = F->one();
    for (int i = 2; i <= n; ++i) r = F->mul(r, F->from_int(i));
    return r;
}

FieldElem monomial_pair_weight(const FieldPtr& F, const Monomial& a) {
    FieldElem w = F->one();
    for (int i = 0; i < int(a.nvars); ++i) w = F->mul(w, factorial_elem(F, a.exp(i)));
    return w;
}

} // namespace

FieldElem apolarity_pair(const MultiPoly& D, const MultiPoly& f) {
    if (D.is_zero() || f.is_zero()) return D.ring()->field()->zero();
    if (!D.is_homogeneous() || !f.is_homogeneous() || D.total_degree() != f.total_degree() ||
        D.ring()->nvars() != f.ring()->nvars())
        fail(ErrorCode::DegreeMismatch, "apolarity needs equal-degree forms");
    const FieldPtr& F = f.ring()->field();
    FieldElem acc = F->zero();
    for (const auto& td : D.terms())
        for (const auto& tf : f.terms())
            if (td.mono.e == tf.mono.e)
                acc = F->add(acc, F->mul(F->mul(td.coeff, tf.coeff),
                                         monomial_pair_weight(F, td.mono)));
    return acc;
}

std::vector<MultiPoly> twisted_cubic_quadrics(const ProjectiveTransform& h,
                                              const RingPtr& ring) {
    auto y = [&](int i) { return MultiPoly::var(ring, i); };
    std::vector<MultiPoly> std_q = {y(0) * y(2) - y(1) * y(1), y(0) * y(3) - y(1) * y(2),
                                    y(1) * y(3) - y(2) * y(2)};
    auto images = linear_images(h.minv, ring);
    std::vector<MultiPoly> out;
    for (const auto& q : std_q) out.push_back(q.substitute(images, ring));
    return out;
}

WebOfQuadrics orthic_web(const ProjectiveTransform& C1, const ProjectiveTransform& C2,
                         const FieldPtr& F) {
    RingPtr dring = Ring::make_indexed("d", 4, F); // dual coordinates
    RingPtr xring = Ring::make_indexed("y", 4, F);
    std::vector<MultiPoly> qs = twisted_cubic_quadrics(C1, dring);
    for (auto& q : twisted_cubic_quadrics(C2, dring)) qs.push_back(q);
    auto monos = monomials_of_degree(xring, 2); // 10
    Mat A(F, qs.size(), monos.size());
    for (size_t i = 0; i < qs.size(); ++i)
        for (size_t c = 0; c < monos.size(); ++c)
            A.at(i, c) =
                apolarity_pair(qs[i], MultiPoly::term(xring, F->one(), monos[c]));
    auto ker = A.kernel();
    if (ker.size() != 4)
        fail(ErrorCode::DegenerateConfiguration,
             "annihilator dimension " + std::to_string(ker.size()) + ", expected 4");
    std::vector<QuadricForm> basis;
    for (const auto& v : ker) {
        std::vector<Term> terms;
        for (size_t c = 0; c < monos.size(); ++c)
            if (!F->is_zero(v[c])) terms.push_back(Term{monos[c], v[c]});
        basis.push_back(QuadricForm::from_poly(MultiPoly(xring, std::move(terms))));
    }
    return WebOfQuadrics(std::move(basis));
}

std::vector<std::vector<MultiPoly>> hessian_matrix(const WebOfQuadrics& web,
                                                   const RingPtr& wring) {
    const FieldPtr& F = wring->field();
    std::vector<std::vector<MultiPoly>> M(4, std::vector<MultiPoly>(4, MultiPoly(wring)));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            MultiPoly e(wring);
            for (size_t k = 0; k < 4; ++k) {
                if (F->is_zero(web.basis[k].gram.at(i, j))) continue;
                e = e + MultiPoly::var(wring, int(k)).scale(web.basis[k].gram.at(i, j));
            }
            M[i][j] = e;
        }
    return M;
}

bool is_catalecticant(const WebOfQuadrics& web, const ProjectiveTransform& coords) {
    for (const auto& q : web.basis) {
        Mat Gp = coords.minv * q.gram * coords.minv.transpose();
        if (!(Gp.at(0, 2) == Gp.at(1, 1))) return false;
        if (!(Gp.at(0, 3) == Gp.at(1, 2))) return false;
        if (!(Gp.at(1, 3) == Gp.at(2, 2))) return false;
    }
    return true;
}

Symmetroid symmetroid_and_nodes(const WebOfQuadrics& web, const RingPtr& wring) {
    auto M = hessian_matrix(web, wring);
    MultiPoly quartic = poly_det(M);
    if (quartic.is_zero()) fail(ErrorCode::DegenerateWeb, "symmetroid determinant vanishes");
    auto minors = matrix_minors(M, 3);
    Ideal nodes0(wring, std::move(minors));
    Ideal nodes = saturate(nodes0, irrelevant_ideal(wring));
    if (dimension(nodes) != 0)
        fail(ErrorCode::DegenerateWeb, "node scheme not zero-dimensional");
    return Symmetroid{std::move(quartic), std::move(nodes)};
}

// --------------------------------------------------------------------------
// secant variety of the sextic rational curve

Ideal secant_sextic_ideal(const RingPtr& ring) {
    std::vector<std::vector<MultiPoly>> cat(3, std::vector<MultiPoly>(5, MultiPoly(ring)));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 5; ++j) cat[i][j] = MultiPoly::var(ring, int(i + j));
    return Ideal(ring, matrix_minors(cat, 3));
}

std::vector<FieldElem> secant_parameters(const std::vector<FieldElem>& gamma,
                                         const FieldPtr& point_field) {
    const FieldPtr& E = point_field;
    Mat M(E, 3, 5);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 5; ++j) M.at(i, j) = gamma[i + j];
    size_t rk = M.rank();
    if (rk < 2) fail(ErrorCode::RankTooLow, "catalecticant rank 1: point on the curve itself");
    if (rk > 2) fail(ErrorCode::PointNotOnScheme, "catalecticant rank 3: not a secant point");
    auto ker = M.transpose().kernel(); // left kernel of M
    if (ker.size() != 1) fail(ErrorCode::RankDeficient, "left kernel not a line");
    return ker[0]; // c0 + c1 T + c2 T^2
}

// --------------------------------------------------------------------------
// Gale transforms

GaleResult gale_transform(const PointConfiguration& gamma) {
    const Mat& A = gamma.rows;
    const FieldPtr& F = A.field();
    size_t d = A.rows(), s1 = A.cols();
    if (d < s1 + 2) fail(ErrorCode::InvalidArgument, "too few points for a Gale transform");
    if (A.transpose().rank() != s1) fail(ErrorCode::RankDeficient, "points do not span");
    auto ker = A.transpose().kernel(); // vectors v in F^d with A^T v = 0
    size_t r = ker.size();             // d - s1
    Mat B(F, d, r);
    for (size_t c = 0; c < r; ++c)
        for (size_t i = 0; i < d; ++i) B.at(i, c) = ker[c][i];
    // normalize rows, remembering the scalars as the certificate diagonal
    std::vector<FieldElem> lambda(d, F->one());
    for (size_t i = 0; i < d; ++i) {
        size_t piv = r;
        for (size_t j = 0; j < r; ++j)
            if (!F->is_zero(B.at(i, j))) { piv = j; break; }
        if (piv == r) fail(ErrorCode::RankDeficient, "Gale image has a zero row");
        lambda[i] = B.at(i, piv);
        FieldElem inv = F->inv(lambda[i]);
        for (size_t j = 0; j < r; ++j) B.at(i, j) = F->mul(B.at(i, j), inv);
    }
    return GaleResult{PointConfiguration(std::move(B)), std::move(lambda)};
}

std::optional<std::vector<FieldElem>> gale_certificate(const PointConfiguration& A,
                                                       const PointConfiguration& B,
                                                       std::uint64_t seed) {
    const FieldPtr& F = A.rows.field();
    size_t d = A.rows.rows();
    if (B.rows.rows() != d) return std::nullopt;
    size_t sa = A.rows.cols(), sb = B.rows.cols();
    Mat M(F, sa * sb, d);
    for (size_t a = 0; a < sa; ++a)
        for (size_t b = 0; b < sb; ++b)
            for (size_t i = 0; i < d; ++i)
                M.at(a * sb + b, i) = F->mul(A.rows.at(i, a), B.rows.at(i, b));
    auto ker = M.kernel();
    if (ker.empty()) return std::nullopt;
    auto all_nonzero = [&](const std::vector<FieldElem>& v) {
        for (const auto& c : v)
            if (F->is_zero(c)) return false;
        return true;
    };
    if (all_nonzero(ker[0])) return ker[0];
    Rng rng(seed ^ 0x9a1eull);
    for (int t = 0; t < 32; ++t) {
        std::vector<FieldElem> v(d, F->zero());
        for (const auto& kv : ker) {
            FieldElem c = F->random(rng);
            for (size_t i = 0; i < d; ++i) v[i] = F->add(v[i], F->mul(c, kv[i]));
        }
        if (all_nonzero(v)) return v;
    }
    return std::nullopt;
}

std::vector<MultiPoly> quartics_singular_at(const PointConfiguration& gamma,
                                            const RingPtr& ring) {
    const FieldPtr& F = ring->field();
    auto monos = monomials_of_degree(ring, 4); // 35 on P^3
    int n = ring->nvars();
    size_t d = size_t(gamma.count());
    // value + all partials at every point (value is redundant by Euler but
    // harmless in a kernel computation)
    Mat A(F, d * size_t(n + 1), monos.size());
    for (size_t i = 0; i < d; ++i) {
        auto P = gamma.point(int(i));
        for (size_t c = 0; c < monos.size(); ++c) {
            MultiPoly m = MultiPoly::term(ring, F->one(), monos[c]);
            A.at(i * size_t(n + 1), c) = m.evaluate(P);
            for (int v = 0; v < n; ++v)
                A.at(i * size_t(n + 1) + size_t(v) + 1, c) = m.derivative(v).evaluate(P);
        }
    }
    auto ker = A.kernel();
    std::vector<MultiPoly> out;
    for (const auto& v : ker) {
        std::vector<Term> terms;
        for (size_t c = 0; c < monos.size(); ++c)
            if (!F->is_zero(v[c])) terms.push_back(Term{monos[c], v[c]});
        out.push_back(MultiPoly(ring, std::move(terms)));
    }
    return out;
}

} // namespace vlab
