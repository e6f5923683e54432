#ifndef VLAB_GEOMETRY_HPP
#define VLAB_GEOMETRY_HPP

#include "vlab/ideal.hpp"

namespace vlab {

// Invertible projective transformation of P^n, with cached inverse.
struct ProjectiveTransform {
    Mat m;
    Mat minv;

    explicit ProjectiveTransform(Mat matrix);
    static ProjectiveTransform identity(const FieldPtr& F, int size);
    static ProjectiveTransform random(const FieldPtr& F, int size, Rng& rng);

    int size() const { return int(m.rows()); }
    ProjectiveTransform compose(const ProjectiveTransform& o) const; // this after o
    ProjectiveTransform inverse() const;
    std::vector<FieldElem> apply(const std::vector<FieldElem>& pt) const;
};

// Quadratic form via its symmetric Gram matrix (char != 2 assumed for the
// polynomial<->Gram dictionary).
struct QuadricForm {
    Mat gram; // symmetric

    explicit QuadricForm(Mat g);
    static QuadricForm from_poly(const MultiPoly& q);
    MultiPoly poly(const RingPtr& ring) const;
    int rank() const { return int(gram.rank()); }
};

// d labeled points in P^s as a d x (s+1) row matrix, each row normalized so
// its first nonzero entry is 1.
struct PointConfiguration {
    Mat rows;

    explicit PointConfiguration(Mat pts); // normalizes rows; rejects zero rows
    int count() const { return int(rows.rows()); }
    int ambient_dim() const { return int(rows.cols()) - 1; } // s
    std::vector<FieldElem> point(int i) const;
};

// 4-dimensional space of quadrics on P^3, stored by 4 independent Gram
// matrices.
struct WebOfQuadrics {
    std::vector<QuadricForm> basis; // size 4, independent

    explicit WebOfQuadrics(std::vector<QuadricForm> b);
};

// --- Veronese surfaces ----------------------------------------------------

// Ring helpers used across scenarios.
RingPtr p5_ring(const FieldPtr& F);      // x0..x5
RingPtr p2_ring(const FieldPtr& F);      // u0,u1,u2
RingPtr plucker_ring(const FieldPtr& F); // p01,p02,p03,p12,p13,p23

// 2x2 minors of [[x0,x1,x2],[x1,x3,x4],[x2,x4,x5]] precomposed with g^-1.
Ideal veronese_ideal(const ProjectiveTransform& g, const RingPtr& ring);
// The six quadrics (g applied to (u0^2, u0u1, u0u2, u1^2, u1u2, u2^2)).
std::vector<MultiPoly> veronese_parametrization(const ProjectiveTransform& g,
                                                const RingPtr& plane);
// Substitute g's parametrization into J and saturate by the irrelevant ideal
// of P^2.
Ideal pullback_to_plane(const Ideal& J, const ProjectiveTransform& g);

// --- secant congruences ---------------------------------------------------

// Ideal in Plucker coordinates of the chord congruence of the h-translated
// twisted cubic; dualize post-composes with the Hodge star.
Ideal congruence_ideal(const ProjectiveTransform& h, bool dualize, const RingPtr& ring);
// Parametrization of that congruence by (e0:e1:e2): 6 quadrics.
std::vector<MultiPoly> congruence_parametrization(const ProjectiveTransform& h,
                                                  bool dualize, const RingPtr& eplane);
// Induced action of h on P^5 = P(Lambda^2 k^4).
Mat wedge2_action(const Mat& h);
ProjectiveTransform hodge_star(const FieldPtr& F);
MultiPoly plucker_quadric(const RingPtr& ring);

// --- quadric utilities ----------------------------------------------------

// Linearly independent degree-d forms in saturate(J, irrelevant).
std::vector<MultiPoly> quadrics_through(const Ideal& J, int d = 2);

struct RankVertex {
    int rank;
    Ideal vertex; // linear forms spanning the Gram row space
};
RankVertex quadric_rank_vertex(const QuadricForm& Q, const RingPtr& ring);

// Similitude g of Q (g^T gram g = gram exactly), optionally fixing points that
// lie in the vertex of Q.  Deterministic given seed.
ProjectiveTransform random_isometry(const QuadricForm& Q,
                                    const std::vector<std::vector<FieldElem>>& fixed,
                                    std::uint64_t seed);

// Random invertible matrix with each given point an eigenvector for a
// distinct random eigenvalue.
ProjectiveTransform fixed_point_transform(const std::vector<std::vector<FieldElem>>& points,
                                          const FieldPtr& F, std::uint64_t seed);

// --- apolarity and webs ---------------------------------------------------

// <D, f> with the differentiation pairing; both arguments homogeneous of the
// same degree (rings may differ, variable counts must match).
FieldElem apolarity_pair(const MultiPoly& D, const MultiPoly& f);

// Quadrics of the standard twisted cubic, transformed by h (in the given
// ring's coordinates).
std::vector<MultiPoly> twisted_cubic_quadrics(const ProjectiveTransform& h,
                                              const RingPtr& ring);

// Joint apolar annihilator of the 6 quadrics of the two cubics; must come out
// 4-dimensional.
WebOfQuadrics orthic_web(const ProjectiveTransform& C1, const ProjectiveTransform& C2,
                         const FieldPtr& F);

// 4x4 symmetric matrix of linear forms in w0..w3.
std::vector<std::vector<MultiPoly>> hessian_matrix(const WebOfQuadrics& web,
                                                   const RingPtr& wring);
// Tests the three catalecticant identities after transforming every Gram
// matrix by coords^-1 (...) coords^-T.
bool is_catalecticant(const WebOfQuadrics& web, const ProjectiveTransform& coords);

struct Symmetroid {
    MultiPoly quartic; // det of the Hessian matrix
    Ideal nodes;       // saturated 3x3-minor ideal, 0-dimensional
};
Symmetroid symmetroid_and_nodes(const WebOfQuadrics& web, const RingPtr& wring);

// --- secant variety of the sextic curve -----------------------------------

RingPtr p6_ring(const FieldPtr& F); // z0..z6
Ideal secant_sextic_ideal(const RingPtr& ring);
// Left-kernel binary quadric (3 coefficients c0 + c1 T + c2 T^2) of the 3x5
// catalecticant evaluated at a rank-2 point.
std::vector<FieldElem> secant_parameters(const std::vector<FieldElem>& gamma,
                                         const FieldPtr& point_field);

// --- Gale transforms ------------------------------------------------------

struct GaleResult {
    PointConfiguration points;
    std::vector<FieldElem> lambda; // certificate diagonal, all nonzero
};
GaleResult gale_transform(const PointConfiguration& gamma);

// Diagonal Lambda with all entries nonzero such that A^T Lambda B = 0, if one
// exists in the kernel of the bilinear conditions.
std::optional<std::vector<FieldElem>> gale_certificate(const PointConfiguration& A,
                                                       const PointConfiguration& B,
                                                       std::uint64_t seed = 1);

// Basis of quartic forms on P^3 singular at every given point.
std::vector<MultiPoly> quartics_singular_at(const PointConfiguration& gamma,
                                            const RingPtr& ring);

// k x k minors of a polynomial matrix.
std::vector<MultiPoly> matrix_minors(const std::vector<std::vector<MultiPoly>>& m, int k);

} // namespace vlab

#endif
