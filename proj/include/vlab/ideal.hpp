#ifndef VLAB_IDEAL_HPP
#define VLAB_IDEAL_HPP

#include <map>
#include <mutex>
#include <optional>

#include "vlab/matrix.hpp"
#include "vlab/poly.hpp"

namespace vlab {

// Finitely generated homogeneous ideal with a lazily computed, cached reduced
// Groebner basis per order.  The cache is guarded so concurrent readers
// trigger at most one computation and observe the same canonical basis.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<MultiPoly> gens, bool require_homogeneous = true);

    const RingPtr& ring() const { return ring_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }
    bool is_homogeneous() const { return homogeneous_; }

    // Reduced Groebner basis in the given order (default: the ring's).
    const std::vector<MultiPoly>& groebner() const;
    const std::vector<MultiPoly>& groebner(const MonomialOrder& order) const;

    Ideal to_ring(const RingPtr& target) const; // e.g. scalar extension

private:
    RingPtr ring_;
    std::vector<MultiPoly> gens_;
    bool homogeneous_ = true;

    struct Cache {
        std::mutex mu;
        std::map<std::pair<int, int>, std::vector<MultiPoly>> bases; // key: (kind, block)
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// --- Groebner machinery -------------------------------------------------

// Buchberger with Gebauer-Moeller pair pruning and sugar selection; returns
// the unique reduced basis (monic leads, fully interreduced).
std::vector<MultiPoly> buchberger(const RingPtr& ring, std::vector<MultiPoly> gens);

// Full normal form of f modulo a Groebner basis in f's ring order.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

bool ideal_contains(const Ideal& I, const MultiPoly& f);
bool ideal_equal(const Ideal& I, const Ideal& J);

// --- ideal operations ---------------------------------------------------

Ideal ideal_sum(const Ideal& I, const Ideal& J);

// Eliminate the first k variables; the ring's order must be block(k) or lex.
// The result lives in a ring on the remaining variables (grevlex).
Ideal eliminate(const Ideal& I, int k);

Ideal intersect_ideals(const Ideal& I, const Ideal& J);
Ideal quotient(const Ideal& I, const Ideal& J);          // I : J
Ideal saturate(const Ideal& I, const Ideal& J);          // I : J^inf
Ideal irrelevant_ideal(const RingPtr& ring);             // (x_0..x_n)

// --- Hilbert data -------------------------------------------------------

// Number of standard monomials of degree d (dim of the degree-d part of the
// quotient ring).
int hilbert_function(const Ideal& I, int d);

// Projective dimension (-1 for irrelevant/empty), via stabilization of
// finite differences of the Hilbert function up to degree_cap.
int dimension(const Ideal& I, int degree_cap = 12);

// Length of a zero-dimensional scheme: the stabilized Hilbert value.
int degree_0dim(const Ideal& I, int degree_cap = 12);

// --- point splitting ----------------------------------------------------

struct SplitPoint {
    std::vector<FieldElem> coords; // projective, first nonzero coordinate = 1
    int multiplicity = 1;
};

struct SplitResult {
    FieldPtr field; // common splitting field F_{p^k}
    std::vector<SplitPoint> points;
};

// Split a zero-dimensional ideal over F_p into points over a common
// extension field.  Deterministic given seed.
SplitResult split_points(const Ideal& I, std::uint64_t seed, int ext_cap = 24,
                         int degree_cap = 12);

// Vanishing ideal of a projective point (n independent linear forms).
Ideal point_ideal(const RingPtr& ring, const std::vector<FieldElem>& point);

// Local length of I at P: deg(I) - deg(I : m_P^inf).  P may live in an
// extension of I's coefficient field.
int local_length(const Ideal& I, const std::vector<FieldElem>& point,
                 const FieldPtr& point_field, int degree_cap = 12);

} // namespace vlab

#endif
