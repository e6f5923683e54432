#ifndef VLAB_POLY_HPP
#define VLAB_POLY_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vlab/field.hpp"

namespace vlab {

constexpr int kMaxVars = 12;

// Exponent vector with cached total degree.  Dense and fixed-width: every
// ring in scope has few variables, so this beats hashed sparse exponents.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint8_t nvars = 0;
    std::uint16_t deg = 0;

    static Monomial one(int nvars);
    static Monomial var(int nvars, int i, int power = 1);

    int exp(int i) const { return e[size_t(i)]; }
    bool is_one() const { return deg == 0; }
    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const; // requires divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return nvars == o.nvars && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

enum class OrderKind { Grevlex, Lex, Block };

// A monomial order: grevlex, lex, or block(k), which eliminates the first k
// variables (lex between the two blocks, grevlex within each).
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    int block = 0;

    static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder block_elim(int k) { return {OrderKind::Block, k}; }

    // +1 if a > b, 0 if equal, -1 if a < b.
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
    std::string to_string() const;
    static MonomialOrder parse(const std::string& s);
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Polynomial ring descriptor: named variables, coefficient field, active
// monomial order.
class Ring {
public:
    static RingPtr make(std::vector<std::string> vars, FieldPtr field,
                        MonomialOrder order = MonomialOrder::grevlex());
    // Convenience: names stem0..stem{n-1}.
    static RingPtr make_indexed(const std::string& stem, int n, FieldPtr field,
                                MonomialOrder order = MonomialOrder::grevlex());

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return int(vars_.size()); }
    const FieldPtr& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }
    int var_index(const std::string& name) const; // -1 if absent

    // Same variables/field, different order.
    RingPtr with_order(MonomialOrder order) const;
    // Same variables/order, field replaced (for scalar extension).
    RingPtr with_field(FieldPtr field) const;

    bool compatible(const Ring& o) const; // same vars and field (order may differ)

private:
    Ring() = default;
    std::vector<std::string> vars_;
    FieldPtr field_;
    MonomialOrder order_;
};

struct Term {
    Monomial mono;
    FieldElem coeff;
};

// Sparse multivariate polynomial: terms sorted strictly decreasing in the
// ring's order, no zero coefficients, no duplicate monomials.  Immutable
// value semantics.
class MultiPoly {
public:
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
    MultiPoly(RingPtr ring, std::vector<Term> terms); // normalizes

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
    static MultiPoly constant(RingPtr ring, const FieldElem& c);
    static MultiPoly var(RingPtr ring, int i, int power = 1);
    static MultiPoly term(RingPtr ring, const FieldElem& c, const Monomial& m);

    const Monomial& leading_monomial() const;
    const FieldElem& leading_coeff() const;
    int total_degree() const; // -1 for zero
    bool is_homogeneous() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scale(const FieldElem& c) const;
    MultiPoly mul_term(const FieldElem& c, const Monomial& m) const;
    MultiPoly pow(int e) const;
    MultiPoly monic() const;
    bool operator==(const MultiPoly& o) const;

    // Ring homomorphism determined by variable images (one per variable of
    // this ring, all in the target ring).
    MultiPoly substitute(const std::vector<MultiPoly>& images, const RingPtr& target) const;
    // Evaluation at a point; coordinates may live in an extension of the
    // coefficient field, in which case pass that field.
    FieldElem evaluate(const std::vector<FieldElem>& point, const FieldPtr& point_field) const;
    FieldElem evaluate(const std::vector<FieldElem>& point) const;
    MultiPoly derivative(int var) const;

    // Move to a ring with the same variables (coefficients embedded if the
    // field grows, order switched freely).
    MultiPoly to_ring(const RingPtr& target) const;

    std::string to_string() const;
    static MultiPoly parse(const RingPtr& ring, const std::string& text);

private:
    void normalize();
    RingPtr ring_;
    std::vector<Term> terms_;
};

// entry (i,j) = d(polys[i])/d(x_j)
std::vector<std::vector<MultiPoly>> jacobian(const std::vector<MultiPoly>& polys);

// All monomials of total degree d in the ring, sorted decreasing.
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d);

} // namespace vlab

#endif
