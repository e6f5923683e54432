#ifndef VLAB_UNIPOLY_HPP
#define VLAB_UNIPOLY_HPP

#include <utility>
#include <vector>

#include "vlab/field.hpp"

namespace vlab {

// Dense univariate polynomial over a runtime field.  The zero polynomial is
// the empty coefficient list; otherwise the leading coefficient is nonzero.
class UniPoly {
public:
    explicit UniPoly(FieldPtr field) : field_(std::move(field)) {}
    UniPoly(FieldPtr field, std::vector<FieldElem> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    int degree() const { return int(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    FieldElem coeff(int i) const;
    FieldElem leading() const;

    static UniPoly zero(FieldPtr field) { return UniPoly(std::move(field)); }
    static UniPoly constant(FieldPtr field, const FieldElem& c);
    static UniPoly x(FieldPtr field);
    // c * x^n
    static UniPoly monomial(FieldPtr field, const FieldElem& c, int n);

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scale(const FieldElem& c) const;
    UniPoly monic() const;
    UniPoly derivative() const;
    FieldElem evaluate(const FieldElem& x) const;
    bool operator==(const UniPoly& o) const;

    // (quotient, remainder); divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    std::string to_string(const std::string& var = "x") const;

private:
    FieldPtr field_;
    std::vector<FieldElem> coeffs_;
    void trim();
};

UniPoly gcd(const UniPoly& a, const UniPoly& b); // monic gcd

// Map coefficients through an embedding into a larger field.
UniPoly lift_to(const UniPoly& f, const FieldPtr& target);

bool is_irreducible(const UniPoly& f);

// Complete factorization over F_p or F_{p^k}: squarefree decomposition,
// distinct-degree splitting, then seeded equal-degree splitting.  Factors are
// monic irreducible, sorted deterministically; constants give an empty list.
std::vector<std::pair<UniPoly, int>> factor_univariate(const UniPoly& f, std::uint64_t seed = 1);

// Roots of f in its own coefficient field, with multiplicities.
std::vector<std::pair<FieldElem, int>> poly_roots(const UniPoly& f, std::uint64_t seed = 1);

// Monic irreducible of degree k over F_p, deterministic given seed.
UniPoly random_irreducible(std::uint64_t p, int k, std::uint64_t seed);

} // namespace vlab

#endif
