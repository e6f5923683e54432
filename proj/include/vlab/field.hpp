#ifndef VLAB_FIELD_HPP
#define VLAB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "vlab/error.hpp"
#include "vlab/rng.hpp"

namespace vlab {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A scalar in some field.  The representation is interpreted by the owning
// Field context: canonical residue in [0,p) for prime fields, a residue
// polynomial (dense, length = extension degree) for extensions, a reduced
// mpq for the rationals.  Elements are immutable values.
class FieldElem {
public:
    FieldElem() : rep_(std::uint64_t{0}) {}

    explicit FieldElem(std::uint64_t v) : rep_(v) {}
    explicit FieldElem(std::vector<std::uint64_t> v) : rep_(std::move(v)) {}
    explicit FieldElem(mpq_class q) : rep_(std::move(q)) {}

    std::uint64_t as_prime() const { return std::get<std::uint64_t>(rep_); }
    const std::vector<std::uint64_t>& as_ext() const { return std::get<std::vector<std::uint64_t>>(rep_); }
    const mpq_class& as_rat() const { return std::get<mpq_class>(rep_); }

    bool holds_prime() const { return std::holds_alternative<std::uint64_t>(rep_); }
    bool holds_ext() const { return std::holds_alternative<std::vector<std::uint64_t>>(rep_); }
    bool holds_rat() const { return std::holds_alternative<mpq_class>(rep_); }

    // Structural equality; only meaningful between elements of one field,
    // where representations are canonical.
    bool operator==(const FieldElem& o) const { return rep_ == o.rep_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
    std::variant<std::uint64_t, std::vector<std::uint64_t>, mpq_class> rep_;
};

// Exact coefficient field: QQ, F_p (p a machine-word prime, verified), or
// F_{p^k} given a monic irreducible modulus over F_p (verified).  All
// operations are pure; a Field is freely shareable between threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { Rational, Prime, Extension };

    static FieldPtr rationals();
    static FieldPtr prime(std::uint64_t p);
    // modulus: dense coefficients c0..ck over F_p, monic of degree k >= 1.
    static FieldPtr extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

    Kind kind() const { return kind_; }
    std::uint64_t characteristic() const { return kind_ == Kind::Rational ? 0 : p_; }
    int ext_degree() const { return kind_ == Kind::Extension ? int(modulus_.size()) - 1 : 1; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    bool same(const Field& o) const;
    bool same(const FieldPtr& o) const { return same(*o); }

    // Serialization name: "QQ", "F(32003)", "F(32003^4; t^4+...)".
    std::string name() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(long long v) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& a, std::uint64_t e) const;

    bool is_zero(const FieldElem& a) const;
    bool is_one(const FieldElem& a) const;
    bool eq(const FieldElem& a, const FieldElem& b) const { return a == b; }

    FieldElem random(Rng& rng) const;
    FieldElem random_nonzero(Rng& rng) const;

    // x -> x^p on prime/extension fields.
    FieldElem frobenius(const FieldElem& a) const;

    // Lift an element of `from` into this field.  Supported: identity, and
    // F_p into F_{p^k} over the same p.
    FieldElem embed(const Field& from, const FieldElem& a) const;

    std::string to_string(const FieldElem& a) const;
    // Accepts integers and "a/b"; for extension fields also polynomials in t
    // like "3*t^2+1".
    FieldElem parse(const std::string& s) const;

private:
    Field() = default;

    FieldElem ext_reduce_mul(const std::vector<std::uint64_t>& a,
                             const std::vector<std::uint64_t>& b) const;

    Kind kind_ = Kind::Prime;
    std::uint64_t p_ = 0;
    std::vector<std::uint64_t> modulus_;          // extension only; monic
    std::vector<std::vector<std::uint64_t>> red_; // t^{k}..t^{2k-2} mod modulus
};

// Deterministic 64-bit Miller-Rabin.
bool is_prime_u64(std::uint64_t n);

} // namespace vlab

#endif
