#include "vlab/field.hpp"

#include <algorithm>
#include <sstream>

namespace vlab {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::OrderUnsuitable: return "OrderUnsuitable";
        case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
        case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorCode::ShapePositionFailure: return "ShapePositionFailure";
        case ErrorCode::ExtensionCapExceeded: return "ExtensionCapExceeded";
        case ErrorCode::PointNotOnScheme: return "PointNotOnScheme";
        case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorCode::DegenerateWeb: return "DegenerateWeb";
        case ErrorCode::ConstraintInfeasible: return "ConstraintInfeasible";
        case ErrorCode::DependentPoints: return "DependentPoints";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::RankTooLow: return "RankTooLow";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::UncoveredMonomial: return "UncoveredMonomial";
        case ErrorCode::RetriesExhausted: return "RetriesExhausted";
        case ErrorCode::IrreducibleSearchFailed: return "IrreducibleSearchFailed";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mulmod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    // extended Euclid
    long long t = 0, newt = 1;
    long long r = (long long)p, newr = (long long)(a % p);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) fail(ErrorCode::DivisionByZero, "modulus not prime?");
    if (t < 0) t += (long long)p;
    return (u64)t;
}

// ---- dense univariate arithmetic over F_p, used only for validating and
// ---- operating on extension moduli (UniPoly proper lives elsewhere).

using FpPoly = std::vector<u64>; // dense, coefficients in [0,p)

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
    }
    // reduce mod `mod` (monic)
    size_t k = mod.size() - 1;
    for (size_t i = c.size(); i-- > k;) {
        u64 coef = c[i];
        if (coef == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < k; ++j)
            c[i - k + j] = submod(c[i - k + j], mulmod(coef, mod[j], p), p);
    }
    c.resize(std::min(c.size(), k));
    trim(c);
    return c;
}

FpPoly poly_powmod_xq(const FpPoly& mod, u64 p, u64 e_base, int iters) {
    // computes x^(e_base^iters) mod `mod` by iterated powering
    FpPoly x = {0, 1};
    size_t k = mod.size() - 1;
    if (k == 1) {
        // x ≡ -mod[0]
        FpPoly r = {submod(0, mod[0], p)};
        trim(r);
        // powers of a scalar
        u64 v = r.empty() ? 0 : r[0];
        for (int i = 0; i < iters; ++i) v = powmod(v, e_base, p);
        FpPoly out = {v};
        trim(out);
        return out;
    }
    FpPoly cur = x;
    for (int it = 0; it < iters; ++it) {
        // cur = cur^e_base mod `mod`
        FpPoly r = {1};
        FpPoly b = cur;
        u64 e = e_base;
        while (e) {
            if (e & 1) r = poly_mulmod(r, b, mod, p);
            b = poly_mulmod(b, b, mod, p);
            e >>= 1;
        }
        cur = r;
    }
    return cur;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, u64 p) {
    trim(a); trim(b);
    while (!b.empty()) {
        // a mod b
        u64 lcinv = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            if (a.empty()) break;
            u64 c = mulmod(a.back(), lcinv, p);
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = submod(a[shift + i], mulmod(c, b[i], p), p);
            trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 lcinv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, lcinv, p);
    }
    return a;
}

bool fp_poly_irreducible(const FpPoly& f, u64 p) {
    // Rabin's test: f (monic, degree k) irreducible over F_p iff
    // x^(p^k) = x mod f and gcd(x^(p^(k/q)) - x, f) = 1 for prime q | k.
    size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    std::vector<int> prime_divs;
    {
        size_t m = k;
        for (size_t q = 2; q * q <= m; ++q)
            if (m % q == 0) {
                prime_divs.push_back(int(q));
                while (m % q == 0) m /= q;
            }
        if (m > 1) prime_divs.push_back(int(m));
    }
    for (int q : prime_divs) {
        FpPoly xq = poly_powmod_xq(f, p, p, int(k) / q);
        // xq - x
        FpPoly d = xq;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = submod(d[1], 1, p);
        trim(d);
        FpPoly g = poly_gcd(d, f, p);
        if (!(g.size() == 1)) return false;
    }
    FpPoly xq = poly_powmod_xq(f, p, p, int(k));
    FpPoly d = xq;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = submod(d[1], 1, p);
    trim(d);
    return d.empty();
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FieldPtr Field::rationals() {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Rational;
    return f;
}

FieldPtr Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) fail(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 62)) fail(ErrorCode::InvalidArgument, "prime modulus too large");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Prime;
    f->p_ = p;
    return f;
}

FieldPtr Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (!is_prime_u64(p)) fail(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
    for (auto& c : modulus) c %= p;
    trim(modulus);
    if (modulus.size() < 2) fail(ErrorCode::InvalidArgument, "extension modulus must have degree >= 1");
    if (modulus.back() != 1) fail(ErrorCode::InvalidArgument, "extension modulus must be monic");
    if (!fp_poly_irreducible(modulus, p))
        fail(ErrorCode::InvalidArgument, "extension modulus is reducible over F_p");
    if (modulus.size() == 2) {
        // degree 1 degenerates to the prime field itself
        return prime(p);
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Extension;
    f->p_ = p;
    f->modulus_ = modulus;
    // precompute t^k .. t^(2k-2) mod modulus
    size_t k = modulus.size() - 1;
    std::vector<u64> cur(k, 0); // t^k reduced: -c0..-c_{k-1}
    for (size_t i = 0; i < k; ++i) cur[i] = submod(0, modulus[i], p);
    f->red_.push_back(cur);
    for (size_t d = k + 1; d <= 2 * k - 2; ++d) {
        // multiply cur by t, reduce
        std::vector<u64> nxt(k, 0);
        u64 top = cur[k - 1];
        for (size_t i = k - 1; i > 0; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (size_t i = 0; i < k; ++i)
                nxt[i] = addmod(nxt[i], mulmod(top, f->red_[0][i], p), p);
        cur = nxt;
        f->red_.push_back(cur);
    }
    return f;
}

bool Field::same(const Field& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::Rational) return true;
    return p_ == o.p_ && modulus_ == o.modulus_;
}

std::string Field::name() const {
    switch (kind_) {
        case Kind::Rational: return "QQ";
        case Kind::Prime: return "F(" + std::to_string(p_) + ")";
        case Kind::Extension: {
            std::ostringstream os;
            os << "F(" << p_ << "^" << ext_degree() << "; ";
            bool first = true;
            for (size_t i = modulus_.size(); i-- > 0;) {
                u64 c = modulus_[i];
                if (c == 0) continue;
                if (!first) os << "+";
                first = false;
                if (i == 0) { os << c; continue; }
                if (c != 1) os << c << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
            os << ")";
            return os.str();
        }
    }
    return "?";
}

FieldElem Field::zero() const {
    switch (kind_) {
        case Kind::Rational: return FieldElem(mpq_class(0));
        case Kind::Prime: return FieldElem(u64{0});
        case Kind::Extension: return FieldElem(std::vector<u64>(size_t(ext_degree()), 0));
    }
    return FieldElem();
}

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long long v) const {
    switch (kind_) {
        case Kind::Rational: return FieldElem(mpq_class((long)v));
        case Kind::Prime: {
            long long r = v % (long long)p_;
            if (r < 0) r += (long long)p_;
            return FieldElem(u64(r));
        }
        case Kind::Extension: {
            std::vector<u64> e(size_t(ext_degree()), 0);
            long long r = v % (long long)p_;
            if (r < 0) r += (long long)p_;
            e[0] = u64(r);
            return FieldElem(std::move(e));
        }
    }
    return FieldElem();
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
    switch (kind_) {
        case Kind::Rational: {
            mpq_class r = a.as_rat() + b.as_rat();
            r.canonicalize();
            return FieldElem(std::move(r));
        }
        case Kind::Prime: return FieldElem(addmod(a.as_prime(), b.as_prime(), p_));
        case Kind::Extension: {
            std::vector<u64> r = a.as_ext();
            const auto& bb = b.as_ext();
            for (size_t i = 0; i < r.size(); ++i) r[i] = addmod(r[i], bb[i], p_);
            return FieldElem(std::move(r));
        }
    }
    return FieldElem();
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
    switch (kind_) {
        case Kind::Rational: {
            mpq_class r = a.as_rat() - b.as_rat();
            r.canonicalize();
            return FieldElem(std::move(r));
        }
        case Kind::Prime: return FieldElem(submod(a.as_prime(), b.as_prime(), p_));
        case Kind::Extension: {
            std::vector<u64> r = a.as_ext();
            const auto& bb = b.as_ext();
            for (size_t i = 0; i < r.size(); ++i) r[i] = submod(r[i], bb[i], p_);
            return FieldElem(std::move(r));
        }
    }
    return FieldElem();
}

FieldElem Field::ext_reduce_mul(const std::vector<u64>& a, const std::vector<u64>& b) const {
    size_t k = a.size();
    std::vector<u64> c(2 * k - 1, 0);
    for (size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < k; ++j)
            c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p_), p_);
    }
    std::vector<u64> r(c.begin(), c.begin() + k);
    for (size_t d = k; d < 2 * k - 1; ++d) {
        u64 coef = c[d];
        if (coef == 0) continue;
        const auto& row = red_[d - k];
        for (size_t i = 0; i < k; ++i)
            r[i] = addmod(r[i], mulmod(coef, row[i], p_), p_);
    }
    return FieldElem(std::move(r));
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
    switch (kind_) {
        case Kind::Rational: {
            mpq_class r = a.as_rat() * b.as_rat();
            r.canonicalize();
            return FieldElem(std::move(r));
        }
        case Kind::Prime: return FieldElem(mulmod(a.as_prime(), b.as_prime(), p_));
        case Kind::Extension: return ext_reduce_mul(a.as_ext(), b.as_ext());
    }
    return FieldElem();
}

FieldElem Field::neg(const FieldElem& a) const {
    switch (kind_) {
        case Kind::Rational: return FieldElem(mpq_class(-a.as_rat()));
        case Kind::Prime: return FieldElem(submod(0, a.as_prime(), p_));
        case Kind::Extension: {
            std::vector<u64> r = a.as_ext();
            for (auto& c : r) c = submod(0, c, p_);
            return FieldElem(std::move(r));
        }
    }
    return FieldElem();
}

FieldElem Field::inv(const FieldElem& a) const {
    switch (kind_) {
        case Kind::Rational: {
            if (a.as_rat() == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
            mpq_class r = 1 / a.as_rat();
            r.canonicalize();
            return FieldElem(std::move(r));
        }
        case Kind::Prime: return FieldElem(invmod(a.as_prime(), p_));
        case Kind::Extension: {
            // extended Euclid in F_p[t] on (element, modulus)
            FpPoly r0 = modulus_;
            FpPoly r1 = a.as_ext();
            trim(r1);
            if (r1.empty()) fail(ErrorCode::DivisionByZero, "inverse of zero");
            FpPoly s0 = {}, s1 = {1};
            while (!r1.empty()) {
                // q, rem = divmod(r0, r1)
                FpPoly q;
                FpPoly rem = r0;
                u64 lcinv = invmod(r1.back(), p_);
                if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
                while (rem.size() >= r1.size() && !rem.empty()) {
                    u64 c = mulmod(rem.back(), lcinv, p_);
                    size_t shift = rem.size() - r1.size();
                    q[shift] = addmod(q[shift], c, p_);
                    for (size_t i = 0; i < r1.size(); ++i)
                        rem[shift + i] = submod(rem[shift + i], mulmod(c, r1[i], p_), p_);
                    trim(rem);
                }
                // s0, s1 = s1, s0 - q*s1
                FpPoly qs(q.size() + (s1.empty() ? 1 : s1.size()) - 1, 0);
                for (size_t i = 0; i < q.size(); ++i)
                    for (size_t j = 0; j < s1.size(); ++j)
                        qs[i + j] = addmod(qs[i + j], mulmod(q[i], s1[j], p_), p_);
                FpPoly ns = s0;
                if (ns.size() < qs.size()) ns.resize(qs.size(), 0);
                for (size_t i = 0; i < qs.size(); ++i) ns[i] = submod(ns[i], qs[i], p_);
                trim(ns);
                s0 = s1;
                s1 = ns;
                r0 = r1;
                r1 = rem;
            }
            // r0 = gcd (a nonzero constant since modulus irreducible)
            u64 ginv = invmod(r0.empty() ? 0 : r0[0], p_);
            std::vector<u64> out(size_t(ext_degree()), 0);
            for (size_t i = 0; i < s0.size() && i < out.size(); ++i)
                out[i] = mulmod(s0[i], ginv, p_);
            return FieldElem(std::move(out));
        }
    }
    return FieldElem();
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const {
    return mul(a, inv(b));
}

FieldElem Field::pow(const FieldElem& a, std::uint64_t e) const {
    FieldElem r = one();
    FieldElem b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

bool Field::is_zero(const FieldElem& a) const {
    switch (kind_) {
        case Kind::Rational: return a.as_rat() == 0;
        case Kind::Prime: return a.as_prime() == 0;
        case Kind::Extension: {
            for (u64 c : a.as_ext())
                if (c != 0) return false;
            return true;
        }
    }
    return false;
}

bool Field::is_one(const FieldElem& a) const { return a == one(); }

FieldElem Field::random(Rng& rng) const {
    switch (kind_) {
        case Kind::Rational: {
            long long v = (long long)rng.below(2001) - 1000;
            return FieldElem(mpq_class((long)v));
        }
        case Kind::Prime: return FieldElem(rng.below(p_));
        case Kind::Extension: {
            std::vector<u64> r(size_t(ext_degree()), 0);
            for (auto& c : r) c = rng.below(p_);
            return FieldElem(std::move(r));
        }
    }
    return FieldElem();
}

FieldElem Field::random_nonzero(Rng& rng) const {
    for (;;) {
        FieldElem e = random(rng);
        if (!is_zero(e)) return e;
    }
}

FieldElem Field::frobenius(const FieldElem& a) const {
    if (kind_ == Kind::Rational) return a;
    if (kind_ == Kind::Prime) return a; // x^p = x in F_p
    return pow(a, p_);
}

FieldElem Field::embed(const Field& from, const FieldElem& a) const {
    if (same(from)) return a;
    if (kind_ == Kind::Extension && from.kind_ == Kind::Prime && from.p_ == p_) {
        std::vector<u64> r(size_t(ext_degree()), 0);
        r[0] = a.as_prime();
        return FieldElem(std::move(r));
    }
    fail(ErrorCode::FieldMismatch, "no embedding from " + from.name() + " into " + name());
}

std::string Field::to_string(const FieldElem& a) const {
    switch (kind_) {
        case Kind::Rational: return a.as_rat().get_str();
        case Kind::Prime: return std::to_string(a.as_prime());
        case Kind::Extension: {
            const auto& v = a.as_ext();
            std::ostringstream os;
            bool first = true;
            for (size_t i = v.size(); i-- > 0;) {
                if (v[i] == 0) continue;
                if (!first) os << "+";
                first = false;
                if (i == 0) { os << v[i]; continue; }
                if (v[i] != 1) os << v[i] << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
            if (first) os << "0";
            return os.str();
        }
    }
    return "?";
}

FieldElem Field::parse(const std::string& s) const {
    if (kind_ == Kind::Rational) {
        mpq_class q(s);
        q.canonicalize();
        return FieldElem(std::move(q));
    }
    if (kind_ == Kind::Prime) {
        size_t slash = s.find('/');
        if (slash != std::string::npos) {
            FieldElem num = parse(s.substr(0, slash));
            FieldElem den = parse(s.substr(slash + 1));
            return div(num, den);
        }
        try {
            long long v = std::stoll(s);
            return from_int(v);
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad field element '" + s + "'");
        }
    }
    // Extension: sum of c*t^i terms
    FieldElem acc = zero();
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    bool any = false;
    while (true) {
        skip_ws();
        if (i >= s.size()) break;
        long long sign = 1;
        if (s[i] == '+') { ++i; }
        else if (s[i] == '-') { sign = -1; ++i; }
        else if (any) fail(ErrorCode::ParseError, "bad field element '" + s + "'");
        skip_ws();
        long long coef = 1;
        bool saw_coef = false;
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            coef = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) coef = coef * 10 + (s[i++] - '0');
            saw_coef = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        long long expn = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            expn = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                expn = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) expn = expn * 10 + (s[i++] - '0');
            }
        } else if (!saw_coef) {
            fail(ErrorCode::ParseError, "bad field element '" + s + "'");
        }
        if (expn >= ext_degree())
            fail(ErrorCode::ParseError, "exponent exceeds extension degree in '" + s + "'");
        std::vector<u64> term(size_t(ext_degree()), 0);
        long long c = (sign * coef) % (long long)p_;
        if (c < 0) c += (long long)p_;
        term[size_t(expn)] = u64(c);
        acc = add(acc, FieldElem(std::move(term)));
        any = true;
    }
    if (!any) fail(ErrorCode::ParseError, "empty field element");
    return acc;
}

} // namespace vlab
