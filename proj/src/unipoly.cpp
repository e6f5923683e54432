#include "vlab/unipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vlab {

void UniPoly::trim() {
    while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

UniPoly::UniPoly(FieldPtr field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
}

FieldElem UniPoly::coeff(int i) const {
    if (i < 0 || i >= int(coeffs_.size())) return field_->zero();
    return coeffs_[size_t(i)];
}

FieldElem UniPoly::leading() const {
    if (is_zero()) return field_->zero();
    return coeffs_.back();
}

UniPoly UniPoly::constant(FieldPtr field, const FieldElem& c) {
    return UniPoly(field, {c});
}

UniPoly UniPoly::x(FieldPtr field) {
    return UniPoly(field, {field->zero(), field->one()});
}

UniPoly UniPoly::monomial(FieldPtr field, const FieldElem& c, int n) {
    std::vector<FieldElem> v(size_t(n) + 1, field->zero());
    v.back() = c;
    return UniPoly(field, std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<FieldElem> r(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] = field_->add(r[i], o.coeffs_[i]);
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<FieldElem> r(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] = field_->sub(r[i], o.coeffs_[i]);
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(field_);
    std::vector<FieldElem> r(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (field_->is_zero(coeffs_[i])) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] = field_->add(r[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::scale(const FieldElem& c) const {
    std::vector<FieldElem> r = coeffs_;
    for (auto& e : r) e = field_->mul(e, c);
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scale(field_->inv(leading()));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly(field_);
    std::vector<FieldElem> r(coeffs_.size() - 1, field_->zero());
    for (size_t i = 1; i < coeffs_.size(); ++i)
        r[i - 1] = field_->mul(coeffs_[i], field_->from_int((long long)i));
    return UniPoly(field_, std::move(r));
}

FieldElem UniPoly::evaluate(const FieldElem& x) const {
    FieldElem acc = field_->zero();
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

bool UniPoly::operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    const auto& F = field_;
    std::vector<FieldElem> rem = coeffs_;
    std::vector<FieldElem> quo;
    if (rem.size() >= d.coeffs_.size())
        quo.assign(rem.size() - d.coeffs_.size() + 1, F->zero());
    FieldElem lcinv = F->inv(d.leading());
    while (rem.size() >= d.coeffs_.size() && !rem.empty()) {
        FieldElem c = F->mul(rem.back(), lcinv);
        size_t shift = rem.size() - d.coeffs_.size();
        quo[shift] = F->add(quo[shift], c);
        for (size_t i = 0; i < d.coeffs_.size(); ++i)
            rem[shift + i] = F->sub(rem[shift + i], F->mul(c, d.coeffs_[i]));
        while (!rem.empty() && F->is_zero(rem.back())) rem.pop_back();
    }
    return {UniPoly(F, std::move(quo)), UniPoly(F, std::move(rem))};
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (field_->is_zero(coeffs_[i])) continue;
        if (!first) os << " + ";
        first = false;
        std::string c = field_->to_string(coeffs_[i]);
        if (i == 0) { os << c; continue; }
        if (!field_->is_one(coeffs_[i])) {
            bool simple = c.find('+') == std::string::npos && c.find('-') == std::string::npos;
            os << (simple ? c : "(" + c + ")") << "*";
        }
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

UniPoly lift_to(const UniPoly& f, const FieldPtr& target) {
    std::vector<FieldElem> r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) r.push_back(target->embed(*f.field(), c));
    return UniPoly(target, std::move(r));
}

namespace {

// g^e mod m with word-sized exponent
UniPoly powmod(const UniPoly& g, std::uint64_t e, const UniPoly& m) {
    UniPoly r = UniPoly::constant(g.field(), g.field()->one());
    UniPoly b = g.divmod(m).second;
    while (e) {
        if (e & 1) r = (r * b).divmod(m).second;
        b = (b * b).divmod(m).second;
        e >>= 1;
    }
    return r;
}

// x^(q^iters) mod m, where q = |field| = p^k; computed by iterated p-powering.
UniPoly frobenius_power(const UniPoly& m, int iters) {
    const FieldPtr& F = m.field();
    std::uint64_t p = F->characteristic();
    int k = F->ext_degree();
    UniPoly h = UniPoly::x(F).divmod(m).second;
    for (int i = 0; i < iters * k; ++i) h = powmod(h, p, m);
    return h;
}

// p-th root of an element of F_{p^k}: c^(p^(k-1)).
FieldElem pth_root(const FieldPtr& F, const FieldElem& c) {
    FieldElem r = c;
    for (int i = 0; i < F->ext_degree() - 1; ++i) r = F->frobenius(r);
    return r;
}

// f monic with f' = 0, i.e. f = g(x^p); returns g with coefficients replaced
// by their p-th roots so that g^p has the same roots as f.
UniPoly deflate_p(const UniPoly& f) {
    const FieldPtr& F = f.field();
    std::uint64_t p = F->characteristic();
    std::vector<FieldElem> g;
    for (size_t i = 0; i < f.coeffs().size(); i += size_t(p))
        g.push_back(pth_root(F, f.coeffs()[i]));
    return UniPoly(F, std::move(g));
}

// squarefree part decomposition: returns list of (squarefree monic, multiplicity)
void squarefree_decompose(const UniPoly& f, int mult, std::vector<std::pair<UniPoly, int>>& out) {
    const FieldPtr& F = f.field();
    if (f.degree() <= 0) return;
    UniPoly df = f.derivative();
    if (df.is_zero()) {
        squarefree_decompose(deflate_p(f), mult * int(F->characteristic()), out);
        return;
    }
    UniPoly g = gcd(f, df);
    UniPoly w = f.divmod(g).first; // product of squarefree factors, each once
    int i = 1;
    while (w.degree() > 0) {
        UniPoly y = gcd(w, g);
        UniPoly part = w.divmod(y).first; // factors of multiplicity exactly i
        if (part.degree() > 0) out.emplace_back(part.monic(), mult * i);
        w = y;
        g = g.divmod(y).first;
        ++i;
    }
    if (g.degree() > 0) squarefree_decompose(g, mult, out); // leftover has p | multiplicity
}

// equal-degree splitting of monic squarefree f, all factors of degree d
void equal_degree_split(const UniPoly& f, int d, Rng& rng, std::vector<UniPoly>& out) {
    const FieldPtr& F = f.field();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    std::uint64_t p = F->characteristic();
    int big_n = F->ext_degree() * d; // f's factors live in F_{p^(k*d)}
    for (;;) {
        // random a of degree < deg f
        std::vector<FieldElem> ac(size_t(f.degree()), F->zero());
        for (auto& c : ac) c = F->random(rng);
        UniPoly a(F, std::move(ac));
        if (a.degree() < 1 && d > 1) continue;
        UniPoly g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f.divmod(g).first.monic(), d, rng, out);
            return;
        }
        UniPoly b(F);
        if (p == 2) {
            // trace map
            UniPoly t(F);
            UniPoly cur = a.divmod(f).second;
            for (int i = 0; i < big_n; ++i) {
                t = t + cur;
                cur = powmod(cur, 2, f);
            }
            b = t;
        } else {
            // a^((q^d - 1)/2) = prod_{i<N} (a^(p^i))^((p-1)/2) mod f
            UniPoly acc = UniPoly::constant(F, F->one());
            UniPoly cur = a.divmod(f).second;
            std::uint64_t half = (p - 1) / 2;
            for (int i = 0; i < big_n; ++i) {
                acc = (acc * powmod(cur, half, f)).divmod(f).second;
                cur = powmod(cur, p, f);
            }
            b = acc - UniPoly::constant(F, F->one());
        }
        UniPoly h = gcd(b, f);
        if (h.degree() > 0 && h.degree() < f.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(f.divmod(h).first.monic(), d, rng, out);
            return;
        }
    }
}

} // namespace

bool is_irreducible(const UniPoly& f) {
    const FieldPtr& F = f.field();
    if (F->kind() == Field::Kind::Rational)
        fail(ErrorCode::InvalidArgument, "irreducibility test implemented over finite fields only");
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    std::vector<int> prime_divs;
    int m = n;
    for (int q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            prime_divs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) prime_divs.push_back(m);
    UniPoly xx = UniPoly::x(F);
    for (int q : prime_divs) {
        UniPoly h = frobenius_power(f, n / q) - xx;
        if (gcd(h, f).degree() != 0) return false;
    }
    UniPoly h = frobenius_power(f, n) - xx;
    return h.divmod(f).second.is_zero();
}

std::vector<std::pair<UniPoly, int>> factor_univariate(const UniPoly& f, std::uint64_t seed) {
    const FieldPtr& F = f.field();
    if (F->kind() == Field::Kind::Rational)
        fail(ErrorCode::InvalidArgument, "factorization implemented over finite fields only");
    if (f.is_zero()) fail(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
    std::vector<std::pair<UniPoly, int>> result;
    if (f.degree() == 0) return result;
    Rng rng(seed ^ 0xfac704ull);

    std::vector<std::pair<UniPoly, int>> squarefree;
    squarefree_decompose(f.monic(), 1, squarefree);

    for (const auto& [sf, mult] : squarefree) {
        // distinct-degree splitting on sf
        UniPoly rest = sf;
        UniPoly h = UniPoly::x(F).divmod(rest).second;
        UniPoly xx = UniPoly::x(F);
        int d = 0;
        while (rest.degree() > 0) {
            ++d;
            if (2 * d > rest.degree()) {
                // remainder is irreducible
                result.emplace_back(rest.monic(), mult);
                break;
            }
            // advance h by one q-power step modulo the current rest
            h = h.divmod(rest).second;
            {
                std::uint64_t p = F->characteristic();
                int k = F->ext_degree();
                for (int i = 0; i < k; ++i) h = powmod(h, p, rest);
            }
            UniPoly g = gcd(h - xx, rest);
            if (g.degree() > 0) {
                std::vector<UniPoly> irred;
                equal_degree_split(g, d, rng, irred);
                for (auto& q : irred) result.emplace_back(q, mult);
                rest = rest.divmod(g).first.monic();
                h = h.divmod(rest).second;
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.to_string() < b.first.to_string();
    });
    return result;
}

std::vector<std::pair<FieldElem, int>> poly_roots(const UniPoly& f, std::uint64_t seed) {
    std::vector<std::pair<FieldElem, int>> roots;
    const FieldPtr& F = f.field();
    for (const auto& [g, m] : factor_univariate(f, seed)) {
        if (g.degree() == 1) {
            // monic x + c -> root -c
            roots.emplace_back(F->neg(g.coeff(0)), m);
        }
    }
    return roots;
}

UniPoly random_irreducible(std::uint64_t p, int k, std::uint64_t seed) {
    if (k < 1) fail(ErrorCode::InvalidArgument, "degree must be >= 1");
    FieldPtr F = Field::prime(p);
    Rng rng(seed ^ 0x1223344556677ull);
    int budget = std::max(10 * k, 64);
    for (int tries = 0; tries < budget; ++tries) {
        std::vector<FieldElem> c(size_t(k) + 1, F->zero());
        for (int i = 0; i < k; ++i) c[size_t(i)] = F->random(rng);
        c[size_t(k)] = F->one();
        UniPoly f(F, std::move(c));
        if (is_irreducible(f)) return f;
    }
    fail(ErrorCode::IrreducibleSearchFailed,
         "no irreducible of degree " + std::to_string(k) + " found within retry budget");
}

} // namespace vlab
