#include "vlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace vlab {

Monomial Monomial::one(int nvars) {
    Monomial m;
    m.nvars = std::uint8_t(nvars);
    return m;
}

Monomial Monomial::var(int nvars, int i, int power) {
    Monomial m;
    m.nvars = std::uint8_t(nvars);
    m.e[size_t(i)] = std::uint8_t(power);
    m.deg = std::uint16_t(power);
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < nvars; ++i)
        if (e[size_t(i)] > o.e[size_t(i)]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m = *this;
    for (int i = 0; i < nvars; ++i) m.e[size_t(i)] = std::uint8_t(m.e[size_t(i)] + o.e[size_t(i)]);
    m.deg = std::uint16_t(deg + o.deg);
    return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial m = *this;
    for (int i = 0; i < nvars; ++i) m.e[size_t(i)] = std::uint8_t(m.e[size_t(i)] - o.e[size_t(i)]);
    m.deg = std::uint16_t(deg - o.deg);
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    int d = 0;
    for (int i = 0; i < a.nvars; ++i) {
        m.e[size_t(i)] = std::max(a.e[size_t(i)], b.e[size_t(i)]);
        d += m.e[size_t(i)];
    }
    m.deg = std::uint16_t(d);
    return m;
}

bool Monomial::coprime(const Monomial& o) const {
    for (int i = 0; i < nvars; ++i)
        if (e[size_t(i)] != 0 && o.e[size_t(i)] != 0) return false;
    return true;
}

namespace {

// grevlex comparison restricted to the variable range [lo, hi)
int grevlex_cmp_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) { da += a.e[size_t(i)]; db += b.e[size_t(i)]; }
    if (da != db) return da < db ? -1 : 1;
    // ties: the monomial with the smaller exponent in the last differing
    // variable is the larger one
    for (int i = hi; i-- > lo;) {
        if (a.e[size_t(i)] != b.e[size_t(i)])
            return a.e[size_t(i)] > b.e[size_t(i)] ? -1 : 1;
    }
    return 0;
}

} // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case OrderKind::Grevlex:
            return grevlex_cmp_range(a, b, 0, a.nvars);
        case OrderKind::Lex:
            for (int i = 0; i < a.nvars; ++i)
                if (a.e[size_t(i)] != b.e[size_t(i)])
                    return a.e[size_t(i)] < b.e[size_t(i)] ? -1 : 1;
            return 0;
        case OrderKind::Block: {
            int c = grevlex_cmp_range(a, b, 0, block);
            if (c != 0) return c;
            return grevlex_cmp_range(a, b, block, a.nvars);
        }
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    switch (kind) {
        case OrderKind::Grevlex: return "grevlex";
        case OrderKind::Lex: return "lex";
        case OrderKind::Block: return "block:" + std::to_string(block);
    }
    return "?";
}

MonomialOrder MonomialOrder::parse(const std::string& s) {
    if (s == "grevlex") return grevlex();
    if (s == "lex") return lex();
    if (s.rfind("block:", 0) == 0) {
        int k = std::stoi(s.substr(6));
        if (k < 1) fail(ErrorCode::ParseError, "block order needs k >= 1");
        return block_elim(k);
    }
    fail(ErrorCode::ParseError, "unknown monomial order '" + s + "'");
}

RingPtr Ring::make(std::vector<std::string> vars, FieldPtr field, MonomialOrder order) {
    if (vars.size() > kMaxVars)
        fail(ErrorCode::InvalidArgument, "too many variables (max " + std::to_string(kMaxVars) + ")");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) fail(ErrorCode::InvalidArgument, "duplicate variable " + vars[i]);
    auto r = std::shared_ptr<Ring>(new Ring());
    r->vars_ = std::move(vars);
    r->field_ = std::move(field);
    r->order_ = order;
    return r;
}

RingPtr Ring::make_indexed(const std::string& stem, int n, FieldPtr field, MonomialOrder order) {
    std::vector<std::string> vars;
    for (int i = 0; i < n; ++i) vars.push_back(stem + std::to_string(i));
    return make(std::move(vars), std::move(field), order);
}

int Ring::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return int(i);
    return -1;
}

RingPtr Ring::with_order(MonomialOrder order) const {
    return make(vars_, field_, order);
}

RingPtr Ring::with_field(FieldPtr field) const {
    return make(vars_, std::move(field), order_);
}

bool Ring::compatible(const Ring& o) const {
    return vars_ == o.vars_ && field_->same(*o.field_);
}

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void MultiPoly::normalize() {
    const auto& F = ring_->field();
    const auto& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff = F->add(out.back().coeff, t.coeff);
        else
            out.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : out)
        if (!F->is_zero(t.coeff)) terms_.push_back(std::move(t));
}

MultiPoly MultiPoly::constant(RingPtr ring, const FieldElem& c) {
    if (ring->field()->is_zero(c)) return MultiPoly(std::move(ring));
    Monomial m = Monomial::one(ring->nvars());
    return MultiPoly(ring, {Term{m, c}});
}

MultiPoly MultiPoly::var(RingPtr ring, int i, int power) {
    Monomial m = Monomial::var(ring->nvars(), i, power);
    return MultiPoly(ring, {Term{m, ring->field()->one()}});
}

MultiPoly MultiPoly::term(RingPtr ring, const FieldElem& c, const Monomial& m) {
    if (ring->field()->is_zero(c)) return MultiPoly(std::move(ring));
    return MultiPoly(ring, {Term{m, c}});
}

const Monomial& MultiPoly::leading_monomial() const {
    if (is_zero()) fail(ErrorCode::InvalidArgument, "leading monomial of zero");
    return terms_.front().mono;
}

const FieldElem& MultiPoly::leading_coeff() const {
    if (is_zero()) fail(ErrorCode::InvalidArgument, "leading coefficient of zero");
    return terms_.front().coeff;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(t.mono.deg));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    for (const auto& t : terms_)
        if (t.mono.deg != terms_[0].mono.deg) return false;
    return true;
}

namespace {
void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (a.ring() != b.ring() && !(a.ring()->compatible(*b.ring()) && a.ring()->order() == b.ring()->order()))
        fail(ErrorCode::RingMismatch, "operands live in different rings");
}
} // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_ring(*this, o);
    const auto& F = ring_->field();
    const auto& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) out.push_back(terms_[i++]);
        else if (c < 0) out.push_back(o.terms_[j++]);
        else {
            FieldElem s = F->add(terms_[i].coeff, o.terms_[j].coeff);
            if (!F->is_zero(s)) out.push_back(Term{terms_[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    while (i < terms_.size()) out.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    MultiPoly r(ring_);
    r.terms_ = std::move(out);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    const auto& F = ring_->field();
    for (auto& t : r.terms_) t.coeff = F->neg(t.coeff);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::mul_term(const FieldElem& c, const Monomial& m) const {
    const auto& F = ring_->field();
    if (F->is_zero(c)) return MultiPoly(ring_);
    MultiPoly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        FieldElem cc = F->mul(t.coeff, c);
        if (!F->is_zero(cc)) r.terms_.push_back(Term{t.mono * m, std::move(cc)});
    }
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_ring(*this, o);
    const auto& F = ring_->field();
    // accumulate into a map keyed by monomial in descending order
    const auto& ord = ring_->order();
    auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.cmp(a, b) > 0; };
    std::map<Monomial, FieldElem, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            FieldElem c = F->mul(a.coeff, b.coeff);
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(m, std::move(c));
            else it->second = F->add(it->second, c);
        }
    MultiPoly r(ring_);
    for (auto& [m, c] : acc)
        if (!F->is_zero(c)) r.terms_.push_back(Term{m, std::move(c)});
    return r;
}

MultiPoly MultiPoly::scale(const FieldElem& c) const {
    const auto& F = ring_->field();
    if (F->is_zero(c)) return MultiPoly(ring_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = F->mul(t.coeff, c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) fail(ErrorCode::InvalidArgument, "negative power");
    MultiPoly r = constant(ring_, ring_->field()->one());
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scale(ring_->field()->inv(leading_coeff()));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images, const RingPtr& target) const {
    if (int(images.size()) != ring_->nvars())
        fail(ErrorCode::RingMismatch, "substitution image count mismatch");
    for (const auto& im : images)
        if (!im.ring()->compatible(*target))
            fail(ErrorCode::RingMismatch, "substitution image in wrong ring");
    const auto& F = target->field();
    MultiPoly acc(target);
    for (const auto& t : terms_) {
        MultiPoly term_val = MultiPoly::constant(target, F->embed(*ring_->field(), t.coeff));
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = t.mono.exp(i);
            if (e > 0) term_val = term_val * images[size_t(i)].pow(e);
        }
        acc = acc + term_val;
    }
    return acc;
}

FieldElem MultiPoly::evaluate(const std::vector<FieldElem>& point, const FieldPtr& pf) const {
    if (int(point.size()) != ring_->nvars())
        fail(ErrorCode::FieldMismatch, "coordinate count mismatch");
    FieldElem acc = pf->zero();
    for (const auto& t : terms_) {
        FieldElem v = pf->embed(*ring_->field(), t.coeff);
        for (int i = 0; i < ring_->nvars(); ++i)
            for (int k = 0; k < t.mono.exp(i); ++k) v = pf->mul(v, point[size_t(i)]);
        acc = pf->add(acc, v);
    }
    return acc;
}

FieldElem MultiPoly::evaluate(const std::vector<FieldElem>& point) const {
    return evaluate(point, ring_->field());
}

MultiPoly MultiPoly::derivative(int var) const {
    const auto& F = ring_->field();
    MultiPoly r(ring_);
    for (const auto& t : terms_) {
        int e = t.mono.exp(var);
        if (e == 0) continue;
        FieldElem c = F->mul(t.coeff, F->from_int(e));
        if (F->is_zero(c)) continue;
        Monomial m = t.mono;
        m.e[size_t(var)] = std::uint8_t(e - 1);
        m.deg = std::uint16_t(m.deg - 1);
        r.terms_.push_back(Term{m, std::move(c)});
    }
    r.normalize();
    return r;
}

MultiPoly MultiPoly::to_ring(const RingPtr& target) const {
    if (target->vars() != ring_->vars())
        fail(ErrorCode::RingMismatch, "to_ring requires identical variables");
    const auto& F = target->field();
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_)
        terms.push_back(Term{t.mono, F->embed(*ring_->field(), t.coeff)});
    return MultiPoly(target, std::move(terms));
}

std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    const auto& F = ring_->field();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = F->to_string(t.coeff);
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            if (neg) { os << "-"; c = c.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) c = c.substr(1);
        }
        first = false;
        bool unit = (c == "1");
        bool printed = false;
        if (!unit || t.mono.is_one()) {
            bool simple = c.find('+') == std::string::npos && c.find('-') == std::string::npos;
            os << (simple ? c : "(" + c + ")");
            printed = true;
        }
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = t.mono.exp(i);
            if (e == 0) continue;
            if (printed) os << "*";
            os << ring_->vars()[size_t(i)];
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    size_t i = 0;

    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool peek(char c) { skip(); return i < s.size() && s[i] == c; }
    bool eat(char c) { if (peek(c)) { ++i; return true; } return false; }

    MultiPoly parse_expr() {
        MultiPoly acc = parse_term(true);
        for (;;) {
            skip();
            if (eat('+')) acc = acc + parse_term(false);
            else if (eat('-')) acc = acc - parse_term(false);
            else break;
        }
        return acc;
    }

    MultiPoly parse_term(bool allow_leading_sign) {
        skip();
        bool neg = false;
        if (allow_leading_sign) {
            if (eat('-')) neg = true;
            else eat('+');
        }
        MultiPoly acc = parse_factor();
        for (;;) {
            skip();
            if (eat('*')) { acc = acc * parse_factor(); continue; }
            // implicit multiplication by juxtaposition
            if (i < s.size() && (std::isalpha((unsigned char)s[i]) || s[i] == '(' ||
                                 std::isdigit((unsigned char)s[i]))) {
                acc = acc * parse_factor();
                continue;
            }
            break;
        }
        return neg ? -acc : acc;
    }

    MultiPoly parse_factor() {
        skip();
        MultiPoly base = parse_atom();
        skip();
        if (eat('^')) {
            skip();
            int e = parse_int();
            return base.pow(e);
        }
        return base;
    }

    int parse_int() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (start == i) fail(ErrorCode::ParseError, "expected integer at position " + std::to_string(i));
        return std::stoi(s.substr(start, i - start));
    }

    MultiPoly parse_atom() {
        skip();
        if (i >= s.size()) fail(ErrorCode::ParseError, "unexpected end of input");
        if (eat('(')) {
            MultiPoly e = parse_expr();
            if (!eat(')')) fail(ErrorCode::ParseError, "missing ')'");
            return e;
        }
        if (std::isdigit((unsigned char)s[i])) {
            size_t start = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            std::string num = s.substr(start, i - start);
            skip();
            if (i < s.size() && s[i] == '/' && i + 1 < s.size() &&
                std::isdigit((unsigned char)s[i + 1])) {
                ++i;
                size_t ds = i;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
                std::string den = s.substr(ds, i - ds);
                FieldElem c = ring->field()->parse(num + "/" + den);
                return MultiPoly::constant(ring, c);
            }
            return MultiPoly::constant(ring, ring->field()->parse(num));
        }
        // variable name: letters then letters/digits/underscore
        if (std::isalpha((unsigned char)s[i]) || s[i] == '_') {
            size_t start = i;
            while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
            std::string name = s.substr(start, i - start);
            int vi = ring->var_index(name);
            if (vi < 0) fail(ErrorCode::ParseError, "unknown variable '" + name + "'");
            return MultiPoly::var(ring, vi);
        }
        fail(ErrorCode::ParseError, std::string("unexpected character '") + s[i] + "'");
    }
};

} // namespace

MultiPoly MultiPoly::parse(const RingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    MultiPoly r = p.parse_expr();
    p.skip();
    if (p.i != text.size())
        fail(ErrorCode::ParseError, "trailing input at position " + std::to_string(p.i));
    return r;
}

std::vector<std::vector<MultiPoly>> jacobian(const std::vector<MultiPoly>& polys) {
    std::vector<std::vector<MultiPoly>> out;
    for (const auto& f : polys) {
        std::vector<MultiPoly> row;
        for (int j = 0; j < f.ring()->nvars(); ++j) row.push_back(f.derivative(j));
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d) {
    std::vector<Monomial> out;
    int n = ring->nvars();
    Monomial m = Monomial::one(n);
    // recursive enumeration
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == n - 1) {
            m.e[size_t(var)] = std::uint8_t(rem);
            m.deg = std::uint16_t(d);
            out.push_back(m);
            m.e[size_t(var)] = 0;
            return;
        }
        for (int k = rem; k >= 0; --k) {
            m.e[size_t(var)] = std::uint8_t(k);
            rec(var + 1, rem - k);
        }
        m.e[size_t(var)] = 0;
    };
    if (n == 0) return out;
    rec(0, d);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ring->order().cmp(a, b) > 0; });
    return out;
}

} // namespace vlab
