#include "vlab/chow.hpp"

#include <functional>
#include <sstream>

#include "vlab/matrix.hpp"

namespace vlab {

int ChowAmbient::gen_index(const std::string& sym) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].first == sym) return int(i);
    return -1;
}

int ChowAmbient::monomial_degree(const std::vector<int>& expo) const {
    int d = 0;
    for (size_t i = 0; i < expo.size(); ++i) d += expo[i] * gens[i].second;
    return d;
}

long long ChowAmbient::eval_top(const std::vector<int>& expo) const {
    for (const auto& [g, p] : zero_rules)
        if (expo[size_t(g)] >= p) return 0;
    auto it = pairing.find(expo);
    if (it != pairing.end()) return it->second;
    std::string mono;
    for (size_t i = 0; i < expo.size(); ++i)
        if (expo[i] > 0)
            mono += gens[i].first + "^" + std::to_string(expo[i]) + " ";
    fail(ErrorCode::UncoveredMonomial, "pairing table gap at " + mono + "in " + name);
}

void ChowAmbient::check_complete() const {
    // enumerate all exponent vectors of top degree
    std::vector<int> expo(gens.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
        if (i + 1 == gens.size()) {
            int d = gens[i].second;
            if (remaining % d != 0) return;
            expo[i] = remaining / d;
            (void)eval_top(expo);
            return;
        }
        int d = gens[i].second;
        for (int e = 0; e * d <= remaining; ++e) {
            expo[i] = e;
            rec(i + 1, remaining - e * d);
        }
    };
    rec(0, top_degree);
}

namespace {

ChowAmbient make_gr13() {
    ChowAmbient a;
    a.name = "GR13";
    a.gens = {{"a", 2}, {"b", 2}};
    a.top_degree = 4;
    a.pairing[{2, 0}] = 1;
    a.pairing[{0, 2}] = 1;
    a.pairing[{1, 1}] = 0;
    return a;
}

ChowAmbient make_rank5() {
    ChowAmbient a;
    a.name = "RANK5";
    a.gens = {{"H", 1}, {"Hp", 1}};
    a.top_degree = 4;
    a.pairing[{4, 0}] = 2;
    a.pairing[{3, 1}] = 2;
    a.pairing[{2, 2}] = 2;
    a.pairing[{1, 3}] = 2;
    a.pairing[{0, 4}] = 0;
    return a;
}

ChowAmbient make_cone3() {
    ChowAmbient a;
    a.name = "CONE3";
    a.gens = {{"H", 1}, {"F1", 1}, {"F2", 1}};
    a.top_degree = 3;
    a.pairing[{3, 0, 0}] = 3;
    a.pairing[{1, 2, 0}] = -1;
    a.pairing[{1, 1, 1}] = 1;
    a.pairing[{2, 1, 0}] = 1;
    a.pairing[{2, 0, 1}] = 1;
    a.pairing[{1, 0, 2}] = 0;
    a.pairing[{0, 2, 1}] = 0;
    a.pairing[{0, 1, 2}] = 0;
    // triple products of pull-backs from the base surface vanish
    a.zero_rules = {{1, 3}, {2, 3}};
    return a;
}

ChowAmbient make_rank4() {
    ChowAmbient a;
    a.name = "RANK4";
    a.gens = {{"H", 1}, {"F1", 1}, {"F2", 1}};
    a.top_degree = 4;
    a.pairing[{4, 0, 0}] = 2;
    a.pairing[{3, 1, 0}] = 1;
    a.pairing[{3, 0, 1}] = 1;
    a.pairing[{2, 1, 1}] = 1;
    a.zero_rules = {{1, 2}, {2, 2}};
    return a;
}

ChowAmbient make_rank3() {
    ChowAmbient a;
    a.name = "RANK3";
    a.gens = {{"H", 1}, {"F", 1}};
    a.top_degree = 4;
    a.pairing[{4, 0}] = 2;
    a.pairing[{3, 1}] = 1;
    a.zero_rules = {{1, 2}};
    return a;
}

const std::vector<ChowAmbient>& builtins() {
    static const std::vector<ChowAmbient> all = [] {
        std::vector<ChowAmbient> v = {make_gr13(), make_rank5(), make_cone3(), make_rank4(),
                                      make_rank3()};
        for (const auto& a : v) a.check_complete();
        return v;
    }();
    return all;
}

} // namespace

const ChowAmbient& ChowAmbient::builtin(const std::string& name) {
    for (const auto& a : builtins())
        if (a.name == name) return a;
    fail(ErrorCode::InvalidArgument, "unknown ambient '" + name + "'");
}

std::vector<std::string> ChowAmbient::builtin_names() {
    std::vector<std::string> names;
    for (const auto& a : builtins()) names.push_back(a.name);
    return names;
}

// --------------------------------------------------------------------------
// classes

ChowClass ChowClass::zero(const ChowAmbient& a) {
    ChowClass c;
    c.amb = &a;
    return c;
}

ChowClass ChowClass::generator(const ChowAmbient& a, int i) {
    std::vector<int> e(a.gens.size(), 0);
    e[size_t(i)] = 1;
    return monomial(a, std::move(e));
}

ChowClass ChowClass::monomial(const ChowAmbient& a, std::vector<int> expo, long long c) {
    ChowClass r;
    r.amb = &a;
    if (c == 0) return r;
    r.degree = a.monomial_degree(expo);
    r.terms[std::move(expo)] = c;
    return r;
}

namespace {

void check_same_ambient(const ChowClass& x, const ChowClass& y) {
    if (x.amb != y.amb) fail(ErrorCode::InvalidArgument, "classes from different ambients");
}

ChowClass combine(const ChowClass& x, const ChowClass& y, long long sign) {
    check_same_ambient(x, y);
    if (x.degree >= 0 && y.degree >= 0 && x.degree != y.degree)
        fail(ErrorCode::DegreeMismatch, "sum of classes of different degrees");
    ChowClass r;
    r.amb = x.amb;
    r.terms = x.terms;
    for (const auto& [e, c] : y.terms) {
        r.terms[e] += sign * c;
        if (r.terms[e] == 0) r.terms.erase(e);
    }
    r.degree = r.terms.empty() ? -1 : std::max(x.degree, y.degree);
    return r;
}

} // namespace

ChowClass ChowClass::operator+(const ChowClass& o) const { return combine(*this, o, 1); }
ChowClass ChowClass::operator-(const ChowClass& o) const { return combine(*this, o, -1); }

ChowClass ChowClass::operator*(const ChowClass& o) const {
    check_same_ambient(*this, o);
    ChowClass r;
    r.amb = amb;
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            std::vector<int> e(e1.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.terms[e] += c1 * c2;
            if (r.terms[e] == 0) r.terms.erase(e);
        }
    r.degree = r.terms.empty() ? -1 : (degree < 0 || o.degree < 0 ? -1 : degree + o.degree);
    return r;
}

ChowClass ChowClass::scaled(long long c) const {
    ChowClass r;
    r.amb = amb;
    if (c == 0) return r;
    r.degree = degree;
    for (const auto& [e, v] : terms) r.terms[e] = c * v;
    return r;
}

bool ChowClass::operator==(const ChowClass& o) const {
    return amb == o.amb && terms == o.terms;
}

std::string ChowClass::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        long long mag = c >= 0 ? c : -c;
        bool any_gen = false;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) any_gen = true;
        if (mag != 1 || !any_gen) os << mag;
        bool star = mag != 1;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << amb->gens[i].first;
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
        first = false;
    }
    return os.str();
}

// --------------------------------------------------------------------------
// parsing

namespace {

struct ChowParser {
    const ChowAmbient& amb;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    ChowClass parse_expr() {
        skip();
        bool neg = eat('-');
        if (!neg) eat('+');
        ChowClass acc = parse_term();
        if (neg) acc = acc.scaled(-1);
        for (;;) {
            skip();
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    ChowClass parse_term() {
        ChowClass acc = parse_power();
        for (;;) {
            skip();
            if (eat('*')) { acc = acc * parse_power(); continue; }
            if (pos < s.size() &&
                (s[pos] == '(' || std::isalnum(static_cast<unsigned char>(s[pos])))) {
                acc = acc * parse_power();
                continue;
            }
            break;
        }
        return acc;
    }

    ChowClass parse_power() {
        ChowClass base = parse_atom();
        skip();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail(ErrorCode::ParseError, "exponent expected");
            int e = std::stoi(s.substr(start, pos - start));
            ChowClass acc = ChowClass::monomial(amb, std::vector<int>(amb.gens.size(), 0));
            for (int i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    ChowClass parse_atom() {
        skip();
        if (pos >= s.size()) fail(ErrorCode::ParseError, "unexpected end of expression");
        if (eat('(')) {
            ChowClass inner = parse_expr();
            if (!eat(')')) fail(ErrorCode::ParseError, "missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            long long v = std::stoll(s.substr(start, pos - start));
            return ChowClass::monomial(amb, std::vector<int>(amb.gens.size(), 0), v);
        }
        // longest generator symbol match
        int best = -1;
        size_t best_len = 0;
        for (size_t i = 0; i < amb.gens.size(); ++i) {
            const auto& sym = amb.gens[i].first;
            if (s.compare(pos, sym.size(), sym) == 0 && sym.size() > best_len) {
                best = int(i);
                best_len = sym.size();
            }
        }
        if (best < 0)
            fail(ErrorCode::ParseError,
                 "unknown symbol at '" + s.substr(pos, 8) + "' in " + amb.name);
        pos += best_len;
        return ChowClass::generator(amb, best);
    }
};

} // namespace

ChowClass ChowClass::parse(const ChowAmbient& a, const std::string& expr) {
    ChowParser p{a, expr};
    ChowClass c = p.parse_expr();
    p.skip();
    if (p.pos != expr.size())
        fail(ErrorCode::ParseError, "trailing input at '" + expr.substr(p.pos, 8) + "'");
    return c;
}

// --------------------------------------------------------------------------
// evaluation

long long chow_intersect(const ChowAmbient& a, const std::vector<ChowClass>& classes) {
    if (classes.empty()) fail(ErrorCode::InvalidArgument, "empty product");
    ChowClass prod = classes[0];
    for (size_t i = 1; i < classes.size(); ++i) prod = prod * classes[i];
    long long acc = 0;
    for (const auto& [e, c] : prod.terms) {
        if (a.monomial_degree(e) != a.top_degree)
            fail(ErrorCode::DegreeMismatch, "product degree is not the top degree");
        acc += c * a.eval_top(e);
    }
    return acc;
}

long long chow_evaluate(const ChowAmbient& a, const std::string& expr) {
    return chow_intersect(a, {ChowClass::parse(a, expr)});
}

// --------------------------------------------------------------------------
// ansatz solving

SolveResult solve_class(const ChowAmbient& a, const ChowAnsatz& ansatz,
                        const std::vector<ChowConstraint>& constraints) {
    size_t u = ansatz.unknowns.size(), m = constraints.size();
    FieldPtr Q = Field::rationals();
    Mat A(Q, m, u);
    std::vector<FieldElem> b;
    for (size_t i = 0; i < m; ++i) {
        std::vector<ChowClass> fixed = constraints[i].factors;
        fixed.push_back(ansatz.known);
        long long rhs = constraints[i].value - chow_intersect(a, fixed);
        for (size_t j = 0; j < u; ++j) {
            fixed.back() = ansatz.unknowns[j];
            A.at(i, j) = Q->from_int(chow_intersect(a, fixed));
        }
        b.push_back(Q->from_int(rhs));
    }
    auto sol = A.solve(b);
    if (!sol) return SolveResult{SolveStatus::NoSolution, {}, 0};
    size_t rank = A.rank();
    if (rank < u) return SolveResult{SolveStatus::NonUnique, {}, int(u - rank)};
    std::vector<long long> coeffs;
    for (const auto& c : *sol) {
        const mpq_class& q = c.as_rat();
        if (q.get_den() != 1) return SolveResult{SolveStatus::NoSolution, {}, 0};
        if (!q.get_num().fits_slong_p())
            fail(ErrorCode::InvalidArgument, "solution exceeds machine integers");
        coeffs.push_back(q.get_num().get_si());
    }
    return SolveResult{SolveStatus::Unique, std::move(coeffs), 0};
}

std::string chow_describe(const ChowAmbient& a) {
    std::ostringstream os;
    os << a.name << ": generators";
    for (const auto& [s, d] : a.gens) os << " " << s << "(deg " << d << ")";
    os << ", top degree " << a.top_degree << "\n";
    for (const auto& [e, v] : a.pairing) {
        os << "  ";
        bool any = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) os << "*";
            os << a.gens[i].first;
            if (e[i] > 1) os << "^" << e[i];
            any = true;
        }
        os << " = " << v << "\n";
    }
    for (const auto& [g, p] : a.zero_rules)
        os << "  " << a.gens[size_t(g)].first << "^" << p << " kills\n";
    return os.str();
}

} // namespace vlab
