#include "vlab/ideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "vlab/rng.hpp"
#include "vlab/unipoly.hpp"

namespace vlab {

// --------------------------------------------------------------------------
// division / normal form

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
    const RingPtr& ring = f.ring();
    const FieldPtr& F = ring->field();
    MultiPoly work = f;
    std::vector<Term> result;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        const MultiPoly* red = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.leading_monomial().divides(lm)) { red = &g; break; }
        }
        if (red) {
            FieldElem c = F->div(work.leading_coeff(), red->leading_coeff());
            work = work - red->mul_term(c, lm / red->leading_monomial());
        } else {
            result.push_back(work.terms().front());
            work = work - MultiPoly::term(ring, work.terms().front().coeff, lm);
        }
    }
    return MultiPoly(ring, std::move(result));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    const RingPtr& ring = f.ring();
    const FieldPtr& F = ring->field();
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    MultiPoly a = f.mul_term(F->inv(f.leading_coeff()), l / f.leading_monomial());
    MultiPoly b = g.mul_term(F->inv(g.leading_coeff()), l / g.leading_monomial());
    return a - b;
}

// --------------------------------------------------------------------------
// Buchberger with Gebauer-Moeller pruning and sugar selection

namespace {

struct Pair {
    size_t i, j;
    Monomial lcm;
    int sugar;
};

int mono_deg(const Monomial& m) { return m.deg; }

struct GBState {
    RingPtr ring;
    std::vector<MultiPoly> basis;
    std::vector<int> sugar;
    std::vector<Pair> pairs;

    void add_poly(const MultiPoly& h, int s) {
        size_t t = basis.size();
        // new candidate pairs (i, t)
        std::vector<Pair> cand;
        for (size_t i = 0; i < t; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_monomial(), h.leading_monomial());
            int sg = std::max(sugar[i] + mono_deg(l) - mono_deg(basis[i].leading_monomial()),
                              s + mono_deg(l) - mono_deg(h.leading_monomial()));
            cand.push_back(Pair{i, t, l, sg});
        }
        // M criterion: drop a candidate whose lcm is properly divided by
        // another candidate's lcm
        std::vector<bool> dead(cand.size(), false);
        for (size_t a = 0; a < cand.size(); ++a) {
            if (dead[a]) continue;
            for (size_t b = 0; b < cand.size(); ++b) {
                if (a == b || dead[b]) continue;
                if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm) {
                    dead[a] = true;
                    break;
                }
            }
        }
        // F criterion: among equal lcms keep one; B (product) criterion: if
        // any group member has coprime leads, drop the whole group
        for (size_t a = 0; a < cand.size(); ++a) {
            if (dead[a]) continue;
            bool coprime_in_group =
                basis[cand[a].i].leading_monomial().coprime(h.leading_monomial());
            for (size_t b = a + 1; b < cand.size(); ++b) {
                if (dead[b] || cand[b].lcm != cand[a].lcm) continue;
                if (basis[cand[b].i].leading_monomial().coprime(h.leading_monomial()))
                    coprime_in_group = true;
                dead[b] = true;
            }
            if (coprime_in_group) dead[a] = true;
        }
        // prune old pairs dominated by the newcomer
        std::vector<Pair> kept;
        for (const auto& p : pairs) {
            Monomial l_it = Monomial::lcm(basis[p.i].leading_monomial(), h.leading_monomial());
            Monomial l_jt = Monomial::lcm(basis[p.j].leading_monomial(), h.leading_monomial());
            if (h.leading_monomial().divides(p.lcm) && l_it != p.lcm && l_jt != p.lcm) continue;
            kept.push_back(p);
        }
        pairs = std::move(kept);
        for (size_t a = 0; a < cand.size(); ++a)
            if (!dead[a]) pairs.push_back(cand[a]);
        basis.push_back(h);
        sugar.push_back(s);
    }

    size_t select_pair() const {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const Pair& a = pairs[k];
            const Pair& b = pairs[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = k;
            } else if (ring->order().cmp(a.lcm, b.lcm) < 0) {
                best = k;
            }
        }
        return best;
    }
};

std::vector<MultiPoly> interreduce(const RingPtr& ring, std::vector<MultiPoly> g) {
    const FieldPtr& F = ring->field();
    // drop elements whose lead is divisible by another's lead
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            if (g[j].leading_monomial().divides(g[i].leading_monomial())) {
                if (g[j].leading_monomial() == g[i].leading_monomial() && j > i) continue;
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // tail-reduce each element against the others
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(normal_form(minimal[i], others).scale(
            F->inv(minimal[i].leading_coeff())));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ring->order().cmp(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
}

} // namespace

std::vector<MultiPoly> buchberger(const RingPtr& ring, std::vector<MultiPoly> gens) {
    GBState st;
    st.ring = ring;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        MultiPoly r = normal_form(g, st.basis);
        if (!r.is_zero()) st.add_poly(r.monic(), r.total_degree());
    }
    while (!st.pairs.empty()) {
        size_t k = st.select_pair();
        Pair p = st.pairs[k];
        st.pairs.erase(st.pairs.begin() + long(k));
        MultiPoly sp = s_polynomial(st.basis[p.i], st.basis[p.j]);
        MultiPoly r = normal_form(sp, st.basis);
        if (!r.is_zero()) st.add_poly(r.monic(), p.sugar);
    }
    return interreduce(ring, st.basis);
}

// --------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> gens, bool require_homogeneous)
    : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != ring_) {
            if (!g.ring()->compatible(*ring_))
                fail(ErrorCode::RingMismatch, "generator in wrong ring");
            g = g.to_ring(ring_);
        }
        gens_.push_back(std::move(g));
    }
    homogeneous_ = true;
    for (const auto& g : gens_)
        if (!g.is_homogeneous()) homogeneous_ = false;
    if (require_homogeneous && !homogeneous_)
        fail(ErrorCode::InvalidArgument, "ideal declared homogeneous has inhomogeneous generator");
}

const std::vector<MultiPoly>& Ideal::groebner() const { return groebner(ring_->order()); }

const std::vector<MultiPoly>& Ideal::groebner(const MonomialOrder& order) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto key = std::make_pair(int(order.kind), order.block);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
    RingPtr r = (order == ring_->order()) ? ring_ : ring_->with_order(order);
    std::vector<MultiPoly> gens;
    for (const auto& g : gens_) gens.push_back(order == ring_->order() ? g : g.to_ring(r));
    auto basis = buchberger(r, std::move(gens));
    auto [ins, ok] = cache_->bases.emplace(key, std::move(basis));
    return ins->second;
}

Ideal Ideal::to_ring(const RingPtr& target) const {
    std::vector<MultiPoly> gens;
    for (const auto& g : gens_) gens.push_back(g.to_ring(target));
    return Ideal(target, std::move(gens), false);
}

bool ideal_contains(const Ideal& I, const MultiPoly& f) {
    MultiPoly g = f.ring() == I.ring() ? f : f.to_ring(I.ring());
    return normal_form(g, I.groebner()).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    for (const auto& g : J.generators())
        if (!ideal_contains(I, g)) return false;
    for (const auto& g : I.generators())
        if (!ideal_contains(J, g)) return false;
    return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    if (!I.ring()->compatible(*J.ring()))
        fail(ErrorCode::RingMismatch, "ideal sum across different rings");
    std::vector<MultiPoly> gens = I.generators();
    for (const auto& g : J.generators()) gens.push_back(g.to_ring(I.ring()));
    return Ideal(I.ring(), std::move(gens), false);
}

Ideal eliminate(const Ideal& I, int k) {
    const auto& ord = I.ring()->order();
    if (!(ord.kind == OrderKind::Lex || (ord.kind == OrderKind::Block && ord.block == k)))
        fail(ErrorCode::OrderUnsuitable, "eliminate requires lex or block(" + std::to_string(k) + ") order");
    const auto& basis = I.groebner(ord);
    int n = I.ring()->nvars();
    std::vector<std::string> rest(I.ring()->vars().begin() + k, I.ring()->vars().end());
    RingPtr sub = Ring::make(rest, I.ring()->field(), MonomialOrder::grevlex());
    std::vector<MultiPoly> out;
    for (const auto& g : basis) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (int i = 0; i < k && pure; ++i)
                if (t.mono.exp(i) > 0) pure = false;
        if (!pure) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Monomial m = Monomial::one(n - k);
            int d = 0;
            for (int i = k; i < n; ++i) {
                m.e[size_t(i - k)] = std::uint8_t(t.mono.exp(i));
                d += t.mono.exp(i);
            }
            m.deg = std::uint16_t(d);
            terms.push_back(Term{m, t.coeff});
        }
        out.push_back(MultiPoly(sub, std::move(terms)));
    }
    return Ideal(sub, std::move(out), false);
}

Ideal intersect_ideals(const Ideal& I, const Ideal& J) {
    if (!I.ring()->compatible(*J.ring()))
        fail(ErrorCode::RingMismatch, "intersection across different rings");
    const RingPtr& R = I.ring();
    std::vector<std::string> vars;
    vars.push_back("@t");
    for (const auto& v : R->vars()) vars.push_back(v);
    RingPtr ext = Ring::make(vars, R->field(), MonomialOrder::block_elim(1));
    int n = R->nvars();
    // images x_i -> x_i (shifted by one)
    std::vector<MultiPoly> images;
    for (int i = 0; i < n; ++i) images.push_back(MultiPoly::var(ext, i + 1));
    MultiPoly t = MultiPoly::var(ext, 0);
    MultiPoly one = MultiPoly::constant(ext, ext->field()->one());
    std::vector<MultiPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(t * g.substitute(images, ext));
    for (const auto& g : J.generators())
        gens.push_back((one - t) * g.to_ring(R).substitute(images, ext));
    Ideal big(ext, std::move(gens), false);
    Ideal elim = eliminate(big, 1);
    // move back to R
    std::vector<MultiPoly> out;
    for (const auto& g : elim.generators()) {
        std::vector<MultiPoly> back;
        for (int i = 0; i < n; ++i) back.push_back(MultiPoly::var(R, i));
        out.push_back(g.substitute(back, R));
    }
    return Ideal(R, std::move(out), false);
}

namespace {

// exact division f / d (d must divide f; checked)
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& d) {
    const RingPtr& ring = f.ring();
    const FieldPtr& F = ring->field();
    MultiPoly work = f;
    MultiPoly quo(ring);
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        if (!d.leading_monomial().divides(lm))
            fail(ErrorCode::InvalidArgument, "inexact polynomial division");
        FieldElem c = F->div(work.leading_coeff(), d.leading_coeff());
        Monomial q = lm / d.leading_monomial();
        quo = quo + MultiPoly::term(ring, c, q);
        work = work - d.mul_term(c, q);
    }
    return quo;
}

Ideal principal(const RingPtr& ring, const MultiPoly& f) {
    return Ideal(ring, {f}, false);
}

Ideal quotient_single(const Ideal& I, const MultiPoly& f) {
    if (f.is_zero()) fail(ErrorCode::InvalidArgument, "colon by zero");
    Ideal inter = intersect_ideals(I, principal(I.ring(), f.to_ring(I.ring())));
    std::vector<MultiPoly> out;
    for (const auto& g : inter.generators())
        out.push_back(divide_exact(g, f.to_ring(I.ring())));
    if (out.empty()) out.push_back(MultiPoly::zero(I.ring()));
    return Ideal(I.ring(), std::move(out), false);
}

// Saturation with respect to the variable x_i of a homogeneous ideal, via
// the grevlex trick: with x_i cheapest, dividing every reduced-basis element
// by its maximal x_i power generates (I : x_i^inf).
Ideal saturate_variable(const Ideal& I, int var) {
    const RingPtr& R = I.ring();
    int n = R->nvars();
    // permute variables so that `var` is last
    std::vector<int> perm; // perm[new] = old
    for (int i = 0; i < n; ++i)
        if (i != var) perm.push_back(i);
    perm.push_back(var);
    std::vector<int> inv(size_t(n), 0);
    for (int i = 0; i < n; ++i) inv[size_t(perm[size_t(i)])] = i;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(R->vars()[size_t(perm[size_t(i)])]);
    RingPtr P = Ring::make(names, R->field(), MonomialOrder::grevlex());
    std::vector<MultiPoly> to_p;
    for (int i = 0; i < n; ++i) to_p.push_back(MultiPoly::var(P, inv[size_t(i)]));
    std::vector<MultiPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(g.substitute(to_p, P));
    auto basis = buchberger(P, std::move(gens));
    std::vector<MultiPoly> sat;
    for (const auto& g : basis) {
        int minexp = INT32_MAX;
        for (const auto& t : g.terms()) minexp = std::min(minexp, t.mono.exp(n - 1));
        MultiPoly h = g;
        if (minexp > 0) {
            Monomial d = Monomial::var(n, n - 1, minexp);
            std::vector<Term> terms;
            for (const auto& t : g.terms()) terms.push_back(Term{t.mono / d, t.coeff});
            h = MultiPoly(P, std::move(terms));
        }
        sat.push_back(h);
    }
    // back to R
    std::vector<MultiPoly> back;
    for (int i = 0; i < n; ++i) back.push_back(MultiPoly::var(R, perm[size_t(i)]));
    std::vector<MultiPoly> out;
    for (const auto& g : sat) out.push_back(g.substitute(back, R));
    return Ideal(R, std::move(out), false);
}

Ideal saturate_single(const Ideal& I, const MultiPoly& f) {
    // fast path: f is a single variable of a homogeneous ideal
    if (I.is_homogeneous() && f.nterms() == 1 && f.terms()[0].mono.deg == 1) {
        for (int i = 0; i < I.ring()->nvars(); ++i)
            if (f.terms()[0].mono.exp(i) == 1) return saturate_variable(I, i);
    }
    Ideal cur = I;
    for (;;) {
        Ideal nxt = quotient_single(cur, f);
        if (ideal_equal(nxt, cur)) return cur;
        cur = nxt;
    }
}

} // namespace

Ideal quotient(const Ideal& I, const Ideal& J) {
    if (J.generators().empty()) fail(ErrorCode::InvalidArgument, "colon by zero ideal");
    std::optional<Ideal> acc;
    for (const auto& f : J.generators()) {
        Ideal q = quotient_single(I, f);
        acc = acc ? intersect_ideals(*acc, q) : q;
    }
    return *acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    if (J.generators().empty()) fail(ErrorCode::InvalidArgument, "saturate by zero ideal");
    std::optional<Ideal> acc;
    for (const auto& f : J.generators()) {
        Ideal s = saturate_single(I, f);
        acc = acc ? intersect_ideals(*acc, s) : s;
    }
    return *acc;
}

Ideal irrelevant_ideal(const RingPtr& ring) {
    std::vector<MultiPoly> gens;
    for (int i = 0; i < ring->nvars(); ++i) gens.push_back(MultiPoly::var(ring, i));
    return Ideal(ring, std::move(gens));
}

// --------------------------------------------------------------------------
// Hilbert data

int hilbert_function(const Ideal& I, int d) {
    if (!I.is_homogeneous())
        fail(ErrorCode::InvalidArgument, "Hilbert function needs a homogeneous ideal");
    const auto& basis = I.groebner(MonomialOrder::grevlex());
    std::vector<Monomial> leads;
    for (const auto& g : basis) leads.push_back(g.leading_monomial());
    RingPtr grev = I.ring()->order() == MonomialOrder::grevlex()
                       ? I.ring()
                       : I.ring()->with_order(MonomialOrder::grevlex());
    int count = 0;
    for (const auto& m : monomials_of_degree(grev, d)) {
        bool standard = true;
        for (const auto& l : leads)
            if (l.divides(m)) { standard = false; break; }
        if (standard) ++count;
    }
    return count;
}

namespace {

// Hilbert values 0..cap, then repeated finite differences until a stable
// all-zero tail appears.  Returns (dimension, degree).
std::pair<int, int> hilbert_stabilize(const Ideal& I, int cap) {
    std::vector<long long> h;
    for (int d = 0; d <= cap; ++d) h.push_back(hilbert_function(I, d));
    const int tail = 3;
    std::vector<long long> cur = h;
    for (int level = 0;; ++level) {
        if (int(cur.size()) < tail + 1)
            fail(ErrorCode::DegreeCapExceeded,
                 "Hilbert function did not stabilize below the degree cap");
        bool zero_tail = true;
        for (int i = 0; i < tail; ++i)
            if (cur[cur.size() - 1 - size_t(i)] != 0) zero_tail = false;
        if (zero_tail) {
            if (level == 0) return {-1, 0};
            // degree = stabilized value one difference level up
            // reconstruct: the (level-1)-th difference tail value
            std::vector<long long> prev = h;
            for (int l = 0; l < level - 1; ++l) {
                std::vector<long long> nxt;
                for (size_t i = 1; i < prev.size(); ++i) nxt.push_back(prev[i] - prev[i - 1]);
                prev = nxt;
            }
            return {level - 1, int(prev.back())};
        }
        std::vector<long long> nxt;
        for (size_t i = 1; i < cur.size(); ++i) nxt.push_back(cur[i] - cur[i - 1]);
        cur = nxt;
    }
}

} // namespace

int dimension(const Ideal& I, int degree_cap) {
    return hilbert_stabilize(I, degree_cap).first;
}

int degree_0dim(const Ideal& I, int degree_cap) {
    auto [dim, deg] = hilbert_stabilize(I, degree_cap);
    if (dim > 0)
        fail(ErrorCode::NotZeroDimensional,
             "ideal has projective dimension " + std::to_string(dim));
    if (dim < 0) return 0;
    return deg;
}

// --------------------------------------------------------------------------
// splitting a zero-dimensional scheme into points

namespace {

struct AffineAlgebra {
    RingPtr ring;                   // affine ring, n variables
    std::vector<Monomial> basis;    // standard monomials
    std::vector<Mat> mul;           // multiplication matrix per variable
};

// quotient-algebra data of a zero-dimensional affine ideal; nullopt if the
// quotient is not finite-dimensional or has unexpected dimension
std::optional<AffineAlgebra> affine_algebra(const RingPtr& aring,
                                            const std::vector<MultiPoly>& gens, int expect_dim) {
    auto gb = buchberger(aring, gens);
    for (const auto& g : gb)
        if (g.total_degree() == 0) return std::nullopt; // unit ideal
    int n = aring->nvars();
    // bound per variable from pure-power leads
    std::vector<int> bound(size_t(n), -1);
    for (const auto& g : gb) {
        const Monomial& l = g.leading_monomial();
        int nz = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i)
            if (l.exp(i) > 0) {
                if (nz >= 0) { pure = false; break; }
                nz = i;
            }
        if (pure && nz >= 0)
            bound[size_t(nz)] = bound[size_t(nz)] < 0 ? l.exp(nz)
                                                      : std::min(bound[size_t(nz)], l.exp(nz));
    }
    for (int i = 0; i < n; ++i)
        if (bound[size_t(i)] < 0) return std::nullopt; // not finite over the chart
    // enumerate standard monomials below the bounds
    std::vector<Monomial> std_monos;
    std::function<void(int, Monomial)> rec = [&](int var, Monomial m) {
        if (var == n) {
            for (const auto& g : gb)
                if (g.leading_monomial().divides(m)) return;
            std_monos.push_back(m);
            return;
        }
        for (int e = 0; e < bound[size_t(var)]; ++e) {
            Monomial mm = m;
            mm.e[size_t(var)] = std::uint8_t(e);
            mm.deg = std::uint16_t(mm.deg + e);
            rec(var + 1, mm);
        }
    };
    rec(0, Monomial::one(n));
    if (int(std_monos.size()) != expect_dim) return std::nullopt;
    std::sort(std_monos.begin(), std_monos.end(), [&](const Monomial& a, const Monomial& b) {
        return aring->order().cmp(a, b) < 0;
    });
    auto index_of = [&](const Monomial& m) -> int {
        for (size_t i = 0; i < std_monos.size(); ++i)
            if (std_monos[i] == m) return int(i);
        return -1;
    };
    const FieldPtr& F = aring->field();
    size_t d = std_monos.size();
    AffineAlgebra alg{aring, std_monos, {}};
    for (int v = 0; v < n; ++v) {
        Mat M(F, d, d);
        for (size_t col = 0; col < d; ++col) {
            MultiPoly prod = MultiPoly::term(aring, F->one(), std_monos[col] * Monomial::var(n, v));
            MultiPoly nf = normal_form(prod, gb);
            for (const auto& t : nf.terms()) {
                int row = index_of(t.mono);
                if (row < 0) return std::nullopt;
                M.at(size_t(row), col) = t.coeff;
            }
        }
        alg.mul.push_back(std::move(M));
    }
    return alg;
}

} // namespace

SplitResult split_points(const Ideal& I, std::uint64_t seed, int ext_cap, int degree_cap) {
    const RingPtr& R = I.ring();
    const FieldPtr& F = R->field();
    if (F->kind() != Field::Kind::Prime)
        fail(ErrorCode::InvalidArgument, "split_points expects a prime-field ideal");
    int dim = dimension(I, degree_cap);
    if (dim > 0) fail(ErrorCode::NotZeroDimensional, "split_points needs a 0-dimensional scheme");
    int d = dim < 0 ? 0 : degree_0dim(I, degree_cap);
    if (d == 0) return SplitResult{F, {}};

    int n = R->nvars() - 1; // affine chart dimension
    Rng rng(seed ^ 0x5eedb0b5ull);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Rng r = rng.split(std::uint64_t(attempt));
        // random coordinate change x = T y, then dehomogenize y_0 = 1
        Mat T(F, size_t(n) + 1, size_t(n) + 1);
        for (size_t i = 0; i <= size_t(n); ++i)
            for (size_t j = 0; j <= size_t(n); ++j) T.at(i, j) = F->random(r);
        auto Tinv = T.inverse();
        if (!Tinv) continue;
        RingPtr aring = Ring::make(
            std::vector<std::string>(R->vars().begin() + 1, R->vars().end()), F,
            MonomialOrder::grevlex());
        // substitution x_i -> row i of T applied to (1, y_1..y_n)
        std::vector<MultiPoly> images;
        for (int i = 0; i <= n; ++i) {
            MultiPoly img = MultiPoly::constant(aring, T.at(size_t(i), 0));
            for (int j = 1; j <= n; ++j)
                img = img + MultiPoly::var(aring, j - 1).scale(T.at(size_t(i), size_t(j)));
            images.push_back(img);
        }
        std::vector<MultiPoly> agens;
        for (const auto& g : I.generators()) agens.push_back(g.substitute(images, aring));
        auto alg = affine_algebra(aring, agens, d);
        if (!alg) continue; // points at infinity for this chart; re-draw

        // generic linear form and its multiplication operator
        Mat Mt(F, size_t(d), size_t(d));
        for (int v = 0; v < n; ++v) {
            FieldElem c = F->random(r);
            Mt = Mt + alg->mul[size_t(v)].scale(c);
        }
        UniPoly chi = Mt.charpoly();
        auto factors = factor_univariate(chi, r.next());
        long long lcm_deg = 1;
        for (const auto& [f, m] : factors)
            lcm_deg = std::lcm(lcm_deg, (long long)f.degree());
        if (lcm_deg > ext_cap)
            fail(ErrorCode::ExtensionCapExceeded,
                 "splitting field degree " + std::to_string(lcm_deg) + " exceeds cap " +
                     std::to_string(ext_cap));
        FieldPtr E;
        if (lcm_deg == 1) {
            E = F;
        } else {
            UniPoly mod = random_irreducible(F->characteristic(), int(lcm_deg), seed ^ 0xe87ull);
            std::vector<std::uint64_t> mc;
            for (const auto& c : mod.coeffs()) mc.push_back(c.as_prime());
            E = Field::extension(F->characteristic(), mc);
        }
        Mat MtE = Mt.map_field(E);
        std::vector<Mat> mulE;
        for (const auto& M : alg->mul) mulE.push_back(M.map_field(E));

        std::vector<SplitPoint> pts;
        bool good = true;
        int total_mult = 0;
        for (const auto& [f, mult] : factors) {
            UniPoly fe = lift_to(f, E);
            auto roots = poly_roots(fe, seed ^ 0x5007ull);
            if (int(roots.size()) != f.degree()) { good = false; break; }
            for (const auto& [tau, rm] : roots) {
                (void)rm;
                // generalized eigenspace of Mt at tau
                Mat A = MtE;
                for (size_t i = 0; i < size_t(d); ++i) A.at(i, i) = E->sub(A.at(i, i), tau);
                Mat Apow = Mat::identity(E, size_t(d));
                for (int k = 0; k < mult; ++k) Apow = Apow * A;
                auto ker = Apow.kernel();
                if (int(ker.size()) != mult) { good = false; break; }
                size_t m = ker.size();
                // basis matrix d x m
                Mat B(E, size_t(d), m);
                for (size_t j = 0; j < m; ++j)
                    for (size_t i = 0; i < size_t(d); ++i) B.at(i, j) = ker[j][i];
                // affine coordinates: trace of each restricted multiplication
                std::vector<FieldElem> affine;
                for (int v = 0; v < n; ++v) {
                    Mat Y = mulE[size_t(v)] * B;
                    // solve B C = Y; rref of [B | Y], top m rows give C
                    Mat aug(E, size_t(d), m + m);
                    for (size_t i = 0; i < size_t(d); ++i) {
                        for (size_t j = 0; j < m; ++j) aug.at(i, j) = B.at(i, j);
                        for (size_t j = 0; j < m; ++j) aug.at(i, m + j) = Y.at(i, j);
                    }
                    auto piv = aug.rref();
                    if (piv.size() != m || piv.back() >= m) { good = false; break; }
                    FieldElem tr = E->zero();
                    for (size_t j = 0; j < m; ++j) tr = E->add(tr, aug.at(j, m + j));
                    affine.push_back(E->div(tr, E->from_int((long long)m)));
                }
                if (!good) break;
                // homogenize and undo the coordinate change: x = T (1, y)
                std::vector<FieldElem> y;
                y.push_back(E->one());
                for (const auto& c : affine) y.push_back(c);
                Mat TE = T.map_field(E);
                std::vector<FieldElem> x = TE.apply(y);
                // normalize first nonzero coordinate to 1
                size_t pivot = x.size();
                for (size_t i = 0; i < x.size(); ++i)
                    if (!E->is_zero(x[i])) { pivot = i; break; }
                if (pivot == x.size()) { good = false; break; }
                FieldElem inv = E->inv(x[pivot]);
                for (auto& c : x) c = E->mul(c, inv);
                // verify on all generators
                for (const auto& g : I.generators())
                    if (!E->is_zero(g.evaluate(x, E))) { good = false; break; }
                if (!good) break;
                pts.push_back(SplitPoint{std::move(x), mult});
                total_mult += mult;
            }
            if (!good) break;
        }
        if (!good || total_mult != d) continue;
        std::sort(pts.begin(), pts.end(), [&](const SplitPoint& a, const SplitPoint& b) {
            for (size_t i = 0; i < a.coords.size(); ++i) {
                std::string sa = E->to_string(a.coords[i]);
                std::string sb = E->to_string(b.coords[i]);
                if (sa != sb) return sa < sb;
            }
            return false;
        });
        return SplitResult{E, std::move(pts)};
    }
    fail(ErrorCode::ShapePositionFailure, "no usable chart/eliminant found in 16 attempts");
}

Ideal point_ideal(const RingPtr& ring, const std::vector<FieldElem>& point) {
    const FieldPtr& F = ring->field();
    size_t n = point.size();
    if (int(n) != ring->nvars()) fail(ErrorCode::InvalidArgument, "coordinate count mismatch");
    size_t pivot = n;
    for (size_t i = 0; i < n; ++i)
        if (!F->is_zero(point[i])) { pivot = i; break; }
    if (pivot == n) fail(ErrorCode::InvalidArgument, "zero vector is not a projective point");
    FieldElem inv = F->inv(point[pivot]);
    std::vector<MultiPoly> gens;
    for (size_t i = 0; i < n; ++i) {
        if (i == pivot) continue;
        // x_i - (P_i/P_pivot) x_pivot
        MultiPoly g = MultiPoly::var(ring, int(i)) -
                      MultiPoly::var(ring, int(pivot)).scale(F->mul(point[i], inv));
        gens.push_back(g);
    }
    return Ideal(ring, std::move(gens));
}

int local_length(const Ideal& I, const std::vector<FieldElem>& point,
                 const FieldPtr& point_field, int degree_cap) {
    RingPtr ringE = I.ring()->field()->same(*point_field)
                        ? I.ring()
                        : I.ring()->with_field(point_field);
    Ideal IE = ringE == I.ring() ? I : I.to_ring(ringE);
    for (const auto& g : IE.generators())
        if (!point_field->is_zero(g.evaluate(point, point_field)))
            fail(ErrorCode::PointNotOnScheme, "point does not lie on the scheme");
    int total = degree_0dim(IE, degree_cap);
    Ideal mp = point_ideal(ringE, point);
    Ideal residual = saturate(IE, mp);
    int rest = degree_0dim(residual, degree_cap);
    return total - rest;
}

} // namespace vlab
