// Acceptance gate: one test case per criterion, one summary line each.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "vlab/scenario.hpp"

using namespace vlab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Run one scenario over several seeds; all replicates must pass.
Outcome run_seeds(const std::string& id, int nseeds, int trials = 100) {
    Outcome out;
    for (int s = 0; s < nseeds; ++s) {
        ScenarioConfig cfg;
        cfg.id = id;
        cfg.seed = std::uint64_t(s);
        cfg.trials = trials;
        try {
            auto rep = run_scenario(cfg);
            if (!rep.pass) {
                out.pass = false;
                for (const auto& c : rep.checks)
                    if (!c.pass)
                        out.detail += " seed" + std::to_string(s) + ":" + c.name + "=" +
                                      c.actual.dump();
            }
        } catch (const Error& e) {
            out.pass = false;
            out.detail += " seed" + std::to_string(s) + ":" + e.what();
        }
    }
    return out;
}

void verdict(int n, const std::string& what, const Outcome& o) {
    std::cout << "criterion " << n << ": " << what << " ... " << (o.pass ? "PASS" : "FAIL")
              << o.detail << "\n";
    CHECK(o.pass);
}

} // namespace

TEST_CASE("criterion 1: same-class congruence pairs meet in length 10 (5 seeds)") {
    verdict(1, "same-class congruence pairs meet in length 10", run_seeds("S1", 5));
}

TEST_CASE("criterion 2: dual-class pairs meet in length 6 (5 seeds)") {
    verdict(2, "dual-class congruence pairs meet in length 6", run_seeds("S2", 5));
}

TEST_CASE("criterion 3: rank-5 hypothesis is vacuous; pencil pair gives length 8 (5 seeds)") {
    verdict(3, "rank-5 certificate and singular-pencil pair of length 8", run_seeds("S3", 5));
}

TEST_CASE("criterion 4: rank-4 pair avoiding the singular line gives length 8 (5 seeds)") {
    verdict(4, "rank-4 pair avoiding the singular line gives length 8", run_seeds("S4", 5));
}

TEST_CASE("criterion 5: vertex-sharing pair: 9 = 3 local + 6 reduced residual (5 seeds)") {
    verdict(5, "vertex-sharing pair splits 9 = 3 + 6", run_seeds("S5", 5));
}

TEST_CASE("criterion 6: plane pullbacks have h1 = 0 at degree 4 for all d") {
    verdict(6, "plane-pullback Hilbert values match deg W for d in {1,2,3,5,6,8,9,10}",
            run_seeds("S6", 1));
}

TEST_CASE("criterion 7: symmetroid nodes, web dimension, Gale certificates (3 seeds)") {
    verdict(7, "10 symmetroid nodes Gale-match two Veronese realizations", run_seeds("S7", 3));
}

TEST_CASE("criterion 8: quartics with 10 prescribed nodes exist behind the intersection (3 seeds)") {
    verdict(8, "Gale-inverse points carry a 10-nodal quartic", run_seeds("S8", 3));
}

TEST_CASE("criterion 9: fixed-point pairs meet in exactly m points, m in {1,2,3,5} (5 seeds)") {
    verdict(9, "fixed-point pairs meet in exactly m points", run_seeds("S9", 5));
}

TEST_CASE("criterion 10: 100 mixed trials never exceed length 10, and attain it") {
    verdict(10, "randomized length histogram bounded by 10 with 10 attained",
            run_seeds("S10", 1, 100));
}

TEST_CASE("criterion 11: the full symbolic intersection-table suite holds") {
    verdict(11, "all pairing-table assertions and class solves", run_seeds("S11", 1));
}

TEST_CASE("criterion 12: property suites (basis reduction, Hilbert oracle, Gale, field fuzz)") {
    Outcome o;
    auto F = Field::prime(32003);

    // Groebner: every S-polynomial of the Veronese basis reduces to zero.
    auto R6 = p5_ring(F);
    Ideal V = veronese_ideal(ProjectiveTransform::identity(F, 6), R6);
    const auto& basis = V.groebner();
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) {
                o.pass = false;
                o.detail += " spoly(" + std::to_string(i) + "," + std::to_string(j) + ")";
            }

    // Hilbert oracle agreement through degree 8 on a mixed ideal.
    auto R3 = Ring::make_indexed("x", 3, F);
    Ideal I(R3, {MultiPoly::parse(R3, "x0^2-x1*x2"), MultiPoly::parse(R3, "x1^3")});
    for (int d = 0; d <= 8; ++d) {
        auto monos = monomials_of_degree(R3, d);
        std::vector<std::vector<FieldElem>> rows;
        for (const auto& g : I.generators()) {
            int gd = g.total_degree();
            if (gd > d) continue;
            for (const auto& m : monomials_of_degree(R3, d - gd)) {
                MultiPoly prod = g.mul_term(F->one(), m);
                std::vector<FieldElem> row(monos.size(), F->zero());
                for (const auto& t : prod.terms())
                    for (size_t k = 0; k < monos.size(); ++k)
                        if (monos[k] == t.mono) { row[k] = t.coeff; break; }
                rows.push_back(row);
            }
        }
        int oracle = rows.empty() ? int(monos.size())
                                  : int(monos.size() - Mat::from_rows(F, rows).rank());
        if (hilbert_function(I, d) != oracle) {
            o.pass = false;
            o.detail += " hilbert(d=" + std::to_string(d) + ")";
        }
    }

    // Gale double transform returns a projectively equivalent configuration.
    Rng rng(99);
    Mat A(F, 10, 4);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 4; ++j) A.at(i, j) = F->random(rng);
    PointConfiguration cfg(A);
    auto g2 = gale_transform(gale_transform(cfg).points);
    if (!gale_certificate(gale_transform(cfg).points, cfg, 1).has_value() ||
        g2.points.count() != 10 || g2.points.ambient_dim() != 3) {
        o.pass = false;
        o.detail += " gale";
    }

    // Field axiom fuzz, >= 1000 cases.
    for (int i = 0; i < 1000; ++i) {
        FieldElem a = F->random(rng), b = F->random(rng), c = F->random(rng);
        bool ok = F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)) &&
                  F->add(a, b) == F->add(b, a) && F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c));
        if (!ok) {
            o.pass = false;
            o.detail += " field-axiom";
            break;
        }
    }

    verdict(12, "basis reduction, Hilbert oracle, Gale duality, field axioms", o);
}
