#ifndef VLAB_CHOW_HPP
#define VLAB_CHOW_HPP

#include <map>
#include <string>
#include <vector>

#include "vlab/error.hpp"

namespace vlab {

// Presented intersection ring: generators with degrees, a top-degree pairing
// table, and zero-rules of the form "any monomial with gen^power vanishes".
// Monomials are exponent vectors over the generators.
struct ChowAmbient {
    std::string name;
    std::vector<std::pair<std::string, int>> gens;
    int top_degree = 0;
    std::map<std::vector<int>, long long> pairing;
    std::vector<std::pair<int, int>> zero_rules; // (generator index, min power)

    int ngens() const { return int(gens.size()); }
    int gen_index(const std::string& sym) const; // -1 if absent
    int monomial_degree(const std::vector<int>& expo) const;
    // Value of a top-degree monomial; errors UncoveredMonomial if the table
    // has a gap (construction bug, checked for builtins at startup).
    long long eval_top(const std::vector<int>& expo) const;
    // Every top-degree monomial is covered by the table or a zero-rule.
    void check_complete() const;

    static const ChowAmbient& builtin(const std::string& name);
    static std::vector<std::string> builtin_names();
};

// Formal integer combination of monomials in the generators, homogeneous of
// one degree (degree -1 for the zero class).
struct ChowClass {
    const ChowAmbient* amb = nullptr;
    int degree = -1;
    std::map<std::vector<int>, long long> terms;

    static ChowClass zero(const ChowAmbient& a);
    static ChowClass generator(const ChowAmbient& a, int i);
    static ChowClass monomial(const ChowAmbient& a, std::vector<int> expo, long long c = 1);

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator*(const ChowClass& o) const;
    ChowClass scaled(long long c) const;
    bool operator==(const ChowClass& o) const;
    std::string to_string() const;

    // Integer polynomial expression in the ambient's generator symbols:
    // +, -, *, ^, parentheses, implicit products like 3a.
    static ChowClass parse(const ChowAmbient& a, const std::string& expr);
};

// Product of the classes evaluated against the pairing table; degrees must
// sum to the top degree.
long long chow_intersect(const ChowAmbient& a, const std::vector<ChowClass>& classes);

// Evaluate a (possibly inhomogeneous) parsed expression: every monomial must
// have top degree.
long long chow_evaluate(const ChowAmbient& a, const std::string& expr);

// --- linear ansatz solving ------------------------------------------------

// class = known + sum_i a_i * unknowns[i], with integer unknowns a_i.
struct ChowAnsatz {
    ChowClass known;
    std::vector<ChowClass> unknowns;
};

// product(ansatz, factors) must equal value.
struct ChowConstraint {
    std::vector<ChowClass> factors;
    long long value = 0;
};

enum class SolveStatus { Unique, NoSolution, NonUnique };

struct SolveResult {
    SolveStatus status = SolveStatus::NoSolution;
    std::vector<long long> coeffs; // meaningful when Unique
    int solution_dim = 0;          // meaningful when NonUnique
};

SolveResult solve_class(const ChowAmbient& a, const ChowAnsatz& ansatz,
                        const std::vector<ChowConstraint>& constraints);

// Table listing for the CLI.
std::string chow_describe(const ChowAmbient& a);

} // namespace vlab

#endif
