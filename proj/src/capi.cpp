#include "veronese_lab.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "vlab/chow.hpp"
#include "vlab/scenario.hpp"

using namespace vlab;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

vl_status status_of(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return VL_ERR_PARSE;
        case ErrorCode::InvalidArgument: return VL_ERR_INVALID_ARGUMENT;
        case ErrorCode::NotZeroDimensional: return VL_ERR_NOT_ZERO_DIMENSIONAL;
        case ErrorCode::DegreeCapExceeded: return VL_ERR_DEGREE_CAP;
        case ErrorCode::ExtensionCapExceeded: return VL_ERR_EXTENSION_CAP;
        case ErrorCode::RetriesExhausted: return VL_ERR_RETRIES_EXHAUSTED;
        default: return VL_ERR_DOMAIN;
    }
}

template <typename Fn>
vl_status guarded(Fn&& fn) {
    try {
        fn();
        return VL_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return VL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return VL_ERR_INTERNAL;
    }
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// "t^4+3*t^2+1" over F_p, dense c0..ck.
std::vector<std::uint64_t> parse_modulus(const std::string& text, std::uint64_t p) {
    std::vector<std::pair<int, std::uint64_t>> terms;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    size_t i = 0;
    int maxdeg = 0;
    while (i < s.size()) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
        }
        std::uint64_t coeff = 1;
        bool saw_digit = false;
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + std::uint64_t(s[i] - '0');
            saw_digit = true;
            ++i;
        }
        if (saw_digit) coeff = v % p;
        if (i < s.size() && s[i] == '*') ++i;
        int deg = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                deg = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    deg = deg * 10 + (s[i] - '0');
                    ++i;
                }
            }
        } else if (!saw_digit) {
            fail(ErrorCode::ParseError, "bad modulus term in: " + text);
        }
        if (neg) coeff = (p - coeff % p) % p;
        terms.emplace_back(deg, coeff);
        maxdeg = std::max(maxdeg, deg);
    }
    if (maxdeg < 1) fail(ErrorCode::ParseError, "modulus must have degree >= 1");
    std::vector<std::uint64_t> mod(size_t(maxdeg) + 1, 0);
    for (auto& [d, c] : terms) mod[size_t(d)] = (mod[size_t(d)] + c) % p;
    return mod;
}

FieldPtr parse_field_spec(const std::string& spec) {
    if (spec == "QQ") return Field::rationals();
    if (spec.size() > 3 && spec.rfind("F(", 0) == 0 && spec.back() == ')') {
        std::string inner = spec.substr(2, spec.size() - 3);
        size_t semi = inner.find(';');
        if (semi == std::string::npos) {
            return Field::prime(std::stoull(strip(inner)));
        }
        std::string head = strip(inner.substr(0, semi));
        size_t caret = head.find('^');
        if (caret == std::string::npos)
            fail(ErrorCode::ParseError, "extension spec needs p^k: " + spec);
        std::uint64_t p = std::stoull(head.substr(0, caret));
        return Field::extension(p, parse_modulus(inner.substr(semi + 1), p));
    }
    fail(ErrorCode::ParseError, "unrecognized field: " + spec);
}

std::vector<std::string> parse_var_spec(const std::string& spec) {
    size_t dots = spec.find("..");
    if (dots != std::string::npos) {
        std::string lo = strip(spec.substr(0, dots)), hi = strip(spec.substr(dots + 2));
        size_t stem_len = 0;
        while (stem_len < lo.size() && !std::isdigit(static_cast<unsigned char>(lo[stem_len])))
            ++stem_len;
        std::string stem = lo.substr(0, stem_len);
        if (stem_len == 0 || stem_len >= lo.size() || hi.rfind(stem, 0) != 0)
            fail(ErrorCode::ParseError, "bad variable range: " + spec);
        int a = std::stoi(lo.substr(stem_len));
        int b = std::stoi(hi.substr(stem_len));
        if (b < a) fail(ErrorCode::ParseError, "bad variable range: " + spec);
        std::vector<std::string> vars;
        for (int i = a; i <= b; ++i) vars.push_back(stem + std::to_string(i));
        return vars;
    }
    std::vector<std::string> vars;
    std::string cur;
    for (char c : spec + ",") {
        if (c == ',') {
            std::string v = strip(cur);
            if (!v.empty()) vars.push_back(v);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (vars.empty()) fail(ErrorCode::ParseError, "no variables in: " + spec);
    return vars;
}

Ideal parse_ideal_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    RingPtr ring;
    std::vector<MultiPoly> gens;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (!ring) {
            if (s.rfind("ring ", 0) != 0)
                fail(ErrorCode::ParseError, "expected header `ring <vars> over <field>`");
            size_t over = s.rfind(" over ");
            if (over == std::string::npos)
                fail(ErrorCode::ParseError, "header missing ` over `: " + s);
            auto vars = parse_var_spec(strip(s.substr(5, over - 5)));
            auto F = parse_field_spec(strip(s.substr(over + 6)));
            ring = Ring::make(vars, F);
            continue;
        }
        gens.push_back(MultiPoly::parse(ring, s));
    }
    if (!ring) fail(ErrorCode::ParseError, "empty input: no ring header");
    return Ideal(ring, gens, /*require_homogeneous=*/false);
}

std::string print_basis(const RingPtr& ring, const std::vector<MultiPoly>& polys) {
    std::string out = "ring ";
    const auto& vars = ring->vars();
    for (size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + vars[i];
    out += " over " + ring->field()->name() + "\n";
    for (const auto& g : polys) out += g.to_string() + "\n";
    return out;
}

} // namespace

struct vl_ideal {
    Ideal ideal;
};

extern "C" {

const char* vl_last_error(void) { return g_last_error.c_str(); }

void vl_string_free(char* s) { std::free(s); }

vl_status vl_ideal_parse(const char* text, vl_ideal** out) {
    return guarded([&] {
        if (!text || !out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = new vl_ideal{parse_ideal_text(text)};
    });
}

void vl_ideal_free(vl_ideal* I) { delete I; }

vl_status vl_ideal_groebner(const vl_ideal* I, const char* order, char** out) {
    return guarded([&] {
        if (!I || !out) fail(ErrorCode::InvalidArgument, "null argument");
        MonomialOrder ord = order && *order ? MonomialOrder::parse(order)
                                            : MonomialOrder::grevlex();
        const auto& basis = I->ideal.groebner(ord);
        *out = dup_string(print_basis(I->ideal.ring()->with_order(ord), basis));
    });
}

vl_status vl_ideal_dimension(const vl_ideal* I, int* out) {
    return guarded([&] {
        if (!I || !out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = dimension(I->ideal);
    });
}

vl_status vl_ideal_degree(const vl_ideal* I, int* out) {
    return guarded([&] {
        if (!I || !out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = degree_0dim(I->ideal);
    });
}

vl_status vl_chow_eval(const char* ambient, const char* expr, long long* out) {
    return guarded([&] {
        if (!ambient || !expr || !out) fail(ErrorCode::InvalidArgument, "null argument");
        *out = chow_evaluate(ChowAmbient::builtin(ambient), expr);
    });
}

vl_status vl_chow_list(char** out) {
    return guarded([&] {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        std::string s;
        for (const auto& name : ChowAmbient::builtin_names())
            s += chow_describe(ChowAmbient::builtin(name)) + "\n";
        *out = dup_string(s);
    });
}

vl_status vl_scenario_ids(char** out) {
    return guarded([&] {
        if (!out) fail(ErrorCode::InvalidArgument, "null argument");
        std::string s;
        for (const auto& id : scenario_ids()) s += id + "\n";
        *out = dup_string(s);
    });
}

vl_status vl_run_scenario(const char* id, unsigned long long p, unsigned long long seed,
                          int retry_budget, int degree_cap, int ext_cap, int trials,
                          int include_timings, char** json_out, int* pass_out) {
    return guarded([&] {
        if (!id || !json_out || !pass_out) fail(ErrorCode::InvalidArgument, "null argument");
        ScenarioConfig cfg;
        cfg.id = id;
        cfg.seed = seed;
        if (p) cfg.p = p;
        if (retry_budget) cfg.retry_budget = retry_budget;
        if (degree_cap) cfg.degree_cap = degree_cap;
        if (ext_cap) cfg.ext_cap = ext_cap;
        if (trials) cfg.trials = trials;
        auto rep = run_scenario(cfg);
        *json_out = dup_string(rep.to_json(include_timings != 0).dump(2));
        *pass_out = rep.pass ? 1 : 0;
    });
}

} // extern "C"
