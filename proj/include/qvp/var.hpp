#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qvp/error.hpp"

namespace qvp {

// Equivariant and solver variables. The kind order fixes the canonical
// variable order of the session: hbar < h < h1 < h2 < m < a_i < s_i < s0_i < s1_i.
enum class VarKind : std::uint8_t {
    hbar,  // -c1(q), the C*_q parameter
    h,     // spin-chain flavor parameter c1(t2)
    h1,    // c1(t1), Hilb/conifold
    h2,    // c1(t2), Hilb/conifold
    m,     // mass
    a,     // framing parameters a_1..a_N
    s,     // solver unknowns s_1..s_K
    s0,    // conifold white-node unknowns
    s1,    // conifold black-node unknowns
};

struct Var {
    VarKind kind{VarKind::hbar};
    std::int16_t index{0};  // 1-based for a/s/s0/s1, 0 otherwise

    friend auto operator<=>(const Var&, const Var&) = default;
};

inline Var hbar() { return {VarKind::hbar, 0}; }
inline Var var_h() { return {VarKind::h, 0}; }
inline Var var_h1() { return {VarKind::h1, 0}; }
inline Var var_h2() { return {VarKind::h2, 0}; }
inline Var var_m() { return {VarKind::m, 0}; }
inline Var var_a(int i) { return {VarKind::a, static_cast<std::int16_t>(i)}; }
inline Var var_s(int i) { return {VarKind::s, static_cast<std::int16_t>(i)}; }
inline Var var_s0(int i) { return {VarKind::s0, static_cast<std::int16_t>(i)}; }
inline Var var_s1(int i) { return {VarKind::s1, static_cast<std::int16_t>(i)}; }

inline std::string name(Var v) {
    switch (v.kind) {
        case VarKind::hbar: return "hbar";
        case VarKind::h: return "h";
        case VarKind::h1: return "h1";
        case VarKind::h2: return "h2";
        case VarKind::m: return "m";
        case VarKind::a: return "a" + std::to_string(v.index);
        case VarKind::s: return "s" + std::to_string(v.index);
        case VarKind::s0: return "s0_" + std::to_string(v.index);
        case VarKind::s1: return "s1_" + std::to_string(v.index);
    }
    throw Error("unreachable var kind");
}

// Permissive parser for the names produced by name(); used by CLI config echo
// and tests.
inline Var parse_var(const std::string& s) {
    if (s == "hbar") return hbar();
    if (s == "h") return var_h();
    if (s == "h1") return var_h1();
    if (s == "h2") return var_h2();
    if (s == "m") return var_m();
    auto tail_int = [](const std::string& t) { return static_cast<std::int16_t>(std::stoi(t)); };
    if (s.rfind("s0_", 0) == 0) return {VarKind::s0, tail_int(s.substr(3))};
    if (s.rfind("s1_", 0) == 0) return {VarKind::s1, tail_int(s.substr(3))};
    if (s.size() > 1 && s[0] == 'a') return {VarKind::a, tail_int(s.substr(1))};
    if (s.size() > 1 && s[0] == 's') return {VarKind::s, tail_int(s.substr(1))};
    throw Error("cannot parse variable name: " + s);
}

}  // namespace qvp
