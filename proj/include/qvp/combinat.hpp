#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qvp/character.hpp"
#include "qvp/ktheory.hpp"

namespace qvp {

// ---------------------------------------------------------------------------
// Fixed-point shapes

// Downward-closed finite subset of N^3, kept sorted.
using PlanePartition = std::vector<std::array<int, 3>>;

inline bool is_downward_closed(const PlanePartition& pp) {
    auto has = [&](std::array<int, 3> b) { return std::binary_search(pp.begin(), pp.end(), b); };
    for (auto b : pp)
        for (int axis = 0; axis < 3; ++axis) {
            if (b[axis] == 0) continue;
            auto c = b;
            c[axis] -= 1;
            if (!has(c)) return false;
        }
    return true;
}

namespace detail {

// weakly decreasing rows, each bounded by the previous row
inline void pp_rows(const std::vector<int>& prev, int remaining, std::vector<std::vector<int>>& rows,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    if (remaining == 0) {
        emit(rows);
        return;
    }
    // enumerate the next row
    std::vector<int> row;
    std::function<void(int, int)> grow = [&](int pos, int budget) {
        if (!row.empty()) {
            rows.push_back(row);
            pp_rows(row, budget, rows, emit);
            rows.pop_back();
        }
        if (pos >= static_cast<int>(prev.size()) || budget == 0) return;
        int cap = std::min(prev[static_cast<std::size_t>(pos)], budget);
        if (pos > 0) cap = std::min(cap, row[static_cast<std::size_t>(pos) - 1]);
        for (int v = cap; v >= 1; --v) {
            row.push_back(v);
            grow(pos + 1, budget - v);
            row.pop_back();
        }
    };
    grow(0, remaining);
}

}  // namespace detail

// All plane partitions of size n, in a deterministic order.
inline std::vector<PlanePartition> enum_plane_partitions(int n) {
    std::vector<PlanePartition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<std::vector<int>> rows;
    std::vector<int> top(static_cast<std::size_t>(n), n);  // unconstrained first row
    detail::pp_rows(top, n, rows, [&](const std::vector<std::vector<int>>& rs) {
        PlanePartition pp;
        for (int i = 0; i < static_cast<int>(rs.size()); ++i)
            for (int j = 0; j < static_cast<int>(rs[static_cast<std::size_t>(i)].size()); ++j)
                for (int k = 0; k < rs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; ++k)
                    pp.push_back({i, j, k});
        std::sort(pp.begin(), pp.end());
        out.push_back(std::move(pp));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Stone of the length-m pyramid arrangement. Blacks sit on odd layers
// 2(p+q)+1 with depth p+q <= c <= m-1; whites on even layers 2(p+q)+2 with
// p+q+1 <= c <= m-1.
struct PyramidStone {
    bool black = true;
    int p = 0, q = 0, c = 0;

    int layer() const { return 2 * (p + q) + (black ? 1 : 2); }
    friend auto operator<=>(const PyramidStone&, const PyramidStone&) = default;
};

struct PyramidPartition {
    int m = 1;
    std::vector<PyramidStone> stones;  // sorted by (layer, p, q, c)
};

inline bool pyramid_order(const PyramidStone& a, const PyramidStone& b) {
    return std::tuple{a.layer(), a.p, a.q, a.c} < std::tuple{b.layer(), b.p, b.q, b.c};
}

// The full length-m arrangement, topologically sorted (parents first).
inline std::vector<PyramidStone> pyramid_arrangement(int m) {
    std::vector<PyramidStone> all;
    for (int j = 0; j <= m - 1; ++j)
        for (int p = 0; p <= j; ++p)
            for (int c = j; c <= m - 1; ++c) all.push_back({true, p, j - p, c});
    for (int j = 1; j <= m - 1; ++j)
        for (int p = 0; p <= j - 1; ++p)
            for (int c = j; c <= m - 1; ++c) all.push_back({false, p, j - 1 - p, c});
    std::sort(all.begin(), all.end(), pyramid_order);
    return all;
}

// Stones directly above s (the closure generators of Def-7.1 type order).
inline std::vector<PyramidStone> pyramid_parents(const PyramidStone& s) {
    std::vector<PyramidStone> out;
    if (s.black) {
        if (s.p > 0) out.push_back({false, s.p - 1, s.q, s.c});
        if (s.q > 0) out.push_back({false, s.p, s.q - 1, s.c});
    } else {
        out.push_back({true, s.p, s.q, s.c});
        out.push_back({true, s.p, s.q, s.c - 1});
    }
    return out;
}

inline bool pyramid_closed(const std::vector<PyramidStone>& subset) {
    auto has = [&](const PyramidStone& s) { return std::find(subset.begin(), subset.end(), s) != subset.end(); };
    for (const auto& s : subset)
        for (const auto& par : pyramid_parents(s))
            if (!has(par)) return false;
    return true;
}

// All finite-type pyramid partitions of length m with v0 white and v1 black
// stones, deterministic order.
inline std::vector<PyramidPartition> enum_pyramid_partitions(int m, int v0, int v1) {
    std::vector<PyramidPartition> out;
    if (m < 1 || v0 < 0 || v1 < 0) return out;
    std::vector<PyramidStone> all = pyramid_arrangement(m);
    std::vector<PyramidStone> chosen;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t idx, int nw, int nb) {
        if (nw > v0 || nb > v1) return;
        if (idx == all.size()) {
            if (nw == v0 && nb == v1) out.push_back({m, chosen});
            return;
        }
        const PyramidStone& s = all[idx];
        // include if all parents are already in
        bool ok = true;
        for (const auto& par : pyramid_parents(s))
            if (std::find(chosen.begin(), chosen.end(), par) == chosen.end()) ok = false;
        if (ok) {
            chosen.push_back(s);
            rec(idx + 1, nw + (s.black ? 0 : 1), nb + (s.black ? 1 : 0));
            chosen.pop_back();
        }
        rec(idx + 1, nw, nb);
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end(), [](const PyramidPartition& a, const PyramidPartition& b) {
        return std::lexicographical_compare(a.stones.begin(), a.stones.end(), b.stones.begin(), b.stones.end());
    });
    return out;
}

// Column heights (k_1..k_N) with 0 <= k_i <= k and sum n.
using SpinChainState = std::vector<int>;

inline std::vector<SpinChainState> enum_spinchain_states(int N, int n, int k) {
    std::vector<SpinChainState> out;
    if (N < 0 || n < 0 || k < 0) return out;
    SpinChainState cur(static_cast<std::size_t>(N), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == N) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int v = std::min(k, left); v >= 0; --v) {
            cur[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
        cur[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, n);
    return out;
}

// ---------------------------------------------------------------------------
// Stones

// One weight-space generator of the tautological bundle at a fixed point:
// flavor character chi, the sigma-pairing <sigma,.> = sigma_R(chi), and the
// generator-predecessor edges with their arrow weights.
struct Stone {
    int id = 0;
    int node = 0;
    Character chi;
    int pairing = 0;
    std::vector<std::pair<int, Character>> preds;  // (stone id, arrow flavor weight)
    std::string label;
};

namespace detail {

inline void check_stone_weights(const std::vector<Stone>& stones) {
    for (const auto& s : stones)
        for (const auto& [pid, w] : s.preds)
            if (!(s.chi == stones[static_cast<std::size_t>(pid)].chi * w.inverse())) throw InconsistentWeights();
}

}  // namespace detail

// Hilb: box (i1,i2,i3) has chi = t1^-i1 t2^-i2 t3^-i3 and predecessors the
// three coordinate decrements, with arrow weights t1,t2,t3.
inline std::vector<Stone> build_stones(const PlanePartition& pp, const RChargeData& r) {
    std::vector<Stone> stones;
    auto index_of = [&](std::array<int, 3> b) {
        auto it = std::lower_bound(pp.begin(), pp.end(), b);
        return static_cast<int>(it - pp.begin());
    };
    for (int i = 0; i < static_cast<int>(pp.size()); ++i) {
        const auto& b = pp[static_cast<std::size_t>(i)];
        Stone s;
        s.id = i;
        s.node = 0;
        s.chi = Character(0, {-b[0], -b[1], -b[2]});
        s.pairing = r.pairing(s.chi);
        for (int axis = 0; axis < 3; ++axis) {
            if (b[static_cast<std::size_t>(axis)] == 0) continue;
            auto c = b;
            c[static_cast<std::size_t>(axis)] -= 1;
            s.preds.emplace_back(index_of(c), Character::basis(3, axis));
        }
        std::ostringstream os;
        os << "(" << b[0] << "," << b[1] << "," << b[2] << ")";
        s.label = os.str();
        stones.push_back(std::move(s));
    }
    detail::check_stone_weights(stones);
    return stones;
}

// Conifold: stone weight = path product of arrow weights from the framing
// (top black j carries t3^j); chi is the inverse weight. Node 0 is the white
// node V0, node 1 the black node V1.
inline std::vector<Stone> build_stones(const PyramidPartition& pp, const RChargeData& r) {
    std::vector<Stone> stones;
    auto index_of = [&](const PyramidStone& t) {
        for (std::size_t i = 0; i < pp.stones.size(); ++i)
            if (pp.stones[i] == t) return static_cast<int>(i);
        throw Error("pyramid stone not found");
    };
    for (int i = 0; i < static_cast<int>(pp.stones.size()); ++i) {
        const auto& st = pp.stones[static_cast<std::size_t>(i)];
        Stone s;
        s.id = i;
        s.node = st.black ? 1 : 0;
        s.chi = Character(0, {-st.p, -st.q, -st.c});
        s.pairing = r.pairing(s.chi);
        if (st.black) {
            if (st.p > 0) s.preds.emplace_back(index_of({false, st.p - 1, st.q, st.c}), Character::basis(3, 0));
            if (st.q > 0) s.preds.emplace_back(index_of({false, st.p, st.q - 1, st.c}), Character::basis(3, 1));
        } else {
            s.preds.emplace_back(index_of({true, st.p, st.q, st.c}), Character::trivial(3));
            s.preds.emplace_back(index_of({true, st.p, st.q, st.c - 1}), Character::basis(3, 2));
        }
        std::ostringstream os;
        os << (st.black ? "b" : "w") << "(" << st.p << "," << st.q << "," << st.c << ")";
        s.label = os.str();
        stones.push_back(std::move(s));
    }
    detail::check_stone_weights(stones);
    return stones;
}

// Spin chain: box (i,h), h >= 0, has chi = e^{a_i} t1^-1 t2^-h and predecessor
// (i,h-1) along the loop arrow of weight t2. Flavor basis (t1, t2, a_1..a_N).
inline std::vector<Stone> build_stones(const SpinChainState& state, const RChargeData& r) {
    int N = static_cast<int>(state.size());
    int basis = 2 + N;
    std::vector<Stone> stones;
    for (int i = 0; i < N; ++i) {
        for (int h = 0; h < state[static_cast<std::size_t>(i)]; ++h) {
            Stone s;
            s.id = static_cast<int>(stones.size());
            s.node = 0;
            s.chi = Character::basis(basis, 2 + i) * Character::basis(basis, 0, -1) * Character::basis(basis, 1, -h);
            s.pairing = r.pairing(s.chi);
            if (h > 0) s.preds.emplace_back(s.id - 1, Character::basis(basis, 1));
            std::ostringstream os;
            os << "(" << i + 1 << "," << h << ")";
            s.label = os.str();
            stones.push_back(std::move(s));
        }
    }
    detail::check_stone_weights(stones);
    return stones;
}

// ---------------------------------------------------------------------------
// Degree assignments

// z_stone >= 0 with z_target >= z_source along every generator edge;
// d_stone = z_stone + <sigma,stone>.
struct DegreeAssignment {
    std::vector<int> z;
    std::vector<int> d;

    int total() const {
        int t = 0;
        for (int x : d) t += x;
        return t;
    }
};

inline int min_degree(const std::vector<Stone>& stones) {
    int t = 0;
    for (const auto& s : stones) t += s.pairing;
    return t;
}

// All monotone assignments with total degree exactly totalDegree. Stones must
// be listed with predecessors before successors (build_stones guarantees it).
inline std::vector<DegreeAssignment> enum_degree_assignments(const std::vector<Stone>& stones, int totalDegree) {
    std::vector<DegreeAssignment> out;
    int base = min_degree(stones);
    if (totalDegree < base) return out;
    int budget = totalDegree - base;  // total of all z values
    std::vector<int> z(stones.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
        if (idx == stones.size()) {
            if (left == 0) {
                DegreeAssignment da;
                da.z = z;
                for (std::size_t i = 0; i < stones.size(); ++i)
                    da.d.push_back(z[i] + stones[i].pairing);
                out.push_back(std::move(da));
            }
            return;
        }
        int lb = 0;
        for (const auto& [pid, w] : stones[idx].preds) lb = std::max(lb, z[static_cast<std::size_t>(pid)]);
        for (int v = lb; v <= left; ++v) {
            z[idx] = v;
            rec(idx + 1, left - v);
        }
        z[idx] = 0;
    };
    rec(0, budget);
    return out;
}

}  // namespace qvp
