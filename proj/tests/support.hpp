#pragma once

// Shared helpers for the test binaries: fixture access, seeded random instance
// generators, and brute-force oracles that work on plain bit vectors so they share
// no code with the library checks they are compared against.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "softsets/io.hpp"

namespace testing_support {

using namespace softsets;

inline std::string fixture_path(const std::string& rel) { return std::string(FIXTURE_DIR) + "/" + rel; }

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Document fixture(const std::string& rel) { return load_document(fixture_path(rel)); }

template <class T>
const T& body(const Document& d) {
    return std::get<T>(d.body);
}

inline std::set<std::string> names_of(const Universe& u, const Subset& s) {
    auto v = u.names(s);
    return {v.begin(), v.end()};
}

// ---- random generation ----

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::vector<std::string> labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

inline Subset random_subset(Rng& rng, std::size_t n, double p = 0.5) {
    Subset s;
    for (std::size_t i = 0; i < n; ++i)
        if (coin(rng, p)) s.insert(i);
    return s;
}

inline SoftSet random_soft(Rng& rng, const Universe& u, const std::vector<std::string>& params,
                           double p = 0.5) {
    SoftSet s{u, {}};
    for (const auto& a : params) s.values[a] = random_subset(rng, u.size(), p);
    return s;
}

// ---- bit-vector representation used by the oracles ----

using Bits = std::vector<bool>;            // one flag per object
using SoftBits = std::vector<Bits>;        // one row per parameter, in a fixed order

inline Bits to_bits(const Subset& s, std::size_t n) {
    Bits b(n, false);
    for (auto i : s) b[i] = true;
    return b;
}

inline Subset from_bits(const Bits& b) {
    Subset s;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i]) s.insert(i);
    return s;
}

inline SoftBits to_soft_bits(const SoftSet& s, const std::vector<std::string>& params) {
    SoftBits out;
    for (const auto& a : params) out.push_back(to_bits(s.values.at(a), s.universe.size()));
    return out;
}

// ---- oracles ----

struct RoughOracle {
    Bits lower;
    Bits upper;
};

inline RoughOracle rough_oracle(const SoftBits& blocks, const Bits& target) {
    std::size_t n = target.size();
    RoughOracle r{Bits(n, false), Bits(n, false)};
    for (std::size_t u = 0; u < n; ++u) {
        for (const auto& block : blocks) {
            if (!block[u]) continue;
            bool inside = true, meets = false;
            for (std::size_t x = 0; x < n; ++x) {
                if (block[x] && !target[x]) inside = false;
                if (block[x] && target[x]) meets = true;
            }
            if (inside) r.lower[u] = true;
            if (meets) r.upper[u] = true;
        }
    }
    return r;
}

inline SoftBits meet(const SoftBits& a, const SoftBits& b) {
    SoftBits out = a;
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t x = 0; x < a[p].size(); ++x) out[p][x] = a[p][x] && b[p][x];
    return out;
}

inline SoftBits join(const SoftBits& a, const SoftBits& b) {
    SoftBits out = a;
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t x = 0; x < a[p].size(); ++x) out[p][x] = a[p][x] || b[p][x];
    return out;
}

inline SoftBits filled(std::size_t params, std::size_t n, bool value) {
    return SoftBits(params, Bits(n, value));
}

inline bool contains(const std::vector<SoftBits>& family, const SoftBits& s) {
    return std::find(family.begin(), family.end(), s) != family.end();
}

inline bool topology_oracle(const std::vector<SoftBits>& family, std::size_t params, std::size_t n) {
    if (!contains(family, filled(params, n, false)) || !contains(family, filled(params, n, true))) return false;
    for (const auto& a : family)
        for (const auto& b : family)
            if (!contains(family, meet(a, b))) return false;
    std::size_t k = family.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        SoftBits acc = filled(params, n, false);
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) acc = join(acc, family[i]);
        if (!contains(family, acc)) return false;
    }
    return true;
}

inline bool algebra_oracle(const std::vector<SoftBits>& family, std::size_t params, std::size_t n) {
    if (!contains(family, filled(params, n, false))) return false;
    for (const auto& a : family) {
        SoftBits c = a;
        for (auto& row : c) row.flip();
        if (!contains(family, c)) return false;
    }
    std::size_t k = family.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        SoftBits acc = filled(params, n, false);
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) acc = join(acc, family[i]);
        if (!contains(family, acc)) return false;
    }
    return true;
}

// Matroid members as sets of soft-point indices.
inline bool matroid_oracle(const std::vector<std::set<std::size_t>>& members) {
    std::set<std::set<std::size_t>> fam(members.begin(), members.end());
    if (!fam.count({})) return false;
    for (const auto& g : fam) {
        std::vector<std::size_t> pts(g.begin(), g.end());
        for (std::size_t mask = 0; mask < (std::size_t{1} << pts.size()); ++mask) {
            std::set<std::size_t> sub;
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (mask >> i & 1) sub.insert(pts[i]);
            if (!fam.count(sub)) return false;
        }
    }
    for (const auto& g : fam)
        for (const auto& h : fam) {
            if (g.size() >= h.size()) continue;
            bool ok = false;
            for (auto x : h) {
                if (g.count(x)) continue;
                auto ext = g;
                ext.insert(x);
                if (fam.count(ext)) ok = true;
            }
            if (!ok) return false;
        }
    return true;
}

// ---- finite groups ----

struct GroupTable {
    std::vector<std::vector<std::size_t>> op;
    std::size_t identity = 0;
    std::size_t size() const { return op.size(); }
};

inline GroupTable cyclic_group(std::size_t n) {
    GroupTable g;
    g.op.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.op[a][b] = (a + b) % n;
    return g;
}

// Symmetries of a regular n-gon: rotations r^k = k, reflections s r^k = n + k.
inline GroupTable dihedral_group(std::size_t n) {
    GroupTable g;
    g.op.assign(2 * n, std::vector<std::size_t>(2 * n));
    for (std::size_t a = 0; a < 2 * n; ++a)
        for (std::size_t b = 0; b < 2 * n; ++b) {
            bool fa = a >= n, fb = b >= n;
            std::size_t ka = a % n, kb = b % n;
            std::size_t k = fb ? (n + kb - ka) % n : (ka + kb) % n;
            g.op[a][b] = (fa != fb ? n : 0) + k;
        }
    return g;
}

inline GroupTable product_group(const GroupTable& x, const GroupTable& y) {
    GroupTable g;
    std::size_t m = y.size(), n = x.size() * m;
    g.op.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            g.op[a][b] = x.op[a / m][b / m] * m + y.op[a % m][b % m];
    g.identity = x.identity * m + y.identity;
    return g;
}

// Relabels elements by a random permutation.
inline GroupTable shuffled(const GroupTable& g, Rng& rng) {
    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    GroupTable out;
    out.op.assign(g.size(), std::vector<std::size_t>(g.size()));
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) out.op[perm[a]][perm[b]] = perm[g.op[a][b]];
    out.identity = perm[g.identity];
    return out;
}

inline GroupTable random_small_group(Rng& rng) {
    switch (pick(rng, 0, 5)) {
        case 0: return shuffled(cyclic_group(pick(rng, 1, 12)), rng);
        case 1: return shuffled(dihedral_group(pick(rng, 3, 6)), rng);
        case 2: return shuffled(product_group(cyclic_group(2), cyclic_group(2)), rng);
        case 3: return shuffled(product_group(cyclic_group(2), cyclic_group(pick(rng, 2, 6))), rng);
        case 4: return shuffled(product_group(cyclic_group(3), cyclic_group(pick(rng, 3, 4))), rng);
        default: return shuffled(product_group(dihedral_group(3), cyclic_group(2)), rng);
    }
}

// Subgroup by definition: contains the identity, closed under the operation, every
// element has an inverse inside the subset.
inline bool subgroup_oracle(const GroupTable& g, const Bits& s) {
    if (!s[g.identity]) return false;
    for (std::size_t a = 0; a < g.size(); ++a) {
        if (!s[a]) continue;
        bool inverse = false;
        for (std::size_t b = 0; b < g.size(); ++b) {
            if (s[b] && !s[g.op[a][b]]) return false;
            if (s[b] && g.op[a][b] == g.identity) inverse = true;
        }
        if (!inverse) return false;
    }
    return true;
}

// Subgroup generated by the given elements, by repeated multiplication.
inline Bits generated(const GroupTable& g, const std::vector<std::size_t>& gens) {
    Bits s(g.size(), false);
    s[g.identity] = true;
    for (auto x : gens) s[x] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = 0; b < g.size(); ++b)
                if (s[a] && s[b] && !s[g.op[a][b]]) s[g.op[a][b]] = grew = true;
    }
    return s;
}

inline FiniteStructureTable structure_of(const GroupTable& g) {
    FiniteStructureTable t;
    t.carrier = labels("g", g.size());
    t.kind = StructureKind::Group;
    t.op = g.op;
    t.identity = g.identity;
    return t;
}

}  // namespace testing_support
