#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>

#include "qbranch/root_system.hpp"

namespace qbranch {

// Packed weight coordinates; ranks up to 8 (E8 and every catalog factor).
struct WeightKey {
    std::array<std::int16_t, 8> c{};
    friend bool operator==(const WeightKey& a, const WeightKey& b) { return a.c == b.c; }
    friend bool operator<(const WeightKey& a, const WeightKey& b) { return a.c < b.c; }
};

struct WeightKeyHash {
    std::size_t operator()(const WeightKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : k.c) {
            h ^= (std::uint16_t)v;
            h *= 1099511628211ull;
        }
        return (std::size_t)h;
    }
};

WeightKey vec_to_key(const IVec& v);
IVec key_to_vec(const WeightKey& k, int rank);

// Finite weight -> multiplicity map (all multiplicities positive).
struct Character {
    int rank = 0;
    std::unordered_map<WeightKey, Int, WeightKeyHash> entries;

    BigInt total_mass() const {
        BigInt s = 0;
        for (const auto& [k, m] : entries) s += m;
        return s;
    }
    Int mult(const IVec& w) const {
        auto it = entries.find(vec_to_key(w));
        return it == entries.end() ? 0 : it->second;
    }
    void add(const IVec& w, Int m) {
        if (m == 0) return;
        auto [it, fresh] = entries.try_emplace(vec_to_key(w), 0);
        it->second += m;
        if (it->second == 0) entries.erase(it);
    }
};

inline constexpr Int kDefaultDimCap = 1000000;

// Exact weight multiplicities of the irreducible module V(lambda).
// Dominant multiplicities come from the Freudenthal recursion, the rest
// from Weyl symmetry. Rejects lambda whose Weyl dimension exceeds dim_cap
// (the thrown message carries the estimate).
Character freudenthal(const RootSystem& rs, const IVec& lambda, Int dim_cap = kDefaultDimCap);

}  // namespace qbranch
