#pragma once

#include <cstdint>
#include <vector>

#include "ktw/binomial.hpp"

namespace ktw {

// A k-element subset of a ground set [1..b], kept strictly increasing. The
// element sequence is the canonical form; 64-bit masks (bit e-1 = element e)
// are used internally wherever the ground set fits in a word.
struct KSet {
    std::vector<int> elems;

    int arity() const { return static_cast<int>(elems.size()); }
    bool contains(int e) const;
    bool operator==(const KSet&) const = default;
};

// Throws std::invalid_argument unless elems is strictly increasing within
// [1, ground].
void check_kset(const KSet& x, int ground);

std::uint64_t kset_mask(const KSet& x);        // requires max element <= 64
KSet kset_from_mask(std::uint64_t mask);

enum class Ordering { less, equal, greater };

// Colexicographic comparison: x < y iff max(x-y) < max(y-x). On masks this is
// plain unsigned integer order; the vector form compares largest elements
// down. Arity mismatch is an error.
Ordering colex_compare(const KSet& x, const KSet& y);

// Position of x in the colex order of all arity(x)-sets (combinatorial number
// system), and its inverse over the a-sets of [1..b].
std::int64_t colex_rank(const KSet& x);
KSet colex_unrank(std::int64_t r, int arity, int ground);

// A finite collection of arity-sets over [1..ground], stored sorted by colex
// with no duplicates.
struct SetFamily {
    int ground = 0;
    int arity = 0;
    std::vector<KSet> members;

    std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
    bool contains(const KSet& x) const;
    bool operator==(const SetFamily&) const = default;
};

// Canonicalizes (sorts, checks invariants) and returns the family.
SetFamily make_family(int ground, int arity, std::vector<KSet> members);

// The m colex-smallest arity-sets of [1..ground], built by unranking.
SetFamily first_family(std::int64_t m, int arity, int ground);

// All c-sets contained in some member of f.
SetFamily shadow(const SetFamily& f, int c);

// Member-wise complement within [1..ground]; arity becomes ground - arity.
SetFamily complement_family(const SetFamily& f);

// |shadow(first_family(m, a, b), c)|: the Kruskal-Katona minimum, computed
// constructively from the first family.
std::int64_t min_shadow_size(std::int64_t m, int a, int b, int c);

// Independent oracle: the exact minimum c-shadow size over every size-m
// family of a-sets in [1..b], by exhaustive enumeration. Refuses (BudgetError)
// when the number of families exceeds family_budget.
std::int64_t brute_min_shadow(std::int64_t m, int a, int b, int c,
                              std::int64_t family_budget = 10'000'000);
std::int64_t brute_min_shadow_serial(std::int64_t m, int a, int b, int c,
                                     std::int64_t family_budget = 10'000'000);

}  // namespace ktw
