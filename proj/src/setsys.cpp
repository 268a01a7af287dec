#include "ktw/setsys.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ktw/bitset.hpp"
#include "ktw/errors.hpp"

namespace ktw {

bool KSet::contains(int e) const {
    return std::binary_search(elems.begin(), elems.end(), e);
}

void check_kset(const KSet& x, int ground) {
    for (std::size_t i = 0; i < x.elems.size(); ++i) {
        if (x.elems[i] < 1 || x.elems[i] > ground)
            throw std::invalid_argument("kset: element " + std::to_string(x.elems[i]) +
                                        " outside [1," + std::to_string(ground) + "]");
        if (i > 0 && x.elems[i - 1] >= x.elems[i])
            throw std::invalid_argument("kset: elements not strictly increasing");
    }
}

std::uint64_t kset_mask(const KSet& x) {
    std::uint64_t m = 0;
    for (int e : x.elems) {
        if (e < 1 || e > 64) throw std::invalid_argument("kset_mask: element outside [1,64]");
        m |= std::uint64_t{1} << (e - 1);
    }
    return m;
}

KSet kset_from_mask(std::uint64_t mask) {
    KSet x;
    while (mask) {
        x.elems.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return x;
}

Ordering colex_compare(const KSet& x, const KSet& y) {
    if (x.arity() != y.arity())
        throw std::invalid_argument("colex_compare: arity mismatch");
    // The largest element of the symmetric difference is found by scanning
    // both sequences from the top.
    for (int i = x.arity() - 1; i >= 0; --i) {
        if (x.elems[i] != y.elems[i])
            return x.elems[i] < y.elems[i] ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
}

std::int64_t colex_rank(const KSet& x) {
    std::int64_t r = 0;
    for (int i = 0; i < x.arity(); ++i) r += binom(x.elems[i] - 1, i + 1);
    return r;
}

KSet colex_unrank(std::int64_t r, int arity, int ground) {
    if (arity < 0 || ground < 0)
        throw std::invalid_argument("colex_unrank: negative parameter");
    if (r < 0 || r >= binom(ground, arity))
        throw std::invalid_argument("colex_unrank: rank " + std::to_string(r) +
                                    " outside [0, C(" + std::to_string(ground) + "," +
                                    std::to_string(arity) + "))");
    KSet out;
    out.elems.assign(arity, 0);
    int e = ground;
    for (int i = arity; i >= 1; --i) {
        while (binom(e - 1, i) > r) --e;
        out.elems[i - 1] = e;
        r -= binom(e - 1, i);
        --e;
    }
    return out;
}

bool SetFamily::contains(const KSet& x) const {
    return std::binary_search(members.begin(), members.end(), x,
                              [](const KSet& a, const KSet& b) {
                                  return colex_compare(a, b) == Ordering::less;
                              });
}

SetFamily make_family(int ground, int arity, std::vector<KSet> members) {
    if (ground < 0 || arity < 0 || arity > ground)
        throw std::invalid_argument("family: bad ground/arity");
    for (const KSet& x : members) {
        if (x.arity() != arity) throw std::invalid_argument("family: member arity mismatch");
        check_kset(x, ground);
    }
    std::sort(members.begin(), members.end(), [](const KSet& a, const KSet& b) {
        return colex_compare(a, b) == Ordering::less;
    });
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return SetFamily{ground, arity, std::move(members)};
}

SetFamily first_family(std::int64_t m, int arity, int ground) {
    if (m < 0 || m > binom(ground, arity))
        throw std::invalid_argument("first_family: m outside [0, C(b,a)]");
    std::vector<KSet> members;
    members.reserve(static_cast<std::size_t>(m));
    for (std::int64_t r = 0; r < m; ++r) members.push_back(colex_unrank(r, arity, ground));
    return SetFamily{ground, arity, std::move(members)};
}

SetFamily shadow(const SetFamily& f, int c) {
    if (c < 0 || c > f.arity)
        throw std::invalid_argument("shadow: c outside [0, arity]");
    if (c == f.arity) return f;
    std::set<std::vector<int>> seen;
    for (const KSet& y : f.members) {
        // Enumerate the c-subsets of y by index combinations.
        std::vector<int> idx(c);
        for (int i = 0; i < c; ++i) idx[i] = i;
        while (true) {
            std::vector<int> sub(c);
            for (int i = 0; i < c; ++i) sub[i] = y.elems[idx[i]];
            seen.insert(std::move(sub));
            int i = c - 1;
            while (i >= 0 && idx[i] == f.arity - c + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::vector<KSet> members;
    members.reserve(seen.size());
    for (const auto& v : seen) members.push_back(KSet{v});
    return make_family(f.ground, c, std::move(members));
}

SetFamily complement_family(const SetFamily& f) {
    std::vector<KSet> members;
    members.reserve(f.members.size());
    for (const KSet& x : f.members) {
        KSet y;
        y.elems.reserve(f.ground - f.arity);
        std::size_t j = 0;
        for (int e = 1; e <= f.ground; ++e) {
            if (j < x.elems.size() && x.elems[j] == e) {
                ++j;
            } else {
                y.elems.push_back(e);
            }
        }
        members.push_back(std::move(y));
    }
    return make_family(f.ground, f.ground - f.arity, std::move(members));
}

std::int64_t min_shadow_size(std::int64_t m, int a, int b, int c) {
    if (c < 0 || c > a) throw std::invalid_argument("min_shadow_size: c outside [0, a]");
    return shadow(first_family(m, a, b), c).size();
}

namespace {

// Next bit pattern with the same popcount (Gosper).
std::uint64_t next_combination(std::uint64_t v) {
    std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

// The rank-th m-subset of [0, n) as a bit mask, in colex order.
std::uint64_t combination_mask_at(std::int64_t rank, int m, int n) {
    KSet s = colex_unrank(rank, m, n);
    std::uint64_t mask = 0;
    for (int e : s.elems) mask |= std::uint64_t{1} << (e - 1);
    return mask;
}

struct BruteShadowSetup {
    std::int64_t total_families = 0;
    int num_sets = 0;                  // C(b,a)
    int shadow_universe = 0;           // C(b,c)
    std::vector<Bitset> member_shadow; // per a-set, its c-subsets by colex rank
};

BruteShadowSetup brute_setup(std::int64_t m, int a, int b, int c,
                             std::int64_t family_budget) {
    if (c < 0 || c > a) throw std::invalid_argument("brute_min_shadow: c outside [0, a]");
    std::int64_t num_sets = binom(b, a);
    if (m < 0 || m > num_sets)
        throw std::invalid_argument("brute_min_shadow: m outside [0, C(b,a)]");
    if (num_sets > 63)
        throw BudgetError("brute_min_shadow: C(b,a) > 63, family masks do not fit a word");
    std::int64_t total;
    try {
        total = binom(static_cast<int>(num_sets), static_cast<int>(m));
    } catch (const std::overflow_error&) {
        throw BudgetError("brute_min_shadow: family count overflows");
    }
    if (total > family_budget)
        throw BudgetError("brute_min_shadow: " + std::to_string(total) +
                          " families exceed budget " + std::to_string(family_budget));

    BruteShadowSetup s;
    s.total_families = total;
    s.num_sets = static_cast<int>(num_sets);
    s.shadow_universe = static_cast<int>(binom(b, c));
    s.member_shadow.reserve(s.num_sets);
    for (int j = 0; j < s.num_sets; ++j) {
        SetFamily one{b, a, {colex_unrank(j, a, b)}};
        Bitset bits(s.shadow_universe);
        for (const KSet& x : shadow(one, c).members)
            bits.set(static_cast<int>(colex_rank(x)));
        s.member_shadow.push_back(std::move(bits));
    }
    return s;
}

std::int64_t shadow_of_family_mask(const BruteShadowSetup& s, std::uint64_t fam,
                                   Bitset& buffer) {
    buffer.clear();
    while (fam) {
        buffer |= s.member_shadow[std::countr_zero(fam)];
        fam &= fam - 1;
    }
    return buffer.count();
}

}  // namespace

std::int64_t brute_min_shadow_serial(std::int64_t m, int a, int b, int c,
                                     std::int64_t family_budget) {
    if (m == 0) return 0;
    BruteShadowSetup s = brute_setup(m, a, b, c, family_budget);
    Bitset buffer(s.shadow_universe);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::uint64_t fam = (std::uint64_t{1} << m) - 1;
    for (std::int64_t r = 0; r < s.total_families; ++r) {
        best = std::min(best, shadow_of_family_mask(s, fam, buffer));
        if (r + 1 < s.total_families) fam = next_combination(fam);
    }
    return best;
}

std::int64_t brute_min_shadow(std::int64_t m, int a, int b, int c,
                              std::int64_t family_budget) {
    if (m == 0) return 0;
    BruteShadowSetup s = brute_setup(m, a, b, c, family_budget);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
#ifdef _OPENMP
#pragma omp parallel reduction(min : best)
    {
        int tid = omp_get_thread_num();
        int nt = omp_get_num_threads();
        std::int64_t lo = s.total_families * tid / nt;
        std::int64_t hi = s.total_families * (tid + 1) / nt;
        if (lo < hi) {
            Bitset buffer(s.shadow_universe);
            std::uint64_t fam = combination_mask_at(lo, static_cast<int>(m), s.num_sets);
            for (std::int64_t r = lo; r < hi; ++r) {
                best = std::min(best, shadow_of_family_mask(s, fam, buffer));
                if (r + 1 < hi) fam = next_combination(fam);
            }
        }
    }
#else
    Bitset buffer(s.shadow_universe);
    std::uint64_t fam = (std::uint64_t{1} << m) - 1;
    for (std::int64_t r = 0; r < s.total_families; ++r) {
        best = std::min(best, shadow_of_family_mask(s, fam, buffer));
        if (r + 1 < s.total_families) fam = next_combination(fam);
    }
#endif
    return best;
}

}  // namespace ktw
