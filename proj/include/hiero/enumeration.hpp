#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hiero/hieroglyph.hpp"
#include "hiero/parallel.hpp"

namespace hiero {

struct Census {
    int n = 0;
    unsigned long long total_matchings = 0;  // (2n-1)!!
    long long classes = 0;
    long long realizable_classes = 0;
    // Filled only on request: canonical word of each class, sorted.
    std::vector<std::pair<std::string, bool>> per_class;
};

// (2n-1)!! = 1 * 3 * ... * (2n-1); the number of perfect matchings of 2n
// points, i.e. of double-occurrence words with first-occurrence labels.
unsigned long long double_factorial_odd(int n);

inline constexpr int kDefaultWordBound = 8;
inline constexpr int kDefaultClassBound = 7;

// Every double-occurrence word of length 2n exactly once, letters named by
// first occurrence, in the deterministic order given by repeatedly matching
// the smallest unmatched position with each later position in turn.
void enumerate_words(int n, const std::function<void(const Hieroglyph&)>& fn,
                     int bound = kDefaultWordBound);

// Raw variant used by the sweeps: yields the first-occurrence code only.
void for_each_matching_code(int n, const std::function<void(const std::vector<int>&)>& fn,
                            int bound = kDefaultWordBound);

// Canonical keys of enumerate_words, deduplicated and sorted.
std::vector<CanonicalKey> enumerate_classes(int n, int bound = kDefaultClassBound);

// Class count plus how many classes the quadratic checker accepts; every
// class is cross-checked against the 2^n twist oracle and a disagreement is
// a hard error. The parallel kernel partitions generation by the partner of
// position 0 (2n-1 independent branches) and merges the dedup sets.
Census census(int n, Exec exec = Exec::Parallel, bool per_class = false,
              int bound = kDefaultClassBound);

}  // namespace hiero
