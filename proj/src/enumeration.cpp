#include "hiero/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "hiero/mobius.hpp"
#include "hiero/ribbon.hpp"

namespace hiero {

unsigned long long double_factorial_odd(int n) {
    if (n < 0) throw Error(ErrorKind::BadArgument, "negative letter count");
    if (n > 17)
        throw Error(ErrorKind::DimensionTooLarge,
                    "(2n-1)!! overflows 64 bits for n = " + std::to_string(n));
    unsigned long long product = 1;
    for (int k = 1; k <= n; ++k) product *= static_cast<unsigned long long>(2 * k - 1);
    return product;
}

namespace {

void check_word_bound(int n, int bound) {
    if (n < 0) throw Error(ErrorKind::BadArgument, "negative letter count");
    if (n > bound)
        throw Error(ErrorKind::DimensionTooLarge,
                    "enumeration of " + std::to_string(n) + " letters exceeds bound " +
                        std::to_string(bound));
}

// Matches the smallest open position with every later open position in turn.
void match_positions(std::vector<int>& code, std::vector<uint8_t>& open, int remaining,
                     int next_letter, const std::function<void(const std::vector<int>&)>& fn) {
    if (remaining == 0) {
        fn(code);
        return;
    }
    const int len = static_cast<int>(code.size());
    int first = 0;
    while (!open[static_cast<size_t>(first)]) ++first;
    open[static_cast<size_t>(first)] = 0;
    code[static_cast<size_t>(first)] = next_letter;
    for (int second = first + 1; second < len; ++second) {
        if (!open[static_cast<size_t>(second)]) continue;
        open[static_cast<size_t>(second)] = 0;
        code[static_cast<size_t>(second)] = next_letter;
        match_positions(code, open, remaining - 1, next_letter + 1, fn);
        open[static_cast<size_t>(second)] = 1;
    }
    open[static_cast<size_t>(first)] = 1;
}

}  // namespace

void for_each_matching_code(int n, const std::function<void(const std::vector<int>&)>& fn,
                            int bound) {
    check_word_bound(n, bound);
    std::vector<int> code(static_cast<size_t>(2 * n), 0);
    std::vector<uint8_t> open(static_cast<size_t>(2 * n), 1);
    match_positions(code, open, n, 0, fn);
}

void enumerate_words(int n, const std::function<void(const Hieroglyph&)>& fn, int bound) {
    for_each_matching_code(
        n, [&](const std::vector<int>& code) { fn(Hieroglyph(code)); }, bound);
}

std::vector<CanonicalKey> enumerate_classes(int n, int bound) {
    check_word_bound(n, bound);
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    for_each_matching_code(
        n, [&](const std::vector<int>& code) { seen.insert(canonicalize_code(code)); }, bound);
    std::vector<CanonicalKey> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

namespace {

// Completions with position 0 already matched to `partner` (letter 0).
void classes_for_branch(int n, int partner,
                        std::unordered_set<CanonicalKey, CanonicalKeyHash>& out) {
    std::vector<int> code(static_cast<size_t>(2 * n), 0);
    std::vector<uint8_t> open(static_cast<size_t>(2 * n), 1);
    open[0] = 0;
    open[static_cast<size_t>(partner)] = 0;
    code[static_cast<size_t>(partner)] = 0;
    match_positions(code, open, n - 1, 1,
                    [&](const std::vector<int>& c) { out.insert(canonicalize_code(c)); });
}

}  // namespace

Census census(int n, Exec exec, bool per_class, int bound) {
    check_word_bound(n, bound);
    Census result;
    result.n = n;
    result.total_matchings = double_factorial_odd(n);

    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
#ifdef _OPENMP
    if (exec == Exec::Parallel && n >= 2) {
#pragma omp parallel for schedule(dynamic)
        for (int partner = 1; partner < 2 * n; ++partner) {
            std::unordered_set<CanonicalKey, CanonicalKeyHash> local;
            classes_for_branch(n, partner, local);
#pragma omp critical
            seen.merge(local);
        }
    } else
#endif
    {
        (void)exec;
        for_each_matching_code(
            n, [&](const std::vector<int>& code) { seen.insert(canonicalize_code(code)); },
            bound);
    }

    std::vector<CanonicalKey> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
    result.classes = static_cast<long long>(keys.size());

    for (const CanonicalKey& key : keys) {
        Hieroglyph h = from_key(key);
        bool quick = is_weakly_realizable(h, Exec::Serial);
        bool swept = oracle_weak_realizability(h, Exec::Serial).realizable;
        if (quick != swept)
            throw std::logic_error("checker and twist sweep disagree on " + key.to_string());
        if (quick) ++result.realizable_classes;
        if (per_class) result.per_class.emplace_back(key.to_string(), quick);
    }
    return result;
}

}  // namespace hiero
