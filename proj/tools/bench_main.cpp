// Times each sweep kernel in its serial and OpenMP form and verifies that the
// two produce identical results. Speedup depends on the machine's core count;
// nothing here asserts one.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hiero/enumeration.hpp"
#include "hiero/gf2.hpp"
#include "hiero/mobius.hpp"
#include "hiero/ribbon.hpp"

using namespace hiero;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

Hieroglyph random_word(int n, unsigned seed) {
    std::vector<int> letters;
    letters.reserve(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        letters.push_back(i);
        letters.push_back(i);
    }
    std::mt19937 rng(seed);
    std::shuffle(letters.begin(), letters.end(), rng);
    std::vector<int> code(letters.size());
    std::vector<int> newid(static_cast<size_t>(n), -1);
    int next = 0;
    for (size_t k = 0; k < letters.size(); ++k) {
        int& id = newid[static_cast<size_t>(letters[k])];
        if (id < 0) id = next++;
        code[k] = id;
    }
    return Hieroglyph(std::move(code));
}

SymMatrixGF2 random_symmetric(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution edge(0.35);
    SymMatrixGF2 m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) m.set(i, j, true);
    return m;
}

struct Row {
    std::string name;
    double serial_ms = 0;
    double parallel_ms = 0;
    bool agree = false;
};

void print_rows(const std::vector<Row>& rows) {
    std::printf("%-34s %12s %12s %9s %7s\n", "kernel", "serial (ms)", "parallel (ms)", "speedup",
                "agree");
    for (const Row& r : rows) {
        double speedup = r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0;
        std::printf("%-34s %12.1f %12.1f %9.2f %7s\n", r.name.c_str(), r.serial_ms,
                    r.parallel_ms, speedup, r.agree ? "yes" : "NO");
    }
}

}  // namespace

int main() {
    std::vector<Row> rows;

    {
        Row row{"interlacement profile, n=6000", 0, 0, false};
        Hieroglyph h = random_word(6000, 20240601);
        auto t0 = std::chrono::steady_clock::now();
        InterlacementProfile serial = interlacement_profile(h, Exec::Serial);
        row.serial_ms = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        InterlacementProfile parallel = interlacement_profile(h, Exec::Parallel);
        row.parallel_ms = ms_since(t0);
        row.agree = serial.degree == parallel.degree && serial.edges == parallel.edges &&
                    serial.non_isolated == parallel.non_isolated;
        rows.push_back(row);
    }

    {
        Row row{"min-rank diagonal sweep, n=16", 0, 0, false};
        SymMatrixGF2 m = random_symmetric(16, 7);
        auto t0 = std::chrono::steady_clock::now();
        MinRankResult serial = min_rank_over_diagonal(m, Exec::Serial);
        row.serial_ms = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        MinRankResult parallel = min_rank_over_diagonal(m, Exec::Parallel);
        row.parallel_ms = ms_since(t0);
        row.agree = serial.rank == parallel.rank && serial.diagonal == parallel.diagonal;
        rows.push_back(row);
    }

    {
        Row row{"twist oracle sweep, n=16", 0, 0, false};
        // abcacb padded with nested non-interlacing pairs: never realizable,
        // so the sweep inspects every twist vector.
        std::string text = "abcacb";
        for (char c = 'd'; c < 'd' + 13; ++c) text += std::string(2, c);
        Hieroglyph h = parse_word(text);
        auto t0 = std::chrono::steady_clock::now();
        OracleResult serial = oracle_weak_realizability(h, Exec::Serial);
        row.serial_ms = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        OracleResult parallel = oracle_weak_realizability(h, Exec::Parallel);
        row.parallel_ms = ms_since(t0);
        row.agree = serial.realizable == parallel.realizable && serial.twists == parallel.twists;
        rows.push_back(row);
    }

    {
        Row row{"class census with oracle, n=6", 0, 0, false};
        auto t0 = std::chrono::steady_clock::now();
        Census serial = census(6, Exec::Serial);
        row.serial_ms = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        Census parallel = census(6, Exec::Parallel);
        row.parallel_ms = ms_since(t0);
        row.agree = serial.classes == parallel.classes &&
                    serial.realizable_classes == parallel.realizable_classes &&
                    serial.total_matchings == parallel.total_matchings;
        rows.push_back(row);
    }

    print_rows(rows);
    for (const Row& r : rows)
        if (!r.agree) {
            std::printf("FAILURE: serial and parallel kernels disagree\n");
            return 1;
        }
    return 0;
}
