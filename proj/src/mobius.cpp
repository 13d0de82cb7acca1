#include "hiero/mobius.hpp"

#include <algorithm>
#include <stdexcept>

namespace hiero {

const char* pattern_word(Certificate::Pattern p) {
    switch (p) {
        case Certificate::Pattern::abcacb: return "abcacb";
        case Certificate::Pattern::ababcdcd: return "ababcdcd";
    }
    return "";
}

InterlacementProfile interlacement_profile(const Hieroglyph& h, Exec exec) {
    const int n = h.letters();
    InterlacementProfile profile;
    profile.degree.assign(static_cast<size_t>(n), 0);
    int* deg = profile.degree.data();
#ifndef _OPENMP
    (void)exec;
#else
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
#endif
    for (int i = 0; i < n; ++i) {
        int d = 0;
        for (int j = 0; j < n; ++j) d += (j != i) && h.interlaces_ids(i, j);
        deg[i] = d;
    }
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        sum += deg[i];
        if (deg[i] > 0) ++profile.non_isolated;
    }
    profile.edges = sum / 2;
    return profile;
}

bool is_weakly_realizable(const Hieroglyph& h, Exec exec) {
    return interlacement_profile(h, exec).clique_plus_isolated();
}

namespace {

Certificate negative_certificate(const Hieroglyph& h, const InterlacementProfile& profile) {
    const int n = h.letters();
    const auto& deg = profile.degree;

    // Least pair of non-isolated letters that do not interlace. One exists:
    // the graph is not a clique plus isolated vertices.
    int i = -1, j = -1;
    for (int a = 0; a < n && i < 0; ++a) {
        if (deg[static_cast<size_t>(a)] == 0) continue;
        for (int b = a + 1; b < n; ++b)
            if (deg[static_cast<size_t>(b)] != 0 && !h.interlaces_ids(a, b)) {
                i = a;
                j = b;
                break;
            }
    }
    if (i < 0) throw std::logic_error("negative certificate requested for a clique profile");

    Certificate cert;
    cert.kind = Certificate::Kind::NotRealizable;

    auto p_witness = [&](int center, int u, int v) {
        cert.pattern = Certificate::Pattern::abcacb;
        cert.witness_letters = {h.name(center), h.name(std::min(u, v)), h.name(std::max(u, v))};
    };

    // A letter interlacing both i and j closes the three-letter pattern.
    for (int w = 0; w < n; ++w)
        if (w != i && w != j && h.interlaces_ids(w, i) && h.interlaces_ids(w, j)) {
            p_witness(w, i, j);
            return cert;
        }

    // No common partner: take the least partner of each. u avoids j and v
    // avoids i, otherwise they would have been common partners.
    int u = -1, v = -1;
    for (int w = 0; w < n && u < 0; ++w)
        if (w != i && h.interlaces_ids(i, w)) u = w;
    for (int w = 0; w < n && v < 0; ++w)
        if (w != j && h.interlaces_ids(j, w)) v = w;
    if (u < 0 || v < 0) throw std::logic_error("non-isolated letter without a partner");

    if (h.interlaces_ids(u, v)) {
        // i - u - v is a path: u meets both, i and v do not meet.
        p_witness(u, i, v);
        return cert;
    }

    // Two separated interlacing pairs (i, u) and (j, v).
    cert.pattern = Certificate::Pattern::ababcdcd;
    std::pair<int, int> p1{std::min(i, u), std::max(i, u)};
    std::pair<int, int> p2{std::min(j, v), std::max(j, v)};
    if (p2 < p1) std::swap(p1, p2);
    cert.witness_letters = {h.name(p1.first), h.name(p1.second), h.name(p2.first),
                            h.name(p2.second)};
    return cert;
}

}  // namespace

Certificate certify(const Hieroglyph& h, Exec exec) {
    InterlacementProfile profile = interlacement_profile(h, exec);
    Certificate cert;
    if (profile.clique_plus_isolated()) {
        cert.kind = Certificate::Kind::Realizable;
        for (int i = 0; i < h.letters(); ++i) {
            if (profile.degree[static_cast<size_t>(i)] > 0)
                cert.red.push_back(h.name(i));
            else
                cert.blue.push_back(h.name(i));
        }
    } else {
        cert = negative_certificate(h, profile);
    }
    if (!validate_certificate(h, cert))
        throw std::logic_error("constructed certificate failed validation");
    return cert;
}

bool validate_certificate(const Hieroglyph& h, const Certificate& c) {
    const int n = h.letters();
    try {
        if (c.kind == Certificate::Kind::Realizable) {
            std::vector<int> color(static_cast<size_t>(n), -1);  // 0 = red, 1 = blue
            for (const auto& nm : c.red) {
                int id = h.letter_id(nm);
                if (color[static_cast<size_t>(id)] != -1) return false;
                color[static_cast<size_t>(id)] = 0;
            }
            for (const auto& nm : c.blue) {
                int id = h.letter_id(nm);
                if (color[static_cast<size_t>(id)] != -1) return false;
                color[static_cast<size_t>(id)] = 1;
            }
            for (int i = 0; i < n; ++i)
                if (color[static_cast<size_t>(i)] == -1) return false;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    bool inter = h.interlaces_ids(i, j);
                    bool both_red =
                        color[static_cast<size_t>(i)] == 0 && color[static_cast<size_t>(j)] == 0;
                    if (both_red && !inter) return false;
                    if (!both_red && inter) return false;
                }
            return true;
        }
        const size_t want = c.pattern == Certificate::Pattern::abcacb ? 3 : 4;
        if (c.witness_letters.size() != want) return false;
        std::vector<uint8_t> keep(static_cast<size_t>(n), 0);
        for (const auto& nm : c.witness_letters) {
            int id = h.letter_id(nm);
            if (keep[static_cast<size_t>(id)]) return false;
            keep[static_cast<size_t>(id)] = 1;
        }
        std::vector<uint8_t> drop(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) drop[static_cast<size_t>(i)] = keep[static_cast<size_t>(i)] ? 0 : 1;
        Hieroglyph induced = delete_letter_ids(h, drop);
        return canonical_form(induced) == canonical_form(parse_word(pattern_word(c.pattern)));
    } catch (const Error&) {
        return false;
    }
}

bool check_condition4(const Hieroglyph& h) {
    const int n = h.letters();
    const CanonicalKey three = canonicalize_code({0, 1, 2, 0, 2, 1});
    const CanonicalKey four = canonicalize_code({0, 1, 0, 1, 2, 3, 2, 3});
    std::vector<uint8_t> drop(static_cast<size_t>(n));
    auto induced_key = [&](std::initializer_list<int> subset) {
        std::fill(drop.begin(), drop.end(), 1);
        for (int s : subset) drop[static_cast<size_t>(s)] = 0;
        return canonical_form(delete_letter_ids(h, drop));
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (induced_key({i, j, k}) == three) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (induced_key({i, j, k, l}) == four) return false;
    return true;
}

ReduceResult reduce_condition3(const Hieroglyph& h) {
    InterlacementProfile profile = interlacement_profile(h, Exec::Serial);
    const int n = h.letters();
    std::vector<uint8_t> drop(static_cast<size_t>(n), 0);
    std::vector<std::string> removed;
    for (int i = 0; i < n; ++i)
        if (profile.degree[static_cast<size_t>(i)] == 0) {
            drop[static_cast<size_t>(i)] = 1;
            removed.push_back(h.name(i));
        }
    Hieroglyph core = delete_letter_ids(h, drop);
    bool clique = canonical_form(core) == canonical_form(clique_word(core.letters()));
    return ReduceResult{std::move(core), std::move(removed), clique};
}

}  // namespace hiero
