#include "hiero/hieroglyph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hiero {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Whitespace-separated tokens; commas delimit fields that must be nonempty.
std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    bool has_sep = false;
    for (char c : text) {
        if (is_space(c) || c == ',') {
            has_sep = true;
            break;
        }
    }
    if (!has_sep) {
        tokens.reserve(text.size());
        for (char c : text) tokens.emplace_back(1, c);
        return tokens;
    }
    if (text.find(',') == std::string::npos) {
        std::string cur;
        for (char c : text) {
            if (is_space(c)) {
                if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) tokens.push_back(std::move(cur));
        return tokens;
    }
    // Comma-separated fields, each further split on whitespace.
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string field = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        size_t before = tokens.size();
        std::string cur;
        for (char c : field) {
            if (is_space(c)) {
                if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) tokens.push_back(std::move(cur));
        if (tokens.size() == before)
            throw Error(ErrorKind::EmptyToken, "empty token between commas");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return tokens;
}

}  // namespace

Hieroglyph::Hieroglyph(std::vector<int> code, std::vector<std::string> names) : code_(std::move(code)) {
    int next = 0;
    std::vector<int> seen;
    for (size_t k = 0; k < code_.size(); ++k) {
        int c = code_[k];
        if (c < 0 || c > next)
            throw Error(ErrorKind::BadArgument, "code is not in first-occurrence order");
        if (c == next) {
            ++next;
            pos_.push_back({static_cast<int>(k), -1});
        } else {
            if (pos_[static_cast<size_t>(c)][1] != -1)
                throw Error(ErrorKind::NotDoubleOccurrence,
                            "letter occurs more than twice in code");
            pos_[static_cast<size_t>(c)][1] = static_cast<int>(k);
        }
    }
    for (auto& p : pos_)
        if (p[1] == -1) throw Error(ErrorKind::NotDoubleOccurrence, "letter occurs once in code");
    if (names.empty()) {
        names_.reserve(static_cast<size_t>(next));
        for (int i = 0; i < next; ++i) names_.push_back(enumeration_name(i));
    } else {
        if (static_cast<int>(names.size()) != next)
            throw Error(ErrorKind::BadArgument, "name count does not match letter count");
        names_ = std::move(names);
    }
    index_.reserve(names_.size());
    for (size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw Error(ErrorKind::EmptyToken, "empty letter name");
        if (!index_.emplace(names_[i], static_cast<int>(i)).second)
            throw Error(ErrorKind::BadArgument, "duplicate letter name: " + names_[i]);
    }
}

int Hieroglyph::letter_id(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        throw Error(ErrorKind::UnknownLetter, "unknown letter: " + std::string(name));
    return it->second;
}

std::string Hieroglyph::word_string() const {
    bool single = true;
    for (const auto& nm : names_)
        if (nm.size() != 1) {
            single = false;
            break;
        }
    std::string out;
    for (size_t k = 0; k < code_.size(); ++k) {
        if (!single && k > 0) out.push_back(' ');
        out += names_[static_cast<size_t>(code_[k])];
    }
    return out;
}

Hieroglyph parse_word(const std::string& text) {
    std::vector<std::string> tokens = tokenize(text);
    if (tokens.size() % 2 != 0)
        throw Error(ErrorKind::OddLength,
                    "word length must be even, got " + std::to_string(tokens.size()));
    std::unordered_map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<int> code;
    std::vector<int> counts;
    code.reserve(tokens.size());
    for (auto& t : tokens) {
        auto [it, inserted] = ids.emplace(t, static_cast<int>(names.size()));
        if (inserted) {
            names.push_back(t);
            counts.push_back(0);
        }
        int id = it->second;
        if (++counts[static_cast<size_t>(id)] > 2)
            throw Error(ErrorKind::NotDoubleOccurrence, "letter occurs more than twice: " + t);
        code.push_back(id);
    }
    for (size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 2)
            throw Error(ErrorKind::NotDoubleOccurrence, "letter occurs once: " + names[i]);
    return Hieroglyph(std::move(code), std::move(names));
}

CanonicalKey canonicalize_code(const std::vector<int>& code) {
    const int len = static_cast<int>(code.size());
    if (len == 0) return {};
    int n = 0;
    for (int c : code) n = std::max(n, c + 1);
    std::vector<int> best;
    std::vector<int> relab(static_cast<size_t>(n));
    std::vector<int> cand(static_cast<size_t>(len));
    bool first = true;
    for (int dir = 0; dir < 2; ++dir) {
        for (int rot = 0; rot < len; ++rot) {
            std::fill(relab.begin(), relab.end(), -1);
            int next = 0;
            for (int k = 0; k < len; ++k) {
                int p = dir == 0 ? (rot + k) % len : (rot - k % len + len) % len;
                int c = code[static_cast<size_t>(p)];
                if (relab[static_cast<size_t>(c)] < 0) relab[static_cast<size_t>(c)] = next++;
                cand[static_cast<size_t>(k)] = relab[static_cast<size_t>(c)];
            }
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
    }
    return CanonicalKey{std::move(best)};
}

CanonicalKey canonical_form(const Hieroglyph& h) { return canonicalize_code(h.code()); }

int CanonicalKey::letters() const {
    int n = 0;
    for (int c : code) n = std::max(n, c + 1);
    return n;
}

std::string CanonicalKey::to_string() const {
    int n = letters();
    std::string out;
    for (size_t k = 0; k < code.size(); ++k) {
        if (n > 26 && k > 0) out.push_back(' ');
        out += enumeration_name(code[k]);
    }
    return out;
}

size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int c : k.code) {
        h ^= static_cast<size_t>(c) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

Hieroglyph delete_letter_ids(const Hieroglyph& h, const std::vector<uint8_t>& mask) {
    const int n = h.letters();
    if (static_cast<int>(mask.size()) != n)
        throw Error(ErrorKind::BadArgument, "mask size does not match letter count");
    std::vector<int> newid(static_cast<size_t>(n), -1);
    std::vector<int> code;
    std::vector<std::string> names;
    int next = 0;
    for (int c : h.code()) {
        if (mask[static_cast<size_t>(c)]) continue;
        if (newid[static_cast<size_t>(c)] < 0) {
            newid[static_cast<size_t>(c)] = next++;
            names.push_back(h.name(c));
        }
        code.push_back(newid[static_cast<size_t>(c)]);
    }
    return Hieroglyph(std::move(code), std::move(names));
}

Hieroglyph delete_letters(const Hieroglyph& h, const std::vector<std::string>& letters) {
    std::vector<uint8_t> mask(static_cast<size_t>(h.letters()), 0);
    for (const auto& nm : letters) mask[static_cast<size_t>(h.letter_id(nm))] = 1;
    return delete_letter_ids(h, mask);
}

bool interlaces(const Hieroglyph& h, std::string_view a, std::string_view b) {
    int ia = h.letter_id(a);
    int ib = h.letter_id(b);
    if (ia == ib) throw Error(ErrorKind::SameLetter, "interlacement needs two distinct letters");
    return h.interlaces_ids(ia, ib);
}

SymMatrixGF2 interlacement_matrix(const Hieroglyph& h) {
    const int n = h.letters();
    SymMatrixGF2 m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (h.interlaces_ids(i, j)) m.set(i, j, true);
    return m;
}

std::string enumeration_name(int index) {
    // Bijective base 26: 0 -> a, 25 -> z, 26 -> aa, ...
    std::string out;
    int k = index;
    while (true) {
        out.push_back(static_cast<char>('a' + k % 26));
        k = k / 26 - 1;
        if (k < 0) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Hieroglyph clique_word(int m) {
    std::vector<int> code;
    code.reserve(static_cast<size_t>(2 * m));
    for (int rep = 0; rep < 2; ++rep)
        for (int i = 0; i < m; ++i) code.push_back(i);
    return Hieroglyph(std::move(code));
}

Hieroglyph from_key(const CanonicalKey& key) { return Hieroglyph(key.code); }

Hieroglyph rotated(const Hieroglyph& h, int shift) {
    const int len = h.length();
    if (len == 0) return h;
    int s = ((shift % len) + len) % len;
    const auto& code = h.code();
    std::vector<int> raw(static_cast<size_t>(len));
    for (int k = 0; k < len; ++k) raw[static_cast<size_t>(k)] = code[static_cast<size_t>((k + s) % len)];
    // Reindex by first occurrence, carrying the original names along.
    std::vector<int> newid(static_cast<size_t>(h.letters()), -1);
    std::vector<std::string> names;
    std::vector<int> out(static_cast<size_t>(len));
    int next = 0;
    for (int k = 0; k < len; ++k) {
        int c = raw[static_cast<size_t>(k)];
        if (newid[static_cast<size_t>(c)] < 0) {
            newid[static_cast<size_t>(c)] = next++;
            names.push_back(h.name(c));
        }
        out[static_cast<size_t>(k)] = newid[static_cast<size_t>(c)];
    }
    return Hieroglyph(std::move(out), std::move(names));
}

Hieroglyph reflected(const Hieroglyph& h) {
    const int len = h.length();
    const auto& code = h.code();
    std::vector<int> newid(static_cast<size_t>(h.letters()), -1);
    std::vector<std::string> names;
    std::vector<int> out;
    out.reserve(static_cast<size_t>(len));
    int next = 0;
    for (int k = len - 1; k >= 0; --k) {
        int c = code[static_cast<size_t>(k)];
        if (newid[static_cast<size_t>(c)] < 0) {
            newid[static_cast<size_t>(c)] = next++;
            names.push_back(h.name(c));
        }
        out.push_back(newid[static_cast<size_t>(c)]);
    }
    return Hieroglyph(std::move(out), std::move(names));
}

}  // namespace hiero
