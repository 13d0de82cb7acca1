#include "hiero/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hiero/circle_realizer.hpp"
#include "hiero/enumeration.hpp"
#include "hiero/gf2.hpp"
#include "hiero/ribbon.hpp"
#include "hiero/svg.hpp"

namespace hiero {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write file: " + path);
    out << content;
    if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

std::vector<uint8_t> parse_twist_bits(const std::string& bits, int n) {
    if (static_cast<int>(bits.size()) != n)
        throw Error(ErrorKind::BadArgument, "twist string has length " +
                                                std::to_string(bits.size()) + ", expected " +
                                                std::to_string(n));
    std::vector<uint8_t> t(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw Error(ErrorKind::BadArgument, "twist string must be over {0,1}, got '" +
                                                    std::string(1, bits[i]) + "'");
        t[i] = bits[i] == '1' ? 1 : 0;
    }
    return t;
}

std::string bits_to_string(const std::vector<uint8_t>& v) {
    std::string s(v.size(), '0');
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) s[i] = '1';
    return s;
}

ordered_json bits_to_array(const std::vector<uint8_t>& v) {
    ordered_json a = ordered_json::array();
    for (uint8_t b : v) a.push_back(static_cast<int>(b));
    return a;
}

ordered_json matrix_to_rows(const SymMatrixGF2& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.get(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += " ";
        s += parts[i];
    }
    return s;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

ordered_json certificate_json(const Certificate& c) {
    ordered_json j;
    if (c.kind == Certificate::Kind::Realizable) {
        j["kind"] = "realizable";
        j["red"] = c.red;
        j["blue"] = c.blue;
    } else {
        j["kind"] = "not_realizable";
        j["pattern"] = pattern_word(c.pattern);
        j["witness_letters"] = c.witness_letters;
    }
    return j;
}

}  // namespace

std::string certificate_to_json(const Certificate& c) { return certificate_json(c).dump(); }

Certificate certificate_from_json(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadArgument, std::string("certificate is not valid JSON: ") +
                                                e.what());
    }
    Certificate c;
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "realizable") {
            c.kind = Certificate::Kind::Realizable;
            c.red = j.at("red").get<std::vector<std::string>>();
            c.blue = j.at("blue").get<std::vector<std::string>>();
        } else if (kind == "not_realizable") {
            c.kind = Certificate::Kind::NotRealizable;
            const std::string pattern = j.at("pattern").get<std::string>();
            if (pattern == "abcacb")
                c.pattern = Certificate::Pattern::abcacb;
            else if (pattern == "ababcdcd")
                c.pattern = Certificate::Pattern::ababcdcd;
            else
                throw Error(ErrorKind::BadArgument, "unknown witness pattern: " + pattern);
            c.witness_letters = j.at("witness_letters").get<std::vector<std::string>>();
        } else {
            throw Error(ErrorKind::BadArgument, "unknown certificate kind: " + kind);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadArgument, std::string("malformed certificate: ") + e.what());
    }
    return c;
}

CommandResult dispatch(const std::vector<std::string>& args) {
    CommandResult result;
    ordered_json out;
    std::string table;
    bool use_table = false;
    bool use_json = false;

    struct {
        std::string word;
        std::string twists;
        std::string matrix_path;
        std::string edges_path;
        std::string out_path;
        int n = 0;
        int bound = -1;
        int bands = -1;
        bool serial = false;
        bool classes = false;
        bool per_class = false;
        bool count = false;
    } opt;

    CLI::App app{"Chord-diagram realizability toolkit: decides which hieroglyphs embed weakly "
                 "in the Mobius band, with certificates, GF(2) rank tools, exhaustive oracles "
                 "and SVG rendering"};
    app.name("hiero");
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", use_json, "machine-readable JSON on stdout (default)");
        sub->add_flag("--table", use_table, "plain text instead of JSON");
    };
    auto exec_of = [&] { return opt.serial ? Exec::Serial : Exec::Parallel; };
    auto bound_or = [&](int fallback) { return opt.bound >= 0 ? opt.bound : fallback; };

    // check ---------------------------------------------------------------
    auto* check = app.add_subcommand(
        "check", "decide weak realizability of a word on the Mobius band, with evidence");
    check->add_option("word", opt.word, "double-occurrence word")->required();
    check->add_flag("--serial", opt.serial, "disable the parallel scan kernel");
    add_common(check);
    check->callback([&] {
        Hieroglyph h = parse_word(opt.word);
        Certificate c = certify(h, exec_of());
        const bool ok = c.kind == Certificate::Kind::Realizable;
        out["status"] = "ok";
        out["n"] = h.letters();
        out["realizable"] = ok;
        table = "n: " + std::to_string(h.letters()) + "\nrealizable: " + yesno(ok) + "\n";
        if (ok) {
            out["red"] = c.red;
            out["blue"] = c.blue;
            table += "red: " + join(c.red) + "\nblue: " + join(c.blue) + "\n";
        } else {
            out["witness"] =
                ordered_json{{"letters", c.witness_letters}, {"pattern", pattern_word(c.pattern)}};
            table += "witness: " + join(c.witness_letters) + "\npattern: " +
                     pattern_word(c.pattern) + "\n";
        }
    });

    // certify -------------------------------------------------------------
    auto* cert = app.add_subcommand("certify", "emit the full realizability certificate");
    cert->add_option("word", opt.word, "double-occurrence word")->required();
    cert->add_flag("--serial", opt.serial, "disable the parallel scan kernel");
    add_common(cert);
    cert->callback([&] {
        Hieroglyph h = parse_word(opt.word);
        Certificate c = certify(h, exec_of());
        out["status"] = "ok";
        out["n"] = h.letters();
        out["certificate"] = certificate_json(c);
        if (c.kind == Certificate::Kind::Realizable)
            table = "realizable\nred: " + join(c.red) + "\nblue: " + join(c.blue) + "\n";
        else
            table = std::string("not realizable\npattern: ") + pattern_word(c.pattern) +
                    "\nwitness: " + join(c.witness_letters) + "\n";
    });

    // cond4 ---------------------------------------------------------------
    auto* cond4 = app.add_subcommand(
        "cond4", "subset scan: no 3 letters induce abcacb, no 4 induce ababcdcd");
    cond4->add_option("word", opt.word, "double-occurrence word")->required();
    add_common(cond4);
    cond4->callback([&] {
        Hieroglyph h = parse_word(opt.word);
        const bool sat = check_condition4(h);
        out["status"] = "ok";
        out["n"] = h.letters();
        out["satisfied"] = sat;
        table = std::string("condition4: ") + (sat ? "satisfied" : "violated") + "\n";
    });

    // reduce --------------------------------------------------------------
    auto* reduce = app.add_subcommand(
        "reduce", "delete letters that interlace nothing; test for the clique normal form");
    reduce->add_option("word", opt.word, "double-occurrence word")->required();
    add_common(reduce);
    reduce->callback([&] {
        Hieroglyph h = parse_word(opt.word);
        ReduceResult r = reduce_condition3(h);
        out["status"] = "ok";
        out["n"] = h.letters();
        out["removed"] = r.removed;
        out["core"] = r.core.word_string();
        out["core_letters"] = r.core.letters();
        out["is_canonical_clique"] = r.is_canonical_clique;
        table = "removed: " + join(r.removed) + "\ncore: " + r.core.word_string() +
                "\ncanonical clique: " + yesno(r.is_canonical_clique) + "\n";
    });

    // oracle --------------------------------------------------------------
    auto* oracle = app.add_subcommand(
        "oracle", "brute-force twist sweep; with --bands, minimum-rank band count check");
    oracle->add_option("word", opt.word, "double-occurrence word")->required();
    oracle->add_option("--bands", opt.bands, "test realizability on a disk with this many bands")
        ->check(CLI::NonNegativeNumber);
    oracle->add_option("--bound", opt.bound, "letter-count cap for the 2^n sweep")
        ->check(CLI::NonNegativeNumber);
    oracle->add_flag("--serial", opt.serial, "disable the parallel sweep kernel");
    add_common(oracle);
    oracle->callback([&] {
        Hieroglyph h = parse_word(opt.word);
        out["status"] = "ok";
        out["n"] = h.letters();
        if (opt.bands >= 0) {
            MinRankResult mr = min_rank_over_diagonal(interlacement_matrix(h), exec_of(),
                                                      bound_or(kDefaultSweepBound));
            const bool ok = mr.rank <= opt.bands;
            out["bands"] = opt.bands;
            out["realizable"] = ok;
            out["R"] = mr.rank;
            out["diagonal"] = bits_to_array(mr.diagonal);
            table = "bands: " + std::to_string(opt.bands) + "\nrealizable: " + yesno(ok) +
                    "\nR: " + std::to_string(mr.rank) + "\ndiagonal: " +
                    bits_to_string(mr.diagonal) + "\n";
            return;
        }
        OracleResult r = oracle_weak_realizability(h, exec_of(), bound_or(kDefaultSweepBound));
        out["realizable"] = r.realizable;
        out["twists"] = r.twists ? ordered_json(bits_to_string(*r.twists)) : ordered_json(nullptr);
        table = std::string("realizable: ") + yesno(r.realizable) + "\ntwists: " +
                (r.twists ? bits_to_string(*r.twists) : "-") + "\n";
    });

    // mohar ---------------------------------------------------------------
    auto* mohar = app.add_subcommand(
        "mohar", "crossing matrix, band-count rank and surface shape of one twisted disk");
    mohar->add_option("word", opt.word, "double-occurrence word")->required();
    mohar->add_option("--twists", opt.twists,
                      "0/1 string, one bit per letter by first occurrence (default: all 0)");
    add_common(mohar);
    mohar->callback([&] {
        Hieroglyph h = parse_word(opt.word);
        std::vector<uint8_t> twists =
            mohar->count("--twists") > 0
                ? parse_twist_bits(opt.twists, h.letters())
                : std::vector<uint8_t>(static_cast<size_t>(h.letters()), 0);
        RibbonDisk d(h, twists);
        SymMatrixGF2 cm = crossing_matrix(d);
        SurfaceSummary s = surface_summary(d);
        out["status"] = "ok";
        out["n"] = h.letters();
        out["twists"] = bits_to_string(twists);
        out["min_bands"] = min_mobius_bands(d);
        out["crossing_matrix"] = matrix_to_rows(cm);
        out["surface"] = ordered_json{{"euler_characteristic", s.euler_characteristic},
                                      {"boundary_components", s.boundary_components},
                                      {"orientable", s.orientable}};
        table = "twists: " + bits_to_string(twists) + "\nmin_bands: " +
                std::to_string(min_mobius_bands(d)) + "\neuler_characteristic: " +
                std::to_string(s.euler_characteristic) + "\nboundary_components: " +
                std::to_string(s.boundary_components) + "\norientable: " + yesno(s.orientable) +
                "\n";
    });

    // rank ----------------------------------------------------------------
    auto* rank = app.add_subcommand("rank", "GF(2) rank of a symmetric 0/1 matrix");
    rank->add_option("--matrix", opt.matrix_path, "matrix text file")->required();
    add_common(rank);
    rank->callback([&] {
        SymMatrixGF2 m = SymMatrixGF2::parse_text(read_file(opt.matrix_path));
        out["status"] = "ok";
        out["n"] = m.dim();
        out["rank"] = rank_gf2(m);
        table = "rank: " + std::to_string(rank_gf2(m)) + "\n";
    });

    // minrank ---------------------------------------------------------------
    auto* minrank = app.add_subcommand(
        "minrank", "minimum GF(2) rank over all rewrites of the diagonal");
    minrank->add_option("--matrix", opt.matrix_path, "matrix text file")->required();
    minrank->add_option("--bound", opt.bound, "dimension cap for the 2^n sweep")
        ->check(CLI::NonNegativeNumber);
    minrank->add_flag("--serial", opt.serial, "disable the parallel sweep kernel");
    add_common(minrank);
    minrank->callback([&] {
        SymMatrixGF2 m = SymMatrixGF2::parse_text(read_file(opt.matrix_path));
        MinRankResult mr = min_rank_over_diagonal(m, exec_of(), bound_or(kDefaultSweepBound));
        out["status"] = "ok";
        out["n"] = m.dim();
        out["R"] = mr.rank;
        out["diagonal"] = bits_to_array(mr.diagonal);
        table = "R: " + std::to_string(mr.rank) + "\ndiagonal: " + bits_to_string(mr.diagonal) +
                "\n";
    });

    // lemma1 ----------------------------------------------------------------
    auto* lemma1 = app.add_subcommand(
        "lemma1", "block form, forbidden-pattern witness and rank<=1 diagonal of a matrix");
    lemma1->add_option("--matrix", opt.matrix_path, "matrix text file")->required();
    add_common(lemma1);
    lemma1->callback([&] {
        SymMatrixGF2 m = SymMatrixGF2::parse_text(read_file(opt.matrix_path));
        auto diag = rank_le1_with_diagonal(m);
        auto form = block_form(m);
        auto witness = find_pq_witness(m);
        out["status"] = "ok";
        out["n"] = m.dim();
        out["rank_le1"] = diag.has_value();
        out["diagonal"] = diag ? bits_to_array(*diag) : ordered_json(nullptr);
        if (form) {
            out["block_form"] = ordered_json{{"permutation", form->permutation},
                                             {"diagonal", bits_to_array(form->diagonal)},
                                             {"block_size", form->block_size}};
        } else {
            out["block_form"] = nullptr;
        }
        if (witness) {
            out["pq_witness"] =
                ordered_json{{"kind", witness->kind == PQWitness::Kind::P ? "P" : "Q"},
                             {"indices", witness->indices}};
        } else {
            out["pq_witness"] = nullptr;
        }
        table = std::string("rank_le1: ") + yesno(diag.has_value()) + "\n";
        if (form)
            table += "block_size: " + std::to_string(form->block_size) + "\n";
        if (witness) {
            table += std::string("pattern: ") +
                     (witness->kind == PQWitness::Kind::P ? "P" : "Q") + " at";
            for (int i : witness->indices) table += " " + std::to_string(i);
            table += "\n";
        }
    });

    // enumerate -------------------------------------------------------------
    auto* enumerate = app.add_subcommand(
        "enumerate", "every double-occurrence word (or canonical class) with n letters");
    enumerate->add_option("n", opt.n, "letter count")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--classes", opt.classes, "canonical equivalence classes instead");
    enumerate->add_option("--bound", opt.bound, "letter-count cap")
        ->check(CLI::NonNegativeNumber);
    add_common(enumerate);
    enumerate->callback([&] {
        std::vector<std::string> listed;
        if (opt.classes) {
            for (const CanonicalKey& key : enumerate_classes(opt.n, bound_or(kDefaultClassBound)))
                listed.push_back(key.to_string());
        } else {
            enumerate_words(
                opt.n, [&](const Hieroglyph& h) { listed.push_back(h.word_string()); },
                bound_or(kDefaultWordBound));
        }
        out["status"] = "ok";
        out["n"] = opt.n;
        out["kind"] = opt.classes ? "classes" : "words";
        out["count"] = listed.size();
        out["items"] = listed;
        for (const auto& w : listed) table += w + "\n";
    });

    // census ----------------------------------------------------------------
    auto* census_cmd = app.add_subcommand(
        "census", "class counts and how many classes pass the realizability check");
    census_cmd->add_option("n", opt.n, "letter count")->required()->check(CLI::NonNegativeNumber);
    census_cmd->add_flag("--per-class", opt.per_class, "list each class with its verdict");
    census_cmd->add_option("--bound", opt.bound, "letter-count cap")
        ->check(CLI::NonNegativeNumber);
    census_cmd->add_flag("--serial", opt.serial, "disable the parallel generation kernel");
    add_common(census_cmd);
    census_cmd->callback([&] {
        Census c = census(opt.n, exec_of(), opt.per_class, bound_or(kDefaultClassBound));
        out["status"] = "ok";
        out["n"] = c.n;
        out["total_matchings"] = c.total_matchings;
        out["classes"] = c.classes;
        out["realizable_classes"] = c.realizable_classes;
        table = "n\ttotal_matchings\tclasses\trealizable_classes\n" + std::to_string(c.n) + "\t" +
                std::to_string(c.total_matchings) + "\t" + std::to_string(c.classes) + "\t" +
                std::to_string(c.realizable_classes) + "\n";
        if (opt.per_class) {
            ordered_json list = ordered_json::array();
            for (const auto& [word, ok] : c.per_class) {
                list.push_back(ordered_json{{"word", word}, {"realizable", ok}});
                table += word + "\t" + yesno(ok) + "\n";
            }
            out["per_class"] = std::move(list);
        }
    });

    // realize-graph -----------------------------------------------------------
    auto* realize = app.add_subcommand(
        "realize-graph", "find a word whose interlacement graph is the given graph");
    realize->add_option("--edges", opt.edges_path, "graph file: first line n, then 'u v' lines")
        ->required();
    realize->add_flag("--count", opt.count,
                      "also count distinct realizations up to rotation/reflection");
    realize->add_option("--bound", opt.bound, "vertex-count cap for the search")
        ->check(CLI::NonNegativeNumber);
    add_common(realize);
    realize->callback([&] {
        LabeledGraph g = load_graph(read_file(opt.edges_path));
        auto witness = realize_graph(g, bound_or(kDefaultRealizeBound));
        out["status"] = "ok";
        out["n"] = g.n;
        out["realizable"] = witness.has_value();
        out["word"] = witness ? ordered_json(witness->word_string()) : ordered_json(nullptr);
        table = std::string("realizable: ") + yesno(witness.has_value()) + "\n";
        if (witness) table += "word: " + witness->word_string() + "\n";
        if (opt.count) {
            long long cnt = count_realizations(g, bound_or(kDefaultRealizeBound));
            out["realizations"] = cnt;
            table += "realizations: " + std::to_string(cnt) + "\n";
        }
    });

    // nonrealizable -------------------------------------------------------------
    auto* nonreal = app.add_subcommand(
        "nonrealizable", "graphs on n vertices that are no word's interlacement graph");
    nonreal->add_option("n", opt.n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    nonreal->add_option("--bound", opt.bound, "vertex-count cap")
        ->check(CLI::NonNegativeNumber);
    add_common(nonreal);
    nonreal->callback([&] {
        const int bound = bound_or(kDefaultGraphBound);
        const size_t total = all_graphs_up_to_iso(opt.n, bound).size();
        std::vector<LabeledGraph> bad = find_nonrealizable(opt.n, bound);
        out["status"] = "ok";
        out["n"] = opt.n;
        out["graphs_total"] = total;
        out["count"] = bad.size();
        ordered_json list = ordered_json::array();
        for (const LabeledGraph& g : bad) {
            ordered_json edges = ordered_json::array();
            std::string line;
            for (auto [u, v] : g.edges) {
                edges.push_back(ordered_json::array({u, v}));
                line += " " + std::to_string(u) + "-" + std::to_string(v);
            }
            list.push_back(ordered_json{{"n", g.n}, {"edges", std::move(edges)}});
            table += "edges:" + (line.empty() ? " (none)" : line) + "\n";
        }
        out["graphs"] = std::move(list);
        table = "graphs_total: " + std::to_string(total) + "\nnonrealizable: " +
                std::to_string(bad.size()) + "\n" + table;
    });

    // render ----------------------------------------------------------------
    auto* render = app.add_subcommand("render", "draw the chord diagram as an SVG file");
    render->add_option("word", opt.word, "double-occurrence word")->required();
    auto* render_twists = render->add_option(
        "--twists", opt.twists, "0/1 string, one bit per letter by first occurrence");
    render->add_option("-o,--out", opt.out_path, "output SVG path")->required();
    add_common(render);
    render->callback([&] {
        Hieroglyph h = parse_word(opt.word);
        std::optional<std::vector<uint8_t>> twists;
        if (render_twists->count() > 0) twists = parse_twist_bits(opt.twists, h.letters());
        std::string svg = render_svg(h, twists);
        write_file(opt.out_path, svg);
        out["status"] = "ok";
        out["path"] = opt.out_path;
        out["bytes"] = svg.size();
        table = "wrote " + opt.out_path + " (" + std::to_string(svg.size()) + " bytes)\n";
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        auto parsed = app.get_subcommands();
        result.output = (parsed.empty() ? &app : parsed.front())->help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.output = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 1;
        result.error_message = e.what();
        return result;
    } catch (const Error& e) {
        result.exit_code = e.exit_code();
        result.error_message = std::string(to_string(e.kind())) + ": " + e.what();
        return result;
    }

    result.output = use_table ? table : out.dump() + "\n";
    return result;
}

}  // namespace hiero
