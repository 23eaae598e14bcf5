#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsem/catalog.hpp"
#include "dsem/comb_map.hpp"
#include "dsem/curvature.hpp"
#include "dsem/cycles.hpp"
#include "dsem/errors.hpp"
#include "dsem/pair_search.hpp"
#include "dsem/pair_sets.hpp"
#include "dsem/tables.hpp"
#include "dsem/torus.hpp"
#include "dsem/types.hpp"

using namespace dsem;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int torus_type(const std::string& tag) {
    const int t = dsem_type(tag).index;
    if (t > 4) throw Error(ErrorCode::InadmissibleParams, "torus families exist for T1..T4 only, got " + tag);
    return t;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << text;
}

json combo_json(const FacePair& pair, const LinkCombo& c) {
    return json{{pair.first.str(), c.first.str()}, {pair.second.str(), c.second.str()}};
}

json verdict_json(const FacePair& pair, const Verdict& v) {
    json combos = json::array();
    for (const auto& c : v.combos) combos.push_back(combo_json(pair, c));
    return json{{"f1", pair.first.str()}, {"f2", pair.second.str()}, {"verdict", outcome_name(v.outcome)},
                {"depth", v.depth},       {"nodes", v.nodes},         {"combinations", combos}};
}

json cycle_type_json(const CycleType& t) { return json{t.l1, json{t.l_lo, t.l_hi}, t.l4}; }

json params_json(const TorusParams& p) { return json{{"i", p.i}, {"j", p.j}, {"k", p.k}}; }

// ---------------------------------------------------------------- verify-all suites

struct Suite {
    std::string name;
    std::string failure;  // empty on success
};

Suite check_curvature() {
    Suite s{"curvature", ""};
    const auto a = zero_curvature_face_sequences();
    const auto b = zero_curvature_face_sequences_direct();
    if (a != b) return s.failure = "multiset and direct enumerations differ", s;
    std::ostringstream got;
    for (const auto& f : a) got << f.str() << '\n';
    const std::string golden = read_file(std::string(DSEM_DATA_DIR) + "/golden/zero_curvature.txt");
    if (got.str() != golden) s.failure = "enumeration differs from data/golden/zero_curvature.txt";
    else if (a.size() != 21) s.failure = "expected 21 face-sequences, got " + std::to_string(a.size());
    return s;
}

Suite check_catalog(const std::string& dir) {
    Suite s{"catalog", ""};
    const auto specs = load_catalog(dir);
    if (specs.size() != 21) return s.failure = "expected 21 specs, found " + std::to_string(specs.size()), s;
    for (const auto& spec : specs) {
        const auto rep = verify_spec(spec);
        if (!rep.pass) return s.failure = spec.tag + ": " + rep.problems.front(), s;
    }
    for (const auto& w : {StripWord{Strip::H1}, StripWord{Strip::H2}}) {
        const auto rep = verify_patch(build_t22(w, 3), t22_pair(), t22_links());
        if (!rep.pass) return s.failure = "T22 " + strip_word_str(w) + ": " + rep.problems.front(), s;
    }
    return s;
}

Suite check_oracle(int max_n) {
    Suite s{"oracle", ""};
    for (int type = 1; type <= 4; ++type)
        for (int n = 1; n <= max_n; ++n) {
            const auto params = enumerate_admissible(type, n);
            std::vector<CombMap> maps;
            std::vector<CycleType> types;
            for (const auto& p : params) {
                maps.push_back(build_torus_map(p));
                types.push_back(cycle_type(maps.back(), p));
                if (type == 1 || type == 3) {
                    const int c = type == 1 ? 2 * p.j / 3 : p.j / 3;
                    const int closed = std::min(p.k + p.j, ((p.i - p.k - c) % p.i + p.i) % p.i + p.j);
                    if (types.back().l4 != closed)
                        return s.failure = p.str() + ": traced l4 " + std::to_string(types.back().l4) +
                                           " differs from the closed form " + std::to_string(closed),
                               s;
                }
            }
            for (std::size_t a = 0; a < params.size(); ++a)
                for (std::size_t b = a + 1; b < params.size(); ++b)
                    if ((types[a] == types[b]) != is_isomorphic(maps[a], maps[b]))
                        return s.failure = params[a].str() + " vs " + params[b].str() +
                                           ": cycle-type and isomorphism disagree",
                               s;
        }
    return s;
}

Suite check_theorem1(int threads) {
    Suite s{"theorem1", ""};
    const auto rep = reproduce_theorem1(kDefaultRadius, kDefaultBudget, threads);
    for (const auto& r : rep.results) {
        const std::string name = "(" + r.pair.first.str() + ", " + r.pair.second.str() + ")";
        if (r.listed_dsem && r.verdict.outcome != Outcome::Consistent)
            return s.failure = name + " is a planar pair but came out " + outcome_name(r.verdict.outcome), s;
        if (!r.listed_dsem && r.verdict.outcome == Outcome::Consistent)
            return s.failure = name + " is consistent but not a planar pair", s;
    }
    if (rep.total_combos != 22) s.failure = "expected 22 type combinations, got " + std::to_string(rep.total_combos);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Doubly semi-equivelar maps: curvature, torus classification, pair search and planar catalog"};
    app.require_subcommand(1);
    std::string format = "tsv", out_path;

    // solve-curvature
    auto* solve = app.add_subcommand("solve-curvature", "zero-curvature face-sequences");
    std::string solve_format = "text";
    solve->add_option("--format", solve_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // pair
    auto* pair = app.add_subcommand("pair", "bounded-radius search for one face-sequence pair");
    std::string f1_text, f2_text;
    int radius = kDefaultRadius;
    std::int64_t budget = kDefaultBudget;
    pair->add_option("--f1", f1_text, "first face-sequence, e.g. 3,3,3,4,4")->required();
    pair->add_option("--f2", f2_text, "second face-sequence")->required();
    pair->add_option("--radius", radius, "closure radius");
    pair->add_option("--budget", budget, "search node budget");

    // theorem1
    auto* thm = app.add_subcommand("theorem1", "pair search over all candidate pairs");
    int threads = 1;
    thm->add_option("--radius", radius, "closure radius");
    thm->add_option("--budget", budget, "search node budget per pair");
    thm->add_option("-j,--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    thm->add_option("--format", format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}));

    // torus build | enum
    auto* torus = app.add_subcommand("torus", "M(i,j,k) torus maps");
    torus->require_subcommand(1);
    auto* tbuild = torus->add_subcommand("build", "build one map as JSON");
    std::string type_tag;
    int ti = 0, tj = 0, tk = 0, tn = 0;
    tbuild->add_option("--type", type_tag, "T1..T4")->required();
    tbuild->add_option("-i", ti, "columns")->required();
    tbuild->add_option("-j", tj, "rows")->required();
    tbuild->add_option("-k", tk, "seam shift")->required();
    tbuild->add_option("--out", out_path, "output file (default stdout)");
    auto* tenum = torus->add_subcommand("enum", "admissible parameters with class ids");
    tenum->add_option("--type", type_tag, "T1..T4")->required();
    tenum->add_option("-n", tn, "vertex count")->required();

    // classify
    auto* cls = app.add_subcommand("classify", "isomorphism classes by cycle-type");
    int n_min = 0, n_max = 0;
    cls->add_option("--type", type_tag, "T1..T4")->required();
    auto* n_opt = cls->add_option("-n", tn, "vertex count");
    auto* nmin_opt = cls->add_option("--n-min", n_min, "lower end of a vertex-count range");
    auto* nmax_opt = cls->add_option("--n-max", n_max, "upper end of a vertex-count range");
    nmin_opt->needs(nmax_opt)->excludes(n_opt);
    nmax_opt->needs(nmin_opt)->excludes(n_opt);
    cls->add_option("--format", format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}));

    // tables
    auto* tables = app.add_subcommand("tables", "classification tables for T1..T4 as TSV");
    std::string out_dir;
    tables->add_option("--type", type_tag, "only this type");
    tables->add_option("--out-dir", out_dir, "write table1.tsv..table4.tsv here instead of stdout");

    // iso
    auto* iso = app.add_subcommand("iso", "isomorphism test of two map JSON files (exit 0 iff isomorphic)");
    std::string map_a, map_b;
    iso->add_option("a", map_a, "first map")->required();
    iso->add_option("b", map_b, "second map")->required();

    // catalog verify | render
    auto* cat = app.add_subcommand("catalog", "planar tiling catalog");
    cat->require_subcommand(1);
    auto* cverify = cat->add_subcommand("verify", "verify catalog specs");
    bool all = false;
    std::vector<std::string> type_tags;
    std::string spec_file, word_text;
    int reps = 4;
    cverify->add_flag("--all", all, "every spec in the catalog plus T22 words H1 and H2");
    cverify->add_option("--type", type_tags, "spec tags to verify");
    cverify->add_option("--file", spec_file, "verify a spec file");
    cverify->add_option("--t22", word_text, "verify a strip word, e.g. H1,H2");
    cverify->add_option("--reps", reps, "strip word repetitions");
    auto* crender = cat->add_subcommand("render", "SVG drawing of an expanded spec or strip word");
    std::string svg_path;
    crender->add_option("--type", type_tag, "spec tag");
    crender->add_option("--file", spec_file, "spec file");
    crender->add_option("--t22", word_text, "strip word");
    crender->add_option("--reps", reps, "repetitions per direction");
    crender->add_option("--svg", svg_path, "output file (default stdout)");

    // verify-all
    auto* vall = app.add_subcommand("verify-all", "curvature, catalog, oracle and pair-search checks");
    int oracle_n = 24;
    vall->add_option("--oracle-n", oracle_n, "largest vertex count of the oracle sweep");
    vall->add_option("-j,--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*solve) {
            const auto seqs = zero_curvature_face_sequences();
            if (solve_format == "json") {
                json j = json::array();
                for (const auto& f : seqs) j.push_back(f.str());
                std::cout << j.dump(2) << '\n';
            } else {
                for (const auto& f : seqs) std::cout << f.str() << '\n';
            }
            return 0;
        }

        if (*pair) {
            const FaceSeq a = FaceSeq::parse(f1_text), b = FaceSeq::parse(f2_text);
            const FacePair p = ordered_pair(a, b);
            const Verdict v = search_pair(p.first, p.second, radius, budget);
            json j = verdict_json(p, v);
            j["radius"] = radius;
            j["budget"] = budget;
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*thm) {
            const auto rep = reproduce_theorem1(radius, budget, threads);
            if (format == "json") {
                json rows = json::array();
                for (const auto& r : rep.results) {
                    json row = verdict_json(r.pair, r.verdict);
                    row["listed_planar"] = r.listed_dsem;
                    row["listed_excluded"] = r.listed_excluded;
                    row["conflict"] = r.conflict;
                    rows.push_back(row);
                }
                std::cout << json{{"radius", rep.radius},       {"refuted", rep.refuted},
                                  {"consistent", rep.consistent}, {"undecided", rep.undecided},
                                  {"type_combinations", rep.total_combos}, {"pairs", rows}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << "f1\tf2\tverdict\tdepth\tcombinations\tlisted\tconflict\n";
                for (const auto& r : rep.results) {
                    const char* listed = r.listed_dsem && r.listed_excluded ? "both"
                                         : r.listed_dsem                    ? "planar"
                                         : r.listed_excluded                ? "excluded"
                                                                            : "-";
                    std::cout << r.pair.first.str() << '\t' << r.pair.second.str() << '\t'
                              << outcome_name(r.verdict.outcome) << '\t' << r.verdict.depth << '\t'
                              << r.verdict.combos.size() << '\t' << listed << '\t' << (r.conflict ? "yes" : "no")
                              << '\n';
                }
                std::cout << "# radius " << rep.radius << ": " << rep.refuted << " refuted, " << rep.consistent
                          << " consistent, " << rep.undecided << " undecided, " << rep.total_combos
                          << " type combinations\n";
            }
            return 0;
        }

        if (*tbuild) {
            const TorusParams p{torus_type(type_tag), ti, tj, tk};
            write_out(out_path, map_to_json(build_torus_map(p)) + "\n");
            return 0;
        }

        if (*tenum) {
            const int type = torus_type(type_tag);
            const auto classes = classify(type, tn);
            std::vector<std::pair<TorusParams, int>> rows;
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (const auto& p : classes[c].members) rows.push_back({p, static_cast<int>(c)});
            std::sort(rows.begin(), rows.end());
            std::cout << "i\tj\tk\tclass\tcycle_type\n";
            for (const auto& [p, c] : rows)
                std::cout << p.i << '\t' << p.j << '\t' << p.k << '\t' << c << '\t' << classes[c].type.str() << '\n';
            return 0;
        }

        if (*cls) {
            const int type = torus_type(type_tag);
            if (!*n_opt && !*nmin_opt) throw CLI::RequiredError("-n or --n-min/--n-max");
            const int lo = *n_opt ? tn : n_min, hi = *n_opt ? tn : n_max;
            json j = json::array();
            if (format == "tsv") std::cout << "n\tclass\tcycle_type\tmembers\n";
            for (int n = lo; n <= hi; ++n) {
                const auto classes = classify(type, n);
                for (std::size_t c = 0; c < classes.size(); ++c) {
                    if (format == "tsv") {
                        std::cout << n << '\t' << c << '\t' << classes[c].type.str() << '\t'
                                  << members_str(classes[c].members) << '\n';
                    } else {
                        json members = json::array();
                        for (const auto& p : classes[c].members) members.push_back(params_json(p));
                        j.push_back({{"n", n}, {"class", c}, {"cycle_type", cycle_type_json(classes[c].type)},
                                     {"members", members}});
                    }
                }
            }
            if (format == "json") std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*tables) {
            std::vector<int> types = {1, 2, 3, 4};
            if (!type_tag.empty()) types = {torus_type(type_tag)};
            for (int t : types) {
                if (!out_dir.empty()) {
                    write_out(out_dir + "/table" + std::to_string(t) + ".tsv", table_tsv(t));
                } else {
                    std::cout << "# T" << t << '\n' << table_tsv(t);
                }
            }
            return 0;
        }

        if (*iso) {
            const bool same = is_isomorphic(map_from_json(read_file(map_a)), map_from_json(read_file(map_b)));
            std::cout << (same ? "isomorphic" : "not isomorphic") << '\n';
            return same ? 0 : kExitFail;
        }

        if (*cverify) {
            std::vector<std::pair<std::string, CatalogReport>> reports;
            if (all || !type_tags.empty()) {
                for (const auto& spec : load_catalog())
                    if (all || std::find(type_tags.begin(), type_tags.end(), spec.tag) != type_tags.end())
                        reports.push_back({spec.tag, verify_spec(spec)});
                for (const auto& tag : type_tags)
                    if (std::none_of(reports.begin(), reports.end(), [&](const auto& r) { return r.first == tag; }))
                        throw Error(ErrorCode::IoError, "no catalog spec for " + tag);
            }
            if (!spec_file.empty()) {
                CatalogReport rep;
                std::string name = spec_file;
                try {
                    const auto spec = load_spec(spec_file);
                    name = spec.tag;
                    rep = verify_spec(spec);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::BadSpec) throw;
                    rep.problems.push_back(e.what());
                }
                reports.push_back({name, rep});
            }
            std::vector<std::string> words;
            if (all) words = {"H1", "H2"};
            if (!word_text.empty()) words.push_back(word_text);
            for (const auto& w : words) {
                const StripWord word = parse_strip_word(w);
                reports.push_back({"T22 " + strip_word_str(word),
                                   verify_patch(build_t22(word, std::max(2, reps)), t22_pair(), t22_links())});
            }
            if (reports.empty()) throw CLI::RequiredError("--all, --type, --file or --t22");
            bool ok = true;
            for (const auto& [name, rep] : reports) {
                std::cout << name << '\t' << (rep.pass ? "PASS" : "FAIL") << '\t' << rep.interior
                          << " interior vertices\n";
                for (const auto& p : rep.problems) std::cout << "  " << p << '\n';
                ok = ok && rep.pass;
            }
            return ok ? 0 : kExitFail;
        }

        if (*crender) {
            const int sources = !type_tag.empty() + !spec_file.empty() + !word_text.empty();
            if (sources != 1) throw CLI::ValidationError("exactly one of --type, --file, --t22 is required");
            if (!word_text.empty()) {
                write_out(svg_path, render_svg(build_t22(parse_strip_word(word_text), reps), t22_pair()));
            } else {
                TilingSpec spec;
                if (!spec_file.empty()) {
                    spec = load_spec(spec_file);
                } else {
                    const auto specs = load_catalog();
                    auto it = std::find_if(specs.begin(), specs.end(), [&](const auto& s) { return s.tag == type_tag; });
                    if (it == specs.end()) throw Error(ErrorCode::IoError, "no catalog spec for " + type_tag);
                    spec = *it;
                }
                write_out(svg_path, render_svg(expand_patch(spec, reps, reps), spec.pair));
            }
            return 0;
        }

        if (*vall) {
            auto run = [&](auto fn) {
                Suite s = fn();
                std::cout << s.name << '\t' << (s.failure.empty() ? "PASS" : "FAIL");
                if (!s.failure.empty()) std::cout << '\t' << s.failure;
                std::cout << std::endl;
                return s.failure.empty();
            };
            bool ok = run(check_curvature);
            ok = run([] { return check_catalog(catalog_dir()); }) && ok;
            ok = run([&] { return check_oracle(oracle_n); }) && ok;
            ok = run([&] { return check_theorem1(threads); }) && ok;
            return ok ? 0 : kExitFail;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::ParseError:
            case ErrorCode::InadmissibleParams:
            case ErrorCode::InvalidRadius:
            case ErrorCode::BadWord:
            case ErrorCode::NotTwoClasses:
            case ErrorCode::UnknownVertex: return kExitUsage;
            default: return kExitFail;
        }
    }
    return 0;
}
