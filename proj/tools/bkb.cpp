// Command-line driver.  Exit codes: 0 success, 1 verification failure,
// 2 configuration error, 3 membership oracle undecided.

#include "bkb/io.hpp"
#include "bkb/suite.hpp"
#include "bkb/typea.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace bkb;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string system;
    std::string convex;
    std::string example;
    std::string ordering;
    std::string start;
    std::string word;
    std::string sigma;
    std::string poset;
    std::string cert;
    std::string out;
    std::string format;
    int depth = 8;
    int radius = 12;
    int max_steps = 0;  // 0: 10 * |I| * 50
    int max_walk_len = 24;
    int size = 0;
    bool radius_set = false;
};

// The loaded inputs.  The convex set refers to *sys, so both live here.
struct Inputs {
    SystemPtr sys;
    std::optional<ConvexSet> L;
    Word ordering;
    GroupElement start;
    int period = 0;
};

Counterexample example_by_name(const std::string& name) {
    if (name == "D~4") return d4_example();
    if (name == "F~4") return f4_example();
    if (name == "E~8") return e8_example();
    int n, a, ap, b, bp;
    if (std::sscanf(name.c_str(), "Bfam(%d,%d,%d)", &n, &b, &bp) == 3) return family_B_example(n, b, bp);
    if (std::sscanf(name.c_str(), "Dfam(%d,%d,%d,%d,%d)", &n, &a, &ap, &b, &bp) == 5)
        return family_D_example(n, a, ap, b, bp);
    throw ConfigError("unknown example '" + name + "' (D~4, F~4, E~8, Bfam(n,b,b'), Dfam(n,a,a',b,b'))");
}

Inputs load(const Config& c, bool need_convex) {
    Inputs in;
    if (!c.example.empty()) {
        Counterexample ex = example_by_name(c.example);
        in.sys = ex.sys;
        in.L = ex.L;
        in.ordering = ex.ordering;
        in.start = ex.u0;
        in.period = ex.period;
    } else {
        if (c.system.empty()) throw ConfigError("--system or --example is required");
        in.sys = load_system(c.system);
        Word ord(static_cast<std::size_t>(in.sys->rank()));
        for (int i = 0; i < in.sys->rank(); ++i) ord[static_cast<std::size_t>(i)] = i;
        in.ordering = ord;
        in.start = GroupElement::identity(*in.sys);
        if (!c.convex.empty()) in.L = load_convex(*in.sys, c.convex);
    }
    if (in.L) {
        Effort e = in.L->effort();
        e.radius = c.radius;
        e.depth = c.depth;
        in.L->set_effort(e);
    }
    if (!c.ordering.empty()) in.ordering = in.sys->parse_word(c.ordering);
    if (!c.start.empty()) in.start = element_of(*in.sys, in.sys->parse_word(c.start));
    if (need_convex && !in.L) throw ConfigError("--convex or --example is required");
    return in;
}

void check_coxeter_word(const CoxeterSystem& sys, const Word& w) {
    std::vector<int> seen(static_cast<std::size_t>(sys.rank()), 0);
    if (static_cast<int>(w.size()) != sys.rank()) throw ConfigError("ordering must use every generator once");
    for (int i : w)
        if (seen[static_cast<std::size_t>(i)]++) throw ConfigError("ordering must use every generator once");
}

void emit(const Config& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + c.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_group(const Config& c) {
    Inputs in = load(c, false);
    const CoxeterSystem& W = *in.sys;
    bool fin = is_finite(W);
    std::optional<std::size_t> npos;
    if (fin) npos = positive_roots(W, 4 * static_cast<int>(enumerate_group(W).size())).size();
    if (c.format == "json") {
        json j = system_to_json(W);
        j["finite"] = fin;
        if (npos) j["positive_roots"] = *npos;
        std::vector<std::vector<std::string>> B;
        for (int i = 0; i < W.rank(); ++i) {
            B.emplace_back();
            for (int k = 0; k < W.rank(); ++k) B.back().push_back(W.B(i, k).str());
        }
        j["B"] = B;
        emit(c, dump(j));
        return 0;
    }
    std::ostringstream os;
    os << "labels:";
    for (const auto& l : W.labels()) os << ' ' << l;
    os << "\nB:\n";
    for (int i = 0; i < W.rank(); ++i) {
        for (int k = 0; k < W.rank(); ++k) os << (k ? "\t" : "") << W.B(i, k).str();
        os << '\n';
    }
    os << "finite: " << (fin ? "yes" : "no") << '\n';
    if (npos) os << "positive roots: " << *npos << '\n';
    emit(c, os.str());
    return 0;
}

int cmd_graph(const Config& c) {
    Inputs in = load(c, false);
    SmallRootGraph g = build_graph(*in.sys, {c.depth, 6});
    if (c.format == "tsv")
        emit(c, graph_edge_list(g));
    else if (c.format == "json") {
        json j;
        j["vertices"] = json::array();
        for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.vertex_name(v));
        j["edges"] = json::array();
        for (const auto& e : g.edges)
            j["edges"].push_back({{"source", g.vertex_name(e.source)},
                                  {"target", g.vertex_name(e.target)},
                                  {"label", in.sys->label(e.label)},
                                  {"solidity", solidity_str(e.solidity)}});
        j["unknown"] = g.unknown;
        emit(c, dump(j));
    } else
        emit(c, graph_dot(g));
    if (g.conflicts) {
        std::cerr << g.conflicts << " edges classified both solid and dotted\n";
        return 1;
    }
    return 0;
}

int cmd_trajectory(const Config& c) {
    Inputs in = load(c, true);
    int steps = c.max_steps ? c.max_steps : 10 * in.sys->rank() * 50;
    TrajectoryRecord rec = run_trajectory(*in.L, in.ordering, in.start, steps);
    emit(c, trajectory_tsv(*in.sys, rec));
    if (rec.period)
        std::cerr << "preperiod " << *rec.preperiod << " period " << *rec.period << '\n';
    else
        std::cerr << "no period within " << steps << " steps\n";
    return 0;
}

int cmd_walks(const Config& c) {
    Inputs in = load(c, false);
    check_coxeter_word(*in.sys, in.ordering);
    SmallRootGraph g = build_graph(*in.sys, {c.depth, 6});
    WalkSearchResult r = search_plausible_walks(g, in.ordering, c.max_walk_len);
    std::ostringstream os;
    for (const auto& w : r.walks) os << w.vertices.size() << '\t' << walk_str(g, w) << '\n';
    emit(c, os.str());
    std::cerr << r.walks.size() << " walks, " << r.nodes << " nodes" << (r.truncated ? ", truncated" : "") << '\n';
    return 0;
}

int cmd_lift(const Config& c) {
    Inputs in = load(c, false);
    check_coxeter_word(*in.sys, in.ordering);
    SmallRootGraph g = build_graph(*in.sys, {c.depth, 6});
    WalkSearchResult r = search_plausible_walks(g, in.ordering, c.max_walk_len, true, 200);
    for (const auto& w : r.walks) {
        LiftBounds lb;
        if (c.radius_set) lb.radius = c.radius;
        auto cert = lift_walk(in.sys, g, w, in.ordering, lb);
        if (!cert) continue;
        CertificateCheck chk = verify_certificate(*cert);
        if (!chk.ok) continue;
        emit(c, dump(certificate_to_json(*cert)));
        std::cerr << "lifted " << walk_str(g, w) << ", period " << cert->period << '\n';
        return 0;
    }
    std::cerr << "no walk of length <= " << c.max_walk_len << " lifts (" << r.walks.size() << " tried)\n";
    return 1;
}

int cmd_verify(const Config& c) {
    if (c.cert.empty()) throw ConfigError("--cert is required");
    WalkCertificate cert = certificate_from_json(read_json_file(c.cert));
    CertificateCheck chk = verify_certificate(cert);
    emit(c, std::string(chk.ok ? "VERIFIED" : "REJECTED") + (chk.message.empty() ? "" : ": " + chk.message) + "\n");
    return chk.ok ? 0 : 1;
}

int cmd_sort(const Config& c) {
    Inputs in = load(c, true);
    if (!is_finite(*in.sys)) throw ConfigError("sort needs a finite group");
    Word w = c.word.empty() ? reduced_word(long_element(*in.sys)) : in.sys->parse_word(c.word);
    bool ok = sort_check(*in.L, w);
    emit(c, ok ? "SORTED\n" : "NOT SORTED\n");
    return ok ? 0 : 1;
}

int cmd_mc(const Config& c) {
    Inputs in = load(c, false);
    check_coxeter_word(*in.sys, in.ordering);
    emit(c, std::to_string(m_of_c(*in.sys, in.ordering)) + "\n");
    return 0;
}

int cmd_fold(const Config& c) {
    Inputs in = load(c, false);
    if (c.sigma.empty()) throw ConfigError("--sigma is required");
    std::vector<int> sigma;
    for (int i : in.sys->parse_word(c.sigma)) sigma.push_back(i);
    FoldingMap fm = fold(*in.sys, sigma);
    json j = system_to_json(fm.folded);
    j["orbits"] = json::array();
    for (const auto& o : fm.orbits) j["orbits"].push_back(in.sys->word_str(o));
    emit(c, dump(j));
    return 0;
}

Poset parse_poset(int size, const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int a, b;
        if (std::sscanf(item.c_str(), "%d<%d", &a, &b) != 2 || a < 0 || b < 0 || a >= size || b >= size)
            throw ConfigError("bad poset relation '" + item + "'");
        pairs.emplace_back(a, b);
    }
    try {
        return Poset::from_pairs(size, pairs);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

int cmd_typea(const Config& c) {
    if (c.size < 1) throw ConfigError("--size must be positive");
    Poset P = parse_poset(c.size, c.poset);
    int n = c.size - 1;
    auto ext = linear_extensions(P);
    std::set<Perm> target(ext.begin(), ext.end());
    auto image_is_target = [&](auto&& f) {
        std::set<Perm> image;
        for (const auto& u : all_perms(c.size)) image.insert(f(u));
        return image == target;
    };
    auto iterate = [&](auto op, int k) {
        return [&, op, k](Perm u) {
            for (int t = 0; t < k; ++t) u = op(P, u);
            return u;
        };
    };
    int kg = (n + 2) / 2;
    bool pro = image_is_target(iterate(typeA_pro, n));
    bool ev = image_is_target([&](const Perm& u) { return typeA_ev(P, u); });
    bool gyr = image_is_target(iterate(typeA_gyr, kg));
    std::ostringstream os;
    os << "linear extensions: " << ext.size() << '\n'
       << "Pro^" << n << ": " << (pro ? "sorts" : "does not sort") << '\n'
       << "Ev: " << (ev ? "sorts" : "does not sort") << '\n'
       << "Gyr^" << kg << ": " << (gyr ? "sorts" : "does not sort") << '\n';
    emit(c, os.str());
    return pro && ev && gyr ? 0 : 1;
}

int cmd_heavy(const Config& c) {
    Inputs in = load(c, true);
    HeavyBounds b;
    b.radius = std::min(c.radius, 4);
    HeavyVerdict v = is_heavy_bounded(*in.L, in.ordering, b);
    emit(c, dump(verdict_to_json(*in.sys, v)));
    return 0;
}

int cmd_verify_suite(const Config& c) {
    std::ostringstream os;
    int failed = 0;
    for (const auto& chk : acceptance_checks()) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = chk.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char line[128];
        std::snprintf(line, sizeof line, "[%s] %2d %-34s %7.2fs  ", r.ok ? "PASS" : "FAIL", chk.id, chk.name.c_str(), secs);
        os << line << r.detail << '\n';
        std::cerr << line << r.detail << '\n';
        if (!r.ok) ++failed;
    }
    if (!c.out.empty()) emit(c, os.str());
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bender-Knuth billiards in Coxeter groups"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s) {
        s->add_option("--system", c.system, "system JSON file or builtin:NAME");
        s->add_option("--example", c.example, "built-in counterexample: D~4, F~4, E~8, Bfam(n,b,b'), Dfam(n,a,a',b,b')");
        s->add_option("--ordering", c.ordering, "comma-separated labels in application order");
        s->add_option("--out", c.out, "output path (default stdout)");
        s->add_option("--format", c.format, "dot, json or tsv")->check(CLI::IsMember({"dot", "json", "tsv", "text"}));
        s->add_option("--depth", c.depth, "root universe depth")->check(CLI::PositiveNumber);
        s->add_option("--radius", c.radius, "Cayley-graph search radius")->check(CLI::PositiveNumber);
    };
    auto convex = [&](CLI::App* s) {
        s->add_option("--convex", c.convex, "convex set JSON file")->check(CLI::ExistingFile);
        s->add_option("--start", c.start, "starting element as a word");
        return s;
    };
    std::vector<std::pair<CLI::App*, int (*)(const Config&)>> cmds;
    auto add = [&](const char* name, const char* help, int (*fn)(const Config&)) {
        CLI::App* s = app.add_subcommand(name, help);
        common(s);
        cmds.emplace_back(s, fn);
        return s;
    };
    add("group", "labels, bilinear form, finiteness", cmd_group);
    add("graph", "small-root billiards graph", cmd_graph);
    convex(add("trajectory", "billiards trajectory as TSV", cmd_trajectory))
        ->add_option("--max-steps", c.max_steps, "step bound")
        ->check(CLI::PositiveNumber);
    add("walks", "billiards-plausible closed walks", cmd_walks)
        ->add_option("--max-walk-len", c.max_walk_len, "walk length bound")
        ->check(CLI::PositiveNumber);
    add("lift", "lift a plausible walk to a certificate", cmd_lift)
        ->add_option("--max-walk-len", c.max_walk_len, "walk length bound")
        ->check(CLI::PositiveNumber);
    add("verify", "check a certificate file", cmd_verify)->add_option("--cert", c.cert, "certificate JSON")->check(CLI::ExistingFile);
    convex(add("sort", "does a word sort every element into L", cmd_sort))->add_option("--word", c.word, "toggle word (default: a reduced word for w_o)");
    add("mc", "M(c) for the Coxeter element given by --ordering", cmd_mc);
    add("fold", "fold along a graph automorphism", cmd_fold)->add_option("--sigma", c.sigma, "image labels of the generators in order");
    CLI::App* ta = add("typea", "poset sorting by Pro, Ev and Gyr", cmd_typea);
    ta->add_option("--size", c.size, "number of poset elements")->required();
    ta->add_option("--poset", c.poset, "relations a<b, comma separated, 0-based");
    convex(add("heavy", "bounded heaviness search", cmd_heavy));
    add("verify-suite", "run the acceptance checks", cmd_verify_suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    for (auto [s, fn] : cmds)
        if (s->parsed()) c.radius_set = s->count("--radius") > 0;
    try {
        for (auto [s, fn] : cmds)
            if (s->parsed()) return fn(c);
    } catch (const OracleUndecided& e) {
        std::cerr << "undecided: " << e.what() << '\n';
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
