#include "bkb/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace bkb {

namespace {

// A word as "1,2,1" or as ["1", "2", "1"], both in application order.
Word word_from_json(const CoxeterSystem& sys, const json& w) {
    if (w.is_string()) return sys.parse_word(w.get<std::string>());
    Word out;
    for (const auto& l : w) out.push_back(sys.index_of(l.is_string() ? l.get<std::string>() : std::to_string(l.get<int>())));
    return out;
}

int sign_value(const json& s) {
    if (s.is_string()) {
        std::string t = s.get<std::string>();
        if (t == "+" || t == "+1" || t == "1") return 1;
        if (t == "-" || t == "-1") return -1;
        throw std::invalid_argument("bad half-space sign " + t);
    }
    return s.get<int>();
}

int bond_value(const json& m) {
    if (m.is_string()) {
        if (m.get<std::string>() == "inf") return kInf;
        return std::stoi(m.get<std::string>());
    }
    return m.get<int>();
}

}  // namespace

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

SystemPtr system_from_json(const json& j) {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    std::size_t n = labels.size();
    auto index = [&](const json& x) {
        std::string s = x.is_string() ? x.get<std::string>() : std::to_string(x.get<int>());
        auto it = std::find(labels.begin(), labels.end(), s);
        if (it == labels.end()) throw std::invalid_argument("unknown label " + s);
        return static_cast<int>(it - labels.begin());
    };
    std::vector<std::vector<int>> M(n, std::vector<int>(n, 2));
    for (std::size_t i = 0; i < n; ++i) M[i][i] = 1;
    if (j.contains("matrix")) {
        const auto& rows = j.at("matrix");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) M[a][b] = bond_value(rows.at(a).at(b));
    }
    if (j.contains("bonds"))
        for (const auto& b : j.at("bonds")) {
            int x = index(b.at(0)), y = index(b.at(1));
            M[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = M[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] =
                bond_value(b.at(2));
        }
    int order = j.value("field_order", 2);
    std::map<CoxeterSystem::Pair, Rational> mu;
    auto add_mu = [&](int x, int y, const json& v) {
        Rational q(v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>()));
        q.canonicalize();
        mu[{std::min(x, y), std::max(x, y)}] = q;
    };
    if (j.contains("mu")) {
        const auto& jm = j.at("mu");
        if (jm.is_object())  // {"a,b": "3/2"}
            for (const auto& [k, v] : jm.items()) {
                auto comma = k.find(',');
                if (comma == std::string::npos) throw std::invalid_argument("mu key must be \"a,b\"");
                add_mu(index(json(k.substr(0, comma))), index(json(k.substr(comma + 1))), v);
            }
        else
            for (const auto& b : jm) add_mu(index(b.at(0)), index(b.at(1)), b.at(2));
    }
    std::map<CoxeterSystem::Pair, Scalar> weights;
    if (j.contains("weights")) {
        const Field& f = Field::get(order);
        for (const auto& b : j.at("weights")) {
            int x = index(b.at(0)), y = index(b.at(1));
            weights[{std::min(x, y), std::max(x, y)}] = parse_scalar(b.at(2).get<std::string>(), f);
        }
    }
    return std::make_shared<const CoxeterSystem>(labels, M, mu, weights, order);
}

json system_to_json(const CoxeterSystem& sys) {
    json j;
    j["labels"] = sys.labels();
    json bonds = json::array();
    for (int a = 0; a < sys.rank(); ++a)
        for (int b = a + 1; b < sys.rank(); ++b)
            if (sys.m(a, b) != 2) {
                json m = sys.m(a, b) == kInf ? json("inf") : json(sys.m(a, b));
                bonds.push_back({sys.label(a), sys.label(b), m});
            }
    j["bonds"] = bonds;
    if (!sys.mu().empty()) {
        json mu = json::array();
        for (const auto& [p, q] : sys.mu()) mu.push_back({sys.label(p.first), sys.label(p.second), rational_str(q)});
        j["mu"] = mu;
    }
    if (!sys.symbolic_weights().empty()) {
        json w = json::array();
        for (const auto& [p, s] : sys.symbolic_weights())
            w.push_back({sys.label(p.first), sys.label(p.second), embed(s, sys.field()).str()});
        j["weights"] = w;
        j["field_order"] = sys.field().order();
    }
    return j;
}

SystemPtr builtin_system(const std::string& name) {
    std::smatch m;
    auto arg = [&](int k) { return std::stoi(m[k].str()); };
    if (std::regex_match(name, m, std::regex("A(\\d+)"))) return type_A(arg(1));
    if (std::regex_match(name, m, std::regex("B(\\d+)"))) return type_B(arg(1));
    if (name == "H3") return type_H3();
    if (std::regex_match(name, m, std::regex("I2\\((\\d+|inf)\\)")))
        return dihedral(m[1].str() == "inf" ? kInf : arg(1));
    if (std::regex_match(name, m, std::regex("A~(\\d+)"))) return affine_A(arg(1));
    if (std::regex_match(name, m, std::regex("C~(\\d+)"))) return affine_C(arg(1));
    if (name == "G~2") return affine_G2();
    if (name == "D~4") return affine_D4();
    if (name == "F~4") return affine_F4();
    if (name == "E~6") return affine_E6();
    if (name == "E~8") return affine_E8();
    if (std::regex_match(name, m, std::regex("rank3\\((\\d+),(\\d+),(\\d+)\\)"))) return rank3(arg(1), arg(2), arg(3));
    if (std::regex_match(name, m, std::regex("Bfam\\((\\d+),(\\d+),(\\d+)\\)"))) return family_B(arg(1), arg(2), arg(3));
    if (std::regex_match(name, m, std::regex("Dfam\\((\\d+),(\\d+),(\\d+),(\\d+),(\\d+)\\)")))
        return family_D(arg(1), arg(2), arg(3), arg(4), arg(5));
    if (std::regex_match(name, m, std::regex("RA\\((\\d+);?([0-9,;-]*)\\)"))) {
        std::vector<std::pair<int, int>> inf;
        std::string list = m[2].str();
        std::replace(list.begin(), list.end(), ',', ';');
        std::stringstream ss(list);
        std::string part;
        while (std::getline(ss, part, ';')) {
            auto dash = part.find('-');
            if (dash == std::string::npos) throw std::invalid_argument("RA bond must be i-j: " + part);
            inf.emplace_back(std::stoi(part.substr(0, dash)) - 1, std::stoi(part.substr(dash + 1)) - 1);
        }
        return right_angled(arg(1), inf);
    }
    throw std::invalid_argument("unknown built-in system " + name);
}

SystemPtr load_system(const std::string& spec) {
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) return builtin_system(spec.substr(prefix.size()));
    return system_from_json(read_json_file(spec));
}

ConvexSet convex_from_json(const CoxeterSystem& sys, const json& j) {
    if (j.contains("hull")) {
        std::vector<GroupElement> gens;
        for (const auto& w : j.at("hull")) gens.push_back(element_of(sys, word_from_json(sys, w)));
        if (gens.empty()) throw std::invalid_argument("hull needs at least one generator");
        return ConvexSet::hull(sys, gens);
    }
    if (j.contains("halfspaces")) {
        std::vector<HalfSpace> cons;
        for (const auto& h : j.at("halfspaces")) {
            HalfSpace hs;
            for (const auto& c : h.at("root")) hs.root.push_back(parse_scalar(c.get<std::string>(), sys.field()));
            if (static_cast<int>(hs.root.size()) != sys.rank()) throw std::invalid_argument("root has wrong length");
            hs.sign = h.contains("sign") ? sign_value(h.at("sign")) : 1;
            cons.push_back(std::move(hs));
        }
        std::optional<GroupElement> witness;
        if (j.contains("witness")) witness = element_of(sys, word_from_json(sys, j.at("witness")));
        return ConvexSet::halfspaces(sys, cons, witness);
    }
    throw std::invalid_argument("convex set needs \"hull\" or \"halfspaces\"");
}

json convex_to_json(const ConvexSet& L) {
    const CoxeterSystem& sys = L.system();
    json j;
    if (L.is_hull()) {
        json h = json::array();
        for (const auto& g : L.generators()) h.push_back(sys.word_str(reduced_word(g)));
        j["hull"] = h;
    } else {
        json hs = json::array();
        for (const auto& c : L.constraints()) {
            json root = json::array();
            for (const auto& x : c.root) root.push_back(embed(x, sys.field()).str());
            hs.push_back({{"root", root}, {"sign", c.sign}});
        }
        j["halfspaces"] = hs;
        j["witness"] = sys.word_str(reduced_word(L.base()));
    }
    return j;
}

ConvexSet load_convex(const CoxeterSystem& sys, const std::string& path) {
    return convex_from_json(sys, read_json_file(path));
}

json certificate_to_json(const WalkCertificate& c) {
    const CoxeterSystem& sys = *c.sys;
    json j;
    j["system"] = system_to_json(sys);
    j["ordering"] = sys.word_str(c.ordering);
    j["start"] = sys.word_str(reduced_word(c.u0));
    j["convex"] = convex_to_json(c.L);
    j["period"] = c.period;
    j["digest"] = c.digest;
    return j;
}

WalkCertificate certificate_from_json(const json& j) {
    WalkCertificate c;
    c.sys = system_from_json(j.at("system"));
    const CoxeterSystem& sys = *c.sys;
    c.ordering = sys.parse_word(j.at("ordering").get<std::string>());
    c.u0 = element_of(sys, sys.parse_word(j.value("start", std::string("e"))));
    c.L = convex_from_json(sys, j.at("convex"));
    c.period = j.at("period").get<int>();
    c.digest = j.value("digest", std::string());
    return c;
}

json verdict_to_json(const CoxeterSystem& sys, const HeavyVerdict& v) {
    json j;
    j["verdict"] = verdict_str(v.kind);
    if (v.witness) j["witness"] = sys.word_str(reduced_word(*v.witness));
    if (v.kind == HeavyVerdict::NotHeavy) j["period"] = v.period;
    j["strata_searched"] = v.strata_searched;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

}  // namespace bkb
