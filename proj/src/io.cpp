#include "jgwa/io.hpp"

#include "jgwa/error.hpp"
#include "jgwa/expr.hpp"

namespace jgwa {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::Format, msg); }

Rat rat_field(const json& v) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (!v.is_string()) bad("rational must be a \"p/q\" string or an integer");
    return parse_rat(v.get<std::string>());
}

Degree degree_field(const json& v, int n) {
    if (!v.is_array() || static_cast<int>(v.size()) != n) bad("multi-index must be an array of length n");
    Degree d;
    for (const auto& e : v) {
        if (!e.is_number_integer() || e.get<long>() < 0) bad("multi-index entries must be integers >= 0");
        d.push_back(e.get<long>());
    }
    return d;
}

AElem embed_slot(const FinMat& m, int n, int slot) {
    AElem r(n);
    for (const auto& [ab, c] : m.entries) r += gen::E(n, slot + 1, ab.first[0], ab.second[0]) * c;
    return r;
}

UnitElem factor_from_json(const json& f, int n) {
    if (!f.is_object()) bad("word factor must be an object");
    if (f.contains("elem")) {
        if (!f.contains("inv")) bad("elem factor needs its inverse under \"inv\"");
        UnitElem u{1, HUnit(n), parse_elem(f.at("elem").get<std::string>(), n),
                   parse_elem(f.at("inv").get<std::string>(), n)};
        if (!u.certify()) throw Error(ErrorKind::NotUnit, "word factor is not a certified unit = 1 mod a_n");
        return u;
    }
    if (!f.contains("matrix")) bad("word factor needs \"matrix\" or \"elem\"");
    if (f.contains("slot")) {
        int slot = f.at("slot").get<int>();
        if (slot < 1 || slot > n) throw Error(ErrorKind::IndexOutOfRange, "slot outside 1..n");
        FinMat m = finmat_from_json(f.at("matrix"), 1);
        FinMat mi = inv1p(m);
        return {1, HUnit(n), gen::one(n) + embed_slot(m, n, slot - 1), gen::one(n) + embed_slot(mi, n, slot - 1)};
    }
    return UnitElem::from_finmat(finmat_from_json(f.at("matrix"), n));
}

}  // namespace

json finmat_to_json(const FinMat& m) {
    json out = json::array();
    for (const auto& [ab, c] : m.entries) out.push_back({ab.first, ab.second, c.get_str()});
    return out;
}

FinMat finmat_from_json(const json& entries, int n) {
    if (!entries.is_array()) bad("matrix must be an array of [alpha, beta, \"c\"]");
    FinMat m;
    m.n = n;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 3) bad("matrix entry must be [alpha, beta, \"c\"]");
        m.add(degree_field(e[0], n), degree_field(e[1], n), rat_field(e[2]));
    }
    return m;
}

json aut_to_json(const Aut& a) {
    json j;
    j["format"] = kFormat;
    j["n"] = a.n;
    json perm = json::array(), lambda = json::array(), u = json::array();
    for (int v : a.s) perm.push_back(v + 1);
    for (const auto& l : a.lambda) lambda.push_back(l.get_str());
    for (int k = 0; k < a.n; ++k) {
        json slot = json::object();
        for (const auto& [jj, e] : a.u.slot(k)) slot[std::to_string(jj)] = e;
        u.push_back(slot);
    }
    j["perm"] = perm;
    j["lambda"] = lambda;
    j["u"] = u;
    if (auto m = elem_to_finmat(a.phi.w - gen::one(a.n)))
        j["phi"] = {{"matrix", finmat_to_json(*m)}};
    else
        j["phi"] = {{"word", json::array({{{"elem", print_elem(a.phi.w)}, {"inv", print_elem(a.phi.w_inv)}}})}};
    return j;
}

Aut aut_from_json(const json& j) {
    try {
        if (!j.is_object()) bad("automorphism must be a JSON object");
        if (j.contains("format") && j.at("format") != kFormat) bad("unsupported format " + j.at("format").dump());
        int n = j.at("n").get<int>();
        if (n < 1) bad("n must be >= 1");
        Aut a = Aut::identity(n);
        if (j.contains("perm")) {
            const auto& p = j.at("perm");
            if (!p.is_array() || static_cast<int>(p.size()) != n) bad("perm must have n entries");
            for (int i = 0; i < n; ++i) a.s[i] = p[i].get<int>() - 1;
            if (!is_perm(a.s)) bad("perm is not a permutation of 1..n");
        }
        if (j.contains("lambda")) {
            const auto& l = j.at("lambda");
            if (!l.is_array() || static_cast<int>(l.size()) != n) bad("lambda must have n entries");
            for (int i = 0; i < n; ++i) {
                a.lambda[i] = rat_field(l[i]);
                if (a.lambda[i] == 0) bad("lambda entries must be nonzero");
            }
        }
        if (j.contains("u")) {
            const auto& u = j.at("u");
            if (!u.is_array() || static_cast<int>(u.size()) != n) bad("u must have n entries");
            for (int k = 0; k < n; ++k)
                for (const auto& [key, e] : u[k].items()) {
                    std::size_t used = 0;
                    long jj = std::stol(key, &used);
                    if (used != key.size()) bad("u keys must be integers");
                    a.u = a.u * HUnit::atom(n, k, jj, e.get<long>());
                }
        }
        if (j.contains("phi")) {
            const auto& p = j.at("phi");
            if (p.contains("matrix")) {
                a.phi = UnitElem::from_finmat(finmat_from_json(p.at("matrix"), n));
            } else if (p.contains("word")) {
                AElem w = gen::one(n), wi = gen::one(n);
                for (const auto& f : p.at("word")) {
                    UnitElem u = factor_from_json(f, n);
                    w = w * u.w;
                    wi = u.w_inv * wi;
                }
                a.phi = {1, HUnit(n), w, wi};
            } else {
                bad("phi needs \"matrix\" or \"word\"");
            }
        }
        return a;
    } catch (const json::exception& e) {
        bad(std::string("malformed automorphism: ") + e.what());
    } catch (const std::invalid_argument&) {
        bad("u keys must be integers");
    }
}

json images_to_json(const Images& im) {
    json j;
    j["format"] = kFormat;
    j["n"] = im.n;
    for (const char* key : {"x", "y", "H"}) j[key] = json::array();
    for (int i = 0; i < im.n; ++i) {
        j["x"].push_back(print_elem(im.x[i]));
        j["y"].push_back(print_elem(im.y[i]));
        j["H"].push_back(print_elem(im.H[i]));
    }
    return j;
}

Images images_from_json(const json& j) {
    try {
        Images im;
        im.n = j.at("n").get<int>();
        if (im.n < 1) bad("n must be >= 1");
        for (const char* key : {"x", "y", "H"}) {
            const auto& arr = j.at(key);
            if (!arr.is_array() || static_cast<int>(arr.size()) != im.n)
                bad(std::string("\"") + key + "\" must list n expressions");
        }
        for (int i = 0; i < im.n; ++i) {
            im.x.push_back(parse_elem(j.at("x")[i].get<std::string>(), im.n));
            im.y.push_back(parse_elem(j.at("y")[i].get<std::string>(), im.n));
            im.H.push_back(parse_elem(j.at("H")[i].get<std::string>(), im.n));
        }
        return im;
    } catch (const json::exception& e) {
        bad(std::string("malformed images: ") + e.what());
    }
}

json qaut_to_json(const QAut& q) {
    json j;
    j["n"] = q.n;
    j["perm"] = json::array();
    j["coeff"] = json::array();
    for (int i = 0; i < q.n; ++i) {
        j["perm"].push_back(q.s[i] + 1);
        j["coeff"].push_back(q.c[i].to_string("H" + std::to_string(q.s[i] + 1)));
    }
    return j;
}

}  // namespace jgwa
