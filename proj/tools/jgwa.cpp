#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jgwa/algebra.hpp"
#include "jgwa/aut.hpp"
#include "jgwa/error.hpp"
#include "jgwa/expr.hpp"
#include "jgwa/io.hpp"
#include "jgwa/lattice.hpp"
#include "jgwa/relations.hpp"
#include "jgwa/units.hpp"

using namespace jgwa;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kSyntax = 2, kIndex = 3, kPower = 4, kMath = 5, kIO = 6 };

struct IOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Syntax: return kSyntax;
        case ErrorKind::IndexOutOfRange:
        case ErrorKind::ArityMismatch: return kIndex;
        case ErrorKind::NonInvertiblePower: return kPower;
        case ErrorKind::Format: return kIO;
        default: return kMath;
    }
}

int max_arity() {
    if (const char* v = std::getenv("JACOBI_GWA_MAX_N")) {
        char* end = nullptr;
        long m = std::strtol(v, &end, 10);
        if (end != v && *end == 0 && m >= 1) return static_cast<int>(m);
    }
    return 4;
}

struct Options {
    int n = 0;  // 0: infer
    bool json_errors = false;
};

Options opt;

int arity_for(const std::vector<std::string>& exprs) {
    int n = opt.n;
    int need = 0;
    for (const auto& e : exprs) need = std::max(need, expr_arity(parse_expr(e)));
    if (n == 0) n = std::max(1, need);
    if (n < need)
        throw Error(ErrorKind::IndexOutOfRange,
                    "expression mentions coordinate " + std::to_string(need) + " but n = " + std::to_string(n));
    if (n > max_arity())
        throw Error(ErrorKind::IndexOutOfRange,
                    "arity " + std::to_string(n) + " exceeds JACOBI_GWA_MAX_N = " + std::to_string(max_arity()));
    return n;
}

void check_arity_cap(int n) {
    if (n > max_arity())
        throw Error(ErrorKind::IndexOutOfRange,
                    "arity " + std::to_string(n) + " exceeds JACOBI_GWA_MAX_N = " + std::to_string(max_arity()));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// a path to a JSON file, or inline JSON text
json load_json(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\r\n");
    bool inline_json = first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
    std::string text = inline_json ? arg : read_file(arg);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Format, std::string("invalid JSON: ") + e.what());
    }
}

Aut load_aut(const std::string& arg) {
    Aut a = aut_from_json(load_json(arg));
    check_arity_cap(a.n);
    return a;
}

FinMat load_matrix(const std::string& arg) {
    json j = load_json(arg);
    try {
        int n = j.at("n").get<int>();
        check_arity_cap(n);
        return finmat_from_json(j.at("matrix"), n);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Format, std::string("matrix file needs {\"n\", \"matrix\"}: ") + e.what());
    }
}

Degree parse_mono(const std::string& s, int n) {
    Degree d;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != part.size() || part.empty()) throw Error(ErrorKind::Syntax, "bad exponent list '" + s + "'");
        if (v < 0) throw Error(ErrorKind::IndexOutOfRange, "exponents must be >= 0");
        d.push_back(v);
    }
    if (static_cast<int>(d.size()) != n)
        throw Error(ErrorKind::ArityMismatch,
                    "monomial has " + std::to_string(d.size()) + " exponents, arity is " + std::to_string(n));
    return d;
}

int lattice_n(const std::vector<std::string>& texts) {
    int need = 0;
    for (const auto& t : texts) need = std::max(need, antichain_arity(t));
    int n = opt.n ? opt.n : need;
    if (n < need)
        throw Error(ErrorKind::IndexOutOfRange, "antichain mentions " + std::to_string(need) + " but n = " + std::to_string(n));
    return n;
}

json unit_json(const UnitElem& u) {
    return {{"scalar", u.scalar.get_str()}, {"h", u.h.to_string()}, {"w", print_elem(u.w)}, {"w_inv", print_elem(u.w_inv)}};
}

int run_verify(int n, int trials, unsigned long seed) {
    if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "--n must be >= 1");
    check_arity_cap(n);
    Gen g(seed);
    auto checks = relation_suite(n, g, trials);
    auto faith = faithfulness_suite(std::min(n, 2), g, trials);
    checks.insert(checks.end(), faith.begin(), faith.end());
    std::size_t bad = 0;
    for (const auto& c : checks)
        if (!c.ok) {
            ++bad;
            std::cout << "FAIL " << c.name << "\n";
        }
    std::cout << "relations n=" << n << " seed=" << seed << ": " << checks.size() - bad << "/" << checks.size()
              << " passed\n";
    return bad ? kFalse : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in the Jacobian algebra A_n and the algebra S_n of one-sided inverses"};
    app.require_subcommand(1);
    app.add_option("--n", opt.n, "arity; inferred from the input when omitted")->check(CLI::Range(1, 1000));
    app.add_flag("--json", opt.json_errors, "machine-readable error diagnostics on stderr");
    app.set_help_all_flag("--help-all");
    app.fallthrough();

    int result = kOk;
    std::function<void()> action;

    auto* eval = app.add_subcommand("eval", "normalize and print");
    std::string ea, eb, mono, file_a, file_b;
    eval->add_option("expr", ea)->required();
    eval->callback([&] { action = [&] { std::cout << print_elem(parse_elem(ea, arity_for({ea}))) << "\n"; }; });

    auto* eqc = app.add_subcommand("eq", "equality in A_n; exit 0 if equal, 1 otherwise");
    eqc->add_option("a", ea)->required();
    eqc->add_option("b", eb)->required();
    eqc->callback([&] {
        action = [&] {
            int n = arity_for({ea, eb});
            bool r = eq(parse_elem(ea, n), parse_elem(eb, n));
            std::cout << (r ? "true" : "false") << "\n";
            result = r ? kOk : kFalse;
        };
    });

    auto* act = app.add_subcommand("act", "apply to a monomial of P_n");
    act->add_option("expr", ea)->required();
    act->add_option("--mono", mono, "exponents, e.g. 2,0")->required();
    act->callback([&] {
        action = [&] {
            int need = static_cast<int>(std::count(mono.begin(), mono.end(), ',')) + 1;
            if (!opt.n) opt.n = std::max(need, expr_arity(parse_expr(ea)));
            int n = arity_for({ea});
            std::cout << poly_to_string(parse_elem(ea, n).act(monomial(parse_mono(mono, n)))) << "\n";
        };
    });

    auto* idx = app.add_subcommand("index", "Fredholm index");
    idx->add_option("expr", ea)->required();
    idx->callback([&] { action = [&] { std::cout << index(parse_elem(ea, arity_for({ea}))) << "\n"; }; });

    auto* pi = app.add_subcommand("pi", "image in A_n / a_n");
    pi->add_option("expr", ea)->required();
    pi->callback([&] { action = [&] { std::cout << quotient(parse_elem(ea, arity_for({ea}))).to_string() << "\n"; }; });

    auto* insn = app.add_subcommand("insn", "membership in S_n; exit 0 if inside, 1 otherwise");
    insn->add_option("expr", ea)->required();
    insn->callback([&] {
        action = [&] {
            bool r = in_Sn(parse_elem(ea, arity_for({ea})));
            std::cout << (r ? "true" : "false") << "\n";
            result = r ? kOk : kFalse;
        };
    });

    auto* aut = app.add_subcommand("aut", "automorphisms in canonical presentation (JSON)");
    aut->require_subcommand(1);
    auto* apply_c = aut->add_subcommand("apply", "image of an element");
    apply_c->add_option("aut", file_a)->required();
    apply_c->add_option("expr", ea)->required();
    apply_c->callback([&] {
        action = [&] {
            Aut a = load_aut(file_a);
            if (!opt.n) opt.n = a.n;
            int n = arity_for({ea});
            if (n != a.n) throw Error(ErrorKind::ArityMismatch, "element arity differs from the automorphism");
            std::cout << print_elem(apply(a, parse_elem(ea, n))) << "\n";
        };
    });
    auto* comp = aut->add_subcommand("compose", "a o b");
    comp->add_option("a", file_a)->required();
    comp->add_option("b", file_b)->required();
    comp->callback([&] { action = [&] { std::cout << aut_to_json(compose(load_aut(file_a), load_aut(file_b))).dump(2) << "\n"; }; });
    auto* inv = aut->add_subcommand("invert", "inverse");
    inv->add_option("aut", file_a)->required();
    inv->callback([&] { action = [&] { std::cout << aut_to_json(invert(load_aut(file_a))).dump(2) << "\n"; }; });
    auto* canon = aut->add_subcommand("canon", "canonical presentation from generator images {n, x, y, H}");
    canon->add_option("images", file_a)->required();
    canon->callback([&] {
        action = [&] {
            json j = load_json(file_a);
            if (j.contains("n") && j["n"].is_number_integer()) check_arity_cap(j["n"].get<int>());
            std::cout << aut_to_json(extract(images_from_json(j))).dump(2) << "\n";
        };
    });
    auto* imgs = aut->add_subcommand("images", "images of x_i, y_i, H_i");
    imgs->add_option("aut", file_a)->required();
    imgs->callback([&] { action = [&] { std::cout << images_to_json(images(load_aut(file_a))).dump(2) << "\n"; }; });
    auto* inner = aut->add_subcommand("inner", "inner canonical presentation s t_lambda mu_{H^alpha} omega_w");
    inner->add_option("aut", file_a)->required();
    inner->callback([&] {
        action = [&] {
            InnerCanonical ic = inner_canonical(load_aut(file_a));
            json j;
            j["format"] = kFormat;
            for (int v : ic.s) j["perm"].push_back(v + 1);
            for (const auto& l : ic.lambda) j["lambda"].push_back(l.get_str());
            j["alpha"] = ic.alpha;
            j["w"] = unit_json(ic.w);
            std::cout << j.dump(2) << "\n";
        };
    });
    auto* xic = aut->add_subcommand("xi", "image in Aut(A_n / a_n)");
    xic->add_option("aut", file_a)->required();
    xic->callback([&] { action = [&] { std::cout << qaut_to_json(xi(load_aut(file_a))).dump(2) << "\n"; }; });

    auto* unit = app.add_subcommand("unit", "units: det and inverse of 1 + finite matrix, decomposition for n = 1");
    unit->require_subcommand(1);
    auto* det = unit->add_subcommand("det", "det(1 + m) for {\"n\", \"matrix\": [[alpha, beta, \"c\"]]}");
    det->add_option("matrix", file_a)->required();
    det->callback([&] { action = [&] { std::cout << det1p(load_matrix(file_a)).get_str() << "\n"; }; });
    auto* uinv = unit->add_subcommand("inv", "m' with (1 + m)^-1 = 1 + m'");
    uinv->add_option("matrix", file_a)->required();
    uinv->callback([&] {
        action = [&] {
            FinMat m = load_matrix(file_a);
            std::cout << json{{"n", m.n}, {"matrix", finmat_to_json(inv1p(m))}}.dump(2) << "\n";
        };
    });
    auto* dec = unit->add_subcommand("decompose", "a = scalar * h * w for a unit of A_1");
    dec->add_option("expr", ea)->required();
    dec->callback([&] { action = [&] { std::cout << unit_json(unit_decompose(parse_elem(ea, arity_for({ea})))).dump(2) << "\n"; }; });

    auto* ideal = app.add_subcommand("ideal", "ideals as antichains of minimal primes, e.g. \"{1},{2,3}\"");
    ideal->require_subcommand(1);
    auto* prod = ideal->add_subcommand("prod", "product (= intersection)");
    prod->add_option("a", ea)->required();
    prod->add_option("b", eb)->required();
    prod->callback([&] {
        action = [&] {
            int n = lattice_n({ea, eb});
            std::cout << ideal_product(parse_antichain(ea, n), parse_antichain(eb, n)).to_string() << "\n";
        };
    });
    auto* sum = ideal->add_subcommand("sum", "sum");
    sum->add_option("a", ea)->required();
    sum->add_option("b", eb)->required();
    sum->callback([&] {
        action = [&] {
            int n = lattice_n({ea, eb});
            std::cout << ideal_sum(parse_antichain(ea, n), parse_antichain(eb, n)).to_string() << "\n";
        };
    });
    auto* cont = ideal->add_subcommand("contains", "exit 0 if b lies in a, 1 otherwise");
    cont->add_option("a", ea)->required();
    cont->add_option("b", eb)->required();
    cont->callback([&] {
        action = [&] {
            int n = lattice_n({ea, eb});
            bool r = contains(parse_antichain(ea, n), parse_antichain(eb, n));
            std::cout << (r ? "true" : "false") << "\n";
            result = r ? kOk : kFalse;
        };
    });
    bool list = false;
    auto* stab = ideal->add_subcommand("stab", "stabilizer in S_n of the minimal primes");
    stab->add_option("a", ea)->required();
    stab->add_flag("--list", list, "list the permutations (n <= 10)");
    stab->callback([&] {
        action = [&] {
            IdealAC a = parse_antichain(ea, lattice_n({ea}));
            Stabilizer s = stabilizer(a, list);
            std::cout << "order " << s.order.get_str() << "\nindex " << s.index.get_str() << "\n";
            for (const auto& p : s.elements) {
                std::cout << "[";
                for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p[i] + 1;
                std::cout << "]\n";
            }
        };
    });
    auto* generic = ideal->add_subcommand("generic", "wreath structure of a generic ideal; exit 1 if not generic");
    generic->add_option("a", ea)->required();
    generic->callback([&] {
        action = [&] {
            auto g = generic_structure(parse_antichain(ea, lattice_n({ea})));
            if (!g) {
                std::cout << "not generic\n";
                result = kFalse;
                return;
            }
            std::cout << "m " << g->m << "\nprofile";
            for (auto [h, k] : g->profile) std::cout << " (" << h << "," << k << ")";
            std::cout << "\norder " << g->order.get_str() << "\n";
        };
    });
    auto* invs = ideal->add_subcommand("invariants", "the ideals b_1..b_n");
    invs->callback([&] {
        action = [&] {
            if (opt.n < 1) throw Error(ErrorKind::IndexOutOfRange, "--n is required");
            for (const auto& a : invariant_ideals(opt.n)) std::cout << a.to_string() << "\n";
        };
    });

    auto* verify = app.add_subcommand("verify", "randomized self-checks");
    verify->require_subcommand(1);
    auto* rel = verify->add_subcommand("relations", "relation and faithfulness suites");
    int vn = 2, trials = 10;
    unsigned long seed = 1;
    rel->add_option("--n", vn, "arity")->check(CLI::Range(1, 1000));
    rel->add_option("--trials", trials, "random trials per check")->check(CLI::Range(1, 100000));
    rel->add_option("--seed", seed, "random seed");
    rel->callback([&] { action = [&] { result = run_verify(vn, trials, seed); }; });

    auto fail = [&](const std::string& kind, const std::string& msg, int code, const json& extra = json::object()) {
        if (opt.json_errors) {
            json j = {{"error", kind}, {"message", msg}, {"exit", code}};
            for (const auto& [k, v] : extra.items()) j[k] = v;
            std::cerr << j.dump() << "\n";
        } else {
            std::cerr << "error: " << msg << "\n";
        }
        return code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("Usage", e.what(), kSyntax);
    }

    try {
        action();
    } catch (const SyntaxError& e) {
        return fail(kind_name(e.kind()), e.what(), kSyntax, {{"position", e.position()}});
    } catch (const Error& e) {
        json extra = json::object();
        if (!e.detail().empty()) extra["detail"] = e.detail();
        return fail(kind_name(e.kind()), e.what(), exit_code(e.kind()), extra);
    } catch (const IOError& e) {
        return fail("IO", e.what(), kIO);
    } catch (const json::exception& e) {
        return fail("Format", e.what(), kIO);
    }
    return result;
}
