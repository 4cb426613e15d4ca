// Command-line front end: every table and certificate as JSON or text.
// Exit codes: 0 all certificates pass, 1 a certificate failed, 2 bad usage.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "fockjack/serialize.hpp"

using namespace fockjack;

namespace {

struct Options {
    int pp = 2, pm = 3;
    int cutoff = 20;
    std::string kappa;
    bool as_json = false;
};

ModelParams checked_model(const Options& o) {
    try {
        return model(o.pp, o.pm);
    } catch (const std::exception& e) {
        std::cerr << "invalid model: " << e.what() << std::endl;
        std::exit(2);
    }
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump() << std::endl;
    else
        std::cout << text << std::endl;
}

std::optional<std::filesystem::path> cache_dir() {
    const char* env = std::getenv("FOCKJACK_CACHE");
    if (env == nullptr || *env == '\0') return std::nullopt;
    std::filesystem::path p(env);
    std::error_code ec;
    std::filesystem::create_directories(p, ec);
    if (ec) return std::nullopt;
    return p;
}

int cmd_kac(const Options& o) {
    ModelParams m = checked_model(o);
    KacTable t = kac_table(m);
    std::string text;
    for (const auto& cls : t.classes)
        text += "[(" + std::to_string(cls.r) + "," + std::to_string(cls.s) +
                ")]  delta = " + rat_str(cls.delta) + "\n";
    if (!text.empty()) text.pop_back();
    emit(to_json(t), o.as_json, text);
    return 0;
}

int cmd_jack(const Options& o, int deg) {
    if (deg < 0 || deg > 10) {
        std::cerr << "jack: --deg must be in [0, 10]" << std::endl;
        return 2;
    }
    json out = json::array();
    std::optional<std::filesystem::path> cache = cache_dir();
    std::string cache_name =
        "jack_deg" + std::to_string(deg) + (o.kappa.empty() ? "_generic" : "_k" + o.kappa) + ".json";
    if (cache) {
        std::ifstream in(*cache / cache_name);
        if (in) {
            json cached = json::parse(in, nullptr, false);
            if (!cached.is_discarded()) {
                std::cout << cached.dump() << std::endl;
                return 0;
            }
        }
    }
    Rational kappa0;
    if (!o.kappa.empty()) {
        try {
            kappa0 = rat_parse(o.kappa);
        } catch (const std::exception&) {
            std::cerr << "jack: --kappa must be a rational p/q" << std::endl;
            return 2;
        }
    }
    for (const Partition& lam : enumerate_partitions(deg)) {
        if (o.kappa.empty()) {
            out.push_back(to_json(jack_generic(lam)));
        } else {
            out.push_back(to_json(jack_at(lam, kappa0)));
        }
    }
    if (cache) {
        std::ofstream of(*cache / cache_name);
        of << out.dump();
    }
    std::cout << out.dump() << std::endl;
    return 0;
}

int cmd_singvec(const Options& o, int r, int s) {
    if (r < 1 || s < 1) {
        std::cerr << "singvec: need r, s >= 1" << std::endl;
        return 2;
    }
    if (r * s > 12) {
        std::cerr << "singvec: size guard rs <= 12" << std::endl;
        return 2;
    }
    ModelParams m = checked_model(o);
    FockElement plus = singular_vector(m, '+', r, s);
    FockElement minus = singular_vector(m, '-', r, s);
    bool pass = true;
    std::string detail;
    QuadScalar ratio(0);
    try {
        ratio = proportionality(m, r, s);
    } catch (const NotProportional& e) {
        pass = false;
        detail = e.what();
    }
    json cert{{"lhs", to_json_labeled(plus, -r, -s, 0)},
              {"rhs", to_json_labeled(minus, -r, -s, 0)},
              {"ratio", to_json(ratio)},
              {"pass", pass}};
    std::string text = "S+ image: " + std::to_string(plus.terms.size()) + " terms\n";
    text += "S- image: " + std::to_string(minus.terms.size()) + " terms\n";
    text += "ratio = " + ratio.str() + "  [" + (pass ? "pass" : "FAIL " + detail) + "]";
    emit(cert, o.as_json, text);
    return pass ? 0 : 1;
}

int cmd_omega(const Options& o, int n) {
    if (n < 0 || n > 2) {
        std::cerr << "omega: --n must be in {0, 1, 2}" << std::endl;
        return 2;
    }
    ModelParams m = checked_model(o);
    BetaPoly w = omega_poly(m, n);
    emit(to_json(w), o.as_json, "deg omega_" + std::to_string(n) + " = " + std::to_string(w.degree()));
    return 0;
}

int cmd_gpoly(const Options& o) {
    ModelParams m = checked_model(o);
    GPolys g = g_polys(m);
    bool pass = g.cert0.pass && g.cert1.pass && g.cert2.pass;
    json out{{"g0", to_json(g.g0)},
             {"g1", to_json(g.g1)},
             {"g2", to_json(g.g2)},
             {"certificates",
              json{{"g0", g.cert0.pass}, {"g1", g.cert1.pass}, {"g2", g.cert2.pass}}},
             {"pass", pass}};
    std::string text = "deg g0 = " + std::to_string(g.g0.degree()) +
                       ", deg g1 = " + std::to_string(g.g1.degree()) +
                       ", deg g2 = " + std::to_string(g.g2.degree()) + "\nroot certificates: " +
                       (pass ? "pass" : "FAIL")      ;
    emit(out, o.as_json, text);
    return pass ? 0 : 1;
}

int cmd_census(const Options& o, bool count_only) {
    ModelParams m = checked_model(o);
    auto census = simple_census(m);
    if (count_only) {
        std::cout << census.size() << std::endl;
        return 0;
    }
    json out = json::array();
    std::string text;
    for (const auto& d : census) {
        out.push_back(to_json(d));
        const char* kind = d.kind == SimpleKind::minimal ? "L[r,s]"
                           : d.kind == SimpleKind::Xplus ? "X+"
                                                         : "X-";
        text += std::string(kind) + " (" + std::to_string(d.r) + "," + std::to_string(d.s) +
                ")  delta = " + rat_str(d.delta) + "  dim = " + std::to_string(d.lowest_dim) + "\n";
    }
    if (!text.empty()) text.pop_back();
    emit(out, o.as_json, text);
    return 0;
}

int cmd_structconst(const Options& o, std::string kind, int n, int k) {
    if (kind != "a" && kind != "b") {
        std::cerr << "structconst: --kind must be a or b" << std::endl;
        return 2;
    }
    ModelParams m = checked_model(o);
    StructConst c = struct_const(m, kind[0], n, k);
    json out{{"kind", kind},
             {"n", n},
             {"k", k},
             {"value", rat_str(c.value)},
             {"two_route_checked", c.two_route_checked}};
    emit(out, o.as_json,
         kind + "_{" + std::to_string(n) + "," + std::to_string(k) + "} = " + rat_str(c.value) +
             (c.two_route_checked ? "  (two routes)" : "  (closed form only)"));
    return 0;
}

int cmd_characters(const Options& o) {
    ModelParams m = checked_model(o);
    std::cerr << "solving simple characters to order " << o.cutoff << std::endl;
    SimpleCharacters solver = solve_simple_characters(m, o.cutoff);
    json out = json::object();
    std::string text;
    std::set<Rational> done;
    for (int r = 1; r <= m.pp; ++r)
        for (int s = 1; s <= m.pm; ++s)
            for (int n = -1; n <= 1; ++n) {
                Rational hv = m.h_n(r, s, n);
                if (!done.insert(hv).second) continue;
                const CharSeries& c = solver.at(hv);
                out["L(" + rat_str(hv) + ")"] = to_json(c);
                text += "ch L(" + rat_str(hv) + ") = " + c.str(8) + "\n";
            }
    if (!text.empty()) text.pop_back();
    emit(out, o.as_json, text);
    return 0;
}

int cmd_felder(const Options& o, int r, int s) {
    ModelParams m = checked_model(o);
    if (r < 1 || r >= m.pp || s < 1 || s > m.pm) {
        std::cerr << "felder: need 1 <= r < p+, 1 <= s <= p-" << std::endl;
        return 2;
    }
    CharSeries fe = felder_euler(m, r, s, o.cutoff);
    bool pass;
    if (s < m.pm) {
        SimpleCharacters solver(m, o.cutoff);
        CharSeries want = solver.at(m.h_n(r, s, 0));
        want.truncate_above(m.h_n(r, s, 0) + o.cutoff);
        pass = (fe == want);
    } else {
        pass = fe.is_zero();
    }
    json out{{"euler", to_json(fe)}, {"pass", pass}};
    emit(out, o.as_json, "euler = " + fe.str(8) + "  [" + (pass ? "pass" : "FAIL") + "]");
    return pass ? 0 : 1;
}

int cmd_verify_all(const Options& o) {
    ModelParams m = checked_model(o);
    int failures = 0;
    auto report = [&](const std::string& name, auto&& body) {
        std::cerr << "verifying " << name << "..." << std::endl;
        try {
            body();
            std::cout << "[pass] " << name << std::endl;
        } catch (const std::exception& e) {
            std::cout << "[FAIL] " << name << ": " << e.what() << std::endl;
            ++failures;
        }
    };
    report("jack norms |lambda| <= 6", [&] {
        for (int d = 0; d <= 6; ++d)
            for (const Partition& lam : enumerate_partitions(d)) (void)jack_generic(lam);
    });
    report("duality and cauchy d <= 5", [&] {
        for (int d = 0; d <= 5; ++d) {
            for (const Partition& lam : enumerate_partitions(d))
                if (!duality_check(lam).pass) throw std::runtime_error("duality " + lam.str());
            if (!cauchy_check(d).pass) throw std::runtime_error("cauchy " + std::to_string(d));
        }
    });
    report("singular vectors rs <= 8", [&] {
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s) {
                if (r * s > 8) continue;
                FockElement v = singular_vector(m, '+', r, s);
                for (int n = 1; n <= 5; ++n)
                    if (!virasoro_apply(m, v, n).is_zero())
                        throw std::runtime_error("L_n does not annihilate");
                if (singular_space(m, m.beta(-r, -s), r * s).size() != 1)
                    throw std::runtime_error("singular space dimension");
                proportionality(m, r, s);
            }
    });
    report("zero-mode polynomials", [&] {
        GPolys g = g_polys(m);
        if (!(g.cert0.pass && g.cert1.pass && g.cert2.pass))
            throw std::runtime_error("root certificates");
    });
    report("structure constants", [&] {
        for (int n = 0; n <= 2; ++n)
            for (int k = -1; k <= 2; ++k)
                for (char kind : {'a', 'b'}) {
                    try {
                        struct_const(m, kind, n, k);
                    } catch (const OutOfRange&) {
                    }
                }
    });
    report("census and representations", [&] {
        auto census = simple_census(m);
        GPolys g = g_polys(m);
        if (static_cast<long>(census.size()) != (m.pp - 1) * (m.pm - 1) / 2 + 2L * m.pp * m.pm)
            throw std::runtime_error("census size");
        for (const auto& d : census) {
            if (g.g2.eval(d.delta) != 0) throw std::runtime_error("census weight not a g2 root");
            RepCheck rc = rep_check(m, d);
            if (!rc.pass) throw std::runtime_error(rc.detail);
        }
    });
    report("characters, felder, K/X", [&] {
        SimpleCharacters solver = solve_simple_characters(m, o.cutoff);
        for (int r = 1; r < m.pp; ++r)
            for (int s = 1; s <= m.pm; ++s) {
                CharSeries fe = felder_euler(m, r, s, o.cutoff);
                if (s < m.pm) {
                    CharSeries want = solver.at(m.h_n(r, s, 0));
                    want.truncate_above(m.h_n(r, s, 0) + o.cutoff);
                    if (fe != want) throw std::runtime_error("felder mismatch");
                } else if (!fe.is_zero()) {
                    throw std::runtime_error("felder not exact at s = p-");
                }
            }
        for (int r = 1; r <= m.pp; ++r)
            for (int s = 1; s <= m.pm; ++s)
                for (char sign : {'+', '-'}) {
                    KxCertificate cert = kx_characters(solver, r, s, sign, o.cutoff);
                    if (!cert.pass || !cert.exact_sequence_pass)
                        throw std::runtime_error("kx: " + cert.detail);
                }
    });
    report("deformation", [&] {
        QuadEps ap(kDefaultEpsOrder);
        ap.coeff(0) = m.alpha_plus;
        ap.coeff(1) = m.alpha_plus;
        DeformedModel d = deform(m, ap);
        auto lift = [](long v) { return QuadEps(QuadScalar(rat(v)), kDefaultEpsOrder); };
        for (int deg = 1; deg <= 5; ++deg)
            for (const Partition& lam : enumerate_partitions(deg)) {
                QuadEps b = b_lambda_lift(lam, d.kappa_minus, lift);
                if (!b.is_unit() || !(b.coeff(0) == QuadScalar(b_lambda(lam, m.kappa_minus))))
                    throw std::runtime_error("deformed b_lambda");
            }
    });
    if (failures == 0) {
        std::cout << "verify-all: all certificates passed for (" << m.pp << "," << m.pm << ")"
                  << std::endl;
        return 0;
    }
    std::cout << "verify-all: " << failures << " failure(s)" << std::endl;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for the M_{p+,p-} Fock/Jack computations"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd, bool needs_model = true) {
        if (needs_model) {
            cmd->add_option("--pp", o.pp, "p+ (>= 2)")->required();
            cmd->add_option("--pm", o.pm, "p- (>= 2, coprime to p+)")->required();
        }
        cmd->add_flag("--json", o.as_json, "JSON output");
        auto* t = cmd->add_flag("--text", "text output (default)");
        (void)t;
        cmd->add_option("--cutoff", o.cutoff, "character truncation order")->default_val(20);
    };

    auto* kac = app.add_subcommand("kac", "Kac table of conformal weights");
    add_common(kac);

    int deg = 2;
    auto* jack = app.add_subcommand("jack", "Jack pairs of one degree (generic or --kappa)");
    jack->add_option("--deg", deg, "degree")->required();
    jack->add_option("--kappa", o.kappa, "rational kappa p/q (generic when absent)");
    jack->add_flag("--json", o.as_json, "JSON output");

    int r = 1, s = 1, n = 0, k = 0;
    auto* singvec = app.add_subcommand("singvec", "screening-operator singular vectors");
    add_common(singvec);
    singvec->add_option("--r", r, "r >= 1")->required();
    singvec->add_option("--s", s, "s >= 1")->required();

    auto* omega = app.add_subcommand("omega", "zero-mode eigenvalue polynomial omega_n");
    add_common(omega);
    omega->add_option("--n", n, "n in {0,1,2}")->required();

    auto* gpoly = app.add_subcommand("gpoly", "g0/g1/g2 with factorization certificates");
    add_common(gpoly);

    bool count_only = false;
    auto* census = app.add_subcommand("census", "simple-module census");
    add_common(census);
    census->add_flag("--count-only", count_only, "print only the count");

    std::string kind = "a";
    auto* structconst = app.add_subcommand("structconst", "a_{n,k} / b_{n,k}");
    add_common(structconst);
    structconst->add_option("--kind", kind, "a or b")->required();
    structconst->add_option("--n", n, "n >= 0")->required();
    structconst->add_option("--k", k, "k >= -1")->required();

    auto* characters = app.add_subcommand("characters", "solved simple characters");
    add_common(characters);

    auto* felder = app.add_subcommand("felder", "Felder-complex Euler characteristic");
    add_common(felder);
    felder->add_option("--r", r, "1 <= r < p+")->required();
    felder->add_option("--s", s, "1 <= s <= p-")->required();

    auto* verify = app.add_subcommand("verify-all", "full certificate suite for one model");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (kac->parsed()) return cmd_kac(o);
        if (jack->parsed()) return cmd_jack(o, deg);
        if (singvec->parsed()) return cmd_singvec(o, r, s);
        if (omega->parsed()) return cmd_omega(o, n);
        if (gpoly->parsed()) return cmd_gpoly(o);
        if (census->parsed()) return cmd_census(o, count_only);
        if (structconst->parsed()) return cmd_structconst(o, kind, n, k);
        if (characters->parsed()) return cmd_characters(o);
        if (felder->parsed()) return cmd_felder(o, r, s);
        if (verify->parsed()) return cmd_verify_all(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 2;
}
