#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fockjack/serialize.hpp"

namespace py = pybind11;
using namespace fockjack;

namespace {

std::string model_summary(int pp, int pm) {
    ModelParams m = model(pp, pm);
    json j{{"pp", pp},
           {"pm", pm},
           {"c", rat_str(m.c)},
           {"kappa_plus", rat_str(m.kappa_plus)},
           {"kappa_minus", rat_str(m.kappa_minus)}};
    return j.dump();
}

std::string kac_json(int pp, int pm) { return to_json(kac_table(model(pp, pm))).dump(); }

std::string jack_json(const std::vector<int>& parts, const std::string& kappa) {
    Partition lam{std::vector<int>(parts)};
    if (kappa.empty()) return to_json(jack_generic(lam)).dump();
    return to_json(jack_at(lam, rat_parse(kappa))).dump();
}

std::string h_weight(int pp, int pm, int r, int s, int n) {
    return rat_str(model(pp, pm).h_n(r, s, n));
}

bool singular_vector_check(int pp, int pm, int r, int s) {
    ModelParams m = model(pp, pm);
    FockElement v = singular_vector(m, '+', r, s);
    for (int k = 1; k <= 5; ++k)
        if (!virasoro_apply(m, v, k).is_zero()) return false;
    proportionality(m, r, s);
    return true;
}

std::string singular_vector_json(int pp, int pm, char sign, int r, int s) {
    return to_json(singular_vector(model(pp, pm), sign, r, s)).dump();
}

std::size_t census_size(int pp, int pm) { return simple_census(model(pp, pm)).size(); }

std::string census_json(int pp, int pm) {
    json out = json::array();
    for (const auto& d : simple_census(model(pp, pm))) out.push_back(to_json(d));
    return out.dump();
}

std::string gpolys_json(int pp, int pm) {
    GPolys g = g_polys(model(pp, pm));
    json out{{"g0", to_json(g.g0)},
             {"g1", to_json(g.g1)},
             {"g2", to_json(g.g2)},
             {"certs", json{{"g0", g.cert0.pass}, {"g1", g.cert1.pass}, {"g2", g.cert2.pass}}}};
    return out.dump();
}

std::string struct_const_str(int pp, int pm, const std::string& kind, int n, int k) {
    StructConst c = struct_const(model(pp, pm), kind.at(0), n, k);
    return rat_str(c.value);
}

std::string simple_character_json(int pp, int pm, int r, int s, int n, int cutoff) {
    ModelParams m = model(pp, pm);
    SimpleCharacters solver(m, cutoff);
    return to_json(solver.at(m.h_n(r, s, n))).dump();
}

std::string felder_json(int pp, int pm, int r, int s, int cutoff) {
    return to_json(felder_euler(model(pp, pm), r, s, cutoff)).dump();
}

bool kx_check(int pp, int pm, int r, int s, const std::string& sign, int cutoff) {
    KxCertificate cert = kx_characters(model(pp, pm), r, s, sign.at(0), cutoff);
    return cert.pass && cert.exact_sequence_pass;
}

double selberg(int N, double kappa) { return selberg_constant(N, kappa); }

}  // namespace

PYBIND11_MODULE(fockjack_py, mod) {
    mod.doc() = "exact Fock/Jack computations for the extended W-algebra M_{p+,p-}";
    mod.def("model_summary", &model_summary, py::arg("pp"), py::arg("pm"),
            "model parameters as a JSON string");
    mod.def("kac_table", &kac_json, py::arg("pp"), py::arg("pm"));
    mod.def("jack_pair", &jack_json, py::arg("partition"), py::arg("kappa") = std::string(),
            "Jack pair as JSON; kappa='p/q' specializes, empty means generic");
    mod.def("h_weight", &h_weight, py::arg("pp"), py::arg("pm"), py::arg("r"), py::arg("s"),
            py::arg("n") = 0, "conformal weight h_{r,s;n} as an exact rational string");
    mod.def("singular_vector_check", &singular_vector_check, py::arg("pp"), py::arg("pm"),
            py::arg("r"), py::arg("s"),
            "construct the screening singular vector and verify L_1..L_5 annihilate it");
    mod.def("singular_vector", &singular_vector_json, py::arg("pp"), py::arg("pm"), py::arg("sign"),
            py::arg("r"), py::arg("s"));
    mod.def("census_size", &census_size, py::arg("pp"), py::arg("pm"));
    mod.def("census", &census_json, py::arg("pp"), py::arg("pm"));
    mod.def("g_polys", &gpolys_json, py::arg("pp"), py::arg("pm"));
    mod.def("struct_const", &struct_const_str, py::arg("pp"), py::arg("pm"), py::arg("kind"),
            py::arg("n"), py::arg("k"));
    mod.def("simple_character", &simple_character_json, py::arg("pp"), py::arg("pm"), py::arg("r"),
            py::arg("s"), py::arg("n") = 0, py::arg("cutoff") = 20);
    mod.def("felder_euler", &felder_json, py::arg("pp"), py::arg("pm"), py::arg("r"), py::arg("s"),
            py::arg("cutoff") = 20);
    mod.def("kx_check", &kx_check, py::arg("pp"), py::arg("pm"), py::arg("r"), py::arg("s"),
            py::arg("sign"), py::arg("cutoff") = 14);
    mod.def("selberg_constant", &selberg, py::arg("N"), py::arg("kappa"));
}
