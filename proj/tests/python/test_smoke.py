"""Smoke tests for the python bindings."""
import json
import math
import sys

import fockjack_py as fj


def check(cond, what):
    if not cond:
        print(f"FAIL: {what}")
        sys.exit(1)
    print(f"ok: {what}")


def main():
    summary = json.loads(fj.model_summary(2, 3))
    check(summary["c"] == "0", "central charge of (2,3) vanishes")
    check(json.loads(fj.model_summary(2, 5))["c"] == "-22/5", "central charge of (2,5)")

    kac = json.loads(fj.kac_table(2, 5))
    deltas = sorted(c["delta"] for c in kac["classes"])
    check(deltas == ["-1/5", "0"], "Kac table of (2,5)")

    check(fj.h_weight(2, 5, 1, 2) == "-1/5", "Lee-Yang weight")
    check(fj.h_weight(2, 3, 1, 1, -1) == "2", "h_{1,1;-1} = Delta_0 at (2,3)")

    jp = json.loads(fj.jack_pair([2], "2/3"))
    check(jp["b"] == "15/8", "b_(2)(2/3) = 15/8")
    terms = {tuple(t["part"]): t["coef"] for t in jp["P"]["terms"]}
    check(terms[(1, 1)] == "6/5", "P_(2) coefficient 2/(kappa+1) at kappa=2/3")

    check(fj.singular_vector_check(2, 3, 1, 2), "singular vector (1,2) at (2,3)")
    check(fj.singular_vector_check(3, 4, 2, 2), "singular vector (2,2) at (3,4)")

    check(fj.census_size(2, 3) == 13, "census size 13 at (2,3)")
    g = json.loads(fj.g_polys(2, 3))
    check(all(g["certs"].values()), "g certificates at (2,3)")
    check(len(g["g1"]["coeffs"]) == 16, "deg g1 = 15 at (2,3)")

    check(fj.struct_const(2, 3, "a", 1, -1) == "45", "a_{1,-1} = 45")

    triv = json.loads(fj.simple_character(2, 3, 1, 1, 0, 16))
    check(triv["offset"] == "0" and triv["coeffs"] == [1], "trivial character at (2,3)")

    fe = json.loads(fj.felder_euler(2, 5, 1, 2, 12))
    check(fe["offset"] == "-1/5" and fe["coeffs"][0] == 1, "felder euler at (2,5)")

    check(fj.kx_check(2, 3, 1, 1, "+", 12), "K/X certificate at (2,3)")

    c2 = fj.selberg_constant(2, 0.4)
    expected = math.gamma(-0.4) * math.gamma(1.8) / math.gamma(1.4)
    check(abs(c2 - expected) < 1e-12, "Selberg constant N=2")

    print("all python smoke tests passed")


if __name__ == "__main__":
    main()
