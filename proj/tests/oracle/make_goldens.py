"""Regenerates tests/golden/reference.json from refmodel.py.

Run once and commit the output; the C++ tests read the frozen file.
    python3 tests/oracle/make_goldens.py > tests/golden/reference.json
"""

import json
import random
import sys

import refmodel as rm


def alloc_obj(r):
    keys = ("rho11", "rho22", "rho10", "rho20", "rho13", "rho23")
    return dict(zip(keys, r))


def random_channel(rng, family):
    g10, g20 = rng.uniform(0.4, 2.0), rng.uniform(0.4, 2.0)
    up1 = family in (2, 3)
    up2 = family in (2, 4)
    g12 = g10 * rng.uniform(1.2, 6.0) if up1 else g10 * rng.uniform(0.2, 0.95)
    g21 = g20 * rng.uniform(1.2, 6.0) if up2 else g20 * rng.uniform(0.2, 0.95)
    return g12, g21, g10, g20, rng.uniform(0.5, 8.0), rng.uniform(0.5, 8.0)


def main():
    out = {}

    out["zeta_example"] = {
        "gains": {"g10": 1.0, "g20": 2.0},
        "allocation": {"rho10": 0.5, "rho20": 0.25, "rho13": 1.0, "rho23": 0.25},
        "zeta": rm.zeta(1.0, 2.0, 0.5, 0.25, 1.0, 0.25),
    }

    g = (5.0, 5.0, 1.0, 1.0)
    r = (2.0, 2.0, 1.0, 1.0, 1.0, 1.0)
    c = rm.constraints(g, 0.2, 0.2, r)
    # budgets chosen so the allocation meets both power equalities: 0.2 * 2 + 0.6 * 2 = 1.6
    out["equal_split"] = {
        "gains": {"g12": 5.0, "g21": 5.0, "g10": 1.0, "g20": 1.0, "p1": 1.6, "p2": 1.6},
        "phases": [0.2, 0.2],
        "allocation": alloc_obj(r),
        "constraints": c,
        "region_corners": rm.region_corners(c),
    }

    t1g, t1 = (5.0, 3.0, 1.0, 1.5), dict(P1=2.0, P2=2.5, a1=0.4, r11=2.5, r10=0.4, r13=0.9)
    out["table1"] = {
        "gains": dict(zip(("g12", "g21", "g10", "g20"), t1g), p1=t1["P1"], p2=t1["P2"]),
        "alpha1": t1["a1"],
        "partial": {"rho11": t1["r11"], "rho10": t1["r10"], "rho13": t1["r13"]},
        "values": rm.table1(t1g, t1["P1"], t1["P2"], t1["a1"], t1["r11"], t1["r10"], t1["r13"]),
    }

    t2g = (5.0, 3.0, 1.0, 1.2)
    t2r = (2.0, 1.5, 0.5, 0.6, 1.0, 0.8)
    out["table2"] = {
        "gains": dict(zip(("g12", "g21", "g10", "g20"), t2g), p1=2.0, p2=3.0),
        "phases": [0.2, 0.25],
        "partial": alloc_obj(t2r),
        "values": rm.table2(t2g, 2.0, 3.0, 0.2, 0.25, t2r),
    }

    rate, alloc = rm.individual_ref((5.0, 5.0, 1.0, 1.0), 2.0, 2.0, 0.5)
    out["individual_symmetric"] = {
        "gains": {"g12": 5.0, "g21": 5.0, "g10": 1.0, "g20": 1.0, "p1": 2.0, "p2": 2.0},
        "alpha1": 0.5,
        "rate": rate,
        "allocation": alloc_obj(alloc),
    }

    # Random channels per family at fixed phases, for closed form vs reference checks.
    rng = random.Random(20240611)
    cases = []
    for family in (2, 2, 2, 2, 3, 3, 3, 4, 4, 1):
        g12, g21, g10, g20, p1, p2 = random_channel(rng, family)
        a1 = round(rng.uniform(0.05, 0.45), 3)
        a2 = round(rng.uniform(0.05, 0.9 - a1), 3)
        # one-sided families zero the broadcast phase of the non-relaying user
        e1 = a1 if family in (2, 3) else 0.0
        e2 = a2 if family in (2, 4) else 0.0
        s_rate, s_alloc = rm.sum_ref((g12, g21, g10, g20), p1, p2, e1, e2)
        i_rate, i_alloc = rm.individual_ref((g12, g21, g10, g20), p1, p2, a1 if g12 > g10 else 0.0)
        cases.append({
            "family": family,
            "gains": {"g12": g12, "g21": g21, "g10": g10, "g20": g20, "p1": p1, "p2": p2},
            "phases": [a1, a2],
            "effective_phases": [e1, e2],
            "sum_rate": s_rate,
            "individual_rate": i_rate,
        })
    out["random_fixed_phase"] = cases

    # Case-2 channel at (0.2, 0.2).
    rng2 = random.Random(7)
    g12, g21, g10, g20, p1, p2 = random_channel(rng2, 2)
    s_rate, s_alloc = rm.sum_ref((g12, g21, g10, g20), p1, p2, 0.2, 0.2)
    out["sum_case2_020"] = {
        "gains": {"g12": g12, "g21": g21, "g10": g10, "g20": g20, "p1": p1, "p2": p2},
        "phases": [0.2, 0.2],
        "rate": s_rate,
        "allocation": alloc_obj(s_alloc),
    }

    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
