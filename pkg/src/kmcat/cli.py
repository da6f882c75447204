"""Command-line driver.

    kmcat verify {cartan,nilhecke,klr,crystal,liealg} [options]
    kmcat cyclo --cartan FILE --kappa K --n N [options]
    kmcat crystal-export --cartan FILE --kappa K [--depth D] [options]

Options: --cartan FILE (JSON config), --kappa a,b,..., --kappa-prime a,b,...,
--n N, --depth D, --seed S, --json OUT, --dot OUT.

Reports are deterministic for a fixed config and seed: rationals print as
"p/q", timing sits under its own key, and check order is fixed.  Exit codes:
0 all pass, 1 any fail, 2 inconclusive with no failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import product as iproduct

from . import cartan as car
from . import crystal as crys
from . import cyclo as cyc
from . import klr as klrmod
from . import liealg as lie
from . import nilhecke as nh
from . import polysym as ps
from .report import INCONCLUSIVE, PASS, Report, UNTESTED
from .rng import SplitMix64

Fr = Fraction

BUNDLED = {
    "a1": [[2]],
    "a2": [[2, -1], [-1, 2]],
    "b2": [[2, -2], [-1, 2]],
    "g2": [[2, -3], [-1, 2]],
    "a1hat": [[2, -2], [-2, 2]],
    "a1xa1": [[2, 0], [0, 2]],
}


def _load_params(path):
    with open(path) as fh:
        data = json.load(fh)
    return klrmod.KLRParams.from_config(data)


def _parse_kappa(text, rank):
    parts = tuple(int(x) for x in text.split(","))
    if len(parts) != rank:
        raise SystemExit(f"--kappa needs {rank} entries, got {len(parts)}")
    return parts


def _human_color(i):
    return i + 1


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------


def suite_cartan(report, args):
    rng = SplitMix64(args.seed)
    finite_expect = {"a1": True, "a2": True, "b2": True, "g2": True,
                     "a1hat": False, "a1xa1": True}
    for name, matrix in BUNDLED.items():
        datum = car.validate_gcm(matrix)
        ok = all(datum.d(i) * datum.a(i, j) == datum.d(j) * datum.a(j, i)
                 for i in datum.colors() for j in datum.colors())
        report.add_bool(f"symmetrizer-property-{name}", ok,
                        {"d": list(datum.sym)})
        report.add_bool(f"finite-type-{name}",
                        datum.finite_type == finite_expect[name],
                        {"got": datum.finite_type})
    try:
        car.validate_gcm([[2, -1, -2], [-2, 2, -1], [-1, -2, 2]])
        report.add_bool("not-symmetrizable-detected", False)
    except car.NotSymmetrizable:
        report.add_bool("not-symmetrizable-detected", True)

    datum = car.validate_gcm(BUNDLED["a2"])
    anchor = (1, 2)
    ok_order = True
    ok_pairing = True
    weights = [car.Weight(anchor, (rng.below(4), rng.below(4)))
               for _ in range(60)]
    for _ in range(200):
        a, b, c = (rng.choice(weights) for _ in range(3))
        try:
            if car.dominance_leq(a, a) is not True:
                ok_order = False
            if car.dominance_leq(a, b) and car.dominance_leq(b, a) and a != b:
                ok_order = False
            if car.dominance_leq(a, b) and car.dominance_leq(b, c) \
                    and not car.dominance_leq(a, c):
                ok_order = False
        except car.AnchorMismatch:
            ok_order = False
        i = rng.below(2)
        j = rng.below(2)
        shifted = a.shift(tuple(1 if t == j else 0 for t in range(2)))
        if car.pairing(datum, i, shifted) != car.pairing(datum, i, a) - datum.a(i, j):
            ok_pairing = False
    report.add_bool("dominance-partial-order", ok_order)
    report.add_bool("pairing-root-shift", ok_pairing)

    dims = {(1, 0): 3, (0, 1): 3, (1, 1): 8, (2, 0): 6}
    ok = all(car.weyl_dim(datum, k) == v for k, v in dims.items())
    report.add_bool("weyl-dimension-a2", ok, {"cases": len(dims)})


def suite_nilhecke(report, args):
    rng = SplitMix64(args.seed)
    n_max = args.n or 4

    for n in range(1, n_max + 1):
        if n > 1:
            report.add_bool(
                f"b-longest-is-one-n{n}",
                ps.schubert_b(ps.Perm.longest(n), n) == ps.Poly.one(n))
        p = nh.pi(n)
        report.add_bool(f"pi-idempotent-n{n}", nh.nh_mul(p, p) == p)
        ok = all(
            nh.nh_act(p, ps.schubert_b(w, n))
            == (ps.schubert_b(w, n) if w.is_identity() else ps.Poly.zero(n))
            for w in ps.Perm.all(n))
        report.add_bool(f"pi-kills-higher-basis-n{n}", ok)

    n = n_max
    trials = max(40, 200 // max(1, n - 1))
    ok = True
    for _ in range(trials):
        a = _random_nh(n, rng)
        b = _random_nh(n, rng)
        f = _random_poly(n, rng)
        if nh.nh_act(nh.nh_mul(a, b), f) != nh.nh_act(a, nh.nh_act(b, f)):
            ok = False
            break
    report.add_bool(f"action-compatibility-n{n}", ok, {"trials": trials})

    ok = True
    for _ in range(max(20, trials // 4)):
        a, b, c = (_random_nh(n, rng) for _ in range(3))
        if nh.nh_mul(nh.nh_mul(a, b), c) != nh.nh_mul(a, nh.nh_mul(b, c)):
            ok = False
            break
    report.add_bool(f"associativity-n{n}", ok)

    ok = True
    for _ in range(10):
        f = _random_poly(n, rng)
        if ps.sym_decompose(f, n):
            total = ps.Poly.zero(n)
            for w, c in ps.sym_decompose(f, n).items():
                total = total + c * ps.schubert_b(w, n)
            if total != f:
                ok = False
    report.add_bool(f"sym-decompose-roundtrip-n{n}", ok)

    small = min(n, 3)
    idems = nh.decompose_identity(small)
    total = nh.NHElement.zero(small)
    ok = True
    for i, e in enumerate(idems):
        total = total + e
        for j, f in enumerate(idems):
            want = e if i == j else nh.NHElement.zero(small)
            if nh.nh_mul(e, f) != want:
                ok = False
    report.add_bool(f"identity-decomposition-n{small}",
                    ok and total == nh.NHElement.one(small),
                    {"idempotents": len(idems)})

    report.add_bool("truncation-identity",
                    nh.truncation_identity_check(1, (0,))
                    and nh.truncation_identity_check(1, (5,))
                    and nh.truncation_identity_check(2, (0, 0)))


def _random_nh(n, rng):
    coords = {}
    for w in ps.Perm.all(n):
        if rng.below(3) == 0:
            e = tuple(rng.below(3) for _ in range(n))
            c = rng.below(7) - 3
            if c:
                coords[w] = ps.Poly.monomial(e, c)
    return nh.NHElement(n, coords)


def _random_poly(n, rng):
    terms = {}
    for _ in range(1 + rng.below(2)):
        e = tuple(rng.below(3) for _ in range(n))
        c = rng.below(9) - 4
        if c:
            terms[e] = Fr(c)
    return ps.Poly(n, terms)


def suite_klr(report, args):
    params = _require_params(args)
    n = args.n or 3
    result = klrmod.klr_relation_suite(params, n, seed=args.seed)
    for check in result["checks"]:
        report.add(f"klr-{check['name']}-n{n}", check["status"],
                   check["detail"] or None)


def suite_crystal(report, args):
    params = _require_params(args)
    datum = params.datum
    anchor = _parse_kappa(args.kappa, datum.rank) if args.kappa else (1,) * datum.rank
    depth = args.depth
    c = crys.highest_weight_crystal(datum, anchor, depth)
    axioms = crys.verify_normal_axioms(c)
    report.add_bool("crystal-axioms", axioms["passed"],
                    {"size": len(c), "violations": axioms["violations"][:5]})
    if datum.finite_type:
        report.add_bool("crystal-size-weyl", len(c) == car.weyl_dim(datum, anchor),
                        {"size": len(c), "weyl": car.weyl_dim(datum, anchor)})
    hw = [k for k, w in enumerate(c.weights) if w.offset == (0,) * datum.rank]
    ok = len(hw) == 1 and all(k not in c.e_edges[i] for k in hw
                              for i in datum.colors())
    report.add_bool("highest-element-unique", ok)


def suite_liealg(report, args):
    params = _require_params(args)
    datum = params.datum
    anchor = _parse_kappa(args.kappa, datum.rank) if args.kappa else (1,) * datum.rank
    depth = args.depth or 4
    module = lie.build_highest_weight(datum, anchor, depth)
    serre = lie.verify_serre(module)
    report.add_bool("serre-relations", serre["passed"],
                    {"checked": serre["checked"], "untested": serre["untested"]})
    comm = lie.commutator_check(module)
    report.add_bool("commutator-identity", comm["passed"],
                    {"checked": comm["checked"]})
    span = lie.divided_power_span_check(module)
    report.add_bool("divided-power-span", span["passed"],
                    {"checked": span["checked"]})
    c = crys.highest_weight_crystal(
        datum, anchor, None if datum.finite_type else depth)
    counts = {}
    for w in c.weights:
        counts[w.offset] = counts.get(w.offset, 0) + 1
    ok = True
    for beta, dim in module.dims.items():
        if sum(beta) < depth or datum.finite_type and module.support_exhausted:
            if counts.get(beta, 0) != dim:
                ok = False
    report.add_bool("weight-multiplicities-match-crystal", ok)


def cmd_verify(args):
    report = Report(f"verify {args.suite}", _echo_inputs(args))
    {
        "cartan": suite_cartan,
        "nilhecke": suite_nilhecke,
        "klr": suite_klr,
        "crystal": suite_crystal,
        "liealg": suite_liealg,
    }[args.suite](report, args)
    return report, {}


def cmd_cyclo(args):
    params = _require_params(args)
    datum = params.datum
    anchor = _parse_kappa(args.kappa, datum.rank)
    n_max = args.n if args.n is not None else 2
    report = Report("cyclo", _echo_inputs(args))
    result = cyc.theorem_t_check(params, anchor, n_max)
    records = []
    for row in result["rows"]:
        name = "block-" + ",".join(str(b) for b in row["content"])
        if row["status"] == "inconclusive":
            report.add(name, INCONCLUSIVE, row.get("reason"))
        else:
            report.add_bool(name, row["status"] == "pass",
                            {"simples": row["simples"], "crystal": row["crystal"]})
    for n in range(n_max + 1):
        try:
            alg = cyc.cyclo_build(params, anchor, n)
        except cyc.CapExceeded as exc:
            records.append({"cartan": datum.gcm, "kappa": anchor, "n": n,
                            "status": f"CapExceeded: {exc}"})
            continue
        for beta, info in cyc.cyclo_dims(alg).items():
            try:
                simples = cyc.count_simples(alg, beta)
                status = "ok"
            except cyc.NonSplit as exc:
                simples = None
                status = f"NonSplit: {exc}"
            records.append({
                "cartan": datum.gcm, "kappa": anchor, "n": n,
                "content": beta, "dim": info["dim"],
                "graded_dim": info["graded"], "simples": simples,
                "status": status,
            })
    return report, {"records": records}


def cmd_crystal_export(args):
    params = _require_params(args)
    datum = params.datum
    anchor = _parse_kappa(args.kappa, datum.rank)
    report = Report("crystal-export", _echo_inputs(args))
    c = crys.highest_weight_crystal(datum, anchor, args.depth)
    axioms = crys.verify_normal_axioms(c)
    report.add_bool("crystal-axioms", axioms["passed"], {"size": len(c)})
    dot = crys.export_dot(c)
    chars = {}
    for w, m in sorted(crys.character(c).items(),
                       key=lambda t: (t[0].depth(), t[0].offset)):
        chars[",".join(str(b) for b in w.offset)] = m
    complete_below = None
    if c.is_truncated():
        complete_below = min(c.weights[k].depth() for k in c.frontier)
    payload = {"anchor": list(anchor),
               "elements": len(c),
               "frontier": sorted(c.frontier),
               "complete_below_depth": complete_below,
               "character": chars}
    return report, {"dot": dot, "characters": payload}


def _require_params(args):
    if args.cartan:
        return _load_params(args.cartan)
    return klrmod.KLRParams.make(car.validate_gcm(BUNDLED["a2"]))


def _echo_inputs(args):
    cartan = None
    if args.cartan:
        import os

        with open(args.cartan) as fh:
            cartan = {"file": os.path.basename(args.cartan),
                      "config": json.load(fh)}
    return {
        "cartan": cartan,
        "kappa": args.kappa,
        "kappa_prime": args.kappa_prime,
        "n": args.n,
        "depth": args.depth,
        "seed": args.seed,
    }


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kmcat",
        description="Exact toolkit for nil Hecke / quiver Hecke algebras, "
                    "cyclotomic quotients, crystals and integrable modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cartan", help="Cartan config file (JSON)")
        p.add_argument("--kappa", help="dominant anchor, comma separated")
        p.add_argument("--kappa-prime", dest="kappa_prime",
                       help="antidominant anchor, comma separated")
        p.add_argument("--n", type=int, help="strand count / depth bound")
        p.add_argument("--depth", type=int, help="truncation depth")
        p.add_argument("--seed", type=int, default=2024,
                       help="seed for the SplitMix64 case generator")
        p.add_argument("--json", dest="json_out", help="write report JSON here")
        p.add_argument("--dot", dest="dot_out", help="write DOT graph here")

    v = sub.add_parser("verify", help="run a module verification suite")
    v.add_argument("suite",
                   choices=["cartan", "nilhecke", "klr", "crystal", "liealg"])
    common(v)

    c = sub.add_parser("cyclo", help="cyclotomic quotient blocks vs crystal")
    common(c)

    e = sub.add_parser("crystal-export",
                       help="emit DOT graph and character table")
    common(e)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        report, extras = cmd_verify(args)
    elif args.command == "cyclo":
        report, extras = cmd_cyclo(args)
    else:
        report, extras = cmd_crystal_export(args)

    from .report import jsonable

    if args.dot_out and "dot" in extras:
        with open(args.dot_out, "w") as fh:
            fh.write(extras["dot"])
    if args.json_out:
        payload = report.to_dict()
        # timing stays out of files so written reports are byte-reproducible
        timing = payload.pop("timing")
        for key, val in extras.items():
            if key != "dot":
                payload[key] = jsonable(val)
        with open(args.json_out, "w") as fh:
            fh.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        print(f"kmcat: report written to {args.json_out} "
              f"({timing['seconds']}s)")

    for check in report.checks:
        line = f"[{check.status.upper():>12}] {check.name}"
        print(line)
    code = report.exit_code()
    summary = report.to_dict()["summary"]
    print(f"kmcat: {summary['pass']} pass, {summary['fail']} fail, "
          f"{summary['untested']} untested, "
          f"{summary['inconclusive']} inconclusive")
    return code


if __name__ == "__main__":
    sys.exit(main())
