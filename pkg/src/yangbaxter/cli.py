"""ybtool: build, verify and inspect Yang-Baxter operators from the command line.

Exit status is 0 when every check passes, 1 when a check fails and 2 on
bad input.  ``--json PATH`` (or ``-`` for stdout) writes the machine
readable report with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import algebras as alg
from . import constructors as con
from . import duality as du
from . import frt
from . import linalg as la
from . import scalar as sc
from . import suite
from . import verifiers as vf
from .errors import StructureError, YBError


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# input helpers


def _read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


def load_algebra(ref: str):
    """A catalog name, or a path to Algebra JSON."""
    if ref.endswith(".json") or os.path.sep in ref or ref == "-":
        return alg.algebra_from_json(_read_json(ref))
    return alg.catalog(ref)


def load_operator(path: str) -> la.Matrix:
    obj = _read_json(path)
    if isinstance(obj, dict) and "operator" in obj:
        obj = obj["operator"]
    try:
        return la.matrix_from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: not an operator JSON ({exc})") from exc


def scalar(text, field):
    try:
        return sc.parse_scalar(text, field)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad scalar {text!r}: {exc}") from exc


def vector(text, field):
    return tuple(scalar(x, field) for x in text.split(","))


# ---------------------------------------------------------------------------
# catalog


def cmd_catalog(args):
    if args.action == "list":
        return {"names": list(alg.CATALOG_NAMES)}, True, "\n".join(alg.CATALOG_NAMES)
    if not args.name:
        raise InputError("catalog show needs a name")
    obj = alg.algebra_to_json(alg.catalog(args.name))
    return obj, True, json.dumps(obj, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# construct

# family -> (structure argument kind, scalar parameter names, takes z)
FAMILIES = {
    "assoc-R": ("assoc", ("alpha", "beta", "gamma"), False),
    "ansatz-R": ("assoc", ("alpha", "beta", "gamma"), False),
    "baxter-pair": ("assoc", ("q",), False),
    "colored-R": ("assoc", ("p", "q", "u", "v"), False),
    "colored-R-inverse": ("assoc", ("p", "q", "u", "v"), False),
    "spectral-S": ("assoc", ("q", "s"), False),
    "spectral-S-inverse": ("assoc", ("q", "s"), False),
    "wxz-assoc": ("assoc", ("lambda", "mu"), False),
    "wxz-colored": ("assoc", ("p", "q", "s", "t"), False),
    "wxz-poisson": ("poisson", (), False),
    "super-phi": ("lie", ("alpha",), True),
    "super-phi-inverse": ("lie", ("alpha",), True),
    "super-phi-ab": ("lie", ("alpha", "beta"), True),
    "super-phi-ab-inverse": ("lie", ("alpha", "beta"), True),
    "colored-super": ("lie", ("alpha_uv", "beta_uv"), True),
    "gtheta-R": ("lie", ("alpha",), True),
    "gtheta-R-inverse": ("lie", ("alpha",), True),
    "classical-r": ("lie", ("alpha",), True),
    "paper-matrix": (None, ("q", "eta"), False),
}


def build(family, structure, z, p):
    """Operators for a family as an ordered {label: Matrix} dict."""
    a = structure
    if family == "assoc-R":
        return {"R": con.build_assoc_R(a, *p)}
    if family == "ansatz-R":
        return {"R": con.build_ansatz_R(a, *p)}
    if family == "baxter-pair":
        r1, r2 = con.baxterization_pair(a, *p)
        return {"R_q_1/q_1/q": r1, "R_q_1/q_q": r2}
    if family == "colored-R":
        return {"R": con.build_colored_R(a, *p)}
    if family == "colored-R-inverse":
        return {"R": con.colored_R_inverse(a, *p)}
    if family == "spectral-S":
        return {"R": con.build_spectral_S(a, *p)}
    if family == "spectral-S-inverse":
        return {"R": con.spectral_S_inverse(a, *p)}
    if family == "wxz-assoc":
        return dict(zip("WXZ", con.build_wxz_assoc(a, *p)))
    if family == "wxz-colored":
        pp, qq, s, t = p
        return dict(zip("WXZ", con.build_wxz_from_colored(lambda u, v: con.build_colored_R(a, pp, qq, u, v), s, t)))
    if family == "wxz-poisson":
        return dict(zip("WXZ", con.build_wxz_poisson(a)))
    if family == "super-phi":
        return {"R": con.build_super_phi(a, z, *p)}
    if family == "super-phi-inverse":
        return {"R": con.super_phi_inverse(a, z, *p)}
    if family == "super-phi-ab":
        return {"R": con.build_super_phi_ab(a, z, *p)}
    if family == "super-phi-ab-inverse":
        return {"R": con.super_phi_ab_inverse(a, z, *p)}
    if family == "colored-super":
        return {"R": con.build_colored_super_R(a, z, *p)}
    if family == "gtheta-R":
        return {"R": con.build_gtheta_R(a, z, *p)}
    if family == "gtheta-R-inverse":
        return {"R": con.gtheta_R_inverse(a, z, *p)}
    if family == "classical-r":
        return {"r": con.build_classical_r(a, z, *p)}
    if family == "paper-matrix":
        q, eta = p
        if eta not in (0, 1):
            raise InputError("eta must be 0 or 1")
        return {"R": frt.paper_matrix(q, int(eta))}
    raise InputError(f"unknown family {family!r}")


def cmd_construct(args):
    if args.family not in FAMILIES:
        raise InputError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    kind, names, takes_z = FAMILIES[args.family]
    rest = list(args.args)
    structure = load_algebra(rest.pop(0)) if kind else None
    z = None
    if takes_z:
        if args.z is None:
            raise InputError(f"{args.family} needs --z (comma separated coordinates)")
    if len(rest) != len(names):
        raise InputError(f"{args.family} expects parameters {' '.join(names)}")
    field = args.field
    params = [scalar(r, field) for r in rest]
    if takes_z:
        z = vector(args.z, field)
    ops = build(args.family, structure, z, params)
    if len(ops) == 1:
        (op,) = ops.values()
        obj = la.matrix_to_json(op)
        text = str(op)
    else:
        obj = {"family": args.family, "operators": {k: la.matrix_to_json(m) for k, m in ops.items()}}
        text = "\n\n".join(f"{k} =\n{m}" for k, m in ops.items())
    return obj, True, text


# ---------------------------------------------------------------------------
# verify


CHECKS = (
    "braid", "qybe", "transfer", "colored", "one-param", "e-system",
    "wxz", "classical", "gtheta-cond", "colored-super-cond",
)


def _rng(args):
    return suite.Sampler(args.seed, 0)


def _run_report(command, seed, checks):
    return {
        "command": command,
        "seed": seed,
        "generator": suite.GENERATOR,
        "checks": checks,
        "overall_pass": all(c["pass"] for c in checks),
    }


def _residual_entry(name, res, n=None):
    d = res.as_dict(n)
    d["name"] = name
    d["pass"] = d["is_zero"]
    return d


def _ops(args, k):
    if len(args.inputs) != k:
        raise InputError(f"{args.check} takes {k} operator file(s)")
    return [load_operator(p) for p in args.inputs]


def cmd_verify(args):
    chk = args.check
    checks = []
    if chk in ("braid", "qybe", "classical"):
        (R,) = _ops(args, 1)
        fn = {"braid": vf.check_braid, "qybe": vf.check_qybe, "classical": vf.check_classical}[chk]
        checks.append(_residual_entry(chk, fn(R), R.tensor_dim))
    elif chk == "transfer":
        (R,) = _ops(args, 1)
        t = vf.check_transfer(R)
        checks.append({"name": "transfer", "pass": t.consistent, **t._asdict()})
    elif chk == "colored":
        ops = _ops(args, 3)
        checks.append(_residual_entry("colored", vf.check_colored(*ops), ops[0].tensor_dim))
    elif chk == "wxz":
        ops = _ops(args, 3)
        for nm, res in zip(vf.WXZ_NAMES, vf.check_wxz(*ops)):
            checks.append(_residual_entry(nm, res, ops[0].tensor_dim))
    elif chk == "one-param":
        a = load_algebra(args.algebra or "dual_numbers")
        s = _rng(args)
        for k in range(args.samples):
            q = scalar(args.q, None) if args.q else s.nonzero()
            s1, s2, s3 = s.distinct_nonzero(3)
            res = vf.check_one_param(lambda x: con.build_spectral_S(a, q, x), s1, s2, s3, form=args.form)
            checks.append(_residual_entry(f"#{k} q={q} s=({s1},{s2},{s3})", res))
    elif chk == "e-system":
        if args.preset != "affine":
            raise InputError("e-system supports --preset affine")
        p, q = scalar(args.p or "1", None), scalar(args.q or "2", None)
        fns = con.affine_coefficients(p, q)
        s = _rng(args)
        for k in range(args.samples):
            u, v, w = s.rat(), s.rat(), s.rat()
            vals = vf.check_e_system(*fns, u, v, w)
            checks.append({"name": f"#{k} (u,v,w)=({u},{v},{w})", "pass": all(x == 0 for x in vals),
                           "values": [str(x) for x in vals]})
    elif chk == "gtheta-cond":
        l = load_algebra(args.inputs[0] if args.inputs else "gl11")
        if args.z is None:
            raise InputError("gtheta-cond needs --z")
        rep = vf.check_gtheta_condition(l, vector(args.z, None))
        checks.extend({"name": c.name, "pass": c.passed, "detail": c.detail} for c in rep.checks)
    elif chk == "colored-super-cond":
        f, g = con.valuewise_coefficients(
            [scalar(x, None) for x in (args.f or "0,1").split(",")],
            [scalar(x, None) for x in (args.g or "1").split(",")],
        )
        s = _rng(args)
        for k in range(args.samples):
            u, v, w = s.rat(), s.rat(), s.rat()
            val = vf.check_colored_super_condition(f, g, u, v, w)
            checks.append({"name": f"#{k} (u,v,w)=({u},{v},{w})", "pass": val == 0, "value": str(val)})
    else:
        raise InputError(f"unknown check {chk!r}")
    rep = _run_report(f"verify {chk}", args.seed, checks)
    text = "\n".join(f"[{'ok' if c['pass'] else 'FAIL'}] {c['name']}" + (f" witness={c['witness']}" if c.get("witness") else "")
                     for c in checks)
    return rep, rep["overall_pass"], text + f"\n{'PASS' if rep['overall_pass'] else 'FAIL'}"


# ---------------------------------------------------------------------------
# frt


def cmd_frt(args):
    if args.paper_matrix:
        qtxt, eta_txt = args.paper_matrix
        q = scalar(qtxt, args.field or ("Qq" if "q" in qtxt else None))
        eta = int(eta_txt)
        R = frt.paper_matrix(q, eta)
    elif args.operator:
        R = load_operator(args.operator)
    else:
        raise InputError("frt needs --operator PATH or --paper-matrix Q ETA")
    rs = frt.frt_relations(R)
    obj = frt.relations_to_json(rs)
    ok = True
    lines = [f"rank {rs.rank}"] + [f"  {t} = 0" for t in rs.format()]
    if args.paper_matrix:
        cmp_ = frt.compare_spans(frt.paper_relation_list(q, eta), rs)
        obj["comparison_with_listed"] = cmp_.relation
        ok = cmp_.relation in ("equal", "s1<s2")
        lines.append(f"listed relations vs computed span: {cmp_.relation}")
    if args.coideal:
        obj["coideal_compatible"] = frt.is_coideal_compatible(rs)
        ok = ok and obj["coideal_compatible"]
        lines.append(f"degree-2 coideal compatible: {obj['coideal_compatible']}")
    if args.search_sources:
        if not args.paper_matrix or sc.field_of(q) != "Q":
            raise InputError("--search-sources needs --paper-matrix with a rational q")
        hits = frt.search_assoc_sources(q, eta)
        obj["source_search"] = [
            {"algebra": h.algebra, "params": [str(x) for x in h.params], "form": h.form,
             "change_of_basis": [str(x) for x in h.change_of_basis]}
            for h in hits
        ]
        lines.append(f"exploratory source search: {len(hits)} match(es)")
    return obj, ok, "\n".join(lines)


# ---------------------------------------------------------------------------
# duality


def cmd_duality(args):
    if args.check_identities:
        a = load_algebra(args.algebra or "dual_numbers")
        rep = du.check_duality_identities(a)
        return rep.as_dict(), rep.ok, str(rep)
    f = args.functor
    if f is None:
        raise InputError("duality needs --functor or --check-identities")
    if f == "D":
        if not args.structure:
            raise InputError("--functor D needs --structure PATH")
        s = du.dualize_yb(du.structure_from_json(_read_json(args.structure)))
    else:
        x = load_algebra(args.algebra or {"F": "dual_numbers", "G": "dual_numbers"}.get(f, "heisenberg3"))
        if f == "F":
            s = du.functor_F_alg(x)
        elif f == "G":
            s = du.functor_G_coalg(x if isinstance(x, alg.Coalgebra) else alg.dualize_assoc(x))
        elif f == "Flie":
            s = du.functor_F_lie(x)
        else:
            s = du.functor_G_liecoalg(x if isinstance(x, alg.LieCoalgebra) else alg.dualize_lie(x))
    rep = du.check_yb_structure(s)
    return {"structure": du.structure_to_json(s), "clauses": rep.as_dict()}, rep.ok, f"{s.phi}\n{rep}"


# ---------------------------------------------------------------------------
# suite


def cmd_suite(args):
    if args.catalog:
        data = _read_json(args.catalog)
        entries = data if isinstance(data, list) else [data]
        for i, e in enumerate(entries):
            try:
                alg.algebra_from_json(e)
            except StructureError as exc:
                raise StructureError(f"{args.catalog} entry {i}: {exc}") from exc
    rep = suite.run_suite(args.seed, determinism=not args.no_determinism)
    return rep, rep["overall_pass"], suite.format_report(rep)


# ---------------------------------------------------------------------------
# entry point


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default %d)" % suite.DEFAULT_SEED)
    common.add_argument("--json", default=argparse.SUPPRESS, metavar="PATH", help="write JSON report to PATH or - for stdout")
    common.add_argument("--field", choices=sc.FIELDS, default=argparse.SUPPRESS, help="ground field for parsed scalars")

    p = argparse.ArgumentParser(prog="ybtool", description="Exact Yang-Baxter operator toolkit.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", parents=[common], help="list or show built-in algebras")
    c.add_argument("action", choices=("list", "show"))
    c.add_argument("name", nargs="?")

    c = sub.add_parser("construct", parents=[common], help="build an operator family")
    c.add_argument("family", help="one of: " + ", ".join(FAMILIES))
    c.add_argument("args", nargs="*", help="algebra (catalog name or JSON path) then parameters")
    c.add_argument("--z", help="comma separated coordinates of z")

    c = sub.add_parser("verify", parents=[common], help="run one equation check")
    c.add_argument("check", choices=CHECKS)
    c.add_argument("inputs", nargs="*", help="operator JSON files (or an algebra for gtheta-cond)")
    c.add_argument("--algebra")
    c.add_argument("--z")
    c.add_argument("--q")
    c.add_argument("--p")
    c.add_argument("--f", help="f coefficients, lowest degree first, comma separated")
    c.add_argument("--g", help="g coefficients, lowest degree first, comma separated")
    c.add_argument("--preset", default="affine")
    c.add_argument("--samples", type=int, default=32)
    c.add_argument("--form", choices=("standard", "literal"), default="standard")

    c = sub.add_parser("frt", parents=[common], help="degree-2 FRT relations of an R-matrix")
    c.add_argument("--operator", metavar="PATH")
    c.add_argument("--paper-matrix", nargs=2, metavar=("Q", "ETA"))
    c.add_argument("--coideal", action="store_true", help="also check degree-2 coalgebra compatibility")
    c.add_argument("--search-sources", action="store_true", help="exploratory search for algebra data")

    c = sub.add_parser("duality", parents=[common], help="YB structures, functors and duality")
    c.add_argument("--functor", choices=("F", "G", "Flie", "Gliecoalg", "D"))
    c.add_argument("--algebra")
    c.add_argument("--structure", metavar="PATH")
    c.add_argument("--check-identities", action="store_true")

    c = sub.add_parser("suite", parents=[common], help="run the full acceptance suite")
    c.add_argument("--catalog", metavar="PATH", help="validate extra algebra JSON before running")
    c.add_argument("--no-determinism", action="store_true", help="skip the second run")
    return p


COMMANDS = {
    "catalog": cmd_catalog,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "frt": cmd_frt,
    "duality": cmd_duality,
    "suite": cmd_suite,
}


def _emit(obj, target):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if target == "-":
        sys.stdout.write(text)
    else:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.seed = getattr(args, "seed", suite.DEFAULT_SEED)
    args.json = getattr(args, "json", None)
    args.field = getattr(args, "field", None)
    try:
        obj, ok, text = COMMANDS[args.command](args)
    except (YBError, InputError, KeyError, ValueError, ZeroDivisionError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        err = {"error": type(exc).__name__, "message": str(msg), "command": args.command}
        if args.json:
            _emit(err, args.json)
        print(f"error: {err['error']}: {err['message']}", file=sys.stderr)
        return 2
    if args.json:
        _emit(obj, args.json)
    if args.json != "-":
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
