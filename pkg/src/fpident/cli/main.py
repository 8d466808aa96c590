"""Command dispatch for the ``fpident`` console script.

Exit codes: 0 on success, 1 when a checked predicate comes out negative, 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .. import cyclotomic as cyc
from .. import invariants as inv
from ..errors import (
    BoundExceeded,
    DimensionCap,
    FpidentError,
    HypothesisViolated,
    IdentityFails,
    ParseError,
)
from ..groups import (
    GroupMap,
    abelian,
    cayley,
    heisenberg,
    heisenberg_golden,
    is_fixpoint_free,
    is_identity,
    matrix_map,
    nilpotency_class,
    search_instances,
    twisted_golden,
    twisted_heisenberg,
    verify_solvable_decomposition,
    verify_theorem_A,
    verify_theorem_B,
)
from ..groups.search import FAMILIES, MAX_ORDER, candidate_decompositions
from ..liering import (
    LieEndo,
    LieRing,
    bch_automorphism,
    bch_group,
    eigenspace_grading,
    free_quotient,
    golden_lie_ring,
    graded_class_bound_check,
    malcev_charpoly_check,
    verify_lie_class_bound,
)
from ..liering.construction import default_matrix
from ..polycore import IntPoly
from .parser import parse_polynomial
from .report import document, dumps, encode, render_text

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit a JSON report document")
    p.add_argument("--max-order", type=int, default=MAX_ORDER, help="search bound")
    p.add_argument("--mod", type=int, help="modulus for group and ring constructions")
    p.add_argument("--poly", help="polynomial expression in t")
    p.add_argument("--table", help="Cayley table JSON file")
    p.add_argument("--lie", help="structure-constant JSON file")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    top = _Parser(prog="fpident", description="Polynomial identities of fix-point-free maps.")
    sub = top.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    for name, help_ in [("invariants", "r(1), tcn, Discr*, Prod*"),
                        ("good", "goodness with a witness when bad"),
                        ("af-roots", "are the roots arithmetically free?"),
                        ("report", "everything known about one polynomial")]:
        add(name, help_).add_argument("expr", nargs="?")
    p = add("rres", "reduced resultants RRes_u")
    p.add_argument("expr", nargs="?")
    p.add_argument("--u", type=int, action="append", help="single period(s) to evaluate")
    p = add("cyclotomic", "cyclotomic polynomial checks")
    p.add_argument("n", type=int)
    p.add_argument("--invariants", action="store_true", help="include Discr* and Prod*")
    p = add("split", "Psi_n = t^n - 1 over t - 1 against the closed forms")
    p.add_argument("n", type=int)
    p = add("verify-group", "check the group theorems on one automorphism")
    p.add_argument("family", choices=["heisenberg", "twisted", "abelian", "cayley", "bch"])
    p.add_argument("--auto", help="'golden' or a JSON file with an 'images' array")
    p.add_argument("--matrix", help="matrix for abelian groups, rows split by ';'")
    p = add("verify-lie", "check the Lie-ring class bound on one endomorphism")
    p.add_argument("--auto", help="'golden' or a JSON file with an 'endo' matrix")
    p = add("lie-free-quotient", "free nilpotent quotient annihilated by r")
    p.add_argument("expr", nargs="?")
    p.add_argument("--k", type=int, required=True, help="nilpotency step of the free ring")
    p.add_argument("--matrix", help="generator matrix, rows split by ';' (default companion of r)")
    p.add_argument("--doubled", action="store_true", help="use two copies of the companion matrix")
    p = add("search", "fix-point-free automorphisms with r as an identity")
    p.add_argument("expr", nargs="?")
    p.add_argument("--families", default=",".join(FAMILIES))
    p.add_argument("--per-group", type=int, default=3)
    p.add_argument("--automorphism-limit", type=int, default=2000)
    p.add_argument("--node-limit", type=int, default=20000)
    return top


# -- helpers -------------------------------------------------------------------


def _poly(args) -> IntPoly:
    text = getattr(args, "expr", None) or args.poly
    if text is None:
        raise UsageError("a polynomial is required (positional or --poly)")
    return parse_polynomial(text)


def _matrix(text: str) -> list:
    try:
        return [[int(x) for x in row.split(",")] for row in text.split(";")]
    except ValueError:
        raise UsageError(f"cannot read matrix {text!r}") from None


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _verdict(v) -> dict:
    return {"name": v.name, "passed": v.passed, "branch": v.branch, "details": v.details}


# -- subcommands ----------------------------------------------------------------


def cmd_invariants(args):
    rep = inv.invariant_report(_poly(args))
    res = {"r": rep.r, "r_at_1": rep.r_at_1, "tcn": rep.tcn, "discr_star": rep.discr_star,
           "prod_star": rep.prod_star, "quadruple": list(rep.quadruple)}
    return res, OK


def cmd_rres(args):
    r = _poly(args)
    if args.u:
        table = {u: inv.rres(r, u) for u in args.u}
    else:
        table = inv.rres_table(r)
    return {"r": r, "rres": table, "tcn": inv.tcn(r)}, OK


def cmd_good(args):
    r = _poly(args)
    good, w = inv.is_good(r)
    return {"r": r, "good": good, "witness": w}, OK


def cmd_af_roots(args):
    r = _poly(args)
    af, w = inv.roots_arithmetically_free(r)
    res = {"r": r, "arithmetically_free": af}
    if w is not None:
        res["witness"] = {"u": w[0], "cyclotomic_index": w[1], "s": w[2]}
    return res, OK


def cmd_report(args):
    rep = inv.invariant_report(_poly(args))
    res = {
        "r": rep.r, "quadruple": list(rep.quadruple), "rres": rep.rres_table,
        "tcn": rep.tcn, "discr_star": rep.discr_star, "prod_star": rep.prod_star,
        "good": rep.good, "good_witness": rep.good_witness, "roots_af": rep.roots_af,
        "af_witness": rep.af_witness, "notes": list(rep.notes),
    }
    return res, OK


def cmd_cyclotomic(args):
    n = args.n
    if n < 1:
        raise UsageError("n must be positive")
    phi = cyc.cyclotomic(n)
    res = {"n": n, "phi": phi, "radical": cyc.radical(n), "euler_phi": cyc.euler_phi(n)}
    code = OK
    if n >= 2:
        chk = cyc.cyclo_identity_check(n)
        res["identities"] = chk.checks
        res["value_at_one"] = chk.value_at_one
        res["identities_ok"] = chk.ok
        code = OK if chk.ok else FAILED
    if args.invariants:
        d, p = inv.discr_star(phi), inv.prod_star(phi)
        res["discr_star"], res["prod_star"], res["discr_prod"] = d, p, d * p
        res["discr_prod_factorization"] = cyc.factorize(abs(d * p)) if d * p else {}
        res["tcn"] = inv.tcn(phi)
    return res, code


def cmd_split(args):
    n = args.n
    if n < 2:
        raise UsageError("n must be at least 2")
    psi = cyc.split_polynomial(n)
    d, p, t = inv.discr_star(psi), inv.prod_star(psi), inv.tcn(psi)
    closed = {"discr_star": n ** (n - 2), "prod_star": n ** (n - 1)}
    ok = d == closed["discr_star"] and p == closed["prod_star"] and (t == 0) == (not cyc.is_prime(n))
    res = {"n": n, "psi": psi, "discr_star": d, "prod_star": p, "tcn": t,
           "closed_forms": closed, "prime": cyc.is_prime(n), "matches": ok}
    return res, OK if ok else FAILED


def _group_and_map(args):
    fam, auto = args.family, args.auto
    m = args.mod
    if fam in ("heisenberg", "twisted", "abelian") and m is None:
        raise UsageError(f"--mod is required for {fam}")
    if fam == "heisenberg":
        g = heisenberg(m)
        if auto == "golden":
            return g, heisenberg_golden(g)
    elif fam == "twisted":
        g = twisted_heisenberg(m)
        if auto == "golden":
            return g, twisted_golden(g)
    elif fam == "abelian":
        if not args.matrix:
            raise UsageError("abelian needs --matrix")
        mat = _matrix(args.matrix)
        g = abelian((m,) * len(mat))
        return g, matrix_map(g, mat)
    elif fam == "cayley":
        if not args.table:
            raise UsageError("cayley needs --table")
        doc = _load_json(args.table)
        g = cayley(doc["table"])
        if auto is None and "images" in doc:
            return g, GroupMap.from_indices(g, doc["images"])
    elif fam == "bch":
        if args.lie:
            doc = _load_json(args.lie)
            L = LieRing.from_json(doc)
            if "endo" not in doc:
                raise UsageError("the Lie file needs an 'endo' matrix for bch")
            endo = LieEndo(L, doc["endo"])
        elif auto == "golden":
            if m is None:
                raise UsageError("--mod is required for the golden Lie ring")
            L, endo = golden_lie_ring(f"Zmod:{m}")
        else:
            raise UsageError("bch needs --lie or --auto golden")
        g = bch_group(L)
        return g, bch_automorphism(g, endo)
    if auto is None or auto == "golden":
        raise UsageError(f"no automorphism given for {fam}")
    doc = _load_json(auto)
    return g, GroupMap.from_indices(g, doc["images"])


def cmd_verify_group(args):
    r = _poly(args)
    g, alpha = _group_and_map(args)
    res = {"order": g.order, "family": args.family, "r": r,
           "automorphism": alpha.is_automorphism, "class": nilpotency_class(g)}
    res["fix_point_free"] = alpha.is_automorphism and is_fixpoint_free(g, alpha)
    deco, strategy = None, None
    for strat, cand in candidate_decompositions(g, alpha, r):
        if is_identity(g, alpha, cand):
            deco, strategy = cand, strat
            break
    res["identity"] = strategy is not None
    res["identity_strategy"] = strategy
    if deco is None:
        res["error"] = "r is not an identity by any available decomposition"
        return res, FAILED
    res["word"] = [list(letter) for letter in deco.word()]
    verdicts, code = {}, OK
    for name, fn in [("theorem_A", verify_theorem_A), ("theorem_B", verify_theorem_B),
                     ("solvable_decomposition", verify_solvable_decomposition)]:
        try:
            v = fn(g, alpha, deco)
            verdicts[name] = _verdict(v)
            if not v.passed:
                code = FAILED
        except HypothesisViolated as exc:
            verdicts[name] = {"name": name, "passed": False, "hypothesis": exc.hypothesis,
                              "details": exc.detail}
            code = FAILED
    res["verdicts"] = verdicts
    if "theorem_A" in verdicts and verdicts["theorem_A"].get("branch"):
        res["branch"] = verdicts["theorem_A"]["branch"]
    return res, code


def cmd_verify_lie(args):
    r = _poly(args)
    if args.lie:
        doc = _load_json(args.lie)
        L = LieRing.from_json(doc)
        if args.auto and args.auto != "golden":
            doc = _load_json(args.auto)
        if "endo" not in doc:
            raise UsageError("an 'endo' matrix is required")
        gamma = LieEndo(L, doc["endo"])
    else:
        if args.auto not in (None, "golden"):
            raise UsageError("without --lie only --auto golden is available")
        ring = f"Zmod:{args.mod}" if args.mod else "Q"
        L, gamma = golden_lie_ring(ring)
    res = {"rank": L.rank, "ring": str(L.ring), "r": r}
    code = OK
    try:
        v = verify_lie_class_bound(gamma, r)
        res["class_bound"] = _verdict(v)
        code = OK if v.passed else FAILED
    except (HypothesisViolated, IdentityFails) as exc:
        res["class_bound"] = {"passed": False, "error": str(exc)}
        return res, FAILED
    if L.ring.tag == "Q":
        mv = malcev_charpoly_check(L, gamma, [r])
        res["charpoly"] = {"passed": mv.passed, "chi": mv.chi, "exponent": mv.exponent,
                           "factor_chis": mv.factor_chis}
        code = code if mv.passed else FAILED
    elif L.ring.is_field:
        try:
            eg = eigenspace_grading(L, gamma, r)
        except FpidentError as exc:
            res["eigenspaces"] = {"error": str(exc)}
        else:
            bv = graded_class_bound_check(eg.graded)
            res["eigenspaces"] = {"dims": eg.dims, "strong": eg.strong, "weak": eg.weak,
                                  "graded_bound": bv}
            code = code if bv.passed else FAILED
    return res, code


def cmd_lie_free_quotient(args):
    r = _poly(args)
    mat = _matrix(args.matrix) if args.matrix else default_matrix(r, args.doubled)
    fq = free_quotient(r, args.k, matrix=mat)
    res = {"r": r, "k": args.k, "matrix": mat, "free_dimension": fq.free.rank,
           "ideal_dimension": fq.ideal_dimension, "quotient_dimension": fq.quotient.rank,
           "class": fq.class_, "quotient": fq.quotient.to_json(),
           "endo": [list(row) for row in fq.endo.matrix]}
    return res, OK


def cmd_search(args):
    r = _poly(args)
    fams = [f.strip() for f in args.families.split(",") if f.strip()]
    tables = []
    if args.table:
        tables.append(_load_json(args.table)["table"])
    found = search_instances(args.max_order, fams, r, tables=tables, per_group=args.per_group,
                             automorphism_limit=args.automorphism_limit,
                             node_limit=args.node_limit)
    inst = [{"group": f"{i.group.tag}{list(i.group.params)}", "order": i.group.order,
             "strategy": i.strategy, "word": [list(x) for x in i.deco.word()],
             "images": list(i.alpha.img)} for i in found]
    return {"r": r, "bound": args.max_order, "count": len(found), "instances": inst,
            "truncated": found.truncated}, OK


COMMANDS = {
    "invariants": cmd_invariants, "rres": cmd_rres, "good": cmd_good, "af-roots": cmd_af_roots,
    "cyclotomic": cmd_cyclotomic, "split": cmd_split, "verify-group": cmd_verify_group,
    "verify-lie": cmd_verify_lie, "lie-free-quotient": cmd_lie_free_quotient,
    "search": cmd_search, "report": cmd_report,
}


def run(argv=None, out=None, err=None) -> int:
    """Run one command; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        start = time.perf_counter()
        results, code = COMMANDS[args.command](args)
        elapsed = int((time.perf_counter() - start) * 1000)
    except (UsageError, ParseError, BoundExceeded, DimensionCap) as exc:
        print(f"fpident: {exc}", file=err)
        return USAGE
    except FpidentError as exc:
        print(f"fpident: {type(exc).__name__}: {exc}", file=err)
        return FAILED
    if args.json:
        print(dumps(document(argv, results, elapsed)), file=out)
    else:
        print(render_text(encode(results)), file=out)
    return code


def main():
    sys.exit(run())
