"""Command-line driver: check structure files, apply constructions, generate
examples, run small searches.

Exit codes are a stable contract: 0 all laws pass, 1 a law or a mathematical
precondition failed, 2 the input itself was unusable.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
import time

from .errors import (
    BoundExceeded,
    DomainMismatch,
    InputError,
    LawViolation,
    MathFailure,
)
from .factories import (
    SWEEDLER_BASIS,
    function_algebra,
    group_algebra,
    linearize_endo,
    named_endo,
    sweedler_h4,
)
from .fields import Field
from .groups import group_by_name, idempotent_endos
from .linmap import LinMap, TensorShape, tensor
from .post_hopf import (
    check_post_hopf,
    check_twisted,
    class_condition,
    induced_hopf,
    post_hopf_from_truss,
    truss_from_post_hopf,
)
from .rota_baxter import (
    check_rota_baxter,
    check_twisted_operator,
    rb_class_condition,
    rota_baxter_from_truss,
    truss_from_idempotent,
    truss_from_rota_baxter,
    truss_from_twisted_operator,
)
from .storage import StructureFile, load, save
from .structures import (
    CheckReport,
    antipode_property_check,
    check_braided_object,
    check_hopf,
    is_coalgebra_morphism,
)
from .truss import check_truss, check_truss_derived, truss_class_condition

# ---------------------------------------------------------------------------
# the full check suite per kind
# ---------------------------------------------------------------------------


def structure_report(sf: StructureFile) -> CheckReport:
    """Every law the declared kind must satisfy, as one flat report.

    Refinement laws (unital cocycle / unital target) are included
    automatically when their shape-level precondition is present, so a file
    never silently under-claims.
    """
    s = sf.structure
    rep = CheckReport()
    if sf.kind == "hopf":
        gens = {"mu": s.mu, "delta": s.delta, "lambda": s.antipode}
        rep.merge(check_braided_object(s.obj, gens))
        rep.merge(check_hopf(s))
        rep.merge(antipode_property_check(s))
    elif sf.kind == "truss":
        gens = {"mu1": s.mu1, "mu2": s.mu2, "delta": s.delta,
                "lambda": s.antipode, "sigma": s.cocycle}
        rep.merge(check_braided_object(s.obj, gens))
        rep.merge(check_truss(s))
        rep.merge(check_truss_derived(s))
    elif sf.kind == "wtph":
        h = s.hopf
        gens = {"mu": h.mu, "delta": h.delta, "lambda": h.antipode,
                "m": s.action, "phi": s.cocycle}
        rep.merge(check_braided_object(s.obj, gens))
        rep.merge(check_post_hopf(s))
        if s.cocycle @ h.eta == h.eta:
            rep.merge(check_twisted(s))
    elif sf.kind == "wtrb":
        h = s.hopf
        gens = {"mu": h.mu, "delta": h.delta, "lambda": h.antipode,
                "psi": s.cocycle}
        rep.merge(check_braided_object(s.obj, gens))
        bgens = {"muB": s.target.mu, "deltaB": s.target.delta}
        rep.merge(check_braided_object(s.target.obj, bgens), prefix="target.")
        rep.merge(check_rota_baxter(s))
        if s.target.eta is not None:
            rep.merge(check_twisted_operator(s))
    else:
        raise DomainMismatch(f"no checker for kind {sf.kind!r}")
    return rep


def star_verdict(sf: StructureFile) -> bool:
    """The braided-cocommutativity class verdict for kinds that have one."""
    if sf.kind == "truss":
        return truss_class_condition(sf.structure)
    if sf.kind == "wtph":
        return class_condition(sf.structure)
    if sf.kind == "wtrb":
        return rb_class_condition(sf.structure)
    raise InputError("--star is not defined for plain Hopf files")


# ---------------------------------------------------------------------------
# report rendering
# ---------------------------------------------------------------------------


def _law_record(r) -> dict:
    if r.skipped:
        return {"law": r.law, "status": "skip", "reason": str(r.witness)}
    if r.passed:
        return {"law": r.law, "status": "pass"}
    rec = {"law": r.law, "status": "fail"}
    w = r.witness
    if isinstance(w, tuple) and len(w) == 4 and isinstance(w[0], int):
        rec["witness"] = {"row": w[0], "col": w[1],
                          "lhs": str(w[2]), "rhs": str(w[3])}
    else:
        rec["witness"] = repr(w)
    return rec


def _emit(sf: StructureFile, rep: CheckReport, star, mode: str,
          time_ms=None) -> None:
    obj = sf.structure.obj
    if mode == "machine":
        doc = {
            "kind": sf.kind,
            "field": obj.field.token(),
            "dim": obj.dim,
            "passed": rep.passed,
            "laws": [_law_record(r) for r in rep.results],
        }
        if star is not None:
            doc["star"] = star
        if time_ms is not None:
            doc["time_ms"] = round(time_ms, 3)
        print(json.dumps(doc, indent=2, sort_keys=True))
        return
    print(f"kind: {sf.kind}")
    print(f"field: {obj.field.token()}")
    print(f"dim: {obj.dim}")
    for line in rep.lines():
        print(line)
    if star is not None:
        print(f"star-condition: {'true' if star else 'false'}")
    if time_ms is not None:
        print(f"time: {time_ms:.1f} ms")
    bad = len(rep.failures())
    total = len(rep.results)
    print(f"result: {total} laws checked, "
          + ("all pass" if bad == 0 else f"{bad} FAIL"))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_check(args, timed: bool = False) -> int:
    sf = load(args.path)
    if args.kind != "auto" and args.kind != sf.kind:
        raise DomainMismatch(
            f"file declares kind {sf.kind!r}; cannot check it as {args.kind!r}")
    t0 = time.perf_counter()
    rep = structure_report(sf)
    star = star_verdict(sf) if args.star else None
    elapsed = (time.perf_counter() - t0) * 1000.0
    _emit(sf, rep, star, args.report, time_ms=elapsed if timed else None)
    return 0 if rep.passed else 1


def cmd_report(args) -> int:
    return cmd_check(args, timed=True)


_FUNCTOR_DOMAIN = {"F": "wtph", "G": "truss", "Omega": "wtrb",
                   "Lambda": "truss", "split": "wtph"}


def cmd_construct(args) -> int:
    sf = load(args.path)
    domain = _FUNCTOR_DOMAIN[args.functor]
    if sf.kind != domain:
        raise DomainMismatch(
            f"functor {args.functor} expects a {domain} file, got {sf.kind!r}")
    if args.functor == "F":
        out_kind, built = "truss", truss_from_post_hopf(sf.structure)
    elif args.functor == "G":
        out_kind, built = "wtph", post_hopf_from_truss(sf.structure)
    elif args.functor == "Omega":
        out_kind, built = "truss", truss_from_rota_baxter(sf.structure)
    elif args.functor == "Lambda":
        out_kind, built = "wtrb", rota_baxter_from_truss(sf.structure)
    else:  # split: the carrier changes, so the basis names no longer apply
        built, _ = induced_hopf(sf.structure)
        out_kind = "hopf"
    basis = None if args.functor == "split" else sf.basis
    out = StructureFile(kind=out_kind, structure=built, basis=basis,
                        metadata=dict(sf.metadata))
    _checked_save(out, args.output)
    print(f"wrote {out_kind} file: {args.output}")
    return 0


def _checked_save(sf: StructureFile, path: str) -> None:
    """No invalid artifact ever reaches disk."""
    rep = structure_report(sf)
    if not rep.passed:
        raise LawViolation(
            "constructed structure fails its own checks; nothing written",
            report=rep)
    save(sf, path)


def _require(args, names) -> None:
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            raise InputError(f"gen {args.kind} needs --{name}")


def cmd_gen(args) -> int:
    fld = Field.from_token(args.field)
    if args.kind == "sweedler":
        out = StructureFile("hopf", sweedler_h4(fld), basis=list(SWEEDLER_BASIS))
    else:
        _require(args, ["group"])
        g = group_by_name(args.group)
        basis = list(g.names)
        if args.kind == "group-algebra":
            out = StructureFile("hopf", group_algebra(g, fld), basis=basis)
        elif args.kind == "function-algebra":
            out = StructureFile("hopf", function_algebra(g, fld), basis=basis)
        elif args.kind == "truss-q":
            _require(args, ["endo"])
            h = group_algebra(g, fld)
            q = linearize_endo(g, named_endo(g, args.endo), fld)
            out = StructureFile("truss", truss_from_idempotent(h, q),
                                basis=basis)
        else:  # truss-upsilon
            _require(args, ["upsilon", "phi-endo"])
            h = group_algebra(g, fld)
            ups = linearize_endo(g, named_endo(g, args.upsilon), fld)
            phi = linearize_endo(g, named_endo(g, args.phi_endo), fld)
            out = StructureFile("truss",
                                truss_from_twisted_operator(h, phi, ups),
                                basis=basis)
    _checked_save(out, args.output)
    print(f"wrote {out.kind} file: {args.output}")
    return 0


# search bounds: only finite fields, tiny carriers, a hard candidate budget
_SEARCH_DIM = 2
_SEARCH_BUDGET = 200000


def cmd_search(args) -> int:
    if args.what == "idempotents":
        g = group_by_name(args.group)
        endos = idempotent_endos(g)
        print(f"group {args.group}: {len(endos)} idempotent endomorphisms")
        for images in endos:
            pretty = " ".join(g.names[i] for i in images)
            print(f"endo: {pretty}")
        return 0

    # rb-operators: enumerate coalgebra endomorphisms q with
    # mu.(q(x)q) = q.mu.(q(x)id) over a small prime field
    fld = Field.from_token(args.field)
    if not fld.is_prime_field:
        raise BoundExceeded("cannot enumerate over an infinite field")
    sf = load(args.file)
    if sf.kind != "hopf":
        raise DomainMismatch(f"operator search expects a hopf file, got {sf.kind!r}")
    h = sf.structure
    if h.obj.field != fld:
        raise InputError(
            f"file is over {h.obj.field.token()}, search field is {fld.token()}")
    n = h.obj.dim
    limit = min(args.max_dim, _SEARCH_DIM)
    if n > limit:
        raise BoundExceeded(f"carrier dimension {n} exceeds search bound {limit}")
    candidates = fld.char ** (n * n)
    if candidates > _SEARCH_BUDGET:
        raise BoundExceeded(
            f"{candidates} candidate matrices exceed the budget {_SEARCH_BUDGET}")
    coalg = h.as_coalgebra()
    i1 = h.obj.id(1)
    vshape = TensorShape((n,))
    found = []
    for flat in itertools.product(range(fld.char), repeat=n * n):
        rows = [list(flat[r * n:(r + 1) * n]) for r in range(n)]
        q = LinMap.from_entries(fld, vshape, vshape, rows)
        if not is_coalgebra_morphism(q, coalg, coalg):
            continue
        if h.mu @ tensor(q, q) != q @ h.mu @ tensor(q, i1):
            continue
        found.append(q)
    print(f"searched {candidates} matrices over {fld.token()} at dim {n}: "
          f"{len(found)} operators")
    for q in found:
        flatrow = " ".join(fld.format(v) for row in q.entries() for v in row)
        print(f"q: {flatrow}")
    return 0


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _add_check_args(p) -> None:
    p.add_argument("path", help="structure file to verify")
    p.add_argument("--kind", choices=["auto", "hopf", "truss", "wtph", "wtrb"],
                   default="auto", help="expected kind (default: trust the file)")
    p.add_argument("--star", action="store_true",
                   help="also report the braided-cocommutativity class verdict")
    p.add_argument("--report", choices=["text", "machine"], default="text",
                   help="text lines or a JSON document")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hopfkit",
        description="verify and construct finite-dimensional Hopf-type "
                    "structures given by exact structure constants")
    sub = p.add_subparsers(dest="command", required=True)

    _add_check_args(sub.add_parser(
        "check", help="run every law of the declared kind"))
    _add_check_args(sub.add_parser(
        "report", help="like check, plus wall-clock timing"))

    c = sub.add_parser("construct", help="apply a structure-to-structure map")
    c.add_argument("path", help="input structure file")
    c.add_argument("--functor", required=True,
                   choices=["F", "G", "Omega", "Lambda", "split"],
                   help="F: wtph->truss, G: truss->wtph, Omega: wtrb->truss, "
                        "Lambda: truss->wtrb, split: wtph->hopf on the "
                        "cocycle image")
    c.add_argument("-o", "--output", required=True)

    g = sub.add_parser("gen", help="generate a stock example file")
    g.add_argument("kind", choices=["group-algebra", "function-algebra",
                                    "sweedler", "truss-q", "truss-upsilon"])
    g.add_argument("--group", help="catalog name: C1..C8, S3, D4, Q8")
    g.add_argument("--field", default="Q", help="Q or GF:p (default Q)")
    g.add_argument("--endo", help="idempotent endomorphism name for truss-q")
    g.add_argument("--upsilon", help="operator endomorphism for truss-upsilon")
    g.add_argument("--phi-endo", dest="phi_endo",
                   help="twisting endomorphism for truss-upsilon")
    g.add_argument("-o", "--output", required=True)

    s = sub.add_parser("search", help="enumerate small structure inventories")
    ssub = s.add_subparsers(dest="what", required=True)
    si = ssub.add_parser("idempotents",
                         help="idempotent endomorphisms of a catalog group")
    si.add_argument("--group", required=True)
    sr = ssub.add_parser("rb-operators",
                         help="brute-force product-twisting operators on a "
                              "small hopf file over GF(p)")
    sr.add_argument("--file", required=True)
    sr.add_argument("--field", required=True, help="GF:p")
    sr.add_argument("--max-dim", dest="max_dim", type=int, default=2)
    return p


_DISPATCH = {
    "check": cmd_check,
    "report": cmd_report,
    "construct": cmd_construct,
    "gen": cmd_gen,
    "search": cmd_search,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except MathFailure as e:
        print(f"failed: {e}", file=sys.stderr)
        rep = getattr(e, "report", None)
        if rep is not None:
            for r in rep.failures():
                print(r.line(), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
