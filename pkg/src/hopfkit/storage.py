"""Text serialization of structures and atomic, canonical saving.

File layout (UTF-8, human-diffable)::

    format-version: 1
    kind: truss
    field: Q
    dim: 6
    braiding: flip
    basis: e 021 102 120 201 210
    meta source: gen truss-q --group S3

    map eta: 6x1
    1
    0
    ...

Headers first, then one ``map NAME: RxC`` section per structure map with R
rows of C exact scalars (rationals as ``a/b``, prime-field elements as
canonical integers).  Matrix sizes follow from the declared kind and
dimensions.  A structure with a non-flip braiding declares
``braiding: explicit`` and ships the matrix as a map section.  Saving is
canonical (same structure, same bytes) and atomic (temp file then rename).
"""
from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import ParseError, ShapeMismatch, UnknownKind
from .fields import Field, FieldError
from .linmap import LinMap, TensorShape, UNIT_SHAPE
from .post_hopf import PostHopfData
from .rota_baxter import RotaBaxterData
from .structures import (
    BraidedObject,
    HopfAlgebraData,
    NonUnitalBialgebraData,
)
from .truss import HopfTrussData

FORMAT_VERSION = 1

KINDS = ("hopf", "truss", "wtph", "wtrb")


@dataclass
class StructureFile:
    kind: str
    structure: object
    basis: Optional[List[str]] = None
    metadata: Optional[Dict[str, str]] = None

    def __post_init__(self):
        if self.metadata is None:
            self.metadata = {}


def _hopf_roles(n):
    v1, v2 = TensorShape((n,)), TensorShape((n, n))
    return [
        ("eta", UNIT_SHAPE, v1),
        ("mu", v2, v1),
        ("eps", v1, UNIT_SHAPE),
        ("delta", v1, v2),
        ("lambda", v1, v1),
    ]


def _roles(kind: str, n: int, k: Optional[int]) -> List[Tuple[str, TensorShape, TensorShape]]:
    """(name, dom, cod) for every required map of the kind, in file order."""
    v1, v2 = TensorShape((n,)), TensorShape((n, n))
    roles = _hopf_roles(n)
    if kind == "hopf":
        return roles
    if kind == "truss":
        return [
            ("eta", UNIT_SHAPE, v1), ("mu1", v2, v1), ("mu2", v2, v1),
            ("eps", v1, UNIT_SHAPE), ("delta", v1, v2),
            ("lambda", v1, v1), ("sigma", v1, v1),
        ]
    if kind == "wtph":
        return roles + [("m", v2, v1), ("phi", v1, v1)]
    if kind == "wtrb":
        w1, w2 = TensorShape((k,)), TensorShape((k, k))
        return roles + [
            ("muB", w2, w1), ("epsB", w1, UNIT_SHAPE), ("deltaB", w1, w2),
            ("phi", TensorShape((k, n)), v1), ("T", v1, w1), ("psi", v1, v1),
        ]
    raise UnknownKind(f"unknown structure kind {kind!r}")


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _parse_headers(lines):
    """Consume ``key: value`` lines until the first map section; returns
    (headers dict, metadata dict, next index)."""
    headers = {}
    meta = {}
    i = 0
    while i < len(lines):
        lineno, raw = lines[i]
        if raw.startswith("map "):
            break
        if ":" not in raw:
            raise ParseError(f"expected 'key: value', got {raw!r}", line=lineno)
        key, _, value = raw.partition(":")
        key = key.strip()
        value = value.strip()
        if key.startswith("meta "):
            meta[key[5:].strip()] = value
        elif key in headers:
            raise ParseError(f"duplicate header {key!r}", line=lineno)
        else:
            headers[key] = value
        i += 1
    return headers, meta, i


def _parse_int(headers, key, lineno=None):
    if key not in headers:
        raise ParseError(f"missing header {key!r}", line=lineno)
    try:
        return int(headers[key])
    except ValueError:
        raise ParseError(f"header {key!r} is not an integer") from None


def _read_map(lines, i, field):
    """Parse one ``map NAME: RxC`` section starting at index i."""
    lineno, raw = lines[i]
    head = raw[4:]
    if ":" not in head:
        raise ParseError("malformed map header", line=lineno)
    name, _, size = head.partition(":")
    name = name.strip()
    size = size.strip().lower()
    if "x" not in size:
        raise ParseError(f"map {name!r}: size must look like RxC", line=lineno)
    rtok, _, ctok = size.partition("x")
    try:
        nrows, ncols = int(rtok), int(ctok)
    except ValueError:
        raise ParseError(f"map {name!r}: bad size {size!r}", line=lineno) from None
    i += 1
    rows = []
    for r in range(nrows):
        if i >= len(lines):
            raise ParseError(f"map {name!r}: expected {nrows} rows, file ended",
                             line=lineno)
        rlineno, rraw = lines[i]
        toks = rraw.split()
        if len(toks) != ncols:
            raise ParseError(
                f"map {name!r} row {r}: expected {ncols} entries, got {len(toks)}",
                line=rlineno)
        try:
            rows.append([field.parse(t) for t in toks])
        except Exception as e:
            raise ParseError(f"map {name!r} row {r}: {e}", line=rlineno) from None
        i += 1
    return name, (nrows, ncols, rows), i


def loads(text: str) -> StructureFile:
    lines = [(no + 1, ln.strip()) for no, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty file", line=1)
    headers, meta, i = _parse_headers(lines)
    version = _parse_int(headers, "format-version", lines[0][0])
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format-version {version}")
    kind = headers.get("kind")
    if kind not in KINDS:
        raise UnknownKind(f"unknown structure kind {kind!r}")
    if "field" not in headers:
        raise ParseError("missing header 'field'")
    try:
        field = Field.from_token(headers["field"])
    except FieldError as e:
        raise ParseError(f"bad field token: {e}") from None
    n = _parse_int(headers, "dim")
    if n < 1:
        raise ParseError("dim must be positive")
    k = None
    if kind == "wtrb":
        k = _parse_int(headers, "dimB")
        if k < 1:
            raise ParseError("dimB must be positive")
    basis = headers.get("basis")
    if basis is not None:
        basis = basis.split()
        if len(basis) != n:
            raise ParseError(f"basis lists {len(basis)} names for dim {n}")

    raw_maps = {}
    while i < len(lines):
        name, payload, i = _read_map(lines, i, field)
        if name in raw_maps:
            raise ParseError(f"duplicate map {name!r}")
        raw_maps[name] = payload

    def take(name, dom, cod, required=True):
        if name not in raw_maps:
            if required:
                raise ParseError(f"missing map {name!r} for kind {kind!r}")
            return None
        nrows, ncols, rows = raw_maps.pop(name)
        if (nrows, ncols) != (cod.total, dom.total):
            raise ShapeMismatch(
                f"map {name!r}: declared {nrows}x{ncols}, "
                f"role needs {cod.total}x{dom.total}")
        return LinMap.from_entries(field, dom, cod, rows)

    def braid_for(header, mapname, dim):
        mode = headers.get(header, "flip")
        sq = TensorShape((dim, dim))
        if mode == "flip":
            if mapname in raw_maps:
                raise ParseError(f"{header} is flip but map {mapname!r} supplied")
            return None
        if mode == "explicit":
            got = take(mapname, sq, sq)
            if got is None:
                raise ParseError(f"{header} is explicit but map {mapname!r} missing")
            return got
        raise ParseError(f"{header} must be 'flip' or 'explicit', got {mode!r}")

    braid = braid_for("braiding", "braiding", n)
    obj = BraidedObject(field, n, braid=braid)
    maps = {name: take(name, dom, cod) for name, dom, cod in _roles(kind, n, k)}

    if kind == "hopf":
        structure = HopfAlgebraData(obj, maps["eta"], maps["mu"], maps["eps"],
                                    maps["delta"], maps["lambda"])
    elif kind == "truss":
        structure = HopfTrussData(obj, maps["eta"], maps["mu1"], maps["mu2"],
                                  maps["eps"], maps["delta"], maps["lambda"],
                                  maps["sigma"])
    elif kind == "wtph":
        hopf = HopfAlgebraData(obj, maps["eta"], maps["mu"], maps["eps"],
                               maps["delta"], maps["lambda"])
        structure = PostHopfData(hopf=hopf, action=maps["m"], cocycle=maps["phi"])
    else:
        hopf = HopfAlgebraData(obj, maps["eta"], maps["mu"], maps["eps"],
                               maps["delta"], maps["lambda"])
        bbraid = braid_for("braidingB", "braidingB", k)
        bobj = BraidedObject(field, k, braid=bbraid)
        etab = take("etaB", UNIT_SHAPE, TensorShape((k,)), required=False)
        target = NonUnitalBialgebraData(bobj, maps["muB"], maps["epsB"],
                                        maps["deltaB"], eta=etab)
        structure = RotaBaxterData(hopf=hopf, target=target, action=maps["phi"],
                                   operator=maps["T"], cocycle=maps["psi"])
    if raw_maps:
        stray = ", ".join(sorted(raw_maps))
        raise ParseError(f"unexpected map sections: {stray}")
    return StructureFile(kind=kind, structure=structure, basis=basis,
                         metadata=meta)


def load(path: str) -> StructureFile:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


# ---------------------------------------------------------------------------
# saving
# ---------------------------------------------------------------------------


def _collect(sf: StructureFile):
    """(field, dim, dimB, braid, braidB, ordered maps) of a structure."""
    s = sf.structure
    kind = sf.kind
    if kind == "hopf":
        obj = s.obj
        maps = {"eta": s.eta, "mu": s.mu, "eps": s.eps, "delta": s.delta,
                "lambda": s.antipode}
        return obj, None, maps
    if kind == "truss":
        maps = {"eta": s.eta, "mu1": s.mu1, "mu2": s.mu2, "eps": s.eps,
                "delta": s.delta, "lambda": s.antipode, "sigma": s.cocycle}
        return s.obj, None, maps
    if kind == "wtph":
        h = s.hopf
        maps = {"eta": h.eta, "mu": h.mu, "eps": h.eps, "delta": h.delta,
                "lambda": h.antipode, "m": s.action, "phi": s.cocycle}
        return h.obj, None, maps
    if kind == "wtrb":
        h = s.hopf
        b = s.target
        maps = {"eta": h.eta, "mu": h.mu, "eps": h.eps, "delta": h.delta,
                "lambda": h.antipode, "muB": b.mu, "epsB": b.eps,
                "deltaB": b.delta, "phi": s.action, "T": s.operator,
                "psi": s.cocycle}
        if b.eta is not None:
            maps["etaB"] = b.eta
        return h.obj, b.obj, maps
    raise UnknownKind(f"unknown structure kind {kind!r}")


def dumps(sf: StructureFile) -> str:
    obj, bobj, maps = _collect(sf)
    field = obj.field
    out = [f"format-version: {FORMAT_VERSION}",
           f"kind: {sf.kind}",
           f"field: {field.token()}",
           f"dim: {obj.dim}"]
    if bobj is not None:
        out.append(f"dimB: {bobj.dim}")
    out.append(f"braiding: {'flip' if obj.is_flip else 'explicit'}")
    if bobj is not None:
        out.append(f"braidingB: {'flip' if bobj.is_flip else 'explicit'}")
    if sf.basis is not None:
        out.append("basis: " + " ".join(sf.basis))
    for key in sorted(sf.metadata or {}):
        out.append(f"meta {key}: {sf.metadata[key]}")

    sections = []
    if not obj.is_flip:
        sections.append(("braiding", obj.braid))
    if bobj is not None and not bobj.is_flip:
        sections.append(("braidingB", bobj.braid))
    order = [name for name, _, _ in
             _roles(sf.kind, obj.dim, bobj.dim if bobj else None)]
    order.append("etaB")
    sections.extend((name, maps[name]) for name in order if name in maps)

    for name, m in sections:
        out.append("")
        out.append(f"map {name}: {m.cod.total}x{m.dom.total}")
        for row in m.entries():
            out.append(" ".join(field.format(v) for v in row))
    return "\n".join(out) + "\n"


def save(sf: StructureFile, path: str) -> None:
    """Canonical bytes, written atomically beside the destination."""
    data = dumps(sf)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".hopfkit-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
