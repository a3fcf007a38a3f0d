"""JSON problem descriptions: parsing, validation and a lossless echo.

Every failure raises :class:`~orelab.errors.ParseError` whose ``where``
names the offending field (``algebra.unit[1]``) or the line and column of
malformed JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coeffring import AddMap, Algebra
from .errors import OrelabError, ParseError
from .monoid import FiniteMonoid, FreeCommutativeMonoid
from .pistructure import DeltaFamily, DeltaPi, ExplicitPi, PiStructure
from .scalars import base_from_tag

DEFAULT_CAPS = {
    "weight_cap": 4,
    "orbit_bound": 64,
    "brute_force_cap": 2 ** 20,
    "witness_cap": 8,
}


@dataclass
class ProblemConfig:
    algebra: Algebra
    monoid: object
    pi: PiStructure
    caps: dict

    def to_json(self) -> dict:
        return {
            "algebra": algebra_to_json(self.algebra),
            "monoid": self.monoid.to_json(),
            "pi": pi_to_json(self.pi),
            "analysis": dict(self.caps),
        }

    def ring(self):
        from .orering import OreRing

        return OreRing(self.algebra, self.monoid, self.pi, self.caps["weight_cap"])


def _fail(where, msg):
    raise ParseError(f"{where}: {msg}", where=where)


def _get(d, key, where):
    if not isinstance(d, dict):
        _fail(where, "expected an object")
    if key not in d:
        _fail(f"{where}.{key}" if where else key, "missing")
    return d[key]


def _int(x, where, lo=None):
    if isinstance(x, bool) or not isinstance(x, int):
        _fail(where, f"expected an integer, got {x!r}")
    if lo is not None and x < lo:
        _fail(where, f"must be >= {lo}")
    return x


def _scalar(base, x, where):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        _fail(where, f"expected a scalar string, got {x!r}")
    try:
        return base.parse(str(x))
    except OrelabError as exc:
        _fail(where, str(exc))


def _flatten(x):
    if isinstance(x, list):
        return [y for z in x for y in _flatten(z)]
    return [x]


def _matrix(base, m, dim, where) -> AddMap:
    if not isinstance(m, list) or len(m) != dim or any(not isinstance(r, list) or len(r) != dim for r in m):
        _fail(where, f"expected a {dim}x{dim} matrix")
    return AddMap(base, [[_scalar(base, x, f"{where}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(m)])


def parse_algebra(d) -> Algebra:
    where = "algebra"
    tag = _get(d, "base", where)
    if not isinstance(tag, str):
        _fail("algebra.base", "expected a tag string")
    try:
        base = base_from_tag(tag)
    except OrelabError as exc:
        _fail("algebra.base", str(exc))
    dim = _int(_get(d, "dim", where), "algebra.dim", 1)
    raw = _get(d, "structure_constants", where)
    if not isinstance(raw, list):
        _fail("algebra.structure_constants", "expected an array")
    flat = _flatten(raw)
    if len(flat) != dim ** 3:
        _fail("algebra.structure_constants", f"expected {dim ** 3} entries, got {len(flat)}")
    vals = [_scalar(base, x, f"algebra.structure_constants[{n}]") for n, x in enumerate(flat)]
    sc = [[vals[(i * dim + j) * dim: (i * dim + j + 1) * dim] for j in range(dim)] for i in range(dim)]
    unit = _get(d, "unit", where)
    if not isinstance(unit, list) or len(unit) != dim:
        _fail("algebra.unit", f"expected {dim} scalars")
    unit = [_scalar(base, x, f"algebra.unit[{n}]") for n, x in enumerate(unit)]
    names = d.get("basis_names")
    if names is not None and (
        not isinstance(names, list) or len(names) != dim or not all(isinstance(n, str) and n for n in names)
    ):
        _fail("algebra.basis_names", f"expected {dim} nonempty strings")
    if names is not None and len(set(names)) != dim:
        _fail("algebra.basis_names", "names must be distinct")
    try:
        return Algebra(base, dim, sc, unit, names)
    except OrelabError as exc:
        _fail("algebra", str(exc))


def parse_monoid(d):
    if isinstance(d, dict) and "free_commutative" in d:
        return FreeCommutativeMonoid(_int(d["free_commutative"], "monoid.free_commutative", 0))
    size = _int(_get(d, "size", "monoid"), "monoid.size", 1)
    ident = _int(_get(d, "identity", "monoid"), "monoid.identity", 0)
    cay = _get(d, "cayley", "monoid")
    if not isinstance(cay, list) or len(cay) != size or any(not isinstance(r, list) or len(r) != size for r in cay):
        _fail("monoid.cayley", f"expected a {size}x{size} table")
    for i, r in enumerate(cay):
        for j, x in enumerate(r):
            _int(x, f"monoid.cayley[{i}][{j}]")
    order = d.get("order", list(range(size)))
    if not isinstance(order, list):
        _fail("monoid.order", "expected an array")
    for i, x in enumerate(order):
        _int(x, f"monoid.order[{i}]")
    names = d.get("names")
    try:
        m = FiniteMonoid(size, ident, cay, order, names)
    except OrelabError as exc:
        _fail("monoid", str(exc))
    rep = m.validate()
    if not rep.valid and any(v[0] != "commutativity" for v in rep.violations):
        _fail("monoid", "invalid monoid: " + "; ".join(" ".join(map(str, v)) for v in rep.violations))
    return m


def parse_pi(d, algebra: Algebra, monoid) -> PiStructure:
    base, dim = algebra.base, algebra.dim
    if not isinstance(d, dict):
        _fail("pi", "expected an object")
    if "table" in d:
        rows = d["table"]
        if not isinstance(rows, list):
            _fail("pi.table", "expected an array")
        entries = {}
        for n, e in enumerate(rows):
            w = f"pi.table[{n}]"
            try:
                a = monoid.parse(_get(e, "a", w))
                b = monoid.parse(_get(e, "b", w))
            except ParseError as exc:
                if exc.where:
                    raise
                _fail(w, str(exc))
            if (a, b) in entries:
                _fail(w, "duplicate entry")
            entries[(a, b)] = _matrix(base, _get(e, "matrix", w), dim, f"{w}.matrix")
        return ExplicitPi(algebra, monoid, entries)
    if "delta_generated" in d:
        g = d["delta_generated"]
        ds = _get(g, "deltas", "pi.delta_generated")
        if not isinstance(ds, list):
            _fail("pi.delta_generated.deltas", "expected an array")
        if not isinstance(monoid, FreeCommutativeMonoid) or monoid.k != len(ds):
            _fail("monoid", f"a Delta-generated pi needs free_commutative = {len(ds)}")
        maps = [_matrix(base, m, dim, f"pi.delta_generated.deltas[{i}]") for i, m in enumerate(ds)]
        try:
            return DeltaPi(DeltaFamily(algebra, maps))
        except (OrelabError, ValueError) as exc:
            _fail("pi.delta_generated.deltas", str(exc))
    _fail("pi", "expected 'table' or 'delta_generated'")


def parse_caps(d) -> dict:
    caps = dict(DEFAULT_CAPS)
    if d is None:
        return caps
    if not isinstance(d, dict):
        _fail("analysis", "expected an object")
    for k, v in d.items():
        if k not in DEFAULT_CAPS:
            _fail(f"analysis.{k}", "unknown key")
        caps[k] = _int(v, f"analysis.{k}", 0)
    return caps


def parse_config(d) -> ProblemConfig:
    if not isinstance(d, dict):
        _fail("", "top level must be an object")
    for k in d:
        if k not in ("algebra", "monoid", "pi", "analysis", "description"):
            _fail(k, "unknown section")
    alg = parse_algebra(_get(d, "algebra", ""))
    mon = parse_monoid(_get(d, "monoid", ""))
    pi = parse_pi(_get(d, "pi", ""), alg, mon)
    return ProblemConfig(alg, mon, pi, parse_caps(d.get("analysis")))


def loads(text: str) -> ProblemConfig:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}", where=f"line {exc.lineno}:{exc.colno}") from None
    return parse_config(d)


def load(path) -> ProblemConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", where=str(path)) from None
    return loads(text)


def algebra_to_json(alg: Algebra) -> dict:
    fmt = alg.base.fmt
    d = {
        "base": alg.base.tag,
        "dim": alg.dim,
        "structure_constants": [fmt(c) for row in alg.sc for cell in row for c in cell],
        "unit": [fmt(c) for c in alg.unit],
    }
    if alg.basis_names:
        d["basis_names"] = list(alg.basis_names)
    return d


def matrix_to_json(m: AddMap) -> list:
    return [[m.base.fmt(x) for x in r] for r in m.rows]


def pi_to_json(pi: PiStructure) -> dict:
    if isinstance(pi, DeltaPi):
        return {"delta_generated": {"deltas": [matrix_to_json(d) for d in pi.family.deltas]}}
    mon = pi.monoid
    keyed = sorted(pi.entries.items(), key=lambda kv: (mon.sort_key(kv[0][0]), mon.sort_key(kv[0][1])))
    return {"table": [{"a": mon.fmt(a), "b": mon.fmt(b), "matrix": matrix_to_json(m)} for (a, b), m in keyed]}
