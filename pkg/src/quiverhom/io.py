"""Line-oriented file formats for algebras and modules, and the cyclic
example generator.

Algebra grammar ('#' starts a comment):

    [field]
    p = 32003
    [quiver]
    vertices = 1 2 3
    arrow a1 : 1 -> 2
    [ideal]
    nilpotency = 3
    relation a2*a1
    relation 2*a3*a2 + a2*a1

Relation terms compose right-to-left: a2*a1 means traverse a1 then a2.
A file without an [ideal] section describes a hereditary path algebra with
nilpotency = longest path + 1 (acyclic quivers only).

Module grammar:

    [module]
    dim 1 = 1
    dim 2 = 0
    map a1 = [0 1 ; 1 0]

Matrix rows are separated by ';'; shape is (target dim) x (source dim).
Maps may be omitted only when an endpoint has dimension zero.
"""

from __future__ import annotations

import numpy as np

from .algebra import QuiverPresentation, Relation
from .errors import ParseError
from .linalg import DEFAULT_PRIME, GFp
from .modules import Representation, rep_from_arrow_matrices


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _longest_path_plus_one(vertices, arrows) -> int:
    """Longest arrow-path length + 1 in an acyclic quiver.

    Raises ParseError on a cycle (explicit nilpotency required)."""
    n = len(vertices)
    adj = [[] for _ in range(n)]
    for _, s, t in arrows:
        adj[s].append(t)
    longest = [None] * n
    state = [0] * n  # 0 unvisited, 1 in progress, 2 done

    def dfs(v: int) -> int:
        if state[v] == 1:
            raise ParseError(
                "cyclic quiver requires an explicit nilpotency")
        if state[v] == 2:
            return longest[v]
        state[v] = 1
        best = 0
        for w in adj[v]:
            best = max(best, 1 + dfs(w))
        state[v] = 2
        longest[v] = best
        return best

    return max((dfs(v) for v in range(n)), default=0) + 1


def parse_algebra_file(text: str):
    """Parse an algebra file into (QuiverPresentation, GFp)."""
    section = None
    p = DEFAULT_PRIME
    p_line = None
    vertices: list[str] = []
    arrows: list[tuple[str, int, int]] = []
    raw_relations: list[tuple[int, str]] = []
    nilpotency = None
    vid: dict[str, int] = {}
    aidx: dict[str, int] = {}
    saw_ideal = False

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in ("field", "quiver", "ideal"):
                raise ParseError(f"unknown section [{section}]", ln)
            if section == "ideal":
                saw_ideal = True
            continue
        if section is None:
            raise ParseError("content before any section header", ln)
        if section == "field":
            key, _, val = line.partition("=")
            if key.strip() != "p":
                raise ParseError(f"unknown key {key.strip()!r} in [field]", ln)
            try:
                p = int(val.strip())
            except ValueError:
                raise ParseError(f"bad prime {val.strip()!r}", ln) from None
            p_line = ln
        elif section == "quiver":
            if line.startswith("vertices"):
                _, _, val = line.partition("=")
                vertices = val.split()
                if not vertices:
                    raise ParseError("empty vertex list", ln)
                if len(set(vertices)) != len(vertices):
                    raise ParseError("duplicate vertex names", ln)
                vid = {v: i for i, v in enumerate(vertices)}
            elif line.startswith("arrow"):
                body = line[len("arrow"):].strip()
                name, _, rest = body.partition(":")
                name = name.strip()
                src, _, tgt = rest.partition("->")
                src, tgt = src.strip(), tgt.strip()
                if not name or not src or not tgt:
                    raise ParseError("malformed arrow declaration", ln)
                if src not in vid or tgt not in vid:
                    raise ParseError(
                        f"arrow {name} references an undeclared vertex", ln)
                if name in aidx:
                    raise ParseError(f"duplicate arrow name {name}", ln)
                aidx[name] = len(arrows)
                arrows.append((name, vid[src], vid[tgt]))
            else:
                key = line.split("=")[0].split()[0]
                raise ParseError(f"unknown key {key!r} in [quiver]", ln)
        elif section == "ideal":
            if line.startswith("nilpotency"):
                _, _, val = line.partition("=")
                try:
                    nilpotency = int(val.strip())
                except ValueError:
                    raise ParseError(
                        f"bad nilpotency {val.strip()!r}", ln) from None
            elif line.startswith("relation"):
                raw_relations.append((ln, line[len("relation"):].strip()))
            else:
                key = line.split("=")[0].split()[0]
                raise ParseError(f"unknown key {key!r} in [ideal]", ln)

    try:
        field = GFp(p)
    except ValueError as exc:
        raise ParseError(str(exc), p_line) from None
    if not vertices:
        raise ParseError("no vertices declared")

    relations = []
    for ln, body in raw_relations:
        terms = []
        for chunk in body.split("+"):
            tokens = [t.strip() for t in chunk.strip().split("*") if t.strip()]
            if not tokens:
                raise ParseError("empty relation term", ln)
            coeff = 1
            if tokens[0] not in aidx:
                try:
                    coeff = int(tokens[0])
                except ValueError:
                    raise ParseError(
                        f"undeclared arrow {tokens[0]!r}", ln) from None
                if coeff >= p or coeff < 0:
                    raise ParseError(
                        f"coefficient {coeff} not in [0, p)", ln)
                tokens = tokens[1:]
            for t in tokens:
                if t not in aidx:
                    raise ParseError(f"undeclared arrow {t!r}", ln)
            if len(tokens) < 2:
                raise ParseError(
                    "relation term of length < 2 (ideal not admissible)", ln)
            # right-to-left composition: reverse into traversal order
            path = tuple(aidx[t] for t in reversed(tokens))
            for k in range(len(path) - 1):
                if arrows[path[k]][2] != arrows[path[k + 1]][1]:
                    raise ParseError(
                        "relation term is not a composable path", ln)
            terms.append((coeff, path))
        ends = {(arrows[t[1][0]][1], arrows[t[1][-1]][2]) for t in terms}
        if len(ends) != 1:
            raise ParseError("relation terms have mismatched endpoints", ln)
        relations.append(Relation(tuple(terms)))

    if nilpotency is None:
        if saw_ideal and raw_relations:
            raise ParseError("an [ideal] with relations needs a nilpotency")
        nilpotency = _longest_path_plus_one(vertices, arrows)
        nilpotency = max(nilpotency, 2)
    try:
        pres = QuiverPresentation(tuple(vertices), tuple(arrows),
                                  tuple(relations), nilpotency)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return pres, field


def _parse_matrix(text: str, ln: int) -> list[list[int]]:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError("matrix must be bracketed [ ... ]", ln)
    body = body[1:-1].strip()
    if not body:
        return []
    rows = []
    for row in body.split(";"):
        entries = row.split()
        try:
            rows.append([int(e) for e in entries])
        except ValueError:
            raise ParseError(f"bad matrix entry in {row!r}", ln) from None
    if len({len(r) for r in rows}) > 1:
        raise ParseError("ragged matrix rows", ln)
    return rows


def parse_module_file(text: str, algebra) -> Representation:
    """Parse a module file over an already-built bound quiver algebra."""
    q = algebra.quiver
    if q is None:
        raise ParseError("algebra was not built from a quiver")
    vid = {v: i for i, v in enumerate(q.vertices)}
    anames = {name for name, _, _ in q.arrows}
    dims = [0] * len(q.vertices)
    mats: dict[str, list[list[int]]] = {}
    mat_lines: dict[str, int] = {}
    section = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section != "module":
                raise ParseError(f"unknown section [{section}]", ln)
            continue
        if section != "module":
            raise ParseError("content before [module]", ln)
        if line.startswith("dim"):
            body = line[len("dim"):].strip()
            v, _, val = body.partition("=")
            v = v.strip()
            if v not in vid:
                raise ParseError(f"undeclared vertex {v!r}", ln)
            try:
                d = int(val.strip())
            except ValueError:
                raise ParseError(f"bad dimension {val.strip()!r}", ln) from None
            if d < 0:
                raise ParseError("negative dimension", ln)
            dims[vid[v]] = d
        elif line.startswith("map"):
            body = line[len("map"):].strip()
            name, _, val = body.partition("=")
            name = name.strip()
            if name not in anames:
                raise ParseError(f"undeclared arrow {name!r}", ln)
            mats[name] = _parse_matrix(val, ln)
            mat_lines[name] = ln
        else:
            key = line.split("=")[0].split()[0]
            raise ParseError(f"unknown key {key!r} in [module]", ln)

    arrow_mats = {}
    for name, s, t in q.arrows:
        ds, dt = dims[s], dims[t]
        if name not in mats:
            if ds and dt:
                raise ParseError(
                    f"missing map for arrow {name} "
                    f"(both endpoints have positive dimension)")
            continue
        rows = mats[name]
        shape = (len(rows), len(rows[0]) if rows else 0)
        if shape != (dt, ds):
            if ds == 0 or dt == 0:
                continue  # degenerate maps may be written []
            raise ParseError(
                f"map for arrow {name} has shape {shape}, expected "
                f"({dt}, {ds})", mat_lines[name])
        arrow_mats[name] = np.array(rows, dtype=np.int64).reshape(dt, ds)
    try:
        return rep_from_arrow_matrices(algebra, dims, arrow_mats, check=True)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def gen_cyclic_example(n: int) -> str:
    """Algebra file text for the cyclic Nakayama family: n+1 vertices,
    arrows a_i : i -> i+1 (mod n+1), relations a_{i+1}*a_i for 1 <= i <= n,
    nilpotency 3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    nv = n + 1
    lines = [f"# cyclic Nakayama algebra, n = {n}", "[field]",
             f"p = {DEFAULT_PRIME}", "[quiver]",
             "vertices = " + " ".join(str(i + 1) for i in range(nv))]
    for i in range(nv):
        lines.append(f"arrow a{i + 1} : {i + 1} -> {(i + 1) % nv + 1}")
    lines.append("[ideal]")
    lines.append("nilpotency = 3")
    for i in range(1, n + 1):
        lines.append(f"relation a{i + 1}*a{i}")
    return "\n".join(lines) + "\n"
