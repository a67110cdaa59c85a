"""Iwanaga-Gorenstein detection, Gorenstein projective dimension, and the
higher Auslander(-Gorenstein) classifiers with their condition bundles.

Two Gpd routes exist: the fast route (max i with Ext^i(m, A) != 0, valid
under a verified Iwanaga-Gorenstein certificate and gated on one) and a
general route usable on any algebra: Gpd(m) <= k iff the k-th syzygy is
totally reflexive, i.e. Ext^{>0}(X, A) = 0 and Ext^{>0}(Tr X, A^op) = 0,
with the infinite Ext families certified on the finite syzygy orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import BasedAlgebra
from .errors import PreconditionError
from .homology import (
    DEFAULT_BOUND, DimValue, _syzygy_chain, dominant_dim_algebra, ext_dim,
    global_dim, in_sub_j, injdim, is_injective, is_projective, pd, transpose,
)
from .modules import (
    Representation, decompose, direct_sum, dual, hom_basis, hom_dim,
    injective, is_isomorphic, projective, regular_rep, simple,
)


@dataclass
class ClassificationReport:
    algebra: BasedAlgebra
    left_id: DimValue
    right_id: DimValue
    domdim: DimValue
    gldim: DimValue
    selfinjective: bool
    iwanaga_gorenstein: int | None
    n_minimal_AG: int | None
    n_auslander: int | None
    dichotomy_ok: bool
    zaks_ok: bool
    undetermined: bool

    def summary(self) -> str:
        parts = [f"gldim={self.gldim}", f"domdim={self.domdim}",
                 f"id={self.left_id}"]
        parts.append(f"n_auslander={self.n_auslander}"
                     if self.n_auslander is not None else "n_auslander=none")
        parts.append(f"n_minimal_AG={self.n_minimal_AG}"
                     if self.n_minimal_AG is not None else "n_minimal_AG=none")
        if self.selfinjective:
            parts.append("selfinjective=yes")
        return " ".join(parts)


@dataclass
class CheckItem:
    check_id: str
    verdict: str  # pass | fail | skipped | undetermined
    detail: str = ""


@dataclass
class CheckReport:
    items: list[CheckItem] = field(default_factory=list)

    def add(self, check_id: str, ok, detail: str = ""):
        if ok is None:
            verdict = "undetermined"
        else:
            verdict = "pass" if ok else "fail"
        self.items.append(CheckItem(check_id, verdict, detail))

    def skip(self, check_id: str, reason: str):
        self.items.append(CheckItem(check_id, "skipped", reason))

    @property
    def passed(self) -> bool:
        return all(i.verdict != "fail" for i in self.items)

    def extend(self, other: "CheckReport"):
        self.items.extend(other.items)


def _least_n(dim_low: DimValue, domdim: DimValue) -> int | None:
    """Least n >= 1 with dim_low <= n+1 <= domdim, or None."""
    if not dim_low.is_finite:
        return None
    need = max(dim_low.value, 2)
    ok = domdim.ge(need)
    if ok is None:
        return None
    return need - 1 if ok else None


def classify(a: BasedAlgebra, bound: int = DEFAULT_BOUND) -> ClassificationReport:
    """All homological classifier fields, on the algebra and its opposite.

    Uncertified (at_least) dimensions propagate to None fields and the
    `undetermined` flag, never to false certificates.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    left_id = injdim(regular_rep(a), bound)
    right_id = injdim(regular_rep(a.opposite()), bound)
    dom = dominant_dim_algebra(a, bound)
    gld = global_dim(a, bound)
    selfinj = left_id == DimValue.finite(0)
    zaks_ok = True
    ig = None
    if left_id.is_finite and right_id.is_finite:
        zaks_ok = left_id.value == right_id.value
        if zaks_ok:
            ig = left_id.value
    undetermined = any(v.kind == "at_least"
                       for v in (left_id, right_id, dom, gld))
    if selfinj:
        n_ag = 1
    else:
        n_ag = _least_n(left_id, dom)
    n_aus = _least_n(gld, dom)
    dichotomy_ok = True
    if n_ag is not None and not selfinj:
        dichotomy_ok = (left_id == DimValue.finite(n_ag + 1)
                        and dom == DimValue.finite(n_ag + 1))
    return ClassificationReport(
        algebra=a, left_id=left_id, right_id=right_id, domdim=dom,
        gldim=gld, selfinjective=selfinj, iwanaga_gorenstein=ig,
        n_minimal_AG=n_ag, n_auslander=n_aus, dichotomy_ok=dichotomy_ok,
        zaks_ok=zaks_ok, undetermined=undetermined)


# -- Gorenstein projective dimension -----------------------------------------


def _ext_regular_vanishes_all(m: Representation, bound: int) -> bool | None:
    """Ext^i(m, A) = 0 for all i >= 1, certified on the syzygy orbit.

    Ext^{k+1}(m, A) = Ext^1(Omega^k m, A); the conditions repeat once the
    orbit of syzygies repeats. None when the bound is hit uncertified."""
    reg = regular_rep(m.algebra)
    seen: list[Representation] = []
    for k in range(bound + 1):
        omega = _syzygy_chain(m, k)[k]
        if omega.total == 0:
            return True
        if ext_dim(omega, reg, 1) != 0:
            return False
        if any(o.dims == omega.dims and is_isomorphic(o, omega)
               for o in seen):
            return True
        seen.append(omega)
    return None


def is_gorenstein_projective(m: Representation,
                             bound: int = DEFAULT_BOUND) -> bool | None:
    """Totally reflexive test: Ext^{>0}(m, A) = 0 and
    Ext^{>0}(Tr m, A^op) = 0."""
    if m.total == 0:
        return True
    if "is_gproj" in m._cache:
        return m._cache["is_gproj"]
    first = _ext_regular_vanishes_all(m, bound)
    if first is None:
        return None
    if not first:
        m._cache["is_gproj"] = False
        return False
    second = _ext_regular_vanishes_all(transpose(m), bound)
    if second is None:
        return None
    m._cache["is_gproj"] = second
    return second


def gproj_dim_general(m: Representation,
                      bound: int = DEFAULT_BOUND) -> DimValue:
    """Gpd(m) on any algebra: least k with Omega^k(m) totally reflexive;
    infinite when the syzygy orbit closes without one."""
    if m.total == 0:
        return DimValue.finite(0)
    cached = m._cache.get("gpd")
    if cached is not None:
        return cached
    seen: list[Representation] = []
    result = DimValue.at_least(bound)
    for k in range(bound + 1):
        omega = _syzygy_chain(m, k)[k]
        verdict = is_gorenstein_projective(omega, bound)
        if verdict is None:
            return DimValue.at_least(bound)
        if verdict:
            result = DimValue.finite(k)
            break
        if any(o.dims == omega.dims and is_isomorphic(o, omega)
               for o in seen):
            result = DimValue.infinite()
            break
        seen.append(omega)
    if result.is_certain:
        m._cache["gpd"] = result
    return result


def gproj_dim(m: Representation, report: ClassificationReport) -> DimValue:
    """Gpd under a verified Iwanaga-Gorenstein certificate:
    max{i in [1..g] : Ext^i(m, A) != 0}, else 0."""
    if report.iwanaga_gorenstein is None:
        raise PreconditionError(
            "gproj_dim requires an Iwanaga-Gorenstein certificate; "
            "use gproj_dim_general on other algebras")
    if report.algebra is not m.algebra:
        raise PreconditionError("certificate is for a different algebra")
    g = report.iwanaga_gorenstein
    reg = regular_rep(m.algebra)
    val = 0
    for i in range(1, g + 1):
        if ext_dim(m, reg, i) != 0:
            val = i
    return DimValue.finite(val)


def in_gproj_leq(m: Representation, k: int,
                 report: ClassificationReport) -> bool:
    return gproj_dim(m, report).le(k) is True


# -- theorem condition bundles ------------------------------------------------


def max_injective_projective_summand(a: BasedAlgebra) -> Representation:
    """Q = maximal injective summand of the regular module (one copy of each
    projective-injective P(i))."""
    if "max_pi_summand" in a._cache:
        return a._cache["max_pi_summand"]
    comps = [projective(a, i) for i in range(a.nblocks)
             if is_injective(projective(a, i))]
    if not comps:
        from .modules import zero_rep
        q = zero_rep(a)
        q.name = "Q"
    elif len(comps) == 1:
        q = comps[0]  # keep its canonical P(i) name
    else:
        q = direct_sum(comps, name="Q")[0]
    a._cache["max_pi_summand"] = q
    return q


def _gpd_leq(x: Representation, k: int, report: ClassificationReport | None,
             bound: int) -> bool | None:
    if report is not None and report.iwanaga_gorenstein is not None \
            and report.algebra is x.algebra:
        return gproj_dim(x, report).le(k)
    return gproj_dim_general(x, bound).le(k)


def check_theorem_side_b(a: BasedAlgebra, n: int,
                         indecs: list[Representation],
                         report: ClassificationReport | None = None,
                         bound: int = DEFAULT_BOUND) -> CheckReport:
    """The three machine conditions of the characterization's side (b):

    (i)  abelianness surrogate: {Gpd <= n-1} equals the class with a length-2
         copresentation by the maximal projective-injective summand Q, and is
         closed under kernels of hom-basis maps;
    (ii) every indecomposable that is injective with pd <= n is projective;
    (iii) every indecomposable with Hom(-, A) = 0 has Ext^{1..n}(-, A) = 0.
    """
    rep = CheckReport()
    reg = regular_rep(a)
    q = max_injective_projective_summand(a)

    gset = [x for x in indecs if _gpd_leq(x, n - 1, report, bound) is True]
    gset_undet = [x for x in indecs
                  if _gpd_leq(x, n - 1, report, bound) is None]
    sub2 = [x for x in indecs if in_sub_j(x, q, 2)]
    if gset_undet:
        rep.add("theorem_b.abelian_surrogate", None,
                "Gorenstein projective dimension undetermined for "
                + ", ".join(x.name for x in gset_undet))
    else:
        same = {id(x) for x in gset} == {id(x) for x in sub2}
        kernel_closed = True
        witness = ""
        for x in gset:
            for y in gset:
                for f in hom_basis(x, y):
                    ker, _ = f.kernel()
                    ok = _gpd_leq(ker, n - 1, report, bound)
                    if ok is not True:
                        kernel_closed = False
                        witness = f"ker of a map {x.name} -> {y.name}"
                        break
                if not kernel_closed:
                    break
            if not kernel_closed:
                break
        detail = (f"bounded-Gpd class {{{', '.join(x.name for x in gset)}}} "
                  f"vs sub^2(Q) {{{', '.join(x.name for x in sub2)}}}")
        if not kernel_closed:
            detail += f"; kernel closure fails at {witness}"
        rep.add("theorem_b.abelian_surrogate", same and kernel_closed, detail)

    bad = [x for x in indecs
           if is_injective(x) and pd(x, bound).le(n) is True
           and not is_projective(x)]
    rep.add("theorem_b.proj_inj_inclusion", not bad,
            "violations: " + ", ".join(x.name for x in bad) if bad
            else f"proj^<={n} ∩ inj ⊆ proj over {len(indecs)} indecomposables")

    viol = []
    for x in indecs:
        if hom_dim(x, reg) == 0:
            if any(ext_dim(x, reg, i) != 0 for i in range(1, n + 1)):
                viol.append(x)
    rep.add("theorem_b.perp_inclusion", not viol,
            "violations: " + ", ".join(x.name for x in viol) if viol
            else "Hom(-,A)=0 implies Ext^{1..n}(-,A)=0 on the list")
    return rep


def check_bounded_ggldim(a: BasedAlgebra, n: int,
                         indecs: list[Representation],
                         report: ClassificationReport,
                         bound: int = DEFAULT_BOUND) -> CheckReport:
    """Equivalence instances: Ggldim <= n+1  <=>  {Gpd <= n} closed under
    submodules  <=>  {Gpd <= n-1} closed under kernels."""
    if report.iwanaga_gorenstein is None:
        raise PreconditionError(
            "bounded-Ggldim check requires an Iwanaga-Gorenstein certificate")
    rep = CheckReport()
    g = report.iwanaga_gorenstein
    side_a = g <= n + 1  # Ggldim = id for Iwanaga-Gorenstein algebras

    def closed_under(k: int, candidates) -> bool:
        for cand in candidates:
            if _gpd_leq(cand, k, report, bound) is not True:
                return False
        return True

    set_n = [x for x in indecs if _gpd_leq(x, n, report, bound) is True]
    subs = []
    for y in set_n:
        for z in indecs:
            for f in hom_basis(y, z):
                if f.is_epi:
                    subs.append(f.kernel()[0])
            for f in hom_basis(z, y):
                subs.append(f.image()[0])
    side_b1 = closed_under(n, subs)

    detail = (f"Ggldim<=n+1: {side_a}; "
              f"submodule closure of Gproj<={n}: {side_b1}")
    agree = side_a == side_b1
    if n >= 1:  # the kernel-closure leg degenerates below n = 1
        set_n1 = [x for x in indecs
                  if _gpd_leq(x, n - 1, report, bound) is True]
        kers = [f.kernel()[0] for x in set_n1 for y in set_n1
                for f in hom_basis(x, y)]
        side_b2 = closed_under(n - 1, kers)
        agree = agree and side_a == side_b2
        detail += f"; kernel closure of Gproj<={n - 1}: {side_b2}"
    rep.add("lemma.bounded_ggldim", agree, detail)
    return rep


def check_gorenstein_inclusion(a: BasedAlgebra,
                               report: ClassificationReport,
                               indecs: list[Representation],
                               bound: int = DEFAULT_BOUND) -> CheckReport:
    """proj^{<=n} ∩ inj lies in add of the first n+1 minimal injective
    resolution terms of the regular module, where n+1 = injective dimension."""
    if report.iwanaga_gorenstein is None:
        raise PreconditionError(
            "Gorenstein-inclusion check requires an IG certificate")
    rep = CheckReport()
    g = report.iwanaga_gorenstein
    n = max(g - 1, 0)
    from .homology import min_resolution
    res = min_resolution(regular_rep(a), "injective", n)
    term_factors: list[Representation] = []
    for t in res.terms[: n + 1]:
        for x, _ in decompose(t):
            if not any(is_isomorphic(x, y) for y in term_factors):
                term_factors.append(x)
    bad = []
    cls = []
    for x in indecs:
        if is_injective(x) and pd(x, bound).le(n) is True:
            cls.append(x)
            if not any(is_isomorphic(x, y) for y in term_factors):
                bad.append(x)
    rep.add("prop.gorenstein_inclusion", not bad,
            f"class {{{', '.join(x.name for x in cls)}}} inside "
            f"add(I^0..I^{n})" if not bad else
            "violations: " + ", ".join(x.name for x in bad))
    return rep
