"""Verification-suite orchestration: runs every applicable identity check
on a concrete algebra and assembles a machine-readable report.

Checks gated on a hypothesis the algebra fails are reported as skipped with
the reason; uncertified dimension values yield 'undetermined', never a false
verdict. The report is sorted by check id regardless of execution order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import BasedAlgebra
from .errors import PreconditionError
from .gorenstein import (
    CheckItem, CheckReport, ClassificationReport, check_bounded_ggldim,
    check_gorenstein_inclusion, check_theorem_side_b, classify,
)
from .homology import DEFAULT_BOUND, DimValue, ext_dim, mueller_check
from .modules import hom_dim, regular_rep
from .subcats import (
    IndecList, check_bbos, check_cotorsion_pair, check_gproj_dom_identity,
    check_tk_identities, envelope_closure_check, indecomposables,
    is_n_minimal_ag, smalo_check, tau_criteria_check, torsion_pair,
)


@dataclass
class VerifyReport:
    algebra: BasedAlgebra
    n: int
    classification: ClassificationReport
    checks: list[CheckItem] = field(default_factory=list)

    @property
    def failed(self) -> list[CheckItem]:
        return [c for c in self.checks if c.verdict == "fail"]

    @property
    def exit_status(self) -> int:
        return 1 if self.failed else 0

    def sorted_checks(self) -> list[CheckItem]:
        return sorted(self.checks, key=lambda c: c.check_id)

    def text_lines(self) -> list[str]:
        lines = [f"algebra dim={self.algebra.dim} p={self.algebra.field.p} "
                 f"blocks={self.algebra.nblocks}",
                 self.classification.summary(), f"n={self.n}"]
        for c in self.sorted_checks():
            lines.append(f"check {c.check_id} {c.verdict.upper()} : {c.detail}")
        lines.append(f"result: {'FAIL' if self.failed else 'OK'} "
                     f"({len(self.checks)} checks, "
                     f"{len(self.failed)} failed)")
        return lines

    def machine_lines(self) -> list[str]:
        cl = self.classification
        lines = [
            f"dim={self.algebra.dim}",
            f"p={self.algebra.field.p}",
            f"blocks={self.algebra.nblocks}",
            f"n={self.n}",
            f"gldim={cl.gldim}",
            f"domdim={cl.domdim}",
            f"id={cl.left_id}",
            f"id_op={cl.right_id}",
            f"selfinjective={'yes' if cl.selfinjective else 'no'}",
            f"iwanaga_gorenstein={cl.iwanaga_gorenstein if cl.iwanaga_gorenstein is not None else 'none'}",
            f"n_auslander={cl.n_auslander if cl.n_auslander is not None else 'none'}",
            f"n_minimal_AG={cl.n_minimal_AG if cl.n_minimal_AG is not None else 'none'}",
        ]
        for c in self.sorted_checks():
            lines.append(f"check={c.check_id} verdict={c.verdict}")
        lines.append(f"exit={self.exit_status}")
        return lines


def _dominant_implies_inclusion(a: BasedAlgebra, n: int, indlist: IndecList,
                                report: ClassificationReport,
                                out: CheckReport):
    hyp = report.domdim.ge(n + 1)
    if hyp is None:
        out.add("lemma.dominant_implies_inclusion", None,
                "dominant dimension undetermined")
        return
    if not hyp:
        out.skip("lemma.dominant_implies_inclusion",
                 f"hypothesis domdim >= {n + 1} not satisfied "
                 f"(domdim = {report.domdim})")
        return
    reg = regular_rep(a)
    viol = []
    for x in indlist.items:
        if hom_dim(x, reg) == 0:
            if any(ext_dim(x, reg, i) != 0 for i in range(1, n + 1)):
                viol.append(x.name)
    out.add("lemma.dominant_implies_inclusion", not viol,
            "Hom(-, A) = 0 forces Ext^{1..n}(-, A) = 0 on the list"
            if not viol else "violations: " + ", ".join(viol))


def run_verify(a: BasedAlgebra, n: int | None = None, mode: str = "nakayama",
               dim_bound: int = 4,
               bound: int = DEFAULT_BOUND) -> VerifyReport:
    """Run the full identity suite against one algebra at parameter n
    (default: the classifier's minimal Auslander-Gorenstein parameter)."""
    report = classify(a, bound)
    if n is None:
        n = report.n_minimal_AG if report.n_minimal_AG is not None else 1
    out = CheckReport()

    ok, left, right = mueller_check(a, bound)
    out.add("mueller.domdim_symmetry", ok,
            f"domdim = {left} on the left, {right} on the right")

    li, ri = report.left_id, report.right_id
    if li.kind == "at_least" or ri.kind == "at_least":
        out.add("zaks.id_equality", None, "injective dimensions undetermined")
    elif li.is_finite != ri.is_finite:
        out.add("zaks.id_equality", False,
                f"one-sided finiteness: id = {li}, id_op = {ri}")
    elif li.is_finite:
        out.add("zaks.id_equality", li.value == ri.value,
                f"id = {li}, id_op = {ri}")
    else:
        out.skip("zaks.id_equality",
                 "not Iwanaga-Gorenstein (both injective dimensions infinite)")

    if report.n_minimal_AG is not None:
        out.add("classify.dichotomy", report.dichotomy_ok,
                "selfinjective or id = n+1 = domdim at the minimal parameter")
    else:
        out.skip("classify.dichotomy", "not minimal Auslander-Gorenstein")

    indlist = indecomposables(a, mode, dim_bound)

    _dominant_implies_inclusion(a, n, indlist, report, out)

    out.extend(check_theorem_side_b(a, n, indlist.items, report, bound))
    side_b_pass = all(
        i.verdict == "pass" for i in out.items
        if i.check_id.startswith("theorem_b."))
    ag = is_n_minimal_ag(report, n)
    out.add("theorem_b.matches_classifier", side_b_pass == ag,
            f"side (b) conditions {'hold' if side_b_pass else 'fail'}; "
            f"classifier {'certifies' if ag else 'rejects'} "
            f"id <= {n + 1} <= domdim")

    if report.iwanaga_gorenstein is not None:
        out.extend(check_bounded_ggldim(a, n, indlist.items, report, bound))
        out.extend(check_gorenstein_inclusion(a, report, indlist.items, bound))
    else:
        out.skip("lemma.bounded_ggldim", "no Iwanaga-Gorenstein certificate")
        out.skip("prop.gorenstein_inclusion",
                 "no Iwanaga-Gorenstein certificate")

    if ag:
        tp = torsion_pair(a, n, indlist, report, bound)
        out.extend(tp.report)
        out.extend(check_gproj_dom_identity(a, n, indlist, report, bound))
        for k in range(0, n + 2):
            out.extend(check_tk_identities(a, n, k, indlist, report, bound))
        for i in range(0, n + 2):
            out.extend(check_cotorsion_pair(a, i, n, indlist, report, bound))
        out.extend(smalo_check(a, n, indlist, report, bound))
        out.extend(tau_criteria_check(a, n, indlist, report, bound))
        out.extend(check_bbos(a, n, indlist, report, bound))
        out.extend(envelope_closure_check(a, n, n, indlist, report, bound))
    else:
        reason = (f"not {n}-minimal Auslander-Gorenstein "
                  f"(id={report.left_id}, domdim={report.domdim})")
        for cid in ("torsion.vanishing", "torsion.maximality",
                    "torsion.hereditary", "cotorsion.gproj_dom_identity",
                    "tk.identities", "cotorsion.pairs", "smalo.items",
                    "tau_criteria.items", "bbos.items",
                    "envelope_closure.items"):
            out.skip(cid, reason)

    return VerifyReport(a, n, report, out.items)
