"""Equivalence test driver: random sources, forward certificates, iff checks.

For each generated source instance the driver solves the source by brute
force; on a yes it compiles the reduction, builds the proof's forward
certificate and checks it against the alliance predicate within the budget.
Only the daf kind has desk-scale targets, so only there the target itself is
brute-forced and the full iff is asserted; everywhere else a no-instance is
reported as skipped (the reverse direction of those reductions lives in the
extraction maps, exercised by the test suite, not here).
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import asdict, dataclass

from .alliances import brute_force_min_da, is_daf_feasible, is_defensive_alliance
from .circle import ds_forward_certificate, ds_to_daf, solve_ds_bruteforce, write_ds_instance
from .errors import BadParams
from .generators import gen_daf, gen_ds_circle, gen_mrss, gen_rbds, gen_vc
from .reductions import (
    daf_to_da,
    mrss_forward_certificate,
    mrss_to_da,
    rbds_forward_certificate,
    rbds_to_da,
    solve_mrss_bruteforce,
    solve_rbds_bruteforce,
    solve_vc_bruteforce,
    vc_forward_certificate,
    vc_to_da,
    write_daf,
    write_mrss,
    write_rbds,
    write_vc,
)

DEFAULT_SEED = 20250810
KINDS = ("mrss", "rbds", "vc", "ds-circle", "daf")
DEFAULT_COUNTS = {"mrss": 25, "rbds": 100, "vc": 100, "ds-circle": 50, "daf": 200}
DEFAULT_MAX_N = {"mrss": 3, "rbds": 4, "vc": 8, "ds-circle": 3, "daf": 6}

_TARGET_BRUTE_LIMIT = 20


@dataclass(frozen=True)
class EquivReport:
    case: int
    kind: str
    digest: str
    source_answer: bool
    certificate_valid: bool | None
    budget: int | None
    target_answer: bool | None
    verdict: str  # forward-ok | forward-fail | iff-ok | iff-fail | skipped-too-large

    def text(self) -> str:
        cert = "-" if self.certificate_valid is None else ("ok" if self.certificate_valid else "BAD")
        tgt = "-" if self.target_answer is None else ("yes" if self.target_answer else "no")
        return (
            f"case={self.case:04d} kind={self.kind} digest={self.digest} "
            f"source={'yes' if self.source_answer else 'no'} cert={cert} "
            f"budget={self.budget if self.budget is not None else '-'} "
            f"target={tgt} verdict={self.verdict}"
        )


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def _forward_case(case: int, kind: str, digest: str, yes: bool, valid: bool | None, budget: int | None) -> EquivReport:
    if not yes:
        return EquivReport(case, kind, digest, False, None, budget, None, "skipped-too-large")
    verdict = "forward-ok" if valid else "forward-fail"
    return EquivReport(case, kind, digest, True, valid, budget, None, verdict)


def run_equiv_case(kind: str, case: int, rng: random.Random, max_n: int) -> EquivReport:
    if kind == "mrss":
        inst = gen_mrss(rng, max_vectors=max_n)
        digest = _digest(write_mrss(inst))
        sol = solve_mrss_bruteforce(inst)
        if sol is None:
            return _forward_case(case, kind, digest, False, None, None)
        da, gm = mrss_to_da(inst)
        cert = mrss_forward_certificate(gm, sol)
        valid = len(cert) <= da.k and is_defensive_alliance(da.graph, cert)
        return _forward_case(case, kind, digest, True, valid, da.k)

    if kind == "rbds":
        inst = gen_rbds(rng, max_terminals=max_n, max_sources=max_n)
        digest = _digest(write_rbds(inst))
        sol = solve_rbds_bruteforce(inst)
        if sol is None:
            return _forward_case(case, kind, digest, False, None, None)
        da, gm = rbds_to_da(inst)
        cert = rbds_forward_certificate(gm, sol)
        valid = len(cert) <= da.k and is_defensive_alliance(da.graph, cert)
        return _forward_case(case, kind, digest, True, valid, da.k)

    if kind == "vc":
        inst = gen_vc(rng, max_n=max_n)
        digest = _digest(write_vc(inst))
        sol = solve_vc_bruteforce(inst)
        if sol is None:
            return _forward_case(case, kind, digest, False, None, None)
        da, gm = vc_to_da(inst)
        cert = vc_forward_certificate(gm, sol)
        valid = len(cert) <= da.k and is_defensive_alliance(da.graph, cert)
        return _forward_case(case, kind, digest, True, valid, da.k)

    if kind == "ds-circle":
        inst = gen_ds_circle(rng, max_chords=max_n)
        digest = _digest(write_ds_instance(inst))
        sol = solve_ds_bruteforce(inst)
        if sol is None:
            return _forward_case(case, kind, digest, False, None, None)
        daf, _, gm = ds_to_daf(inst)
        cert = ds_forward_certificate(gm, sol)
        valid = is_daf_feasible(daf, cert)
        return _forward_case(case, kind, digest, True, valid, daf.r)

    if kind == "daf":
        inst = gen_daf(rng, max_n=max_n)
        digest = _digest(write_daf(inst))
        src = brute_force_min_da(inst.graph, forbidden=inst.forbidden, max_size=inst.r)
        da, _ = daf_to_da(inst)
        valid = None
        if src is not None:
            valid = len(src.vertices) <= da.k and is_defensive_alliance(
                da.graph, src.as_set
            )
            if not valid:
                return EquivReport(case, kind, digest, True, False, da.k, None, "forward-fail")
        if da.graph.n > _TARGET_BRUTE_LIMIT:
            return _forward_case(case, kind, digest, src is not None, valid, da.k)
        tgt = brute_force_min_da(da.graph, max_size=da.k)
        agree = (src is not None) == (tgt is not None)
        return EquivReport(
            case,
            kind,
            digest,
            src is not None,
            valid,
            da.k,
            tgt is not None,
            "iff-ok" if agree else "iff-fail",
        )

    raise BadParams(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")


@dataclass(frozen=True)
class EquivSummary:
    kind: str
    seed: int
    cases: int
    forward_ok: int
    iff_ok: int
    skipped: int
    failures: int

    def text(self) -> str:
        return (
            f"kind={self.kind} seed={self.seed} cases={self.cases} "
            f"forward-ok={self.forward_ok} iff-ok={self.iff_ok} "
            f"skipped={self.skipped} failures={self.failures}"
        )


def run_equiv_test(
    kind: str,
    count: int | None = None,
    max_n: int | None = None,
    seed: int = DEFAULT_SEED,
) -> tuple[list[EquivReport], EquivSummary]:
    if kind not in KINDS:
        raise BadParams(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    count = DEFAULT_COUNTS[kind] if count is None else count
    max_n = DEFAULT_MAX_N[kind] if max_n is None else max_n
    if count < 0:
        raise BadParams("count must be >= 0")
    rng = random.Random(seed)
    reports = [run_equiv_case(kind, case, rng, max_n) for case in range(count)]
    summary = EquivSummary(
        kind=kind,
        seed=seed,
        cases=len(reports),
        forward_ok=sum(r.verdict == "forward-ok" for r in reports),
        iff_ok=sum(r.verdict == "iff-ok" for r in reports),
        skipped=sum(r.verdict == "skipped-too-large" for r in reports),
        failures=sum(r.verdict in ("forward-fail", "iff-fail") for r in reports),
    )
    return reports, summary


def render_reports(
    reports: list[EquivReport], summary: EquivSummary, fmt: str = "text"
) -> str:
    if fmt == "json":
        lines = [json.dumps(asdict(r), sort_keys=True) for r in reports]
        lines.append(json.dumps(asdict(summary), sort_keys=True))
        return "\n".join(lines) + "\n"
    lines = [r.text() for r in reports]
    lines.append(summary.text())
    return "\n".join(lines) + "\n"
