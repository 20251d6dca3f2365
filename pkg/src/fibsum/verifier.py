"""Verification runs and their JSON-lines reports.

Three kinds of check are offered:

* finite identities: a partial sum against its telescoped closed value,
  compared as exact fractions;
* infinite sums: partial sums at N and 2N against the exact closed form,
  with the gap required to shrink and to fall below a threshold;
* printed example values: the closed form must equal the recorded value.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import catalog
from .catalog import CatalogEntry, ParamError
from .exact import QuadRat, format_rational, quad_to_decimal, quad_to_scientific
from .identities import IDENTITIES, sweep_identities
from .sequences import fib, lucas

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-invalid-params"
STATUSES = (PASS, FAIL, SKIPPED)

DEFAULT_THRESHOLD = Fraction(1, 10 ** 15)


@dataclass
class VerificationReport:
    entry_id: str
    params: dict
    status: str
    lhs: str | None = None
    rhs: str | None = None
    tail: str | None = None
    ms: int | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        return {
            "entry_id": self.entry_id,
            "params": self.params,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "tail": self.tail,
            "ms": self.ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def _params(m=None, n=None, q=None, p=None, N=None) -> dict:
    return {"m": m, "n": n, "q": q, "p": p, "N": N}


# ---------------------------------------------------------------------------
# finite identities


@dataclass(frozen=True)
class FiniteIdentity:
    """A finite-N identity: ``sides(m, n, q, p, N) -> (lhs, rhs)``."""

    id: str
    description: str
    hypothesis: str
    predicate: Callable[..., bool]
    sides: Callable[..., tuple[Fraction, Fraction]]
    uses_N: bool = True
    uses_m: bool = True
    uses_p: bool = False
    entry: CatalogEntry | None = None


def _from_entry(entry: CatalogEntry) -> FiniteIdentity:
    def sides(m, n, q, p, N):
        return catalog.partial_sum(entry, m, n, q, p, N), catalog.finite_rhs(entry, m, n, q, p, N)

    def predicate(m, n, q, p):
        return catalog.validate_params(entry, m, n, q, p)

    return FiniteIdentity(f"{entry.id}-finite",
                          f"partial sums of {entry.id} telescope ({entry.lemma} product lemma)",
                          entry.hypothesis, predicate, sides, uses_p=entry.uses_p, entry=entry)


def _cross_phi_forms(m, n, q, p, N):
    # (1/F_n) sum F_{nk+n}/F_{nk} - (1/2) sum L_{nk}/F_{nk} = (q/2) L_n/F_n
    ks = range(1, q + 1)
    lhs = (sum(Fraction(fib(n * k + n), fib(n * k)) for k in ks) / fib(n)
           - sum(Fraction(lucas(n * k), fib(n * k)) for k in ks) / 2)
    return lhs, Fraction(q * lucas(n), 2 * fib(n))


def _cross_even_fib(m, n, q, p, N):
    # (1/2) sum (-1)^k L_{nk}/F_{nk} = (1/F_n) sum (-1)^k F_{nk+n}/F_{nk}, q even
    ks = range(1, q + 1)
    lhs = sum((-1) ** k * Fraction(lucas(n * k), fib(n * k)) for k in ks) / 2
    rhs = sum((-1) ** k * Fraction(fib(n * k + n), fib(n * k)) for k in ks) / fib(n)
    return lhs, rhs


def _cross_even_lucas(m, n, q, p, N):
    # (1/2) sum (-1)^(k-1) F_{nk}/L_{nk} = (1/(5F_n)) sum (-1)^(k-1) L_{nk+n}/L_{nk}, q even
    ks = range(1, q + 1)
    lhs = sum((-1) ** (k - 1) * Fraction(fib(n * k), lucas(n * k)) for k in ks) / 2
    rhs = sum((-1) ** (k - 1) * Fraction(lucas(n * k + n), lucas(n * k)) for k in ks) / (5 * fib(n))
    return lhs, rhs


def _n_q_positive(m, n, q, p):
    return n >= 1 and q >= 1


def _q_even(m, n, q, p):
    return n >= 1 and q >= 1 and q % 2 == 0


CROSS_IDENTITIES = (
    FiniteIdentity("X1", "(1/F_n) sum F_{nk+n}/F_{nk} - (1/2) sum L_{nk}/F_{nk} = (q/2) L_n/F_n",
                   "n and q are positive integers", _n_q_positive, _cross_phi_forms,
                   uses_N=False, uses_m=False),
    FiniteIdentity("X2", "(1/2) sum (-1)^k L_{nk}/F_{nk} = (1/F_n) sum (-1)^k F_{nk+n}/F_{nk}",
                   "q is even", _q_even, _cross_even_fib, uses_N=False, uses_m=False),
    FiniteIdentity("X3", "(1/2) sum (-1)^(k-1) F_{nk}/L_{nk} = "
                   "(1/(5F_n)) sum (-1)^(k-1) L_{nk+n}/L_{nk}",
                   "q is even", _q_even, _cross_even_lucas, uses_N=False, uses_m=False),
)

FINITE_IDENTITIES: dict[str, FiniteIdentity] = {
    fi.id: fi for fi in [_from_entry(e) for e in catalog.catalog_list()] + list(CROSS_IDENTITIES)
}


def verify_finite(identity_id: str, m=1, n=1, q=1, p=0, N=1) -> VerificationReport:
    ident = FINITE_IDENTITIES[identity_id]
    params = _params(m if ident.uses_m else None, n, q, p if ident.uses_p else None,
                     N if ident.uses_N else None)
    if ident.entry is not None and ident.entry.fixed:
        params = _params(N=N)
    if N < 1 or not ident.predicate(m, n, q, p):
        return VerificationReport(identity_id, params, SKIPPED)
    lhs, rhs = ident.sides(m, n, q, p, N)
    status = PASS if lhs == rhs else FAIL
    return VerificationReport(identity_id, params, status, format_rational(lhs),
                              format_rational(rhs))


# ---------------------------------------------------------------------------
# infinite sums


@dataclass
class Certificate:
    closed_form: QuadRat
    partial_small: Fraction
    partial_large: Fraction
    gap_small: QuadRat
    gap_large: QuadRat
    N: int

    def holds(self, threshold) -> bool:
        return self.gap_large < self.gap_small < QuadRat.coerce(Fraction(threshold))


def certify(entry, m, n, q, p, N: int) -> Certificate:
    """Partial sums at N and 2N and their exact distances from the closed form.

    Entries whose terms do not tend to zero are summed in the mean sense:
    the probe value at N is (S_N + S_{N+1})/2.
    """
    entry = catalog.get_entry(entry)
    closed = catalog.closed_form(entry, m, n, q, p)
    if entry.convergence == "mean":
        sums = catalog.partial_sums(entry, m, n, q, p, [N, N + 1, 2 * N, 2 * N + 1])
        small = (sums[N] + sums[N + 1]) / 2
        large = (sums[2 * N] + sums[2 * N + 1]) / 2
    else:
        sums = catalog.partial_sums(entry, m, n, q, p, [N, 2 * N])
        small, large = sums[N], sums[2 * N]
    return Certificate(closed, small, large, abs(QuadRat.coerce(small) - closed),
                       abs(QuadRat.coerce(large) - closed), N)


def verify_infinite(entry_id, m=1, n=1, q=1, p=0, N_probe=48, threshold=DEFAULT_THRESHOLD,
                    adaptive=False, digits=40) -> VerificationReport:
    """Certify an infinite sum: |S_2N - C| < |S_N - C| < threshold.

    With ``adaptive`` the probe length is stretched for the slowly decaying
    families (see :func:`catalog.probe_factor`).
    """
    if N_probe < 8:
        raise ValueError("N_probe must be at least 8")
    entry = catalog.get_entry(entry_id)
    if adaptive and catalog.validate_params(entry, m, n, q, p):
        N_probe *= catalog.probe_factor(entry, m, n, q, p)
    params = _entry_params(entry, m, n, q, p, N_probe)
    if not catalog.validate_params(entry, m, n, q, p):
        return VerificationReport(entry.id, params, SKIPPED)
    cert = certify(entry, m, n, q, p, N_probe)
    status = PASS if cert.holds(threshold) else FAIL
    return VerificationReport(entry.id, params, status,
                              quad_to_decimal(QuadRat.coerce(cert.partial_large), digits),
                              str(cert.closed_form), quad_to_scientific(cert.gap_large))


def _entry_params(entry: CatalogEntry, m, n, q, p, N) -> dict:
    if entry.fixed:
        return _params(N=N)
    return _params(m, n, q, p if entry.uses_p else None, N)


# ---------------------------------------------------------------------------
# printed values


@dataclass(frozen=True)
class PublishedExample:
    entry_id: str
    m: int
    n: int
    q: int
    value: Fraction


def _ex(entry_id, m, n, q, value):
    return PublishedExample(entry_id, m, n, q, Fraction(value))


PUBLISHED_EXAMPLES = (
    _ex("A3", 1, 1, 1, "1"),
    _ex("A3", 1, 1, 3, "143/960"),
    _ex("A3", 3, 1, 3, "938359017897442612/5579104720519492358676480"),
    _ex("A3", 5, 3, 1, "1/13970032097862115517068710877593600"),
    _ex("A4", 1, 2, 1, "1/9"),
    _ex("A4", 2, 1, 1, "1/18"),
    _ex("A4", 2, 6, 1, "1/44444622716928"),
    _ex("C1", 1, 2, 1, "1/3"),
    _ex("C1", 1, 1, 2, "5/6"),
    _ex("C1", 2, 7, 1, "1/6427623373464462"),
    _ex("C2", 1, 1, 2, "1/6"),
    _ex("C2", 1, 3, 2, "271/156672"),
    _ex("C2", 2, 4, 2, "177072540680427/166704475185956548320480"),
    _ex("J1", 1, 1, 2, "2"),
    _ex("J1", 1, 2, 1, "1"),
    _ex("J1", 3, 2, 2, "1288981/35850395750400"),
    _ex("J1c", 1, 1, 1, "1"),
    _ex("J1c", 2, 1, 1, "1/108"),
    _ex("J1c", 3, 2, 2,
        "636693716175181614930457/1701394375843622618689225675379000792710492054565683200"),
    _ex("N3", 1, 1, 1, "1/128"),
    _ex("N3L", 1, 1, 1, "1/829440"),
    _ex("N4", 1, 1, 1, "1/128"),
    _ex("N4L", 1, 1, 1, "1/10240"),
)


def verify_example(example: PublishedExample, N_probe=64,
                   threshold=DEFAULT_THRESHOLD) -> VerificationReport:
    """Closed form must equal the recorded value exactly and the sum must certify.

    ``lhs`` carries the computed closed form and ``rhs`` the recorded value,
    so a mismatch report shows both.
    """
    entry = catalog.get_entry(example.entry_id)
    m, n, q = example.m, example.n, example.q
    closed = catalog.closed_form(entry, m, n, q)
    cert = certify(entry, m, n, q, 0, N_probe)
    exact = closed == QuadRat.coerce(example.value)
    status = PASS if exact and cert.holds(threshold) else FAIL
    return VerificationReport(entry.id, _entry_params(entry, m, n, q, 0, N_probe), status,
                              str(closed), format_rational(example.value),
                              quad_to_scientific(cert.gap_large))


def reproduce_published_examples(N_probe=64, threshold=DEFAULT_THRESHOLD) -> list[VerificationReport]:
    return [verify_example(ex, N_probe, threshold) for ex in PUBLISHED_EXAMPLES]


# ---------------------------------------------------------------------------
# identity sweep


def identity_reports(max_index: int, trials: int, seed: int) -> list[VerificationReport]:
    """One report per auxiliary identity.

    ``lhs``/``rhs`` hold the sides of the first failing trial, or of the
    last trial when all agree.
    """
    result = sweep_identities(max_index, trials, seed)
    failures = {}
    for label, params, lhs, rhs in result.failures:
        failures.setdefault(label, (params, lhs, rhs))
    reports = []
    for ident in IDENTITIES.values():
        label = ident.id.value
        params, lhs, rhs = failures.get(label, result.last[label])
        status = FAIL if label in failures else PASS
        reports.append(VerificationReport(
            f"identity-{label}",
            {"m": None, "n": None, "q": None, "p": None, "N": trials,
             "args": dict(zip(ident.params, params)), "max_index": max_index, "seed": seed},
            status, str(lhs), str(rhs)))
    return reports


# ---------------------------------------------------------------------------
# suites


SCOPES = ("identities", "finite", "infinite", "examples", "all")


def _selected(prefixes, entry_id: str) -> bool:
    return "all" in prefixes or any(entry_id.startswith(pref) for pref in prefixes)


def _finite_cells(config):
    top, top_p, max_N = config.finite_max, config.finite_max_p, config.max_N
    cells = []
    for ident in FINITE_IDENTITIES.values():
        if not _selected(config.families, ident.id):
            continue
        if ident.entry is not None and ident.entry.fixed:
            grid = [(1, 1, 1, 0)]
        else:
            ms = range(1, top + 1) if ident.uses_m else (1,)
            ps = range(0, top_p + 1) if ident.uses_p else (0,)
            grid = [(m, n, q, p) for m in ms for n in range(1, top + 1)
                    for q in range(1, top + 1) for p in ps]
        Ns = range(1, max_N + 1) if ident.uses_N else (1,)
        cells += [(verify_finite, (ident.id, m, n, q, p, N)) for m, n, q, p in grid for N in Ns]
    return cells


def _infinite_cells(config):
    cells = []
    for entry in catalog.catalog_list():
        if not _selected(config.families, entry.id):
            continue
        if entry.fixed:
            grid = [(1, 1, 1, 0)]
        else:
            ps = range(0, config.max_p + 1) if entry.uses_p else (0,)
            grid = [(m, n, q, p) for m in range(1, config.max_m + 1)
                    for n in range(1, config.max_n + 1)
                    for q in range(1, config.max_q + 1) for p in ps]
        cells += [(verify_infinite, (entry.id, m, n, q, p, config.n_probe, config.threshold, True))
                  for m, n, q, p in grid]
    return cells


def _example_cells(config):
    return [(verify_example, (ex, 64, config.threshold)) for ex in PUBLISHED_EXAMPLES
            if _selected(config.families, ex.entry_id)]


def thread_count() -> int:
    """Worker count from FIBSUM_THREADS: unset or 1 runs serially, 0 means one per CPU."""
    raw = os.environ.get("FIBSUM_THREADS", "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"FIBSUM_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("FIBSUM_THREADS must be non-negative")
    return value or (os.cpu_count() or 1)


def _run_cells(cells, workers: int) -> list[VerificationReport]:
    def run(cell):
        fn, args = cell
        return fn(*args)

    if workers <= 1:
        return [run(c) for c in cells]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, cells))


@dataclass
class SuiteResult:
    reports: list[VerificationReport] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.summary.get("counts", {}).get(FAIL, 0) == 0


def _family(entry_id: str) -> str:
    if entry_id.startswith("identity-"):
        return "identities"
    return entry_id[0]


def run_suite(config, scope: str = "all", timing: bool = False, workers=None) -> SuiteResult:
    """Run the selected checks; the summary is assembled in catalog order."""
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)}")
    started = time.perf_counter()
    workers = thread_count() if workers is None else workers
    reports = []
    if scope in ("identities", "all"):
        reports += identity_reports(config.sweep_range, config.sweep_trials, config.seed)
    cells = []
    if scope in ("finite", "all"):
        cells += _finite_cells(config)
    if scope in ("infinite", "all"):
        cells += _infinite_cells(config)
    if scope in ("examples", "all"):
        cells += _example_cells(config)
    reports += _run_cells(cells, workers)

    counts = {status: 0 for status in STATUSES}
    by_family: dict[str, dict[str, int]] = {}
    for report in reports:
        counts[report.status] += 1
        fam = by_family.setdefault(_family(report.entry_id), {s: 0 for s in STATUSES})
        fam[report.status] += 1
    summary = {"scope": scope, "seed": config.seed, "total": len(reports),
               "counts": counts, "by_family": by_family}
    if timing:
        summary["elapsed_ms"] = int((time.perf_counter() - started) * 1000)
    return SuiteResult(reports, summary)


def write_reports(result: SuiteResult, stream) -> None:
    for report in result.reports:
        stream.write(report.to_json() + "\n")
    stream.write(json.dumps({"summary": result.summary}) + "\n")


__all__ = [
    "PASS", "FAIL", "SKIPPED", "STATUSES", "DEFAULT_THRESHOLD",
    "VerificationReport", "FiniteIdentity", "FINITE_IDENTITIES", "CROSS_IDENTITIES",
    "verify_finite", "Certificate", "certify", "verify_infinite",
    "PublishedExample", "PUBLISHED_EXAMPLES", "verify_example", "reproduce_published_examples",
    "identity_reports", "SCOPES", "thread_count", "SuiteResult", "run_suite", "write_reports",
    "ParamError",
]
