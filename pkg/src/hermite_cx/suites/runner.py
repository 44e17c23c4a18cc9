"""Check records, configuration and the suite runner."""

from __future__ import annotations

import os
import random
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..multipoly import Poly, render


class UnknownIdentityError(LookupError):
    pass


class IndexRangeError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    max_index: int = 6
    max_multi_index: int = 4
    cap: int = 12
    tol: float = 1e-10
    seed: int = 0

    def __post_init__(self):
        if self.max_index < 0 or self.max_multi_index < 0:
            raise ValueError("index bounds must be nonnegative")
        if self.cap < 0:
            raise ValueError("cap must be nonnegative")
        if not self.tol > 0:
            raise ValueError("tol must be positive")

    @property
    def multi(self) -> int:
        return min(self.max_index, self.max_multi_index)

    def as_dict(self) -> dict:
        return {
            "max_index": self.max_index,
            "max_multi_index": self.max_multi_index,
            "cap": self.cap,
            "tol": self.tol,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    indices: dict
    mode: str
    status: str
    witness: str

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "indices": dict(self.indices),
            "mode": self.mode,
            "status": self.status,
            "witness": self.witness,
        }

    @classmethod
    def from_dict(cls, d: dict) -> IdentityCheck:
        return cls(d["id"], dict(d["indices"]), d["mode"], d["status"], d["witness"])


@dataclass(frozen=True)
class Outcome:
    ok: bool
    witness: str


def exact_outcome(*parts: tuple) -> Outcome:
    """Each part is ``(label, lhs, rhs)``; passes iff every difference is 0."""
    bad = []
    for label, lhs, rhs in parts:
        diff = lhs - rhs
        if not diff.is_zero():
            bad.append(f"{label}: {render(diff)}")
    return Outcome(not bad, "; ".join(bad) if bad else "0")


def numeric_outcome(tol: float, *parts: tuple) -> Outcome:
    """Each part is ``(label, computed, reference)``; passes iff max error < tol."""
    errs = [(label, abs(complex(a) - complex(b))) for label, a, b in parts]
    worst = max((e for _, e in errs), default=0.0)
    detail = ", ".join(f"{label}={e:.3e}" for label, e in errs)
    ok = worst < tol and all(e == e for _, e in errs)
    return Outcome(ok, f"max_abs_err={worst:.3e} ({detail})")


@dataclass(frozen=True)
class Entry:
    """One catalog identity: how to enumerate its indices and check one tuple."""

    id: str
    display: str
    index_names: tuple
    kind: str  # exact | formal | numeric
    space: Callable[[SuiteConfig], list]
    check: Callable[[dict, SuiteConfig], Outcome]
    valid: Callable[[dict, SuiteConfig], str | None] = field(default=lambda ix, cfg: None)
    kind_of: Callable[[dict], str] | None = None

    def mode(self, indices: dict, config: SuiteConfig) -> str:
        kind = self.kind_of(indices) if self.kind_of else self.kind
        if kind == "formal":
            return f"formal-series(cap={config.cap})"
        if kind == "numeric":
            return f"numeric(tol={config.tol:g})"
        return "exact"

    def sort_key(self, indices: dict) -> tuple:
        return tuple(indices.get(n, -1) for n in self.index_names)


def _registry() -> dict:
    from .catalog import CATALOG

    return CATALOG


def get_entry(identity: str) -> Entry:
    try:
        return _registry()[identity]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity {identity!r}") from None


def all_ids() -> list:
    return sorted(_registry())


def verify(identity: str, indices: dict, config: SuiteConfig | None = None) -> IdentityCheck:
    """Check one identity at one index tuple.  Raises on unknown ids and on
    indices outside the entry's validity domain."""
    config = config or SuiteConfig()
    entry = get_entry(identity)
    missing = [n for n in indices if n not in entry.index_names]
    if missing:
        raise IndexRangeError(f"{identity}: unexpected indices {missing}")
    if any(not isinstance(v, int) or v < 0 for v in indices.values()):
        raise IndexRangeError(f"{identity}: indices must be nonnegative integers")
    problem = entry.valid(indices, config)
    if problem:
        raise IndexRangeError(f"{identity}: {problem}")
    outcome = entry.check(dict(indices), config)
    return IdentityCheck(
        identity,
        dict(indices),
        entry.mode(indices, config),
        "pass" if outcome.ok else "fail",
        outcome.witness,
    )


def _safe_verify(task: tuple) -> IdentityCheck:
    identity, indices, config = task
    try:
        return verify(identity, indices, config)
    except Exception as exc:  # reported as a failed check, never aborts the run
        entry = _registry().get(identity)
        mode = entry.mode(indices, config) if entry else "exact"
        tb = traceback.format_exception_only(type(exc), exc)[-1].strip()
        return IdentityCheck(identity, dict(indices), mode, "fail", f"error: {tb}")


def worker_count(requested: int | None = None) -> int:
    if requested is None:
        requested = int(os.environ.get("HERMITE_CX_THREADS", "0") or 0)
    if requested <= 0:
        return os.cpu_count() or 1
    return requested


def run_suite(
    ids: Iterable[str],
    config: SuiteConfig | None = None,
    workers: int | None = 1,
) -> list:
    """Run every index tuple of every requested identity.

    Results are ordered by (id, indices) regardless of ``workers``.  Pass
    ``workers=None`` to honour ``HERMITE_CX_THREADS`` (0 = one per CPU).
    """
    config = config or SuiteConfig()
    ids = list(dict.fromkeys(ids))
    entries = [get_entry(i) for i in ids]
    tasks = []
    for entry in sorted(entries, key=lambda e: e.id):
        for ix in sorted(entry.space(config), key=entry.sort_key):
            tasks.append((entry.id, ix, config))
    n = worker_count(workers)
    if n > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(_safe_verify, tasks, chunksize=16))
    else:
        results = [_safe_verify(t) for t in tasks]
    return results


def summarize(checks: Sequence[IdentityCheck]) -> dict:
    out = {"pass": 0, "fail": 0, "skipped": 0}
    for c in checks:
        out[c.status] += 1
    return out


# -- seeded test data ---------------------------------------------------------


def rng_for(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def random_polys(seed: int, names: Sequence[str], count: int = 20, degree: int = 6) -> list:
    """Seeded integer polynomials, coefficients in [-5, 5], total degree <= degree."""
    from ..multipoly import monomial

    rng = rng_for(seed, "poly:" + ",".join(names))
    shapes = _exponent_shapes(len(names), degree)
    out = []
    while len(out) < count:
        terms = {}
        for _ in range(rng.randint(1, 5)):
            shape = rng.choice(shapes)
            terms[monomial(**dict(zip(names, shape)))] = rng.randint(-5, 5)
        f = Poly(terms)
        if not f.is_zero():
            out.append(f)
    return out


def monomial_basis(names: Sequence[str], degree: int = 6) -> list:
    from ..multipoly import mono

    return [mono(1, **dict(zip(names, s))) for s in _exponent_shapes(len(names), degree)]


def _exponent_shapes(nvars: int, degree: int) -> list:
    if nvars == 1:
        return [(d,) for d in range(degree + 1)]
    shapes = []
    for first in range(degree + 1):
        for rest in _exponent_shapes(nvars - 1, degree - first):
            shapes.append((first,) + rest)
    return shapes


def operator_family(seed: int, names: Sequence[str]) -> list:
    """All monomials of degree <= 6 followed by 20 seeded random polynomials."""
    return monomial_basis(names) + random_polys(seed, names)
