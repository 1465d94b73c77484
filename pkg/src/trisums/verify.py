"""Re-check the bundled reference fixtures against fresh computation."""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .classify import classify
from .forms import FormKind, MixedForm, exceptional_set

DEFAULT_BOUND = 50_000


@dataclass(frozen=True)
class Fixture:
    fid: str
    check: str
    form: MixedForm
    expected_set: tuple[int, ...] = ()
    expected_max: int = 0
    expected_verdicts: tuple[tuple[str, str], ...] = ()
    note: str = ""


@dataclass(frozen=True)
class FixtureResult:
    fid: str
    status: str  # pass / fail / skip
    detail: str = ""


def _parse_line(line: str) -> Fixture | None:
    line = line.strip()
    if not line or line.startswith("#"):
        return None
    head, payload, note = (part.strip() for part in line.split("::"))
    check, kind, triple = head.split()
    a, b, c = (int(v) for v in triple.split(","))
    form = MixedForm(FormKind(kind), a, b, c)
    fid = f"{check}:{kind}:{a},{b},{c}"
    if check == "set":
        return Fixture(fid, check, form, expected_set=tuple(int(v) for v in payload.split()), note=note)
    if check == "max":
        return Fixture(fid, check, form, expected_max=int(payload), note=note)
    if check == "verdict":
        pairs = tuple(tuple(kv.split("=")) for kv in payload.split())
        return Fixture(fid, check, form, expected_verdicts=pairs, note=note)
    if check == "universal":
        return Fixture(fid, check, form, note=note)
    raise ValueError(f"unknown fixture type {check!r}")


@lru_cache(maxsize=1)
def load_fixtures() -> tuple[Fixture, ...]:
    text = resources.files("trisums").joinpath("fixtures.txt").read_text(encoding="utf-8")
    out = []
    for line in text.splitlines():
        fx = _parse_line(line)
        if fx is not None:
            out.append(fx)
    return tuple(out)


def _check_set(fx: Fixture, bound: int) -> FixtureResult:
    got = exceptional_set(fx.form, bound).exceptions
    want = tuple(v for v in fx.expected_set if v <= bound)
    if got == want:
        return FixtureResult(fx.fid, "pass")
    return FixtureResult(
        fx.fid,
        "fail",
        f"expected {list(want)}, computed {list(got[:25])}{'...' if len(got) > 25 else ''}",
    )


def _check_max(fx: Fixture, bound: int) -> FixtureResult:
    if fx.expected_max > bound:
        return FixtureResult(fx.fid, "skip", f"needs bound >= {fx.expected_max}")
    got = exceptional_set(fx.form, bound).exceptions
    if got and max(got) == fx.expected_max:
        return FixtureResult(fx.fid, "pass")
    top = max(got) if got else None
    return FixtureResult(fx.fid, "fail", f"expected max {fx.expected_max}, computed {top}")


def _check_verdict(fx: Fixture, bound: int) -> FixtureResult:
    cl = classify(fx.form)
    actual = {
        "almost": cl.almost_universal.value,
        "asym": "yes" if cl.asymptotically_universal else "no",
        "universal": "yes" if cl.universal else "no",
    }
    bad = [f"{k}={actual[k]} (want {v})" for k, v in fx.expected_verdicts if actual[k] != v]
    if bad:
        return FixtureResult(fx.fid, "fail", "; ".join(bad))
    return FixtureResult(fx.fid, "pass")


def _check_universal(fx: Fixture, bound: int) -> FixtureResult:
    cl = classify(fx.form)
    if not cl.universal:
        return FixtureResult(fx.fid, "fail", "not recognized as universal")
    got = exceptional_set(fx.form, bound).exceptions
    if got:
        return FixtureResult(fx.fid, "fail", f"exceptions found: {list(got[:10])}")
    return FixtureResult(fx.fid, "pass")


_CHECKERS = {
    "set": _check_set,
    "max": _check_max,
    "verdict": _check_verdict,
    "universal": _check_universal,
}


def check_fixture(index: int, bound: int) -> FixtureResult:
    fx = load_fixtures()[index]
    return _CHECKERS[fx.check](fx, bound)


def verify_reference(bound: int = DEFAULT_BOUND, jobs: int = 1) -> tuple[list[FixtureResult], bool]:
    """Recompute every fixture at the given bound; deterministic result order."""
    n = len(load_fixtures())
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_by_index, [(i, bound) for i in range(n)]))
    else:
        results = [check_fixture(i, bound) for i in range(n)]
    results.sort(key=lambda r: r.fid)
    ok = all(r.status != "fail" for r in results)
    return results, ok


def _check_by_index(args: tuple[int, int]) -> FixtureResult:
    return check_fixture(*args)
