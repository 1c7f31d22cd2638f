"""Registry of executable checks, one per assertion about x, y, z and t, and
the machine-readable report they produce.

Claims about infinite words can only be corroborated on prefixes; those are
of kind ``evidence`` and carry stabilization certificates (two prefix
lengths and digests that agree). Claims decidable on finite inputs are of
kind ``exact``.
"""

from __future__ import annotations

import hashlib
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import __version__
from .analysis import (
    block_form_check,
    closure_step_check,
    decompose_generation,
    factor_set,
    forbidden_factor_check,
    palindrome_absence_check,
    recurrence_profile,
    reversal_closure_check,
)
from .errors import ResourceError, UnknownClaimError, WordprobeError
from .generators import FT, GX, T, X, Y, Z, build_generation, prefix
from .index import build_pal_tree, build_suffix_automaton
from .words import H, Word, apply_morphism, is_palindrome, reverse, word

REPORT_VERSION = "1.0"

PASS, FAIL, ERROR = "pass", "fail", "error"


@dataclass(frozen=True)
class ClaimConfig:
    prefix_length: int = 1 << 20
    confirm_length: int | None = None
    max_m: int = 20
    closure_generations: int = 12
    decomposition_max_p: int = 3
    decomposition_max_n: int = 8
    stabilization_generations: tuple[int, int] = (12, 20)
    max_length: int | None = None

    @property
    def confirm(self) -> int:
        if self.confirm_length is not None:
            return self.confirm_length
        return self.prefix_length // 2

    def to_dict(self) -> dict:
        d = asdict(self)
        d["confirm_length"] = self.confirm
        d["stabilization_generations"] = list(self.stabilization_generations)
        return d


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    location: str
    kind: str
    check: Callable[[ClaimConfig], tuple[bool, dict]]
    parameter_names: tuple[str, ...]


@dataclass
class ClaimResult:
    id: str
    description: str
    status: str
    kind: str
    parameters: dict
    details: dict
    runtime_ms: float = 0.0

    def to_dict(self, with_runtime: bool = True) -> dict:
        d = {
            "id": self.id,
            "description": self.description,
            "status": self.status,
            "kind": self.kind,
            "parameters": self.parameters,
            "details": self.details,
        }
        if with_runtime:
            d["runtime_ms"] = round(self.runtime_ms, 3)
        return d


@dataclass
class Report:
    config: dict
    results: list[ClaimResult] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, ERROR: 0}
        for r in self.results:
            counts[r.status] += 1
        return counts

    @property
    def all_pass(self) -> bool:
        return all(r.status == PASS for r in self.results)

    def to_dict(self, with_runtime: bool = True) -> dict:
        return {
            "version": REPORT_VERSION,
            "config": self.config,
            "results": [r.to_dict(with_runtime) for r in self.results],
            "summary": self.summary,
        }


def _digest(words) -> str:
    h = hashlib.sha256()
    for w in sorted(words, key=lambda w: (len(w), w.codes)):
        h.update(w.codes)
        h.update(b"\xff")
    return h.hexdigest()[:16]


def _first_mismatch(a: Word, b: Word) -> int | None:
    n = min(len(a), len(b))
    diff = np.flatnonzero(
        np.frombuffer(a.codes[:n], dtype=np.uint8) != np.frombuffer(b.codes[:n], dtype=np.uint8)
    )
    if diff.size:
        return int(diff[0])
    return None if len(a) == len(b) else n


def _recurrence(name: str, cfg: ClaimConfig) -> tuple[bool, dict]:
    w = prefix(name, cfg.prefix_length, cfg.max_length)
    profile = recurrence_profile(w, cfg.max_m, cfg.confirm)
    rows = [
        {
            "m": r.m,
            "factor_count": r.factor_count,
            "max_gap": r.max_gap,
            "window_bound": r.window_bound,
            "stable": r.stable,
        }
        for r in profile.rows
    ]
    ok = profile.all_stable and profile.all_finite
    details = {
        "certificate": {"prefix_lengths": [cfg.confirm, cfg.prefix_length]},
        "profile": rows,
        "boundary": "gaps after the last occurrence of each factor are not counted",
    }
    if not ok:
        bad = next(r for r in profile.rows if not r.stable or r.window_bound is None)
        details["witness"] = {
            "m": bad.m,
            "reason": "unstable" if not bad.stable else "factor occurring once",
            "counts": [bad.confirm_factor_count, bad.factor_count],
            "max_gaps": [bad.confirm_max_gap, bad.max_gap],
        }
    return ok, details


def _closure(name: str, cfg: ClaimConfig) -> tuple[bool, dict]:
    w = prefix(name, cfg.prefix_length, cfg.max_length)
    short = w[: cfg.confirm]
    per_m = []
    witness = None
    for m in range(1, cfg.max_m + 1):
        check = reversal_closure_check(w, m)
        long_set, short_set = factor_set(w, m), factor_set(short, m)
        stabilized = long_set.factors == short_set.factors
        per_m.append(
            {"m": m, "closed": check.ok, "stabilized": stabilized, "digest": long_set.digest()}
        )
        if not check.ok and witness is None:
            witness = {"m": m, "factor": str(check.witness), "missing_reversal": str(reverse(check.witness))}
    ok = witness is None
    details = {
        "certificate": {"prefix_lengths": [cfg.confirm, cfg.prefix_length]},
        "per_m": per_m,
    }
    if witness:
        details["witness"] = witness
    return ok, details


def c1(cfg):
    return _recurrence("x", cfg)


def c2(cfg):
    ok, details = _closure("x", cfg)
    steps = {n: closure_step_check(X, n) for n in range(cfg.closure_generations + 1)}
    details["closure_steps"] = {"generations": [0, cfg.closure_generations], "all_hold": all(steps.values())}
    if not all(steps.values()):
        n = min(k for k, v in steps.items() if not v)
        details.setdefault("witness", {"closure_step_fails_at": n})
        ok = False
    return ok, details


def c3(cfg):
    w = prefix("x", cfg.prefix_length, cfg.max_length)
    pals = build_pal_tree(w).palindromic_factors()
    found = [str(p) for p in pals]
    ok = found == ["0", "1", "2", "3"]
    details = {"palindromes": found, "count": len(found)}
    if not ok:
        extra = [p for p in found if p not in ("0", "1", "2", "3")]
        details["witness"] = extra[0] if extra else "missing letters"
    return ok, details


def c4(cfg):
    w = prefix("x", cfg.prefix_length, cfg.max_length)
    blocks = block_form_check(w)
    forbidden = forbidden_factor_check(w)
    details = {"block_form": blocks.ok, "no_aa_or_aba": forbidden.ok}
    if not blocks.ok:
        details["witness"] = {"block": str(blocks.witness), "index": blocks.index}
    elif not forbidden.ok:
        details["witness"] = {"factor": str(forbidden.witness), "pattern": forbidden.detail, "index": forbidden.index}
    return blocks.ok and forbidden.ok, details


def c5(cfg):
    checked = 0
    seen = set()
    witness = None
    for p in range(cfg.decomposition_max_p + 1):
        for n in range(1, cfg.decomposition_max_n + 1):
            d = decompose_generation(X, p, n)
            checked += 1
            seen.update(str(s) for s in d.separators)
            if not d.valid and witness is None:
                witness = {"p": p, "n": n, "first_bad_block": d.first_bad_block}
    example = decompose_generation(X, 0, 2)
    details = {
        "decompositions_checked": checked,
        "separators_seen": sorted(seen),
        "example": {"p": 0, "n": 2, "separators": [str(s) for s in example.separators]},
    }
    if witness:
        details["witness"] = witness
    return witness is None and seen <= {"23", "32"}, details


def c6(cfg):
    return _recurrence("y", cfg)


def c7(cfg):
    return _closure("y", cfg)


def c8(cfg):
    w = prefix("y", cfg.prefix_length, cfg.max_length)
    long_pals = build_pal_tree(w).palindromic_factors()
    short_pals = build_pal_tree(w[: cfg.confirm]).palindromic_factors()
    stabilized = long_pals == short_pals
    images_palindromic = all(is_palindrome(img) for img in H.images)
    base = prefix("x", cfg.confirm, cfg.max_length)
    commutes = apply_morphism(H, reverse(base)) == reverse(apply_morphism(H, base))
    details = {
        "palindromes": [str(p) for p in long_pals],
        "count": len(long_pals),
        "max_length": max((len(p) for p in long_pals), default=0),
        "certificate": {
            "prefix_lengths": [cfg.confirm, cfg.prefix_length],
            "digests": [_digest(short_pals), _digest(long_pals)],
        },
        "letter_images_palindromic": images_palindromic,
        "h_commutes_with_reversal_on_x_prefix": commutes,
    }
    ok = stabilized and images_palindromic and commutes
    if not ok:
        if not stabilized:
            new = sorted(set(map(str, long_pals)) - set(map(str, short_pals)), key=lambda s: (len(s), s))
            details["witness"] = {"new_palindromes": new[:5]}
        else:
            details["witness"] = "morphism h fails the palindrome or reversal property"
    return ok, details


def c9(cfg):
    gx = prefix("gx", cfg.prefix_length, cfg.max_length)
    z = prefix("z", cfg.prefix_length, cfg.max_length)
    mismatch = _first_mismatch(gx, z)
    details = {"compared_length": cfg.prefix_length, "first_mismatch": mismatch}
    if mismatch is not None:
        details["witness"] = {"index": mismatch}
    return mismatch is None, details


def c10(cfg):
    excluded = {13, 14}
    w = prefix("z", cfg.prefix_length, cfg.max_length)
    tree = build_pal_tree(w)
    longest = tree.max_palindrome_length()
    hits = tree.with_lengths(excluded)
    z2 = build_generation(Z, 2)
    z3 = build_generation(Z, 3)
    junction = reverse(z2) + word("01", 2) + z2
    base_z3 = palindrome_absence_check(z3, excluded)
    base_junction = palindrome_absence_check(junction, excluded)
    details = {
        "prefix": {"no_length_13_or_14": not hits, "max_palindrome_length": longest, "bound": 12},
        "base_cases": {
            "kind": "exact",
            "z3": base_z3.ok,
            "reversed_z2_01_z2": base_junction.ok,
        },
        "middle_factorization": _middle_factorization(),
    }
    ok = not hits and longest <= 12 and base_z3.ok and base_junction.ok
    if not ok:
        bad = hits[0] if hits else base_z3.witness or base_junction.witness
        details["witness"] = str(bad) if bad is not None else f"max palindrome length {longest}"
    return ok, details


def _middle_factorization() -> dict:
    # z_n = z_2 m_n reverse(z_2) for n >= 3, and z_{n+1} = z_2 m_n rev(z_2) 01 z_2 rev(m_n) rev(z_2)
    z2 = build_generation(Z, 2)
    holds = True
    for n in range(3, 9):
        zn = build_generation(Z, n)
        mid = zn[len(z2) : len(zn) - len(z2)]
        expect = z2 + mid + reverse(z2) + word("01", 2) + z2 + reverse(mid) + reverse(z2)
        holds &= zn.startswith(z2) and zn[len(zn) - len(z2) :] == reverse(z2)
        holds &= build_generation(Z, n + 1) == expect
    return {"generations": [3, 8], "holds": holds}


def c11(cfg):
    w = prefix("t", cfg.prefix_length, cfg.max_length)
    sa = build_suffix_automaton(w)
    has_01000 = sa.contains(word("01000", 2))
    has_00010 = sa.contains(word("00010", 2))
    g_lo, g_hi = cfg.stabilization_generations
    fac_lo = factor_set(build_generation(T, g_lo, cfg.max_length), 5)
    fac_hi = factor_set(build_generation(T, g_hi, cfg.max_length), 5)
    stabilized = fac_lo.factors == fac_hi.factors
    asymmetric = has_01000 != has_00010
    closure = reversal_closure_check(w, 5)
    details = {
        "factor_01000": has_01000,
        "factor_00010": has_00010,
        "printed_orientation_holds": has_01000 and not has_00010,
        "closure_m5": closure.ok,
        "certificate": {
            "generations": [g_lo, g_hi],
            "fac5_digests": [fac_lo.digest(), fac_hi.digest()],
            "fac5_size": len(fac_hi),
        },
    }
    if asymmetric:
        present = "01000" if has_01000 else "00010"
        details["observed"] = {"factor": present, "reversal_absent": present[::-1]}
    ok = asymmetric and stabilized and not closure.ok
    if not ok:
        details["witness"] = (
            "Fac_5 did not stabilize" if not stabilized else "01000 and 00010 are both present or both absent"
        )
    return ok, details


def c12(cfg):
    ft = prefix("ft", cfg.prefix_length, cfg.max_length)
    candidates = {}
    for name in ("y", "z"):
        mismatch = _first_mismatch(ft, prefix(name, cfg.prefix_length, cfg.max_length))
        candidates[name] = {"full_match": mismatch is None, "first_mismatch": mismatch}
    full = [name for name, c in candidates.items() if c["full_match"]]
    details = {
        "compared_length": cfg.prefix_length,
        "candidates": candidates,
        "identity_holds_for": full[0] if len(full) == 1 else None,
        "printed_identity_holds": candidates["y"]["full_match"],
    }
    ok = len(full) == 1
    if not ok:
        details["witness"] = "f(t) matches neither y nor z" if not full else "f(t) matches both y and z"
    return ok, details


_P = ("prefix_length", "max_length")
_R = _P + ("confirm_length", "max_m")

REGISTRY: dict[str, Claim] = {
    c.id: c
    for c in [
        Claim("C1", "x is uniformly recurrent", "x, recurrence", "evidence", c1, _R),
        Claim("C2", "Fac(x) is closed under reversal", "x, reversal closure", "evidence", c2, _R + ("closure_generations",)),
        Claim("C3", "Pal(x) = {0,1,2,3}", "x, palindromes", "evidence", c3, _P),
        Claim("C4", "x lies in ((01+10)(23+32))^omega and has no factor aa or aba", "x, block form", "evidence", c4, _P),
        Claim(
            "C5",
            "x_{p+n} splits into alternating x_p and reverse(x_p) with separators in {23,32}",
            "x, decomposition",
            "exact",
            c5,
            ("decomposition_max_p", "decomposition_max_n"),
        ),
        Claim("C6", "y = h(x) is uniformly recurrent", "y, recurrence", "evidence", c6, _R),
        Claim("C7", "Fac(y) is closed under reversal", "y, reversal closure", "evidence", c7, _R),
        Claim("C8", "Pal(y) is finite", "y, palindromes", "evidence", c8, _P + ("confirm_length",)),
        Claim("C9", "z = g(x)", "z, morphic identity", "evidence", c9, _P),
        Claim("C10", "Pal(z) has no word of length 13 or 14", "z, palindromes", "evidence", c10, _P),
        Claim(
            "C11",
            "Fac(t) is not closed under reversal (pair 01000 / 00010)",
            "t, reversal asymmetry",
            "evidence",
            c11,
            _P + ("stabilization_generations",),
        ),
        Claim("C12", "f(t) equals y (adjudicated against y and z)", "t, morphic identity", "evidence", c12, _P),
    ]
}


def claim_ids() -> list[str]:
    return sorted(REGISTRY, key=lambda cid: int(cid[1:]))


def run_claim(claim_id: str, config: ClaimConfig | None = None) -> ClaimResult:
    if claim_id not in REGISTRY:
        raise UnknownClaimError(claim_id)
    cfg = config or ClaimConfig()
    claim = REGISTRY[claim_id]
    all_params = cfg.to_dict()
    params = {k: all_params[k] for k in claim.parameter_names}
    start = time.perf_counter()
    try:
        ok, details = claim.check(cfg)
        status = PASS if ok else FAIL
    except ResourceError as exc:
        status, details = ERROR, {"error": "resource", "message": str(exc)}
    except (WordprobeError, MemoryError) as exc:
        status, details = ERROR, {"error": type(exc).__name__, "message": str(exc)}
    runtime = (time.perf_counter() - start) * 1000
    return ClaimResult(claim.id, claim.description, status, claim.kind, params, details, runtime)


def run_all(config: ClaimConfig | None = None, ids=None, jobs: int = 1) -> Report:
    cfg = config or ClaimConfig()
    selected = claim_ids() if ids is None else [cid.upper() for cid in ids]
    for cid in selected:
        if cid not in REGISTRY:
            raise UnknownClaimError(cid)
    selected = sorted(set(selected), key=lambda cid: int(cid[1:]))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda cid: run_claim(cid, cfg), selected))
    else:
        results = [run_claim(cid, cfg) for cid in selected]
    return Report(cfg.to_dict(), results)
