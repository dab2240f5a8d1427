"""Parameter sweeps over the exact identities.

Each ``check_*`` function returns a ``CheckResult`` whose counterexamples are
sorted by parameter tuple, so repeated runs serialize byte-identically.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, inf
from typing import Callable, Iterable, Sequence

from .arith import is_prime, prime_power_base, units, valuation
from .bernoulli import bernoulli_number, bernoulli_poly
from .characters import enumerate_characters
from .engine import (
    character_identity_check,
    congruence_check,
    fourier_inversion,
    integrality_check,
    restriction_identity_check,
    theta,
)
from .errors import CompatibilityFailure
from .groupring import GroupRingElement, cyclotomic_field, format_rational
from .invariants import k_of_v, w_invariant
from .oracles import birch_tate_order, minus_class_number, stickelberger_index
from .tower import TowerSpec, build_theta_tower, theta_f0
from .zeta import euler_factor_split_check, partial_zeta_q

MAX_COUNTEREXAMPLES = 5


def conductors(max_f: int) -> list[int]:
    return [f for f in range(1, max_f + 1) if f % 4 != 2]


def worker_count() -> int:
    env = os.environ.get("STICKELBERGER_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def parallel_map(fn: Callable, items: Sequence) -> list:
    """Order-preserving map; fans out to processes when more than one worker is allowed."""
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, float) and x == inf:
        return "+inf"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


@dataclass
class CheckResult:
    name: str
    params: dict
    total: int = 0
    failed: int = 0
    counterexamples: list = field(default_factory=list)
    info: dict = field(default_factory=dict)
    details: list = field(default_factory=list, repr=False)  # not serialized

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, passed: bool, example: dict | None = None):
        self.total += 1
        if not passed:
            self.failed += 1
            if example is not None:
                self.counterexamples.append(example)

    def finish(self) -> "CheckResult":
        self.counterexamples = self.counterexamples[:MAX_COUNTEREXAMPLES]
        return self

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "ok": self.ok,
            "params": _jsonable(self.params),
            "total": self.total,
            "failed": self.failed,
            "counterexamples": _jsonable(self.counterexamples),
            "info": _jsonable(self.info),
        }


def check_integrality(max_f: int = 40, max_n: int = 3, max_b: int = 50) -> CheckResult:
    res = CheckResult("integrality", {"max_f": max_f, "max_n": max_n, "max_b": max_b})
    for f in conductors(max_f):
        K = cyclotomic_field(f)
        for n in range(max_n + 1):
            w = w_invariant(n + 1, K)
            for b in range(1, max_b + 1):
                if gcd(b, f * w) != 1:
                    continue
                rep = integrality_check(theta(n, b, K))
                res.record(rep.integral, {"f": f, "n": n, "b": b, "offending": rep.offending_primes})
    return res.finish()


RESTRICTION_PAIRS = ((3, 15), (3, 75), (5, 35), (4, 12), (7, 21), (5, 15))


def check_restriction(
    pairs: Iterable[tuple[int, int]] = RESTRICTION_PAIRS, max_n: int = 3, bs: Iterable[int] = (7, 11, 13)
) -> CheckResult:
    pairs, bs = list(pairs), list(bs)
    res = CheckResult("restriction", {"pairs": pairs, "max_n": max_n, "b": bs})
    for f, fp in pairs:
        for n in range(max_n + 1):
            for b in bs:
                if gcd(b, fp) != 1:
                    continue
                rep = restriction_identity_check(n, b, f, fp)
                res.record(rep.ok, {"f": f, "fprime": fp, "n": n, "b": b, "lhs": rep.lhs, "rhs": rep.rhs})
    return res.finish()


def check_congruence(max_f: int = 30, max_n: int = 4, max_b: int = 20, m: int = 0) -> CheckResult:
    """Odd part of Delta_{n+1} = (ab)^{n-m} Delta_{m+1} mod w; the 2-part is informational."""
    res = CheckResult("congruence", {"max_f": max_f, "max_n": max_n, "max_b": max_b, "m": m})
    split = {"odd_l_dividing_f": [0, 0], "odd_l_not_dividing_f": [0, 0]}  # [checked, failed]
    two_fail = []
    for f in conductors(max_f):
        for n in range(max(1, m), max_n + 1):
            for b in range(1, max_b + 1):
                if gcd(b, f) != 1:
                    continue
                for a in units(f):
                    rep = congruence_check(n, a, b, f, m)
                    for l, (v, need) in rep.odd.items():
                        bucket = split["odd_l_dividing_f" if f % l == 0 else "odd_l_not_dividing_f"]
                        bucket[0] += 1
                        bucket[1] += v < need
                    ex = {"f": f, "n": n, "a": a, "b": b, "difference": rep.difference, "modulus": rep.modulus}
                    if not rep.ok:
                        ex["odd"] = {l: list(vals) for l, vals in rep.odd.items() if vals[0] < vals[1]}
                    res.record(rep.ok, ex)
                    if rep.two_ok is False:
                        two_fail.append(ex)
    res.info = {
        "by_prime_position": {k: {"checked": c, "failed": x} for k, (c, x) in split.items()},
        "two_adic_failures": len(two_fail),
        "two_adic_first": two_fail[:MAX_COUNTEREXAMPLES],
    }
    res.details = [(e["f"], e["n"], e["a"], e["b"], e["difference"]) for e in two_fail]
    return res.finish()


def _character_task(args):
    f, max_n, bs = args
    K = cyclotomic_field(f)
    chars = enumerate_characters(K)
    out = []
    for n in range(max_n + 1):
        for b in bs:
            if gcd(b, f) != 1:
                continue
            th = theta(n, b, K)
            for chi in chars:
                rep = character_identity_check(th, chi)
                out.append((rep.ok, {"f": f, "n": n, "b": b, "chi": chi.label}))
            inv = fourier_inversion(th, chars) == th.value
            out.append((inv, {"f": f, "n": n, "b": b, "chi": "fourier-inversion"}))
    return out


def check_characters(max_f: int = 30, max_n: int = 3, bs: Iterable[int] = (2, 3, 5, 7, 11)) -> CheckResult:
    bs = list(bs)
    res = CheckResult("character", {"max_f": max_f, "max_n": max_n, "b": bs})
    for chunk in parallel_map(_character_task, [(f, max_n, bs) for f in conductors(max_f)]):
        for ok, ex in chunk:
            res.record(ok, ex)
    return res.finish()


TOWERS = ((3, 5), (5, 3), (7, 3))


def tower_b(F, l: int, n: int, depth: int) -> int:
    """Least b > 1 coprime to f*l and to w_{n+1} of the top of the tower."""
    top = TowerSpec(F, l, depth).level(depth)
    w = w_invariant(n + 1, top)
    return next(b for b in range(2, 10_000) if gcd(b, F.conductor * l * w) == 1)


def check_towers(configs: Iterable[tuple[int, int]] = TOWERS, max_n: int = 2, depth: int = 2) -> CheckResult:
    configs = list(configs)
    res = CheckResult("tower", {"towers": configs, "max_n": max_n, "depth": depth})
    for f, l in configs:
        F = cyclotomic_field(f)
        tower = TowerSpec(F, l, depth)
        for n in range(max_n + 1):
            b = tower_b(F, l, n, depth)
            ex = {"f": f, "l": l, "n": n, "b": b, "conductors": tower.conductors}
            try:
                fam = build_theta_tower(tower, n, b)
            except CompatibilityFailure as exc:
                ex["level"] = exc.level
                res.record(False, ex)
                continue
            ex["compat"] = fam.compat
            res.record(all(fam.compat), ex)
            res.record(fam.elements[0] == theta_f0(n, b, F, l), dict(ex, check="theta_f0"))
    return res.finish()


def check_euler_split(max_f: int = 30, max_l: int = 13, max_n: int = 4) -> CheckResult:
    res = CheckResult("euler_split", {"max_f": max_f, "max_l": max_l, "max_n": max_n})
    for f in range(1, max_f + 1):
        for l in range(2, max_l + 1):
            if not is_prime(l) or f % l == 0:
                continue
            for n in range(max_n + 1):
                for a in units(f):
                    rep = euler_factor_split_check(a, f, l, -n)
                    res.record(rep.ok, {"a": a, "f": f, "l": l, "n": n, "lhs": rep.lhs, "rhs": rep.rhs})
    return res.finish()


def check_multiplicativity(max_f: int = 30, max_n: int = 2, bs: Iterable[int] = (2, 3, 5, 7)) -> CheckResult:
    """Theta_n(b) (b'^{n+1} - sigma_b') = Theta_n(b') (b^{n+1} - sigma_b)."""
    bs = list(bs)
    res = CheckResult("multiplicativity", {"max_f": max_f, "max_n": max_n, "b": bs})
    for f in conductors(max_f):
        K = cyclotomic_field(f)
        for n in range(max_n + 1):
            for i, b in enumerate(bs):
                for bp in bs[i + 1 :]:
                    if gcd(b * bp, f) != 1:
                        continue
                    lhs = theta(n, b, K).value * (Fraction(bp) ** (n + 1) - GroupRingElement.sigma(K, bp))
                    rhs = theta(n, bp, K).value * (Fraction(b) ** (n + 1) - GroupRingElement.sigma(K, b))
                    res.record(lhs == rhs, {"f": f, "n": n, "b": b, "bprime": bp})
    return res.finish()


def check_zeta(max_f: int = 30, max_n: int = 4) -> CheckResult:
    """Parity of partial zeta values and the class-sum against depleted zeta(-n)."""
    res = CheckResult("zeta", {"max_f": max_f, "max_n": max_n})
    for f in range(1, max_f + 1):
        for n in range(max_n + 1):
            total = sum((partial_zeta_q(a, f, -n) for a in units(f)), Fraction(0))
            expected = -bernoulli_poly(n + 1, 1) / (n + 1)
            for p in sorted({p for p in range(2, f + 1) if f % p == 0 and is_prime(p)}):
                expected *= 1 - Fraction(p) ** n
            res.record(total == expected, {"f": f, "n": n, "kind": "class-sum"})
            if n >= 1 and f >= 3:
                for a in units(f):
                    par = partial_zeta_q(a, f, -n) + (-1) ** n * partial_zeta_q(f - a, f, -n)
                    res.record(par == 0, {"f": f, "n": n, "a": a, "kind": "parity"})
    return res.finish()


def check_invariants(max_l: int = 13, max_q: int = 100, max_n: int = 12) -> CheckResult:
    res = CheckResult("invariants", {"max_l": max_l, "max_q": max_q, "max_n": max_n})
    Q = cyclotomic_field(1)
    for (n, F, want) in ((1, Q, 2), (2, Q, 24), (1, cyclotomic_field(3), 6)):
        got = w_invariant(n, F)
        res.record(got == want, {"n": n, "f": F.conductor, "w": got, "expected": want})
    for l in range(3, max_l + 1):
        if not is_prime(l):
            continue
        for q in range(2, max_q + 1):
            if prime_power_base(q) is None or q % l == 0:
                continue
            for n in range(1, max_n + 1):
                k = k_of_v(l, q, n)
                brute = valuation(q**n - 1, l)
                ok = k == brute
                if (q - 1) % l == 0:
                    ok = ok and k == valuation(q - 1, l) + valuation(n, l)
                res.record(ok, {"l": l, "q": q, "n": n, "k": k, "brute": brute})
    return res.finish()


INDEX_PRIMES = (3, 5, 7, 11, 13, 23)


def check_oracles(primes: Iterable[int] = INDEX_PRIMES) -> CheckResult:
    primes = list(primes)
    res = CheckResult("oracles", {"primes": primes})
    for p in primes:
        idx = stickelberger_index(p)
        h = minus_class_number(cyclotomic_field(p)).h_minus
        res.record(idx == h, {"p": p, "index": idx, "h_minus": h})
    bt = birch_tate_order(cyclotomic_field(1)).order
    res.record(bt == 2, {"field": "Q", "k2_order": bt})
    res.info = {"bernoulli_12": bernoulli_number(12)}
    return res.finish()


def run_all(max_f: int = 30) -> list[CheckResult]:
    """Every sweep, with conductor bounds capped at max_f."""
    return [
        check_integrality(max_f=min(max_f, 40)),
        check_restriction(),
        check_congruence(max_f=min(max_f, 30)),
        check_characters(max_f=min(max_f, 30)),
        check_towers(),
        check_euler_split(max_f=min(max_f, 30)),
        check_multiplicativity(max_f=min(max_f, 30)),
        check_zeta(max_f=min(max_f, 30)),
        check_invariants(),
        check_oracles(),
    ]
