"""Integer sets with forbidden additive patterns, and small number theory.

The constructions in this package are driven by slope sets with additive
structure removed: sets free of k-term progressions, r-sum-free sets
(no c1*m1 + c2*m2 = (c1+c2)*m3 with positive c1+c2 <= r besides m1=m2=m3),
sets avoiding the symmetric patterns

    A4 = {x-2a, x-a, x+a, x+2a}            a > 0
    A6 = {x-a-b, x-b, x-a, x+a, x+b, x+a+b}  a, b > 0, a != b

and Sidon sets mod q (all pairwise differences distinct).  Every check is
exact and exhaustive; every constructor is verified by its own checker
before returning.

Sets with a modulus store centered representatives in (-q/2, q/2]; the
additive pattern checks then run on those integers, which is the convention
that makes small-slope conditions like |m| < q/(4r) meaningful.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "IntSet",
    "PatternKind",
    "PatternReport",
    "MinkowskiResult",
    "ap",
    "sum_free",
    "A4",
    "A6",
    "SIDON_MOD_Q",
    "centered",
    "check_pattern",
    "behrend_set",
    "greedy_pattern_set",
    "restricted_set",
    "minkowski_alpha",
    "is_prime",
    "largest_prime_leq",
]


def centered(x: int, q: int) -> int:
    """Representative of x mod q in the interval (-q/2, q/2]."""
    t = x % q
    if 2 * t > q:
        t -= q
    return t


@dataclass(frozen=True)
class IntSet:
    """A finite set of integers, optionally living in Z_q.

    elements are stored sorted and distinct; with a modulus they are the
    centered representatives.
    """

    elements: tuple
    modulus: Optional[int] = None

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        if self.modulus is not None:
            q = self.modulus
            if q < 1:
                raise ValueError("modulus must be positive")
            cent = sorted({centered(x, q) for x in self.elements})
            if len(cent) != len(elems):
                raise ValueError("elements collide mod q")
            elems = tuple(cent)
        object.__setattr__(self, "elements", elems)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in set(self.elements)

    def to_text(self) -> str:
        lines = []
        if self.modulus is not None:
            lines.append(f"mod={self.modulus}")
        lines.extend(str(x) for x in self.elements)
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text) -> "IntSet":
        if hasattr(text, "read"):
            text = text.read()
        modulus = None
        elems = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("mod="):
                modulus = int(line[4:])
            else:
                elems.append(int(line))
        return IntSet(tuple(elems), modulus)


@dataclass(frozen=True)
class PatternKind:
    name: str
    param: Optional[int] = None

    def __str__(self):
        return self.name if self.param is None else f"{self.name}:{self.param}"


def ap(k: int) -> PatternKind:
    """k-term arithmetic progression pattern, k >= 3."""
    if k < 3:
        raise ValueError("AP pattern needs k >= 3")
    return PatternKind("ap", k)


def sum_free(r: int) -> PatternKind:
    """r-sum-free violation pattern, r >= 2."""
    if r < 2:
        raise ValueError("sum-free pattern needs r >= 2")
    return PatternKind("sumfree", r)


A4 = PatternKind("a4")
A6 = PatternKind("a6")
SIDON_MOD_Q = PatternKind("sidon_mod_q")


@dataclass(frozen=True)
class PatternReport:
    """ok means the set is free of the pattern; witness is the violation."""

    ok: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def check_pattern(s: IntSet, kind: PatternKind) -> PatternReport:
    """Exhaustive check that s avoids the given pattern.

    Witness shapes: AP_k -> the k terms; SumFree -> (m1, m2, m3, c1, c2);
    A4 -> (x, a); A6 -> (x, a, b) with a < b; Sidon -> (a, b, c, d) with
    a - b = c - d mod q.
    """
    vals = s.elements
    members = set(vals)
    if kind.name == "ap":
        k = kind.param
        for a in vals:
            for b in vals:
                if b <= a:
                    continue
                d = b - a
                run = [a, b]
                x = b
                while len(run) < k:
                    x += d
                    if x not in members:
                        break
                    run.append(x)
                if len(run) == k:
                    return PatternReport(False, tuple(run))
        return PatternReport(True)
    if kind.name == "sumfree":
        r = kind.param
        for c1 in range(1, r):
            for c2 in range(1, r - c1 + 1):
                c = c1 + c2
                for m1 in vals:
                    for m2 in vals:
                        if m1 == m2:
                            continue
                        num = c1 * m1 + c2 * m2
                        if num % c == 0 and num // c in members:
                            return PatternReport(False, (m1, m2, num // c, c1, c2))
        return PatternReport(True)
    if kind.name == "a4":
        for u in vals:
            for v in vals:
                if v <= u or (v - u) % 4 != 0:
                    continue
                a = (v - u) // 4
                x = (u + v) // 2
                if x - a in members and x + a in members:
                    return PatternReport(False, (x, a))
        return PatternReport(True)
    if kind.name == "a6":
        for u in vals:
            for v in vals:
                if v <= u or (v - u) % 2 != 0:
                    continue
                a = (v - u) // 2
                x = (u + v) // 2
                for w in vals:
                    if w <= x or w == v:
                        continue
                    b = w - x
                    if b == a:
                        continue
                    if (
                        x - b in members
                        and x - a - b in members
                        and x + a + b in members
                    ):
                        return PatternReport(False, (x, min(a, b), max(a, b)))
        return PatternReport(True)
    if kind.name == "sidon_mod_q":
        if s.modulus is None:
            raise ValueError("Sidon check needs a modulus")
        q = s.modulus
        diffs: dict = {}
        for a in vals:
            for b in vals:
                if a == b:
                    continue
                d = (a - b) % q
                if d in diffs:
                    c, e = diffs[d]
                    return PatternReport(False, (a, b, c, e))
                diffs[d] = (a, b)
        return PatternReport(True)
    raise ValueError(f"unknown pattern kind {kind.name!r}")


def _admits(sorted_vals: list, members: set, x: int, kind: PatternKind) -> bool:
    # incremental admission for a candidate x larger than every member
    if kind.name == "ap":
        k = kind.param
        for m in sorted_vals:
            # x can only be the last term of a new progression
            d = x - m
            y = m
            for _ in range(k - 2):
                y -= d
                if y not in members:
                    break
            else:
                return False
        return True
    if kind.name == "sumfree":
        r = kind.param
        for c1 in range(1, r):
            for c2 in range(1, r - c1 + 1):
                c = c1 + c2
                for m1 in sorted_vals:
                    num = c1 * m1 + c2 * x
                    if num % c == 0 and num // c in members:
                        return False
        return True
    if kind.name == "a4":
        # x plays the largest role x0 + 2a; y = x0 + a determines the rest
        for y in sorted_vals:
            a = x - y
            if a <= 0:
                continue
            if 2 * y - x - a in members and 2 * y - x - 2 * a in members:
                return False
        return True
    if kind.name == "a6":
        # x plays x0 + a + b; (u, v) = (x0 + a, x0 + b)
        for u in sorted_vals:
            for v in sorted_vals:
                if v <= u:
                    continue
                x0 = u + v - x
                a = u - x0
                b = v - x0
                if a <= 0 or b <= 0 or a == b:
                    continue
                if (
                    x0 - a in members
                    and x0 - b in members
                    and x0 - a - b in members
                ):
                    return False
        return True
    raise ValueError(f"no incremental rule for {kind.name!r}")


def behrend_set(q: int, r: int) -> IntSet:
    """An r-sum-free subset of {0..q}, as large as the two recipes give.

    Two candidates are built and the larger verified one is returned: a
    digit-shell set (digits below r in a base large enough that coefficient
    sums up to r never carry, restricted to a fixed sum-of-squares shell)
    and the deterministic greedy set.  Both are run through check_pattern
    before being returned; the construction is never trusted blind.
    """
    if q < 0:
        raise ValueError("q must be non-negative")
    if r < 2:
        raise ValueError("r must be >= 2")
    greedy = _greedy_sum_free(q, r)
    shell = _digit_shell(q, r)
    best = greedy
    if shell is not None and len(shell) > len(best):
        if check_pattern(IntSet(tuple(shell)), sum_free(r)).ok:
            best = shell
    out = IntSet(tuple(best))
    rep = check_pattern(out, sum_free(r))
    if not rep.ok:
        raise AssertionError(f"sum-free construction failed its checker: {rep.witness}")
    return out


def _greedy_sum_free(q: int, r: int) -> list:
    vals: list = []
    members: set = set()
    kind = sum_free(r)
    for x in range(q + 1):
        if _admits(vals, members, x, kind):
            vals.append(x)
            members.add(x)
    return vals


def _digit_shell(q: int, r: int, cap: int = 2_000_000) -> Optional[list]:
    if q < 1:
        return None
    base = max(2 * r, r * (r - 1) + 1)
    k = 1
    while base ** k <= q:
        k += 1
    if r ** k > cap:
        return None
    shells: dict = {}
    for digits in itertools.product(range(r), repeat=k):
        val = 0
        for d in digits:
            val = val * base + d
        if val > q:
            continue
        ss = sum(d * d for d in digits)
        shells.setdefault(ss, []).append(val)
    if not shells:
        return None
    best = max(shells.items(), key=lambda kv: (len(kv[1]), -kv[0]))
    return sorted(best[1])


def greedy_pattern_set(q: int, kinds: Iterable[PatternKind]) -> IntSet:
    """Greedy scan of 0..q keeping every requested pattern absent.

    Without a Sidon kind the scan admits each candidate through incremental
    rules and the result is a plain integer set on {0..q}.  With SIDON_MOD_Q
    among the kinds the result lives in Z_q and every admission is a full
    re-check on centered representatives.
    """
    kinds = list(kinds)
    if q < 0:
        raise ValueError("q must be non-negative")
    modular = any(k.name == "sidon_mod_q" for k in kinds)
    if not modular:
        vals: list = []
        members: set = set()
        for x in range(q + 1):
            if all(_admits(vals, members, x, k) for k in kinds):
                vals.append(x)
                members.add(x)
        out = IntSet(tuple(vals))
    else:
        chosen: list = []
        for x in range(q):
            trial = IntSet(tuple(chosen + [x]), modulus=q)
            if all(check_pattern(trial, k).ok for k in kinds):
                chosen.append(x)
        out = IntSet(tuple(chosen), modulus=q)
    for k in kinds:
        rep = check_pattern(out, k)
        if not rep.ok:
            raise AssertionError(f"greedy set failed {k}: {rep.witness}")
    return out


def restricted_set(q: int, seed: int) -> IntSet:
    """A random subset of {0..q} that is AP3-free, A4-free and A6-free.

    Stage 1 takes the largest available AP3-free set M; stage 2 keeps each
    element with probability |M|^(-2/5)/2; stage 3 deletes the largest
    element of every surviving A4 or A6 instance.  AP3-freeness is inherited
    by subsets, so the output passes all three checks, which are re-run
    before returning.
    """
    if q < 0:
        raise ValueError("q must be non-negative")
    stage1 = behrend_set(q, 2)
    m = len(stage1)
    rng = random.Random(seed)
    if m == 0:
        return IntSet(())
    p = 0.5 * m ** (-0.4)
    vals = sorted(x for x in stage1.elements if rng.random() < p)
    while True:
        s = IntSet(tuple(vals))
        rep4 = check_pattern(s, A4)
        if not rep4.ok:
            x, a = rep4.witness
            vals.remove(x + 2 * a)
            continue
        rep6 = check_pattern(s, A6)
        if not rep6.ok:
            x, a, b = rep6.witness
            vals.remove(x + a + b)
            continue
        break
    out = IntSet(tuple(vals))
    for kind in (ap(3), A4, A6):
        rep = check_pattern(out, kind)
        if not rep.ok:
            raise AssertionError(f"restricted set failed {kind}: {rep.witness}")
    return out


@dataclass(frozen=True)
class MinkowskiResult:
    alpha: int
    residues: tuple
    bound: float


def minkowski_alpha(q: int, vec: Sequence[int]) -> MinkowskiResult:
    """Smallest alpha in (0, q) with every centered alpha*n_i small.

    Guarantees |r_i| <= q^(1 - 1/d) where d = len(vec); the comparison is
    done exactly as |r_i|^d <= q^(d-1).  Existence is a pigeonhole fact for
    prime q, and the scan is plain brute force over alpha.
    """
    d = len(vec)
    if d < 1:
        raise ValueError("vector must be nonempty")
    if not is_prime(q):
        raise ValueError("q must be prime")
    limit = q ** (d - 1)
    for alpha in range(1, q):
        residues = [centered(alpha * n, q) for n in vec]
        if all(abs(t) ** d <= limit for t in residues):
            return MinkowskiResult(alpha, tuple(residues), q ** (1 - 1 / d))
    raise RuntimeError("no alpha met the bound; q is not prime?")


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit integers."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def largest_prime_leq(x: int) -> int:
    if x < 2:
        raise ValueError("no prime below 2")
    candidate = x
    while not is_prime(candidate):
        candidate -= 1
    return candidate
