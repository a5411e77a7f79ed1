"""Gapped-deck engine: subsequence counting, signatures, equality relations.

The s-gapped deck of depth k of a binary string x is the multiset of all
nonempty subsequences of length <= k whose chosen indices are pairwise at
least s apart. A DeckSignature is its faithful stand-in: the vector of
occurrence counts of every nonempty binary pattern of length <= k, ordered by
length then lexicographically. Signatures come in EXACT mode (integer counts,
refused a priori when counts could exceed 64 bits) and FINGERPRINT mode
(counts reduced modulo a fixed list of large primes).

Counting works by a single left-to-right pass: when position i (bit b) is
consumed, every pattern ending in b absorbs the count of its length-(l-1)
prefix as of position i-s (an s-deep lag buffer of accumulator snapshots
enforces the gap), and the length-1 pattern (b) absorbs 1.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

import numpy as np

from gapdeck.strings import Puncture, puncture

# The three largest primes below 2^62; two residues always sum below 2^63,
# so modular accumulation is safe in int64.
DEFAULT_FINGERPRINT_PRIMES = (
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
)

_UINT64_LIMIT = 1 << 64
_INT64_SAFE = 1 << 63


class GapParams(NamedTuple):
    """Minimum index gap s >= 1 and deck depth k >= 1 (s=1 is the classical deck)."""

    s: int
    k: int


class ExactOverflowError(OverflowError):
    """EXACT mode refused: counts could exceed 64 bits; use FINGERPRINT mode."""


def _check_params(params: GapParams) -> GapParams:
    s, k = params
    if s < 1:
        raise ValueError(f"gap s must be >= 1, got {s}")
    if k < 1:
        raise ValueError(f"depth k must be >= 1, got {k}")
    return GapParams(s, k)


def pattern_count(k: int) -> int:
    """Number of nonempty binary patterns of length <= k."""
    return (1 << (k + 1)) - 2


def pattern_index(w: tuple) -> int:
    """Position of pattern w in the canonical (length, then lex) ordering."""
    v = 0
    for b in w:
        v = (v << 1) | b
    return (1 << len(w)) - 2 + v


def patterns_upto(k: int) -> list:
    """All nonempty binary patterns of length <= k in canonical order."""
    out = []
    for ell in range(1, k + 1):
        for v in range(1 << ell):
            out.append(tuple((v >> (ell - 1 - j)) & 1 for j in range(ell)))
    return out


def slice_bound(n: int, s: int, ell: int) -> int:
    """C(n - (ell-1)(s-1), ell): total gapped index tuples of length ell."""
    top = n - (ell - 1) * (s - 1)
    return comb(top, ell) if top >= ell else 0


def _extension_tables(k: int):
    """Index arrays for the DP: per last-bit b, destination patterns and prefixes.

    Prefix index P (one past the real patterns) stands for the empty prefix,
    whose running count is pinned at 1.
    """
    P = pattern_count(k)
    dst = {0: [], 1: []}
    src = {0: [], 1: []}
    for ell in range(1, k + 1):
        for v in range(1 << ell):
            b = v & 1
            dst[b].append((1 << ell) - 2 + v)
            src[b].append(((1 << (ell - 1)) - 2 + (v >> 1)) if ell > 1 else P)
    return (
        np.asarray(dst[0], dtype=np.intp),
        np.asarray(src[0], dtype=np.intp),
        np.asarray(dst[1], dtype=np.intp),
        np.asarray(src[1], dtype=np.intp),
    )


@dataclass(frozen=True)
class DeckSignature:
    """Per-pattern multiplicity vector for B^(k), in canonical pattern order.

    In EXACT mode counts is a tuple of ints; in FINGERPRINT mode a tuple of
    residue tuples, one residue per prime in primes.
    """

    params: GapParams
    mode: str  # "exact" | "fingerprint"
    source_length: int
    counts: tuple
    primes: tuple = ()

    def length_slice(self, ell: int) -> tuple:
        """Counts of all patterns of length exactly ell, in lex order."""
        if not 1 <= ell <= self.params.k:
            raise ValueError(f"slice length {ell} outside 1..{self.params.k}")
        lo = (1 << ell) - 2
        return self.counts[lo: lo + (1 << ell)]

    def to_record(self) -> dict:
        """JSON-compatible serialization (pattern order is part of the format)."""
        rec = {
            "s": self.params.s,
            "k": self.params.k,
            "mode": self.mode,
            "source_length": self.source_length,
            "counts": [list(c) if isinstance(c, tuple) else c for c in self.counts],
        }
        if self.mode == "fingerprint":
            rec["primes"] = list(self.primes)
        return rec


def count_gapped(w: tuple, x: tuple, s: int) -> int:
    """Occurrences of pattern w in x with successive indices >= s apart.

    Prefix-sum dynamic program, O(|x|*|w|); exact integer arithmetic.
    """
    if len(w) == 0:
        raise ValueError("empty patterns are excluded from decks")
    if s < 1:
        raise ValueError(f"gap s must be >= 1, got {s}")
    L = len(w)
    total = [1] + [0] * L  # total[j] = matches of w[:j] seen so far; [0] is the empty prefix
    init = tuple(total)
    ring: deque = deque()  # snapshots of total after each of the last s positions
    for b in x:
        ready = ring[0] if len(ring) == s else init
        for j in range(L, 0, -1):
            if w[j - 1] == b:
                total[j] += ready[j - 1]
        ring.append(tuple(total))
        if len(ring) > s:
            ring.popleft()
    return total[L]


def _exact_refusal_bound(n: int, k: int) -> int:
    """A-priori per-count bound used for the EXACT-mode 64-bit refusal check."""
    return max(comb(n, ell) for ell in range(1, k + 1))


def _run_pass_int(x: tuple, s: int, k: int) -> list:
    """Python-int DP pass (unbounded precision). Returns the raw count list."""
    P = pattern_count(k)
    d0, s0, d1, s1 = _extension_tables(k)
    tables = ((d0.tolist(), s0.tolist()), (d1.tolist(), s1.tolist()))
    acc = [0] * P + [1]  # sentinel: empty prefix count
    zeros = tuple(acc)
    ring: deque = deque()
    for b in x:
        ready = ring[0] if len(ring) == s else zeros
        dst, src = tables[b]
        for g, pg in zip(dst, src):
            acc[g] += ready[pg]
        ring.append(tuple(acc))
        if len(ring) > s:
            ring.popleft()
    return acc[:P]


def _run_pass_int64(x: tuple, s: int, k: int) -> np.ndarray:
    """Vectorized DP pass; only valid when every count fits in int64."""
    P = pattern_count(k)
    d0, s0, d1, s1 = _extension_tables(k)
    tables = ((d0, s0), (d1, s1))
    acc = np.zeros(P + 1, dtype=np.int64)
    acc[P] = 1
    zeros = acc.copy()
    ring: deque = deque()
    for b in x:
        ready = ring[0] if len(ring) == s else zeros
        dst, src = tables[b]
        acc[dst] += ready[src]
        ring.append(acc.copy())
        if len(ring) > s:
            ring.popleft()
    return acc[:P]


def _run_pass_mod(x: tuple, s: int, k: int, primes: tuple) -> np.ndarray:
    """Vectorized DP pass with counts reduced modulo each prime (rows)."""
    P = pattern_count(k)
    d0, s0, d1, s1 = _extension_tables(k)
    tables = ((d0, s0), (d1, s1))
    m = len(primes)
    mods = np.asarray(primes, dtype=np.int64).reshape(m, 1)
    acc = np.zeros((m, P + 1), dtype=np.int64)
    acc[:, P] = 1
    zeros = acc.copy()
    ring: deque = deque()
    for b in x:
        ready = ring[0] if len(ring) == s else zeros
        dst, src = tables[b]
        acc[:, dst] += ready[:, src]
        acc %= mods
        ring.append(acc.copy())
        if len(ring) > s:
            ring.popleft()
    return acc[:, :P]


def signature(
    x: tuple,
    params: GapParams,
    mode: str = "exact",
    primes: tuple = DEFAULT_FINGERPRINT_PRIMES,
) -> DeckSignature:
    """Full deck signature of x under (s, k), in EXACT or FINGERPRINT mode.

    EXACT mode is refused with ExactOverflowError when the a-priori count
    bound C(n, ell) reaches 2^64 for some ell <= k; callers should then
    switch to FINGERPRINT mode.
    """
    s, k = _check_params(params)
    n = len(x)
    if mode == "exact":
        if _exact_refusal_bound(n, k) >= _UINT64_LIMIT:
            raise ExactOverflowError(
                f"counts for n={n}, k={k} may exceed 64 bits; use fingerprint mode"
            )
        if max(slice_bound(n, s, ell) for ell in range(1, k + 1)) < _INT64_SAFE:
            counts = tuple(int(c) for c in _run_pass_int64(x, s, k))
        else:
            counts = tuple(_run_pass_int(x, s, k))
        return DeckSignature(GapParams(s, k), "exact", n, counts)
    if mode == "fingerprint":
        if not primes:
            raise ValueError("fingerprint mode needs at least one prime")
        res = _run_pass_mod(x, s, k, tuple(primes))
        counts = tuple(tuple(int(r) for r in res[:, g]) for g in range(res.shape[1]))
        return DeckSignature(GapParams(s, k), "fingerprint", n, counts, tuple(primes))
    raise ValueError(f"unknown signature mode {mode!r}")


def punctured_signature(
    x: tuple,
    params: GapParams,
    spec: Puncture,
    mode: str = "exact",
    primes: tuple = DEFAULT_FINGERPRINT_PRIMES,
) -> DeckSignature:
    """Signature of x with the requested end bits removed first."""
    return signature(puncture(x, spec), params, mode, primes)


def deck_equal(x: tuple, y: tuple, params: GapParams, mode: str = "exact") -> bool:
    """Whether x and y have identical gapped decks B^(k) under (s, k).

    Unequal lengths are compared honestly through their count vectors (the
    length-1 totals then differ, so the result is false) — no length
    short-circuit.
    """
    sx = signature(x, params, mode)
    sy = signature(y, params, mode)
    return sx.counts == sy.counts


def exact_deck_equal(x: tuple, y: tuple, params: GapParams, mode: str = "exact") -> bool:
    """Whether only the length-exactly-k slices (the exact decks D^(k)) agree."""
    _check_params(params)
    sx = signature(x, params, mode)
    sy = signature(y, params, mode)
    return sx.length_slice(params.k) == sy.length_slice(params.k)


@dataclass(frozen=True)
class Eq7Report:
    """Four-way deck-equality report: plain plus LR/L/R punctured decks."""

    plain_equal: bool
    lr_equal: bool
    l_equal: bool
    r_equal: bool
    params: GapParams
    mode: str = "exact"

    @property
    def all_equal(self) -> bool:
        return self.plain_equal and self.lr_equal and self.l_equal and self.r_equal

    def to_record(self) -> dict:
        return {
            "plain_equal": self.plain_equal,
            "lr_equal": self.lr_equal,
            "l_equal": self.l_equal,
            "r_equal": self.r_equal,
            "s": self.params.s,
            "k": self.params.k,
            "mode": self.mode,
            "all_equal": self.all_equal,
        }


def verify_eq7(x: tuple, y: tuple, params: GapParams, mode: str = "exact") -> Eq7Report:
    """Check the four-way condition: decks equal before and after every puncture."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise ValueError("need length >= 2 so both ends can be punctured")

    def eq(spec: Puncture) -> bool:
        a = punctured_signature(x, params, spec, mode)
        b = punctured_signature(y, params, spec, mode)
        return a.counts == b.counts

    return Eq7Report(
        plain_equal=eq(Puncture.NONE),
        lr_equal=eq(Puncture.LR),
        l_equal=eq(Puncture.L),
        r_equal=eq(Puncture.R),
        params=_check_params(params),
        mode=mode,
    )


def enumerate_deck(x: tuple, params: GapParams) -> list:
    """Nonzero (pattern, multiplicity) entries of the exact signature, in order.

    Display/debug helper; refuses absurd pattern spaces (> 10^6 patterns).
    """
    s, k = _check_params(params)
    if pattern_count(k) > 10**6:
        raise ValueError(f"k={k} would enumerate {pattern_count(k)} patterns; refusing")
    sig = signature(x, params, "exact")
    pats = patterns_upto(k)
    return [(w, c) for w, c in zip(pats, sig.counts) if c != 0]


def fingerprint(sig: DeckSignature, primes: tuple = DEFAULT_FINGERPRINT_PRIMES) -> DeckSignature:
    """Reduce an EXACT signature modulo each prime (deterministic homomorphism)."""
    if sig.mode != "exact":
        raise ValueError("fingerprint expects an EXACT-mode signature")
    if not primes:
        raise ValueError("need at least one prime")
    counts = tuple(tuple(c % p for p in primes) for c in sig.counts)
    return DeckSignature(sig.params, "fingerprint", sig.source_length, counts, tuple(primes))
