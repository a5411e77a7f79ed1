"""Exhaustive minimal-confusable-length searches.

find_collision enumerates every binary string of a given length, buckets the
strings by a 128-bit hash of the relevant deck signature (two independent
64-bit lanes: signature counts dotted with fixed odd multipliers, wrapping
mod 2^64), then confirms hash coincidences by recomputing exact signatures
scalar-wise. The confirmed witness returned is always the lexicographically
smallest pair, independent of worker count: the code space is split into
fixed contiguous ranges, per-range hash lanes are written into position in a
full array, and the tie-break happens after a global sort.

search_G / search_G_star / search_exact_D scan lengths upward and stop at
the first collision. Lengths too short to carry any depth-k slice (below
s*(k-1)+1) make every pair of strings vacuously equal at depth k; those
lengths are excluded from the scan and listed in the report notes instead of
being reported as collisions.

The per-string dynamic program is the same recurrence the deck engine uses,
vectorised over chunks of strings with numpy: accumulator matrix of shape
(batch, patterns+1), a ring of s snapshots for the gap constraint, and the
two bit values applied as masked rank-1 updates.
"""
from __future__ import annotations

import logging
import multiprocessing
import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from gapdeck.deck import (
    DEFAULT_FINGERPRINT_PRIMES,
    ExactOverflowError,
    GapParams,
    _extension_tables,
    pattern_count,
    signature,
    slice_bound,
)
from gapdeck.strings import Puncture, puncture
from gapdeck.wildcard import USetSpec, count_wildcard, enumerate_U

log = logging.getLogger("gapdeck.search")

FULL_B = "FULL_B"
EXACT_D = "EXACT_D"
EQ7_STAR = "EQ7_STAR"
WILDCARD_U = "WILDCARD_U"

DECK_KINDS = (FULL_B, EXACT_D, EQ7_STAR)

_HASH_SEED = 0x5DEC0DE5
_RANGE_BITS = 20  # fixed checkpoint/partition granularity: 2^20 codes
_CHUNK = 1 << 16
_UINT64_LIMIT = 1 << 64


@dataclass(frozen=True)
class CollisionReport:
    """Outcome of a minimal-length scan: the length found (or None), the
    confirmed witnesses there, and which lengths were certified clear."""

    n: Optional[int]
    witnesses: tuple
    scanned_lengths: tuple
    deck_kind: str
    params: object
    notes: tuple = ()

    def to_record(self) -> dict:
        def fmt(w):
            return w if isinstance(w, str) else "".join(str(b) for b in w)

        if isinstance(self.params, GapParams):
            params = {"s": self.params.s, "k": self.params.k}
        else:
            params = {"k1": self.params[0], "k2": self.params[1]}
        return {
            "n": self.n,
            "witnesses": [[fmt(x), fmt(y)] for x, y in self.witnesses],
            "scanned_lengths": list(self.scanned_lengths),
            "deck_kind": self.deck_kind,
            "params": params,
            "notes": list(self.notes),
        }


def _hash_lanes(width: int) -> np.ndarray:
    """Two lanes of fixed odd 64-bit multipliers (deterministic)."""
    rng = np.random.default_rng(_HASH_SEED)
    return rng.integers(1, 2**63, size=(2, width), dtype=np.uint64) | np.uint64(1)


def _bits_of_codes(codes: np.ndarray, n: int) -> np.ndarray:
    """(B, n) 0/1 matrix, most significant bit first (code order = lex order)."""
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    return ((codes[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.uint64)


def _dp_counts(bits: np.ndarray, s: int, k: int) -> np.ndarray:
    """Batch signature counts, shape (B, pattern_count(k)), uint64 wraparound."""
    B, n = bits.shape
    P = pattern_count(k)
    d0, s0, d1, s1 = _extension_tables(k)
    acc = np.zeros((B, P + 1), dtype=np.uint64)
    acc[:, P] = 1
    ring = [acc.copy() for _ in range(s)]
    for i in range(n):
        ready = ring[i % s]
        b = bits[:, i : i + 1]
        acc[:, d1] += ready[:, s1] * b
        acc[:, d0] += ready[:, s0] * (np.uint64(1) - b)
        ring[i % s] = acc.copy()
    return acc[:, :P]


def _lane_hashes(n: int, s: int, k: int, deck_kind: str, lo: int, hi: int):
    """Hash lanes (h1, h2) for codes lo..hi-1 at length n."""
    P = pattern_count(k)
    width = 4 * P if deck_kind == EQ7_STAR else (1 << k) if deck_kind == EXACT_D else P
    lanes = _hash_lanes(width)
    h1 = np.empty(hi - lo, dtype=np.uint64)
    h2 = np.empty(hi - lo, dtype=np.uint64)
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        codes = np.arange(start, stop, dtype=np.uint64)
        bits = _bits_of_codes(codes, n)
        if deck_kind == EQ7_STAR:
            counts = np.concatenate(
                [
                    _dp_counts(bits, s, k),
                    _dp_counts(bits[:, 1:], s, k),
                    _dp_counts(bits[:, :-1], s, k),
                    _dp_counts(bits[:, 1:-1], s, k),
                ],
                axis=1,
            )
        elif deck_kind == EXACT_D:
            counts = _dp_counts(bits, s, k)[:, (1 << k) - 2 :]
        else:
            counts = _dp_counts(bits, s, k)
        h1[start - lo : stop - lo] = (counts * lanes[0][None, :]).sum(
            axis=1, dtype=np.uint64
        )
        h2[start - lo : stop - lo] = (counts * lanes[1][None, :]).sum(
            axis=1, dtype=np.uint64
        )
    return h1, h2


def _hash_range(args):
    n, s, k, deck_kind, lo, hi = args
    h1, h2 = _lane_hashes(n, s, k, deck_kind, lo, hi)
    return lo, hi, h1, h2


def _code_to_string(code: int, n: int) -> tuple:
    return tuple((code >> (n - 1 - i)) & 1 for i in range(n))


def _confirm_key(x: tuple, params: GapParams, deck_kind: str, mode: str, primes: tuple):
    """The exact object whose equality defines a collision of this kind."""
    if deck_kind == EQ7_STAR:
        return tuple(
            signature(puncture(x, spec), params, mode, primes).counts
            for spec in (Puncture.NONE, Puncture.L, Puncture.R, Puncture.LR)
        )
    sig = signature(x, params, mode, primes)
    if deck_kind == EXACT_D:
        return sig.length_slice(params.k)
    return sig.counts


def _checkpoint_paths(checkpoint: Optional[str], n, s, k, deck_kind, lo, hi):
    logfile = os.path.join(checkpoint, "search.log")
    sidecar = os.path.join(checkpoint, f"{deck_kind}_s{s}_k{k}_n{n}_{lo}_{hi}.npz")
    return logfile, sidecar


def _load_done(checkpoint: Optional[str]) -> set:
    done = set()
    if checkpoint is None:
        return done
    logfile = os.path.join(checkpoint, "search.log")
    if os.path.exists(logfile):
        with open(logfile) as fh:
            for line in fh:
                parts = line.split()
                if len(parts) >= 2 and parts[-1] == "done":
                    done.add(tuple(parts[:-1]))
    return done


def find_collision(
    n: int,
    params: GapParams,
    deck_kind: str = FULL_B,
    workers: int = 1,
    mode: str = "exact",
    checkpoint: Optional[str] = None,
    primes: tuple = DEFAULT_FINGERPRINT_PRIMES,
) -> Optional[tuple]:
    """Lexicographically smallest confirmed confusable pair at length n, or None.

    Enumerates all 2^n strings. `checkpoint`, if given, is a directory: an
    append-only text log records each finished code range and the per-range
    hash lanes are kept in .npz sidecars, so an interrupted run resumes.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if deck_kind not in DECK_KINDS:
        raise ValueError(f"deck_kind must be one of {DECK_KINDS}, got {deck_kind!r}")
    if deck_kind == EQ7_STAR and n < 2:
        raise ValueError("EQ7_STAR needs n >= 2 (both-sides puncture)")
    if mode == "exact":
        worst = max(slice_bound(n, params.s, ell) for ell in range(1, params.k + 1))
        if worst >= _UINT64_LIMIT:
            raise ExactOverflowError(
                f"EXACT confirmation would overflow 64-bit counts at n={n}; "
                "rerun with mode='fingerprint'"
            )
    elif mode != "fingerprint":
        raise ValueError(f"mode must be 'exact' or 'fingerprint', got {mode!r}")

    total = 1 << n
    step = 1 << _RANGE_BITS
    ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    h1 = np.empty(total, dtype=np.uint64)
    h2 = np.empty(total, dtype=np.uint64)

    done = _load_done(checkpoint)
    pending = []
    for lo, hi in ranges:
        if checkpoint is not None:
            logfile, sidecar = _checkpoint_paths(checkpoint, n, params.s, params.k, deck_kind, lo, hi)
            key = (deck_kind, str(params.s), str(params.k), str(n), f"{lo}:{hi}")
            if key in done and os.path.exists(sidecar):
                data = np.load(sidecar)
                h1[lo:hi] = data["h1"]
                h2[lo:hi] = data["h2"]
                continue
        pending.append((n, params.s, params.k, deck_kind, lo, hi))

    def store(lo, hi, r1, r2):
        h1[lo:hi] = r1
        h2[lo:hi] = r2
        if checkpoint is not None:
            logfile, sidecar = _checkpoint_paths(checkpoint, n, params.s, params.k, deck_kind, lo, hi)
            np.savez(sidecar, h1=r1, h2=r2)
            with open(logfile, "a") as fh:
                fh.write(f"{deck_kind} {params.s} {params.k} {n} {lo}:{hi} done\n")
        log.debug("hashed range %d:%d of 2^%d", lo, hi, n)

    if checkpoint is not None:
        os.makedirs(checkpoint, exist_ok=True)
    if workers <= 1 or len(pending) <= 1:
        for task in pending:
            lo, hi, r1, r2 = _hash_range(task)
            store(lo, hi, r1, r2)
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            for lo, hi, r1, r2 in pool.imap(_hash_range, pending):
                store(lo, hi, r1, r2)

    order = np.lexsort((h2, h1))
    sh1, sh2 = h1[order], h2[order]
    boundary = np.empty(total, dtype=bool)
    boundary[0] = True
    boundary[1:] = (sh1[1:] != sh1[:-1]) | (sh2[1:] != sh2[:-1])
    starts = np.flatnonzero(boundary)
    ends = np.append(starts[1:], total)

    groups = []
    for a, b in zip(starts, ends):
        if b - a >= 2:
            groups.append(np.sort(order[a:b]))
    groups.sort(key=lambda g: int(g[0]))
    log.debug("n=%d: %d hash-coincident groups", n, len(groups))

    best = None
    for g in groups:
        if best is not None and int(g[0]) > best[0]:
            break
        seen: dict = {}
        for code in g:
            code = int(code)
            x = _code_to_string(code, n)
            key = _confirm_key(x, params, deck_kind, mode, primes)
            seen.setdefault(key, []).append(code)
        for members in seen.values():
            if len(members) >= 2:
                cand = (members[0], members[1])
                if best is None or cand < best:
                    best = cand
    if best is None:
        return None
    return _code_to_string(best[0], n), _code_to_string(best[1], n)


def _scan(params, n_max, deck_kind, floor, workers, mode, checkpoint, primes):
    scanned = []
    notes = []
    if floor > 1:
        notes.append(
            f"lengths 1..{floor - 1} excluded: depth-{params.k} slice is empty "
            f"there (every pair vacuously equal), first meaningful length is {floor}"
        )
    for n in range(floor, n_max + 1):
        log.info("scanning n=%d (%s, s=%d, k=%d)", n, deck_kind, params.s, params.k)
        pair = find_collision(n, params, deck_kind, workers, mode, checkpoint, primes)
        scanned.append(n)
        if pair is not None:
            return CollisionReport(
                n=n,
                witnesses=(pair,),
                scanned_lengths=tuple(scanned),
                deck_kind=deck_kind,
                params=params,
                notes=tuple(notes),
            )
    notes.append(f"no collision up to n_max={n_max}")
    return CollisionReport(
        n=None,
        witnesses=(),
        scanned_lengths=tuple(scanned),
        deck_kind=deck_kind,
        params=params,
        notes=tuple(notes),
    )


def search_G(
    params: GapParams,
    n_max: int,
    workers: int = 1,
    mode: str = "exact",
    checkpoint: Optional[str] = None,
    primes: tuple = DEFAULT_FINGERPRINT_PRIMES,
) -> CollisionReport:
    """Minimal length with two distinct strings sharing the whole depth-k deck."""
    floor = params.s * (params.k - 1) + 1
    return _scan(params, n_max, FULL_B, floor, workers, mode, checkpoint, primes)


def search_G_star(
    params: GapParams,
    n_max: int,
    workers: int = 1,
    mode: str = "exact",
    checkpoint: Optional[str] = None,
    primes: tuple = DEFAULT_FINGERPRINT_PRIMES,
) -> CollisionReport:
    """Minimal length for four-way (plain and one-bit-punctured) deck equality."""
    floor = max(params.s * (params.k - 1) + 1, 2)
    return _scan(params, n_max, EQ7_STAR, floor, workers, mode, checkpoint, primes)


def search_exact_D(
    params: GapParams,
    n_max: int,
    workers: int = 1,
    mode: str = "exact",
    checkpoint: Optional[str] = None,
    primes: tuple = DEFAULT_FINGERPRINT_PRIMES,
) -> CollisionReport:
    """Minimal length with two distinct strings sharing the exact depth-k slice."""
    floor = params.s * (params.k - 1) + 1
    return _scan(params, n_max, EXACT_D, floor, workers, mode, checkpoint, primes)


def _gamma_string(code: int, m: int) -> str:
    return "".join("Y" if (code >> (m - 1 - i)) & 1 else "X" for i in range(m))


def search_SU(k1: int, k2: Optional[int] = None, m_max: int = 16) -> CollisionReport:
    """Smallest m with two distinct Gamma^m strings agreeing on every family count.

    Pair form (k2 given): family U_1(k1) u U_2(k2), needs k1 >= k2 >= 2.
    Single-depth form (k2 None): family U_1(k1), needs k1 >= 1.
    """
    if k2 is None:
        if k1 < 1:
            raise ValueError(f"single-depth form needs k1 >= 1, got {k1}")
        family = enumerate_U(USetSpec.single(1, k1))
    else:
        family = enumerate_U(USetSpec.pair(k1, k2))  # validates k1 >= k2 >= 2
    scanned = []
    for m in range(1, m_max + 1):
        groups: dict = {}
        for code in range(1 << m):
            p = _gamma_string(code, m)
            sig = tuple(count_wildcard(w, p) for w in family)
            groups.setdefault(sig, []).append(p)
        scanned.append(m)
        pairs = [tuple(g[:2]) for g in groups.values() if len(g) >= 2]
        if pairs:
            return CollisionReport(
                n=m,
                witnesses=(min(pairs),),
                scanned_lengths=tuple(scanned),
                deck_kind=WILDCARD_U,
                params=(k1, k2),
                notes=(),
            )
    return CollisionReport(
        n=None,
        witnesses=(),
        scanned_lengths=tuple(scanned),
        deck_kind=WILDCARD_U,
        params=(k1, k2),
        notes=(f"no equivalent pair up to m_max={m_max}",),
    )
