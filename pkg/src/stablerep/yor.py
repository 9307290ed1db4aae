"""Young's orthogonal form: real orthogonal irreducible matrices for S_n.

The basis of the representation of shape lam is the set of standard
tableaux in the fixed order produced by partitions.standard_tableaux.
For the adjacent transposition (k, k+1) the matrix acts on a tableau T
with diagonal entry 1/d and off-diagonal sqrt(1 - 1/d^2) towards the
tableau with k and k+1 swapped, where d is the axial distance
(content of k+1) - (content of k) in T.
"""

from __future__ import annotations

import hashlib
import struct
from functools import lru_cache, reduce
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .partitions import check_partition, standard_tableaux
from .permutations import (
    IDENTITY,
    Permutation,
    adjacent_word,
    element_index,
    symmetric_group,
    transposition,
)

# Full group tables are memoised only up to this level; above it they are
# rebuilt on demand to bound memory.
CACHE_MAX_LEVEL = 6

_FORMAT_MAGIC = b"YORX"
_FORMAT_VERSION = 1


def _positions(tab: tuple[tuple[int, ...], ...]) -> dict[int, tuple[int, int]]:
    return {v: (i, j) for i, row in enumerate(tab) for j, v in enumerate(row)}


@lru_cache(maxsize=None)
def yor_generators(lam: tuple[int, ...]) -> tuple[np.ndarray, ...]:
    """Matrices of the adjacent transpositions (1,2), ..., (n-1,n) for shape lam."""
    lam = check_partition(lam)
    n = sum(lam)
    tabs = standard_tableaux(lam)
    index = {t: i for i, t in enumerate(tabs)}
    d = len(tabs)
    mats = []
    for k in range(1, n):
        m = np.zeros((d, d))
        for t, j in index.items():
            pos = _positions(t)
            (r1, c1), (r2, c2) = pos[k], pos[k + 1]
            dist = (c2 - r2) - (c1 - r1)
            m[j, j] = 1.0 / dist
            if abs(dist) >= 2:
                swapped = tuple(
                    tuple(k + 1 if v == k else k if v == k + 1 else v for v in row)
                    for row in t
                )
                m[index[swapped], j] = np.sqrt(1.0 - 1.0 / dist**2)
        m.flags.writeable = False
        mats.append(m)
    return tuple(mats)


def irrep_dimension(lam: Iterable[int]) -> int:
    return len(standard_tableaux(check_partition(lam)))


def irrep_matrix(lam: Iterable[int], p: Permutation) -> np.ndarray:
    """Orthogonal matrix of p in the representation of shape lam.

    Requires p.level <= sum(lam).
    """
    lam = check_partition(lam)
    n = sum(lam)
    if p.level > n:
        raise ValueError(f"permutation of level {p.level} does not fit shape {lam}")
    gens = yor_generators(lam)
    d = irrep_dimension(lam)
    word = adjacent_word(p, n)
    return reduce(np.matmul, (gens[i - 1] for i in word), np.eye(d))


def _build_table(n: int, lam: tuple[int, ...]) -> np.ndarray:
    """Matrices of every element of S_n in symmetric_group(n) order."""
    elements = symmetric_group(n)
    index = element_index(n)
    gens = [transposition(i, i + 1) for i in range(1, n)]
    gmats = yor_generators(lam)
    d = irrep_dimension(lam)
    table = np.empty((len(elements), d, d))
    table[index[IDENTITY]] = np.eye(d)
    frontier = [IDENTITY]
    seen = {IDENTITY}
    while frontier:
        nxt = []
        for g in frontier:
            for t, tm in zip(gens, gmats):
                h = t * g
                if h not in seen:
                    seen.add(h)
                    table[index[h]] = tm @ table[index[g]]
                    nxt.append(h)
        frontier = nxt
    table.flags.writeable = False
    return table


@lru_cache(maxsize=None)
def _cached_table(n: int, lam: tuple[int, ...]) -> np.ndarray:
    return _build_table(n, lam)


def irrep_table(n: int, lam: Iterable[int]) -> np.ndarray:
    """(n!, d, d) array of all matrices of shape lam, indexed like symmetric_group(n)."""
    lam = check_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    if n <= CACHE_MAX_LEVEL:
        return _cached_table(n, lam)
    return _build_table(n, lam)


# ---------------------------------------------------------------------------
# On-disk generator cache: one file per (n, lam), header followed by the
# (n-1) generator matrices as row-major little-endian float64.


def _cache_filename(lam: tuple[int, ...]) -> str:
    n = sum(lam)
    return f"yor_n{n}_" + "-".join(map(str, lam)) + ".bin"


def write_generator_file(path: Path, lam: Iterable[int]) -> Path:
    lam = check_partition(lam)
    n = sum(lam)
    mats = yor_generators(lam)
    d = irrep_dimension(lam)
    blob = bytearray()
    blob += _FORMAT_MAGIC
    blob += struct.pack("<III", _FORMAT_VERSION, n, len(lam))
    blob += struct.pack(f"<{len(lam)}I", *lam)
    blob += struct.pack("<I", d)
    for m in mats:
        blob += np.ascontiguousarray(m, dtype="<f8").tobytes()
    path = Path(path)
    path.write_bytes(bytes(blob))
    return path


def read_generator_file(path: Path) -> tuple[tuple[int, ...], tuple[np.ndarray, ...]]:
    raw = Path(path).read_bytes()
    if raw[:4] != _FORMAT_MAGIC:
        raise ValueError(f"{path}: bad magic, not a generator cache file")
    version, n, nparts = struct.unpack_from("<III", raw, 4)
    if version != _FORMAT_VERSION:
        raise ValueError(f"{path}: unsupported cache version {version}")
    off = 16
    lam = struct.unpack_from(f"<{nparts}I", raw, off)
    off += 4 * nparts
    (d,) = struct.unpack_from("<I", raw, off)
    off += 4
    if sum(lam) != n:
        raise ValueError(f"{path}: header partition does not sum to {n}")
    mats = []
    for _ in range(max(n - 1, 0)):
        m = np.frombuffer(raw, dtype="<f8", count=d * d, offset=off).reshape(d, d)
        off += 8 * d * d
        m = m.copy()
        m.flags.writeable = False
        mats.append(m)
    if off != len(raw):
        raise ValueError(f"{path}: trailing bytes in cache file")
    return lam, tuple(mats)


def populate_cache(cache_dir: Path, n: int) -> list[Path]:
    """Write generator files for every shape of weight n. Existing files kept."""
    from .partitions import partitions_of

    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for lam in partitions_of(n):
        path = cache_dir / _cache_filename(lam)
        if not path.exists():
            write_generator_file(path, lam)
        written.append(path)
    return written


def cache_digest(cache_dir: Optional[Path]) -> Optional[str]:
    """SHA-256 over the sorted cache files; None when no cache is in use."""
    if cache_dir is None:
        return None
    cache_dir = Path(cache_dir)
    if not cache_dir.is_dir():
        return None
    h = hashlib.sha256()
    for path in sorted(cache_dir.glob("yor_*.bin")):
        h.update(path.name.encode())
        h.update(path.read_bytes())
    return h.hexdigest()
