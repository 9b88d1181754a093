"""Double description method for pointed cones ``{z : h.z >= 0 for h in rows}``.

Rows and rays are integer tuples; every ray is kept primitive.  Adjacency of
two rays uses the combinatorial test on their sets of tight rows (bit masks).
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from ._linalg import primitive


def _independent_rows(rows: Sequence[tuple[int, ...]], dim: int) -> list[int] | None:
    """Indices of ``dim`` linearly independent rows, greedily; None if rank < dim."""
    basis: list[tuple[int, list[int]]] = []  # (pivot column, row zero at other pivots)
    chosen: list[int] = []
    for idx, row in enumerate(rows):
        vec = list(row)
        for p, b in basis:
            f = vec[p]
            if f:
                g = b[p]
                vec = [g * a - f * c for a, c in zip(vec, b)]
        p = next((j for j, a in enumerate(vec) if a), None)
        if p is None:
            continue
        vec = list(primitive(vec))
        for k, (q, b) in enumerate(basis):
            f = b[p]
            if f:
                basis[k] = (q, list(primitive([vec[p] * a - f * c for a, c in zip(b, vec)])))
        basis.append((p, vec))
        chosen.append(idx)
        if len(chosen) == dim:
            return chosen
    return None


def _initial_rays(rows, chosen, dim):
    # columns of the inverse of the chosen square block, by integer Gauss-Jordan
    aug = [list(rows[c]) + [int(i == j) for j in range(dim)] for i, c in enumerate(chosen)]
    for col in range(dim):
        piv = next(i for i in range(col, dim) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        pc = prow[col]
        for i in range(dim):
            if i != col:
                f = aug[i][col]
                if f:
                    aug[i] = list(primitive([pc * a - f * b for a, b in zip(aug[i], prow)]))
    diag = [aug[i][i] for i in range(dim)]
    L = 1
    for d in diag:
        L = L * abs(d) // gcd(L, abs(d))
    rays = []
    for k in range(dim):
        ray = primitive([aug[i][dim + k] * (L // diag[i]) for i in range(dim)])
        tight = 0
        for pos, ridx in enumerate(chosen):
            if pos != k:
                tight |= 1 << ridx
        rays.append((ray, tight))
    return rays


def extreme_rays(rows: Sequence[tuple[int, ...]], dim: int) -> list[tuple[int, ...]] | None:
    """Extreme rays of the cone, or None when the rows have rank < ``dim``
    (the cone then contains a line)."""
    rows = list(dict.fromkeys(tuple(r) for r in rows))
    chosen = _independent_rows(rows, dim)
    if chosen is None:
        return None
    rays = _initial_rays(rows, chosen, dim)
    done = set(chosen)
    need = dim - 2
    for idx, h in enumerate(rows):
        if idx in done:
            continue
        bit = 1 << idx
        pos, neg, kept = [], [], []
        for ray, tight in rays:
            s = sum(a * b for a, b in zip(h, ray))
            if s > 0:
                pos.append((ray, tight, s))
                kept.append((ray, tight))
            elif s < 0:
                neg.append((ray, tight, s))
            else:
                kept.append((ray, tight | bit))
        if neg and pos:
            tights = [t for _, t in rays]
            for rp, tp, sp in pos:
                for rn, tn, sn in neg:
                    common = tp & tn
                    if bin(common).count("1") < need:
                        continue
                    hits = 0
                    for t in tights:
                        if t & common == common:
                            hits += 1
                            if hits > 2:
                                break
                    if hits > 2:
                        continue
                    new = primitive([sp * b - sn * a for a, b in zip(rp, rn)])
                    kept.append((new, common | bit))
        rays = kept
        done.add(idx)
        if not rays:
            break
    return [r for r, _ in rays]
