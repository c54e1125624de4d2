"""Pareto-dominance primitives, reference fronts, and quality metrics.

All fronts are (n, 2) float arrays of objective vectors under minimization.
Filtering retains duplicates (identical vectors do not dominate each other)
and preserves input order.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from scipy.spatial.distance import cdist

from .errors import InvalidInputError, NotFoundError
from .problems import fonseca_fleming_problem, kursawe_problem

_DATA_DIR = Path(__file__).parent / "data"
_INV_SQRT2 = 1.0 / np.sqrt(2.0)


def dominates(a: np.ndarray, b: np.ndarray) -> bool:
    """True iff ``a`` is no worse than ``b`` everywhere and better somewhere."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return bool(np.all(a <= b) and np.any(a < b))


def nondominated_mask(points: np.ndarray) -> np.ndarray:
    """Boolean mask of the non-dominated rows of an (n, 2) array.

    Sort-and-sweep, O(n log n): after ordering by (f1, f2, index), a point is
    dominated iff some point with strictly smaller f1 has f2 <= its own, or a
    point with equal f1 has strictly smaller f2. Exact duplicates survive.
    """
    points = np.asarray(points, dtype=float)
    n = len(points)
    if n == 0:
        return np.zeros(0, dtype=bool)
    if points.ndim != 2 or points.shape[1] != 2:
        raise InvalidInputError(f"expected an (n, 2) array, got shape {points.shape}")
    order = np.lexsort((np.arange(n), points[:, 1], points[:, 0]))
    f1 = points[order, 0]
    f2 = points[order, 1]
    new_group = np.empty(n, dtype=bool)
    new_group[0] = True
    new_group[1:] = f1[1:] > f1[:-1]
    group_id = np.cumsum(new_group) - 1
    group_starts = np.flatnonzero(new_group)
    group_min_f2 = f2[group_starts]  # f2 ascending inside a group
    min_f2_before = np.empty(len(group_starts))
    min_f2_before[0] = np.inf
    if len(group_starts) > 1:
        np.minimum.accumulate(group_min_f2[:-1], out=min_f2_before[1:])
    dominated = (min_f2_before[group_id] <= f2) | (f2 > group_min_f2[group_id])
    mask = np.ones(n, dtype=bool)
    mask[order] = ~dominated
    return mask


def nondominated_filter(points: np.ndarray) -> np.ndarray:
    """The rows of ``points`` not dominated by any other row, input order kept."""
    points = np.asarray(points, dtype=float)
    if len(points) == 0:
        return points.reshape(0, 2)
    return points[nondominated_mask(points)]


def igd(estimate: np.ndarray, reference: np.ndarray) -> float:
    """Inverted generational distance: mean distance from each reference
    point to its nearest estimate point. Lower is better, 0 is exact."""
    estimate = np.atleast_2d(np.asarray(estimate, dtype=float))
    reference = np.atleast_2d(np.asarray(reference, dtype=float))
    if estimate.size == 0 or reference.size == 0:
        raise InvalidInputError("igd requires non-empty estimate and reference fronts")
    return float(cdist(reference, estimate).min(axis=1).mean())


def hypervolume_2d(front: np.ndarray, ref_point: np.ndarray) -> float:
    """Area dominated by ``front`` and bounded by ``ref_point``.

    Every front point must be strictly below the reference point in both
    objectives. Sorts on f1 and sums rectangular strips; dominated or
    duplicate members contribute nothing extra.
    """
    front = np.asarray(front, dtype=float).reshape(-1, 2)
    r1, r2 = float(ref_point[0]), float(ref_point[1])
    if len(front) == 0:
        return 0.0
    offenders = np.flatnonzero(~((front[:, 0] < r1) & (front[:, 1] < r2)))
    if len(offenders) > 0:
        i = int(offenders[0])
        raise InvalidInputError(
            f"front point {front[i].tolist()} does not strictly dominate "
            f"the reference point ({r1}, {r2})"
        )
    order = np.argsort(front[:, 0], kind="stable")
    f1 = front[order, 0]
    f2 = front[order, 1]
    best_f2 = np.minimum.accumulate(f2)
    right_edges = np.append(f1[1:], r1)
    return float(np.sum((right_edges - f1) * (r2 - best_f2)))


def _kursawe_grid_front(resolution: int) -> np.ndarray:
    """Non-dominated front of a resolution^3 grid over the Kursawe box.

    Each x1-slice is prefiltered before the global filter so that peak
    memory stays at one slice; a slice-dominated point can never be
    globally non-dominated.
    """
    problem = kursawe_problem()
    g = np.linspace(problem.lower[0], problem.upper[0], resolution)
    g2, g3 = np.meshgrid(g, g, indexing="ij")
    cols23 = np.stack([g2.ravel(), g3.ravel()], axis=1)
    survivors = []
    for x1 in g:
        chunk = np.column_stack([np.full(len(cols23), x1), cols23])
        values = np.stack([problem.f1(chunk), problem.f2(chunk)], axis=1)
        survivors.append(values[nondominated_mask(values)])
    candidates = np.concatenate(survivors)
    front = candidates[nondominated_mask(candidates)]
    return front[np.argsort(front[:, 0], kind="stable")]


def reference_front(name: str, resolution: int) -> np.ndarray:
    """Ground-truth front for a registered problem, sorted ascending by f1.

    convex: the parametric curve (50 t^2, 50 (1-t)^2), t equally spaced on
    [0, 1] (image of the minimizer family (5t, 5t)). fonseca: image of
    x1 = x2 = t for t equally spaced on [-1/sqrt(2), 1/sqrt(2)]. kursawe:
    non-dominated filter of a dense resolution^3 grid; the shipped cache
    covers resolution 201, other resolutions are recomputed on the fly.
    """
    if resolution < 2:
        raise InvalidInputError(f"resolution must be >= 2, got {resolution}")
    if name == "convex":
        t = np.linspace(0.0, 1.0, resolution)
        return np.stack([50.0 * t**2, 50.0 * (1.0 - t) ** 2], axis=1)
    if name == "fonseca":
        t = np.linspace(-_INV_SQRT2, _INV_SQRT2, resolution)
        pts = np.stack([t, t], axis=1)
        problem = fonseca_fleming_problem()
        front = np.stack([problem.f1(pts), problem.f2(pts)], axis=1)
        return front[np.argsort(front[:, 0], kind="stable")]
    if name == "kursawe":
        cache = _DATA_DIR / f"kursawe_front_{resolution}.csv"
        if cache.is_file():
            return read_front_csv(cache)
        return _kursawe_grid_front(resolution)
    raise NotFoundError(
        f"no reference front for '{name}'; available: convex, fonseca, kursawe"
    )


def _format_value(x: float) -> str:
    # shortest decimal that round-trips exactly; integral values lose the dot
    return np.format_float_positional(x, unique=True, trim="-")


def write_front_csv(points: np.ndarray, path: str | Path) -> None:
    """Write a front as CSV: header ``f1,f2``, rows sorted ascending by f1,
    values in full round-trip precision."""
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(points) > 0:
        points = points[np.argsort(points[:, 0], kind="stable")]
    lines = ["f1,f2"]
    lines += [f"{_format_value(p[0])},{_format_value(p[1])}" for p in points]
    Path(path).write_text("\n".join(lines) + "\n")


def read_front_csv(path: str | Path) -> np.ndarray:
    """Read a front written by :func:`write_front_csv`."""
    text = Path(path).read_text().strip().splitlines()
    if not text or text[0].strip() != "f1,f2":
        raise InvalidInputError(f"{path}: expected header 'f1,f2'")
    rows = [tuple(float(v) for v in line.split(",")) for line in text[1:] if line.strip()]
    return np.array(rows, dtype=float).reshape(-1, 2)
