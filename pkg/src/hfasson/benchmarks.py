"""The 23 classical box-bounded benchmark objectives.

Every evaluator works on the last axis of its input, so a single code path
serves both one point (shape ``(d,)``) and a population batch (shape
``(n, d)``).  Functions f1..f13 scale to any dimension; f14..f23 are tied to
the dimensions their coefficient tables impose.  f7 is the only stochastic
objective (an additive uniform noise term drawn from the caller's RNG).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

__all__ = [
    "BenchmarkFunction",
    "CoefficientTable",
    "DimensionError",
    "BoundsError",
    "COEFFICIENTS",
    "SCALABLE_DIMS",
    "catalog",
    "get_function",
    "evaluate",
    "bounds_of",
    "catalog_json",
]

# Dimensions the experiment harness sweeps for scalable functions.
SCALABLE_DIMS = (30, 50, 100)


class DimensionError(ValueError):
    """Input dimension is not supported by the function."""


class BoundsError(ValueError):
    """A coordinate lies outside the function's box bounds."""


# ---------------------------------------------------------------------------
# Coefficient tables for f14, f15, f19-f23 (canonical published constants).
# ---------------------------------------------------------------------------

_pts = np.array([-32.0, -16.0, 0.0, 16.0, 32.0])
_FOX_A = np.stack([np.tile(_pts, 5), np.repeat(_pts, 5)])  # (2, 25)

_KOWALIK_A = np.array([0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                       0.0456, 0.0342, 0.0323, 0.0235, 0.0246])
_KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])

_H3_A = np.array([[3.0, 10.0, 30.0],
                  [0.1, 10.0, 35.0],
                  [3.0, 10.0, 30.0],
                  [0.1, 10.0, 35.0]])
_H3_C = np.array([1.0, 1.2, 3.0, 3.2])
_H3_P = 1e-4 * np.array([[3689.0, 1170.0, 2673.0],
                         [4699.0, 4387.0, 7470.0],
                         [1091.0, 8732.0, 5547.0],
                         [381.0, 5743.0, 8828.0]])

_H6_A = np.array([[10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
                  [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
                  [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
                  [17.0, 8.0, 0.05, 10.0, 0.1, 14.0]])
_H6_C = np.array([1.0, 1.2, 3.0, 3.2])
_H6_P = 1e-4 * np.array([[1312.0, 1696.0, 5569.0, 124.0, 8283.0, 5886.0],
                         [2329.0, 4135.0, 8307.0, 3736.0, 1004.0, 9991.0],
                         [2348.0, 1451.0, 3522.0, 2883.0, 3047.0, 6650.0],
                         [4047.0, 8828.0, 8732.0, 5743.0, 1091.0, 381.0]])

_SHEKEL_A = np.array([[4.0, 4.0, 4.0, 4.0],
                      [1.0, 1.0, 1.0, 1.0],
                      [8.0, 8.0, 8.0, 8.0],
                      [6.0, 6.0, 6.0, 6.0],
                      [3.0, 7.0, 3.0, 7.0],
                      [2.0, 9.0, 2.0, 9.0],
                      [5.0, 5.0, 3.0, 3.0],
                      [8.0, 1.0, 8.0, 1.0],
                      [6.0, 2.0, 6.0, 2.0],
                      [7.0, 3.6, 7.0, 3.6]])
_SHEKEL_C = 0.1 * np.array([1.0, 2.0, 2.0, 4.0, 4.0, 6.0, 3.0, 7.0, 5.0, 5.0])

for _arr in (_FOX_A, _KOWALIK_A, _KOWALIK_B, _H3_A, _H3_C, _H3_P,
             _H6_A, _H6_C, _H6_P, _SHEKEL_A, _SHEKEL_C):
    _arr.setflags(write=False)


@dataclass(frozen=True)
class CoefficientTable:
    """Constant arrays backing one of the table-driven objectives."""

    function_id: int
    matrix_a: Optional[np.ndarray] = None
    vector_b: Optional[np.ndarray] = None
    vector_c: Optional[np.ndarray] = None
    matrix_p: Optional[np.ndarray] = None


COEFFICIENTS = {
    14: CoefficientTable(14, matrix_a=_FOX_A),
    15: CoefficientTable(15, vector_b=_KOWALIK_B, vector_c=_KOWALIK_A),
    19: CoefficientTable(19, matrix_a=_H3_A, vector_c=_H3_C, matrix_p=_H3_P),
    20: CoefficientTable(20, matrix_a=_H6_A, vector_c=_H6_C, matrix_p=_H6_P),
    21: CoefficientTable(21, matrix_a=_SHEKEL_A[:5], vector_c=_SHEKEL_C[:5]),
    22: CoefficientTable(22, matrix_a=_SHEKEL_A[:7], vector_c=_SHEKEL_C[:7]),
    23: CoefficientTable(23, matrix_a=_SHEKEL_A, vector_c=_SHEKEL_C),
}


# ---------------------------------------------------------------------------
# Evaluators.  ``y`` has shape (..., d); the return has shape (...).
# ---------------------------------------------------------------------------

def _f1(y):
    return np.sum(y * y, axis=-1)


def _f2(y):
    a = np.abs(y)
    return np.sum(a, axis=-1) + np.prod(a, axis=-1)


def _f3(y):
    c = np.cumsum(y, axis=-1)
    return np.sum(c * c, axis=-1)


def _f4(y):
    return np.max(np.abs(y), axis=-1)


def _f5(y):
    head = y[..., :-1]
    tail = y[..., 1:]
    return np.sum(100.0 * (tail - head * head) ** 2 + (head - 1.0) ** 2, axis=-1)


def _f6(y):
    z = np.floor(y + 0.5)
    return np.sum(z * z, axis=-1)


def _f7(y, rng):
    d = y.shape[-1]
    idx = np.arange(1, d + 1, dtype=float)
    base = np.sum(idx * y ** 4, axis=-1)
    return base + rng.random(size=base.shape) if base.shape else base + rng.random()


def _f8(y):
    return np.sum(-y * np.sin(np.sqrt(np.abs(y))), axis=-1)


def _f9(y):
    return np.sum(y * y - 10.0 * np.cos(2.0 * np.pi * y) + 10.0, axis=-1)


def _f10(y):
    d = y.shape[-1]
    s1 = np.sqrt(np.sum(y * y, axis=-1) / d)
    s2 = np.sum(np.cos(2.0 * np.pi * y), axis=-1) / d
    return -20.0 * np.exp(-0.2 * s1) - np.exp(s2) + 20.0 + math.e


def _f11(y):
    d = y.shape[-1]
    idx = np.sqrt(np.arange(1, d + 1, dtype=float))
    return np.sum(y * y, axis=-1) / 4000.0 - np.prod(np.cos(y / idx), axis=-1) + 1.0


def _penalty(y, a, k, m):
    # u(y, a, k, m): k(y-a)^m above a, k(-y-a)^m below -a, 0 inside [-a, a]
    over = np.maximum(y - a, 0.0)
    under = np.maximum(-y - a, 0.0)
    return np.sum(k * over ** m + k * under ** m, axis=-1)


def _f12(y):
    d = y.shape[-1]
    v = 1.0 + (y + 1.0) / 4.0
    term = 10.0 * np.sin(np.pi * v[..., 0]) ** 2
    if d > 1:
        vi = v[..., :-1]
        vnext = v[..., 1:]
        term = term + np.sum((vi - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * vnext) ** 2), axis=-1)
    term = term + (v[..., -1] - 1.0) ** 2
    return np.pi / d * term + _penalty(y, 10.0, 100.0, 4.0)


def _f13(y):
    d = y.shape[-1]
    term = np.sin(3.0 * np.pi * y[..., 0]) ** 2
    if d > 1:
        yi = y[..., :-1]
        ynext = y[..., 1:]
        term = term + np.sum((yi - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * ynext) ** 2), axis=-1)
    last = y[..., -1]
    term = term + (last - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * last) ** 2)
    return 0.1 * term + _penalty(y, 5.0, 100.0, 4.0)


def _f14(y):
    diff = y[..., :, None] - _FOX_A  # (..., 2, 25)
    denom = np.arange(1.0, 26.0) + np.sum(diff ** 6, axis=-2)
    return 1.0 / (1.0 / 500.0 + np.sum(1.0 / denom, axis=-1))


def _f15(y):
    b = _KOWALIK_B
    num = b * b + b * y[..., 1:2]
    den = b * b + b * y[..., 2:3] + y[..., 3:4]
    return np.sum((_KOWALIK_A - y[..., 0:1] * num / den) ** 2, axis=-1)


def _f16(y):
    x1 = y[..., 0]
    x2 = y[..., 1]
    return (4.0 * x1 ** 2 - 2.1 * x1 ** 4 + x1 ** 6 / 3.0
            + x1 * x2 - 4.0 * x2 ** 2 + 4.0 * x2 ** 4)


def _f17(y):
    x1 = y[..., 0]
    x2 = y[..., 1]
    return ((x2 - 5.1 / (4.0 * np.pi ** 2) * x1 ** 2 + 5.0 / np.pi * x1 - 6.0) ** 2
            + 10.0 * (1.0 - 1.0 / (8.0 * np.pi)) * np.cos(x1) + 10.0)


def _f18(y):
    x1 = y[..., 0]
    x2 = y[..., 1]
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (19.0 - 14.0 * x1 + 3.0 * x1 ** 2
                                      - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 ** 2)
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (18.0 - 32.0 * x1 + 12.0 * x1 ** 2
                                             + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 ** 2)
    return a * b


def _hartmann(y, a, c, p):
    diff = y[..., None, :] - p  # (..., 4, d)
    return -np.sum(c * np.exp(-np.sum(a * diff ** 2, axis=-1)), axis=-1)


def _f19(y):
    return _hartmann(y, _H3_A, _H3_C, _H3_P)


def _f20(y):
    return _hartmann(y, _H6_A, _H6_C, _H6_P)


def _shekel(y, m):
    diff = y[..., None, :] - _SHEKEL_A[:m]  # (..., m, 4)
    return -np.sum(1.0 / (np.sum(diff ** 2, axis=-1) + _SHEKEL_C[:m]), axis=-1)


def _f21(y):
    return _shekel(y, 5)


def _f22(y):
    return _shekel(y, 7)


def _f23(y):
    return _shekel(y, 10)


# ---------------------------------------------------------------------------
# Catalog.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BenchmarkFunction:
    """Descriptor and evaluator for one benchmark objective.

    ``fixed_dim`` is None for functions that accept any dimension >= 1.
    ``known_optimum`` is the global minimum when it is a fixed scalar;
    ``witness`` (or ``witness_coord`` for scalable functions) is a point
    attaining it to within 1e-9.
    """

    id: int
    name: str
    lower: float
    upper: float
    fixed_dim: Optional[int]
    known_optimum: Optional[float]
    stochastic: bool
    _fn: Callable
    witness_coord: Optional[float] = None
    witness: Optional[tuple] = None

    @property
    def bounds(self) -> tuple:
        return (self.lower, self.upper)

    @property
    def is_scalable(self) -> bool:
        return self.fixed_dim is None

    @property
    def dimension_mode(self) -> str:
        return "scalable" if self.is_scalable else f"fixed({self.fixed_dim})"

    def validate_dimension(self, dim: int) -> None:
        if self.is_scalable:
            if dim < 1:
                raise DimensionError(f"f{self.id} requires dimension >= 1, got {dim}")
        elif dim != self.fixed_dim:
            raise DimensionError(
                f"f{self.id} ({self.name}) is fixed at dimension {self.fixed_dim}, got {dim}")

    def raw(self, x: np.ndarray, rng=None):
        """Evaluate without validation. Accepts (d,) or (n, d) input."""
        if self.stochastic:
            return self._fn(x, rng)
        return self._fn(x)

    def evaluate(self, x, rng=None) -> float:
        """Evaluate a single point with dimension and bounds checks."""
        x = np.asarray(x, dtype=float)
        if x.ndim != 1:
            raise DimensionError(f"expected a 1-D point, got shape {x.shape}")
        self.validate_dimension(x.size)
        if np.any(x < self.lower) or np.any(x > self.upper):
            raise BoundsError(
                f"point outside [{self.lower}, {self.upper}] for f{self.id}")
        if self.stochastic and rng is None:
            raise ValueError(f"f{self.id} is stochastic and needs an rng")
        return float(self.raw(x, rng))

    def optimum_witness(self, dim: Optional[int] = None) -> Optional[np.ndarray]:
        """A point attaining ``known_optimum`` (within 1e-9), if one is stored."""
        if self.witness is not None:
            return np.array(self.witness, dtype=float)
        if self.witness_coord is not None:
            if dim is None:
                raise ValueError("scalable witness needs a dimension")
            return np.full(dim, self.witness_coord)
        return None


def _scalable(fid, name, lo, hi, fn, optimum=None, wcoord=None, stochastic=False):
    return BenchmarkFunction(fid, name, lo, hi, None, optimum, stochastic, fn,
                             witness_coord=wcoord)


def _fixed(fid, name, lo, hi, dim, fn, optimum, witness):
    return BenchmarkFunction(fid, name, lo, hi, dim, optimum, False, fn,
                             witness=tuple(witness))


_CATALOG = (
    _scalable(1, "sphere", -100.0, 100.0, _f1, 0.0, 0.0),
    _scalable(2, "abs_sum_prod", -100.0, 100.0, _f2, 0.0, 0.0),
    _scalable(3, "rotated_hyper_ellipsoid", -100.0, 100.0, _f3, 0.0, 0.0),
    _scalable(4, "max_abs", -100.0, 100.0, _f4, 0.0, 0.0),
    _scalable(5, "rosenbrock", -30.0, 30.0, _f5, 0.0, 1.0),
    _scalable(6, "step", -100.0, 100.0, _f6, 0.0, 0.0),
    _scalable(7, "quartic_noise", -1.28, 1.28, _f7, None, None, stochastic=True),
    _scalable(8, "schwefel_sine", -500.0, 500.0, _f8),
    _scalable(9, "rastrigin", -5.12, 5.12, _f9, 0.0, 0.0),
    _scalable(10, "ackley", -32.0, 32.0, _f10, 0.0, 0.0),
    _scalable(11, "griewank", -600.0, 600.0, _f11, 0.0, 0.0),
    _scalable(12, "penalized_path", -50.0, 50.0, _f12, 0.0, -1.0),
    _scalable(13, "penalized_levy", -50.0, 50.0, _f13, 0.0, 1.0),
    _fixed(14, "foxholes", -62.536, 65.536, 2, _f14,
           0.99800383779445,
           (-31.978330712590456, -31.97833157692572)),
    _fixed(15, "kowalik", -5.0, 5.0, 4, _f15,
           0.0003074859878056051,
           (0.19283345304274813, 0.19083624027597035,
            0.12311729907598003, 0.13576599033984466)),
    _fixed(16, "six_hump_camel", -5.0, 5.0, 2, _f16,
           -1.0316284534898776,
           (0.08984201652927098, -0.7126564013807202)),
    _fixed(17, "branin", -5.0, 5.0, 2, _f17,
           0.39788735772973816,
           (math.pi, 2.275)),
    _fixed(18, "goldstein_price", -2.0, 2.0, 2, _f18,
           3.0, (0.0, -1.0)),
    _fixed(19, "hartmann_3", 0.0, 1.0, 3, _f19,
           -3.862779787332663,
           (0.11458888602206042, 0.5556488947931479, 0.8525469855910204)),
    _fixed(20, "hartmann_6", 0.0, 1.0, 6, _f20,
           -3.322368011415515,
           (0.20168951209480995, 0.15001069277685197, 0.476873971833793,
            0.275332431065528, 0.3116516179851896, 0.657300535855056)),
    _fixed(21, "shekel_5", 0.0, 10.0, 4, _f21,
           -10.153199679058229,
           (4.000037152376549, 4.000133278657566,
            4.000037151057555, 4.000133277090425)),
    _fixed(22, "shekel_7", 0.0, 10.0, 4, _f22,
           -10.402940566818662,
           (4.000572914277084, 4.000689366040889,
            3.9994897107938447, 3.9996061600067923)),
    _fixed(23, "shekel_10", 0.0, 10.0, 4, _f23,
           -10.536409816692045,
           (4.000746530253313, 4.000592936779709,
            3.9996633957714787, 3.9995097993299975)),
)

_BY_ID = {fn.id: fn for fn in _CATALOG}


def catalog() -> list:
    """All 23 functions in id order."""
    return list(_CATALOG)


def get_function(function_id: int) -> BenchmarkFunction:
    try:
        return _BY_ID[int(function_id)]
    except (KeyError, ValueError, TypeError):
        raise KeyError(f"unknown function id {function_id!r}; valid ids are 1..23") from None


def evaluate(fn: BenchmarkFunction, x, rng=None) -> float:
    return fn.evaluate(x, rng)


def bounds_of(fn: BenchmarkFunction) -> tuple:
    return fn.bounds


def catalog_json() -> str:
    """The catalog as a JSON array (id, name, bounds, dimension_mode, known_optimum)."""
    rows = [
        {
            "id": fn.id,
            "name": fn.name,
            "bounds": [fn.lower, fn.upper],
            "dimension_mode": fn.dimension_mode,
            "known_optimum": fn.known_optimum,
        }
        for fn in _CATALOG
    ]
    return json.dumps(rows, indent=2)
