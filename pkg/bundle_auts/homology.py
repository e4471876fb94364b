"""
H_1(S_g; Z) = Z^2g in the basis [a_1], [b_1], ..., [a_g], [b_g].

The intersection form is fixed by <a_i, b_i> = +1.
"""
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from .errors import ContextMismatchError
from .words import SurfaceContext, exponent_sums


class _IntegerVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    coords: Tuple[int, ...]

    @field_validator("coords")
    @classmethod
    def _even_length(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(value) == 0 or len(value) % 2:
            raise ValueError(f"Expected 2g coordinates, got {len(value)}")
        return value

    @property
    def genus(self) -> int:
        return len(self.coords) // 2

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)

    @classmethod
    def from_vector(cls, vector: Sequence[int]):
        return cls(coords=tuple(int(v) for v in vector))

    @classmethod
    def zero(cls, genus: int):
        return cls(coords=(0,) * (2 * genus))

    @classmethod
    def basis(cls, genus: int, j: int):
        """Basis vector j (0-based): 2i-2 is a_i, 2i-1 is b_i."""
        coords = [0] * (2 * genus)
        coords[j] = 1
        return cls(coords=tuple(coords))

    def _check_same(self, other: "_IntegerVector") -> None:
        if type(other) is not type(self) or len(other.coords) != len(self.coords):
            raise ContextMismatchError(f"Cannot combine {self!r} with {other!r}")

    def __add__(self, other):
        self._check_same(other)
        return type(self)(coords=tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check_same(other)
        return type(self)(coords=tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(coords=tuple(-x for x in self.coords))

    def scale(self, factor: int):
        return type(self)(coords=tuple(factor * x for x in self.coords))

    def __mul__(self, factor: int):
        return self.scale(factor)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)


class HomologyClass(_IntegerVector):
    pass


class CohomologyClass(_IntegerVector):
    """A functional on H_1, stored by its values on the basis."""

    def evaluate(self, h: HomologyClass) -> int:
        if len(h.coords) != len(self.coords):
            raise ContextMismatchError("Homology class and functional have different genus")
        return int(self.vector @ h.vector)


def symplectic_form(genus: int) -> np.ndarray:
    form = np.zeros((2 * genus, 2 * genus), dtype=np.int64)
    for i in range(genus):
        form[2 * i, 2 * i + 1] = 1
        form[2 * i + 1, 2 * i] = -1
    return form


def abelianize(ctx: SurfaceContext, word: Sequence[int]) -> HomologyClass:
    return HomologyClass(coords=tuple(exponent_sums(ctx.check(word), ctx.genus)))


def intersection(x: HomologyClass, y: HomologyClass) -> int:
    if len(x.coords) != len(y.coords):
        raise ContextMismatchError("Intersection of classes of different genus")
    return int(x.vector @ symplectic_form(x.genus) @ y.vector)


def poincare_delta(x: HomologyClass) -> CohomologyClass:
    """The functional w -> <w, x>."""
    return CohomologyClass.from_vector(symplectic_form(x.genus) @ x.vector)


def poincare_delta_inverse(f: CohomologyClass) -> HomologyClass:
    # J^2 = -I
    return HomologyClass.from_vector(-symplectic_form(f.genus) @ f.vector)


def action_matrix(columns: Sequence[HomologyClass]) -> np.ndarray:
    """Matrix whose j-th column is the image of basis vector j."""
    if not columns:
        raise ContextMismatchError("Empty action")
    size = len(columns[0].coords)
    if len(columns) != size or any(len(c.coords) != size for c in columns):
        raise ContextMismatchError("Action matrix must be square of size 2g")
    return np.array([c.coords for c in columns], dtype=np.int64).T


def is_symplectic_action(matrix) -> Optional[int]:
    """+1 if M^T J M = J, -1 if it equals -J, None otherwise."""
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] % 2:
        return None
    form = symplectic_form(matrix.shape[0] // 2)
    pulled_back = matrix.T @ form @ matrix
    if np.array_equal(pulled_back, form):
        return 1
    if np.array_equal(pulled_back, -form):
        return -1
    return None


def homology_basis(genus: int) -> List[HomologyClass]:
    return [HomologyClass.basis(genus, j) for j in range(2 * genus)]
