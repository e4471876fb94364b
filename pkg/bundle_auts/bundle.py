"""
Arithmetic in pi_1(X_g^k) = < A_1, B_1, ..., A_g, B_g, z | z central, [A_1,B_1]...[A_g,B_g] = z^k >.

Elements are kept as (surface word, z exponent) pairs; z never appears as a
letter. X_g^k and X_g^-k are homeomorphic, but no map between the two
contexts is provided.
"""
from enum import Enum
from typing import NamedTuple, Sequence, Tuple

from .errors import ContextMismatchError, NotInCenterError, UnsupportedContextError
from .words import (
    EMPTY,
    FreeWord,
    SurfaceContext,
    concat,
    dehn_reduce,
    invert,
    power,
)


class BundleElement(NamedTuple):
    word: FreeWord
    zexp: int


class Conjugation(str, Enum):
    LEFT = "left"  # w -> x w x^-1
    RIGHT = "right"  # w -> x^-1 w x


class BundleContext:
    def __init__(self, genus: int, euler: int):
        if genus < 1:
            raise UnsupportedContextError(f"Genus must be at least 1, got {genus}")
        if (genus, euler) == (1, 0):
            raise UnsupportedContextError(
                "Assume (g,k) != (1,0): the center of pi_1(X_1^0) is not <z>"
            )
        self.genus = genus
        self.euler = euler
        self.surface = SurfaceContext(genus)

    def __repr__(self) -> str:
        return f"BundleContext(genus={self.genus}, euler={self.euler})"

    def __eq__(self, other) -> bool:
        return isinstance(other, BundleContext) and (other.genus, other.euler) == (self.genus, self.euler)

    def __hash__(self) -> int:
        return hash(("BundleContext", self.genus, self.euler))

    def check(self, x: BundleElement) -> BundleElement:
        bound = 2 * self.genus
        if any(code == 0 or abs(code) > bound for code in x.word):
            raise ContextMismatchError(f"Element {x} does not live in genus {self.genus}")
        return x


def identity() -> BundleElement:
    return BundleElement(EMPTY, 0)


def z_power(m: int) -> BundleElement:
    return BundleElement(EMPTY, m)


def generator_element(code: int) -> BundleElement:
    return BundleElement((code,), 0)


def elem_mul(ctx: BundleContext, x: BundleElement, y: BundleElement) -> BundleElement:
    ctx.check(x)
    ctx.check(y)
    return BundleElement(concat(x.word, y.word), x.zexp + y.zexp)


def elem_inv(ctx: BundleContext, x: BundleElement) -> BundleElement:
    ctx.check(x)
    return BundleElement(invert(x.word), -x.zexp)


def elem_prod(ctx: BundleContext, *elements: BundleElement) -> BundleElement:
    for x in elements:
        ctx.check(x)
    return BundleElement(concat(*(x.word for x in elements)), sum(x.zexp for x in elements))


def elem_pow(ctx: BundleContext, x: BundleElement, n: int) -> BundleElement:
    ctx.check(x)
    return BundleElement(power(x.word, n), x.zexp * n)


def conjugate(ctx: BundleContext, x: BundleElement, w: BundleElement, direction: Conjugation = Conjugation.LEFT) -> BundleElement:
    if Conjugation(direction) is Conjugation.LEFT:
        return elem_prod(ctx, x, w, elem_inv(ctx, x))
    return elem_prod(ctx, elem_inv(ctx, x), w, x)


def torus_normal_form(word: Sequence[int], zexp: int, euler: int) -> Tuple[int, int, int]:
    """
    Collect a genus 1 word into A^p B^q z^r using B A = A B z^-k.

    Moving A^e to the left past B^q costs z^(-k*q*e).
    """
    p = q = 0
    r = zexp
    for code in word:
        sign = 1 if code > 0 else -1
        if abs(code) == 1:
            r -= euler * q * sign
            p += sign
        elif abs(code) == 2:
            q += sign
        else:
            raise ContextMismatchError(f"Letter code {code} does not belong to genus 1")
    return p, q, r


def surface_relator_count(ctx: SurfaceContext, word: Sequence[int]) -> int:
    """Signed relator count of a word trivial in pi_1(S_g), for every genus."""
    word = ctx.check(word)
    if ctx.genus == 1:
        p, q, r = torus_normal_form(word, 0, 1)
        if p or q:
            raise NotInCenterError("Word is not trivial in the surface group")
        return r
    result = dehn_reduce(ctx, word)
    if result.residual:
        raise NotInCenterError("Word is not trivial in the surface group")
    return result.relator_count


def is_identity(ctx: BundleContext, x: BundleElement) -> bool:
    ctx.check(x)
    if ctx.genus == 1:
        return torus_normal_form(x.word, x.zexp, ctx.euler) == (0, 0, 0)
    result = dehn_reduce(ctx.surface, x.word)
    return not result.residual and x.zexp + ctx.euler * result.relator_count == 0


def elem_eq(ctx: BundleContext, x: BundleElement, y: BundleElement) -> bool:
    ctx.check(x)
    ctx.check(y)
    if ctx.genus == 1:
        return torus_normal_form(x.word, x.zexp, ctx.euler) == torus_normal_form(y.word, y.zexp, ctx.euler)
    return is_identity(ctx, BundleElement(concat(x.word, invert(y.word)), x.zexp - y.zexp))


def z_exponent(ctx: BundleContext, x: BundleElement) -> int:
    """Return m with x = z^m; raise NotInCenterError if x is not a power of z."""
    ctx.check(x)
    return x.zexp + ctx.euler * surface_relator_count(ctx.surface, x.word)


def project_to_surface(ctx: BundleContext, x: BundleElement) -> FreeWord:
    return ctx.check(x).word
