"""
Endomorphisms given by generator images.

FreeEndo acts on F_2g (and so on pi_1(S_g)); BundleEndo acts on
pi_1(X_g^k) and carries an image for z. compose(e1, e2) is e1 o e2: e2 is
applied first.
"""
from typing import Optional, Sequence, Union

from .bundle import (
    BundleContext,
    BundleElement,
    Conjugation,
    conjugate,
    elem_eq,
    elem_prod,
    identity as identity_element,
    z_power,
)
from .errors import ContextMismatchError
from .homology import HomologyClass, action_matrix, is_symplectic_action
from .words import (
    FreeWord,
    SurfaceContext,
    commutator,
    concat,
    exponent_sums,
    free_reduce,
    invert,
    power,
    surface_equal,
    surface_relator,
)


class FreeEndo:
    __slots__ = ("genus", "images")

    def __init__(self, genus: int, images: Sequence[Sequence[int]]):
        if len(images) != 2 * genus:
            raise ContextMismatchError(f"Expected {2 * genus} generator images, got {len(images)}")
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "images", tuple(free_reduce(image, genus) for image in images))

    def __setattr__(self, name, value):
        raise AttributeError("FreeEndo is immutable")

    @classmethod
    def identity(cls, genus: int) -> "FreeEndo":
        return cls(genus, [(code,) for code in range(1, 2 * genus + 1)])

    @classmethod
    def from_mapping(cls, genus: int, mapping) -> "FreeEndo":
        """Build from {code: image}; generators not mentioned are fixed."""
        images = [mapping.get(code, (code,)) for code in range(1, 2 * genus + 1)]
        return cls(genus, images)

    def image(self, code: int) -> FreeWord:
        if code > 0:
            return self.images[code - 1]
        return invert(self.images[-code - 1])

    def apply(self, word: Sequence[int]) -> FreeWord:
        return concat(*(self.image(code) for code in free_reduce(word, self.genus)))

    def compose(self, other: "FreeEndo") -> "FreeEndo":
        _check_kind(self, other)
        return FreeEndo(self.genus, [self.apply(image) for image in other.images])

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeEndo) and other.genus == self.genus and other.images == self.images

    def __hash__(self) -> int:
        return hash(("FreeEndo", self.genus, self.images))

    def __repr__(self) -> str:
        return f"FreeEndo(genus={self.genus}, images={self.images})"


class BundleEndo:
    __slots__ = ("genus", "images", "z_image")

    def __init__(
        self,
        genus: int,
        images: Sequence[BundleElement],
        z_image: Optional[BundleElement] = None,
    ):
        if len(images) != 2 * genus:
            raise ContextMismatchError(f"Expected {2 * genus} generator images, got {len(images)}")
        z_image = z_power(1) if z_image is None else z_image
        object.__setattr__(self, "genus", genus)
        object.__setattr__(
            self,
            "images",
            tuple(BundleElement(free_reduce(x.word, genus), x.zexp) for x in images),
        )
        object.__setattr__(self, "z_image", BundleElement(free_reduce(z_image.word, genus), z_image.zexp))

    def __setattr__(self, name, value):
        raise AttributeError("BundleEndo is immutable")

    @classmethod
    def identity(cls, genus: int) -> "BundleEndo":
        return cls(genus, [BundleElement((code,), 0) for code in range(1, 2 * genus + 1)])

    def image(self, code: int) -> BundleElement:
        if code > 0:
            return self.images[code - 1]
        x = self.images[-code - 1]
        return BundleElement(invert(x.word), -x.zexp)

    def apply(self, x: BundleElement) -> BundleElement:
        word = free_reduce(x.word, self.genus)
        parts = [self.image(code) for code in word]
        parts.append(BundleElement(power(self.z_image.word, x.zexp), self.z_image.zexp * x.zexp))
        return BundleElement(concat(*(p.word for p in parts)), sum(p.zexp for p in parts))

    def compose(self, other: "BundleEndo") -> "BundleEndo":
        _check_kind(self, other)
        return BundleEndo(
            self.genus,
            [self.apply(x) for x in other.images],
            self.apply(other.z_image),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BundleEndo)
            and other.genus == self.genus
            and other.images == self.images
            and other.z_image == self.z_image
        )

    def __hash__(self) -> int:
        return hash(("BundleEndo", self.genus, self.images, self.z_image))

    def __repr__(self) -> str:
        return f"BundleEndo(genus={self.genus}, images={self.images}, z_image={self.z_image})"


Endo = Union[FreeEndo, BundleEndo]


def _check_kind(e1: Endo, e2: Endo) -> None:
    if type(e1) is not type(e2):
        raise ContextMismatchError(f"Cannot combine {type(e1).__name__} with {type(e2).__name__}")
    if e1.genus != e2.genus:
        raise ContextMismatchError(f"Genus mismatch: {e1.genus} vs {e2.genus}")


def apply(e: Endo, w):
    if isinstance(e, BundleEndo):
        if not isinstance(w, BundleElement):
            raise ContextMismatchError("A bundle endomorphism applies to bundle elements")
        return e.apply(w)
    if isinstance(w, BundleElement):
        raise ContextMismatchError("A free endomorphism applies to surface words")
    return e.apply(w)


def compose(e1: Endo, *rest: Endo) -> Endo:
    """compose(e1, e2, ..., en) = e1 o e2 o ... o en."""
    result = e1
    for e in rest:
        result = result.compose(e)
    return result


def free_conjugation(genus: int, x: Sequence[int]) -> FreeEndo:
    """s -> x s x^-1 on F_2g."""
    x = free_reduce(x, genus)
    return FreeEndo(genus, [concat(x, (code,), invert(x)) for code in range(1, 2 * genus + 1)])


def bundle_conjugation(
    ctx: BundleContext,
    x: BundleElement,
    direction: Conjugation = Conjugation.LEFT,
) -> BundleEndo:
    images = [
        conjugate(ctx, x, BundleElement((code,), 0), direction)
        for code in range(1, 2 * ctx.genus + 1)
    ]
    return BundleEndo(ctx.genus, images)


def free_endo_equal(ctx: SurfaceContext, e1: FreeEndo, e2: FreeEndo) -> bool:
    """Equality of the induced endomorphisms of pi_1(S_g)."""
    _check_kind(e1, e2)
    if e1.genus != ctx.genus:
        raise ContextMismatchError(f"Endomorphism of genus {e1.genus} in {ctx!r}")
    return all(surface_equal(ctx, u, v) for u, v in zip(e1.images, e2.images))


def bundle_endo_eq(ctx: BundleContext, e1: BundleEndo, e2: BundleEndo) -> bool:
    _check_kind(e1, e2)
    if e1.genus != ctx.genus:
        raise ContextMismatchError(f"Endomorphism of genus {e1.genus} in {ctx!r}")
    if not elem_eq(ctx, e1.z_image, e2.z_image):
        return False
    return all(elem_eq(ctx, x, y) for x, y in zip(e1.images, e2.images))


def endo_eq(ctx: Union[SurfaceContext, BundleContext], e1: Endo, e2: Endo) -> bool:
    if isinstance(e1, BundleEndo):
        if not isinstance(ctx, BundleContext):
            raise ContextMismatchError("Bundle endomorphisms need a bundle context")
        return bundle_endo_eq(ctx, e1, e2)
    surface = ctx.surface if isinstance(ctx, BundleContext) else ctx
    return free_endo_equal(surface, e1, e2)


def fixes_c(e: FreeEndo) -> bool:
    relator = surface_relator(e.genus)
    return e.apply(relator) == relator


def preserves_bundle_relation(ctx: BundleContext, e: BundleEndo) -> bool:
    if e.genus != ctx.genus:
        raise ContextMismatchError(f"Endomorphism of genus {e.genus} in {ctx!r}")
    if not elem_eq(ctx, e.z_image, z_power(1)):
        return False
    product = identity_element()
    for i in range(ctx.genus):
        a, b = e.images[2 * i], e.images[2 * i + 1]
        product = elem_prod(
            ctx,
            product,
            BundleElement(commutator(a.word, b.word), 0),
        )
    return elem_eq(ctx, product, z_power(ctx.euler))


def is_inner_by(
    ctx: BundleContext,
    e: BundleEndo,
    x: BundleElement,
    direction: Conjugation = Conjugation.LEFT,
) -> bool:
    return bundle_endo_eq(ctx, e, bundle_conjugation(ctx, x, direction))


def symplectic_type(e: Endo) -> Optional[int]:
    """Sign of the induced action on H_1 (+1 orientation preserving), or None."""
    if isinstance(e, BundleEndo):
        words = [x.word for x in e.images]
    else:
        words = list(e.images)
    columns = [HomologyClass(coords=tuple(exponent_sums(word, e.genus))) for word in words]
    return is_symplectic_action(action_matrix(columns))


def certify_inverse(
    ctx: Union[SurfaceContext, BundleContext, None],
    e: Endo,
    candidate: Endo,
) -> bool:
    """
    Check both composites against the identity.

    Free endomorphisms are compared exactly in F_2g when ctx is None, and
    over pi_1(S_g) otherwise; bundle endomorphisms always semantically.
    """
    _check_kind(e, candidate)
    ident = type(e).identity(e.genus)
    left, right = e.compose(candidate), candidate.compose(e)
    if ctx is None:
        if isinstance(e, BundleEndo):
            raise ContextMismatchError("Bundle endomorphisms need a bundle context")
        return left == ident and right == ident
    return endo_eq(ctx, left, ident) and endo_eq(ctx, right, ident)
