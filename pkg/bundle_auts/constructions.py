"""
The maps relating Aut(F_2g), AUT(pi_1(S_g)) and AUT(pi_1(X_g^k)).

iota : F_2g -> pi_1(X_g^k) relabels letters. sigma lifts a c-fixing
automorphism of F_2g to the bundle group, phi projects back, and tau reads
off the z exponents of a kernel element. Point-pushing automorphisms come
from a PushTable whose entries fix c = [a1,b1]...[ag,bg] exactly.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from .bundle import (
    BundleContext,
    BundleElement,
    Conjugation,
    elem_inv,
    z_exponent,
)
from .endos import (
    BundleEndo,
    FreeEndo,
    bundle_conjugation,
    bundle_endo_eq,
    certify_inverse,
    compose,
    fixes_c,
    free_conjugation,
    free_endo_equal,
    preserves_bundle_relation,
)
from .errors import ConfigurationError, NotInCenterError, PreconditionError
from .homology import CohomologyClass, HomologyClass, abelianize, poincare_delta
from .words import (
    FreeWord,
    SurfaceContext,
    alpha,
    beta,
    commutator,
    concat,
    cyclic_reduce,
    exponent_sums,
    invert,
    power,
    random_word,
    surface_relator,
)


class Convention(BaseModel):
    """Conjugation direction of C_x and sign of the transvection exponents."""

    model_config = ConfigDict(frozen=True)

    conjugation: Conjugation = Conjugation.LEFT
    intersection_sign: int = 1

    @field_validator("intersection_sign")
    @classmethod
    def _unit(cls, value: int) -> int:
        if value not in (1, -1):
            raise ValueError("intersection_sign must be +1 or -1")
        return value

    def label(self) -> str:
        return f"{self.conjugation.value}/{'+' if self.intersection_sign > 0 else '-'}"


DEFAULT_CONVENTION = Convention()

ALL_CONVENTIONS = [
    Convention(conjugation=direction, intersection_sign=sign)
    for direction in (Conjugation.LEFT, Conjugation.RIGHT)
    for sign in (1, -1)
]


def iota(ctx: BundleContext, word: Sequence[int]) -> BundleElement:
    return BundleElement(ctx.surface.check(word), 0)


def sigma(ctx: BundleContext, f: FreeEndo) -> BundleEndo:
    if f.genus != ctx.genus:
        raise PreconditionError(f"Automorphism of genus {f.genus} in {ctx!r}")
    if not fixes_c(f):
        raise PreconditionError("sigma needs f(c) = c exactly; repair the lift with fix_c_lift first")
    return BundleEndo(ctx.genus, [BundleElement(image, 0) for image in f.images])


def fix_c_lift(f: FreeEndo) -> FreeEndo:
    """Compose f with an inner automorphism of F_2g so that the result fixes c."""
    relator = surface_relator(f.genus)
    image = f.apply(relator)
    core, outer = cyclic_reduce(image)
    n = len(relator)
    for shift in range(n):
        # core = relator[:shift]^-1 * c * relator[:shift]
        if core == relator[shift:] + relator[:shift]:
            conjugator = concat(outer, invert(relator[:shift]))
            return free_conjugation(f.genus, invert(conjugator)).compose(f)
    raise PreconditionError("f(c) is not conjugate to c; no lift fixing c exists")


def phi(ctx: BundleContext, e: BundleEndo) -> FreeEndo:
    if not preserves_bundle_relation(ctx, e):
        raise PreconditionError("phi needs an endomorphism preserving the bundle relation")
    return FreeEndo(ctx.genus, [x.word for x in e.images])


def tau(ctx: BundleContext, e: BundleEndo) -> CohomologyClass:
    """(m_1, n_1, ..., m_g, n_g) for e(A_i) = A_i z^m_i, e(B_i) = B_i z^n_i."""
    values: List[int] = []
    try:
        if z_exponent(ctx, BundleElement(e.z_image.word, e.z_image.zexp - 1)) != 0:
            raise PreconditionError("tau needs e(z) = z")
        for code, image in enumerate(e.images, start=1):
            values.append(z_exponent(ctx, BundleElement(concat(image.word, (-code,)), image.zexp)))
    except NotInCenterError as exc:
        raise PreconditionError(f"Endomorphism is not in the kernel of phi: {exc}") from exc
    return CohomologyClass(coords=tuple(values))


def transvection(ctx: BundleContext, gamma: HomologyClass, sign: int = 1) -> BundleEndo:
    """w -> w z^<[w], gamma> on the generators."""
    if gamma.genus != ctx.genus:
        raise PreconditionError(f"Class of genus {gamma.genus} in {ctx!r}")
    exponents = poincare_delta(gamma).coords
    return BundleEndo(
        ctx.genus,
        [BundleElement((code,), sign * m) for code, m in enumerate(exponents, start=1)],
    )


def inner(ctx: BundleContext, x: BundleElement, direction: Conjugation = Conjugation.LEFT) -> BundleEndo:
    return bundle_conjugation(ctx, x, direction)


def inner_inverse(ctx: BundleContext, x: BundleElement, direction: Conjugation = Conjugation.LEFT) -> BundleEndo:
    return bundle_conjugation(ctx, elem_inv(ctx, x), direction)


def dehn_twist(genus: int, code: int) -> FreeEndo:
    """
    Twist about the curve of generator |code|; a negative code gives the inverse.

    T_a_i: b_i -> b_i a_i and T_b_i: a_i -> a_i b_i^-1, everything else fixed.
    Both fix [a_i, b_i] and therefore c.
    """
    generator, sign = abs(code), (1 if code > 0 else -1)
    if generator < 1 or generator > 2 * genus:
        raise PreconditionError(f"No generator {code} in genus {genus}")
    if generator % 2:
        a = generator
        return FreeEndo.from_mapping(genus, {a + 1: (a + 1, sign * a)})
    b = generator
    return FreeEndo.from_mapping(genus, {b - 1: (b - 1, -sign * b)})


def handle_swap(genus: int, inverse: bool = False) -> FreeEndo:
    """a1 -> b1^-1, b1 -> b1 a1 b1^-1 (fixes [a1, b1])."""
    a, b = alpha(1), beta(1)
    if inverse:
        return FreeEndo.from_mapping(genus, {a: (a, b, -a), b: (-a,)})
    return FreeEndo.from_mapping(genus, {a: (-b,), b: (b, a, -b)})


def handle_rotation(genus: int, inverse: bool = False) -> FreeEndo:
    """Cyclic shift of the handles, corrected on the last handle so that c is fixed."""
    handles = [commutator((alpha(i),), (beta(i),)) for i in range(1, genus + 1)]
    images: Dict[int, FreeWord] = {}
    if not inverse:
        tail = concat(*handles[1:])
        for i in range(1, genus):
            images[alpha(i)] = (alpha(i + 1),)
            images[beta(i)] = (beta(i + 1),)
        images[alpha(genus)] = concat(invert(tail), (alpha(1),), tail)
        images[beta(genus)] = concat(invert(tail), (beta(1),), tail)
    else:
        head = concat(*handles[:-1])
        for i in range(2, genus + 1):
            images[alpha(i)] = (alpha(i - 1),)
            images[beta(i)] = (beta(i - 1),)
        images[alpha(1)] = concat(head, (alpha(genus),), invert(head))
        images[beta(1)] = concat(head, (beta(genus),), invert(head))
    return FreeEndo.from_mapping(genus, images)


def _push_first_alpha(genus: int) -> Tuple[FreeEndo, FreeEndo]:
    c = surface_relator(genus)
    rest = c[4:]
    a1, b1 = alpha(1), beta(1)
    forward: Dict[int, FreeWord] = {b1: concat(invert(rest), (b1,))}
    backward: Dict[int, FreeWord] = {b1: concat((-a1,), c, rest, invert(c), (a1, b1))}
    for code in range(3, 2 * genus + 1):
        forward[code] = concat(invert(c), (a1, code, -a1), c)
        backward[code] = concat((-a1,), c, (code,), invert(c), (a1,))
    return FreeEndo.from_mapping(genus, forward), FreeEndo.from_mapping(genus, backward)


class PushTable:
    """
    Point-pushing automorphisms of F_2g for the standard generators.

    entries[code] induces conjugation by the generator on pi_1(S_g);
    entries[-code] is its certified inverse.
    """

    def __init__(self, genus: int, entries: Dict[int, FreeEndo]):
        self.genus = genus
        self.entries = entries

    @classmethod
    def build(cls, genus: int, certify: bool = True) -> "PushTable":
        if genus < 1:
            raise ConfigurationError(f"No push table for genus {genus}")
        push_a1, push_a1_inv = _push_first_alpha(genus)
        swap, swap_inv = handle_swap(genus), handle_swap(genus, inverse=True)
        entries: Dict[int, FreeEndo] = {
            alpha(1): push_a1,
            -alpha(1): push_a1_inv,
            beta(1): compose(swap, push_a1_inv, swap_inv),
            -beta(1): compose(swap, push_a1, swap_inv),
        }
        if genus > 1:
            rot, rot_inv = handle_rotation(genus), handle_rotation(genus, inverse=True)
            shift, shift_inv = FreeEndo.identity(genus), FreeEndo.identity(genus)
            for i in range(2, genus + 1):
                shift, shift_inv = rot.compose(shift), shift_inv.compose(rot_inv)
                for code in (alpha(1), beta(1)):
                    target = code + 2 * (i - 1)
                    entries[target] = compose(shift, entries[code], shift_inv)
                    entries[-target] = compose(shift, entries[-code], shift_inv)
        table = cls(genus, entries)
        if certify:
            table.certify()
        return table

    def entry(self, code: int) -> FreeEndo:
        try:
            return self.entries[code]
        except KeyError:
            raise ConfigurationError(f"No push table entry for letter {code} in genus {self.genus}") from None

    def certify(self) -> None:
        """Raise ConfigurationError unless every entry is a c-fixing point-push."""
        surface = SurfaceContext(self.genus)
        for code in range(1, 2 * self.genus + 1):
            forward, backward = self.entry(code), self.entry(-code)
            if not (fixes_c(forward) and fixes_c(backward)):
                raise ConfigurationError(f"Push entry {code} does not fix c")
            if not certify_inverse(None, forward, backward):
                raise ConfigurationError(f"Push entry {code} and its inverse do not compose to the identity")
            for image_code, image in enumerate(forward.images, start=1):
                sums = exponent_sums(image, self.genus)
                if any(v != (1 if j == image_code - 1 else 0) for j, v in enumerate(sums)):
                    raise ConfigurationError(f"Push entry {code} acts nontrivially on homology")
            if not free_endo_equal(surface, forward, free_conjugation(self.genus, (code,))):
                raise ConfigurationError(f"Push entry {code} does not induce conjugation by {code}")


def push(table: Optional[PushTable], word: Sequence[int]) -> FreeEndo:
    """push(x1 ... xn) = P_x1 o ... o P_xn."""
    if table is None or not table.entries:
        raise ConfigurationError("Empty push table")
    result = FreeEndo.identity(table.genus)
    for code in word:
        result = result.compose(table.entry(code))
    return result


def birman_exponent(table: PushTable, bound: Optional[int] = None) -> Optional[int]:
    """The m in [-bound, bound] with push(c) = conjugation by c^m in Aut(F_2g), if any.

    The bound defaults to 4g + 4.
    """
    if bound is None:
        bound = 4 * table.genus + 4
    relator = surface_relator(table.genus)
    pushed = push(table, relator)
    for m in sorted(range(-bound, bound + 1), key=abs):
        if pushed == free_conjugation(table.genus, power(relator, m)):
            return m
    return None


def predicted_push_image(
    ctx: BundleContext,
    word: Sequence[int],
    convention: Convention = DEFAULT_CONVENTION,
) -> BundleEndo:
    """C_{iota t} o transvection(k [t])."""
    t = iota(ctx, word)
    shift = abelianize(ctx.surface, word).scale(ctx.euler)
    return compose(
        inner(ctx, t, convention.conjugation),
        transvection(ctx, shift, convention.intersection_sign),
    )


def transvection_part(
    ctx: BundleContext,
    table: PushTable,
    word: Sequence[int],
    convention: Convention = DEFAULT_CONVENTION,
) -> CohomologyClass:
    """tau(sigma(push t) o C_{iota t}^-1)."""
    lifted = sigma(ctx, push(table, word))
    remainder = compose(lifted, inner_inverse(ctx, iota(ctx, word), convention.conjugation))
    return tau(ctx, remainder)


def bootstrap_conventions(ctx: BundleContext, table: PushTable) -> List[Convention]:
    """Conventions under which sigma(push t) = C_{iota t} o transvection(k [t]) for every generator t."""
    valid = []
    for convention in ALL_CONVENTIONS:
        if all(
            bundle_endo_eq(
                ctx,
                sigma(ctx, push(table, (code,))),
                predicted_push_image(ctx, (code,), convention),
            )
            for code in range(1, 2 * ctx.genus + 1)
        ):
            valid.append(convention)
    return valid


def sample_push_word(rng, genus: int, max_length: int) -> FreeWord:
    """A reduced word of 1..max_length standard generators (empty when max_length is 0)."""
    if max_length <= 0:
        return ()
    return random_word(rng, genus, int(rng.integers(1, max_length + 1)))


def sample_mapping_class(
    rng,
    table: PushTable,
    length: int,
    include_twists: bool = True,
) -> Tuple[FreeEndo, FreeEndo]:
    """A random c-fixing automorphism of F_2g and its inverse, built from push entries and Dehn twists."""
    genus = table.genus
    codes = [code for code in range(-2 * genus, 2 * genus + 1) if code]
    forward, backward = FreeEndo.identity(genus), FreeEndo.identity(genus)
    for _ in range(length):
        code = codes[int(rng.integers(0, len(codes)))]
        if include_twists and rng.integers(0, 2):
            step, step_inv = dehn_twist(genus, code), dehn_twist(genus, -code)
        else:
            step, step_inv = table.entry(code), table.entry(-code)
        forward, backward = forward.compose(step), step_inv.compose(backward)
    return forward, backward
