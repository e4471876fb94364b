"""
Free group words and the word problem of the closed surface group.

A word is a tuple of integer letter codes: generator alpha_i (or A_i) is
2i - 1, beta_i (or B_i) is 2i, and the inverse letter is the negated code.
The same codes serve the surface alphabet and the bundle alphabet; only the
printed form differs (see parser.py).
"""
from collections import deque
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import MalformedInputError, NotInCenterError, UnsupportedContextError

FreeWord = Tuple[int, ...]
EMPTY: FreeWord = ()


class Letter(NamedTuple):
    kind: str  # "alpha" or "beta"
    index: int
    sign: int


class DehnResult(NamedTuple):
    residual: FreeWord
    relator_count: int


def alpha(i: int) -> int:
    return 2 * i - 1


def beta(i: int) -> int:
    return 2 * i


def encode_letter(letter: Letter) -> int:
    if letter.kind not in ("alpha", "beta") or letter.index < 1 or letter.sign not in (1, -1):
        raise MalformedInputError(f"Not a letter: {letter}")
    code = alpha(letter.index) if letter.kind == "alpha" else beta(letter.index)
    return code * letter.sign


def decode_letter(code: int) -> Letter:
    if code == 0:
        raise MalformedInputError("0 is not a letter code")
    generator = abs(code)
    kind = "alpha" if generator % 2 else "beta"
    return Letter(kind, (generator + 1) // 2, 1 if code > 0 else -1)


def free_reduce(raw: Iterable[int], genus: Optional[int] = None) -> FreeWord:
    """Freely reduce a letter sequence, checking codes against the genus when given."""
    bound = 2 * genus if genus is not None else None
    stack: List[int] = []
    for code in raw:
        if code == 0 or (bound is not None and abs(code) > bound):
            raise MalformedInputError(f"Letter code {code} is out of range for genus {genus}")
        if stack and stack[-1] == -code:
            stack.pop()
        else:
            stack.append(code)
    return tuple(stack)


def concat(*words: Sequence[int]) -> FreeWord:
    stack: List[int] = []
    for word in words:
        for code in word:
            if stack and stack[-1] == -code:
                stack.pop()
            else:
                stack.append(code)
    return tuple(stack)


def invert(word: Sequence[int]) -> FreeWord:
    return tuple(-code for code in reversed(word))


def power(word: Sequence[int], n: int) -> FreeWord:
    if n < 0:
        return power(invert(word), -n)
    return concat(*([word] * n))


def commutator(u: Sequence[int], v: Sequence[int]) -> FreeWord:
    return concat(u, v, invert(u), invert(v))


def cyclic_reduce(word: Sequence[int]) -> Tuple[FreeWord, FreeWord]:
    """Split a reduced word as x * w0 * x^-1 and return (w0, x)."""
    word = tuple(word)
    n = len(word)
    i = 0
    while i < n - 1 - i and word[i] == -word[n - 1 - i]:
        i += 1
    return word[i:n - i], word[:i]


def rotations(word: Sequence[int]) -> List[FreeWord]:
    word = tuple(word)
    return [word[i:] + word[:i] for i in range(len(word))]


def surface_relator(genus: int) -> FreeWord:
    """[a1,b1][a2,b2]...[ag,bg], the +1 orientation of the relator."""
    return concat(*(commutator((alpha(i),), (beta(i),)) for i in range(1, genus + 1)))


def exponent_sums(word: Sequence[int], genus: int) -> List[int]:
    sums = [0] * (2 * genus)
    for code in word:
        sums[abs(code) - 1] += 1 if code > 0 else -1
    return sums


def random_word(rng, genus: int, length: int) -> FreeWord:
    """A freely reduced word of exactly `length` letters drawn from `rng` (numpy Generator)."""
    letters: List[int] = []
    while len(letters) < length:
        code = int(rng.integers(1, 2 * genus + 1))
        if rng.integers(0, 2):
            code = -code
        if letters and letters[-1] == -code:
            continue
        letters.append(code)
    return tuple(letters)


class SurfaceContext:
    """Relator data and Dehn machinery for pi_1(S_g)."""

    def __init__(self, genus: int):
        if genus < 1:
            raise UnsupportedContextError(f"Genus must be at least 1, got {genus}")
        self.genus = genus
        self.relator = surface_relator(genus)
        self.piece_length = 2 * genus + 1
        self.rotation_table: Tuple[Tuple[FreeWord, int], ...] = tuple(
            [(rotation, 1) for rotation in rotations(self.relator)]
            + [(rotation, -1) for rotation in rotations(invert(self.relator))]
        )
        # Pieces never overlap in more than one letter, so the first
        # piece_length letters identify the rotation.
        self._pieces: Dict[FreeWord, Tuple[FreeWord, int]] = {
            rotation[:self.piece_length]: (rotation, tag) for rotation, tag in self.rotation_table
        }
        self.starting_with: Dict[int, List[Tuple[FreeWord, int]]] = {}
        self.ending_with: Dict[int, List[Tuple[FreeWord, int]]] = {}
        for rotation, tag in self.rotation_table:
            self.starting_with.setdefault(rotation[0], []).append((rotation, tag))
            self.ending_with.setdefault(rotation[-1], []).append((rotation, tag))

    def __repr__(self) -> str:
        return f"SurfaceContext(genus={self.genus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SurfaceContext) and other.genus == self.genus

    def __hash__(self) -> int:
        return hash(("SurfaceContext", self.genus))

    def check(self, word: Sequence[int]) -> FreeWord:
        return free_reduce(word, self.genus)

    def _dehn_linear(self, word: Sequence[int]) -> Tuple[FreeWord, int]:
        size = self.piece_length
        stack: List[int] = []
        count = 0
        pending = deque(word)
        while pending:
            code = pending.popleft()
            if stack and stack[-1] == -code:
                stack.pop()
                continue
            stack.append(code)
            if len(stack) >= size:
                hit = self._pieces.get(tuple(stack[-size:]))
                if hit is not None:
                    rotation, tag = hit
                    del stack[-size:]
                    pending.extendleft(reversed(invert(rotation[size:])))
                    count += tag
        return tuple(stack), count

    def _find_cyclic_piece(self, word: FreeWord) -> Optional[int]:
        n = len(word)
        size = self.piece_length
        if n < size:
            return None
        for start in range(n):
            key = tuple(word[(start + j) % n] for j in range(size))
            if key in self._pieces:
                return start
        return None


def dehn_reduce(ctx: SurfaceContext, word: Sequence[int]) -> DehnResult:
    """
    Dehn's algorithm with a signed count of relator applications.

    Every subword made of 2g + 1 consecutive letters of a tagged rotation
    u*v is replaced by v^-1 and the tag is added to the count. Passes repeat
    on the cyclically reduced word until no such subword remains.
    """
    if ctx.genus < 2:
        raise UnsupportedContextError("Dehn's algorithm needs genus >= 2; the genus 1 relator is not C'(1/6)")
    current, count = ctx._dehn_linear(ctx.check(word))
    while True:
        current, _ = cyclic_reduce(current)
        start = ctx._find_cyclic_piece(current)
        if start is None:
            return DehnResult(current, count)
        current, extra = ctx._dehn_linear(current[start:] + current[:start])
        count += extra


def is_trivial_surface(ctx: SurfaceContext, word: Sequence[int]) -> bool:
    if ctx.genus == 1:
        return not any(exponent_sums(ctx.check(word), 1))
    return not dehn_reduce(ctx, word).residual


def surface_equal(ctx: SurfaceContext, u: Sequence[int], v: Sequence[int]) -> bool:
    return is_trivial_surface(ctx, concat(ctx.check(u), invert(ctx.check(v))))


def trivial_relator_count(ctx: SurfaceContext, word: Sequence[int]) -> int:
    """Signed relator count of a word that is trivial in pi_1(S_g) (genus >= 2)."""
    result = dehn_reduce(ctx, word)
    if result.residual:
        raise NotInCenterError("Word is not trivial in the surface group")
    return result.relator_count
