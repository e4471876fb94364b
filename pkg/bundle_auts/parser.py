import json
import re
from typing import Dict, List, Sequence, Tuple, Union

from .bundle import BundleElement
from .endos import BundleEndo, FreeEndo
from .errors import MalformedInputError
from .words import FreeWord, Letter, alpha, beta, decode_letter, encode_letter, free_reduce

# a1 b1 A1 B1 ~a1 ... plus z, ~z and z^m
TOKEN_PATTERN = re.compile(r"(~?)(?:([aAbB])(\d+)|z(?:\^(-?\d+))?)")
IDENTITY_TOKENS = {"", "1", "e"}


class WordParser:
    def __init__(self, genus: int, allow_z: bool = False):
        self.genus = genus
        self.allow_z = allow_z

    def _letter(self, kind: str, index: str, inverse: bool, token: str) -> int:
        i = int(index)
        if i < 1 or i > self.genus:
            raise MalformedInputError(f"Letter {token!r} is out of range for genus {self.genus}")
        return encode_letter(Letter("alpha" if kind in "aA" else "beta", i, -1 if inverse else 1))

    def tokens(self, text: str) -> List[Tuple[str, int]]:
        """Split a literal into ("letter", code) and ("z", exponent) items."""
        items: List[Tuple[str, int]] = []
        stripped = text.strip()
        if stripped in IDENTITY_TOKENS:
            return items
        for token in stripped.split():
            match = TOKEN_PATTERN.fullmatch(token)
            if match is None:
                raise MalformedInputError(f"Cannot read token {token!r}")
            inverse, kind, index, z_power = match.groups()
            if kind is not None:
                items.append(("letter", self._letter(kind, index, bool(inverse), token)))
                continue
            if not self.allow_z:
                raise MalformedInputError(f"Token {token!r} is not a surface group letter")
            exponent = int(z_power) if z_power is not None else 1
            items.append(("z", -exponent if inverse else exponent))
        return items

    def parse_word(self, text: str) -> FreeWord:
        return free_reduce(code for _, code in self.tokens(text))

    def parse_element(self, text: str) -> BundleElement:
        # z is central, so every z token can be folded into the exponent
        codes: List[int] = []
        zexp = 0
        for kind, value in self.tokens(text):
            if kind == "z":
                zexp += value
            else:
                codes.append(value)
        return BundleElement(free_reduce(codes), zexp)


def parse_word(text: str, genus: int) -> FreeWord:
    return WordParser(genus).parse_word(text)


def parse_element(text: str, genus: int) -> BundleElement:
    return WordParser(genus, allow_z=True).parse_element(text)


def format_word(word: Sequence[int], alphabet: str = "surface") -> str:
    if not word:
        return "1"
    parts = []
    for code in word:
        letter = decode_letter(code)
        name = letter.kind[0]
        if alphabet == "bundle":
            name = name.upper()
        parts.append(f"{'~' if letter.sign < 0 else ''}{name}{letter.index}")
    return " ".join(parts)


def format_element(x: BundleElement) -> str:
    if not x.zexp:
        return format_word(x.word, "bundle")
    power = "z" if x.zexp == 1 else f"z^{x.zexp}"
    if not x.word:
        return power
    return f"{format_word(x.word, 'bundle')} {power}"


def _generator_keys(genus: int) -> Dict[str, int]:
    keys = {}
    for i in range(1, genus + 1):
        keys[f"a{i}"] = alpha(i)
        keys[f"b{i}"] = beta(i)
    return keys


def parse_endo_literal(text: str, genus: int) -> Union[FreeEndo, BundleEndo]:
    """
    Read {"a1": "<word>", "b1": "<word>", ..., "z": "z"}.

    A "z" key makes the result a BundleEndo; generators not listed are fixed.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(f"Endomorphism literal is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise MalformedInputError("Endomorphism literal must be a JSON object")

    keys = _generator_keys(genus)
    normalized = {str(key).lower(): value for key, value in data.items()}
    unknown = set(normalized) - set(keys) - {"z"}
    if unknown:
        raise MalformedInputError(f"Unknown generators in literal: {sorted(unknown)}")
    if any(not isinstance(value, str) for value in normalized.values()):
        raise MalformedInputError("Generator images must be word strings")

    if "z" not in normalized:
        parser = WordParser(genus)
        images = [parser.parse_word(normalized.get(key, key)) for key in keys]
        return FreeEndo(genus, images)

    parser = WordParser(genus, allow_z=True)
    elements = [parser.parse_element(normalized.get(key, key)) for key in keys]
    return BundleEndo(genus, elements, parser.parse_element(normalized["z"]))


def format_endo_literal(e: Union[FreeEndo, BundleEndo]) -> str:
    keys = list(_generator_keys(e.genus))
    data: Dict[str, str] = {}
    if isinstance(e, BundleEndo):
        for key, x in zip(keys, e.images):
            data[key] = format_element(x)
        data["z"] = format_element(e.z_image)
    else:
        for key, word in zip(keys, e.images):
            data[key] = format_word(word)
    return json.dumps(data)
