"""Frozen regression corpus of bundle words with their expected z exponents."""
import json
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel

from .bundle import BundleContext, BundleElement, elem_pow, elem_prod, z_exponent, z_power
from .config import RunConfig
from .errors import MalformedInputError, NotInCenterError
from .parser import format_element, parse_element
from .verify import trial_rng
from .words import invert, random_word, surface_relator


class CorpusEntry(BaseModel):
    word: str
    z_exponent: Optional[int] = None  # None: not a power of z


class Corpus(BaseModel):
    g: int
    k: int
    seed: Optional[int] = None
    entries: List[CorpusEntry] = []


def corpus_path(fixtures_dir: str, g: int, k: int) -> Path:
    return Path(fixtures_dir) / f"corpus_g{g}_k{k}.json"


def load_corpus(path: Path) -> Corpus:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return Corpus(**json.load(f))
    except (OSError, json.JSONDecodeError) as e:
        raise MalformedInputError(f"Cannot read corpus {path}: {e}") from e


def expected_exponent(ctx: BundleContext, x: BundleElement) -> Optional[int]:
    try:
        return z_exponent(ctx, x)
    except NotInCenterError:
        return None


def check_corpus(corpus: Corpus) -> List[Tuple[CorpusEntry, Optional[int]]]:
    """Entries whose recomputed exponent differs from the frozen one."""
    ctx = BundleContext(corpus.g, corpus.k)
    mismatches = []
    for entry in corpus.entries:
        got = expected_exponent(ctx, parse_element(entry.word, corpus.g))
        if got != entry.z_exponent:
            mismatches.append((entry, got))
    return mismatches


def generate_corpus(config: RunConfig) -> Corpus:
    """Alternate random words with conjugates of relator powers, one per trial stream."""
    ctx = BundleContext(config.g, config.k)
    relator = BundleElement(surface_relator(config.g), 0)
    entries = []
    for index in range(config.trials):
        rng = trial_rng(config.seed, index)
        if index % 2:
            word = BundleElement(random_word(rng, config.g, int(rng.integers(0, config.max_word_len + 1))), 0)
        else:
            u = random_word(rng, config.g, int(rng.integers(0, 4)))
            word = elem_prod(
                ctx,
                BundleElement(u, 0),
                elem_pow(ctx, relator, int(rng.integers(-2, 3))),
                BundleElement(invert(u), 0),
            )
        x = elem_prod(ctx, word, z_power(int(rng.integers(-3, 4))))
        entries.append(CorpusEntry(word=format_element(x), z_exponent=expected_exponent(ctx, x)))
    return Corpus(g=config.g, k=config.k, seed=config.seed, entries=entries)


def write_corpus(corpus: Corpus, fixtures_dir: str) -> Path:
    path = corpus_path(fixtures_dir, corpus.g, corpus.k)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(corpus.model_dump_json(indent=2))
        f.write("\n")
    print(f"Corpus written: {path}")
    return path
