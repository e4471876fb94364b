"""
Randomized verification of the splitting and point-pushing identities.

Every statement runs `trials` independent trials. Trial i draws from its
own PCG64 stream seeded by SeedSequence([seed, i]), so a report depends
only on the configuration and trials can be replayed one at a time.
"""
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel

from .bundle import BundleContext, BundleElement, torus_normal_form, z_exponent
from .config import RunConfig
from .constructions import (
    DEFAULT_CONVENTION,
    Convention,
    PushTable,
    bootstrap_conventions,
    inner,
    inner_inverse,
    iota,
    phi,
    predicted_push_image,
    push,
    sample_mapping_class,
    sample_push_word,
    sigma,
    tau,
    transvection,
    transvection_part,
)
from .endos import (
    BundleEndo,
    FreeEndo,
    bundle_endo_eq,
    compose,
    free_endo_equal,
    preserves_bundle_relation,
    symplectic_type,
)
from .errors import BundleAutsError, MalformedInputError
from .homology import HomologyClass, abelianize, homology_basis, intersection, poincare_delta
from .oracle import TrivialWordOracle
from .parser import format_element, format_word
from .words import (
    FreeWord,
    commutator,
    concat,
    dehn_reduce,
    invert,
    power,
    random_word,
    surface_relator,
)

EULER_GRID_GENERA = (1, 2, 3)
EULER_GRID_OFFSETS = (-2, -1, 1, 2, 3)

STATEMENTS = (
    "euler",
    "splitting",
    "kernel-tau",
    "push-identity",
    "push-factorization",
    "diagram",
    "k-linearity",
    "word-problem-oracle",
    "aut-membership",
    "sigma-hom",
    "commutation",
)
PUSH_STATEMENTS = {"push-identity", "push-factorization", "diagram", "k-linearity", "commutation", "aut-membership"}

# Aliases accepted on the command line
STATEMENT_ALIASES = {
    "prop-3-3": "push-identity",
    "cor-3-4": "push-factorization",
    "theorem-A": "diagram",
}


class TrialOutcome(BaseModel):
    index: int
    passed: bool
    sample: str
    detail: Optional[str] = None


class VerificationReport(BaseModel):
    statement: str
    g: int
    k: int
    seed: int
    trials: int
    passed: int
    failed: int
    max_word_len: int
    convention: Optional[str] = None
    valid_conventions: List[str] = []
    outcomes: List[TrialOutcome] = []
    counterexamples: List[TrialOutcome] = []

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed == self.trials


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def euler_grid() -> List[Tuple[int, int]]:
    """(g, k) for g in 1..3 and k in {-2, -1, 1, 2, 3, 2g-2}, without (1, 0)."""
    grid = []
    for g in EULER_GRID_GENERA:
        for k in sorted(set(EULER_GRID_OFFSETS) | {2 * g - 2}):
            if (g, k) != (1, 0):
                grid.append((g, k))
    return grid


TrialResult = Tuple[bool, str, Optional[str]]


class Verifier:
    def __init__(self, config: RunConfig):
        self.config = config
        self.ctx = BundleContext(config.g, config.k)
        self._table: Optional[PushTable] = None
        self._valid: Optional[List[Convention]] = None
        self.statements: Dict[str, Callable[[np.random.Generator, int], TrialResult]] = {
            name: getattr(self, "check_" + name.replace("-", "_")) for name in STATEMENTS
        }

    @property
    def table(self) -> PushTable:
        if self._table is None:
            self._table = PushTable.build(self.ctx.genus)
        return self._table

    @property
    def valid_conventions(self) -> List[Convention]:
        if self._valid is None:
            self._valid = bootstrap_conventions(self.ctx, self.table)
        return self._valid

    @property
    def convention(self) -> Convention:
        valid = self.valid_conventions
        if not valid or DEFAULT_CONVENTION in valid:
            return DEFAULT_CONVENTION
        return valid[0]

    def _push_word(self, rng: np.random.Generator, index: int) -> FreeWord:
        # the first 2g trials push the standard generators
        if index < 2 * self.ctx.genus:
            return (index + 1,)
        return sample_push_word(rng, self.ctx.genus, self.config.max_word_len)

    def _random_class(self, rng: np.random.Generator) -> HomologyClass:
        return HomologyClass(coords=tuple(int(v) for v in rng.integers(-3, 4, size=2 * self.ctx.genus)))

    def _random_element(self, rng: np.random.Generator) -> BundleElement:
        length = int(rng.integers(0, self.config.max_word_len + 1))
        return BundleElement(random_word(rng, self.ctx.genus, length), int(rng.integers(-3, 4)))

    def _mapping_class(self, rng: np.random.Generator) -> Tuple[FreeEndo, FreeEndo, str]:
        length = int(rng.integers(1, max(self.config.max_word_len, 1) + 1))
        f, f_inv = sample_mapping_class(rng, self.table, length)
        return f, f_inv, f"mapping class of length {length}"

    # Statements

    def check_euler(self, rng: np.random.Generator, index: int) -> TrialResult:
        g, k = euler_grid()[index]
        ctx = BundleContext(g, k)
        m = z_exponent(ctx, BundleElement(surface_relator(g), 0))
        return m == k, f"g={g} k={k}", None if m == k else f"z exponent {m}"

    def check_splitting(self, rng: np.random.Generator, index: int) -> TrialResult:
        f, f_inv, sample = self._mapping_class(rng)
        lifted = sigma(self.ctx, f)
        if not free_endo_equal(self.ctx.surface, phi(self.ctx, lifted), f):
            return False, sample, "phi(sigma(f)) differs from f"
        if not bundle_endo_eq(self.ctx, compose(lifted, sigma(self.ctx, f_inv)), BundleEndo.identity(self.ctx.genus)):
            return False, sample, "sigma(f) o sigma(f^-1) is not the identity"
        gamma = self._random_class(rng)
        kernel_image = phi(self.ctx, transvection(self.ctx, gamma))
        if not free_endo_equal(self.ctx.surface, kernel_image, FreeEndo.identity(self.ctx.genus)):
            return False, str(list(gamma.coords)), "phi of a transvection is not the identity"
        return True, sample, None

    def check_kernel_tau(self, rng: np.random.Generator, index: int) -> TrialResult:
        genus = self.ctx.genus
        if index < 2 * genus:
            gamma = HomologyClass.basis(genus, index)
            got = tau(self.ctx, transvection(self.ctx, gamma))
            sample = str(list(gamma.coords))
            if got != poincare_delta(gamma):
                return False, sample, f"tau gave {list(got.coords)}"
            # tau(transvection(gamma)) is the functional w -> <w, gamma>
            for w in homology_basis(genus):
                if got.evaluate(w) != intersection(w, gamma):
                    return False, sample, f"tau differs from <w, gamma> at w = {list(w.coords)}"
            return True, sample, None
        first, second = self._random_class(rng), self._random_class(rng)
        sample = f"{list(first.coords)} + {list(second.coords)}"
        composite = compose(transvection(self.ctx, first), transvection(self.ctx, second))
        if not bundle_endo_eq(self.ctx, composite, transvection(self.ctx, first + second)):
            return False, sample, "transvections are not additive"
        if tau(self.ctx, composite) != tau(self.ctx, transvection(self.ctx, first)) + tau(self.ctx, transvection(self.ctx, second)):
            return False, sample, "tau is not additive"
        if tau(self.ctx, transvection(self.ctx, first)) != poincare_delta(first):
            return False, sample, "tau o transvection differs from poincare duality"
        return True, sample, None

    def check_push_identity(self, rng: np.random.Generator, index: int) -> TrialResult:
        convention = self.convention
        word = self._push_word(rng, index)
        sample = format_word(word)
        lifted = sigma(self.ctx, push(self.table, word))
        if not bundle_endo_eq(self.ctx, lifted, predicted_push_image(self.ctx, word, convention)):
            return False, sample, "sigma(push t) differs from C_t o transvection(k[t])"

        # a second lift: t u c^e u^-1 projects to the same element of pi_1(S_g)
        u = random_word(rng, self.ctx.genus, int(rng.integers(0, 4)))
        exponent = 1 if rng.integers(0, 2) else -1
        other = concat(word, u, power(surface_relator(self.ctx.genus), exponent), invert(u))
        if not bundle_endo_eq(self.ctx, sigma(self.ctx, push(self.table, other)), lifted):
            return False, f"{sample} / {format_word(other)}", "sigma(push t) depends on the lift"
        if not bundle_endo_eq(
            self.ctx,
            inner(self.ctx, iota(self.ctx, word), convention.conjugation),
            inner(self.ctx, iota(self.ctx, other), convention.conjugation),
        ):
            return False, f"{sample} / {format_word(other)}", "inner automorphism depends on the lift"
        return True, sample, None

    def check_push_factorization(self, rng: np.random.Generator, index: int) -> TrialResult:
        convention = self.convention
        word = self._push_word(rng, index)
        sample = format_word(word)
        remainder = compose(
            sigma(self.ctx, push(self.table, word)),
            inner_inverse(self.ctx, iota(self.ctx, word), convention.conjugation),
        )
        shift = abelianize(self.ctx.surface, word).scale(self.ctx.euler)
        if not bundle_endo_eq(self.ctx, remainder, transvection(self.ctx, shift, convention.intersection_sign)):
            return False, sample, "sigma(push t) o C_t^-1 is not transvection(k[t])"
        expected = poincare_delta(shift).scale(convention.intersection_sign)
        got = tau(self.ctx, remainder)
        if got != expected:
            return False, sample, f"tau gave {list(got.coords)}, expected {list(expected.coords)}"
        return True, sample, None

    def check_k_linearity(self, rng: np.random.Generator, index: int) -> TrialResult:
        word = self._push_word(rng, index)
        sample = format_word(word)
        genus = self.ctx.genus
        unit = transvection_part(BundleContext(genus, 1), self.table, word, self.convention)
        for k in sorted({1, 2, 3, self.ctx.euler}):
            if (genus, k) == (1, 0):
                continue
            part = transvection_part(BundleContext(genus, k), self.table, word, self.convention)
            if part != unit.scale(k):
                return False, sample, f"k={k}: {list(part.coords)} is not {k} * {list(unit.coords)}"
        return True, sample, None

    def check_diagram(self, rng: np.random.Generator, index: int) -> TrialResult:
        for check in (self.check_splitting, self.check_push_factorization, self.check_k_linearity):
            passed, sample, detail = check(rng, index)
            if not passed:
                return passed, sample, detail
        return True, sample, None

    def check_word_problem_oracle(self, rng: np.random.Generator, index: int) -> TrialResult:
        surface = self.ctx.surface
        genus = surface.genus
        max_len = self.config.max_word_len
        if index % 2:
            word = random_word(rng, genus, int(rng.integers(0, max_len + 1)))
        else:
            # a product of conjugated relators, trimmed to the length bound when possible
            relator = surface_relator(genus)
            u = random_word(rng, genus, int(rng.integers(0, max(max_len // 4, 1))))
            exponent = 1 if rng.integers(0, 2) else -1
            word = concat(u, power(relator, exponent), invert(u))
        sample = format_word(word)
        oracle = TrivialWordOracle(
            surface,
            depth=self.config.oracle_depth,
            frontier_cap=self.config.oracle_frontier,
            slack=self.config.oracle_slack,
        )
        certificate = oracle.search(word)

        if genus == 1:
            p, q, r = torus_normal_form(word, 0, 1)
            trivial, count = (p, q) == (0, 0), r
        else:
            result = dehn_reduce(surface, word)
            trivial, count = not result.residual, result.relator_count

        if certificate is None:
            return True, sample, None if not trivial else "oracle inconclusive"
        if not trivial:
            return False, sample, f"oracle found count {certificate} but the word is nontrivial"
        if certificate != count:
            return False, sample, f"relator count {count} disagrees with oracle count {certificate}"
        return True, sample, None

    def check_aut_membership(self, rng: np.random.Generator, index: int) -> TrialResult:
        f, _, _ = self._mapping_class(rng)
        word = self._push_word(rng, index)
        x = self._random_element(rng)
        endos = {
            "sigma(f)": sigma(self.ctx, f),
            "sigma(push t)": sigma(self.ctx, push(self.table, word)),
            "transvection": transvection(self.ctx, self._random_class(rng)),
            "inner": inner(self.ctx, x, self.convention.conjugation),
        }
        for name, e in endos.items():
            if not preserves_bundle_relation(self.ctx, e):
                return False, name, "relation not preserved"
            if symplectic_type(e) != 1:
                return False, name, f"symplectic type {symplectic_type(e)}"
        return True, format_word(word), None

    def check_sigma_hom(self, rng: np.random.Generator, index: int) -> TrialResult:
        f1, f1_inv, first = self._mapping_class(rng)
        f2, f2_inv, second = self._mapping_class(rng)
        for name, (a, b) in {"f1 f2": (f1, f2), "f1 f2^-1": (f1, f2_inv), "f1^-1 f2": (f1_inv, f2)}.items():
            if not bundle_endo_eq(self.ctx, sigma(self.ctx, compose(a, b)), compose(sigma(self.ctx, a), sigma(self.ctx, b))):
                return False, f"{name} ({first}, {second})", "sigma is not multiplicative"
        return True, f"{first}, {second}", None

    def check_commutation(self, rng: np.random.Generator, index: int) -> TrialResult:
        gamma = self._random_class(rng)
        x = self._random_element(rng)
        sample = f"{list(gamma.coords)} / {format_element(x)}"
        direction = self.convention.conjugation
        t_hat, conj = transvection(self.ctx, gamma), inner(self.ctx, x, direction)
        if not bundle_endo_eq(self.ctx, compose(t_hat, conj), compose(conj, t_hat)):
            return False, sample, "transvection does not commute with the inner automorphism"

        half = max(self.config.max_word_len // 2, 1)
        u = random_word(rng, self.ctx.genus, int(rng.integers(1, half + 1)))
        v = random_word(rng, self.ctx.genus, int(rng.integers(1, half + 1)))
        word = commutator(u, v)
        lifted = sigma(self.ctx, push(self.table, word))
        if not bundle_endo_eq(self.ctx, lifted, inner(self.ctx, iota(self.ctx, word), direction)):
            return False, format_word(word), "push of a commutator is not inner"
        if not transvection_part(self.ctx, self.table, word, self.convention).is_zero():
            return False, format_word(word), "push of a commutator has a transvection part"
        return True, sample, None

    def trial_count(self, statement: str) -> int:
        if statement == "euler":
            return len(euler_grid())
        return self.config.trials

    def run(self, statement: str) -> VerificationReport:
        name = STATEMENT_ALIASES.get(statement, statement)
        if name not in self.statements:
            raise MalformedInputError(f"Unknown statement {statement!r}")
        check = self.statements[name]
        outcomes: List[TrialOutcome] = []
        for index in range(self.trial_count(name)):
            rng = trial_rng(self.config.seed, index)
            try:
                passed, sample, detail = check(rng, index)
            except BundleAutsError as e:
                passed, sample, detail = False, f"trial {index}", f"{type(e).__name__}: {e}"
            outcomes.append(TrialOutcome(index=index, passed=passed, sample=sample, detail=detail))

        uses_pushes = name in PUSH_STATEMENTS
        passed_count = sum(1 for outcome in outcomes if outcome.passed)
        return VerificationReport(
            statement=name,
            g=self.ctx.genus,
            k=self.ctx.euler,
            seed=self.config.seed,
            trials=len(outcomes),
            passed=passed_count,
            failed=len(outcomes) - passed_count,
            max_word_len=self.config.max_word_len,
            convention=self.convention.label() if uses_pushes and self.valid_conventions else None,
            valid_conventions=[c.label() for c in self.valid_conventions] if uses_pushes else [],
            outcomes=outcomes,
            counterexamples=[outcome for outcome in outcomes if not outcome.passed],
        )


def statement_names() -> List[str]:
    return list(STATEMENTS) + list(STATEMENT_ALIASES)


def verify_statement(config: RunConfig, statement: str) -> VerificationReport:
    return Verifier(config).run(statement)
