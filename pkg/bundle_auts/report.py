import sys
from pathlib import Path
from typing import Optional, TextIO

from jinja2 import Environment, FileSystemLoader
from pydantic import BaseModel

from .bundle import BundleContext, BundleElement, torus_normal_form
from .parser import format_element, format_word
from .verify import PUSH_STATEMENTS, VerificationReport
from .words import dehn_reduce, power, surface_relator

COUNTEREXAMPLE_LIMIT = 10


class ContextInfo(BaseModel):
    g: int
    k: int
    relator: str
    euler_characteristic: int
    divisor: int
    splits: bool
    unit_tangent: bool


class ReduceResult(BaseModel):
    g: int
    k: int
    word: str
    residual: str
    trivial: bool
    z_exponent: Optional[int] = None
    relator_count: Optional[int] = None
    method: str


def describe_context(ctx: BundleContext) -> ContextInfo:
    g, k = ctx.genus, ctx.euler
    divisor = 2 * g - 2
    return ContextInfo(
        g=g,
        k=k,
        relator=format_word(surface_relator(g), "bundle"),
        euler_characteristic=2 - 2 * g,
        divisor=divisor,
        splits=divisor == 0 or k % divisor == 0,
        unit_tangent=k == 2 - 2 * g,
    )


def reduce_element(ctx: BundleContext, x: BundleElement) -> ReduceResult:
    """Decide whether x is central and report its z exponent."""
    ctx.check(x)
    if ctx.genus == 1:
        p, q, r = torus_normal_form(x.word, x.zexp, ctx.euler)
        residual = format_word(power((1,), p) + power((2,), q), "bundle")
        trivial = (p, q) == (0, 0)
        return ReduceResult(
            g=ctx.genus,
            k=ctx.euler,
            word=format_element(x),
            residual=residual,
            trivial=trivial,
            z_exponent=r if trivial else None,
            method="normal form",
        )
    result = dehn_reduce(ctx.surface, x.word)
    trivial = not result.residual
    return ReduceResult(
        g=ctx.genus,
        k=ctx.euler,
        word=format_element(x),
        residual=format_word(result.residual, "bundle"),
        trivial=trivial,
        z_exponent=x.zexp + ctx.euler * result.relator_count if trivial else None,
        relator_count=result.relator_count if trivial else None,
        method="dehn",
    )


class ReportWriter:
    def __init__(self):
        template_dir = Path(__file__).parent / "templates"
        self.env = Environment(
            loader=FileSystemLoader(template_dir),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    def render_summary(self, report: VerificationReport) -> str:
        template = self.env.get_template("summary.txt.j2")
        return template.render(report=report, limit=COUNTEREXAMPLE_LIMIT, push_statements=PUSH_STATEMENTS)

    def render_info(self, info: ContextInfo) -> str:
        return self.env.get_template("info.txt.j2").render(info=info)

    def render_reduce(self, result: ReduceResult) -> str:
        return self.env.get_template("reduce.txt.j2").render(result=result)

    def write_json(self, report: VerificationReport, path: str, stream: Optional[TextIO] = None) -> Path:
        """Write the JSON report; the status line goes to `stream` (stdout by default)."""
        filepath = Path(path)
        filepath.parent.mkdir(parents=True, exist_ok=True)
        with open(filepath, "w", encoding="utf-8") as f:
            f.write(report.model_dump_json(indent=2))
            f.write("\n")
        print(f"Report written: {filepath}", file=stream or sys.stdout)
        return filepath
