import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from .bundle import BundleContext
from .config import RunConfig, load_config
from .constructions import sigma
from .endos import BundleEndo, fixes_c, preserves_bundle_relation, symplectic_type
from .errors import BundleAutsError, UnsupportedContextError
from .fixtures import check_corpus, corpus_path, generate_corpus, load_corpus, write_corpus
from .parser import parse_element, parse_endo_literal
from .report import ReportWriter, describe_context, reduce_element
from .verify import statement_names, verify_statement


def _add_context_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-g", type=int, help="Genus of the base surface (default: 2).")
    parser.add_argument("-k", type=int, help="Euler number of the circle bundle (default: 1).")
    parser.add_argument("--json", action="store_true", help="Print JSON instead of text.")


def _add_sampling_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, help="Non-negative seed for the PCG64 trial streams.")
    parser.add_argument("--trials", type=int, help="Number of trials.")
    parser.add_argument("--max-word-len", type=int, dest="max_word_len", help="Length bound for sampled words.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bundle-auts",
        description="Word problems, automorphisms and point-pushing identities for circle bundles over surfaces.",
    )
    parser.add_argument("--config", type=str, help="Path to a specific config file (default: pyproject.toml).")
    commands = parser.add_subparsers(dest="command", required=True)

    reduce_cmd = commands.add_parser("reduce", help="Decide whether a word is a power of z.")
    _add_context_flags(reduce_cmd)
    reduce_cmd.add_argument("word", help='Word literal, e.g. "a1 b1 ~a1 ~b1 z^2".')

    verify_cmd = commands.add_parser("verify", help="Run a randomized verification suite.")
    verify_cmd.add_argument("statement", choices=statement_names())
    _add_context_flags(verify_cmd)
    _add_sampling_flags(verify_cmd)
    verify_cmd.add_argument("--oracle-depth", type=int, dest="oracle_depth", help="Relator events searched by the oracle.")
    verify_cmd.add_argument("--report", type=str, dest="report_path", help="Write the JSON report to this path.")

    info_cmd = commands.add_parser("info", help="Print facts about X_g^k.")
    _add_context_flags(info_cmd)

    corpus_cmd = commands.add_parser("corpus", help="Regenerate or check the regression corpus.")
    _add_context_flags(corpus_cmd)
    _add_sampling_flags(corpus_cmd)
    corpus_cmd.add_argument("--check", action="store_true", help="Check the frozen corpus instead of regenerating it.")
    corpus_cmd.add_argument("--fixtures-dir", type=str, dest="fixtures_dir", help="Corpus directory.")

    endo_cmd = commands.add_parser("endo", help="Check an endomorphism literal.")
    _add_context_flags(endo_cmd)
    endo_cmd.add_argument("literal", help='JSON literal, e.g. \'{"a1": "a1", "b1": "b1 a1"}\'.')
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    base = load_config(args.config)
    overrides = {
        name: getattr(args, name, None)
        for name in ("g", "k", "seed", "trials", "max_word_len", "oracle_depth", "report_path", "fixtures_dir")
    }
    if args.json:
        overrides["output"] = "json"
    g = overrides["g"] if overrides["g"] is not None else base.g
    k = overrides["k"] if overrides["k"] is not None else base.k
    if (g, k) == (1, 0):
        raise UnsupportedContextError("Assume (g,k) != (1,0): the center of pi_1(X_1^0) is not <z>")
    return base.with_overrides(**overrides)


def cmd_reduce(config: RunConfig, literal: str) -> int:
    ctx = BundleContext(config.g, config.k)
    result = reduce_element(ctx, parse_element(literal, config.g))
    if config.output == "json":
        print(result.model_dump_json(indent=2))
    else:
        print(ReportWriter().render_reduce(result), end="")
    return 0


def cmd_verify(config: RunConfig, statement: str) -> int:
    report = verify_statement(config, statement)
    writer = ReportWriter()
    if config.output == "json":
        print(report.model_dump_json(indent=2))
    else:
        print(writer.render_summary(report), end="")
    if config.report_path:
        # keep stdout parseable in JSON mode
        stream = sys.stderr if config.output == "json" else sys.stdout
        writer.write_json(report, config.report_path, stream)
    return 0 if report.ok else 1


def cmd_info(config: RunConfig) -> int:
    info = describe_context(BundleContext(config.g, config.k))
    if config.output == "json":
        print(info.model_dump_json(indent=2))
    else:
        print(ReportWriter().render_info(info), end="")
    return 0


def cmd_corpus(config: RunConfig, check: bool) -> int:
    if not check:
        write_corpus(generate_corpus(config), config.fixtures_dir)
        return 0
    path = corpus_path(config.fixtures_dir, config.g, config.k)
    mismatches = check_corpus(load_corpus(path))
    for entry, got in mismatches:
        print(f"Mismatch: {entry.word}: expected {entry.z_exponent}, got {got}")
    print(f"Checked {path}: {len(mismatches)} mismatches")
    return 1 if mismatches else 0


def cmd_endo(config: RunConfig, literal: str) -> int:
    ctx = BundleContext(config.g, config.k)
    e = parse_endo_literal(literal, config.g)
    if isinstance(e, BundleEndo):
        print(f"bundle endomorphism; preserves relation: {preserves_bundle_relation(ctx, e)}")
    else:
        print(f"free endomorphism; fixes c: {fixes_c(e)}")
        if fixes_c(e):
            print(f"sigma(f) preserves relation: {preserves_bundle_relation(ctx, sigma(ctx, e))}")
    print(f"symplectic type: {symplectic_type(e)}")
    return 0


def main(argv: Optional[List[str]] = None) -> None:
    args = build_parser().parse_args(argv)

    try:
        if not args.json:
            print("Loading config...")
        config = resolve_config(args)
        if not args.json:
            print(f"Loaded config: {config}")

        if args.command == "reduce":
            code = cmd_reduce(config, args.word)
        elif args.command == "verify":
            code = cmd_verify(config, args.statement)
        elif args.command == "info":
            code = cmd_info(config)
        elif args.command == "corpus":
            code = cmd_corpus(config, args.check)
        else:
            code = cmd_endo(config, args.literal)
    except BundleAutsError as e:
        print(f"Error: {e}", file=sys.stderr if args.json else sys.stdout)
        sys.exit(e.exit_code)
    except ValidationError as e:
        print(f"Error: invalid options: {e}", file=sys.stderr if args.json else sys.stdout)
        sys.exit(2)

    sys.exit(code)


if __name__ == "__main__":
    main()
