"""Command-line interface of the dominant dimension workbench.

Exit codes: 0 on success and agreement, 1 when independent computations
disagree or a corpus fixture mismatches, 2 on input errors.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence

import yaml

from algebras.algebra import Algebra, validate
from algebras.presentation import compile_dsl, nakayama, parse_kupisch
from algebras.serialization import read_algebra_json, read_module_json, write_algebra_json
from bimodule_lab.checkers import (DOMDIM_METHODS, ConjectureProbeChecker, DomdimChecker, HochschildChecker,
                                   InvariantsChecker, MainTheoremChecker, MhoPathChecker)
from config.config_loader import ConfigError, default_cap, default_seed, get_config
from corpus.corpus import corpus_list, corpus_verify, load_fixture
from exactlin.field import FieldSpec
from homology.resolutions import cosyzygy, syzygy
from modrep.module import Module, rad_module, simple_module
from modrep.projectives import indecomposable_projective, injective_indecomposable
from scheduler.sweep_scheduler import SweepScheduler
from utils.utils import DisagreementDetected, DomDimLabError, SchemaError, UnknownName, setup_logging

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_INPUT = 2

LIBRARY_LOGGERS = ('exactlin', 'algebras', 'modrep', 'homology', 'bimodule_lab', 'corpus')


@dataclass
class RunConfig:
    """Options shared by every subcommand."""

    characteristic: int
    cap: int
    seed: int
    output_format: str
    source: Optional[str] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        char = args.char if args.char is not None else int(get_config().get('field.characteristic', 101))
        cap = default_cap(args.cap)
        if cap < 1:
            raise SchemaError(f"cap must be at least 1, got {cap}")
        return cls(char, cap, default_seed(args.seed), args.format, getattr(args, 'algebra', None))


def load_algebra(source: str, characteristic: int) -> Algebra:
    """Resolve ``corpus:<name>``, ``kupisch:<c1,c2,...>[:cyclic]``, a ``.json`` algebra or a DSL file.

    Corpus fixtures are built over the requested characteristic; algebra JSON
    carries its own field.
    """
    if source.startswith("corpus:"):
        return load_fixture(source[len("corpus:"):]).build(characteristic)
    if source.startswith("kupisch:"):
        body = source[len("kupisch:"):]
        shape = "linear"
        if ":" in body:
            body, shape = body.rsplit(":", 1)
        return nakayama(parse_kupisch(body, shape), FieldSpec(characteristic))
    path = Path(source)
    text = path.read_text(encoding='utf-8')
    if path.suffix == ".json":
        return read_algebra_json(text)
    return compile_dsl(text, FieldSpec(characteristic), name=path.stem)


def _vertex(a: Algebra, label: str) -> int:
    if label not in a.vertex_labels:
        raise UnknownName(f"{a!r} has no vertex {label!r}")
    return list(a.vertex_labels).index(label)


def load_module(a: Algebra, spec: str) -> Module:
    """A module from a JSON file or from ``[op:]...<S|P|I>:<vertex>``.

    Operators, applied right to left: ``rad``, ``omega<k>`` (k-th syzygy),
    ``cosyzygy<k>``.
    """
    if spec.endswith(".json"):
        return read_module_json(Path(spec).read_text(encoding='utf-8'), a)
    parts = spec.split(":")
    if len(parts) < 2:
        raise SchemaError(f"module spec {spec!r} must end with <S|P|I>:<vertex>")
    *ops, base, label = parts
    v = _vertex(a, label)
    if base == "S":
        m = simple_module(a, v)
    elif base == "P":
        m = indecomposable_projective(a, v).module
    elif base == "I":
        m = injective_indecomposable(a, v)
    else:
        raise SchemaError(f"unknown base module {base!r}; use S, P or I")
    for op in reversed(ops):
        if op == "rad":
            m = rad_module(m)[0]
        elif op.startswith("omega") and op[5:].isdigit():
            m = syzygy(m, int(op[5:]))
        elif op.startswith("cosyzygy") and op[8:].isdigit():
            m = cosyzygy(m, int(op[8:]))
        else:
            raise SchemaError(f"unknown module operator {op!r}")
    return Module(m.algebra, m.dim, m.action, name=spec)


def emit(result: Dict[str, Any], output_format: str) -> None:
    if output_format == "json":
        print(json.dumps(result, indent=2, sort_keys=True, default=str))
    else:
        print(yaml.safe_dump(json.loads(json.dumps(result, default=str)), sort_keys=False).rstrip())


def _status_code(result: Dict[str, Any]) -> int:
    return EXIT_DISAGREEMENT if result.get('status') == 'disagreement' else EXIT_OK


def cmd_validate(args: argparse.Namespace, run: RunConfig) -> int:
    a = load_algebra(args.algebra, run.characteristic)
    report = validate(a).to_dict()
    report['algebra'] = a.fingerprint
    report['name'] = a.name
    emit(report, run.output_format)
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace, run: RunConfig) -> int:
    a = load_algebra(args.algebra, run.characteristic)
    result = InvariantsChecker(a, run.cap, run.seed).run(strict=False)
    emit(result, run.output_format)
    return _status_code(result)


def cmd_domdim(args: argparse.Namespace, run: RunConfig) -> int:
    a = load_algebra(args.algebra, run.characteristic)
    methods = list(DOMDIM_METHODS) if args.method == "all" else [args.method]
    result = DomdimChecker(a, methods, run.cap, run.seed).run(strict=False)
    emit(result, run.output_format)
    return _status_code(result)


def cmd_check_theorem(args: argparse.Namespace, run: RunConfig) -> int:
    a = load_algebra(args.algebra, run.characteristic)
    result = MainTheoremChecker(a, args.n_max, run.cap, run.seed).run(strict=False)
    emit(result, run.output_format)
    return _status_code(result)


def cmd_hochschild(args: argparse.Namespace, run: RunConfig) -> int:
    a = load_algebra(args.algebra, run.characteristic)
    result = HochschildChecker(a, args.l_max, run.cap, run.seed).run(strict=False)
    emit(result, run.output_format)
    return _status_code(result)


def cmd_probe(args: argparse.Namespace, run: RunConfig) -> int:
    a = load_algebra(args.algebra, run.characteristic)
    result = ConjectureProbeChecker(a, run.cap, run.seed).run(strict=False)
    emit(result, run.output_format)
    return _status_code(result)


def cmd_mho_path(args: argparse.Namespace, run: RunConfig) -> int:
    a = load_algebra(args.algebra, run.characteristic)
    m = load_module(a, args.module)
    result = MhoPathChecker(a, m, args.length, run.cap, run.seed).run(strict=False)
    emit(result, run.output_format)
    return _status_code(result)


def cmd_nakayama(args: argparse.Namespace, run: RunConfig) -> int:
    a = nakayama(parse_kupisch(args.kupisch, args.shape), FieldSpec(run.characteristic))
    if args.emit:
        Path(args.emit).write_text(write_algebra_json(a) + "\n", encoding='utf-8')
    report = validate(a).to_dict()
    report['algebra'] = a.fingerprint
    report['name'] = a.name
    if args.emit:
        report['written_to'] = args.emit
    emit(report, run.output_format)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, run: RunConfig) -> int:
    scheduler = SweepScheduler(args.max_entry, args.max_vertices, run.cap, run.seed, args.jobs,
                               run.characteristic)
    report = scheduler.run()
    if args.report:
        scheduler.save_report(report, args.report)
    emit(report['summary'], run.output_format)
    return EXIT_DISAGREEMENT if report['summary']['disagreement'] else EXIT_OK


def cmd_corpus(args: argparse.Namespace, run: RunConfig) -> int:
    if args.action == "list":
        emit({'fixtures': [{'name': f.name, 'description': f.description, 'fields': f.fields,
                            'expected': len(f.expected)} for f in corpus_list()]},
             run.output_format)
        return EXIT_OK
    names = [args.name] if args.name else [f.name for f in corpus_list()]
    results = [corpus_verify(name, run.cap, args.char) for name in names]
    emit({'results': results, 'passed': all(r['passed'] for r in results)}, run.output_format)
    return EXIT_OK if all(r['passed'] for r in results) else EXIT_DISAGREEMENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domdimlab",
        description="Exact homological invariants of finite-dimensional algebras and their bimodules.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text", help="Output format")
    parser.add_argument("--seed", type=int, default=None, help="Seed for randomized isomorphism tests")
    parser.add_argument("--cap", type=int, default=None,
                        help="Bound for every 'for all i' condition (default: DOMDIMLAB_CAP or config)")
    parser.add_argument("--char", type=int, default=None, help="Field characteristic (0 = rationals)")
    parser.add_argument("--log-level", default=None, help="Log level for library modules")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_algebra(name: str, handler: Callable[..., int], help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("algebra", help="corpus:<name>, kupisch:<c1,...>[:cyclic], algebra .json or DSL file")
        p.set_defaults(handler=handler)
        return p

    with_algebra("validate", cmd_validate, "Validate an algebra and print its structure report")
    with_algebra("invariants", cmd_invariants, "Dimensions, gldim, domdim, selfinjectivity, gendo-symmetry")
    p = with_algebra("domdim", cmd_domdim, "Dominant dimension by one or all methods")
    p.add_argument("--method", choices=DOMDIM_METHODS + ("all",), default="coresolution")
    p = with_algebra("check-theorem", cmd_check_theorem, "Main theorem conditions for n = 1..n-max")
    p.add_argument("--n-max", type=int, default=3)
    p = with_algebra("hochschild", cmd_hochschild, "Hochschild (co)homology by two routes")
    p.add_argument("--l-max", type=int, default=4)
    p = with_algebra("probe-conjectures", cmd_probe, "Bounded conjecture probes")
    # leaves the global --cap in place unless given after the subcommand
    p.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                   help="Bound for the conjecture checks (overrides --cap)")
    p = with_algebra("mho-path", cmd_mho_path, "mho-paths into and out of a module")
    p.add_argument("--module", required=True, help="module JSON or [rad:|omega<k>:|cosyzygy<k>:]<S|P|I>:<vertex>")
    p.add_argument("--length", type=int, default=2)

    p = sub.add_parser("nakayama", help="Build a Nakayama algebra from its Kupisch series")
    p.add_argument("--kupisch", required=True, help="comma-separated Kupisch series, e.g. 2,3")
    p.add_argument("--shape", choices=("linear", "cyclic"), default="linear")
    p.add_argument("--emit", default=None, help="write the algebra JSON to this path")
    p.set_defaults(handler=cmd_nakayama)

    p = sub.add_parser("sweep-nakayama", help="Run the conjecture probes over a bounded Nakayama family")
    p.add_argument("--max-entry", type=int, required=True)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--report", default=None, help="write the full JSON report to this path")
    p.add_argument("--jobs", type=int, default=None, help="worker threads")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("corpus", help="List or verify the built-in fixtures")
    p.add_argument("action", choices=("list", "verify"))
    p.add_argument("name", nargs="?", default=None)
    p.set_defaults(handler=cmd_corpus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    logger = setup_logging("cli", level=args.log_level or "WARNING")
    if args.log_level:
        for name in LIBRARY_LOGGERS:
            setup_logging(name, level=args.log_level)
    try:
        run = RunConfig.from_args(args)
        return args.handler(args, run)
    except DisagreementDetected as e:
        logger.error(f"Disagreement: {e}")
        emit({'status': 'disagreement', 'error': str(e), 'report': e.report}, args.format)
        return EXIT_DISAGREEMENT
    except (DomDimLabError, ConfigError, OSError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


def run_cli() -> None:
    sys.exit(main())
