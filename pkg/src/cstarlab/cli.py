"""Command line interface.

Six commands: ``spectrum``, ``classify``, ``calculus``, ``quotient``,
``characters`` operate on one interchange document; ``verify`` runs the
seeded law suite and needs no input.  Exit codes: 0 success, 1 a verified
law failed, 2 invalid input or configuration.

Structured output (``--format structured``) is a stream of single-line
JSON records; given the same input, seed, and tolerance the bytes are
identical across runs, which makes golden-file diffing trivial.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import CstarError
from .gelfand import characters, gelfand_transform
from .ideals import ideal_from_closed_set, quotient
from .interchange import document_to_json, dump_element, load_document, load_path
from .spectral import apply_polynomial, classify_element, spectrum
from .verify import run_suite, summarize

__all__ = ["RunConfig", "run", "main", "COMMANDS"]

COMMANDS = ("spectrum", "classify", "calculus", "quotient", "characters", "verify")
FORMATS = ("text", "structured")


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs; produced by ``main`` from argv."""

    command: str
    input_path: str | None = None
    inline: str | None = None
    tol: float = 1e-9
    seed: int = 0
    max_size: int = 8
    output_format: str = "text"
    coefficients: tuple[complex, ...] | None = None
    zero_set: tuple[str, ...] | None = None


def _fmt(z: complex) -> str:
    z = complex(z)
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _emit(out, record: dict) -> None:
    out.write(document_to_json(record) + "\n")


def _load_input(config: RunConfig):
    if config.inline is not None:
        text = config.inline
    elif config.input_path is not None:
        return load_path(config.input_path)
    else:
        text = sys.stdin.read()
    return load_document(text)


def run(config: RunConfig, out=None) -> int:
    """Execute one configuration; returns the process exit code."""
    out = out if out is not None else sys.stdout
    if config.command not in COMMANDS:
        print(f"unknown command {config.command!r}", file=sys.stderr)
        return 2
    if config.output_format not in FORMATS:
        print(f"unknown format {config.output_format!r}", file=sys.stderr)
        return 2
    if not config.tol > 0:
        print("--tol must be positive", file=sys.stderr)
        return 2
    if config.max_size < 1:
        print("--max-size must be at least 1", file=sys.stderr)
        return 2

    if config.command == "verify":
        return _cmd_verify(config, out)

    try:
        element = _load_input(config)
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2
    except CstarError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2

    try:
        if config.command == "spectrum":
            return _cmd_spectrum(config, element, out)
        if config.command == "classify":
            return _cmd_classify(config, element, out)
        if config.command == "characters":
            return _cmd_characters(config, element, out)
        if config.command == "calculus":
            return _cmd_calculus(config, element, out)
        return _cmd_quotient(config, element, out)
    except CstarError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


def _cmd_spectrum(config: RunConfig, element, out) -> int:
    points = spectrum(element, config.tol).points
    if config.output_format == "structured":
        _emit(
            out,
            {
                "kind": "spectrum",
                "merge_tol": config.tol,
                "points": [[p.real, p.imag] for p in points],
            },
        )
    else:
        out.write(f"{len(points)} spectrum point(s), merge tolerance {config.tol:g}\n")
        for i, p in enumerate(points):
            out.write(f"  lambda[{i}] = {_fmt(p)}\n")
    return 0


def _cmd_classify(config: RunConfig, element, out) -> int:
    report = classify_element(element, config.tol)
    if config.output_format == "structured":
        for name in sorted(report.flags):
            _emit(
                out,
                {
                    "kind": "classification",
                    "class": name,
                    "member": report.flags[name],
                    "defect": report.witness_tolerances[name],
                },
            )
        if report.positive_offender is not None:
            _emit(
                out,
                {
                    "kind": "positive_offender",
                    "value": [
                        report.positive_offender.real,
                        report.positive_offender.imag,
                    ],
                },
            )
    else:
        for name in sorted(report.flags):
            verdict = "yes" if report.flags[name] else "no"
            out.write(
                f"{name}: {verdict} (defect {report.witness_tolerances[name]:.3e})\n"
            )
        if report.positive_offender is not None:
            out.write(
                f"positivity fails at character value "
                f"{_fmt(report.positive_offender)}\n"
            )
    return 0


def _cmd_characters(config: RunConfig, element, out) -> int:
    algebra = element.algebra
    transform = gelfand_transform(element)
    for chi in characters(algebra):
        value = complex(transform.coords[chi.index])
        if config.output_format == "structured":
            _emit(
                out,
                {
                    "kind": "character",
                    "index": chi.index,
                    "label": chi.label,
                    "value": [value.real, value.imag],
                },
            )
        else:
            out.write(
                f"character {chi.index} at {chi.label!r}: value {_fmt(value)}\n"
            )
    return 0


def _cmd_calculus(config: RunConfig, element, out) -> int:
    if not config.coefficients:
        print("calculus needs --coeffs (ascending, e.g. '1,0,2')", file=sys.stderr)
        return 2
    result = apply_polynomial(config.coefficients, element)
    points = spectrum(result, config.tol).points
    if config.output_format == "structured":
        _emit(out, dump_element(result))
        _emit(
            out,
            {
                "kind": "spectrum",
                "merge_tol": config.tol,
                "points": [[p.real, p.imag] for p in points],
            },
        )
    else:
        out.write(
            "p(a) coordinates: "
            + ", ".join(_fmt(v) for v in result.coords)
            + "\n"
        )
        out.write(
            "spectrum of p(a): " + ", ".join(_fmt(p) for p in points) + "\n"
        )
    return 0


def _cmd_quotient(config: RunConfig, element, out) -> int:
    if not config.zero_set:
        print("quotient needs --zero-set (labels, e.g. 'p,q')", file=sys.stderr)
        return 2
    algebra = element.algebra
    ideal = ideal_from_closed_set(algebra, config.zero_set)
    q, projection = quotient(algebra, ideal)
    image = projection(element)
    if config.output_format == "structured":
        _emit(
            out,
            {
                "kind": "quotient",
                "dimension": q.dim,
                "zero_set": list(q.space.points),
                "norm": q.quotient_norm(element),
            },
        )
        _emit(out, dump_element(image))
    else:
        out.write(f"quotient dimension: {q.dim}\n")
        out.write(f"zero set: {', '.join(q.space.points)}\n")
        out.write(
            "coset values: " + ", ".join(_fmt(v) for v in image.coords) + "\n"
        )
        out.write(f"quotient norm: {q.quotient_norm(element):.12g}\n")
    return 0


def _cmd_verify(config: RunConfig, out) -> int:
    records = run_suite(seed=config.seed, tol=config.tol, max_size=config.max_size)
    summary = summarize(records)
    failed = [row for row in summary if not row["pass"]]
    if config.output_format == "structured":
        for rec in records:
            _emit(
                out,
                {
                    "law": rec.law,
                    "instance": rec.instance,
                    "defect": rec.defect,
                    "pass": rec.passed,
                },
            )
        for row in summary:
            _emit(out, {"kind": "summary", **row})
    else:
        for row in summary:
            verdict = "pass" if row["pass"] else "FAIL"
            out.write(
                f"{row['law']}: {verdict} "
                f"({row['instances']} instances, max defect {row['max_defect']:.3e})\n"
            )
            if row["witness"]:
                out.write(f"  first failing instance: {row['witness']}\n")
        out.write(
            f"{len(summary) - len(failed)}/{len(summary)} laws verified "
            f"(seed={config.seed}, max_size={config.max_size}, tol={config.tol:g})\n"
        )
    return 1 if failed else 0


def _parse_coeffs(text: str) -> tuple[complex, ...]:
    try:
        return tuple(complex(tok.strip()) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad coefficient list {text!r}: {exc}")


def _parse_labels(text: str) -> tuple[str, ...]:
    return tuple(tok.strip() for tok in text.split(",") if tok.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cstarlab",
        description="Spectra, classification, quotients, and law verification "
        "for finite commutative C*-algebras.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument(
        "--input",
        help="path to an interchange JSON document (default: stdin)",
    )
    parser.add_argument(
        "--inline",
        help="interchange JSON document given directly on the command line",
    )
    parser.add_argument(
        "--tol",
        type=float,
        default=1e-9,
        help="comparison and merge tolerance (default 1e-9)",
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for the verify suite (default 0)"
    )
    parser.add_argument(
        "--max-size",
        type=int,
        default=8,
        help="largest space or matrix size exercised by verify (default 8)",
    )
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default="text",
        dest="output_format",
        help="text for humans, structured for line-delimited JSON",
    )
    parser.add_argument(
        "--coeffs",
        type=_parse_coeffs,
        help="ascending polynomial coefficients for calculus, e.g. '1,0,2'",
    )
    parser.add_argument(
        "--zero-set",
        type=_parse_labels,
        help="comma-separated character labels defining the ideal for quotient",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        input_path=args.input,
        inline=args.inline,
        tol=args.tol,
        seed=args.seed,
        max_size=args.max_size,
        output_format=args.output_format,
        coefficients=args.coeffs,
        zero_set=args.zero_set,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
