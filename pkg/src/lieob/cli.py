"""Command-line front end: ``lieob <command> [--example NAME | --file PATH] ...``.

Exit status: 0 on success, 1 on input or usage errors, 2 when ``--strict`` is
given and ``classify`` returns Undetermined.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from random import Random

from .algebra import center, derived_subalgebra, verify_jacobi
from .builtins import REGISTRY, get_example
from .cohomology import adjoint_module, cohomology_dim, trivial_module
from .document import DocumentError, document_dict, format_rational, load_document
from .maps import aut_out_description, block_decompose, derivation_space
from .obstruction import Status, classify_obstruction, reduction_report, split_check
from .sampling import sample_automorphisms

COMMANDS = ("check", "center", "derived", "classify", "split", "aut-blocks", "quotient", "cohomology", "examples")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


@dataclass
class Report:
    """Ordered key/value report with an optional one-line headline for humans."""

    fields: list = field(default_factory=list)
    headline: str | None = None
    status: int = 0

    def add(self, key, value):
        self.fields.append((key, value))
        return self

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps({k: v for k, v in self.fields}, indent=2) + "\n"
        if fmt == "machine":
            return "".join(f"{k}: {_flat(v)}\n" for k, v in self.fields)
        width = max((len(k) for k, _ in self.fields), default=0)
        lines = [self.headline] if self.headline else []
        lines += [f"{k.ljust(width)}  {_flat(v)}" for k, v in self.fields]
        return "\n".join(lines) + "\n"


def _flat(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "; ".join(_flat(x) for x in v) if v else "-"
    if isinstance(v, dict):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def _vector(v) -> str:
    return "(" + ", ".join(format_rational(a) for a in v) + ")"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage()}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lieob", description="Exact Lie algebra structure and obstruction triviality checks.")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--example", metavar="NAME")
    src.add_argument("--file", metavar="PATH")
    p.add_argument("--degree", type=int)
    p.add_argument("--module", choices=("trivial", "adjoint"), default="trivial")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--format", choices=("human", "machine", "json"), default="human")
    p.add_argument("--samples", type=int, default=50, help="automorphism samples for aut-blocks")
    p.add_argument("--seed", type=int, default=0)
    return p


def _load(args):
    if args.example:
        try:
            ex = get_example(args.example)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
        return ex.name, ex.build(), ex
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
        try:
            doc = load_document(text)
        except DocumentError as exc:
            raise InputError(str(exc)) from None
        return doc.name, doc.algebra, None
    raise UsageError("one of --example or --file is required")


def cmd_examples(args) -> Report:
    r = Report(headline="built-in examples")
    for name, ex in REGISTRY.items():
        g = ex.build()
        r.add(name, f"dim {g.dim}, {ex.description}")
    r.add("abelian_<n>", "dim n, abelian Q^n (1 <= n <= 32)")
    return r


def cmd_check(name, g, args) -> Report:
    rep = verify_jacobi(g)
    r = Report(headline=f"{name}: Jacobi {'pass' if rep.ok else 'FAIL'}")
    r.add("name", name).add("dim", g.dim).add("jacobi", "pass" if rep.ok else "fail")
    r.add("violations", [f"{t} residual {_vector(res)}" for t, res in rep.violations])
    return r


def cmd_center(name, g, args) -> Report:
    z = center(g)
    return (Report(headline=f"dim Z = {z.dim}").add("name", name).add("dim", g.dim)
            .add("center_dim", z.dim).add("center_basis", [_vector(v) for v in z.basis]))


def cmd_derived(name, g, args) -> Report:
    d = derived_subalgebra(g)
    return (Report(headline=f"dim [g,g] = {d.dim}").add("name", name).add("dim", g.dim)
            .add("derived_dim", d.dim).add("derived_basis", [_vector(v) for v in d.basis]))


def cmd_classify(name, g, args) -> Report:
    v = classify_obstruction(g)
    r = Report(headline=str(v)).add("name", name).add("dim", g.dim).add("status", v.status.value)
    if v.reason is not None:
        r.add("reason", v.reason.value)
    else:
        for k, val in v.diagnostics.items():
            r.add(k, val)
    r.add("center_dim", center(g).dim).add("derived_dim", derived_subalgebra(g).dim)
    r.add("derivation_dim", len(derivation_space(g)))
    if args.strict and v.status is Status.UNDETERMINED:
        r.status = 2
    return r


def cmd_split(name, g, args) -> Report:
    res = split_check(g)
    r = Report(headline=f"central split {'found' if res.found else 'not found'}")
    r.add("name", name).add("found", res.found)
    if res.found:
        s = res.split
        r.add("center_dim", s.center_dim).add("complement_dim", s.complement_dim)
        r.add("center_basis", [_vector(v) for v in s.center_basis])
        r.add("complement_basis", [_vector(v) for v in s.complement_basis])
    else:
        w = res.obstruction_witness
        r.add("witness_dim", w.dim).add("witness_basis", [_vector(v) for v in w.basis])
    return r


def cmd_aut_blocks(name, g, args, example) -> Report:
    res = split_check(g)
    r = Report().add("name", name).add("split", res.found)
    if not res.found:
        r.headline = "no central split: block description does not apply"
        return r.add("witness_dim", res.obstruction_witness.dim)
    s = res.split
    desc = aut_out_description(s)
    r.add("dim_center", desc.dim_center).add("dim_complement", desc.dim_complement)
    r.add("dim_gl_center", desc.dim_gl_center).add("dim_hom_block", desc.dim_hom_block)
    r.add("derived_codim_in_g0", desc.derived_codim_in_g0).add("blocks", list(desc.blocks))
    if args.samples < 0:
        raise UsageError("--samples must be non-negative")
    rng = Random(args.seed)
    hand = example.automorphisms(rng) if example is not None else []
    autos = sample_automorphisms(g, rng, args.samples, split=s, hand=hand)
    failures = sum(not block_decompose(s, phi).verdicts_hold for phi in autos)
    r.add("samples", len(autos)).add("block_failures", failures)
    r.headline = f"Aut/Inn blocks: GL({desc.dim_center}) | Hom dim {desc.dim_hom_block} | Out(g0)"
    return r


def cmd_quotient(name, g, args) -> Report:
    rep = reduction_report(g)
    q = rep.quotient
    r = Report(headline=f"g/Zg has dim {q.dim}, center dim {rep.quotient_center_dim}")
    r.add("name", name).add("quotient_dim", q.dim).add("quotient_center_dim", rep.quotient_center_dim)
    r.add("quotient_centerless", rep.quotient_centerless)
    r.add("quotient", document_dict(f"{name}/Z", q)).add("note", rep.note)
    return r


def cmd_cohomology(name, g, args) -> Report:
    m = trivial_module(g) if args.module == "trivial" else adjoint_module(g)
    degrees = [args.degree] if args.degree is not None else list(range(g.dim + 1))
    for k in degrees:
        if not 0 <= k <= g.dim:
            raise InputError(f"degree {k} outside 0..{g.dim}")
    dims = [cohomology_dim(m, k) for k in degrees]
    r = Report(headline=", ".join(f"dim H^{k} = {d}" for k, d in zip(degrees, dims)))
    r.add("name", name).add("module", args.module)
    for k, d in zip(degrees, dims):
        r.add(f"H{k}", d)
    return r


def run_command(argv) -> tuple[int, str]:
    """Run one command; returns ``(exit_status, output_text)``."""
    try:
        args = build_parser().parse_args(argv)
        if args.command == "examples":
            report = cmd_examples(args)
        else:
            name, g, example = _load(args)
            handler = {
                "check": cmd_check, "center": cmd_center, "derived": cmd_derived,
                "classify": cmd_classify, "split": cmd_split, "quotient": cmd_quotient,
                "cohomology": cmd_cohomology,
            }.get(args.command)
            report = handler(name, g, args) if handler else cmd_aut_blocks(name, g, args, example)
    except UsageError as exc:
        return 1, f"lieob: {exc}"
    except SystemExit as exc:  # --help
        return int(exc.code or 0), ""
    except InputError as exc:
        return 1, f"lieob: error: {exc}\n"
    return report.status, report.render(args.format)


def main(argv=None) -> int:
    status, text = run_command(sys.argv[1:] if argv is None else argv)
    (sys.stdout if status != 1 else sys.stderr).write(text)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
