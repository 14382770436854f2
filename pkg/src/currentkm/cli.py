"""Batch front-end: JSON problem file in, deterministic JSON report out.

Exit codes: 0 integrable (or verification agrees), 2 not integrable,
3 analysis or input error, 4 oracle disagreement.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .classify import classify_module, predicted_character, psi_validate
from .errors import CurrentKMError, UnsupportedOracleType
from .liecore import cartan_type_a, lattice_points_of_height, validate_gcm
from .oracle import CurrentAlgebraModule, NotNilpotentUpTo, irreducible_character, nilpotency_probe
from .polyring import format_monomial, poly_parse
from .zerodim import Ideal

EXIT_OK, EXIT_NOT_INTEGRABLE, EXIT_ERROR, EXIT_MISMATCH = 0, 2, 3, 4


class SchemaError(CurrentKMError, ValueError):
    pass


def fmt(x) -> str:
    return str(Fraction(x))


def _rational(value, where) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SchemaError(f"{where}: expected an integer or a rational string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"{where}: {value!r} is not a rational number") from None


@dataclass
class ProblemFile:
    variables: List[str]
    ideal: List[str]
    gcm: List[List[int]]
    psi: Dict[str, Dict[str, str]]
    hpp: Optional[List[str]] = None
    depth: int = 6
    max_power: int = 8
    verify: bool = False
    oracle_rank: Optional[int] = None
    extra_options: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, doc) -> "ProblemFile":
        if not isinstance(doc, dict):
            raise SchemaError("problem file must be a JSON object")
        for key in ("variables", "ideal", "gcm", "psi"):
            if key not in doc:
                raise SchemaError(f"missing required field {key!r}")
        variables = doc["variables"]
        if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
            raise SchemaError("'variables' must be a list of names")
        ideal = doc["ideal"]
        if not isinstance(ideal, list) or not all(isinstance(g, str) for g in ideal):
            raise SchemaError("'ideal' must be a list of polynomial strings")
        gcm = doc["gcm"]
        if not isinstance(gcm, list) or not all(isinstance(r, list) and all(isinstance(x, int) for x in r) for r in gcm):
            raise SchemaError("'gcm' must be a list of integer rows")
        psi = doc["psi"]
        if not isinstance(psi, dict) or not all(isinstance(v, dict) for v in psi.values()):
            raise SchemaError("'psi' must map coroot labels to monomial->value objects")
        psi_norm = {
            label: {mono: fmt(_rational(val, f"psi[{label}][{mono}]")) for mono, val in row.items()}
            for label, row in psi.items()
        }
        hpp = doc.get("hpp")
        if hpp is not None:
            if not isinstance(hpp, list):
                raise SchemaError("'hpp' must be a list of rationals")
            hpp = [fmt(_rational(x, "hpp")) for x in hpp]
        opts = doc.get("options", {}) or {}
        if not isinstance(opts, dict):
            raise SchemaError("'options' must be an object")
        known = {"depth", "max_power", "verify", "oracle_rank"}
        for key in ("depth", "max_power", "oracle_rank"):
            if key in opts and opts[key] is not None and (not isinstance(opts[key], int) or opts[key] < 0):
                raise SchemaError(f"option {key!r} must be a non-negative integer")
        return cls(
            variables=list(variables),
            ideal=list(ideal),
            gcm=[list(r) for r in gcm],
            psi=psi_norm,
            hpp=hpp,
            depth=opts.get("depth", 6),
            max_power=opts.get("max_power", 8),
            verify=bool(opts.get("verify", False)),
            oracle_rank=opts.get("oracle_rank"),
            extra_options={k: v for k, v in opts.items() if k not in known},
        )

    def to_dict(self) -> dict:
        options = dict(self.extra_options)
        options.update(depth=self.depth, max_power=self.max_power, verify=self.verify)
        if self.oracle_rank is not None:
            options["oracle_rank"] = self.oracle_rank
        doc = {
            "variables": self.variables,
            "ideal": self.ideal,
            "gcm": self.gcm,
            "psi": self.psi,
            "options": options,
        }
        if self.hpp is not None:
            doc["hpp"] = self.hpp
        return doc

    def build_spec(self):
        ring = tuple(self.variables)
        ideal = Ideal(ring, [poly_parse(g, ring) for g in self.ideal])
        cartan = validate_gcm(self.gcm)
        psi_prime = {}
        for label, row in self.psi.items():
            if not (label.startswith("h") and label[1:].isdigit()):
                raise SchemaError(f"coroot label {label!r} must look like 'h1', 'h2', ...")
            i = int(label[1:]) - 1
            for mono, value in row.items():
                psi_prime[(i, mono)] = Fraction(value)
        return psi_validate(cartan, ideal, psi_prime, self.hpp)


def load_problem(path) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc.msg} at line {exc.lineno}") from None
    return ProblemFile.from_dict(doc)


def _character_entries(table) -> List[list]:
    return [[list(b), m] for b, m in sorted(table.entries.items(), key=lambda kv: (sum(kv[0]), kv[0]))]


def classification_report(problem: ProblemFile, depth: int):
    spec = problem.build_spec()
    d = classify_module(spec)
    ring = spec.ring
    report = {
        "input": problem.to_dict(),
        "cofinite_dimension": spec.dim,
        "groebner_basis": [str(g) for g in spec.gb.elements],
        "standard_monomials": [format_monomial(m, ring) for m in spec.algebra.basis],
        "radical": [str(g) for g in d.radical.elements],
        "points": [[fmt(x) for x in p] for p in d.points],
        "idempotents": [str(e) for e in d.idempotents],
        "weights": [[fmt(x) for x in w] for w in d.weights],
        "verdict": {"status": d.verdict, "reason": d.reason},
        "hpp": None if d.hpp is None else [fmt(x) for x in d.hpp],
        "character": None,
    }
    if d.integrable:
        table = predicted_character(d, depth)
        report["character"] = {"depth": depth, "stable": table.is_stable(), "entries": _character_entries(table)}
    return spec, d, report


def _error_report(exc: Exception) -> dict:
    return {"error": {"type": type(exc).__name__, "message": str(exc)}}


def run_classify(path, depth: int | None = None):
    """Returns (report dict, exit code)."""
    try:
        problem = load_problem(path)
        _, d, report = classification_report(problem, problem.depth if depth is None else depth)
    except CurrentKMError as exc:
        return _error_report(exc), EXIT_ERROR
    return report, EXIT_OK if d.integrable else EXIT_NOT_INTEGRABLE


def run_verify(path, depth: int | None = None, max_power: int | None = None):
    """Classify, then cross-check against the explicit module. Returns (report, exit code)."""
    try:
        problem = load_problem(path)
        depth = problem.depth if depth is None else depth
        max_power = problem.max_power if max_power is None else max_power
        rank = len(problem.gcm)
        if problem.oracle_rank is not None and problem.oracle_rank != rank:
            raise UnsupportedOracleType(f"oracle_rank {problem.oracle_rank} does not match the {rank}x{rank} Cartan matrix")
        if rank == 0 or problem.gcm != [list(r) for r in cartan_type_a(rank).matrix]:
            raise UnsupportedOracleType("verification needs a type A Cartan matrix")
        spec, d, report = classification_report(problem, depth)
        module = CurrentAlgebraModule(spec)
        observed = irreducible_character(module, depth)
        predicted = predicted_character(d, depth) if d.integrable else None
        rows = []
        agree = True
        for h in range(depth + 1):
            for beta in lattice_points_of_height(rank, h):
                row = {"beta": list(beta), "oracle": observed[beta]}
                if predicted is not None:
                    row["predicted"] = predicted[beta]
                    row["agree"] = predicted[beta] == observed[beta]
                    agree = agree and row["agree"]
                rows.append(row)
        probes = []
        corroborated = False
        for i in range(rank):
            for s, m in enumerate(spec.algebra.basis):
                res = nilpotency_probe(module, (i + 1, i, s), max_power=max_power)
                corroborated = corroborated or isinstance(res, NotNilpotentUpTo)
                probes.append({"generator": f"f{i + 1} x {format_monomial(m, spec.ring)}", "result": str(res)})
        report["oracle"] = {
            "rank": rank,
            "depth": depth,
            "max_power": max_power,
            "comparison": rows,
            "probes": probes,
            "characters_agree": agree if predicted is not None else None,
            "non_integrability_corroborated": None if d.integrable else corroborated,
        }
    except CurrentKMError as exc:
        return _error_report(exc), EXIT_ERROR
    ok = agree if d.integrable else corroborated
    return report, EXIT_OK if ok else EXIT_MISMATCH


def render(report: dict, indent: int = 2) -> str:
    return json.dumps(report, indent=indent, sort_keys=True) + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="currentkm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p_cls = sub.add_parser("classify", help="classify the module described by a problem file")
    p_cls.add_argument("file")
    p_cls.add_argument("--depth", type=int, default=None)
    p_cls.add_argument("--json-indent", type=int, default=2)
    p_ver = sub.add_parser("verify", help="classify and cross-check against the explicit module")
    p_ver.add_argument("file")
    p_ver.add_argument("--depth", type=int, default=None)
    p_ver.add_argument("--max-power", type=int, default=None)
    p_ver.add_argument("--json-indent", type=int, default=2)
    args = parser.parse_args(argv)
    if args.command == "classify":
        report, code = run_classify(args.file, args.depth)
    else:
        report, code = run_verify(args.file, args.depth, args.max_power)
    sys.stdout.write(render(report, args.json_indent))
    return code


if __name__ == "__main__":
    sys.exit(main())
