"""Command-line front end emitting deterministic JSON reports.

Subcommands: ``construct`` builds a family group and verifies its
candidate; ``verify`` additionally runs the all-pairs intersection
cross-check and (for the nonabelian family) the presentation and
automorphism suites; ``enumerate`` searches a built group for all string
C-group triples and deduplicates; ``identities`` runs the exact
binomial-coefficient suites.

Exit status: 0 if every requested check passed, 2 if any verification
failed, 1 on usage errors.  The JSON report goes to ``--out`` when given
(with a one-line summary on stdout) and to stdout otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .enumerator import dedupe, enumerate_involutions, search_string_cgroups, structural_audit
from .extensions import AbelianParams, build_abelian_family, build_maxclass_family
from .identities import check_binomial_identities_range, sigma_expansion_coefficients
from .maxclass import (
    PGroupParams,
    build_pgroup,
    check_conjugacy_expansion,
    sigma,
    tau,
    verify_automorphism,
    verify_presentation,
)
from .verifier import SggiCandidate, verify

_DEDUPE_MODES = {"conj": "conjugacy", "dual": "conjugacy+duality", "iso": "isomorphism"}


class _Parser(argparse.ArgumentParser):
    # usage problems exit with status 1, not argparse's default 2
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: Optional[str] = None
    p: Optional[int] = None
    e: Optional[int] = None
    r: Optional[int] = None
    l1: Optional[int] = None
    l2: Optional[int] = None
    dedupe: str = "iso"
    nondegenerate: bool = False
    out: Optional[str] = None


def _build_parser() -> _Parser:
    parser = _Parser(prog="scgroup", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_args(p_: argparse.ArgumentParser) -> None:
        p_.add_argument("--family", choices=("theorem4", "theorem2"), required=True)
        p_.add_argument("--p", type=int, required=True)
        p_.add_argument("--e", type=int)
        p_.add_argument("--r", type=int)
        p_.add_argument("--l1", type=int)
        p_.add_argument("--l2", type=int)
        p_.add_argument("--out", type=str)

    for name in ("construct", "verify"):
        add_family_args(sub.add_parser(name))

    enum = sub.add_parser("enumerate")
    add_family_args(enum)
    enum.add_argument("--dedupe", choices=tuple(_DEDUPE_MODES), default="iso")
    enum.add_argument("--nondegenerate", action="store_true")

    ident = sub.add_parser("identities")
    ident.add_argument("--p", type=int, required=True)
    ident.add_argument("--e", type=int)
    ident.add_argument("--r", type=int)
    ident.add_argument("--out", type=str)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        family=getattr(args, "family", None),
        p=args.p,
        e=getattr(args, "e", None),
        r=getattr(args, "r", None),
        l1=getattr(args, "l1", None),
        l2=getattr(args, "l2", None),
        dedupe=getattr(args, "dedupe", "iso"),
        nondegenerate=getattr(args, "nondegenerate", False),
        out=getattr(args, "out", None),
    )


class UsageError(ValueError):
    pass


def _family_params(config: RunConfig):
    if config.family == "theorem4":
        if config.e is None or config.r is None:
            raise UsageError("--family theorem4 requires --e and --r")
        try:
            return PGroupParams(config.p, config.e, config.r)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if config.family == "theorem2":
        if config.l1 is None or config.l2 is None:
            raise UsageError("--family theorem2 requires --l1 and --l2")
        try:
            return AbelianParams(config.p, config.l1, config.l2)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family {config.family!r}")


def _build_family(config: RunConfig):
    params = _family_params(config)
    if isinstance(params, PGroupParams):
        table, cand = build_maxclass_family(params)
        pdict = {"p": params.p, "e": params.e, "r": params.r, "m": params.m, "order": table.order}
        notes = []
    else:
        table, cand = build_abelian_family(params)
        pdict = {"p": params.p, "l1": params.l1, "l2": params.l2, "m": params.m, "order": table.order}
        notes = [
            "middle generator realized as x*y*rho2; the variant word x*y*rho0 "
            "does not square to the identity under the stated action"
        ]
    return params, table, cand, pdict, notes


def _run_construct(config: RunConfig) -> tuple[int, dict]:
    params, table, cand, pdict, notes = _build_family(config)
    report = verify(cand, structural=True)
    doc = {
        "command": config.command,
        "family": config.family,
        "params": pdict,
        "rho": cand.encodings(),
        "report": report.to_json_dict(),
        "notes": sorted(notes),
    }
    return (0 if report.is_string_cgroup else 2), doc


def _run_verify(config: RunConfig) -> tuple[int, dict]:
    params, table, cand, pdict, notes = _build_family(config)
    report = verify(cand, all_pairs=True, structural=True)
    ok = report.is_string_cgroup
    doc = {
        "command": config.command,
        "family": config.family,
        "params": pdict,
        "rho": cand.encodings(),
        "report": report.to_json_dict(),
    }
    if isinstance(params, PGroupParams):
        P = build_pgroup(params)
        presentation = verify_presentation(P, params)
        sigma_ok = verify_automorphism(P, sigma(params))
        tau_ok = verify_automorphism(P, tau(params))
        expansion_ok = all(check_conjugacy_expansion(params, k) for k in range(1, params.p + 1))
        doc["pgroup"] = {
            "presentation": presentation,
            "sigma_automorphism": sigma_ok,
            "tau_automorphism": tau_ok,
            "conjugacy_expansion": expansion_ok,
        }
        ok = ok and presentation["all_ok"] and sigma_ok and tau_ok and expansion_ok
    if isinstance(params, AbelianParams):
        ok = ok and report.tight
        notes.append("tightness is required for the abelian family")
    doc["notes"] = sorted(notes)
    return (0 if ok else 2), doc


def _run_enumerate(config: RunConfig) -> tuple[int, dict]:
    params, table, cand, pdict, notes = _build_family(config)
    result = search_string_cgroups(table, nondegenerate=config.nondegenerate)
    result = dedupe(result, _DEDUPE_MODES[config.dedupe])
    result = structural_audit(result)
    classes = []
    for cls, audit in zip(result.classes, result.audit):
        rep = result.candidates[cls[0]]
        classes.append(
            {
                "representative": rep.encodings(),
                "size": len(cls),
                "audit": audit,
            }
        )
    ok = all(a.get("all_ok", True) for a in result.audit)
    canonical_found = any(c.rho == cand.rho for c in result.candidates)
    doc = {
        "command": "enumerate",
        "family": config.family,
        "params": pdict,
        "mode": result.mode,
        "nondegenerate": config.nondegenerate,
        "counts": {
            "involutions": len(enumerate_involutions(table)),
            "candidates": len(result.candidates),
            "classes": len(result.classes),
        },
        "canonical_candidate_found": canonical_found,
        "classes": classes,
        "notes": sorted(list(result.notes) + notes),
    }
    return (0 if ok and canonical_found else 2), doc


def _run_identities(config: RunConfig) -> tuple[int, dict]:
    try:
        coefficients = sigma_expansion_coefficients(config.p)
        coefficients_ok = True
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    binomials_ok = check_binomial_identities_range(30)
    doc = {
        "command": "identities",
        "p": config.p,
        "binomial_identities_ok": binomials_ok,
        "expansion_coefficients": list(coefficients),
        "coefficients_match_closed_forms": coefficients_ok,
    }
    ok = binomials_ok and coefficients_ok
    if config.e is not None and config.r is not None:
        try:
            params = PGroupParams(config.p, config.e, config.r)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        P = build_pgroup(params)
        expansion = {k: check_conjugacy_expansion(params, k) for k in range(1, params.p + 1)}
        sigma_ok = verify_automorphism(P, sigma(params))
        tau_ok = verify_automorphism(P, tau(params))
        doc["pgroup"] = {
            "params": {"p": params.p, "e": params.e, "r": params.r, "m": params.m},
            "conjugacy_expansion": {str(k): v for k, v in expansion.items()},
            "sigma_automorphism": sigma_ok,
            "tau_automorphism": tau_ok,
        }
        ok = ok and all(expansion.values()) and sigma_ok and tau_ok
    return (0 if ok else 2), doc


def run(config: RunConfig) -> tuple[int, dict]:
    """Execute one command; returns (exit status, JSON-ready report)."""
    if config.command == "construct":
        return _run_construct(config)
    if config.command == "verify":
        return _run_verify(config)
    if config.command == "enumerate":
        return _run_enumerate(config)
    if config.command == "identities":
        return _run_identities(config)
    raise UsageError(f"unknown command {config.command!r}")


def _emit(doc: dict, out: Optional[str], status: int) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        summary = "pass" if status == 0 else "FAIL"
        print(f"{doc['command']}: {summary}; report written to {out}")
    else:
        sys.stdout.write(text)


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(args)
    try:
        status, doc = run(config)
    except UsageError as exc:
        print(f"scgroup: error: {exc}", file=sys.stderr)
        return 1
    _emit(doc, config.out, status)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
