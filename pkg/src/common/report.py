"""Command reports and their text/json rendering"""

import argparse
import dataclasses
import json
import logging
from typing import Any, Dict, List, Optional

import sympy
from termcolor import colored

from .filterreg import FilterRegularCertificate, PositivityReport
from .hilbert import FittedPolynomial
from .kernel import MonomialIdeal
from .mixedmult_helper import MixedmultError, Settings, format_tuple

log = logging.getLogger(__name__)


@dataclasses.dataclass
class Report:
    """
    Outcome of one command

    `result` holds json ready values only; `passed` decides the exit status of
    commands that check something.
    """

    command: str
    model: str
    config: Dict[str, Any]
    result: Dict[str, Any] = dataclasses.field(default_factory=dict)
    guards: List[str] = dataclasses.field(default_factory=list)
    passed: bool = True

    def to_json_obj(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "model": self.model,
            "config": self.config,
            "result": self.result,
            "guards": list(self.guards),
            "status": "PASS" if self.passed else "FAIL",
        }

    def note_escalation(self, label: str, fitted: FittedPolynomial) -> None:
        if fitted.escalations:
            self.guards.append(f"{label}: base escalated {fitted.escalations} time(s) to {format_tuple(fitted.base)}")


######## CONVERSIONS ########


def exact(value: Any) -> Any:
    """Integers stay integers, other rationals become 'p/q' strings"""
    if isinstance(value, sympy.Rational):
        return int(value) if value.q == 1 else f"{value.p}/{value.q}"
    return value


def ideal_to_json(ideal: MonomialIdeal) -> List[str]:
    return [str(g) for g in ideal.sorted_generators()]


def certificate_to_json(certificate: Optional[FilterRegularCertificate]) -> Optional[List[Dict[str, Any]]]:
    if certificate is None:
        return None
    return [
        {
            "variable": step.variable,
            "block": step.block + 1,
            "colon": ideal_to_json(step.colon),
            "saturation": ideal_to_json(step.saturation),
        }
        for step in certificate.steps
    ]


def positivity_to_json(report: PositivityReport) -> Dict[str, Any]:
    return {
        "type": format_tuple(report.type_vector),
        "verdict": report.verdict.value,
        "coefficient_e": report.coefficient_e,
        "pipeline_e": report.pipeline_e,
        "stabilization_index": report.stabilization_index,
        "certificate": certificate_to_json(report.certificate),
        "witness": certificate_to_json(report.witness),
    }


######## RENDERING ########


def _text_lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}-")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, dict)):
        return "[]" if isinstance(value, list) else "{}"
    return str(value)


def render(report: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report.to_json_obj(), indent=2, sort_keys=True) + "\n"
    status = colored("PASS", "green") if report.passed else colored("FAIL", "red")
    lines = [f"{report.command} {report.model}: {status}"]
    lines.append("config: " + ", ".join(f"{key}={_scalar(value)}" for key, value in report.config.items()))
    lines.extend(_text_lines(report.result, 0))
    for guard in report.guards:
        lines.append(colored(f"guard: {guard}", "yellow"))
    return "\n".join(lines) + "\n"


def render_error(error: MixedmultError, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({"error": {"kind": error.kind, "message": error.message}}, indent=2, sort_keys=True) + "\n"
    return colored(f"error ({error.kind}): {error.message}", "red") + "\n"


def new_report(args: argparse.Namespace, settings: Settings) -> Report:
    """Empty report echoing the subcommand, model location and settings"""
    config = settings.as_dict()
    if args.model == "builtin:example36":
        config["t"] = args.t
    return Report(command=args.subcommand, model=args.model, config=config)
