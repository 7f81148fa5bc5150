import argparse
import sys
from typing import Optional, Sequence

import uvicorn

from fanolab.features.intersect.service import IntersectService
from fanolab.features.ranklocus.schemas import PlannerReport, RankLocusSpec
from fanolab.features.ranklocus.service import RankLocusService
from fanolab.features.reproduce.registry import TAGS
from fanolab.features.reproduce.service import ReproduceService
from fanolab.shared.common.enums import CheckStatus, OutputFormat
from fanolab.shared.config.config import settings
from fanolab.shared.utils.exceptions import ExpressionParseError, FanolabException

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

# planner fields that get their own line; the rest are nested and only shown in JSON
_PLAN_FIELDS = (
    "dim_Z",
    "dim_X",
    "deg_Z",
    "h_degree",
    "k_coefficient",
    "classification",
    "smoothness",
    "torsion_window",
    "obstruction_window",
    "h3",
    "coniveau",
    "luna",
    "lefschetz",
)


def run_local(port: int = settings.server_port) -> int:
    uvicorn.run("fanolab.main:app", port=port, reload=True, log_level=settings.loglevel)
    return EXIT_OK


def h_multiple(k: int) -> str:
    if k == 0:
        return "0"
    if abs(k) == 1:
        return "-H" if k < 0 else "H"
    return f"{k}H"


def render_plan(report: PlannerReport) -> str:
    spec = report.spec
    lines = [
        f"X = W_({spec.r},{spec.n}) cut by {spec.c} hyperplanes",
        f"dim {report.dim_X}, K = {h_multiple(report.k_coefficient)}, H^3 = {report.h3 or 'no claim'}",
    ]
    for name in _PLAN_FIELDS:
        value = getattr(report, name)
        if value is None:
            continue
        if hasattr(value, "model_dump_json"):
            value = value.model_dump_json()
        citation = report.citations.get(name)
        suffix = f"  [{citation.provenance} {citation.locator}] {citation.statement}" if citation else ""
        lines.append(f"{name}: {value}{suffix}")
    if report.isolated_singularities is not None:
        isolated = report.isolated_singularities
        lines.append(f"isolated singularities: {isolated.count}, exceptional divisors {isolated.exceptional_divisor}")
    lines.extend(f"note: {annotation}" for annotation in report.annotations)
    return "\n".join(lines)


def cmd_intersect(expression: str, ambient: str, output: OutputFormat) -> int:
    result = IntersectService.intersect(expression=expression, ambient=ambient)
    print(result.model_dump_json(indent=2) if output == OutputFormat.json else result.value)
    return EXIT_OK


def cmd_plan(r: int, n: int, c: int, output: OutputFormat) -> int:
    report = RankLocusService.plan(RankLocusSpec(r=r, n=n, c=c))
    print(report.model_dump_json(indent=2) if output == OutputFormat.json else render_plan(report))
    return EXIT_OK


def cmd_rank_locus(r: int, n: int, output: OutputFormat) -> int:
    data = RankLocusService.rank_locus(r=r, n=n)
    if output == OutputFormat.json:
        print(data.model_dump_json(indent=2))
    else:
        degree = "beyond desk scale" if data.degree is None else data.degree
        print(f"Z_({r},{n}): dim {data.dimension}, degree {degree}, closed form {data.degree_closed_form}")
    return EXIT_OK


def cmd_reproduce_paper(only: Optional[str], output: OutputFormat) -> int:
    document = ReproduceService.reproduce(only=only)
    if output == OutputFormat.json:
        print(document.model_dump_json(indent=2))
    else:
        for record in document.checks:
            print(f"{record.status:4}  {record.id:24} expected {record.expected!r}, computed {record.computed!r}")
            if record.error:
                print(f"      {record.error}")
        print(f"{document.status}: {document.check_count} checks, {len(document.failed)} failed")
    return EXIT_OK if document.status == CheckStatus.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fanolab", description="Intersection numbers and rank-locus invariants")
    rendering = argparse.ArgumentParser(add_help=False)
    rendering.add_argument(
        "--format",
        dest="output",
        type=OutputFormat,
        choices=list(OutputFormat),
        default=OutputFormat.text,
        help="Output rendering",
    )
    actions = parser.add_subparsers(dest="action", required=True)

    serve = actions.add_parser("serve", help="Run the HTTP service")
    serve.add_argument("--port", type=int, default=settings.server_port)

    intersect = actions.add_parser(
        "intersect", parents=[rendering], help="Integrate a class on a product of projective spaces"
    )
    intersect.add_argument("expression", help="e.g. 'h1^3*(-2*h1+4*h2)*(h1+h2)^5'")
    intersect.add_argument("--ambient", required=True, help="e.g. 'P4 x P5'")

    plan = actions.add_parser("plan", parents=[rendering], help="Invariants of W_{r,n} cut by c hyperplanes")
    for name in ("r", "n", "c"):
        plan.add_argument(name, type=int)

    rank_locus = actions.add_parser("rank-locus", parents=[rendering], help="Dimension and degree of Z_{r,n}")
    rank_locus.add_argument("r", type=int)
    rank_locus.add_argument("n", type=int)

    reproduce = actions.add_parser("reproduce-paper", parents=[rendering], help="Run every registered check")
    reproduce.add_argument("--only", choices=TAGS, default=None, help="Run the checks carrying this tag")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    dic = {
        "serve": (run_local, ("port",)),
        "intersect": (cmd_intersect, ("expression", "ambient", "output")),
        "plan": (cmd_plan, ("r", "n", "c", "output")),
        "rank-locus": (cmd_rank_locus, ("r", "n", "output")),
        "reproduce-paper": (cmd_reproduce_paper, ("only", "output")),
    }
    action, action_args = dic[args.action]
    kwargs = {name: getattr(args, name) for name in action_args}
    try:
        return action(**kwargs)
    except ExpressionParseError as error:
        print(error.annotated(), file=sys.stderr)
        return EXIT_USAGE
    except FanolabException as error:
        print(f"{type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
