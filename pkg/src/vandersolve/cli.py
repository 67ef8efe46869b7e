"""Command-line front end: interpolate, solve, kernel, sigma, bench.

Scalars arrive as "p/q" or decimal literals (inline flags, CSV or JSON
files); results leave as compact JSON on stdout with stable key order, or
as an aligned table with --pretty.  Exact arithmetic is the default and
--float opts into the benchmark-grade lane.

Exit codes: 0 success, 1 parse error or missing input, 2 invalid problem
(duplicate nodes, dimension mismatch), 3 inconsistent overdetermined
system, 4 --verify mismatch (indicates a bug; unreachable in practice).
"""

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from . import oracle
from .field import ScalarParseError, parse_scalar, values_equal
from .kernel import (
    OverdeterminedInputError,
    kernel_basis,
    solve_general,
    solve_overdetermined,
)
from .symfuncs import (
    DuplicateNodeError,
    NodeSet,
    compute_sigma,
    deflate_all,
)
from .vandermonde import DimensionMismatchError, build_matrix, interpolate

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3
EXIT_VERIFY = 4

MAX_VERIFY_NODES = 20  # subset enumeration beyond this is hopeless


class CliError(Exception):
    """Carries the message and the contract exit code."""

    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class ProblemInput:
    """One parsed problem: scalar literals plus the ambient dimension."""

    nodes: list
    values: list | None = None
    n: int | None = None
    mode: str = "exact"  # "exact" | "float"

    @property
    def float_mode(self) -> bool:
        return self.mode == "float"


def _parse_scalars(texts, float_mode: bool) -> list:
    return [parse_scalar(t, float_mode=float_mode) for t in texts]


def _node_set(problem: ProblemInput) -> NodeSet:
    return NodeSet(tuple(_parse_scalars(problem.nodes, problem.float_mode)))


def _value_list(problem: ProblemInput, nodes: NodeSet) -> list:
    if problem.values is None:
        raise CliError("this command needs values (--values, CSV or JSON)", EXIT_PARSE)
    if len(problem.values) != len(nodes):
        raise CliError(
            f"{len(nodes)} nodes but {len(problem.values)} values", EXIT_INVALID)
    return _parse_scalars(problem.values, problem.float_mode)


def _render(x, problem: ProblemInput):
    return float(x) if problem.float_mode else str(x)


def _render_vector(v, problem: ProblemInput) -> list:
    return [_render(x, problem) for x in v]


# ---------------------------------------------------------------------------
# input assembly


def _read_csv(path: str) -> tuple:
    """CSV with a node column and an optional value column; header optional."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = [row for row in csv.reader(fh) if any(cell.strip() for cell in row)]
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from exc
    if not rows:
        raise CliError(f"{path} holds no data rows", EXIT_PARSE)
    try:
        parse_scalar(rows[0][0])
    except ScalarParseError:
        rows = rows[1:]  # header row
    if not rows:
        raise CliError(f"{path} holds no data rows", EXIT_PARSE)
    widths = {len(row) for row in rows}
    if len(widths) != 1 or widths.pop() not in (1, 2):
        raise CliError(f"{path} must have one or two columns throughout", EXIT_PARSE)
    nodes = [row[0].strip() for row in rows]
    values = [row[1].strip() for row in rows] if len(rows[0]) == 2 else None
    return nodes, values


def _read_json(path: str) -> tuple:
    """JSON object with "nodes", optional "values" and optional "n"."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}", EXIT_PARSE) from exc
    if not isinstance(data, dict) or "nodes" not in data:
        raise CliError(f'{path} must be an object with a "nodes" list', EXIT_PARSE)
    nodes = [str(x) for x in data["nodes"]]
    values = [str(x) for x in data["values"]] if data.get("values") is not None else None
    n = data.get("n")
    if n is not None and not isinstance(n, int):
        raise CliError(f'"n" in {path} must be an integer', EXIT_PARSE)
    return nodes, values, n


def _split_flag(text: str) -> list:
    items = [part.strip() for part in text.split(",")]
    if any(not part for part in items):
        raise CliError(f"empty entry in list {text!r}", EXIT_PARSE)
    return items


def _load_problem(args) -> ProblemInput:
    sources = sum(x is not None for x in (args.nodes, args.csv, args.json))
    if sources == 0:
        raise CliError("no input: pass --nodes, --csv or --json", EXIT_PARSE)
    if args.nodes is not None and sources > 1:
        raise CliError("--nodes conflicts with --csv/--json", EXIT_PARSE)
    if args.csv is not None and args.json is not None:
        raise CliError("--csv conflicts with --json", EXIT_PARSE)

    n = getattr(args, "n", None)
    if args.nodes is not None:
        nodes = _split_flag(args.nodes)
        values = _split_flag(args.values) if args.values is not None else None
    elif args.csv is not None:
        nodes, values = _read_csv(args.csv)
        if args.values is not None:
            values = _split_flag(args.values)
    else:
        nodes, values, file_n = _read_json(args.json)
        if args.values is not None:
            values = _split_flag(args.values)
        if n is None:
            n = file_n
    mode = "float" if getattr(args, "float", False) else "exact"
    return ProblemInput(nodes=nodes, values=values, n=n, mode=mode)


# ---------------------------------------------------------------------------
# verification helpers (--verify); failures here mean a bug in the library


def _verify_fail(detail: str):
    raise CliError(f"verification failed: {detail}", EXIT_VERIFY)


def _verify_interpolation(nodes, values, poly, problem):
    for a, qv in zip(nodes, values):
        if not values_equal(poly.evaluate(a), qv):
            _verify_fail(f"interpolant misses the point at node {a}")
    reference = oracle.gaussian_solve(build_matrix(nodes, len(nodes)), values)
    padded = list(poly.coeffs) + [0] * (len(nodes) - len(poly.coeffs))
    for mine, ref in zip(padded, reference):
        if not values_equal(mine, ref):
            _verify_fail("coefficients disagree with the elimination oracle")


def _verify_space(nodes, values, space, n, problem):
    matrix = build_matrix(nodes, n)
    for got, want in zip(matrix.mat_vec(list(space.particular)), values):
        if not values_equal(got, want):
            _verify_fail("particular solution violates the system")
    for vec in space.basis.vectors:
        if any(not values_equal(x, 0) for x in matrix.mat_vec(list(vec))):
            _verify_fail("kernel vector is not annihilated")
    if not problem.float_mode and space.basis.vectors:
        from .vandermonde import DenseMatrix

        stacked = DenseMatrix.from_rows([list(v) for v in space.basis.vectors])
        if oracle.gaussian_rank(stacked) != space.basis.dimension:
            _verify_fail("kernel vectors are not independent")


def _verify_kernel(nodes, basis, n):
    matrix = build_matrix(nodes, n)
    if basis.dimension != n - len(nodes):
        _verify_fail("wrong kernel dimension")
    for vec in basis.vectors:
        if any(not values_equal(x, 0) for x in matrix.mat_vec(list(vec))):
            _verify_fail("kernel vector is not annihilated")


def _verify_sigma(nodes, table, deflated):
    if len(nodes) > MAX_VERIFY_NODES:
        raise CliError(
            f"--verify enumerates subsets and needs p <= {MAX_VERIFY_NODES}",
            EXIT_INVALID)
    for t in range(len(nodes) + 1):
        if not values_equal(table.sigma[t], oracle.sigma_bruteforce(nodes, t)):
            _verify_fail(f"sigma({t}) disagrees with subset enumeration")
    if deflated is not None:
        for i in range(len(nodes)):
            rest = list(nodes)
            del rest[i]
            for t in range(len(nodes)):
                want = oracle.sigma_bruteforce(rest, t)
                if not values_equal(deflated[i][t], want):
                    _verify_fail(f"deflated row {i} disagrees at codegree {t}")


# ---------------------------------------------------------------------------
# commands: each returns (payload, exit_code)


def cmd_interpolate(problem: ProblemInput, verify: bool = False) -> tuple:
    nodes = _node_set(problem)
    values = _value_list(problem, nodes)
    poly = interpolate(nodes, values)
    payload = {
        "coefficients": _render_vector(poly.coeffs, problem),
        "degree": poly.degree,
    }
    if verify:
        _verify_interpolation(nodes, values, poly, problem)
        payload["verified"] = True
    return payload, EXIT_OK


def cmd_solve(problem: ProblemInput, verify: bool = False) -> tuple:
    nodes = _node_set(problem)
    values = _value_list(problem, nodes)
    n = problem.n if problem.n is not None else len(nodes)
    if n < 1:
        raise CliError("need n >= 1", EXIT_INVALID)

    if len(nodes) > n:
        result = solve_overdetermined(nodes, values, n)
        if not result.consistent:
            payload = {
                "inconsistent_at": result.inconsistent_at,
                "lhs": _render(result.lhs, problem),
                "rhs": _render(result.rhs, problem),
            }
            return payload, EXIT_INCONSISTENT
        if verify:
            matrix = build_matrix(nodes, n)
            for got, want in zip(matrix.mat_vec(list(result.solution)), values):
                if not values_equal(got, want):
                    _verify_fail("overdetermined solution violates the system")
        payload = {
            "particular": _render_vector(result.solution, problem),
            "kernel_basis": [],
        }
        if verify:
            payload["verified"] = True
        return payload, EXIT_OK

    space = solve_general(nodes, values, n)
    payload = {
        "particular": _render_vector(space.particular, problem),
        "kernel_basis": [_render_vector(v, problem) for v in space.basis.vectors],
    }
    if verify:
        _verify_space(nodes, values, space, n, problem)
        payload["verified"] = True
    return payload, EXIT_OK


def cmd_kernel(problem: ProblemInput, verify: bool = False) -> tuple:
    nodes = _node_set(problem)
    if problem.n is None:
        raise CliError("kernel needs the ambient dimension --n", EXIT_PARSE)
    basis = kernel_basis(nodes, problem.n)
    payload = {
        "dimension": basis.dimension,
        "kernel_basis": [_render_vector(v, problem) for v in basis.vectors],
    }
    if verify:
        _verify_kernel(nodes, basis, problem.n)
        payload["verified"] = True
    return payload, EXIT_OK


def cmd_sigma(problem: ProblemInput, deflated: bool = False, verify: bool = False) -> tuple:
    nodes = _node_set(problem)
    table = compute_sigma(nodes)
    rows = None
    if deflated:
        table = deflate_all(table)
        rows = table.deflated
    payload = {"sigma": _render_vector(table.sigma, problem)}
    if rows is not None:
        payload["deflated"] = [_render_vector(r, problem) for r in rows]
    if verify:
        _verify_sigma(nodes, table, rows)
        payload["verified"] = True
    return payload, EXIT_OK


def cmd_bench(sizes, repetitions: int) -> tuple:
    from . import bench  # numpy stays out of the exact lanes

    try:
        config = bench.BenchConfig(sizes=tuple(sizes), repetitions=repetitions)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID) from exc
    reports = bench.run_benchmark(config)
    payload = {}
    for name in ("closed_form", "gaussian"):
        report = reports[name]
        payload[name] = {
            "sizes": list(report.sizes),
            "times": list(report.times),
            "op_counts": list(report.op_counts),
            "fit": report.fit,
        }
    return payload, EXIT_OK


# ---------------------------------------------------------------------------
# rendering and dispatch


def _pretty_bench(payload: dict) -> str:
    lines = []
    header = f"{'p':>8}  {'closed ops':>14}  {'closed s':>10}  {'gauss ops':>14}  {'gauss s':>10}"
    lines.append(header)
    lines.append("-" * len(header))
    closed, gauss = payload["closed_form"], payload["gaussian"]
    for i, p in enumerate(closed["sizes"]):
        lines.append(
            f"{p:>8}  {closed['op_counts'][i]:>14}  {closed['times'][i]:>10.4f}"
            f"  {gauss['op_counts'][i]:>14}  {gauss['times'][i]:>10.4f}")
    lines.append(f"log-log op-count slope: closed form {closed['fit']:.3f}, "
                 f"gaussian {gauss['fit']:.3f}")
    return "\n".join(lines)


def _pretty(payload: dict) -> str:
    if "closed_form" in payload and "gaussian" in payload:
        return _pretty_bench(payload)
    lines = []
    width = max(len(k) for k in payload)
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{key:<{width}}")
            for row in value:
                lines.append("  " + ", ".join(str(x) for x in row))
        elif isinstance(value, list):
            lines.append(f"{key:<{width}}  " + ", ".join(str(x) for x in value))
        else:
            lines.append(f"{key:<{width}}  {value}")
    return "\n".join(lines)


def _emit(payload: dict, args) -> None:
    if getattr(args, "pretty", False):
        text = _pretty(payload)
    else:
        text = json.dumps(payload, separators=(",", ":"), ensure_ascii=False)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vandersolve",
        description="Closed-form Vandermonde solving: interpolation, "
                    "system solving, kernel bases and symmetric coefficients.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nodes", help="comma-separated abscissae, e.g. 1,3/2,-2")
    common.add_argument("--values", help="comma-separated right-hand side")
    common.add_argument("--csv", help="CSV file: node[,value] per row, header optional")
    common.add_argument("--json", help='JSON file: {"nodes": [...], "values": [...], "n": ...}')
    common.add_argument("--float", action="store_true",
                        help="machine doubles instead of exact rationals")
    common.add_argument("--verify", action="store_true",
                        help="re-check the result against brute-force oracles")
    common.add_argument("--pretty", action="store_true", help="table output instead of JSON")
    common.add_argument("--out", help="write the output to a file instead of stdout")

    p_int = sub.add_parser("interpolate", parents=[common],
                           help="Lagrange interpolation polynomial")
    p_int.set_defaults(n=None)

    p_solve = sub.add_parser("solve", parents=[common],
                             help="solve the p x n system (square, wide or tall)")
    p_solve.add_argument("--n", type=int, help="number of unknowns (default: node count)")

    p_ker = sub.add_parser("kernel", parents=[common],
                           help="kernel basis of the p x n matrix")
    p_ker.add_argument("--n", type=int, help="number of columns")

    p_sig = sub.add_parser("sigma", parents=[common],
                           help="monomial coefficients of the node set")
    p_sig.add_argument("--deflated", action="store_true",
                       help="include every single-node-removed row")
    p_sig.set_defaults(n=None)

    p_bench = sub.add_parser("bench", help="closed form vs Gaussian elimination, float lane")
    p_bench.add_argument("--sizes", default="256,512,1024",
                         help="comma-separated problem sizes (default 256,512,1024)")
    p_bench.add_argument("--reps", type=int, default=5,
                         help="timing repetitions per size (default 5)")
    p_bench.add_argument("--pretty", action="store_true")
    p_bench.add_argument("--out")
    return parser


def _dispatch(args) -> tuple:
    if args.command == "bench":
        try:
            sizes = [int(s) for s in _split_flag(args.sizes)]
        except ValueError as exc:
            raise CliError(f"bad size list {args.sizes!r}", EXIT_PARSE) from exc
        return cmd_bench(sizes, args.reps)

    problem = _load_problem(args)
    if args.command == "interpolate":
        return cmd_interpolate(problem, verify=args.verify)
    if args.command == "solve":
        return cmd_solve(problem, verify=args.verify)
    if args.command == "kernel":
        return cmd_kernel(problem, verify=args.verify)
    if args.command == "sigma":
        return cmd_sigma(problem, deflated=args.deflated, verify=args.verify)
    raise CliError(f"unknown command {args.command!r}", EXIT_PARSE)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = _dispatch(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except ScalarParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except DuplicateNodeError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    except (DimensionMismatchError, OverdeterminedInputError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    _emit(payload, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
