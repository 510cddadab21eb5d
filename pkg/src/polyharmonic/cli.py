"""Thin command-line client over the HTTP service.

Every subcommand builds a request, sends it through the FastAPI app -- by
default over an in-process transport, so no server needs to be running -- and
renders the JSON response.  Pass ``--url`` to target a live instance instead.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
Numbers are rendered with 12 significant digits in machine formats (csv,
json) and 6 in tables.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import httpx

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

FORMATS = ("table", "csv", "json")

SWEEP_HEADER = ["p", "q", "r", "count", "disc", "t1", "t2", "t3"]


@dataclass(frozen=True)
class SweepSpec:
    """Inclusive parameter ranges plus output routing for the sweep command."""

    p_range: tuple[int, int]
    q_range: tuple[int, int]
    r_range: tuple[int, int]
    output_format: str = "table"
    output_path: str | None = None

    def __post_init__(self) -> None:
        for name, (lo, hi) in (("p", self.p_range), ("q", self.q_range), ("r", self.r_range)):
            if hi < lo:
                raise ValueError(f"empty {name} range {lo}:{hi}")
        if self.p_range[0] < 1 or self.q_range[0] < 1:
            raise ValueError("p and q ranges must start at 1 or above")
        if self.r_range[0] < 2:
            raise ValueError("r range must start at 2 or above")
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")


class ServiceError(Exception):
    def __init__(self, status_code: int, message: str):
        super().__init__(message)
        self.status_code = status_code


class ServiceClient:
    """HTTP client; uses an in-process transport unless a base URL is given."""

    def __init__(self, url: str | None = None):
        if url is None:
            import warnings

            with warnings.catch_warnings():
                # the sync-over-ASGI bridge warns about its own httpx pin
                warnings.simplefilter("ignore")
                from starlette.testclient import TestClient

                from .service.app import create_app

                self._client = TestClient(create_app())
        else:
            self._client = httpx.Client(base_url=url, timeout=600.0)

    def post_json(self, path: str, payload: dict) -> dict:
        response = self._client.post(path, json=payload)
        if response.status_code != 200:
            try:
                detail = response.json().get("detail", response.text)
            except ValueError:
                detail = response.text
            if isinstance(detail, list):
                detail = "; ".join(
                    f"{'.'.join(str(part) for part in err.get('loc', []))}: {err.get('msg', err)}"
                    for err in detail
                )
            raise ServiceError(response.status_code, f"{path}: {detail}")
        return response.json()

    def close(self) -> None:
        self._client.close()


def _f12(x: float) -> str:
    return f"{x:.12g}"


def _f6(x: float) -> str:
    return f"{x:.6g}"


def _round12(obj):
    """12-significant-digit rounding of every float in a JSON payload."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(_f12(obj))
    if isinstance(obj, dict):
        return {key: _round12(val) for key, val in obj.items()}
    if isinstance(obj, list):
        return [_round12(val) for val in obj]
    return obj


def _json_text(payload: dict) -> str:
    return json.dumps(_round12(payload), indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _table_text(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i]) for i in range(len(header))]
    lines = ["  ".join(header[i].ljust(widths[i]) for i in range(len(header)))]
    for row in rows:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(len(header))))
    return "\n".join(lines) + "\n"


def _emit(text: str, path: str | None) -> int:
    if path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _residual_columns(solutions: list[dict]) -> list[str]:
    keys: set[str] = set()
    for sol in solutions:
        keys.update(sol["residuals"])
    return sorted(keys)


def _stable_text(stable) -> str:
    if stable is None:
        return "unknown"
    return "yes" if stable else "no"


def _cmd_hypersphere(args, client: ServiceClient) -> int:
    payload = client.post_json("/hypersphere", {"r": args.r, "n": args.n})
    if args.format == "json":
        return _emit(_json_text(payload), args.out)
    fmt = _f12 if args.format == "csv" else _f6
    res_keys = sorted(payload["residuals"])
    header = ["radius", "alpha_star", "kind", "stable", *(f"res_{k}" for k in res_keys)]
    row = [
        fmt(payload["radius"]),
        fmt(payload["alpha_star"]),
        payload["kind"],
        _stable_text(payload["stable"]),
        *(fmt(payload["residuals"][k]) for k in res_keys),
    ]
    if args.format == "csv":
        return _emit(_csv_text(header, [row]), args.out)
    return _emit(_table_text(header, [row]), args.out)


def _cmd_clifford(args, client: ServiceClient) -> int:
    payload = client.post_json("/clifford", {"p": args.p, "q": args.q, "r": args.r})
    if args.format == "json":
        return _emit(_json_text(payload), args.out)
    fmt = _f12 if args.format == "csv" else _f6
    res_keys = _residual_columns(payload["solutions"])
    header = ["t", "R1", "R2", "alpha_star", "kind", "stable", *(f"res_{k}" for k in res_keys)]
    rows = []
    for sol in payload["solutions"]:
        rows.append(
            [
                fmt(sol["t"]),
                fmt(sol["R1"]),
                fmt(sol["R2"]),
                fmt(sol["alpha_star"]),
                sol["kind"],
                _stable_text(sol["stable"]),
                *(fmt(sol["residuals"][k]) if k in sol["residuals"] else "" for k in res_keys),
            ]
        )
    body = _csv_text(header, rows) if args.format == "csv" else _table_text(header, rows)
    if payload["discriminant"] is not None and args.format == "table":
        body = f"discriminant: {_f6(payload['discriminant'])}\n" + body
    return _emit(body, args.out)


def _sweep_rows_text(rows: list[dict], fmt) -> list[list[str]]:
    out = []
    for row in rows:
        roots = [fmt(t) for t in row["roots"]]
        roots += [""] * (3 - len(roots))
        out.append(
            [
                str(row["p"]),
                str(row["q"]),
                str(row["r"]),
                str(row["count"]),
                "" if row["disc"] is None else fmt(row["disc"]),
                *roots[:3],
            ]
        )
    return out


def _cmd_sweep(args, client: ServiceClient) -> int:
    try:
        spec = SweepSpec(args.p, args.q, args.r, args.format, args.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = client.post_json(
        "/sweep",
        {
            "p_range": {"lo": spec.p_range[0], "hi": spec.p_range[1]},
            "q_range": {"lo": spec.q_range[0], "hi": spec.q_range[1]},
            "r_range": {"lo": spec.r_range[0], "hi": spec.r_range[1]},
        },
    )
    if spec.output_format == "json":
        return _emit(_json_text(payload), spec.output_path)
    fmt = _f12 if spec.output_format == "csv" else _f6
    rows = _sweep_rows_text(payload["rows"], fmt)
    if spec.output_format == "csv":
        return _emit(_csv_text(SWEEP_HEADER, rows), spec.output_path)
    return _emit(_table_text(SWEEP_HEADER, rows), spec.output_path)


def _cmd_verify(args, client: ServiceClient) -> int:
    payload = client.post_json("/verify", {"suite": args.suite, "tol": args.tol})
    if args.format == "json":
        code = _emit(_json_text(payload), args.out)
    else:
        lines = []
        for check in payload["checks"]:
            tag = "PASS" if check["passed"] else "FAIL"
            lines.append(
                f"{tag:<5} {check['name']:<40} max_residual={check['max_residual']:.3e}  "
                f"tol={check['tolerance']:.1e}  samples={check['samples']}"
            )
        total = len(payload["checks"])
        good = sum(1 for check in payload["checks"] if check["passed"])
        lines.append(f"{good}/{total} checks passed")
        code = _emit("\n".join(lines) + "\n", args.out)
    if code != EXIT_OK:
        return code
    return EXIT_OK if payload["passed"] else EXIT_VERIFY_FAILED


def _cmd_serve(args, _client=None) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def _int_range(text: str) -> tuple[int, int]:
    parts = text.split(":", 1) if ":" in text else [text, text]
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or LO:HI, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyharmonic",
        description="Critical radii of polyharmonic hypersphere and Clifford-torus immersions.",
    )
    parser.add_argument("--url", default=None, help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    hyper = sub.add_parser("hypersphere", help="solve the hypersphere family at one order")
    hyper.add_argument("--r", type=int, required=True, help="polyharmonic order (>= 2)")
    hyper.add_argument("--n", type=int, default=3, help="ambient sphere dimension (>= 2)")
    hyper.add_argument("--format", choices=FORMATS, default="table")
    hyper.add_argument("--out", default=None, help="write output to this path")
    hyper.set_defaults(handler=_cmd_hypersphere)

    cliff = sub.add_parser("clifford", help="solve the Clifford-torus family at one (p, q, r)")
    cliff.add_argument("--p", type=int, required=True)
    cliff.add_argument("--q", type=int, required=True)
    cliff.add_argument("--r", type=int, required=True)
    cliff.add_argument("--format", choices=FORMATS, default="table")
    cliff.add_argument("--out", default=None)
    cliff.set_defaults(handler=_cmd_clifford)

    sweep = sub.add_parser("sweep", help="solve the torus family over an inclusive (p, q, r) grid")
    sweep.add_argument("--p", type=_int_range, required=True, metavar="LO:HI")
    sweep.add_argument("--q", type=_int_range, required=True, metavar="LO:HI")
    sweep.add_argument("--r", type=_int_range, required=True, metavar="LO:HI")
    sweep.add_argument("--format", choices=FORMATS, default="table")
    sweep.add_argument("--out", default=None)
    sweep.set_defaults(handler=_cmd_sweep)

    verify = sub.add_parser("verify", help="run a verification battery")
    verify.add_argument("--suite", choices=("energy", "ladder", "tau", "clifford", "all"), default="all")
    verify.add_argument("--tol", type=float, default=None, help="override every check tolerance")
    verify.add_argument("--format", choices=("table", "json"), default="table")
    verify.add_argument("--out", default=None)
    verify.set_defaults(handler=_cmd_verify)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.handler is _cmd_serve:
        return _cmd_serve(args)
    client = ServiceClient(args.url)
    try:
        return args.handler(args, client)
    except ServiceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if exc.status_code == 422 else EXIT_IO
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return EXIT_IO
    finally:
        client.close()


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
