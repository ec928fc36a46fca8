"""Command-line front end: a thin client over the service layer.

By default requests are executed in-process through the same handler
functions the HTTP endpoints use; with --url they are POSTed to a running
server instead. All rendering lives here and is byte-deterministic.

Exit codes: 0 success, 2 input error, 3 command precondition unmet,
4 internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.request

from pydantic import ValidationError

from . import service
from .errors import CODE_TO_EXIT, MonocurveError


class RemoteError(Exception):
    def __init__(self, code, message):
        self.code = code
        self.exit_code = CODE_TO_EXIT.get(code, 2)
        super().__init__(message)


def _post(url: str, path: str, payload: dict) -> dict:
    req = urllib.request.Request(
        url.rstrip("/") + path,
        data=json.dumps(payload).encode(),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    try:
        with urllib.request.urlopen(req) as resp:
            return json.loads(resp.read())
    except urllib.error.HTTPError as exc:
        try:
            detail = json.loads(exc.read())
        except Exception:
            raise RemoteError("error", f"server returned HTTP {exc.code}")
        if "error" in detail:
            raise RemoteError(detail["error"], detail.get("message", ""))
        raise RemoteError("error", json.dumps(detail))


def _run(args, path: str, request_model, response_model, payload: dict):
    if args.url:
        return response_model.model_validate(_post(args.url, path, payload))
    handler = {
        "/analyze": service.analyze,
        "/family": service.family,
        "/scan": service.scan,
        "/presentation": service.presentation,
    }[path]
    return handler(request_model.model_validate(payload))


def _print_json(model) -> None:
    sys.stdout.write(json.dumps(model.model_dump(), indent=2) + "\n")


def _render_analyze(resp: service.AnalyzeResponse) -> str:
    lines = [
        "sequence: " + " ".join(map(str, resp.sequence)),
        f"classification: {resp.classification}",
        f"frobenius: {resp.profile.frobenius}",
        f"genus: {resp.profile.genus}",
        f"symmetric: {str(resp.profile.symmetric).lower()}",
        "principal matrix:",
    ]
    for row in resp.principal_matrix:
        lines.append("  " + " ".join(f"{v:>4}" for v in row))
    if resp.bresinsky is None:
        lines.append("bresinsky: none")
    else:
        b = resp.bresinsky
        dpart = " ".join(f"{k}={b.d[k]}" for k in sorted(b.d))
        lines.append(
            "bresinsky: c=(" + ",".join(map(str, b.c)) + ") " + dpart
            + " perm=(" + ",".join(map(str, b.perm)) + ")"
        )
        lines.append("u: " + " ".join(map(str, resp.u)))
        lines.append("v: " + " ".join(map(str, resp.v)))
        lines.append(f"period: {resp.period if resp.period is not None else 'none'}")
        lines.append(f"last_twist: {resp.presentation.last_twist}")
        lines.append(f"socle_degree: {resp.presentation.socle_degree}")
    return "\n".join(lines) + "\n"


def _render_family_csv(resp: service.FamilyResponse) -> str:
    out = ["t,sequence,gcd,coprime,classification"]
    for row in resp.rows:
        out.append(
            f"{row.t},{' '.join(map(str, row.sequence))},{row.gcd},"
            f"{str(row.coprime).lower()},{row.classification}"
        )
    return "\n".join(out) + "\n"


def _render_scan_csv(resp: service.ScanResponse) -> str:
    out = ["t,sequence,gcd,classification"]
    for row in resp.rows:
        out.append(
            f"{row.t},{' '.join(map(str, row.sequence))},{row.gcd},{row.classification}"
        )
    return "\n".join(out) + "\n"


def _parse_trange(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise ValueError(f"malformed range {text!r}, expected A..B")
    start, end = int(parts[0]), int(parts[1])
    if start < 0 or end < start:
        raise ValueError(f"malformed range {text!r}: need 0 <= A <= B")
    return start, end


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monocurve",
        description="analyze, translate and scan Gorenstein monomial-curve sequences",
    )
    parser.add_argument("--url", help="POST requests to a running service instead of in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classification, principal matrix, form, u/v, period")
    p.add_argument("sequence", type=int, nargs=4)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("family", help="translation family along u, v or the diagonal period")
    p.add_argument("sequence", type=int, nargs=4)
    p.add_argument("--kind", required=True, choices=["u", "v", "diagonal"])
    p.add_argument("--tmax", required=True, type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scan", help="classify sequence + t*step over a range of t")
    p.add_argument("sequence", type=int, nargs=4)
    p.add_argument("--step", required=True, type=int, nargs=4)
    p.add_argument("--trange", required=True)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def _dispatch(args) -> str:
    if args.command == "analyze":
        resp = _run(args, "/analyze", service.AnalyzeRequest,
                    service.AnalyzeResponse, {"sequence": args.sequence})
        return json.dumps(resp.model_dump(), indent=2) + "\n" if args.json \
            else _render_analyze(resp)
    if args.command == "family":
        resp = _run(args, "/family", service.FamilyRequest, service.FamilyResponse,
                    {"sequence": args.sequence, "kind": args.kind, "t_max": args.tmax})
        return json.dumps(resp.model_dump(), indent=2) + "\n" if args.json \
            else _render_family_csv(resp)
    if args.command == "scan":
        t_start, t_end = _parse_trange(args.trange)
        resp = _run(args, "/scan", service.ScanRequest, service.ScanResponse, {
            "sequence": args.sequence, "step": args.step,
            "t_start": t_start, "t_end": t_end,
            "workers": args.parallel, "force": args.force,
        })
        return json.dumps(resp.model_dump(), indent=2) + "\n" if args.json \
            else _render_scan_csv(resp)
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "serve":
        service.main(host=args.host, port=args.port)
        return 0
    try:
        sys.stdout.write(_dispatch(args))
    except MonocurveError as exc:
        sys.stderr.write(f"error: {exc.code}: {exc}\n")
        return exc.exit_code
    except RemoteError as exc:
        sys.stderr.write(f"error: {exc.code}: {exc}\n")
        return exc.exit_code
    except (ValueError, ValidationError) as exc:
        sys.stderr.write(f"error: invalid_input: {exc}\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
