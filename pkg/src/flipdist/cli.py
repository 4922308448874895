"""Command-line client.

Every subcommand issues a request against the HTTP API. By default the app
is mounted in-process (no server needed); ``--server URL`` or the
FLIPDIST_SERVER environment variable targets a running instance instead.
Exit codes: 0 success, 64 usage or invalid input, 69 resource budget,
and ``verify`` exits with its failure count capped at 125.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import re
import sys

import httpx

from .formats import is_family_literal, parse_any, to_json_obj, format_text, from_json_obj

EX_USAGE = 64
EX_UNAVAILABLE = 69


class _UsageExit(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise _UsageExit()


class Client:
    def __init__(self, server: str | None):
        self.server = server

    def call(self, method: str, path: str, json_body=None, params=None) -> httpx.Response:
        if self.server:
            with httpx.Client(base_url=self.server, timeout=None) as c:
                return c.request(method, path, json=json_body, params=params)

        from .service.app import create_app

        async def go():
            transport = httpx.ASGITransport(app=create_app())
            async with httpx.AsyncClient(
                transport=transport, base_url="http://flipdist.local", timeout=None
            ) as c:
                return await c.request(method, path, json=json_body, params=params)

        return asyncio.run(go())


def _spec_argument(spec: str):
    """A triangulation argument: a file path, or a literal passed through."""
    if os.path.exists(spec):
        with open(spec) as fh:
            return to_json_obj(parse_any(fh.read()))
    return spec


def _fail_from_response(resp: httpx.Response) -> int:
    try:
        payload = resp.json()
        message = payload.get("message") or payload.get("detail") or resp.text
        kind = payload.get("error", "")
    except ValueError:
        message, kind = resp.text, ""
    print(f"error: {message}", file=sys.stderr)
    return EX_UNAVAILABLE if kind == "resource-budget" else EX_USAGE


def _checked(resp: httpx.Response):
    if resp.status_code >= 400:
        raise _HttpFailure(resp)
    return resp.json()


class _HttpFailure(Exception):
    def __init__(self, resp: httpx.Response):
        self.resp = resp


def _cmd_dist(client: Client, args) -> int:
    body = {"u": _spec_argument(args.first), "v": _spec_argument(args.second)}
    if args.budget is not None:
        body["budget"] = args.budget
    data = _checked(client.call("POST", "/distance", body))
    if args.json:
        print(json.dumps(data, indent=2))
        return 0
    print(f"distance: {data['distance']}")
    print(f"expanded: {data['expanded']}")
    for line in data["reductions"]:
        print(f"reduction: {line}")
    for step in data["flips"]:
        r, i = step["removed"], step["introduced"]
        print(f"flip: {r[0]}-{r[1]} -> {i[0]}-{i[1]}")
    return 0


def _cmd_family(client: Client, args) -> int:
    m = re.fullmatch(r"([A-Za-z]):(\d+)", args.family.strip())
    if not m:
        print(f"error: expected TAG:N, got {args.family!r}", file=sys.stderr)
        return EX_USAGE
    data = _checked(client.call("GET", f"/family/{m.group(1)}/{m.group(2)}"))
    for member in data["members"]:
        print(format_text(from_json_obj(member)))
    return 0


def _cmd_diameter(client: Client, args) -> int:
    params = {"max_n": args.max_n, "threads": args.threads}
    if args.budget is not None:
        params["budget"] = args.budget
    data = _checked(client.call("GET", "/diameter", params=params))
    for row in data["rows"]:
        print(f"{row['n']}, {row['count']}, {row['diameter']}, {row['dim']}, {row['bound']}")
    return 0


def _cmd_theta(client: Client, args) -> int:
    body = {
        "u": _spec_argument(args.first),
        "v": _spec_argument(args.second),
        "vertex": args.vertex,
    }
    if args.budget is not None:
        body["budget"] = args.budget
    data = _checked(client.call("POST", "/theta", body))
    print(data["theta"])
    return 0


def _expand_pair_literal(spec) -> list:
    if isinstance(spec, str) and is_family_literal(spec):
        m = re.fullmatch(r"([A-Za-z]):(\d+)", spec.strip())
        if m and m.group(1).upper() != "Z":
            return [f"{m.group(1)}-:{m.group(2)}", f"{m.group(1)}+:{m.group(2)}"]
    return [spec]


def _cmd_delete(client: Client, args) -> int:
    vertices = [int(v) for v in args.vertices.split(",") if v != ""]
    targets = _expand_pair_literal(_spec_argument(args.spec))
    data = _checked(client.call("POST", "/delete", {"targets": targets, "vertices": vertices}))
    for member in data["results"]:
        print(format_text(from_json_obj(member)))
    return 0


def _cmd_verify(client: Client, args) -> int:
    suites = args.suite or ["small", "recursion", "prop11", "properties"]
    body = {
        "suites": suites,
        "seed": args.seed,
        "recursion_max": args.recursion_max,
        "stretch": args.stretch,
    }
    data = _checked(client.call("POST", "/verify", body))
    checks, fail_count = data["checks"], data["failures"]
    if args.report == "json":
        print(json.dumps(data, indent=2))
    else:
        for c in checks:
            line = f"{c['status'].upper():7s} {c['name']:24s}"
            if c["status"] == "skipped":
                line += f" ({c['observed']})"
            else:
                line += f" expected={c['expected']} observed={c['observed']}"
            print(line)
        passed = sum(1 for c in checks if c["status"] == "pass")
        skipped = sum(1 for c in checks if c["status"] == "skipped")
        print(f"# {passed} passed, {fail_count} failed, {skipped} skipped")
    return min(fail_count, 125)


def _cmd_render(client: Client, args) -> int:
    body = {"target": _spec_argument(args.spec), "size": args.size}
    data = _checked(client.call("POST", "/render", body))
    if args.output == "-":
        sys.stdout.write(data["svg"])
    else:
        with open(args.output, "w") as fh:
            fh.write(data["svg"])
    return 0


def _cmd_enumerate(client: Client, args) -> int:
    params = {"budget": args.budget} if args.budget is not None else None
    data = _checked(client.call("GET", f"/enumerate/{args.n}", params=params))
    for key in data["keys"]:
        print(key)
    return 0


def _cmd_serve(_client: Client, args) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="flipdist", description="flip distances of convex polygon triangulations")
    parser.add_argument("--server", default=os.environ.get("FLIPDIST_SERVER"),
                        help="URL of a running service; default runs in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="exact flip distance between two triangulations")
    p.add_argument("first", help="file path or family literal like A-:8")
    p.add_argument("second")
    p.add_argument("--budget", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("family", help="print the members of a named pair")
    p.add_argument("family", help="TAG:N, e.g. A:12")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("diameter", help="flip-graph diameter table")
    p.add_argument("--max-n", type=int, default=12, dest="max_n")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_diameter)

    p = sub.add_parser("theta", help="maximal incident flips over geodesics at a vertex")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("vertex", type=int)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("delete", help="delete vertices from a triangulation or pair")
    p.add_argument("spec", help="file path, member literal, or pair literal")
    p.add_argument("vertices", help="comma-separated vertex labels in the original labeling")
    p.set_defaults(func=_cmd_delete)

    p = sub.add_parser("verify", help="run the verification harness")
    p.add_argument("--suite", action="append",
                   choices=["small", "recursion", "prop11", "properties"])
    p.add_argument("--report", choices=["text", "json"], default="text")
    p.add_argument("--seed", type=int, default=20130617)
    p.add_argument("--recursion-max", type=int, default=14, dest="recursion_max")
    p.add_argument("--stretch", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="render a triangulation to SVG")
    p.add_argument("spec")
    p.add_argument("-o", "--output", required=True, help="output path, or - for stdout")
    p.add_argument("--size", type=int, default=400)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("enumerate", help="stream canonical keys of all triangulations")
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8331)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageExit:
        return EX_USAGE
    client = Client(args.server)
    try:
        return args.func(client, args)
    except _HttpFailure as failure:
        return _fail_from_response(failure.resp)
    except httpx.HTTPError as err:
        print(f"error: {err}", file=sys.stderr)
        return EX_UNAVAILABLE


if __name__ == "__main__":
    sys.exit(main())
