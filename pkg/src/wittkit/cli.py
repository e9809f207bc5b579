"""Command-line front end.

A thin client over the service layer: every subcommand builds the same
request model the HTTP API accepts and dispatches it through the shared
handler (in process by default, over HTTP when --url points at a running
server).  JSON documents come from positional file arguments or stdin
("-"); results go to stdout in canonical form (sorted keys, compact,
trailing newline), so piping subcommands together round-trips byte for
byte.

Exit codes: 0 success, 2 invalid input, 3 no solution (non-integral ghost
vector, no admissible prime below the bound, ...).
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .errors import InvalidInputError, NoSolutionError, WittkitError
from .service.handlers import ENDPOINTS

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NO_SOLUTION = 3


def _read_json(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"bad JSON in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidInputError("top-level JSON value must be an object")
    return data


def _canonical(data: dict) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def _dispatch(path: str, payload: dict, url: str | None) -> dict:
    request_model, handler = ENDPOINTS[path]
    if url is None:
        request = request_model.model_validate(payload)
        response = handler(request)
        return response.model_dump(exclude_none=True)
    import httpx

    reply = httpx.post(url.rstrip("/") + path, json=payload, timeout=600.0)
    if reply.status_code == 200:
        data = reply.json()
        return {k: v for k, v in data.items() if v is not None}
    detail = reply.json().get("error", reply.text)
    if reply.status_code == 422:
        raise NoSolutionError(detail)
    raise InvalidInputError(detail)


FORMATS = """JSON formats (all numbers are decimal strings; fractions as "p/q"):
  ring         {"kind":"int"} | {"kind":"rat"} | {"kind":"mod","modulus":"6"}
  series       {"ring":RING,"trunc":N,"coeffs":["a1",...,"aN"]}
               the class of 1 + a1 t + ... + aN t^N modulo t^(N+1)
  ghost        {"ring":RING,"trunc":N,"ghost":["g1",...,"gN"]}
  orbit        {"ring":RING,"trunc":N,"orbit":["b1",...,"bN"]}
               meaning prod (1 - b_i t^i)
  binom        {"ring":RING,"trunc":N,"binom":["b1",...,"bN"]}
               meaning prod (1 - t^i)^(b_i), binomial rings only
  matrix       {"ring":RING,"dim":d,"rows":[["m11",...],...]}
  virtual set  {"orbits":{"2":1,"3":-1}}  (orbit index -> multiplicity)
  group file   {"order":q,"table":[[...]],"rank":n,
                "rep":{"0":[[...]],...},"cocycle":{"1,2":[...],...},
                "translations":{"0":["0","1/2"],...}}  (translations optional)
Inputs come from file arguments or stdin ("-"); output is canonical JSON
on stdout.  Exit codes: 0 ok, 2 invalid input, 3 no solution."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittkit",
        description="Exact Witt-ring, endomorphism, Burnside and crystallographic computations.",
        epilog=FORMATS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--url",
        default=None,
        help="base URL of a running wittkit service; default is in-process",
    )
    sub = parser.add_subparsers(dest="module", required=True)

    witt = sub.add_parser("witt", help="truncated big Witt ring operations")
    witt_sub = witt.add_subparsers(dest="op", required=True)

    def series_args(p, count=1):
        names = ["input"] if count == 1 else ["left", "right"]
        for name in names:
            p.add_argument(name, nargs="?", default="-", help="JSON file or - for stdin")
        p.add_argument("--trunc", type=int, default=None,
                       help="assert the truncation order of the inputs")

    for name in ("add", "mul"):
        series_args(witt_sub.add_parser(name), count=2)
    for name in ("neg", "ghost", "unghost", "orbit", "unorbit", "binom"):
        series_args(witt_sub.add_parser(name))
    for name in ("frob", "versch"):
        p = witt_sub.add_parser(name)
        p.add_argument("n", type=int)
        series_args(p)
    p = witt_sub.add_parser("lambda")
    p.add_argument("n", type=int)
    series_args(p)
    p.add_argument("--budget", type=int, default=None,
                   help="cap on n * trunc for the universal expansion")

    endo = sub.add_parser("endo", help="endomorphisms of free modules")
    endo_sub = endo.add_subparsers(dest="op", required=True)
    endo_sub.add_parser("charpoly").add_argument("input", nargs="?", default="-")
    p = endo_sub.add_parser("traces")
    p.add_argument("trunc", type=int)
    p.add_argument("input", nargs="?", default="-")
    p = endo_sub.add_parser("tensor")
    p.add_argument("left", nargs="?", default="-")
    p.add_argument("right", nargs="?", default="-")
    endo_sub.add_parser("companion").add_argument("input", nargs="?", default="-")

    burn = sub.add_parser("burnside", help="Burnside ring of the infinite cyclic group")
    burn_sub = burn.add_subparsers(dest="op", required=True)
    for name in ("ghost", "embed"):
        p = burn_sub.add_parser(name)
        p.add_argument("trunc", type=int)
        p.add_argument("input", nargs="?", default="-")
    p = burn_sub.add_parser("mul")
    p.add_argument("left", nargs="?", default="-")
    p.add_argument("right", nargs="?", default="-")
    for name in ("frob", "versch"):
        p = burn_sub.add_parser(name)
        p.add_argument("n", type=int)
        p.add_argument("input", nargs="?", default="-")
    burn_sub.add_parser("invert").add_argument("input", nargs="?", default="-")

    crysto = sub.add_parser("crysto", help="crystallographic toolkit")
    crysto_sub = crysto.add_subparsers(dest="op", required=True)
    p = crysto_sub.add_parser("lattice")
    p.add_argument("p", type=int)
    p.add_argument("gx", type=int)
    p.add_argument("gy", type=int)
    p = crysto_sub.add_parser("expansive")
    p.add_argument("file")
    p.add_argument("s", type=int)
    p = crysto_sub.add_parser("cohomology")
    p.add_argument("file")
    p.add_argument("degree", type=int)
    p = crysto_sub.add_parser("prime")
    p.add_argument("order", type=int)
    p.add_argument("bound", type=int)
    crysto_sub.add_parser("fixed").add_argument("file")

    return parser


def _check_trunc(payload: dict, expected: int | None) -> None:
    if expected is None:
        return
    for key in ("a", "b", "g", "c"):
        doc = payload.get(key)
        if doc is not None and doc.get("trunc") != expected:
            raise InvalidInputError(
                f"input truncation {doc.get('trunc')} does not match --trunc {expected}"
            )


def _run(args) -> dict:
    if args.module == "witt":
        op = args.op
        if op in ("add", "mul"):
            payload = {"a": _read_json(args.left), "b": _read_json(args.right)}
            _check_trunc(payload, args.trunc)
            return _dispatch(f"/witt/{op}", payload, args.url)
        if op in ("neg", "ghost", "orbit", "binom"):
            payload = {"a": _read_json(args.input)}
            _check_trunc(payload, args.trunc)
            return _dispatch(f"/witt/{op}", payload, args.url)
        if op == "unghost":
            payload = {"g": _read_json(args.input)}
            _check_trunc(payload, args.trunc)
            return _dispatch("/witt/unghost", payload, args.url)
        if op == "unorbit":
            payload = {"c": _read_json(args.input)}
            _check_trunc(payload, args.trunc)
            return _dispatch("/witt/unorbit", payload, args.url)
        if op in ("frob", "versch"):
            payload = {"n": args.n, "a": _read_json(args.input)}
            _check_trunc(payload, args.trunc)
            path = "/witt/frobenius" if op == "frob" else "/witt/verschiebung"
            return _dispatch(path, payload, args.url)
        if op == "lambda":
            payload = {"n": args.n, "a": _read_json(args.input)}
            if args.budget is not None:
                payload["budget"] = args.budget
            _check_trunc(payload, args.trunc)
            return _dispatch("/witt/lambda", payload, args.url)
    if args.module == "endo":
        op = args.op
        if op == "charpoly":
            return _dispatch("/endo/charpoly", {"m": _read_json(args.input)}, args.url)
        if op == "traces":
            payload = {"m": _read_json(args.input), "trunc": args.trunc}
            return _dispatch("/endo/traces", payload, args.url)
        if op == "tensor":
            payload = {"a": _read_json(args.left), "b": _read_json(args.right)}
            return _dispatch("/endo/tensor", payload, args.url)
        if op == "companion":
            doc = _read_json(args.input)
            payload = {"ring": doc.get("ring"), "coeffs": doc.get("coeffs")}
            return _dispatch("/endo/companion", payload, args.url)
    if args.module == "burnside":
        op = args.op
        if op in ("ghost", "embed"):
            payload = {"trunc": args.trunc, "x": _read_json(args.input)}
            return _dispatch(f"/burnside/{op}", payload, args.url)
        if op == "mul":
            payload = {"x": _read_json(args.left), "y": _read_json(args.right)}
            return _dispatch("/burnside/mul", payload, args.url)
        if op in ("frob", "versch"):
            payload = {"n": args.n, "x": _read_json(args.input)}
            path = "/burnside/frobenius" if op == "frob" else "/burnside/verschiebung"
            return _dispatch(path, payload, args.url)
        if op == "invert":
            return _dispatch("/burnside/invert", {"g": _read_json(args.input)}, args.url)
    if args.module == "crysto":
        op = args.op
        if op == "lattice":
            payload = {"p": args.p, "gx": args.gx, "gy": args.gy}
            return _dispatch("/crysto/lattice", payload, args.url)
        if op == "expansive":
            payload = {"group": _read_json(args.file), "s": args.s}
            return _dispatch("/crysto/expansive", payload, args.url)
        if op == "cohomology":
            payload = {"group": _read_json(args.file), "degree": args.degree}
            return _dispatch("/crysto/cohomology", payload, args.url)
        if op == "prime":
            payload = {"order": args.order, "bound": args.bound}
            return _dispatch("/crysto/prime", payload, args.url)
        if op == "fixed":
            return _dispatch("/crysto/fixed", {"group": _read_json(args.file)}, args.url)
    raise InvalidInputError("unknown subcommand")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = _run(args)
    except NoSolutionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_SOLUTION
    except (InvalidInputError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except WittkitError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(_canonical(result))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
