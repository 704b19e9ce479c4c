"""Command-line runner: sweep, scatter, validate.

The CLI is a thin client over the HTTP service.  By default it talks to an
in-process instance through an ASGI transport (no socket, no server needed);
--server URL points it at a remote instance instead.  CSV files are always
written client-side so output bytes are identical either way.

Exit codes: 0 success, 1 validation/bound failure, 2 config error, 3 I/O error.
"""
import argparse
import asyncio
import sys

import httpx

from .config import ScatterConfig, SweepConfig, parse_config
from .csvio import write_csv
from .errors import ConfigError, LindturError
from .sweeps import rows_for_csv


def _request(server, path, payload):
    try:
        if server:
            with httpx.Client(base_url=server, timeout=600.0) as client:
                resp = client.post(path, json=payload)
        else:
            from .service.app import create_app

            async def _go():
                transport = httpx.ASGITransport(app=create_app())
                async with httpx.AsyncClient(
                    transport=transport, base_url="http://lindtur.internal", timeout=600.0
                ) as client:
                    return await client.post(path, json=payload)

            resp = asyncio.run(_go())
    except httpx.HTTPError as exc:
        raise OSError(f"service request failed: {exc}") from exc
    if resp.status_code == 422:
        raise ConfigError(f"service rejected request: {resp.json().get('detail')}")
    if resp.status_code != 200:
        raise LindturError(f"service error {resp.status_code}: {resp.text}")
    return resp.json()


def _params_payload(params):
    return {
        "gamma_h": params.gamma_h,
        "gamma_c": params.gamma_c,
        "n_h": params.n_h,
        "n_c": params.n_c,
        "omega": params.omega_drive_amp,
        "detuning": params.detuning,
    }


def _cmd_sweep(args):
    cfg = SweepConfig.from_mapping(parse_config(args.config))
    payload = {
        "kind": cfg.kind,
        "params": _params_payload(cfg.params),
        "variable": cfg.variable,
        "lo": cfg.lo,
        "hi": cfg.hi,
        "points": cfg.points,
        "seed": cfg.seed,
        "bound_slack": cfg.tolerances.get("bound_slack"),
    }
    table = _request(args.server, "/sweep", payload)
    return _write_table(cfg.output, table)


def _cmd_scatter(args):
    cfg = ScatterConfig.from_mapping(parse_config(args.config))
    payload = {
        "params": _params_payload(cfg.params),
        "samples": cfg.samples,
        "delta_lo": cfg.delta_lo,
        "delta_hi": cfg.delta_hi,
        "omega_lo": cfg.omega_lo,
        "omega_hi": cfg.omega_hi,
        "seed": cfg.seed,
        "bound_slack": cfg.tolerances.get("bound_slack"),
    }
    table = _request(args.server, "/scatter", payload)
    return _write_table(cfg.output, table)


def _write_table(output, table):
    rows = table["rows"]
    write_csv(output, table["columns"], rows_for_csv(rows), table["comments"])
    bad = [r for r in rows if r.get("error")]
    print(f"wrote {len(rows)} rows to {output}")
    if bad:
        names = sorted({r["error"] for r in bad})
        print(f"{len(bad)} rows carry errors: {', '.join(names)}", file=sys.stderr)
        return 1
    return 0


def _cmd_validate(args):
    tols = {}
    for item in args.tol or []:
        key, sep, val = item.partition("=")
        if not sep or not key:
            raise ConfigError(f"--tol expects KEY=VAL, got {item!r}")
        try:
            tols[key] = float(val)
        except ValueError:
            raise ConfigError(f"--tol {key}: not a number: {val!r}") from None
    result = _request(args.server, "/validate", {"skip_mc": args.skip_mc, "tolerances": tols})
    for suite in result["suites"]:
        mark = "PASS" if suite["passed"] else "FAIL"
        print(f"suite {suite['name']}: {mark} - {suite['detail']}")
    if not result["passed"]:
        failed = [s["name"] for s in result["suites"] if not s["passed"]]
        print(f"validation failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    print("all suites passed")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lindtur",
        description="Steady states, counting statistics, and uncertainty bounds "
        "for Lindblad generators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="grid sweep from a config file, CSV out")
    p_sweep.add_argument("config")
    p_sweep.add_argument("--server", help="remote service URL (default: in-process)")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_scatter = sub.add_parser("scatter", help="random parameter scatter, CSV out")
    p_scatter.add_argument("config")
    p_scatter.add_argument("--server")
    p_scatter.set_defaults(func=_cmd_scatter)

    p_val = sub.add_parser("validate", help="run the invariant check suites")
    p_val.add_argument("--skip-mc", action="store_true", help="skip the Monte Carlo suite")
    p_val.add_argument("--tol", action="append", metavar="KEY=VAL", help="tolerance override")
    p_val.add_argument("--server")
    p_val.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 3
    except LindturError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
