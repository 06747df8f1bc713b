"""Command-line client for the census service.

Every subcommand talks HTTP: against a remote service when ``--server``
(or ``DYCKFOREST_SERVER``) is given, otherwise against the bundled app
mounted in-process, so no running server is required.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 width overflow.
"""

from __future__ import annotations

import asyncio
import csv
import io
import json
import os
from pathlib import Path

import click
import httpx

_FORMATS = ("plain", "csv", "json")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--format",
    "fmt",
    type=click.Choice(_FORMATS),
    default="plain",
    show_default=True,
    help="Output format.",
)
@click.option(
    "--server",
    envvar="DYCKFOREST_SERVER",
    default=None,
    metavar="URL",
    help="Base URL of a running service; default runs the app in-process.",
)
@click.pass_context
def main(ctx: click.Context, fmt: str, server: str | None) -> None:
    """Census and lookup tool for the binary suffix-dominant numbers (OEIS A036991)."""
    ctx.obj = {"fmt": fmt, "server": server}


async def _local_request(method: str, path: str, params, json_body):
    from .service import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport, base_url="http://dyckforest.local", timeout=None
    ) as client:
        return await client.request(method, path, params=params, json=json_body)


def _call(ctx: click.Context, method: str, path: str, params=None, json_body=None) -> dict:
    server = ctx.obj["server"]
    try:
        if server:
            with httpx.Client(base_url=server, timeout=300.0) as client:
                resp = client.request(method, path, params=params, json=json_body)
        else:
            resp = asyncio.run(_local_request(method, path, params, json_body))
    except httpx.HTTPError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    if resp.status_code == 200:
        return resp.json()
    try:
        body = resp.json()
    except ValueError:
        body = {}
    detail = body.get("detail", resp.text)
    if not isinstance(detail, str):
        detail = json.dumps(detail)
    click.echo(f"error: {detail}", err=True)
    ctx.exit(3 if body.get("code") == "overflow" else 2)


def _emit_csv(rows: list[dict], columns: list[str]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf)  # RFC 4180 line endings
    writer.writerow(columns)
    for row in rows:
        writer.writerow([row[c] for c in columns])
    click.echo(buf.getvalue(), nl=False)


def _emit_values(ctx: click.Context, payload: dict, key: str, column: str) -> None:
    fmt = ctx.obj["fmt"]
    if fmt == "json":
        click.echo(json.dumps(payload))
    elif fmt == "csv":
        _emit_csv([{column: v} for v in payload[key]], [column])
    else:
        click.echo(" ".join(str(v) for v in payload[key]))


def _emit_rows(ctx: click.Context, payload: dict, rows: list[dict], columns: list[str]) -> None:
    fmt = ctx.obj["fmt"]
    if fmt == "json":
        click.echo(json.dumps(payload))
    elif fmt == "csv":
        _emit_csv(rows, columns)
    else:
        for row in rows:
            click.echo(" ".join(str(row[c]) for c in columns))


@main.command()
@click.option("--limit", type=int, required=True, help="How many terms to list.")
@click.pass_context
def enumerate(ctx: click.Context, limit: int) -> None:
    """List the first LIMIT terms in ascending order."""
    payload = _call(ctx, "GET", "/terms", params={"limit": limit})
    _emit_values(ctx, payload, "terms", "term")


@main.command()
@click.option("--from", "start", type=int, required=True, help="First range.")
@click.option("--to", type=int, required=True, help="Last range.")
@click.pass_context
def ranges(ctx: click.Context, start: int, to: int) -> None:
    """Size, triplet count and lone-term count per range."""
    payload = _call(ctx, "GET", "/ranges", params={"from": start, "to": to})
    _emit_rows(ctx, payload, payload["rows"], ["range", "size", "triplets", "lone_terms"])


@main.command()
@click.option("--range", "n", type=int, required=True, help="Range number.")
@click.pass_context
def triplets(ctx: click.Context, n: int) -> None:
    """Triplets fully contained in a range."""
    payload = _call(ctx, "GET", f"/ranges/{n}/triplets")
    _emit_rows(ctx, payload, payload["triplets"], ["low", "mid", "high"])


@main.command()
@click.option("--range", "n", type=int, required=True, help="Range number.")
@click.pass_context
def roots(ctx: click.Context, n: int) -> None:
    """Lone terms of a range (roots of ternary trees)."""
    payload = _call(ctx, "GET", f"/ranges/{n}/roots")
    _emit_values(ctx, payload, "roots", "root")


@main.command()
@click.option("--root", type=int, required=True, help="Tree root (1 or a lone term).")
@click.option("--depth", type=int, required=True, help="Level below the root.")
@click.option("--primes", "primes_", is_flag=True, help="Show the level's prime triplets instead.")
@click.pass_context
def tree(ctx: click.Context, root: int, depth: int, primes_: bool) -> None:
    """Nodes of one tree level, or its prime triplets with --primes."""
    if primes_:
        payload = _call(ctx, "GET", "/tree/primes", params={"root": root, "depth": depth})
        _emit_prime_records(ctx, payload, census=True)
    else:
        payload = _call(ctx, "GET", "/tree", params={"root": root, "depth": depth})
        _emit_values(ctx, payload, "nodes", "node")


_PRIME_COLUMNS = ["low", "mid", "high", "low_prime", "mid_prime", "high_prime", "gap"]


def _emit_prime_records(ctx: click.Context, payload: dict, census: bool) -> None:
    fmt = ctx.obj["fmt"]
    if fmt == "json":
        click.echo(json.dumps(payload))
    elif fmt == "csv":
        _emit_csv(payload["records"], _PRIME_COLUMNS)
    else:
        for record in payload["records"]:
            if census:
                click.echo(record["masked"])
            else:
                click.echo(f"{record['low']} {record['mid']} {record['high']}")


@main.command()
@click.option("--range", "n", type=int, required=True, help="Range number.")
@click.option("--census", is_flag=True, help="Zero-masked a/b/c display form.")
@click.pass_context
def primes(ctx: click.Context, n: int, census: bool) -> None:
    """Prime triplets of a range (twin/cousin tallies in csv/json output)."""
    payload = _call(ctx, "GET", f"/ranges/{n}/primes")
    _emit_prime_records(ctx, payload, census=census)


@main.command()
@click.argument("value", type=int)
@click.pass_context
def rank(ctx: click.Context, value: int) -> None:
    """1-based position of VALUE among all terms."""
    payload = _call(ctx, "GET", f"/rank/{value}")
    if ctx.obj["fmt"] == "json":
        click.echo(json.dumps(payload))
    elif ctx.obj["fmt"] == "csv":
        _emit_csv([payload], ["value", "rank"])
    else:
        click.echo(str(payload["rank"]))


@main.command()
@click.argument("index", type=int)
@click.pass_context
def at(ctx: click.Context, index: int) -> None:
    """The term at 1-based position INDEX."""
    payload = _call(ctx, "GET", f"/term/{index}")
    if ctx.obj["fmt"] == "json":
        click.echo(json.dumps(payload))
    elif ctx.obj["fmt"] == "csv":
        _emit_csv([payload], ["index", "value"])
    else:
        click.echo(str(payload["value"]))


def _resolve_bfile(path_str: str) -> Path:
    path = Path(path_str)
    if path.exists():
        return path
    cache_dir = os.environ.get("DYCKFOREST_BFILE_DIR")
    if cache_dir:
        cached = Path(cache_dir) / path_str
        if cached.exists():
            return cached
    raise click.UsageError(f"b-file not found: {path_str}")


@main.command()
@click.option("--bfile", required=True, metavar="PATH",
              help="B-file path, tried as-is then under $DYCKFOREST_BFILE_DIR.")
@click.option("--sequence", required=True,
              type=click.Choice(["a036991", "a001405", "a116385", "a350577"]),
              help="Which locally generated sequence to check against.")
@click.pass_context
def verify(ctx: click.Context, bfile: str, sequence: str) -> None:
    """Check a b-file against the locally generated sequence."""
    text = _resolve_bfile(bfile).read_text()
    payload = _call(ctx, "POST", "/verify", json_body={"sequence": sequence, "text": text})
    fmt = ctx.obj["fmt"]
    if fmt == "json":
        click.echo(json.dumps(payload))
    elif fmt == "csv":
        _emit_csv([payload], ["sequence", "checked", "ok", "mismatch_index", "expected", "actual"])
    elif payload["ok"]:
        click.echo(f"ok: {payload['checked']} entries match {payload['sequence']}")
    else:
        click.echo(
            f"mismatch at index {payload['mismatch_index']}: "
            f"expected {payload['expected']}, found {payload['actual']}"
        )
    if not payload["ok"]:
        ctx.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("dyckforest.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
