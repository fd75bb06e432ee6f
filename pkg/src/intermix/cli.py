"""Command line front end.

Every analysis command talks to the service layer through ServiceClient, so
the CLI is a thin client over the same request/response contract exposed over
HTTP. Pass --server to point it at a remote instance; without it the app runs
in-process.
"""

from __future__ import annotations

import json
from pathlib import Path

import click

from .client import ServiceClient, ServiceError

MAX_SEED = (1 << 64) - 1


def _run_options(f):
    options = [
        click.option("--seed", type=click.IntRange(0, MAX_SEED), default=42,
                     show_default=True, help="Base PRNG seed."),
        click.option("--max-k", type=click.IntRange(min=1), default=20,
                     show_default=True, help="Last intermixing step."),
        click.option("--swap-divisor", type=click.IntRange(min=1), default=10,
                     show_default=True,
                     help="Swap count at step k is floor(k * words / divisor)."),
        click.option("--plateau-start", type=click.IntRange(min=0), default=6,
                     show_default=True, help="First step averaged into the plateau."),
        click.option("--threshold", type=float, default=1.0, show_default=True,
                     help="Verdict is coherent_text when chi exceeds this."),
        click.option("--backend", type=click.Choice(["builtin", "gzip"]),
                     default="builtin", show_default=True,
                     help="Compressor used for volume measurements."),
        click.option("--gzip-level", type=click.IntRange(1, 9), default=6,
                     show_default=True, help="Level for the gzip backend."),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _server_option(f):
    return click.option(
        "--server", default=None, metavar="URL",
        help="Remote service URL; runs the service in-process when omitted.",
    )(f)


def _encoding_option(f):
    return click.option(
        "--encoding", default="utf-8", show_default=True,
        help="Text encoding of input files.",
    )(f)


def _run_body(seed, max_k, swap_divisor, plateau_start, threshold, backend,
              gzip_level) -> dict:
    return {
        "seed": seed,
        "max_k": max_k,
        "swap_divisor": swap_divisor,
        "plateau_start": plateau_start,
        "threshold": threshold,
        "backend": backend,
        "gzip_level": gzip_level,
    }


def _read_text(path: Path, encoding: str) -> str:
    try:
        return path.read_text(encoding=encoding)
    except UnicodeDecodeError as exc:
        raise click.ClickException(
            f"{path}: {exc}. Try a different --encoding."
        ) from exc


def _call(fn, body: dict) -> dict:
    try:
        return fn(body)
    except ServiceError as exc:
        raise click.ClickException(str(exc)) from exc


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _curve_csv(points: list[dict]) -> str:
    lines = ["k,swaps,bytes"]
    lines += [f"{p['k']},{p['swaps']},{p['bytes']}" for p in points]
    return "\n".join(lines) + "\n"


@click.group()
@click.version_option(package_name="intermix")
def main():
    """Measure text connectivity by compressing progressively shuffled copies."""


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@_run_options
@_encoding_option
@_server_option
@click.option("--curve-out", type=click.Path(dir_okay=False, path_type=Path),
              default=None,
              help="Write the volume curve CSV here instead of stdout.")
def analyze(file, seed, max_k, swap_divisor, plateau_start, threshold, backend,
            gzip_level, encoding, server, curve_out):
    """Score one document: chi report as JSON, volume curve as CSV."""
    body = _run_body(seed, max_k, swap_divisor, plateau_start, threshold,
                     backend, gzip_level)
    body["content"] = _read_text(file, encoding)
    body["source_id"] = str(file)
    resp = _call(ServiceClient(server).analyze, body)

    report = dict(resp["report"])
    report["source_id"] = resp["source_id"]
    report["n_words"] = resp["n_words"]
    report["run_config"] = resp["run_config"]
    click.echo(_json_text(report), nl=False)

    csv_text = _curve_csv(resp["curve"])
    if curve_out is not None:
        curve_out.write_text(csv_text, encoding="utf-8")
    else:
        click.echo(csv_text, nl=False)


@main.command("curve-by-length")
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--lengths", required=True, metavar="N,N,...",
              help="Comma-separated fragment lengths in symbols, increasing.")
@_run_options
@_encoding_option
@_server_option
def curve_by_length(file, lengths, seed, max_k, swap_divisor, plateau_start,
                    threshold, backend, gzip_level, encoding, server):
    """Score leading fragments of FILE and print chi per length as CSV."""
    try:
        parsed = [int(part) for part in lengths.split(",") if part.strip()]
    except ValueError as exc:
        raise click.ClickException(f"bad --lengths value: {exc}") from exc
    if not parsed:
        raise click.ClickException("--lengths needs at least one value")

    body = _run_body(seed, max_k, swap_divisor, plateau_start, threshold,
                     backend, gzip_level)
    body["content"] = _read_text(file, encoding)
    body["source_id"] = str(file)
    body["lengths"] = parsed
    resp = _call(ServiceClient(server).curve_by_length, body)

    lines = ["length,chi"]
    lines += [f"{p['length']},{p['chi']:.6f}" for p in resp["series"]]
    click.echo("\n".join(lines))


@main.command()
@click.option("--vocab-size", type=click.IntRange(min=1), default=1000,
              show_default=True, help="Distinct artificial words to draw from.")
@click.option("--exponent", type=float, default=1.0, show_default=True,
              help="Rank-frequency power law exponent.")
@click.option("--symbols", type=click.IntRange(min=13), default=10000,
              show_default=True, help="Target text length in symbols.")
@click.option("--seed", type=click.IntRange(0, MAX_SEED), default=1,
              show_default=True, help="Seed of the first document.")
@click.option("--count", type=click.IntRange(min=1), default=1,
              show_default=True, help="Documents to generate (seeds seed..seed+count-1).")
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path),
              required=True, help="Directory for the text files and manifest.")
@_server_option
def generate(vocab_size, exponent, symbols, seed, count, out_dir, server):
    """Generate artificial texts with a power-law word distribution."""
    body = {
        "vocab_size": vocab_size,
        "exponent": exponent,
        "symbols": symbols,
        "seed": seed,
        "count": count,
    }
    resp = _call(ServiceClient(server).generate, body)

    out_dir.mkdir(parents=True, exist_ok=True)
    files = []
    for doc in resp["documents"]:
        name = f"{doc['source_id']}.txt"
        (out_dir / name).write_text(doc["content"], encoding="utf-8")
        files.append({
            "file": name,
            "seed": doc["seed"],
            "symbols": doc["symbols"],
        })
    manifest = {"params": resp["params"], "files": files}
    (out_dir / "manifest.json").write_text(_json_text(manifest), encoding="utf-8")
    click.echo(f"wrote {len(files)} files to {out_dir}")


@main.command()
@click.argument("directory", type=click.Path(exists=True, file_okay=False,
                                             path_type=Path))
@click.option("--glob", "pattern", default="*.txt", show_default=True,
              help="Filename pattern selecting documents inside DIRECTORY.")
@_run_options
@_encoding_option
@_server_option
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path),
              default=None,
              help="Write the corpus report JSON here instead of stdout.")
@click.option("--csv", "csv_out", type=click.Path(dir_okay=False, path_type=Path),
              default=None,
              help="Also write entries as CSV (rank,source_id,chi,symbols,verdict).")
def batch(directory, pattern, seed, max_k, swap_divisor, plateau_start,
          threshold, backend, gzip_level, encoding, server, out, csv_out):
    """Score every matching file in DIRECTORY as one corpus."""
    paths = sorted(directory.glob(pattern))
    if not paths:
        raise click.ClickException(f"no files in {directory} match {pattern!r}")

    body = _run_body(seed, max_k, swap_divisor, plateau_start, threshold,
                     backend, gzip_level)
    body["documents"] = [
        {"source_id": path.name, "content": _read_text(path, encoding)}
        for path in paths
    ]
    resp = _call(ServiceClient(server).batch, body)

    text = _json_text(resp)
    if out is not None:
        out.write_text(text, encoding="utf-8")
        click.echo(f"wrote report for {len(paths)} files to {out}")
    else:
        click.echo(text, nl=False)

    if csv_out is not None:
        lines = ["rank,source_id,chi,symbols,verdict"]
        rank = 0
        for entry in resp["entries"]:
            if entry["chi"] is None:
                lines.append(
                    f",{entry['source_id']},,{entry['symbols']},{entry['verdict']}"
                )
            else:
                rank += 1
                lines.append(
                    f"{rank},{entry['source_id']},{entry['chi']:.6f},"
                    f"{entry['symbols']},{entry['verdict']}"
                )
        csv_out.write_text("\n".join(lines) + "\n", encoding="utf-8")


@main.command()
@click.option("--real", "real_path", required=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="Corpus report JSON for the real group.")
@click.option("--artificial", "artificial_path", required=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="Corpus report JSON for the artificial group.")
@click.option("--large-symbol-floor", type=click.IntRange(min=1), default=5000,
              show_default=True,
              help="Documents at or above this size count as large.")
@_server_option
def compare(real_path, artificial_path, large_symbol_floor, server):
    """Summarize two corpus reports side by side."""
    body = {
        "real": json.loads(real_path.read_text(encoding="utf-8")),
        "artificial": json.loads(artificial_path.read_text(encoding="utf-8")),
        "large_symbol_floor": large_symbol_floor,
    }
    resp = _call(ServiceClient(server).compare, body)
    click.echo(_json_text(resp), nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("intermix.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
