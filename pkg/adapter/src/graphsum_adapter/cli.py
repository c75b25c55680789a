"""parse_corpus command line entry point."""

from __future__ import annotations

from pathlib import Path

import click

from .adapter import BACKENDS, parse_corpus


@click.command()
@click.option("--in", "in_dir", required=True,
              type=click.Path(exists=True, file_okay=False, path_type=Path),
              help="Directory of .story files.")
@click.option("--out", "out_dir", required=True,
              type=click.Path(file_okay=False, path_type=Path),
              help="Directory that receives the .conllu sidecars.")
@click.option("--manifest", "manifest_path", required=True,
              type=click.Path(dir_okay=False, path_type=Path),
              help="Where to write the JSON manifest.")
@click.option("--backend", type=click.Choice(BACKENDS), default="chain", show_default=True,
              help="Parser backend; stanza needs its model downloaded beforehand.")
@click.option("--lang", default="en", show_default=True)
@click.option("--jobs", "-j", type=int, default=1, show_default=True)
def main(in_dir, out_dir, manifest_path, backend, lang, jobs):
    """Parse a story corpus into CoNLL-U sidecars plus a manifest."""
    manifest = parse_corpus(in_dir, out_dir, backend=backend, lang=lang, jobs=jobs)
    manifest.write(manifest_path)
    click.echo(f"parsed {manifest.ok_count} ok, {manifest.failed_count} failed")
    if manifest.failed_count:
        for stem, status in sorted(manifest.files.items()):
            if status.status == "parse_failed":
                click.echo(f"  {stem}: {status.error}", err=True)


if __name__ == "__main__":
    main()
