import json

import click

from bignet import dot, fileformats, util
from bignet.theory import derive_theory


@click.command("dot")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--kind", type=click.Choice(["auto", "net", "bigraph"]), default="auto", show_default=True,
              help="Input kind. Nets are recognized by their 'wires' key.")
@click.option("-o", "--output", type=click.File("w"), default="-", help="Output file.")
@util.with_signature
@util.exit_codes("dot")
def cli(path, kind, output, signature):
    """Export a net or a bigraph as graphviz DOT."""
    with open(path, encoding="utf8") as f:
        text = f.read()
    if kind == "auto":
        try:
            kind = "net" if "wires" in json.loads(text) else "bigraph"
        except (json.JSONDecodeError, TypeError):
            raise fileformats.FileFormatError(f"{path} is not a JSON document")
    if kind == "net":
        output.write(dot.net_to_dot(fileformats.parse_net(text, derive_theory(signature))))
    else:
        output.write(dot.bigraph_to_dot(fileformats.parse_bigraph(text, signature)))
