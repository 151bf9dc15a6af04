import click

import bignet
from bignet import fileformats, normal, translate as tr, util
from bignet.theory import derive_theory


@click.command("translate")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.File("w"), default="-", help="Output file.")
@util.with_signature
@util.exit_codes("translate")
def translate(path, output, signature):
    """Translate a bigraph into a net."""
    g = fileformats.parse_bigraph_file(path, signature)
    m = tr.t_mor(g)
    bignet.echo("translate", f"{len(m.cells)} cells, {len(m.t_link)} t links, {len(m.v_link)} v links", err=True)
    output.write(fileformats.serialize_net(normal.expand(m)))


@click.command("extract")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.File("w"), default="-", help="Output file.")
@util.with_signature
@util.exit_codes("extract")
def extract(path, output, signature):
    """Read a bigraph off a correct net between interface formulas."""
    theory = derive_theory(signature)
    m = normal.normalize(fileformats.parse_net_file(path, theory), theory)
    output.write(fileformats.serialize_bigraph(tr.try_extract(m)))
