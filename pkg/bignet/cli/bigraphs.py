import click

import bignet
from bignet import bigraph, fileformats, util

bigraph_file = click.Path(exists=True, dir_okay=False)


@click.command("check-bigraph")
@click.argument("path", type=bigraph_file)
@util.with_signature
@util.exit_codes("check-bigraph")
def check_bigraph(path, signature):
    """Check the place graph, link graph and scope rules of a bigraph."""
    g = fileformats.parse_bigraph_file(path, signature)
    free, bound = bigraph.classify_edges(g)
    bignet.echo("check-bigraph", f"{path}: valid, {g}, {len(free)} free and {len(bound)} bound edges")


@click.command("compose-bigraphs")
@click.argument("g2", type=bigraph_file)
@click.argument("g1", type=bigraph_file)
@click.option("-o", "--output", type=click.File("w"), default="-", help="Output file.")
@util.with_signature
@util.exit_codes("compose-bigraphs")
def compose_bigraphs(g2, g1, output, signature):
    """Compose two bigraphs: G1 is placed into the sites of G2."""
    composed = bigraph.compose_bigraphs(
        fileformats.parse_bigraph_file(g2, signature),
        fileformats.parse_bigraph_file(g1, signature),
    )
    bigraph.validate_bigraph(composed)
    output.write(fileformats.serialize_bigraph(composed))


@click.command("eq-bigraphs")
@click.argument("g1", type=bigraph_file)
@click.argument("g2", type=bigraph_file)
@util.with_signature
@util.exit_codes("eq-bigraphs")
def eq_bigraphs(g1, g2, signature):
    """Decide whether two bigraphs are equal up to idle edges and renaming."""
    equal = bigraph.eq_bigraphs(
        fileformats.parse_bigraph_file(g1, signature),
        fileformats.parse_bigraph_file(g2, signature),
    )
    click.echo(f"{'equal' if equal else 'different'} (canonical)")
    return equal
