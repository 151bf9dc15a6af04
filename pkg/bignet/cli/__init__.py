import click

import bignet
from bignet.cli.bigraphs import check_bigraph, compose_bigraphs, eq_bigraphs
from bignet.cli.dot import cli as dot_cli
from bignet.cli.nets import check_net, compose_nets, eq_nets, switchings
from bignet.cli.translate import extract, translate


@click.group("bignet")
@click.version_option(bignet.__version__)
def main():
    """bignet - binding bigraphs as proof nets"""
    pass


main.add_command(check_net)
main.add_command(switchings)
main.add_command(compose_nets)
main.add_command(eq_nets)
main.add_command(check_bigraph)
main.add_command(compose_bigraphs)
main.add_command(eq_bigraphs)
main.add_command(translate)
main.add_command(extract)
main.add_command(dot_cli)
