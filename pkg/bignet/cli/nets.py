import click

import bignet
from bignet import correctness, fileformats, net, normal, util
from bignet.formula import count_switchings, to_classical
from bignet.theory import derive_theory

net_file = click.Path(exists=True, dir_okay=False)


def _load(path, signature):
    return fileformats.parse_net_file(path, derive_theory(signature))


@click.command("check-net")
@click.argument("path", type=net_file)
@click.option("--oracle", is_flag=True, help="Visit every switching instead of contracting.")
@util.with_signature
@util.with_caps
@util.exit_codes("check-net")
def check_net(path, oracle, signature):
    """Check the wiring rules and correctness of a net."""
    n = _load(path, signature)
    if oracle:
        ok = correctness.is_correct_oracle(n)
    else:
        ok = correctness.is_correct_fast(n)
    if ok:
        bignet.echo("check-net", f"{path}: correct, {n}")
    else:
        bignet.echo("check-net", f"{path}: not correct, some switching is cyclic or disconnected", err=True)
    return ok


@click.command("switchings")
@click.argument("path", type=net_file)
@click.option("--count", "mode", flag_value="count", default=True, help="Print the number of switchings.")
@click.option("--enumerate", "mode", flag_value="enumerate", help="List the switchings with their graphs.")
@click.option("--rows", type=int, default=100, show_default=True, help="Maximum number of rows to show.")
@util.with_signature
@util.with_caps
@util.exit_codes("switchings")
def switchings(path, mode, rows, signature):
    """Count or enumerate the switchings of a net."""
    n = _load(path, signature)
    if mode == "count":
        click.echo(count_switchings(to_classical(n.formula)))
        return True
    reports = list(correctness.switching_reports(n))
    util.print_table(
        ["switching", "vertices", "edges", "connected", "acyclic"],
        [
            ["".join(c.value for c in r.switching), r.vertices, r.edges, r.connected, r.acyclic]
            for r in reports
        ],
        limit=rows,
    )
    return all(r.connected and r.acyclic for r in reports)


@click.command("compose-nets")
@click.argument("g", type=net_file)
@click.argument("f", type=net_file)
@click.option("-o", "--output", type=click.File("w"), default="-", help="Output file.")
@util.with_signature
@util.exit_codes("compose-nets")
def compose_nets(g, f, output, signature):
    """Compose two nets: first F, then G."""
    composed = net.compose_nets(_load(g, signature), _load(f, signature))
    output.write(fileformats.serialize_net(composed))


def _report_crosscheck(sender, canonical, bfs):
    bignet.echo("eq-nets", f"rewiring search: {'equal' if bfs else 'different'}, "
                           f"normal forms: {'equal' if canonical else 'different'}")


@click.command("eq-nets")
@click.argument("f", type=net_file)
@click.argument("g", type=net_file)
@click.option("-v", "--verbose", is_flag=True, help="Report the rewiring cross-check.")
@util.with_signature
@util.with_caps
@util.exit_codes("eq-nets")
def eq_nets(f, g, verbose, signature):
    """Decide whether two nets denote the same morphism."""
    theory = derive_theory(signature)
    if verbose:
        util.on_crosscheck.connect(_report_crosscheck)
    try:
        result = normal.eq_nets(_load(f, signature), _load(g, signature), theory)
    finally:
        util.on_crosscheck.disconnect(_report_crosscheck)
    click.echo(f"{'equal' if result.equal else 'different'} ({result.method})")
    return result.equal
