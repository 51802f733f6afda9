"""
Command line interface for dowkit.

Run 'dowkit --help' for usage information. Every subcommand reads and
writes UTF-8 JSON; '-' stands for standard input or output.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import numpy as np

from dowkit import __version__
from dowkit.complex.simplicial import SimplicialComplex, euler_characteristic, f_vector
from dowkit.constants import (
    SIDE_LEFT,
    SIDE_RIGHT,
    SIDES,
    STRATEGY_INTERSECTION,
    STRATEGY_MAXIMAL,
)
from dowkit.dowker.biclique import biclique_complex
from dowkit.dowker.complexes import dowker_left, dowker_right
from dowkit.dowker.rectangle import rectangle_complex
from dowkit.errors import (
    ComplexTooLargeError,
    ConstructionError,
    CyclicMatchingError,
    DomainError,
    DowkitError,
    MatchingMismatchError,
    ParseError,
    PreconditionError,
)
from dowkit.fuzz import random_relation
from dowkit.homology.profile import homology
from dowkit.morse.collapse import CollapseCertificate, collapse_sequence, verify_certificate
from dowkit.morse.matching import dowker_matching, find_cycle
from dowkit.morse.zigzag import barmak_zigzag, isomorphic_zigzag
from dowkit.output.formats import (
    STDIO,
    complex_to_dict,
    load_complex,
    load_matching,
    load_order,
    load_relation,
    load_verifiable,
    load_vertex_map,
    save_certificate,
    save_complex,
    save_matching,
    save_profile,
    save_relation,
    save_zigzag,
    write_json,
)
from dowkit.pipeline import PipelineOptions, run_pipeline, tagged_order
from dowkit.relations.morphism import disjointify
from dowkit.relations.relation import Relation

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


# =============================================================================
# Shared helpers
# =============================================================================

def _add_common(parser: argparse.ArgumentParser, stats: bool = True) -> None:
    parser.add_argument(
        '-o', '--output',
        default=STDIO,
        metavar='PATH',
        help="Output file (default: '-', standard output)",
    )
    if stats:
        parser.add_argument(
            '--stats',
            action='store_true',
            help='Write a stats report next to the output (standard error for standard output)',
        )
    parser.add_argument(
        '--verbose',
        action='store_true',
        help='Log progress to standard error',
    )


def _configure_logging(verbose: bool) -> None:
    if verbose:
        logging.basicConfig(
            level=logging.INFO,
            format='%(levelname)s %(name)s: %(message)s',
            stream=sys.stderr,
        )


def stats_path(output: str) -> Optional[Path]:
    """Where ``--stats`` goes: ``<output>.stats.json``, or None for standard output."""
    if output == STDIO:
        return None
    path = Path(output)
    return path.with_name(f"{path.stem}.stats.json")


def _write_stats(stats: Dict[str, Any], output: str) -> None:
    path = stats_path(output)
    if path is None:
        print(json.dumps(stats, ensure_ascii=False), file=sys.stderr)
    else:
        write_json(stats, path)


def _complex_stats(c: SimplicialComplex) -> Dict[str, Any]:
    return {
        "faces": len(c),
        "dimension": c.dimension,
        "f_vector": f_vector(c),
        "euler": euler_characteristic(c),
    }


def _bipartite(r: Relation) -> Relation:
    """``r`` itself when X and Y are disjoint, else its tagged copy."""
    if r.is_bipartite:
        return r
    tagged, _ = disjointify(r)
    logger.warning("X and Y share labels; working on the tagged copy")
    return tagged


def _tagged(r: Relation, order_path: Optional[str]):
    order = load_order(order_path)
    if r.is_bipartite:
        return r, order
    tagged, phi = disjointify(r)
    logger.warning("X and Y share labels; working on the tagged copy")
    return tagged, tagged_order(order, phi)


# =============================================================================
# Subcommands
# =============================================================================

def dowker_command(parsed) -> int:
    r = load_relation(parsed.relation)
    sides = SIDES if parsed.side == 'both' else (parsed.side,)
    build = {SIDE_LEFT: dowker_left, SIDE_RIGHT: dowker_right}
    complexes = {side: build[side](r, parsed.strategy) for side in sides}
    if len(complexes) == 1:
        save_complex(complexes[parsed.side], parsed.output)
    else:
        write_json({side: complex_to_dict(c) for side, c in complexes.items()}, parsed.output)
    if parsed.stats:
        _write_stats({side: _complex_stats(c) for side, c in complexes.items()}, parsed.output)
    return EXIT_OK


def biclique_command(parsed) -> int:
    b = biclique_complex(_bipartite(load_relation(parsed.relation)))
    save_complex(b, parsed.output)
    if parsed.stats:
        _write_stats(_complex_stats(b), parsed.output)
    return EXIT_OK


def rectangle_command(parsed) -> int:
    e = rectangle_complex(load_relation(parsed.relation))
    save_complex(e, parsed.output)
    if parsed.stats:
        _write_stats(_complex_stats(e), parsed.output)
    return EXIT_OK


def matching_command(parsed) -> int:
    r, order = _tagged(load_relation(parsed.relation), parsed.order)
    mt = dowker_matching(r, parsed.side, order)
    save_matching(mt, parsed.output)
    if parsed.stats:
        _write_stats({
            "pairs": len(mt) // 2,
            "critical": len(mt.critical()),
            "monotone": mt.acyclic_certified,
        }, parsed.output)
    return EXIT_OK


def collapse_command(parsed) -> int:
    r, order = _tagged(load_relation(parsed.relation), parsed.order)
    b = biclique_complex(r)
    target = dowker_left(r) if parsed.side == SIDE_LEFT else dowker_right(r)
    cert = collapse_sequence(b, target, dowker_matching(r, parsed.side, order, b=b))
    save_certificate(cert, parsed.output)
    if parsed.stats:
        _write_stats({
            "steps": len(cert),
            "from": _complex_stats(cert.from_complex),
            "to": _complex_stats(cert.to_complex),
        }, parsed.output)
    return EXIT_OK


def verify_command(parsed) -> int:
    document = load_verifiable(parsed.certificate)
    if isinstance(document, CollapseCertificate):
        result = verify_certificate(document)
        what = f"certificate with {len(document)} steps"
    else:
        result = document.verify()
        what = f"zigzag with {len(document.arrows)} arrows"
    if result.ok:
        print(f"ok: {what}")
        return EXIT_OK
    print(f"FAIL: {what}: {result.describe()}")
    return EXIT_CHECK_FAILED


def verify_matching_command(parsed) -> int:
    mt = load_matching(parsed.matching)
    cycle = find_cycle(mt)
    labels = mt.complex.labels_of
    report = {
        "pairs": len(mt) // 2,
        "critical": len(mt.critical()),
        "acyclic": cycle is None,
        "cycle": None if cycle is None else [labels(face) for face in cycle],
    }
    write_json(report, parsed.output)
    return EXIT_OK if cycle is None else EXIT_CHECK_FAILED


def homology_command(parsed) -> int:
    c = load_complex(parsed.complex)
    t0 = time.perf_counter()
    profile = homology(c, parsed.max_columns)
    save_profile(profile, parsed.output)
    if parsed.stats:
        stats = _complex_stats(c)
        stats["seconds"] = round(time.perf_counter() - t0, 6)
        _write_stats(stats, parsed.output)
    return EXIT_OK


def _draw_seed() -> int:
    return int(np.random.SeedSequence().entropy % 2**64)


def random_command(parsed) -> int:
    seed = _draw_seed() if parsed.seed is None else parsed.seed
    r = random_relation(parsed.nx, parsed.ny, parsed.density, seed=seed)
    logger.info(f"random relation with seed {seed}")
    save_relation(r, parsed.output)
    if parsed.stats:
        _write_stats({"seed": seed, "pairs": len(r)}, parsed.output)
    return EXIT_OK


def pipeline_command(parsed) -> int:
    seed = parsed.seed
    if parsed.random is not None:
        nx, ny, density = parsed.random
        seed = _draw_seed() if seed is None else seed
        r = random_relation(int(nx), int(ny), float(density), seed=seed)
    elif parsed.relation is not None:
        r = load_relation(parsed.relation)
    else:
        print("Error: give a relation file or --random NX NY DENSITY", file=sys.stderr)
        return EXIT_USAGE

    options = PipelineOptions(
        order=load_order(parsed.order),
        strategy=parsed.strategy,
        rectangle=not parsed.no_rectangle,
        seed=seed,
        max_homology_columns=parsed.max_columns,
    )
    if parsed.replay_stride is not None:
        options.replay_stride = parsed.replay_stride
    report = run_pipeline(r, options)
    write_json(report.to_dict(include_timings=not parsed.no_timings), parsed.output)
    if parsed.stats:
        _write_stats({
            "checks": len(report.checks),
            "failed": [check.name for check in report.failed_checks()],
            "timings": {k: round(v, 6) for k, v in report.timings.items()},
        }, parsed.output)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def zigzag_command(parsed) -> int:
    if parsed.isomorphic is not None:
        d_path, d2_path, alpha_path = parsed.isomorphic
        z = isomorphic_zigzag(load_complex(d_path), load_complex(d2_path), load_vertex_map(alpha_path))
    elif parsed.relation is not None:
        r = load_relation(parsed.relation)
        order = load_order(parsed.order)
        if order is not None and not r.is_bipartite:
            order = tagged_order(order, disjointify(r)[1])
        z = barmak_zigzag(r, order)
    else:
        print("Error: give a relation file or --isomorphic D D2 MAP", file=sys.stderr)
        return EXIT_USAGE
    if parsed.expand_relabels:
        z = z.expand_relabels()
    save_zigzag(z, parsed.output)
    if parsed.stats:
        _write_stats({
            "nodes": [len(c) for c in z.nodes],
            "arrows": [arrow.kind for arrow in z.arrows],
            "steps": [len(cert) for cert in z.certificates()],
        }, parsed.output)
    return EXIT_OK


# =============================================================================
# Parsers
# =============================================================================

def _relation_parser(name: str, description: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=description, prog=f'dowkit {name}')
    parser.add_argument('relation', help="Relation JSON file ('-' for standard input)")
    return parser


def _side_argument(parser: argparse.ArgumentParser, choices=SIDES, default=SIDE_LEFT) -> None:
    parser.add_argument(
        '--side',
        choices=choices,
        default=default,
        help=f'Which side to work on (default: {default})',
    )


def _order_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--order',
        metavar='PATH',
        help='JSON list with a total order on the vertices (default: declaration order)',
    )


def _strategy_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--strategy',
        choices=(STRATEGY_INTERSECTION, STRATEGY_MAXIMAL),
        default=STRATEGY_INTERSECTION,
        help='Dowker face enumeration (default: intersection)',
    )


def _max_columns_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--max-columns',
        type=int,
        default=None,
        metavar='N',
        help='Refuse homology above N faces per dimension',
    )


def build_parser(name: str) -> argparse.ArgumentParser:
    """The argument parser of one subcommand."""
    if name == 'dowker':
        parser = _relation_parser(name, 'Dowker complexes of a relation')
        _side_argument(parser, choices=SIDES + ('both',))
        _strategy_argument(parser)
    elif name == 'biclique':
        parser = _relation_parser(name, 'Biclique complex of a relation')
    elif name == 'rectangle':
        parser = _relation_parser(name, 'Rectangle complex of a relation')
    elif name in ('matching', 'collapse'):
        description = {
            'matching': 'Dowker matching on the biclique complex',
            'collapse': 'Collapse certificate from the biclique complex to a Dowker complex',
        }[name]
        parser = _relation_parser(name, description)
        _side_argument(parser)
        _order_argument(parser)
    elif name == 'verify':
        parser = argparse.ArgumentParser(
            description='Replay a collapse certificate or a zigzag', prog='dowkit verify'
        )
        parser.add_argument('certificate', help='Certificate or zigzag JSON file')
        parser.add_argument('--verbose', action='store_true', help='Log progress to standard error')
        return parser
    elif name == 'verify-matching':
        parser = argparse.ArgumentParser(
            description='Validate a matching and look for a cycle', prog='dowkit verify-matching'
        )
        parser.add_argument('matching', help='Matching JSON file')
        _add_common(parser, stats=False)
        return parser
    elif name == 'homology':
        parser = argparse.ArgumentParser(
            description='Integral homology of a complex', prog='dowkit homology'
        )
        parser.add_argument('complex', help='Complex JSON file')
        _max_columns_argument(parser)
    elif name == 'random':
        parser = argparse.ArgumentParser(description='Random relation', prog='dowkit random')
        parser.add_argument('nx', type=int, help='Size of X')
        parser.add_argument('ny', type=int, help='Size of Y')
        parser.add_argument('density', type=float, help='Probability of each pair')
        parser.add_argument('--seed', type=int, default=None, help='Generator seed')
    elif name == 'pipeline':
        parser = argparse.ArgumentParser(
            description='Build every complex and run every check', prog='dowkit pipeline'
        )
        parser.add_argument('relation', nargs='?', help='Relation JSON file')
        parser.add_argument(
            '--random',
            nargs=3,
            metavar=('NX', 'NY', 'DENSITY'),
            help='Use a random relation instead of a file',
        )
        parser.add_argument('--seed', type=int, default=None, help='Seed (recorded in the report)')
        parser.add_argument(
            '--replay-stride',
            type=int,
            default=None,
            metavar='N',
            help='Check homology every N certificate steps (default: DOWKIT_REPLAY_STRIDE)',
        )
        parser.add_argument(
            '--no-rectangle',
            action='store_true',
            help='Skip the rectangle complex',
        )
        parser.add_argument(
            '--no-timings',
            action='store_true',
            help='Leave wall-clock timings out of the report',
        )
        _order_argument(parser)
        _strategy_argument(parser)
        _max_columns_argument(parser)
    elif name == 'zigzag':
        parser = argparse.ArgumentParser(
            description='Zigzag of collapses between two complexes', prog='dowkit zigzag'
        )
        parser.add_argument('relation', nargs='?', help='Relation JSON file (C_X to C_Y)')
        parser.add_argument(
            '--isomorphic',
            nargs=3,
            metavar=('D', 'D2', 'MAP'),
            help='Zigzag between two isomorphic complexes along a vertex map',
        )
        parser.add_argument(
            '--expand-relabels',
            action='store_true',
            help='Replace relabel arrows by collapses',
        )
        _order_argument(parser)
    else:
        raise KeyError(name)
    _add_common(parser)
    return parser


COMMANDS: Dict[str, Callable[[Any], int]] = {
    'dowker': dowker_command,
    'biclique': biclique_command,
    'rectangle': rectangle_command,
    'matching': matching_command,
    'collapse': collapse_command,
    'verify': verify_command,
    'verify-matching': verify_matching_command,
    'homology': homology_command,
    'pipeline': pipeline_command,
    'random': random_command,
    'zigzag': zigzag_command,
}


def run_command(name: str, args: list) -> int:
    """Parse ``args`` for subcommand ``name`` and run it, mapping errors to exit codes."""
    try:
        parsed = build_parser(name).parse_args(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    _configure_logging(parsed.verbose)
    try:
        return COMMANDS[name](parsed)
    except ParseError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (CyclicMatchingError, MatchingMismatchError) as e:
        print(f"Error ({name}): {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (PreconditionError, ConstructionError, DomainError, ComplexTooLargeError) as e:
        # rejected arguments or inputs, not a failed check
        print(f"Error ({name}): {e}", file=sys.stderr)
        return EXIT_USAGE
    except DowkitError as e:
        print(f"Error ({name}): {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except Exception as e:
        print(f"Error ({name}): {e}", file=sys.stderr)
        import traceback
        traceback.print_exc()
        return EXIT_CHECK_FAILED


def main(args: Optional[list] = None) -> int:
    """Main CLI entry point."""
    args_list = args if args is not None else sys.argv[1:]

    if args_list and args_list[0] in COMMANDS:
        return run_command(args_list[0], args_list[1:])

    parser = argparse.ArgumentParser(
        description='Dowker complexes, biclique collapses and their certificates',
        prog='dowkit',
        epilog='Subcommands:\n  ' + '\n  '.join(COMMANDS) + "\n\nRun 'dowkit <subcommand> --help' for details.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        '-v', '--version',
        action='store_true',
        help='Show version information',
    )
    try:
        parsed = parser.parse_args(args_list)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if parsed.version:
        print(f'dowkit {__version__}')
        return EXIT_OK

    parser.print_help(sys.stderr)
    return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
