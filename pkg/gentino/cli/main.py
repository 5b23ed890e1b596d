"""
Command line entry point. Results go to stdout as JSON (or ``key: value`` lines with ``--format plain``);
diagnostics go to stderr and, with ``--log-path``, to a log file.

Exit codes: 0 on success, 1 on malformed input, 2 when factoring runs out of trials, 3 when the input
curve is not of genus 2.
"""
import sys
import json
import random
import logging
import argparse

import gmpy2

from gentino.algebra import QQ, PrimeField
from gentino.autloci import DihedralInvariants, LOCUS_KINDS, classify, sample_locus
from gentino.hecm import DEFAULT_B1, DEFAULT_MAX_TRIALS, DEFAULT_SEED, Exhausted, HecmParams, factor
from gentino.invariants import BinarySextic, ModuliPoint, NotGenusTwo, absolute_invariants, igusa, moduli_point_of
from gentino.jacobian import random_divisor
from gentino.kummer import KummerSurface, ThetaConstants, jacobian_to_kummer, ladder
from gentino.subcovers import deg3_locus_test, isogeny_test_deg2, isomorphic_subcovers_deg2, j_pair_deg2
from gentino.utils.io_utils import load_json_argument
from gentino.utils.log_utils import get_logger

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_EXHAUSTED = 2
EXIT_NOT_GENUS_TWO = 3

RATIONAL_MODEL_NOTE = ("a rational model over the field of moduli needs a conic and cubic construction over that "
                       "field, which gentino does not implement; see readme.md")


class UsageError(ValueError):
    """Malformed command line arguments."""
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """Raises UsageError on bad usage instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(message)


def _input_arg(parser, help_text):
    parser.add_argument('--input', '-i', required=True, help=f"{help_text}; inline JSON, @file or - for stdin")


def build_parser():
    parser = _ArgumentParser(prog='gentino', description="Genus 2 curves: invariants, automorphism groups, "
                                                         "elliptic subcovers, Kummer surfaces and factoring.")
    parser.add_argument('--format', choices=('json', 'plain'), default='json', help="output format")
    parser.add_argument('--log-path', default=None, help="also write diagnostics to this file")
    sub = parser.add_subparsers(dest='command', parser_class=_ArgumentParser)
    sub.required = True

    p = sub.add_parser('invariants', help="Igusa invariants and the moduli point of a sextic")
    _input_arg(p, "sextic coefficients, lowest degree first")

    p = sub.add_parser('autgroup', help="automorphism group of y^2 = f(x)")
    _input_arg(p, "sextic coefficients, lowest degree first")

    p = sub.add_parser('split3', help="whether the Jacobian is (3,3)-split")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--input', '-i', help="sextic coefficients, lowest degree first; inline JSON, @file or - "
                                              "for stdin")
    source.add_argument('--moduli', '-m', help='moduli point {"case": ..., "values": [...]} as printed by '
                                               'invariants; inline JSON, @file or - for stdin')

    p = sub.add_parser('isocheck', help="whether the degree 2 subcovers of a (u, v) point are n-isogenous")
    _input_arg(p, 'object {"u": ..., "v": ...}')
    p.add_argument('--degree', '-n', type=int, choices=(2, 3), default=2, help="isogeny degree")

    p = sub.add_parser('kummer', help="Kummer surface from theta constants, with ladder multiples")
    p.add_argument('--input', '-i', default=None,
                   help='object {"p": prime, "theta": [a, b, c, d], "point": [x, y, z, t]}; '
                        'inline JSON, @file or - for stdin')
    p.add_argument('-k', type=int, default=1, help="multiplier for the ladder")
    p.add_argument('--seed', type=int, default=DEFAULT_SEED, help="seed of the random divisor when no point is given")
    p.add_argument('--sample-locus', choices=LOCUS_KINDS, default=None,
                   help="emit sampled (u, v, i1, i2, i3) rows of a locus instead")
    p.add_argument('--count', type=int, default=100, help="number of sampled rows")
    p.add_argument('--output', default=None, help="CSV file the sampled rows are appended to")

    p = sub.add_parser('factor', help="find a proper factor with genus 2 curves with split Jacobians")
    p.add_argument('n', help="the integer to factor")
    p.add_argument('--b1', type=int, default=DEFAULT_B1, help="stage 1 bound")
    p.add_argument('--b2', type=int, default=None, help="stage 2 bound, 100 * B1 by default")
    p.add_argument('--trials', type=int, default=DEFAULT_MAX_TRIALS, help="number of curves")
    p.add_argument('--seed', type=int, default=DEFAULT_SEED, help="random seed")
    p.add_argument('--threads', type=int, default=1, help="concurrent trials")
    p.add_argument('--record', default=None, help="CSV journal the result is appended to")
    p.add_argument('--no-timing', action='store_true', help="leave elapsed_ms out so output is reproducible")

    p = sub.add_parser('rational-model', help="rational model over the field of moduli (unsupported)")
    _input_arg(p, "sextic coefficients, lowest degree first")
    return parser


def _load_sextic(raw) -> BinarySextic:
    obj = load_json_argument(raw)
    if isinstance(obj, dict):
        obj = obj["coeffs"]
    if not isinstance(obj, list):
        raise ValueError(f"expected a list of coefficients, got {type(obj).__name__}")
    return BinarySextic.from_json(obj, QQ)


def _load_object(raw) -> dict:
    obj = load_json_argument(raw)
    if not isinstance(obj, dict):
        raise ValueError(f"expected a JSON object, got {type(obj).__name__}")
    return obj


def cmd_invariants(args):
    f = _load_sextic(args.input)
    J = igusa(f)
    if not J.is_genus_two():
        raise NotGenusTwo(f"{f} has a repeated root")
    result = {"J": J.to_json(), "moduli": moduli_point_of(J).to_json()}
    if not QQ.is_zero(J.J2):
        result["i"] = [QQ.to_json(x) for x in absolute_invariants(J)]
    return result


def cmd_autgroup(args):
    return classify(_load_sextic(args.input)).to_json()


def cmd_split3(args):
    if args.moduli is not None:
        point = ModuliPoint.from_json(_load_object(args.moduli), QQ)
    else:
        f = _load_sextic(args.input)
        J = igusa(f)
        if not J.is_genus_two():
            raise NotGenusTwo(f"{f} has a repeated root")
        point = moduli_point_of(J)
    return {"split_3_3": deg3_locus_test(point)}


def cmd_isocheck(args):
    obj = _load_object(args.input)
    uv = DihedralInvariants(QQ.from_json(obj["u"]), QQ.from_json(obj["v"]), QQ)
    total, product = j_pair_deg2(uv)
    return {"u": QQ.to_json(uv.u), "v": QQ.to_json(uv.v), "degree": args.degree,
            "j_sum": QQ.to_json(total), "j_product": QQ.to_json(product),
            "isomorphic": isomorphic_subcovers_deg2(uv), "isogenous": isogeny_test_deg2(uv, args.degree)}


def cmd_kummer(args):
    if args.sample_locus is not None:
        rows = sample_locus(args.sample_locus, args.count, seed=args.seed, file_path=args.output)
        return {"locus": args.sample_locus, "rows": rows}
    if args.input is None:
        raise UsageError("kummer needs --input unless --sample-locus is given")
    obj = _load_object(args.input)
    ring = PrimeField(int(obj["p"])) if "p" in obj else QQ
    if "theta" in obj:
        theta = ThetaConstants(*(ring.from_json(c) for c in obj["theta"]), ring=ring)
    else:
        theta = ThetaConstants.from_squares([ring.from_json(c) for c in obj["theta_squares"]], ring)
    surface = KummerSurface(theta)
    result = {"surface": surface.to_json()}
    if "point" in obj:
        point = surface.point(*(ring.from_json(c) for c in obj["point"]))
    else:
        if not ring.is_field or ring.characteristic == 0:
            raise UsageError("a random divisor needs a prime field; give \"p\" or a \"point\"")
        lam, mu, nu = surface.rosenhain()
        divisor = random_divisor(surface.curve(), random.Random(args.seed))
        point = jacobian_to_kummer(divisor, surface)
        result["rosenhain"] = [ring.to_json(x) for x in (lam, mu, nu)]
        result["divisor"] = divisor.to_json()
    result.update({"point": point.to_json(), "on_surface": surface.contains(point), "k": args.k,
                   "multiple": ladder(args.k, point, surface).to_json()})
    return result


def cmd_factor(args):
    n = gmpy2.mpz(args.n)
    params = HecmParams(b1=args.b1, b2=args.b2, max_trials=args.trials, seed=args.seed, threads=args.threads)
    result = factor(n, params, log_path=args.log_path, record_path=args.record).to_json()
    if args.no_timing:
        result.pop("elapsed_ms")
    return result


def cmd_rational_model(args):
    f = _load_sextic(args.input)
    if not f.is_squarefree():
        raise NotGenusTwo(f"{f} has a repeated root")
    return {"status": "unsupported", "curve": f.to_json(), "reason": RATIONAL_MODEL_NOTE}


COMMANDS = {
    'invariants': cmd_invariants,
    'autgroup': cmd_autgroup,
    'split3': cmd_split3,
    'isocheck': cmd_isocheck,
    'kummer': cmd_kummer,
    'factor': cmd_factor,
    'rational-model': cmd_rational_model,
}


def render(result, fmt='json'):
    """
    :param result: (dict) a JSON-ready result
    :param fmt: (str) json or plain
    :return: (str)
    """
    if fmt == 'json':
        return json.dumps(result, sort_keys=True)
    lines = []
    for key in sorted(result):
        value = result[key]
        lines.append(f"{key}: {value if isinstance(value, str) else json.dumps(value, sort_keys=True)}")
    return "\n".join(lines)


def run(argv=None, stdout=None):
    """
    Parse ``argv``, dispatch, print the result.

    :param argv: (list<str> | None) arguments without the program name; sys.argv[1:] when None
    :param stdout: (file | None) where results are printed; sys.stdout when None
    :return: (int) the exit code
    """
    stdout = stdout if stdout is not None else sys.stdout
    fmt = 'json'
    logger = get_logger('gentino.cli', level=logging.WARNING)
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        if args.log_path is not None:
            logger = get_logger('gentino.cli', log_path=args.log_path, level=logging.WARNING)
        result, code = COMMANDS[args.command](args), EXIT_OK
    except NotGenusTwo as e:
        result, code = {"error": "not_genus_two", "message": str(e)}, EXIT_NOT_GENUS_TWO
    except Exhausted as e:
        result, code = {"error": "exhausted", "n": e.n, "trials": e.trials, "message": str(e)}, EXIT_EXHAUSTED
    except (ValueError, KeyError, TypeError, ArithmeticError, OSError) as e:
        result, code = {"error": "malformed_input", "message": str(e)}, EXIT_MALFORMED
    if code != EXIT_OK:
        logger.error(result["message"])
    print(render(result, fmt), file=stdout)
    return code


def main():
    sys.exit(run())


__all__ = ['EXIT_OK', 'EXIT_MALFORMED', 'EXIT_EXHAUSTED', 'EXIT_NOT_GENUS_TWO', 'UsageError', 'build_parser',
           'render', 'run', 'main']
