"""Command-line front end.

Positional arguments always come in the order (e, charge(s), payload).
Multipartitions whose first component is empty start with ``-`` (``"-|1"``);
they are recognized automatically, so no ``--`` separator is needed.

Exit codes: 0 success, 1 domain error, 2 parse/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from .charges import is_flotw, to_fundamental
from .crystal import crystal_graph, is_uglov, uglov_set
from .errors import CrystalError, ParseError
from .iso import extract_path, psi
from .maps import hu_map, iota, is_divided_bipartition, split_count
from .multipartition import Multicharge, Multipartition

_FLAGS_WITH_VALUE = {"--format"}
_FLAGS = {"--quiet", "-q", "-h", "--help"} | _FLAGS_WITH_VALUE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _int(name: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{name}: expected an integer, got {text!r}") from None


def _charge(text: str, e: str) -> Multicharge:
    try:
        return Multicharge.parse(text, _int("e", e))
    except ParseError as exc:
        raise ParseError(f"charge {text!r}: {exc}") from None


def _mp(text: str) -> Multipartition:
    try:
        return Multipartition.parse(text)
    except ParseError as exc:
        raise ParseError(f"multipartition {text!r}: {exc}") from None


def _fmt_path(path: Sequence[int]) -> str:
    return ",".join(map(str, path)) if path else "-"


def _cmd_crystal(a):
    graph = crystal_graph(_charge(a.charge, a.e), _int("n_max", a.n_max))
    fmt = a.format or "json"
    if fmt == "dot":
        return graph.to_dot()
    if fmt == "json":
        return graph.to_json()
    raise ParseError(f"--format {fmt} is not available for graphs (use json or dot)")


def _cmd_uglov(a):
    return [str(v) for v in uglov_set(_charge(a.charge, a.e), _int("n", a.n))]


def _cmd_is_uglov(a):
    return is_uglov(_mp(a.mp), _charge(a.charge, a.e))


def _cmd_flotw(a):
    return is_flotw(_mp(a.mp), _charge(a.charge, a.e))


def _cmd_psi(a):
    return str(psi(_mp(a.mp), _charge(a.source, a.e), _charge(a.target, a.e)))


def _cmd_hu(a):
    return str(hu_map(_mp(a.mp), _charge(a.charge, a.e), check=True))


def _cmd_iota(a):
    return str(iota(_mp(a.mp), _int("k", a.k), _charge(a.charge, a.e), check=True))


def _cmd_split(a):
    return split_count(_mp(a.mp), _charge(a.charge, a.e))


def _cmd_divided(a):
    return is_divided_bipartition(_mp(a.mp), _int("N", a.N), _int("e", a.e))


def _cmd_path(a):
    return list(extract_path(_mp(a.mp), _charge(a.charge, a.e)))


def _cmd_fundamental(a):
    target, word = to_fundamental(_charge(a.charge, a.e))
    return {"charge": str(target), "word": list(word.tokens)}


COMMANDS: dict[str, tuple[Callable, list[str], str]] = {
    "crystal": (_cmd_crystal, ["e", "charge", "n_max"], "crystal graph up to rank n_max (json or dot)"),
    "uglov": (_cmd_uglov, ["e", "charge", "n"], "Uglov multipartitions of rank n"),
    "is-uglov": (_cmd_is_uglov, ["e", "charge", "mp"], "membership in the component of the empty multipartition"),
    "flotw": (_cmd_flotw, ["e", "charge", "mp"], "FLOTW test (needs 0 < s_j - s_i < e)"),
    "psi": (_cmd_psi, ["e", "source", "target", "mp"], "crystal isomorphism between two charges"),
    "hu": (_cmd_hu, ["e", "charge", "mp"], "Hu's map"),
    "iota": (_cmd_iota, ["e", "charge", "k", "mp"], "the embedding iota_k"),
    "split": (_cmd_split, ["e", "charge", "mp"], "number of simple summands after restriction"),
    "divided": (_cmd_divided, ["e", "N", "mp"], "divided bipartition test for (0, e/2 + Ne)"),
    "path": (_cmd_path, ["e", "charge", "mp"], "residue path building mp from the empty multipartition"),
    "fundamental": (_cmd_fundamental, ["e", "charge"], "orbit representative in the fundamental domain"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fockcrystal", description="Affine type A crystals on Fock spaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (func, args, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=["text", "json", "dot"], default=None)
        p.add_argument("--quiet", "-q", action="store_true", help="no diagnostics on stderr")
        for arg in args:
            p.add_argument(arg)
        p.set_defaults(func=func)
    return parser


def _normalize(argv: list[str]) -> list[str]:
    """Move flags ahead of a ``--`` so payloads like ``-|1`` or ``-3,0`` stay positional."""
    if not argv or argv[0] not in COMMANDS or "--" in argv:
        return argv
    flags, rest = [], []
    it = iter(argv[1:])
    for tok in it:
        if tok in _FLAGS or tok.split("=", 1)[0] in _FLAGS_WITH_VALUE:
            flags.append(tok)
            if tok in _FLAGS_WITH_VALUE:
                flags.append(next(it, ""))
        else:
            rest.append(tok)
    return [argv[0]] + flags + ["--"] + rest


def render(result, fmt: str | None) -> str:
    if fmt == "json":
        return json.dumps({"result": result}) + "\n"
    if isinstance(result, bool):
        return ("true" if result else "false") + "\n"
    if isinstance(result, list):
        return "".join(f"{x}\n" for x in result)
    if isinstance(result, dict):
        return "".join(f"{k}: {' '.join(v) if isinstance(v, list) else v}\n" for k, v in result.items())
    return f"{result}\n"


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    quiet = "--quiet" in argv or "-q" in argv
    try:
        args = build_parser().parse_args(_normalize(argv))
        if args.format == "dot" and args.command != "crystal":
            raise ParseError("--format dot is only available for the crystal subcommand")
        result = args.func(args)
        if args.command == "path" and args.format != "json":
            out = _fmt_path(result) + "\n"
        elif args.command == "crystal":
            out = result
        else:
            out = render(result, args.format)
    except ParseError as exc:
        if not quiet:
            print(f"fockcrystal: parse error: {exc}", file=sys.stderr)
        return 2
    except (CrystalError, ValueError) as exc:
        if not quiet:
            print(f"fockcrystal: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
