"""Command line front end: batch evaluation, script execution and a REPL.

Batch mode loads the given files, evaluates one goal and prints the fuzzy
computed answers one per line (value, tab, bindings); ``--format`` also
prints the derivation tree as text, DOT or structured JSON.  With no goal
and no script an interactive prompt accepting the session commands starts.

Exit codes: 0 success, 3 program/goal error, 4 lattice error, 5 similarity
error, 6 runtime connective error, 1 anything else.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .engine import fcas, tree_errors
from .errors import EvalError, FuzzylpError
from .render import (
    answer_line,
    render_rules_structured,
    render_tree_dot,
    render_tree_structured,
    render_tree_text,
)
from .session import Quit, Session

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PROGRAM = 3
EXIT_LATTICE = 4
EXIT_SIM = 5
EXIT_RUNTIME = 6

_STAGE_CODES = {
    "load": EXIT_PROGRAM,
    "intro": EXIT_PROGRAM,
    "lat": EXIT_LATTICE,
    "sim": EXIT_SIM,
    "tnorm": EXIT_SIM,
}


def build_arg_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fuzzylp",
        description="Fuzzy logic program interpreter with similarity-based unification",
    )
    p.add_argument(
        "--program", action="append", default=[], metavar="FILE",
        help="program file to load (repeatable; files are merged in order)",
    )
    p.add_argument("--lattice", metavar="FILE", help="lattice definition file")
    p.add_argument("--sim", metavar="FILE", help="similarity equations file")
    p.add_argument("--goal", metavar="TEXT", help="goal to evaluate")
    p.add_argument("--depth", type=int, metavar="N", help="maximum tree depth")
    p.add_argument(
        "--format", choices=("text", "dot", "structured"),
        help="also print the derivation tree in this form"
        " (with no goal, 'structured' dumps the parsed rules)",
    )
    p.add_argument(
        "--hide-bottom", action="store_true",
        help="hide answers whose value is the lattice bottom",
    )
    p.add_argument("--script", metavar="FILE", help="run session commands from a file")
    return p


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def run_script(session: Session, path: str) -> int:
    """Execute one command per line, echoing a transcript to stdout."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as e:
        return _fail(f"cannot read {path}: {e.strerror or e}", EXIT_ERROR)
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        print(f"> {line}")
        try:
            out = session.execute(line)
        except Quit:
            return EXIT_OK
        except EvalError as e:
            return _fail(f"{path}: {e}", EXIT_RUNTIME)
        except FuzzylpError as e:
            code = _STAGE_CODES.get(line.split(maxsplit=1)[0], EXIT_ERROR)
            return _fail(f"{path}: {e}", code)
        if out:
            print(out)
    return EXIT_OK


def repl(session: Session) -> int:
    while True:
        try:
            line = input("> ")
        except EOFError:
            print()
            return EXIT_OK
        if not line.strip():
            continue
        try:
            out = session.execute(line)
            if out:
                print(out)
        except Quit:
            return EXIT_OK
        except FuzzylpError as e:
            print(f"error: {e}")


def main(argv: Optional[list] = None) -> int:
    args = build_arg_parser().parse_args(argv)
    session = Session()

    try:
        if args.lattice:
            session.execute(f"lat {args.lattice}")
    except FuzzylpError as e:
        return _fail(str(e), EXIT_LATTICE)
    try:
        for path in args.program:
            session.execute(f"load {path}")
    except FuzzylpError as e:
        return _fail(str(e), EXIT_PROGRAM)
    try:
        if args.sim:
            session.execute(f"sim {args.sim}")
    except FuzzylpError as e:
        return _fail(str(e), EXIT_SIM)
    if args.depth is not None:
        try:
            session.set_depth(args.depth)
        except FuzzylpError as e:
            return _fail(str(e), EXIT_ERROR)

    if args.script:
        return run_script(session, args.script)

    if args.goal is None:
        if args.format == "structured":
            print(render_rules_structured(session.rules))
            return EXIT_OK
        return repl(session)

    try:
        session.intro(args.goal)
        tree = session.current_tree()
    except EvalError as e:
        return _fail(str(e), EXIT_RUNTIME)
    except FuzzylpError as e:
        return _fail(str(e), EXIT_PROGRAM)

    bottom = session.lattice.bot
    for ans in fcas(tree):
        if args.hide_bottom and ans.value == bottom:
            continue
        print(answer_line(ans))
    if args.format == "text":
        print(render_tree_text(tree))
    elif args.format == "dot":
        print(render_tree_dot(tree))
    elif args.format == "structured":
        print(render_tree_structured(tree))

    errors = tree_errors(tree)
    if errors:
        return _fail(f"runtime connective failure: {errors[0]}", EXIT_RUNTIME)
    return EXIT_OK
