"""Interactive session state: one program, one lattice, one relation.

Several program and similarity files can be loaded; they are merged into a
single rule list (ids renumbered in load order) and a single equation set.
The relation is re-closed whenever the equations, the t-norm or the lattice
change.  Mutating commands are transactional: on error the session is left
unchanged.
"""

from __future__ import annotations

from dataclasses import replace
from pathlib import Path
from typing import Optional

from .engine import DEFAULT_MAX_DEPTH, Program, build_tree, fcas
from .errors import FuzzylpError, SessionError
from .lattice import Lattice, builtin_unit_interval, parse_lattice
from .parser import parse_goal, parse_program
from .render import (
    render_answers,
    render_rule_listing,
    render_tree_text,
)
from .similarity import close, parse_sim
from .terms import Expression, variables

COMMANDS = (
    "load", "list", "clean", "lat", "show", "sim",
    "tnorm", "intro", "tree", "leaves", "depth", "quit",
)


class Quit(Exception):
    """Raised by the quit command; callers terminate their loop."""


class Session:
    def __init__(self):
        self.reset()

    def reset(self):
        self.rules: list = []
        self.lattice: Lattice = builtin_unit_interval()
        self.sim_sources: list = []  # (source name, raw text)
        self.tnorm: str = "godel"
        self.relation = close([], self.lattice, self.tnorm)
        self.max_depth: int = DEFAULT_MAX_DEPTH
        self.goal: Optional[Expression] = None
        self.goal_text: Optional[str] = None
        self.history: list = []

    # -- state --------------------------------------------------------------

    def program(self) -> Program:
        return Program(tuple(self.rules), self.lattice, self.relation)

    def load_program_text(self, text: str, source: Optional[str] = None):
        parsed = parse_program(text, self.lattice, source=source)
        base = len(self.rules)
        self.rules.extend(replace(r, id=base + i) for i, r in enumerate(parsed, 1))

    def _equations(self, lattice: Lattice, extra: Optional[tuple] = None):
        """Re-parse all loaded similarity texts; returns (equations, last directive)."""
        sources = list(self.sim_sources)
        if extra is not None:
            sources.append(extra)
        eqs = []
        directive = None
        for src, text in sources:
            parsed, tn = parse_sim(text, lattice, source=src)
            eqs.extend(parsed)
            if tn is not None:
                directive = tn
        return eqs, directive

    def load_sim_text(self, text: str, source: Optional[str] = None):
        eqs, directive = self._equations(self.lattice, extra=(source, text))
        tnorm = directive or self.tnorm
        relation = close(eqs, self.lattice, tnorm)
        self.sim_sources.append((source, text))
        self.tnorm = tnorm
        self.relation = relation

    def set_lattice_text(self, text: str, source: Optional[str] = None):
        lattice = parse_lattice(text)
        eqs, directive = self._equations(lattice)
        tnorm = directive or self.tnorm
        relation = close(eqs, lattice, tnorm)
        self.lattice = lattice
        self.tnorm = tnorm
        self.relation = relation

    def set_tnorm(self, label: str):
        self.relation = close(self._equations(self.lattice)[0], self.lattice, label)
        self.tnorm = label

    def set_depth(self, depth: int):
        if depth < 0:
            raise SessionError("depth must be >= 0")
        self.max_depth = depth

    def intro(self, text: str):
        self.goal = parse_goal(text, self.lattice)
        self.goal_text = text
        self.history.append(text)

    def current_tree(self):
        if self.goal is None:
            raise SessionError("no goal introduced yet (use: intro <goal>)")
        return build_tree(self.program(), self.goal, self.max_depth)

    def answers(self):
        return fcas(self.current_tree())

    # -- command interpreter --------------------------------------------------

    def _read(self, path: str) -> str:
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise SessionError(f"cannot read {path}: {e.strerror or e}")

    def execute(self, line: str) -> str:
        """Run one command line; returns the text to display (may be empty)."""
        stripped = line.strip()
        if not stripped:
            return ""
        parts = stripped.split(maxsplit=1)
        cmd, arg = parts[0], parts[1].strip() if len(parts) > 1 else None

        def need_arg(what: str) -> str:
            if arg is None:
                raise SessionError(f"{cmd} needs {what}")
            return arg

        if cmd == "load":
            path = need_arg("a program file")
            self.load_program_text(self._read(path), source=path)
            return ""
        if cmd == "list":
            return render_rule_listing(self.rules)
        if cmd == "clean":
            self.reset()
            return ""
        if cmd == "lat":
            path = need_arg("a lattice file")
            self.set_lattice_text(self._read(path), source=path)
            return ""
        if cmd == "show":
            return self.lattice.describe()
        if cmd == "sim":
            path = need_arg("a similarity file")
            self.load_sim_text(self._read(path), source=path)
            return ""
        if cmd == "tnorm":
            self.set_tnorm(need_arg("a conjunction label"))
            return ""
        if cmd == "intro":
            self.intro(need_arg("a goal"))
            return ""
        if cmd == "tree":
            return render_tree_text(self.current_tree())
        if cmd == "leaves":
            return render_answers(self.answers())
        if cmd == "depth":
            raw = need_arg("a bound")
            try:
                value = int(raw)
            except ValueError:
                raise SessionError(f"depth needs an integer, got {raw!r}")
            self.set_depth(value)
            return ""
        if cmd == "quit":
            raise Quit()
        raise SessionError(f"unknown command: {cmd}")
