"""Renderers for derivation trees, answers and rule listings.

Three tree serialisations are provided: indented text (states as
``<goal, sigma>`` with SS edges labelled ``R<id>``, failure edges ``R0`` and
interpretive edges ``is``), a DOT digraph with the same labels, and a
structured JSON document with fields goal/sigma/step/rule/degree/children.
"""

from __future__ import annotations

import json

from .engine import FS, IS, SS, DerivationTree, FuzzyComputedAnswer, TreeNode
from .terms import Rule, format_value


def edge_name(label) -> str:
    if isinstance(label, SS):
        return f"R{label.rule_id}"
    if isinstance(label, FS):
        return "R0"
    if isinstance(label, IS):
        return "is"
    raise TypeError(f"not a step label: {label!r}")


def state_text(node: TreeNode) -> str:
    return f"⟨{node.goal}, {node.sigma}⟩"


def answer_line(ans: FuzzyComputedAnswer) -> str:
    """One machine-readable answer line: value, a tab, then the bindings."""
    return f"{format_value(ans.value)}\t{ans.answer}"


def render_answers(answers, hide_bottom_value=None) -> str:
    """Answer lines joined by newlines; optionally dropping a bottom value."""
    kept = [
        a for a in answers if hide_bottom_value is None or a.value != hide_bottom_value
    ]
    return "\n".join(answer_line(a) for a in kept)


def render_tree_text(tree: DerivationTree) -> str:
    lines: list = []

    def walk(node: TreeNode, depth: int):
        prefix = "  " * depth
        head = f"{prefix}{edge_name(node.label)} " if node.label is not None else prefix
        line = head + state_text(node)
        if node.error is not None:
            line += f"  [error: {node.error}]"
        lines.append(line)
        for c in node.children:
            walk(c, depth + 1)

    walk(tree.root, 0)
    return "\n".join(lines)


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def render_tree_dot(tree: DerivationTree) -> str:
    lines = ["digraph derivation {", "  node [shape=oval];"]
    ids: dict = {}

    def name(node: TreeNode) -> str:
        if id(node) not in ids:
            ids[id(node)] = f"n{len(ids)}"
        return ids[id(node)]

    def walk(node: TreeNode):
        label = _dot_escape(state_text(node))
        if node.error is not None:
            label += f"\\nerror: {_dot_escape(node.error)}"
        lines.append(f'  {name(node)} [label="{label}"];')
        for c in node.children:
            walk(c)
            lines.append(
                f'  {name(node)} -> {name(c)} [label="{_dot_escape(edge_name(c.label))}"];'
            )

    walk(tree.root)
    lines.append("}")
    return "\n".join(lines)


def tree_document(tree: DerivationTree) -> dict:
    """Structured form of a tree: {goal, sigma, step, rule, degree, children}."""

    def node_doc(node: TreeNode) -> dict:
        step = None
        rule = None
        degree = None
        if isinstance(node.label, SS):
            step = "ss"
            rule = node.label.rule_id
            degree = format_value(node.label.degree)
        elif isinstance(node.label, FS):
            step = "fs"
            rule = 0
        elif isinstance(node.label, IS):
            step = "is"
        doc = {
            "goal": str(node.goal),
            "sigma": str(node.sigma),
            "step": step,
            "rule": rule,
            "degree": degree,
            "children": [node_doc(c) for c in node.children],
        }
        if node.error is not None:
            doc["error"] = node.error
        return doc

    return node_doc(tree.root)


def render_tree_structured(tree: DerivationTree) -> str:
    return json.dumps(tree_document(tree), indent=2, ensure_ascii=False)


def rules_document(rules) -> list:
    """Structured form of a parsed rule list."""
    return [{"id": r.id, "head": str(r.head), "body": str(r.body)} for r in rules]


def render_rules_structured(rules) -> str:
    return json.dumps(rules_document(rules), indent=2, ensure_ascii=False)


def render_rule_listing(rules) -> str:
    return "\n".join(f"R{r.id}: {r}" for r in rules)
