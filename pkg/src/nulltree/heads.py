"""Head-child selection driven by per-language priority tables.

Tables live in plain text, one rule per line::

    CATEGORY direction PRIO1 PRIO2 ...

``direction`` is ``left`` or ``right``.  Selection is priority-first: the
first priority category that matches any child wins, scanning children in
the rule's direction; only when no priority matches does the directionmost
child become the head.  Categories are matched on the bare category, so
``NP-SBJ`` matches a priority entry ``NP``.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .tree import Tree

__all__ = ["HeadRule", "HeadRuleTable", "load_head_rules", "head_child", "head_terminal"]


@dataclass(frozen=True)
class HeadRule:
    direction: str  # "left" or "right"
    priorities: tuple[str, ...]


@dataclass(frozen=True)
class HeadRuleTable:
    rules: dict  # category -> HeadRule
    default_direction: str = "left"

    @classmethod
    def from_text(cls, text: str) -> "HeadRuleTable":
        rules: dict[str, HeadRule] = {}
        default_direction = "left"
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if fields[0] == "DEFAULT":
                if len(fields) != 2 or fields[1] not in ("left", "right"):
                    raise ValueError(f"line {lineno}: bad DEFAULT rule")
                default_direction = fields[1]
                continue
            if len(fields) < 2 or fields[1] not in ("left", "right"):
                raise ValueError(
                    f"line {lineno}: expected 'CATEGORY left|right PRIO...'"
                )
            rules[fields[0]] = HeadRule(fields[1], tuple(fields[2:]))
        return cls(rules, default_direction)

    @classmethod
    def load(cls, path) -> "HeadRuleTable":
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())


def load_head_rules(language: str) -> HeadRuleTable:
    """Load the bundled head table for a language code (en, zh, ko)."""
    name = f"heads_{language}.txt"
    text = resources.files("nulltree.data").joinpath(name).read_text("utf-8")
    return HeadRuleTable.from_text(text)


def head_child(node: Tree, table: HeadRuleTable) -> int:
    """Index of the head child of an internal node.

    Preterminals have no head child; passing one raises ValueError.
    """
    from .tree import is_preterminal

    if is_preterminal(node) or any(isinstance(c, str) for c in node.children):
        raise ValueError("preterminals have no head child")
    cats = [c.category for c in node.children]  # type: ignore[union-attr]
    rule = table.rules.get(node.category)
    if rule is None:
        direction = table.default_direction
        priorities: tuple[str, ...] = ()
    else:
        direction, priorities = rule.direction, rule.priorities
    indices = range(len(cats)) if direction == "left" else range(len(cats) - 1, -1, -1)
    for prio in priorities:
        for i in indices:
            if cats[i] == prio:
                return i
    return 0 if direction == "left" else len(cats) - 1


def head_terminal(node: Tree, table: HeadRuleTable) -> tuple[str, str]:
    """Descend head children down to a preterminal; return (category, token)."""
    from .tree import is_preterminal

    cur = node
    while not is_preterminal(cur):
        child = cur.children[head_child(cur, table)]
        assert isinstance(child, Tree)
        cur = child
    return cur.category, cur.children[0]  # type: ignore[return-value]
