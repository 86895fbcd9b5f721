"""Parser for the textual model specs accepted on the command line.

Grammar::

    spec  := atom | ("dp" | "mag") ":" "(" spec ")" "x" "(" spec ")"
    atom  := "sym:" n ["," k] | "sdp:" r "," s | "holo:" n | "frob:" q
           | "cyc:" n | "perm:" path

``sym:n`` without ``k`` means the stabilizer of one point.  ``perm:`` reads
``{"degree": d, "generators": [[...], ...]}`` with 0-based images and uses
the stabilizer of point 0.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import constructions as C
from .errors import ClusterForgeError, SpecParseError, UsageError


@dataclass(frozen=True)
class GroupSpec:
    text: str
    model: C.ExtensionModel


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, msg, pos=None):
        raise SpecParseError(msg, self.text, self.pos if pos is None else pos)

    def expect(self, s):
        if not self.text.startswith(s, self.pos):
            self.fail(f"expected {s!r}")
        self.pos += len(s)

    def word(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a family name")
        return self.text[start:self.pos], start

    def ints(self):
        start = self.pos
        vals = []
        while True:
            s = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if s == self.pos:
                self.fail("expected an integer")
            vals.append(int(self.text[s:self.pos]))
            if self.pos < len(self.text) and self.text[self.pos] == ",":
                self.pos += 1
                continue
            return vals, start

    def path(self):
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    break
                depth -= 1
            self.pos += 1
        if start == self.pos:
            self.fail("expected a file path")
        return self.text[start:self.pos], start

    def spec(self):
        start = self.pos
        name, npos = self.word()
        self.expect(":")
        if name in ("dp", "mag"):
            self.expect("(")
            left = self.spec()
            self.expect(")")
            self.expect("x")
            self.expect("(")
            right = self.spec()
            self.expect(")")
            label = self.text[start:self.pos]
            if name == "dp":
                m = C.product_extension(left, right)
            else:
                m = C.magnify(left, right.table)
            return _relabel(m, label)
        if name == "perm":
            path, ppos = self.path()
            return _relabel(_load_perm(path, self, ppos), self.text[start:self.pos])
        vals, vpos = self.ints()
        label = self.text[start:self.pos]
        arity = {"sym": (1, 2), "sdp": (2, 2), "holo": (1, 1), "frob": (1, 1), "cyc": (1, 1)}
        if name not in arity:
            self.fail(f"unknown family {name!r}", npos)
        lo, hi = arity[name]
        if not lo <= len(vals) <= hi:
            self.fail(f"{name} takes {lo if lo == hi else f'{lo} or {hi}'} parameter(s)", vpos)
        try:
            if name == "sym":
                m = C.symmetric_model(vals[0], vals[1] if len(vals) > 1 else 1)
            elif name == "sdp":
                m = C.shift_semidirect_model(*vals)
            elif name == "holo":
                m = C.holomorph_model(vals[0])
            elif name == "frob":
                m = C.frobenius_model(vals[0])
            else:
                m = C.cyclic_model(vals[0])
        except UsageError as exc:
            raise SpecParseError(str(exc), self.text, vpos) from None
        return _relabel(m, label)


def _relabel(m, label):
    return C.ExtensionModel(m.table, m.H, label, m.family, m.params, m.extra)


def _load_perm(path, parser, pos):
    try:
        data = json.loads(Path(path).read_text())
        degree = int(data["degree"])
        gens = [tuple(int(i) for i in g) for g in data["generators"]]
    except FileNotFoundError:
        parser.fail(f"no such file {path!r}", pos)
    except (ValueError, KeyError, TypeError) as exc:
        parser.fail(f"bad permutation file ({exc})", pos)
    try:
        return C.permutation_model(degree, gens)
    except ClusterForgeError as exc:
        raise SpecParseError(str(exc), parser.text, pos) from None


def parse_spec(text: str) -> GroupSpec:
    """Build the model described by ``text``."""
    p = _Parser(text.strip())
    model = p.spec()
    if p.pos != len(p.text):
        p.fail("unexpected trailing input")
    return GroupSpec(p.text, model)
