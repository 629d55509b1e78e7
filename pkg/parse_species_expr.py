#!/usr/bin/env python3
"""
Parser und Auswerter für Spezies-Ausdrücke wie "L o E+" oder "1 + int(E.E)".

Bindungsstärke (von schwach nach stark):
    +  -                     Summe, Differenz (linksassoziativ)
    .  **  odot (⊙)          Spezies-Produkt, Faltung, ordinales Produkt
                             (gleiche Stufe, Mischen nur mit Klammern)
    o                        Komposition (rechtsassoziativ)
    int, -                   Präfix: Integral, Negation
    '  ptg (•)               Postfix: Ableitung, Punktierung

Atome: E, E+, Eeven, Eodd, E[k], X, ganze Zahlen, L (= S), C, Cat, Fub,
Par, Alt, AltC, Der sowie Klammern.
"""
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import series
from series import CountSeq


class ParseError(ValueError):
    """Syntaxfehler mit 0-basierter Position im Ausdruck."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (Position {position})")
        self.position = position


ATOMS: Dict[str, Callable[[int], CountSeq]] = {
    "E": series.E,
    "E+": series.E_plus,
    "Eeven": series.E_even,
    "Eodd": series.E_odd,
    "X": series.X,
    "L": series.L,
    "S": series.L,
    "C": series.Cyc,
    "Cat": series.catalan_numbers,
    "Fub": series.fubini,
    "Par": series.bell,
    "Alt": series.Alt,
    "AltC": series.AltC,
    "Der": series.derangements,
}

PRODUCT_OPS = (".", "**", "odot")
WORD_OPS = ("o", "odot", "ptg", "int")


@dataclass(frozen=True)
class Token:
    kind: str   # "num", "atom", "op", "eof"
    value: str
    pos: int


@dataclass(frozen=True)
class Node:
    op: str
    args: Tuple["Node", ...] = ()
    value: Optional[str] = None
    pos: int = 0


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token("num", text[start:i], start))
            continue
        if c.isalpha():
            start = i
            while i < len(text) and text[i].isalpha():
                i += 1
            word = text[start:i]
            if word in WORD_OPS:
                tokens.append(Token("op", word, start))
                continue
            if word == "E" and i < len(text) and text[i] == "[":
                close = text.find("]", i)
                inner = text[i + 1:close] if close != -1 else ""
                if not inner.strip().isdigit():
                    raise ParseError("E[k] erwartet eine ganze Zahl k", i)
                tokens.append(Token("atom", f"E[{int(inner)}]", start))
                i = close + 1
                continue
            if word == "E" and i < len(text) and text[i] == "+" and not _operand_follows(text, i + 1):
                tokens.append(Token("atom", "E+", start))
                i += 1
                continue
            if word not in ATOMS:
                raise ParseError(f"Unbekannter Bezeichner: {word}", start)
            tokens.append(Token("atom", word, start))
            continue
        if text.startswith("**", i):
            tokens.append(Token("op", "**", i))
            i += 2
            continue
        if c in "+-.'()":
            tokens.append(Token("op", c, i))
            i += 1
            continue
        if c in "⊙•":
            tokens.append(Token("op", "odot" if c == "⊙" else "ptg", i))
            i += 1
            continue
        raise ParseError(f"Unerwartetes Zeichen: {c!r}", i)
    tokens.append(Token("eof", "", len(text)))
    return tokens


def _operand_follows(text: str, i: int) -> bool:
    """Beginnt ab Index i (nach Leerzeichen) ein Operand? Entscheidet "E+" gegen "E + …"."""
    while i < len(text) and text[i].isspace():
        i += 1
    if i >= len(text):
        return False
    if text[i].isdigit() or text[i] in "(-":
        return True
    if text[i].isalpha():
        j = i
        while j < len(text) and text[j].isalpha():
            j += 1
        return text[i:j] not in ("o", "odot", "ptg")
    return False


class SpeciesExpressionParser:
    """Precedence-Climbing-Parser für Spezies-Ausdrücke."""

    def __init__(self, text: str):
        """
        Args:
            text (str): Ausdruck, z.B. "Eeven . E"
        """
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.derivatives = sum(1 for t in self.tokens if t.kind == "op" and t.value == "'")
        self.tree = self._parse_sum()
        if self._peek().kind != "eof":
            token = self._peek()
            raise ParseError(f"Unerwartetes Token: {token.value}", token.pos)

    # --- Token-Strom -------------------------------------------------------

    def _peek(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _at_op(self, *values: str) -> bool:
        token = self._peek()
        return token.kind == "op" and token.value in values

    # --- Grammatik ---------------------------------------------------------

    def _parse_sum(self) -> Node:
        lhs = self._parse_product()
        while self._at_op("+", "-"):
            op = self._advance()
            lhs = Node(op.value, (lhs, self._parse_product()), pos=op.pos)
        return lhs

    def _parse_product(self) -> Node:
        lhs = self._parse_compose()
        first: Optional[str] = None
        while self._at_op(*PRODUCT_OPS):
            op = self._advance()
            if first is not None and op.value != first:
                raise ParseError(f"'{first}' und '{op.value}' nur mit Klammern mischen", op.pos)
            first = op.value
            lhs = Node(op.value, (lhs, self._parse_compose()), pos=op.pos)
        return lhs

    def _parse_compose(self) -> Node:
        lhs = self._parse_prefix()
        if self._at_op("o"):
            op = self._advance()
            return Node("o", (lhs, self._parse_compose()), pos=op.pos)
        return lhs

    def _parse_prefix(self) -> Node:
        if self._at_op("int"):
            op = self._advance()
            return Node("int", (self._parse_prefix(),), pos=op.pos)
        if self._at_op("-"):
            op = self._advance()
            return Node("neg", (self._parse_prefix(),), pos=op.pos)
        return self._parse_postfix()

    def _parse_postfix(self) -> Node:
        node = self._parse_atom()
        while self._at_op("'", "ptg"):
            op = self._advance()
            node = Node(op.value, (node,), pos=op.pos)
        return node

    def _parse_atom(self) -> Node:
        token = self._advance()
        if token.kind == "num":
            return Node("num", value=token.value, pos=token.pos)
        if token.kind == "atom":
            return Node("atom", value=token.value, pos=token.pos)
        if token.kind == "op" and token.value == "(":
            inner = self._parse_sum()
            if not self._at_op(")"):
                raise ParseError("')' erwartet", self._peek().pos)
            self._advance()
            return inner
        if token.kind == "eof":
            raise ParseError("Unerwartetes Ende des Ausdrucks", token.pos)
        raise ParseError(f"Operand erwartet, gefunden: {token.value}", token.pos)

    # --- Auswertung --------------------------------------------------------

    def evaluate(self, N: int) -> CountSeq:
        """Wertet den Ausdruck exakt aus und liefert a_0..a_N."""
        order = N + self.derivatives
        return self._eval(self.tree, order).truncate(N)

    def _eval(self, node: Node, M: int) -> CountSeq:
        if node.op == "num":
            return series.constant(int(node.value), M)
        if node.op == "atom":
            if node.value.startswith("E["):
                return series.E_exactly(int(node.value[2:-1]), M)
            return ATOMS[node.value](M)
        args = [self._eval(arg, M) for arg in node.args]
        if node.op == "+":
            return series.add(*args)
        if node.op == "-":
            return series.subtract(*args)
        if node.op == "neg":
            return series.scalar_mul(-1, args[0])
        if node.op == ".":
            return series.species_product(*args)
        if node.op == "**":
            return series.convolution(*args)
        if node.op == "odot":
            return series.ordinal_product(*args)
        if node.op == "o":
            return series.compose(*args)
        if node.op == "int":
            return series.integral(args[0])
        if node.op == "'":
            return series.derivative(args[0])
        if node.op == "ptg":
            return series.pointing(args[0])
        raise ParseError(f"Unbekannter Knoten: {node.op}", node.pos)


def evaluate_expression(text: str, N: int) -> CountSeq:
    return SpeciesExpressionParser(text).evaluate(N)
