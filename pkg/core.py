#!/usr/bin/env python3
"""
Wörter, Cayley-Permutationen und Ballots.

Grundbausteine für alle anderen Module: Mustererkennung (Containment),
Reverse/Complement, Standardisierung, Fixpunkte, Primitivität und die
schwachen Links-nach-rechts-Minima. Wörter sind einfache Tupel von
positiven ganzen Zahlen (1-basiert), damit sie billig erzeugt und als
Dictionary-Schlüssel verwendet werden können.
"""
import re
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence, Tuple

Word = Tuple[int, ...]
Pattern = Tuple[int, ...]

CAYLEY_DEFINITION = (
    "ein Wort w heißt Cayley-Permutation, wenn Img(w) = [k] für ein k gilt "
    "(jeder Wert 1..max(w) kommt mindestens einmal vor)"
)


class CayleyError(ValueError):
    """Ungültiges Wort, Muster oder Ballot."""


# ---------------------------------------------------------------------------
# Ein-/Ausgabe
# ---------------------------------------------------------------------------

def parse_word(text: str) -> Word:
    """
    Parst ein Wort aus der Textform.

    Akzeptiert Leerzeichen- oder Komma-getrennte Dezimalzahlen sowie einen
    unbegrenzten Ziffernstring (nur sinnvoll, wenn alle Buchstaben ≤ 9 sind).

    Args:
        text (str): z.B. "3 1 3 4", "3,1,3,4" oder "3134"

    Returns:
        Word: Tupel der Buchstaben
    """
    stripped = text.strip()
    if not stripped:
        return ()
    if re.fullmatch(r"\d+", stripped):
        letters = [int(c) for c in stripped]
    elif re.fullmatch(r"\d+([\s,]+\d+)*", stripped):
        letters = [int(tok) for tok in re.split(r"[\s,]+", stripped)]
    else:
        raise CayleyError(f"Ungültiges Wortformat: {text!r}")
    if any(a < 1 for a in letters):
        raise CayleyError(f"Buchstaben müssen positiv sein: {text!r}")
    return tuple(letters)


def parse_pattern(text: str) -> Pattern:
    """Parst ein Muster und prüft, dass es eine nichtleere Cayley-Permutation ist."""
    p = parse_word(text)
    if not p:
        raise CayleyError("Muster dürfen nicht leer sein")
    if not is_cayley(p):
        raise CayleyError(f"{text!r} ist keine Cayley-Permutation: {CAYLEY_DEFINITION}")
    return p


def format_word(w: Sequence[int], compact: bool = False) -> str:
    """Kanonische Textform; compact=True liefert den Ziffernstring, falls max(w) ≤ 9."""
    if compact and all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return " ".join(str(a) for a in w)


def pattern_name(p: Sequence[int]) -> str:
    """Kurzname eines Musters für Berichte (Ziffern oder kommagetrennt)."""
    if all(a <= 9 for a in p):
        return "".join(str(a) for a in p)
    return ",".join(str(a) for a in p)


# ---------------------------------------------------------------------------
# Grundlegende Eigenschaften
# ---------------------------------------------------------------------------

def is_word(w: Sequence[int]) -> bool:
    return all(isinstance(a, int) and a >= 1 for a in w)


def image_max(w: Sequence[int]) -> int:
    """max(w), 0 für das leere Wort."""
    return max(w) if w else 0


def is_cayley(w: Sequence[int]) -> bool:
    """True genau dann, wenn die Buchstabenmenge {1, …, k} ist."""
    if not w:
        return True
    return set(w) == set(range(1, max(w) + 1))


def check_cayley(w: Sequence[int]) -> Word:
    if not is_word(w) or not is_cayley(w):
        raise CayleyError(f"{format_word(w)} ist keine Cayley-Permutation: {CAYLEY_DEFINITION}")
    return tuple(w)


def content(w: Sequence[int]) -> Tuple[int, ...]:
    """Inhalt (Multimenge der Buchstaben) als sortiertes Tupel."""
    return tuple(sorted(w))


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def complement(w: Sequence[int]) -> Word:
    """Ersetzt jeden Buchstaben a durch max(w)+1−a."""
    check_cayley(w)
    top = image_max(w) + 1
    return tuple(top - a for a in w)


def standardize(w: Sequence[int], target: Iterable[int]) -> Word:
    """
    Ersetzt jede Kopie des i-kleinsten Buchstabens von w durch das
    i-kleinste Element von target.

    Raises:
        CayleyError: wenn |target| nicht der Anzahl verschiedener Buchstaben entspricht
    """
    values = sorted(set(target))
    letters = sorted(set(w))
    if len(values) != len(letters):
        raise CayleyError(
            f"Standardisierung: {len(letters)} verschiedene Buchstaben, "
            f"aber Zielmenge hat {len(values)} Elemente"
        )
    if any(a < 1 for a in values):
        raise CayleyError("Zielmenge muss aus positiven Zahlen bestehen")
    relabel = dict(zip(letters, values))
    return tuple(relabel[a] for a in w)


def order_pattern(w: Sequence[int]) -> Word:
    """Die zu w ordnungsisomorphe Cayley-Permutation (std_[k])."""
    return standardize(w, range(1, len(set(w)) + 1))


def fixed_points(w: Sequence[int]) -> FrozenSet[int]:
    """fix(w) = { i : w_i = i } mit 1-basierten Positionen."""
    return frozenset(i for i, a in enumerate(w, start=1) if a == i)


def is_primitive(w: Sequence[int]) -> bool:
    """Nichtleer und ohne „flat steps“ (w_i ≠ w_{i+1})."""
    if not w:
        return False
    return all(a != b for a, b in zip(w, w[1:]))


def wlmin(w: Sequence[int]) -> Tuple[Tuple[int, int], ...]:
    """Schwache Links-nach-rechts-Minima als (Position, Wert)-Paare in Positionsreihenfolge."""
    result = []
    current = None
    for i, a in enumerate(w, start=1):
        if current is None or a <= current:
            result.append((i, a))
            current = a
    return tuple(result)


def filling(w: Sequence[int]) -> Tuple[int, ...]:
    """Multimenge der Buchstaben an Nicht-wlmin-Positionen (sortiert)."""
    minima = {i for i, _ in wlmin(w)}
    return tuple(sorted(a for i, a in enumerate(w, start=1) if i not in minima))


# ---------------------------------------------------------------------------
# Mustererkennung
# ---------------------------------------------------------------------------

def _fits(vals: List[int], top: int, pv: int, x: int) -> bool:
    # Ordnungserhaltung gegenüber allen bereits belegten Musterwerten
    for a in range(1, top + 1):
        y = vals[a]
        if not y:
            continue
        if a < pv and y >= x:
            return False
        if a > pv and y <= x:
            return False
    return True


def _embed(w: Sequence[int], hi: int, p: Sequence[int], kk: int, vals: List[int], top: int) -> bool:
    """Backtracking: bettet p[0:kk] in w[0:hi] ein, konsistent mit der Vorbelegung vals."""

    def place(j: int, start: int) -> bool:
        if j == kk:
            return True
        pv = p[j]
        fixed = vals[pv]
        last = hi - (kk - j)
        for i in range(start, last + 1):
            x = w[i]
            if fixed:
                if x == fixed and place(j + 1, i + 1):
                    return True
            elif _fits(vals, top, pv, x):
                vals[pv] = x
                if place(j + 1, i + 1):
                    return True
                vals[pv] = 0
        return False

    return place(0, 0)


def contains(w: Sequence[int], p: Sequence[int]) -> bool:
    """
    True, wenn w eine Teilfolge (streng wachsende Indizes) enthält, die
    ordnungsisomorph zu p ist. Gleichheiten und strikte Ungleichungen von
    p bleiben dabei erhalten.
    """
    k = len(p)
    if k > len(w):
        return False
    top = max(p)
    return _embed(w, len(w), p, k, [0] * (top + 1), top)


def avoids(w: Sequence[int], p: Sequence[int]) -> bool:
    return not contains(w, p)


def ends_with_occurrence(w: Sequence[int], end: int, p: Sequence[int]) -> bool:
    """
    Gibt es ein Vorkommen von p in w[0:end+1], dessen letzter Buchstabe an
    Position end liegt? Grundlage des Präfix-Prunings in der Enumeration.
    """
    k = len(p)
    if k > end + 1:
        return False
    top = max(p)
    vals = [0] * (top + 1)
    vals[p[-1]] = w[end]
    return _embed(w, end, p, k - 1, vals, top)


def contains_naive(w: Sequence[int], p: Sequence[int]) -> bool:
    """Orakel: prüft alle Indexteilmengen der Größe |p|."""
    target = tuple(p)
    for idx in combinations(range(len(w)), len(p)):
        if order_pattern([w[i] for i in idx]) == target:
            return True
    return False


# ---------------------------------------------------------------------------
# Ballots
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ballot:
    """Geordnete Mengenpartition B_1 … B_k von {1, …, n}."""

    blocks: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        seen = set()
        for block in self.blocks:
            if not block:
                raise CayleyError("Ballot enthält einen leeren Block")
            if seen & block:
                raise CayleyError("Ballot-Blöcke sind nicht disjunkt")
            seen |= block
        if seen != set(range(1, len(seen) + 1)):
            raise CayleyError("Vereinigung der Blöcke ist nicht {1, …, n}")

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "Ballot":
        return cls(tuple(frozenset(b) for b in blocks))

    @classmethod
    def parse(cls, text: str) -> "Ballot":
        """Parst die Textform {2}|{5,6,7}|{1,3}|{4,8}."""
        stripped = text.strip()
        if not stripped:
            return cls(())
        blocks = []
        for part in stripped.split("|"):
            match = re.fullmatch(r"\s*\{\s*(\d+(?:\s*,\s*\d+)*)\s*\}\s*", part)
            if not match:
                raise CayleyError(f"Ungültiger Ballot-Block: {part!r}")
            blocks.append([int(tok) for tok in match.group(1).split(",")])
        return cls.of(blocks)

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def as_lists(self) -> List[List[int]]:
        return [sorted(b) for b in self.blocks]

    def __str__(self) -> str:
        return "|".join("{" + ",".join(str(a) for a in sorted(b)) + "}" for b in self.blocks)
