#!/usr/bin/env python3
"""
Konstruktive Bijektionen mit prüfbaren Round-Trip- und Erhaltungseigenschaften:
Cayley-Permutation ↔ Ballot, die Simion-Schmidt-artigen Repräsentanten für
123 und 132 sowie das Verdoppeln/Entfernen von flachen Stufen.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import enumeration
from catalog import UnknownNameError
from core import (Ballot, CayleyError, Word, avoids, check_cayley, filling, format_word, is_primitive,
                  parse_word, wlmin)

logger = logging.getLogger('CayleyBijections')


class BijectionError(ValueError):
    """Eingabe liegt nicht im Definitionsbereich einer Bijektion."""


# ---------------------------------------------------------------------------
# Cayley ↔ Ballot
# ---------------------------------------------------------------------------

def cay_to_ballot(w: Sequence[int]) -> Ballot:
    """B_i = w⁻¹({i}): Position j landet im Block w_j."""
    w = check_cayley(w)
    blocks: List[List[int]] = [[] for _ in range(max(w, default=0))]
    for j, a in enumerate(w, start=1):
        blocks[a - 1].append(j)
    return Ballot.of(blocks)


def ballot_to_cay(b: Ballot) -> Word:
    letters = [0] * b.size
    for i, block in enumerate(b.blocks, start=1):
        for j in block:
            letters[j - 1] = i
    return tuple(letters)


# ---------------------------------------------------------------------------
# Repräsentanten der (wlmin, filling)-Klassen
# ---------------------------------------------------------------------------

def _minima_positions(w: Sequence[int]) -> Dict[int, int]:
    return dict(wlmin(w))


def to_123_rep(w: Sequence[int]) -> Word:
    """
    Hält die schwachen Links-nach-rechts-Minima fest und verteilt die
    Füllung schwach fallend auf die übrigen Positionen. Das Ergebnis
    vermeidet 123.
    """
    w = check_cayley(w)
    minima = _minima_positions(w)
    pool = sorted(filling(w), reverse=True)
    out, used = [], 0
    for i in range(1, len(w) + 1):
        if i in minima:
            out.append(minima[i])
        else:
            out.append(pool[used])
            used += 1
    return tuple(out)


def to_132_rep(w: Sequence[int]) -> Word:
    """
    Hält die schwachen Links-nach-rechts-Minima fest; jede andere Position
    erhält den kleinsten noch unbenutzten Füllbuchstaben, der echt größer
    als das aktuelle Minimum ist. Das Ergebnis vermeidet 132.

    Raises:
        BijectionError: wenn kein solcher Buchstabe existiert
    """
    w = check_cayley(w)
    minima = _minima_positions(w)
    pool = Counter(filling(w))
    out: List[int] = []
    current = 0
    for i in range(1, len(w) + 1):
        if i in minima:
            current = minima[i]
            out.append(current)
            continue
        candidates = [a for a in pool if pool[a] and a > current]
        if not candidates:
            raise BijectionError(f"Kein Füllbuchstabe > {current} an Position {i} von {format_word(w)}")
        letter = min(candidates)
        pool[letter] -= 1
        out.append(letter)
    return tuple(out)


def simion_schmidt(u: Sequence[int]) -> Word:
    """Cay(123)[n] → Cay(132)[n]"""
    u = check_cayley(u)
    if not avoids(u, (1, 2, 3)):
        raise BijectionError(f"{format_word(u)} enthält 123")
    return to_132_rep(u)


def simion_schmidt_inverse(v: Sequence[int]) -> Word:
    """Cay(132)[n] → Cay(123)[n]"""
    v = check_cayley(v)
    if not avoids(v, (1, 3, 2)):
        raise BijectionError(f"{format_word(v)} enthält 132")
    return to_123_rep(v)


# ---------------------------------------------------------------------------
# Flache Stufen
# ---------------------------------------------------------------------------

def prim_expand(S: Iterable[int], v: Sequence[int]) -> Word:
    """
    Schreibt die Buchstaben von v der Reihe nach auf die Plätze [n]∖S
    (n = |v| + |S|) und füllt jeden Platz aus S mit dem Buchstaben links daneben.
    """
    slots = frozenset(S)
    v = tuple(v)
    n = len(v) + len(slots)
    if not v:
        raise BijectionError("prim_expand braucht ein nichtleeres v")
    if not slots <= set(range(2, n + 1)):
        raise BijectionError(f"Platzmenge {sorted(slots)} liegt nicht in {{2, …, {n}}}")
    if not is_primitive(v):
        raise BijectionError(f"{format_word(v)} ist nicht primitiv")
    try:
        check_cayley(v)
    except CayleyError as e:
        raise BijectionError(str(e)) from e
    out: List[int] = []
    letters = iter(v)
    for i in range(1, n + 1):
        out.append(out[-1] if i in slots else next(letters))
    return tuple(out)


def prim_contract(w: Sequence[int]) -> Tuple[FrozenSet[int], Word]:
    """Zerlegt w in (S, v): S sind die Plätze flacher Stufen, v ist w ohne diese Plätze."""
    w = check_cayley(w)
    if not w:
        raise BijectionError("prim_contract braucht ein nichtleeres Wort")
    slots = frozenset(i for i in range(2, len(w) + 1) if w[i - 1] == w[i - 2])
    v = tuple(a for i, a in enumerate(w, start=1) if i not in slots)
    return slots, v


# ---------------------------------------------------------------------------
# Einzelanwendung für die Kommandozeile
# ---------------------------------------------------------------------------

def _format_slots(S: FrozenSet[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(S)) + "}"


def apply_bijection(name: str, text: str) -> str:
    """
    Wendet eine Bijektion auf eine Texteingabe an und liefert die Textform des Bildes.

    Namen: cay2bal, bal2cay, to123, to132, simion_schmidt, simion_schmidt_inv,
    prim_contract, prim_expand (Eingabe "2,3,7;325154").
    """
    if name == "cay2bal":
        return str(cay_to_ballot(parse_word(text)))
    if name == "bal2cay":
        return format_word(ballot_to_cay(Ballot.parse(text)), compact=True)
    if name == "prim_expand":
        slot_text, _, word_text = text.partition(";")
        if not word_text:
            raise BijectionError("prim_expand erwartet die Eingabe 'S;v', z.B. '2,3,7;325154'")
        slots = [int(tok) for tok in slot_text.replace("{", "").replace("}", "").split(",") if tok.strip()]
        return format_word(prim_expand(slots, parse_word(word_text)), compact=True)
    if name == "prim_contract":
        slots, v = prim_contract(parse_word(text))
        return f"{_format_slots(slots)};{format_word(v, compact=True)}"
    single = {
        "to123": to_123_rep,
        "to132": to_132_rep,
        "simion_schmidt": simion_schmidt,
        "simion_schmidt_inv": simion_schmidt_inverse,
    }
    if name not in single:
        raise UnknownNameError(f"Unbekannte Bijektion: {name}")
    return format_word(single[name](parse_word(text)), compact=True)


# ---------------------------------------------------------------------------
# Erschöpfende Suiten
# ---------------------------------------------------------------------------

@dataclass
class BijectionReport:
    name: str
    n: int
    checked: int = 0
    round_trip_ok: bool = True
    property_ok: bool = True
    image_count: Optional[int] = None
    expected_image_count: Optional[int] = None
    first_failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.round_trip_ok and self.property_ok

    def fail(self, kind: str, message: str) -> None:
        if kind == "round_trip":
            self.round_trip_ok = False
        else:
            self.property_ok = False
        if self.first_failure is None:
            self.first_failure = message
            logger.error(f"❌ {self.name} (n={self.n}): {message}")

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "n": self.n,
            "checked": self.checked,
            "round_trip_ok": self.round_trip_ok,
            "property_ok": self.property_ok,
            "image_count": self.image_count,
            "expected_image_count": self.expected_image_count,
            "first_failure": self.first_failure,
        }


def _suite_cay_bal(report: BijectionReport) -> None:
    for w in enumeration.gen_cayley(report.n):
        report.checked += 1
        b = cay_to_ballot(w)
        if ballot_to_cay(b) != w or cay_to_ballot(ballot_to_cay(b)) != b:
            report.fail("round_trip", f"{format_word(w)} ↔ {b}")
        if len(b.blocks) != max(w, default=0) or any(j not in b.blocks[a - 1] for j, a in enumerate(w, 1)):
            report.fail("property", f"Blockstruktur von {b} passt nicht zu {format_word(w)}")
    report.image_count = report.checked
    report.expected_image_count = enumeration.count_cayley(report.n)


def _same_class(w: Sequence[int], image: Sequence[int]) -> bool:
    return wlmin(image) == wlmin(w) and filling(image) == filling(w)


def _suite_simion_schmidt(report: BijectionReport) -> None:
    images = set()
    for u in enumeration.gen_cayley(report.n, (1, 2, 3)):
        report.checked += 1
        v = simion_schmidt(u)
        images.add(v)
        if simion_schmidt_inverse(v) != u:
            report.fail("round_trip", f"{format_word(u)} → {format_word(v)} → zurück verschieden")
        if not avoids(v, (1, 3, 2)) or not _same_class(u, v):
            report.fail("property", f"Bild {format_word(v)} von {format_word(u)} verletzt 132-Freiheit oder Klasse")
    report.image_count = len(images)
    report.expected_image_count = enumeration.count_avoiders((1, 3, 2), report.n)
    if report.image_count != report.checked or report.image_count != report.expected_image_count:
        report.fail("property", f"{report.checked} Urbilder, {report.image_count} Bilder, "
                                f"|Cay(132)[{report.n}]| = {report.expected_image_count}")


def _suite_ss_classes(report: BijectionReport) -> None:
    per_class: Dict[Tuple, List[int]] = {}
    for w in enumeration.gen_cayley(report.n):
        report.checked += 1
        u, v = to_123_rep(w), to_132_rep(w)
        if not avoids(u, (1, 2, 3)) or not avoids(v, (1, 3, 2)):
            report.fail("property", f"Repräsentanten von {format_word(w)} enthalten das Muster")
        if not _same_class(w, u) or not _same_class(w, v):
            report.fail("property", f"Repräsentanten von {format_word(w)} verlassen die Klasse")
        if to_123_rep(v) != u or to_132_rep(u) != v:
            report.fail("round_trip", f"Repräsentanten von {format_word(w)} wechseln nicht ineinander")
        counts = per_class.setdefault((wlmin(w), filling(w)), [0, 0])
        counts[0] += avoids(w, (1, 2, 3))
        counts[1] += avoids(w, (1, 3, 2))
    report.image_count = len(per_class)
    report.expected_image_count = enumeration.count_avoiders((1, 2, 3), report.n)
    for key, (a, b) in per_class.items():
        if a != 1 or b != 1:
            report.fail("property", f"Klasse {key} enthält {a} 123-freie und {b} 132-freie Wörter")
            break


def _suite_prim(report: BijectionReport) -> None:
    pairs = set()
    for w in enumeration.gen_cayley(report.n):
        if not w:
            continue
        report.checked += 1
        slots, v = prim_contract(w)
        pairs.add((slots, v))
        if prim_expand(slots, v) != w:
            report.fail("round_trip", f"{format_word(w)} → ({_format_slots(slots)}, {format_word(v)})")
        if not is_primitive(v) or 1 in slots:
            report.fail("property", f"Zerlegung von {format_word(w)} ist nicht primitiv")
    report.image_count = len(pairs)
    report.expected_image_count = enumeration.count_cayley(report.n) if report.n else 0
    if report.image_count != report.checked:
        report.fail("property", f"{report.checked} Wörter, aber {report.image_count} verschiedene Zerlegungen")


SUITES = {
    "cay_bal": _suite_cay_bal,
    "simion_schmidt": _suite_simion_schmidt,
    "ss_classes": _suite_ss_classes,
    "prim": _suite_prim,
}


def bijection_suite(name: str, n: int) -> BijectionReport:
    """Prüft Round-Trip und Erhaltungseigenschaften erschöpfend über alle Eingaben der Größe n."""
    if name not in SUITES:
        raise UnknownNameError(f"Unbekannte Bijektions-Suite: {name} (bekannt: {', '.join(SUITES)})")
    report = BijectionReport(name, n)
    logger.info(f"🔍 Bijektions-Suite {name} für n={n}")
    SUITES[name](report)
    if report.ok:
        logger.info(f"✅ {name}: {report.checked} Elemente geprüft")
    return report
