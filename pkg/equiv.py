#!/usr/bin/env python3
"""
Die sechs Äquivalenzrelationen auf Mustern (c, cm, sc, w, sw, e),
Symmetrieklassen, Klassifikation und beschränkte Suchen nach
Gegenbeispielen zu den offenen Vermutungen.

Alle Aussagen gelten nur bis zu den angegebenen Schranken N und K.
"""
import logging
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

import enumeration
from catalog import UnknownNameError
from core import Pattern, complement, pattern_name, reverse

logger = logging.getLogger('CayleyEquiv')

RELATIONS = ("c", "cm", "sc", "w", "sw", "e")
EQUIVALENT = "EQUIVALENT-UP-TO-BOUNDS"
DISTINGUISHED = "DISTINGUISHED"

CONJECTURES = ("cm_implies_sc", "c_implies_cm", "c_implies_equal_max", "max_monotonicity")
NO_COUNTEREXAMPLE = "NO-COUNTEREXAMPLE-FOUND"
CANDIDATE = "CANDIDATE-COUNTEREXAMPLE"

# Kleinster bekannter Kandidat für ein Gegenbeispiel zu c ⇒ cm.
KNOWN_CANDIDATE = ((1, 3, 4, 4, 2), (1, 4, 2, 3, 3))
KNOWN_CANDIDATE_NOTE = (
    "13442 und 14233: |Cay⁵(13442)[9]| = 742943 ≠ 742944 = |Cay⁵(14233)[9]| (nicht cm-äquivalent), "
    "aber |Cay(13442)[n]| = |Cay(14233)[n]| für n ≤ 9"
)


def known_candidate_counts(n: int, k: int) -> Dict[str, int]:
    """|Cay^k(p)[n]| für beide Muster des bekannten Kandidaten."""
    return {pattern_name(p): enumeration.count_avoiders_with_max(p, n, k) for p in KNOWN_CANDIDATE}


def _progress(items, desc: str):
    return tqdm(items, desc=desc, file=sys.stderr, disable=not sys.stderr.isatty(), leave=False)


def symmetry_class(p: Sequence[int]) -> frozenset:
    """Abschluss von {p} unter Reverse und Complement (Größe 1, 2 oder 4)."""
    p = tuple(p)
    return frozenset({p, reverse(p), complement(p), reverse(complement(p))})


# ---------------------------------------------------------------------------
# Zählfamilien
# ---------------------------------------------------------------------------

def _uses_k(relation: str) -> bool:
    return relation in ("cm", "sc", "w", "sw")


@lru_cache(maxsize=None)
def count_family(p: Pattern, relation: str, n_max: int, k_max: int) -> Tuple[Tuple[Tuple[int, Optional[int]], object], ...]:
    """
    Die Zählfamilie, die eine Relation vergleicht, als geordnete Folge
    ((n, k), Wert). Für sc/sw ist der Wert ein Counter Inhalt → Anzahl.
    """
    if relation not in RELATIONS:
        raise UnknownNameError(f"Unbekannte Relation: {relation} (bekannt: {', '.join(RELATIONS)})")
    family: List[Tuple[Tuple[int, Optional[int]], object]] = []
    for n in range(n_max + 1):
        if relation == "c":
            family.append(((n, None), enumeration.count_avoiders(p, n)))
        elif relation == "e":
            family.append(((n, n), enumeration.count_kary_avoiders(p, n, n)))
        else:
            for k in range(k_max + 1):
                if relation == "cm":
                    value = enumeration.count_avoiders_with_max(p, n, k)
                elif relation == "w":
                    value = enumeration.count_kary_avoiders(p, n, k)
                else:
                    value = enumeration.content_indexed_counts(p, n, k, surjective=(relation == "sc"))
                family.append(((n, k), value))
    return tuple(family)


def signature(p: Sequence[int], relation: str, n_max: int, k_max: int) -> Tuple:
    """Hashbare Form der Zählfamilie; gleiche Signatur heißt äquivalent bis zu den Schranken."""
    family = count_family(tuple(p), relation, n_max, k_max)
    if relation in ("sc", "sw"):
        return tuple((key, tuple(sorted(c.items()))) for key, c in family)
    return family


# ---------------------------------------------------------------------------
# Paarvergleich
# ---------------------------------------------------------------------------

@dataclass
class EquivReport:
    p: Pattern
    q: Pattern
    relation: str
    n_max: int
    k_max: int
    verdict: str
    witness: Optional[Dict] = None

    def to_dict(self) -> Dict:
        result = {
            "p": pattern_name(self.p),
            "q": pattern_name(self.q),
            "relation": self.relation,
            "bounds": {"n": self.n_max, "k": self.k_max if _uses_k(self.relation) else None},
            "verdict": self.verdict,
        }
        if self.witness is not None:
            witness = dict(self.witness)
            witness["counts"] = [str(c) for c in witness["counts"]]
            if witness.get("content") is not None:
                witness["content"] = list(witness["content"])
            result["witness"] = witness
        return result


def _first_difference(a_family, b_family, relation: str) -> Optional[Dict]:
    for (key, a), (_, b) in zip(a_family, b_family):
        n, k = key
        if relation in ("sc", "sw"):
            for content in sorted(set(a) | set(b)):
                if a[content] != b[content]:
                    return {"n": n, "k": k, "content": content, "counts": [a[content], b[content]]}
        elif a != b:
            return {"n": n, "k": k, "content": None, "counts": [a, b]}
    return None


def test_relation(p: Sequence[int], q: Sequence[int], relation: str,
                  n_max: int = 8, k_max: int = 6) -> EquivReport:
    """
    Vergleicht die Zählfamilien von p und q für alle n ≤ n_max (und k ≤ k_max).

    Returns:
        EquivReport: EQUIVALENT-UP-TO-BOUNDS oder DISTINGUISHED mit dem ersten Zeugen
    """
    p, q = tuple(p), tuple(q)
    if len(p) != len(q):
        logger.warning(f"⚠️ Muster unterschiedlicher Länge: {pattern_name(p)} vs {pattern_name(q)}")
    witness = _first_difference(count_family(p, relation, n_max, k_max),
                                count_family(q, relation, n_max, k_max), relation)
    verdict = DISTINGUISHED if witness else EQUIVALENT
    logger.debug(f"🔍 {pattern_name(p)} ~{relation} {pattern_name(q)}: {verdict}")
    return EquivReport(p, q, relation, n_max, k_max, verdict, witness)


def relation_profile(p: Sequence[int], q: Sequence[int], n_max: int, k_max: int) -> Dict[str, bool]:
    """Alle sechs Relationen für ein Paar: Relation → äquivalent bis zu den Schranken."""
    return {rel: test_relation(p, q, rel, n_max, k_max).verdict == EQUIVALENT for rel in RELATIONS}


def implication_violations(profile: Dict[str, bool]) -> List[str]:
    """
    Verletzungen der definitorischen Ketten sc ⇒ cm ⇒ c und sw ⇒ w ⇒ e
    sowie der Gleichheiten w = cm und sw = sc. Jede Verletzung ist ein Implementierungsfehler.
    """
    violations = []
    for strong, weak in (("sc", "cm"), ("cm", "c"), ("sw", "w"), ("w", "e")):
        if profile[strong] and not profile[weak]:
            violations.append(f"{strong} ⇒ {weak}")
    for a, b in (("w", "cm"), ("sw", "sc")):
        if profile[a] != profile[b]:
            violations.append(f"{a} = {b}")
    return violations


def max_distinguisher(p: Sequence[int], q: Sequence[int]) -> Optional[Dict]:
    """
    Für max(p) ≠ max(q): Zeuge (n, k) = (|p_m|, m) mit m = min(max(p), max(q)),
    wobei p_m das Muster mit dem kleineren Maximum ist. Per Enumeration bestätigt.
    """
    p, q = tuple(p), tuple(q)
    if max(p) == max(q):
        return None
    smaller = p if max(p) < max(q) else q
    k, n = max(smaller), len(smaller)
    counts = [enumeration.count_avoiders_with_max(p, n, k), enumeration.count_avoiders_with_max(q, n, k)]
    if counts[0] == counts[1]:
        logger.error(f"❌ Maximum-Zeuge für {pattern_name(p)}/{pattern_name(q)} bestätigt sich nicht: {counts}")
        return None
    return {"n": n, "k": k, "content": None, "counts": counts}


# ---------------------------------------------------------------------------
# Klassifikation
# ---------------------------------------------------------------------------

@dataclass
class Classification:
    relation: str
    n_max: int
    k_max: int
    classes: List[List[Pattern]] = field(default_factory=list)

    def representatives(self) -> List[Pattern]:
        return [cls[0] for cls in self.classes]

    def as_sets(self) -> List[frozenset]:
        return [frozenset(cls) for cls in self.classes]

    def to_dict(self) -> Dict:
        return {
            "relation": self.relation,
            "bounds": {"n": self.n_max, "k": self.k_max if _uses_k(self.relation) else None},
            "classes": [[pattern_name(p) for p in cls] for cls in self.classes],
        }


def classify(patterns: Iterable[Sequence[int]], relation: str, n_max: int = 8, k_max: int = 6) -> Classification:
    """Gruppiert Muster mit gleicher Zählfamilie; Repräsentant ist das lexikographisch kleinste Muster."""
    groups: Dict[Tuple, List[Pattern]] = {}
    for p in _progress(sorted({tuple(p) for p in patterns}), f"classify ~{relation}"):
        groups.setdefault(signature(p, relation, n_max, k_max), []).append(p)
    classes = sorted((sorted(members) for members in groups.values()), key=lambda cls: cls[0])
    logger.info(f"📊 {len(classes)} Klassen unter ~{relation} (N={n_max}, K={k_max})")
    return Classification(relation, n_max, k_max, classes)


def patterns_of_length(length: int) -> List[Pattern]:
    return list(enumeration.gen_cayley(length))


# ---------------------------------------------------------------------------
# Vermutungen
# ---------------------------------------------------------------------------

@dataclass
class ConjectureReport:
    which: str
    max_len: int
    n_max: int
    k_max: int
    verdict: str = NO_COUNTEREXAMPLE
    pairs_tested: int = 0
    candidate: Optional[Dict] = None
    consistency_violations: List[str] = field(default_factory=list)
    note: Optional[str] = None

    def to_dict(self) -> Dict:
        result = {
            "which": self.which,
            "bounds": {"max_len": self.max_len, "n": self.n_max, "k": self.k_max},
            "verdict": self.verdict,
            "pairs_tested": self.pairs_tested,
        }
        if self.candidate is not None:
            result["candidate"] = self.candidate
        if self.consistency_violations:
            result["consistency_violations"] = self.consistency_violations
        if self.note:
            result["note"] = self.note
        return result


def _implication_pairs(patterns: List[Pattern], premise: str, n_max: int, k_max: int):
    """Ungeordnete Paare gleicher Länge, die die Prämisse erfüllen."""
    groups: Dict[Tuple, List[Pattern]] = {}
    for p in _progress(patterns, f"~{premise}"):
        groups.setdefault((len(p), signature(p, premise, n_max, k_max)), []).append(p)
    for members in groups.values():
        yield from combinations(members, 2)


def conjecture_scan(which: str, max_len: int = 3, n_max: int = 7, k_max: int = 5,
                    check_consistency: bool = False) -> ConjectureReport:
    """
    Prüft eine Vermutung erschöpfend über alle Musterpaare gleicher Länge 2..max_len.

    check_consistency=True berechnet für jedes geprüfte Paar zusätzlich alle
    sechs Relationen und meldet Verletzungen der Implikationsketten.

    Ein gefundenes Gegenbeispiel ist nur ein Kandidat: die Schranken sind endlich.
    """
    if which not in CONJECTURES:
        raise UnknownNameError(f"Unbekannte Vermutung: {which} (bekannt: {', '.join(CONJECTURES)})")
    report = ConjectureReport(which, max_len, n_max, k_max)
    patterns = [p for length in range(2, max_len + 1) for p in patterns_of_length(length)]
    logger.info(f"🔍 Vermutung {which}: {len(patterns)} Muster, N={n_max}, K={k_max}")

    def flag(p: Pattern, q: Pattern, detail: Dict) -> None:
        if report.candidate is None:
            report.verdict = CANDIDATE
            report.candidate = {"p": pattern_name(p), "q": pattern_name(q), **detail}
            logger.warning(f"⚠️ Kandidat für ein Gegenbeispiel: {pattern_name(p)}, {pattern_name(q)}")

    if which == "max_monotonicity":
        for p in _progress(patterns, which):
            for q in patterns:
                if p == q or len(p) != len(q) or max(p) > max(q):
                    continue
                report.pairs_tested += 1
                a = count_family(p, "c", n_max, k_max)
                b = count_family(q, "c", n_max, k_max)
                for ((n, _), x), (_, y) in zip(a, b):
                    if x < y:
                        flag(p, q, {"n": n, "counts": [str(x), str(y)]})
                        break
    else:
        premise, conclusion = {
            "cm_implies_sc": ("cm", "sc"),
            "c_implies_cm": ("c", "cm"),
            "c_implies_equal_max": ("c", None),
        }[which]
        for p, q in _implication_pairs(patterns, premise, n_max, k_max):
            report.pairs_tested += 1
            if conclusion is None:
                if max(p) != max(q):
                    flag(p, q, {"max": [max(p), max(q)]})
                continue
            result = test_relation(p, q, conclusion, n_max, k_max)
            if result.verdict == DISTINGUISHED:
                flag(p, q, result.to_dict()["witness"])
            if not check_consistency:
                continue
            for violation in implication_violations(relation_profile(p, q, n_max, k_max)):
                report.consistency_violations.append(f"{pattern_name(p)}/{pattern_name(q)}: {violation}")

    if which == "c_implies_cm" and max_len >= 5:
        report.note = KNOWN_CANDIDATE_NOTE
    if report.consistency_violations:
        logger.error(f"❌ Implikationsketten verletzt: {report.consistency_violations[:3]}")
    logger.info(f"📊 {which}: {report.verdict} nach {report.pairs_tested} Paaren")
    return report
