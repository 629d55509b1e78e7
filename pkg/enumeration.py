#!/usr/bin/env python3
"""
Erschöpfende, deterministische Erzeugung und Zählung von Cayley-Permutationen,
k-ären Wörtern und primitiven Wörtern sowie ihrer musterfreien Teilmengen.

Das ist das Brute-Force-Orakel hinter allen Formelchecks. Gezählt wird mit
einer iterativen Tiefensuche in lexikographischer Reihenfolge; Präfixe, die
das Muster bereits enthalten, werden nie verlängert. Große Zählungen werden
nach festen Präfixen auf Worker-Prozesse verteilt und per Ganzzahladdition
zusammengeführt, das Ergebnis hängt also nicht von der Worker-Anzahl ab.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from core import Pattern, Word, ends_with_occurrence, pattern_name

logger = logging.getLogger('CayleyEnumeration')

MODES = ("all", "max", "kary", "primitive")

# Vom Runner gesetzt (configure); Worker-Prozesse laufen immer sequentiell.
_settings = {
    "workers": 1,
    "parallel_min_length": 8,
    "split_depth": 3,
}


def configure(workers: Optional[int] = None, parallel_min_length: Optional[int] = None,
              split_depth: Optional[int] = None) -> None:
    """Setzt die Parallelisierungsparameter für alle folgenden Zählungen."""
    if workers is not None:
        _settings["workers"] = max(1, int(workers))
    if parallel_min_length is not None:
        _settings["parallel_min_length"] = int(parallel_min_length)
    if split_depth is not None:
        _settings["split_depth"] = max(1, int(split_depth))
    logger.debug(f"Enumeration konfiguriert: {_settings}")


# ---------------------------------------------------------------------------
# Tiefensuche
# ---------------------------------------------------------------------------

def _search(n: int, mode: str, k: int = 0, pattern: Optional[Pattern] = None,
            primitive: bool = False, prefix: Sequence[int] = (),
            stop_at: Optional[int] = None) -> Iterator[Tuple[List[int], List[int]]]:
    """
    Iterative Tiefensuche über Wörter der Länge n.

    mode "all":  Cayley-Permutationen (Buchstaben 1..n, Bild ist ein Anfangsstück)
    mode "max":  Surjektionen auf [k]
    mode "kary": alle Wörter über [k]

    Liefert (word, used) mit dem *gemeinsam genutzten* Puffer; Aufrufer
    dürfen ihn nur lesen oder kopieren. Mit stop_at werden die gültigen
    Präfixe dieser Länge geliefert statt vollständiger Wörter.
    """
    depth = n if stop_at is None else min(stop_at, n)
    bound = n if mode == "all" else k
    word = [0] * max(n, 1)
    used = [0] * (bound + 2)
    top = [0] * (n + 1)    # laufendes Maximum vor Position i
    miss = [0] * (n + 1)   # "all": Lücken in 1..max; "max": ungenutzte Werte in 1..k
    if mode == "max":
        miss[0] = k

    def admissible(i: int, x: int) -> Optional[Tuple[int, int]]:
        rest = n - i - 1
        m = top[i]
        if mode == "all":
            if x <= m:
                gaps = miss[i] - (1 if used[x] == 0 else 0)
            else:
                gaps = miss[i] + x - m - 1
            if gaps > rest:
                return None
            return max(m, x), gaps
        if mode == "max":
            gaps = miss[i] - (1 if used[x] == 0 else 0)
            if gaps > rest:
                return None
            return max(m, x), gaps
        return max(m, x), 0

    def push(i: int, x: int) -> bool:
        state = admissible(i, x)
        if state is None:
            return False
        if primitive and i > 0 and word[i - 1] == x:
            return False
        word[i] = x
        if pattern is not None and ends_with_occurrence(word, i, pattern):
            return False
        used[x] += 1
        top[i + 1], miss[i + 1] = state
        return True

    if n == 0:
        if mode != "max" or k == 0:
            if not primitive:
                yield [], used
        return
    if mode in ("max", "kary") and k == 0:
        return

    start = len(prefix)
    for i, x in enumerate(prefix):
        if not 1 <= x <= bound or not push(i, x):
            return
    if start >= depth:
        yield word[:depth], used
        return

    # cand[i]: nächster zu probierender Buchstabe an Position i
    cand = [1] * (n + 1)
    i = start
    while i >= start:
        x = cand[i]
        if x > bound:
            i -= 1
            if i >= start:
                used[word[i]] -= 1
                cand[i] = word[i] + 1
            continue
        cand[i] = x + 1
        if mode == "all" and x > top[i] + 1 + (n - i - 1) - miss[i]:
            cand[i] = bound + 1
            continue
        if not push(i, x):
            continue
        if i + 1 == depth:
            yield word[:depth] if depth < n else word, used
            used[x] -= 1
        else:
            i += 1
            cand[i] = 1


def _count_serial(n: int, mode: str, k: int, pattern: Optional[Pattern], primitive: bool,
                  prefix: Sequence[int] = ()) -> int:
    total = 0
    for _ in _search(n, mode, k, pattern, primitive, prefix):
        total += 1
    return total


def _count_worker(job: Tuple[int, str, int, Optional[Pattern], bool, Tuple[int, ...]]) -> int:
    n, mode, k, pattern, primitive, prefix = job
    return _count_serial(n, mode, k, pattern, primitive, prefix)


def _prefixes(n: int, mode: str, k: int, pattern: Optional[Pattern], primitive: bool,
              depth: int) -> List[Tuple[int, ...]]:
    return [tuple(w) for w, _ in _search(n, mode, k, pattern, primitive, stop_at=depth)]


@lru_cache(maxsize=None)
def _count(n: int, mode: str, k: int, pattern: Optional[Pattern], primitive: bool) -> int:
    workers = _settings["workers"]
    depth = _settings["split_depth"]
    if workers > 1 and n >= _settings["parallel_min_length"] and n > depth:
        jobs = [(n, mode, k, pattern, primitive, pre)
                for pre in _prefixes(n, mode, k, pattern, primitive, depth)]
        logger.debug(f"🔍 Parallele Zählung: n={n}, mode={mode}, k={k}, "
                     f"{len(jobs)} Präfixe auf {workers} Worker")
        with Pool(processes=workers) as pool:
            return sum(pool.map(_count_worker, jobs))
    return _count_serial(n, mode, k, pattern, primitive)


def _as_pattern(p: Optional[Sequence[int]]) -> Optional[Pattern]:
    return None if p is None else tuple(p)


# ---------------------------------------------------------------------------
# Generatoren
# ---------------------------------------------------------------------------

def gen_cayley(n: int, pattern: Optional[Sequence[int]] = None) -> Iterator[Word]:
    """Alle Cayley-Permutationen der Länge n (optional p-frei), lexikographisch."""
    for w, _ in _search(n, "all", pattern=_as_pattern(pattern)):
        yield tuple(w)


def gen_cayley_with_max(n: int, k: int, pattern: Optional[Sequence[int]] = None) -> Iterator[Word]:
    """Surjektionen [n] → [k] als Wörter, lexikographisch."""
    for w, _ in _search(n, "max", k, _as_pattern(pattern)):
        yield tuple(w)


def gen_kary(n: int, k: int, pattern: Optional[Sequence[int]] = None) -> Iterator[Word]:
    """Alle k^n Wörter über [k] der Länge n (optional p-frei)."""
    for w, _ in _search(n, "kary", k, _as_pattern(pattern)):
        yield tuple(w)


def gen_primitive(n: int, pattern: Optional[Sequence[int]] = None) -> Iterator[Word]:
    """Primitive Cayley-Permutationen der Länge n (für n = 0 leer)."""
    for w, _ in _search(n, "all", pattern=_as_pattern(pattern), primitive=True):
        yield tuple(w)


def gen_restricted_growth(n: int) -> Iterator[Word]:
    """Restricted-Growth-Wörter (Mengenpartitionen): nächster Buchstabe ≤ bisheriges Maximum + 1."""
    word: List[int] = []

    def grow(m: int) -> Iterator[Word]:
        if len(word) == n:
            yield tuple(word)
            return
        for x in range(1, m + 2):
            word.append(x)
            yield from grow(max(m, x))
            word.pop()

    yield from grow(0)


# ---------------------------------------------------------------------------
# Zählungen
# ---------------------------------------------------------------------------

def count_cayley(n: int) -> int:
    return _count(n, "all", 0, None, False)


def count_avoiders(p: Sequence[int], n: int) -> int:
    """|Cay(p)[n]|"""
    return _count(n, "all", 0, _as_pattern(p), False)


def count_avoiders_with_max(p: Optional[Sequence[int]], n: int, k: int) -> int:
    """|Cay^k(p)[n]| (Maximum genau k)."""
    return _count(n, "max", k, _as_pattern(p), False)


def count_kary_avoiders(p: Optional[Sequence[int]], n: int, k: int) -> int:
    """|[k]^n(p)|"""
    return _count(n, "kary", k, _as_pattern(p), False)


def count_primitive(n: int) -> int:
    return _count(n, "all", 0, None, True)


def count_primitive_avoiders(p: Sequence[int], n: int) -> int:
    """|Prim(p)[n]|"""
    return _count(n, "all", 0, _as_pattern(p), True)


def count_restricted_growth(n: int, primitive: bool = False) -> int:
    words = gen_restricted_growth(n)
    if primitive:
        return sum(1 for w in words if w and all(a != b for a, b in zip(w, w[1:])))
    return sum(1 for _ in words)


def count_even_permutations(n: int, odd: bool = False) -> int:
    """Anzahl gerader (bzw. ungerader) Permutationen von [n] per Inversionszählung."""
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        if (inversions % 2 == 1) == odd:
            total += 1
    return total


def content_indexed_counts(p: Optional[Sequence[int]], n: int, k: int,
                           surjective: bool = False) -> Counter:
    """
    Anzahl der p-freien Wörter in [k]^n je Inhalt.

    Schlüssel ist der Inhalt als sortiertes Buchstabentupel, z.B. (1, 1, 2).
    Mit surjective=True werden nur Wörter mit Bild genau [k] gezählt
    (die Familie Cay^k(p)[n]). Fehlende Schlüssel haben den Wert 0.
    """
    result: Counter = Counter()
    mode = "max" if surjective else "kary"
    for _, used in _search(n, mode, k, _as_pattern(p)):
        key = tuple(v for v in range(1, k + 1) for _ in range(used[v]))
        result[key] += 1
    return result


# ---------------------------------------------------------------------------
# Folgen und Tabellen
# ---------------------------------------------------------------------------

def cayley_counts(N: int) -> List[int]:
    return [count_cayley(n) for n in range(N + 1)]


def avoider_counts(p: Sequence[int], N: int) -> List[int]:
    return [count_avoiders(p, n) for n in range(N + 1)]


def primitive_counts(N: int) -> List[int]:
    return [count_primitive(n) for n in range(N + 1)]


def primitive_avoider_counts(p: Sequence[int], N: int) -> List[int]:
    return [count_primitive_avoiders(p, n) for n in range(N + 1)]


@dataclass
class CountTable:
    """Zähltabelle counts[n, k] mit exakten Ganzzahlen (numpy object-Array)."""

    pattern: Optional[Pattern]
    mode: str
    n_max: int
    k_max: int
    counts: np.ndarray = field(repr=False)

    @property
    def indexed_by_k(self) -> bool:
        return self.mode in ("max", "kary")

    def marginal(self) -> List[int]:
        """Zeilensummen über k (für "max" die unbeschränkte Anzahl |Cay(p)[n]|)."""
        return [int(x) for x in self.counts.sum(axis=1)]

    def rows(self) -> Iterator[Tuple[int, Optional[int], int]]:
        for n in range(self.n_max + 1):
            if self.indexed_by_k:
                for k in range(self.k_max + 1):
                    yield n, k, int(self.counts[n, k])
            else:
                yield n, None, int(self.counts[n, 0])

    def to_tsv(self) -> str:
        header = "n\tk\tcount" if self.indexed_by_k else "n\tcount"
        lines = [header]
        for n, k, c in self.rows():
            lines.append(f"{n}\t{k}\t{c}" if k is not None else f"{n}\t{c}")
        return "\n".join(lines) + "\n"

    def to_bfile(self) -> str:
        """OEIS-b-file der k-Randverteilung: "n a(n)" pro Zeile."""
        return "".join(f"{n} {a}\n" for n, a in enumerate(self.marginal()))

    def describe(self) -> str:
        name = pattern_name(self.pattern) if self.pattern else "-"
        return f"CountTable(pattern={name}, mode={self.mode}, N={self.n_max}, K={self.k_max})"


def count_table(p: Optional[Sequence[int]], N: int, K: int = 0, mode: str = "all") -> CountTable:
    """Baut die Zähltabelle für n ≤ N (und k ≤ K in den Modi "max"/"kary")."""
    if mode not in MODES:
        raise ValueError(f"Unbekannter Modus: {mode}")
    pattern = _as_pattern(p)
    width = K + 1 if mode in ("max", "kary") else 1
    counts = np.zeros((N + 1, width), dtype=object)
    for n in range(N + 1):
        if mode == "all":
            counts[n, 0] = count_cayley(n) if pattern is None else count_avoiders(pattern, n)
        elif mode == "primitive":
            counts[n, 0] = count_primitive(n) if pattern is None else count_primitive_avoiders(pattern, n)
        elif mode == "max":
            for k in range(K + 1):
                counts[n, k] = count_avoiders_with_max(pattern, n, k)
        else:
            for k in range(K + 1):
                counts[n, k] = count_kary_avoiders(pattern, n, k)
    table = CountTable(pattern, mode, N, K, counts)
    logger.debug(f"📊 {table.describe()} erstellt")
    return table


def kary_from_max(table: CountTable, n: int, k: int) -> int:
    """|[k]^n(p)| = Σ_i C(k, i)·|Cay^i(p)[n]| aus einer "max"-Tabelle."""
    return sum(comb(k, i) * int(table.counts[n, i]) for i in range(min(k, table.k_max) + 1))


def surjection_counts(n: int, K: int) -> Dict[int, int]:
    """|Cay^k[n]| für k ≤ K (ohne Muster)."""
    return {k: count_avoiders_with_max(None, n, k) for k in range(K + 1)}
