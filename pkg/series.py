#!/usr/bin/env python3
"""
Exakte Spezies-Arithmetik auf Zählfolgen.

CountSeq hält a_0..a_N (vorzeichenbehaftete Ganzzahlen, also auch virtuelle
Spezies), RatSeries hält rationale Koeffizienten in EGF- oder OGF-Sicht.
Jede Operation kennt ihre gültige Abbruchordnung; es wird nie über die
Ordnung der Operanden hinaus gelesen. Keine Gleitkommazahlen.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, List, Sequence, Tuple

logger = logging.getLogger('CayleySeries')


class SeriesError(ValueError):
    """Unzulässige Reihenoperation (Konstante ≠ 0 bei Komposition, nicht ganzzahlig, …)."""


# ---------------------------------------------------------------------------
# Datentypen
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CountSeq:
    """Zählfolge |F[0]|, …, |F[N]| einer (virtuellen) L-Spezies."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("Eine Zählfolge braucht mindestens a_0")

    @classmethod
    def of(cls, values: Iterable[int]) -> "CountSeq":
        return cls(tuple(int(v) for v in values))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "CountSeq") -> "CountSeq":
        return add(self, other)

    def __sub__(self, other: "CountSeq") -> "CountSeq":
        return subtract(self, other)

    def __neg__(self) -> "CountSeq":
        return scalar_mul(-1, self)

    def truncate(self, N: int) -> "CountSeq":
        if N > self.order:
            raise SeriesError(f"Ordnung {N} übersteigt die gültige Ordnung {self.order}")
        return CountSeq(self.coeffs[:N + 1])

    def to_egf(self) -> "RatSeries":
        return RatSeries(tuple(Fraction(a, factorial(n)) for n, a in enumerate(self.coeffs)), "egf")

    def to_ogf(self) -> "RatSeries":
        return RatSeries(tuple(Fraction(a) for a in self.coeffs), "ogf")

    def to_list(self) -> List[int]:
        return list(self.coeffs)


@dataclass(frozen=True)
class RatSeries:
    """Abgeschnittene Potenzreihe c_0..c_N mit rationalen Koeffizienten."""

    coeffs: Tuple[Fraction, ...]
    view: str = "ogf"

    def __post_init__(self):
        if self.view not in ("egf", "ogf"):
            raise SeriesError(f"Unbekannte Sicht: {self.view}")
        if not self.coeffs:
            raise SeriesError("Eine Reihe braucht mindestens c_0")

    @classmethod
    def of(cls, values: Iterable, view: str = "ogf") -> "RatSeries":
        return cls(tuple(Fraction(v) for v in values), view)

    @classmethod
    def polynomial(cls, values: Sequence, N: int, view: str = "ogf") -> "RatSeries":
        padded = list(values)[:N + 1] + [0] * max(0, N + 1 - len(values))
        return cls.of(padded, view)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "RatSeries") -> int:
        if self.view != other.view:
            raise SeriesError(f"Sichten passen nicht zusammen: {self.view} vs {other.view}")
        return min(self.order, other.order)

    def __add__(self, other: "RatSeries") -> "RatSeries":
        N = self._check(other)
        return RatSeries(tuple(self[n] + other[n] for n in range(N + 1)), self.view)

    def __sub__(self, other: "RatSeries") -> "RatSeries":
        N = self._check(other)
        return RatSeries(tuple(self[n] - other[n] for n in range(N + 1)), self.view)

    def __mul__(self, other: "RatSeries") -> "RatSeries":
        N = self._check(other)
        return RatSeries(tuple(sum((self[i] * other[n - i] for i in range(n + 1)), Fraction(0))
                               for n in range(N + 1)), self.view)

    def scale(self, c) -> "RatSeries":
        c = Fraction(c)
        return RatSeries(tuple(c * a for a in self.coeffs), self.view)

    def add_constant(self, c) -> "RatSeries":
        return RatSeries((self[0] + Fraction(c),) + self.coeffs[1:], self.view)

    def reciprocal(self) -> "RatSeries":
        """Multiplikatives Inverses; verlangt c_0 ≠ 0."""
        if self[0] == 0:
            raise SeriesError("Reziproke einer Reihe mit c_0 = 0 existiert nicht")
        inv0 = 1 / self[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = sum((self[i] * out[n - i] for i in range(1, n + 1)), Fraction(0))
            out.append(-acc * inv0)
        return RatSeries(tuple(out), self.view)

    def compose(self, inner: "RatSeries") -> "RatSeries":
        """self(inner) per Horner-Schema; verlangt inner[0] = 0."""
        N = self._check(inner)
        if inner[0] != 0:
            raise SeriesError("Komposition verlangt einen inneren Konstantterm 0")
        result = [Fraction(0)] * (N + 1)
        for a in reversed(self.coeffs[:N + 1]):
            product = [sum((result[i] * inner[n - i] for i in range(n + 1)), Fraction(0))
                       for n in range(N + 1)]
            product[0] += a
            result = product
        return RatSeries(tuple(result), self.view)

    def to_counts(self) -> CountSeq:
        """Zurück zu Ganzzahlen (EGF: c_n·n!); nicht ganzzahlige Werte sind ein Fehler."""
        values = []
        for n, c in enumerate(self.coeffs):
            value = c * factorial(n) if self.view == "egf" else c
            if value.denominator != 1:
                raise SeriesError(f"Koeffizient {n} ist nicht ganzzahlig: {value}")
            values.append(int(value))
        return CountSeq(tuple(values))


# ---------------------------------------------------------------------------
# Bausteine
# ---------------------------------------------------------------------------

def One(N: int) -> CountSeq:
    return CountSeq.of([1] + [0] * N)


def X(N: int) -> CountSeq:
    return CountSeq.of([1 if n == 1 else 0 for n in range(N + 1)])


def E(N: int) -> CountSeq:
    """Mengen: e^x"""
    return CountSeq.of([1] * (N + 1))


def E_plus(N: int) -> CountSeq:
    return CountSeq.of([0] + [1] * N)


def E_even(N: int) -> CountSeq:
    return CountSeq.of([1 if n % 2 == 0 else 0 for n in range(N + 1)])


def E_odd(N: int) -> CountSeq:
    return CountSeq.of([1 if n % 2 == 1 else 0 for n in range(N + 1)])


def E_exactly(k: int, N: int) -> CountSeq:
    return CountSeq.of([1 if n == k else 0 for n in range(N + 1)])


def L(N: int) -> CountSeq:
    """Lineare Ordnungen (als L-Spezies gleich den Permutationen S): n!"""
    return CountSeq.of([factorial(n) for n in range(N + 1)])


def Cyc(N: int) -> CountSeq:
    """Zyklen: (n−1)! für n ≥ 1, EGF −log(1−x)."""
    return CountSeq.of([0] + [factorial(n - 1) for n in range(1, N + 1)])


def Alt(N: int) -> CountSeq:
    """Alternierende Gruppe: 1, 1, n!/2 für n ≥ 2."""
    return CountSeq.of([1 if n < 2 else factorial(n) // 2 for n in range(N + 1)])


def AltC(N: int) -> CountSeq:
    """Ungerade Permutationen: 0, 0, n!/2 für n ≥ 2."""
    return CountSeq.of([0 if n < 2 else factorial(n) // 2 for n in range(N + 1)])


def catalan_numbers(N: int) -> CountSeq:
    return CountSeq.of([comb(2 * n, n) // (n + 1) for n in range(N + 1)])


def constant(c: int, N: int) -> CountSeq:
    return scalar_mul(c, One(N))


def fubini(N: int) -> CountSeq:
    """Bal = L(E₊): 1, 1, 3, 13, 75, 541, …"""
    return compose(L(N), E_plus(N))


def bell(N: int) -> CountSeq:
    """Par = E(E₊): 1, 1, 2, 5, 15, 52, …"""
    return compose(E(N), E_plus(N))


def derangements(N: int) -> CountSeq:
    """Der = E⁻¹·L"""
    return species_product(reciprocal(E(N)), L(N))


# ---------------------------------------------------------------------------
# Operationen auf Zählfolgen
# ---------------------------------------------------------------------------

def _order(*seqs: CountSeq) -> int:
    return min(s.order for s in seqs)


def add(A: CountSeq, B: CountSeq) -> CountSeq:
    N = _order(A, B)
    return CountSeq(tuple(A[n] + B[n] for n in range(N + 1)))


def subtract(A: CountSeq, B: CountSeq) -> CountSeq:
    N = _order(A, B)
    return CountSeq(tuple(A[n] - B[n] for n in range(N + 1)))


def scalar_mul(c: int, A: CountSeq) -> CountSeq:
    return CountSeq(tuple(c * a for a in A))


def scalar_div(A: CountSeq, c: int) -> CountSeq:
    """Exakte Division durch eine ganze Zahl (z.B. ½(S + 1 + X))."""
    out = []
    for n, a in enumerate(A):
        q, r = divmod(a, c)
        if r:
            raise SeriesError(f"a_{n} = {a} ist nicht durch {c} teilbar")
        out.append(q)
    return CountSeq(tuple(out))


def plus_part(A: CountSeq) -> CountSeq:
    """F₊: F ohne die Struktur auf der leeren Menge."""
    return CountSeq((0,) + A.coeffs[1:])


def species_product(A: CountSeq, B: CountSeq) -> CountSeq:
    """c_n = Σ_i C(n, i)·a_i·b_{n−i} (Binomialfaltung)."""
    N = _order(A, B)
    return CountSeq(tuple(sum(comb(n, i) * A[i] * B[n - i] for i in range(n + 1))
                          for n in range(N + 1)))


def power(A: CountSeq, k: int) -> CountSeq:
    result = One(A.order)
    for _ in range(k):
        result = species_product(result, A)
    return result


def compose(A: CountSeq, B: CountSeq) -> CountSeq:
    """A(B) über rationale EGFs; verlangt b_0 = 0."""
    if B[0] != 0:
        raise SeriesError("Komposition A∘B verlangt b_0 = 0")
    return A.to_egf().compose(B.to_egf()).to_counts()


def derivative(A: CountSeq) -> CountSeq:
    """a'_n = a_{n+1}; die Ordnung sinkt um eins."""
    if A.order < 1:
        raise SeriesError("Ableitung einer Folge der Ordnung 0 hat keine gültigen Koeffizienten")
    return CountSeq(A.coeffs[1:])


def integral(A: CountSeq) -> CountSeq:
    """Verschiebung nach rechts mit Konstante 0; die Ordnung steigt um eins."""
    return CountSeq((0,) + A.coeffs)


def pointing(A: CountSeq) -> CountSeq:
    """F•: a_n ↦ n·a_n"""
    return CountSeq(tuple(n * a for n, a in enumerate(A)))


def ordinal_product(A: CountSeq, B: CountSeq) -> CountSeq:
    """F⊙G: c_n = Σ_{i+j=n} a_i·b_j"""
    N = _order(A, B)
    return CountSeq(tuple(sum(A[i] * B[n - i] for i in range(n + 1)) for n in range(N + 1)))


def convolution(A: CountSeq, B: CountSeq) -> CountSeq:
    """F*G = F⊙X⊙G: c_0 = 0, c_n = Σ_{i+j=n−1} a_i·b_j; gültig bis min(N_A, N_B)+1."""
    N = _order(A, B) + 1
    return CountSeq((0,) + tuple(sum(A[i] * B[n - 1 - i] for i in range(n))
                                 for n in range(1, N + 1)))


def reciprocal(A: CountSeq) -> CountSeq:
    """Inverses bezüglich des Spezies-Produkts; ganzzahlig genau dann sicher, wenn a_0 = ±1."""
    if A[0] == 0:
        raise SeriesError("Reziproke verlangt a_0 ≠ 0")
    if A[0] in (1, -1):
        a0 = A[0]
        out = [a0]
        for n in range(1, A.order + 1):
            acc = sum(comb(n, i) * A[i] * out[n - i] for i in range(1, n + 1))
            out.append(-acc * a0)
        return CountSeq(tuple(out))
    return A.to_egf().reciprocal().to_counts()


def divide(A: CountSeq, B: CountSeq) -> CountSeq:
    return species_product(A, reciprocal(B))


def binomial_transform(G: CountSeq) -> CountSeq:
    """|F[n]| = Σ_{j=1}^{n} C(n−1, j−1)·|G[j]| für n ≥ 1 und |F[0]| = 1 (F = 1 + ∫(E·G'))."""
    return CountSeq((1,) + tuple(sum(comb(n - 1, j - 1) * G[j] for j in range(1, n + 1))
                                 for n in range(1, G.order + 1)))


def inverse_binomial_transform(F: CountSeq) -> CountSeq:
    """|G[n]| = Σ_{j=1}^{n} (−1)^{n−j}·C(n−1, j−1)·|F[j]| für n ≥ 0 (G = ∫(E⁻¹·F'))."""
    return CountSeq(tuple(sum((-1) ** (n - j) * comb(n - 1, j - 1) * F[j] for j in range(1, n + 1))
                          for n in range(F.order + 1)))


def solve_fixed_point(rhs: Callable[[CountSeq], CountSeq], N: int) -> CountSeq:
    """
    Löst F = rhs(F) koeffizientenweise, wenn rhs jeden Koeffizienten a_n nur
    aus a_0..a_{n−1} bestimmt (z.B. F = 1 + F*F).
    """
    current = CountSeq.of([0] * (N + 1))
    for _ in range(N + 1):
        current = rhs(current).truncate(N)
    return current


# ---------------------------------------------------------------------------
# OGF-Transformationen
# ---------------------------------------------------------------------------

def egf_to_ogf(A: RatSeries) -> RatSeries:
    if A.view != "egf":
        raise SeriesError("egf_to_ogf erwartet eine EGF")
    return RatSeries(tuple(c * factorial(n) for n, c in enumerate(A.coeffs)), "ogf")


def ogf_to_egf(A: RatSeries) -> RatSeries:
    if A.view != "ogf":
        raise SeriesError("ogf_to_egf erwartet eine OGF")
    return RatSeries(tuple(c / factorial(n) for n, c in enumerate(A.coeffs)), "egf")


def ogf_shift(A: RatSeries) -> RatSeries:
    """Â(x) ↦ x·Â(x) (entspricht dem Integral auf EGF-Seite)."""
    return RatSeries((Fraction(0),) + A.coeffs, A.view)


def ogf_divshift(A: RatSeries) -> RatSeries:
    """Â(x) ↦ (Â(x) − â_0)/x (entspricht der Ableitung auf EGF-Seite)."""
    if A.order < 1:
        raise SeriesError("ogf_divshift braucht mindestens Ordnung 1")
    return RatSeries(A.coeffs[1:], A.view)


def ogf_substitute_x_over_1px(A: RatSeries) -> RatSeries:
    """Â(x) ↦ Â(x/(1+x))/(1+x), die OGF-Form von B(x) = e^{−x}·A(x)."""
    N = A.order
    inner = RatSeries.of([0] + [(-1) ** (n - 1) for n in range(1, N + 1)], A.view)
    one_plus_x = RatSeries.polynomial([1, 1], N, A.view)
    return A.compose(inner) * one_plus_x.reciprocal()


def series_sqrt(A: RatSeries) -> RatSeries:
    """Quadratwurzel S mit S·S = A bis zur Ordnung von A; verlangt c_0 = 1."""
    if A[0] != 1:
        raise SeriesError("series_sqrt verlangt c_0 = 1")
    out = [Fraction(1)]
    for n in range(1, A.order + 1):
        acc = sum((out[i] * out[n - i] for i in range(1, n)), Fraction(0))
        out.append((A[n] - acc) / 2)
    return RatSeries(tuple(out), A.view)


def first_mismatch(A: Sequence, B: Sequence, upto: int) -> int:
    """Erster Index ≤ upto, an dem A und B verschieden sind, sonst −1."""
    for n in range(upto + 1):
        if A[n] != B[n]:
            return n
    return -1
