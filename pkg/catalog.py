#!/usr/bin/env python3
"""
Katalog: geschlossene Formeln, Rekursionen und benannte Identitätschecks.

Jeder Check berechnet beide Seiten unabhängig voneinander (Enumeration
gegen Reihenrechnung oder Formel gegen Rekursion) und meldet bei einem
Fehlschlag den ersten abweichenden Index. Vermutungen laufen als eigene
Einträge mit Status CONJECTURE und gelten nur als "bis N geprüft".
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import enumeration
import series
from core import Pattern, fixed_points, pattern_name
from series import CountSeq, RatSeries

logger = logging.getLogger('CayleyCatalog')

THEOREM = "THEOREM"
CONJECTURE = "CONJECTURE"
EXPECTED_FAIL = "EXPECTED-FAIL"

PASS = "PASS"
FAIL = "FAIL"

ENUM_BOUND = 8
SERIES_BOUND = 12
WORD_BOUND = 7

S3: Tuple[Pattern, ...] = tuple(tuple(p) for p in permutations((1, 2, 3)))
PRIMITIVE_TEST_PATTERNS: Tuple[Pattern, ...] = ((2, 1), (2, 1, 2)) + tuple(sorted(S3))


class UnknownNameError(KeyError):
    """Unbekannter Name einer Identität, Bijektion oder Vermutung."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unbekannter Name"


# ---------------------------------------------------------------------------
# Formeln
# ---------------------------------------------------------------------------

def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def fubini(N: int) -> CountSeq:
    """1, 1, 3, 13, 75, 541, … über Bal = L(E₊)."""
    return series.fubini(N)


def cay_1k(k: int, N: int) -> CountSeq:
    """|Cay(1^k)[n]| = L(E_1 + … + E_{k−1}): Blöcke der Größe höchstens k−1."""
    if k < 2:
        raise ValueError(f"cay_1k verlangt k ≥ 2, erhalten: {k}")
    blocks = CountSeq.of([0] * (N + 1))
    for i in range(1, k):
        blocks = blocks + series.E_exactly(i, N)
    return series.compose(series.L(N), blocks)


def cay111_closed_form(n: int) -> int:
    """
    n!·((1+√3)^{n+1} − (1−√3)^{n+1}) / (2^{n+1}·√3), exakt in Z[√3].

    Mit (1+√3)^{n+1} = p + q√3 ist die Differenz 2q√3, das Ergebnis also n!·q/2^n.
    """
    p, q = 1, 0
    for _ in range(n + 1):
        p, q = p + 3 * q, p + q
    value, remainder = divmod(factorial(n) * q, 2 ** n)
    if remainder:
        raise ArithmeticError(f"Cay(111)-Formel bei n={n} nicht ganzzahlig")
    return value


def cay112_count(n: int) -> int:
    """1 für n = 0, sonst (n+1)!/2."""
    return 1 if n == 0 else factorial(n + 1) // 2


def cay21_count(n: int) -> int:
    return 1 if n == 0 else 2 ** (n - 1)


def cay231_recurrence(N: int) -> CountSeq:
    """a_0 = a_1 = 1, a_{n+1} = Σ_{i=0}^{n−1} (4a_i − 1)·a_{n−i}."""
    a = [1, 1][:N + 1]
    for n in range(1, N):
        a.append(sum((4 * a[i] - 1) * a[n - i] for i in range(n)))
    return CountSeq.of(a)


def cay123_birmajer(n: int) -> int:
    """Σ_j (−1)^j·2^{n−j−1}·C(n−j, j)·C_{n−j}; für n = 0 per Konvention 1."""
    if n == 0:
        return 1
    total = Fraction(0)
    for j in range(n + 1):
        total += (-1) ** j * Fraction(2) ** (n - j - 1) * comb(n - j, j) * catalan(n - j)
    return _as_int(total, f"Birmajer-Formel bei n={n}")


def kary_burstein(k: int, n: int) -> int:
    """
    |[k]^n(p)| für p ∈ S₃:
    2^{n−2(k−2)} · Σ_{m=0}^{k−2} Σ_{j=m}^{k−2} C_j·C(2(k−2−j), k−2−j)·C(n+2m, n).

    Für k = 0 und k = 1 werden die tatsächlichen Wortanzahlen geliefert.
    """
    if k == 0:
        return 1 if n == 0 else 0
    if k == 1:
        return 1
    inner = sum(catalan(j) * comb(2 * (k - 2 - j), k - 2 - j) * comb(n + 2 * m, n)
                for m in range(k - 1) for j in range(m, k - 1))
    return _as_int(Fraction(2) ** (n - 2 * (k - 2)) * inner, f"Burstein-Formel bei k={k}, n={n}")


def cay_s3_kasraoui(n: int) -> int:
    """Σ_{k=1}^{n} Σ_{j=1}^{k} (−1)^{k−j}·C(k, j)·|[j]^n(p)|; für n = 0 per Konvention 1."""
    if n == 0:
        return 1
    return sum((-1) ** (k - j) * comb(k, j) * kary_burstein(j, n)
               for k in range(1, n + 1) for j in range(1, k + 1))


def s3_ogf(N: int) -> RatSeries:
    """½ + 1/(1 + √(1 − 8x + 8x²))"""
    root = series.series_sqrt(RatSeries.polynomial([1, -8, 8], N))
    return root.add_constant(1).reciprocal().add_constant(Fraction(1, 2))


def _schroeder_root(N: int) -> RatSeries:
    return series.series_sqrt(RatSeries.polynomial([1, -6, 1], N))


def prim231_ogf(N: int) -> RatSeries:
    """x·(2/(1 + x + √(1 − 6x + x²)))²"""
    denominator = _schroeder_root(N) + RatSeries.polynomial([1, 1], N)
    inner = denominator.reciprocal().scale(2)
    return RatSeries(series.ogf_shift(inner * inner).coeffs[:N + 1], "ogf")


def prim231_closed(N: int) -> RatSeries:
    """(1 + x)/(1 + x + √(1 − 6x + x²)) − ½"""
    one_plus_x = RatSeries.polynomial([1, 1], N)
    return (one_plus_x * (_schroeder_root(N) + one_plus_x).reciprocal()).add_constant(Fraction(-1, 2))


def prim212_series(N: int) -> CountSeq:
    """Prim(212) = ∫(E⁻¹·L³)"""
    if N < 1:
        return CountSeq.of([0])
    body = series.species_product(series.reciprocal(series.E(N - 1)), series.power(series.L(N - 1), 3))
    return series.integral(body)


def ogf_chain_from_counts(counts: CountSeq) -> RatSeries:
    """∫(E⁻¹·F') auf OGF-Seite: x·[(Â − â₀)/x](x/(1+x))/(1+x)."""
    return series.ogf_shift(series.ogf_substitute_x_over_1px(series.ogf_divshift(counts.to_ogf())))


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} ist nicht ganzzahlig: {value}")
    return int(value)


# ---------------------------------------------------------------------------
# Tabelle für Muster der Länge zwei und drei
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    patterns: Tuple[Pattern, ...]
    species: str
    series: str
    enumeration: str
    oeis: str
    formula: Callable[[int], int] = field(compare=False, repr=False)


PATTERN_TABLE: Tuple[TableRow, ...] = (
    TableRow(((1, 1),), "L", "1/(1-x)", "n!", "A000142", factorial),
    TableRow(((1, 2), (2, 1)), "Eeven.E", "(e^{2x}+1)/2", "2^{n-1}", "A011782", cay21_count),
    TableRow(((1, 1, 1),), "L o (E[1]+E[2])", "2/(2-2x-x^2)",
             "n!((1+√3)^{n+1}-(1-√3)^{n+1})/(2^{n+1}√3)", "A080599", cay111_closed_form),
    TableRow(((2, 1, 2), (1, 2, 1), (1, 1, 2), (2, 1, 1), (2, 2, 1), (1, 2, 2)), "Alt'",
             "(x^2-2x+2)/(2(x-1)^2)", "(n+1)!/2", "A001710", cay112_count),
    TableRow(((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 2, 1), (3, 1, 2)), "-",
             "1/2 + 1/(1+√(1-8x+8x^2))", "Σ_j (-1)^j 2^{n-j-1} C(n-j,j) C_{n-j}", "A226316",
             cay123_birmajer),
)


def formula_for(p: Sequence[int]) -> Optional[Tuple[Callable[[int], int], str]]:
    """Formel-Fastpath für |Cay(p)[n]|, falls p in der Tabelle steht: (Funktion, Bezeichnung)."""
    key = tuple(p)
    for row in PATTERN_TABLE:
        if key in row.patterns:
            return row.formula, row.enumeration
    if len(key) >= 2 and all(a == 1 for a in key):
        k = len(key)
        return (lambda n: cay_1k(k, n)[n]), f"L(E_1+…+E_{k - 1})"
    return None


# ---------------------------------------------------------------------------
# Identitätschecks
# ---------------------------------------------------------------------------

Comparison = Tuple[str, Sequence[int], Sequence[int]]


@dataclass
class IdentityCheck:
    name: str
    bound: int
    verdict: str
    reference: str
    status: str = THEOREM
    compared: int = 0
    mismatch: Optional[Dict] = None
    requested_bound: Optional[int] = None

    @property
    def ok(self) -> bool:
        """Nur Sätze beeinflussen den Exit-Status."""
        return self.status != THEOREM or self.verdict == PASS

    @property
    def label(self) -> str:
        if self.status == CONJECTURE and self.verdict == PASS:
            return f"verified up to {self.bound}"
        return self.verdict

    def to_dict(self) -> Dict:
        result = {
            "name": self.name,
            "bound": self.bound,
            "verdict": self.verdict,
            "status": self.status,
            "reference": self.reference,
        }
        if self.requested_bound is not None:
            result["requested_bound"] = self.requested_bound
        if self.mismatch is not None:
            result["mismatch"] = {k: v if isinstance(v, str) else str(v) for k, v in self.mismatch.items()}
        return result


@dataclass(frozen=True)
class Identity:
    name: str
    reference: str
    default_bound: int
    status: str
    sides: Callable[[int], List[Comparison]] = field(repr=False)
    max_bound: Optional[int] = None


REGISTRY: Dict[str, Identity] = {}


def identity(name: str, reference: str, bound: int = ENUM_BOUND, status: str = THEOREM,
             max_bound: Optional[int] = None):
    """
    Registriert eine Funktion N → [(Bezeichnung, links, rechts), …].

    max_bound deckelt die Schranke teurer Checks; der Bericht nennt dann die
    tatsächlich geprüfte Schranke und die angefragte getrennt.
    """

    def decorator(fn: Callable[[int], List[Comparison]]):
        REGISTRY[name] = Identity(name, reference, bound, status, fn, max_bound)
        return fn

    return decorator


def identity_names() -> List[str]:
    return list(REGISTRY)


def _cmp(label: str, left: Sequence, right: Sequence) -> Comparison:
    return label, list(left), list(right)


def verify_identity(name: str, N: Optional[int] = None) -> IdentityCheck:
    """
    Führt einen registrierten Check aus.

    Args:
        name (str): Registry-Name, z.B. "prim_sq"
        N (int): Schranke; None nimmt die Standardschranke des Checks

    Returns:
        IdentityCheck: PASS genau dann, wenn alle Vergleiche übereinstimmen

    Raises:
        UnknownNameError: unbekannter Name
    """
    if name not in REGISTRY:
        raise UnknownNameError(f"Unbekannte Identität: {name} (bekannt: {', '.join(REGISTRY)})")
    entry = REGISTRY[name]
    bound = entry.default_bound if N is None else N
    if bound < 1:
        raise ValueError(f"Schranke muss positiv sein: {bound}")
    requested = None
    if entry.max_bound is not None and bound > entry.max_bound:
        logger.warning(f"⚠️ {name}: Schranke {bound} auf {entry.max_bound} gedeckelt")
        requested, bound = bound, entry.max_bound
    logger.info(f"🔍 Prüfe {name} bis N={bound}")

    check = IdentityCheck(name, bound, PASS, entry.reference, entry.status, requested_bound=requested)
    for label, left, right in entry.sides(bound):
        upto = min(len(left), len(right))
        check.compared += upto
        for n in range(upto):
            if left[n] != right[n]:
                check.verdict = FAIL
                check.mismatch = {"comparison": label, "index": n, "left": left[n], "right": right[n]}
                break
        if check.verdict == FAIL:
            break

    if check.verdict == PASS:
        logger.info(f"✅ {name}: {check.label}")
    elif check.ok:
        logger.info(f"📊 {name}: {check.verdict} ({check.status}) bei {check.mismatch}")
    else:
        logger.error(f"❌ {name}: erste Abweichung {check.mismatch}")
    return check


def verify_all(N: Optional[int] = None, series_N: Optional[int] = None) -> List[IdentityCheck]:
    """
    Alle Checks. Reihen-Checks bekommen series_N, Enumerations-Checks N;
    Einträge mit eigener Standardschranke (fixpoint_conj) behalten diese.
    """
    results = []
    for name, entry in REGISTRY.items():
        if entry.default_bound == SERIES_BOUND:
            bound = series_N
        elif entry.default_bound == ENUM_BOUND:
            bound = N
        else:
            bound = None
        results.append(verify_identity(name, bound))
    return results


def _enum(p: Sequence[int], N: int) -> CountSeq:
    return CountSeq.of(enumeration.avoider_counts(p, N))


def _prim_enum(p: Sequence[int], N: int) -> CountSeq:
    return CountSeq.of(enumeration.primitive_avoider_counts(p, N))


# --- Cay und Ballots --------------------------------------------------------

@identity("cay_eq_bal", "Cay = Bal = L(E₊)")
def _cay_eq_bal(N):
    return [_cmp("enumeration vs L(E₊)", enumeration.cayley_counts(N), fubini(N))]


@identity("cay21", "Cay(21) = 1 + ∫E² = E_even·E")
def _cay21(N):
    E = series.E(N)
    integral_form = series.One(N) + series.integral(series.species_product(E, E)).truncate(N)
    product_form = series.species_product(series.E_even(N), E)
    enumerated = _enum((2, 1), N)
    return [_cmp("enumeration vs 1+∫E²", enumerated, integral_form),
            _cmp("1+∫E² vs E_even·E", integral_form, product_form)]


@identity("cay21_egf", "Cay(21)(x) = ½(e^{2x} + 1)")
def _cay21_egf(N):
    doubled = series.compose(series.E(N), series.scalar_mul(2, series.X(N)))
    closed = series.scalar_div(doubled + series.One(N), 2)
    return [_cmp("enumeration vs ½(e^{2x}+1)", _enum((2, 1), N), closed),
            _cmp("enumeration Cay(12) vs ½(e^{2x}+1)", _enum((1, 2), N), closed)]


@identity("cay1k", "Cay(1^k) = L(E_1 + … + E_{k−1})")
def _cay1k(N):
    return [_cmp(f"enumeration vs L(E_1+…+E_{k - 1}) für k={k}", _enum((1,) * k, N), cay_1k(k, N))
            for k in (2, 3, 4)]


@identity("cay111", "|Cay(111)[n]| = n!((1+√3)^{n+1} − (1−√3)^{n+1})/(2^{n+1}√3)")
def _cay111(N):
    closed = [cay111_closed_form(n) for n in range(N + 1)]
    return [_cmp("Z[√3]-Formel vs L(E_1+E_2)", closed, cay_1k(3, N)),
            _cmp("Z[√3]-Formel vs enumeration", closed, _enum((1, 1, 1), N))]


# --- Muster 112, 212, 231 ----------------------------------------------------

@identity("cay112_ode", "Cay(112)' = L·Cay(112) + L·Cay₊(112)")
def _cay112_ode(N):
    C = _enum((1, 1, 2), N)
    L = series.L(N)
    rhs = series.species_product(L, C) + series.species_product(L, series.plus_part(C))
    return [_cmp("Cay(112)' vs L·Cay(112) + L·Cay₊(112)", series.derivative(C), rhs)]


@identity("cay112_alt", "Cay(112) = Alt'")
def _cay112_alt(N):
    alt_prime = series.derivative(series.Alt(N + 1))
    return [_cmp("enumeration vs Alt'", _enum((1, 1, 2), N), alt_prime),
            _cmp("Alt' vs (n+1)!/2", alt_prime, [cay112_count(n) for n in range(N + 1)])]


@identity("cay212_eq", "Cay(212) = 1 + E*Cay(212) + E*Cay(212)•")
def _cay212_eq(N):
    C = _enum((2, 1, 2), N)
    E = series.E(N)
    rhs = series.One(N + 1) + series.convolution(E, C) + series.convolution(E, series.pointing(C))
    return [_cmp("Cay(212) vs 1 + E*Cay(212) + E*Cay(212)•", C, rhs)]


@identity("cay212_alt", "Cay(212) = Alt'")
def _cay212_alt(N):
    return [_cmp("enumeration vs Alt'", _enum((2, 1, 2), N), series.derivative(series.Alt(N + 1)))]


@identity("cay231_eq", "Cay(231) = 1 + X + (4Cay(231) − E)*Cay(231)₊")
def _cay231_eq(N):
    C = _enum((2, 3, 1), N)
    weight = series.scalar_mul(4, C) - series.E(N)
    rhs = series.One(N + 1) + series.X(N + 1) + series.convolution(weight, series.plus_part(C))
    return [_cmp("Cay(231) vs 1 + X + (4Cay(231) − E)*Cay(231)₊", C, rhs)]


@identity("cay231_rec", "a_{n+1} = Σ (4a_i − 1)·a_{n−i}")
def _cay231_rec(N):
    return [_cmp("Rekursion vs enumeration", cay231_recurrence(N), _enum((2, 3, 1), N))]


# --- Permutationen und alternierende Gruppe -----------------------------------

@identity("sym_conv", "S = E + E*S•", bound=SERIES_BOUND)
def _sym_conv(N):
    S = series.L(N)
    return [_cmp("S vs E + E*S•", S, series.E(N + 1) + series.convolution(series.E(N), series.pointing(S)))]


@identity("sym_exp_cyc", "S = E(C)", bound=SERIES_BOUND)
def _sym_exp_cyc(N):
    return [_cmp("L vs E∘C", series.L(N), series.compose(series.E(N), series.Cyc(N)))]


@identity("altc_conv", "AltC = E*Alt•", bound=SERIES_BOUND)
def _altc_conv(N):
    rhs = series.convolution(series.E(N), series.pointing(series.Alt(N)))
    return [_cmp("AltC vs E*Alt•", series.AltC(N), rhs)]


@identity("alt_decomp", "Alt = 1 + X + AltC", bound=SERIES_BOUND)
def _alt_decomp(N):
    return [_cmp("Alt vs 1 + X + AltC", series.Alt(N), series.One(N) + series.X(N) + series.AltC(N))]


@identity("alt_closed", "Alt = ½(S + 1 + X)", bound=SERIES_BOUND)
def _alt_closed(N):
    closed = series.scalar_div(series.L(N) + series.One(N) + series.X(N), 2)
    fixed = series.solve_fixed_point(
        lambda F: series.One(N) + series.X(N) + series.convolution(series.E(N), series.pointing(F)), N)
    return [_cmp("½(S+1+X) vs Fixpunkt von 1 + X + E*Alt•", closed, fixed)]


@identity("alt_count", "|Alt[n]| = n!/2 (n ≥ 2)")
def _alt_count(N):
    even = [enumeration.count_even_permutations(n) for n in range(N + 1)]
    odd = [enumeration.count_even_permutations(n, odd=True) for n in range(N + 1)]
    return [_cmp("gerade Permutationen vs Alt", even, series.Alt(N)),
            _cmp("ungerade Permutationen vs AltC", odd, series.AltC(N))]


# --- reine Reihen -------------------------------------------------------------

@identity("catalan", "F = 1 + F⊙X⊙F", bound=SERIES_BOUND)
def _catalan(N):
    fixed = series.solve_fixed_point(lambda F: series.One(N + 1) + series.convolution(F, F), N)
    return [_cmp("Fixpunkt vs C(2n,n)/(n+1)", fixed, series.catalan_numbers(N))]


@identity("eeven_sq", "E_even² = 1 + E_odd²", bound=SERIES_BOUND)
def _eeven_sq(N):
    even, odd = series.E_even(N), series.E_odd(N)
    return [_cmp("E_even² vs 1 + E_odd²", series.species_product(even, even),
                 series.One(N) + series.species_product(odd, odd))]


@identity("par_exp", "Par = E(E₊)")
def _par_exp(N):
    enumerated = [enumeration.count_restricted_growth(n) for n in range(N + 1)]
    return [_cmp("Restricted-Growth-Wörter vs E(E₊)", enumerated, series.bell(N))]


# --- primitive Cayley-Permutationen -------------------------------------------

@identity("prim_sq", "Prim' = Cay²")
def _prim_sq(N):
    prim = CountSeq.of(enumeration.primitive_counts(N))
    F = fubini(N - 1)
    return [_cmp("Prim' vs Cay²", series.derivative(prim), series.species_product(F, F))]


@identity("prim_lemma", "Cay = 1 + ∫(E·Prim')")
def _prim_lemma(N):
    prim = CountSeq.of(enumeration.primitive_counts(N))
    rhs = series.One(N) + series.integral(series.species_product(series.E(N - 1), series.derivative(prim)))
    return [_cmp("Cay vs 1 + ∫(E·Prim')", enumeration.cayley_counts(N), rhs),
            _cmp("Cay vs Binomialtransformation von Prim", enumeration.cayley_counts(N),
                 series.binomial_transform(prim))]


def _prim_relation(p: Pattern, N: int) -> List[Comparison]:
    C, P = _enum(p, N), _prim_enum(p, N)
    name = pattern_name(p)
    forward = series.One(N) + series.integral(series.species_product(series.E(N - 1), series.derivative(P)))
    backward = series.integral(series.species_product(series.reciprocal(series.E(N - 1)), series.derivative(C)))
    return [_cmp(f"Cay({name}) vs 1 + ∫(E·Prim({name})')", C, forward),
            _cmp(f"Prim({name}) vs ∫(E⁻¹·Cay({name})')", P, backward)]


@identity("prim_p", "Cay(p) = 1 + ∫(E·Prim(p)') und Prim(p) = ∫(E⁻¹·Cay(p)') für primitive p")
def _prim_p(N):
    return [cmp for p in PRIMITIVE_TEST_PATTERNS for cmp in _prim_relation(p, N)]


@identity("prim_nonprimitive_112", "Prim(p)-Relation verlangt primitives p (112 ist es nicht)",
          status=EXPECTED_FAIL)
def _prim_nonprimitive_112(N):
    return _prim_relation((1, 1, 2), N)


@identity("prim212", "Prim(212) = ∫(E⁻¹·L³)")
def _prim212(N):
    return [_cmp("enumeration vs ∫(E⁻¹·L³)", _prim_enum((2, 1, 2), N), prim212_series(N))]


@identity("prim_par", "primitives Par = ∫Par")
def _prim_par(N):
    enumerated = [enumeration.count_restricted_growth(n, primitive=True) for n in range(N + 1)]
    integral_par = series.integral(series.bell(N - 1))
    return [_cmp("primitive Restricted-Growth-Wörter vs ∫Par", enumerated, integral_par),
            _cmp("Par vs 1 + ∫(E·(∫Par)')", series.bell(N), series.binomial_transform(integral_par))]


@identity("prim_sym", "primitives S = ∫Der + Der₊ mit S = E·Der")
def _prim_sym(N):
    der = series.derangements(N)
    fixed_point_free = [sum(1 for perm in permutations(range(1, n + 1)) if not fixed_points(perm))
                        for n in range(N + 1)]
    G = series.integral(der).truncate(N) + series.plus_part(der)
    return [_cmp("Fixpunktfreie Permutationen vs E⁻¹·L", fixed_point_free, der),
            _cmp("S vs 1 + ∫(E·(∫Der + Der₊)')", series.L(N), series.binomial_transform(G))]


# --- S₃ und die OGF-Kette -----------------------------------------------------

def _ogf_ints(A: RatSeries) -> List[int]:
    return [_as_int(c, "OGF-Koeffizient") for c in A.coeffs]


@identity("s3_ogf_check", "Σ |Cay(p)[n]| xⁿ = ½ + 1/(1 + √(1 − 8x + 8x²)) für p ∈ S₃")
def _s3_ogf_check(N):
    closed = _ogf_ints(s3_ogf(N))
    comparisons = [_cmp(f"OGF vs enumeration Cay({pattern_name(p)})", closed, _enum(p, N)) for p in S3]
    via_egf = series.egf_to_ogf(_enum((2, 3, 1), N).to_egf())
    comparisons.append(_cmp("OGF vs egf_to_ogf(Cay(231))", closed, _ogf_ints(via_egf)))
    return comparisons


@identity("prim231_ogf_guess", "Σ |Prim(231)[n]| xⁿ = x(2/(1 + x + √(1 − 6x + x²)))²")
def _prim231_ogf_guess(N):
    guess = _ogf_ints(prim231_ogf(N))
    transformed = series.inverse_binomial_transform(_enum((2, 3, 1), N))
    return [_cmp("Vermutete OGF vs inverse Binomialtransformation von Cay(231)", guess, transformed),
            _cmp("Vermutete OGF vs enumeration Prim(231)", guess, _prim_enum((2, 3, 1), N))]


@identity("prim231_chain", "x·[(Â−1)/x](x/(1+x))/(1+x) = (1+x)/(1+x+√(1−6x+x²)) − ½")
def _prim231_chain(N):
    chain = _ogf_ints(ogf_chain_from_counts(_enum((2, 3, 1), N)))
    return [_cmp("OGF-Kette vs geschlossene Form", chain, _ogf_ints(prim231_closed(N))),
            _cmp("OGF-Kette vs x(2/(1+x+√(1−6x+x²)))²", chain, _ogf_ints(prim231_ogf(N)))]


@identity("cay123_formulas", "Birmajer = Kasraoui∘Burstein = |Cay(p)[n]| für p ∈ S₃")
def _cay123_formulas(N):
    birmajer = [cay123_birmajer(n) for n in range(N + 1)]
    comparisons = [_cmp("Birmajer vs Kasraoui", birmajer, [cay_s3_kasraoui(n) for n in range(N + 1)])]
    comparisons += [_cmp(f"Birmajer vs enumeration Cay({pattern_name(p)})", birmajer, _enum(p, N)) for p in S3]
    return comparisons


@identity("burstein_words", "|[k]^n(p)| nach Burstein für p ∈ S₃", max_bound=WORD_BOUND)
def _burstein_words(N):
    return [_cmp(f"Burstein vs enumeration [{k}]^n({pattern_name(p)})",
                 [kary_burstein(k, n) for n in range(N + 1)],
                 [enumeration.count_kary_avoiders(p, n, k) for n in range(N + 1)])
            for p in S3 for k in range(N + 1)]


# --- Wörter und Äquivalenzen ----------------------------------------------------

def small_patterns(max_len: int = 3) -> List[Pattern]:
    """Alle Cayley-Permutationen der Längen 2..max_len in lexikographischer Reihenfolge."""
    return [w for length in range(2, max_len + 1) for w in enumeration.gen_cayley(length)]


@identity("eqwilf", "|[k]^n(p)| = Σ C(k,i)|Cayⁱ(p)[n]| und die Umkehrung", max_bound=WORD_BOUND)
def _eqwilf(N):
    n_max = k_max = N
    comparisons = []
    for p in small_patterns(3):
        table = enumeration.count_table(p, n_max, k_max, mode="max")
        for k in range(k_max + 1):
            words = [enumeration.count_kary_avoiders(p, n, k) for n in range(n_max + 1)]
            comparisons.append(_cmp(f"[{k}]^n({pattern_name(p)}) vs Σ C(k,i)|Cayⁱ|", words,
                                    [enumeration.kary_from_max(table, n, k) for n in range(n_max + 1)]))
            inverted = [sum((-1) ** (k - i) * comb(k, i) * enumeration.count_kary_avoiders(p, n, i)
                            for i in range(k + 1)) for n in range(n_max + 1)]
            comparisons.append(_cmp(f"Cay^{k}({pattern_name(p)}) vs Σ (−1)^{{k−i}} C(k,i)|[i]^n|",
                                    [int(table.counts[n, k]) for n in range(n_max + 1)], inverted))
    return comparisons


def fixpoint_sides(N: int) -> Tuple[List[Fraction], List[Fraction], List[int]]:
    """Die drei Glieder ½|Prim'[n]|, (1/n)·Σ_w Σ_i w_i und Σ_w Σ_{i∈fix(w)} i für n = 1..N."""
    half_prim, letter_means, fixed_sums = [], [], []
    for n in range(1, N + 1):
        half_prim.append(Fraction(enumeration.count_primitive(n + 1), 2))
        letters, fixed = 0, 0
        for w in enumeration.gen_cayley(n):
            letters += sum(w)
            fixed += sum(fixed_points(w))
        letter_means.append(Fraction(letters, n))
        fixed_sums.append(fixed)
    return half_prim, letter_means, fixed_sums


@identity("fixpoint_conj", "½|Prim'[n]| = (1/n)Σ_w Σ_i w_i = Σ_w Σ_{i∈fix(w)} i",
          bound=7, status=CONJECTURE)
def _fixpoint_conj(N):
    half_prim, letter_means, fixed_sums = fixpoint_sides(N)
    return [_cmp("½|Prim'[n]| vs Σ Fixpunkte", half_prim, fixed_sums),
            _cmp("(1/n)Σ w_i vs Σ Fixpunkte", letter_means, fixed_sums)]


@identity("table1", "Muster der Längen zwei und drei: Formelspalte")
def _pattern_table(N):
    comparisons = []
    for row in PATTERN_TABLE:
        formula = [row.formula(n) for n in range(N + 1)]
        for p in row.patterns:
            comparisons.append(_cmp(f"{row.enumeration} vs enumeration Cay({pattern_name(p)})",
                                    formula, _enum(p, N)))
    return comparisons
