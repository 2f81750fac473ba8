"""Word-by-word lower bound for the best Lipschitz constant between
two representations, and the admissibility verdict built on it.

For a dominated pair (rho Fuchsian-like, sigma strictly shorter) the
ratio of translation lengths

    ell(sigma(w)) / ell(rho(w))

stays below 1 on every group element; the supremum of the ratio over
reduced words up to a length cutoff is therefore a one-sided refutation
tool: a value >= 1 certifies the pair is *not* admissible, while a value
below 1 proves nothing (the bound only grows with the cutoff).  A
maximal |Euler class| for sigma refutes independently: sigma would sit
in a Fuchsian component rather than being strictly dominated.

Enumeration order is a fixed depth-first preorder over the letter order
1, -1, 2, -2, ...; the running maximum is combined with an associative
reduction whose ties are resolved towards the shortlex-smaller witness,
so partitioning the scan by leading letter cannot change the result.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import InputError
from .reps import Representation, Word, euler_class

MAX_WORDS_ENV = "ADSVOL_MAX_WORDS"
DEFAULT_MAX_WORDS = 10**7

DEFAULT_MAX_WORD_LENGTH = 6
DEFAULT_DENOMINATOR_FLOOR = 1e-6

VERDICT_REFUTED = "refuted"
VERDICT_NOT_REFUTED = "not_refuted"


def max_words_cap() -> int:
    """Safety valve on the enumeration size; override with the
    ADSVOL_MAX_WORDS environment variable."""
    raw = os.environ.get(MAX_WORDS_ENV)
    if raw is None:
        return DEFAULT_MAX_WORDS
    try:
        cap = int(raw)
    except ValueError as exc:
        raise InputError(f"{MAX_WORDS_ENV} must be an integer, got {raw!r}") from exc
    if cap <= 0:
        raise InputError(f"{MAX_WORDS_ENV} must be positive, got {cap}")
    return cap


def letter_order(genus: int) -> list:
    """Fixed enumeration order 1, -1, 2, -2, ..., 2g, -2g."""
    order = []
    for i in range(1, 2 * genus + 1):
        order += [i, -i]
    return order


def shortlex_key(word: Word, genus: int):
    """Sort key: length first, then the letter order above."""
    rank = {letter: pos for pos, letter in enumerate(letter_order(genus))}
    return (len(word), tuple(rank[x] for x in word))


def reduced_word_count(genus: int, max_len: int) -> int:
    """Number of reduced words of length 1..max_len: per length L the
    count is 4g (4g - 1)^(L-1)."""
    n = 4 * genus
    return sum(n * (n - 1) ** (length - 1) for length in range(1, max_len + 1))


def enumerate_reduced_words(genus: int, max_len: int):
    """Yield every reduced word of length 1..max_len exactly once, in
    depth-first preorder over the fixed letter order."""
    if not isinstance(genus, int) or genus < 2:
        raise InputError("genus must be an integer >= 2")
    if not isinstance(max_len, int) or max_len < 1:
        raise InputError("max_len must be an integer >= 1")
    order = letter_order(genus)

    def walk(prefix):
        last = prefix[-1] if prefix else 0
        for letter in order:
            if letter == -last:
                continue
            word = prefix + (letter,)
            yield Word(word)
            if len(word) < max_len:
                yield from walk(word)

    yield from walk(())


@dataclass(frozen=True)
class LipschitzEstimate:
    lower_bound: float
    witness: Word | None
    words_scanned: int
    max_word_length: int
    denominator_floor: float


def _flat_generators(rep: Representation) -> dict:
    """letter -> (a, b, c, d) floats, inverses included."""
    table = {}
    for letter in range(1, 2 * rep.genus + 1):
        m = rep.images[letter - 1].mat
        table[letter] = (m[0, 0], m[0, 1], m[1, 0], m[1, 1])
        table[-letter] = (m[1, 1], -m[0, 1], -m[1, 0], m[0, 0])
    return table


def _scan_leading(leading, rho_table, sigma_table, max_len, floor, genus):
    """Best (ratio, witness) over reduced words starting with `leading`,
    plus the number of words scanned.  Matrices are accumulated left to
    right with plain float arithmetic so partitioning cannot change a
    single rounding."""
    order = letter_order(genus)
    rank = {letter: pos for pos, letter in enumerate(order)}

    def key(word):
        return (len(word), tuple(rank[x] for x in word))

    best_ratio = 0.0
    best_witness = None
    scanned = 0
    # stack entries: (word tuple, rho product, sigma product)
    stack = [((leading,), rho_table[leading], sigma_table[leading])]
    while stack:
        word, rho_m, sigma_m = stack.pop()
        scanned += 1
        trace = abs(rho_m[0] + rho_m[3])
        if trace > 2.0:
            rho_len = 2.0 * math.acosh(trace / 2.0)
            if rho_len > floor:
                s_trace = abs(sigma_m[0] + sigma_m[3])
                sigma_len = (
                    2.0 * math.acosh(s_trace / 2.0) if s_trace > 2.0 else 0.0
                )
                ratio = sigma_len / rho_len
                if (
                    best_witness is None
                    or ratio > best_ratio
                    or (ratio == best_ratio and key(word) < key(best_witness))
                ):
                    best_ratio = ratio
                    best_witness = word
        if len(word) < max_len:
            last = word[-1]
            ra, rb, rc, rd = rho_m
            sa, sb, sc, sd = sigma_m
            # push in reverse order so the stack pops in letter order
            for letter in reversed(order):
                if letter == -last:
                    continue
                ga, gb, gc, gd = rho_table[letter]
                ha, hb, hc, hd = sigma_table[letter]
                stack.append(
                    (
                        word + (letter,),
                        (
                            ra * ga + rb * gc,
                            ra * gb + rb * gd,
                            rc * ga + rd * gc,
                            rc * gb + rd * gd,
                        ),
                        (
                            sa * ha + sb * hc,
                            sa * hb + sb * hd,
                            sc * ha + sd * hc,
                            sc * hb + sd * hd,
                        ),
                    )
                )
    witness = Word(best_witness) if best_witness is not None else None
    return best_ratio, witness, scanned


def combine_partials(a, b, genus):
    """Associative, commutative reduction of (ratio, witness, scanned)
    partial results; ties go to the shortlex-smaller witness and a
    missing witness never beats a present one at equal ratio."""
    ratio_a, witness_a, scanned_a = a
    ratio_b, witness_b, scanned_b = b
    scanned = scanned_a + scanned_b
    if ratio_a > ratio_b:
        return ratio_a, witness_a, scanned
    if ratio_b > ratio_a:
        return ratio_b, witness_b, scanned
    if witness_a is None:
        return ratio_b, witness_b, scanned
    if witness_b is None:
        return ratio_a, witness_a, scanned
    if shortlex_key(witness_a, genus) <= shortlex_key(witness_b, genus):
        return ratio_a, witness_a, scanned
    return ratio_b, witness_b, scanned


def lipschitz_lower_bound(
    rho: Representation,
    sigma: Representation,
    max_len: int = DEFAULT_MAX_WORD_LENGTH,
    floor: float = DEFAULT_DENOMINATOR_FLOOR,
) -> LipschitzEstimate:
    """sup over reduced words of length <= max_len of the ratio of
    translation lengths ell(sigma(w)) / ell(rho(w)), restricted to words
    whose rho-length exceeds the denominator floor.

    Returns 0 with no witness when nothing clears the floor.  The scan
    is partitioned by leading letter and reduced associatively, so the
    result is bitwise independent of partition order."""
    if rho.genus != sigma.genus:
        raise InputError("rho and sigma must have the same genus")
    if not isinstance(max_len, int) or max_len < 1:
        raise InputError("max_len must be an integer >= 1")
    if not (floor > 0.0):
        raise InputError("denominator floor must be positive")
    total = reduced_word_count(rho.genus, max_len)
    cap = max_words_cap()
    if total > cap:
        raise InputError(
            f"enumeration of {total} words exceeds the cap of {cap}; "
            f"raise {MAX_WORDS_ENV} to allow it"
        )
    rho_table = _flat_generators(rho)
    sigma_table = _flat_generators(sigma)
    partial = (0.0, None, 0)
    for leading in letter_order(rho.genus):
        piece = _scan_leading(
            leading, rho_table, sigma_table, max_len, floor, rho.genus
        )
        partial = combine_partials(partial, piece, rho.genus)
    ratio, witness, scanned = partial
    return LipschitzEstimate(
        lower_bound=ratio,
        witness=witness,
        words_scanned=scanned,
        max_word_length=max_len,
        denominator_floor=floor,
    )


@dataclass(frozen=True)
class AdmissibilityReport:
    euler_rho: int
    euler_sigma: int
    lipschitz: LipschitzEstimate
    verdict: str


def admissibility_report(
    rho: Representation,
    sigma: Representation,
    max_len: int = DEFAULT_MAX_WORD_LENGTH,
    floor: float = DEFAULT_DENOMINATOR_FLOOR,
) -> AdmissibilityReport:
    """Euler classes, Lipschitz lower bound and the refutation verdict.

    rho must look Fuchsian (|Euler class| = 2g - 2); otherwise the
    length spectrum comparison is meaningless and an InputError is
    raised.  The pair is refuted when the lower bound reaches 1 or when
    sigma itself has maximal |Euler class| (Fuchsian-like second
    factor).  Anything else is reported as not refuted: the estimator
    is one-sided evidence, never a proof of admissibility."""
    euler_rho, _ = euler_class(rho)
    euler_sigma, _ = euler_class(sigma)
    bound = 2 * rho.genus - 2
    if abs(euler_rho) != bound:
        raise InputError(
            f"rho is not Fuchsian-like: |Euler class| is {abs(euler_rho)}, "
            f"needs {bound}"
        )
    estimate = lipschitz_lower_bound(rho, sigma, max_len=max_len, floor=floor)
    refuted = estimate.lower_bound >= 1.0 or abs(euler_sigma) == bound
    return AdmissibilityReport(
        euler_rho=euler_rho,
        euler_sigma=euler_sigma,
        lipschitz=estimate,
        verdict=VERDICT_REFUTED if refuted else VERDICT_NOT_REFUTED,
    )


def report_json(report: AdmissibilityReport) -> dict:
    witness = report.lipschitz.witness
    return {
        "euler_rho": report.euler_rho,
        "euler_sigma": report.euler_sigma,
        "lipschitz_lower_bound": report.lipschitz.lower_bound,
        "witness": list(witness.letters) if witness is not None else [],
        "max_word_length": report.lipschitz.max_word_length,
        "verdict": report.verdict,
    }
