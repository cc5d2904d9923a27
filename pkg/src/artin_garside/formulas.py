"""Closed-form Garside and relative Garside words for the catalog labelings."""

from __future__ import annotations

from .coxeter import CatalogId, DomainError, inclusion_chain
from .words import Word, alternating


def descending(a: int, b: int) -> Word:
    """``x_a x_(a-1) ... x_b``; empty when ``a < b``."""
    return tuple(range(a, b - 1, -1))


def a_relative(n: int) -> Word:
    """A_n over A_(n-1): ``x_n ... x_1``."""
    return descending(n, 1)


def b_relative(n: int) -> Word:
    """B_n over B_(n-1) (B2 over A1 when n = 2): ``x_n ... x_2 x_1 x_2 ... x_n``."""
    return descending(n, 2) + tuple(range(1, n + 1))


def d_relative(n: int) -> Word:
    """D_n over A_(n-1).

    Factors ``F_1 ... F_(n-1)`` where ``F_k`` starts with ``x_n`` for odd k
    and ``x_(n-1)`` for even k, followed by ``x_(n-2) ... x_k``.
    """
    w: Word = ()
    for k in range(1, n):
        w += ((n if k % 2 else n - 1),) + descending(n - 2, k)
    return w


def dihedral_relative(p: int) -> Word:
    """I2(p) over A1: ``x2 x1 x2 ...`` with p - 1 letters."""
    return alternating(2, 1, p - 1)


T3: Word = (3, 2, 1, 3, 2, 3)
R4: Word = (4,) + T3 + (4,) + T3 + (4,)
S3: Word = (3, 2, 1, 2, 1, 3, 2, 1, 2, 3)
S4: Word = (4,) + S3 + (4,) + S3 + (4,) + S3 + (4,) + S3 + (4,)
V6: Word = (6, 5, 3, 2, 1, 4, 3, 2, 5, 3, 4, 6, 5, 3, 2, 1)
V7: Word = (7,) + V6 + (7, 6, 5, 3, 2, 4, 3, 5, 6) + (7,)
V8: Word = (8,) + V7 + (8,) + V7 + (8,)

EXCEPTIONAL_RELATIVES: dict[str, Word] = {
    "F4": R4, "H3": S3, "H4": S4, "E6": V6, "E7": V7, "E8": V8,
}


def _as_id(cid: CatalogId | str) -> CatalogId:
    return CatalogId.parse(cid) if isinstance(cid, str) else cid


def delta_formula(cid: CatalogId | str) -> Word:
    """Garside element of a catalog graph as the explicit word of its family formula."""
    cid = _as_id(cid)
    f, n = cid.family, cid.parameter
    if f == "A":
        return sum((a_relative(k) for k in range(1, n + 1)), ())
    if f == "B":
        return (1,) + sum((b_relative(k) for k in range(2, n + 1)), ())
    if f == "D":
        return delta_formula(CatalogId("A", n - 1)) + d_relative(n)
    if f == "G":
        return alternating(1, 2, 6)
    if f == "I2":
        return alternating(1, 2, n)
    if f == "F":
        return (1, 2, 1) + T3 + (4,) + T3 + (4,) + T3 + (4,)
    if f == "H":
        return (1, 2, 1, 2, 1) + S3 + (S4 if n == 4 else ())
    # E: Delta(A4) . Delta(D5, A4) . V6 [. V7 [. V8]]
    w = delta_formula(CatalogId("A", 4)) + d_relative(5) + V6
    if n >= 7:
        w += V7
    if n == 8:
        w += V8
    return w


def relative_formula(cid: CatalogId | str, step: int) -> Word:
    """Relative Garside word of step ``step`` of ``inclusion_chain(cid)``, in that step's labels."""
    cid = _as_id(cid)
    chain = inclusion_chain(cid)
    if not 0 <= step < len(chain):
        raise DomainError(f"{cid} has chain steps 0..{len(chain) - 1}, not {step}")
    if step == 0:
        return (1,)
    sup = chain[step].id
    f, n = sup.family, sup.parameter
    if f == "A":
        return a_relative(n)
    if f == "B":
        return b_relative(n)
    if f == "D":
        return d_relative(n)
    if f == "G":
        return dihedral_relative(6)
    if f == "I2":
        return dihedral_relative(n)
    return EXCEPTIONAL_RELATIVES[str(sup)]
