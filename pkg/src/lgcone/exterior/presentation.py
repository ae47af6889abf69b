"""Lie algebra presentations by structure constants and the induced
differential on the exterior algebra of the dual space.

A presentation lists, for each dual generator e^k, the 2-form d e^k as a
rational combination of e^i ^ e^j.  Validation checks d o d = 0 on the
generators (the Jacobi identity) and unimodularity (vanishing of the
modular 1-form), which is what makes the invariant top form closed and
the integration pairing well defined.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..exactla.matrices import apply_rows

__all__ = [
    "JacobiFailure",
    "NotUnimodular",
    "LieAlgebraPresentation",
    "ValidationReport",
]


class JacobiFailure(ValueError):
    """d(d e^k) != 0 for some generator: the structure constants are not
    those of a Lie algebra."""

    def __init__(self, generator: str):
        self.generator = generator
        super().__init__(f"d^2 != 0 on generator {generator}")


class NotUnimodular(ValueError):
    """The modular 1-form (trace of the adjoint action) does not vanish."""

    def __init__(self, modular_form):
        self.modular_form = modular_form
        super().__init__(f"presentation is not unimodular: modular form {modular_form}")


def _merge_indices(a: tuple[int, ...], b: tuple[int, ...]):
    """Sorted merge of two strictly increasing index tuples with sign.

    Returns (sign, merged) or None when an index repeats.
    """
    merged = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            merged.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining len(a) - i entries of a
            if (len(a) - i) % 2:
                sign = -sign
            merged.append(b[j])
            j += 1
    merged.extend(a[i:])
    merged.extend(b[j:])
    return sign, tuple(merged)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    jacobi_failures: tuple[str, ...]
    modular_form: tuple[Fraction, ...]
    unimodular: bool

    def raise_on_error(self) -> None:
        if self.jacobi_failures:
            raise JacobiFailure(self.jacobi_failures[0])
        if not self.unimodular:
            raise NotUnimodular(self.modular_form)


@dataclass(frozen=True)
class LieAlgebraPresentation:
    """Structure constants of a real Lie algebra, at the dual 1-form level.

    ``differentials[k]`` is a tuple of (coefficient, i, j) with i < j meaning
    d e^k = sum c * e^i ^ e^j.  Indices are 0-based positions in ``names``.
    """

    names: tuple[str, ...]
    differentials: tuple[tuple[tuple[Fraction, int, int], ...], ...]

    def __post_init__(self):
        if len(self.names) != len(self.differentials):
            raise ValueError("one differential per generator required")
        for terms in self.differentials:
            for _, i, j in terms:
                if not 0 <= i < j < self.dim:
                    raise ValueError("structure constant indices out of range")

    @classmethod
    def from_dict(
        cls,
        names: Sequence[str],
        diff: Mapping[str, Iterable[tuple[Fraction | int, str, str]]],
    ) -> "LieAlgebraPresentation":
        """Build from generator names, e.g. {'b': [(-1, 'a', 'b')]}."""
        pos = {n: k for k, n in enumerate(names)}
        rows = []
        for name in names:
            terms = []
            for c, a, b in diff.get(name, ()):
                i, j = pos[a], pos[b]
                c = Fraction(c)
                if i > j:
                    i, j, c = j, i, -c
                if i == j:
                    continue
                if c:
                    terms.append((c, i, j))
            rows.append(tuple(sorted(terms, key=lambda t: (t[1], t[2]))))
        return cls(tuple(names), tuple(rows))

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def half_dim(self) -> int:
        if self.dim % 2:
            raise ValueError("presentation dimension is odd")
        return self.dim // 2

    # -- exterior algebra bases -------------------------------------------

    @functools.lru_cache(maxsize=None)
    def basis(self, k: int) -> tuple[tuple[int, ...], ...]:
        """Lexicographic basis of Lambda^k: strictly increasing index tuples."""
        return tuple(itertools.combinations(range(self.dim), k))

    @functools.lru_cache(maxsize=None)
    def basis_index(self, k: int) -> dict:
        return {t: i for i, t in enumerate(self.basis(k))}

    def basis_size(self, k: int) -> int:
        return len(self.basis(k))

    # -- the Chevalley-Eilenberg differential ------------------------------

    @functools.lru_cache(maxsize=None)
    def d_matrix(self, k: int) -> tuple[dict, ...]:
        """Sparse matrix of d: Lambda^k -> Lambda^(k+1) (rows over Fractions)."""
        if k < 0 or k >= self.dim:
            return tuple({} for _ in range(self.basis_size(max(k + 1, 0))))
        src = self.basis(k)
        tgt_index = self.basis_index(k + 1)
        rows: list[dict] = [dict() for _ in range(len(tgt_index))]
        for col, monomial in enumerate(src):
            for pos, gen in enumerate(monomial):
                rest = monomial[:pos] + monomial[pos + 1 :]
                outer_sign = -1 if pos % 2 else 1
                for c, i, j in self.differentials[gen]:
                    merged = _merge_indices((i, j), rest)
                    if merged is None:
                        continue
                    s, idx = merged
                    row = rows[tgt_index[idx]]
                    val = row.get(col, Fraction(0)) + outer_sign * s * c
                    if val:
                        row[col] = val
                    elif col in row:
                        del row[col]
        return tuple(rows)

    def d_coeffs(self, k: int, coeffs: Sequence) -> tuple:
        return apply_rows(self.d_matrix(k), coeffs)

    # -- validation ---------------------------------------------------------

    def modular_form(self) -> tuple[Fraction, ...]:
        """The 1-form X -> tr(ad_X), zero exactly for unimodular algebras."""
        mu = [Fraction(0)] * self.dim
        for gen, terms in enumerate(self.differentials):
            for c, i, j in terms:
                # contraction of e^i ^ e^j with the basis vector dual to e^gen
                if i == gen:
                    mu[j] += c
                elif j == gen:
                    mu[i] -= c
        return tuple(mu)

    def validate(self) -> ValidationReport:
        failures = []
        for gen in range(self.dim):
            vec = [Fraction(0)] * self.basis_size(2)
            idx2 = self.basis_index(2)
            for c, i, j in self.differentials[gen]:
                vec[idx2[(i, j)]] += c
            if any(self.d_coeffs(2, vec)):
                failures.append(self.names[gen])
        mu = self.modular_form()
        unimodular = not any(mu)
        return ValidationReport(
            ok=not failures and unimodular,
            jacobi_failures=tuple(failures),
            modular_form=mu,
            unimodular=unimodular,
        )

    def require_valid(self) -> None:
        self.validate().raise_on_error()
