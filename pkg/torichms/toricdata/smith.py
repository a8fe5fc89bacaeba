"""
Smith normal form over the integers

smith_normal_form(A) returns unimodular U, V and diagonal D with U·A·V = D
and d1 | d2 | ... on the diagonal. Row operations are mirrored on U and
column operations on V, so the relation holds after every step.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from sympy import ImmutableMatrix, Matrix, eye, zeros

IntMatrix = Union[Sequence[Sequence[int]], Matrix, ImmutableMatrix]


@dataclass(frozen=True)
class SmithForm:
    """U·A·V = D with U, V unimodular"""
    U: ImmutableMatrix
    D: ImmutableMatrix
    V: ImmutableMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(int(self.D[i, i]) for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        """Nonzero diagonal entries, including 1s"""
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def torsion(self) -> Tuple[int, ...]:
        """Invariant factors greater than 1"""
        return tuple(d for d in self.diagonal if d > 1)


def _as_rows(A: IntMatrix) -> Tuple[List[List[int]], int, int]:
    if isinstance(A, (Matrix, ImmutableMatrix)):
        rows, cols = A.shape
        return [[int(A[i, j]) for j in range(cols)] for i in range(rows)], rows, cols
    rows_list = [[int(x) for x in row] for row in A]
    rows = len(rows_list)
    cols = len(rows_list[0]) if rows else 0
    if any(len(row) != cols for row in rows_list):
        raise ValueError("ragged integer matrix")
    return rows_list, rows, cols


def _identity(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(A: IntMatrix) -> SmithForm:
    """
    Smith normal form of an arbitrary rectangular integer matrix

    Args:
        A: nested sequences of ints or a sympy Matrix

    Returns:
        SmithForm(U, D, V) with U·A·V = D

    Example:
        smith_normal_form([[3, -1], [0, 1]]).diagonal  # (1, 3)
    """
    D, n, k = _as_rows(A)
    U = _identity(n)
    V = _identity(k)

    def swap_rows(a: int, b: int) -> None:
        if a != b:
            D[a], D[b] = D[b], D[a]
            U[a], U[b] = U[b], U[a]

    def swap_cols(a: int, b: int) -> None:
        if a != b:
            for row in D:
                row[a], row[b] = row[b], row[a]
            for row in V:
                row[a], row[b] = row[b], row[a]

    def add_row(target: int, source: int, factor: int) -> None:
        # row_target += factor * row_source
        D[target] = [x + factor * y for x, y in zip(D[target], D[source])]
        U[target] = [x + factor * y for x, y in zip(U[target], U[source])]

    def add_col(target: int, source: int, factor: int) -> None:
        for row in D:
            row[target] += factor * row[source]
        for row in V:
            row[target] += factor * row[source]

    for t in range(min(n, k)):
        while True:
            pivot = None
            for i in range(t, n):
                for j in range(t, k):
                    if D[i][j] != 0 and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break

            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])

            clean = True
            for i in range(t + 1, n):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, k):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    clean = clean and D[t][j] == 0
            if not clean:
                continue

            offender = next(
                (i for i in range(t + 1, n) for j in range(t + 1, k) if D[i][j] % D[t][t]),
                None,
            )
            if offender is None:
                break
            add_row(t, offender, 1)

        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]

    result = SmithForm(
        U=ImmutableMatrix(U) if n else ImmutableMatrix(eye(0)),
        D=ImmutableMatrix(D) if n and k else ImmutableMatrix(zeros(n, k)),
        V=ImmutableMatrix(V) if k else ImmutableMatrix(eye(0)),
    )
    assert verify_smith_form(A, result), "U·A·V != D"
    return result


def verify_smith_form(A: IntMatrix, form: SmithForm) -> bool:
    """Re-check U·A·V = D, unimodularity and the divisibility chain"""
    rows, n, k = _as_rows(A)
    if n == 0 or k == 0:
        return True
    original = Matrix(rows)
    if form.U * original * form.V != form.D:
        return False
    if abs(form.U.det()) != 1 or abs(form.V.det()) != 1:
        return False
    for i in range(n):
        for j in range(k):
            if i != j and form.D[i, j] != 0:
                return False
    diagonal = form.diagonal
    for a, b in zip(diagonal, diagonal[1:]):
        if a == 0 and b != 0:
            return False
        if a != 0 and b % a != 0:
            return False
    return all(d >= 0 for d in diagonal)
