'''
Exact integer linear algebra: column Hermite reduction A.U = H with U
unimodular, and integer solutions of A.x = b.

All entries are unbounded integers (sympy matrices of Integers).
'''
from sympy import Matrix, eye
from sympy.core.intfunc import igcdex

from . import pwexception as BE

class NoIntegerSolution(BE.DomainError):
    '''
    b is not in the integer column span of A
    '''
    def __init__(self, cause):
        BE.DomainError.__init__(self, "No integer solution: " + cause)

def _ColumnStep(M, c, j, a, b):
    '''
    Replace columns c, j of M by x.col_c + y.col_j and (-b/g).col_c + (a/g).col_j,
    a unimodular step that zeroes the entry b (internal function)
    '''
    x, y, g = igcdex(a, b)
    if (g <= 0 or x*a + y*b != g):
        raise BE.InvariantBreach("extended gcd failed for ({}, {})".format(a, b))
    colC = M[:, c]
    colJ = M[:, j]
    M[:, c] = x*colC + y*colJ
    M[:, j] = (-b//g)*colC + (a//g)*colJ

def ColumnHermiteForm(A):
    '''
    Returns (H, U, pivots) with A.U = H, U unimodular and H in lower column
    echelon form: column c (c < rank) has its first nonzero entry, which is
    positive, in row pivots[c]; pivot rows increase with c; columns from
    rank on are zero.
    '''
    H = Matrix(A)
    m, k = H.shape
    U = eye(k)
    pivots = []
    c = 0
    for i in range(m):
        if (c >= k): break
        for j in range(c+1, k):
            if (H[i, j] != 0):
                a = H[i, c]
                b = H[i, j]
                if (a == 0):
                    # Plain swap keeps U unimodular
                    H.col_swap(c, j)
                    U.col_swap(c, j)
                    continue
                _ColumnStep(H, c, j, a, b)
                _ColumnStep(U, c, j, a, b)
        if (H[i, c] != 0):
            if (H[i, c] < 0):
                H[:, c] = -H[:, c]
                U[:, c] = -U[:, c]
            pivots.append(i)
            c += 1
    return H, U, pivots

def SolveIntegerSystem(A, b):
    '''
    Integer vector x (list of int) with A.x = b.
    Raises NoIntegerSolution if there is none.
    '''
    A = Matrix(A)
    b = Matrix(b)
    m, k = A.shape
    if (b.shape != (m, 1)):
        raise BE.DomainError("Right hand side has shape {}, expected ({:d}, 1)".format(b.shape, m))
    if (k == 0):
        if (any(v != 0 for v in b)):
            raise NoIntegerSolution("empty system with nonzero right hand side")
        return []

    H, U, pivots = ColumnHermiteForm(A)
    rank = len(pivots)
    residual = Matrix(b)
    y = [0]*k
    c = 0
    for i in range(m):
        if (c < rank and pivots[c] == i):
            p = H[i, c]
            if (residual[i] % p != 0):
                raise NoIntegerSolution("row {:d} not divisible by pivot {}".format(i, p))
            y[c] = residual[i] // p
            residual -= y[c]*H[:, c]
            c += 1
        elif (residual[i] != 0):
            raise NoIntegerSolution("row {:d} outside the column span".format(i))

    x = U*Matrix(y)
    if (A*x != b):
        raise BE.InvariantBreach("integer solution does not satisfy the system")
    return [int(v) for v in x]
