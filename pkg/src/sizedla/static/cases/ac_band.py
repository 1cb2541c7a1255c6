# case: AC-band
# expect: accept
# cite: geband_dyn carries kl < m and ku < n to gbmv with each transpose flag
from typing import TypeVar

from sizedla import blas, matrix, vector
from sizedla.flags import conjtr, normal, trans
from sizedla.size import Size, of_int_dyn

KL = TypeVar("KL")
KU = TypeVar("KU")
M = TypeVar("M")
N = TypeVar("N")


def rows(m: Size[M]) -> None:
    def cols(n: Size[N]) -> None:
        def lower(kl: Size[KL]) -> None:
            def upper(ku: Size[KU]) -> None:
                a = matrix.init(m, n, lambda i, j: float(10 * i + j) if -1 <= j - i <= 2 else 0.0)
                ab = blas.geband_dyn(kl, ku, a)
                assert matrix.dim1(ab).value == 4
                x = vector.init(n, lambda i: 1.0)
                y = blas.gbmv(m, ab, kl, ku, x, trans=normal)
                assert vector.to_list(y) == [sum(r) for r in matrix.to_lists(a)]
                z = vector.init(m, lambda i: 1.0)
                yt = vector.init(n, lambda i: 1.0)
                out = blas.gbmv(m, ab, kl, ku, z, trans=trans, beta=1.0, y=yt)
                assert out is yt
                col_sums = [sum(c) + 1.0 for c in zip(*matrix.to_lists(a))]
                assert vector.to_list(yt) == col_sums
                blas.gbmv(m, ab, kl, ku, z, trans=conjtr, alpha=2.0)

            of_int_dyn(2, upper)

        of_int_dyn(1, lower)

    of_int_dyn(6, cols)


of_int_dyn(5, rows)
