"""
Partitions, permutations and the index sets attached to a pair (ell, n).

Everything here works on plain tuples of ints:

- a *partition* is a weakly decreasing tuple with trailing zeros removed;
- a *strict tuple* is an element of P_{ell,n}, i.e. 1 <= l_1 < ... < l_n <= ell;
- a *Schubert index* is a weakly increasing tuple 0 <= a_1 <= ... <= a_k <= m;
- a *mask* is a 0/1 tuple of length ell with exactly n ones;
- a *permutation* is given in one-line notation (w(1), ..., w(n)).

The nilCoxeter product returns ``None`` for the zero outcome.
"""
from __future__ import annotations

import functools
import itertools
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Permutation = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it in canonical (trailing-zero-free) form."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def is_partition(parts: Sequence[int]) -> bool:
    try:
        partition(parts)
    except ValueError:
        return False
    return True


def pad(lam: Sequence[int], length: int) -> tuple[int, ...]:
    """Pad ``lam`` with zeros to ``length`` entries."""
    if len(lam) > length:
        raise ValueError(f"{tuple(lam)} has more than {length} parts")
    return tuple(lam) + (0,) * (length - len(lam))


def conjugate(lam: Sequence[int]) -> Partition:
    """
    The conjugate partition: column lengths of the diagram of ``lam``.

    >>> conjugate((4, 2, 1))
    (3, 2, 1, 1)
    """
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= k) for k in range(1, lam[0] + 1))


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``, in lex order."""
    out = []
    for t in itertools.combinations_with_replacement(range(cols + 1), rows):
        out.append(partition(reversed(t)))
    return sorted(out)


def tensor_row(lam: Sequence[int], s: int, cap: int) -> list[Partition]:
    """
    Partitions with at most ``cap`` rows obtained from ``lam`` by adding ``s``
    boxes, no two in the same column (horizontal strips).

    Sorted in decreasing lexicographic order.
    """
    lam = partition(lam)
    if s < 0:
        return []
    if len(lam) > cap:
        raise ValueError(f"{lam} has more than {cap} rows")
    base = pad(lam, cap)
    out: list[Partition] = []

    def extend(i: int, left: int, acc: list[int]) -> None:
        if i == cap:
            if left == 0:
                out.append(partition(acc))
            return
        upper = base[i] + left if i == 0 else min(base[i] + left, base[i - 1])
        for v in range(base[i], upper + 1):
            acc.append(v)
            extend(i + 1, left - (v - base[i]), acc)
            acc.pop()

    extend(0, s, [])
    return sorted(out, reverse=True)


def tensor_col(lam: Sequence[int], k: int, cap: int) -> list[Partition]:
    """Partitions with at most ``cap`` rows obtained by adding a vertical ``k``-strip."""
    lam = partition(lam)
    if k < 0:
        return []
    if len(lam) > cap:
        raise ValueError(f"{lam} has more than {cap} rows")
    base = pad(lam, cap)
    out = []
    for rows in itertools.combinations(range(cap), k):
        mu = list(base)
        for r in rows:
            mu[r] += 1
        if all(mu[i] >= mu[i + 1] for i in range(cap - 1)):
            out.append(partition(mu))
    return sorted(out, reverse=True)


# ---------------------------------------------------------------------------
# P_{ell,n}, Theta and the maps between them
# ---------------------------------------------------------------------------


def check_strict(lam: Sequence[int], ell: int) -> tuple[int, ...]:
    lam = tuple(lam)
    if any(not 1 <= x <= ell for x in lam):
        raise ValueError(f"{lam} has entries outside [1, {ell}]")
    if any(lam[i] >= lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not strictly increasing")
    return lam


def check_schubert_index(a: Sequence[int], m: int) -> tuple[int, ...]:
    a = tuple(a)
    if any(not 0 <= x <= m for x in a):
        raise ValueError(f"{a} has entries outside [0, {m}]")
    if any(a[i] > a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"{a} is not weakly increasing")
    return a


def strict_tuples(ell: int, n: int) -> list[tuple[int, ...]]:
    """P_{ell,n} in lexicographic order."""
    return list(itertools.combinations(range(1, ell + 1), n))


def schubert_indices(k: int, m: int) -> list[tuple[int, ...]]:
    """Weakly increasing k-tuples with entries in [0, m], lexicographic order."""
    return list(itertools.combinations_with_replacement(range(m + 1), k))


def masks(ell: int, n: int) -> list[tuple[int, ...]]:
    """The multipartitions in P(0), encoded as 0/1 tuples of length ell."""
    return sorted(
        (tuple(1 if j in pos else 0 for j in range(1, ell + 1)) for pos in strict_tuples(ell, n)),
    )


def theta(mask: Sequence[int]) -> tuple[int, ...]:
    """Positions (1-based) of the nonempty components."""
    return tuple(i for i, bit in enumerate(mask, start=1) if bit)


def theta_inv(lam: Sequence[int], ell: int) -> tuple[int, ...]:
    lam = check_strict(lam, ell)
    return tuple(1 if j in lam else 0 for j in range(1, ell + 1))


def rho(lam: Sequence[int], ell: int) -> Partition:
    """(ell - l_1 - n + 1, ell - l_2 - n + 2, ..., ell - l_n), trailing zeros dropped."""
    lam = check_strict(lam, ell)
    n = len(lam)
    return partition(ell - lam[i] - n + i + 1 for i in range(n))


def tau(a: Sequence[int], ell: int) -> tuple[int, ...]:
    """Theta_{ell,n} -> P_{ell,n}: (ell+1-(a_n+n), ..., ell+1-(a_1+1))."""
    n = len(a)
    a = check_schubert_index(a, ell - n)
    return tuple(ell + 1 - (a[i] + i + 1) for i in reversed(range(n)))


def tau_inv(lam: Sequence[int], ell: int) -> tuple[int, ...]:
    lam = check_strict(lam, ell)
    n = len(lam)
    return tuple(ell - lam[n - j] - j + 1 for j in range(1, n + 1))


def tau_hat(a: Sequence[int], ell: int) -> tuple[int, ...]:
    """Theta_{ell,ell-n} -> P_{ell,n}: delete (a_1+1, ..., a_{ell-n}+ell-n) from (1, ..., ell)."""
    k = len(a)
    a = check_schubert_index(a, ell - k)
    removed = {a[i] + i + 1 for i in range(k)}
    return tuple(j for j in range(1, ell + 1) if j not in removed)


def tau_hat_inv(lam: Sequence[int], ell: int) -> tuple[int, ...]:
    """
    (0^{l_1-1}, 1^{l_2-l_1-1}, ..., (n-1)^{l_n-l_{n-1}-1}, n^{ell-l_n}).

    >>> tau_hat_inv((3, 5), 5)
    (0, 0, 1)
    """
    lam = check_strict(lam, ell)
    bounds = (0,) + lam + (ell + 1,)
    out: list[int] = []
    for value in range(len(lam) + 1):
        out.extend([value] * (bounds[value + 1] - bounds[value] - 1))
    return tuple(out)


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


def check_permutation(w: Sequence[int]) -> Permutation:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def simple_reflection(i: int, n: int) -> Permutation:
    if not 1 <= i < n:
        raise ValueError(f"s_{i} does not exist in Sym_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def longest_element(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def compose(u: Sequence[int], v: Sequence[int]) -> Permutation:
    """(uv)(i) = u(v(i))."""
    return tuple(u[x - 1] for x in v)


def inverse(w: Sequence[int]) -> Permutation:
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        out[x - 1] = i
    return tuple(out)


@functools.lru_cache(maxsize=None)
def length(w: Permutation) -> int:
    """Number of inversions."""
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


@functools.lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> tuple[int, ...]:
    """
    A reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}, found by
    repeatedly stripping the leftmost right descent.

    >>> reduced_word((3, 2, 1))
    (1, 2, 1)
    """
    cur = list(w)
    letters = []
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                letters.append(i + 1)
                break
        else:
            return tuple(reversed(letters))


def from_word(word: Iterable[int], n: int) -> Permutation:
    """Ordinary product s_{i_1} ... s_{i_k} in Sym_n."""
    w = identity(n)
    for i in word:
        w = compose(w, simple_reflection(i, n))
    return w


@functools.lru_cache(maxsize=None)
def nilcoxeter_mul(u: Permutation, v: Permutation) -> Permutation | None:
    """uv if the lengths add, else ``None`` (the product psi_u psi_v vanishes)."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    w = list(u)
    for i in reduced_word(v):
        if w[i - 1] > w[i]:
            return None
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def nilcoxeter_word(word: Iterable[int], n: int) -> Permutation | None:
    """Evaluate psi_{i_1} ... psi_{i_k}; ``None`` when the word is not reduced."""
    w: Permutation | None = identity(n)
    for i in word:
        w = nilcoxeter_mul(w, simple_reflection(i, n))
        if w is None:
            return None
    return w


def permutations(n: int) -> list[Permutation]:
    """Sym_n ordered by (length, one-line lex)."""
    return sorted(itertools.permutations(range(1, n + 1)), key=lambda w: (length(w), w))


def sign(w: Sequence[int]) -> int:
    return -1 if length(tuple(w)) % 2 else 1


def determinant(matrix: Sequence[Sequence], one):
    """
    Leibniz expansion of a square matrix over a commutative ring, with rows
    multiplied in order. Entries that are falsy count as zero and prune the
    expansion; ``one`` is returned for the empty matrix.
    """
    size = len(matrix)
    total = one - one
    for cols in itertools.permutations(range(size)):
        entries = [matrix[i][j] for i, j in enumerate(cols)]
        if not all(entries):
            continue
        term = one
        for entry in entries:
            term = term * entry
        if sign(tuple(c + 1 for c in cols)) < 0:
            term = -term
        total = total + term
    return total


def iter_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` nonnegative parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in iter_compositions(total - first, parts - 1):
            yield (first,) + rest
