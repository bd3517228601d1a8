"""Linear codes from trace/norm defining sets, and their exact weight
distributions by exhaustive enumeration.

The defining set lives in the top field F_{q^k} of a tower
F_p <= F_q <= F_{q^f} <= F_{q^k}:

    D = {x in F_{q^k}^* : Tr_{q^f/q}(x^((q^k-1)/(q^f-1))) + a = 0}

and the code is C_D = {(Tr_{q^k/q}(b d))_{d in D} : b in F_{q^k}}.  Elements
of D are kept as alpha-exponents in increasing order, which fixes the
coordinate permutation and makes codeword-level results reproducible.

Enumeration walks all q^k values of b with a vectorized kernel: the weight
of c_b for b = alpha^s is |D| minus the number of d in D with
Tr(alpha^(s+d)) = 0, a sum of table lookups.  The histogram over b is then
deduplicated by the kernel of b -> c_b, so repeated codewords (when the
map is not injective) are counted once.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .field import Element, Field, TowerSpec

_CHUNK_CELLS = 1 << 22  # bound on rows*|D| per vectorized block


@dataclass(frozen=True)
class DefiningSet:
    """Ordered defining set with its tower and shift parameters."""

    tower: TowerSpec
    a_index: int
    a: Element
    elements: Tuple[int, ...]
    punctured: bool = False

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        tag = ", punctured" if self.punctured else ""
        return (f"DefiningSet(q={self.tower.q}, f={self.tower.f}, "
                f"k={self.tower.k}, a={self.a_index}, n={len(self)}{tag})")


def build_defining_set(tower: TowerSpec, a_index: int) -> DefiningSet:
    """Enumerate D in increasing alpha-exponent order.

    `a_index` selects a in F_q as an integer in [0, q): 0 is the zero shift,
    nonzero values map through base-p digits over the subfield basis.
    """
    field = tower.field()
    q, f = tower.q, tower.f
    ef = tower.e * tower.f
    a = field.subfield_element_from_index(a_index, tower.e)
    target = field.neg(a)
    sub_traces = field.trace_exp_subtable(ef, tower.e)
    qf1 = q ** f - 1
    hits = np.array([i for i, t in enumerate(sub_traces) if t == target],
                    dtype=np.int64)
    if hits.size == 0:
        raise ValueError(
            f"defining set is empty for q={q}, f={f}, k={tower.k}, "
            f"a={a_index}; the a=0 regime needs k > f > 1")
    reps = np.arange(tower.norm_exp, dtype=np.int64) * qf1
    elements = np.sort((reps[:, None] + hits[None, :]).ravel())
    return DefiningSet(tower, a_index, a, tuple(int(s) for s in elements))


def codeword(ds: DefiningSet, b: Element) -> List[Element]:
    """c_b = (Tr_{q^k/q}(b d))_{d in D}, entries as elements of F_q."""
    field = ds.tower.field()
    m, e = ds.tower.m, ds.tower.e
    if b is None:
        return [None] * len(ds)
    M = field.mult_order
    return [field.trace((b + d) % M, m, e) for d in ds.elements]


def puncture(ds: DefiningSet) -> DefiningSet:
    """Keep the least alpha-exponent of each F_q^*-orbit in D.

    Only the a = 0 defining sets are closed under F_q^* scaling; anything
    else is refused.
    """
    if ds.a_index != 0:
        raise ValueError("puncturing requires the a = 0 defining set")
    if ds.punctured:
        return ds
    tower = ds.tower
    field = tower.field()
    M = field.mult_order
    step = field.subfield_exp(tower.e)  # alpha**step generates F_q^*
    q = tower.q
    seen = set()
    reps = []
    for s in ds.elements:
        orbit = min((s + i * step) % M for i in range(q - 1))
        if orbit not in seen:
            seen.add(orbit)
            reps.append(orbit)
    return DefiningSet(tower, ds.a_index, ds.a, tuple(sorted(reps)),
                       punctured=True)


class WeightDistribution:
    """Weight histogram of a linear code, with derived parameters."""

    def __init__(self, n: int, dim_log: int, counts: Dict[int, int], q: int):
        self.n = n
        self.dim = dim_log
        self.q = q
        self.counts = dict(sorted(counts.items()))

    @property
    def d_min(self) -> int:
        positives = [w for w, c in self.counts.items() if w > 0 and c > 0]
        if not positives:
            raise ValueError("zero code has no minimum distance")
        return min(positives)

    def params(self) -> Tuple[int, int, int]:
        return self.n, self.dim, self.d_min

    def pairs(self) -> List[Tuple[int, int]]:
        """Sorted (weight, count) pairs, including the zero word."""
        return [(w, c) for w, c in self.counts.items() if c > 0]

    def enumerator(self) -> List[int]:
        """Coefficients of 1 + A_1 z + ... + A_n z^n."""
        coeffs = [0] * (self.n + 1)
        for w, c in self.counts.items():
            coeffs[w] = c
        return coeffs

    def total(self) -> int:
        return sum(self.counts.values())

    def __eq__(self, other):
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return (self.n, self.dim, self.counts) == \
            (other.n, other.dim, other.counts)

    def __repr__(self):
        body = " + ".join(f"{c}z^{w}" if w else str(c)
                          for w, c in self.pairs())
        return f"[{self.n},{self.dim}] {body}"


def zero_trace_counts(ds: DefiningSet, workers: int = 1) -> np.ndarray:
    """For each s in [0, q^k - 1): the number of d in D with
    Tr_{q^k/q}(alpha^(s+d)) = 0.  The weight of c_(alpha^s) is |D| minus
    this count; the same array drives the exponential-sum checks.
    """
    tower = ds.tower
    field = tower.field()
    M = field.mult_order
    z = field.trace_zero_indicator(tower.e).astype(np.int64)
    D = np.array(ds.elements, dtype=np.int64)
    rows = max(1, _CHUNK_CELLS // max(1, D.size))

    def run(lo: int, hi: int) -> np.ndarray:
        out = np.empty(hi - lo, dtype=np.int64)
        for start in range(lo, hi, rows):
            stop = min(start + rows, hi)
            s = np.arange(start, stop, dtype=np.int64)
            idx = (s[:, None] + D[None, :]) % M
            out[start - lo:stop - lo] = z[idx].sum(axis=1)
        return out

    if workers <= 1 or M < 4096:
        return run(0, M)
    bounds = np.linspace(0, M, workers + 1, dtype=np.int64)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda i: run(int(bounds[i]),
                                            int(bounds[i + 1])),
                              range(workers)))
    return np.concatenate(parts)


def brute_weight_distribution(ds: DefiningSet, workers: int = 1,
                              budget: int = 1 << 22,
                              zeros: Optional[np.ndarray] = None
                              ) -> WeightDistribution:
    """Exact distribution over all q^k codewords.

    Repeated codewords are merged: the zero-weight count determines the
    kernel of b -> c_b, every codeword occurs |kernel| times, and the
    dimension is reported as log_q of the true codeword count.  A
    precomputed zero_trace_counts array may be passed in.
    """
    tower = ds.tower
    field = tower.field()
    size = field.p ** field.m
    if size > budget:
        raise ValueError(f"field size {size} exceeds budget {budget}")
    n = len(ds)
    if zeros is None:
        zeros = zero_trace_counts(ds, workers=workers)
    weights = n - zeros
    hist = np.bincount(weights, minlength=n + 1)
    kernel = int(hist[0]) + 1  # nonzero b with c_b = 0, plus b = 0
    q = tower.q
    dim_drop = 0
    rem = kernel
    while rem > 1:
        if rem % q:
            raise RuntimeError("kernel size is not a power of q")
        rem //= q
        dim_drop += 1
    counts = {0: 1}
    for w in range(1, n + 1):
        c = int(hist[w])
        if c:
            if c % kernel:
                raise RuntimeError("codeword multiplicity mismatch")
            counts[w] = c // kernel
    return WeightDistribution(n, tower.k - dim_drop, counts, q)
