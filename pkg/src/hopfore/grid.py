"""Differential verification grid: closed tensor rules versus the matrix oracle.

Builds a deterministic list of indecomposable labels, forms every ordered
pair, and checks that the closed-form decomposition of the tensor product
agrees with an explicit matrix decomposition of the actual module.  The two
routes share no code beyond the algebra tables, so agreement is meaningful.
"""

from concurrent.futures import ThreadPoolExecutor

from .decompose import decompose
from .errors import InvalidParameter
from .fusion import tensor_labels
from .labels import EIG, NIL, canonicalize, label_dim
from .linalg import Matrix
from .modules import module_eigen, module_nilpotent, tensor
from .syntax import format_label, format_multiset

__all__ = [
    "build_module", "grid_labels", "check_pair", "run_grid",
    "nilpotency_index", "radical_length",
]


def build_module(alg, label):
    """Explicit module for a canonical label."""
    if label.kind == NIL:
        return module_nilpotent(alg, label.t, label.i)
    return module_eigen(alg, label.t, label.i, label.beta)


def grid_labels(alg, nil_tmax=3, eig_tmax=2, betas=()):
    """Deterministic label grid: all Nil(t,i) with t <= nil_tmax and i in I,
    then all Eig(t,[j],beta) with t <= eig_tmax, [j] an orbit representative
    and beta drawn from `betas` (nonzero scalars of the algebra's field)."""
    if nil_tmax < 0 or eig_tmax < 0:
        raise InvalidParameter("grid bounds must be nonnegative")
    betas = [alg.scalar(b) for b in betas]
    for b in betas:
        if not b:
            raise InvalidParameter(
                "beta=0 labels are nilpotent; list them via the Nil range instead")
    labels = []
    for t in range(1, nil_tmax + 1):
        for rep in alg.simples:
            labels.append(canonicalize(alg, NIL, t, rep.label))
    for t in range(1, eig_tmax + 1):
        for rep_label in alg.orbit_reps:
            for b in betas:
                labels.append(canonicalize(alg, EIG, t, rep_label, b))
    return labels


def check_pair(alg, left, right, cache=None):
    """None if the closed rules match the matrix oracle, else a report dict."""
    closed = tensor_labels(alg, left, right)
    if cache is None:
        cache = {}
    for lab in (left, right):
        if lab not in cache:
            cache[lab] = build_module(alg, lab)
    prod = tensor(cache[left], cache[right])
    oracle = decompose(prod).counter()
    if closed == oracle:
        return None
    return {
        "left": format_label(left),
        "right": format_label(right),
        "closed": format_multiset(alg, closed),
        "matrix": format_multiset(alg, oracle),
    }


def run_grid(alg, labels=None, nil_tmax=3, eig_tmax=2, betas=(), workers=1):
    """Check every ordered pair of grid labels; deterministic summary.

    Results are assembled in pair order regardless of worker scheduling, so
    the summary is reproducible for golden-file comparisons.
    """
    if labels is None:
        labels = grid_labels(alg, nil_tmax, eig_tmax, betas)
    cache = {lab: build_module(alg, lab) for lab in labels}
    pairs = [(l, r) for l in labels for r in labels]

    def work(pair):
        return check_pair(alg, pair[0], pair[1], cache)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(work, pairs))
    else:
        results = [work(p) for p in pairs]
    mismatches = [r for r in results if r is not None]
    max_dim = max((label_dim(alg, lab) for lab in labels), default=0)
    return {
        "labels": len(labels),
        "pairs": len(pairs),
        "mismatches": mismatches,
        "ok": not mismatches,
        "max_tensor_dim": max_dim * max_dim,
    }


def nilpotency_index(mat, cap):
    """Smallest j with mat^j = 0, via the rank sequence; InvalidParameter
    if the matrix is not nilpotent within `cap` steps."""
    if mat.rank() == 0:
        return 1 if mat.nrows else 0
    power = mat
    j = 1
    while j <= cap:
        power = power @ mat
        j += 1
        if power.rank() == 0:
            return j
    raise InvalidParameter("matrix is not nilpotent within the given bound")


def radical_length(alg, label, module=None):
    """Loewy length read off the module matrices: the nilpotency index of x
    on Nil(t,i) is t, and of x^s - beta on Eig(r,[i],beta) is r."""
    if module is None:
        module = build_module(alg, label)
    if label.kind == NIL:
        return nilpotency_index(module.x_action, module.dim + 1)
    x_s = module.x_action ** alg.s
    shifted = x_s - Matrix.scalar(x_s.order, x_s.nrows, label.beta)
    return nilpotency_index(shifted, module.dim + 1)
