"""Matrix-level decomposition oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfore.cyclotomic import Cyclotomic, Rational
from hopfore.decompose import decompose, isotypic_multiplicities
from hopfore.errors import CandidatePoolIncomplete, NonIntegerMultiplicity
from hopfore.labels import EIG, NIL, IndecLabel, canonicalize
from hopfore.linalg import Matrix
from hopfore.modules import (
    ExplicitModule, direct_sum, module_eigen, module_nilpotent, tensor,
    zero_module,
)


def test_isotypic_examples(alg3):
    m = module_nilpotent(alg3, 3, "eps")
    assert isotypic_multiplicities(m) == {"eps": 2, "chi": 1}
    assert isotypic_multiplicities(module_nilpotent(alg3, 1, 1)) == {1: 1}


def test_isotypic_additive(alg3):
    m = module_eigen(alg3, 1, 1, 2)
    doubled = isotypic_multiplicities(direct_sum(m, m))
    single = isotypic_multiplicities(m)
    assert doubled == {k: 2 * v for k, v in single.items()}


def test_isotypic_rejects_non_representation(alg3):
    good = module_nilpotent(alg3, 1, "eps")
    n = alg3.field_order
    bad_gen = [Matrix(n, [[Rational(1, 3)]]) for _ in good.gen_actions]
    bad = ExplicitModule(alg3, bad_gen, good.x_action, good.provenance)
    with pytest.raises(NonIntegerMultiplicity):
        isotypic_multiplicities(bad)


def test_round_trip_nilpotent(alg3):
    for t in (1, 2, 5):
        for i in ("eps", "lamchi", 1):
            lab = IndecLabel(NIL, t, i)
            got = decompose(module_nilpotent(alg3, t, i))
            assert got.counter() == {lab: 1}
            assert got.total_dim == t * alg3.simple(i).dim


def test_round_trip_eigen(alg3):
    for t in (1, 2):
        for i, b in (("eps", 1), ("lam", -1), (1, Rational(1, 2))):
            lab = canonicalize(alg3, EIG, t, i, b)
            got = decompose(module_eigen(alg3, t, i, b))
            assert got.counter() == {lab: 1}
            assert alg3.scalar(b) in got.eigenvalues_found


def test_round_trip_custom(c4, c8):
    for alg in (c4, c8):
        lab = canonicalize(alg, EIG, 2, "c1", 3)
        got = decompose(module_eigen(alg, 2, "c1", 3)).counter()
        assert got == {lab: 1}
        nil = IndecLabel(NIL, 5, "c2")
        assert decompose(module_nilpotent(alg, 5, "c2")).counter() == {nil: 1}


def test_zero_module(alg3):
    res = decompose(zero_module(alg3))
    assert res.counter() == {}
    assert res.total_dim == 0


def test_direct_sum_additivity(alg3):
    parts = [module_nilpotent(alg3, 2, 1),
             module_eigen(alg3, 1, "eps", 2),
             module_nilpotent(alg3, 4, "lam")]
    total = parts[0]
    for p in parts[1:]:
        total = direct_sum(total, p)
    want = sum((decompose(p).counter() for p in parts), start=type(decompose(parts[0]).counter())())
    assert decompose(total).counter() == want


def test_orbit_identifications(alg3):
    # same underlying iso class found through a non-representative simple
    a = decompose(module_eigen(alg3, 1, "chi", 2)).counter()
    b = decompose(module_eigen(alg3, 1, "eps", 2)).counter()
    assert a == b
    lab2 = canonicalize(alg3, EIG, 1, 2, 5)
    assert decompose(module_eigen(alg3, 2, 2, 5)).counter() == {
        canonicalize(alg3, EIG, 2, 1, 5): 1}
    assert lab2.i == 1


def test_candidate_pool_incomplete(alg3):
    m = module_eigen(alg3, 1, "eps", 7)
    stripped = ExplicitModule(alg3, list(m.gen_actions), m.x_action, [])
    with pytest.raises(CandidatePoolIncomplete):
        decompose(stripped)
    # the same module decomposes once the pool is supplied explicitly
    got = decompose(stripped, extra_candidates=[alg3.scalar(7)]).counter()
    assert got == {canonicalize(alg3, EIG, 1, "eps", 7): 1}


def _permutation_conjugate(mod, perm):
    n = mod.alg.field_order
    zero = Cyclotomic.zero(n)
    one = Cyclotomic.one(n)
    p = Matrix(n, [[one if perm[r] == c else zero for c in range(mod.dim)]
                   for r in range(mod.dim)])
    pinv = p.transpose()
    gens = [p @ g @ pinv for g in mod.gen_actions]
    return ExplicitModule(mod.alg, gens, p @ mod.x_action @ pinv, mod.provenance)


def test_basis_independence(alg3):
    mod = tensor(module_nilpotent(alg3, 2, 1), module_eigen(alg3, 1, "eps", 2))
    want = decompose(mod).counter()
    perm = list(range(mod.dim))
    perm = perm[1:] + perm[:1]
    shuffled = _permutation_conjugate(mod, perm)
    assert decompose(shuffled).counter() == want


@settings(max_examples=15, deadline=None)
@given(t1=st.integers(min_value=1, max_value=2),
       t2=st.integers(min_value=1, max_value=2),
       i1=st.sampled_from(["eps", "chi", 1]),
       i2=st.sampled_from(["lam", 1, 2]),
       b=st.sampled_from([1, -1, 2]))
def test_tensor_associativity_multisets(alg3, t1, t2, i1, i2, b):
    a = module_nilpotent(alg3, t1, i1)
    c = module_nilpotent(alg3, t2, i2)
    e = module_eigen(alg3, 1, "eps", b)
    left = tensor(tensor(a, c), e)
    right = tensor(a, tensor(c, e))
    assert decompose(left).counter() == decompose(right).counter()
