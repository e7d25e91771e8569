"""Finite groups, their simple representations, and the extension data.

An AlgebraData bundles everything the rest of the package needs about one
algebra H = kG extended by a skew-primitive x: the group table, a central
group element a, a linear character chi with q = chi(a) != 1, the full list
of simple kG-modules with exact matrices, and derived tables (the twist
permutation sigma, central scalars omega, fusion coefficients).  All
scalars live in one cyclotomic field fixed per algebra.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .cyclotomic import Cyclotomic, Rational
from .errors import (
    IncompleteSimpleList,
    InternalInconsistency,
    InvalidParameter,
    NonIntegerMultiplicity,
    NotCentral,
    NotIrreducible,
    TrivialQ,
    UnknownLabel,
)
from .linalg import Matrix

DIHEDRAL_CHARS = ("eps", "lam", "chi", "lamchi")


class GroupData:
    """A finite group as a multiplication table plus chosen generators."""

    __slots__ = ("size", "mul", "identity", "inverse", "generators", "words", "names")

    def __init__(self, mul, generators, names=None):
        mul = tuple(tuple(row) for row in mul)
        size = len(mul)
        if size == 0 or any(len(row) != size for row in mul):
            raise InvalidParameter("multiplication table must be square and nonempty")
        if any(not (0 <= v < size) for row in mul for v in row):
            raise InvalidParameter("multiplication table entry out of range")
        identity = None
        for e in range(size):
            if all(mul[e][g] == g and mul[g][e] == g for g in range(size)):
                identity = e
                break
        if identity is None:
            raise InvalidParameter("no identity element")
        if size <= 200:
            for i in range(size):
                for j in range(size):
                    mij = mul[i][j]
                    for k in range(size):
                        if mul[mij][k] != mul[i][mul[j][k]]:
                            raise InvalidParameter("multiplication table not associative")
        inverse = []
        for g in range(size):
            inv = next((h for h in range(size) if mul[g][h] == identity), None)
            if inv is None or mul[inv][g] != identity:
                raise InvalidParameter(f"element {g} has no inverse")
            inverse.append(inv)
        generators = tuple(generators)
        if not generators or any(not (0 <= g < size) for g in generators):
            raise InvalidParameter("bad generator list")
        # Breadth-first words over the generators; deterministic and shortest.
        words: dict[int, tuple[int, ...]] = {identity: ()}
        queue = [identity]
        while queue:
            e = queue.pop(0)
            for k, g in enumerate(generators):
                ne = mul[e][g]
                if ne not in words:
                    words[ne] = words[e] + (k,)
                    queue.append(ne)
        if len(words) != size:
            raise InvalidParameter("generators do not generate the group")
        if names is None:
            names = tuple(f"g{i}" for i in range(size))
        else:
            names = tuple(names)
            if len(names) != size:
                raise InvalidParameter("names list has wrong length")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "identity", identity)
        object.__setattr__(self, "inverse", tuple(inverse))
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "words", tuple(words[e] for e in range(size)))
        object.__setattr__(self, "names", names)

    def __setattr__(self, name, value):
        raise AttributeError("GroupData is immutable")

    def __eq__(self, other):
        if not isinstance(other, GroupData):
            return NotImplemented
        return self.mul == other.mul and self.generators == other.generators

    def __hash__(self):
        return hash((self.mul, self.generators))

    def is_central(self, g: int) -> bool:
        return all(self.mul[g][h] == self.mul[h][g] for h in range(self.size))


class SimpleRep:
    """One simple module: generator matrices, all element matrices, character."""

    __slots__ = ("label", "dim", "gen_mats", "element_mats", "char")

    def __init__(self, label, gen_mats, group: GroupData, field_order: int):
        gen_mats = tuple(
            m if isinstance(m, Matrix) else Matrix(field_order, m) for m in gen_mats)
        if len(gen_mats) != len(group.generators):
            raise InvalidParameter(f"simple {label!r}: need one matrix per generator")
        dim = gen_mats[0].nrows if gen_mats else 1
        for m in gen_mats:
            if m.nrows != m.ncols or m.nrows != dim:
                raise InvalidParameter(f"simple {label!r}: matrices must be square, same size")
        element_mats = expand_words(group, gen_mats, field_order, dim)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "gen_mats", gen_mats)
        object.__setattr__(self, "element_mats", tuple(element_mats))
        object.__setattr__(self, "char", tuple(m.trace() for m in element_mats))

    def __setattr__(self, name, value):
        raise AttributeError("SimpleRep is immutable")


def expand_words(group: GroupData, gen_mats, field_order: int, dim: int) -> list[Matrix]:
    """Element matrices from generator matrices via the stored words."""
    mats = []
    for word in group.words:
        m = Matrix.identity(field_order, dim)
        for k in word:
            m = m @ gen_mats[k]
        mats.append(m)
    return mats


class AlgebraData:
    """Validated extension data with derived sigma/omega/fusion tables."""

    __slots__ = (
        "group", "field_order", "central", "chi", "q", "s", "fusion_ready",
        "simples", "labels", "label_index", "simple_by_label", "sigma",
        "sigma_inv", "omega", "orbits", "orbit_rep", "orbit_reps", "fusion",
        "kind", "descriptor", "_hash",
    )

    def __init__(self, group, simples, central, chi, field_order, kind, descriptor):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "field_order", field_order)
        object.__setattr__(self, "central", central)
        object.__setattr__(self, "chi", tuple(chi))
        object.__setattr__(self, "simples", tuple(simples))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "descriptor", descriptor)
        labels = tuple(s.label for s in self.simples)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "label_index", {l: k for k, l in enumerate(labels)})
        object.__setattr__(self, "simple_by_label", {s.label: s for s in self.simples})
        self._validate_core()
        q = self.chi[central]
        if q == 1:
            raise TrivialQ("chi at the central element is 1")
        object.__setattr__(self, "q", q)
        s = _character_order(group, self.chi)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "fusion_ready", q.multiplicative_order() == s)
        self._build_sigma_omega()
        self._build_fusion()
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraData is immutable")

    # -- validation ---------------------------------------------------------

    def _validate_core(self):
        group, chi = self.group, self.chi
        if len(set(self.labels)) != len(self.labels):
            raise InvalidParameter("duplicate simple labels")
        if not (0 <= self.central < group.size):
            raise InvalidParameter("central element index out of range")
        if not group.is_central(self.central):
            raise NotCentral(f"element {self.central} is not central")
        if len(chi) != group.size:
            raise InvalidParameter("chi needs one value per group element")
        if chi[group.identity] != 1:
            raise InvalidParameter("chi(identity) must be 1")
        for g in range(group.size):
            for h in range(group.size):
                if chi[group.mul[g][h]] != chi[g] * chi[h]:
                    raise InvalidParameter("chi is not a homomorphism")
        total = sum(s.dim * s.dim for s in self.simples)
        if total != group.size:
            raise IncompleteSimpleList(
                f"sum of squared dimensions is {total}, group order is {group.size}")
        # Each simple must be a homomorphism and irreducible; pairs distinct.
        for s in self.simples:
            mats = s.element_mats
            for g in range(group.size):
                for k, gen in enumerate(group.generators):
                    if mats[g] @ s.gen_mats[k] != mats[group.mul[g][gen]]:
                        raise InvalidParameter(
                            f"simple {s.label!r}: matrices violate the group table")
            if self._char_inner(s.char, s.char) != 1:
                raise NotIrreducible(f"simple {s.label!r} has character norm != 1")
        for i, si in enumerate(self.simples):
            for sj in self.simples[i + 1:]:
                if self._char_inner(si.char, sj.char) != 0:
                    raise InvalidParameter(
                        f"simples {si.label!r} and {sj.label!r} are not distinct")

    def _char_inner(self, char_a, char_b):
        """(1/|G|) sum over g of a(g) b(g^{-1}); exact, must be rational."""
        group = self.group
        tot = Cyclotomic.zero(self.field_order)
        for g in range(group.size):
            tot = tot + char_a[g] * char_b[group.inverse[g]]
        val = (tot / group.size).rational_value()
        if val is None:
            raise NonIntegerMultiplicity("character inner product is irrational")
        return val

    # -- derived tables -----------------------------------------------------

    def _build_sigma_omega(self):
        by_char = {s.char: s.label for s in self.simples}
        sigma = {}
        for s in self.simples:
            twisted = tuple(c * v for c, v in zip(self.chi, s.char))
            target = by_char.get(twisted)
            if target is None:
                raise IncompleteSimpleList(
                    f"chi-twist of simple {s.label!r} is missing from the list")
            sigma[s.label] = target
        if sorted(self.label_index[v] for v in sigma.values()) != list(range(len(sigma))):
            raise InternalInconsistency("sigma is not a permutation")
        omega = {}
        for s in self.simples:
            m = s.element_mats[self.central]
            w = m[0, 0]
            if m != Matrix.scalar(self.field_order, s.dim, w):
                raise NotIrreducible(
                    f"central element is not scalar on simple {s.label!r}")
            omega[s.label] = w
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "sigma_inv", {v: k for k, v in sigma.items()})
        object.__setattr__(self, "omega", omega)
        # sigma-orbits, each listed from its first label in algebra order.
        seen = set()
        orbits = []
        for label in self.labels:
            if label in seen:
                continue
            orbit = [label]
            seen.add(label)
            cur = sigma[label]
            while cur != label:
                orbit.append(cur)
                seen.add(cur)
                cur = sigma[cur]
            rep = min(orbit, key=self.label_index.__getitem__)
            orbits.append((rep, tuple(orbit)))
        orbits.sort(key=lambda t: self.label_index[t[0]])
        orbit_rep = {}
        for rep, orbit in orbits:
            for label in orbit:
                orbit_rep[label] = rep
        object.__setattr__(self, "orbits", tuple(orbit for _, orbit in orbits))
        object.__setattr__(self, "orbit_rep", orbit_rep)
        object.__setattr__(self, "orbit_reps", tuple(rep for rep, _ in orbits))

    def _build_fusion(self):
        group = self.group
        table = {}
        for si in self.simples:
            for sj in self.simples:
                prod = tuple(a * b for a, b in zip(si.char, sj.char))
                out = Counter()
                for sl in self.simples:
                    n = self._char_inner(prod, sl.char)
                    if n:
                        if n.denominator != 1 or n < 0:
                            raise NonIntegerMultiplicity(
                                f"fusion coefficient ({si.label!r},{sj.label!r})"
                                f"->{sl.label!r} is {n}")
                        out[sl.label] = int(n)
                dim = sum(self.simple_by_label[l].dim * k for l, k in out.items())
                if dim != si.dim * sj.dim:
                    raise InternalInconsistency("fusion table loses dimension")
                table[(si.label, sj.label)] = out
        for si in self.simples:
            for sj in self.simples:
                if table[(si.label, sj.label)] != table[(sj.label, si.label)]:
                    raise InternalInconsistency("fusion table is not symmetric")
        object.__setattr__(self, "fusion", table)

    # -- query helpers ------------------------------------------------------

    def require_label(self, label):
        if label not in self.label_index:
            raise UnknownLabel(f"no simple labelled {label!r}")
        return label

    def simple(self, label) -> SimpleRep:
        return self.simple_by_label[self.require_label(label)]

    def label_key(self, label) -> int:
        return self.label_index[self.require_label(label)]

    def sigma_power(self, label, k: int):
        k %= self.s
        for _ in range(k):
            label = self.sigma[label]
        return label

    def omega_s(self, label) -> Cyclotomic:
        """omega_i^s; constant on sigma-orbits."""
        return self.omega[label] ** self.s

    def zero(self) -> Cyclotomic:
        return Cyclotomic.zero(self.field_order)

    def one(self) -> Cyclotomic:
        return Cyclotomic.one(self.field_order)

    def scalar(self, v) -> Cyclotomic:
        if isinstance(v, Cyclotomic):
            if v.order != self.field_order:
                raise InvalidParameter(
                    f"scalar of order {v.order} in an order-{self.field_order} algebra")
            return v
        return Cyclotomic.rational(self.field_order, v)

    # -- identity -----------------------------------------------------------

    def _content_key(self):
        return (
            self.group.mul, self.group.generators, self.central, self.chi,
            self.field_order,
            tuple((s.label, s.dim, s.gen_mats) for s in self.simples),
        )

    def __eq__(self, other):
        if not isinstance(other, AlgebraData):
            return NotImplemented
        return self is other or self._content_key() == other._content_key()

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self._content_key())
            object.__setattr__(self, "_hash", h)
        return h


def _character_order(group: GroupData, chi) -> int:
    one = Cyclotomic.one(chi[0].order)
    powers = list(chi)
    for k in range(1, 2 * group.size + 1):
        if all(v == one for v in powers):
            return k
        powers = [p * c for p, c in zip(powers, chi)]
    raise InvalidParameter("chi does not have finite order")  # pragma: no cover


@lru_cache(maxsize=None)
def dihedral_algebra(m: int) -> AlgebraData:
    """The standard example: D_n with n = 2m, m > 1 odd, a^m central.

    Simples are the four linear characters eps, lam, chi, lamchi and the
    two-dimensional rho_l for l = 1..m-1; the extension uses chi and a^m,
    giving q = -1 and s = 2.  All scalars live in Q(zeta_n).
    """
    if not isinstance(m, int) or m < 3 or m % 2 == 0:
        raise InvalidParameter(f"m must be an odd integer >= 3, got {m!r}")
    n = 2 * m
    size = 2 * n
    # indices: 0..n-1 are a^k, n..2n-1 are a^k b
    mul = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            mul[i][j] = (i + j) % n
            mul[i][n + j] = n + (i + j) % n
            mul[n + i][j] = n + (i - j) % n
            mul[n + i][n + j] = (i - j) % n
    names = [_rot_name(k) for k in range(n)] + [_ref_name(k) for k in range(n)]
    group = GroupData(mul, generators=(1, n), names=names)

    one = Cyclotomic.one(n)

    def lin(va: int, vb: int) -> list[Matrix]:
        return [Matrix.scalar(n, 1, va * one), Matrix.scalar(n, 1, vb * one)]

    z = Cyclotomic.zero(n)
    simples = [
        SimpleRep("eps", lin(1, 1), group, n),
        SimpleRep("lam", lin(1, -1), group, n),
        SimpleRep("chi", lin(-1, 1), group, n),
        SimpleRep("lamchi", lin(-1, -1), group, n),
    ]
    for l in range(1, m):
        rot = Matrix(n, [[Cyclotomic.zeta(n, l), z], [z, Cyclotomic.zeta(n, -l)]])
        flip = Matrix(n, [[z, one], [one, z]])
        simples.append(SimpleRep(l, [rot, flip], group, n))

    chi_values = [(-Cyclotomic.one(n)) ** (k % 2) for k in range(n)] * 2
    return AlgebraData(
        group, simples, central=m, chi=chi_values, field_order=n,
        kind="dihedral", descriptor={"kind": "dihedral", "m": m})


def _rot_name(k: int) -> str:
    if k == 0:
        return "e"
    return "a" if k == 1 else f"a^{k}"


def _ref_name(k: int) -> str:
    if k == 0:
        return "b"
    return "a*b" if k == 1 else f"a^{k}*b"


def custom_algebra(group: GroupData, simples, central: int, chi,
                   field_order: int) -> AlgebraData:
    """Build AlgebraData from user-supplied tables.

    simples: list of (label, [one matrix per group generator]); matrices may
    be Matrix instances or nested lists of field scalars.  chi: one field
    value per group element.  Everything is validated: central really
    central, chi a homomorphism with chi(central) != 1, simples pairwise
    distinct irreducibles exhausting the group order.
    """
    reps = []
    for item in simples:
        if isinstance(item, SimpleRep):
            reps.append(item)
        else:
            label, mats = item
            reps.append(SimpleRep(label, mats, group, field_order))
    chi = tuple(
        v if isinstance(v, Cyclotomic) else Cyclotomic.rational(field_order, v)
        for v in chi)
    descriptor = {
        "kind": "custom",
        "field_order": field_order,
        "mul_table": [list(row) for row in group.mul],
        "generators": list(group.generators),
        "names": list(group.names),
        "central": central,
        "chi": [v.to_literal() for v in chi],
        "simples": [
            {"label": r.label, "matrices": [m.to_literals() for m in r.gen_mats]}
            for r in reps
        ],
    }
    return AlgebraData(group, reps, central, chi, field_order,
                       kind="custom", descriptor=descriptor)


def algebra_from_descriptor(desc: dict) -> AlgebraData:
    """Rebuild an algebra from the JSON descriptor emitted with modules."""
    if desc.get("kind") == "dihedral":
        return dihedral_algebra(int(desc["m"]))
    if desc.get("kind") != "custom":
        raise InvalidParameter(f"unknown algebra kind {desc.get('kind')!r}")
    from .syntax import parse_cyclotomic

    field_order = int(desc["field_order"])
    group = GroupData(desc["mul_table"], tuple(desc["generators"]),
                      names=desc.get("names"))
    chi = [parse_cyclotomic(field_order, v) for v in desc["chi"]]
    simples = [
        (_label_from_json(s["label"]),
         [Matrix.from_literals(field_order, m) for m in s["matrices"]])
        for s in desc["simples"]
    ]
    return custom_algebra(group, simples, int(desc["central"]), chi, field_order)


def _label_from_json(label):
    return label


def fusion_coeffs(alg: AlgebraData, i, j) -> dict:
    """Multiplicities N_{i,j}^l of V_l inside V_i tensor V_j."""
    alg.require_label(i)
    alg.require_label(j)
    return dict(alg.fusion[(i, j)])
