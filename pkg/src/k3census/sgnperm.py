"""The signed-permutation subgroup of the E8 automorphism group.

H is generated by coordinate sign changes with product +1 (a copy of
(Z_2)^7) and by the coordinate permutations (S_8); it is their semidirect
product, of order 2^7 * 8!, and its Sylow 2-subgroups are Sylow in the full
automorphism group, so every 2-subgroup of Aut(E8) is conjugate into H.

An element is stored as a signed image table: image[i] = +-(j+1) means
e_i is sent to +-e_j.  The sign-product-one condition is exactly what is
needed to preserve the half-sum roots, so H is precisely the set of signed
permutations preserving the lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import lcm, prod

from . import e8
from .e8 import LatticeVec


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of budget before finishing."""


@dataclass(frozen=True)
class SignedPerm:
    image: tuple[int, ...]  # image[i] = signed 1-based index of v(e_i)

    def __post_init__(self):
        if sorted(abs(x) for x in self.image) != list(range(1, 9)):
            raise ValueError("not a signed permutation of 8 letters")
        if prod(1 if x > 0 else -1 for x in self.image) != 1:
            raise ValueError("sign product must be +1 (lattice preservation)")

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_eps_perm(cls, eps, perm) -> "SignedPerm":
        """eps[j] is the sign attached to the target coordinate j; perm maps
        position i to perm[i] (0-based)."""
        return cls(tuple(eps[perm[i]] * (perm[i] + 1) for i in range(8)))

    @classmethod
    def diagonal(cls, eps) -> "SignedPerm":
        return cls(tuple(eps[i] * (i + 1) for i in range(8)))

    @classmethod
    def identity(cls) -> "SignedPerm":
        return cls(tuple(range(1, 9)))

    @classmethod
    def minus_one(cls) -> "SignedPerm":
        return cls(tuple(-(i + 1) for i in range(8)))

    @classmethod
    def from_cycles(cls, cycles, eps=None) -> "SignedPerm":
        """Permutation from disjoint 1-based cycles, optional sign vector."""
        perm = list(range(8))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                perm[a - 1] = b - 1
        e = tuple(eps) if eps is not None else (1,) * 8
        return cls.from_eps_perm(e, tuple(perm))

    # -- structure accessors ----------------------------------------------

    def perm(self) -> tuple[int, ...]:
        return tuple(abs(x) - 1 for x in self.image)

    def eps(self) -> tuple[int, ...]:
        """Sign on each target coordinate."""
        out = [0] * 8
        for x in self.image:
            out[abs(x) - 1] = 1 if x > 0 else -1
        return tuple(out)

    # -- group operations ---------------------------------------------------

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        """Composition: (self * other)(x) = self(other(x))."""
        out = []
        for t in other.image:
            j = abs(t) - 1
            s = self.image[j]
            out.append(s if t > 0 else -s)
        return SignedPerm(tuple(out))

    def inverse(self) -> "SignedPerm":
        out = [0] * 8
        for i, t in enumerate(self.image):
            j = abs(t) - 1
            out[j] = (i + 1) if t > 0 else -(i + 1)
        return SignedPerm(tuple(out))

    def conjugated_by(self, h: "SignedPerm") -> "SignedPerm":
        return h * self * h.inverse()

    def apply(self, x: LatticeVec) -> LatticeVec:
        d = [0] * 8
        for i, t in enumerate(self.image):
            j = abs(t) - 1
            d[j] = x.d[i] if t > 0 else -x.d[i]
        return LatticeVec(tuple(d))

    def apply_doubled(self, xd: tuple[int, ...]) -> tuple[int, ...]:
        d = [0] * 8
        for i, t in enumerate(self.image):
            j = abs(t) - 1
            d[j] = xd[i] if t > 0 else -xd[i]
        return tuple(d)

    # -- invariants -----------------------------------------------------

    def signed_cycles(self) -> list[tuple[tuple[int, ...], int]]:
        """Cycles of the underlying permutation with their sign products."""
        p = self.perm()
        seen = [False] * 8
        out = []
        for start in range(8):
            if seen[start]:
                continue
            cyc = []
            sign = 1
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                sign *= 1 if self.image[i] > 0 else -1
                i = p[i]
            out.append((tuple(cyc), sign))
        return out

    def order(self) -> int:
        return lcm(*(len(c) if s == 1 else 2 * len(c) for c, s in self.signed_cycles()))

    def trace(self) -> int:
        return sum(1 if t == i + 1 else -1 if t == -(i + 1) else 0
                   for i, t in enumerate(self.image))

    def charpoly(self) -> tuple[int, ...]:
        """Characteristic polynomial as a product of (x^L - s) over signed
        cycles; integer coefficients, low degree first."""
        poly = [1]
        for cyc, sign in self.signed_cycles():
            factor = [-sign] + [0] * (len(cyc) - 1) + [1]
            new = [0] * (len(poly) + len(factor) - 1)
            for i, a in enumerate(poly):
                if a:
                    for j, b in enumerate(factor):
                        new[i + j] += a * b
            poly = new
        return tuple(poly)

    def is_involution(self) -> bool:
        return self != SignedPerm.identity() and (self * self) == SignedPerm.identity()

    def matrix_e(self) -> list[list[Fraction]]:
        m = [[Fraction(0)] * 8 for _ in range(8)]
        for i, t in enumerate(self.image):
            m[abs(t) - 1][i] = Fraction(1 if t > 0 else -1)
        return m

    def __repr__(self):
        return "SignedPerm(%s)" % (self.image,)


def order_trace_charpoly(g: SignedPerm) -> tuple[int, int, tuple[int, ...]]:
    return g.order(), g.trace(), g.charpoly()


def group_order() -> int:
    """|H| = 2^7 * 8!."""
    return 2**7 * prod(range(1, 9))


# ---------------------------------------------------------------------------
# reflections as signed permutations, standard elements


def reflection_in_h(r: LatticeVec) -> SignedPerm:
    """w_r as a SignedPerm; only the +-e_i +- e_j roots give one."""
    m = e8.reflection_matrix(r)
    image = []
    for i in range(8):
        col = [m[j][i] for j in range(8)]
        nz = [(j, c) for j, c in enumerate(col) if c != 0]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            raise ValueError("reflection is not a signed permutation")
        j, c = nz[0]
        image.append((j + 1) if c > 0 else -(j + 1))
    return SignedPerm(tuple(image))


def w_f(i: int) -> SignedPerm:
    """Reflection in the basis root f_i (1-based); w_f(7, prime=True) is the
    reflection in e7-e8."""
    return reflection_in_h(e8.standard_basis()[i - 1])


def w_f7_prime() -> SignedPerm:
    return reflection_in_h(e8.f7_prime())


def std_cycle(p: int) -> SignedPerm:
    """The order-p coordinate cycle e_1 -> e_2 -> ... -> e_p, rest fixed."""
    return SignedPerm.from_cycles([tuple(range(1, p + 1))])


# ---------------------------------------------------------------------------
# fixed roots


def fixed_roots(gens) -> tuple[LatticeVec, ...]:
    """Roots fixed by every generator (a single SignedPerm is allowed)."""
    if isinstance(gens, SignedPerm):
        gens = [gens]
    out = []
    for r in e8.enumerate_roots():
        if all(g.apply_doubled(r.d) == r.d for g in gens):
            out.append(r)
    return tuple(out)


# ---------------------------------------------------------------------------
# involution classification


@dataclass(frozen=True)
class InvolutionClass:
    label: str                    # "1A'", "2A", "3A", "4A", "4A'"
    l_value: int                  # number of -1 eigenvalues after normalization
    negated: bool                 # True if -v was classified instead of v
    witness: LatticeVec | None    # root with odd (v(r), r), when one exists


_L_LABELS = {1: "1A'", 2: "2A", 3: "3A"}


def parity_witness(v: SignedPerm) -> LatticeVec | None:
    """A root r with (v(r), r) odd, or None if all pairings are even."""
    for r in e8.enumerate_roots():
        if e8.raw_inner(v.apply_doubled(r.d), r.d) % 2:
            return r
    return None


def involution_class(v: SignedPerm) -> InvolutionClass:
    """Conjugacy class of an involution, by eigenvalue count and root-pairing
    parity.  The count l(v) of -1 eigenvalues is normalized to <= 4 by
    passing to -v; at l = 4 the class is 4A' exactly when every root pairs
    evenly with its image, and 4A when an odd witness exists."""
    if not v.is_involution():
        raise ValueError("element is not an involution")
    if v == SignedPerm.minus_one():
        raise ValueError("central element -1 is excluded")
    lv = (8 - v.trace()) // 2
    negated = False
    if lv > 4:
        v = SignedPerm.minus_one() * v
        lv = 8 - lv
        negated = True
    if lv <= 3:
        return InvolutionClass(_L_LABELS[lv], lv, negated, parity_witness(v))
    w = parity_witness(v)
    return InvolutionClass("4A" if w is not None else "4A'", 4, negated, w)


def is_4a_prime_shape(v: SignedPerm) -> bool:
    """Combinatorial membership test for the even-pairing class inside H:
    the permutation part is trivial or four disjoint transpositions, the
    signs are constant on its cycles with the number of -1 entries divisible
    by 4, and a diagonal element has exactly four -1 entries."""
    if not v.is_involution():
        return False
    cycles = v.signed_cycles()
    two_cycles = [c for c, _ in cycles if len(c) == 2]
    eps = v.eps()
    p = v.perm()
    if any(eps[i] != eps[p[i]] for i in range(8)):
        return False
    neg = eps.count(-1)
    if len(two_cycles) == 0:
        return neg == 4
    if len(two_cycles) != 4:
        return False
    return neg % 4 == 0


def all_involutions():
    """Every involution in H except the central -1 (17038 elements)."""
    minus = SignedPerm.minus_one()
    ident = SignedPerm.identity()
    for n_trans in range(5):
        for pairs in _pairings(tuple(range(8)), n_trans):
            moved = [i for pr in pairs for i in pr]
            fixed = [i for i in range(8) if i not in moved]
            # signs: free on each transposition, even number of -1 on fixed
            for pair_signs in product((1, -1), repeat=n_trans):
                for fixed_signs in product((1, -1), repeat=len(fixed)):
                    if fixed_signs.count(-1) % 2:
                        continue
                    eps = [1] * 8
                    for pr, s in zip(pairs, pair_signs):
                        eps[pr[0]] = eps[pr[1]] = s
                    for i, s in zip(fixed, fixed_signs):
                        eps[i] = s
                    perm = list(range(8))
                    for a, b in pairs:
                        perm[a], perm[b] = b, a
                    v = SignedPerm.from_eps_perm(tuple(eps), tuple(perm))
                    if v != minus and v != ident:
                        yield v


def _pairings(items: tuple[int, ...], k: int):
    """All ways to choose k disjoint unordered pairs from items."""
    if k == 0:
        yield ()
        return
    for support in combinations(items, 2 * k):
        yield from _perfect_matchings(support)


def _perfect_matchings(support: tuple[int, ...]):
    if not support:
        yield ()
        return
    first = support[0]
    for j in range(1, len(support)):
        pair = (first, support[j])
        rest = support[1:j] + support[j + 1:]
        for more in _perfect_matchings(rest):
            yield (pair,) + more


@lru_cache(maxsize=None)
def four_a_prime_elements() -> tuple[SignedPerm, ...]:
    """All 910 elements of H in the even-pairing involution class."""
    out = [v for v in all_involutions() if is_4a_prime_shape(v)]
    return tuple(sorted(out, key=lambda v: v.image))


# ---------------------------------------------------------------------------
# order-4 elements over the even-pairing class


@dataclass(frozen=True)
class Order4Shape:
    case: str            # "i" (square of permutation part trivial) or "ii"
    transpositions: int  # for case i: 2, 3 or 4; for case ii: 0
    trace: int


def classify_order4(v: SignedPerm) -> Order4Shape:
    """Normal-form shape of an order-4 element whose square is in the
    even-pairing class: either the permutation part is an involution made of
    2, 3 or 4 transpositions (case i), or it is a pair of disjoint 4-cycles
    with signs constant on both (case ii)."""
    if v.order() != 4:
        raise ValueError("element does not have order 4")
    sq = v * v
    if involution_class(sq).label != "4A'":
        raise ValueError("square is not in the even-pairing class")
    tr = v.trace()
    assert tr % 2 == 0 and -4 <= tr <= 4
    cycles = [len(c) for c, _ in v.signed_cycles()]
    if max(cycles) == 4:
        assert sorted(cycles) == [4, 4]
        eps = v.eps()
        p = v.perm()
        assert all(eps[i] == eps[p[i]] for i in range(8))
        return Order4Shape("ii", 0, tr)
    n_trans = cycles.count(2)
    assert n_trans in (2, 3, 4)
    return Order4Shape("i", n_trans, tr)


def square_roots(c: SignedPerm) -> tuple[SignedPerm, ...]:
    """All v in H with v*v = c, found by a structured scan: the permutation
    part of v must square to the permutation part of c, and the signs follow
    by solving eps_i * eps_{perm(i)} = eps_c along cycles."""
    out = []
    target_perm = c.perm()
    # candidate permutation parts: brute over S8 would be 40320; restrict to
    # permutations whose square matches
    for perm in permutations(range(8)):
        ok = all(perm[perm[i]] == target_perm[i] for i in range(8))
        if not ok:
            continue
        for v in _signed_lifts(perm, c):
            out.append(v)
    return tuple(sorted(out, key=lambda v: v.image))


def _signed_lifts(perm, c: SignedPerm):
    """Signed permutations with the given permutation part squaring to c."""
    # v(e_i) = eps[perm[i]] e_perm[i]; (v*v)(e_i) = eps[perm[i]] eps[perm[perm[i]]] e_..
    ceps = c.eps()
    cperm = c.perm()
    # unknowns eps[0..7] with eps[perm[i]] * eps[perm-squared(i)] = sign of c at i
    # iterate over cycles of perm, propagating choices
    cycles = []
    seen = [False] * 8
    for s in range(8):
        if seen[s]:
            continue
        cyc = []
        i = s
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i]
        cycles.append(cyc)

    def constraints_ok(eps):
        if prod(eps) != 1:
            return False
        for i in range(8):
            if eps[perm[i]] * eps[perm[perm[i]]] != ceps[cperm[i]]:
                return False
        return True

    # free sign choice per cycle start, rest forced by the constraint chain
    for choice in product((1, -1), repeat=len(cycles)):
        eps = [0] * 8
        consistent = True
        for cyc, c0 in zip(cycles, choice):
            eps[perm[cyc[0]]] = c0
            for i in cyc:
                j = perm[i]
                jj = perm[perm[i]]
                if eps[j] and not eps[jj]:
                    eps[jj] = ceps[cperm[i]] * eps[j]
        if 0 in eps:
            # underdetermined positions (can happen for fixed points); try both
            holes = [i for i, x in enumerate(eps) if x == 0]
            for fill in product((1, -1), repeat=len(holes)):
                trial = eps[:]
                for h, s in zip(holes, fill):
                    trial[h] = s
                if constraints_ok(trial):
                    yield SignedPerm.from_eps_perm(tuple(trial), tuple(perm))
            continue
        if constraints_ok(eps):
            yield SignedPerm.from_eps_perm(tuple(eps), tuple(perm))


# ---------------------------------------------------------------------------
# obstruction searches


Img = tuple[int, ...]


def _img_mul(a: Img, b: Img) -> Img:
    """Raw composition (a then applied after b) on image tuples."""
    return tuple(a[t - 1] if t > 0 else -a[-t - 1] for t in b)


def _img_inv(a: Img) -> Img:
    out = [0] * 8
    for i, t in enumerate(a):
        if t > 0:
            out[t - 1] = i + 1
        else:
            out[-t - 1] = -(i + 1)
    return tuple(out)


def _img_trace(a: Img) -> int:
    return sum(1 if t == i + 1 else -1 if t == -(i + 1) else 0 for i, t in enumerate(a))


_IDENT_IMG: Img = tuple(range(1, 9))


@dataclass(frozen=True)
class Z24Report:
    average_fixed_dim: Fraction
    verdict: str
    max_all_even_rank: int
    rank2_example: tuple[SignedPerm, SignedPerm]


def search_z2_4_obstruction(budget: int = 20_000_000) -> Z24Report:
    """Averaging obstruction for a (Z_2)^4 all of whose involutions have the
    even-pairing type, plus an exhaustive search inside H confirming that no
    such subgroup exists (the best possible rank is 3)."""
    avg = Fraction(8 + 15 * 0, 16)
    atoms = [v.image for v in four_a_prime_elements()]
    atom_set = set(atoms)

    counter = [0]

    def charge(n=1):
        counter[0] += n
        if counter[0] > budget:
            raise SearchBudgetExceeded("budget %d exhausted" % budget)

    def closed_extension(subgroup: list[Img], h: Img):
        """Products of h with the current subgroup; None if any leaves the
        even-pairing class (the identity product means h is in the subgroup)."""
        new = []
        for g in subgroup:
            charge()
            p = _img_mul(g, h)
            if p == _IDENT_IMG or p not in atom_set:
                return None
            new.append(p)
        return new

    max_rank = 0
    best_pair: tuple[Img, Img] | None = None

    def grow(subgroup: list[Img], gens: list[Img], pool: list[Img]):
        nonlocal max_rank, best_pair
        max_rank = max(max_rank, len(gens))
        if len(gens) == 2 and best_pair is None:
            best_pair = (gens[0], gens[1])
        if len(gens) == 4:
            raise AssertionError("found an all-even-pairing (Z2)^4: %r" % (gens,))
        for idx, h in enumerate(pool):
            new_elts = closed_extension(subgroup, h)
            if new_elts is None:
                continue
            sub2 = subgroup + new_elts
            pool2 = []
            for h2 in pool[idx + 1:]:
                charge(len(new_elts))
                if all(_img_mul(h2, g) == _img_mul(g, h2) for g in new_elts):
                    pool2.append(h2)
            grow(sub2, gens + [h], pool2)

    # conjugating the whole subgroup moves its first generator to one of the
    # two H-class representatives, so two starting points suffice
    d0 = SignedPerm.diagonal((-1, -1, -1, -1, 1, 1, 1, 1)).image
    pperm = SignedPerm.from_cycles([(1, 2), (3, 4), (5, 6), (7, 8)]).image
    for g1 in (d0, pperm):
        assert g1 in atom_set
        level1 = []
        for h in atoms:
            if h == g1:
                continue
            charge()
            if _img_mul(g1, h) != _img_mul(h, g1):
                continue
            if closed_extension([g1], h) is not None:
                level1.append(h)
        grow([_IDENT_IMG, g1], [g1], level1)

    assert best_pair is not None
    return Z24Report(avg, "no (Z2)^4 with all involutions of even-pairing type",
                     max_rank, (SignedPerm(best_pair[0]), SignedPerm(best_pair[1])))


@dataclass(frozen=True)
class Q8Report:
    trace_values: tuple[int, ...]          # traces of admissible order-4 elements
    trace_triples: tuple[tuple[int, int, int], ...]
    verdict: str


def search_q8_obstruction(budget: int = 4_000_000) -> Q8Report:
    """Trace obstruction for quaternionic subgroups acting on both lattice
    factors.

    Enumerates, up to conjugacy of the central involution, all pairs (a, b)
    in H with a^2 = b^2 = c central of even-pairing type and b a b^-1 =
    a^-1, records the realizable trace triples (tr a, tr b, tr ab), and
    checks that no two triples sum to (-4, -4, -4) coordinatewise."""
    d0 = SignedPerm.diagonal((-1, -1, -1, -1, 1, 1, 1, 1))
    pperm = SignedPerm.from_cycles([(1, 2), (3, 4), (5, 6), (7, 8)])
    triples: set[tuple[int, int, int]] = set()
    traces: set[int] = set()
    steps = 0
    for c in (d0, pperm):
        imgs = [v.image for v in square_roots(c)]
        traces.update(_img_trace(a) for a in imgs)
        invs = {a: _img_inv(a) for a in imgs}
        for a in imgs:
            a_inv = invs[a]
            tr_a = _img_trace(a)
            for b in imgs:
                steps += 1
                if steps > budget:
                    raise SearchBudgetExceeded("budget %d exhausted" % budget)
                if _img_mul(_img_mul(b, a), invs[b]) == a_inv:
                    triples.add((tr_a, _img_trace(b), _img_trace(_img_mul(a, b))))
    want = (-4, -4, -4)
    hit = [(t1, t2) for t1 in triples for t2 in triples
           if tuple(x + y for x, y in zip(t1, t2)) == want]
    verdict = ("no pair of realizable trace triples sums to (-4,-4,-4)"
               if not hit else "OBSTRUCTION FAILED: %r" % hit)
    assert not hit
    return Q8Report(tuple(sorted(traces)), tuple(sorted(triples)), verdict)
