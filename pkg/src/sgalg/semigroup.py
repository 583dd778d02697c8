"""Numerical semigroups: exact membership, gaps, order and morphism data.

A numerical semigroup here is a subsemigroup of the non-negative integers
containing 0 whose generators have gcd 1, so its difference group is the
integers and its complement in them is finite.
"""

from __future__ import annotations

from math import gcd


class NumericalSemigroup:
    """Finitely generated, gcd-1 subsemigroup of the non-negative integers."""

    __slots__ = ("generators", "gaps", "frobenius", "_gapset", "_small")

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise ValueError("generator set must be non-empty")
        if any(g < 1 for g in gens):
            raise ValueError("generators must be positive integers")
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1:
            raise ValueError(f"gcd of generators is {g}, not 1; "
                             "the difference group would be a proper subgroup")

        # Sieve bound max*min dominates the Frobenius number of any gcd-1 set.
        bound = gens[-1] * gens[0]
        reachable = [False] * (bound + 1)
        reachable[0] = True
        for n in range(1, bound + 1):
            reachable[n] = any(n >= a and reachable[n - a] for a in gens)
        gaps = tuple(n for n in range(1, bound + 1) if not reachable[n])
        self.gaps = gaps
        self.frobenius = gaps[-1] if gaps else -1
        self._gapset = frozenset(gaps)
        self._small = tuple(n for n in range(0, self.frobenius + 1)
                            if n not in self._gapset)
        # Keep only the minimal generating system: a generator is redundant
        # exactly when it is a sum of two nonzero members.
        def reducible(a: int) -> bool:
            return any(self.contains(m) and self.contains(a - m)
                       for m in range(1, a))
        self.generators = tuple(a for a in gens if not reducible(a))

    # -- membership and enumeration ---------------------------------------

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return n not in self._gapset

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def element_at(self, i: int) -> int:
        """The i-th smallest member, 0-indexed."""
        if i < 0:
            raise ValueError("index must be non-negative")
        if i < len(self._small):
            return self._small[i]
        return self.frobenius + 1 + (i - len(self._small))

    def members_upto(self, bound: int) -> list[int]:
        """All members m with m <= bound, increasing."""
        if bound < 0:
            return []
        out = [m for m in self._small if m <= bound]
        out.extend(range(self.frobenius + 1, bound + 1))
        return out

    def first_member_at_least(self, n: int) -> int:
        m = max(n, 0)
        while not self.contains(m):
            m += 1
        return m

    # -- order structure ---------------------------------------------------

    def natural_below(self, a: int, b: int) -> bool:
        """True when b - a is a member, i.e. a precedes b in the natural order."""
        if not self.contains(a):
            raise ValueError(f"{a} is not a member")
        if not self.contains(b):
            raise ValueError(f"{b} is not a member")
        return self.contains(b - a)

    def is_totally_ordered(self) -> bool:
        """Whether every pair of members is comparable.

        Structurally this is "no gaps"; the pairwise scan up to
        frobenius + max(generators) is run as well and the two answers are
        required to agree.
        """
        structural = not self.gaps
        bound = self.frobenius + max(self.generators)
        members = self.members_upto(bound)
        pairwise = all(self.contains(b - a) or self.contains(a - b)
                       for i, a in enumerate(members) for b in members[i + 1:])
        if structural != pairwise:
            raise AssertionError("totality predicate disagrees with gap structure")
        return structural

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __str__(self):
        return "S(" + ",".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"NumericalSemigroup({list(self.generators)!r})"


def build(generators) -> NumericalSemigroup:
    """Construct a numerical semigroup from a set of positive generators."""
    return NumericalSemigroup(generators)


def morphism_multipliers(s1: NumericalSemigroup, s2: NumericalSemigroup,
                         bound: int) -> list[int]:
    """Multipliers m in [0, bound] with m*g in s2 for every generator g of s1.

    Additive maps between these semigroups extend to the integers, hence are
    multiplications; m = 0 is the trivial morphism and is included.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    return [m for m in range(0, bound + 1)
            if all(s2.contains(m * g) for g in s1.generators)]


def automorphism_multipliers(s: NumericalSemigroup) -> set[int]:
    """All m with m*S = S.  For a numerical semigroup this is always {1}:
    frobenius+1 and frobenius+2 are consecutive members, and no m >= 2 divides
    both, so m*S is never all of S for m >= 2.  The scan below confirms it.
    """
    def is_multiplier_auto(m: int) -> bool:
        if m == 0:
            return False
        if not all(s.contains(m * g) for g in s.generators):
            return False
        # Surjectivity on the decisive window: frobenius+2 covers the
        # consecutive-members argument above.
        for w in s.members_upto(s.frobenius + 2):
            if w % m != 0 or not s.contains(w // m):
                return False
        return True

    found = {m for m in range(1, max(3, max(s.generators) + 1))
             if is_multiplier_auto(m)}
    if found != {1}:
        raise AssertionError(f"unexpected automorphism multipliers {found}")
    return found
