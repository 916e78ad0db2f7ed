"""Size-s circular-h shift side information and its hypergraph."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Mapping

from .errors import ParameterError


@dataclass(frozen=True)
class Instance:
    """A private PICOD(1) instance with m messages.

    User i (1-based) holds messages (i-1)h+1, ..., (i-1)h+s, taken mod m.
    Users whose windows start at the same offset would be duplicates, so
    only n = m / gcd(m, h) distinct users exist.
    """

    m: int
    s: int
    h: int = 1

    def __post_init__(self):
        if self.m < 2:
            raise ParameterError(f"need m >= 2, got m={self.m}")
        if self.m > 64:
            raise ParameterError(f"m is capped at 64, got m={self.m}")
        if not 0 <= self.s <= self.m - 1:
            raise ParameterError(f"need 0 <= s <= m-1, got s={self.s}, m={self.m}")
        if self.h < 1:
            raise ParameterError(f"need h >= 1, got h={self.h}")

    @property
    def g(self) -> int:
        return gcd(self.m, self.h)

    @property
    def n(self) -> int:
        return self.m // self.g

    @property
    def users(self) -> range:
        return range(1, self.n + 1)

    def start(self, i: int) -> int:
        """First message index held by user i."""
        self._check_user(i)
        return (i - 1) * self.h % self.m + 1

    def side_info(self, i: int) -> frozenset[int]:
        first = self.start(i)
        return frozenset((first - 1 + k) % self.m + 1 for k in range(self.s))

    @cached_property
    def side_masks(self) -> tuple[int, ...]:
        """Packed side-information sets, user 1 first."""
        out = []
        for i in self.users:
            mask = 0
            for j in self.side_info(i):
                mask |= 1 << (j - 1)
            out.append(mask)
        return tuple(out)

    def user_with_start(self, first: int) -> int | None:
        """User whose window begins at message ``first``, if any."""
        for i in self.users:
            if self.start(i) == first:
                return i
        return None

    def _check_user(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ParameterError(f"user index {i} outside [1, {self.n}]")

    def to_dict(self) -> dict:
        return {"m": self.m, "s": self.s, "h": self.h}

    @classmethod
    def from_dict(cls, d: Mapping) -> "Instance":
        # g and n are always recomputed
        return cls(int(d["m"]), int(d["s"]), int(d.get("h", 1)))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def new_instance(m: int, s: int, h: int = 1) -> Instance:
    return Instance(m, s, h)


@dataclass(frozen=True)
class Nth:
    """Network topology hypergraph: users are vertices, messages are hyperedges.

    ``incidence[j]`` is the set of users lacking message j.
    """

    n: int
    m: int
    incidence: Mapping[int, frozenset[int]] = field(repr=False)

    def edges_of(self, i: int) -> list[int]:
        return [j for j in range(1, self.m + 1) if i in self.incidence[j]]


def build_nth(inst: Instance) -> Nth:
    inc = {
        j: frozenset(i for i in inst.users if j not in inst.side_info(i))
        for j in range(1, inst.m + 1)
    }
    return Nth(inst.n, inst.m, inc)


def find_one_factor(nth: Nth) -> frozenset[int] | None:
    """Exact cover of the users by hyperedges, or None.

    Depth-first: always branch on the lowest uncovered user, trying its
    hyperedges in increasing message order.
    """
    all_users = frozenset(range(1, nth.n + 1))
    edges = {i: [j for j in nth.edges_of(i)] for i in all_users}

    def search(covered: frozenset[int], chosen: list[int]) -> list[int] | None:
        if covered == all_users:
            return chosen
        v = min(all_users - covered)
        for j in edges[v]:
            arc = nth.incidence[j]
            if arc & covered:
                continue
            found = search(covered | arc, chosen + [j])
            if found is not None:
                return found
        return None

    found = search(frozenset(), [])
    return None if found is None else frozenset(found)


def has_one_factor(nth: Nth) -> bool:
    return find_one_factor(nth) is not None


def is_one_factor(nth: Nth, factor) -> bool:
    counts = dict.fromkeys(range(1, nth.n + 1), 0)
    for j in factor:
        if not 1 <= j <= nth.m:
            return False
        for i in nth.incidence[j]:
            counts[i] += 1
    return all(c == 1 for c in counts.values())
