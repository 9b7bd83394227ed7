"""Registry of worked examples: lattices, actions and characteristic vectors
whose obstruction verdict is known in advance.

Every fixture is checked through the public checker API; nothing here
bypasses hypothesis evaluation.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Tuple

import numpy as np

from swobstruct.errors import InvalidParamsError, UnknownExampleError
from swobstruct.isometry.base import ActionShape, GroupAction, identity, make_action, reflection
from swobstruct.isometry.blocks import (
    Swap,
    act_on,
    block_builder,
    blocks_of_kind,
    cycle,
    minus_id_on,
)
from swobstruct.lattice.base import Lattice, Summand, make_lattice, vector
from swobstruct.obstruction.checkers import check_action
from swobstruct.obstruction.hypotheses import ManifoldData
from swobstruct.obstruction.verdict import Conclusion, Verdict
from swobstruct.utils.logger import get_logger

logger = get_logger(__name__)

# Printed data of the pair of orthogonal square-2 classes in 2(1) + 11(-1).
E1E2_C = (3, 1) + (1,) * 11
E1E2_E1 = (0, 2, 1, 1) + (0,) * 9
E1E2_E2 = (6, 1, 1, 1) + (2,) * 8 + (1,)

# Printed classes of the order-4 construction; their span is degenerate.
ORDER4_C = (3, 1, 1) + (1,) * 12
ORDER4_X = (0, 2, 0, 1, 1) + (0,) * 10
ORDER4_Y = (3, 2, 1) + (1,) * 12
ORDER4_Z = (0, 0, 2, 0, 0, 1, 1) + (0,) * 8

# Antidiagonal -1 on H: -1 on the positive line, +1 on the negative line.
H_FLIP = ((0, -1), (-1, 0))


@dataclass(frozen=True)
class ExampleFixture:
    """A lattice with an action and a characteristic vector of known verdict."""

    id: str
    lattice: Lattice
    action: GroupAction
    c: Tuple[int, ...]
    expected: Conclusion
    provenance: str
    params: Dict[str, int] = field(default_factory=dict)

    def run(self, all_splits: bool = True) -> Verdict:
        """Check the fixture through the dispatching checker."""
        return check_action(ManifoldData(self.lattice), self.action, self.c, all_splits=all_splits)


@dataclass(frozen=True)
class _Entry:
    builder: Callable[..., ExampleFixture]
    defaults: Dict[str, int]
    summary: str


def _require(condition: bool, example_id: str, message: str, params: Mapping[str, int]) -> None:
    if not condition:
        raise InvalidParamsError(
            f"{example_id}: {message}",
            "build_example",
            details={"params": dict(params)},
        )


def _z2_spin(a: int, b: int) -> ExampleFixture:
    params = {"a": a, "b": b}
    _require(a >= 1 and b >= 1, "z2-spin", "needs a >= 1 and b >= 1", params)
    l = make_lattice([Summand.hyperbolic(count=a), Summand.e8(sign=-1, count=2 * b)])
    e8 = blocks_of_kind(l, "-E8")
    ops = [minus_id_on(*blocks_of_kind(l, "H"))]
    ops += [Swap(e8[2 * i], e8[2 * i + 1]) for i in range(b)]
    f = block_builder(l, ops)
    return ExampleFixture(
        id="z2-spin",
        lattice=l,
        action=make_action(ActionShape.Z2, [f]),
        c=(0,) * l.rank,
        expected=Conclusion.OBSTRUCTED,
        provenance=(
            "involution -Id on each H and swapping the -E8 copies in pairs on "
            f"{a}(S^2 x S^2) # {2 * b}(-E8) with the spin structure c = 0; only the "
            "obstruction is checked, not topological or locally linear realisability"
        ),
        params=params,
    )


def _z2k(a: int, k: int, b: int) -> ExampleFixture:
    params = {"a": a, "k": k, "b": b}
    _require(a >= 1 and a % 2 == 1, "z2k", "a must be odd and positive", params)
    _require(k >= 3 and k % 2 == 1, "z2k", "k must be odd and at least 3", params)
    _require(b >= 1, "z2k", "b must be positive", params)
    l = make_lattice([Summand.hyperbolic(count=a), Summand.e8(sign=-1, count=2 * k * b)])
    e8 = blocks_of_kind(l, "-E8")
    ops = [act_on(blocks_of_kind(l, "H"), H_FLIP)]
    ops += [cycle(e8[2 * k * i : 2 * k * (i + 1)]) for i in range(b)]
    f = block_builder(l, ops)
    return ExampleFixture(
        id="z2k",
        lattice=l,
        action=make_action(ActionShape.CYCLIC, [f], k=2 * k),
        c=(0,) * l.rank,
        expected=Conclusion.OBSTRUCTED,
        provenance=(
            f"Z_{2 * k} action: antidiagonal -1 on each of the {a} copies of H and "
            f"cyclic permutation of {b} group(s) of {2 * k} copies of -E8; c = 0"
        ),
        params=params,
    )


def _order4() -> ExampleFixture:
    l = make_lattice(
        [Summand.hyperbolic(count=3), Summand.e8(sign=-1), Summand.diag([-1])]
    )
    h = blocks_of_kind(l, "H")
    f = block_builder(l, [cycle([h[0], h[1]]), minus_id_on(h[0], h[2])])
    c = [0] * l.rank
    c[-1] = 1
    return ExampleFixture(
        id="order4",
        lattice=l,
        action=make_action(ActionShape.CYCLIC, [f], k=4),
        c=tuple(c),
        expected=Conclusion.OBSTRUCTED,
        provenance=(
            "Z_4 action on 3CP^2 # 12(-CP^2) presented as 3H + -E8 + <-1>: a quarter "
            "rotation of the first two copies of H, -Id on the third, identity elsewhere; "
            "c^2 = -1. The printed x, y, z span a degenerate plane (x^2 = y^2 = <x,y> = 2), "
            "so r_x r_y r_z has infinite order; this presentation realises the stated "
            "decomposition R_- + C_1 instead"
        ),
    )


def _e1e2_lattice() -> Lattice:
    return make_lattice([Summand.diag([1, 1]), Summand.diag([-1], count=11)])


def _commuting_pair(degenerate: bool = False) -> ExampleFixture:
    l = _e1e2_lattice()
    f1 = reflection(l, E1E2_E1)
    f2 = f1 if degenerate else reflection(l, E1E2_E2)
    return ExampleFixture(
        id="commuting-pair-degenerate" if degenerate else "commuting-pair",
        lattice=l,
        action=make_action(ActionShape.FREE_ABELIAN, [f1, f2]),
        c=E1E2_C,
        expected=Conclusion.INCONCLUSIVE if degenerate else Conclusion.OBSTRUCTED,
        provenance=(
            "reflections in the orthogonal square-2 classes e1, e2 of 2CP^2 # 11(-CP^2), "
            + ("both maps r_e1, so det(eps) = 0" if degenerate else "commuting, eps = I")
        ),
    )


def _e1e2_involution() -> ExampleFixture:
    l = _e1e2_lattice()
    f = reflection(l, E1E2_E1) @ reflection(l, E1E2_E2)
    return ExampleFixture(
        id="e1e2-involution",
        lattice=l,
        action=make_action(ActionShape.Z2, [f]),
        c=E1E2_C,
        expected=Conclusion.OBSTRUCTED,
        provenance="product r_e1 r_e2 of the commuting reflections, -1 on the positive plane",
    )


def _even_odd(p: int, q: int) -> ExampleFixture:
    params = {"p": p, "q": q}
    _require(p >= 1 and q >= 0, "even-odd", "needs p >= 1 and q >= 0", params)
    summands = [Summand.e8(count=p)]
    if q:
        summands.append(Summand.e8(sign=-1, count=q))
    summands.append(Summand.diag([-1]))
    l = make_lattice(summands)
    f = block_builder(l, [minus_id_on(*blocks_of_kind(l, "E8"))])
    c = [0] * l.rank
    c[-1] = 1
    return ExampleFixture(
        id="even-odd",
        lattice=l,
        action=make_action(ActionShape.Z2, [f]),
        c=tuple(c),
        expected=Conclusion.OBSTRUCTED if q > p else Conclusion.HYPOTHESIS_FAILED,
        provenance=(
            f"P + (-Q) with P = {p}E8, Q = {q}E8 + <1>, f = -Id on P; "
            "c^2 = -1 exceeds the signature exactly when q > p"
        ),
        params=params,
    )


def _spin_minus_identity(a: int, b: int) -> ExampleFixture:
    params = {"a": a, "b": b}
    _require(a >= 1 and b >= 0, "spin-minus-identity", "needs a >= 1 and b >= 0", params)
    summands = [Summand.hyperbolic(count=a)]
    if b:
        summands.append(Summand.e8(sign=-1, count=b))
    l = make_lattice(summands)
    f = block_builder(l, [minus_id_on(*range(len(l.blocks)))])
    return ExampleFixture(
        id="spin-minus-identity",
        lattice=l,
        action=make_action(ActionShape.Z2, [f]),
        c=(0,) * l.rank,
        expected=Conclusion.OBSTRUCTED if b >= 1 else Conclusion.HYPOTHESIS_FAILED,
        provenance=(
            f"-Id on {a}H + {b}(-E8) with c = 0; needs sigma != 0, "
            "so b = 0 fails c^2 > sigma"
        ),
        params=params,
    )


def _klein_blocks(a: int, b: int) -> Tuple[List[int], List[int], List[int], List[int]]:
    a1 = list(range(a))
    a2 = list(range(a, 2 * a))
    b1 = list(range(2 * a, 2 * a + b))
    b2 = list(range(2 * a + b, 2 * a + 2 * b))
    return a1, a2, b1, b2


def _klein(a: int, b: int, c: int) -> ExampleFixture:
    params = {"a": a, "b": b, "c": c}
    _require(min(a, b, c) >= 1, "klein", "needs a, b, c >= 1", params)
    l = make_lattice(
        [
            Summand.hyperbolic(count=2 * a + 2 * b),
            Summand.e8(sign=-1, count=4 * c),
            Summand.diag([-1]),
        ]
    )
    a1, a2, b1, b2 = _klein_blocks(a, b)
    e8 = blocks_of_kind(l, "-E8")
    quads = [e8[4 * i : 4 * i + 4] for i in range(c)]

    ops1 = [minus_id_on(*(a1 + a2))] + [Swap(x, y) for x, y in zip(b1, b2)]
    ops1 += [Swap(q[0], q[1]) for q in quads] + [Swap(q[2], q[3]) for q in quads]
    ops2 = [Swap(x, y) for x, y in zip(a1, a2)] + [minus_id_on(*(b1 + b2))]
    ops2 += [Swap(q[0], q[2]) for q in quads] + [Swap(q[1], q[3]) for q in quads]
    f1 = block_builder(l, ops1)
    f2 = block_builder(l, ops2)

    cv = [0] * l.rank
    cv[-1] = 3
    return ExampleFixture(
        id="klein",
        lattice=l,
        action=make_action(ActionShape.KLEIN, [f1, f2]),
        c=tuple(cv),
        expected=Conclusion.OBSTRUCTED,
        provenance=(
            f"Z2 x Z2 action on 2(a+b)CP^2 # (2a+2b+32c+1)(-CP^2) presented as "
            f"{2 * a + 2 * b}H + {4 * c}(-E8) + <-1> (isomorphic odd forms, not verified here); "
            f"(q, r, s) = ({a}, {b}, {a + b}) on H^+, c = 3 times the <-1> generator"
        ),
        params=params,
    )


def _klein_delegated() -> ExampleFixture:
    l = make_lattice([Summand.hyperbolic(), Summand.e8(sign=-1)])
    f1 = identity(l)
    f2 = block_builder(l, [minus_id_on(0)])
    return ExampleFixture(
        id="klein-delegated",
        lattice=l,
        action=make_action(ActionShape.KLEIN, [f1, f2]),
        c=(0,) * l.rank,
        expected=Conclusion.OBSTRUCTED,
        provenance="b_plus = 1 Klein action (identity, -Id on H) reducing to the involution case",
    )


class ExampleRegistry:
    """Registry of fixture builders keyed by example id."""

    def __init__(self):
        self._entries: Dict[str, _Entry] = {}

    def register(
        self,
        example_id: str,
        builder: Callable[..., ExampleFixture],
        defaults: Optional[Dict[str, int]] = None,
        summary: str = "",
    ) -> None:
        self._entries[example_id] = _Entry(builder, dict(defaults or {}), summary)

    def ids(self) -> List[str]:
        return sorted(self._entries)

    def defaults(self, example_id: str) -> Dict[str, int]:
        return dict(self._get(example_id).defaults)

    def _get(self, example_id: str) -> _Entry:
        entry = self._entries.get(example_id)
        if entry is None:
            raise UnknownExampleError(
                f"Unknown example {example_id!r}; known: {', '.join(self.ids())}",
                "build_example",
            )
        return entry

    def build(self, example_id: str, params: Optional[Mapping[str, int]] = None) -> ExampleFixture:
        """Build a fixture, filling unspecified parameters with defaults.

        Raises:
            UnknownExampleError: If the id is not registered
            InvalidParamsError: On unknown parameter names or out-of-range values
        """
        entry = self._get(example_id)
        given = dict(params or {})
        unknown = sorted(set(given) - set(entry.defaults))
        if unknown:
            raise InvalidParamsError(
                f"{example_id}: unknown parameter(s) {', '.join(unknown)}; "
                f"accepted: {', '.join(sorted(entry.defaults)) or 'none'}",
                "build_example",
            )
        merged = {**entry.defaults, **{k: int(v) for k, v in given.items()}}
        fixture = entry.builder(**merged)
        logger.debug(
            "Example built",
            example=example_id,
            params=merged,
            rank=fixture.lattice.rank,
        )
        return fixture

    def describe(self) -> List[Dict[str, object]]:
        """Id, default parameters and summary of every example."""
        return [
            {
                "id": example_id,
                "params": dict(self._entries[example_id].defaults),
                "summary": self._entries[example_id].summary,
            }
            for example_id in self.ids()
        ]


example_registry = ExampleRegistry()
example_registry.register("z2-spin", _z2_spin, {"a": 4, "b": 1}, "involution on a(S^2xS^2) # 2b(-E8), c = 0")
example_registry.register("z2k", _z2k, {"a": 3, "k": 3, "b": 1}, "Z_2k action on aH + 2kb(-E8), a and k odd")
example_registry.register("order4", _order4, {}, "Z_4 action with V = R_- + C_1 on 3CP^2 # 12(-CP^2)")
example_registry.register("commuting-pair", _commuting_pair, {}, "reflections r_e1, r_e2 over T^2")
example_registry.register(
    "commuting-pair-degenerate",
    lambda: _commuting_pair(degenerate=True),
    {},
    "r_e1 twice over T^2, det(eps) = 0",
)
example_registry.register("e1e2-involution", _e1e2_involution, {}, "involution r_e1 r_e2 over RP^2")
example_registry.register("even-odd", _even_odd, {"p": 1, "q": 2}, "-Id on pE8 inside pE8 + q(-E8) + <-1>")
example_registry.register(
    "spin-minus-identity", _spin_minus_identity, {"a": 1, "b": 1}, "-Id on aH + b(-E8), c = 0"
)
example_registry.register(
    "klein", _klein, {"a": 3, "b": 3, "c": 1}, "Z2 x Z2 action with (q, r, s) = (a, b, a+b)"
)
example_registry.register("klein-delegated", _klein_delegated, {}, "Klein action with b_plus = 1")


def build_example(example_id: str, params: Optional[Mapping[str, int]] = None) -> ExampleFixture:
    """Build a registered example fixture."""
    return example_registry.build(example_id, params)


def list_examples() -> List[Dict[str, object]]:
    return example_registry.describe()


def reproduce(
    example_id: str, params: Optional[Mapping[str, int]] = None
) -> Tuple[ExampleFixture, Verdict]:
    """Build a fixture and run its checker."""
    fixture = build_example(example_id, params)
    verdict = fixture.run()
    logger.info(
        "Example reproduced",
        example=example_id,
        expected=fixture.expected.value,
        conclusion=verdict.conclusion.value,
    )
    return fixture, verdict


ORDER4_PRINTED_NAMES = ("c", "x", "y", "z")


def order4_printed_vectors() -> Tuple[Lattice, Dict[str, np.ndarray]]:
    """The printed c, x, y, z of the order-4 construction in 3(1) + 12(-1)."""
    l = make_lattice([Summand.diag([1, 1, 1]), Summand.diag([-1], count=12)])
    coords = (ORDER4_C, ORDER4_X, ORDER4_Y, ORDER4_Z)
    return l, {name: vector(l, v) for name, v in zip(ORDER4_PRINTED_NAMES, coords)}
