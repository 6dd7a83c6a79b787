"""Named example spaces used across the test suite and shipped as JSON.

Each function builds its family fresh; everything is small enough that
caching would buy nothing.
"""

from __future__ import annotations

from .core import PreTopology, SetFamily, Universe, union_closure


def _z(n: int) -> Universe:
    return Universe([f"z{i}" for i in range(1, n + 1)])


def e0() -> PreTopology:
    """Four-point space that is T0 but not T1; closure/boundary counterexamples."""
    u = _z(4)
    states = [
        [],
        ["z1", "z2"],
        ["z1", "z3"],
        ["z1", "z4"],
        ["z1", "z2", "z3"],
        ["z1", "z2", "z4"],
        ["z1", "z3", "z4"],
        ["z1", "z2", "z3", "z4"],
    ]
    return PreTopology(u, SetFamily.of(u, states))


def e1_tau() -> PreTopology:
    """All subsets of size >= 2 of a 4-point set, plus the empty set. T2."""
    u = _z(4)
    members = [s for s in u.subsets() if len(s) >= 2 or s.is_empty()]
    return PreTopology(u, SetFamily(u, members))


def e1_delta() -> PreTopology:
    """e0 with the extra open {z3}; identity from e1_tau into it is not pre-continuous."""
    u = _z(4)
    states = [
        [],
        ["z3"],
        ["z1", "z2"],
        ["z1", "z3"],
        ["z1", "z4"],
        ["z1", "z2", "z3"],
        ["z1", "z2", "z4"],
        ["z1", "z3", "z4"],
        ["z1", "z2", "z3", "z4"],
    ]
    return PreTopology(u, SetFamily.of(u, states))


def tight() -> PreTopology:
    """Tight 1-connected but not connected ({z1,z2} is clopen)."""
    u = _z(4)
    states = [
        [],
        ["z1"],
        ["z4"],
        ["z3", "z4"],
        ["z1", "z2"],
        ["z1", "z4"],
        ["z1", "z2", "z3"],
        ["z1", "z3", "z4"],
        ["z1", "z2", "z4"],
        ["z2", "z3", "z4"],
        ["z1", "z2", "z3", "z4"],
    ]
    return PreTopology(u, SetFamily.of(u, states))


def conn() -> PreTopology:
    """Connected five-point space that is not tight 1-connected."""
    u = _z(5)
    states = [
        [],
        ["z1"],
        ["z1", "z2", "z4"],
        ["z1", "z2", "z3"],
        ["z1", "z3", "z4"],
        ["z1", "z2", "z3", "z4"],
        ["z1", "z2", "z3", "z4", "z5"],
    ]
    return PreTopology(u, SetFamily.of(u, states))


def t1c() -> PreTopology:
    """Finite T1 connected space (all 3-subsets of a 4-point set open)."""
    u = _z(4)
    states = [
        [],
        ["z1", "z2", "z4"],
        ["z1", "z2", "z3"],
        ["z1", "z3", "z4"],
        ["z2", "z3", "z4"],
        ["z1", "z2", "z3", "z4"],
    ]
    return PreTopology(u, SetFamily.of(u, states))


def t2nr() -> PreTopology:
    """T2 but not regular: every 2-subset except {z3,z4} is open."""
    u = _z(4)
    states = [
        [],
        ["z1", "z2"],
        ["z1", "z3"],
        ["z1", "z4"],
        ["z2", "z3"],
        ["z2", "z4"],
        ["z1", "z2", "z3"],
        ["z1", "z2", "z4"],
        ["z1", "z3", "z4"],
        ["z2", "z3", "z4"],
        ["z1", "z2", "z3", "z4"],
    ]
    return PreTopology(u, SetFamily.of(u, states))


def alg5_base() -> SetFamily:
    """Generating family of the worked primary-items example."""
    u = _z(5)
    return SetFamily.of(
        u,
        [
            ["z1"],
            ["z2"],
            ["z1", "z3"],
            ["z2", "z3", "z4"],
            ["z1", "z3", "z4", "z5"],
        ],
    )


def alg5() -> PreTopology:
    """The ten-state knowledge space generated by alg5_base."""
    return union_closure(alg5_base())


def rnn() -> PreTopology:
    """Regular, non-normal five-point space.

    Generated by every pair {y,z} with y among a1,a2,a3 except the pair
    {a1,a2}.
    """
    u = Universe(["a1", "a2", "a3", "b1", "b2"])
    pairs = [
        ["a1", "a3"],
        ["a1", "b1"],
        ["a1", "b2"],
        ["a2", "a3"],
        ["a2", "b1"],
        ["a2", "b2"],
        ["a3", "b1"],
        ["a3", "b2"],
    ]
    return union_closure(SetFamily.of(u, pairs))


def ord6_generators() -> SetFamily:
    """Six-point quasi-ordinal example exactly as printed in its source."""
    u = _z(6)
    states = [
        [],
        ["z4"],
        ["z1", "z3"],
        ["z5", "z6"],
        ["z1", "z3", "z4"],
        ["z1", "z2", "z3"],
        ["z4", "z5", "z6"],
        ["z1", "z3", "z5", "z6"],
        ["z1", "z2", "z3", "z4"],
        ["z1", "z2", "z3", "z4", "z5", "z6"],
    ]
    return SetFamily.of(u, states)


def ord6() -> PreTopology:
    """Quasi-ordinal six-point space: intersection-closed, not T0, not connected.

    The printed family misses two unions ({z1,z3,z4,z5,z6} and
    {z1,z2,z3,z5,z6}); closing it restores the space axiom without
    touching any of the claimed properties.
    """
    return union_closure(ord6_generators())


def vertex_cover_base() -> SetFamily:
    """Triangle base: greedy-versus-exact density gap probe."""
    u = _z(3)
    return SetFamily.of(u, [["z1", "z2"], ["z2", "z3"], ["z1", "z3"]])


def vertex_cover() -> PreTopology:
    return union_closure(vertex_cover_base())


ALL = {
    "e0": e0,
    "e1_tau": e1_tau,
    "e1_delta": e1_delta,
    "tight": tight,
    "conn": conn,
    "t1c": t1c,
    "t2nr": t2nr,
    "alg5": alg5,
    "rnn": rnn,
    "ord6": ord6,
    "vertex_cover": vertex_cover,
}
