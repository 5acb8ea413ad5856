"""Discrete-time coined quantum walk on the lower adjacency of n-simplices.

The walk lives on translation states: one basis arc ``|a -> b>`` per ordered
pair of lower-adjacent n-simplices.  One time step applies a block-diagonal
Fourier coin (one DFT block per source simplex, sized by its lower
neighborhood) followed by the shift that swaps every arc with its reverse.

Two estimators of the long-run source-to-target transition behavior are
provided: a finite-horizon time average obtained by sparse evolution, and
the exact infinite-time average obtained from the spectral decomposition of
the step operator (eigenphase groups handled with orthogonal projectors, so
degenerate phases are treated correctly).  Both report the degree-normalized
transition weight whose flat baseline is ``1/m`` on an m-arc space.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
import scipy.sparse as sp

from .complexes import Simplex, SimplicialComplex
from .errors import (
    InvalidParameterError,
    IsolatedSimplexError,
    NumericalError,
    UnknownSimplexError,
)

__all__ = [
    "WalkSpace",
    "UnitaryWalk",
    "UnitarySpectrum",
    "TransitionTable",
    "build_walk_space",
    "fourier_block",
    "coin_operator",
    "shift_operator",
    "step_operator",
    "evolve",
    "basis_state",
    "transition_profile",
    "transition_probability",
    "finite_time_average",
    "unitary_spectrum",
    "long_time_average_spectral",
    "amplitude_lower_bound",
]

DEFAULT_TIME_STEPS = 100
DEFAULT_PHASE_TOL = 1e-8


@dataclass(frozen=True)
class WalkSpace:
    """Ordered basis of translation arcs over lower-adjacent n-simplices.

    Arcs are grouped contiguously by source simplex (sources in canonical
    order, targets in canonical order inside each group).  Simplices without
    lower neighbors take no part in the walk and are listed separately.
    """

    n: int
    arcs: tuple[tuple[Simplex, Simplex], ...] = field(repr=False)
    active: tuple[Simplex, ...] = field(repr=False)
    isolated: tuple[Simplex, ...] = field(repr=False)
    neighbors: dict[Simplex, tuple[Simplex, ...]] = field(repr=False)
    arc_index: dict[tuple[Simplex, Simplex], int] = field(repr=False)
    block_start: dict[Simplex, int] = field(repr=False)

    def __repr__(self) -> str:
        return (
            f"WalkSpace(n={self.n}, m={self.m}, active={len(self.active)}, "
            f"isolated={len(self.isolated)})"
        )

    @property
    def m(self) -> int:
        """Hilbert-space dimension: the number of arcs."""
        return len(self.arcs)

    def degree(self, simplex: Simplex) -> int:
        """Size of the lower neighborhood of an active simplex."""
        return len(self.neighbors[simplex])

    def block(self, simplex: Simplex) -> slice:
        """Index range of the arcs based at ``simplex``."""
        start = self.block_start[simplex]
        return slice(start, start + self.degree(simplex))

    def require_active(self, simplex) -> Simplex:
        s = tuple(simplex)
        if s in self.block_start:
            return s
        if s in self.isolated:
            raise IsolatedSimplexError(f"{s} has no lower-adjacent partners")
        raise UnknownSimplexError(f"{s} is not an active {self.n}-simplex")

    def block_starts_array(self) -> np.ndarray:
        """Start offsets of every active block, plus the end sentinel."""
        out = np.empty(len(self.active) + 1, dtype=np.int64)
        for i, s in enumerate(self.active):
            out[i] = self.block_start[s]
        out[-1] = self.m
        return out


def build_walk_space(K: SimplicialComplex, n: int) -> WalkSpace:
    """Construct the arc basis for the walk on n-simplices (n >= 1)."""
    if n < 1:
        raise InvalidParameterError("the walk is defined for dimensions n >= 1")
    if n > K.max_dim:
        raise InvalidParameterError(f"dimension {n} out of range [1, {K.max_dim}]")
    nbrs = K.lower_neighbors(n)
    active = tuple(s for s in K.simplices(n) if nbrs[s])
    isolated = tuple(s for s in K.simplices(n) if not nbrs[s])
    arcs: list[tuple[Simplex, Simplex]] = []
    block_start: dict[Simplex, int] = {}
    for s in active:
        block_start[s] = len(arcs)
        arcs.extend((s, t) for t in nbrs[s])
    arc_tuple = tuple(arcs)
    return WalkSpace(
        n=n,
        arcs=arc_tuple,
        active=active,
        isolated=isolated,
        neighbors={s: nbrs[s] for s in active},
        arc_index={a: i for i, a in enumerate(arc_tuple)},
        block_start=block_start,
    )


def fourier_block(d: int) -> np.ndarray:
    """The d x d discrete-Fourier coin: entries ``w**(a*b) / sqrt(d)`` with
    ``w = exp(2*pi*i/d)``.  Each phase is computed from its exact angle."""
    if d < 1:
        raise InvalidParameterError("coin dimension must be >= 1")
    idx = np.arange(d)
    return np.exp(2j * np.pi * np.outer(idx, idx) / d) / np.sqrt(d)


def coin_operator(space: WalkSpace) -> sp.csr_matrix:
    """Block-diagonal coin: one Fourier block per active source simplex."""
    blocks = [fourier_block(space.degree(s)) for s in space.active]
    if not blocks:
        return sp.csr_matrix((0, 0), dtype=np.complex128)
    return sp.block_diag(blocks, format="csr", dtype=np.complex128)


def shift_operator(space: WalkSpace) -> sp.csr_matrix:
    """Involutive permutation sending each arc ``|a -> b>`` to ``|b -> a>``."""
    m = space.m
    rows = np.empty(m, dtype=np.int64)
    for i, (a, b) in enumerate(space.arcs):
        rows[space.arc_index[(b, a)]] = i
    data = np.ones(m, dtype=np.complex128)
    return sp.csr_matrix((data, (np.arange(m), rows)), shape=(m, m))


@dataclass(frozen=True)
class UnitaryWalk:
    """One-step evolution ``step = shift @ coin`` with its factors."""

    space: WalkSpace
    coin: sp.csr_matrix
    shift: sp.csr_matrix
    step: sp.csr_matrix


def step_operator(space: WalkSpace) -> UnitaryWalk:
    """Assemble coin, shift, and composed step operator for a walk space."""
    coin = coin_operator(space)
    shift = shift_operator(space)
    return UnitaryWalk(space=space, coin=coin, shift=shift, step=(shift @ coin).tocsr())


def basis_state(walk: UnitaryWalk, source, target) -> np.ndarray:
    """Unit vector on the arc ``|source -> target>``."""
    arc = (tuple(source), tuple(target))
    if arc not in walk.space.arc_index:
        raise UnknownSimplexError(f"no arc {arc[0]} -> {arc[1]} in the walk space")
    psi = np.zeros(walk.space.m, dtype=np.complex128)
    psi[walk.space.arc_index[arc]] = 1.0
    return psi


def evolve(walk: UnitaryWalk, state: np.ndarray, t: int) -> np.ndarray:
    """Apply ``t`` walk steps to a state (sparse application, no dense powers)."""
    if t < 0:
        raise InvalidParameterError("number of steps must be >= 0")
    psi = np.asarray(state, dtype=np.complex128)
    if psi.shape != (walk.space.m,):
        raise InvalidParameterError(
            f"state has shape {psi.shape}, expected ({walk.space.m},)"
        )
    for _ in range(t):
        psi = walk.step @ psi
    return psi


def _degrees_array(space: WalkSpace) -> np.ndarray:
    return np.array([space.degree(s) for s in space.active], dtype=np.int64)


def transition_profile(walk: UnitaryWalk, source, t_max: int) -> np.ndarray:
    """Degree-normalized transition weights from one source at every time.

    Returns an array of shape ``(t_max, n_active)`` whose ``[t-1, j]`` entry
    is the weight from ``source`` to the j-th active simplex at time ``t``:
    the squared amplitudes collected over the target's arcs, averaged over
    the source's initial arcs, divided by both lower-neighborhood sizes.
    Each row satisfies ``row @ degrees == 1`` (unitarity).

    One sparse evolution per initial arc serves every target simultaneously.
    """
    if t_max < 1:
        raise InvalidParameterError("t_max must be >= 1")
    space = walk.space
    sx = space.require_active(source)
    starts = space.block_starts_array()
    degs = _degrees_array(space)
    blk = space.block(sx)
    acc = np.zeros((t_max, len(space.active)))
    for v in range(blk.start, blk.stop):
        psi = np.zeros(space.m, dtype=np.complex128)
        psi[v] = 1.0
        for t in range(t_max):
            psi = walk.step @ psi
            acc[t] += np.add.reduceat(np.abs(psi) ** 2, starts[:-1])
    d_source = blk.stop - blk.start
    return acc / (d_source * degs)


def transition_probability(walk: UnitaryWalk, source, target, t: int) -> float:
    """Normalized transition probability from ``source`` to ``target`` at time t."""
    if t < 1:
        raise InvalidParameterError("time must be >= 1")
    space = walk.space
    sy = space.require_active(target)
    profile = transition_profile(walk, source, t)
    return float(profile[t - 1, space.active.index(sy)])


@dataclass(frozen=True)
class TransitionTable:
    """Source-to-target transition weights under one estimator."""

    source: Simplex
    estimator: str
    values: dict[Simplex, float]

    def __getitem__(self, target) -> float:
        return self.values[tuple(target)]


def finite_time_average(
    walk: UnitaryWalk, source, time_steps: int = DEFAULT_TIME_STEPS
) -> TransitionTable:
    """Average the transition weights over times ``1..time_steps``."""
    space = walk.space
    sx = space.require_active(source)
    profile = transition_profile(walk, sx, time_steps)
    mean = profile.mean(axis=0)
    return TransitionTable(
        source=sx,
        estimator=f"finite(T={time_steps})",
        values={s: float(mean[j]) for j, s in enumerate(space.active)},
    )


@dataclass(frozen=True)
class UnitarySpectrum:
    """Eigenphases and orthonormal eigenvectors of the step operator.

    ``groups`` partitions eigenvector indices into clusters of equal phase
    (up to a circular tolerance); projectors onto those clusters make the
    infinite-time average well defined even with degenerate phases.
    """

    phases: np.ndarray
    vectors: np.ndarray
    groups: tuple[tuple[int, ...], ...]


def _group_phases(phases: np.ndarray, tol: float) -> tuple[tuple[int, ...], ...]:
    order = np.argsort(phases)
    groups: list[list[int]] = [[int(order[0])]]
    for k in order[1:]:
        if phases[k] - phases[groups[-1][-1]] <= tol:
            groups[-1].append(int(k))
        else:
            groups.append([int(k)])
    # phases live on a circle: 0 and 2*pi may belong together
    if len(groups) > 1 and phases[groups[0][0]] + 2 * np.pi - phases[groups[-1][-1]] <= tol:
        groups[0] = groups.pop() + groups[0]
    return tuple(tuple(g) for g in groups)


def unitary_spectrum(
    walk: UnitaryWalk, phase_tol: float = DEFAULT_PHASE_TOL
) -> UnitarySpectrum:
    """Spectral decomposition of the step operator via its Schur form.

    A unitary matrix is normal, so the complex Schur form is diagonal and
    the Schur vectors are orthonormal eigenvectors by construction.
    """
    dense = walk.step.toarray()
    try:
        triangular, vectors = scipy.linalg.schur(dense, output="complex")
    except Exception as exc:  # pragma: no cover - LAPACK failure is exotic
        raise NumericalError("Schur decomposition of the step operator failed") from exc
    diag = np.diag(triangular)
    off = triangular - np.diag(diag)
    if off.size and np.abs(off).max() > 1e-8:
        raise NumericalError("step operator is not numerically normal")
    phases = np.mod(np.angle(diag), 2 * np.pi)
    return UnitarySpectrum(
        phases=phases,
        vectors=vectors,
        groups=_group_phases(phases, phase_tol),
    )


def long_time_average_spectral(
    walk: UnitaryWalk, source, spectrum: UnitarySpectrum | None = None
) -> TransitionTable:
    """Exact infinite-time average of the transition weights from ``source``.

    Computed from eigenphase-group projectors ``P_g``: the weight to a target
    sums ``|<target arc| P_g |source arc>|**2`` over groups and arcs, with the
    same degree normalization as the per-time weights.  When every phase is
    simple this reduces to the plain sum over eigenvectors.
    """
    space = walk.space
    sx = space.require_active(source)
    spec = spectrum if spectrum is not None else unitary_spectrum(walk)
    starts = space.block_starts_array()
    degs = _degrees_array(space)
    blk = space.block(sx)
    acc = np.zeros(len(space.active))
    for group in spec.groups:
        basis = spec.vectors[:, list(group)]
        projected = basis @ basis.conj().T[:, blk]  # columns P_g |source -> v>
        acc += np.add.reduceat((np.abs(projected) ** 2).sum(axis=1), starts[:-1])
    d_source = blk.stop - blk.start
    values = acc / (d_source * degs)
    return TransitionTable(
        source=sx,
        estimator="spectral",
        values={s: float(values[j]) for j, s in enumerate(space.active)},
    )


def amplitude_lower_bound(
    walk: UnitaryWalk, source, target, spectrum: UnitarySpectrum | None = None
) -> float:
    """Lower bound on the infinite-time average weight from averaged amplitudes.

    Uses the arc superpositions with coefficients ``1/|N^l|`` (note these are
    not unit vectors) and sums the squared averaged amplitude per eigenphase
    group.  The value never exceeds the spectral long-time average.
    """
    space = walk.space
    sx = space.require_active(source)
    sy = space.require_active(target)
    spec = spectrum if spectrum is not None else unitary_spectrum(walk)
    bx = space.block(sx)
    by = space.block(sy)
    x = np.zeros(space.m, dtype=np.complex128)
    x[bx] = 1.0 / (bx.stop - bx.start)
    y = np.zeros(space.m, dtype=np.complex128)
    y[by] = 1.0 / (by.stop - by.start)
    total = 0.0
    for group in spec.groups:
        basis = spec.vectors[:, list(group)]
        amp = np.vdot(y, basis @ (basis.conj().T @ x))
        total += float(np.abs(amp) ** 2)
    return total
