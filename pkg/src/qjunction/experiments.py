"""Parameter-sweep drivers: equilibrium scans, bias sweeps, rectification,
and the entanglement sudden-death threshold."""

import enum
from dataclasses import dataclass

import numpy as np

from .baths import BathKind, BathSpec
from .correlations import concurrence, correlation_report
from .model import DegeneratePhysicsError, SystemParams
from .solver import channel_rates, heat_current, steady_populations

#: points in the coarse scan that brackets the sudden-death bisection
_SCAN_POINTS = 64


class SweepVariable(enum.Enum):
    T_COMMON = "t_common"  # equilibrium: T_L = T_R swept together
    T_RIGHT = "t_right"    # T_R swept at fixed T_L
    DELTA_T = "delta_t"    # T_L = T_a + dT, T_R = T_a - dT at fixed T_a


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: system, reservoir kind and couplings, grid definition.

    ``t_left`` fixes T_L for T_RIGHT sweeps; ``t_avg`` fixes T_a for DELTA_T
    sweeps. Grids are uniform and closed at both ends; DELTA_T grids must
    stay strictly inside (-T_a, T_a) so both temperatures remain positive.
    """

    params: SystemParams
    kind: BathKind
    gamma_left: float
    gamma_right: float
    variable: SweepVariable
    lo: float
    hi: float
    count: int
    t_left: float | None = None
    t_avg: float | None = None

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.count < 2:
            raise ValueError(f"need at least 2 grid points, got {self.count}")
        if self.gamma_left < 0.0 or self.gamma_right < 0.0:
            raise ValueError("couplings must be nonnegative")
        if self.variable is SweepVariable.DELTA_T:
            if self.t_avg is None or self.t_avg <= 0.0:
                raise ValueError("DELTA_T sweeps need a positive t_avg")
            if self.lo <= -self.t_avg or self.hi >= self.t_avg:
                raise ValueError(
                    f"bias grid [{self.lo}, {self.hi}] leaves (-T_a, T_a) "
                    f"for T_a = {self.t_avg}"
                )
        elif self.variable is SweepVariable.T_RIGHT:
            if self.t_left is None or self.t_left < 0.0:
                raise ValueError("T_RIGHT sweeps need a nonnegative t_left")
            if self.lo < 0.0:
                raise ValueError("temperatures must be nonnegative")
        else:
            if self.lo < 0.0:
                raise ValueError("temperatures must be nonnegative")


@dataclass(frozen=True)
class SweepRow:
    """One sweep point: temperatures, populations, current, correlations."""

    t_left: float
    t_right: float
    p1: float
    p2: float
    p3: float
    p4: float
    heat_current: float
    concurrence: float
    discord: float
    mutual_information: float
    classical_correlation: float


@dataclass(frozen=True)
class RectificationPoint:
    """Currents under a bias and its reversal at the same mean temperature."""

    delta_t: float
    j_forward: float   # J_L at (T_a + dT, T_a - dT)
    j_reverse: float   # J_L at (T_a - dT, T_a + dT)


def solve_point(
    params: SystemParams,
    kind: BathKind,
    gamma_left: float,
    gamma_right: float,
    t_left: float,
    t_right: float,
) -> SweepRow:
    """Full steady-state solution for a single pair of bath temperatures."""
    rates = channel_rates(
        params,
        BathSpec(kind, gamma_left, t_left),
        BathSpec(kind, gamma_right, t_right),
    )
    pops = steady_populations(rates)
    rep = correlation_report(pops)
    return SweepRow(
        t_left=float(t_left),
        t_right=float(t_right),
        p1=pops.p1,
        p2=pops.p2,
        p3=pops.p3,
        p4=pops.p4,
        heat_current=heat_current(params, rates),
        concurrence=rep.concurrence,
        discord=rep.discord,
        mutual_information=rep.mutual_information,
        classical_correlation=rep.classical_correlation,
    )


def _temperatures(spec: SweepSpec, value: float) -> tuple[float, float]:
    if spec.variable is SweepVariable.T_COMMON:
        return value, value
    if spec.variable is SweepVariable.T_RIGHT:
        return spec.t_left, value
    return spec.t_avg + value, spec.t_avg - value


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate the sweep grid in ascending order of the sweep variable."""
    rows = []
    for value in np.linspace(spec.lo, spec.hi, spec.count):
        t_left, t_right = _temperatures(spec, float(value))
        try:
            rows.append(
                solve_point(
                    spec.params, spec.kind, spec.gamma_left, spec.gamma_right,
                    t_left, t_right,
                )
            )
        except DegeneratePhysicsError as exc:
            raise DegeneratePhysicsError(
                f"sweep aborted at {spec.variable.value} = {value}: {exc}"
            ) from exc
    return rows


def _current_at(params, kind, gamma_left, gamma_right, t_left, t_right) -> float:
    rates = channel_rates(
        params,
        BathSpec(kind, gamma_left, t_left),
        BathSpec(kind, gamma_right, t_right),
    )
    return heat_current(params, rates)


def rectification_scan(
    params: SystemParams,
    kind: BathKind,
    gamma_left: float,
    gamma_right: float,
    t_avg: float,
    delta_ts,
) -> list[RectificationPoint]:
    """Forward/reversed currents over a grid of biases dT in (0, T_a).

    The junction rectifies when |j_reverse| differs from |j_forward|; with
    equal couplings the two magnitudes coincide identically.
    """
    if t_avg <= 0.0:
        raise ValueError(f"t_avg must be positive, got {t_avg}")
    points = []
    for dt in delta_ts:
        dt = float(dt)
        if not 0.0 < dt < t_avg:
            raise ValueError(f"bias {dt} outside (0, {t_avg})")
        points.append(
            RectificationPoint(
                delta_t=dt,
                j_forward=_current_at(
                    params, kind, gamma_left, gamma_right, t_avg + dt, t_avg - dt
                ),
                j_reverse=_current_at(
                    params, kind, gamma_left, gamma_right, t_avg - dt, t_avg + dt
                ),
            )
        )
    return points


def _equilibrium_concurrence(params, kind, gamma_left, gamma_right, t) -> float:
    rates = channel_rates(
        params,
        BathSpec(kind, gamma_left, t),
        BathSpec(kind, gamma_right, t),
    )
    return concurrence(steady_populations(rates))


def sudden_death_temperature(
    params: SystemParams,
    kind: BathKind,
    gamma_left: float = 1.0,
    gamma_right: float = 1.0,
    t_min: float | None = None,
    t_max: float | None = None,
    tol: float = 1e-6,
) -> float:
    """Smallest equilibrium temperature at which the concurrence vanishes.

    A coarse scan brackets the single zero crossing of C(T), then bisection
    on the predicate C(T) > 0 narrows the bracket to ``tol``. The default
    probe window scales with the coupling, [kappa/50, 4 kappa]. Raises if
    the concurrence is already zero at the lowest probe temperature.
    """
    lo = params.kappa / 50.0 if t_min is None else t_min
    hi = 4.0 * params.kappa if t_max is None else t_max
    if not 0.0 < lo < hi:
        raise ValueError(f"bad probe window [{lo}, {hi}]")

    def alive(t: float) -> bool:
        return _equilibrium_concurrence(params, kind, gamma_left, gamma_right, t) > 0.0

    grid = np.linspace(lo, hi, _SCAN_POINTS)
    if not alive(grid[0]):
        raise ValueError(
            f"concurrence already zero at the lowest probe temperature {lo}"
        )
    bracket = None
    for t_prev, t_next in zip(grid[:-1], grid[1:]):
        if not alive(t_next):
            bracket = (float(t_prev), float(t_next))
            break
    if bracket is None:
        raise ValueError(f"concurrence still positive at the probe ceiling {hi}")
    lower, upper = bracket
    while upper - lower > tol:
        mid = 0.5 * (lower + upper)
        if alive(mid):
            lower = mid
        else:
            upper = mid
    return 0.5 * (lower + upper)
