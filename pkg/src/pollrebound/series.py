"""Annual time-series container, alignment, transforms and moments."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .exceptions import AlignmentError, DomainError, InsufficientDataError


def _frozen_array(values) -> np.ndarray:
    arr = np.array(values, dtype=float).reshape(-1)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """A named annual series.

    Parameters
    ----------
    name : str
        Identifier, used as the column name inside a :class:`Dataset`.
    start_year : int
        Calendar year of ``values[0]``.
    values : array-like
        Observations, one per consecutive year. Must be non-empty and finite.
    """

    name: str
    start_year: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = _frozen_array(self.values)
        if arr.size == 0:
            raise InsufficientDataError(f"series {self.name!r} is empty")
        if not np.all(np.isfinite(arr)):
            bad = int(np.flatnonzero(~np.isfinite(arr))[0])
            raise DomainError(
                f"series {self.name!r} has a non-finite value in year {self.start_year + bad}"
            )
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "start_year", int(self.start_year))

    def __len__(self) -> int:
        return self.values.size

    def __repr__(self) -> str:
        return f"TimeSeries({self.name!r}, {self.start_year}-{self.end_year}, n={len(self)})"

    @property
    def end_year(self) -> int:
        return self.start_year + len(self) - 1

    @property
    def years(self) -> np.ndarray:
        return np.arange(self.start_year, self.end_year + 1)

    def rename(self, name: str) -> "TimeSeries":
        return TimeSeries(name, self.start_year, self.values)

    def window(self, first_year: int, last_year: int) -> "TimeSeries":
        """Sub-series covering ``first_year..last_year`` inclusive."""
        if first_year < self.start_year or last_year > self.end_year or first_year > last_year:
            raise AlignmentError(
                f"{self.name!r} covers {self.start_year}-{self.end_year}, "
                f"cannot take {first_year}-{last_year}"
            )
        lo = first_year - self.start_year
        return TimeSeries(self.name, first_year, self.values[lo : lo + last_year - first_year + 1])

    def equals(self, other: "TimeSeries") -> bool:
        return (
            self.name == other.name
            and self.start_year == other.start_year
            and np.array_equal(self.values, other.values)
        )


class Dataset:
    """Aligned collection of series sharing one inclusive year range.

    The constructor trims every member to the intersection of their spans.
    Names must be unique.
    """

    def __init__(self, series: Iterable[TimeSeries]):
        series = list(series)
        if not series:
            raise AlignmentError("a Dataset needs at least one series")
        names = [s.name for s in series]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise AlignmentError(f"duplicate series names: {dupes}")
        first = max(s.start_year for s in series)
        last = min(s.end_year for s in series)
        if first > last:
            raise AlignmentError("series spans do not overlap")
        self._series = {s.name: s.window(first, last) for s in series}
        self.year_range = (first, last)

    @classmethod
    def from_columns(cls, start_year: int, columns: Mapping[str, Sequence[float]]) -> "Dataset":
        return cls(TimeSeries(name, start_year, vals) for name, vals in columns.items())

    def __getitem__(self, name: str) -> TimeSeries:
        try:
            return self._series[name]
        except KeyError:
            raise KeyError(f"no series named {name!r}; have {self.names}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._series

    def __len__(self) -> int:
        return self.year_range[1] - self.year_range[0] + 1

    def __repr__(self) -> str:
        return f"Dataset({self.names}, {self.year_range[0]}-{self.year_range[1]})"

    @property
    def names(self) -> list:
        return list(self._series)

    @property
    def series(self) -> list:
        return list(self._series.values())

    @property
    def years(self) -> np.ndarray:
        return np.arange(self.year_range[0], self.year_range[1] + 1)

    def matrix(self, names: Optional[Sequence[str]] = None) -> np.ndarray:
        """Columns stacked in ``names`` order, shape (n_years, n_series)."""
        names = self.names if names is None else list(names)
        return np.column_stack([self[n].values for n in names])

    def select(self, names: Sequence[str]) -> "Dataset":
        return Dataset(self[n] for n in names)

    def with_series(self, *extra: TimeSeries) -> "Dataset":
        return Dataset([*self.series, *extra])


@dataclass(frozen=True)
class DescriptiveStats:
    """Summary moments of one series.

    ``std_dev`` uses the n-1 denominator. ``skewness`` and ``kurtosis`` are
    built from population central moments; kurtosis is not excess (a normal
    sample gives about 3). Both are ``None`` for a constant series.
    """

    n: int
    min: float
    max: float
    mean: float
    std_dev: float
    skewness: Optional[float]
    kurtosis: Optional[float]

    @property
    def higher_moments_defined(self) -> bool:
        return self.skewness is not None


def _require_longer(s: TimeSeries, k: int, what: str):
    if len(s) <= k:
        raise InsufficientDataError(
            f"{what} of {k} needs more than {k} observations; {s.name!r} has {len(s)}"
        )


def log_transform(s: TimeSeries) -> TimeSeries:
    """Natural log of every observation; the name gains an ``ln`` prefix."""
    bad = np.flatnonzero(s.values <= 0)
    if bad.size:
        i = int(bad[0])
        raise DomainError(
            f"log of non-positive value {s.values[i]!r} in {s.name!r}, year {s.start_year + i}"
        )
    return TimeSeries("ln" + s.name, s.start_year, np.log(s.values))


def difference(s: TimeSeries, order: int = 1) -> TimeSeries:
    """Apply first differences ``order`` times; the start year moves forward by ``order``."""
    if order < 1:
        raise ValueError("order must be a positive integer")
    _require_longer(s, order, "difference order")
    return TimeSeries("D" * order + s.name, s.start_year + order, np.diff(s.values, n=order))


def lag(s: TimeSeries, k: int = 1) -> TimeSeries:
    """Shift forward in time so the value dated year t is the original value at t-k."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    _require_longer(s, k, "lag")
    return TimeSeries(f"{s.name}_lag{k}", s.start_year + k, s.values[:-k])


def per_capita(s: TimeSeries, population: TimeSeries) -> TimeSeries:
    """Element-wise ``s / population`` over the overlapping years."""
    first = max(s.start_year, population.start_year)
    last = min(s.end_year, population.end_year)
    if first > last:
        raise AlignmentError(f"{s.name!r} and {population.name!r} do not overlap")
    num = s.window(first, last).values
    den = population.window(first, last).values
    bad = np.flatnonzero(den <= 0)
    if bad.size:
        raise DomainError(
            f"non-positive population {den[bad[0]]!r} in year {first + int(bad[0])}"
        )
    return TimeSeries(s.name, first, num / den)


def describe(s: TimeSeries) -> DescriptiveStats:
    x = s.values
    if x.size < 2:
        raise InsufficientDataError("describe needs at least 2 observations")
    mean = float(x.mean())
    dev = x - mean
    skew = kurt = None
    scale = float(np.max(np.abs(dev)))
    # both ratios are scale-free; rescaling keeps the powers clear of overflow and underflow
    if np.ptp(x) > 0 and scale > 0:
        d = dev / scale
        m2 = float(np.mean(d**2))
        skew = float(np.mean(d**3) / m2**1.5)
        kurt = float(np.mean(d**4) / m2**2)
    return DescriptiveStats(
        n=int(x.size),
        min=float(x.min()),
        max=float(x.max()),
        mean=mean,
        std_dev=float(np.std(x, ddof=1)),
        skewness=skew,
        kurtosis=kurt,
    )
