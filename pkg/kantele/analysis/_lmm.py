#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Random-intercept linear mixed model fitted by profiled maximum likelihood.

    y = X beta + b[group] + e,   b ~ N(0, sigma_b^2),   e ~ N(0, sigma^2)

With gamma = sigma_b^2 / sigma^2, the covariance of each group's block is
sigma^2 (I + gamma 11'), so every quantity reduces to per-group sums and the
likelihood is profiled over gamma alone.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from kantele.utils.typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np


@dataclass
class LmmFit:
    """Estimates of a random-intercept model."""
    coefficients: 'pd.Series'
    standard_errors: 'pd.Series'
    sigma2_group: float
    sigma2_resid: float
    group_effects: 'pd.Series'
    log_likelihood: float
    null_log_likelihood: float
    variance_ratio: float
    n_obs: int
    n_groups: int
    formula: str = ''
    bracket: Optional[Tuple[float, float]] = None

    @property
    def t_values(self) -> 'pd.Series':
        return self.coefficients / self.standard_errors

    def summary(self, threshold: float = 1.96) -> 'pd.DataFrame':
        return lmm_summary_table(self, threshold=threshold)


class _Profile:
    """Per-group sufficient statistics of (X, y)."""

    def __init__(self, X: np.ndarray, y: np.ndarray, groups: np.ndarray):
        self.X, self.y = X, y
        self.N, self.p = X.shape
        codes, self.index = np.unique(groups, return_inverse=True)
        self.codes = codes
        G = len(codes)
        self.n_g = np.bincount(self.index, minlength=G).astype(np.float64)
        self.S_X = np.zeros((G, self.p))
        np.add.at(self.S_X, self.index, X)
        self.S_y = np.bincount(self.index, weights=y, minlength=G)
        self.XtX = X.T @ X
        self.Xty = X.T @ y

    def solve(self, gamma: float) -> Dict[str, Any]:
        c = gamma / (1.0 + gamma * self.n_g)
        XtVX = self.XtX - (self.S_X * c[:, None]).T @ self.S_X
        XtVy = self.Xty - self.S_X.T @ (c * self.S_y)
        beta = np.linalg.solve(XtVX, XtVy)
        r = self.y - self.X @ beta
        R_g = np.bincount(self.index, weights=r, minlength=len(self.n_g))
        Q = float(r @ r - np.sum(c * R_g ** 2))
        logdet = float(np.sum(np.log1p(gamma * self.n_g)))
        N = self.N
        ll = -0.5 * (N * np.log(2.0 * np.pi * Q / N) + N + logdet)
        return {'beta': beta, 'r': r, 'R_g': R_g, 'Q': Q, 'XtVX': XtVX, 'll': ll, 'c': c}

    def log_likelihood(self, gamma: float) -> float:
        return self.solve(gamma)['ll']

    def score(self, gamma: float) -> float:
        """d log-likelihood / d gamma."""
        s = self.solve(gamma)
        scale = 1.0 + gamma * self.n_g
        return float(
            0.5 * self.N * np.sum(s['R_g'] ** 2 / scale ** 2) / s['Q']
            - 0.5 * np.sum(self.n_g / scale)
        )


def _check_rank(X: np.ndarray, names: Sequence[str]) -> None:
    from kantele.utils.exceptions import RankDeficiencyError
    if np.linalg.matrix_rank(X) == X.shape[1]:
        return
    collinear, kept = [], []
    for j, name in enumerate(names):
        candidate = kept + [j]
        if np.linalg.matrix_rank(X[:, candidate]) < len(candidate):
            collinear.append(name)
        else:
            kept.append(j)
    raise RankDeficiencyError(collinear)


def _maximize(profile: _Profile, bounds: Tuple[float, float], points: int, tol: float):
    """Return (gamma, bracket). gamma = 0 when the boundary is the maximum."""
    from scipy.optimize import minimize_scalar, brentq
    from kantele.utils.exceptions import ConvergenceError
    grid = np.logspace(np.log10(bounds[0]), np.log10(bounds[1]), points)
    values = np.array([profile.log_likelihood(g) for g in grid])
    at_zero = profile.log_likelihood(0.0)
    best = int(np.argmax(values))
    if at_zero >= values[best] and profile.score(0.0) <= 0:
        return 0.0, (0.0, float(grid[0]))
    if best == points - 1:
        raise ConvergenceError(
            "The between-group variance ratio did not converge (residual variance vanishes)",
            bracket = (float(grid[-2]), float(grid[-1])),
        )

    lo = grid[best - 1] if best > 0 else 0.0
    hi = grid[best + 1]
    log_lo = np.log(lo) if lo > 0 else np.log(grid[0]) - 10.0
    found = minimize_scalar(
        lambda t: -profile.log_likelihood(float(np.exp(t))),
        bounds = (log_lo, np.log(hi)),
        method = 'bounded',
        options = {'xatol': tol},
    )
    if not found.success:
        raise ConvergenceError(f"Bounded search failed: {found.message}", bracket=(float(lo), float(hi)))
    gamma = float(np.exp(found.x))

    s_lo, s_hi = profile.score(max(lo, 1e-300)), profile.score(hi)
    if s_lo > 0 > s_hi:
        gamma = brentq(profile.score, max(lo, 1e-300), hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    if best == 0 and profile.log_likelihood(0.0) >= profile.log_likelihood(gamma):
        return 0.0, (0.0, float(hi))
    return float(gamma), (float(lo), float(hi))


def design_matrices(
        frame: 'pd.DataFrame',
        formula: str,
    ) -> Tuple[np.ndarray, np.ndarray, List[str], str]:
    """Response vector, fixed-effect design matrix and column names via `patsy`."""
    import patsy
    y, X = patsy.dmatrices(formula, frame, return_type='dataframe', NA_action='raise')
    return (
        np.asarray(y, dtype=np.float64).ravel(),
        np.asarray(X, dtype=np.float64),
        list(X.columns),
        y.columns[0],
    )


def prepare_frame(
        records: Any,
        scales: Optional[Mapping[str, float]] = None,
        resources: Optional[Mapping[str, str]] = None,
    ) -> 'pd.DataFrame':
    """
    Records as a data frame with continuous predictors divided by their interpretation
    units and a `resource` column from the language -> resource map.
    """
    import pandas as pd
    from kantele.core.Record import records_to_frame
    frame = records.copy() if isinstance(records, pd.DataFrame) else records_to_frame(records)
    if scales is None:
        from kantele.config import get_config
        scales = get_config('analysis', 'scales')
    for column, unit in scales.items():
        if column in frame.columns:
            frame[column] = frame[column].astype(float) / float(unit)
    if resources is not None:
        frame['resource'] = frame['language'].map(lambda c: resources.get(c, 'low'))
    elif 'resource' not in frame.columns:
        frame['resource'] = 'low'
    return frame


def fit_lmm(
        records: Any,
        formula: Optional[str] = None,
        group: str = 'language',
        scales: Optional[Mapping[str, float]] = None,
        resources: Optional[Mapping[str, str]] = None,
        bounds: Optional[Tuple[float, float]] = None,
        grid_points: Optional[int] = None,
        tolerance: Optional[float] = None,
    ) -> LmmFit:
    """
    Fit `formula` with a random intercept per `group`.

    Parameters
    ----------
    records: Union[Sequence[ResultRecord], pd.DataFrame]
        The observations. Continuous predictors are rescaled by `scales`.

    formula: Optional[str], default None
        A `patsy` fixed-effect formula. Defaults to `analysis:formula`.

    group: str, default 'language'
        The grouping column.

    scales: Optional[Mapping[str, float]], default None
        Column -> unit. Defaults to `analysis:scales`. Pass `{}` for unscaled data.

    resources: Optional[Mapping[str, str]], default None
        Language -> resource level for `resource` interaction terms.

    Returns
    -------
    An `LmmFit`.

    Raises
    ------
    `ValidationError` with fewer than two groups, `RankDeficiencyError` naming the
    collinear columns, `ConvergenceError` with the final bracket.
    """
    import pandas as pd
    from kantele.config import get_config
    from kantele.utils.exceptions import ValidationError
    cf = get_config('analysis', warn=False) or {}
    formula = formula or cf.get('formula')
    bounds = tuple(bounds or cf.get('ratio_bounds', (1e-8, 1e8)))
    grid_points = grid_points or cf.get('ratio_grid_points', 65)
    tolerance = tolerance or cf.get('tolerance', 1e-8)

    frame = prepare_frame(records, scales=scales, resources=resources)
    if frame.empty:
        raise ValidationError("Cannot fit a mixed model without records.")
    if group not in frame.columns:
        raise ValidationError(f"Grouping column '{group}' is missing.")
    groups = frame[group].astype(str).to_numpy()
    if len(np.unique(groups)) < 2:
        raise ValidationError("A random-intercept model needs at least two groups.")

    y, X, names, _ = design_matrices(frame, formula)
    _check_rank(X, names)
    profile = _Profile(X, y, groups)
    gamma, bracket = _maximize(profile, bounds, grid_points, tolerance)

    s = profile.solve(gamma)
    sigma2 = s['Q'] / profile.N
    cov = sigma2 * np.linalg.inv(s['XtVX'])
    effects = gamma * profile.n_g / (1.0 + gamma * profile.n_g) * (s['R_g'] / profile.n_g)
    return LmmFit(
        coefficients = pd.Series(s['beta'], index=names),
        standard_errors = pd.Series(np.sqrt(np.diag(cov)), index=names),
        sigma2_group = gamma * sigma2,
        sigma2_resid = sigma2,
        group_effects = pd.Series(effects, index=profile.codes),
        log_likelihood = s['ll'],
        null_log_likelihood = profile.log_likelihood(0.0),
        variance_ratio = gamma,
        n_obs = profile.N,
        n_groups = len(profile.codes),
        formula = formula,
        bracket = bracket,
    )


def lmm_summary_table(fit: LmmFit, threshold: float = 1.96) -> 'pd.DataFrame':
    """
    Coefficient table: estimate, standard error, t value and an approximate
    significance flag (|t| >= threshold), then the two variance components.
    """
    import pandas as pd
    t = fit.t_values
    rows = [
        {
            'term': name,
            'estimate': float(fit.coefficients[name]),
            'std_error': float(fit.standard_errors[name]),
            't_value': float(t[name]),
            'significant': bool(abs(t[name]) >= threshold),
        }
        for name in fit.coefficients.index
    ]
    nan = float('nan')
    rows += [
        {'term': 'sigma2_group', 'estimate': fit.sigma2_group, 'std_error': nan, 't_value': nan, 'significant': None},
        {'term': 'sigma2_resid', 'estimate': fit.sigma2_resid, 'std_error': nan, 't_value': nan, 'significant': None},
    ]
    return pd.DataFrame(rows)
