"""scikit-learn style wrapper for batch use on lists of PD codes."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from adeq.bound import BoundReport, best_bound
from adeq.diagram import parse_pd
from adeq.search import DEFAULT_BUDGET, TWIST

FEATURES = ("chi_minus", "v8_multiple", "volume_lower_bound", "prime", "loop_condition")


class VolumeBoundEstimator(TransformerMixin, BaseEstimator):
    """Map PD code strings to bound features.

    ``transform`` returns one row per diagram with the columns in ``FEATURES``;
    uncertified bounds are NaN. ``predict`` returns the volume bound column.
    """

    def __init__(self, mode=TWIST, budget=DEFAULT_BUDGET, mirror=False,
                 hyperbolic=False, precision=4):
        self.mode = mode
        self.budget = budget
        self.mirror = mirror
        self.hyperbolic = hyperbolic
        self.precision = precision

    def fit(self, X, y=None):
        # nothing to learn; parsing here surfaces bad input early
        for code in X:
            parse_pd(code, mirror=self.mirror)
        self.n_features_out_ = len(FEATURES)
        return self

    def reports(self, X) -> list[BoundReport]:
        return [
            best_bound(parse_pd(code, mirror=self.mirror), self.mode, self.budget,
                       self.hyperbolic, self.precision)
            for code in X
        ]

    def transform(self, X):
        rows = []
        for r in self.reports(X):
            vb = r.volume_bound
            rows.append([
                r.chi_minus,
                np.nan if r.v8_multiple is None else r.v8_multiple,
                np.nan if vb is None else float(vb),
                float(r.prime),
                float(r.loop_condition),
            ])
        return np.asarray(rows, dtype=float).reshape(-1, len(FEATURES))

    def predict(self, X):
        return self.transform(X)[:, FEATURES.index("volume_lower_bound")]

    def get_feature_names_out(self, input_features=None):
        return np.asarray(FEATURES, dtype=object)
