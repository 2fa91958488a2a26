import numpy as np
import pytest
from sklearn.base import clone

from adeq.estimator import FEATURES, VolumeBoundEstimator
from adeq.exceptions import MalformedCode

from conftest import LOOP_VIOLATOR, ROWS, TREFOIL


def test_params_round_trip():
    est = VolumeBoundEstimator(mode="full", precision=6)
    params = est.get_params()
    assert params["mode"] == "full" and params["precision"] == 6
    assert clone(est).get_params() == params


def test_transform_rows():
    X = [TREFOIL, ROWS["6_2"]["pd"], LOOP_VIOLATOR]
    out = VolumeBoundEstimator().fit(X).transform(X)
    assert out.shape == (3, len(FEATURES))
    assert list(out[:, 0]) == [0, 1, 0]
    assert out[1, 2] == pytest.approx(3.663862376708876)
    assert np.isnan(out[2, 2])


def test_predict_is_the_bound_column():
    X = [ROWS["8_18"]["pd"]]
    est = VolumeBoundEstimator()
    assert est.fit_transform(X)[0, 2] == est.predict(X)[0]
    assert est.get_feature_names_out()[2] == "volume_lower_bound"


def test_fit_rejects_bad_codes():
    with pytest.raises(MalformedCode):
        VolumeBoundEstimator().fit(["X[1,2,3]"])
