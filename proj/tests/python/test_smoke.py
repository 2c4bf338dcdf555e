import json
import os

import pytest

try:
    import _aqg as aqg
except ImportError:  # installed package layout
    from aqg import _aqg as aqg

INSTANCES = os.environ.get("AQG_INSTANCE_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "instances"))


def test_q_power():
    v = aqg.q_power("1/2", 2 + 0j)
    assert abs(v - 0.25) < 1e-15
    with pytest.raises(Exception):
        aqg.q_power("3/2", 1 + 0j)


def test_normal_form_and_haar():
    # ca = q^{-1} ac = 2 ac at q = 1/2
    assert aqg.suq2_normal_form("ca", "1/2") == "2*a c"
    assert aqg.suq2_haar("cC", "1/2") == "4/5"
    assert aqg.suq2_haar("a", "1/2") == "0"
    assert aqg.suq2_antipode("c", "1/2") == "-1/2*c"


def test_finite_suite_roundtrip():
    inst = aqg.load_instance(os.path.join(INSTANCES, "c_z2.json"))
    assert inst.kind == "finite"
    rep = json.loads(aqg.run_suite(inst, "hopf"))
    assert rep["pass"] is True
    assert rep["instance"] == "C[Z2]"
    assert all(e["residual"] == 0 for e in rep["entries"])


def test_report_is_deterministic():
    inst = aqg.load_instance(os.path.join(INSTANCES, "suq2.json"))
    one = aqg.run_suite(inst, "haar", 3)
    two = aqg.run_suite(inst, "haar", 3)
    assert one == two


def test_parse_error():
    with pytest.raises(ValueError):
        aqg.load_instance(os.path.join(INSTANCES, "does_not_exist.json"))
