import json
import math

import pytest

import ccbench


def test_precisions():
    assert ccbench.supported_precisions()[:2] == ["binary32", "binary64"]


def test_cut_sides_follow_signed_zero():
    assert ccbench.evaluate("log", -1.0, 0.0) == (0.0, math.pi)
    assert ccbench.evaluate("log", -1.0, -0.0) == (0.0, -math.pi)
    re, im = ccbench.evaluate("sqrt", -4.0, -0.0)
    assert math.copysign(1, re) == 1 and im == -2.0


def test_bits_interface():
    assert ccbench.evaluate_bits("acos", "binary32", "bf800000", "00000000") == ("40490fdb", "80000000")
    with pytest.raises(ccbench.ParseError):
        ccbench.evaluate_bits("acos", "binary32", "bf80", "00000000")
    with pytest.raises(ccbench.UsageError):
        ccbench.evaluate_bits("exp", "binary64", "0", "0")


def test_codec_and_classes():
    assert ccbench.encode_bits(-0.0) == "8000000000000000"
    assert ccbench.encode_bits(1.0, "binary32") == "3f800000"
    assert ccbench.decode_bits("7fefffffffffffff") == 1.7976931348623157e308
    assert ccbench.classify(5e-324) == "PosSubnormal"
    assert ccbench.classify(-0.0, "binary32") == "NegZero"
    assert ccbench.ulp_distance(1.0, math.nextafter(1.0, 2.0)) == 1
    with pytest.raises(ccbench.NanInputError):
        ccbench.ulp_distance(math.nan, 1.0)
    with pytest.raises(ccbench.ParseError):
        ccbench.decode_bits("3FF0000000000000")


def test_format_params():
    assert ccbench.format_params("binary32")["log2h"] == 89.0
    assert ccbench.format_params()["log2h"] == 710.0


def test_subnormal_atan():
    re, im = ccbench.evaluate("atan", 0.0, 1.7976931348623157e308)
    assert ccbench.classify(im) == "PosSubnormal"
    assert re == math.pi / 2


def test_suite_run():
    ids = ccbench.case_ids()
    assert len(ids) == 70 and ids[0] == "log/-h+i0"
    for precision in ("binary32", "binary64"):
        run = ccbench.run_suite(precision=precision)
        assert (run["passed"], run["denominator"]) == (70, 70)
        assert "Pass rate 70/70" in run["table"]
        assert json.loads(run["json"])["results"][5]["case_id"] == ids[5]
        assert run["csv"].startswith("case_id,function,")


def test_capability_errors():
    if "binary128" not in ccbench.supported_precisions():
        with pytest.raises(ccbench.CapabilityError):
            ccbench.run_suite(precision="binary128")
    with pytest.raises(ccbench.UsageError):
        ccbench.run_suite(provider="libm")


def test_protocol_error_hierarchy():
    assert issubclass(ccbench.VersionError, ccbench.ProtocolError)
    assert issubclass(ccbench.ProtocolError, ccbench.CcbenchError)
    with pytest.raises(ccbench.ProtocolError):
        ccbench.run_suite(provider="cmd:true")


def test_maps():
    assert ccbench.joukowski_inverse(0.0, -0.0) == (0.0, -1.0)
    w = ccbench.joukowski_inverse(1.0, 0.0)
    assert abs(math.hypot(*w) - 1) < 1e-15
    assert ccbench.joukowski(*ccbench.joukowski_inverse(3.0, 1.0)) == pytest.approx((3.0, 1.0))
    with pytest.raises(ccbench.PoleError):
        ccbench.cross_map(0.0, 0.0)
    csv = ccbench.trace_cuts_csv("log", 5)
    assert csv.splitlines()[0] == "curve,label,t,z_re,z_im,w_re,w_im"
    assert len(csv.splitlines()) == 11
