import io
import json

import pytest

from PalWidth import certkeys as CK
from PalWidth import cli as CL

def run(*argv):
    out = io.StringIO()
    status = CL.Run(list(argv), out)
    return status, out.getvalue()

G22 = ("--n", "2", "--r", "2")

def test_decompose_json():
    status, text = run("decompose", *G22, "--json", "[x2,x1]")
    assert status == 0
    d = json.loads(text)
    assert len(d[CK.FACTORS_KEY]) == 3
    assert d[CK.VERIFIED_KEY] is True
    assert d[CK.UPPER_KEY] == 3 and d[CK.LOWER_KEY] == 1
    assert d[CK.EXACT_KEY] is False

def test_decompose_text():
    status, text = run("decompose", *G22, "[x2,x1]")
    assert status == 0
    assert text.splitlines() == ["3 palindromes", "x2^-1", "x1^-2", "x1 x2 x1"]

def test_normalize():
    assert run("normalize", *G22, "x1 x2 x1 x2") == (0, "x1^2 x2^2 [x2,x1]\n")
    assert run("normalize", "--n", "3", "--r", "1", "x3 x1^2 x3") == (0, "x1^2 x3^2\n")
    status, _ = run("normalize", "--n", "2", "--r", "3", "x1")
    assert status == 1

def test_mul_inv():
    assert run("mul", *G22, "x2", "x1") == (0, "x1 x2 [x2,x1]\n")
    assert run("inv", *G22, "x1 x2") == (0, "x1^-1 x2^-1 [x2,x1]\n")
    status, text = run("mul", "--n", "2", "--r", "3", "x1", "x1^-1", "--json")
    assert status == 0 and json.loads(text)[CK.WORD_KEY] == "1"

def test_eval():
    assert run("eval", "--n", "1", "--r", "1", "x1") == (0, "1 + 1*X1\n")
    status, text = run("eval", "--n", "1", "--r", "2", "--json", "x1^-1")
    assert status == 0
    terms = {tuple(m): c for m, c in json.loads(text)[CK.TERMS_KEY]}
    assert terms == {(): 1, (1,): -1, (1, 1): 1}

def test_length():
    assert run("length", *G22, "1") == (0, "0\n")
    status, text = run("length", *G22, "[x2,x1]")
    assert status == 0 and text.splitlines()[0] == "3"
    status, text = run("length", "--n", "3", "--r", "3", "x1 x2")
    assert status == 0 and text.splitlines()[0] == "[2, 2]"

def test_usage_errors():
    assert run("normalize", *G22, "x1 ^")[0] == 1
    assert run("normalize", "--n", "2", "x1")[0] == 1
    assert run("frobnicate")[0] == 1
    assert run("length", *G22, "x3")[0] == 1
    assert run("length", "--n", "0", "--r", "2", "x1")[0] == 1
    assert run("search", *G22, "--max-factors", "0", "x1")[0] == 1
    assert run("lemma-check", "nonsense")[0] == 1

def test_search():
    status, text = run("search", *G22, "--max-syllables", "3", "--max-exponent", "2",
                       "--max-factors", "3", "[x2,x1]")
    assert status == 0
    assert text.splitlines()[0] == "3"
    status, text = run("search", *G22, "--max-factors", "2", "--json", "[x2,x1]")
    assert status == 0
    d = json.loads(text)
    assert d[CK.FOUND_KEY] is False
    assert d[CK.BOUNDS_KEY]["max_factors"] == 2

def test_certificate_round_trip(tmp_path):
    cert = tmp_path / "cert.json"
    status, text = run("length", *G22, "--json", "--out", str(cert), "[x2,x1]")
    assert status == 0 and text == ""
    d = json.loads(cert.read_text())
    assert d[CK.EXACT_KEY] is True and d[CK.LOWER_METHOD_KEY] == CK.N22_METHOD

    status, text = run("verify", str(cert))
    assert status == 0
    assert text.splitlines()[:2] == ["verified", "3"]

    d[CK.FACTORS_KEY][0] = "x2"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(d))
    assert run("verify", str(bad))[0] == 1

def test_certificate_tampering(tmp_path):
    _, text = run("length", "--n", "3", "--r", "2", "--json", "x1 x2 x3")
    d = json.loads(text)
    assert CL.CertificateFromDict(d).upper == d[CK.UPPER_KEY]

    for key, value in ((CK.LOWER_KEY, 4), (CK.UPPER_KEY, 2), (CK.LOWER_METHOD_KEY, CK.EXHAUSTIVE_METHOD),
                       (CK.LOWER_METHOD_KEY, CK.N22_METHOD), (CK.N_KEY, "3")):
        t = dict(d)
        t[key] = value
        path = tmp_path / "t.json"
        path.write_text(json.dumps(t))
        assert run("verify", str(path))[0] == 1

    t = dict(d)
    del t[CK.TARGET_KEY]
    path = tmp_path / "t.json"
    path.write_text(json.dumps(t))
    assert run("verify", str(path))[0] == 1

    path.write_text("{not json")
    assert run("verify", str(path))[0] == 1
    assert run("verify", str(tmp_path / "missing.json"))[0] == 1

def test_verify_stdin(monkeypatch):
    _, text = run("decompose", *G22, "--json", "x1 x2")
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    status, out = run("verify", "-")
    assert status == 0 and out.startswith("verified\n")

def test_lemma_checks():
    status, text = run("lemma-check", "l1", "--bound", "5", "--json")
    assert status == 0
    d = json.loads(text)
    assert d[CK.HOLDS_KEY] is True and d[CK.CHECKED_KEY] == 4*11**4
    assert run("lemma-check", "n1")[0] == 0
    assert run("lemma-check", "t21", "--bound", "2")[0] == 0
    assert run("lemma-check", "n3", "--samples", "5")[0] == 0
    assert run("lemma-check", "n2", "--samples", "3")[0] == 0
    assert run("lemma-check", "cor21", "--samples", "20", "--seed", "3")[0] == 0

def test_lemma_reports():
    report = CL.CheckN1(4)
    assert report.holds() and report.checked == 4
    report = CL.CheckT21(2, 4)
    assert report.holds()
    assert report.toDict()["length_counts"]["3"] > 0

def test_certificate_field_types(tmp_path):
    _, text = run("decompose", *G22, "--json", "x1 x2")
    d = json.loads(text)
    path = tmp_path / "t.json"
    for key, value in ((CK.TARGET_KEY, 5), (CK.FACTORS_KEY, None), (CK.FACTORS_KEY, "x1"),
                       (CK.FACTORS_KEY, ["x1", 2]), (CK.LOWER_METHOD_KEY, ["parity"])):
        t = dict(d)
        t[key] = value
        path.write_text(json.dumps(t))
        assert run("verify", str(path))[0] == 1
    with pytest.raises(CL.BE.DomainError):
        CL.CertificateFromDict(dict(d, **{CK.TARGET_KEY: 5}))

def test_oversized_words():
    assert run("length", *G22, "(x1 x2)^100000000000000000000")[0] == 1
    assert run("normalize", *G22, "("*5000 + "x1" + ")"*5000)[0] == 1
    assert run("normalize", *G22, "[x1,"*5000 + "x2" + "]"*5000)[0] == 1
    status, text = run("normalize", *G22, "x1^100000000000000000000")
    assert status == 0 and text == "x1^100000000000000000000\n"

def test_lemma_check_limits():
    assert run("lemma-check", "l1", "--bound", "100000")[0] == 1
    assert run("lemma-check", "l1", "--bound", "-1")[0] == 1
    assert run("lemma-check", "t21", "--bound", "0")[0] == 1
    assert run("lemma-check", "t21", "--bound", str(CK.MAX_T21_BOX_AB + 1))[0] == 1
    assert run("lemma-check", "n1", "--bound", "0")[0] == 1
    assert run("lemma-check", "n1", "--bound", str(CK.MAX_N1_RANK + 1))[0] == 1
    assert run("lemma-check", "n3", "--samples", "-1")[0] == 1
    status, text = run("lemma-check", "n1", "--bound", "3", "--json")
    assert status == 0 and json.loads(text)[CK.CHECKED_KEY] == 3

def test_resource_errors_are_input_errors(monkeypatch):
    for exc in (OverflowError, MemoryError, RecursionError, ValueError):
        def fail(*args, **kwargs):
            raise exc("too big")
        monkeypatch.setattr(CL.DC, "ExactOrBracketLength", fail)
        assert run("length", *G22, "x1")[0] == 1
