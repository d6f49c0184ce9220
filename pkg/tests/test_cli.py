import io

import pytest

from qovar.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def cache(tmp_path, monkeypatch):
    monkeypatch.delenv("QOVAR_CACHE", raising=False)
    return str(tmp_path / "cache")


def test_hilbert_commands():
    assert call("hilbert", "dim", "3", "1", "1", "1", "1") == (0, "3\n")
    assert call("hilbert", "krull") == (0, "12\n")
    assert call("hilbert", "krull", "--printed-q") == (0, "11\n")
    code, text = call("hilbert", "series", "--diagonal", "--tmax", "2")
    assert code == 0 and text.splitlines()[1] == "1: u^4"
    code, text = call("hilbert", "compare-pq", "--tmax", "8")
    assert code == 0 and text.splitlines()[-1] == "16 mismatching cells up to t^8"
    code, text = call("hilbert", "compare-pq", "--tmax", "8", "--corrected")
    assert text.splitlines()[-1] == "0 mismatching cells up to t^8"


def test_catalog_build_show_counts(cache):
    code, text = call("catalog", "build", "--dmax", "3", "--cache", cache)
    assert code == 0 and text.splitlines()[-1] == "14 generators"
    code, text = call("catalog", "show", "B_0000", "--source", "--cache", cache)
    assert code == 0 and "a[0000]*a[1111]" in text
    code, text = call("catalog", "counts", "--cache", cache)
    assert code == 0 and "1 1111 1 1 OK" in text and "MISSING" in text


def test_catalog_listing():
    code, text = call("catalog", "show")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 170 and lines[0] == "A_1111 = f"


def test_eval(cache):
    code, text = call("eval", "H", "G_abcd", "--cache", cache)
    assert (code, text) == (0, "1/2*d^2 + 1/2*c^2 + 1/2*b^2 + 1/2*a^2\n")
    code, text = call("eval", "H", "G_abcd", "--set", "a=1", "--set", "b=1/2", "--set", "c=0", "--set", "d=0", "--cache", cache)
    assert (code, text) == (0, "5/8\n")


def test_eval_is_idempotent(cache):
    first = call("eval", "C_3111", "L_0_5+3bar", "--cache", cache)
    assert first == call("eval", "C_3111", "L_0_5+3bar", "--cache", cache)


def test_verify_exit_codes(cache):
    assert call("verify", "hilbert", "--cache", cache)[0] == 0
    code, text = call("verify", "syzygies", "--cache", cache)
    assert code == 1
    assert "PASS f^2 D_4000 + C_3111^2 + 16 b_xy b_xz b_xt" in text


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "Z_1111", "G_abcd"),
        ("eval", "H", "Q_abcd"),
        ("eval", "H", "G_abcd", "--set", "e=1"),
        ("eval", "H", "G_abcd", "--set", "a=x"),
        ("hilbert", "dim", "3", "1"),
        ("hilbert", "dim", "3", "1", "1", "1", "-1"),
        ("catalog", "build", "--dmax", "13"),
        ("verify", "minimality", "--dmax", "9"),
        ("frobnicate",),
        ("verify", "everything"),
    ],
)
def test_usage_errors(argv, cache, capsys):
    assert call(*argv, "--cache", cache)[0] == 2
