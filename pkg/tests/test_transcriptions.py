from __future__ import annotations

import pytest

from quintcover import transcriptions as tr
from quintcover.exactalg import parse_poly


def test_every_display_matches_its_checksum():
    assert tr.verify_checksums() == []


def test_checksums_cover_every_display():
    assert set(tr.CHECKSUMS) == set(tr.DISPLAYS)


def test_tampering_is_detected(monkeypatch):
    monkeypatch.setitem(tr.DISPLAYS, "case2.b0", "-(a + 8)^2(a - 1)^3(3a - 1)")
    assert tr.verify_checksums() == ["case2.b0"]


@pytest.mark.parametrize("name", sorted(k for k in tr.DISPLAYS if k not in ("y3bar.j",)))
def test_every_display_parses(name):
    text = tr.DISPLAYS[name]
    assert parse_poly(text) is not None


def test_uv_line_and_w_coefficients_use_only_u_and_v():
    for key in ("w.c0", "w.c1", "w.c2", "w.delta", "case3.uv_line"):
        assert set(tr.poly(key).used_gens()) <= {"u", "v"}
