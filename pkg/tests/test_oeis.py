"""Sequence client: b-file parsing, the cache/network/fixture ladder, and
shift alignment of catalog series against sequence terms."""

import threading

import pytest

from airpockets import oeis
from airpockets.catalog import evaluate
from airpockets.errors import (
    NetworkUnavailable,
    NoAlignment,
    ParseError,
    UnknownSequence,
)
from airpockets.oeis import (
    CITED_IDS,
    CITED_PAIRS,
    Alignment,
    SequenceRecord,
    align_and_compare,
    fetch_sequence,
    parse_bfile,
)
from airpockets.series import TruncatedSeries


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("AIRPOCKETS_OEIS_CACHE", str(tmp_path / "oeis"))
    return tmp_path / "oeis"


# ---------------------------------------------------------------- parsing

def test_parse_bfile_basic():
    text = "# comment\n\n0 1\n1 1\n2 2\n# mid comment\n3 5\n"
    assert parse_bfile(text) == (1, 1, 2, 5)


def test_parse_bfile_offset_start():
    assert parse_bfile("1 4\n2 9\n3 16\n") == (4, 9, 16)


def test_parse_bfile_negative_values():
    assert parse_bfile("0 -1\n1 3\n") == (-1, 3)


@pytest.mark.parametrize("text", [
    "0 1 junk\n",
    "0 one\n",
    "0 1\n2 4\n",
    "",
    "# only comments\n",
])
def test_parse_bfile_rejects(text):
    with pytest.raises(ParseError):
        parse_bfile(text)


@pytest.mark.parametrize("kwargs", [
    {"id": "B000001", "terms": (1,), "source": "fixture"},
    {"id": "A1", "terms": (1,), "source": "fixture"},
    {"id": "A000001", "terms": (), "source": "fixture"},
    {"id": "A000001", "terms": (1,), "source": "disk"},
])
def test_record_validation(kwargs):
    with pytest.raises(ValueError):
        SequenceRecord(**kwargs)


# ----------------------------------------------------------------- fetch

def test_fetch_malformed_id():
    with pytest.raises(ValueError):
        fetch_sequence("A123")


def test_fixtures_cover_cited_ids():
    for seq_id in CITED_IDS:
        record = fetch_sequence(seq_id, offline=True)
        assert record.source == "fixture"
        assert record.id == seq_id
        assert len(record.terms) >= 15


def test_fetch_prefers_cache(isolated_cache):
    isolated_cache.mkdir(parents=True)
    (isolated_cache / "A004148.txt").write_text("0 7\n1 8\n2 9\n")
    record = fetch_sequence("A004148", offline=True)
    assert record.source == "cache"
    assert record.terms == (7, 8, 9)


def test_corrupt_cache_raises(isolated_cache):
    isolated_cache.mkdir(parents=True)
    (isolated_cache / "A004148.txt").write_text("0 7\nbroken line here\n")
    with pytest.raises(ParseError):
        fetch_sequence("A004148", offline=True)


def test_refresh_skips_cache(isolated_cache, monkeypatch):
    isolated_cache.mkdir(parents=True)
    (isolated_cache / "A004148.txt").write_text("0 7\n")
    monkeypatch.setattr(oeis, "_http_get", lambda url, timeout: "0 1\n1 1\n")
    record = fetch_sequence("A004148", refresh=True)
    assert record.source == "network"
    assert record.terms == (1, 1)
    # the refreshed terms replaced the stale cache entry
    again = fetch_sequence("A004148", offline=True)
    assert again.source == "cache"
    assert again.terms == (1, 1)


def test_network_populates_cache(monkeypatch):
    calls = []

    def fake_get(url, timeout):
        calls.append(url)
        return "0 5\n1 6\n"

    monkeypatch.setattr(oeis, "_http_get", fake_get)
    first = fetch_sequence("A051286")
    assert first.source == "network"
    assert "A051286" in calls[0] and "b051286.txt" in calls[0]
    second = fetch_sequence("A051286")
    assert second.source == "cache"
    assert second.terms == first.terms == (5, 6)
    assert len(calls) == 1


def test_unknown_sequence_propagates(monkeypatch):
    def fake_get(url, timeout):
        raise UnknownSequence(f"no b-file at {url}")

    monkeypatch.setattr(oeis, "_http_get", fake_get)
    with pytest.raises(UnknownSequence):
        fetch_sequence("A999999")


def test_network_failure_falls_back_to_fixture(monkeypatch):
    def fake_get(url, timeout):
        raise OSError("connection refused")

    monkeypatch.setattr(oeis, "_http_get", fake_get)
    record = fetch_sequence("A004148")
    assert record.source == "fixture"


def test_nothing_available(monkeypatch):
    monkeypatch.setattr(
        oeis, "_http_get",
        lambda url, timeout: (_ for _ in ()).throw(OSError("down")))
    with pytest.raises(NetworkUnavailable):
        fetch_sequence("A999999")
    with pytest.raises(NetworkUnavailable):
        fetch_sequence("A999999", offline=True)


def test_single_flight(monkeypatch):
    calls = []
    gate = threading.Event()

    def slow_get(url, timeout):
        calls.append(url)
        gate.wait(0.2)
        return "0 1\n1 2\n2 3\n"

    monkeypatch.setattr(oeis, "_http_get", slow_get)
    records = [None] * 6
    threads = [
        threading.Thread(
            target=lambda i=i: records.__setitem__(
                i, fetch_sequence("A203611")))
        for i in range(6)
    ]
    for thread in threads:
        thread.start()
    gate.set()
    for thread in threads:
        thread.join()
    assert len(calls) == 1
    assert {r.terms for r in records} == {(1, 2, 3)}
    sources = {r.source for r in records}
    assert sources == {"network", "cache"}


# ------------------------------------------------------------- alignment

def ratio(num, den, order):
    return (TruncatedSeries.polynomial(num, order)
            / TruncatedSeries.polynomial(den, order))


def test_min_match_floor():
    record = fetch_sequence("A004148", offline=True)
    series = evaluate("dap", 20).series
    with pytest.raises(ValueError):
        align_and_compare(series, record, min_match=7)


def test_zero_series_never_aligns():
    record = fetch_sequence("A000035", offline=True)
    with pytest.raises(NoAlignment):
        align_and_compare(TruncatedSeries.zero(30), record)


def test_unrelated_series_never_aligns():
    record = fetch_sequence("A004148", offline=True)
    ones = ratio((1,), (1, -1), 30)
    with pytest.raises(NoAlignment):
        align_and_compare(ones, record)


def test_alignment_reports_shift_and_window():
    record = fetch_sequence("A004148", offline=True)
    series = evaluate("dap", 20).series
    result = align_and_compare(series, record)
    assert result.shift == -2
    assert result.start == 2  # n = 0, 1 map outside the terms window
    # aligned values over n = 2..10 are the series coefficients there
    window = [record.terms[n + result.shift] for n in range(2, 11)]
    assert window == [1, 1, 2, 4, 8, 17, 37, 82, 185]


def test_alignment_prefers_longest_run():
    series = ratio((0, 0, 1), (1, -1), 20)  # x^2/(1-x): 0,0,1,1,1,...
    terms = [1] * 16
    terms[3] = 99  # defect splits every candidate window
    record = SequenceRecord("A000012", tuple(terms), "fixture")
    result = align_and_compare(series, record, min_match=8)
    # several shifts tie at a 12-match run; the smallest |shift| wins
    assert result.shift == 0
    assert result.start == 4  # run after the defect
    assert result.matches == 12


def test_ladder_alignment_is_deterministic():
    # parity-like series align at every other shift; smallest |shift| wins
    record = fetch_sequence("A000035", offline=True)
    series = evaluate("g0t", 20, t=1).series
    result = align_and_compare(series, record)
    assert result.shift == -1
    assert result.matches >= 15


WHOLE_PATH_SHIFTS = {
    ("dap", ()): -2,
    ("Gp1", ()): -2,
    ("Gp2", ()): -3,
    ("Gp", ()): 0,
    ("Gm", ()): -2,
    ("G", ()): 0,
    ("Gm1", ()): -4,
    ("Gm2", ()): -2,
    ("g0", ()): -2,
    ("minorized", (("m", -1),)): 1,
    ("minorized", (("m", -2),)): 0,
    ("B", ()): 0,
}


@pytest.mark.parametrize("name,params,seq_id", CITED_PAIRS)
def test_every_cited_pairing_aligns(name, params, seq_id):
    record = fetch_sequence(seq_id, offline=True)
    series = evaluate(name, 20, **params).series
    result = align_and_compare(series, record, min_match=9)
    assert isinstance(result, Alignment)
    assert result.matches >= 9
    key = (name, tuple(sorted(params.items())))
    if key in WHOLE_PATH_SHIFTS:
        assert result.shift == WHOLE_PATH_SHIFTS[key]
    # every value along the run is an exact coefficient agreement
    for n in range(result.start, result.start + result.matches):
        assert series.coefficient(n) == record.terms[n + result.shift]
