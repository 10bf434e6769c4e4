from hypothesis import given, strategies as st

from subcount.report import format_report, format_rows, parse_report
from subcount.verifier import VerdictReport

# The csv module cannot represent NUL at all; reports never contain it.
text = st.text(alphabet=st.characters(blacklist_categories=("Cs",), blacklist_characters="\x00"), max_size=30)
violation = st.dictionaries(st.sampled_from(["group", "cyc", "bound", "t", "note"]),
                            st.one_of(st.integers(-5, 10**6), text, st.booleans()), max_size=4)
report = st.builds(VerdictReport, st.sampled_from(["THM-3.1", "EQ-3.1", "LEM-2.8"]),
                   st.sampled_from(["pass", "fail", "vacuous"]), st.integers(0, 10**5),
                   st.lists(violation, max_size=3), text)


@given(st.lists(report, max_size=4))
def test_round_trip(reports):
    for fmt in ("json", "csv"):
        back = parse_report(format_report(reports, fmt), fmt)
        assert [r.to_dict() for r in back] == [r.to_dict() for r in reports]


def test_empty_csv_is_header_only():
    assert format_report([], "csv") == "check_id,status,groups_checked,violations,notes\n"


def test_table_single_row():
    out = format_report([VerdictReport("THM-2.2", "pass", 10, [], "fine")], "table").splitlines()
    assert len(out) == 3
    assert out[2].split()[:4] == ["THM-2.2", "pass", "10", "0"]


def test_json_keys():
    import json
    (obj,) = json.loads(format_report([VerdictReport("X", "pass", 1)], "json"))
    assert list(obj) == ["check_id", "status", "groups_checked", "violations", "notes"]


def test_rows():
    rows = [{"name": "S(3)", "cyc": 5, "sub": None}]
    assert format_rows(rows, "csv") == "name,cyc,sub\nS(3),5,\n"
    assert "S(3)" in format_rows(rows, "table")
    assert format_rows([], "table") == ""
