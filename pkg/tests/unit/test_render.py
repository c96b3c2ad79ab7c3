import json

import pytest

from src.pairdist.models import OutputFormat
from src.pairdist.render import render, render_json, render_pretty, render_tsv

COLUMNS = ["i", "d_p", "mds_pair", "witness"]
RECORDS = [
    {"i": 0, "d_p": 2, "mds_pair": True, "witness": (1, 0, 0)},
    {"i": 3, "d_p": 0, "mds_pair": False, "witness": None},
]


class TestRenderTsv:
    def test_header_and_rows(self):
        assert render_tsv(RECORDS, COLUMNS) == (
            "i\td_p\tmds_pair\twitness\n0\t2\ttrue\t1,0,0\n3\t0\tfalse\t-\n"
        )

    def test_no_records(self):
        assert render_tsv([], ["a", "b"]) == "a\tb\n"

    def test_column_order_follows_argument(self):
        assert render_tsv([{"a": 1, "b": 2}], ["b", "a"]) == "b\ta\n2\t1\n"


class TestRenderJson:
    def test_values(self):
        payload = json.loads(render_json(RECORDS, COLUMNS))
        assert payload == [
            {"i": 0, "d_p": 2, "mds_pair": True, "witness": "1,0,0"},
            {"i": 3, "d_p": 0, "mds_pair": False, "witness": None},
        ]

    def test_is_indented_and_newline_terminated(self):
        text = render_json([{"a": 1}], ["a"])
        assert text == '[\n  {\n    "a": 1\n  }\n]\n'


class TestRenderPretty:
    def test_aligns_columns(self):
        text = render_pretty([{"a": 1, "bb": None}, {"a": 10, "bb": "x"}], ["a", "bb"])
        assert text == "a   bb\n--  --\n1   -\n10  x\n"


@pytest.mark.parametrize(
    "fmt, renderer",
    [
        (OutputFormat.TSV, render_tsv),
        (OutputFormat.JSON, render_json),
        (OutputFormat.PRETTY, render_pretty),
    ],
)
def test_render_dispatches(fmt, renderer):
    assert render(RECORDS, COLUMNS, fmt) == renderer(RECORDS, COLUMNS)
