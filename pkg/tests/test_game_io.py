import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonnash import (
    GameDocument,
    GnfSyntaxError,
    MissingCell,
    UnknownFormat,
    VersionUnsupported,
    build_report,
    gen_random_game,
    new_game,
    parse_game,
    render_report,
    serialize_game,
)

CANONICAL_PD = """gnf 1
players 2
strategies 0 Defect Cooperate
strategies 1 Defect Cooperate
payoffs
0 0 1 1
0 1 3 0
1 0 0 3
1 1 2 2
end
"""


class TestParse:
    def test_canonical_pd(self, pd):
        doc = parse_game(CANONICAL_PD)
        assert doc.game == pd
        assert doc.version == 1
        assert doc.name == ""

    def test_comments_blank_lines_crlf(self, pd):
        text = (
            "# a whole-line comment\r\n"
            "gnf 1\r\n\r\n"
            "players 2   # trailing comment\r\n"
            "strategies 0 Defect Cooperate\r\n"
            "strategies 1 Defect Cooperate\r\n"
            "payoffs\r\n"
            "0 0 1 1\r\n0 1 3 0\r\n1 0 0 3\r\n1 1 2 2\r\n"
            "end\r\n"
        )
        doc = parse_game(text)
        assert doc.game == pd
        assert "a whole-line comment" in doc.comments

    def test_cells_in_any_order(self, pd):
        text = CANONICAL_PD.replace("0 0 1 1\n0 1 3 0", "0 1 3 0\n0 0 1 1")
        assert parse_game(text).game == pd

    def test_missing_cell(self):
        text = CANONICAL_PD.replace("1 1 2 2\n", "")
        with pytest.raises(MissingCell, match=r"\(1, 1\)"):
            parse_game(text)

    def test_version_unsupported(self):
        with pytest.raises(VersionUnsupported):
            parse_game(CANONICAL_PD.replace("gnf 1", "gnf 2"))

    def test_bad_header(self):
        with pytest.raises(GnfSyntaxError) as exc:
            parse_game("nope\n")
        assert exc.value.line == 1

    def test_bad_cell_line_reports_line_number(self):
        text = CANONICAL_PD.replace("1 0 0 3", "1 0 three 3")
        with pytest.raises(GnfSyntaxError) as exc:
            parse_game(text)
        assert exc.value.line == 8

    def test_strategies_out_of_order(self):
        text = CANONICAL_PD.replace("strategies 0", "strategies 1", 1)
        with pytest.raises(GnfSyntaxError):
            parse_game(text)

    def test_trailing_garbage(self):
        with pytest.raises(GnfSyntaxError):
            parse_game(CANONICAL_PD + "extra stuff\n")

    def test_truncated_file(self):
        with pytest.raises(GnfSyntaxError):
            parse_game("gnf 1\nplayers 2\n")


class TestSerialize:
    def test_canonical_pd_bytes(self, pd):
        assert serialize_game(GameDocument(game=pd)) == CANONICAL_PD

    def test_single_cell_is_six_lines(self):
        g = new_game([["only"]], [((0,), (7,))])
        text = serialize_game(GameDocument(game=g))
        assert text == "gnf 1\nplayers 1\nstrategies 0 only\npayoffs\n0 7\nend\n"
        assert len(text.rstrip("\n").split("\n")) == 6

    def test_roundtrip_random_games(self):
        for j in range(100):
            g = gen_random_game(2 + j % 2, (2 + j % 3, 3, 2)[: 2 + j % 2], -50, 50, seed=j)
            assert parse_game(serialize_game(GameDocument(game=g))).game == g

    @given(st.integers(min_value=0, max_value=2**63))
    @settings(max_examples=40, deadline=None)
    def test_roundtrip_property(self, seed):
        g = gen_random_game(2, (3, 4), -1000, 1000, seed=seed)
        assert parse_game(serialize_game(GameDocument(game=g))).game == g

    def test_fixture_files_are_canonical(self, games_dir):
        for name in ("pd", "chicken", "coordination", "g3x3"):
            text = (games_dir / f"{name}.gnf").read_text()
            assert serialize_game(parse_game(text)) == text


class TestRenderReport:
    def test_csv_pd(self, pd):
        report = build_report(pd, name="pd")
        lines = render_report(report, "csv").splitlines()
        assert lines[0] == "i0,i1,labels,nash,hofstadter,ir,rationalizable"
        assert len(lines) == 5
        assert lines[4] == "1,1,(Cooperate;Cooperate),false,true,true,true"

    def test_csv_row_count(self, g3x3):
        lines = render_report(build_report(g3x3), "csv").splitlines()
        assert len(lines) == 10  # 9 profiles + header

    def test_text_3x3_trace(self, g3x3):
        text = render_report(build_report(g3x3, name="g3x3"), "text")
        assert "round 1: player 0: C; player 1: C" in text
        assert "round 2: player 0: B; player 1: B" in text

    def test_text_pd_no_elimination(self, pd):
        text = render_report(build_report(pd, name="pd"), "text")
        assert "no strategies eliminated" in text
        assert "hofstadter: (Cooperate,Cooperate)" in text

    def test_empty_name_allowed(self, pd):
        text = render_report(build_report(pd), "text")
        assert "game:" in text
        obj = json.loads(render_report(build_report(pd), "json"))
        assert obj["name"] == ""

    def test_json_structure(self, g3x3):
        obj = json.loads(render_report(build_report(g3x3, name="g3x3"), "json"))
        assert obj["symmetric"] is True
        assert obj["nash"] == [[0, 0]]
        assert obj["maximin"] == [5, 5]
        assert obj["elimination_rounds"] == [[[0, 2], [1, 2]], [[0, 1], [1, 1]]]
        assert obj["survivors"] == [[0], [0]]

    def test_json_stable_bytes(self, g3x3):
        a = render_report(build_report(g3x3, name="x"), "json")
        b = render_report(build_report(g3x3, name="x"), "json")
        assert a == b

    def test_asymmetric_report(self):
        g = gen_random_game(2, (2, 3), 0, 9, seed=6)
        report = build_report(g, name="rand")
        assert report.hofstadter is None
        text = render_report(report, "text")
        assert "hofstadter: n/a (asymmetric)" in text
        obj = json.loads(render_report(report, "json"))
        assert obj["hofstadter"] is None
        assert obj["regions"] is None
        csv_lines = render_report(report, "csv").splitlines()
        assert csv_lines[1].split(",")[4] == ""  # empty hofstadter column

    def test_unknown_format(self, pd):
        with pytest.raises(UnknownFormat):
            render_report(build_report(pd), "yaml")
