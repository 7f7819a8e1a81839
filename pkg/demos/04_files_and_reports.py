"""
Game files and report rendering
===============================

Games travel as small text documents (``.gnf``): a header, one strategy
line per player, one payoff line per cell.  Serialization is canonical -
cells in enumeration order, single spaces, LF endings - so round trips
are byte-exact and diffs are meaningful.
"""

from pathlib import Path

from nonnash import (
    GameDocument,
    build_report,
    gen_random_game,
    parse_game,
    render_report,
    serialize_game,
)

GAMES = Path(__file__).resolve().parent.parent / "games"

# Parse a shipped fixture and write it back: identical bytes.
text = (GAMES / "pd.gnf").read_text()
doc = parse_game(text)
print(serialize_game(doc), end="")
print("canonical round trip:", serialize_game(doc) == text)
print()

# Comments and blank lines are accepted on the way in, dropped on the
# way out; cells may arrive in any order.
messy = """
# the same game, scrambled and annotated
gnf 1
players 2
strategies 0 Defect Cooperate
strategies 1 Defect Cooperate
payoffs
1 1 2 2   # mutual cooperation
0 0 1 1
1 0 0 3
0 1 3 0
end
"""
print("scrambled parse equals fixture game:", parse_game(messy).game == doc.game)
print()

# Reports render as text (shown in other demos), csv, or json.
report = build_report(doc.game, name="pd")
print(render_report(report, "csv"))

# Randomly generated games serialize like any other; this is what the
# ``gen`` CLI subcommand prints.
g = gen_random_game(2, (2, 3), 0, 9, seed=42)
print(serialize_game(GameDocument(game=g)), end="")
