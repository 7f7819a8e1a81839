"""
Solution concepts on three classic symmetric games
===================================================

Walks the prisoner's dilemma, chicken, and a coordination game through
every solution concept the library computes, and shows where the Nashian
and non-Nashian answers part ways.
"""

from nonnash import (
    build_report,
    chicken,
    coordination,
    hofstadter_equilibria,
    individually_rational_profiles,
    maximin_values,
    prisoners_dilemma,
    pure_nash,
    render_report,
)

# The prisoner's dilemma.  Nash players hold the opponent's move fixed,
# so each defects no matter what: (Defect, Defect) is the unique Nash
# equilibrium even though both players would prefer mutual cooperation.
pd = prisoners_dilemma()
print(render_report(build_report(pd, name="prisoners-dilemma"), "text"))

# Superrational players reason differently: both know they will reach the
# same conclusion, so only the diagonal outcomes are live options, and the
# best diagonal cell wins.  That flips the prediction to (C, C).
print("nash:       ", pure_nash(pd))
print("hofstadter: ", hofstadter_equilibria(pd))
print()

# Chicken.  The two Nash equilibria are *off* the diagonal (one player
# yields), while the superrational outcome is that both swerve.
ch = chicken()
print("chicken nash:       ", pure_nash(ch))
print("chicken hofstadter: ", hofstadter_equilibria(ch))

# Maximin: the payoff each player can guarantee alone.  Swerving
# guarantees 1; staying straight can end at 0, so the thresholds are
# (1, 1) and mutual aggression (0, 0) is not individually rational.
print("chicken maximin:    ", maximin_values(ch))
print("chicken IR:         ", individually_rational_profiles(ch))
print()

# Coordination.  Every diagonal cell is a Nash equilibrium, but only the
# better one is superrational; and because a lone player can guarantee
# nothing (a mismatch pays 0), *every* profile is individually rational.
co = coordination()
print("coordination nash:       ", pure_nash(co))
print("coordination hofstadter: ", hofstadter_equilibria(co))
print("coordination maximin:    ", maximin_values(co))
print("coordination IR:         ", individually_rational_profiles(co))
