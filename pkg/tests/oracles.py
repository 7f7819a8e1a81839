"""Independent brute-force oracles used to cross-check the solvers.

Everything here is deliberately written against the raw definitions, via
different code paths than the library (itertools over full profile lists,
no stride arithmetic, no shared helpers), so agreement is meaningful.
"""

import itertools

from nonnash import Game, new_game, payoff


def all_profiles(g: Game) -> list[tuple[int, ...]]:
    return list(itertools.product(*(range(k) for k in g.strategy_counts)))


def nash_oracle(g: Game) -> list[tuple[int, ...]]:
    """Best-response formulation: a profile is Nash iff every player's
    payoff equals the best payoff available against the others' fixed
    choices."""
    result = []
    for p in all_profiles(g):
        is_nash = True
        for i in range(g.n_players):
            best = max(
                payoff(g, p[:i] + (alt,) + p[i + 1 :], i)
                for alt in range(g.strategy_counts[i])
            )
            if payoff(g, p, i) != best:
                is_nash = False
                break
        if is_nash:
            result.append(p)
    return result


def maximin_oracle(g: Game) -> tuple[int, ...]:
    """Group the full profile list by the player's own strategy and take
    max over groups of the group minimum."""
    values = []
    for i in range(g.n_players):
        worst: dict[int, int] = {}
        for p in all_profiles(g):
            u = payoff(g, p, i)
            own = p[i]
            if own not in worst or u < worst[own]:
                worst[own] = u
        values.append(max(worst.values()))
    return tuple(values)


def symmetric_oracle(g: Game) -> bool:
    """Invariance under all |P|! player permutations (feasible for n <= 4).

    A permutation acts by relabeling players: in the permuted profile,
    player perm[i] plays what player i played, and must earn what player
    i earned.  This reading coincides with the transposition condition on
    involutions and, unlike pairing the same permutation on both sides,
    is closed under composition, so transpositions generate all of it.
    """
    first = g.strategy_labels[0]
    if any(labels != first for labels in g.strategy_labels[1:]):
        return False
    n = g.n_players
    for perm in itertools.permutations(range(n)):
        for p in all_profiles(g):
            permuted = [0] * n
            for i in range(n):
                permuted[perm[i]] = p[i]
            permuted = tuple(permuted)
            for i in range(n):
                if payoff(g, p, i) != payoff(g, permuted, perm[i]):
                    return False
    return True


def apply_payoff_map(g: Game, mapping) -> Game:
    """Rebuild `g` with every payoff passed through `mapping` (a dict or
    callable); used for ordinal-invariance checks."""
    lookup = mapping.__getitem__ if isinstance(mapping, dict) else mapping
    cells = [
        (p, tuple(lookup(u) for u in g.payoffs[g.cell_index(p)]))
        for p in all_profiles(g)
    ]
    return new_game(g.strategy_labels, cells)


def random_increasing_map(values, rng) -> dict[int, int]:
    """A strictly increasing integer map over `values`, with a random
    base offset and random positive gaps."""
    ordered = sorted(set(values))
    out = {}
    current = rng.next_in_range(-1000, 1000)
    for v in ordered:
        out[v] = current
        current += rng.next_in_range(1, 7)
    return out
