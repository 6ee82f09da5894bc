# Two size-two parties, three voters, no Nash equilibrium.
TWO_PARTY_PARTIES = {"A": ["a1", "a2"], "B": ["b1", "b2"]}
TWO_PARTY_VOTES = [
    ["a1", "b1", "a2", "b2"],
    ["b1", "a2", "b2", "a1"],
    ["a2", "b2", "a1", "b1"],
]

# One-dimensional Euclidean election with four parties and no Nash equilibrium.
EUCLIDEAN_SPEC = {
    "candidates": {"p1": "2", "p'1": "5", "p2": "7", "p'2": "11", "p3": "0", "p4": "12"},
    "parties": {"p1": "P1", "p'1": "P1", "p2": "P2", "p'2": "P2", "p3": "P3", "p4": "P4"},
    "voters": [
        {"position": "2", "multiplicity": 5},
        {"position": "3", "multiplicity": 2},
        {"position": "5", "multiplicity": 6},
        {"position": "89/10", "multiplicity": 2},
        {"position": "11", "multiplicity": 7},
    ],
    "party_order": ["P1", "P2", "P3", "P4"],
}

# Four parties, PASP with axis Pa < Pb < Pc < Pd.
FOUR_PARTY_PARTIES = {"Pa": ["a"], "Pb": ["b1", "b2"], "Pc": ["c1", "c2"], "Pd": ["d"]}
FOUR_PARTY_VOTES = [
    ["c2", "b1", "c1", "d", "b2", "a"],
    ["b1", "c1", "b2", "c2", "a", "d"],
    ["b2", "c2", "c1", "d", "b1", "a"],
]

# PASP but not single-peaked: three different candidates are ranked last.
NOT_SP_PARTIES = {"A": ["a1", "a2"], "B": ["b"]}
NOT_SP_VOTES = [
    ["a2", "b", "a1"],
    ["a1", "b", "a2"],
    ["a1", "a2", "b"],
]
