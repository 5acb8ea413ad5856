"""Bundled benchmark data."""

from __future__ import annotations

from importlib import resources

from .complexes import Edge, SimplicialComplex, clique_complex, parse_edge_lines

__all__ = ["karate_club_edges", "karate_club_complex", "karate_club_factions"]

# Faction each member sided with after the club split (1-indexed ids).
_MR_HI = frozenset({1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 17, 18, 20, 22})


def karate_club_edges() -> list[Edge]:
    """The 78 friendship ties of the 34-member karate club network."""
    text = resources.files("simqwalk.data").joinpath("karate_club.txt").read_text()
    return parse_edge_lines(text.splitlines())


def karate_club_complex(max_dim: int = 4) -> SimplicialComplex:
    """Clique complex of the karate club network (top dimension 4)."""
    return clique_complex(karate_club_edges(), max_dim=max_dim)


def karate_club_factions() -> dict[int, str]:
    """Faction label ("Mr. Hi" or "Officer") of each club member."""
    return {v: ("Mr. Hi" if v in _MR_HI else "Officer") for v in range(1, 35)}
