# Variable ordering heuristics
from cadorder.heuristics.choice import Heuristic, HeuristicChoice
from cadorder.heuristics.admissible import admissible_orderings, is_admissible
from cadorder.heuristics.brown import brown_choose
from cadorder.heuristics.measures import (
    projections_for,
    sotd_measure,
    sotd_choose,
    ndrr_measure,
    ndrr_choose,
)

__all__ = [
    "Heuristic",
    "HeuristicChoice",
    "admissible_orderings",
    "is_admissible",
    "brown_choose",
    "projections_for",
    "sotd_measure",
    "sotd_choose",
    "ndrr_measure",
    "ndrr_choose",
]
