# CAD variable-ordering heuristics and learned selection
