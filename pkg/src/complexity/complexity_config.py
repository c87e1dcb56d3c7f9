"""
Purpose
-------
Tunables for local-complexity estimates and star-witness searches.

Key behaviors
-------------
- `EXACT_INDEPENDENT_SET_CAP`: neighborhoods up to this size are solved
  exactly by branch and bound; larger ones get the greedy + swap heuristic
  and the witness is flagged inexact.
- `LOCAL_SEARCH_ROUNDS`: maximum number of improving (1,2)-swaps applied to
  the greedy independent set.
- `WITNESS_CANDIDATES_PER_WINDOW`: highest-degree interior vertices examined
  per window by the sub-complexity witness search.
- `MIN_GROWTH_WINDOWS`: length of the strictly growing run of star orders,
  taken over windows in order with plateaus skipped, needed for a
  zero-sub-complexity verdict.

Conventions
-----------
- Counts are plain integers; no tolerances live here.

Downstream usage
----------------
Imported by `complexity.star_witness` and `complexity.local_complexity`.
"""

EXACT_INDEPENDENT_SET_CAP: int = 20
LOCAL_SEARCH_ROUNDS: int = 200
WITNESS_CANDIDATES_PER_WINDOW: int = 5
MIN_GROWTH_WINDOWS: int = 3
