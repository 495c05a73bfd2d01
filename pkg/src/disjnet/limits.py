"""Size caps for exact computations.

Every brute-force routine takes its cap as a keyword so callers (and the
CLI's ``--oracle-cap`` / ``--enum-cap`` flags) can raise it explicitly.
"""

from disjnet.errors import ResourceError

# Vertex cap for graphs and configurations (one machine word).
MAX_VERTICES = 64
# Full 2**n state scans: truth tables, functional graphs, image sets.
ORACLE_CAP = 20
# Enumeration of all 2**(n*n) digraphs.
ENUMERATION_CAP = 4
# Explicit enumeration of periodic points / fixed points (count only beyond).
POINT_CAP = 1 << 16


def check_cap(n: int, cap: int, what: str, flag: str = "--oracle-cap") -> None:
    if n > cap:
        raise ResourceError(f"{what} needs n <= {cap}, got n={n}; raise {flag} to allow it")
