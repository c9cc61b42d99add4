"""Run-time limits.

Every limit can be overridden through an environment variable, e.g.
``RAMSEY_DESCENT_VERTEX_LIMIT=20000``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields


@dataclass
class Limits:
    vertex_limit: int = 5000        # generators and loaders
    solver_limit: int = 64          # exact chromatic solver, vertices
    search_budget: int = 2_000_000  # DFS nodes for fixed-length cycle search
    oracle_max_vertices: int = 64   # odd-girth oracle

    @classmethod
    def from_env(cls, environ=None) -> "Limits":
        environ = os.environ if environ is None else environ
        kwargs = {}
        for f in fields(cls):
            key = "RAMSEY_DESCENT_" + f.name.upper()
            if key in environ:
                kwargs[f.name] = int(environ[key])
        return cls(**kwargs)


LIMITS = Limits.from_env()
