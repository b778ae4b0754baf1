"""Built-in example configurations usable as CLI inputs by name."""

from __future__ import annotations

BUILTIN_DOCUMENTS = {
    "a3": {
        "name": "a3",
        "dim": 2,
        "points": [[1, 0], [1, 1], [1, 2], [1, 3], [1, 4]],
    },
    "kp2": {
        "name": "kp2",
        "dim": 3,
        "points": [[0, 0, 1], [1, 0, 1], [0, 1, 1], [-1, -1, 1]],
    },
    "f2": {
        "name": "f2",
        "dim": 3,
        "points": [[0, 0, 1], [1, 0, 1], [0, 1, 1], [-1, 2, 1], [0, -1, 1]],
    },
}
