"""Independent oracles used to compute expected test values.

Nothing here reuses the library's decision procedures: span membership is
exhaustive subset XOR, fiber counts are re-derived from scratch, surface
bookkeeping comes from the classification formulas, and the generate-all page
enumeration builds every labeled graph directly from degree shapes.
"""

from __future__ import annotations

import itertools

from roundfold import Edge, LabeledReebGraph, Vertex, VertexKind, validate_page

# (down slots, up slots) per shape; merge/split are the two saddle_p options
SHAPES = {
    "min": (VertexKind.MIN, 0, 1),
    "max": (VertexKind.MAX, 1, 0),
    "merge": (VertexKind.SADDLE_P, 2, 1),
    "split": (VertexKind.SADDLE_P, 1, 2),
    "saddle_b": (VertexKind.SADDLE_B, 1, 1),
}


def subset_xor_member(vectors: list[int], target: int) -> bool:
    """Exhaustive GF(2) span membership: try every subset XOR."""
    for r in range(len(vectors) + 1):
        for combo in itertools.combinations(vectors, r):
            acc = 0
            for v in combo:
                acc ^= v
            if acc == target:
                return True
    return False


def euler_orientable(genus: int, boundary: int) -> int:
    return 2 - 2 * genus - boundary


def euler_nonorientable(crosscaps: int, boundary: int) -> int:
    return 2 - crosscaps - boundary


def fiber_counts_by_levels(graph: LabeledReebGraph) -> list[int]:
    """Count fiber circles region by region, walking the vertex events from
    the boundary outward instead of counting edge spans."""
    rank_of = {v.id: v.rank for v in graph.vertices}
    s = max(rank_of.values())
    alive = {e.id for e in graph.edges if rank_of[e.low] == 0}
    counts = [len(alive)]
    for r in range(1, s + 1):
        ended = {e.id for e in graph.edges if rank_of[e.high] == r}
        started = {e.id for e in graph.edges if rank_of[e.low] == r}
        alive = (alive - ended) | started
        counts.append(len(alive))
    return counts


def all_valid_pages(s: int) -> list[LabeledReebGraph]:
    """Every valid labeled page with exactly s critical vertices, generated
    the slow way: all shape sequences, all down-slot targets, all twists."""
    out: list[LabeledReebGraph] = []
    for shape_seq in itertools.product(sorted(SHAPES), repeat=s):
        shapes = [SHAPES[name] for name in shape_seq]
        down_slots = [(r, i) for r in range(1, s + 1) for i in range(shapes[r - 1][1])]
        # each down slot of the rank-r vertex picks a lower critical vertex or
        # spawns its own boundary circle
        slot_choices = [
            [f"v{t}" for t in range(1, r)] + ["bd"] for r, _ in down_slots
        ]
        for picks in itertools.product(*slot_choices):
            # up-slot capacities must be met exactly
            taken = {f"v{r}": 0 for r in range(1, s + 1)}
            for target in picks:
                if target != "bd":
                    taken[target] += 1
            if any(taken[f"v{r}"] != shapes[r - 1][2] for r in range(1, s + 1)):
                continue
            vertices = [Vertex(f"v{r}", shapes[r - 1][0], r) for r in range(1, s + 1)]
            edges = []
            n_bd = 0
            for (r, _), target in zip(down_slots, picks):
                if target == "bd":
                    low = f"b{n_bd}"
                    vertices.append(Vertex(low, VertexKind.BOUNDARY, 0))
                    n_bd += 1
                else:
                    low = target
                edges.append((low, f"v{r}"))
            skeleton = LabeledReebGraph(
                tuple(vertices),
                tuple(Edge(f"e{j}", lo, hi, 0) for j, (lo, hi) in enumerate(edges)),
            )
            if not validate_page(skeleton).ok:
                continue
            for twists in itertools.product((0, 1), repeat=len(edges)):
                out.append(
                    LabeledReebGraph(
                        tuple(vertices),
                        tuple(
                            Edge(f"e{j}", lo, hi, t)
                            for j, ((lo, hi), t) in enumerate(zip(edges, twists))
                        ),
                    )
                )
    return out


def partition_by(items, same) -> list[list]:
    """Group items into equivalence classes using the pairwise test ``same``."""
    classes: list[list] = []
    for item in items:
        for cls in classes:
            if same(cls[0], item):
                cls.append(item)
                break
        else:
            classes.append([item])
    return classes
