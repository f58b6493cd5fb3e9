"""Cross-checks wiring every identity and invariant together.

Each check runs within a caller-supplied position bound and reports pass or
fail with a short detail string; the command line's ``verify`` subcommand
prints one line per check.  Checks that compare against the brute-force
scanners clamp themselves to the scanners' hard caps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import coords, dynamics, identities, paths, render
from .errors import NotANode

GEOMETRY_SEED = 427531
GEOMETRY_WORDS = 1000

_IJ = coords.PLANES_2D[0]
_NK = coords.Plane.parse("nk")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _random_word(rng: random.Random, semilength: int) -> paths.DyckWord:
    steps = []
    ups = downs = 0
    while downs < semilength:
        can_up = ups < semilength
        can_down = downs < ups
        if can_up and (not can_down or rng.random() < 0.5):
            steps.append("U")
            ups += 1
        else:
            steps.append("D")
            downs += 1
    return paths.DyckWord("".join(steps))


def _catalan_cap(bound: int) -> int:
    # Catalan cross-checks up to column `bound` need tables twice as long.
    return max(dynamics.DEFAULT_POSITION_CAP, 2 * bound)


def _check_node_equations(bound: int) -> CheckResult:
    total = 0
    for node in coords.iter_nodes(bound):
        total += 1
        ok = (
            node.i + node.j == 2 * node.n
            and node.i - node.j == 2 * node.k
            and node.i >= node.n >= node.j >= 0
            and node.n >= node.k >= 0
        )
        if not ok:
            return CheckResult(
                "node-equations", False, f"coordinate equations fail at {node}"
            )
    return CheckResult("node-equations", True, f"{total} nodes with i <= {bound}")


def _check_reachability(bound: int) -> CheckResult:
    checked = 0
    for i in range(-2, bound + 1):
        for j in range(-2, i + 3):
            checked += 1
            try:
                coords.node_from(_IJ, i, j)
                constructible = True
            except NotANode:
                constructible = False
            if coords.is_reachable(i, j) != constructible:
                return CheckResult(
                    "reachability", False,
                    f"is_reachable({i}, {j}) disagrees with node completion",
                )
    return CheckResult("reachability", True, f"{checked} (i, j) pairs")


def _check_roundtrip(bound: int) -> CheckResult:
    total = 0
    for node in coords.iter_nodes(bound):
        for plane in coords.PLANES_2D:
            total += 1
            if coords.node_from(plane, *coords.project(node, plane)) != node:
                return CheckResult(
                    "projection-roundtrip", False,
                    f"{plane.name} does not round-trip {node}",
                )
    return CheckResult("projection-roundtrip", True, f"{total} projections")


def _check_planarity(bound: int) -> CheckResult:
    total = 0
    for node in coords.iter_nodes(bound):
        for plane in coords.PLANES_3D:
            total += 1
            if coords.planarity_residual(node, plane) != 0:
                return CheckResult(
                    "planarity", False,
                    f"{plane.name} residual nonzero at {node}",
                )
    return CheckResult("planarity", True, f"{total} residuals, all zero")


def _check_recurrence(bound: int) -> CheckResult:
    table = dynamics.build_table(bound)
    for node in coords.iter_nodes(bound):
        if node.i == 0:
            continue
        expected = table.count(node.i - 1, node.j + 1) + table.count(node.i - 1, node.j - 1)
        if table.count(node.i, node.j) != expected:
            return CheckResult(
                "recurrence-closure", False, f"recurrence fails at ({node.i}, {node.j})"
            )
    return CheckResult("recurrence-closure", True, f"{len(table)} entries, i <= {bound}")


def _check_four_coordinate_form(bound: int) -> CheckResult:
    table = dynamics.build_table(bound)
    for node in coords.iter_nodes(bound):
        value = table.count_node(node)
        if value != table.count(node.i, node.j):
            return CheckResult(
                "four-coordinate-form", False, f"2D/4D disagree at {node}"
            )
        if node.i == 0:
            continue
        up = (
            coords.Node(node.i - 1, node.j + 1, node.n, node.k - 1)
            if node.k >= 1 else None
        )
        down = (
            coords.Node(node.i - 1, node.j - 1, node.n - 1, node.k)
            if node.j >= 1 else None
        )
        total = (table.count_node(up) if up else 0) + (table.count_node(down) if down else 0)
        if value != total:
            return CheckResult(
                "four-coordinate-form", False, f"shifted recurrence fails at {node}"
            )
    return CheckResult("four-coordinate-form", True, f"all nodes with i <= {bound}")


def _check_bottom_rows(bound: int) -> CheckResult:
    table = dynamics.build_table(bound)
    for n in range(1, bound // 2 + 1):
        if table.count(2 * n, 0) != table.count(2 * n - 1, 1):
            return CheckResult("bottom-rows", False, f"rows disagree at n = {n}")
    return CheckResult("bottom-rows", True, f"n <= {bound // 2}")


def _check_column_tops(bound: int) -> CheckResult:
    table = dynamics.build_table(bound)
    for i in range(bound + 1):
        if table.count(i, i) != 1:
            return CheckResult("column-tops", False, f"count({i}, {i}) != 1")
    return CheckResult("column-tops", True, f"i <= {bound}")


def _check_oracle(bound: int) -> CheckResult:
    scan_bound = min(bound, paths.COUNT_SCAN_CAP)
    table = dynamics.build_table(scan_bound)
    positions = 0
    for node in coords.iter_nodes(scan_bound):
        positions += 1
        if paths.count_paths_to(node.i, node.j) != table.count(node.i, node.j):
            return CheckResult(
                "oracle-equivalence", False,
                f"brute force disagrees at ({node.i}, {node.j})",
            )
    return CheckResult("oracle-equivalence", True, f"{positions} positions, i <= {scan_bound}")


def _check_square_terms(bound: int) -> CheckResult:
    table = dynamics.build_table(bound)
    total = 0
    for i in range(bound + 1):
        for k in range(i // 2 + 1):
            total += 1
            if identities.square_term(i, k) != table.count(i, i - 2 * k):
                return CheckResult(
                    "square-terms", False,
                    f"closed form disagrees at (i={i}, k={k})",
                )
    return CheckResult("square-terms", True, f"{total} terms, i <= {bound}")


def _check_convolution(bound: int) -> CheckResult:
    table = dynamics.build_table(bound)
    cap = _catalan_cap(bound)
    for n in range(bound // 2 + 1):
        for j in range(n + 1):
            if identities.convolution(n, j) != table.count(2 * n - j, j):
                return CheckResult(
                    "convolution-matrix", False,
                    f"matrix entry disagrees at (n={n}, j={j})",
                )
        if identities.convolution(n, 0) != dynamics.catalan(n, cap=cap):
            return CheckResult(
                "convolution-matrix", False, f"first column wrong at n = {n}"
            )
    return CheckResult("convolution-matrix", True, f"n <= {bound // 2}")


def _check_sum_of_squares(bound: int) -> CheckResult:
    cap = _catalan_cap(bound)
    for v in range(bound + 1):
        total = sum(identities.square_term(v, k) ** 2 for k in range(v // 2 + 1))
        if total != dynamics.catalan(v, cap=cap):
            return CheckResult("sum-of-squares", False, f"identity fails at v = {v}")
    return CheckResult("sum-of-squares", True, f"v <= {bound}")


def _check_special_terms(bound: int) -> CheckResult:
    checked = 0
    for v in range(bound + 1):
        for k in {0, 1, 2, v // 2}:
            if 2 * k > v:
                continue
            checked += 1
            special = identities.square_term_special(v, k)
            general = identities.square_term(v, k)
            if special != general:
                return CheckResult(
                    "special-terms", False,
                    f"dedicated form {special} != general {general} at (v={v}, k={k})",
                )
    return CheckResult("special-terms", True, f"{checked} special terms, v <= {bound}")


def _check_decomposition(bound: int) -> CheckResult:
    limit = min(bound, 40)
    cap = _catalan_cap(limit)
    for v in range(limit + 1):
        dec = identities.decompose_catalan(v, cap=cap)
        if dec.terms[0] != 1:
            return CheckResult("decomposition", False, f"first term not 1 at v = {v}")
        if dec.terms[-1] != dynamics.catalan((v + 1) // 2, cap=cap):
            return CheckResult("decomposition", False, f"last term wrong at v = {v}")
        if dec.sum_of_squares != dynamics.catalan(v, cap=cap):
            return CheckResult("decomposition", False, f"squared sum wrong at v = {v}")
    return CheckResult("decomposition", True, f"v <= {limit}")


def _check_path_geometry(bound: int) -> CheckResult:
    rng = random.Random(GEOMETRY_SEED)
    size_cap = min(bound // 2, 12)
    for _ in range(GEOMETRY_WORDS):
        word = _random_word(rng, rng.randint(0, size_cap))
        path = paths.trace(word)  # Node construction re-validates the coordinate equations
        for step, before, after in zip(word.steps, path.nodes, path.nodes[1:]):
            if step == "U" and after.k != before.k:
                return CheckResult(
                    "path-geometry", False, f"upstep changed k in {word.steps}"
                )
            if step == "D" and after.n != before.n:
                return CheckResult(
                    "path-geometry", False, f"downstep changed n in {word.steps}"
                )
        flat = paths.project_path(path, _NK)
        if any(k > n for n, k in flat.points):
            return CheckResult(
                "path-geometry", False, f"nk projection crossed the diagonal: {word.steps}"
            )
    return CheckResult(
        "path-geometry", True,
        f"{GEOMETRY_WORDS} seeded words of semilength <= {size_cap}",
    )


def _check_enumeration(bound: int) -> CheckResult:
    limit = min(bound // 2, 10)
    for m in range(limit + 1):
        words = list(paths.enumerate_words(m))
        if len(words) != dynamics.catalan(m):
            return CheckResult(
                "enumeration-count", False,
                f"{len(words)} words of semilength {m}, expected catalan({m})",
            )
        parens = [paths.format_word(w) for w in words]
        if parens != sorted(parens) or len(set(parens)) != len(parens):
            return CheckResult(
                "enumeration-count", False, f"order or distinctness broken at m = {m}"
            )
    return CheckResult("enumeration-count", True, f"m <= {limit}")


def _check_serialization(bound: int) -> CheckResult:
    table = dynamics.build_table(min(bound, 32))
    if dynamics.table_from_csv(dynamics.table_to_csv(table)) != table:
        return CheckResult("table-serialization", False, "CSV round-trip changed the table")
    if dynamics.table_from_json(dynamics.table_to_json(table)) != table:
        return CheckResult("table-serialization", False, "JSON round-trip changed the table")
    return CheckResult("table-serialization", True, f"CSV and JSON, i <= {table.max_i}")


def _check_render_determinism(bound: int) -> CheckResult:
    spec = render.DiagramSpec(plane=_IJ, max_i=min(bound, 8), fmt="svg")
    first = render.emit(render.layout(spec))
    second = render.emit(render.layout(spec))
    if first != second:
        return CheckResult("render-determinism", False, "same spec emitted different bytes")
    table = dynamics.build_table(spec.max_i)
    diagram = render.layout(spec)
    for placed in diagram.nodes:
        if placed.label != str(table.count_node(placed.node)):
            return CheckResult(
                "render-determinism", False, f"label drift at {placed.node}"
            )
    return CheckResult("render-determinism", True, f"ij diagram, i <= {spec.max_i}")


def _check_kj_coverage(bound: int) -> CheckResult:
    limit = min(bound, 12)
    diagram = render.layout(render.DiagramSpec(plane=coords.Plane.parse("kj"), max_i=limit))
    placed = {(p.x, p.y): p.label for p in diagram.nodes}
    expected = {
        (k, j) for k in range(limit // 2 + 1) for j in range(limit - 2 * k + 1)
    }
    if set(placed) != expected:
        return CheckResult("kj-coverage", False, "kj quadrant has holes or extras")
    if any(int(label) <= 0 for label in placed.values()):
        return CheckResult("kj-coverage", False, "non-positive label in the kj quadrant")
    return CheckResult("kj-coverage", True, f"{len(placed)} lattice points, i <= {limit}")


_CHECKS: tuple[Callable[[int], CheckResult], ...] = (
    _check_node_equations,
    _check_reachability,
    _check_roundtrip,
    _check_planarity,
    _check_recurrence,
    _check_four_coordinate_form,
    _check_bottom_rows,
    _check_column_tops,
    _check_oracle,
    _check_square_terms,
    _check_convolution,
    _check_sum_of_squares,
    _check_special_terms,
    _check_decomposition,
    _check_path_geometry,
    _check_enumeration,
    _check_serialization,
    _check_render_determinism,
    _check_kj_coverage,
)


def run_checks(max_i: int = 32) -> list[CheckResult]:
    """Run every invariant check within the given position bound."""
    if max_i < 0:
        raise ValueError(f"max_i must be nonnegative, got {max_i}")
    return [check(max_i) for check in _CHECKS]
