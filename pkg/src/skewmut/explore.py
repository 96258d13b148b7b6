"""Bounded breadth-first exploration of mutation classes.

This is the brute-force oracle: it enumerates a mutation class up to a weight
bound, deduplicating by an exact canonical key over all vertex relabelings
(optionally also over global edge reversal), and checks the minimality and
uniqueness claims of the three-vertex theory against what it actually finds.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations
from typing import Dict, FrozenSet, IO, Optional, Tuple, Union

from .diagram import Diagram
from .radical import LESS, RadicalSum, compare_radical_sums
from .triple import CanonicalForm, RadicalTriple

DEFAULT_NODE_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """The visited-set size cap was hit before the frontier emptied."""


class FormatError(ValueError):
    """Malformed exploration file."""


class Verdict(Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


def iso_key(g: Diagram, modulo_reversal: bool = False) -> str:
    """Canonical hex key of a diagram up to vertex relabeling.

    Takes the lexicographically smallest edge list over all vertex
    permutations (and over global edge reversal when requested).  Exact and
    cheap for the small vertex counts explored here.
    """
    best = None
    edges = g.edges()
    for perm in permutations(range(g.n)):
        relabeled = tuple(sorted((perm[i], perm[j], w) for i, j, w in edges))
        if best is None or relabeled < best:
            best = relabeled
        if modulo_reversal:
            reversed_ = tuple(sorted((perm[j], perm[i], w) for i, j, w in edges))
            if reversed_ < best:
                best = reversed_
    body = ";".join(f"{i},{j},{w}" for i, j, w in best)
    return f"{g.n}|{body}".encode("ascii").hex()


def s_of_diagram(g: Diagram) -> RadicalSum:
    return RadicalSum(w for _, _, w in g.edges())


@dataclass
class ClassExploration:
    """Record of one bounded exploration.

    ``visited`` maps each canonical key to the shortest mutation path (a
    vertex sequence) that reaches it from the seed; replaying a path
    reproduces the stored diagram exactly.  ``truncated`` is set when some
    neighbor exceeded the weight bound and was pruned, in which case
    ``visited`` may be a proper subset of the class.  The concrete diagrams,
    the pruning watermark and the key convention are runtime conveniences and
    do not take part in structural equality.
    """

    seed: Diagram
    weight_bound: int
    visited: Dict[str, Tuple[int, ...]]
    truncated: bool
    minima: FrozenSet[CanonicalForm]
    frontier_exhausted: bool = True
    modulo_reversal: bool = field(default=False, compare=False)
    diagrams: Dict[str, Diagram] = field(default_factory=dict, compare=False, repr=False)
    min_pruned_s: Optional[RadicalSum] = field(default=None, compare=False, repr=False)


def _local_minima_forms(diagrams) -> FrozenSet[CanonicalForm]:
    forms = set()
    for g in diagrams:
        if g.n == 3 and g.is_connected():
            t = RadicalTriple.from_diagram(g)
            if t.is_local_minimum():
                forms.add(t.canonical_form())
    return frozenset(forms)


def _raises_above(current: Diagram, neighbor: Diagram, bound: int) -> bool:
    """True when the mutation pushed some pair weight above the bound.

    Weights the step merely inherited are grandfathered, whatever their size:
    only a strict increase past the bound prunes.  In particular a degenerate
    bound of 0 keeps exactly the weight-preserving moves (reflections and
    equal-weight rotations), and strictly decreasing moves are always kept,
    so the class minimum can never be pruned away.
    """
    for i, j, w in neighbor.edges():
        if w > bound:
            old = current.between(i, j)
            if old is None or old[2] < w:
                return True
    return False


def explore(
    seed: Diagram,
    weight_bound: int,
    modulo_reversal: bool = False,
    max_nodes: int = DEFAULT_NODE_BUDGET,
) -> ClassExploration:
    """BFS over mutations at every vertex, pruned at a weight bound.

    Neighbors whose mutation raises an edge weight above the bound are pruned
    and flag the record as truncated; for three-vertex diagrams the smallest
    s value seen among pruned neighbors is kept so that verification can
    tell an honest confirmation from a lucky one.
    """
    if weight_bound < 0:
        raise ValueError("weight bound must be nonnegative")
    visited: Dict[str, Tuple[int, ...]] = {}
    diagrams: Dict[str, Diagram] = {}
    truncated = False
    min_pruned_s: Optional[RadicalSum] = None

    seed_key = iso_key(seed, modulo_reversal)
    visited[seed_key] = ()
    diagrams[seed_key] = seed
    queue = deque([(seed, ())])
    while queue:
        current, path = queue.popleft()
        for k in range(current.n):
            neighbor = current.mutate(k)
            if _raises_above(current, neighbor, weight_bound):
                truncated = True
                if neighbor.n == 3:
                    s = s_of_diagram(neighbor)
                    if min_pruned_s is None or compare_radical_sums(s, min_pruned_s) == LESS:
                        min_pruned_s = s
                continue
            key = iso_key(neighbor, modulo_reversal)
            if key in visited:
                continue
            if len(visited) >= max_nodes:
                raise BudgetExceeded(f"exploration exceeded {max_nodes} nodes")
            new_path = path + (k,)
            visited[key] = new_path
            diagrams[key] = neighbor
            queue.append((neighbor, new_path))

    return ClassExploration(
        seed=seed,
        weight_bound=weight_bound,
        visited=visited,
        truncated=truncated,
        minima=_local_minima_forms(diagrams.values()),
        frontier_exhausted=True,
        modulo_reversal=modulo_reversal,
        diagrams=diagrams,
        min_pruned_s=min_pruned_s,
    )


def _reflection_orbit_keys(g: Diagram) -> FrozenSet[str]:
    """Relabeling keys of every diagram reachable by source/sink reflections."""
    start = iso_key(g)
    seen = {start: g}
    queue = deque([g])
    while queue:
        current = queue.popleft()
        for k in current.sources_and_sinks():
            neighbor = current.mutate(k)
            key = iso_key(neighbor)
            if key not in seen:
                seen[key] = neighbor
                queue.append(neighbor)
    return frozenset(seen)


def verify_unique_minimum(
    seed: Diagram,
    weight_bound: int,
    max_nodes: int = DEFAULT_NODE_BUDGET,
) -> Verdict:
    """Check minimality and uniqueness claims against a bounded enumeration.

    Finds every s-minimal diagram among the visited class members and demands
    that (a) they all carry the canonical form that the descent from the seed
    reports, and (b) they are pairwise equivalent under the allowed
    symmetries: relabeling plus global reversal when cyclic, relabeling plus
    source/sink reflections when acyclic.  If pruning happened below twice
    the minimal s value the enumeration cannot vouch for the claim and the
    verdict is inconclusive rather than confirmed or refuted.
    """
    if seed.n != 3:
        raise ValueError("verification covers three-vertex diagrams")
    expl = explore(seed, weight_bound, modulo_reversal=False, max_nodes=max_nodes)

    minimal: list[Diagram] = []
    min_s: Optional[RadicalSum] = None
    for g in expl.diagrams.values():
        s = s_of_diagram(g)
        if min_s is None:
            minimal, min_s = [g], s
            continue
        cmp = compare_radical_sums(s, min_s)
        if cmp == LESS:
            minimal, min_s = [g], s
        elif cmp == 0:
            minimal.append(g)

    dangerous_pruning = (
        expl.truncated
        and expl.min_pruned_s is not None
        and compare_radical_sums(expl.min_pruned_s, min_s.scaled(2)) == LESS
    )
    if dangerous_pruning:
        return Verdict.INCONCLUSIVE

    descent_form, _ = RadicalTriple.from_diagram(seed).descend_to_minimum()
    forms = {RadicalTriple.from_diagram(g).canonical_form() for g in minimal}
    if forms != {descent_form}:
        return Verdict.REFUTED

    if descent_form.cyclic:
        keys = {iso_key(g, modulo_reversal=True) for g in minimal}
        if len(keys) != 1:
            return Verdict.REFUTED
    else:
        orbit = _reflection_orbit_keys(minimal[0])
        if any(iso_key(g) not in orbit for g in minimal[1:]):
            return Verdict.REFUTED
    return Verdict.CONFIRMED


# -- persistence -----------------------------------------------------------
#
# Line-oriented format:
#   seed <n> <m> <src dst weight>*m      (the diagram, flattened)
#   bound <int>
#   truncated <0|1>
#   <iso-key-hex> <path vertex indices>  (one line per visited node)


def exploration_to_text(expl: ClassExploration) -> str:
    seed_flat = [str(expl.seed.n), str(len(expl.seed.edges()))]
    for i, j, w in expl.seed.edges():
        seed_flat.extend((str(i), str(j), str(w)))
    lines = [
        "seed " + " ".join(seed_flat),
        f"bound {expl.weight_bound}",
        f"truncated {1 if expl.truncated else 0}",
    ]
    for key, path in expl.visited.items():
        lines.append((key + " " + " ".join(str(k) for k in path)).rstrip())
    return "\n".join(lines) + "\n"


def exploration_from_text(text: str) -> ClassExploration:
    if text and not text.endswith("\n"):
        raise FormatError("exploration text ends mid-line")
    lines = text.splitlines()
    if len(lines) < 4:
        raise FormatError("exploration text is missing its header or nodes")
    if not lines[0].startswith("seed "):
        raise FormatError("first line must carry the seed diagram")
    seed_fields = lines[0].split()[1:]
    try:
        n, m = int(seed_fields[0]), int(seed_fields[1])
        if len(seed_fields) != 2 + 3 * m:
            raise FormatError(f"seed line promises {m} edges but carries {len(seed_fields) - 2} fields")
        edges = [
            (int(seed_fields[2 + 3 * t]), int(seed_fields[3 + 3 * t]), int(seed_fields[4 + 3 * t]))
            for t in range(m)
        ]
        seed = Diagram(n, edges)
    except FormatError:
        raise
    except (ValueError, IndexError) as exc:
        raise FormatError(f"malformed seed line: {lines[0]!r}") from exc
    if not lines[1].startswith("bound "):
        raise FormatError("second line must carry the weight bound")
    try:
        bound = int(lines[1].split()[1])
    except (ValueError, IndexError) as exc:
        raise FormatError(f"malformed bound line: {lines[1]!r}") from exc
    if lines[2] not in ("truncated 0", "truncated 1"):
        raise FormatError(f"malformed truncated line: {lines[2]!r}")
    truncated = lines[2].endswith("1")

    visited: Dict[str, Tuple[int, ...]] = {}
    diagrams: Dict[str, Diagram] = {}
    for line in lines[3:]:
        parts = line.split()
        if not parts:
            raise FormatError("blank node line")
        key = parts[0]
        try:
            bytes.fromhex(key)
            path = tuple(int(x) for x in parts[1:])
        except ValueError as exc:
            raise FormatError(f"malformed node line: {line!r}") from exc
        if key in visited:
            raise FormatError(f"duplicate node key {key}")
        current = seed
        for k in path:
            if not 0 <= k < seed.n:
                raise FormatError(f"path vertex {k} out of range in {line!r}")
            current = current.mutate(k)
        visited[key] = path
        diagrams[key] = current

    seed_plain = iso_key(seed, modulo_reversal=False)
    seed_reversal = iso_key(seed, modulo_reversal=True)
    if seed_plain not in visited and seed_reversal not in visited:
        raise FormatError("exploration text does not contain its own seed")
    for flag in (False, True):
        if all(iso_key(g, flag) == key for key, g in diagrams.items()):
            modulo_reversal = flag
            break
    else:
        raise FormatError("stored keys do not match any key convention")
    if not truncated:
        # a complete record must be closed under mutation
        for g in diagrams.values():
            for k in range(g.n):
                if iso_key(g.mutate(k), modulo_reversal) not in visited:
                    raise FormatError("complete exploration is not closed under mutation")

    return ClassExploration(
        seed=seed,
        weight_bound=bound,
        visited=visited,
        truncated=truncated,
        minima=_local_minima_forms(diagrams.values()),
        frontier_exhausted=True,
        modulo_reversal=modulo_reversal,
        diagrams=diagrams,
        min_pruned_s=None,
    )


def save_exploration(expl: ClassExploration, sink: Union[str, IO[str]]) -> None:
    text = exploration_to_text(expl)
    if isinstance(sink, str):
        with open(sink, "w", encoding="ascii") as f:
            f.write(text)
    else:
        sink.write(text)


def load_exploration(source: Union[str, IO[str]]) -> ClassExploration:
    if isinstance(source, str):
        with open(source, "r", encoding="ascii") as f:
            text = f.read()
    else:
        text = source.read()
    return exploration_from_text(text)
