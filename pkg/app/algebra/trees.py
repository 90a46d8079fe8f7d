# File: app/algebra/trees.py
# Path: hopfbench/app/algebra/trees.py

"""
Rooted trees and forests, unordered (canonical) and planar.

Sizes here are total vertex counts. The Grossman-Larson algebra grades by
non-root vertices; hopf_trees converts at its boundary.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial
from typing import Dict, List, Sequence, Tuple, Union

from app.core.config import settings
from app.core.exceptions import InvalidArgumentError, ParseError

logger = logging.getLogger(__name__)

Path = Tuple[int, ...]

@dataclass(frozen=True)
class RootedTree:
    """Unordered rooted tree; children are kept sorted so isomorphic trees are equal"""

    children: Tuple["RootedTree", ...] = ()

    def __post_init__(self):
        kids = tuple(self.children)
        for kid in kids:
            if not isinstance(kid, RootedTree):
                raise InvalidArgumentError(f"children of a RootedTree must be RootedTrees, got {kid!r}")
        object.__setattr__(self, "children", tuple(sorted(kids, key=lambda kid: kid.sort_key)))

    @cached_property
    def num_vertices(self) -> int:
        return 1 + sum(kid.num_vertices for kid in self.children)

    @property
    def degree(self) -> int:
        """|t|, the number of non-root vertices"""
        return self.num_vertices - 1

    @property
    def weight(self) -> int:
        return self.degree

    @cached_property
    def sort_key(self) -> tuple:
        return (self.num_vertices, tuple(kid.sort_key for kid in self.children))

    @cached_property
    def _hash(self) -> int:
        return hash(("RootedTree", self.children))

    def __hash__(self) -> int:
        return self._hash

    def branches(self) -> "Forest":
        return Forest(self.children)

    def __str__(self) -> str:
        return "[" + "".join(str(kid) for kid in self.children) + "]"

    def __repr__(self) -> str:
        return f"RootedTree({self})"

@dataclass(frozen=True)
class Forest:
    """Multiset of rooted trees, canonically sorted; the empty forest is the unit of H_K"""

    trees: Tuple[RootedTree, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "trees", tuple(sorted(self.trees, key=lambda tree: tree.sort_key)))

    @cached_property
    def num_vertices(self) -> int:
        return sum(tree.num_vertices for tree in self.trees)

    @property
    def weight(self) -> int:
        return self.num_vertices

    @cached_property
    def sort_key(self) -> tuple:
        return (self.num_vertices, tuple(tree.sort_key for tree in self.trees))

    @cached_property
    def _hash(self) -> int:
        return hash(("Forest", self.trees))

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "Forest") -> "Forest":
        if not isinstance(other, Forest):
            return NotImplemented
        return Forest(self.trees + other.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def __str__(self) -> str:
        return "".join(str(tree) for tree in self.trees)

    def __repr__(self) -> str:
        return f"Forest({self})"

@dataclass(frozen=True)
class PlanarTree:
    """Rooted tree whose children are ordered"""

    children: Tuple["PlanarTree", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    @cached_property
    def num_vertices(self) -> int:
        return 1 + sum(kid.num_vertices for kid in self.children)

    @property
    def degree(self) -> int:
        return self.num_vertices - 1

    @cached_property
    def sort_key(self) -> tuple:
        return (self.num_vertices, tuple(kid.sort_key for kid in self.children))

    def __str__(self) -> str:
        return "[" + "".join(str(kid) for kid in self.children) + "]"

    def __repr__(self) -> str:
        return f"PlanarTree({self})"

@dataclass(frozen=True)
class PlanarForest:
    """Ordered sequence of planar trees; the product of H_F is concatenation"""

    trees: Tuple[PlanarTree, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "trees", tuple(self.trees))

    @cached_property
    def num_vertices(self) -> int:
        return sum(tree.num_vertices for tree in self.trees)

    @property
    def weight(self) -> int:
        return self.num_vertices

    @cached_property
    def sort_key(self) -> tuple:
        return (self.num_vertices, tuple(tree.sort_key for tree in self.trees))

    def __add__(self, other: "PlanarForest") -> "PlanarForest":
        if not isinstance(other, PlanarForest):
            return NotImplemented
        return PlanarForest(self.trees + other.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def __str__(self) -> str:
        return "".join(str(tree) for tree in self.trees)

    def __repr__(self) -> str:
        return f"PlanarForest({self})"

# --- text grammar -------------------------------------------------------------

def _parse_trees(text: str, planar: bool) -> List[Union[RootedTree, PlanarTree]]:
    build = PlanarTree if planar else RootedTree
    stack: List[List] = [[]]
    for index, char in enumerate(text):
        if char.isspace():
            continue
        if char == "[":
            stack.append([])
        elif char == "]":
            if len(stack) == 1:
                raise ParseError("unmatched ']'", text, index)
            kids = stack.pop()
            stack[-1].append(build(tuple(kids)))
        else:
            raise ParseError(f"unexpected character {char!r} in tree", text, index)
    if len(stack) != 1:
        raise ParseError("unclosed '['", text, len(text))
    return stack[0]

def parse_tree(text: str, planar: bool = False) -> Union[RootedTree, PlanarTree]:
    """Nested brackets, '[]' is a single vertex; unordered input is canonicalized"""
    trees = _parse_trees(text, planar)
    if len(trees) != 1:
        raise ParseError(f"expected exactly one tree, found {len(trees)}", text, 0)
    return trees[0]

def parse_forest(text: str, planar: bool = False) -> Union[Forest, PlanarForest]:
    trees = tuple(_parse_trees(text, planar))
    return PlanarForest(trees) if planar else Forest(trees)

# --- constructions ------------------------------------------------------------

def b_plus(forest: Union[Forest, PlanarForest]) -> Union[RootedTree, PlanarTree]:
    """Graft the forest's roots onto a new root vertex"""
    if isinstance(forest, PlanarForest):
        return PlanarTree(forest.trees)
    return RootedTree(forest.trees)

def planar_to_rooted(item: Union[PlanarTree, PlanarForest]) -> Union[RootedTree, Forest]:
    if isinstance(item, PlanarForest):
        return Forest(tuple(planar_to_rooted(tree) for tree in item.trees))
    return RootedTree(tuple(planar_to_rooted(kid) for kid in item.children))

def ladder(i: int) -> RootedTree:
    if i < 1:
        raise InvalidArgumentError(f"ladders have at least one vertex, got {i}")
    tree = RootedTree()
    for _ in range(i - 1):
        tree = RootedTree((tree,))
    return tree

def planar_ladder(i: int) -> PlanarTree:
    if i < 1:
        raise InvalidArgumentError(f"ladders have at least one vertex, got {i}")
    tree = PlanarTree()
    for _ in range(i - 1):
        tree = PlanarTree((tree,))
    return tree

def corolla(n: int) -> RootedTree:
    """n leaves joined directly to the root"""
    if n < 0:
        raise InvalidArgumentError(f"corolla needs n >= 0, got {n}")
    return RootedTree((RootedTree(),) * n)

SINGLE_VERTEX = RootedTree()

# --- enumeration ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _forests(num_vertices: int) -> Tuple[Forest, ...]:
    if num_vertices == 0:
        return (Forest(),)
    pool = [tree for size in range(1, num_vertices + 1) for tree in _trees(size)]
    result: List[Forest] = []

    def extend(start: int, remaining: int, chosen: List[RootedTree]) -> None:
        if remaining == 0:
            result.append(Forest(tuple(chosen)))
            return
        for index in range(start, len(pool)):
            tree = pool[index]
            if tree.num_vertices <= remaining:
                chosen.append(tree)
                extend(index, remaining - tree.num_vertices, chosen)
                chosen.pop()

    extend(0, num_vertices, [])
    return tuple(sorted(result, key=lambda forest: forest.sort_key))

@lru_cache(maxsize=None)
def _trees(num_vertices: int) -> Tuple[RootedTree, ...]:
    trees = tuple(sorted((RootedTree(forest.trees) for forest in _forests(num_vertices - 1)), key=lambda t: t.sort_key))
    logger.debug(f"enumerated {len(trees)} rooted trees with {num_vertices} vertices")
    return trees

def enumerate_trees(n: int) -> List[RootedTree]:
    """All canonical rooted trees with exactly n vertices"""
    if not 1 <= n <= settings.MAX_TREE_VERTICES:
        raise InvalidArgumentError(f"tree size must be in 1..{settings.MAX_TREE_VERTICES}, got {n}")
    return list(_trees(n))

def enumerate_forests(n: int) -> List[Forest]:
    """All forests with exactly n vertices in total (the empty forest for n = 0)"""
    if not 0 <= n < settings.MAX_TREE_VERTICES:
        raise InvalidArgumentError(f"forest size must be in 0..{settings.MAX_TREE_VERTICES - 1}, got {n}")
    return list(_forests(n))

def enumerate_planar_forests(n: int) -> List[PlanarForest]:
    """All planar forests with n vertices; used to range over the H_F basis"""
    if n < 0:
        raise InvalidArgumentError(f"forest size must be >= 0, got {n}")
    return list(_planar_forests(n))

@lru_cache(maxsize=None)
def _planar_forests(num_vertices: int) -> Tuple[PlanarForest, ...]:
    if num_vertices == 0:
        return (PlanarForest(),)
    result = []
    for first in range(1, num_vertices + 1):
        for tree in _planar_trees(first):
            for rest in _planar_forests(num_vertices - first):
                result.append(PlanarForest((tree,) + rest.trees))
    return tuple(result)

@lru_cache(maxsize=None)
def _planar_trees(num_vertices: int) -> Tuple[PlanarTree, ...]:
    return tuple(PlanarTree(forest.trees) for forest in _planar_forests(num_vertices - 1))

# --- invariants -----------------------------------------------------------------

@lru_cache(maxsize=None)
def symm_order(tree: RootedTree) -> int:
    """|Symm(t)|: product over vertices of the factorials of repeated-child multiplicities"""
    order = 1
    for kid, mult in Counter(tree.children).items():
        order *= factorial(mult) * symm_order(kid) ** mult
    return order

def forest_symm_order(forest: Forest) -> int:
    return symm_order(RootedTree(forest.trees))

@lru_cache(maxsize=None)
def tree_factorial(tree: RootedTree) -> int:
    """Product over vertices of the size of the subtree rooted there"""
    value = tree.num_vertices
    for kid in tree.children:
        value *= tree_factorial(kid)
    return value

def vertex_paths(tree: RootedTree) -> List[Path]:
    """Every vertex as the child-index path from the root, in preorder"""
    paths: List[Path] = []

    def walk(node: RootedTree, path: Path) -> None:
        paths.append(path)
        for index, kid in enumerate(node.children):
            walk(kid, path + (index,))

    walk(tree, ())
    return paths

def graft(tree: RootedTree, attachments: Dict[Path, Sequence[RootedTree]], path: Path = ()) -> RootedTree:
    """Attach each listed subtree as a new child of the vertex at its path"""
    kids = [graft(kid, attachments, path + (index,)) for index, kid in enumerate(tree.children)]
    kids.extend(attachments.get(path, ()))
    return RootedTree(tuple(kids))
