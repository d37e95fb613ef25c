from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Deque, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

from lambdadl.dl.axioms import ConceptAssertion, DataAssertion, ObjectEquivalence, RoleAssertion, Subsumption
from lambdadl.dl.concepts import (
    And,
    Atomic,
    AtomicRole,
    Bottom,
    ConceptExpr,
    Datatype,
    Exists,
    Forall,
    Inverse,
    Nominal,
    Not,
    Or,
    PrimTag,
    RoleExpr,
    Top,
    complement,
    negation_normal_form,
    role_name,
)
from lambdadl.dl.kb import KnowledgeBase
from lambdadl.reasoner.budget import ResourceBudget

NOMINAL = "nominal"
BLOCKABLE = "blockable"
LITERAL = "literal"


@dataclass
class Node:
    id: int
    kind: str
    label: Set[ConceptExpr] = field(default_factory=set)
    parent: Optional[int] = None
    value: Optional[Union[str, bool]] = None

    def copy(self) -> "Node":
        return Node(self.id, self.kind, set(self.label), self.parent, self.value)


@dataclass(frozen=True)
class TBoxIndex:
    """
    Preprocessed TBox.
    - unfold: atomic left-hand sides, expanded lazily when A enters a label
      (`A & C sub D` and `exists R.A sub D` are absorbed into A)
    - domains: `exists R.Top sub C`, fired when a node gains an R-neighbour
    - nominal_facts: `{a} sub C`, asserted on a's node
    - universal: every other inclusion, internalised as NNF(!C | D)
    """
    unfold: Dict[str, Tuple[ConceptExpr, ...]]
    domains: Dict[RoleExpr, Tuple[ConceptExpr, ...]]
    nominal_facts: Dict[str, Tuple[ConceptExpr, ...]]
    universal: Tuple[ConceptExpr, ...]
    data_roles: FrozenSet[str]

    @staticmethod
    def build(kb: KnowledgeBase) -> "TBoxIndex":
        unfold: Dict[str, List[ConceptExpr]] = defaultdict(list)
        domains: Dict[RoleExpr, List[ConceptExpr]] = defaultdict(list)
        facts: Dict[str, List[ConceptExpr]] = defaultdict(list)
        universal: List[ConceptExpr] = []
        data_roles = kb.signature.data_roles

        pending = deque((ax.lhs, ax.rhs) for ax in kb.tbox if isinstance(ax, Subsumption))
        while pending:
            lhs, rhs = pending.popleft()
            if isinstance(lhs, Or):
                pending.append((lhs.left, rhs))
                pending.append((lhs.right, rhs))
                continue
            rhs_n = negation_normal_form(rhs)
            if isinstance(rhs_n, Top) or isinstance(lhs, Bottom):
                continue
            if isinstance(lhs, Atomic):
                unfold[lhs.name].append(rhs_n)
            elif isinstance(lhs, Nominal):
                facts[lhs.object].append(rhs_n)
            elif isinstance(lhs, Exists) and isinstance(lhs.filler, Top):
                domains[lhs.role].append(rhs_n)
            elif isinstance(lhs, Exists) and isinstance(lhs.filler, Atomic) and role_name(lhs.role) not in data_roles:
                # exists R.A sub D  ==  A sub forall R^-.D
                unfold[lhs.filler.name].append(Forall(_flip(lhs.role), rhs_n))
            elif isinstance(lhs, And) and isinstance(lhs.left, Atomic):
                unfold[lhs.left.name].append(Or(complement(lhs.right), rhs_n))
            elif isinstance(lhs, And) and isinstance(lhs.right, Atomic):
                unfold[lhs.right.name].append(Or(complement(lhs.left), rhs_n))
            elif isinstance(lhs, Top):
                universal.append(rhs_n)
            else:
                universal.append(Or(complement(lhs), rhs_n))

        return TBoxIndex(
            unfold={k: tuple(v) for k, v in unfold.items()},
            domains={k: tuple(v) for k, v in domains.items()},
            nominal_facts={k: tuple(v) for k, v in facts.items()},
            universal=tuple(dict.fromkeys(universal)),
            data_roles=kb.signature.data_roles,
        )


def _flip(r: RoleExpr) -> RoleExpr:
    return r.inner if isinstance(r, Inverse) else Inverse(r)


def _disjuncts(c: ConceptExpr) -> List[ConceptExpr]:
    if isinstance(c, Or):
        return _disjuncts(c.left) + _disjuncts(c.right)
    return [c]


Candidate = Tuple[int, List[ConceptExpr]]


class CompletionGraph:
    """
    Completion graph for one branch of the search. Edges carry atomic role
    names; an inverse role is read off the incoming edges.
    """

    def __init__(self, index: TBoxIndex, budget: ResourceBudget) -> None:
        self.index = index
        self.budget = budget
        self.nodes: Dict[int, Node] = {}
        self.out: Dict[int, Dict[int, Set[str]]] = {}
        self.inn: Dict[int, Dict[int, Set[str]]] = {}
        self.alias: Dict[int, int] = {}
        self.named: Dict[str, int] = {}
        self.next_id = 0
        self.queue: Deque[Tuple[int, ConceptExpr]] = deque()
        self.clash: Optional[str] = None

    def copy(self) -> "CompletionGraph":
        g = CompletionGraph(self.index, self.budget)
        g.nodes = {i: n.copy() for i, n in self.nodes.items()}
        g.out = {i: {j: set(r) for j, r in m.items()} for i, m in self.out.items()}
        g.inn = {i: {j: set(r) for j, r in m.items()} for i, m in self.inn.items()}
        g.alias = dict(self.alias)
        g.named = dict(self.named)
        g.next_id = self.next_id
        g.queue = deque(self.queue)
        g.clash = self.clash
        return g

    # -------------------------
    # Structure
    # -------------------------

    def find(self, i: int) -> int:
        while i in self.alias:
            i = self.alias[i]
        return i

    def node_of(self, obj: str) -> int:
        return self.find(self.named[obj])

    def new_node(
        self,
        kind: str,
        label: Iterable[ConceptExpr] = (),
        parent: Optional[int] = None,
        value: Optional[Union[str, bool]] = None,
    ) -> int:
        self.budget.charge_node()
        i = self.next_id
        self.next_id += 1
        self.nodes[i] = Node(i, kind, set(), parent, value)
        self.out[i] = {}
        self.inn[i] = {}
        if kind != LITERAL:
            for c in self.index.universal:
                self.add(i, c)
        for c in label:
            self.add(i, c)
        return i

    def add_named(self, obj: str) -> int:
        if obj not in self.named:
            self.named[obj] = self.new_node(NOMINAL, [Nominal(obj)])
        return self.named[obj]

    def add(self, i: int, c: ConceptExpr) -> None:
        n = self.nodes[i]
        if c in n.label:
            return
        n.label.add(c)
        self.queue.append((i, c))

    def add_edge(self, x: int, y: int, name: str) -> None:
        roles = self.out[x].setdefault(y, set())
        if name in roles:
            return
        roles.add(name)
        self.inn[y].setdefault(x, set()).add(name)

        fwd = AtomicRole(name)
        bwd = Inverse(fwd)
        nx, ny = self.nodes[x], self.nodes[y]
        for c in list(nx.label):
            if isinstance(c, Forall) and c.role == fwd:
                self.add(y, c.filler)
        for c in list(ny.label):
            if isinstance(c, Forall) and c.role == bwd:
                self.add(x, c.filler)
        if nx.kind != LITERAL:
            for c in self.index.domains.get(fwd, ()):
                self.add(x, c)
        if ny.kind != LITERAL:
            for c in self.index.domains.get(bwd, ()):
                self.add(y, c)

    def relate(self, x: int, y: int, r: RoleExpr) -> None:
        if isinstance(r, Inverse):
            self.add_edge(y, x, role_name(r))
        else:
            self.add_edge(x, y, r.name)

    def neighbours(self, x: int, r: RoleExpr) -> List[int]:
        name = role_name(r)
        edges = self.inn[x] if isinstance(r, Inverse) else self.out[x]
        return [y for y, roles in edges.items() if name in roles]

    # -------------------------
    # Deterministic rules
    # -------------------------

    def saturate(self) -> Tuple[bool, Optional[Candidate]]:
        """
        Apply deterministic rules to fixpoint. Returns (clash-free, first
        disjunction left to branch on).
        """
        steps = 0
        while True:
            while self.queue:
                i, c = self.queue.popleft()
                if i not in self.nodes:
                    continue
                self._apply(i, c)
                if self.clash:
                    return False, None
                steps += 1
                if steps % 512 == 0:
                    self.budget.check()
            progressed, candidate = self._propagate_disjunctions()
            if self.clash:
                return False, None
            if not progressed:
                return True, candidate

    def _apply(self, i: int, c: ConceptExpr) -> None:
        n = self.nodes[i]
        label = n.label
        if isinstance(c, Bottom):
            self.clash = f"node {i}: Bot"
        elif isinstance(c, (Atomic, Nominal, Datatype)):
            if Not(c) in label:
                self.clash = f"node {i}: {c} and its complement"
            elif isinstance(c, Atomic):
                for d in self.index.unfold.get(c.name, ()):
                    self.add(i, d)
            elif isinstance(c, Nominal):
                self._merge_nominal(i, c.object)
            elif n.kind != LITERAL:
                self.clash = f"node {i}: object carries a datatype"
            elif any(isinstance(d, Datatype) and d != c for d in label):
                self.clash = f"node {i}: two datatypes"
        elif isinstance(c, Not):
            if c.operand in label:
                self.clash = f"node {i}: {c.operand} and its complement"
            elif (
                isinstance(c.operand, Datatype)
                and n.kind == LITERAL
                and all(Not(Datatype(t)) in label for t in PrimTag)
            ):
                self.clash = f"node {i}: literal outside every datatype"
        elif isinstance(c, And):
            self.add(i, c.left)
            self.add(i, c.right)
        elif isinstance(c, Forall):
            for y in self.neighbours(i, c.role):
                self.add(y, c.filler)

    def _refuted(self, n: Node, d: ConceptExpr) -> bool:
        if isinstance(d, Bottom):
            return True
        if isinstance(d, (Atomic, Nominal, Datatype)):
            if isinstance(d, Datatype) and n.kind != LITERAL:
                return True
            return Not(d) in n.label
        if isinstance(d, Not):
            return d.operand in n.label
        return False

    def _propagate_disjunctions(self) -> Tuple[bool, Optional[Candidate]]:
        progressed = False
        candidate: Optional[Candidate] = None
        for x in sorted(self.nodes):
            n = self.nodes[x]
            for c in list(n.label):
                if not isinstance(c, Or):
                    continue
                ds = list(dict.fromkeys(_disjuncts(c)))
                if any(d in n.label for d in ds):
                    continue
                live = [d for d in ds if not self._refuted(n, d)]
                if not live:
                    self.clash = f"node {x}: every disjunct refuted"
                    return progressed, None
                if len(live) == 1:
                    self.add(x, live[0])
                    progressed = True
                elif candidate is None:
                    candidate = (x, live)
        return progressed, candidate

    # -------------------------
    # Nominals and merging
    # -------------------------

    def _merge_nominal(self, i: int, obj: str) -> None:
        target = self.node_of(obj) if obj in self.named else self.find(self.add_named(obj))
        if target == i:
            return
        if self.nodes[i].kind == NOMINAL:
            self._merge(max(i, target), min(i, target))
        else:
            self._merge(i, target)

    def _merge(self, x: int, y: int) -> None:
        nx = self.nodes[x]
        if nx.kind == BLOCKABLE:
            self._prune_below(x)
        else:
            for n in self.nodes.values():
                if n.parent == x:
                    n.parent = y

        out_x = self.out.pop(x)
        inn_x = self.inn.pop(x)
        del self.nodes[x]
        self.alias[x] = y
        for z in out_x:
            if z != x:
                self.inn[z].pop(x, None)
        for z in inn_x:
            if z != x:
                self.out[z].pop(x, None)

        for c in nx.label:
            self.add(y, c)
        for z, roles in out_x.items():
            for name in roles:
                self.add_edge(y, y if z == x else z, name)
        for z, roles in inn_x.items():
            for name in roles:
                self.add_edge(y if z == x else z, y, name)

    def _prune_below(self, x: int) -> None:
        doomed: Set[int] = set()
        frontier = [x]
        while frontier:
            p = frontier.pop()
            for n in self.nodes.values():
                if n.parent == p and n.id not in doomed:
                    doomed.add(n.id)
                    frontier.append(n.id)
        for d in doomed:
            for z in self.out.pop(d):
                if z in self.inn:
                    self.inn[z].pop(d, None)
            for z in self.inn.pop(d):
                if z in self.out:
                    self.out[z].pop(d, None)
            del self.nodes[d]

    # -------------------------
    # Blocking and generation
    # -------------------------

    def _edge_signature(self, p: int, x: int) -> Tuple[FrozenSet[str], FrozenSet[str]]:
        return frozenset(self.out[p].get(x, ())), frozenset(self.out[x].get(p, ()))

    def blocked(self) -> Set[int]:
        """
        Pairwise anywhere blocking: x is blocked by an earlier unblocked y
        when x, y and their parents carry equal labels and the parent edges
        agree. Descendants of a blocked node are blocked too.
        """
        status: Dict[int, bool] = {}
        blockers: List[int] = []
        out: Set[int] = set()
        for x in sorted(i for i, n in self.nodes.items() if n.kind == BLOCKABLE):
            n = self.nodes[x]
            p = n.parent
            if p is None:
                status[x] = False
                continue
            if status.get(p, False):
                status[x] = True
                out.add(x)
                continue
            sig = self._edge_signature(p, x)
            p_label = self.nodes[p].label
            hit = False
            for y in blockers:
                ny = self.nodes[y]
                q = ny.parent
                if (
                    ny.label == n.label
                    and self.nodes[q].label == p_label  # type: ignore[index]
                    and self._edge_signature(q, y) == sig  # type: ignore[arg-type]
                ):
                    hit = True
                    break
            status[x] = hit
            if hit:
                out.add(x)
            else:
                blockers.append(x)
        return out

    def generate(self) -> bool:
        blocked = self.blocked()
        made = False
        for x in sorted(self.nodes):
            n = self.nodes[x]
            if n.kind == LITERAL or x in blocked:
                continue
            for c in list(n.label):
                if not isinstance(c, Exists):
                    continue
                if any(c.filler in self.nodes[y].label for y in self.neighbours(x, c.role)):
                    continue
                kind = LITERAL if role_name(c.role) in self.index.data_roles else BLOCKABLE
                y = self.new_node(kind, [c.filler], parent=x)
                self.relate(x, y, c.role)
                made = True
        return made


class Tableau:
    """
    Depth-first search over completion graphs. A branch point clones the
    graph once per live disjunct; later branches also carry the complements
    of earlier disjuncts.
    """

    def __init__(self, budget: ResourceBudget) -> None:
        self.budget = budget

    def satisfiable(self, g: CompletionGraph) -> bool:
        stack = [g]
        while stack:
            self.budget.check()
            g = stack.pop()
            outcome = self._complete(g)
            if outcome is True:
                return True
            if outcome is False:
                continue
            x, disjuncts = outcome  # type: ignore[misc]
            self.budget.charge_branch()
            branches = []
            for k, d in enumerate(disjuncts):
                b = g.copy()
                for prev in disjuncts[:k]:
                    b.add(x, complement(prev))
                b.add(x, d)
                branches.append(b)
            stack.extend(reversed(branches))
        return False

    def _complete(self, g: CompletionGraph) -> Union[bool, Candidate]:
        while True:
            ok, candidate = g.saturate()
            if not ok:
                return False
            if candidate is not None:
                return candidate
            if not g.generate():
                return True
            self.budget.check()


def build_graph(
    kb: KnowledgeBase,
    index: TBoxIndex,
    budget: ResourceBudget,
    extra_objects: Iterable[str] = (),
    assertions: Sequence[Tuple[str, ConceptExpr]] = (),
) -> CompletionGraph:
    """
    Initial graph: one nominal node per object, ABox facts, then the extra
    assertions a reduction adds.
    """
    g = CompletionGraph(index, budget)
    for obj in sorted(set(kb.objects) | set(extra_objects) | {a for a, _ in assertions}):
        g.add_named(obj)
    for obj, facts in index.nominal_facts.items():
        for c in facts:
            g.add(g.add_named(obj), c)

    for ax in kb.abox:
        if isinstance(ax, ConceptAssertion):
            g.add(g.named[ax.object], negation_normal_form(ax.concept))
        elif isinstance(ax, RoleAssertion):
            g.relate(g.named[ax.subject], g.named[ax.object], ax.role)
        elif isinstance(ax, DataAssertion):
            lit = g.new_node(LITERAL, [Datatype(PrimTag.of(ax.value))], value=ax.value)
            g.add_edge(g.named[ax.subject], lit, ax.role)
        elif isinstance(ax, ObjectEquivalence):
            g.add(g.named[ax.a], Nominal(ax.b))

    for obj, c in assertions:
        g.add(g.named[obj], negation_normal_form(c))
    return g
