"""Verification suites and the counterexample scan harness.

Every suite compares an exact expected value (a closed form or an
independently derived count) against a brute-force value computed from
complete lattice enumeration.  Suite output is deterministic for a given
(suite id, params) pair: reports are byte-identical across runs.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from .catalogue import CatalogueEntry
from .errors import (
    InvalidParameterError,
    LatticeOverflowError,
    OrderOverflowError,
    RangeTooLargeError,
    UnknownSuiteError,
)
from .groups import DEFAULT_MAX_ORDER, AbelianType, Group, GroupSpec, construct, parse_spec
from .lattice import (
    DEFAULT_MAX_SUBGROUPS,
    Lattice,
    all_subgroups,
    complements,
    frattini,
    is_nilpotent,
    large_abelian_subgroup_witness,
    maximal_subgroups,
    sylow_subgroups,
)
from .numtheory import divisors, euler_phi, factorize, is_prime, prime_power
from .reports import ScanResult, ScanRow, SuiteResult
from .totient import (
    GaussSummary,
    cyclic_totient_sum,
    dihedral_gauss_sum,
    dihedral_totient,
    fixed_point_free_decomposition,
    gauss_sum,
    group_totient,
    semidirect_gauss_sum,
    subgroup_totient,
    two_group_gauss_sum,
)

# Sized so the largest order-256 abelian lattice (417199 subgroups for the
# rank-8 elementary abelian group) fits without tripping the guard.
SUITE_MAX_SUBGROUPS = 600000

SUITE_IDS = (
    "prop1",
    "cor2",
    "thm3",
    "thm4",
    "thm5",
    "thm7",
    "thm8",
    "example_pq",
    "remark_d2n",
    "closing_equality",
)

DIHEDRAL_TOTIENT_NOTE = (
    "dihedral parameter 2: the published piecewise totient lists 4, but direct "
    "counting gives 3 (the Klein four-group has three involutions) and the "
    "order-12 Gauss sum 23 reproduces only with 3; the direct count is used"
)

PQ_PAIRS_DEFAULT = ((2, 3), (3, 7), (2, 5), (5, 11), (3, 13))


# ---------------------------------------------------------------------------
# single-group summaries


def summarize(G: Group, max_subgroups: int = SUITE_MAX_SUBGROUPS) -> GaussSummary:
    """Full per-group record: totient, Gauss sum, lattice size, class membership."""
    L = all_subgroups(G, max_subgroups=max_subgroups)
    s = gauss_sum(G, L)
    return GaussSummary(
        group_order=G.order,
        phi=group_totient(G),
        s_value=s,
        cyclic_sum=cyclic_totient_sum(G),
        subgroup_count=len(L),
        in_class_c=s == G.order,
        nilpotent=is_nilpotent(G, L),
        cyclic=G.is_cyclic(),
    )


@lru_cache(maxsize=None)
def summarize_spec(
    spec_text: str,
    max_order: int = DEFAULT_MAX_ORDER,
    max_subgroups: int = SUITE_MAX_SUBGROUPS,
) -> GaussSummary:
    """Cached summary keyed by spec string, shared across suites and scans."""
    return summarize(construct(spec_text, max_order=max_order), max_subgroups=max_subgroups)


def subgroup_gauss_sum_from_lattice(L: Lattice, sub) -> int:
    """Gauss sum of a subgroup read off the parent lattice: sum the totients
    of all lattice members contained in it."""
    return sum(
        subgroup_totient(K) for K in L.subgroups if (K.mask & sub.mask) == K.mask
    )


def class_subgroup_closure(G: Group, L: Lattice) -> list[tuple[int, bool]]:
    """Class membership of every subgroup, read off the parent lattice:
    (subgroup order, Gauss sum equals order) per subgroup in canonical
    order.  Lets scans probe empirically whether membership is inherited
    by subgroups."""
    return [
        (H.order, subgroup_gauss_sum_from_lattice(L, H) == H.order) for H in L.subgroups
    ]


def inclusion_exclusion_residual(G: Group, L: Lattice) -> tuple[int, int]:
    """Both sides of the maximal-subgroup inclusion-exclusion identity
    S(G) = phi(G) + sum_i S(M_i) - p * S(Frattini) for p-groups with
    p + 1 maximal subgroups."""
    p = prime_power(G.order)[0]
    maxima = maximal_subgroups(L)
    lhs = gauss_sum(G, L)
    rhs = (
        group_totient(G)
        + sum(subgroup_gauss_sum_from_lattice(L, M) for M in maxima)
        - p * subgroup_gauss_sum_from_lattice(L, frattini(L))
    )
    return lhs, rhs


# ---------------------------------------------------------------------------
# corpus enumeration


def _partitions(k: int) -> list[tuple[int, ...]]:
    """Integer partitions of k, ascending parts, deterministic order."""
    if k == 0:
        return [()]
    out = []

    def extend(prefix, remaining, minimum):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(minimum, remaining + 1):
            extend(prefix + [part], remaining - part, part)

    extend([], k, 1)
    return out


def abelian_type_specs(max_order: int) -> list[GroupSpec]:
    """Every abelian type (one spec per isomorphism class) of order 2..max_order."""
    specs = []
    for n in range(2, max_order + 1):
        per_prime = []
        for p, e in sorted(factorize(n).items()):
            per_prime.append([(p, part) for part in _partitions(e)])
        choices = [[]]
        for options in per_prime:
            choices = [
                chosen + [(p, partition)]
                for chosen in choices
                for (p, partition) in options
            ]
        for chosen in choices:
            parts = []
            for p, partition in chosen:
                parts.extend(p**a for a in partition)
            specs.append(GroupSpec("abelian", tuple(sorted(parts))))
    return specs


def family_specs(family: str, max_order: int) -> list[GroupSpec]:
    """Built-in family corpora bounded by group order."""
    if family == "cyclic":
        return [GroupSpec("cyclic", (n,)) for n in range(1, max_order + 1)]
    if family == "abelian":
        return abelian_type_specs(max_order)
    if family == "dihedral":
        return [GroupSpec("dihedral", (n,)) for n in range(2, max_order // 2 + 1)]
    if family == "dihedral2":
        out = []
        n = 4
        while 2 * n <= max_order:
            out.append(GroupSpec("dihedral", (n,)))
            n *= 2
        return out
    if family == "quaternion":
        out = []
        o = 8
        while o <= max_order:
            out.append(GroupSpec("quaternion", (o,)))
            o *= 2
        return out
    if family == "semidihedral":
        out = []
        o = 16
        while o <= max_order:
            out.append(GroupSpec("semidihedral", (o,)))
            o *= 2
        return out
    if family == "modular":
        out = []
        p = 2
        while p**3 <= max_order:
            if is_prime(p):
                start = 4 if p == 2 else 3
                n = start
                while p**n <= max_order:
                    out.append(GroupSpec("modular", (p, n)))
                    n += 1
            p += 1
        return out
    if family == "heisenberg":
        return [
            GroupSpec("heisenberg", (p,))
            for p in range(3, int(round(max_order ** (1 / 3))) + 2)
            if is_prime(p) and p % 2 and p**3 <= max_order
        ]
    if family == "nilpotent":
        out = []
        for sub in ("abelian", "dihedral2", "quaternion", "semidihedral", "modular", "heisenberg"):
            out.extend(family_specs(sub, max_order))
        return out
    raise InvalidParameterError(f"unknown scan family {family!r}")


SCAN_FAMILIES = (
    "cyclic",
    "abelian",
    "dihedral",
    "dihedral2",
    "quaternion",
    "semidihedral",
    "modular",
    "heisenberg",
    "nilpotent",
)


def order_p_element_mod(p: int, q: int) -> int:
    """Smallest t >= 2 of multiplicative order exactly p modulo q; needs p | q-1."""
    if (q - 1) % p != 0:
        raise InvalidParameterError(f"{p} does not divide {q} - 1")
    for t in range(2, q):
        if pow(t, p, q) == 1 and t != 1:
            return t
    raise InvalidParameterError(f"no element of order {p} modulo {q}")


def pq_group_spec(p: int, q: int) -> GroupSpec:
    """The non-abelian group of order p*q (p < q primes, p | q-1)."""
    if not (is_prime(p) and is_prime(q) and p < q):
        raise InvalidParameterError(f"need primes p < q, got {p}, {q}")
    return GroupSpec("sdp", (q, p, order_p_element_mod(p, q)))


# ---------------------------------------------------------------------------
# classical integer check


def verify_classical_gauss(limit: int) -> SuiteResult:
    """Divisor-sum identity for the integer totient: sum over d | n equals n."""
    if limit < 1:
        raise InvalidParameterError(f"limit must be >= 1, got {limit}")
    result = SuiteResult(suite_id="gauss")
    for n in range(1, limit + 1):
        result.add(f"n={n}", n, sum(euler_phi(d) for d in divisors(n)))
    return result


# ---------------------------------------------------------------------------
# theorem suites


def _require_order(spec_order: int, max_order: int) -> None:
    if spec_order > max_order:
        raise RangeTooLargeError(
            f"requested group order {spec_order} exceeds the cap {max_order}"
        )


def _suite_thm3(params, max_order, max_subgroups) -> SuiteResult:
    bound = params.get("max_order", 256)
    _require_order(bound, max_order)
    result = SuiteResult(suite_id="thm3")
    for spec in abelian_type_specs(bound):
        summary = summarize_spec(str(spec), max_order, max_subgroups)
        rank = AbelianType(spec.params).max_rank()
        expected = "S=|G|" if rank == 1 else "S>|G|+1"
        s, order = summary.s_value, summary.group_order
        if s == order:
            actual = "S=|G|"
        elif s > order + 1:
            actual = "S>|G|+1"
        elif s > order:
            actual = "|G|<S<=|G|+1"
        else:
            actual = "S<|G|"
        result.add(str(spec), expected, actual)
    return result


THM4_CORPUS_DEFAULT = (
    "abelian:2,2,2,2",
    "abelian:2,2,4",
    "abelian:2,2,2,2,2",
    "abelian:4,4",
    "abelian:3,3,3,3",
    "dihedral:8",
    "quaternion:16",
    "semidihedral:16",
    "modular:2,4",
    "modular:2,5",
    "modular:3,4",
    "product:(dihedral:4)x(cyclic:2)",
    "product:(quaternion:8)x(cyclic:2)",
)


def _suite_thm4(params, max_order, max_subgroups) -> SuiteResult:
    corpus = params.get("corpus", THM4_CORPUS_DEFAULT)
    result = SuiteResult(suite_id="thm4")
    for text in corpus:
        spec = parse_spec(text) if isinstance(text, str) else text
        _require_order(spec.order(), max_order)
        pk = prime_power(spec.order())
        if pk is None or pk[1] < 4:
            raise InvalidParameterError(f"{spec}: corpus group must have order p^n, n >= 4")
        G = construct(spec, max_order=max_order)
        L = all_subgroups(G, max_subgroups=max_subgroups)
        witness = large_abelian_subgroup_witness(G, L)
        if witness is None:
            result.add(f"{spec}/no-witness", "no-witness", "no-witness")
            continue
        s = gauss_sum(G, L)
        m, r = witness
        actual = "S>|G|" if s > G.order else f"violated (S={s}, |G|={G.order})"
        result.add(f"{spec}/witness-m{m}-r{r}", "S>|G|", actual)
    return result


THM5_M_DEFAULT = ((2, 4), (2, 5), (3, 3), (3, 4))


def _suite_thm5(params, max_order, max_subgroups) -> SuiteResult:
    n_max = params.get("n_max", 7)
    _require_order(2**n_max, max_order)
    result = SuiteResult(suite_id="thm5")
    jobs: list[tuple[str, GroupSpec, int | None]] = []
    for n in range(3, n_max + 1):
        jobs.append(("D", GroupSpec("dihedral", (2 ** (n - 1),)), two_group_gauss_sum("D", n)))
        jobs.append(("Q", GroupSpec("quaternion", (2**n,)), two_group_gauss_sum("Q", n)))
        if n >= 4:
            jobs.append(
                ("SD", GroupSpec("semidihedral", (2**n,)), two_group_gauss_sum("SD", n))
            )
    for p, n in params.get("modular", THM5_M_DEFAULT):
        _require_order(p**n, max_order)
        jobs.append(("M", GroupSpec("modular", (p, n)), None))
    for family, spec, closed in jobs:
        G = construct(spec, max_order=max_order)
        L = all_subgroups(G, max_subgroups=max_subgroups)
        s = gauss_sum(G, L)
        if closed is not None:
            result.add(f"{spec}/closed-form", s, closed)
        lhs, rhs = inclusion_exclusion_residual(G, L)
        result.add(f"{spec}/inclusion-exclusion", lhs, rhs)
        result.add(f"{spec}/exceeds-order", True, s > G.order)
    return result


def _suite_thm7(params, max_order, max_subgroups) -> SuiteResult:
    n_max = params.get("n_max", 60)
    _require_order(2 * n_max, max_order)
    result = SuiteResult(suite_id="thm7")
    result.discrepancy_notes.append(DIHEDRAL_TOTIENT_NOTE)
    for n in range(2, n_max + 1):
        spec = GroupSpec("dihedral", (n,))
        summary = summarize_spec(str(spec), max_order, max_subgroups)
        result.add(f"{spec}/membership", n % 2 == 1, summary.in_class_c)
        result.add(f"{spec}/totient-closed-form", summary.phi, dihedral_totient(n))
        result.add(f"{spec}/gauss-sum-formula", summary.s_value, dihedral_gauss_sum(n))
    return result


def _suite_remark_d2n(params, max_order, max_subgroups) -> SuiteResult:
    n_max = params.get("n_max", 60)
    _require_order(2 * n_max, max_order)
    result = SuiteResult(suite_id="remark_d2n")
    for n in range(2, n_max + 1, 2):
        spec = GroupSpec("dihedral", (n,))
        summary = summarize_spec(str(spec), max_order, max_subgroups)
        result.add(str(spec), summary.s_value, dihedral_gauss_sum(n))
    return result


def _suite_thm8(params, max_order, max_subgroups) -> SuiteResult:
    n_max = params.get("dihedral_max", 45)
    pairs = params.get("pairs", PQ_PAIRS_DEFAULT)
    _require_order(2 * n_max, max_order)
    result = SuiteResult(suite_id="thm8")
    specs = [GroupSpec("dihedral", (n,)) for n in range(3, n_max + 1, 2)]
    specs += [pq_group_spec(p, q) for p, q in pairs]
    for spec in specs:
        _require_order(spec.order(), max_order)
        G = construct(spec, max_order=max_order)
        L = all_subgroups(G, max_subgroups=max_subgroups)
        witness = fixed_point_free_decomposition(G, L)
        result.add(f"{spec}/witness", True, witness is not None)
        if witness is None:
            continue
        N, H, p = witness
        count = len(complements(G, N, L))
        s = gauss_sum(G, L)
        result.add(f"{spec}/formula", s, semidirect_gauss_sum(N.order, p, count))
        result.add(f"{spec}/criterion", s == N.order * p, count == N.order)
    return result


def _suite_example_pq(params, max_order, max_subgroups) -> SuiteResult:
    pairs = params.get("pairs", PQ_PAIRS_DEFAULT)
    result = SuiteResult(suite_id="example_pq")
    for p, q in pairs:
        spec = pq_group_spec(p, q)
        _require_order(spec.order(), max_order)
        G = construct(spec, max_order=max_order)
        L = all_subgroups(G, max_subgroups=max_subgroups)
        s = gauss_sum(G, L)
        result.add(f"{spec}/gauss-sum", p * q, s)
        result.add(f"{spec}/subgroup-count", q + 3, len(L))
        N = next(sub for sub in L.subgroups if sub.order == q)
        result.add(f"{spec}/complement-count", q, len(complements(G, N, L)))
    return result


PROP1_PAIRS_DEFAULT = (
    ("cyclic:4", "cyclic:9"),
    ("cyclic:8", "cyclic:27"),
    ("abelian:2,2", "cyclic:3"),
    ("abelian:2,2", "cyclic:9"),
    ("abelian:3,3", "cyclic:4"),
    ("dihedral:3", "cyclic:5"),
    ("dihedral:4", "cyclic:3"),
    ("dihedral:4", "cyclic:9"),
    ("dihedral:5", "cyclic:9"),
    ("dihedral:6", "cyclic:5"),
    ("quaternion:8", "cyclic:3"),
    ("quaternion:8", "cyclic:9"),
    ("quaternion:8", "abelian:3,3"),
    ("quaternion:16", "cyclic:5"),
    ("semidihedral:16", "cyclic:3"),
    ("modular:2,4", "cyclic:7"),
    ("modular:3,3", "cyclic:2"),
    ("heisenberg:3", "cyclic:2"),
    ("heisenberg:3", "abelian:2,2"),
    ("sdp:7,3,2", "cyclic:2"),
)


def _suite_prop1(params, max_order, max_subgroups) -> SuiteResult:
    pairs = params.get("pairs", PROP1_PAIRS_DEFAULT)
    result = SuiteResult(suite_id="prop1")
    for left, right in pairs:
        s_left = summarize_spec(left, max_order, max_subgroups)
        s_right = summarize_spec(right, max_order, max_subgroups)
        if math.gcd(s_left.group_order, s_right.group_order) != 1:
            raise InvalidParameterError(f"factors {left} and {right} have non-coprime orders")
        product = f"product:({left})x({right})"
        s_prod = summarize_spec(product, max_order, max_subgroups)
        result.add(product, s_left.s_value * s_right.s_value, s_prod.s_value)
    return result


COR2_CORPUS_DEFAULT = (
    "quaternion:32",
    "abelian:2,4,4",
    "heisenberg:3",
    "product:(cyclic:8)x(cyclic:9)",
    "product:(quaternion:8)x(cyclic:9)",
    "product:(dihedral:4)x(cyclic:27)",
    "product:(modular:2,4)x(cyclic:9)",
    "product:(quaternion:16)x(cyclic:27)",
    "product:(heisenberg:3)x(cyclic:8)",
    "product:(semidihedral:16)x(cyclic:25)",
    "product:(cyclic:4)x(cyclic:9)x(cyclic:5)",
    "product:(abelian:2,2)x(cyclic:9)x(cyclic:5)",
    "product:(dihedral:8)x(cyclic:27)",
    "product:(abelian:2,2,2)x(abelian:9,3)",
)


def _suite_cor2(params, max_order, max_subgroups) -> SuiteResult:
    corpus = params.get("corpus", COR2_CORPUS_DEFAULT)
    bound = params.get("max_order", 500)
    result = SuiteResult(suite_id="cor2")
    for text in corpus:
        spec = parse_spec(text) if isinstance(text, str) else text
        if spec.order() > bound:
            raise RangeTooLargeError(f"{spec}: order {spec.order()} exceeds suite bound {bound}")
        _require_order(spec.order(), max_order)
        G = construct(spec, max_order=max_order)
        L = all_subgroups(G, max_subgroups=max_subgroups)
        result.add(f"{spec}/nilpotent", True, is_nilpotent(G, L))
        sylows = sylow_subgroups(G, L)
        product = 1
        for p, subs in sorted(sylows.items()):
            assert len(subs) == 1
            sylow_group = subs[0].as_group()
            product *= gauss_sum(sylow_group, all_subgroups(sylow_group, max_subgroups))
        result.add(f"{spec}/sylow-factorization", gauss_sum(G, L), product)
    return result


CLOSING_CORPUS_DEFAULT = tuple(
    [f"cyclic:{n}" for n in range(1, 31)]
    + [f"dihedral:{n}" for n in range(2, 22)]
    + ["sdp:7,3,2", "sdp:5,2,4", "sdp:13,3,3", "abelian:2,2", "quaternion:8", "modular:3,3"]
)


def _suite_closing_equality(params, max_order, max_subgroups) -> SuiteResult:
    corpus = params.get("corpus", CLOSING_CORPUS_DEFAULT)
    result = SuiteResult(suite_id="closing_equality")
    for text in corpus:
        spec = parse_spec(text) if isinstance(text, str) else text
        _require_order(spec.order(), max_order)
        summary = summarize_spec(str(spec), max_order, max_subgroups)
        # class membership is equivalent to the cyclic lower bound being attained
        result.add(str(spec), summary.in_class_c, summary.s_value == summary.cyclic_sum)
        if summary.in_class_c:
            # membership should be inherited by every subgroup
            G = construct(spec, max_order=max_order)
            L = all_subgroups(G, max_subgroups=max_subgroups)
            closure = class_subgroup_closure(G, L)
            result.add(f"{spec}/subgroup-closure", True, all(member for _, member in closure))
    return result


_SUITES = {
    "prop1": _suite_prop1,
    "cor2": _suite_cor2,
    "thm3": _suite_thm3,
    "thm4": _suite_thm4,
    "thm5": _suite_thm5,
    "thm7": _suite_thm7,
    "thm8": _suite_thm8,
    "example_pq": _suite_example_pq,
    "remark_d2n": _suite_remark_d2n,
    "closing_equality": _suite_closing_equality,
}


def run_suite(
    suite_id: str,
    params: dict | None = None,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    max_subgroups: int = SUITE_MAX_SUBGROUPS,
) -> SuiteResult:
    """Execute one verification suite over its (parameterized) corpus."""
    if suite_id not in _SUITES:
        raise UnknownSuiteError(f"unknown suite {suite_id!r}; expected one of {SUITE_IDS}")
    return _SUITES[suite_id](params or {}, max_order, max_subgroups)


# ---------------------------------------------------------------------------
# counterexample scan


def _scan_id(item) -> str:
    if isinstance(item, CatalogueEntry):
        return item.id
    if isinstance(item, Group):
        return str(item.spec) if item.spec is not None else f"table-group-order-{item.order}"
    spec = item if isinstance(item, GroupSpec) else parse_spec(str(item))
    return str(spec)


def _scan_item(item, max_order, max_subgroups):
    ident = _scan_id(item)
    group = item.group if isinstance(item, CatalogueEntry) else item if isinstance(item, Group) else None
    try:
        if group is None:
            summary = summarize_spec(ident, max_order, max_subgroups)
        else:
            summary = summarize(group, max_subgroups=max_subgroups)
    except (LatticeOverflowError, OrderOverflowError) as exc:
        return ("skip", ident, str(exc))
    row = ScanRow(
        id=ident,
        order=summary.group_order,
        phi=summary.phi,
        s_value=summary.s_value,
        subgroup_count=summary.subgroup_count,
        nilpotent=summary.nilpotent,
        cyclic=summary.cyclic,
        in_class_c=summary.in_class_c,
    )
    return ("row", row)


def _scan_worker(args):
    item, max_order, max_subgroups = args
    return _scan_item(item, max_order, max_subgroups)


def run_scan(
    corpus,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    max_subgroups: int = DEFAULT_MAX_SUBGROUPS,
    jobs: int = 1,
) -> ScanResult:
    """Summarize every corpus group and collect class members, conjectured
    counterexamples (nilpotent non-cyclic members), and lower-bound failures.

    Groups exceeding the order or subgroup caps are recorded as skipped
    and the scan continues.  With jobs > 1 the work is distributed across
    processes; the report is assembled in corpus order either way.
    """
    items = list(corpus)
    ids = [_scan_id(item) for item in items]
    if len(set(ids)) != len(ids):
        dup = next(i for i in ids if ids.count(i) > 1)
        raise InvalidParameterError(f"duplicate corpus id {dup!r}")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(
                pool.map(_scan_worker, [(item, max_order, max_subgroups) for item in items])
            )
    else:
        outcomes = [_scan_item(item, max_order, max_subgroups) for item in items]
    result = ScanResult()
    for outcome in outcomes:
        if outcome[0] == "skip":
            result.skipped.append({"id": outcome[1], "reason": outcome[2]})
            continue
        row = outcome[1]
        result.rows.append(row)
        result.scanned += 1
        if row.in_class_c:
            result.gauss_class_members.append(row.id)
        if row.nilpotent and not row.cyclic and row.s_value <= row.order:
            result.nilpotent_noncyclic_members.append(row.id)
        if row.s_value < row.order:
            result.inequality_failures.append(row.id)
    return result
