"""Model Hamiltonians, per-scheme resource pricing, and scenario labels.

Models are built as lists of local terms (1- or 2-site generalized-matrix
products with a real coefficient).  Pricing a term under an encoding means
running the full pipeline: encode each site, tensor the factors together,
synthesize one first-order Trotter step, optimize it, and count entangling
gates.  Per-(term, encoding) prices are cached by matrix digest, which
both speeds up sweeps and makes counts manifestly identical across system
sizes for translation-invariant models.

Five composite schemes are compared:

    sb_only / gray_only / unary_only   every term in one code
    sb_and_gray                        per-term best of SB and Gray; any
                                       particle whose terms split between
                                       the two pays 2 conversions of K-1
                                       CNOTs per Trotter step
    all_with_compacting                per-term best of all three; a
                                       particle with unary-priced terms
                                       pays 2 SB<->unary conversions at
                                       the Clifford+T CNOT price

Bosonic matrices may be rebuilt at the next power-of-two cutoff before
compact encoding when that lowers the count (diagonals then become
affine in the bits and lose all entangling gates); spins are never
augmented.  Ties prefer the lower-qubit, conversion-free choice
(SB, then Gray, then unary).

Scenario labels follow the classification: A when a single compact code is
optimal, B when mixing SB and Gray wins, C when unary wins and compacting
in and out is still cheaper than staying compact, D when unary wins but
compacting is not worthwhile.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .circuits import count_resources, trotter_step
from .converters import SB_TO_UNARY, conversion_cost
from .encoding import GRAY, SB, UNARY, EncodingSpec, num_qubits
from .encoder import augment_truncation, encode_matrix, matrix_digest
from .optimizer import PassConfig, optimize
from .paulis import PauliSum
from .qudit_ops import BOSONIC, SPIN, QuditMatrix, bosonic, spin

BOSE_HUBBARD = "bose_hubbard"
SHIFTED_QHO = "shifted_qho"
FRANCK_CONDON = "franck_condon"
HEISENBERG = "heisenberg"
BOSON_SAMPLING = "boson_sampling"
MODEL_NAMES = (BOSE_HUBBARD, SHIFTED_QHO, FRANCK_CONDON, HEISENBERG, BOSON_SAMPLING)

SCHEME_NAMES = ("sb_only", "gray_only", "unary_only", "sb_and_gray",
                "all_with_compacting")
PRICING_THETA = 0.37  # arbitrary fixed nonzero angle; counts are angle-blind
COEFF_ZERO_TOL = 1e-12


@dataclass(frozen=True)
class LocalTerm:
    """coefficient * sum of matrix products over `sites`.

    factors is a tuple of products; each product supplies one QuditMatrix
    per site (so a hopping term is ((adag, a), (a, adag))).  The summed
    operator times the coefficient is Hermitian for every built model.
    """

    sites: tuple[int, ...]
    factors: tuple[tuple[QuditMatrix, ...], ...]
    coefficient: float
    label: str

    def __post_init__(self):
        if len(set(self.sites)) != len(self.sites):
            raise ValueError("repeated site index in a local term")
        for product in self.factors:
            if len(product) != len(self.sites):
                raise ValueError("each product needs one matrix per site")
        for j in range(len(self.sites)):
            dims = {p[j].d for p in self.factors}
            if len(dims) != 1:
                raise ValueError("inconsistent dimensions on one site")

    def site_dims(self) -> tuple[int, ...]:
        return tuple(self.factors[0][j].d for j in range(len(self.sites)))


def term_matrix(term: LocalTerm) -> np.ndarray:
    """Dense joint matrix, first site least significant in the joint index."""
    dims = term.site_dims()
    dim = int(np.prod(dims))
    out = np.zeros((dim, dim), dtype=complex)
    for product in term.factors:
        acc = np.array([[1.0]], dtype=complex)
        for m in reversed(product):
            acc = np.kron(acc, np.asarray(m))
        out += acc
    return term.coefficient * out


# ---------------------------------------------------------------------------
# model builders

def _bose_hubbard_terms(N: int, d: int, t: float, U: float, mu: float,
                        periodic: bool = True) -> list[LocalTerm]:
    a = bosonic(d, "a")
    adag = bosonic(d, "adag")
    n = bosonic(d, "n")
    nn1 = bosonic(d, "n_nminus1")
    terms: list[LocalTerm] = []
    if N > 1:
        bonds = [(i, (i + 1) % N) for i in range(N if periodic else N - 1)]
        for i, j in bonds:
            terms.append(LocalTerm((i, j), ((adag, a), (a, adag)), -t, "hopping"))
    for i in range(N):
        terms.append(LocalTerm((i,), ((nn1,),), U / 2.0, "onsite"))
        terms.append(LocalTerm((i,), ((n,),), -mu, "chemical"))
    return terms


def _identity_matrix(d: int) -> QuditMatrix:
    return QuditMatrix(np.eye(d), name="identity", family=BOSONIC)


def _shifted_qho_terms(d: int, omega: float, delta: float) -> list[LocalTerm]:
    q2 = bosonic(d, "q2")
    p2 = bosonic(d, "p2")
    q = bosonic(d, "q")
    terms = [
        LocalTerm((0,), ((q2,),), omega / 2.0, "q2"),
        LocalTerm((0,), ((p2,),), omega / 2.0, "p2"),
        LocalTerm((0,), ((q,),), -omega * delta, "linear"),
        LocalTerm((0,), ((_identity_matrix(d),),), omega * delta ** 2 / 2.0,
                  "constant"),
    ]
    return terms


def duschinsky_matrix(M: int, k: int, seed: int) -> np.ndarray:
    """Seeded row-sparse mixing matrix: k nonzeros per row, rows normalized.

    Not exactly unitary; only the sparsity pattern matters for counting.
    """
    if not 1 <= k <= M:
        raise ValueError("need 1 <= k <= M nonzeros per row")
    rng = np.random.default_rng(seed)
    S = np.zeros((M, M))
    for j in range(M):
        cols = rng.choice(M, size=k, replace=False)
        vals = rng.uniform(-1.0, 1.0, size=k)
        while np.linalg.norm(vals) < 1e-9:
            vals = rng.uniform(-1.0, 1.0, size=k)
        S[j, cols] = vals / np.linalg.norm(vals)
    return S


def _franck_condon_terms(M: int, d: int, omega_A, omega_B, k: int,
                         delta, seed: int) -> list[LocalTerm]:
    wA = np.asarray(omega_A, dtype=float)
    wB = np.asarray(omega_B, dtype=float)
    dvec = np.asarray(delta, dtype=float)
    if wA.shape != (M,) or wB.shape != (M,) or dvec.shape != (M,):
        raise ValueError("omega_A, omega_B, delta must each have length M")
    if np.any(wA <= 0) or np.any(wB <= 0):
        raise ValueError("mode frequencies must be positive")
    S = duschinsky_matrix(M, k, seed)
    J = np.diag(np.sqrt(wB)) @ S @ np.diag(1.0 / np.sqrt(wA))

    quad = np.zeros(M)            # coefficient of q_m^2 (and p_m^2)
    cross = np.zeros((M, M))      # coefficient of q_m q_m' (m < m'), and p p'
    lin = np.zeros(M)             # coefficient of q_m
    const = 0.0
    for j in range(M):
        w = wB[j]
        for m in range(M):
            quad[m] += 0.5 * w * J[j, m] ** 2
            lin[m] += w * dvec[j] * J[j, m]
            for mp in range(m + 1, M):
                cross[m, mp] += w * J[j, m] * J[j, mp]
        const += 0.5 * w * dvec[j] ** 2

    q = bosonic(d, "q")
    p = bosonic(d, "p")
    q2 = bosonic(d, "q2")
    p2 = bosonic(d, "p2")
    terms: list[LocalTerm] = []
    for m in range(M):
        if abs(quad[m]) > COEFF_ZERO_TOL:
            terms.append(LocalTerm((m,), ((q2,),), quad[m], "q2"))
            terms.append(LocalTerm((m,), ((p2,),), quad[m], "p2"))
        if abs(lin[m]) > COEFF_ZERO_TOL:
            terms.append(LocalTerm((m,), ((q,),), lin[m], "linear"))
    for m in range(M):
        for mp in range(m + 1, M):
            if abs(cross[m, mp]) > COEFF_ZERO_TOL:
                terms.append(LocalTerm((m, mp), ((q, q),), cross[m, mp], "qq"))
                terms.append(LocalTerm((m, mp), ((p, p),), cross[m, mp], "pp"))
    if abs(const) > COEFF_ZERO_TOL:
        terms.append(LocalTerm((0,), ((_identity_matrix(d),),), const, "constant"))
    return terms


def _heisenberg_terms(N: int, s: float, J: float, g_field: float) -> list[LocalTerm]:
    sz = spin(s, "z")
    sx = spin(s, "x")
    terms: list[LocalTerm] = []
    for i in range(N - 1):
        terms.append(LocalTerm((i, i + 1), ((sz, sz),), -J, "zz"))
    for i in range(N):
        terms.append(LocalTerm((i,), ((sx,),), -g_field, "field"))
    return terms


def _boson_sampling_terms(N: int, d: int, gates) -> list[LocalTerm]:
    a = bosonic(d, "a")
    adag = bosonic(d, "adag")
    n = bosonic(d, "n")
    terms: list[LocalTerm] = []
    for r, gate in enumerate(gates):
        kind, modes, theta = gate["kind"], tuple(gate["modes"]), float(gate["theta"])
        if any(not 0 <= m < N for m in modes):
            raise ValueError(f"mode index out of range in gate {r}")
        if kind == "phase_shifter":
            if len(modes) != 1:
                raise ValueError("phase_shifter takes one mode")
            terms.append(LocalTerm(modes, ((n,),), theta, f"phase_shifter_{r}"))
        elif kind == "beamsplitter":
            if len(modes) != 2:
                raise ValueError("beamsplitter takes two modes")
            terms.append(LocalTerm(modes, ((adag, a), (a, adag)), theta,
                                   f"beamsplitter_{r}"))
        else:
            raise ValueError(f"unknown boson-sampling gate kind {kind!r}")
    return terms


@dataclass(frozen=True)
class ModelSpec:
    model: str
    N: int = 1
    d: int | None = None
    s: float | None = None
    params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.model not in MODEL_NAMES:
            raise ValueError(f"unknown model {self.model!r}; choose from {MODEL_NAMES}")
        if self.N < 1:
            raise ValueError("N must be >= 1")
        if self.model == HEISENBERG:
            if self.s is None:
                raise ValueError("Heisenberg needs a spin s")
            if abs(2 * self.s - round(2 * self.s)) > 1e-12 or self.s <= 0:
                raise ValueError("s must be a positive half-integer")
        else:
            if self.d is None or self.d < 2:
                raise ValueError("bosonic models need a cutoff d >= 2")

    @property
    def site_dim(self) -> int:
        if self.model == HEISENBERG:
            return int(round(2 * self.s)) + 1
        return self.d

    @property
    def family(self) -> str:
        return SPIN if self.model == HEISENBERG else BOSONIC


def build_model(spec: ModelSpec) -> list[LocalTerm]:
    p = spec.params
    if spec.model == BOSE_HUBBARD:
        return _bose_hubbard_terms(spec.N, spec.d, p.get("t", 1.0),
                                   p.get("U", 1.0), p.get("mu", 0.0),
                                   p.get("periodic", True))
    if spec.model == SHIFTED_QHO:
        if spec.N != 1:
            raise ValueError("the shifted oscillator is a single-mode model")
        return _shifted_qho_terms(spec.d, p.get("omega", 1.0), p.get("delta", 0.5))
    if spec.model == FRANCK_CONDON:
        M = spec.N
        return _franck_condon_terms(
            M, spec.d,
            p.get("omega_A", np.ones(M)), p.get("omega_B", np.full(M, 1.1)),
            p.get("k", min(4, M)), p.get("delta", np.full(M, 0.2)), spec.seed)
    if spec.model == HEISENBERG:
        return _heisenberg_terms(spec.N, spec.s, p.get("J", 1.0),
                                 p.get("g_field", 1.0))
    if spec.model == BOSON_SAMPLING:
        return _boson_sampling_terms(spec.N, spec.d, p.get("gates", ()))
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# pricing

def encode_term(term: LocalTerm, kind: str, g: int = 3,
                augment: bool = False) -> PauliSum:
    """Pauli sum of the whole term on a register laid out site by site
    (first site in the lowest qubits)."""
    matrices = term.factors
    if augment:
        matrices = tuple(tuple(augment_truncation(m) for m in product)
                         for product in matrices)
    dims = tuple(matrices[0][j].d for j in range(len(term.sites)))
    specs = [EncodingSpec(kind, dj, g=g) for dj in dims]
    widths = [num_qubits(sp) for sp in specs]
    offsets = [sum(widths[:j]) for j in range(len(widths))]
    total = sum(widths)
    out = PauliSum(total)
    for product in matrices:
        acc: PauliSum | None = None
        for j, m in enumerate(product):
            part = encode_matrix(specs[j], m).sum.tensor_shift(offsets[j], total)
            acc = part if acc is None else acc.multiply(part)
        out = out + acc
    return (term.coefficient * out).simplify()


_PRICE_CACHE: dict = {}


def clear_price_cache() -> None:
    _PRICE_CACHE.clear()


def _term_cache_key(term: LocalTerm, kind: str, g: int, augment: bool):
    digests = tuple(tuple(matrix_digest(m) for m in product)
                    for product in term.factors)
    zero = abs(term.coefficient) < COEFF_ZERO_TOL
    return (kind, g, augment, zero, digests)


def term_entangling_cost(term: LocalTerm, kind: str, g: int = 3,
                         augment: bool = False) -> int:
    """Entangling gates of one optimized Trotter-step factor for this term."""
    key = _term_cache_key(term, kind, g, augment)
    if key in _PRICE_CACHE:
        return _PRICE_CACHE[key]
    if abs(term.coefficient) < COEFF_ZERO_TOL:
        cost = 0
    else:
        encoded = encode_term(term, kind, g=g, augment=augment)
        circ = trotter_step(encoded, PRICING_THETA)
        cost = count_resources(optimize(circ)).entangling_total
    _PRICE_CACHE[key] = cost
    return cost


def _priced(term: LocalTerm, kind: str, family: str, d: int) -> int:
    """Best cost under one encoding, trying bosonic augmentation for
    compact codes when the cutoff is not a power of two."""
    base = term_entangling_cost(term, kind)
    if (kind in (SB, GRAY) and family == BOSONIC and d & (d - 1)):
        try:
            base = min(base, term_entangling_cost(term, kind, augment=True))
        except (ValueError, TypeError):
            pass  # unnamed matrices cannot be rebuilt at a new cutoff
    return base


# ---------------------------------------------------------------------------
# scheme comparison

@dataclass(frozen=True)
class SchemeReport:
    model: str
    d_or_s: float
    N: int
    counts: dict
    ratios: dict
    conversions: dict
    qubits_per_particle: dict
    improvements: dict
    scenario: str

    def to_json_dict(self) -> dict:
        return {
            "model": self.model,
            "d_or_s": self.d_or_s,
            "N": self.N,
            "counts": dict(self.counts),
            "ratios": dict(self.ratios),
            "conversions": dict(self.conversions),
            "qubits_per_particle": dict(self.qubits_per_particle),
            "improvements": dict(self.improvements),
            "scenario": self.scenario,
        }


_SCENARIO_PRIORITY = ("sb_only", "gray_only", "sb_and_gray", "unary_only",
                      "all_with_compacting")


def classify_scenario(counts: dict) -> str:
    """A/B/C/D from the five scheme counts; ties break toward fewer qubits
    and fewer conversions (SB, Gray, SB&Gray, unary, compacting)."""
    best = min(counts.values())
    compact_best = min(counts["sb_only"], counts["gray_only"])
    for name in _SCENARIO_PRIORITY:
        if counts[name] != best:
            continue
        if name in ("sb_only", "gray_only"):
            return "A"
        if name == "sb_and_gray":
            return "B"
        if name == "unary_only":
            return "C" if counts["all_with_compacting"] < compact_best else "D"
        return "C"  # all_with_compacting strictly best: compacting pays off
    raise AssertionError("unreachable")


def compute_scheme_report(spec: ModelSpec) -> SchemeReport:
    terms = build_model(spec)
    family = spec.family
    d = spec.site_dim
    K = max(1, (d - 1).bit_length())
    sb_gray_conv = 2 * max(0, K - 1)
    unary_conv = 2 * conversion_cost(SB_TO_UNARY, d, "clifford_t").counts.get("CNOT", 0)

    cost = {kind: [ _priced(t, kind, family, d) if kind != UNARY
                    else term_entangling_cost(t, UNARY)
                    for t in terms] for kind in (SB, GRAY, UNARY)}

    def particle_families(choice: list[str]) -> dict[int, set]:
        used: dict[int, set] = {}
        for t, kind in zip(terms, choice):
            if abs(t.coefficient) < COEFF_ZERO_TOL:
                continue
            for site in t.sites:
                used.setdefault(site, set()).add(kind)
        return used

    counts: dict = {}
    counts["sb_only"] = sum(cost[SB])
    counts["gray_only"] = sum(cost[GRAY])
    counts["unary_only"] = sum(cost[UNARY])

    # scheme (iv): per-term best of SB/Gray, ties to SB
    choice_iv = [SB if cost[SB][i] <= cost[GRAY][i] else GRAY
                 for i in range(len(terms))]
    conv_iv = sum(sb_gray_conv for fams in particle_families(choice_iv).values()
                  if len(fams) > 1)
    counts["sb_and_gray"] = sum(cost[choice_iv[i]][i] for i in range(len(terms))) + conv_iv

    # scheme (v): per-term best of all three, ties to SB then Gray
    choice_v = []
    for i in range(len(terms)):
        options = [(cost[SB][i], 0, SB), (cost[GRAY][i], 1, GRAY),
                   (cost[UNARY][i], 2, UNARY)]
        choice_v.append(min(options)[2])
    fams_v = particle_families(choice_v)
    conv_v = 0
    for fams in fams_v.values():
        if UNARY in fams:
            conv_v += unary_conv
        if GRAY in fams and fams != {GRAY}:
            conv_v += sb_gray_conv
    counts["all_with_compacting"] = (
        sum(cost[choice_v[i]][i] for i in range(len(terms))) + conv_v)

    sb_total = counts["sb_only"]

    def ratio(v: int) -> float:
        if sb_total:
            return v / sb_total
        return 1.0 if v == 0 else float("inf")

    ratios = {k: ratio(v) for k, v in counts.items()}
    conversions = {"sb_only": 0, "gray_only": 0, "unary_only": 0,
                   "sb_and_gray": conv_iv, "all_with_compacting": conv_v}
    any_unary_v = any(UNARY in fams for fams in fams_v.values())
    qubits = {"sb_only": K, "gray_only": K, "unary_only": d,
              "sb_and_gray": K,
              "all_with_compacting": d if any_unary_v else K}
    improvements = {
        "sb_and_gray": counts["sb_and_gray"] < min(counts["sb_only"],
                                                   counts["gray_only"]),
        "all_with_compacting": counts["all_with_compacting"] < min(
            counts["sb_only"], counts["gray_only"], counts["unary_only"]),
    }
    return SchemeReport(
        model=spec.model,
        d_or_s=(spec.s if spec.model == HEISENBERG else spec.d),
        N=spec.N,
        counts=counts,
        ratios=ratios,
        conversions=conversions,
        qubits_per_particle=qubits,
        improvements=improvements,
        scenario=classify_scenario(counts),
    )


# ---------------------------------------------------------------------------
# boson-sampling circuit layer

def boson_sampling_circuit(spec: ModelSpec, kind: str, g: int = 3):
    """Concatenated single-Trotter-factor circuits, one per listed gate."""
    if spec.model != BOSON_SAMPLING:
        raise ValueError("needs a boson_sampling ModelSpec")
    from .circuits import Circuit
    terms = build_model(spec)
    enc = EncodingSpec(kind, spec.d, g=g)
    nq = num_qubits(enc)
    total = spec.N * nq
    circ = Circuit(total)
    a_sum = encode_matrix(enc, bosonic(spec.d, "a")).sum
    adag_sum = encode_matrix(enc, bosonic(spec.d, "adag")).sum
    n_sum = encode_matrix(enc, bosonic(spec.d, "n")).sum
    for term in terms:
        theta = term.coefficient
        if term.label.startswith("phase_shifter"):
            h = n_sum.tensor_shift(term.sites[0] * nq, total)
        else:
            i, j = term.sites
            h = (adag_sum.tensor_shift(i * nq, total)
                 .multiply(a_sum.tensor_shift(j * nq, total))
                 + a_sum.tensor_shift(i * nq, total)
                 .multiply(adag_sum.tensor_shift(j * nq, total))).simplify()
        step = trotter_step(h, theta)
        circ.gates.extend(step.gates)
        circ.global_phase += step.global_phase
    return circ
