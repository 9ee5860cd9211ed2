"""Circuit intermediate representation, staircase synthesis, resources, I/O.

The gate alphabet is deliberately small: X, H, BasisY, Rz(angle), CNOT,
SWAP, CSWAP, T, Tdg.  BasisY is the Hermitian, self-inverse single-qubit
basis change V = (Y + Z)/sqrt(2) = S H S^dagger, which conjugates Z into Y
the same way H conjugates Z into X; it exports to OpenQASM as the triple
sdg, h, s.  S and Sdg themselves are accepted on re-import so that an
exported circuit round-trips through a simulator.

exp(-i theta c P) for a single Pauli string P with real coefficient c is
synthesized as the usual CNOT staircase: basis changes onto Z, an ascending
CNOT ladder onto the highest active qubit, Rz(2 theta c) there, then the
mirror.  Our Rz convention is Rz(phi) = exp(-i phi Z / 2), so a weight-p
string costs 2(p-1) CNOTs and identity strings contribute only a global
phase.  A first-order Trotter step is the concatenation of term circuits
in a deterministic term order.

Resource counting can expand SWAP into 3 CNOTs and CSWAP into the
textbook Clifford+T network (8 CNOTs, 2 H, 4 T, 3 Tdg via a Toffoli
conjugated by CNOTs) to give fault-tolerant-flavoured totals.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .paulis import PauliString, PauliSum, string_key

GATE_ARITY = {
    "X": 1, "H": 1, "BasisY": 1, "Rz": 1, "T": 1, "Tdg": 1,
    "S": 1, "Sdg": 1,
    "CNOT": 2, "SWAP": 2, "CSWAP": 3,
}
ENTANGLING_KINDS = ("CNOT", "SWAP", "CSWAP")
REAL_COEFF_TOL = 1e-12


@dataclass(frozen=True)
class Gate:
    """kind, qubit tuple (control(s) first), and an angle for Rz only.

    For CNOT the tuple is (control, target); for CSWAP it is
    (control, a, b) with a and b the swapped pair.
    """

    kind: str
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self):
        if self.kind not in GATE_ARITY:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.qubits) != GATE_ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {GATE_ARITY[self.kind]} qubits, "
                             f"got {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"repeated qubit in {self.kind}{self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative qubit index in {self.qubits}")
        if (self.kind == "Rz") != (self.angle is not None):
            raise ValueError("angle is required for Rz and forbidden otherwise")

    def support(self) -> frozenset[int]:
        return frozenset(self.qubits)


@dataclass
class Circuit:
    """Gate list applied left to right, plus an accumulated global phase
    (the circuit's unitary is exp(i * global_phase) times the gate product)."""

    n_qubits: int
    gates: list[Gate] = field(default_factory=list)
    global_phase: float = 0.0

    def add(self, kind: str, *qubits: int, angle: float | None = None) -> "Circuit":
        g = Gate(kind, tuple(qubits), angle)
        if any(q >= self.n_qubits for q in qubits):
            raise ValueError(f"qubit index out of range for {self.n_qubits}-qubit circuit")
        self.gates.append(g)
        return self

    def extend(self, gates) -> "Circuit":
        for g in gates:
            if any(q >= self.n_qubits for q in g.qubits):
                raise ValueError("qubit index out of range")
            self.gates.append(g)
        return self

    def copy(self) -> "Circuit":
        return Circuit(self.n_qubits, list(self.gates), self.global_phase)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)


# ---------------------------------------------------------------------------
# staircase synthesis

def trotter_term(p: PauliString, coeff: complex, theta: float, n_qubits: int) -> Circuit:
    """Circuit for exp(-i theta coeff P); coeff must be real (Hermitian term)."""
    c = complex(coeff)
    if abs(c.imag) > REAL_COEFF_TOL * max(1.0, abs(c)):
        raise ValueError(f"non-real coefficient {coeff} cannot be exponentiated "
                         "as a Hermitian term")
    c_r = c.real
    circ = Circuit(n_qubits)
    active = [q for q, _ in p]
    if any(q >= n_qubits for q in active):
        raise ValueError("Pauli string acts outside the register")
    if not active:
        circ.global_phase += -theta * c_r
        return circ

    def basis_layer():
        for q, letter in p:
            if letter == "X":
                circ.add("H", q)
            elif letter == "Y":
                circ.add("BasisY", q)

    basis_layer()
    for a, b in zip(active, active[1:]):
        circ.add("CNOT", a, b)
    circ.add("Rz", active[-1], angle=2.0 * theta * c_r)
    for a, b in reversed(list(zip(active, active[1:]))):
        circ.add("CNOT", a, b)
    basis_layer()
    return circ


def trotter_step(h: PauliSum, theta: float, ordering: str = "canonical") -> Circuit:
    """First-order product formula: one term circuit per Pauli string.

    ordering="canonical" sorts terms in the pseudo-alphabetical string
    order (deterministic); "given" keeps the sum's storage order.
    """
    if not h.is_hermitian():
        raise ValueError("trotter_step needs a Hermitian Pauli sum")
    items = list(h.terms.items())
    if ordering == "canonical":
        items.sort(key=lambda kv: string_key(kv[0]))
    elif ordering != "given":
        raise ValueError(f"unknown ordering {ordering!r}")
    circ = Circuit(h.n_qubits)
    for p, c in items:
        part = trotter_term(p, c, theta, h.n_qubits)
        circ.gates.extend(part.gates)
        circ.global_phase += part.global_phase
    return circ


# ---------------------------------------------------------------------------
# fixed decomposition templates

def toffoli_gates(c1: int, c2: int, t: int) -> list[Gate]:
    """Textbook Clifford+T Toffoli: 6 CNOT, 2 H, 4 T, 3 Tdg."""
    return [
        Gate("H", (t,)),
        Gate("CNOT", (c2, t)),
        Gate("Tdg", (t,)),
        Gate("CNOT", (c1, t)),
        Gate("T", (t,)),
        Gate("CNOT", (c2, t)),
        Gate("Tdg", (t,)),
        Gate("CNOT", (c1, t)),
        Gate("T", (c2,)),
        Gate("T", (t,)),
        Gate("H", (t,)),
        Gate("CNOT", (c1, c2)),
        Gate("T", (c1,)),
        Gate("Tdg", (c2,)),
        Gate("CNOT", (c1, c2)),
    ]


def cswap_clifford_t(c: int, a: int, b: int) -> list[Gate]:
    """CSWAP as CNOT-conjugated Toffoli: 8 CNOT, 2 H, 4 T, 3 Tdg."""
    return [Gate("CNOT", (b, a))] + toffoli_gates(c, a, b) + [Gate("CNOT", (b, a))]


def toffoli_via_cswap(c1: int, c2: int, t: int) -> list[Gate]:
    """Toffoli written in the native alphabet (CSWAP conjugated by CNOTs)."""
    return [Gate("CNOT", (t, c2)), Gate("CSWAP", (c1, c2, t)), Gate("CNOT", (t, c2))]


def swap_as_cnots(a: int, b: int) -> list[Gate]:
    return [Gate("CNOT", (a, b)), Gate("CNOT", (b, a)), Gate("CNOT", (a, b))]


# ---------------------------------------------------------------------------
# resource accounting

@dataclass(frozen=True)
class ResourceReport:
    n_qubits: int
    counts: dict
    entangling_total: int
    total_gates: int

    def to_json_dict(self) -> dict:
        return {
            "n_qubits": self.n_qubits,
            "counts": dict(self.counts),
            "entangling_total": self.entangling_total,
            "total_gates": self.total_gates,
        }


def _expand_clifford_t(gates: list[Gate]) -> list[Gate]:
    out: list[Gate] = []
    for g in gates:
        if g.kind == "SWAP":
            out.extend(swap_as_cnots(*g.qubits))
        elif g.kind == "CSWAP":
            out.extend(cswap_clifford_t(*g.qubits))
        else:
            out.append(g)
    return out


def count_resources(c: Circuit, decompose: str = "none") -> ResourceReport:
    """Gate-kind histogram and entangling total.

    decompose="clifford_t" first rewrites SWAP -> 3 CNOT and CSWAP -> the
    Clifford+T template, so the entangling total is a plain CNOT count.
    """
    if decompose not in ("none", "clifford_t"):
        raise ValueError(f"unknown decompose mode {decompose!r}")
    gates = c.gates if decompose == "none" else _expand_clifford_t(c.gates)
    counts = {k: 0 for k in GATE_ARITY}
    for g in gates:
        counts[g.kind] += 1
    counts = {k: v for k, v in counts.items() if v}
    entangling = sum(counts.get(k, 0) for k in ENTANGLING_KINDS)
    return ResourceReport(c.n_qubits, counts, entangling, len(gates))


# ---------------------------------------------------------------------------
# export / import

def _circuit_to_dict(c: Circuit) -> dict:
    gates = []
    for g in c.gates:
        item = {"kind": g.kind, "qubits": list(g.qubits)}
        if g.angle is not None:
            item["angle"] = g.angle
        gates.append(item)
    return {"n_qubits": c.n_qubits, "global_phase": c.global_phase, "gates": gates}


def _circuit_from_dict(d: dict) -> Circuit:
    c = Circuit(int(d["n_qubits"]), [], float(d.get("global_phase", 0.0)))
    for item in d["gates"]:
        c.add(item["kind"], *item["qubits"], angle=item.get("angle"))
    return c


_QASM_FIXED = {
    "X": "x", "H": "h", "T": "t", "Tdg": "tdg", "S": "s", "Sdg": "sdg",
    "CNOT": "cx", "SWAP": "swap",
}


def export_circuit(c: Circuit, fmt: str = "json") -> str:
    """Serialize to "json" (lossless) or "qasm2" (OpenQASM 2 subset).

    QASM has no global-phase statement, so the phase is recorded as a
    comment; BasisY becomes sdg,h,s and CSWAP is expanded to Clifford+T.
    """
    if fmt == "json":
        return json.dumps(_circuit_to_dict(c), indent=2)
    if fmt != "qasm2":
        raise ValueError(f"unknown format {fmt!r}")
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{c.n_qubits}];"]
    if c.global_phase:
        lines.insert(2, f"// global phase: {c.global_phase!r}")

    def emit(g: Gate):
        if g.kind == "Rz":
            lines.append(f"rz({g.angle!r}) q[{g.qubits[0]}];")
        elif g.kind == "BasisY":
            q = g.qubits[0]
            lines.append(f"sdg q[{q}];")
            lines.append(f"h q[{q}];")
            lines.append(f"s q[{q}];")
        elif g.kind == "CSWAP":
            for sub in cswap_clifford_t(*g.qubits):
                emit(sub)
        else:
            args = ",".join(f"q[{q}]" for q in g.qubits)
            lines.append(f"{_QASM_FIXED[g.kind]} {args};")

    for g in c.gates:
        emit(g)
    return "\n".join(lines) + "\n"


_QASM_KINDS = {v: k for k, v in _QASM_FIXED.items()}
_QASM_LINE = re.compile(r"^(\w+)\s*(?:\(([^)]*)\))?\s*(.*);$")
_QASM_ARG = re.compile(r"q\[(\d+)\]")


def import_qasm(text: str) -> Circuit:
    """Parse the OpenQASM 2 subset emitted by export_circuit."""
    circ: Circuit | None = None
    phase = 0.0
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("// global phase:"):
            phase = float(line.split(":", 1)[1])
        if not line or line.startswith("//"):
            continue
        if line.startswith("OPENQASM") or line.startswith("include"):
            continue
        m = _QASM_LINE.match(line)
        if not m:
            raise ValueError(f"cannot parse QASM line {line!r}")
        name, param, args = m.groups()
        if name == "qreg":
            size = int(re.search(r"\[(\d+)\]", args if args else line).group(1))
            circ = Circuit(size, [], phase)
            continue
        if circ is None:
            raise ValueError("gate before qreg declaration")
        qubits = [int(x) for x in _QASM_ARG.findall(args)]
        if name == "rz":
            circ.add("Rz", qubits[0], angle=float(param))
        elif name in _QASM_KINDS:
            circ.add(_QASM_KINDS[name], *qubits)
        else:
            raise ValueError(f"unsupported QASM gate {name!r}")
    if circ is None:
        raise ValueError("no qreg declaration found")
    circ.global_phase = phase
    return circ


def import_circuit(text: str) -> Circuit:
    """Inverse of export_circuit for both formats (auto-detected)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _circuit_from_dict(json.loads(text))
    return import_qasm(text)
