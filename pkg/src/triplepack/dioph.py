"""Number-theoretic utilities: CRT, prime-power factorization, and a
constructive solver for systems of congruences plus avoidance
constraints (x must miss given residues modulo further prime powers).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from sympy import factorint
from sympy.ntheory.modular import crt as _sympy_crt

from .errors import InvalidParameterError, NonCoprimeModuliError


def crt(pairs) -> int:
    """Least positive x with x = a (mod m) for every (m, a) pair.

    Moduli must be pairwise coprime.
    """
    pairs = list(pairs)
    if not pairs:
        raise InvalidParameterError("need at least one congruence")
    moduli = [m for m, _ in pairs]
    if any(m < 1 for m in moduli):
        raise InvalidParameterError("moduli must be positive")
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            if gcd(moduli[i], moduli[j]) != 1:
                raise NonCoprimeModuliError(
                    f"moduli {moduli[i]} and {moduli[j]} are not coprime"
                )
    x, modulus = _sympy_crt(moduli, [a for _, a in pairs])
    x = int(x) % int(modulus)
    return x if x > 0 else x + int(modulus)


def prime_power_split(m: int, exclude_bases=()) -> list:
    """Factor m into [(prime, power), ...], primes ascending, optionally
    dropping the given prime bases (the constructions here routinely
    discard powers of 2 and 3)."""
    if m < 1:
        raise InvalidParameterError("need m >= 1")
    return [
        (int(p), int(e))
        for p, e in sorted(factorint(m).items())
        if p not in exclude_bases
    ]


def is_prime_power(m: int) -> bool:
    return m >= 2 and len(factorint(m)) == 1


@dataclass(frozen=True)
class DiophInstance:
    """Equalities x = a_i (mod p_i) plus avoidances x != b (mod q_j) for
    each forbidden residue b.

    All p_i and q_j are prime powers with pairwise distinct prime bases;
    each q_j is at least 4 and forbids between 1 and q_j - 1 residues.
    The classical statement forbids exactly three residues per q_j; any
    shorter or longer list works by the same counting argument as long
    as some residue stays allowed.
    """

    equalities: tuple  # ((p, a), ...)
    avoidances: tuple  # ((q, (b1, b2, ...)), ...)

    def __post_init__(self):
        eqs = tuple((int(p), int(a)) for p, a in self.equalities)
        avs = []
        for entry in self.avoidances:
            q = int(entry[0])
            rest = entry[1]
            if isinstance(rest, int):  # (q, b, c, d) form
                rest = entry[1:]
            avs.append((q, tuple(int(b) for b in rest)))
        object.__setattr__(self, "equalities", eqs)
        object.__setattr__(self, "avoidances", tuple(avs))

        bases = []
        for p, a in self.equalities:
            if not is_prime_power(p):
                raise InvalidParameterError(f"{p} is not a prime power")
            if not 0 <= a < p:
                raise InvalidParameterError(f"residue {a} out of range mod {p}")
            bases.append(next(iter(factorint(p))))
        for q, forb in self.avoidances:
            if not is_prime_power(q):
                raise InvalidParameterError(f"{q} is not a prime power")
            if q < 4:
                raise InvalidParameterError(f"avoidance modulus {q} < 4")
            if not 1 <= len(forb) < q:
                raise InvalidParameterError(
                    f"need between 1 and {q - 1} forbidden residues mod {q}"
                )
            if len(set(forb)) != len(forb) or any(not 0 <= b < q for b in forb):
                raise InvalidParameterError(f"bad forbidden residues mod {q}")
            bases.append(next(iter(factorint(q))))
        if len(set(bases)) != len(bases):
            raise InvalidParameterError("moduli must have pairwise distinct bases")

    def satisfied_by(self, x: int) -> bool:
        return (
            x >= 1
            and all(x % p == a for p, a in self.equalities)
            and all(x % q not in forb for q, forb in self.avoidances)
        )


def solve_avoidance(inst: DiophInstance) -> int:
    """Constructive positive solution of a DiophInstance.

    Avoidance moduli below the window W = (total forbidden count) + 1
    are converted to equalities by choosing an allowed residue; a CRT
    pass gives x = r (mod N'); for the remaining large moduli some
    multiplier h in 1..W avoids all lifted residues by counting.  The
    result is then reduced to the least positive representative of the
    class r (mod N') that still satisfies everything, and is at most
    N' * (total forbidden count + 2).
    """
    total_forbidden = sum(len(forb) for _, forb in inst.avoidances)
    window = total_forbidden + 1

    congruences = list(inst.equalities)
    large = []
    for q, forb in sorted(inst.avoidances):
        if q < window:
            allowed = next(e for e in range(q) if e not in forb)
            congruences.append((q, allowed))
        else:
            large.append((q, forb))

    if congruences:
        n_prime = prod(m for m, _ in congruences)
        r = crt(congruences) % n_prime
    else:
        n_prime, r = 1, 0

    if large:
        blocked = set()
        for q, forb in large:
            inv = pow(n_prime, -1, q)
            for b in forb:
                lifted = (b - r) * inv % q
                if lifted <= window:
                    blocked.add(lifted)
        h = next(h for h in range(1, window + 1) if h not in blocked)
        x = n_prime * h + r
    else:
        x = r if r > 0 else n_prime

    assert inst.satisfied_by(x), "constructive solution failed verification"
    # least positive representative of the class that still checks out
    for candidate in range(x % n_prime or n_prime, x + 1, n_prime):
        if inst.satisfied_by(candidate):
            x = candidate
            break
    assert x <= n_prime * (total_forbidden + 2)
    return x
