"""Classical amicable-pair generating rules.

Both rules produce three candidate values p, q, r from small parameters; a
pair is emitted only when all three are prime, and the pair is then checked
directly against sigma(M) = sigma(N) = M + N using the known factorizations
(2-power times certified primes), independent of the rule's algebra.

All arithmetic is exact at any parameter size; primality of values beyond
2^64 is probabilistic and flagged as such in the outcome.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import arith
from .errors import VerificationError

__all__ = ["CandidatePrime", "RuleOutcome", "thabit", "euler_rule", "scan_rule"]


@dataclass(frozen=True)
class CandidatePrime:
    name: str
    value: int
    is_prime: bool
    proven: bool


@dataclass(frozen=True)
class RuleOutcome:
    rule: str
    params: tuple[int, ...]
    candidates: tuple[CandidatePrime, ...]
    pair: tuple[int, int] | None
    probabilistic: bool

    @property
    def hit(self) -> bool:
        return self.pair is not None


def _outcome(rule: str, params: tuple[int, ...], n: int, p: int, q: int, r: int,
             rounds: int) -> RuleOutcome:
    cands = []
    all_prime = True
    probabilistic = False
    for name, v in (("p", p), ("q", q), ("r", r)):
        verdict = arith.primality(v, rounds)
        cands.append(CandidatePrime(name, v, verdict.is_prime, verdict.proven))
        all_prime &= verdict.is_prime
        if verdict.is_prime and not verdict.proven:
            probabilistic = True
    pair = None
    if all_prime:
        m_val = 2**n * p * q
        n_val = 2**n * r
        # direct sigma check from the factored forms
        sigma_2n = 2 ** (n + 1) - 1
        sig_m = sigma_2n * (p + 1) * (q + 1)
        sig_n = sigma_2n * (r + 1)
        if not (sig_m == sig_n == m_val + n_val):
            raise VerificationError(
                f"{rule}{params}: candidates all prime but sigma check failed"
            )
        pair = (m_val, n_val) if m_val < n_val else (n_val, m_val)
    return RuleOutcome(
        rule=rule,
        params=params,
        candidates=tuple(cands),
        pair=pair,
        probabilistic=probabilistic,
    )


def thabit(n: int, rounds: int = arith.DEFAULT_MR_ROUNDS) -> RuleOutcome:
    """p = 3*2^(n-1) - 1, q = 3*2^n - 1, r = 9*2^(2n-1) - 1.

    When all three are prime, (2^n * p * q, 2^n * r) is an amicable pair.
    n = 1 is rejected: it gives p = 2, and 2^1 * 2 * 5 = 20 with 2^1 * 17 =
    34 is not amicable (sigma(20) = 42 != 54), so accepting it would emit a
    false pair.
    """
    if n < 2:
        raise ValueError(
            "thabit rule needs n >= 2: n = 1 yields p = 2, which is prime but "
            "produces a non-amicable candidate (sigma(20) != 20 + 34)"
        )
    p = 3 * 2 ** (n - 1) - 1
    q = 3 * 2**n - 1
    r = 9 * 2 ** (2 * n - 1) - 1
    return _outcome("thabit", (n,), n, p, q, r, rounds)


def euler_rule(m: int, n: int, rounds: int = arith.DEFAULT_MR_ROUNDS) -> RuleOutcome:
    """p = 2^m*f - 1, q = 2^n*f - 1, r = 2^(n+m)*f^2 - 1 with f = 2^(n-m) + 1.

    Requires 1 <= m < n; m = n - 1 reduces exactly to the thabit rule.
    When all three are prime, (2^n * p * q, 2^n * r) is amicable.
    """
    if not 1 <= m < n:
        raise ValueError("euler rule needs 1 <= m < n")
    f = 2 ** (n - m) + 1
    p = 2**m * f - 1
    q = 2**n * f - 1
    r = 2 ** (n + m) * f * f - 1
    return _outcome("euler", (m, n), n, p, q, r, rounds)


def scan_rule(
    rule: str,
    n_max: int,
    n_min: int = 2,
    rounds: int = arith.DEFAULT_MR_ROUNDS,
) -> list[RuleOutcome]:
    """Evaluate one rule over a parameter range, in deterministic order.

    thabit: n in [n_min, n_max].  euler: all 1 <= m < n <= n_max (n_min
    applies to n).  Hits are the outcomes with outcome.hit set.
    """
    if rule == "thabit":
        if n_min < 2:
            raise ValueError("thabit scan starts at n = 2")
        return [thabit(n, rounds) for n in range(n_min, n_max + 1)]
    if rule == "euler":
        return [
            euler_rule(m, n, rounds)
            for n in range(max(2, n_min), n_max + 1)
            for m in range(1, n)
        ]
    raise ValueError(f"unknown rule {rule!r}")
