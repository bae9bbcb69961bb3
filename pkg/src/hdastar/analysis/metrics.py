"""Expansion-order comparison metrics.

Divergence is the mean absolute difference between two traces' first
expansion ordinals over the states both expanded. Premature expansions
count pops that happened before some strictly lower-f state that the
same trace eventually expanded. Comparisons refuse traces recorded
under different tie-break policies (order within an f layer would then
differ for reasons that have nothing to do with work distribution).
"""

from __future__ import annotations

from hdastar.errors import ConfigError, TracePolicyMismatch
from hdastar.trace import ExpansionTrace


def _check_comparable(reference: ExpansionTrace, candidate: ExpansionTrace):
    for key in ("tiebreak", "backend"):
        rv = reference.meta.get(key)
        cv = candidate.meta.get(key)
        if rv is not None and cv is not None and rv != cv:
            raise TracePolicyMismatch(
                f"traces recorded under different {key} policies: {rv} vs {cv}")
    ri = reference.meta.get("instance")
    ci = candidate.meta.get("instance")
    if ri is not None and ci is not None and ri != ci:
        raise ConfigError(f"traces are from different instances: {ri} vs {ci}")


def divergence(reference: ExpansionTrace, candidate: ExpansionTrace) -> float:
    """Mean |N_ref(s) - N_cand(s)| over states expanded by both."""
    _check_comparable(reference, candidate)
    ref = reference.first_ordinals()
    cand = candidate.first_ordinals()
    common = ref.keys() & cand.keys()
    if not common:
        raise ConfigError("traces have no common expanded state")
    return sum(abs(ref[s] - cand[s]) for s in common) / len(common)


def premature_expansions(candidate: ExpansionTrace) -> int:
    """Expansions popped before some strictly lower-f later expansion.

    Only the candidate's own eventual expansion set matters; computed
    with a suffix minimum over the first-expansion sequence.
    """
    first = candidate.first_ordinals()
    f_of = candidate.f_values()
    seq = sorted(first.items(), key=lambda kv: kv[1])
    fs = [f_of[key] for key, _ in seq]
    count = 0
    suffix_min = None
    for f in reversed(fs):
        if suffix_min is not None and suffix_min < f:
            count += 1
        if suffix_min is None or f < suffix_min:
            suffix_min = f
    return count
