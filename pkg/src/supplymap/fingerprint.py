"""Content digests, token-trigram fingerprints, and multiset similarity."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .lexer import TokenStream


@dataclass(frozen=True)
class TrigramFingerprint:
    """Multiset of hashed 3-token windows plus the source token count.

    counts maps a 64-bit window key to its multiplicity. cardinality is
    the multiset size (== max(token_count - 2, 0) under multiset
    semantics; may be smaller under set semantics).
    """

    counts: dict[int, int]
    token_count: int
    cardinality: int

    def is_empty(self) -> bool:
        return self.cardinality == 0


def digest(content: bytes) -> str:
    """SHA-1 hex digest of raw file bytes, used for identical-file matching."""
    return hashlib.sha1(content).hexdigest()


def _window_key(t0: str, t1: str, t2: str) -> int:
    h = hashlib.blake2b(digest_size=8)
    for tok in (t0, t1, t2):
        raw = tok.encode("utf-8", errors="replace")
        h.update(len(raw).to_bytes(4, "big"))
        h.update(raw)
    return int.from_bytes(h.digest(), "big")


def fingerprint(stream: TokenStream, set_semantics: bool = False) -> TrigramFingerprint:
    """Sliding 3-token windows, stride 1, hashed to 64-bit keys.

    set_semantics clamps every multiplicity to 1 (sensitivity switch);
    the default is multiset counting.
    """
    tokens = stream.tokens
    counts: dict[int, int] = {}
    for i in range(len(tokens) - 2):
        key = _window_key(tokens[i], tokens[i + 1], tokens[i + 2])
        if set_semantics:
            counts[key] = 1
        else:
            counts[key] = counts.get(key, 0) + 1
    return TrigramFingerprint(
        counts=counts,
        token_count=len(tokens),
        cardinality=sum(counts.values()),
    )


def similarity(a: TrigramFingerprint, b: TrigramFingerprint) -> float:
    """Multiset Jaccard: |A meet B| / |A join B| with min/max multiplicities.

    Two empty fingerprints compare 1.0 only when their token counts agree
    (both streams too short to window); anything else involving an empty
    side is 0.0.
    """
    if a.cardinality == 0 and b.cardinality == 0:
        return 1.0 if a.token_count == b.token_count else 0.0
    if a.cardinality == 0 or b.cardinality == 0:
        return 0.0
    small, large = (a, b) if len(a.counts) <= len(b.counts) else (b, a)
    inter = 0
    for key, count in small.counts.items():
        other = large.counts.get(key)
        if other is not None:
            inter += count if count < other else other
    union = a.cardinality + b.cardinality - inter
    return inter / union


__all__ = ["TrigramFingerprint", "digest", "fingerprint", "similarity"]
