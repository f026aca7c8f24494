"""Exact cokernel statistics of random matrices over finite chain rings and F_q.

The heavy lifting happens in the C++ extension ``cokerdist._core``; this package
adds small conveniences for building event specs from plain dicts.
"""

import json as _json

from cokerdist._core import (  # noqa: F401
    __version__,
    aut_count,
    bn_coeffs,
    brute_force_aut_count,
    cokernel_type,
    conjugate,
    exact_partition_prob,
    finite_n_event_prob,
    formula,
    is_irreducible,
    limit_product,
    make_field,
    p_part_partition,
    partitions_up_to,
    run_verification,
    smith_exponents,
)
from cokerdist import _core as _core


def enumerate_event(spec, guard=1 << 24, workers=1):
    """Exact exhaustive count of a matrix event.

    ``spec`` is a dict like
    ``{"ctx": {"kind": "zp", "p": 2, "level": 2}, "n": 1,
       "terms": [{"poly": [0, 1], "pred": "coker-type-is", "target": [1]}]}``.
    Returns ``(hits, total)``.
    """
    return _core.enumerate_event(_json.dumps(spec), guard, workers)


def mc_estimate(spec, samples, seed, workers=1, chunk_size=4096):
    """Seeded Monte-Carlo estimate of a matrix event; deterministic per seed."""
    return _core.mc_estimate(_json.dumps(spec), samples, seed, workers, chunk_size)


def smith(ring, n, entries):
    """Smith exponents over a quotient ring described by a dict."""
    return _core.smith_exponents(_json.dumps(ring), n, entries)


def coker_type(ring, n, entries, exact=True):
    """Cokernel type partition over a quotient ring described by a dict."""
    return _core.cokernel_type(_json.dumps(ring), n, entries, exact)
