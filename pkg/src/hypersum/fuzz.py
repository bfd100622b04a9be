"""Seeded random instances for every identity.

Each instance gets its own ``random.Random`` seeded from (identity, seed,
index), so results do not depend on how instances are scheduled across
threads. Degenerate draws are rejected and redrawn up to a cap.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import kampe, theorems
from .errors import DegenerateParameter, HypersumError, ProvisoViolated
from .parametric import ParametricContext
from .records import VerificationRecord

PARAM_BOUND = 12
DEFAULT_RESAMPLE_CAP = 1000
DEFAULT_MAX_M = 9


class ResampleCapExceeded(HypersumError):
    """No non-degenerate instance was found within the resample cap."""


def random_rational(rng: random.Random, bound: int = PARAM_BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_shifts(rng: random.Random, max_r: int, max_mj: int, max_m: int = DEFAULT_MAX_M):
    r = rng.randint(0, max_r)
    f_list = [random_rational(rng) for _ in range(r)]
    m_list = [rng.randint(1, max_mj) for _ in range(r)]
    if sum(m_list) > max_m:
        raise _Redraw
    return f_list, m_list


class _Redraw(Exception):
    pass


@dataclass(frozen=True)
class IdentitySpec:
    name: str
    anchor: str
    sampler: Callable[[random.Random, dict], dict]
    verifier: Callable[..., VerificationRecord]


def _extended_saalschutz(a, b, c, f_list, m_list, n):
    return theorems.verify_extended_saalschutz(ParametricContext(a, b, c, tuple(f_list), tuple(m_list)), n)


def _rq(rng):
    return random_rational(rng)


def _opt(opts, key, default):
    value = opts.get(key)
    return default if value is None else value


def _sample_classical(rng, opts):
    return {"a": _rq(rng), "b": _rq(rng), "c": _rq(rng), "n": _opt(opts, "n", rng.randint(0, 12))}


def _sample_contiguous(rng, opts):
    return {**_sample_classical(rng, opts), "p": _opt(opts, "p", rng.randint(0, 4))}


def _sample_extended(rng, opts):
    f_list, m_list = random_shifts(rng, 3, 3, _opt(opts, "max_m", DEFAULT_MAX_M))
    return {
        "a": _rq(rng),
        "b": _rq(rng),
        "c": _rq(rng),
        "f_list": f_list,
        "m_list": m_list,
        "n": _opt(opts, "n", rng.randint(0, 12)),
    }


def _sample_linear(rng, opts):
    return {"a": _rq(rng), "b": _rq(rng), "c": _rq(rng), "f": _rq(rng), "n": _opt(opts, "n", rng.randint(0, 12))}


def _sample_vc(rng, opts):
    f_list, m_list = random_shifts(rng, 3, 3, _opt(opts, "max_m", DEFAULT_MAX_M))
    return {"a": _rq(rng), "c": _rq(rng), "f_list": f_list, "m_list": m_list, "n": _opt(opts, "n", rng.randint(0, 12))}


def _sample_ramanujan(rng, opts):
    f_list, m_list = random_shifts(rng, 2, 2, _opt(opts, "max_m", DEFAULT_MAX_M))
    return {
        "p": _opt(opts, "p", rng.randint(0, 1)),
        "n": _opt(opts, "n", rng.choice(theorems.RAMANUJAN_N_SAMPLES)),
        "f_list": f_list,
        "m_list": m_list,
        "order": _opt(opts, "order", 20),
    }


def _sample_ramanujan_closed(rng, opts):
    return {
        "p": _opt(opts, "p", rng.randint(0, 1)),
        "n": _opt(opts, "n", rng.choice(theorems.RAMANUJAN_N_SAMPLES)),
        "f": rng.choice([None, _rq(rng)]),
        "order": _opt(opts, "order", 20),
    }


def _sample_4f3(rng, opts):
    return {"a": _rq(rng), "b": _rq(rng), "n": _opt(opts, "n", rng.randint(0, 12))}


def _rlist(rng, size):
    return [_rq(rng) for _ in range(size)]


def _sample_rearrangement(rng, opts):
    # second-variable list sizes with s - u in {0, 1}
    u = rng.randint(0, 1)
    s = u + rng.randint(0, 1)
    params = kampe.KdFParams(
        alpha=_rlist(rng, rng.randint(0, 2)),
        beta=_rlist(rng, rng.randint(0, 2)),
        a=_rlist(rng, rng.randint(0, 2)),
        b=_rlist(rng, s),
        c=_rlist(rng, rng.randint(0, 2)),
        d=_rlist(rng, u),
    )
    return {
        "params": params,
        "order": _opt(opts, "order", 12),
        "x_sign": rng.choice([1, -1]),
        "y_sign": rng.choice([1, -1]),
    }


def _sample_first(rng, opts):
    f_list, m_list = random_shifts(rng, 2, 2, _opt(opts, "max_m", DEFAULT_MAX_M))
    return {
        "alpha": _rlist(rng, rng.randint(0, 2)),
        "beta": _rlist(rng, rng.randint(0, 2)),
        "a": _rq(rng),
        "b": _rq(rng),
        "c": _rq(rng),
        "f_list": f_list,
        "m_list": m_list,
        "order": _opt(opts, "order", 16),
    }


def _sample_exton(rng, opts):
    return {
        "alpha": _rlist(rng, rng.randint(0, 2)),
        "beta": _rlist(rng, rng.randint(0, 2)),
        "a": _rq(rng),
        "b": _rq(rng),
        "order": _opt(opts, "order", 16),
    }


def _sample_second(rng, opts):
    f_list, m_list = random_shifts(rng, 2, 2, _opt(opts, "max_m", DEFAULT_MAX_M))
    return {
        "alpha": _rq(rng),
        "beta": _rq(rng),
        "a": _rq(rng),
        "c": _rq(rng),
        "d": _rq(rng),
        "f_list": f_list,
        "m_list": m_list,
        "order": _opt(opts, "order", 16),
    }


def _sample_second_closed(rng, opts):
    return {
        "alpha": _rq(rng),
        "beta": _rq(rng),
        "a": _rq(rng),
        "c": _rq(rng),
        "d": _rq(rng),
        "f": rng.choice([None, _rq(rng)]),
        "order": _opt(opts, "order", 16),
    }


def _sample_miller(rng, opts):
    f_list, m_list = random_shifts(rng, 2, 2, _opt(opts, "max_m", DEFAULT_MAX_M))
    return {
        "alpha": _rlist(rng, rng.randint(0, 2)),
        "beta": _rlist(rng, rng.randint(0, 2)),
        "a": _rq(rng),
        "b": _rq(rng),
        "f_list": f_list,
        "m_list": m_list,
        "order": _opt(opts, "order", 16),
    }


def _sample_euler(rng, opts):
    return {"a": _rq(rng), "b": _rq(rng), "c": _rq(rng), "order": _opt(opts, "order", 16)}


IDENTITIES: dict[str, IdentitySpec] = {
    spec.name: spec
    for spec in [
        IdentitySpec(
            "saalschutz-classical",
            "3F2(-n,a,b; c,-n-sigma; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)",
            _sample_classical,
            theorems.verify_saalschutz_classical,
        ),
        IdentitySpec(
            "saalschutz-contiguous",
            "3F2(-n,a,b; c,p-n-sigma; 1) = ratio * 3F2(-p,-n,c-a-b-p; c-a-p,c-b-p; 1)",
            _sample_contiguous,
            theorems.verify_saalschutz_contiguous,
        ),
        IdentitySpec(
            "extended-saalschutz",
            "(r+3)F(r+2)(-n,a,b,(f+m); c,m-n-sigma,(f); 1) = prefactor * Qhat_m(-n)",
            _sample_extended,
            _extended_saalschutz,
        ),
        IdentitySpec(
            "extended-saalschutz-linear",
            "4F3(-n,a,b,f+1; c,1-n-sigma,f; 1) = prefactor * (1 + n/eta)",
            _sample_linear,
            theorems.verify_extended_saalschutz_linear,
        ),
        IdentitySpec(
            "extended-vandermonde-chu",
            "(r+2)F(r+1)(-n,a,(f+m); c,(f); 1) = (c-a-m)_n/(c)_n * Q_m(-n)",
            _sample_vc,
            theorems.verify_extended_vandermonde_chu,
        ),
        IdentitySpec(
            "ramanujan-extension",
            "(1-x^2)^(-1/2) (r+2)F(r+1)(-n+p/2,n+p/2,(f+m); p+1/2+m,(f); x^2) = (m+2)F(m+1)(...; x^2)",
            _sample_ramanujan,
            theorems.verify_ramanujan_extension,
        ),
        IdentitySpec(
            "ramanujan-closed-form",
            "r=0 and r=1 quadratic transformations with printed eta",
            _sample_ramanujan_closed,
            theorems.verify_ramanujan_closed_form,
        ),
        IdentitySpec(
            "known-4f3",
            "4F3(-n,a,b,1+a/2; 1+a-b,1+2b-n,a/2; 1) = (a-2b)_n (-b)_n / ((1+a-b)_n (-2b)_n)",
            _sample_4f3,
            theorems.verify_known_4f3_specialization,
        ),
        IdentitySpec(
            "kdf-rearrangement",
            "KdF(x,y) = sum_n y^n ... F(-n,(a),(1-d-n); (c),(1-b-n); (-1)^(s-u+1) x/y) at x=y",
            _sample_rearrangement,
            kampe.verify_kdf_rearrangement,
        ),
        IdentitySpec(
            "first-reduction",
            "KdF(x,x) with a,b,(f+m); c,(f); c-a-b-m = (p+m+2)F(q+m+1)(..., c-a-m, c-b-m, (eta+1); ..., c, (eta); x)",
            _sample_first,
            kampe.verify_first_reduction,
        ),
        IdentitySpec(
            "exton-reduction",
            "KdF(x,x) with a,b,1+a/2; 1+a-b,a/2; -2b = (p+2)F(q+1)(..., a-2b, -b; ..., 1+a-b; x)",
            _sample_exton,
            kampe.verify_exton_reduction,
        ),
        IdentitySpec(
            "second-reduction",
            "KdF(x,x) with alpha; beta; a,beta-d,(f+m); c,(f); d = (1-x)^(-alpha) (m+3)F(m+2)(...; x/(x-1))",
            _sample_second,
            kampe.verify_second_reduction,
        ),
        IdentitySpec(
            "second-reduction-closed-form",
            "r=0 (3F2 with c-a) and r=1 (xi = (c-a-1)f/(f-a)) second reductions",
            _sample_second_closed,
            kampe.verify_second_reduction_closed_form,
        ),
        IdentitySpec(
            "miller-reduction",
            "KdF(-x,x) with a,(f+m); b,(f) = F(..., b-a-m, (xi+1); ..., b, (xi); x)",
            _sample_miller,
            kampe.verify_miller_reduction,
        ),
        IdentitySpec(
            "euler-transformation",
            "2F1(a,b;c;x) = (1-x)^(-a) 2F1(a,c-b;c;x/(x-1))",
            _sample_euler,
            kampe.verify_euler_transformation,
        ),
    ]
}


def instance_rng(identity: str, seed: int, index: int) -> random.Random:
    return random.Random(f"{identity}:{seed}:{index}")


def run_instance(
    identity: str,
    seed: int,
    index: int,
    opts: dict | None = None,
    resample_cap: int = DEFAULT_RESAMPLE_CAP,
) -> VerificationRecord:
    spec = IDENTITIES[identity]
    opts = opts or {}
    rng = instance_rng(identity, seed, index)
    for _ in range(resample_cap):
        try:
            kwargs = spec.sampler(rng, opts)
            return spec.verifier(**kwargs)
        except (_Redraw, DegenerateParameter, ProvisoViolated):
            continue
    raise ResampleCapExceeded(f"{identity}: instance {index} still degenerate after {resample_cap} draws")


def run_fuzz(
    identity: str,
    trials: int,
    seed: int = 0,
    *,
    threads: int = 1,
    opts: dict | None = None,
    resample_cap: int = DEFAULT_RESAMPLE_CAP,
) -> list[VerificationRecord]:
    """``trials`` records in instance-index order, whatever the thread count."""
    if identity not in IDENTITIES:
        raise KeyError(f"unknown identity {identity!r}")

    def one(index):
        return run_instance(identity, seed, index, opts, resample_cap)

    if threads <= 1:
        return [one(i) for i in range(trials)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(one, range(trials)))
