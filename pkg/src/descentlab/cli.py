"""Command-line front end.

Every table is emitted together with metadata (p, n, tool version, total
order id).  JSON is the lossless format: compositions are integer arrays and
coefficients are exact decimal strings.
"""

import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import click

from . import __version__
from .brauer import MissingData, load_brauer_table
from .combinat import ORDER_ID, enumerate_compositions, enumerate_partitions

EXIT_OK, EXIT_INVARIANT, EXIT_MISSING, EXIT_CONFIG = 0, 2, 3, 4
ALLOWED_P = (0, 2, 3, 5, 7)
FORMATS = ("json", "csv", "pretty")
RANK_LIMIT = 8


class ConfigError(ValueError):
    pass


class InvariantFailure(RuntimeError):
    pass


@dataclass
class RunConfig:
    command: str
    n: int = None
    p: int = 0
    primes: tuple = (0, 2, 3)
    q: tuple = None
    mu: tuple = None
    format: str = "json"
    out: str = None
    jobs: int = 1
    allow_large: bool = False
    extra: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.n is not None and not 1 <= self.n <= 9:
            raise ConfigError(f"n must lie in [1, 9], got {self.n}")
        for p in (self.p, *self.primes):
            if p not in ALLOWED_P:
                raise ConfigError(f"p must be one of {ALLOWED_P}, got {p}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")
        if self.jobs < 1:
            raise ConfigError("jobs must be positive")
        if self.q is not None and self.n is not None and sum(self.q) != self.n:
            raise ConfigError(f"q={self.q} is not a composition of n={self.n}")

    def guard_rank(self, n):
        if n > RANK_LIMIT and not self.allow_large:
            raise ConfigError(f"n={n} needs group-algebra ranks; pass --allow-large to proceed")

    def metadata(self, **more):
        meta = {"p": self.p, "n": self.n, "version": __version__, "order_id": ORDER_ID}
        meta.update(more)
        return meta


def parse_parts(text):
    if text is None:
        return None
    text = text.strip().strip("()[]")
    try:
        parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise ConfigError(f"cannot parse {text!r} as a list of positive integers")
    if not parts or any(x < 1 for x in parts):
        raise ConfigError(f"{text!r} is not a composition")
    return parts


def parse_word(text):
    text = text.strip()
    if "," in text:
        return parse_parts(text)
    return tuple(int(c) for c in text)


def exact(c):
    """Exact decimal string for a scalar."""
    return str(Fraction(c))


# ---------------------------------------------------------------------------
# emitters


def _cell(v):
    if isinstance(v, dict) and set(v) == {"composition", "coefficient"}:
        return f"{v['coefficient']}*Xi{_cell(v['composition'])}"
    if isinstance(v, (list, tuple)):
        if v and isinstance(v[0], dict):
            return " + ".join(_cell(x) for x in v)
        return "(" + ",".join(_cell(x) for x in v) + ")"
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return str(v)


def render(meta, rows, columns, fmt):
    if fmt == "json":
        return json.dumps({"metadata": meta, "rows": rows}, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        buf.write("# " + " ".join(f"{k}={_cell(v)}" for k, v in sorted(meta.items())) + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([_cell(r[c]) for c in columns])
        return buf.getvalue()
    cells = [[_cell(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = [" ".join(f"{k}={_cell(v)}" for k, v in sorted(meta.items()))]
    lines.append("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def emit(cfg, meta, rows, columns):
    text = render(meta, rows, columns, cfg.format)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def parallel_map(fn, items, jobs):
    """Map preserving input order, so output does not depend on ``jobs``."""
    items = list(items)
    if jobs == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# commands


def cmd_idempotents(cfg):
    from .modidem import check_idempotent_set, modular_idempotents
    from .descent import ordinary_idempotents
    n, p = cfg.n, cfg.p
    rows = []
    if p == 0:
        idem = ordinary_idempotents(n)
        failures = []
    else:
        result = modular_idempotents(n, p)
        idem, failures = result.idempotents, check_idempotent_set(result)
    for lam, e in idem.items():
        rows.append({"partition": list(lam),
                     "terms": [{"composition": list(q), "coefficient": exact(c)} for q, c in e.items()]})
    if failures:
        raise InvariantFailure("; ".join(failures))
    return cfg.metadata(), rows, ["partition", "terms"]


def _lie_row(args):
    from .higherlie import lie_dimension
    lam, primes = args
    return {"partition": list(lam), **{f"p={p}": lie_dimension(lam, p) for p in primes}}


def cmd_lie_dims(cfg):
    cfg.guard_rank(cfg.n)
    primes = cfg.primes
    items = [(lam, primes) for lam in enumerate_partitions(cfg.n)]
    rows = parallel_map(_lie_row, items, cfg.jobs)
    return cfg.metadata(primes=list(primes)), rows, ["partition"] + [f"p={p}" for p in primes]


def _xi_row(args):
    from .pivots import conjecture_checker
    lam, mu, p = args
    r = conjecture_checker(lam, mu, p)
    return {"lambda": list(lam), "mu": list(mu), "rank": r.rank,
            "predicted": r.predicted, "verdict": r.verdict}


def cmd_xi_table(cfg):
    from .modidem import regular_order
    if cfg.p == 0:
        raise ConfigError("xi-table needs a prime p")
    cfg.guard_rank(cfg.n)
    mus = [cfg.mu] if cfg.mu else regular_order(cfg.n, cfg.p)[::-1]
    lams = [cfg.q] if cfg.q else enumerate_partitions(cfg.n)
    items = [(lam, mu, cfg.p) for lam in lams for mu in mus]
    rows = parallel_map(_xi_row, items, cfg.jobs)
    if any(r["verdict"] != "match" for r in rows):
        emit(cfg, cfg.metadata(), rows, ["lambda", "mu", "rank", "predicted", "verdict"])
        raise InvariantFailure("census prediction failed for some entries")
    return cfg.metadata(), rows, ["lambda", "mu", "rank", "predicted", "verdict"]


def cmd_multiplicities(cfg):
    from .higherlie import de_multiplicities, tilting_multiplicities
    q, p = cfg.q, cfg.p
    n = sum(q)
    cfg.n = n
    table = load_brauer_table(p, n)
    m = tilting_multiplicities(q, p, table)
    rows = [{"gamma": list(g), "multiplicity": m[g], "kind": "tilting"} for g in table.labels]
    meta = cfg.metadata(q=list(q))
    if len(q) == 1 and (p == 0 or n % p):
        de = de_multiplicities(n, p, table)
        rows += [{"gamma": list(g), "multiplicity": v, "kind": "projective"}
                 for g, v in de.multiplicities.items()]
        meta["class_convention"] = de.convention
    return meta, rows, ["kind", "gamma", "multiplicity"]


def cmd_express(cfg):
    from .pivots import express_in_basis
    word = cfg.extra["word"]
    q = cfg.q
    if sum(q) != len(word):
        raise ConfigError("q and the word have different sizes")
    cfg.n = len(word)
    cfg.guard_rank(cfg.n)
    coords = express_in_basis(q, word, cfg.p)
    from .perms import rco_key
    rows = [{"word": list(w), "coefficient": exact(c)} for w, c in sorted(coords.items(), key=lambda t: rco_key(t[0]))]
    return cfg.metadata(q=list(q), sigma=list(word)), rows, ["word", "coefficient"]


def cmd_pivots(cfg):
    from .perms import check_perm
    from .pivots import fiber, phi_inverse, pivot_decompose, upsilon
    word = check_perm(cfg.extra["word"])
    cfg.n = len(word)
    d = pivot_decompose(word)
    row = {"word": list(word), "pivots": list(d.pivots),
           "pivot_words": [list(x) for x in d.words], "cycle_type": list(d.cycle_type),
           "phi_inverse": list(phi_inverse(word))}
    columns = ["word", "pivots", "pivot_words", "cycle_type", "phi_inverse"]
    if cfg.q:
        if sum(cfg.q) != len(word):
            raise ConfigError("q and the word have different sizes")
        row["upsilon"] = list(upsilon(cfg.q, word))
        try:
            row["fiber"] = [list(w) for w in fiber(cfg.q, word)]
        except ValueError:
            row["fiber"] = None
        columns += ["upsilon", "fiber"]
    return cfg.metadata(q=list(cfg.q) if cfg.q else None), [row], columns


# check suites: each yields (name, ok, detail); the runner stops at the first failure


def _suite_idempotents(cfg):
    from .modidem import check_idempotent_set, modular_idempotents
    for n in range(1, cfg.n + 1):
        failures = check_idempotent_set(modular_idempotents(n, cfg.p))
        yield f"idempotents n={n} p={cfg.p}", not failures, failures[:1]


def _suite_structure(cfg):
    from .algebra import algebra_multiply
    from .descent import DescentVector, xi_expand
    for n in range(1, cfg.n + 1):
        for r in enumerate_compositions(n):
            for q in enumerate_compositions(n):
                lhs = (DescentVector.xi(r) * DescentVector.xi(q)).expand()
                ok = lhs == algebra_multiply(xi_expand(r), xi_expand(q))
                yield f"structure r={r} q={q}", ok, {"r": list(r), "q": list(q)}


def _suite_basis(cfg):
    from .algebra import right_ideal_rank
    from .pivots import b_set, xi_element
    for n in range(1, cfg.n + 1):
        for q in enumerate_compositions(n):
            r = right_ideal_rank(xi_element(q, cfg.p))
            yield f"basis q={q} p={cfg.p}", r == len(b_set(q)), {"rank": r, "expected": len(b_set(q))}


def _suite_fibers(cfg):
    from .perms import all_perms
    from .pivots import b_set, fiber
    for n in range(1, cfg.n + 1):
        for q in enumerate_compositions(n):
            seen = [w for v in b_set(q) for w in fiber(q, v, verify=False)]
            ok = sorted(seen) == list(all_perms(n))
            yield f"fibers q={q}", ok, {"q": list(q)}


def _suite_lie_dims(cfg):
    from .golden import reference_lie_dimensions
    from .higherlie import lie_dimension
    for (lam, p), d in sorted(reference_lie_dimensions().items()):
        if sum(lam) <= cfg.n:
            got = lie_dimension(lam, p)
            yield f"lie-dim {lam} p={p}", got == d, {"got": got, "expected": d}


SUITES = {
    "idempotents": _suite_idempotents,
    "structure": _suite_structure,
    "basis": _suite_basis,
    "fibers": _suite_fibers,
    "lie-dims": _suite_lie_dims,
}


def cmd_check(cfg):
    suite = cfg.extra["suite"]
    if suite not in SUITES:
        raise ConfigError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    if suite in ("idempotents",) and cfg.p == 0:
        raise ConfigError("the idempotents suite needs a prime p")
    cfg.guard_rank(cfg.n)
    rows = []
    for name, ok, detail in SUITES[suite](cfg):
        rows.append({"check": name, "status": "pass" if ok else "fail"})
        if not ok:
            emit(cfg, cfg.metadata(suite=suite), rows, ["check", "status"])
            raise InvariantFailure(f"{name}: counterexample {detail}")
    return cfg.metadata(suite=suite), rows, ["check", "status"]


# ---------------------------------------------------------------------------
# click wiring


def common(f):
    f = click.option("--allow-large", is_flag=True, help=f"Permit n > {RANK_LIMIT} for rank computations.")(f)
    f = click.option("--jobs", default=1, show_default=True, type=int, help="Worker processes.")(f)
    f = click.option("--out", type=click.Path(dir_okay=False), help="Write output to a file.")(f)
    f = click.option("--format", "fmt", default="json", show_default=True, help="json, csv or pretty.")(f)
    f = click.option("--mu", help="p-regular partition, e.g. 4,1.")(f)
    f = click.option("--q", help="Composition, e.g. 2,2,1.")(f)
    f = click.option("--p", default="0", show_default=True, help="Characteristic (0 or a prime).")(f)
    f = click.option("--n", type=int, help="Degree of the symmetric group.")(f)
    return f


def run(command, handler, n, p, q, mu, fmt, out, jobs, allow_large, **extra):
    try:
        primes = tuple(int(x) for x in str(p).split(",") if x != "")
        if not primes:
            raise ConfigError("empty --p")
        qq = parse_parts(q)
        if n is None and qq is not None:
            n = sum(qq)
        cfg = RunConfig(command, n=n, p=primes[0], primes=primes, q=qq, mu=parse_parts(mu),
                        format=fmt, out=out, jobs=jobs, allow_large=allow_large, extra=extra)
        meta, rows, columns = handler(cfg)
        emit(cfg, meta, rows, columns)
    except (ConfigError, click.BadParameter) as exc:
        click.echo(f"configuration error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    except ValueError as exc:
        click.echo(f"configuration error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    except MissingData as exc:
        click.echo(f"missing data: {exc}", err=True)
        sys.exit(EXIT_MISSING)
    except (InvariantFailure, AssertionError) as exc:
        click.echo(f"invariant failure: {exc}", err=True)
        sys.exit(EXIT_INVARIANT)


def _need(value, name):
    if value is None:
        click.echo(f"configuration error: --{name} is required", err=True)
        sys.exit(EXIT_CONFIG)


@click.group()
@click.version_option(__version__)
def main():
    """Descent algebras, modular idempotents and higher Lie modules."""


@main.command()
@common
def idempotents(n, **kw):
    """Orthogonal primitive idempotents of the descent algebra."""
    _need(n, "n")
    run("idempotents", cmd_idempotents, n, **kw)


@main.command("lie-dims")
@common
def lie_dims(n, **kw):
    """Dimensions of omega_lam F S_n for every partition lam of n (--p may list several)."""
    _need(n, "n")
    if kw["p"] == "0":
        kw["p"] = "0,2,3"
    run("lie-dims", cmd_lie_dims, n, **kw)


@main.command("xi-table")
@common
def xi_table(n, **kw):
    """Ranks of Xi^lam e_mu F S_n against the cycle-type census."""
    _need(n, "n")
    run("xi-table", cmd_xi_table, n, **kw)


@main.command()
@common
def multiplicities(n, **kw):
    """Tilting multiplicities of L^q(V) (and projective ones for q = (n))."""
    _need(kw["q"], "q")
    run("multiplicities", cmd_multiplicities, n, **kw)


@main.command()
@click.argument("suite")
@common
def check(suite, n, **kw):
    """Run a verification suite: idempotents, structure, basis, fibers, lie-dims."""
    _need(n, "n")
    run("check", cmd_check, n, suite=suite, **kw)


@main.command()
@click.argument("word")
@common
def express(word, n, **kw):
    """Coordinates of Xi^q WORD in the pivot basis."""
    _need(kw["q"], "q")
    try:
        w = parse_word(word)
    except ValueError:
        click.echo(f"configuration error: bad word {word!r}", err=True)
        sys.exit(EXIT_CONFIG)
    run("express", cmd_express, n, word=w, **kw)


@main.command()
@click.argument("word")
@common
def pivots(word, n, **kw):
    """Pivot decomposition of WORD; with --q also its image and fiber."""
    try:
        w = parse_word(word)
    except ValueError:
        click.echo(f"configuration error: bad word {word!r}", err=True)
        sys.exit(EXIT_CONFIG)
    run("pivots", cmd_pivots, n, word=w, **kw)


if __name__ == "__main__":
    main()
