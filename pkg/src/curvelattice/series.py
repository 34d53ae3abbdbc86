"""Exact multivariate Laurent polynomials and rational series.

:class:`MultiLaurent` is a sparse map from exponent vectors to integer
coefficients over a fixed variable tuple (e.g. ``("T1","T2","Q","h")``).
:class:`RationalSeries` is a Laurent numerator over a product of factors
``(1 − monomial)^mult``.

Display uses a fixed canonical order — total degree in the T/t block first,
then the Q/q exponent, then the h exponent — so rendered forms are
byte-stable, e.g. ``1 - T*Q + T^3*Q^-1 - T^5*Q + T^6``.
"""

from __future__ import annotations

from dataclasses import dataclass

Exps = tuple[int, ...]


class MultiLaurent:
    def __init__(self, variables, terms=None) -> None:
        self.vars: tuple[str, ...] = tuple(variables)
        self.terms: dict[Exps, int] = {}
        if terms:
            for e, c in dict(terms).items():
                if c:
                    self.terms[tuple(e)] = c

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, variables) -> "MultiLaurent":
        return cls(variables)

    @classmethod
    def const(cls, variables, c: int) -> "MultiLaurent":
        v = tuple(variables)
        return cls(v, {(0,) * len(v): c} if c else {})

    @classmethod
    def monomial(cls, variables, exps, c: int = 1) -> "MultiLaurent":
        return cls(variables, {tuple(exps): c} if c else {})

    # -- ring ops -----------------------------------------------------------
    def _check(self, other: "MultiLaurent") -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other: "MultiLaurent") -> "MultiLaurent":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiLaurent(self.vars, out)

    def __sub__(self, other: "MultiLaurent") -> "MultiLaurent":
        return self + (-other)

    def __neg__(self) -> "MultiLaurent":
        return MultiLaurent(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "MultiLaurent") -> "MultiLaurent":
        self._check(other)
        out: dict[Exps, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiLaurent(self.vars, out)

    def scale(self, k: int) -> "MultiLaurent":
        return MultiLaurent(self.vars, {e: k * c for e, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def filter(self, keep) -> "MultiLaurent":
        return MultiLaurent(
            self.vars, {e: c for e, c in self.terms.items() if keep(e)}
        )

    def map_terms(self, new_vars, fn) -> "MultiLaurent":
        """fn(exps, coeff) -> (new_exps, new_coeff) or None to drop."""
        out: dict[Exps, int] = {}
        for e, c in self.terms.items():
            res = fn(e, c)
            if res is None:
                continue
            ne, nc = res
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + nc
        return MultiLaurent(new_vars, out)

    # -- variable geometry --------------------------------------------------
    def var_index(self, name: str) -> int:
        return self.vars.index(name)

    def block(self, prefix: str) -> list[int]:
        """Indices of variables named prefix or prefix+digits (the T/t block)."""
        out = []
        for i, v in enumerate(self.vars):
            if v == prefix or (v.startswith(prefix) and v[len(prefix):].isdigit()):
                out.append(i)
        return out

    # -- rendering ----------------------------------------------------------
    def _sort_key(self, e: Exps):
        tblock = self.block("T") or self.block("t")
        qidx = [i for i in (self.block("Q") + self.block("q")) if i not in tblock]
        hidx = self.block("h")
        tdeg = sum(e[i] for i in tblock)
        q = tuple(e[i] for i in qidx)
        h = tuple(e[i] for i in hidx)
        texps = tuple(e[i] for i in tblock)
        return (tdeg, texps, q, h)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=self._sort_key):
            c = self.terms[e]
            factors = []
            for name, k in zip(self.vars, e):
                if k == 0:
                    continue
                factors.append(name if k == 1 else f"{name}^{k}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiLaurent({self.vars}, {self})"


# ---------------------------------------------------------------------------
# Rational series


@dataclass(frozen=True)
class RationalSeries:
    """numerator / ∏ (1 − monomial)^mult over the numerator's variables."""

    numerator: MultiLaurent
    denominator: tuple[tuple[Exps, int], ...] = ()
    truncated: bool = False  # set when a geometric tail could not be certified

    def denominator_poly(self) -> MultiLaurent:
        out = MultiLaurent.const(self.numerator.vars, 1)
        for exps, mult in self.denominator:
            factor = MultiLaurent.const(self.numerator.vars, 1) - (
                MultiLaurent.monomial(self.numerator.vars, exps)
            )
            for _ in range(mult):
                out = out * factor
        return out

    def expand(self, keep) -> MultiLaurent:
        """Truncated power-series expansion; ``keep(exps)`` bounds the region
        (must be downward-closed along every denominator monomial)."""
        out = self.numerator.filter(lambda e: True)
        for exps, mult in self.denominator:
            for _ in range(mult):
                out = _geom_multiply(out, exps, keep)
        return out.filter(keep)

    def equals(self, other: "RationalSeries") -> bool:
        a = self.numerator * other.denominator_poly()
        b = other.numerator * self.denominator_poly()
        return a == b

    def reduce(self) -> "RationalSeries":
        """Cancel denominator factors that divide the numerator exactly."""
        num = self.numerator
        den: list[tuple[Exps, int]] = []
        for exps, mult in self.denominator:
            while mult > 0:
                q = divide_by_one_minus(num, exps)
                if q is None:
                    break
                num = q
                mult -= 1
            if mult:
                den.append((exps, mult))
        return RationalSeries(num, tuple(den), self.truncated)

    def __str__(self) -> str:
        if not self.denominator:
            return str(self.numerator)
        dfactors = []
        for exps, mult in self.denominator:
            mono = str(MultiLaurent.monomial(self.numerator.vars, exps))
            f = f"(1 - {mono})"
            dfactors.append(f if mult == 1 else f"{f}^{mult}")
        return f"({self.numerator}) / {'*'.join(dfactors)}"


def _geom_multiply(ml: MultiLaurent, exps: Exps, keep) -> MultiLaurent:
    """Multiply by Σ_k monomial^k, truncated by keep."""
    out: dict[Exps, int] = {}
    for e, c in ml.terms.items():
        cur = e
        while keep(cur):
            out[cur] = out.get(cur, 0) + c
            cur = tuple(a + b for a, b in zip(cur, exps))
    return MultiLaurent(ml.vars, out)


def divide_by_one_minus(ml: MultiLaurent, exps: Exps) -> MultiLaurent | None:
    """Exact quotient ml / (1 − x^exps), or None when not a polynomial."""
    tot = sum(exps)
    if tot <= 0:
        raise ValueError("denominator monomial must have positive total degree")
    if ml.is_zero():
        return ml
    maxdeg = max(sum(e) for e in ml.terms)
    rem = dict(ml.terms)
    quot: dict[Exps, int] = {}
    while rem:
        e = min(rem, key=lambda x: (sum(x), x))
        if sum(e) > maxdeg:
            return None
        c = rem.pop(e)
        quot[e] = quot.get(e, 0) + c
        up = tuple(a + b for a, b in zip(e, exps))
        nv = rem.get(up, 0) + c
        if nv:
            rem[up] = nv
        else:
            rem.pop(up, None)
    return MultiLaurent(ml.vars, quot)


def rationalize(
    trunc: MultiLaurent,
    denominator: tuple[tuple[Exps, int], ...],
    q_var: str,
    n_max: int,
    window: int,
) -> RationalSeries:
    """Recover numerator = trunc · ∏(1−mono)^mult from a series whose
    coefficients are exact for all q_var-exponents ≤ n_max.

    Numerator terms at q-exponent ≤ n_max are exact; the tail is certified
    complete when a clean vanishing window of the requested width sits below
    n_max.  Otherwise the flagged, uncertified form is returned.
    """
    qi = trunc.var_index(q_var)
    num = trunc
    one = MultiLaurent.const(trunc.vars, 1)
    for exps, mult in denominator:
        factor = one - MultiLaurent.monomial(trunc.vars, exps)
        for _ in range(mult):
            num = num * factor
    exact = num.filter(lambda e: e[qi] <= n_max)
    if exact.is_zero():
        return RationalSeries(exact, denominator, truncated=False)
    top = max(e[qi] for e in exact.terms)
    ok = n_max - top >= window
    return RationalSeries(
        exact if ok else exact.filter(lambda e: e[qi] <= n_max - window),
        denominator,
        truncated=not ok,
    )


# ---------------------------------------------------------------------------
# Substitutions


def substitute_var(ml: MultiLaurent, var: str, value: int) -> MultiLaurent:
    """Set one variable to an integer value (used with 1, −1, 0)."""
    i = ml.var_index(var)
    new_vars = ml.vars[:i] + ml.vars[i + 1 :]

    def fn(e, c):
        if value == 0 and e[i] != 0:
            return None
        if value in (0, 1):
            coeff = c
        elif value == -1:
            coeff = -c if e[i] % 2 else c
        else:
            if e[i] < 0:
                raise ValueError("negative exponent at non-unit substitution")
            coeff = c * value ** e[i]
        return (e[:i] + e[i + 1 :], coeff)

    return ml.map_terms(new_vars, fn)


def substitute_all(ml: MultiLaurent, prefix: str, value: int) -> MultiLaurent:
    """Set every variable in a block (e.g. all T_i) to an integer value."""
    out = ml
    for name in [ml.vars[i] for i in ml.block(prefix)]:
        out = substitute_var(out, name, value)
    return out


def collapse_block(ml: MultiLaurent, prefix: str, new_name: str) -> MultiLaurent:
    """T_i → T for every i in the block (records total block degree)."""
    idx = ml.block(prefix)
    keep = [i for i in range(len(ml.vars)) if i not in idx]
    new_vars = (new_name,) + tuple(ml.vars[i] for i in keep)

    def fn(e, c):
        return ((sum(e[i] for i in idx),) + tuple(e[i] for i in keep), c)

    return ml.map_terms(new_vars, fn)


def substitute_h_minus_Q(ml: MultiLaurent) -> MultiLaurent:
    """h → −Q on a series in (..., Q, h)."""
    qi = ml.var_index("Q")
    hi = ml.var_index("h")
    new_vars = tuple(v for i, v in enumerate(ml.vars) if i != hi)

    def fn(e, c):
        b = e[hi]
        ne = list(e)
        ne[qi] += b
        del ne[hi]
        return (tuple(ne), c * ((-1) ** b))

    return ml.map_terms(new_vars, fn)


def sqrt_q_substitution(ml: MultiLaurent) -> MultiLaurent:
    """T_i → t_i √q, Q → √q, h → −√q on a bold series (T1..Tr, Q, h).

    Lands in integral q-powers because nonzero terms satisfy the weight/degree
    parity n = w(l) + b; a violation aborts.
    """
    tb = ml.block("T")
    qi = ml.var_index("Q")
    hi = ml.var_index("h")
    new_vars = tuple("t%d" % (k + 1) for k in range(len(tb))) + ("q",)

    def fn(e, c):
        a = tuple(e[i] for i in tb)
        double_q = sum(a) + e[qi] + e[hi]  # doubled exponent lattice
        if double_q % 2:
            raise AssertionError(
                f"sqrt-q substitution produced half-integral q-power at {e}"
            )
        return (a + (double_q // 2,), c * ((-1) ** e[hi]))

    return ml.map_terms(new_vars, fn)


def invert_block(ml: MultiLaurent, prefix: str) -> MultiLaurent:
    """x_i → x_i^{-1} for every variable in the block."""
    idx = set(ml.block(prefix))

    def fn(e, c):
        return (tuple(-x if i in idx else x for i, x in enumerate(e)), c)

    return ml.map_terms(ml.vars, fn)


def symmetry_check(
    rs: RationalSeries, c, delta: int, mode: str
) -> bool:
    """Numerator symmetry under variable inversion.

    modes: ``motivic`` — N((t_i q)^{-1}; q) = q^{-δ} ∏ t_i^{-c_i} N(t; q);
    ``pe1-at-h=-Q`` — bold numerator at h=−Q satisfies
    N(T^{-1}, Q) = ∏ T_i^{-c_i} N(T, Q); ``r1-pe`` — same with r = 1.
    """
    num = rs.numerator
    if mode == "pe1-at-h=-Q":
        if "h" in num.vars:
            num = substitute_h_minus_Q(num)
        tblock = num.block("T")
        qi = num.var_index("Q")
        shift = lambda e: 0  # noqa: E731
    elif mode == "r1-pe":
        if "h" in num.vars:
            num = substitute_h_minus_Q(num)
        tblock = num.block("T")
        qi = num.var_index("Q")
        shift = lambda e: 0  # noqa: E731
    elif mode == "motivic":
        tblock = num.block("t")
        qi = num.var_index("q")
        shift = lambda e: delta - sum(e[i] for i in tblock)  # noqa: E731
    else:
        raise ValueError(f"unknown symmetry mode {mode!r}")
    c = tuple(c)
    for e, coeff in num.terms.items():
        dual = list(e)
        for k, i in enumerate(tblock):
            dual[i] = c[k] - e[i]
        dual[qi] = e[qi] + shift(e)
        if num.terms.get(tuple(dual), 0) != coeff:
            return False
    return True


# ---------------------------------------------------------------------------
# Polynomial string parsing (CLI input grammar)


def parse_poly(text: str, variables) -> MultiLaurent:
    """Parse integers, named variables, + - * ^ and parentheses."""
    vars_t = tuple(variables)
    pos = 0

    def skip() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def peek() -> str:
        skip()
        return text[pos] if pos < len(text) else ""

    def parse_expr() -> MultiLaurent:
        nonlocal pos
        sign = 1
        while peek() and peek() in "+-":
            if text[pos] == "-":
                sign = -sign
            pos += 1
        acc = parse_term().scale(sign)
        while peek() and peek() in "+-":
            sign = 1 if text[pos] == "+" else -1
            pos += 1
            acc = acc + parse_term().scale(sign)
        return acc

    def parse_term() -> MultiLaurent:
        nonlocal pos
        acc = parse_power()
        while True:
            ch = peek()
            if ch == "*":
                pos += 1
                acc = acc * parse_power()
            elif ch and (ch.isalnum() or ch == "("):
                acc = acc * parse_power()  # implicit multiplication
            else:
                return acc

    def parse_power() -> MultiLaurent:
        nonlocal pos
        base = parse_atom()
        if peek() == "^":
            pos += 1
            skip()
            neg = False
            if peek() == "-":
                neg = True
                pos += 1
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if start == pos:
                raise ValueError("expected integer exponent")
            k = int(text[start:pos])
            if neg:
                if len(base.terms) != 1 or list(base.terms.values()) != [1]:
                    raise ValueError("negative exponent only on monomials")
                e = next(iter(base.terms))
                return MultiLaurent.monomial(
                    vars_t, tuple(-k * x for x in e)
                )
            out = MultiLaurent.const(vars_t, 1)
            for _ in range(k):
                out = out * base
            return out
        return base

    def parse_atom() -> MultiLaurent:
        nonlocal pos
        ch = peek()
        if ch == "(":
            pos += 1
            inner = parse_expr()
            if peek() != ")":
                raise ValueError("missing closing parenthesis")
            pos += 1
            return inner
        if ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            return MultiLaurent.const(vars_t, int(text[start:pos]))
        if ch.isalpha():
            start = pos
            pos += 1
            while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            name = text[start:pos]
            if name not in vars_t:
                raise ValueError(f"unknown variable {name!r}")
            e = tuple(1 if v == name else 0 for v in vars_t)
            return MultiLaurent.monomial(vars_t, e)
        raise ValueError(f"unexpected character {ch!r} at {pos}")

    out = parse_expr()
    skip()
    if pos != len(text):
        raise ValueError(f"trailing input at position {pos}")
    return out
