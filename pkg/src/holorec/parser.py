"""Recursive-descent parser for recurrences, hypergeometric terms and constants.

Grammar (``^`` and ``**`` are synonyms, ``^`` binds right)::

    equation := expr ['=' expr]
    expr     := ['+'|'-'] product (('+'|'-') product)*
    product  := unary (('*'|'/') unary)*
    unary    := ('+'|'-') unary | power
    power    := postfix ['^' unary]
    postfix  := primary '!'*
    primary  := NUMBER | 'n' | '(' expr ')' | NAME '(' expr (',' expr)* ')'

Function names: ``a`` (the unknown sequence, recurrences only), ``sqrt``,
``pochhammer``, ``binomial``, ``factorial``, ``GAMMA``/``Gamma`` and
``quadpoch``.
"""

import json
import re
from fractions import Fraction
from math import factorial

from .errors import HolorecError, ParseError
from .exactmath.field import is_rational, quad, squarefree_decompose
from .exactmath.poly import ONE, Poly, RatFun
from .hypterm import Factorial, HypTerm, pochhammer_atom
from .recurrence import Recurrence, normalize

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<op>\*\*|[-+*/^!(),=]))")

_FUNCS = {"sqrt", "pochhammer", "binomial", "factorial", "GAMMA", "Gamma", "quadpoch"}


class _Tok:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind, self.text, self.pos = kind, text, pos


class _Lin:
    """Linear form ``sum_i coeff_i * a(n+i)`` with RatFun coefficients."""

    def __init__(self, terms):
        self.terms = {k: v for k, v in terms.items() if v}

    def scale(self, r):
        return _Lin({k: v * r for k, v in self.terms.items()})

    def add(self, other, sign=1):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, RatFun.const(0)) + v * sign
        return _Lin(out)


def _tokenize(src):
    toks, pos = [], 0
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise _error(src, pos + len(src[pos:]) - len(src[pos:].lstrip()),
                         f"unexpected character {src[pos:].lstrip()[:1]!r}")
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), start))
        pos = m.end()
    toks.append(_Tok("eof", "", len(src)))
    return toks


def _error(src, pos, msg):
    line = src.count("\n", 0, pos) + 1
    col = pos - (src.rfind("\n", 0, pos) + 1) + 1
    return ParseError(msg, line, col)


class _Parser:
    def __init__(self, src, allow_seq):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0
        self.allow_seq = allow_seq

    # -- token helpers ----------------------------------------------------

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, msg, tok=None):
        raise _error(self.src, (tok or self.tok).pos, msg)

    def accept(self, *ops):
        t = self.tok
        if t.kind == "op" and t.text in ops:
            self.i += 1
            return t
        return None

    def expect(self, op):
        if not self.accept(op):
            what = self.tok.text or "end of input"
            self.fail(f"expected {op!r}, found {what!r}")

    def done(self):
        if self.tok.kind != "eof":
            self.fail(f"unexpected {self.tok.text!r}")

    # -- grammar ---------------------------------------------------------

    def equation(self):
        lhs = self.expr()
        if self.accept("="):
            t = self.tok
            rhs = self.expr()
            lhs = self.combine(lhs, rhs, -1, t)
        self.done()
        return lhs

    def expr(self):
        start = self.tok
        if self.accept("-"):
            acc = self.negate(self.product(), start)
        else:
            self.accept("+")
            acc = self.product()
        while True:
            t = self.accept("+", "-")
            if not t:
                return acc
            acc = self.combine(acc, self.product(), 1 if t.text == "+" else -1, t)

    def product(self):
        acc = self.unary()
        while True:
            t = self.accept("*", "/")
            if not t:
                return acc
            rhs = self.unary()
            acc = self.mul(acc, rhs, t) if t.text == "*" else self.div(acc, rhs, t)

    def unary(self):
        t = self.accept("-", "+")
        if t:
            v = self.unary()
            return self.negate(v, t) if t.text == "-" else v
        return self.power()

    def power(self):
        base = self.postfix()
        t = self.accept("^", "**")
        if not t:
            return base
        return self.pow(base, self.unary(), t)

    def postfix(self):
        v = self.primary()
        while True:
            t = self.accept("!")
            if not t:
                return v
            v = self.factorial_of(v, t)

    def primary(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return RatFun.const(Fraction(t.text))
        if self.accept("("):
            v = self.expr()
            self.expect(")")
            return v
        if t.kind == "name":
            self.i += 1
            if t.text == "n":
                return RatFun.from_poly(Poly([0, 1]))
            if t.text == "a" and self.tok.text == "(":
                if not self.allow_seq:
                    self.fail("a(...) is only allowed in recurrences", t)
                return self.seq_ref(t)
            if t.text in _FUNCS and self.tok.text == "(":
                return self.call(t)
            self.fail(f"unknown symbol {t.text!r}", t)
        self.fail(f"unexpected {t.text or 'end of input'!r}")

    def args(self):
        self.expect("(")
        out = [(self.tok, self.expr())]
        while self.accept(","):
            out.append((self.tok, self.expr()))
        self.expect(")")
        return out

    def seq_ref(self, t):
        ((at, arg),) = self.args_exact(1, "a")
        lin = self.linear_int(arg, at)
        if lin is None or lin[0] != 1:
            self.fail("sequence index must be n plus an integer", at)
        return _Lin({lin[1]: RatFun.const(1)})

    def args_exact(self, k, name):
        t = self.tok
        a = self.args()
        if len(a) != k:
            self.fail(f"{name} takes {k} argument{'s' if k > 1 else ''}", t)
        return a

    # -- value semantics ---------------------------------------------------

    def rat(self, v, t, what="expression"):
        if isinstance(v, RatFun):
            return v
        if isinstance(v, HypTerm) and v.is_rational():
            return v.rat
        self.fail(f"{what} must be a rational function of n", t)

    def const(self, v, t, what="value"):
        r = self.rat(v, t, what)
        if not r.is_constant():
            self.fail(f"{what} must be a constant", t)
        return r.constant_value()

    def linear_int(self, v, t):
        """``(a, b)`` when ``v`` is ``a*n + b`` with integers, else None."""
        if not isinstance(v, RatFun) or not v.is_poly() or v.num.degree > 1:
            return None
        c = [v.num.coeff(0), v.num.coeff(1)]
        if not all(is_rational(x) and Fraction(x).denominator == 1 for x in c):
            return None
        return int(c[1]), int(c[0])

    def negate(self, v, t):
        return self.mul(RatFun.const(-1), v, t)

    def combine(self, x, y, sign, t):
        if isinstance(x, _Lin) or isinstance(y, _Lin):
            if not (isinstance(x, _Lin) and isinstance(y, _Lin)):
                zero = (not isinstance(x, _Lin) and isinstance(x, RatFun) and not x) or \
                       (not isinstance(y, _Lin) and isinstance(y, RatFun) and not y)
                if zero:
                    return x if isinstance(x, _Lin) else (y.scale(RatFun.const(sign)))
                self.fail("recurrence has a term without a(n+i)", t)
            return x.add(y, sign)
        if isinstance(x, RatFun) and isinstance(y, RatFun):
            return x + y * sign
        if isinstance(x, RatFun) and not x:
            return self.mul(RatFun.const(sign), y, t)
        if isinstance(y, RatFun) and not y:
            return x
        xs = x if isinstance(x, HypTerm) else HypTerm(1, x, ())
        ys = y if isinstance(y, HypTerm) else HypTerm(1, y, ())
        if xs.base == ys.base and xs.atoms == ys.atoms:
            s = xs.rat + ys.rat * sign
            return HypTerm(xs.base, s, xs.atoms) if s else RatFun.const(0)
        self.fail("a sum of unlike hypergeometric terms is not hypergeometric", t)

    def mul(self, x, y, t):
        if isinstance(x, _Lin) and isinstance(y, _Lin):
            self.fail("product of two sequence terms is not linear", t)
        if isinstance(x, _Lin) or isinstance(y, _Lin):
            lin, other = (x, y) if isinstance(x, _Lin) else (y, x)
            return lin.scale(self.rat(other, t, "coefficient"))
        if isinstance(x, RatFun) and isinstance(y, RatFun):
            return x * y
        if (isinstance(x, RatFun) and not x) or (isinstance(y, RatFun) and not y):
            return RatFun.const(0)
        return _simplify(HypTerm(1, x, ()) * y if isinstance(x, RatFun) else x * y)

    def div(self, x, y, t):
        if isinstance(y, _Lin):
            self.fail("cannot divide by a sequence term", t)
        if isinstance(y, RatFun):
            if not y:
                self.fail("division by zero", t)
            return self.mul(x, y.inverse(), t)
        return self.mul(x, y.inverse(), t)

    def pow(self, base, ex, t):
        if isinstance(base, _Lin) or isinstance(ex, _Lin):
            self.fail("sequence terms cannot be raised to a power", t)
        lin = self.linear_int(ex, t)
        if lin is None:
            self.fail("exponent must be an integer or k*n+m with integers k, m", t)
        k, m = lin
        if k == 0:
            if isinstance(base, RatFun):
                if not base and m < 0:
                    self.fail("division by zero", t)
                return base ** m
            return _simplify(base ** m)
        c = self.const(base, t, "base of an n-dependent power")
        if not c:
            self.fail("zero base in an n-dependent power", t)
        return _simplify(HypTerm(c ** k, RatFun.const(c ** m if m >= 0 else 1 / c ** (-m)), ()))

    def factorial_of(self, v, t):
        lin = self.linear_int(v, t)
        if lin is None:
            self.fail("factorial argument must be a*n+b with integers a >= 0, b", t)
        return _factorial_term(*lin, fail=lambda msg: self.fail(msg, t))

    def call(self, t):
        name = t.text
        if name == "sqrt":
            ((at, arg),) = self.args_exact(1, name)
            c = self.const(arg, at, "sqrt argument")
            if not is_rational(c) or Fraction(c).denominator != 1:
                self.fail("sqrt takes an integer", at)
            c = int(c)
            if c == 0:
                return RatFun.const(0)
            s, r = squarefree_decompose(c)
            return RatFun.const(r if s == 1 else quad(0, r, s))
        if name == "factorial":
            ((at, arg),) = self.args_exact(1, name)
            return self.factorial_of(arg, at)
        if name in ("GAMMA", "Gamma"):
            ((at, arg),) = self.args_exact(1, name)
            lin = self.linear_int(arg, at)
            if lin is None:
                self.fail("GAMMA argument must be a*n+b with integers", at)
            return _factorial_term(lin[0], lin[1] - 1, fail=lambda msg: self.fail(msg, at))
        if name == "pochhammer":
            (xt, x), (nt, nv) = self.args_exact(2, name)
            self.require_n(nv, nt)
            return _pochhammer_term(self.const(x, xt, "Pochhammer argument"),
                                    fail=lambda msg: self.fail(msg, xt))
        if name == "binomial":
            (at_, top), (bt, bot) = self.args_exact(2, name)
            A, B = self.linear_int(top, at_), self.linear_int(bot, bt)
            if A is None or B is None:
                self.fail("binomial arguments must be a*n+b with integers", at_)
            C = (A[0] - B[0], A[1] - B[1])
            f = lambda msg: self.fail(msg, at_)
            return _simplify(_factorial_term(*A, fail=f) * _as_term(_factorial_term(*B, fail=f)).inverse()
                             * _as_term(_factorial_term(*C, fail=f)).inverse())
        if name == "quadpoch":
            (qt, q), (nt, nv) = self.args_exact(2, name)
            self.require_n(nv, nt)
            r = self.rat(q, qt, "quadpoch argument")
            if not r.is_poly() or r.num.degree != 2:
                self.fail("quadpoch needs a quadratic polynomial in n", qt)
            from .simplify import SimplifyError, pochfactorsimp
            try:
                return _simplify(pochfactorsimp(r, product_rule=False))
            except SimplifyError as exc:
                self.fail(str(exc), qt)
        self.fail(f"unknown function {name!r}", t)  # pragma: no cover

    def require_n(self, v, t):
        if self.linear_int(v, t) != (1, 0):
            self.fail("second argument must be n", t)


def _as_term(v):
    return v if isinstance(v, HypTerm) else HypTerm(1, v, ())


def _simplify(t):
    """Collapse a HypTerm without n-dependent parts to a RatFun."""
    if isinstance(t, HypTerm) and t.is_rational():
        return t.rat
    return t


def _factorial_term(a, b, fail):
    if a < 0:
        fail("factorial of a decreasing argument")
    if a == 0:
        if b < 0:
            fail(f"factorial of negative integer {b}")
        return RatFun.const(factorial(b))
    if b >= 0:
        return HypTerm(1, ONE, ((Factorial(a, b), 1),))
    # (a*n+b)! = (a*n)! / prod_{j=0}^{-b-1} (a*n - j)
    den = ONE
    for j in range(-b):
        den = den * Poly([-j, a])
    return HypTerm(1, RatFun(ONE, den), ((Factorial(a, 0), 1),))


def _pochhammer_term(x, fail):
    from .simplify import SimplifyError, pochhammer_normalize
    try:
        u, corr = pochhammer_normalize(x)
    except SimplifyError as exc:
        fail(str(exc))
    return _simplify(HypTerm(1, corr, ((pochhammer_atom(u), 1),)))


# -- public API ----------------------------------------------------------------

def _run(src, allow_seq):
    if not isinstance(src, str):
        raise TypeError("source must be a string")
    try:
        return _Parser(src, allow_seq).equation()
    except ParseError:
        raise
    except HolorecError as exc:
        raise ParseError(str(exc), 1, 1) from exc


def parse_recurrence(src, var="n"):
    """Recurrence from the text grammar or its JSON form."""
    if src.lstrip().startswith("{"):
        try:
            return Recurrence.from_json(json.loads(src))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad recurrence JSON: {exc}", 1, 1) from exc
    v = _run(src, True)
    if not isinstance(v, _Lin):
        if isinstance(v, RatFun) and not v:
            raise ParseError("the recurrence is identically zero", 1, 1)
        raise ParseError("no a(n+i) terms found", 1, 1)
    if not v.terms:
        raise ParseError("the recurrence is identically zero", 1, 1)
    lo, hi = min(v.terms), max(v.terms)
    zero = RatFun.const(0)
    raw = [v.terms.get(i, zero).shift(-lo) for i in range(lo, hi + 1)]
    return normalize(raw, var=var)


def parse_term(src):
    """HypTerm in normal form."""
    v = _run(src, False)
    if isinstance(v, RatFun):
        if not v:
            raise ParseError("the zero term is not hypergeometric", 1, 1)
        return HypTerm(1, v, ())
    return v


def parse_ratfun(src):
    """Rational function of n."""
    v = _run(src, False)
    if isinstance(v, HypTerm) and v.is_rational():
        v = v.rat
    if not isinstance(v, RatFun):
        raise ParseError("expected a rational function of n", 1, 1)
    return v


def parse_constant(src):
    """Exact scalar (rational or in some Q(sqrt(D)))."""
    r = parse_ratfun(str(src))
    if not r.is_constant():
        raise ParseError("expected a constant", 1, 1)
    return r.constant_value()
