"""
Textual series names for the `expand` command.

A name is either a catalogue entry ("d", "tcore(5)", "rho6", "psi", "H", ...)
or an eta-quotient string such as "f3^3/(f1*f2)", "3*q*f6^3/(f1*f2)" or
"-2 q^2 f4^6 / f2^5". Whitespace is ignored.
"""

import re
from typing import Callable, Dict, List, Optional, Tuple

from ..errors import QSeriesError, SpecParseError, UnknownSeriesError
from .dissect import H
from .mocktheta import MockThetaId, mock
from .qfactory import EtaQuotient, GeneratingFunctionId, SeriesFactory, default_factory
from .ring import ZZ, CoefficientRing
from .series import Series

_TOKEN = re.compile(r"f(\d+)(?:\^(-?\d+))?|q(?:\^(\d+))?|(\d+)|([*/()])|(-)")

Token = Tuple[str, Tuple[int, ...]]


def _tokenize(text: str) -> List[Token]:
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise SpecParseError("Empty eta-quotient spec")
    tokens: List[Token] = []
    pos = 0
    while pos < len(compact):
        match = _TOKEN.match(compact, pos)
        if not match:
            raise SpecParseError(f"Unexpected {compact[pos]!r} at position {pos} in {text!r}")
        k, e, s, n, op, minus = match.groups()
        if k is not None:
            if int(k) < 1:
                raise SpecParseError(f"f0 is not an eta factor in {text!r}")
            tokens.append(("f", (int(k), int(e) if e is not None else 1)))
        elif match.group(0).startswith("q"):
            tokens.append(("q", (int(s) if s is not None else 1,)))
        elif n is not None:
            tokens.append(("int", (int(n),)))
        elif minus is not None:
            tokens.append(("-", ()))
        else:
            tokens.append((op, ()))
        pos = match.end()
    return tokens


class _Parser:
    """
    product := ['-'] factor (['*' | '/'] factor)*
    factor  := INT | q[^S] | fK[^E] | '(' product ')'

    Juxtaposition multiplies, so "3 q f6^3" reads like "3*q*f6^3".
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> Optional[str]:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def _take(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self) -> EtaQuotient:
        result = self._product()
        if self.pos != len(self.tokens):
            raise SpecParseError(f"Trailing {self._peek()!r} in {self.text!r}")
        return result

    def _product(self) -> EtaQuotient:
        negative = False
        if self._peek() == "-":
            self._take()
            negative = True
        result = self._factor()
        while self._peek() not in (None, ")"):
            if self._peek() == "/":
                self._take()
                divisor = self._factor()
                try:
                    result = result / divisor
                except QSeriesError as exc:
                    raise SpecParseError(f"Cannot divide by {divisor} in {self.text!r}: {exc}") from exc
            else:
                if self._peek() == "*":
                    self._take()
                result = result * self._factor()
        return -result if negative else result

    def _factor(self) -> EtaQuotient:
        if self._peek() is None:
            raise SpecParseError(f"Unexpected end of {self.text!r}")
        kind, values = self._take()
        if kind == "f":
            k, e = values
            return EtaQuotient.of({k: e})
        if kind == "q":
            return EtaQuotient(shift=values[0])
        if kind == "int":
            return EtaQuotient(coefficient=values[0])
        if kind == "(":
            inner = self._product()
            if self._peek() != ")":
                raise SpecParseError(f"Unbalanced parenthesis in {self.text!r}")
            self._take()
            return inner
        raise SpecParseError(f"Unexpected {kind!r} in {self.text!r}")


def parse_eta_quotient(text: str) -> EtaQuotient:
    """Parse "fK^E" products with '*', '/', parentheses, an integer and a q^S."""
    return _Parser(text).parse()


# ----------------------------------------------------------------------
# Named series
# ----------------------------------------------------------------------

Builder = Callable[[SeriesFactory, int, CoefficientRing], Series]


def _exact_then_reduce(build: Callable[[int], Series]) -> Builder:
    def builder(factory: SeriesFactory, order: int, ring: CoefficientRing) -> Series:
        series = build(order)
        return series if ring.is_exact else series.reduce_mod(ring.modulus)
    return builder


CATALOGUE: Dict[str, Builder] = {
    "phi": lambda factory, n, ring: factory.phi(n, ring),
    "psi": lambda factory, n, ring: factory.psi(n, ring),
    "phi_neg": lambda factory, n, ring: factory.phi_neg(n, ring),
    "f_neg": lambda factory, n, ring: factory.f_neg(n, ring),
    "w": lambda factory, n, ring: factory.w_func(n, ring),
    "P": lambda factory, n, ring: factory.P_func(n, ring),
    "H": lambda factory, n, ring: H.expand(n, ring, factory),
}
CATALOGUE.update({
    member.value: _exact_then_reduce(lambda n, member=member: mock(member, n))
    for member in MockThetaId
})


def names() -> List[str]:
    return sorted(CATALOGUE) + list(GeneratingFunctionId.NAMES)


def resolve(name: str) -> Tuple[str, Builder]:
    """
    Catalogue entries first, then generating functions, then eta-quotient strings.

    Returns a display label and a builder taking (factory, order, ring).
    """
    key = name.strip()
    if key in CATALOGUE:
        return key, CATALOGUE[key]
    # case-folded lookup; a lone "p" is not P
    lowered = {k.lower(): k for k in CATALOGUE if k != "P"}
    if key.lower() in lowered:
        label = lowered[key.lower()]
        return label, CATALOGUE[label]
    try:
        family = GeneratingFunctionId.parse(key)
        return family.label, lambda factory, n, ring: factory.gf(family, n, ring)
    except UnknownSeriesError:
        pass
    if re.fullmatch(r"[\sfq\d\^*/()\-]+", key) and re.search(r"[fq\d]", key):
        quotient = parse_eta_quotient(key)
        return str(quotient), lambda factory, n, ring: factory.eta_quotient(quotient, n, ring)
    raise UnknownSeriesError(f"Unknown series {name!r}; known names: {', '.join(names())}")


def expand(name: str, order: int, ring: CoefficientRing = ZZ,
           factory: Optional[SeriesFactory] = None) -> Tuple[str, Series]:
    label, builder = resolve(name)
    return label, builder(factory or default_factory, order, ring)
