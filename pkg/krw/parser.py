"""Expression parser for polynomials

Grammar: integers, rational literals n/d, identifiers x y z t (any case),
U V (exact case), c0..c99, binary + - *, unary -, ^ with a nonnegative integer
exponent, parentheses. Implicit multiplication is rejected.
"""

import logging
import re
from fractions import Fraction
from typing import Iterable, Optional

from lark import Lark, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from krw.errors import ExpressionSyntaxError, KrwError, UnknownIdentifierError
from krw.names import suggest
from krw.poly import BASE_SYMBOLS, GENERATORS, MAX_PARAM_INDEX, Polynomial, Symbol, U, V

logger = logging.getLogger(__name__)

POLY_GRAMMAR = r"""
    ?start: sum
    ?sum: product
        | sum "+" product   -> add
        | sum "-" product   -> sub
    ?product: unary
        | product "*" unary -> mul
    ?unary: power
        | "-" unary         -> neg
    ?power: atom
        | atom "^" INT      -> pow
    ?atom: INT "/" INT      -> rational
        | INT               -> integer
        | NAME              -> name
        | "(" sum ")"

    NAME: /[A-Za-z_][A-Za-z0-9_]*/
    %import common.INT
    %import common.WS
    %ignore WS
"""

_parser = Lark(POLY_GRAMMAR, parser="lalr")

_PARAM_RE = re.compile(r"c(0|[1-9][0-9]?)")

ALL_SYMBOLS = BASE_SYMBOLS + tuple(Symbol.param(i) for i in range(MAX_PARAM_INDEX + 1))


def resolve_symbol(name: str) -> Optional[Symbol]:
    """Map an identifier to its symbol, or None if it names nothing"""
    lowered = name.lower()
    for sym in GENERATORS:
        if lowered == sym.name:
            return sym
    if name in (U.name, V.name):
        return U if name == U.name else V
    m = _PARAM_RE.fullmatch(name)
    if m:
        return Symbol.param(int(m.group(1)))
    return None


class _PolynomialBuilder(Transformer):
    """Turns a parse tree into a canonical Polynomial"""

    def __init__(self, allowed: frozenset):
        super().__init__()
        self.allowed = allowed

    def add(self, items):
        return items[0] + items[1]

    def sub(self, items):
        return items[0] - items[1]

    def mul(self, items):
        return items[0] * items[1]

    def neg(self, items):
        return -items[0]

    def pow(self, items):
        return items[0] ** int(items[1])

    def integer(self, items):
        return Polynomial.constant(int(items[0]))

    def rational(self, items):
        den = int(items[1])
        if den == 0:
            raise ExpressionSyntaxError("zero denominator", items[1].start_pos)
        return Polynomial.constant(Fraction(int(items[0]), den))

    def name(self, items):
        token = items[0]
        sym = resolve_symbol(str(token))
        if sym is None or sym not in self.allowed:
            raise UnknownIdentifierError(str(token), suggest(str(token), [s.name for s in self.allowed]))
        return Polynomial.variable(sym)


def _describe(error: UnexpectedInput, text: str) -> ExpressionSyntaxError:
    pos = getattr(error, "pos_in_stream", None)
    if pos is None or pos < 0:
        pos = len(text)
    if isinstance(error, UnexpectedEOF):
        return ExpressionSyntaxError("unexpected end of input", len(text))
    if isinstance(error, UnexpectedToken):
        if error.token.type == "$END":
            return ExpressionSyntaxError("unexpected end of input", len(text))
        return ExpressionSyntaxError(f"unexpected '{error.token}'", pos)
    if isinstance(error, UnexpectedCharacters):
        return ExpressionSyntaxError(f"unexpected character '{text[pos]}'", pos)
    return ExpressionSyntaxError("syntax error", pos)


def parse_polynomial(text: str, allowed: Optional[Iterable[Symbol]] = None) -> Polynomial:
    """Parse an expression into its canonical polynomial

    Args:
        text: Expression in the grammar above
        allowed: Symbols the expression may use (default: all symbols)

    Returns:
        The polynomial the expression denotes

    Raises:
        ExpressionSyntaxError: text does not conform to the grammar
        UnknownIdentifierError: an identifier is outside `allowed`
    """
    allowed_set = frozenset(ALL_SYMBOLS if allowed is None else allowed)
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        raise _describe(e, text) from None
    try:
        result = _PolynomialBuilder(allowed_set).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, KrwError):
            raise e.orig_exc from None
        raise
    logger.debug(f"Parsed '{text}' -> {result}")
    return result
