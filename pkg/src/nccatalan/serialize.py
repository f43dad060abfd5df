"""Text, JSON and LaTeX serialization for group-ring elements.

Text grammar (the bit-exact contract used by the CLI and golden tests):

    poly   := term (" + " term | " - " term)*
    term   := [sign][int "*"] factor ("*" factor)*
    factor := "x" int ["^" int]

The unit word prints as "1" and the zero polynomial as "0".  Terms are
emitted in canonical order: words sorted by letter count, then
lexicographically by their flattened (index, exponent) sequence.
"""

import re

from .ring import NCPoly, word_from_letters


class ParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def word_str(w):
    if not w:
        return "1"
    return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in w)


def format_poly(p):
    """Canonical text form of a polynomial."""
    terms = p.sorted_terms()
    if not terms:
        return "0"
    parts = []
    for w, c in terms:
        mag = abs(c)
        body = word_str(w)
        if mag != 1:
            body = f"{mag}*{body}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(x\d+)|(\d+)|(\^)|(\*)|(\+)|(-))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}",
                             len(text) - len(text[pos:].lstrip()))
        gen, num, caret, star, plus, minus = m.groups()
        start = m.end() - len(m.group().lstrip())
        if gen:
            tokens.append(("gen", int(gen[1:]), start))
        elif num:
            tokens.append(("num", int(num), start))
        elif caret:
            tokens.append(("^", None, start))
        elif star:
            tokens.append(("*", None, start))
        elif plus:
            tokens.append(("+", None, start))
        else:
            tokens.append(("-", None, start))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", None, len(self.text))

    def take(self, kind=None):
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty polynomial text", 0)
        acc = {}
        first = True
        while self.peek()[0] != "end":
            sign = 1
            kind, _, _ = self.peek()
            if kind in ("+", "-"):
                if first and kind == "+":
                    raise ParseError("unexpected leading '+'", self.peek()[2])
                self.take()
                sign = -1 if kind == "-" else 1
            elif not first:
                raise ParseError("expected '+' or '-' between terms", self.peek()[2])
            w, c = self.term()
            c *= sign
            s = acc.get(w, 0) + c
            if s:
                acc[w] = s
            elif w in acc:
                del acc[w]
            first = False
        return NCPoly(acc)

    def term(self):
        coeff = 1
        letters = []
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            if self.peek()[0] == "*":
                coeff = value
                self.take()
                self.factors(letters)
            else:
                # bare integer: coefficient times the unit word
                coeff = value
        elif kind == "gen":
            self.factors(letters)
        else:
            raise ParseError("expected a term", pos)
        return word_from_letters(letters), coeff

    def factors(self, letters):
        while True:
            kind, value, pos = self.peek()
            if kind == "gen":
                self.take()
                exponent = 1
                if self.peek()[0] == "^":
                    self.take()
                    neg = False
                    if self.peek()[0] == "-":
                        self.take()
                        neg = True
                    _, e, _ = self.take("num")
                    exponent = -e if neg else e
                letters.append((value, exponent))
            elif kind == "num" and value == 1:
                self.take()  # literal unit-word factor
            else:
                raise ParseError("expected a factor", pos)
            if self.peek()[0] == "*":
                self.take()
            else:
                return


def parse_poly(text):
    """Parse the text grammar back into a polynomial.

    Raises ParseError (with position) on malformed input.
    """
    return _Parser(text).parse()


def poly_to_obj(p):
    """JSON-ready term list in canonical order."""
    return [{"coeff": c, "word": [[i, e] for i, e in w]} for w, c in p.sorted_terms()]


def poly_from_obj(obj):
    """Rebuild a polynomial from the JSON term schema."""
    acc = []
    for term in obj:
        w = word_from_letters((int(i), int(e)) for i, e in term["word"])
        acc.append((w, int(term["coeff"])))
    return NCPoly(acc)


def _word_latex(w):
    if not w:
        return "1"
    return "".join(f"x_{{{i}}}" if e == 1 else f"x_{{{i}}}^{{{e}}}" for i, e in w)


def latex_poly(p):
    """Subscripted-generator rendering, for documentation output."""
    terms = p.sorted_terms()
    if not terms:
        return "0"
    parts = []
    for w, c in terms:
        mag = abs(c)
        body = _word_latex(w)
        if mag != 1:
            body = f"{mag}\\,{body}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)
