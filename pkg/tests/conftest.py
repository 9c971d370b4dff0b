import sympy

from irratio.poly import HomogPoly


def to_sympy(f: HomogPoly):
    """Independent reading of a polynomial through its canonical text."""
    syms = {v: sympy.Symbol(v) for v in f.ring.variables}
    return sympy.sympify(f.to_text().replace("^", "**"), locals=syms)
