"""Named diagrams bundled with the package.

Two entries stand in for knots that are only given as pictures in the
literature; their ``PROVENANCE`` notes say so and the test-suite checks
the properties they are meant to have.
"""

from __future__ import annotations

from .diagram import OVER, UNDER, Pass, VirtualLinkDiagram, parse_catalog, parse_gauss_code

CODES = {
    "unknot": "",
    "unlink2": "|",
    "kink_pos": "O1+U1+",
    "kink_neg": "O1-U1-",
    "trefoil": "O1+U2+O3+U1+O2+U3+",
    "left_trefoil": "U1-O2-U3-O1-U2-O3-",
    "figure_eight": "O1-U2-O3+U4+O2-U1-O4+U3+",
    "virtual_trefoil": "O1+U2+U1+O2+",
    "virtual_unknot": "O1+U2-U1+O2-",
    "kishino": "O1+U2-U1+O2-O3-U4+U3-O4+",
    "torus_2_5": "O1+U2+O3+U4+O5+U1+O2+U3+O4+U5+",
    "hopf": "O1+U2+|U1+O2+",
    "virtual_stevedore": "U1-U2-O3+U4+O2-O1-O4+U3+",
    "positive_genus2": "O1+U2+U3+O4+U5+O3+U1+O5+O2+U4+",
}

PROVENANCE = {
    "kishino": "connected sum of two 2-crossing virtual unknot diagrams (Kishino-type)",
    "virtual_stevedore": "stand-in: Z-move partner of figure_eight at crossing 1; "
                         "the pictured diagram is not available as a code",
    "positive_genus2": "stand-in: a positive 5-crossing virtual knot with n - r + 1 = 4; "
                       "the pictured diagram is not available as a code",
}

QUARANTINED = frozenset()


def vsigma(n):
    """Closure of the virtual braid ``(v sigma)^(2n)``: 2n positive crossings, one Seifert circle."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = 2 * n
    first = [Pass(k, OVER if k % 2 else UNDER, 1) for k in range(1, m + 1)]
    second = [Pass(k, UNDER if k % 2 else OVER, 1) for k in range(1, m + 1)]
    return VirtualLinkDiagram((tuple(first + second),), name=f"vsigma{m}")


def bundled():
    out = {name: parse_gauss_code(code, name=name) for name, code in CODES.items()}
    for n in (1, 2, 3):
        out[f"vsigma{2 * n}"] = vsigma(n)
    return out


def load_catalog(path):
    with open(path, encoding="utf-8") as fh:
        return parse_catalog(fh.read())


def get(name, extra=None):
    if extra and name in extra:
        return extra[name]
    cat = bundled()
    if name in cat:
        return cat[name]
    raise KeyError(name)
