"""Hard-coded identity suite for the triple-bond rank-2 type.

Every straightening row among the composite root vectors E_12, E_112,
E_1112, E_11212, the two higher Serre consequences, and the coproduct
expansions, in both the plain and the rescaled ("hat") normalizations.
Each row carries a frozen display string; ``relation_lines`` feeds the
CLI dump and ``check_suite`` re-derives every row from scratch.

Shorthand used in the displays: q = q_11, a = q_12, K_i = K_pi(i),
D = coproduct, (x) = tensor slot separator, Eh = hat-rescaled E.
"""

from .hopf import coproduct, tensor
from .lattice import build_bicharacter, parse_cartan_type
from .lusztig import g2_quartic_vectors

__all__ = [
    "SECTIONS",
    "g2_algebra",
    "handles",
    "rows",
    "check_suite",
    "relation_lines",
]

SECTIONS = ("main", "serre", "hat", "coproduct", "hat_coproduct")

HAT_DEF_LINES = (
    "Eh_1 = E_1",
    "Eh_2 = E_2",
    "Eh_12 = q^3/(q^3-1) E_12",
    "Eh_112 = q^5/((q^3-1)(q^2-1)) E_112",
    "Eh_1112 = q^6/((q^3-1)(q^2-1)(q-1)) E_1112",
    "Eh_11212 = q^9/((q^3-1)^2(q^2-1)(q-1)) E_11212",
)


def g2_algebra():
    datum = parse_cartan_type("G2")
    _, chi = build_bicharacter(datum)
    from .ualg import Algebra

    return Algebra.get(chi)


def handles(alg=None):
    """Named elements appearing in the tables, keyed by display name."""
    if alg is None:
        alg = g2_algebra()
    q = alg.q(0, 0)
    a = alg.q(0, 1)
    c1 = alg.ring.one()
    e12, e112, e1112, e11212 = g2_quartic_vectors(alg)
    h = {
        "alg": alg,
        "q": q,
        "a": a,
        "one": c1,
        "E_1": alg.e(0),
        "E_2": alg.e(1),
        "E_12": e12,
        "E_112": e112,
        "E_1112": e1112,
        "E_11212": e11212,
        "K_1": alg.k_pi(0),
        "K_2": alg.k_pi(1),
        "unit": alg.one(),
    }
    h["Eh_1"] = h["E_1"]
    h["Eh_2"] = h["E_2"]
    h["Eh_12"] = e12 * (q ** 3 / (q ** 3 - c1))
    h["Eh_112"] = e112 * (q ** 5 / ((q ** 3 - c1) * (q * q - c1)))
    h["Eh_1112"] = e1112 * (q ** 6 / ((q ** 3 - c1) * (q * q - c1) * (q - c1)))
    h["Eh_11212"] = e11212 * (
        q ** 9 / ((q ** 3 - c1) ** 2 * (q * q - c1) * (q - c1))
    )
    return h


def _rows_main(h):
    q, a, c1 = h["q"], h["a"], h["one"]
    E1, E2 = h["E_1"], h["E_2"]
    E12, E112, E1112, E11212 = h["E_12"], h["E_112"], h["E_1112"], h["E_11212"]
    return [
        (
            "E_11212 = E_112E_12 - a q^2 E_12E_112",
            E11212,
            E112 * E12 - E12 * E112 * (a * q * q),
        ),
        ("E_12E_2 = a q^3 E_2E_12", E12 * E2, E2 * E12 * (a * q ** 3)),
        (
            "E_11212E_2 = a^3 q^6 E_2E_11212 + a^2 q^3 (q^2-1)(q-1) E_12^3",
            E11212 * E2,
            E2 * E11212 * (a ** 3 * q ** 6)
            + E12 ** 3 * (a * a * q ** 3 * (q * q - c1) * (q - c1)),
        ),
        (
            "E_112E_2 = a^2 q^3 E_2E_112 + a q (q^2-1) E_12^2",
            E112 * E2,
            E2 * E112 * (a * a * q ** 3) + E12 * E12 * (a * q * (q * q - c1)),
        ),
        (
            "E_1112E_2 = a^3 q^3 E_2E_1112 + a q (q^2-q-1) E_11212"
            " + a^2 q^2 (q^3-1) E_12E_112",
            E1112 * E2,
            E2 * E1112 * (a ** 3 * q ** 3)
            + E11212 * (a * q * (q * q - q - c1))
            + E12 * E112 * (a * a * q * q * (q ** 3 - c1)),
        ),
        ("E_1E_2 = a E_2E_1 + E_12", E1 * E2, E2 * E1 * a + E12),
        (
            "E_11212E_12 = a q^3 E_12E_11212",
            E11212 * E12,
            E12 * E11212 * (a * q ** 3),
        ),
        (
            "E_112E_12 = a q^2 E_12E_112 + E_11212",
            E112 * E12,
            E12 * E112 * (a * q * q) + E11212,
        ),
        (
            "E_1112E_12 = a^2 q^3 E_12E_1112 + a q (q^3-1)/(q+1) E_112^2",
            E1112 * E12,
            E12 * E1112 * (a * a * q ** 3)
            + E112 * E112 * (a * q * (q ** 3 - c1) / (q + c1)),
        ),
        ("E_1E_12 = a q E_12E_1 + E_112", E1 * E12, E12 * E1 * (a * q) + E112),
        (
            "E_112E_11212 = a q^3 E_11212E_112",
            E112 * E11212,
            E11212 * E112 * (a * q ** 3),
        ),
        (
            "E_1112E_11212 = a^3 q^6 E_11212E_1112"
            " + a^2 q^3 (q^3-1)(q-1)/(q+1) E_112^3",
            E1112 * E11212,
            E11212 * E1112 * (a ** 3 * q ** 6)
            + E112 ** 3 * (a * a * q ** 3 * (q ** 3 - c1) * (q - c1) / (q + c1)),
        ),
        (
            "E_1E_11212 = a^2 q^3 E_11212E_1 + a q (q^3-1)/(q+1) E_112^2",
            E1 * E11212,
            E11212 * E1 * (a * a * q ** 3)
            + E112 * E112 * (a * q * (q ** 3 - c1) / (q + c1)),
        ),
        (
            "E_1112E_112 = a q^3 E_112E_1112",
            E1112 * E112,
            E112 * E1112 * (a * q ** 3),
        ),
        (
            "E_1E_112 = a q^2 E_112E_1 + E_1112",
            E1 * E112,
            E112 * E1 * (a * q * q) + E1112,
        ),
        ("E_1E_1112 = a q^3 E_1112E_1", E1 * E1112, E1112 * E1 * (a * q ** 3)),
    ]


def _rows_serre(h):
    q, a, c1 = h["q"], h["a"], h["one"]
    E1, E2 = h["E_1"], h["E_2"]
    zero = h["alg"].zero()
    quartic = (
        E1 ** 4 * E2
        - E1 ** 3 * E2 * E1 * ((c1 + q) * (c1 + q * q) * a)
        + E1 * E1 * E2 * E1 * E1 * (q * (c1 + q * q) * (c1 + q + q * q) * a * a)
        - E1 * E2 * E1 ** 3 * (q ** 3 * (c1 + q) * (c1 + q * q) * a ** 3)
        + E2 * E1 ** 4 * (q ** 6 * a ** 4)
    )
    cubic = (
        E1 * E2 * E2
        - E2 * E1 * E2 * ((c1 + q) * (c1 - q + q * q) * a)
        + E2 * E2 * E1 * (q ** 3 * a * a)
    )
    return [
        (
            "E_1^4E_2 - (1+q)(1+q^2) a E_1^3E_2E_1"
            " + q (1+q^2)(1+q+q^2) a^2 E_1^2E_2E_1^2"
            " - q^3 (1+q)(1+q^2) a^3 E_1E_2E_1^3 + q^6 a^4 E_2E_1^4 = 0",
            quartic,
            zero,
        ),
        (
            "E_1E_2^2 - (1+q)(1-q+q^2) a E_2E_1E_2 + q^3 a^2 E_2^2E_1 = 0",
            cubic,
            zero,
        ),
    ]


def _rows_hat(h):
    q, a, c1 = h["q"], h["a"], h["one"]
    H1, H2 = h["Eh_1"], h["Eh_2"]
    H12, H112 = h["Eh_12"], h["Eh_112"]
    H1112, H11212 = h["Eh_1112"], h["Eh_11212"]
    return [
        (
            "Eh_11212Eh_2 = a^3 q^6 Eh_2Eh_11212 + a^2 q^3 (q^3-1) Eh_12^3",
            H11212 * H2,
            H2 * H11212 * (a ** 3 * q ** 6)
            + H12 ** 3 * (a * a * q ** 3 * (q ** 3 - c1)),
        ),
        (
            "Eh_112Eh_2 = a^2 q^3 Eh_2Eh_112 + a (q^3-1) Eh_12^2",
            H112 * H2,
            H2 * H112 * (a * a * q ** 3) + H12 * H12 * (a * (q ** 3 - c1)),
        ),
        (
            "Eh_1112Eh_2 = a^3 q^3 Eh_2Eh_1112"
            " + a q^-2 (q^2-q-1)(q^3-1) Eh_11212"
            " + a^2 (q^3-1)(q^2+q+1) Eh_12Eh_112",
            H1112 * H2,
            H2 * H1112 * (a ** 3 * q ** 3)
            + H11212 * (a * q ** -2 * (q * q - q - c1) * (q ** 3 - c1))
            + H12 * H112 * (a * a * (q ** 3 - c1) * (q * q + q + c1)),
        ),
        (
            "Eh_1Eh_2 = a Eh_2Eh_1 + q^-3 (q^3-1) Eh_12",
            H1 * H2,
            H2 * H1 * a + H12 * (q ** -3 * (q ** 3 - c1)),
        ),
        (
            "Eh_112Eh_12 = a q^2 Eh_12Eh_112 + q^-1 (q-1) Eh_11212",
            H112 * H12,
            H12 * H112 * (a * q * q) + H11212 * (q ** -1 * (q - c1)),
        ),
        (
            "Eh_1112Eh_12 = a^2 q^3 Eh_12Eh_1112 + a (q^3-1) Eh_112^2",
            H1112 * H12,
            H12 * H1112 * (a * a * q ** 3) + H112 * H112 * (a * (q ** 3 - c1)),
        ),
        (
            "Eh_1Eh_12 = a q Eh_12Eh_1 + q^-2 (q^2-1) Eh_112",
            H1 * H12,
            H12 * H1 * (a * q) + H112 * (q ** -2 * (q * q - c1)),
        ),
        (
            "Eh_1112Eh_11212 = a^3 q^6 Eh_11212Eh_1112 + a^2 q^3 (q^3-1) Eh_112^3",
            H1112 * H11212,
            H11212 * H1112 * (a ** 3 * q ** 6)
            + H112 ** 3 * (a * a * q ** 3 * (q ** 3 - c1)),
        ),
        (
            "Eh_1Eh_11212 = a^2 q^3 Eh_11212Eh_1 + a (q^3-1) Eh_112^2",
            H1 * H11212,
            H11212 * H1 * (a * a * q ** 3) + H112 * H112 * (a * (q ** 3 - c1)),
        ),
        (
            "Eh_1Eh_112 = a q^2 Eh_112Eh_1 + q^-1 (q-1) Eh_1112",
            H1 * H112,
            H112 * H1 * (a * q * q) + H1112 * (q ** -1 * (q - c1)),
        ),
        # scalar rows carried over unchanged from the plain table
        ("Eh_12Eh_2 = a q^3 Eh_2Eh_12", H12 * H2, H2 * H12 * (a * q ** 3)),
        (
            "Eh_11212Eh_12 = a q^3 Eh_12Eh_11212",
            H11212 * H12,
            H12 * H11212 * (a * q ** 3),
        ),
        (
            "Eh_112Eh_11212 = a q^3 Eh_11212Eh_112",
            H112 * H11212,
            H11212 * H112 * (a * q ** 3),
        ),
        (
            "Eh_1112Eh_112 = a q^3 Eh_112Eh_1112",
            H1112 * H112,
            H112 * H1112 * (a * q ** 3),
        ),
        ("Eh_1Eh_1112 = a q^3 Eh_1112Eh_1", H1 * H1112, H1112 * H1 * (a * q ** 3)),
    ]


def _rows_coproduct(h):
    q, a, c1 = h["q"], h["a"], h["one"]
    E1, E2 = h["E_1"], h["E_2"]
    E12, E112, E1112, E11212 = h["E_12"], h["E_112"], h["E_1112"], h["E_11212"]
    K1, K2, unit = h["K_1"], h["K_2"], h["unit"]
    return [
        (
            "D(E_12) = E_12 (x) 1 + (1-q^-3) E_1K_2 (x) E_2 + K_1K_2 (x) E_12",
            coproduct(E12),
            tensor(E12, unit)
            + tensor(E1 * K2, E2).scale(c1 - q ** -3)
            + tensor(K1 * K2, E12),
        ),
        (
            "D(E_112) = E_112 (x) 1 + (1-q^-3)(1-q^-2) E_1^2K_2 (x) E_2"
            " + (1-q^-2)(1+q) E_1K_1K_2 (x) E_12 + K_1^2K_2 (x) E_112",
            coproduct(E112),
            tensor(E112, unit)
            + tensor(E1 * E1 * K2, E2).scale((c1 - q ** -3) * (c1 - q ** -2))
            + tensor(E1 * K1 * K2, E12).scale((c1 - q ** -2) * (c1 + q))
            + tensor(K1 * K1 * K2, E112),
        ),
        (
            "D(E_1112) = E_1112 (x) 1"
            " + (1-q^-3)(1-q^-2)(1-q^-1) E_1^3K_2 (x) E_2"
            " + (q^2-1)(1-q^-3) E_1^2K_1K_2 (x) E_12"
            " + q^-1 (q^3-1) E_1K_1^2K_2 (x) E_112 + K_1^3K_2 (x) E_1112",
            coproduct(E1112),
            tensor(E1112, unit)
            + tensor(E1 ** 3 * K2, E2).scale(
                (c1 - q ** -3) * (c1 - q ** -2) * (c1 - q ** -1)
            )
            + tensor(E1 * E1 * K1 * K2, E12).scale((q * q - c1) * (c1 - q ** -3))
            + tensor(E1 * K1 * K1 * K2, E112).scale(q ** -1 * (q ** 3 - c1))
            + tensor(K1 ** 3 * K2, E1112),
        ),
        (
            "D(E_11212) = E_11212 (x) 1 + q^-4 (q^3-1)^2 E_112E_1K_2 (x) E_2"
            " + a^-1 q^-5 (q^3-1)(q^2-q-1) E_1112K_2 (x) E_2"
            " + q^-1 (q^3-1) E_112K_1K_2 (x) E_12"
            " + a^-1 q^-12 (q^3-1)^2(q^2-1)(q-1) E_1^3K_2^2 (x) E_2^2"
            " + q^-6 (q^3-1)^2(q^2-1) E_1^2K_1K_2^2 (x) E_2E_12"
            " + q^-3 (q^3-1)(q^2-1) E_1K_1^2K_2^2 (x) E_12^2"
            " + K_1^3K_2^2 (x) E_11212",
            coproduct(E11212),
            tensor(E11212, unit)
            + tensor(E112 * E1 * K2, E2).scale(q ** -4 * (q ** 3 - c1) ** 2)
            + tensor(E1112 * K2, E2).scale(
                (q ** 3 - c1) * (q * q - q - c1) / (a * q ** 5)
            )
            + tensor(E112 * K1 * K2, E12).scale(q ** -1 * (q ** 3 - c1))
            + tensor(E1 ** 3 * K2 * K2, E2 * E2).scale(
                (q ** 3 - c1) ** 2 * (q * q - c1) * (q - c1) / (a * q ** 12)
            )
            + tensor(E1 * E1 * K1 * K2 * K2, E2 * E12).scale(
                q ** -6 * (q ** 3 - c1) ** 2 * (q * q - c1)
            )
            + tensor(E1 * K1 * K1 * K2 * K2, E12 * E12).scale(
                q ** -3 * (q ** 3 - c1) * (q * q - c1)
            )
            + tensor(K1 ** 3 * K2 * K2, E11212),
        ),
    ]


def _rows_hat_coproduct(h):
    q, a, c1 = h["q"], h["a"], h["one"]
    H1, H2 = h["Eh_1"], h["Eh_2"]
    H12, H112 = h["Eh_12"], h["Eh_112"]
    H1112, H11212 = h["Eh_1112"], h["Eh_11212"]
    K1, K2, unit = h["K_1"], h["K_2"], h["unit"]
    qq1 = q * q + q + c1
    return [
        (
            "D(Eh_12) = Eh_12 (x) 1 + Eh_1K_2 (x) Eh_2 + K_1K_2 (x) Eh_12",
            coproduct(H12),
            tensor(H12, unit) + tensor(H1 * K2, H2) + tensor(K1 * K2, H12),
        ),
        (
            "D(Eh_112) = Eh_112 (x) 1 + Eh_1^2K_2 (x) Eh_2"
            " + (q+1) Eh_1K_1K_2 (x) Eh_12 + K_1^2K_2 (x) Eh_112",
            coproduct(H112),
            tensor(H112, unit)
            + tensor(H1 * H1 * K2, H2)
            + tensor(H1 * K1 * K2, H12).scale(q + c1)
            + tensor(K1 * K1 * K2, H112),
        ),
        (
            "D(Eh_1112) = Eh_1112 (x) 1 + Eh_1^3K_2 (x) Eh_2"
            " + (q^2+q+1) Eh_1^2K_1K_2 (x) Eh_12"
            " + (q^2+q+1) Eh_1K_1^2K_2 (x) Eh_112 + K_1^3K_2 (x) Eh_1112",
            coproduct(H1112),
            tensor(H1112, unit)
            + tensor(H1 ** 3 * K2, H2)
            + tensor(H1 * H1 * K1 * K2, H12).scale(qq1)
            + tensor(H1 * K1 * K1 * K2, H112).scale(qq1)
            + tensor(K1 ** 3 * K2, H1112),
        ),
        (
            "D(Eh_11212) = Eh_11212 (x) 1"
            " + (q^2+q+1) Eh_112Eh_1K_2 (x) Eh_2"
            " + a^-1 q^-2 (q^2-q-1) Eh_1112K_2 (x) Eh_2"
            " + (q^2+q+1) Eh_112K_1K_2 (x) Eh_12"
            " + a^-1 q^-3 Eh_1^3K_2^2 (x) Eh_2^2"
            " + (q^2+q+1) Eh_1^2K_1K_2^2 (x) Eh_2Eh_12"
            " + (q^2+q+1) Eh_1K_1^2K_2^2 (x) Eh_12^2"
            " + K_1^3K_2^2 (x) Eh_11212",
            coproduct(H11212),
            tensor(H11212, unit)
            + tensor(H112 * H1 * K2, H2).scale(qq1)
            + tensor(H1112 * K2, H2).scale((q * q - q - c1) / (a * q * q))
            + tensor(H112 * K1 * K2, H12).scale(qq1)
            + tensor(H1 ** 3 * K2 * K2, H2 * H2).scale((a * q ** 3).inverse())
            + tensor(H1 * H1 * K1 * K2 * K2, H2 * H12).scale(qq1)
            + tensor(H1 * K1 * K1 * K2 * K2, H12 * H12).scale(qq1)
            + tensor(K1 ** 3 * K2 * K2, H11212),
        ),
    ]


_BUILDERS = {
    "main": _rows_main,
    "serre": _rows_serre,
    "hat": _rows_hat,
    "coproduct": _rows_coproduct,
    "hat_coproduct": _rows_hat_coproduct,
}


def rows(alg=None, sections=SECTIONS):
    """dict: section -> list of (display, lhs, rhs)."""
    h = handles(alg)
    return {s: _BUILDERS[s](h) for s in sections}

def check_suite(alg=None, sections=SECTIONS):
    """Evaluate every row; list of (section, display, bool)."""
    out = []
    for s, rws in rows(alg, sections).items():
        for display, lhs, rhs in rws:
            out.append((s, display, lhs == rhs))
    return out


def relation_lines(alg=None):
    """Frozen display strings for the relation dump, with section banners."""
    got = rows(alg)
    lines = []
    banners = {
        "main": "straightening relations",
        "serre": "Serre-type consequences",
        "hat": "rescaled generators",
        "coproduct": "coproducts",
        "hat_coproduct": "coproducts (rescaled)",
    }
    for s in SECTIONS:
        lines.append("# " + banners[s])
        if s == "hat":
            lines.extend(HAT_DEF_LINES)
        lines.extend(display for display, _, _ in got[s])
    return lines
