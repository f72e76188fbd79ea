"""Transcribed corpus: webs, domains, abbreviations and published tensor values.

Tensor expressions are written in the expression DSL and may use the local
abbreviations listed under "defs"; those are substituted textually (longest
name first, repeatedly) before parsing. Paths name engine tensors with
1-based indices in the usual order: "Gamma^1_12", "a_1", "p_21", "p",
"b^1_212", "p1_2" (the second-order p-derivative along the first family).
"""

from __future__ import annotations


def zeros(*paths: str) -> list[tuple[str, str]]:
    return [(p, "0") for p in paths]


def same(value: str, *paths: str) -> list[tuple[str, str]]:
    return [(p, value) for p in paths]


ALL_B1 = tuple(f"b^1_{j}{k}{l}" for j in "12" for k in "12" for l in "12")
ALL_B2 = tuple(f"b^2_{j}{k}{l}" for j in "12" for k in "12" for l in "12")
ALL_G1 = ("Gamma^1_11", "Gamma^1_12", "Gamma^1_21", "Gamma^1_22")
ALL_G2 = ("Gamma^2_11", "Gamma^2_12", "Gamma^2_21", "Gamma^2_22")


# Each row of the summary table, as {column: labels}; an empty tuple means the
# cell is blank (asserts that no label of that column applies).
def row(A=(), B=(), C=(), D=(), E=(), F=(), G=()):
    return {"A": tuple(A), "B": tuple(B), "C": tuple(C), "D": tuple(D),
            "E": tuple(E), "F": tuple(F), "G": tuple(G)}


EXAMPLES: dict[int, dict] = {}

EXAMPLES[1] = dict(
    f1="x1 + y1 + x1^2*y2/2",
    f2="x2 + y2 - x1*y2^2/2",
    domain=["x1*y2 != 1", "x1*y2 != -1"],
    defs={"D": "(1 + x1*y2)", "N": "(D^2 - 2*D + 2)"},
    tensors=[
        ("Gamma^1_12", "-x1/(D*(2 - D))"),
        ("Gamma^2_12", "y2/(D*(2 - D))"),
        *zeros("Gamma^1_11", "Gamma^1_21", "Gamma^1_22", "Gamma^2_11", "Gamma^2_21", "Gamma^2_22"),
        ("a_1", "y2/(D*(2 - D))"),
        ("a_2", "x1/(D*(2 - D))"),
        ("p_11", "2*y2^2*(D - 1)/(D^3*(2 - D)^2)"),
        ("p_21", "N/(D^3*(2 - D)^2)"),
        ("q_22", "2*x1^2*(D - 1)/(D^2*(2 - D)^3)"),
        ("q_12", "N/(D^2*(2 - D)^3)"),
        *zeros("p_12", "p_22", "q_11", "q_21"),
        ("p", "-N/(2*D^3*(2 - D)^2)"),
        ("q", "N/(2*D^2*(2 - D)^3)"),
        ("p1_1", "y2*(-D^3 + 4*D^2 - 8*D + 6)/(D^5*(2 - D)^3)"),
        ("p2_2", "x1*(-D^3 + 3*D^2 - 6*D + 4)/(D^4*(2 - D)^4)"),
        ("q1_1", "y2*(D^3 - 3*D^2 + 6*D - 4)/(D^4*(2 - D)^4)"),
        ("q2_2", "x1*(D^3 - 2*D^2 + 4*D - 2)/(D^3*(2 - D)^5)"),
        *zeros("p1_2", "q1_2", "p2_1", "q2_1"),
        ("b^1_112", "-N/(D^3*(2 - D)^2)"),
        ("b^1_212", "-2*x1^2*(D - 1)/(D^2*(2 - D)^3)"),
        ("b^2_112", "-2*y2^2*(D - 1)/(D^3*(2 - D)^2)"),
        ("b^2_212", "-N/(D^2*(2 - D)^3)"),
        *zeros("b^1_111", "b^1_121", "b^1_122", "b^1_211", "b^1_221", "b^1_222",
               "b^2_111", "b^2_121", "b^2_122", "b^2_211", "b^2_221", "b^2_222"),
    ],
    table=row(B=["B"], C=["C"], E=["E11"], F=["F"]),
    # level functions of the fourth foliation
    u4=("-x1 + y1 + x1^2*y2/2", "x2 - y2 - x1*y2^2/2"),
)

EXAMPLES[2] = dict(
    f1="x1 + y1",
    f2="x1*y1 + x2*y2",
    domain=["x2 != 0", "y2 != 0"],
    defs={"M": "(x2*y2^2)"},
    tensors=[
        ("Gamma^2_11", "y1/y2 - 1"),
        ("Gamma^2_21", "1/y2"),
        *zeros("Gamma^2_12", "Gamma^2_22", *ALL_G1),
        ("a_1", "-1/y2"),
        ("a_2", "0"),
        *zeros("p_11", "p_12", "p_21", "p_22", "q_21", "q_22"),
        ("q_11", "-x1/M"),
        ("q_12", "-1/M"),
        ("p", "0"),
        ("q", "-1/(2*M)"),
        *zeros(*ALL_B1),
        ("b^2_112", "y1/M"),
        ("b^2_121", "-x1/M"),
        ("b^2_211", "(y1 - x1)/M"),
        ("b^2_111", "-1/y2 - x1*y1/M"),
        *same("1/M", "b^2_122", "b^2_221"),
        *zeros("b^2_212", "b^2_222"),
    ],
    table=row(A=["A21", "A22"], C=["C"], E=["E22"], G=["G1"]),
)

EXAMPLES[3] = dict(
    f1="x1*y1 - x2*y2",
    f2="x1*y2 + x2*y1",
    domain=["y1^2 + y2^2 != 0", "x1^2 + x2^2 != 0"],
    defs={
        "D1": "(y1^2 + y2^2)", "D2": "(x1^2 + x2^2)",
        "al": "(x1*y1 + x2*y2)", "be": "(x1*y2 - x2*y1)",
        "ga": "(x2*(y1^2 - y2^2) + 2*x1*y1*y2)",
        "rh": "(x1*(y1^2 - y2^2) + 2*x2*y1*y2)",
        "si": "(y1*(x1^2 - x2^2) + 2*x1*x2*y2)",
        "u1": "(x1*y1 - x2*y2)", "u2": "(x1*y2 + x2*y1)",
    },
    tensors=[
        *same("-al/(D1*D2)", "Gamma^1_11", "Gamma^1_22", "Gamma^2_21"),
        ("Gamma^2_12", "al/(D1*D2)"),
        *same("be/(D1*D2)", "Gamma^1_12", "Gamma^2_11", "Gamma^2_22"),
        ("Gamma^1_21", "-be/(D1*D2)"),
        ("a_1", "2*al/(D1*D2)"),
        ("a_2", "-2*be/(D1*D2)"),
        ("p_11", "4*y2^2/(D1*D2^2)"),
        ("p_22", "4*x1^2/(D1*D2^2)"),
        *same("4*y2^2/(D1^2*D2)", "q_11", "q_22"),
        *same("-4*x1*x2/(D1*D2^2)", "p_12", "p_21"),
        ("q_12", "-4*y1*y2/(D1^2*D2)"),
        ("q_21", "4*y1*y2/(D1^2*D2)"),
        ("p", "0"),
        ("q", "-4*y1*y2/(D1^2*D2)"),
        ("b^1_111", "2*be*u2/(D1^2*D2^2)"),
        ("b^1_112", "2*x1*y1/(D1*D2^2)"),
        ("b^1_121", "-2*y1*y2/(D1^2*D2)"),
        ("b^1_211", "0"),
        ("b^1_222", "-2*be*u1/(D1^2*D2^2)"),
        ("b^1_122", "-1/(D1*D2)"),
        ("b^1_212", "2*y2^2/(D1^2*D2)"),
        ("b^1_221", "(x1^2 - x2^2)/(D1*D2^2)"),
        ("b^2_111", "2*al*u2/(D1^2*D2^2)"),
        ("b^2_112", "2*x2^2/(D1*D2^2)"),
        ("b^2_121", "2*x2*ga/(D1^2*D2^2)"),
        ("b^2_211", "2*x1*rh/(D1^2*D2^2)"),
        ("b^2_222", "-2*al*u1/(D1^2*D2^2)"),
        ("b^2_122", "al^2/(D1^2*D2^2)"),
        ("b^2_212", "-2*x2*ga/(D1^2*D2^2)"),
        ("b^2_221", "2*y2*si/(D1^2*D2^2)"),
    ],
    table=row(B=["B"], C=["C"], E=["E12"], G=["G1"]),
)

EXAMPLES[4] = dict(
    f1="x1 + y1",
    f2="x1^2*y2 + x2^2*y1",
    domain=["x1 != 0", "x2 != 0", "y1 != 0"],
    defs={},
    tensors=[
        *zeros(*ALL_G1, "Gamma^2_22"),
        ("Gamma^2_11", "y2^2/x1^2 + x1*y2/(x2*y1)"),
        ("Gamma^2_12", "-1/x1^2"),
        ("Gamma^2_21", "-1/(2*x2*y1)"),
        ("a_1", "-1/x1^2 + 1/(2*x2*y1)"),
        ("a_2", "0"),
        ("p_11", "2/x1^3 + x1*y2/(2*x2^3*y1^2)"),
        ("p_12", "-1/(4*x2^3*y1^2)"),
        ("q_11", "-1/(2*x2*y1^2)"),
        *zeros("p_21", "p_22", "q_21", "q_22", "q_12"),
        ("p", "-1/(8*x2^3*y1^2)"),
        ("q", "0"),
        *zeros(*ALL_B1),
        *zeros("b^2_222", "b^2_122", "b^2_212"),
        ("b^2_221", "1/(2*x2^3*y1^2)"),
        ("b^2_111", "2*y2^2*(y2 - x1)/x1^4 + y2*(x1 + y2)/(x1*x2*y1) + x1*y2*(x1*y2 + x2^2)/(x2^3*y1^2)"),
        ("b^2_112", "(2*x1 - 1)*(4*(x2*y1 - x1^2))/(4*x1^4*x2*y1)"),
        ("b^2_121", "-(2*x1^2*(x1*y2 - x2*y1) + x2^2*y1)/(4*x1^2*x2^3*y1^2)"),
    ],
    table=row(A=["A21", "A22"], C=["C"], E=["E22"], G=["G2"]),
)

EXAMPLES[5] = dict(
    f1="x2*exp(x1*y1)",
    f2="x2 + y2",
    domain=["x1 != 0", "x2 != 0", "y1 != 0"],
    defs={"M": "(x1*x2*y1)", "E": "exp(-x1*y1)"},
    tensors=[
        *zeros(*ALL_G2, "Gamma^1_12", "Gamma^1_22"),
        ("Gamma^1_11", "-(1 + x1*y1)*E/M"),
        ("Gamma^1_21", "1/M"),
        ("a_1", "0"),
        ("a_2", "-1/M"),
        *zeros("p_11", "p_12", "q_11", "q_12", "q_22"),
        ("p_22", "-(1 + x1*y1)/M^2"),
        *same("-E/M^2", "p_21", "q_21"),
        *same("E/(2*M^2)", "p", "q"),
        *zeros(*ALL_B2, "b^1_111", "b^1_222", "b^1_112", "b^1_121", "b^1_122"),
        ("b^1_211", "-E/M^2"),
        ("b^1_212", "(1 - x1*y1)/(2*M^2)"),
        ("b^1_221", "(1 - x1*y1)/M^2"),
    ],
    table=row(A=["A31", "A32"], C=["C"], E=["E31"], G=["G3"]),
)

EXAMPLES[6] = dict(
    f1="x1 + y1",
    f2="-x1*y1 + x2*y2",
    domain=["x2 != 0", "y2 != 0"],
    defs={"M": "(x2*y2)"},
    tensors=[
        *zeros(*ALL_G1),
        ("Gamma^2_11", "1 - x1*y1/M"),
        ("Gamma^2_12", "-y1/M"),
        ("Gamma^2_21", "-x1/M"),
        ("Gamma^2_22", "-1/M"),
        ("a_1", "(x1 - y1)/M"),
        ("a_2", "0"),
        *zeros("p_21", "p_22", "q_21", "q_22"),
        *same("(y1 - x1)/M^2", "p_12", "q_12"),
        ("p_11", "(x2*y1 - x1*y2 + y1^2)/M^2"),
        ("q_11", "(-x2*y1 + x1*y2 - x1^2)/M^2"),
        *same("(y1 - x1)/(2*M^2)", "p", "q"),
        *zeros(*ALL_B1, "b^2_222", "b^2_211", "b^2_212"),
        ("b^2_111", "(x1 - y1)*(M - x1*y1)/M^2"),
        ("b^2_112", "(y1^2 - x1*y1 + M)/M^2"),
        ("b^2_121", "(-x1^2 + x1*y1 - M)/M^2"),
        ("b^2_122", "(y1 - x1)/M^2"),
        ("b^2_221", "(y1 - x1)/(2*M^2)"),
    ],
    table=row(A=["A21", "A22"], C=["C"], E=["E23"], G=["G3"]),
)

EXAMPLES[7] = dict(
    f1="x1*y1 + x2*y2^2",
    f2="x2 + y2",
    domain=["x1 != 0", "y1 != 0"],
    defs={"M": "(x1*y1)", "u1": "(x1*y1 + x2*y2^2)"},
    tensors=[
        *zeros(*ALL_G2),
        ("Gamma^1_11", "-1/M"),
        ("Gamma^1_12", "2*x2*y2/M"),
        ("Gamma^1_21", "y2^2/M"),
        ("Gamma^1_22", "-2*y2*(x2*y2^2 + M)/M"),
        ("a_1", "0"),
        ("a_2", "y2*(-2*x2 + y2)/M"),
        *zeros("p_11", "p_12", "q_11", "q_12"),
        ("p_22", "y2^2*(y2^2 - 2*x1*y2 - 2*x1*y1)/M^2"),
        *same("(2*x2 - y2)*y2/M^2", "p_21", "q_21"),
        ("q_22", "2*x2*y2^2*(y2 - 2*x2)/M^2"),
        *same("-M^2/((2*x2 - y2)*y2)", "p", "q"),
        *zeros(*ALL_B2, "b^1_111", "b^1_112", "b^1_121", "b^1_122", "b^1_211"),
        ("b^1_222", "2*u1*(y2^2*(2*x2 - y2) + M)/M^2"),
        ("b^1_212", "2*x2*y2^2*(y2 - 2*x2)/M^2"),
        ("b^1_221", "(y2^3*(y2 - 2*x2) - 2*M*y2)/M^2"),
    ],
    table=row(A=["A31", "A32"], C=["C"], E=["E32"], G=["G3"]),
)

EXAMPLES[10] = dict(
    f1="x1 + y1 + x1*y2",
    f2="x2 + y2 + x2*y1",
    domain=["(1 + y1)*(1 + y2) != 0", "1 - x1*x2 != 0"],
    defs={
        "D1": "((1 + y1)*(1 + y2))", "D2": "(1 - x1*x2)",
        "A1": "(1/((1 + y1)*D2))", "A2": "(y2/(D1*D2))",
    },
    tensors=[
        ("Gamma^1_11", "x2*y2/(D1*D2)"),
        ("Gamma^1_12", "-y2/(D1*D2)"),
        *zeros("Gamma^2_11", "Gamma^2_12", "Gamma^1_21", "Gamma^1_22"),
        ("Gamma^2_22", "x1/((1 + y1)*D2)"),
        ("Gamma^2_21", "-1/((1 + y1)*D2)"),
        ("a_1", "A1"),
        ("a_2", "A2"),
        *same("A1*(A1*x1 + A2)", "p_12", "q_12"),
        ("q_11", "-A1*(A2*x2 + A1)"),
        *same("A2*(A2*x2 + A1)", "p_21", "q_21"),
        ("q_22", "-A2*(A1*x1 + A2)"),
        *zeros("p_11", "p_22"),
        *same("(A1^2*x1 - A2^2*x2)/2", "p", "q"),
        *zeros("b^1_111", "b^1_222", "b^2_111", "b^2_222", "b^1_121", "b^1_122",
               "b^1_211", "b^1_221", "b^2_112", "b^2_212", "b^2_211", "b^2_221"),
        ("b^1_112", "-x2/(2*(1 + y2)^2*D2^2)"),
        ("b^1_212", "-(x1 + y1 + x1*y2 + 1)/((1 + y2)*D1*D2^2)"),
        ("b^2_121", "-(x2 + y2 + x2*y1 + 1)/((1 + y1)*D1*D2^2)"),
        ("b^2_122", "(x1 + y1 + x1*y2 + 1)/((1 + y1)*D1*D2^2)"),
    ],
    table=row(B=["B"], C=["C"], E=["E131"], G=["G3"]),
)

EXAMPLES[11] = dict(
    f1="x1 + y1 + x1^2*y2/2",
    f2="x2 + y2 + x1*y2^2/2",
    domain=["x1*y2 != -1"],
    defs={"D": "(1 + x1*y2)"},
    tensors=[
        ("Gamma^1_12", "-x1/D^2"),
        ("Gamma^2_12", "-y2/D^2"),
        *zeros("Gamma^1_11", "Gamma^1_21", "Gamma^1_22", "Gamma^2_11", "Gamma^2_21", "Gamma^2_22"),
        ("a_1", "-y2/D^2"),
        ("a_2", "x1/D^2"),
        *zeros("p_12", "p_22", "q_11", "q_21"),
        ("p_11", "2*y2^2/D^4"),
        ("q_22", "-2*x1^2/D^4"),
        ("p_21", "(1 - x1*y2)/D^4"),
        ("q_12", "-(1 - x1*y2)/D^4"),
        *same("(x1*y2 - 1)/(2*D^4)", "p", "q"),
        *zeros("b^1_111", "b^1_222", "b^2_111", "b^2_222", "b^1_121", "b^1_122",
               "b^1_211", "b^1_221", "b^2_211", "b^2_221", "b^2_121", "b^2_122"),
        *same("(x1*y2 - 1)/D^4", "b^1_112", "b^2_112"),
        ("b^2_212", "-(x1*y2 - 1)/D^4"),
        ("b^1_212", "-2*x1^2/D^3"),
    ],
    table=row(B=["B"], C=["C"], E=["E111"], G=["G3"]),
)

EXAMPLES[12] = dict(
    f1="(x1 + y1)*(x2 - y2)",
    f2="(x1 - y1)*(x2 + y2)",
    domain=["x1*y2 + x2*y1 != 0"],
    defs={
        "D": "(x1*y2 + x2*y1)",
        "u1": "((x1 + y1)*(x2 - y2))", "u2": "((x1 - y1)*(x2 + y2))",
        "al": "(x1^2*y2 - x1*x2*y1 - 2*y1^2*y2)",
        "be": "(x2^2*y1 - x1*x2*y2 - 2*y1*y2^2)",
        "ga": "(x1*y2^2 - x2*y1*y2 - 2*x1*x2^2)",
        "de": "(x2*y1^2 - x1*y1*y2 - 2*x1^2*x2)",
        "rh": "(x1*x2 + y1*y2)", "si": "(x1*y2 - x2*y1)",
        "S": "((si^2 - 2*((x1*x2)^2 + (y1*y2)^2))/D^4)",
    },
    tensors=[
        ("Gamma^1_11", "u2/(2*D^2)"),
        ("Gamma^2_11", "-u2/(2*D^2)"),
        ("Gamma^1_22", "-u1/(2*D^2)"),
        ("Gamma^2_22", "u1/(2*D^2)"),
        *same("rh/(2*D^2)", "Gamma^1_12", "Gamma^2_21"),
        *same("-rh/(2*D^2)", "Gamma^1_21", "Gamma^2_12"),
        *same("-rh/(2*D^2)", "a_1", "a_2"),
        *same("(be*(x1 - y1) - al*(x2 + y2))/(2*D^4)", "p_11", "p_21"),
        *same("(-be*(x1 + y1) + al*(x2 - y2))/(2*D^4)", "p_12", "p_22"),
        *same("(ga*(x1 - y1) + de*(x2 + y2))/(2*D^4)", "q_11", "q_21"),
        *same("(ga*(x1 + y1) + de*(x2 - y2))/(2*D^4)", "q_12", "q_22"),
        *same("rh*si/D^4", "p", "q"),
        *same("u2*rh/D^4", "b^2_111", "b^2_211"),
        *same("-u2*rh/D^4", "b^1_111", "b^1_211"),
        ("b^1_222", "u1*rh/D^4"),
        *same("-u1*rh/D^4", "b^2_222", "b^1_122", "b^2_122"),
        *same("S", "b^1_112", "b^1_212", "b^2_121", "b^2_221"),
        *same("-S", "b^1_121", "b^1_221", "b^2_112", "b^2_212"),
    ],
    table=row(A=["A131", "A132"], C=["C"], G=["G3"]),
)

EXAMPLES[13] = dict(
    f1="x2*y2*exp(x1*y1)",
    f2="x2 + y2",
    domain=["x1 != 0", "x2 != 0", "y1 != 0", "y2 != 0"],
    defs={"M": "(x1*x2*y1*y2)", "E": "exp(-x1*y1)"},
    tensors=[
        ("Gamma^1_12", "1/(x1*y1*y2)"),
        ("Gamma^1_21", "1/(x1*x2*y1)"),
        ("Gamma^1_22", "-exp(x1*y1)/(x1*y1)"),
        ("Gamma^1_11", "-(1 + x1*y1)*E/M"),
        *zeros(*ALL_G2),
        ("a_1", "0"),
        ("a_2", "(x2 - y2)/M"),
        *zeros("p_11", "p_12", "q_11", "q_12"),
        *same("(y2 - x2)*E/M^2", "p_21", "q_21"),
        ("p_22", "(x2 - y2 + x1*y1*y2)/((x1*x2*y1)^2*y2)"),
        ("q_22", "(x2 - y2 - x1*x2*y1)/((x1*y1*y2)^2*x2)"),
        *same("(x2 - y2)*E/(2*M^2)", "p", "q"),
        *zeros(*ALL_B2, "b^1_111", "b^1_112", "b^1_121", "b^1_122"),
        ("b^1_211", "(x2 - y2)*(2 - x1*y1)*E/M^2"),
        ("b^1_212", "(2*(y2 - x2) + x1*x2*y1)/((x1*y1*y2)^2*x2)"),
        ("b^1_222", "(x2 - y2)*(2 - x1*y1)*exp(x1*y1)/((x1*y1)^2*x2*y2)"),
        ("b^1_221", "(2*(y2 - x2) + x1*y1*y2)/((x1*x2*y1)^2*y2)"),
    ],
    table=row(A=["A31", "A32"], C=["C"], E=["E32"], G=["G3"]),
)

EXAMPLES[14] = dict(
    f1="y2*exp(x1*y1)",
    f2="x2 + y2",
    domain=["x1 != 0", "y1 != 0", "y2 != 0"],
    defs={"M": "(x1*y1*y2)", "E": "exp(-x1*y1)"},
    tensors=[
        ("Gamma^1_11", "-(1 + x1*y1)*E/M"),
        ("Gamma^1_12", "1/M"),
        *zeros("Gamma^1_21", "Gamma^1_22", *ALL_G2),
        ("a_1", "0"),
        ("a_2", "-1/M"),
        *zeros("p_11", "p_12", "q_11", "q_12", "p_22"),
        *same("E/M^2", "p_21", "q_21"),
        ("q_22", "-1/M^2"),
        *same("-E/(2*M^2)", "p", "q"),
        *zeros(*ALL_B2, "b^1_111", "b^1_112", "b^1_121", "b^1_122", "b^1_221", "b^1_222"),
        ("b^1_211", "E*(3 + 2*x1*y1)/M^2"),
        ("b^1_212", "(x1*y1 - 1)/M^2"),
    ],
    table=row(A=["A31", "A32"], C=["C"], E=["E321"], G=["G3"]),
)

EXAMPLES[15] = dict(
    f1="exp(x1*y1) + x2*y2",
    f2="x2 + y2",
    domain=["x1 != 0", "y2 != 0"],
    defs={
        "A": "(1 + 1/(x1*y1))", "B": "(A + 1/(x1*y1)^2)", "E": "exp(-x1*y1)",
        "P21": "((y2 - x2)*B*E^2)",
    },
    tensors=[
        ("Gamma^1_11", "-A*E"),
        ("Gamma^1_12", "A*x2*E"),
        ("Gamma^1_21", "A*y2*E"),
        ("Gamma^1_22", "-A*x2*y2*E - 1"),
        *zeros(*ALL_G2),
        ("a_1", "0"),
        ("a_2", "A*(x2 - y2)*E"),
        *zeros("p_11", "p_12", "q_11", "q_12"),
        *same("P21", "p_21", "q_21"),
        ("p_22", "-y2*P21 + A*E"),
        ("q_22", "-x2*P21"),
        *same("(x2 - y2)*B*E^2/2", "p", "q"),
        *zeros(*ALL_B2, "b^1_111", "b^1_112", "b^1_121", "b^1_122"),
        ("b^1_211", "(x2 - y2)*(B + A^2)*E^2"),
        ("b^1_212", "A*E - B*x2^2*E^2"),
        ("b^1_221", "-A*E - (x2 - y2)*y2*(B + A^2)*E^2"),
        ("b^1_222", "(4*x2 - 3*y2)*(A*E + x2*y2*B*E^2)/2"),
    ],
    table=row(A=["A31", "A32"], C=["C"], E=["E32"], G=["G3"]),
)

EXAMPLES[16] = dict(
    f1="(x1 + y1)^3/6 + (x1^2 + y1^2 + 2*x2*y2)/2",
    f2="x2 + y2",
    domain=["(x1 + y1)^2/2 + x1 != 0", "(x1 + y1)^2/2 + y1 != 0"],
    defs={
        "al": "(x1 + y1)", "be": "(x2 - y2)",
        "D1": "(al^2/2 + x1)", "D2": "(al^2/2 + y1)",
        "A": "(3/4*al^4 + al^3 + y1^2)", "B": "(3/4*al^4 + al^3 + x1^2)",
        "P21": "(be*A/(D1^3*D2^2))", "Q21": "(be*B/(D1^2*D2^3))",
        "R11": "(-3*al^2*(al + 1)*be/(2*D1^4*D2^2) + 3*A*(al + 1)*be/(2*D1^5*D2^2) + A*al*be/(2*D1^4*D2^3))",
        "R21": "(-(3*al^2*(al + 1) + 2*y1)*be/(2*D1^3*D2^3) + A*al*be/(D1^4*D2^3) + A*(al + 1)*be/(D1^3*D2^4))",
        "S11": "(-(3*al^2*(al + 1) + 2*x1)*be/(2*D1^3*D2^3) + B*al*be/(D1^3*D2^4) + B*(al + 1)*be/(D1^4*D2^3))",
        "S21": "(-3*al^2*(al + 1)*be/(2*D1^2*D2^4) + 3*B*(al + 1)*be/(2*D1^2*D2^5) + B*al*be/(2*D1^3*D2^4))",
        "W": "(x2*D1 - y2*D2)",
    },
    tensors=[
        ("Gamma^1_11", "-al/(D1*D2)"),
        ("Gamma^1_12", "al*x2/(D1*D2)"),
        ("Gamma^1_21", "al*y2/(D1*D2)"),
        ("Gamma^1_22", "-(al*x2*y2/(D1*D2) + 1)"),
        *zeros(*ALL_G2),
        ("a_1", "0"),
        ("a_2", "-al*be/(D1*D2)"),
        *zeros("p_11", "p_12", "q_11", "q_12"),
        ("p_21", "P21"),
        ("p_22", "-y2*P21 - al/(D1*D2)"),
        ("q_21", "Q21"),
        ("q_22", "-x2*Q21 + al/(D1*D2)"),
        ("p", "-be*A/(2*D1^3*D2^2)"),
        ("q", "-be*B/(2*D1^2*D2^3)"),
        ("b^1_111", "(x1 - y1)/(D1^3*D2^3)*(-3/4*al^4 - 3/2*al^3 - al^2 + x1*y1)"),
        ("b^1_112", "(x1 - y1)*x2/(D1^3*D2^3)*(3/4*al^4 - 1/2*al^3 - al^2 - x1*y1)"),
        *same("((y2*D2 - x2*D1)*(D1*D2 - al^2*(D1 + D2)) + al*(x2*D1^2 - y2*D2^2))/(D1^3*D2^3)",
              "b^1_121", "b^1_211"),
        ("b^1_122", "al*(al + 1)*x2*y2/(D1^3*D2^3)*(1/4*al^4 + 1/2*al^3 + al*(al + 1)*(x1 - y1) + x1*y1)"),
        ("b^1_212", "(al^2*(al + 1)*(D2*y2*be - D1*x2^2) + y2*be*D2^2*(2*al - D1/2) + x2^2*D1^2*(1 - al))/(D1^3*D2^3)"),
        ("b^1_221", "al/(4*D1^3*D2^3)*(y2*W*(4*x1*y1/(W*al) - al^2*(3*al + 2)) + 4*x2*(y2*D2^2 - x2*D1^2) - 4*D1^2*D2^2)"),
        ("b^1_222", "al/(D1^3*D2^3)*(-be*D1^2*D2^2 + x2*y2*(al + 1)*(D1*D2 - al^2*(x2*D1 + y2*D2)) - x2*y2*(x2*D1^2 + y2*D2^2))"),
        *zeros(*ALL_B2),
        ("p1_1", "R11"),
        ("p1_2", "-y2*R11 - A/(2*D1^3*D2^2)"),
        ("p2_1", "R21"),
        ("p2_2", "-x2*R21 + A/(2*D1^3*D2^2)"),
        ("q1_1", "S11"),
        ("q1_2", "-y2*S11 - B/(2*D1^2*D2^3)"),
        ("q2_1", "S21"),
        ("q2_2", "-x2*S21 + B/(2*D1^2*D2^3)"),
    ],
    table=row(A=["A31"], C=["C"], E=["E3"], G=["G4"]),
)

EXAMPLES[17] = dict(
    f1="x1 + y1 + x1^2*y2/2",
    f2="x2 + y2 + x2^2*y1/2",
    domain=["x1*y2 != -1", "x2*y1 != -1", "x1*x2 != 2", "x1*x2 != -2"],
    defs={
        "al": "(1 + x1*y2)", "be": "(1 + x2*y1)",
        "D1": "(al*be)", "D2": "((4 - (x1*x2)^2)/4)",
        "A": "(2*al + be*x1*x2)", "B": "(2*be + al*x1*x2)",
        "Q": "((x1*x2)^2/(4*D2^2)*(1/be^2 - 1/al^2))",
        "S11": "(x1*x2^2*(4 + (x1*x2)^2)/(4*al*D2^3)*(1/be^2 - 1/al^2) + (x1*x2)^2*y2/(al^4*D2^2))",
        "S12": "(x1^2*x2*(4 + (x1*x2)^2)/(4*be*D2^3)*(1/be^2 - 1/al^2) - (x1*x2)^2*y1/(be^4*D2^2))",
        "S21": "(x1^2*x2^3/(4*al*D2^2)*(3*x1*y1/(al^2*D2) - 1/be*(x1*x2/be + 2/al)))",
        "S22": "(x1^3*x2^2/(4*be*D1^2*D2^3)*(x1*y1*(al^2 + be^2) + 2*D1))",
        "K": "(x2/(4*be*D2^2)*(1/al^3 + 2/be^3))",
        "L": "(x1/(4*al*D2^2)*(2/al^3 + 1/be^3))",
    },
    tensors=[
        ("Gamma^1_11", "be*x1*x2^2/(2*D1*D2)"),
        ("Gamma^2_22", "al*x1^2*x2/(2*D1*D2)"),
        ("Gamma^1_12", "-be*x1/(D1*D2)"),
        ("Gamma^2_21", "-al*x2/(D1*D2)"),
        *zeros("Gamma^1_21", "Gamma^1_22", "Gamma^2_11", "Gamma^2_12"),
        ("a_1", "al*x2/(D1*D2)"),
        ("a_2", "be*x1/(D1*D2)"),
        *zeros("p_11", "p_22"),
        ("q_11", "-A*x2^2/(2*D1*D2^2*be)"),
        ("p_12", "1/(D2*be^3) + (x1*x2)^2/(2*D2^2*be^2) + x1*x2/(D1*D2)"),
        ("q_12", "B*x1*x2/(2*D1*D2^2*be)"),
        ("p_21", "1/(D2*al^3) + (x1*x2)^2/(2*D2^2*al^2) + x1*x2/(D1*D2)"),
        ("q_21", "A*x1*x2/(2*D1*D2^2*al)"),
        ("q_22", "-B*x1^2/(2*D1*D2^2*al)"),
        ("q", "Q"),
        ("p", "Q + 1/(2*D2)*(1/be^3 - 1/al^3)"),
        ("b^1_111", "x2^2/(2*al^3*D2^2)*(D2 + al*(x1*x2)^2/4)"),
        ("b^1_121", "-x1*x2/(4*D1*D2^2)"),
        ("b^1_112", "(-2*D2 + al*(x1*x2)^2)/(4*al^3*D2^2)"),
        ("b^1_211", "x1*x2/(8*al*D1*D2^2)*(4*al - be*x1*x2^3)"),
        ("b^1_212", "-x1^2/(4*al*D2^2)*(al*x1*x2*(1 + x2) + 2*be*(2 + x2^2))"),
        *zeros("b^1_122", "b^1_222", "b^1_221"),
        ("b^2_222", "x1^2/(8*be^3*D2^2)*(4*D2 + be*(x1*x2)^2)"),
        ("b^2_121", "-A*x2^2/(2*be*D1*D2^2)"),
        ("b^2_122", "x1*x2/(2*be*D1*D2)*(2*al*x1*x2 + be*(1 - x2))"),
        ("b^2_212", "x1*x2^2/(2*D1*D2^2)"),
        ("b^2_221", "-x1^2/(4*be^3*D2^2)*(4*D2 + be*(x1*x2)^2)"),
        *zeros("b^2_111", "b^2_211", "b^2_112"),
        ("q1_1", "S11"),
        ("q1_2", "S12"),
        ("q2_1", "S21"),
        ("q2_2", "S22"),
        ("p1_1", "S11 + 3*y2/(2*al^5*D2)"),
        ("p1_2", "S12 - 3*y1/(2*be^5*D2)"),
        ("p2_1", "S21 - 2*K - x2^2*L"),
        ("p2_2", "S22 + x1^2*K + 2*L"),
    ],
    table=row(B=["B"], C=["C"], E=["E13"], G=["G4"]),
)

EXAMPLES[18] = dict(
    f1="x1 + y1 + x1*y2",
    f2="x1*y1 + x2*y2",
    domain=["y2 != 0", "y2 != -1", "x1^2 != x2"],
    defs={
        "D1": "(y2*(1 + y2))", "D2": "(x2 - x1^2)",
        "PV": "(((x1 - y1)*(1 + y2) - x1*(x2 + y1)*D1 + x2*y1*y2)/(2*D1^2*D2^2))",
        "QV": "((x1*(1 + y2 - y2^2*(x2 + 1)) + y1*(1 + 2*y2))/(2*D1^2*D2^2))",
    },
    tensors=[
        ("Gamma^1_11", "x1*y2/(D1*D2)"),
        ("Gamma^1_12", "-x2*y2/(D1*D2)"),
        ("Gamma^2_12", "(x1*y2 + y1)/(D1*D2)"),
        ("Gamma^2_22", "-1/(y2*D2)"),
        ("Gamma^2_11", "-(x1*y1 + x2*y2)/(D1*D2)"),
        ("Gamma^2_21", "x1/(y2*D2)"),
        *zeros("Gamma^1_21", "Gamma^1_22"),
        ("a_1", "(y1 - x1)/(D1*D2)"),
        ("a_2", "x2*y2/(D1*D2)"),
        ("p_11", "((x1*y1 + x2*y2)*(1 - x2*y2) - x1*y2*(2*x1 - 3*y1) + y1^2)/(D1^2*D2^2)"),
        ("q_11", "((x1*y1 + x2*y2)*(1 + x2 + y2) - x1^2*(1 + y2))/(D1^2*D2^2)"),
        ("p_12", "(x1 - y1 - x1*x2*y2)/(D1^2*D2*y2)"),
        ("p_21", "(x1*y2*(x2*y2 + x1*y1 + x1 - y1) - x2*y1*y2)/(D1^2*D2^2)"),
        ("q_12", "((x1 + y1)*y2 + (1 + y2)*(x1 + y1 - x1*y2 - x1*x2*y2))/(D1^2*D2^2)"),
        ("q_21", "-x1*x2*y2/(D1^2*D2^2)"),
        ("p_22", "1/(D1*D2)"),
        ("q_22", "x2*y2/(D1^2*D2^2)"),
        ("p", "PV"),
        ("q", "QV"),
        ("b^1_111", "(x1*y1 + x2*y2)*(2*y2 + x1*(1 + y2))/(2*D1^2*D2^2)"),
        ("b^2_111", "(y1*y2*(x1 - 3*x2 - 2*x1^2) + 2*x1*x2*y2*(1 - y2) - x2^2*y1)/(2*D1^2*D2^2)"),
        ("b^1_112", "(x2*y2*(x1*y1 + x2*y2 - 3*x1*y2) + x1*y2*(y2 - 2*x1*y1))/(2*D1^2*D2^2)"),
        ("b^1_121", "x1*(x2 - 1)/(2*D1*D2^2)"),
        ("b^1_211", "(x2*y2^2 - x1*D1)/(2*D1^2*D2^2)"),
        ("b^2_222", "(1 - y2)/(y2^2*D2^2)"),
        *same("-1/(2*D1*D2)", "b^1_122", "b^1_212"),
        *zeros("b^1_221", "b^1_222", "b^2_221"),
        ("b^2_112", "(x1*y2*(2*x2*y2 - 2*x1 - x2 - y2 - 1 + x2*y1 - 3*x1*y2) + y1*y2*(x2 - 4*x1) - x1^2*y1 + x2*y2*(x2*y2 - y2 - 1))/(2*D1^2*D2^2)"),
        ("b^2_121", "(x1*(2*y1 - 2*x1*(1 + y2) - y2) + x2*(x2 + y2*(3 - x1)))/(2*D1*D2^2*y2)"),
        ("b^2_211", "(x1*y2*(y2*(y1 - x1 - 2) - x2*y1 - 2) + x2*(y2*(x2 + y2 - y1) - y2^2 + x2 - y1))/(2*D1^2*D2^2)"),
        ("b^2_122", "(x1*(2 - y1 - x1*y2 - x2*y2) - y1*(1 + y2))/(2*D1*D2^2*y2)"),
        ("b^2_212", "(y2*(x1*(x2*(1 + y2) - 1 + y2) + 2*y1))/(2*D1^2*D2^2)"),
        ("p1_1", "(1 - (x2 + y1)*y2 + x1*y1 - y1^2*y2/D1)/(2*D1^2*D2^2) + PV*(3*y1 + 5*x1*y2)/(D1*D2)"),
        ("p1_2", "(y1 - x1*(1 + y2))/(2*D1^2*D2^2) - 3*PV/(y2*D2)"),
        ("q1_1", "(x1*(-x1 + y1 + x1*(x2 + y1)*(2*y2 + 1) - x2*(y1 + y2 + 1)) - x2*(x2*y2 + y2 + 1))/(2*D1^2*D2^3) + 3*PV*x1*(1 + 2*y2)/(D1*D2)"),
        ("q1_2", "(x1*(2 - (x2 + y1)*(2*y2 + 1) + x1*D1 + y2*(1 - x2)) - y1*(1 + x2))/(2*D1^2*D2^3) - PV*(3 + 5*y2)/(D1*D2)"),
        ("p2_1", "y2/(2*D1^3*D2^2)*(1 + y2*(1 - y2*(x2 + 1) + x1*y1*y2)) + 3*QV*(y1 + 2*x1*y2)/(D1*D2)"),
        ("p2_2", "-x1*y2/(2*D1^2*D2^2) - 3*QV/D1"),
        ("q2_1", "(x1^2*(2*y2*(x2 + 1) - 1) + x2*(1 + 2*y2) - 2*x1*y1)/(2*D1^2*D2^3) + 3*QV*x1*(1 + 2*y2)/(D1*D2)"),
        ("q2_2", "(x1*(1 - 2*y2*(x2 + 1) - 2*y2 - 1) + 2*y1)/(2*D1^2*D2^3) + 2*QV*(1 + y2*(3 - x2))/(D1*D2)"),
    ],
    table=row(B=["B"], C=["C"], G=["G4"]),
)

GROUP = dict(
    f1="x1 + y1",
    f2="x2 + y2",
    domain=[],
    defs={},
    tensors=[
        *zeros(*ALL_G1, *ALL_G2, "a_1", "a_2", "p_11", "p_12", "p_21", "p_22",
               "q_11", "q_12", "q_21", "q_22", "p", "q", *ALL_B1, *ALL_B2),
    ],
    expected=("D", "D1", "D11", "D12", "ISOCLINICLY_GEODESIC"),
)

# The two polynomial-family rows are run on fixed coefficient instances.
# c[i][j][k] stores c^{i+1}_{j+1 k+1}.
EXAMPLE8_C = (((1, 1), (0, 2)), ((1, 0), (2, 1)))
EXAMPLE9_C = (((0, 0), (0, 0)), ((1, -2), (3, 2)))
TABLE_8 = row(G=["G3"])
TABLE_9 = row(A=["A21"], E=["E23"], G=["G3"])
# blank cells of these rows are not asserted by the table, so only the
# filled columns are compared
COLUMNS_8 = ("G",)
COLUMNS_9 = ("A", "E", "G")
# membership of the c¹ = 0 subfamily in A22 is left open by the table
OPEN_9 = ("A22",)

# Published closed forms for the c¹ = 0 subfamily, over the constants c²ⱼₖ
# (written cJK below). D2 uses the constant term 1 of the Jacobian
# determinant; the printed constant 2 does not match the web.
EXAMPLE9_TENSORS = dict(
    tensors=[
        *zeros(*ALL_G1),
        ("Gamma^2_22", "c22/(D1*D2)"),
        ("Gamma^2_12", "(al*y1 - c12)/(D1*D2)"),
        ("Gamma^2_21", "(al*x1 - c21)/(D1*D2)"),
        ("Gamma^2_11", "-(D1*(al*x2 + c11) + (c11*y1 + c12*y2)*(al*x1 - c21))/(D1*D2)"),
        ("a_1", "-be/(D1*D2)"),
        ("a_2", "0"),
        *zeros("p_21", "p_22", "q_21", "q_22"),
        ("p_11", "(-al*D1^2*D2 + be*(c12 - al*y1))/(D1^3*D2^2)"),
        *same("c22*be/(D1^2*D2^2)", "p_12", "q_12"),
        ("q_11", "(al*D1*D2^2 + be*(c21 - al*x1))/(D1^2*D2^3)"),
        *same("c22*be/(2*D1^2*D2^2)", "p", "q"),
    ],
)


def example9_defs(c) -> dict[str, str]:
    """Abbreviations for the c¹ = 0 closed forms; c(i, j, k) gives cⁱⱼₖ."""
    k = {f"c{j}{l}": f"({c(2, j, l)})" for j in (1, 2) for l in (1, 2)}
    return {
        **k,
        "D1": "(1 + c21*y1 + c22*y2)",
        "D2": "(1 + c12*x1 + c22*x2)",
        "al": "(c11*c22 - c12*c21)",
        "be": "(al*(x1 - y1) + c12 - c21)",
    }
