"""Reference babyJubJub arithmetic on plain Python integers.

Twisted Edwards curve a*x^2 + y^2 = 1 + d*x^2*y^2 over the BN254 scalar
field, parameters per EIP-2494. Independent of the C++ implementation;
used to freeze curve fixtures and to sanity-check the published vectors
for internal consistency (generator on curve, base point = 8*generator,
subgroup order annihilates the base point, published add/double vectors).
"""

Q = 21888242871839275222246405745257275088548364400416034343698204186575808495617
A = 168700
D = 168696

# Order of the full curve group and of the prime-order subgroup (cofactor 8).
CURVE_ORDER = 21888242871839275222246405745257275088614511777268538073601725287587578984328
COFACTOR = 8
SUBGROUP_ORDER = CURVE_ORDER // COFACTOR

# Generator of the full group (order 8*l) and the base point B = 8*G
# generating the prime-order subgroup, both per EIP-2494.
GENERATOR = (
    995203441582195749578291179787384436505546430278305826713579947235728471134,
    5472060717959818805561601436314318772137091100104008585924551046643952123905,
)
BASE_POINT = (
    5299619240641551281634865583518297030282874472190772894086521144482721001553,
    16950150798460657717958625567821834550301663161624707787222815936182638968203,
)

IDENTITY = (0, 1)


def on_curve(p):
    x, y = p
    return (A * x * x + y * y) % Q == (1 + D * x * x * y * y) % Q


def add(p1, p2):
    x1, y1 = p1
    x2, y2 = p2
    k = D * x1 * x2 * y1 * y2 % Q
    x3 = (x1 * y2 + y1 * x2) * pow(1 + k, Q - 2, Q) % Q
    y3 = (y1 * y2 - A * x1 * x2) * pow(1 - k, Q - 2, Q) % Q
    return (x3, y3)


def negate(p):
    return ((Q - p[0]) % Q, p[1])


def scalar_mul(k, p):
    acc = IDENTITY
    base = p
    while k > 0:
        if k & 1:
            acc = add(acc, base)
        base = add(base, base)
        k >>= 1
    return acc


def in_subgroup(p):
    return on_curve(p) and scalar_mul(SUBGROUP_ORDER, p) == IDENTITY


def self_check():
    assert pow(Q - 1, 2, Q) != 0  # Q odd prime assumed throughout
    assert on_curve(GENERATOR), "generator not on curve"
    assert on_curve(BASE_POINT), "base point not on curve"
    assert scalar_mul(COFACTOR, GENERATOR) == BASE_POINT, "B != 8*G"
    assert scalar_mul(SUBGROUP_ORDER, BASE_POINT) == IDENTITY, "l*B != O"
    assert scalar_mul(CURVE_ORDER, GENERATOR) == IDENTITY, "n*G != O"

    # Published addition vector.
    p1 = (17777552123799933955779906779655732241715742912184938656739573121738514868268,
          2626589144620713026669568689430873010625803728049924121243784502389097019475)
    p2 = (16540640123574156134436876038791482806971768689494387082833631921987005038935,
          20819045374670962167435360035096875258406992893633759881276124905556507972311)
    expected_sum = (7916061937171219682591368294088513039687205273691143098332585753343424131937,
                    14035240266687799601661095864649209771790948434046947201833777492504781204499)
    assert on_curve(p1) and on_curve(p2)
    assert add(p1, p2) == expected_sum, "published addition vector mismatch"

    # Published doubling vector.
    expected_double = (6890855772600357754907169075114257697580319025794532037257385534741338397365,
                       4338620300185947561074059802482547481416142213883829469920100239455078257889)
    assert add(p1, p1) == expected_double, "published doubling vector mismatch"
    assert add(IDENTITY, IDENTITY) == IDENTITY

    # Completeness precondition for the affine formulas: a square, d non-square.
    assert pow(A, (Q - 1) // 2, Q) == 1, "a is not a quadratic residue"
    assert pow(D, (Q - 1) // 2, Q) == Q - 1, "d is a quadratic residue"

    # A point of cofactor torsion: l*G has order 8 and is outside the subgroup.
    torsion = scalar_mul(SUBGROUP_ORDER, GENERATOR)
    assert torsion != IDENTITY
    assert scalar_mul(8, torsion) == IDENTITY
    assert not in_subgroup(torsion)


if __name__ == "__main__":
    self_check()
    print("jubjub_ref self-check ok")
