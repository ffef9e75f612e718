"""Regenerates the frozen fixtures and the Poseidon parameter assets.

Everything under tests/fixtures/, the data asset core/data/, and the
generated table core/src/poseidon_constants.inc come from this script.
All expected values are computed with the pure-Python reference
implementations in this directory, never with the C++ library.

Run from the repository root:  python3 tests/oracle/generate_fixtures.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import jubjub_ref as jj
import keccak_ref as kk
import poseidon_ref as ps

from sympy.ntheory.residue_ntheory import sqrt_mod

ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
FIXTURES = os.path.join(ROOT, "tests", "fixtures")
DATA = os.path.join(ROOT, "core", "data")
GENERATED = os.path.join(ROOT, "core", "src", "poseidon_constants.inc")

Q = jj.Q
L = jj.SUBGROUP_ORDER


def fe_hex(value):
    return "0x" + format(value % Q if value >= 0 else value % Q, "064x")


def wide_hex(value, width=64):
    return "0x" + format(value, f"0{width}x")


def point_hex(p):
    return [wide_hex(p[0]), wide_hex(p[1])]


def bytes_hex(b):
    return "0x" + b.hex()


def write_json(path, payload):
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")
    print("wrote", os.path.relpath(path, ROOT))


# ----------------------------------------------------------------------
# Poseidon parameters (t = 3) and known answers
# ----------------------------------------------------------------------

def emit_poseidon():
    params = ps.generate_parameters(3)

    asset = {
        "field_modulus": wide_hex(Q),
        "t": params["t"],
        "full_rounds": params["full_rounds"],
        "partial_rounds": params["partial_rounds"],
        "alpha": params["alpha"],
        "round_constants": [wide_hex(c) for c in params["round_constants"]],
        "mds": [[wide_hex(m) for m in row] for row in params["mds"]],
    }
    write_json(os.path.join(DATA, "poseidon_bn254_t3.json"), asset)

    def limbs(value):
        return ", ".join(f"0x{(value >> (64 * i)) & ((1 << 64) - 1):016x}ULL"
                         for i in range(4))

    lines = [
        "// Generated by tests/oracle/generate_fixtures.py -- do not edit.",
        "// Poseidon parameters over the BN254 scalar field:",
        "// t = 3, alpha = 5, R_F = 8, R_P = 57, Grain-LFSR derivation.",
        "// Values are canonical (non-Montgomery) little-endian limbs and",
        "// mirror core/data/poseidon_bn254_t3.json.",
        "",
        f"static constexpr std::size_t kPoseidonWidth = {params['t']};",
        f"static constexpr std::size_t kPoseidonFullRounds = {params['full_rounds']};",
        f"static constexpr std::size_t kPoseidonPartialRounds = {params['partial_rounds']};",
        "",
        f"static constexpr std::uint64_t kPoseidonRoundConstants"
        f"[{len(params['round_constants'])}][4] = {{",
    ]
    for c in params["round_constants"]:
        lines.append(f"    {{{limbs(c)}}},")
    lines.append("};")
    lines.append("")
    lines.append("static constexpr std::uint64_t kPoseidonMds[3][3][4] = {")
    for row in params["mds"]:
        lines.append("    {")
        for m in row:
            lines.append(f"        {{{limbs(m)}}},")
        lines.append("    },")
    lines.append("};")
    with open(GENERATED, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print("wrote", os.path.relpath(GENERATED, ROOT))

    pairs = [
        (0, 0),
        (1, 2),
        (0, 1),
        (Q - 1, Q - 1),
        ((1 << 96) - 1, 12345),
        (0xDEADBEEF, 0xC0FFEE),
        (31415926535897932384626433, 27182818284590452353602874),
    ]
    vectors = [{"a": wide_hex(a), "b": wide_hex(b),
                "digest": wide_hex(ps.hash_elements([a, b], params))}
               for a, b in pairs]

    perm_in = [3, 1, 2]
    perm_out = ps.permutation(perm_in, params)
    kat = {
        "hash2": vectors,
        "permutation": {"input": [wide_hex(v) for v in perm_in],
                        "output": [wide_hex(v) for v in perm_out]},
    }
    write_json(os.path.join(FIXTURES, "poseidon_kat.json"), kat)
    return params


# ----------------------------------------------------------------------
# Keccak-256 known answers
# ----------------------------------------------------------------------

def emit_keccak():
    inputs = [
        b"",
        b"abc",
        b"\xa3" * 200,
        bytes(range(135)),   # one byte below the rate boundary
        bytes(range(136)),   # exactly one rate block
        bytes(range(137)),   # one byte above
        b"KDF(address cWETHAddress)",
        bytes.fromhex("00" * 64),
    ]
    vectors = [{"input": bytes_hex(i), "digest": bytes_hex(kk.keccak256(i))}
               for i in inputs]
    write_json(os.path.join(FIXTURES, "keccak_kat.json"), {"vectors": vectors})


# ----------------------------------------------------------------------
# Curve vectors: published EIP-2494 values plus oracle-derived cases
# ----------------------------------------------------------------------

def derive_second_generator():
    """Hash-to-curve for the independent commitment base: map
    keccak256("cWETH:H" || counter_be64) to a y candidate, solve the curve
    equation for x, take the smaller root, clear the cofactor, accept the
    first non-identity point of the prime-order subgroup."""
    counter = 0
    while True:
        digest = kk.keccak256(b"cWETH:H" + counter.to_bytes(8, "big"))
        y = int.from_bytes(digest, "big") % Q
        denom = (jj.A - jj.D * y * y) % Q
        if denom != 0:
            x2 = (1 - y * y) * pow(denom, Q - 2, Q) % Q
            root = sqrt_mod(x2, Q, all_roots=False)
            if root is not None:
                x = min(root, Q - root)
                point = (x, y)
                assert jj.on_curve(point)
                candidate = jj.scalar_mul(8, point)
                if candidate != jj.IDENTITY and jj.in_subgroup(candidate):
                    return counter, candidate
        counter += 1


def emit_curve():
    p1 = (17777552123799933955779906779655732241715742912184938656739573121738514868268,
          2626589144620713026669568689430873010625803728049924121243784502389097019475)
    p2 = (16540640123574156134436876038791482806971768689494387082833631921987005038935,
          20819045374670962167435360035096875258406992893633759881276124905556507972311)

    torsion = jj.scalar_mul(jj.SUBGROUP_ORDER, jj.GENERATOR)

    scalars = [1, 2, 3, 0xDEADBEEF, jj.SUBGROUP_ORDER - 1]
    scalar_vectors = [{"k": hex(k), "point": point_hex(jj.BASE_POINT),
                       "result": point_hex(jj.scalar_mul(k, jj.BASE_POINT))}
                      for k in scalars]

    hcounter, h = derive_second_generator()

    payload = {
        "field_modulus": wide_hex(Q),
        "subgroup_order": wide_hex(jj.SUBGROUP_ORDER),
        "curve_order": wide_hex(jj.CURVE_ORDER),
        "cofactor": jj.COFACTOR,
        "a": hex(jj.A),
        "d": hex(jj.D),
        "generator": point_hex(jj.GENERATOR),
        "base_point": point_hex(jj.BASE_POINT),
        "addition": {"p1": point_hex(p1), "p2": point_hex(p2),
                     "sum": point_hex(jj.add(p1, p2))},
        "doubling": {"p": point_hex(p1), "double": point_hex(jj.add(p1, p1))},
        "torsion8_point": point_hex(torsion),
        "scalar_mul": scalar_vectors,
        "second_generator": point_hex(h),
        "second_generator_counter": hcounter,
    }
    write_json(os.path.join(FIXTURES, "curve_vectors.json"), payload)
    return h


# ----------------------------------------------------------------------
# KDF vectors (struct hash, key derivation, deterministic test signer)
# ----------------------------------------------------------------------

def test_signer_sign(seed32, digest32):
    h1 = kk.keccak256(seed32 + digest32)
    h2 = kk.keccak256(h1)
    h3 = kk.keccak256(h2)
    return h1 + h2 + h3[:1]


def struct_hash(address20):
    typehash = kk.keccak256(b"KDF(address cWETHAddress)")
    return kk.keccak256(typehash + b"\x00" * 12 + address20)


def emit_kdf():
    typehash = kk.keccak256(b"KDF(address cWETHAddress)")

    sample_addr = bytes.fromhex("00112233445566778899aabbccddeeff00112233")
    signer_seed = kk.keccak256(b"fixture signer")
    digest = struct_hash(sample_addr)
    signature = test_signer_sign(signer_seed, digest)
    sk = int.from_bytes(kk.keccak256(kk.keccak256(signature)), "big") % L
    pk = jj.scalar_mul(sk, jj.BASE_POINT)

    def derive(sig_bytes):
        return int.from_bytes(kk.keccak256(kk.keccak256(sig_bytes)), "big") % L

    payload = {
        "typehash": bytes_hex(typehash),
        "struct_hash_zero_address": bytes_hex(struct_hash(b"\x00" * 20)),
        "struct_hash_sample": {"address": bytes_hex(sample_addr),
                               "digest": bytes_hex(digest)},
        "derive_private_key": [
            {"signature": "0x01", "key": wide_hex(derive(b"\x01"))},
            {"signature": bytes_hex(signature), "key": wide_hex(sk)},
        ],
        "keypair": {
            "signer_seed": bytes_hex(signer_seed),
            "cweth_address": bytes_hex(sample_addr),
            "struct_hash": bytes_hex(digest),
            "signature": bytes_hex(signature),
            "sk": wide_hex(sk),
            "pk": point_hex(pk),
        },
    }
    write_json(os.path.join(FIXTURES, "kdf_vectors.json"), payload)


if __name__ == "__main__":
    kk.keccak256(b"")  # import sanity
    os.makedirs(FIXTURES, exist_ok=True)
    os.makedirs(DATA, exist_ok=True)
    emit_poseidon()
    emit_keccak()
    h = emit_curve()
    emit_kdf()
    print("second generator:", point_hex(h))
    print("all fixtures written")
