"""JSON formats for orders, elements, matrices and automorphism certificates.

All integers are written as decimal strings; coefficient lists put the
constant term first; permutations are 1-indexed image arrays.
"""

import json

from .matforms import OrderMatrix
from .numfield import UnitCertificate, make_order, make_suborder

FORMAT_VERSION = 1


class CertificateFormatError(ValueError):
    pass


def ints_to_json(values):
    return [str(int(v)) for v in values]


def ints_from_json(values):
    if not isinstance(values, list):
        raise CertificateFormatError(f"expected a list of decimal strings, got {values!r}")
    try:
        return [int(v) for v in values]
    except (TypeError, ValueError) as exc:
        raise CertificateFormatError(f"bad integer in {values!r}") from exc


def element_to_json(a):
    return ints_to_json(a.coeffs)


def element_from_json(order, data):
    try:
        return order.element(ints_from_json(data))
    except ValueError as exc:
        raise CertificateFormatError(str(exc)) from exc


def order_to_json(order):
    return {"minpoly": ints_to_json(order.minpoly)}


def order_from_json(data):
    try:
        return make_order(ints_from_json(data["minpoly"]))
    except (KeyError, TypeError) as exc:
        raise CertificateFormatError("missing order.minpoly") from exc


def matrix_to_json(M):
    return [[element_to_json(e) for e in row] for row in M.rows]


def matrix_from_json(order, data):
    if not isinstance(data, list):
        raise CertificateFormatError("matrix must be a list of rows")
    try:
        return OrderMatrix([[element_from_json(order, e) for e in row] for row in data])
    except (TypeError, ValueError) as exc:
        raise CertificateFormatError(f"bad matrix: {exc}") from exc


def perm_to_json(sigma):
    return [s + 1 for s in sigma]


def perm_from_json(data):
    try:
        return tuple(int(s) - 1 for s in data)
    except (TypeError, ValueError) as exc:
        raise CertificateFormatError(f"bad permutation {data!r}") from exc


def _check_version(data):
    if not isinstance(data, dict):
        raise CertificateFormatError("top level must be a JSON object")
    if "format_version" not in data:
        raise CertificateFormatError("format_version is required")
    if str(data["format_version"]) != str(FORMAT_VERSION):
        raise CertificateFormatError(f"unsupported format_version {data['format_version']!r}")


def matrix_file_to_dict(M):
    return {"format_version": FORMAT_VERSION, "order": order_to_json(M.order),
            "matrix": matrix_to_json(M)}


def matrix_file_from_dict(data):
    """Read a matrix file (a certificate file also qualifies)."""
    _check_version(data)
    order = order_from_json(data.get("order"))
    return matrix_from_json(order, data.get("matrix"))


def certificate_to_dict(cert):
    out = {
        "format_version": FORMAT_VERSION,
        "order": order_to_json(cert.order),
        "n": str(cert.n),
        "alpha": {
            "coeffs": element_to_json(cert.alpha.element),
            "inverse": element_to_json(cert.alpha.inverse),
            "charpoly_constant": str(cert.alpha.charpoly_constant),
        },
        "exponents": {"i": str(cert.i), "j": str(cert.j)},
        "f": element_to_json(cert.f),
        "g": element_to_json(cert.g),
        "sigma": perm_to_json(cert.sigma),
        "matrix": matrix_to_json(cert.matrix),
        "det": {"value": element_to_json(cert.det_value),
                "inverse": element_to_json(cert.det_inverse)},
        "checks": dict(cert.checks),
        "unverified_assumptions": list(cert.unverified_assumptions),
    }
    if cert.suborder is not None:
        out["suborder"] = {"basis": [ints_to_json(r) for r in cert.suborder.basis],
                           "index": str(cert.suborder.index)}
    return out


def certificate_from_dict(data):
    from .construct import AutomorphismCertificate

    _check_version(data)
    try:
        order = order_from_json(data["order"])
        n = int(data["n"])
        a = data["alpha"]
        alpha = UnitCertificate(element_from_json(order, a["coeffs"]),
                                element_from_json(order, a["inverse"]),
                                int(a["charpoly_constant"]))
        i, j = int(data["exponents"]["i"]), int(data["exponents"]["j"])
        suborder = None
        if data.get("suborder") is not None:
            suborder = make_suborder(order, [ints_from_json(r) for r in data["suborder"]["basis"]])
        sigma = perm_from_json(data["sigma"])
        matrix = matrix_from_json(order, data["matrix"])
        if matrix.n != n or len(sigma) != n:
            raise CertificateFormatError(f"matrix and sigma must have size n = {n}")
        return AutomorphismCertificate(
            order=order, n=n, alpha=alpha, i=i, j=j,
            f=element_from_json(order, data["f"]),
            g=element_from_json(order, data["g"]),
            sigma=sigma, matrix=matrix,
            det_value=element_from_json(order, data["det"]["value"]),
            det_inverse=element_from_json(order, data["det"]["inverse"]),
            checks={str(k): bool(v) for k, v in data.get("checks", {}).items()},
            unverified_assumptions=[str(s) for s in data.get("unverified_assumptions", [])],
            suborder=suborder,
        )
    except CertificateFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateFormatError(f"malformed certificate: {exc!r}") from exc


def dumps(data):
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def save(data, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(data))


def load(path):
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise CertificateFormatError(f"{path}: invalid JSON ({exc})") from exc
