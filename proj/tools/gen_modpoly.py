#!/usr/bin/env python3
"""Generate classical modular polynomials Phi_l(X, Y) from q-expansions of j.

Phi_l(X, j(tau)) = (X - j(l tau)) * prod_{k<l} (X - j((tau + k)/l)).
Power sums of the roots are computed as q-series, converted to elementary
symmetric functions with Newton's identities, and each coefficient is then
rewritten as a polynomial in j by peeling off pole terms.

Output format: one line per nonzero monomial "i j c" (x-degree, y-degree,
decimal coefficient), plus a MANIFEST with SHA-256 digests.
"""

import argparse
import hashlib
import os
import sys


class Laurent:
    """Truncated Laurent series sum c[i] q^(val+i), known exactly below q^prec."""

    __slots__ = ("val", "c", "prec")

    def __init__(self, val, c, prec):
        self.val = val
        self.c = c
        self.prec = prec
        self._trim()

    def _trim(self):
        n = max(0, self.prec - self.val)
        del self.c[n:]
        i = 0
        while i < len(self.c) and self.c[i] == 0:
            i += 1
        if i:
            self.c = self.c[i:]
            self.val += i

    def coeff(self, e):
        i = e - self.val
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __add__(self, o):
        val = min(self.val, o.val)
        prec = min(self.prec, o.prec)
        n = max(0, prec - val)
        c = [self.coeff(val + i) + o.coeff(val + i) for i in range(n)]
        return Laurent(val, c, prec)

    def scale(self, k):
        return Laurent(self.val, [k * x for x in self.c], self.prec)

    def __sub__(self, o):
        return self + o.scale(-1)

    def __mul__(self, o):
        if not self.c or not o.c:
            return Laurent(self.val + o.val, [], min(self.prec + o.val, o.prec + self.val))
        prec = min(self.prec + o.val, o.prec + self.val)
        n = max(0, prec - self.val - o.val)
        return Laurent(self.val + o.val, poly_mul(self.c, o.c, n), prec)

    def exact_div(self, k):
        out = []
        for x in self.c:
            if x % k:
                raise ArithmeticError("inexact division in Newton identity")
            out.append(x // k)
        return Laurent(self.val, out, self.prec)


def poly_mul(a, b, n):
    """Truncated product of integer coefficient lists via Kronecker packing."""
    a = a[:n]
    b = b[:n]
    if not a or not b:
        return []
    ba = max(abs(x) for x in a).bit_length()
    bb = max(abs(x) for x in b).bit_length()
    slot = ba + bb + max(len(a), len(b)).bit_length() + 2
    # Split signed coefficients into positive and negative parts.
    def pack(v):
        pos = 0
        neg = 0
        for x in reversed(v):
            pos <<= slot
            neg <<= slot
            if x >= 0:
                pos |= x
            else:
                neg |= -x
        return pos, neg

    ap, an = pack(a)
    bp, bn = pack(b)
    pos = ap * bp + an * bn
    neg = ap * bn + an * bp
    mask = (1 << slot) - 1
    out = []
    for _ in range(min(n, len(a) + len(b) - 1)):
        out.append((pos & mask) - (neg & mask))
        pos >>= slot
        neg >>= slot
    return out


def sigma3(n):
    s = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            s += d ** 3
            e = n // d
            if e != d:
                s += e ** 3
        d += 1
    return s


def j_coefficients(count):
    """Coefficients of q*j(q) = E4^3 / prod(1-q^n)^24, `count` terms."""
    e4 = [1] + [240 * sigma3(n) for n in range(1, count)]
    e4cubed = poly_mul(poly_mul(e4, e4, count), e4, count)
    # prod(1 - q^n) by the pentagonal number theorem, then the 24th power
    euler = [0] * count
    k = 0
    while True:
        hit = False
        for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if g < count:
                euler[g] = -1 if k % 2 else 1
                hit = True
        if not hit:
            break
        k += 1
    e8 = poly_mul(euler, euler, count)
    e8 = poly_mul(e8, e8, count)
    e8 = poly_mul(e8, e8, count)
    eta24 = poly_mul(poly_mul(e8, e8, count), e8, count)
    inv = series_inverse(eta24, count)
    return poly_mul(e4cubed, inv, count)


def series_inverse(a, n):
    out = [0] * n
    out[0] = 1
    for i in range(1, n):
        s = 0
        for k in range(1, min(i, len(a) - 1) + 1):
            s += a[k] * out[i - k]
        out[i] = -s
    return out


def modular_polynomial(l):
    target = l * (l + 1) + 2          # q-precision needed after Newton steps
    w_prec = l * (target + l + 2)     # w = q^(1/l) precision for the small roots
    jc = j_coefficients(w_prec + 1)   # jc[i] = coeff of q^(i-1) in j

    J_w = Laurent(-1, list(jc), w_prec)                       # j(w)
    # j(l tau) = sum jc[i] q^(l(i-1)), precise below q^(l * len)
    big_c = []
    for i, x in enumerate(jc):
        if i:
            big_c.extend([0] * (l - 1))
        big_c.append(x)
    big = Laurent(-l, big_c, min(-l + len(big_c), target))

    power_sums = [None]
    Jm = Laurent(0, [1], w_prec + 10)
    Bm = Laurent(0, [1], target + l * (l + 2))
    for m in range(1, l + 2):
        Jm = Jm * J_w
        Bm = Bm * big
        # sum over k of j((tau+k)/l)^m keeps exponents divisible by l, times l
        lo = -((-Jm.val) // l)
        hi = -((-Jm.prec) // l)
        vals = [l * Jm.coeff(l * e) for e in range(lo, hi)]
        small = Laurent(lo, vals, hi)
        power_sums.append(small + Bm)

    e = [Laurent(0, [1], 10 ** 9)]
    for m in range(1, l + 2):
        acc = Laurent(0, [], 10 ** 9)
        for i in range(1, m + 1):
            term = e[m - i] * power_sums[i]
            acc = acc + term if i % 2 == 1 else acc - term
        e.append(acc.exact_div(m))

    # powers of j as Laurent series for pole peeling
    jq = Laurent(-1, list(jc), w_prec)
    jpows = [Laurent(0, [1], 10 ** 9)]
    for _ in range(l + 1):
        jpows.append(jpows[-1] * jq)

    coeffs = {}
    for m in range(0, l + 2):
        series = e[m]
        if series.prec <= 0:
            raise RuntimeError(f"insufficient precision for l={l}, m={m}")
        poly = {}
        while series.c and series.val < 0:
            d = -series.val
            c = series.c[0]
            poly[d] = c
            series = series - jpows[d].scale(c)
        const = series.coeff(0)
        for ex in range(1, series.val + len(series.c)):
            if series.coeff(ex) != 0:
                raise RuntimeError(f"residual positive terms for l={l}, m={m}")
        if const:
            poly[0] = const
        sign = -1 if m % 2 else 1
        for d, c in poly.items():
            coeffs[(l + 1 - m, d)] = coeffs.get((l + 1 - m, d), 0) + sign * c
    return {k: v for k, v in coeffs.items() if v != 0}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data", "modpoly"))
    ap.add_argument("primes", nargs="*", type=int, default=[2, 3, 5, 7, 11, 13])
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    manifest = []
    for l in args.primes:
        coeffs = modular_polynomial(l)
        for (i, j), c in coeffs.items():
            if coeffs.get((j, i)) != c:
                raise RuntimeError(f"Phi_{l} not symmetric at ({i},{j})")
        lines = [f"{i} {j} {c}\n" for (i, j), c in sorted(coeffs.items())]
        name = f"phi_{l}.txt"
        body = "".join(lines).encode()
        with open(os.path.join(args.out, name), "wb") as fh:
            fh.write(body)
        manifest.append(f"{hashlib.sha256(body).hexdigest()}  {name}\n")
        print(f"l={l}: {len(lines)} monomials", file=sys.stderr)
    with open(os.path.join(args.out, "MANIFEST"), "w") as fh:
        fh.write("".join(manifest))


if __name__ == "__main__":
    main()
