"""Evaluates the bound formulas by hand, with exact fractions, and writes
bound_table.json. Values are sums c + sum_k a_k log(n_k); log arguments are
left unfactored so the Rust side has to canonicalize them itself."""

import json
from fractions import Fraction as F


class L:
    def __init__(self, c=0, logs=None):
        self.c = F(c)
        self.logs = dict(logs or {})

    @staticmethod
    def log(n):
        return L(0, {n: F(1)}) if n != 1 else L()

    def __add__(self, o):
        o = o if isinstance(o, L) else L(o)
        logs = dict(self.logs)
        for k, v in o.logs.items():
            logs[k] = logs.get(k, 0) + v
        return L(self.c + o.c, logs)

    __radd__ = __add__

    def __mul__(self, k):
        return L(self.c * k, {p: v * k for p, v in self.logs.items()})

    __rmul__ = __mul__

    def text(self):
        parts = []
        if self.c:
            parts.append(self.c)
        for p in sorted(self.logs):
            if self.logs[p]:
                parts.append((self.logs[p], p))
        if not parts:
            return "0"
        out = ""
        for i, t in enumerate(parts):
            if isinstance(t, tuple):
                coef, p = t
                body = f"{abs(coef)}*log({p})"
                neg = coef < 0
            else:
                body, neg = str(abs(t)), t < 0
            if i == 0:
                out += ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out


def h_of(s):
    """Parses the few height inputs used below: 'a', 'log(n)', 'a + log(n)'."""
    total = L()
    for term in s.replace(" ", "").split("+"):
        if term.startswith("log("):
            total = total + L.log(int(term[4:-1]))
        else:
            total = total + L(F(term))
    return total


def prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


cases = []


def case(statement, inputs, expected):
    cases.append({
        "statement": statement,
        "inputs": {k: str(v) for k, v in inputs.items()},
        "expected": {k: (v.text() if isinstance(v, L) else str(v)) for k, v in expected.items()},
    })


case("theorem1", dict(n=2, d=3), {"degree": 72})

for n, d, s, h in [(2, 3, 1, "0"), (2, 2, 3, "log(4)"), (3, 2, 4, "1/2 + log(5)")]:
    H = h_of(h)
    case("theorem1", dict(n=n, d=d, s=s, h=h), {
        "degree": 4 * n * d**n,
        "height": (4 * n * (n + 1) * d**n) * (H + L.log(s) + ((n + 7) * d) * L.log(n + 1)),
    })

for n, d, s, h, delta, eta in [(2, 3, 2, "log(2)", 5, "7/2"), (1, 2, 3, "log(6)", 2, "log(3)")]:
    H, E = h_of(h), h_of(eta)
    case("theorem2", dict(n=n, d=d, s=s, h=h, delta=delta, eta=eta), {
        "degree": 2 * n * n * d * delta,
        "height": ((n + 1) ** 2 * d) * (2 * E + delta * (H + L.log(s)) + (21 * (n + 1) ** 2 * d * delta) * L.log(d + 1)),
    })

for n, d, s, h, vol in [(2, 2, 1, "0", 4), (3, 2, 3, "log(7)", 6)]:
    H = h_of(h)
    case("cor3", dict(n=n, d=d, s=s, h=h, vol=vol), {
        "degree": 2 * n * n * d * vol,
        "height": (2 * (n + 1) ** 3 * d * vol) * (H + L.log(s) + (2 ** (2 * n + 4) * d) * L.log(d + 1)),
    })

for n, h in [(3, "log(6)"), (1, "0")]:
    case("lemma-d1", dict(n=n, h=h), {"degree": 0, "height": (n + 1) * (h_of(h) + L.log(n + 1))})

for d, h in [(4, "log(3)"), (1, "2")]:
    case("lemma-n1", dict(d=d, h=h), {"degree": d - 1, "height": (2 * d) * (h_of(h) + d)})

for n, s, d in [(2, 5, 3), (3, 2, 1)]:
    case("bertini", dict(n=n, s=s, d=d), {"t": min(n + 1, s), "coefficient_height": (2 * (n + 1)) * L.log(d + 1)})

case("variables", dict(n=2, d=2), {"coefficient_height": 6 * L.log(3)})

for d, ell in [(2, 3), (1, 1)]:
    case("radical", dict(d=d, ell=ell), {"degree": 2 * (d + 1) ** (2 * ell), "degree_eliminating": (d + 1) ** ell})

case("noether", dict(deg_v=5), {"degree": 50})

for n, d, h, vol in [(2, 2, "log(3)", 4), (1, 3, "0", 3)]:
    case("bernstein", dict(n=n, d=d, h=h, vol=vol), {
        "degree": vol,
        "height": vol * (n * h_of(h) + (2 ** (2 * n + 3) * d) * L.log(n + 1)),
    })

case("toric", dict(r=2, card=5, vol=3), {"height": (2**6 * 3) * L.log(5)})
case("toric", dict(r=1, card=3, vol=2, n=1, d=2), {
    "height": (2**4 * 2) * L.log(3),
    "height_polynomial_support": (2**4 * 2 * 2) * L.log(2),
})

for n, dv, dw, degv, degw, hv, hw in [(3, 1, 2, 2, 3, "log(3)", "1"), (2, 0, 0, 1, 1, "0", "0")]:
    c = sum(F(1, 2 * (i + j + 1)) for i in range(dv + 1) for j in range(dw + 1))
    cc = L(c) + (F(n) - F(dv + dw, 2)) * L.log(2)
    case("arith-bezout", dict(n=n, dim_v=dv, dim_w=dw, deg_v=degv, h_v=hv, deg_w=degw, h_w=hw), {
        "c": cc,
        "degree": degv * degw,
        "height": degw * h_of(hv) + degv * h_of(hw) + (degv * degw) * cc,
    })

case("afin", dict(n=2, big_n=3, r=1, h_v="log(2)", h_phi="1", deg_v=3), {
    "height": h_of("log(2)") + (2 * 3) * (L(1) + 8 * L.log(6)),
})
case("proyeccion", dict(n=3, m=2, r=2, h_v="1/3", deg_v=4), {"height": L(F(1, 3)) + (3 * 3 * 4) * L.log(6)})
case("inversible", dict(n=2, r=1, h_v="log(5)", h_phi="log(2)", deg_v=2), {
    "height": L.log(5) + (2 * 2) * (L.log(2) + 5 * L.log(3)),
})

for st in ["import", "inters"]:
    for place in ["inf", "3"]:
        n, df, dv, hv, hf = 3, 2, 4, "log(2)", "log(3)"
        val = df * h_of(hv) + dv * h_of(hf)
        if place == "inf":
            val = val + (df * dv) * L.log(n + 1)
        exp = {"height": val}
        if st == "inters":
            exp["degree"] = df * dv
        case(st, dict(n=n, deg_f=df, h_v=hv, h_f=hf, deg_v=dv, place=place), exp)

for place in ["inf", "5"]:
    n, di, hi, hv, dv = 2, [2, 3], ["log(2)", "1"], "log(7)", 2
    p = prod(di)
    ratio = sum((F(1, d) * h_of(h) for d, h in zip(di, hi)), L())
    inner = h_of(hv) + dv * ratio
    if place == "inf":
        inner = inner + (len(di) * dv) * L.log(n + 1)
    case("bezloc", dict(n=n, di="2,3", hi="log(2);1", h_v=hv, deg_v=dv, place=place), {
        "degree": p * dv,
        "height": p * inner,
    })

for place in ["inf", "2"]:
    n, di, h = 3, [2, 2, 3], "log(3)"
    p = prod(di)
    ratio = sum((F(1, d) * h_of(h) for d in di), L())
    inner = ratio + ((n + len(di)) * L.log(n + 1) if place == "inf" else L())
    case("bezloc1", dict(n=n, di="2,2,3", h=h, place=place), {"degree": p, "height": p * inner})

# inters-global on affine space and on a variety V; degrees are sorted in decreasing order
n, di, h = 3, [2, 3, 1], "log(2)"
ds = sorted(di, reverse=True)
n0 = min(n, len(ds))
case("inters-global", dict(n=n, di="2,3,1", h=h), {
    "height": prod(ds[:n0]) * (sum(F(1, d) for d in ds[:n0]) * h_of(h) + (n + n0) * L.log(n + 1)),
})
n, di, h, r, hv, dv = 4, [2, 4, 3], "1", 2, "log(5)", 3
ds = sorted(di, reverse=True)
n0 = min(r, len(ds))
case("inters-global", dict(n=n, di="2,4,3", h=h, r=r, h_v=hv, deg_v=dv), {
    "height": prod(ds[:n0]) * (h_of(hv) + (sum(F(1, d) for d in ds[:n0]) * dv) * h_of(h) + (n0 * dv) * L.log(n + 1)),
})

for place in ["inf", "3"]:
    n, r, df, hf, hv, dv = 3, 1, 2, "log(3)", "log(2)", 5
    val = df * h_of(hv) + dv * h_of(hf)
    if place == "inf":
        val = val + ((r + 1) * df * dv) * L.log(n + 1)
    case("norma", dict(n=n, r=r, deg_f=df, h_f=hf, h_v=hv, deg_v=dv, place=place), {"degree": df * dv, "height": val})

for place in ["inf", "3"]:
    n, r, d, h, hv, dv = 2, 1, 3, "log(3)", "1", 2
    if place == "inf":
        val = d * h_of(hv) + dv * (h_of(h) + L.log(2)) + ((r + 1) * d * dv) * L.log(n + 1)
    else:
        val = d * h_of(hv) + dv * h_of(h)
    case("traza", dict(n=n, r=r, d=d, h=h, h_v=hv, deg_v=dv, place=place), {"degree": d * dv, "height": val})

for place in ["inf", "2"]:
    n, r, d, h, hv, dv, hg, dtg, dxg = 2, 1, 2, "log(2)", "1", 3, "log(3)", 4, 7
    wide = n * d + max((n + 1) * d, dxg)
    narrow = n * d + max(d, dxg)
    val = h_of(hg) + narrow * h_of(hv)
    if place == "inf":
        val = val + dv * ((n + 1) * h_of(h) + ((r + 6) * wide) * L.log(n + r + 1)) + (2 * dtg) * L.log(r + 1)
    else:
        val = val + ((n + 1) * dv) * h_of(h)
    case("division", dict(n=n, r=r, d=d, h=h, h_v=hv, deg_v=dv, h_g=hg, deg_t_g=dtg, deg_x_g=dxg, place=place), {
        "degree_x": n * d,
        "degree": dtg + wide * dv,
        "height": val,
    })

for place in ["inf", "7"]:
    r, h, hg, dg = 2, "log(7)", "2", 5
    val = h_of(hg) + h_of(h) + ((2 * dg) * L.log(r + 1) if place == "inf" else L())
    case("division-n0", dict(r=r, h=h, h_g=hg, deg_g=dg, place=place), {"degree": dg, "height": val})

for place in ["inf", "3"]:
    n, s, d, h, degs, hs = 2, 3, 1, "log(3)", [2, 5], ["1", "log(2)"]
    d = max(d, 2)
    short = min(n, s) - 1
    deg_short = 1 + sum(degs[:short])
    deg_all = 1 + sum(degs)
    inner = (n + 1) * h_of(h)
    if place == "inf":
        inner = inner + (2 * n * (2 * n + 5) * d) * L.log(n + 1)
    case("nullstlocal", dict(n=n, s=s, d=1, h=h, deg_vj="2,5", h_vj="1;log(2)", place=place), {
        "degree": 2 * n * d * deg_short,
        "height": (2 * n * d) * sum((h_of(x) for x in hs), L()) + deg_all * inner,
    })

for place in ["inf", "5"]:
    n, d, h = 2, 3, "log(5)"
    val = (4 * n * (n + 1) * d**n) * h_of(h)
    if place == "inf":
        val = val + (4 * n * (4 * n + 5) * d ** (n + 1)) * L.log(n + 1)
    case("extrinsecolocal", dict(n=n, d=d, h=h, place=place), {"degree": 4 * n * d**n, "height": val})

for n, di, h in [(2, [3, 2, 2], "log(5)"), (3, [2, 4], "1")]:
    ds = sorted(di, reverse=True)
    s = len(ds)
    n0, n1 = min(n, s), min(n + 1, s)
    d = ds[0]
    case("lemma-dn", dict(n=n, di=",".join(map(str, di)), h=h), {
        "delta": prod(ds[: max(n0 - 1, 0)]),
        "eta": (n * prod(ds[: max(n1 - 2, 0)])) * (h_of(h) + L.log(s) + 3 * n * (n + 1) * d),
    })

case("cota-esparsa", dict(n=2, s=3, d=2, h="log(2)", vol=4), {
    "delta": 4,
    "eta": (2 * 4) * (L.log(2) + L.log(3) + 2**8 * 2),
})

for n, di, h in [(2, [2, 3, 3], "log(2)"), (3, [2], "0")]:
    ds = sorted(di, reverse=True)
    s = len(ds)
    n0 = min(n, s)
    d = ds[0]
    p = prod(ds[: max(n0 - 1, 0)])
    case("cor-intrinsic", dict(n=n, di=",".join(map(str, di)), h=h), {
        "degree": 2 * n * n * d * p,
        "height": (2 * (n + 1) ** 3 * d * p) * (h_of(h) + L.log(s) + (3 * n * (n + 7) * d) * L.log(d + 1)),
    })

for n, d, s, h in [(1, 2, 2, "log(5)"), (2, 3, 3, "0")]:
    case("ejemplosparse", dict(n=n, d=d, s=s, h=h), {
        "vol": n * d,
        "degree": 2 * n**4 * d * d,
        "height": (2 * n * n * (n + 1) ** 3 * d * d) * (h_of(h) + L.log(s) + (n * 2 ** (2 * n + 4) * d) * L.log(n * d + 1)),
    })

for n, d, h in [(1, 2, "log(3)"), (2, 3, "log(5)")]:
    case("geometric", dict(n=n, d=d, h=h), {
        "degree": 2 * n * n * d,
        "height": (n + 1) ** 2 * (h_of(h) + (8 * n * d) * L.log(n + 1)),
    })

with open(__file__.rsplit("/", 1)[0] + "/bound_table.json", "w") as fh:
    json.dump(cases, fh, indent=1, sort_keys=True)
    fh.write("\n")
print(len(cases), "cases,", len({c["statement"] for c in cases}), "statements")
