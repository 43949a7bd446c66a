"""Independent reference computations used only by the tests."""

from fractions import Fraction

from mpmath import mp, mpf, log10

mp.dps = 60


def indicator_hp(n, f, ri_t, ri_o, rce_t, rce_o, v, cs):
    """Five-factor product at 60 significant digits from the exact binary inputs."""
    n, f, ri_t, ri_o, rce_t, rce_o, v, cs = (mpf(x) for x in (n, f, ri_t, ri_o, rce_t, rce_o, v, cs))
    return n * f * (1 + ri_t) / (1 + ri_o) * (1 + rce_t) / (1 + rce_o) * v / cs


def indicator_hp_decimal(n, f, ri_t, ri_o, rce_t, rce_o, v, cs):
    """Same product with the arguments read as decimal strings (as printed)."""
    return indicator_hp(*(mpf(str(x)) for x in (n, f, ri_t, ri_o, rce_t, rce_o, v, cs)))


def lg_hp(x):
    return log10(mpf(x))


def ols_exact(ts, ys):
    """Normal equations solved in exact rational arithmetic: returns (intercept, slope)."""
    ts = [Fraction(t) for t in ts]
    ys = [Fraction(y) for y in ys]
    n = len(ts)
    st, sy = sum(ts), sum(ys)
    stt = sum(t * t for t in ts)
    sty = sum(t * y for t, y in zip(ts, ys))
    slope = (n * sty - st * sy) / (n * stt - st * st)
    intercept = (sy - slope * st) / n
    return intercept, slope
