from gftkit import ClassParams, SignForm, TruncatedSeries

SET_A = ClassParams.make(lam=1.0, mu=0.0, eta=0, k=0.0, gamma=0.0, t=0.0)
SET_B = ClassParams.make(lam=1.0, mu=0.0, eta=1, k=1.0, gamma=0.25, t=-1.0)
SET_C = ClassParams.make(lam=0.75, mu=0.25, eta=2, k=0.5, gamma=0.5, t=0.5)
REFERENCE_SETS = {"A": SET_A, "B": SET_B, "C": SET_C}


def neg(*coeffs):
    """Negative-form series from a_2, a_3, ..."""
    return TruncatedSeries(tuple(coeffs), SignForm.NEGATIVE)


def gen(*coeffs):
    return TruncatedSeries(tuple(coeffs), SignForm.GENERAL)


def random_complex_series(rng, order, scale=1.0):
    c = rng.uniform(-scale, scale, order - 1) + 1j * rng.uniform(-scale, scale, order - 1)
    return TruncatedSeries(tuple(c), SignForm.GENERAL)


def random_params(rng):
    lam = rng.uniform(0, 2)
    mu = rng.uniform(0, lam)
    return ClassParams.make(lam, mu, int(rng.integers(0, 7)), rng.uniform(0, 3),
                            rng.uniform(0, 0.95), rng.uniform(-1, 0.95))

# lines printed by the acceptance suite, echoed again in the terminal summary
ACCEPTANCE_LOG = []
