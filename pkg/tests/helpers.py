import random

from extsplash.plane import all_points, incidence, is_quadrangle, subplane_from_quadrangle


def random_exterior_pair(ctx, seed):
    """A seeded random subplane together with a random line exterior to it."""
    rng = random.Random(seed)
    pts = all_points(ctx)
    while True:
        quad = rng.sample(pts, 4)
        if is_quadrangle(ctx, quad):
            break
    pi = subplane_from_quadrangle(ctx, *quad)
    while True:
        L = rng.choice(pts)
        if not any(incidence(ctx, P, L) for P in pi.points):
            return pi, L


ACCEPTANCE_LINES = []


def record(capsys, number, ok, detail):
    """Print one acceptance line immediately and keep it for the final summary."""
    line = f"CRITERION {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    with capsys.disabled():
        print("\n" + line)
