def intersection_form(a: int, x: tuple[int, int], y: tuple[int, int]) -> int:
    """(x_s s + x_f f) . (y_s s + y_f f) on F_a, from s^2 = -a, s.f = 1, f^2 = 0."""
    return -a * x[0] * y[0] + x[0] * y[1] + x[1] * y[0]
