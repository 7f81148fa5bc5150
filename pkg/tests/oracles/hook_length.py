from math import factorial


def hooks(parts: tuple[int, ...]) -> list[int]:
    conjugate = [sum(1 for p in parts if p > j) for j in range(parts[0])] if parts else []
    return [parts[i] - j + conjugate[j] - i - 1 for i in range(len(parts)) for j in range(parts[i])]


def standard_tableaux(parts: tuple[int, ...]) -> int:
    """f^lambda = |lambda|! / prod of hook lengths."""
    product = 1
    for hook in hooks(parts):
        product *= hook
    return factorial(sum(parts)) // product
