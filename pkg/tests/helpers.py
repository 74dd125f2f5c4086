from lieob.builtins import REGISTRY, abelian

ACCEPTANCE_LINES: list[str] = []

BUILTIN_NAMES = list(REGISTRY)
SPLIT_NAMES = ["sl2", "so3", "aff1", "sum_center_sl2", "sum_center2_aff1", "abelian_3"]


def all_builtins():
    out = {name: ex.build() for name, ex in REGISTRY.items()}
    for n in range(1, 6):
        out[f"abelian_{n}"] = abelian(n)
    return out
