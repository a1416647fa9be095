"""Print the worked small cases: bases, Hilbert values, index sets, resolutions, d = 4 quadrics."""
import argparse
from dataclasses import dataclass

from dihedral_invariants.betti import betti_table, resolution_latex
from dihedral_invariants.hilbert import hf_closed, hilbert_series
from dihedral_invariants.invariants import graded_basis
from dihedral_invariants.syzygy import relations_latex, surface_generators, w_index_set


@dataclass
class ExampleConfig:
    d_values: tuple = (3, 4, 5)
    t_max: int = 2
    latex: bool = False


def run(cfg: ExampleConfig) -> None:
    for d in cfg.d_values:
        print(f"== d = {d}")
        for t in range(1, cfg.t_max + 1):
            basis = graded_basis(d, t)
            render = (lambda b: b.to_latex()) if cfg.latex else (lambda b: b.to_text())
            print(f"B_{2 * d * t} ({len(basis)} elements, HF = {hf_closed(d, t)}):")
            print("  " + ", ".join(render(b) for b in basis))
        print(f"HS numerator: {hilbert_series(d).hs_numerator}")
        print("W_d: " + ", ".join(f"w{w}" for w in w_index_set(d)))
        print(resolution_latex(betti_table(d)))
    print("== quadric generators for d = 4")
    rels = surface_generators(4)
    if cfg.latex:
        print(relations_latex(rels))
    else:
        for rel in rels:
            print("  " + rel.to_text())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--t-max", type=int, default=2)
    ap.add_argument("--latex", action="store_true")
    args = ap.parse_args()
    run(ExampleConfig(tuple(args.d), args.t_max, args.latex))


if __name__ == "__main__":
    main()
