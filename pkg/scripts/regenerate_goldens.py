"""Regenerate the golden example files under docs/examples/.

Deterministic; run from the repository root after changing the file
formats or the Werner construction.
"""

from pathlib import Path

import numpy as np

from spinsep import DimVector, WernerSpec, werner_density, werner_separable_decomposition
from spinsep.io import write_decomposition_file, write_density_file

OUT = Path(__file__).resolve().parent.parent / "docs" / "examples"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)

    dims = DimVector((2, 2))
    write_density_file(OUT / "maximally_mixed_2x2.density.json", np.eye(4) / 4, dims)

    w = werner_density(WernerSpec(2, 2, 1 / 3))
    write_density_file(OUT / "werner_2qubit_third.density.json", w.matrix, w.dims)

    dec = werner_separable_decomposition(2, 2)
    write_decomposition_file(OUT / "werner_2qubit_third.decomposition.json", dec)

    print(f"wrote 3 golden files to {OUT}")


if __name__ == "__main__":
    main()
