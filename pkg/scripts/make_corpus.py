#!/usr/bin/env python3
"""Regenerate the bundled FCIDUMP corpus (linear H_n chains, STO-3G).

Development-time only; needs pyscf, which the package itself never imports.
Writes src/qcadvantage/data/corpus/h{n}.fcidump for n = 2..8.
"""
import argparse
from pathlib import Path

from pyscf import gto, scf
from pyscf.tools import fcidump

OUT = Path(__file__).resolve().parents[1] / "src" / "qcadvantage" / "data" / "corpus"


def chain(n, spacing=0.74):
    atoms = [("H", (0.0, 0.0, spacing * k)) for k in range(n)]
    mol = gto.M(atom=atoms, basis="sto-3g", spin=n % 2, verbose=0)
    mf = scf.RHF(mol) if n % 2 == 0 else scf.ROHF(mol)
    mf.kernel()
    return mf


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=list(range(2, 9)))
    parser.add_argument("--tol", type=float, default=1e-10)
    args = parser.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)
    for n in args.sizes:
        mf = chain(n)
        path = OUT / f"h{n}.fcidump"
        fcidump.from_scf(mf, str(path), tol=args.tol)
        print(f"wrote {path} (E_scf={mf.e_tot:.8f})")


if __name__ == "__main__":
    main()
