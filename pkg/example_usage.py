#!/usr/bin/env python3
"""
hopfcyclic library usage examples

Builds complexes from shipped and example presentations, dualizes them and
runs the pairing checks, printing a line per step.
"""

from pathlib import Path

from hopfcyclic import (
    EngineConfig,
    HopfCyclicError,
    build_family,
    builtin,
    check_laws,
    connes_hat,
    load_presentation,
    make_coefficient,
    make_datum,
    pairing_check,
    tau_compare,
)
from hopfcyclic.paracyc import is_strictly_cyclic, t_order_probe
from hopfcyclic.serializer import save_complex


def example_build():
    """A1 over Sweedler's algebra: para-cocyclic but not cocyclic"""
    print("=== A1 over H4 ===")
    H = builtin("h4")
    datum = make_datum(H, "module-algebra-left", "adjoint")
    coefficient = make_coefficient(H, "comodule-left", "regular")
    complex_ = build_family("A1", H, datum, coefficient, top=2)

    bad = [r for r in check_laws(complex_) if not r.passed]
    print(f"dims: {complex_.dims}")
    print(f"failed relations: {len(bad)}")
    print(f"orders of t: {t_order_probe(complex_)}")
    print(f"strictly cocyclic: {is_strictly_cyclic(complex_)}")

    output_file = Path("a1_h4.json")
    save_complex(complex_, output_file)
    print(f"✓ dumped to {output_file}")


def example_file():
    """Declared data from a YAML presentation"""
    print("=== kC3 from example/kc3.yaml ===")
    try:
        loaded = load_presentation(Path("example/kc3.yaml"))
        datum = loaded.datum("adjoint", "module-algebra-left")
        coefficient = loaded.coefficient("regular", "comodule-right")
        complex_ = build_family("B5", loaded.presentation, datum, coefficient, top=2)
        dual = connes_hat(complex_)
        bad = [r for r in check_laws(dual) if not r.passed]
        print(f"✓ B5 dual is {dual.variance}, {len(bad)} failed relations")
    except HopfCyclicError as e:
        print(f"❌ {e}")


def example_duality():
    """tau comparison and a pairing check, with a tighter dimension guard"""
    print("=== Duality over kC2 ===")
    config = EngineConfig(dimension_guard=2000, power_window=1)
    H = builtin("kc2")
    datum = make_datum(H, "module-algebra-left", "adjoint")

    report = tau_compare("A1", H, datum, make_coefficient(H, "comodule-left", "regular"), 2, config)
    print(f"tau: {report.summary.passed}/{report.summary.total} passed")

    report = pairing_check("ex1", H, datum, make_coefficient(H, "comodule-left", "regular"), 2, config)
    print(f"ex1: {'ok' if report.ok else 'failed'}, power {report.metadata.get('power')}")
    print(report.to_yaml())


def main():
    example_build()
    example_file()
    example_duality()


if __name__ == "__main__":
    main()
