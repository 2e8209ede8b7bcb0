"""Build chi, rho and the characteristic-function quasi-metric on the real line.

Run with: python3 demos/metrization_walkthrough.py
"""

from qmb import bornology as born, core, metrization as met, zoo
from qmb.points import Real


def main():
    line = zoo.euclid_line()
    c = met.chi_from_base(line, zoo.symmetric_open().base, 1.0)
    print("chi along the line, base of open intervals (-n, n):")
    for x in (0.0, 0.5, 1.5, 2.5, 4.0, -3.25):
        print(f"  chi({x:+.2f}) = {c.chi(Real(x)):.4f}")

    rho = met.rho_from_chi(c)
    print("\nrho agrees with |x - y| for close pairs and saturates far apart:")
    for a, b in ((0.0, 0.3), (2.0, 2.9), (0.0, 5.0), (-7.0, 7.0)):
        print(f"  d({a}, {b}) = {core.dist(line, Real(a), Real(b)):.3f}"
              f"   rho = {core.dist(rho, Real(a), Real(b)):.3f}")
    w = born.is_d_bounded(rho, c.base.at(3))
    print(f"\nbase set (-3, 3) under rho: {w.kind}, centre {w.center}, radius {w.radius}")

    q = met.quasimetric_from_char(core.truncate(line, 1),
                                  met.CharFunction(lambda p: max(p.x, 0.0), "max(x,0)"))
    print("\nquasi-metric from max(x, 0) on the unit-capped line:")
    for a, b in ((0.0, 3.0), (3.0, 0.0)):
        print(f"  q({a}, {b}) = {core.dist(q, Real(a), Real(b)):.3f}")
    print("  axioms:", "pass" if core.check_axioms(q, 500, seed=1).passed else "fail")


if __name__ == "__main__":
    main()
