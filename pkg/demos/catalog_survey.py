"""Survey of all (m-4)-spheres on m vertices for small m.

Every such sphere corresponds to a bracelet: the cyclic sequence of block
sizes around the polygon, up to rotation and reflection, with all parts at
least 2 when the length is 3.  Each catalog entry is verified end to end
(recognizer, exact realization, hull equality, Gale readback, pseudomanifold,
homology, Euler characteristic) before it is reported.

Run: python3 demos/catalog_survey.py
"""

from oddsphere import catalog

for m in range(4, 10):
    report = catalog(m)
    d = m - 4
    print(f"m = {m}: {len(report.classes)} sphere(s) of dimension {d}")
    for cls in report.classes:
        print(
            f"  bracelet {cls.bracelet}"
            f"  f-vector {cls.f_vector[1:]}"
            f"  facets {cls.facet_count}"
        )
        print(f"    non-faces {[set(a) for a in cls.family.members]}")
    print()

print("counts by m:", {m: len(catalog(m).classes) for m in range(4, 10)})
